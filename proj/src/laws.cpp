#include "genprob/laws.hpp"

#include <array>
#include <optional>

namespace genprob {

namespace {

struct LawInfo {
  Law law;
  std::string_view id;
  std::string_view description;
};

constexpr std::array<LawInfo, 22> kLaws{{
    {Law::MMP1, "MMP1", "commutativity of addition"},
    {Law::MMP2, "MMP2", "associativity of addition"},
    {Law::MMP3, "MMP3", "additive identity"},
    {Law::MMP4, "MMP4", "monotonicity of addition"},
    {Law::NMP1, "NMP1", "commutativity of multiplication"},
    {Law::NMP2, "NMP2", "associativity of multiplication"},
    {Law::NMP3, "NMP3", "multiplicative identity"},
    {Law::NMP4, "NMP4", "annihilation iff a zero factor"},
    {Law::NMP5, "NMP5", "monotonicity of multiplication"},
    {Law::MGP1, "MGP1", "commutativity of addition"},
    {Law::MGP2, "MGP2", "associativity of addition"},
    {Law::MGP3, "MGP3", "additive identity"},
    {Law::MGP4, "MGP4", "additive inverse"},
    {Law::MGP5, "MGP5", "monotonicity of addition"},
    {Law::NGP1, "NGP1", "commutativity of multiplication"},
    {Law::NGP2, "NGP2", "associativity of multiplication"},
    {Law::NGP3, "NGP3", "multiplicative identity"},
    {Law::NGP4, "NGP4", "zero annihilates"},
    {Law::NGP5, "NGP5", "multiplicative inverse off zero"},
    {Law::NGP6, "NGP6", "monotonicity of multiplication"},
    {Law::DIST1, "DIST1", "multiplication distributes over addition"},
    {Law::RES1, "RES1", "residuation yields the greatest solution"},
}};

const LawInfo& info(Law law) {
  for (const auto& e : kLaws) {
    if (e.law == law) return e;
  }
  fail(Errc::internal, "algebra", "unknown law id");
}

class Draw {
public:
  Draw(const Structure& s, std::uint64_t seed) : s_(s), rng_(seed) {}

  // Mixes the identities into the stream so edge tuples are always exercised.
  Value next() {
    const auto k = count_++;
    if (k % 16 == 0) return s_.zero();
    if (k % 16 == 1) return s_.one();
    return s_.sample(rng_);
  }

private:
  const Structure& s_;
  std::mt19937_64 rng_;
  std::uint64_t count_ = 0;
};

std::optional<Value> try_neg(const Structure& s, const Value& a) {
  try {
    return s.neg(a);
  } catch (const Error&) {
    return std::nullopt;
  }
}

std::optional<Value> try_recip(const Structure& s, const Value& a) {
  try {
    return s.recip(a);
  } catch (const Error&) {
    return std::nullopt;
  }
}

std::optional<Value> try_residuate(const Structure& s, const Value& a, const Value& b) {
  try {
    return s.residuate(a, b);
  } catch (const Error&) {
    return std::nullopt;
  }
}

// Universal axioms evaluated on one tuple; true = tuple satisfies the axiom.
bool tuple_holds(const Structure& s, Law law, const Value& a, const Value& b, const Value& c) {
  switch (law) {
    case Law::MMP1:
    case Law::MGP1:
      return s.equal(s.add(a, b), s.add(b, a));
    case Law::MMP2:
    case Law::MGP2:
      return s.equal(s.add(a, s.add(b, c)), s.add(s.add(a, b), c));
    case Law::MMP3:
    case Law::MGP3:
      return s.equal(s.add(a, s.zero()), a) && s.equal(s.add(s.zero(), a), a);
    case Law::MMP4:
    case Law::MGP5:
      return !s.geq(b, c) || s.geq(s.add(a, b), s.add(a, c));
    case Law::NMP1:
    case Law::NGP1:
      return s.equal(s.mul(a, b), s.mul(b, a));
    case Law::NMP2:
    case Law::NGP2:
      return s.equal(s.mul(a, s.mul(b, c)), s.mul(s.mul(a, b), c));
    case Law::NMP3:
    case Law::NGP3:
      return s.equal(s.mul(a, s.one()), a) && s.equal(s.mul(s.one(), a), a);
    case Law::NMP4: {
      const bool zero_factor = s.is_zero(a) || s.is_zero(b);
      return s.is_zero(s.mul(a, b)) == zero_factor;
    }
    case Law::NMP5:
    case Law::NGP6:
      return !s.geq(b, c) || s.geq(s.mul(a, b), s.mul(a, c));
    case Law::NGP4:
      return s.is_zero(s.mul(a, s.zero())) && s.is_zero(s.mul(s.zero(), a));
    case Law::DIST1:
      return s.equal(s.mul(a, s.add(b, c)), s.add(s.mul(a, b), s.mul(a, c)));
    default:
      fail(Errc::internal, "algebra", "not a universal law");
  }
}

int arity(Law law) {
  switch (law) {
    case Law::MMP3:
    case Law::NMP3:
    case Law::MGP3:
    case Law::NGP3:
    case Law::NGP4:
      return 1;
    case Law::MMP1:
    case Law::NMP1:
    case Law::NMP4:
    case Law::MGP1:
    case Law::NGP1:
      return 2;
    default:
      return 3;
  }
}

std::vector<Value> inverse_candidates(const Structure& s, std::uint64_t seed, int count) {
  std::vector<Value> pool;
  pool.push_back(s.zero());
  pool.push_back(s.one());
  std::mt19937_64 rng(seed);
  for (int i = 0; i < count; ++i) pool.push_back(s.sample(rng));
  return pool;
}

bool has_additive_inverse(const Structure& s, const Value& a, std::span<const Value> pool) {
  if (auto n = try_neg(s, a); n && s.is_zero(s.add(a, *n)) && s.is_zero(s.add(*n, a))) {
    return true;
  }
  for (const Value& b : pool) {
    if (s.is_zero(s.add(a, b))) return true;
  }
  return false;
}

bool has_multiplicative_inverse(const Structure& s, const Value& a, std::span<const Value> pool) {
  if (auto r = try_recip(s, a); r && s.equal(s.mul(a, *r), s.one()) && s.equal(s.mul(*r, a), s.one())) {
    return true;
  }
  for (const Value& b : pool) {
    if (s.equal(s.mul(a, b), s.one())) return true;
  }
  return false;
}

constexpr std::uint64_t kConfirmSeed = 0x67656e70726f6221ull;

LawResult run_law(const Structure& s, Law law, int samples, std::uint64_t seed,
                  std::uint64_t stream) {
  LawResult out;
  out.law = law;
  Draw draw(s, seed ^ (stream * 0x9e3779b97f4a7c15ull + 1));

  if (law == Law::MGP4 || law == Law::NGP5) {
    const auto pool = inverse_candidates(s, seed ^ 0xabcdef, 64);
    for (int i = 0; i < samples; ++i) {
      const Value a = draw.next();
      if (s.is_zero(a)) continue;  // NGP5 exempts zero; zero inverts itself additively
      const bool ok = law == Law::MGP4 ? has_additive_inverse(s, a, pool)
                                       : has_multiplicative_inverse(s, a, pool);
      if (!ok) {
        out.pass = false;
        out.counterexample = {a};
        out.detail = "no inverse found for " + s.format(a);
        return out;
      }
    }
    return out;
  }

  if (law == Law::RES1) {
    for (int i = 0; i < samples; ++i) {
      const Value a = draw.next();
      const Value b = draw.next();
      const auto x = try_residuate(s, a, b);
      if (!x) continue;  // outside the residuation domain of this instance
      if (!s.leq(s.mul(*x, b), a)) {
        out.pass = false;
        out.counterexample = {a, b, *x, *x};
        out.detail = "residuate(" + s.format(a) + ", " + s.format(b) + ") = " + s.format(*x) +
                     " is not a solution";
        return out;
      }
      for (int k = 0; k < 4; ++k) {
        const Value c = draw.next();
        if (s.leq(s.mul(c, b), a) && s.gt(c, *x)) {
          out.pass = false;
          out.counterexample = {a, b, *x, c};
          out.detail = "candidate " + s.format(c) + " beats residuate(" + s.format(a) + ", " +
                       s.format(b) + ") = " + s.format(*x);
          return out;
        }
      }
    }
    return out;
  }

  const int n = arity(law);
  for (int i = 0; i < samples; ++i) {
    const Value a = draw.next();
    const Value b = n >= 2 ? draw.next() : a;
    const Value c = n >= 3 ? draw.next() : b;
    if (!tuple_holds(s, law, a, b, c)) {
      out.pass = false;
      out.counterexample = {a, b, c};
      out.counterexample.resize(static_cast<std::size_t>(n));
      out.detail = std::string(law_description(law)) + " fails on (" + s.format(a);
      if (n >= 2) out.detail += ", " + s.format(b);
      if (n >= 3) out.detail += ", " + s.format(c);
      out.detail += ")";
      return out;
    }
  }
  return out;
}

} // namespace

std::string_view law_id(Law law) { return info(law).id; }
std::string_view law_description(Law law) { return info(law).description; }

bool LawReport::all_pass() const {
  for (const auto& r : results) {
    if (!r.pass) return false;
  }
  return true;
}

const LawResult* LawReport::find(Law law) const {
  for (const auto& r : results) {
    if (r.law == law) return &r;
  }
  return nullptr;
}

LawReport check_laws(const Structure& s, const Caps& claimed, int samples, std::uint64_t seed) {
  LawReport report;
  report.structure_id = s.id();
  report.samples = samples;
  report.seed = seed;

  std::vector<Law> selected{Law::MMP1, Law::MMP2, Law::MMP3, Law::MMP4,
                            Law::NMP1, Law::NMP2, Law::NMP3, Law::NMP4, Law::NMP5};
  if (claimed.additive_group) {
    selected.insert(selected.end(), {Law::MGP1, Law::MGP2, Law::MGP3, Law::MGP4, Law::MGP5});
  }
  if (claimed.multiplicative_group) {
    selected.insert(selected.end(),
                    {Law::NGP1, Law::NGP2, Law::NGP3, Law::NGP4, Law::NGP5, Law::NGP6});
  }
  if (claimed.distributive) selected.push_back(Law::DIST1);
  if (claimed.residuation) selected.push_back(Law::RES1);

  std::uint64_t stream = 0;
  for (Law law : selected) {
    report.results.push_back(run_law(s, law, samples, seed, stream++));
  }
  return report;
}

bool law_violated_on(const Structure& s, Law law, std::span<const Value> witness) {
  if (witness.empty()) return false;
  if (law == Law::MGP4 || law == Law::NGP5) {
    const auto pool = inverse_candidates(s, kConfirmSeed, 256);
    return law == Law::MGP4 ? !has_additive_inverse(s, witness[0], pool)
                            : !has_multiplicative_inverse(s, witness[0], pool);
  }
  if (law == Law::RES1) {
    if (witness.size() != 4) return false;
    const Value &a = witness[0], &b = witness[1], &x = witness[2], &c = witness[3];
    if (!s.leq(s.mul(x, b), a)) return true;
    return s.leq(s.mul(c, b), a) && s.gt(c, x);
  }
  const Value& a = witness[0];
  const Value& b = witness.size() >= 2 ? witness[1] : a;
  const Value& c = witness.size() >= 3 ? witness[2] : b;
  return !tuple_holds(s, law, a, b, c);
}

} // namespace genprob
