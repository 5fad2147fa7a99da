#include "genprob/inference.hpp"

namespace genprob {

namespace {

void require_overlap(const Event& a, const Event& b) {
  if ((a & b).empty()) {
    fail(Errc::empty_intersection, "inference",
         "conditioning is defined only for overlapping events");
  }
}

std::string cell_name(const Event& e) {
  std::string out = "{";
  bool first = true;
  for (const auto& l : e.member_labels()) {
    if (!first) out += ",";
    out += l;
    first = false;
  }
  return out + "}";
}

} // namespace

Conditioning conditional(const ProbabilityMeasure& p, const Event& a, const Event& b) {
  require_overlap(a, b);
  const Structure& s = p.structure();
  const Value joint = p.prob(a & b);
  const Value given = p.prob(b);

  if (s.caps().multiplicative_group) {
    if (s.is_zero(given)) {
      fail(Errc::zero_condition, "inference", "conditioning event has zero probability");
    }
    Conditioning r;
    r.kind = Conditioning::Kind::unique;
    r.value = div(s, joint, given);
    r.verified = true;
    return r;
  }

  if (s.caps().residuation) {
    Conditioning r;
    r.kind = Conditioning::Kind::residuated;
    const Value x = s.residuate(joint, given);
    r.value = x;
    r.verified = s.equal(s.mul(x, given), joint);
    if (!r.verified) r.note = "greatest candidate does not solve the conditioning equation";
    return r;
  }

  Conditioning r;
  r.kind = Conditioning::Kind::unconditionable;
  r.note = "'" + s.id() + "' has neither multiplicative inverses nor residuation";
  return r;
}

Conditioning bayes(const ProbabilityMeasure& p, const Event& a, const Event& b) {
  require_overlap(a, b);
  const Structure& s = p.structure();
  const Value pa = p.prob(a);
  const Value pb = p.prob(b);

  if (s.caps().multiplicative_group) {
    if (s.is_zero(pa)) {
      fail(Errc::zero_condition, "inference", "conditioning event has zero probability");
    }
    Conditioning r;
    r.kind = Conditioning::Kind::unique;
    if (!s.is_zero(pb)) {
      const Conditioning a_given_b = conditional(p, a, b);
      r.value = div(s, s.mul(*a_given_b.value, pb), pa);
    } else {
      // Zero-probability b: the product route is undefined but the quotient
      // P(a and b) / P(a) still is, and the symmetry identity forces it.
      r.value = div(s, p.prob(a & b), pa);
    }
    r.verified = true;
    return r;
  }

  Conditioning r = conditional(p, b, a);
  if (r.kind == Conditioning::Kind::residuated) {
    const Conditioning other = conditional(p, a, b);
    const bool symmetric =
        other.value && s.equal(s.mul(*r.value, pa), s.mul(*other.value, pb));
    r.verified = r.verified && symmetric;
    if (!symmetric) r.note = "product symmetry with the reversed conditional fails";
  }
  return r;
}

Value total_probability(const ProbabilityMeasure& p, const Event& a,
                        std::span<const Event> partition) {
  const Structure& s = p.structure();
  if (partition.empty()) fail(Errc::not_a_partition, "inference", "empty partition");

  Event seen = Event::none(a.space());
  for (const Event& cell : partition) {
    if (!p.algebra().is_measurable(cell)) {
      fail(Errc::not_a_partition, "inference",
           "cell " + cell_name(cell) + " is not measurable");
    }
    if (!(seen & cell).empty()) {
      fail(Errc::not_a_partition, "inference", "cells overlap at " + cell_name(seen & cell));
    }
    seen = seen | cell;
  }
  if (seen != Event::all(a.space())) {
    fail(Errc::not_a_partition, "inference", "cells do not cover the sample space");
  }

  Value acc = s.zero();
  for (const Event& cell : partition) {
    const Event overlap = a & cell;
    // Empty overlap or a zero-probability cell: the term equals
    // P(a and cell) outright (zero), no conditional needed.
    if (overlap.empty() || s.is_zero(p.prob(cell))) {
      acc = s.add(acc, p.prob(overlap));
      continue;
    }
    const Conditioning c = conditional(p, a, cell);
    if (!c.resolvable()) {
      fail(Errc::unresolvable_term, "inference",
           "conditional on cell " + cell_name(cell) + " cannot be resolved");
    }
    acc = s.add(acc, s.mul(p.prob(cell), *c.value));
  }
  return acc;
}

Value complement_prob(const ProbabilityMeasure& p, const Event& a) {
  const Structure& s = p.structure();
  return sub(s, s.one(), p.prob(a));
}

Value union_prob(const ProbabilityMeasure& p, const Event& a, const Event& b) {
  const Structure& s = p.structure();
  return sub(s, s.add(p.prob(a), p.prob(b)), p.prob(a & b));
}

} // namespace genprob
