#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "genprob/instances.hpp"
#include "genprob/measure.hpp"

#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace genprob;
using genprob::testing::random_measurable_event;
using genprob::testing::random_probability_space;

namespace {

Value rat(long long n, long long d = 1) { return Value(Rational(n, d)); }

struct DieModel {
  SpacePtr space;
  AlgebraPtr algebra;
  ProbabilityMeasure p;
};

DieModel uniform_die() {
  auto s = classical_rational();
  auto space = make_space({"1", "2", "3", "4", "5", "6"});
  auto algebra = power_set_algebra(space);
  std::vector<Value> weights(6, rat(1, 6));
  auto p = ProbabilityMeasure::make(s, algebra, weights);
  return {space, algebra, std::move(p)};
}

Event by_labels(const SpacePtr& space, std::vector<std::string> names) {
  return Event::of_labels(space, names);
}

} // namespace

TEST_CASE("probability measure validation") {
  auto s = classical_rational();
  auto space = make_space({"a", "b"});
  auto algebra = power_set_algebra(space);

  CHECK_NOTHROW(ProbabilityMeasure::make(s, algebra, {rat(1, 2), rat(1, 2)}));

  // 1/2 + 1/3 = 5/6, not normalized (oracle cross-check)
  CHECK((oracle::Frac(1, 2) + oracle::Frac(1, 3)).str() == "5/6");
  CHECK_THROWS_AS(ProbabilityMeasure::make(s, algebra, {rat(1, 2), rat(1, 3)}), Error);
  try {
    ProbabilityMeasure::make(s, algebra, {rat(1, 2), rat(1, 3)});
  } catch (const Error& e) {
    CHECK(e.code() == Errc::not_normalized);
  }

  CHECK_THROWS_AS(ProbabilityMeasure::make(s, algebra, {rat(3, 2), rat(-1, 2)}), Error);
  try {
    ProbabilityMeasure::make(s, algebra, {rat(3, 2), rat(-1, 2)});
  } catch (const Error& e) {
    CHECK(e.code() == Errc::negative_weight);
  }

  auto poss = possibility();
  auto space3 = make_space({"a", "b", "c"});
  auto alg3 = power_set_algebra(space3);
  CHECK_NOTHROW(ProbabilityMeasure::make(poss, alg3, {Value(1.0), Value(0.7), Value(0.3)}));
  CHECK_THROWS_AS(ProbabilityMeasure::make(poss, alg3, {Value(0.9), Value(0.7), Value(0.3)}),
                  Error);
}

TEST_CASE("plain measures skip normalization") {
  auto s = classical_rational();
  auto space = make_space({"a", "b"});
  auto algebra = power_set_algebra(space);

  auto zero = Measure::make(s, algebra, {rat(0), rat(0)});
  CHECK(s->is_zero(zero.measure_of(Event::all(space))));

  auto m = Measure::make(s, algebra, {rat(2), rat(3)});
  CHECK(s->equal(m.measure_of(Event::all(space)), rat(5)));

  CHECK_THROWS_AS(Measure::make(s, algebra, {rat(-1), rat(0)}), Error);
}

TEST_CASE("event probabilities on the uniform die") {
  auto die = uniform_die();
  CHECK(die.p.structure().is_zero(die.p.prob(Event::none(die.space))));
  // 1/6+1/6+1/6 = 1/2 by the oracle
  const auto half = oracle::Frac(1, 6) + oracle::Frac(1, 6) + oracle::Frac(1, 6);
  CHECK(half.str() == "1/2");
  CHECK(die.p.structure().equal(die.p.prob(by_labels(die.space, {"2", "4", "6"})), rat(1, 2)));
}

TEST_CASE("possibility event weight is the max of its atoms") {
  auto s = possibility();
  auto space = make_space({"a", "b", "c"});
  auto p = ProbabilityMeasure::make(s, power_set_algebra(space),
                                    {Value(1.0), Value(0.7), Value(0.3)});
  CHECK(s->equal(p.prob(by_labels(space, {"b", "c"})), Value(0.7)));
  CHECK(oracle::max_masked({1.0, 0.7, 0.3}, 0b110) == doctest::Approx(0.7));
}

TEST_CASE("non-measurable events are rejected") {
  auto s = classical_rational();
  auto space = make_space({"a", "b", "c"});
  const Event gens[] = {by_labels(space, {"a", "b"})};
  auto algebra = generate_algebra(space, gens);
  auto p = ProbabilityMeasure::make(s, algebra, {rat(2, 3), rat(1, 3)});
  CHECK_THROWS_AS(p.prob(by_labels(space, {"a"})), Error);
  try {
    p.prob(by_labels(space, {"a"}));
  } catch (const Error& e) {
    CHECK(e.code() == Errc::not_measurable);
  }
}

TEST_CASE("event independence") {
  auto die = uniform_die();
  const Event even = by_labels(die.space, {"2", "4", "6"});
  const Event low = by_labels(die.space, {"1", "2"});
  CHECK(independent(die.p, even, low));  // 1/6 = 1/2 * 1/3
  CHECK(independent(die.p, Event::all(die.space), low));

  const Event odd = by_labels(die.space, {"1", "3", "5"});
  CHECK_THROWS_AS(independent(die.p, even, odd), Error);
  try {
    independent(die.p, even, odd);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::empty_intersection);
  }

  auto s = possibility();
  auto space = make_space({"a", "b", "c"});
  auto p = ProbabilityMeasure::make(s, power_set_algebra(space),
                                    {Value(1.0), Value(0.7), Value(0.3)});
  // min(Pi(ab), Pi(bc)) = 0.7 = Pi({b})
  CHECK(independent(p, by_labels(space, {"a", "b"}), by_labels(space, {"b", "c"})));
}

TEST_CASE("measure identities hold on random spaces, all instances") {
  std::mt19937_64 rng(2026);
  for (const auto& id : registered_instances()) {
    auto s = make_structure(id);
    for (int trial = 0; trial < 60; ++trial) {
      auto ts = random_probability_space(s, rng);
      const Structure& st = ts.measure.structure();
      const Event a = random_measurable_event(*ts.algebra, rng);
      const Event b = random_measurable_event(*ts.algebra, rng);
      const Event nested_low = a & b;
      const Event nested_high = a;

      // additivity on disjoint pairs
      const Event disjoint_b = b - a;
      CHECK(st.equal(ts.measure.prob(a | disjoint_b),
                     st.add(ts.measure.prob(a), ts.measure.prob(disjoint_b))));

      // monotonicity on nested pairs
      CHECK(st.geq(ts.measure.prob(nested_high), ts.measure.prob(nested_low)));

      // bounds
      CHECK(st.geq(ts.measure.prob(a), st.zero()));
      CHECK(st.geq(st.one(), ts.measure.prob(a)));

      // complement, first form
      CHECK(st.equal(st.add(ts.measure.prob(a), ts.measure.prob(~a)), st.one()));

      // inclusion-exclusion, first form
      CHECK(st.equal(st.add(ts.measure.prob(a | b), ts.measure.prob(a & b)),
                     st.add(ts.measure.prob(a), ts.measure.prob(b))));

      // set difference, first form
      CHECK(st.equal(st.add(ts.measure.prob(nested_high - nested_low),
                            ts.measure.prob(nested_low)),
                     ts.measure.prob(nested_high)));

      if (st.caps().additive_group) {
        // subtracted forms
        CHECK(st.equal(ts.measure.prob(~a), sub(st, st.one(), ts.measure.prob(a))));
        CHECK(st.equal(ts.measure.prob(nested_high - nested_low),
                       sub(st, ts.measure.prob(nested_high), ts.measure.prob(nested_low))));
        CHECK(st.equal(ts.measure.prob(a | b),
                       sub(st, st.add(ts.measure.prob(a), ts.measure.prob(b)),
                           ts.measure.prob(a & b))));
      }
    }
  }
}

TEST_CASE("classical probabilities equal the rational oracle on random spaces") {
  std::mt19937_64 rng(77);
  auto s = classical_rational();
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + rng() % 8;
    std::vector<int> counts(n);
    int total = 0;
    for (auto& k : counts) {
      k = static_cast<int>(rng() % 10);
      total += k;
    }
    if (total == 0) {
      counts[0] = 1;
      total = 1;
    }
    auto space = make_space(genprob::testing::make_labels(n));
    auto algebra = power_set_algebra(space);
    std::vector<Value> weights;
    std::vector<oracle::Frac> frac_weights;
    for (int k : counts) {
      weights.push_back(rat(k, total));
      frac_weights.emplace_back(k, total);
    }
    auto p = ProbabilityMeasure::make(s, algebra, weights);
    for (int e = 0; e < 10; ++e) {
      const std::uint64_t mask = rng() & ((std::uint64_t{1} << n) - 1);
      std::vector<std::size_t> idx;
      for (std::size_t i = 0; i < n; ++i) {
        if (mask >> i & 1) idx.push_back(i);
      }
      const Event ev = Event::of_indices(space, idx);
      const oracle::Frac expected = oracle::sum_masked(frac_weights, mask);
      CHECK(s->format(p.prob(ev)) == expected.str());
    }
  }
}
