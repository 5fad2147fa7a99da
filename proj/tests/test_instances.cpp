#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "genprob/inference.hpp"
#include "genprob/instances.hpp"

#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace genprob;
using genprob::testing::random_measurable_event;
using genprob::testing::random_probability_space;

TEST_CASE("registry lookups") {
  for (const auto& id : registered_instances()) {
    auto s = make_structure(id);
    CHECK(s->id() == id);
    CHECK_FALSE(s->equal(s->zero(), s->one()));
  }
  CHECK_THROWS_AS(make_structure("no-such-structure"), Error);
  try {
    make_structure("no-such-structure");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::parse_error);
  }
}

TEST_CASE("classical identities are the usual 0 and 1") {
  auto s = classical_rational();
  CHECK(s->format(s->zero()) == "0");
  CHECK(s->format(s->one()) == "1");
  CHECK(s->equal(s->add(Value(Rational(1, 2)), Value(Rational(1, 2))), s->one()));
}

TEST_CASE("classical measures reproduce arithmetic summation") {
  std::mt19937_64 rng(8080);
  auto s = classical_rational();
  for (int trial = 0; trial < 50; ++trial) {
    auto ts = random_probability_space(s, rng);

    // countable additivity over the atom family itself is plain summation
    std::vector<oracle::Frac> fracs;
    for (const Value& w : ts.measure.atom_weights()) {
      fracs.emplace_back(w.rat().num(), w.rat().den());
    }
    const auto total = oracle::sum_masked(fracs, ~std::uint64_t{0} >> (64 - fracs.size()));
    CHECK(total.str() == "1");

    const Event a = random_measurable_event(*ts.algebra, rng);
    CHECK(s->geq(ts.measure.prob(a), s->zero()));
    CHECK(s->equal(ts.measure.prob(Event::all(ts.space)), s->one()));
    CHECK(s->is_zero(ts.measure.prob(Event::none(ts.space))));
  }
}

TEST_CASE("possibility of a disjoint union is the max of the parts") {
  std::mt19937_64 rng(9090);
  auto s = possibility();
  for (int trial = 0; trial < 60; ++trial) {
    auto ts = random_probability_space(s, rng);
    const auto family = genprob::testing::random_partition(*ts.algebra, rng);
    Value max_of_parts = s->zero();
    Event whole = Event::none(ts.space);
    for (const Event& part : family) {
      max_of_parts = s->add(max_of_parts, ts.measure.prob(part));
      whole = whole | part;
    }
    CHECK(s->equal(ts.measure.prob(whole), max_of_parts));

    CHECK(s->equal(ts.measure.prob(Event::all(ts.space)), s->one()));
    CHECK(s->is_zero(ts.measure.prob(Event::none(ts.space))));
    const Event a = random_measurable_event(*ts.algebra, rng);
    CHECK(s->geq(ts.measure.prob(a), s->zero()));
  }
}

TEST_CASE("possibility residuation frozen values") {
  auto s = possibility();
  CHECK(s->equal(s->residuate(Value(0.3), Value(0.7)), Value(0.3)));
  CHECK(s->equal(s->residuate(Value(0.7), Value(0.7)), Value(1.0)));
}

TEST_CASE("viterbi frozen values") {
  auto s = viterbi();
  CHECK(s->equal(s->mul(Value(0.5), Value(0.5)), Value(0.25)));
  CHECK(s->equal(s->add(Value(0.5), Value(0.25)), Value(0.5)));
  CHECK(s->equal(s->recip(Value(0.5)), Value(2.0)));
}

TEST_CASE("boolean carrier is exactly {0,1}") {
  auto s = boolean();
  CHECK_THROWS_AS(s->parse("0.5"), Error);
  CHECK(s->equal(s->parse("1"), s->one()));
  std::mt19937_64 rng(3);
  for (int i = 0; i < 20; ++i) {
    const Value v = s->sample(rng);
    CHECK((s->is_zero(v) || s->equal(v, s->one())));
  }
}

TEST_CASE("probability axioms hold for measures on every instance") {
  std::mt19937_64 rng(7171);
  for (const auto& id : registered_instances()) {
    auto s = make_structure(id);
    for (int trial = 0; trial < 25; ++trial) {
      auto ts = random_probability_space(s, rng);
      const Event a = random_measurable_event(*ts.algebra, rng);
      const Event b = random_measurable_event(*ts.algebra, rng) - a;
      CHECK(s->geq(ts.measure.prob(a), s->zero()));
      CHECK(s->equal(ts.measure.prob(Event::all(ts.space)), s->one()));
      CHECK(s->is_zero(ts.measure.prob(Event::none(ts.space))));
      CHECK(s->equal(ts.measure.prob(a | b),
                     s->add(ts.measure.prob(a), ts.measure.prob(b))));
    }
  }
}
