// Acceptance suite: one line per criterion, non-zero exit if any fails.
// Usage: acceptance <genprob-binary> <models-dir> <golden-dir> <data-dir>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <sys/wait.h>

#include "genprob/cli.hpp"
#include "genprob/laws.hpp"

#include "support/generators.hpp"
#include "support/mutants.hpp"
#include "support/oracles.hpp"

using namespace genprob;
using genprob::testing::random_measurable_event;
using genprob::testing::random_partition;
using genprob::testing::random_probability_space;

namespace {

constexpr std::uint64_t kSeed = 20260810;

struct Criterion {
  std::string name;
  bool pass = true;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (notes.size() < 8) notes.push_back(what);
    }
  }
};

struct RunResult {
  int code = -1;
  std::string output;
};

RunResult run_cmd(const std::string& cmd) {
  RunResult r;
  FILE* pipe = popen((cmd + " 2>&1").c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) r.output.append(buf, n);
  const int status = pclose(pipe);
  if (WIFEXITED(status)) r.code = WEXITSTATUS(status);
  return r;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string shell_quote(const std::string& s) { return "'" + s + "'"; }

// --- criterion 1: law suite ------------------------------------------------

Criterion law_suite() {
  Criterion c{"instance law suite with expected possibility failures"};
  for (const auto& id : registered_instances()) {
    auto s = make_structure(id);
    const LawReport report = check_laws(*s, s->caps(), 500, kSeed);
    c.require(report.all_pass(), id + ": claimed axioms must all pass");
  }
  auto poss = possibility();
  Caps groups;
  groups.additive_group = true;
  groups.multiplicative_group = true;
  const LawReport report = check_laws(*poss, groups, 500, kSeed);
  const LawResult* mgp4 = report.find(Law::MGP4);
  const LawResult* ngp5 = report.find(Law::NGP5);
  c.require(mgp4 && !mgp4->pass && !mgp4->counterexample.empty(),
            "possibility must fail MGP4 with a witness");
  c.require(ngp5 && !ngp5->pass && !ngp5->counterexample.empty(),
            "possibility must fail NGP5 with a witness");
  if (mgp4 && !mgp4->pass) {
    c.require(law_violated_on(*poss, Law::MGP4, mgp4->counterexample),
              "MGP4 witness must re-evaluate to a violation");
  }
  if (ngp5 && !ngp5->pass) {
    c.require(law_violated_on(*poss, Law::NGP5, ngp5->counterexample),
              "NGP5 witness must re-evaluate to a violation");
  }
  return c;
}

// --- criterion 2: theorem suite ---------------------------------------------

Criterion theorem_suite() {
  Criterion c{"theorem suite on 200 random spaces per instance"};
  const std::vector<std::string> ids{"classical-rational", "possibility", "viterbi"};
  for (const auto& id : ids) {
    auto s = make_structure(id);
    std::mt19937_64 rng(kSeed + 1);
    for (int trial = 0; trial < 200; ++trial) {
      auto ts = random_probability_space(s, rng);
      const Structure& st = ts.measure.structure();
      const Event a = random_measurable_event(*ts.algebra, rng);
      const Event b = random_measurable_event(*ts.algebra, rng);
      const Event low = a & b;

      // monotonicity on a nested pair
      c.require(st.geq(ts.measure.prob(a), ts.measure.prob(low)), id + ": monotonicity");
      // set difference, first form
      c.require(st.equal(st.add(ts.measure.prob(a - low), ts.measure.prob(low)),
                         ts.measure.prob(a)),
                id + ": set-difference identity");
      // complement, first form
      c.require(st.equal(st.add(ts.measure.prob(a), ts.measure.prob(~a)), st.one()),
                id + ": complement identity");
      // bounds
      c.require(st.geq(st.one(), ts.measure.prob(a)) && st.geq(ts.measure.prob(a), st.zero()),
                id + ": unit bounds");
      // inclusion-exclusion, first form
      c.require(st.equal(st.add(ts.measure.prob(a | b), ts.measure.prob(a & b)),
                         st.add(ts.measure.prob(a), ts.measure.prob(b))),
                id + ": inclusion-exclusion identity");
      // total probability over a random partition
      const auto cells = random_partition(*ts.algebra, rng);
      c.require(st.equal(total_probability(ts.measure, a, cells), ts.measure.prob(a)),
                id + ": total probability");

      if (st.caps().additive_group) {
        c.require(st.equal(ts.measure.prob(~a), sub(st, st.one(), ts.measure.prob(a))),
                  id + ": subtracted complement");
        c.require(st.equal(ts.measure.prob(a - low),
                           sub(st, ts.measure.prob(a), ts.measure.prob(low))),
                  id + ": subtracted set difference");
        c.require(st.equal(ts.measure.prob(a | b),
                           sub(st, st.add(ts.measure.prob(a), ts.measure.prob(b)),
                               ts.measure.prob(a & b))),
                  id + ": subtracted inclusion-exclusion");
      }
      if (st.caps().multiplicative_group && !low.empty() && !st.is_zero(ts.measure.prob(b)) &&
          !st.is_zero(ts.measure.prob(a))) {
        // division forms of conditioning and of the symmetry rule
        const Conditioning ab = conditional(ts.measure, a, b);
        c.require(ab.kind == Conditioning::Kind::unique &&
                      st.equal(*ab.value, div(st, ts.measure.prob(low), ts.measure.prob(b))),
                  id + ": conditional division form");
        const Conditioning ba = bayes(ts.measure, a, b);
        c.require(st.equal(*ba.value, div(st, ts.measure.prob(low), ts.measure.prob(a))),
                  id + ": reversed-conditional division form");
      }
    }
  }
  return c;
}

// --- criterion 3: Kolmogorov reduction ---------------------------------------

Criterion die_reduction(const std::string& models_dir) {
  Criterion c{"Kolmogorov die reductions"};
  const Model m = load_model(models_dir + "/die.json");
  const Structure& s = *m.structure;

  // hand oracle: 3 * 1/6 = 1/2
  c.require((oracle::Frac(1, 6) + oracle::Frac(1, 6) + oracle::Frac(1, 6)).str() == "1/2",
            "oracle arithmetic for prob even");
  c.require(s.format(m.measure.prob(m.events.at("even"))) == "1/2", "prob even = 1/2");

  std::vector<std::string> two{"2"};
  const Conditioning cond2 = conditional(m.measure, m.event_of_labels(two), m.events.at("even"));
  c.require((oracle::Frac(1, 6) / oracle::Frac(1, 2)).str() == "1/3",
            "oracle arithmetic for the conditional");
  c.require(cond2.kind == Conditioning::Kind::unique && s.format(*cond2.value) == "1/3",
            "cond {2} given even = 1/3");

  oracle::Frac ex;
  for (int i = 1; i <= 6; ++i) ex = ex + oracle::Frac(i, 10) * oracle::Frac(1, 6);
  c.require(ex.str() == "7/20", "oracle arithmetic for the expectation");
  c.require(s.format(expected_value(m.measure, m.variables.at("X"))) == "7/20",
            "expect X = 7/20");
  return c;
}

// --- criterion 4: possibility reduction --------------------------------------

Criterion possibility_reduction() {
  Criterion c{"possibility axioms and max-min expectation"};
  auto s = possibility();
  std::mt19937_64 rng(kSeed + 4);
  for (int trial = 0; trial < 100; ++trial) {
    auto ts = random_probability_space(s, rng);
    const auto family = random_partition(*ts.algebra, rng);
    Event whole = Event::none(ts.space);
    double expected = 0.0;
    for (const Event& part : family) {
      whole = whole | part;
      expected = std::max(expected, ts.measure.prob(part).flt());
    }
    c.require(ts.measure.prob(whole).flt() == expected,
              "union of disjoint events must carry the max weight");

    std::vector<Value> values;
    std::vector<double> raw_values, raw_weights;
    for (std::size_t i = 0; i < ts.algebra->atoms().size(); ++i) {
      values.push_back(s->sample(rng));
      raw_values.push_back(values.back().flt());
      raw_weights.push_back(ts.measure.atom_weights()[i].flt());
    }
    auto x = RandomVariable::from_atom_values(s, ts.algebra, values);
    c.require(expected_value(ts.measure, x).flt() ==
                  oracle::max_min_expectation(raw_values, raw_weights),
              "expectation must equal the brute-force max-min");
  }
  return c;
}

// --- criterion 5: supremum attainment -----------------------------------------

Criterion supremum_check() {
  Criterion c{"integral supremum attainment (grid enumeration)"};
  std::mt19937_64 rng(kSeed + 5);
  const std::vector<StructurePtr> instances{classical_rational(), possibility(), viterbi()};
  for (const auto& s : instances) {
    for (std::size_t atoms = 1; atoms <= 4; ++atoms) {
      for (int rep = 0; rep < 6; ++rep) {
        auto space = make_space(genprob::testing::make_labels(atoms));
        auto algebra = power_set_algebra(space);
        auto mu = ProbabilityMeasure::make(
            s, algebra, genprob::testing::random_atom_weights(*s, atoms, rng));
        auto grid_value = [&](int level) {
          if (s->id() == "classical-rational") return Value(Rational(level, 4));
          return Value(level / 4.0);
        };
        std::vector<int> f_levels(atoms);
        std::vector<Value> f_values;
        for (std::size_t i = 0; i < atoms; ++i) {
          f_levels[i] = static_cast<int>(rng() % 5);
          f_values.push_back(grid_value(f_levels[i]));
        }
        auto f = RandomVariable::from_atom_values(s, algebra, f_values);
        const Value bound = integrate_nonneg(mu, f);

        bool attained = false;
        std::vector<int> levels(atoms, 0);
        while (true) {
          bool dominated = true;
          for (std::size_t i = 0; i < atoms; ++i) {
            dominated = dominated && levels[i] <= f_levels[i];
          }
          if (dominated) {
            std::vector<SimpleFunction::Term> terms;
            for (std::size_t i = 0; i < atoms; ++i) {
              terms.push_back({grid_value(levels[i]), algebra->atoms()[i]});
            }
            const Value v = integrate_simple(mu, SimpleFunction::make(s, terms));
            c.require(s->leq(v, bound),
                      s->id() + ": dominated simple function exceeds the canonical integral");
            if (s->equal(v, bound)) attained = true;
          }
          std::size_t k = 0;
          while (k < atoms && levels[k] == 4) {
            levels[k] = 0;
            ++k;
          }
          if (k == atoms) break;
          ++levels[k];
        }
        c.require(attained, s->id() + ": supremum not attained by any dominated function");
      }
    }
  }
  return c;
}

// --- criterion 6: conditioning contract ---------------------------------------

Criterion conditioning_contract() {
  Criterion c{"conditioning contract and Bayes symmetry re-verification"};
  int verified = 0;
  std::mt19937_64 rng(kSeed + 6);
  for (const auto& id : registered_instances()) {
    auto s = make_structure(id);
    for (int trial = 0; trial < 250; ++trial) {
      auto ts = random_probability_space(s, rng);
      const Structure& st = ts.measure.structure();
      const Event a = random_measurable_event(*ts.algebra, rng);
      const Event b = random_measurable_event(*ts.algebra, rng);
      if ((a & b).empty()) continue;

      Conditioning ab, ba;
      try {
        ab = conditional(ts.measure, a, b);
        ba = conditional(ts.measure, b, a);
      } catch (const Error& e) {
        if (e.code() != Errc::zero_condition) {
          c.require(false, id + ": unexpected conditioning error");
        }
        continue;
      }
      if (ab.resolvable()) {
        c.require(st.equal(st.mul(*ab.value, ts.measure.prob(b)), ts.measure.prob(a & b)),
                  id + ": x (*) P(B) must reproduce P(A and B)");
        ++verified;
      }
      if (ab.resolvable() && ba.resolvable()) {
        c.require(st.equal(st.mul(*ba.value, ts.measure.prob(a)),
                           st.mul(*ab.value, ts.measure.prob(b))),
                  id + ": Bayes symmetry");
      }
    }
  }
  c.require(verified >= 300, "corpus produced too few resolvable conditionals");
  return c;
}

// --- criterion 7: mutation detection -------------------------------------------

Criterion mutation_detection(const std::string& bin, const std::string& data_dir) {
  Criterion c{"mutation detection with named errors and exit codes"};

  // non-normalized weights, library level
  {
    auto s = classical_rational();
    auto space = make_space({"a", "b"});
    auto algebra = power_set_algebra(space);
    try {
      ProbabilityMeasure::make(s, algebra, {Value(Rational(1, 2)), Value(Rational(1, 3))});
      c.require(false, "non-normalized weights must be rejected");
    } catch (const Error& e) {
      c.require(e.code() == Errc::not_normalized, "expected NotNormalized");
    }
  }
  // non-normalized weights through the CLI: named axiom, exit 1
  {
    const RunResult r =
        run_cmd(shell_quote(bin) + " check --model " + shell_quote(data_dir + "/nonnormalized.json"));
    c.require(r.code == 1, "CLI must exit 1 on NotNormalized");
    c.require(r.output.find("NotNormalized") != std::string::npos, "error must be named");
    c.require(r.output.find("ACPA2") != std::string::npos, "axiom must be named");
  }
  // unknown instance id: parse error, exit 2
  {
    const RunResult r =
        run_cmd(shell_quote(bin) + " check --model " + shell_quote(data_dir + "/unknown_instance.json"));
    c.require(r.code == 2, "CLI must exit 2 on an unknown instance id");
    c.require(r.output.find("ParseError") != std::string::npos, "error must be named");
  }
  // non-commutative addition
  {
    auto mutant = std::make_shared<genprob::testing::NonCommutativeAdd>(classical_float());
    const LawReport report = check_laws(*mutant, Caps{}, 300, kSeed);
    const LawResult* mmp1 = report.find(Law::MMP1);
    c.require(mmp1 && !mmp1->pass, "MMP1 must fail for add(a,b)=a");
    c.require(mmp1 && !mmp1->counterexample.empty() &&
                  law_violated_on(*mutant, Law::MMP1, mmp1->counterexample),
              "MMP1 witness must re-evaluate to a violation");
  }
  // non-monotone multiplication
  {
    auto mutant = std::make_shared<genprob::testing::NonMonotoneMul>(classical_float());
    const LawReport report = check_laws(*mutant, Caps{}, 300, kSeed);
    const LawResult* nmp5 = report.find(Law::NMP5);
    c.require(nmp5 && !nmp5->pass, "NMP5 must fail for decreasing multiplication");
    c.require(nmp5 && !nmp5->counterexample.empty() &&
                  law_violated_on(*mutant, Law::NMP5, nmp5->counterexample),
              "NMP5 witness must re-evaluate to a violation");
  }
  // overlapping simple-function terms
  {
    auto s = classical_rational();
    auto space = make_space({"a", "b"});
    const Event e1 = Event::all(space);
    const Event e2 = Event::of_labels(space, std::vector<std::string>{"a"});
    try {
      SimpleFunction::make(s, {{s->one(), e1}, {s->one(), e2}});
      c.require(false, "overlapping terms must be rejected");
    } catch (const Error& e) {
      c.require(e.code() == Errc::overlapping_terms, "expected OverlappingTerms");
    }
  }
  return c;
}

// --- criterion 8: golden transcripts --------------------------------------------

std::string transcript(const std::string& bin, const std::string& model,
                       const std::vector<std::string>& queries) {
  std::string t;
  for (const auto& q : queries) {
    const RunResult r = run_cmd(shell_quote(bin) + " query --model " + shell_quote(model) + " " +
                                shell_quote(q));
    t += "$ " + q + "\n" + r.output + "[exit " + std::to_string(r.code) + "]\n";
  }
  return t;
}

Criterion golden_transcripts(const std::string& bin, const std::string& models_dir,
                             const std::string& golden_dir) {
  Criterion c{"golden CLI transcripts"};
  const struct {
    const char* model;
    const char* golden;
    std::vector<std::string> queries;
  } cases[] = {
      {"die.json",
       "die_transcript.txt",
       {"prob even", "prob low", "cond {2} given even", "bayes {2} given even",
        "total even over odd,even", "union even low", "complement even", "independent even low",
        "dist X in {1/10,2/10}", "joint X in {1/5} Y in {1}", "expect X",
        "cdist X in {1/5} given Y in {1}"}},
      {"possibility3.json",
       "possibility3_transcript.txt",
       {"prob bc", "prob ab", "cond bc given ab", "cond onlyc given bc", "bayes bc given ab",
        "total bc over {a},{b},{c}", "independent ab bc", "dist X in {0.9}", "expect X",
        "complement ab"}},
      {"viterbi2.json",
       "viterbi2_transcript.txt",
       {"prob first1", "cond first1 given second1", "bayes second1 given first1",
        "independent first1 second1", "total first1 over {00,01},{10,11}", "dist X in {0.9}",
        "expect X", "complement first1"}},
  };
  for (const auto& tc : cases) {
    const std::string actual = transcript(bin, models_dir + "/" + tc.model, tc.queries);
    const std::string expected = read_file(golden_dir + "/" + tc.golden);
    // run twice: byte-identical across runs, and identical to the golden file
    const std::string again = transcript(bin, models_dir + "/" + tc.model, tc.queries);
    c.require(actual == again, std::string(tc.model) + ": transcript not reproducible");
    if (actual != expected) {
      c.require(false, std::string(tc.model) + ": transcript differs from " + tc.golden);
      std::cerr << "--- actual transcript for " << tc.model << " ---\n" << actual << "---\n";
    }
  }
  return c;
}

} // namespace

int main(int argc, char** argv) {
  if (argc < 5) {
    std::cerr << "usage: acceptance <genprob-binary> <models-dir> <golden-dir> <data-dir>\n";
    return 2;
  }
  const std::string bin = argv[1];
  const std::string models_dir = argv[2];
  const std::string golden_dir = argv[3];
  const std::string data_dir = argv[4];

  std::vector<Criterion> criteria;
  criteria.push_back(law_suite());
  criteria.push_back(theorem_suite());
  criteria.push_back(die_reduction(models_dir));
  criteria.push_back(possibility_reduction());
  criteria.push_back(supremum_check());
  criteria.push_back(conditioning_contract());
  criteria.push_back(mutation_detection(bin, data_dir));
  criteria.push_back(golden_transcripts(bin, models_dir, golden_dir));

  int passed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const Criterion& c = criteria[i];
    std::cout << "criterion " << (i + 1) << " (" << c.name << "): " << (c.pass ? "PASS" : "FAIL")
              << "\n";
    for (const auto& note : c.notes) std::cout << "    - " << note << "\n";
    if (c.pass) ++passed;
  }
  std::cout << "acceptance: " << passed << "/" << criteria.size() << " criteria passed\n";
  return passed == criteria.size() ? 0 : 1;
}
