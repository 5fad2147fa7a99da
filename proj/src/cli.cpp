#include "genprob/cli.hpp"

#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "genprob/laws.hpp"

namespace genprob {

namespace {

std::vector<std::string> tokenize(const std::string& query) {
  std::vector<std::string> tokens;
  std::size_t i = 0;
  while (i < query.size()) {
    if (std::isspace(static_cast<unsigned char>(query[i]))) {
      ++i;
      continue;
    }
    if (query[i] == '{') {
      const auto close = query.find('}', i);
      if (close == std::string::npos) {
        fail(Errc::parse_error, "cli", "unbalanced '{' in query");
      }
      std::size_t end = close + 1;
      // Attach an immediately following comma run so over-lists stay joined.
      while (end < query.size() && query[end] == ',') ++end;
      tokens.push_back(query.substr(i, end - i));
      i = end;
    } else {
      std::size_t end = i;
      while (end < query.size() && !std::isspace(static_cast<unsigned char>(query[end]))) ++end;
      tokens.push_back(query.substr(i, end - i));
      i = end;
    }
  }
  return tokens;
}

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

std::vector<std::string> split_top_level_commas(const std::string& text) {
  std::vector<std::string> parts;
  std::string current;
  int depth = 0;
  for (char c : text) {
    if (c == '{') ++depth;
    if (c == '}') --depth;
    if (c == ',' && depth == 0) {
      parts.push_back(trim(current));
      current.clear();
    } else {
      current += c;
    }
  }
  if (!trim(current).empty()) parts.push_back(trim(current));
  return parts;
}

struct ParsedEvent {
  Event event;
  std::string echo;
};

ParsedEvent resolve_event(const Model& m, const std::string& token) {
  if (!token.empty() && token.front() == '{') {
    if (token.back() != '}') fail(Errc::parse_error, "cli", "malformed event literal " + token);
    std::vector<std::string> labels;
    for (const auto& part : split_top_level_commas(token.substr(1, token.size() - 2))) {
      labels.push_back(part);
    }
    Event e = m.event_of_labels(labels);
    std::string echo = "{";
    bool first = true;
    for (const auto& l : e.member_labels()) {
      if (!first) echo += ",";
      echo += l;
      first = false;
    }
    echo += "}";
    return {std::move(e), std::move(echo)};
  }
  const auto it = m.events.find(token);
  if (it == m.events.end()) {
    fail(Errc::unknown_name, "cli", "unknown event '" + token + "'");
  }
  return {it->second, token};
}

struct ParsedSet {
  ValueSet set;
  std::string echo;
};

ParsedSet resolve_set(const Model& m, const std::string& token) {
  if (token.empty() || token.front() != '{' || token.back() != '}') {
    fail(Errc::parse_error, "cli", "expected a value set {v,...}, got '" + token + "'");
  }
  std::vector<Value> values;
  for (const auto& part : split_top_level_commas(token.substr(1, token.size() - 2))) {
    values.push_back(m.structure->parse(part));
  }
  ValueSet set = ValueSet::of(m.structure, std::move(values));
  std::string echo = "{";
  bool first = true;
  for (const Value& v : set.values()) {
    if (!first) echo += ",";
    echo += m.structure->format(v);
    first = false;
  }
  echo += "}";
  return {std::move(set), std::move(echo)};
}

const RandomVariable& resolve_variable(const Model& m, const std::string& token) {
  const auto it = m.variables.find(token);
  if (it == m.variables.end()) {
    fail(Errc::unknown_name, "cli", "unknown variable '" + token + "'");
  }
  return it->second;
}

std::string format_conditioning(const Structure& s, const Conditioning& c) {
  switch (c.kind) {
    case Conditioning::Kind::unique:
      return s.format(*c.value);
    case Conditioning::Kind::residuated:
      return s.format(*c.value) + " [residuated, verified=" + (c.verified ? "true" : "false") +
             "]";
    case Conditioning::Kind::unconditionable:
      return "unconditionable (" + c.note + ")";
  }
  return {};
}

void expect_keyword(const std::vector<std::string>& tokens, std::size_t index,
                    std::string_view keyword) {
  if (index >= tokens.size() || tokens[index] != keyword) {
    fail(Errc::parse_error, "cli",
         "expected '" + std::string(keyword) + "' in query");
  }
}

void expect_arity(const std::vector<std::string>& tokens, std::size_t n) {
  if (tokens.size() != n) {
    fail(Errc::parse_error, "cli", "malformed query: wrong number of arguments");
  }
}

} // namespace

int exit_code_for(Errc code) {
  return (code == Errc::parse_error || code == Errc::unknown_name) ? 2 : 1;
}

void run_query(const Model& model, const std::string& query, std::ostream& out) {
  const auto tokens = tokenize(query);
  if (tokens.empty()) fail(Errc::parse_error, "cli", "empty query");
  const Structure& s = *model.structure;
  const std::string& verb = tokens.front();

  if (verb == "prob") {
    expect_arity(tokens, 2);
    const auto a = resolve_event(model, tokens[1]);
    const std::string v = s.format(model.measure.prob(a.event));
    out << "prob " << a.echo << " = " << v << "\n";
    return;
  }

  if (verb == "cond" || verb == "bayes") {
    expect_arity(tokens, 4);
    expect_keyword(tokens, 2, "given");
    const auto lhs = resolve_event(model, tokens[1]);
    const auto rhs = resolve_event(model, tokens[3]);
    // `cond A given B` conditions A on B; `bayes B given A` recovers the
    // same quantity through the reversed conditional and the product rule.
    const Conditioning c = verb == "cond" ? conditional(model.measure, lhs.event, rhs.event)
                                          : bayes(model.measure, rhs.event, lhs.event);
    out << verb << " " << lhs.echo << " given " << rhs.echo << " = " << format_conditioning(s, c)
        << "\n";
    return;
  }

  if (verb == "total") {
    expect_keyword(tokens, 2, "over");
    if (tokens.size() < 4) fail(Errc::parse_error, "cli", "total needs a partition list");
    std::string joined;
    for (std::size_t i = 3; i < tokens.size(); ++i) joined += tokens[i];
    std::vector<Event> cells;
    std::vector<std::string> echos;
    for (const auto& part : split_top_level_commas(joined)) {
      auto cell = resolve_event(model, part);
      cells.push_back(std::move(cell.event));
      echos.push_back(std::move(cell.echo));
    }
    const auto a = resolve_event(model, tokens[1]);
    const std::string v = s.format(total_probability(model.measure, a.event, cells));
    out << "total " << a.echo << " over ";
    for (std::size_t i = 0; i < echos.size(); ++i) {
      if (i) out << ",";
      out << echos[i];
    }
    out << " = " << v << "\n";
    return;
  }

  if (verb == "union") {
    expect_arity(tokens, 3);
    const auto a = resolve_event(model, tokens[1]);
    const auto b = resolve_event(model, tokens[2]);
    const std::string v = s.format(union_prob(model.measure, a.event, b.event));
    out << "union " << a.echo << " " << b.echo << " = " << v << "\n";
    return;
  }

  if (verb == "complement") {
    expect_arity(tokens, 2);
    const auto a = resolve_event(model, tokens[1]);
    const std::string v = s.format(complement_prob(model.measure, a.event));
    out << "complement " << a.echo << " = " << v << "\n";
    return;
  }

  if (verb == "independent") {
    expect_arity(tokens, 3);
    const auto a = resolve_event(model, tokens[1]);
    const auto b = resolve_event(model, tokens[2]);
    const bool indep = independent(model.measure, a.event, b.event);
    out << "independent " << a.echo << " " << b.echo << " = " << (indep ? "true" : "false")
        << "\n";
    return;
  }

  if (verb == "dist") {
    expect_arity(tokens, 4);
    expect_keyword(tokens, 2, "in");
    const auto& x = resolve_variable(model, tokens[1]);
    const auto set = resolve_set(model, tokens[3]);
    const std::string v = s.format(pushforward(model.measure, x, set.set));
    out << "dist " << tokens[1] << " in " << set.echo << " = " << v << "\n";
    return;
  }

  if (verb == "joint") {
    expect_arity(tokens, 7);
    expect_keyword(tokens, 2, "in");
    expect_keyword(tokens, 5, "in");
    const auto& x = resolve_variable(model, tokens[1]);
    const auto a = resolve_set(model, tokens[3]);
    const auto& y = resolve_variable(model, tokens[4]);
    const auto b = resolve_set(model, tokens[6]);
    const std::string v = s.format(joint(model.measure, x, y, a.set, b.set));
    out << "joint " << tokens[1] << " in " << a.echo << " " << tokens[4] << " in " << b.echo
        << " = " << v << "\n";
    return;
  }

  if (verb == "expect") {
    expect_arity(tokens, 2);
    const auto& x = resolve_variable(model, tokens[1]);
    const std::string v = s.format(expected_value(model.measure, x));
    out << "expect " << tokens[1] << " = " << v << "\n";
    return;
  }

  if (verb == "cdist") {
    expect_arity(tokens, 8);
    expect_keyword(tokens, 2, "in");
    expect_keyword(tokens, 4, "given");
    expect_keyword(tokens, 6, "in");
    const auto& x = resolve_variable(model, tokens[1]);
    const auto a = resolve_set(model, tokens[3]);
    const auto& y = resolve_variable(model, tokens[5]);
    const auto b = resolve_set(model, tokens[7]);
    const Conditioning primary = conditional_distribution(model.measure, x, a.set, y, b.set);
    // Alternative reading: scale the joint by the X marginal instead, i.e.
    // condition {y in B} on {x in A}.
    const Conditioning alt =
        conditional(model.measure, preimage(y, b.set), preimage(x, a.set));
    out << "cdist " << tokens[1] << " in " << a.echo << " given " << tokens[5] << " in " << b.echo
        << " = " << format_conditioning(s, primary) << "\n";
    out << "alt (joint over X marginal) = " << format_conditioning(s, alt) << "\n";
    return;
  }

  fail(Errc::parse_error, "cli", "unknown query verb '" + verb + "'");
}

int run_check(const Model& model, int samples, std::uint64_t seed, std::ostream& out) {
  const Structure& s = *model.structure;
  bool ok = true;

  out << "instance: " << s.id() << "\n";
  out << "laws (samples=" << samples << ", seed=" << seed << "):\n";
  const LawReport report = check_laws(s, s.caps(), samples, seed);
  for (const auto& r : report.results) {
    out << "  " << law_id(r.law) << " " << law_description(r.law) << ": "
        << (r.pass ? "pass" : "FAIL " + r.detail) << "\n";
    ok = ok && r.pass;
  }

  out << "measure axioms:\n";
  const auto& weights = model.measure.atom_weights();
  bool bounds = true;
  for (const Value& w : weights) {
    bounds = bounds && s.geq(w, s.zero()) && s.leq(w, s.one());
  }
  out << "  ACPA1 weights within [0,1]: " << (bounds ? "pass" : "FAIL") << "\n";
  ok = ok && bounds;

  const bool normalized = s.equal(fold_add(s, weights), s.one());
  out << "  ACPA2 normalization: " << (normalized ? "pass" : "FAIL") << "\n";
  ok = ok && normalized;

  const bool empty_zero = s.is_zero(model.measure.prob(Event::none(model.space)));
  out << "  ACPA3 empty event: " << (empty_zero ? "pass" : "FAIL") << "\n";
  ok = ok && empty_zero;

  // Additivity on sampled disjoint measurable pairs.
  std::mt19937_64 rng(seed);
  bool additive = true;
  const auto& atoms = model.algebra->atoms();
  for (int trial = 0; trial < 64; ++trial) {
    Event a = Event::none(model.space);
    Event b = Event::none(model.space);
    for (const Event& atom : atoms) {
      switch (rng() % 3) {
        case 0: a = a | atom; break;
        case 1: b = b | atom; break;
        default: break;
      }
    }
    additive = additive && s.equal(model.measure.prob(a | b),
                                   s.add(model.measure.prob(a), model.measure.prob(b)));
  }
  out << "  ACPA4 additivity on sampled disjoint pairs: " << (additive ? "pass" : "FAIL") << "\n";
  ok = ok && additive;

  out << "check: " << (ok ? "ok" : "FAILED") << "\n";
  return ok ? 0 : 1;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"probability measures over ordered algebraic structures"};
  app.require_subcommand(1);

  std::string model_path;
  std::string instance;
  double tolerance = 1e-9;
  std::uint64_t seed = 12345;
  int samples = 500;
  std::string query_text;

  CLI::App* check = app.add_subcommand("check", "validate structure laws and measure axioms");
  check->add_option("--model", model_path, "model file (JSON)")->required();
  check->add_option("--instance", instance, "override the model's structure instance");
  check->add_option("--tolerance", tolerance, "comparison tolerance for float instances");
  check->add_option("--seed", seed, "law-check sampling seed");
  check->add_option("--samples", samples, "law-check sample count");

  CLI::App* query = app.add_subcommand("query", "answer a query against a model");
  query->add_option("--model", model_path, "model file (JSON)")->required();
  query->add_option("--instance", instance, "override the model's structure instance");
  query->add_option("--tolerance", tolerance, "comparison tolerance for float instances");
  query->add_option("query", query_text, "query string")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error[cli] ParseError: " << e.what() << "\n";
    return 2;
  }

  try {
    LoadOptions options;
    if (!instance.empty()) options.instance_override = instance;
    options.tolerance = tolerance;
    const Model model = load_model(model_path, options);
    if (check->parsed()) return run_check(model, samples, seed, out);
    run_query(model, query_text, out);
    return 0;
  } catch (const Error& e) {
    err << "error[" << e.module() << "] " << errc_name(e.code()) << ": " << e.what() << "\n";
    return exit_code_for(e.code());
  }
}

} // namespace genprob
