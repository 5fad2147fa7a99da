#include "genprob/model.hpp"

#include <fstream>

#include <json.hpp>

namespace genprob {

namespace {

using nlohmann::json;

Value parse_weight(const Structure& s, const json& j, const std::string& where) {
  try {
    if (j.is_string()) return s.parse(j.get<std::string>());
    if (j.is_number()) return s.parse(j.dump());
  } catch (const Error& e) {
    fail(Errc::parse_error, "model", where + ": " + e.what());
  }
  fail(Errc::parse_error, "model", where + ": expected a number or a \"p/q\" string");
}

std::vector<std::string> parse_label_array(const json& j, const std::string& where) {
  if (!j.is_array()) fail(Errc::parse_error, "model", where + ": expected an array of labels");
  std::vector<std::string> out;
  for (const auto& item : j) {
    if (!item.is_string()) fail(Errc::parse_error, "model", where + ": labels must be strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

Model build(const json& doc, const LoadOptions& options) {
  if (!doc.is_object()) fail(Errc::parse_error, "model", "model root must be an object");
  for (const auto& key : {"structure", "outcomes", "weights"}) {
    if (!doc.contains(key)) {
      fail(Errc::parse_error, "model", std::string("missing required key '") + key + "'");
    }
  }

  const std::string instance_id =
      options.instance_override.value_or(doc.at("structure").get<std::string>());
  StructurePtr structure = make_structure(instance_id, options.tolerance);

  SpacePtr space = make_space(parse_label_array(doc.at("outcomes"), "outcomes"));

  AlgebraPtr algebra;
  if (doc.contains("algebra")) {
    std::vector<Event> generators;
    for (const auto& gen : doc.at("algebra")) {
      generators.push_back(Event::of_labels(space, parse_label_array(gen, "algebra generator")));
    }
    algebra = generate_algebra(space, generators);
  } else {
    algebra = power_set_algebra(space);
  }

  const auto& weights_json = doc.at("weights");
  if (!weights_json.is_object()) {
    fail(Errc::parse_error, "model", "'weights' must map outcome labels to numbers");
  }
  std::vector<Value> outcome_weights;
  outcome_weights.reserve(space->size());
  for (const auto& label : space->labels()) {
    if (!weights_json.contains(label)) {
      fail(Errc::parse_error, "model", "missing weight for outcome '" + label + "'");
    }
    outcome_weights.push_back(
        parse_weight(*structure, weights_json.at(label), "weight of '" + label + "'"));
  }
  for (const auto& [key, unused] : weights_json.items()) {
    if (!space->index_of(key)) {
      fail(Errc::parse_error, "model", "weight for unknown outcome '" + key + "'");
    }
  }

  // Atom weights are induced from the outcome weights by add-folding.
  std::vector<Value> atom_weights;
  atom_weights.reserve(algebra->atoms().size());
  for (const Event& atom : algebra->atoms()) {
    Value acc = structure->zero();
    for (std::size_t i = 0; i < space->size(); ++i) {
      if (atom.contains(i)) acc = structure->add(acc, outcome_weights[i]);
    }
    atom_weights.push_back(acc);
  }

  ProbabilityMeasure measure =
      ProbabilityMeasure::make(structure, algebra, std::move(atom_weights));

  std::map<std::string, Event> events;
  if (doc.contains("events")) {
    for (const auto& [name, labels] : doc.at("events").items()) {
      Event e = Event::of_labels(space, parse_label_array(labels, "event '" + name + "'"));
      if (!algebra->is_measurable(e)) {
        fail(Errc::parse_error, "model",
             "event '" + name + "' is not measurable under the declared algebra");
      }
      events.emplace(name, std::move(e));
    }
  }

  std::map<std::string, RandomVariable> variables;
  if (doc.contains("variables")) {
    for (const auto& [name, table] : doc.at("variables").items()) {
      if (!table.is_object()) {
        fail(Errc::parse_error, "model", "variable '" + name + "' must map labels to numbers");
      }
      std::vector<Value> values;
      values.reserve(space->size());
      for (const auto& label : space->labels()) {
        if (!table.contains(label)) {
          fail(Errc::parse_error, "model",
               "variable '" + name + "' misses outcome '" + label + "'");
        }
        values.push_back(
            parse_weight(*structure, table.at(label), "variable '" + name + "' at '" + label + "'"));
      }
      try {
        variables.emplace(name,
                          RandomVariable::from_outcome_values(structure, algebra, values));
      } catch (const Error& e) {
        if (e.code() != Errc::not_measurable) throw;
        fail(Errc::parse_error, "model", "variable '" + name + "': " + e.what());
      }
    }
  }

  return Model{std::move(structure), std::move(space),     std::move(algebra),
               std::move(measure),   std::move(events),    std::move(variables)};
}

} // namespace

Event Model::event_of_labels(std::span<const std::string> labels) const {
  Event e = Event::of_labels(space, labels);
  if (!algebra->is_measurable(e)) {
    fail(Errc::not_measurable, "model", "event is not measurable under the model's algebra");
  }
  return e;
}

Model load_model(const std::filesystem::path& path, const LoadOptions& options) {
  std::ifstream in(path);
  if (!in) fail(Errc::parse_error, "model", "cannot open '" + path.string() + "'");
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return load_model_text(text, options);
}

Model load_model_text(const std::string& text, const LoadOptions& options) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    fail(Errc::parse_error, "model", std::string("invalid JSON: ") + e.what());
  }
  try {
    return build(doc, options);
  } catch (const json::exception& e) {
    fail(Errc::parse_error, "model", std::string("malformed model: ") + e.what());
  }
}

} // namespace genprob
