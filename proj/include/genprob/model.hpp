#ifndef GENPROB_MODEL_HPP
#define GENPROB_MODEL_HPP

#include <filesystem>
#include <map>
#include <optional>
#include <string>

#include "genprob/instances.hpp"
#include "genprob/integral.hpp"
#include "genprob/randvar.hpp"

namespace genprob {

/// A model file resolved against a structure instance: the probability
/// space plus its named events and variables.
struct Model {
  StructurePtr structure;
  SpacePtr space;
  AlgebraPtr algebra;
  ProbabilityMeasure measure;
  std::map<std::string, Event> events;
  std::map<std::string, RandomVariable> variables;

  Event event_of_labels(std::span<const std::string> labels) const;
};

struct LoadOptions {
  std::optional<std::string> instance_override;
  double tolerance = 1e-9;
};

/// Parses and validates a JSON model:
///   {
///     "structure": "<instance id>",
///     "outcomes":  ["a", ...],
///     "weights":   {"a": "1/6" | 0.25, ...},      one entry per outcome
///     "algebra":   [["a","b"], ...],              optional generator events
///     "events":    {"name": ["a", ...], ...},     optional
///     "variables": {"X": {"a": <number>, ...}}    optional, atom-constant
///   }
/// Outcome-level weights induce the atom weights by add-folding over each
/// atom. Schema and reference problems raise Errc::parse_error /
/// Errc::unknown_name; measure-axiom violations keep their own codes.
Model load_model(const std::filesystem::path& path, const LoadOptions& options = {});

/// Same, from an already-read JSON document (used by tests).
Model load_model_text(const std::string& text, const LoadOptions& options = {});

} // namespace genprob

#endif // GENPROB_MODEL_HPP
