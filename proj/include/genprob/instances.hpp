#ifndef GENPROB_INSTANCES_HPP
#define GENPROB_INSTANCES_HPP

#include <string_view>
#include <vector>

#include "genprob/structure.hpp"

namespace genprob {

/// Exact rational field on the unit interval (ambient rationals for the
/// inverses). All capability flags set.
StructurePtr classical_rational();

/// Same semantics on doubles; comparisons use an absolute tolerance.
StructurePtr classical_float(double tolerance = 1e-9);

/// (max, min) on [0, 1]: no inverses, distributive, residuated.
StructurePtr possibility(double tolerance = 1e-9);

/// (max, product) on the non-negative reals sampled from [0, 1]:
/// multiplicative group off zero, distributive, residuated for b > 0.
StructurePtr viterbi(double tolerance = 1e-9);

/// ({0, 1}, or, and), exact comparisons. Degenerate edge-case instance.
StructurePtr boolean();

/// Lookup by instance id: "classical-rational", "classical-float",
/// "possibility", "viterbi", "boolean". Unknown ids raise Errc::parse_error.
StructurePtr make_structure(std::string_view id, double tolerance = 1e-9);

std::vector<std::string> registered_instances();

} // namespace genprob

#endif // GENPROB_INSTANCES_HPP
