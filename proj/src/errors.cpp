#include "genprob/errors.hpp"

namespace genprob {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::capability_missing: return "CapabilityMissing";
    case Errc::division_by_zero: return "DivisionByZero";
    case Errc::zero_condition: return "ZeroCondition";
    case Errc::empty_intersection: return "EmptyIntersection";
    case Errc::not_normalized: return "NotNormalized";
    case Errc::negative_weight: return "NegativeWeight";
    case Errc::not_measurable: return "NotMeasurable";
    case Errc::space_mismatch: return "SpaceMismatch";
    case Errc::not_a_partition: return "NotAPartition";
    case Errc::unresolvable_term: return "UnresolvableTerm";
    case Errc::overlapping_terms: return "OverlappingTerms";
    case Errc::negative_value: return "NegativeValue";
    case Errc::unknown_name: return "UnknownName";
    case Errc::parse_error: return "ParseError";
    case Errc::overflow: return "Overflow";
    case Errc::internal: return "Internal";
  }
  return "Unknown";
}

} // namespace genprob
