#ifndef GENPROB_LAWS_HPP
#define GENPROB_LAWS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "genprob/structure.hpp"

namespace genprob {

/// Executable axioms. The ordered-monoid pair (MMP1-4, NMP1-5) is always
/// checked; the remaining groups are selected by the claimed capability set.
/// DIST1 and RES1 cover the distributive and residuation capability claims.
enum class Law {
  MMP1, MMP2, MMP3, MMP4,
  NMP1, NMP2, NMP3, NMP4, NMP5,
  MGP1, MGP2, MGP3, MGP4, MGP5,
  NGP1, NGP2, NGP3, NGP4, NGP5, NGP6,
  DIST1,
  RES1,
};

std::string_view law_id(Law law);
std::string_view law_description(Law law);

struct LawResult {
  Law law;
  bool pass = true;
  /// Concrete witness tuple when pass == false; re-feed it to
  /// law_violated_on() to confirm the violation.
  std::vector<Value> counterexample;
  std::string detail;
};

struct LawReport {
  std::string structure_id;
  int samples = 0;
  std::uint64_t seed = 0;
  std::vector<LawResult> results;

  bool all_pass() const;
  const LawResult* find(Law law) const;
};

/// Evaluates each axiom selected by `claimed` on `samples` pseudo-random
/// tuples drawn from the structure's sampler. Deterministic for a fixed seed.
/// Failures are collected in the report, never thrown.
LawReport check_laws(const Structure& s, const Caps& claimed, int samples,
                     std::uint64_t seed);

/// Re-evaluates one axiom on a concrete witness tuple; true means the tuple
/// still violates the axiom. For the existential axioms (MGP4, NGP5) the
/// witness is the single element whose inverse could not be produced, and the
/// confirmation sweeps a fresh deterministic candidate set.
bool law_violated_on(const Structure& s, Law law, std::span<const Value> witness);

} // namespace genprob

#endif // GENPROB_LAWS_HPP
