#ifndef GENPROB_SPACE_HPP
#define GENPROB_SPACE_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "genprob/errors.hpp"

namespace genprob {

/// Finite set of distinct outcome labels. Immutable; shared by events,
/// algebras, and measures via SpacePtr.
class SampleSpace {
public:
  explicit SampleSpace(std::vector<std::string> labels);

  std::size_t size() const noexcept { return labels_.size(); }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::optional<std::size_t> index_of(std::string_view label) const;

private:
  std::vector<std::string> labels_;
};

using SpacePtr = std::shared_ptr<const SampleSpace>;

SpacePtr make_space(std::vector<std::string> labels);

/// Subset of a sample space, stored canonically as a bitset over outcome
/// indices. Set operations require both operands to share the same space
/// object and throw Errc::space_mismatch otherwise.
class Event {
public:
  static Event none(SpacePtr space);
  static Event all(SpacePtr space);
  static Event of_indices(SpacePtr space, std::span<const std::size_t> indices);
  static Event of_labels(SpacePtr space, std::span<const std::string> labels);

  const SpacePtr& space() const noexcept { return space_; }
  bool contains(std::size_t index) const;
  std::size_t count() const noexcept;
  bool empty() const noexcept;

  Event operator|(const Event& o) const;  // union
  Event operator&(const Event& o) const;  // intersection
  Event operator-(const Event& o) const;  // difference
  Event operator~() const;                // complement

  bool operator==(const Event& o) const;
  bool operator!=(const Event& o) const { return !(*this == o); }
  bool is_subset_of(const Event& o) const;

  /// Member labels in outcome order (the serialization order).
  std::vector<std::string> member_labels() const;

private:
  Event(SpacePtr space, std::vector<std::uint64_t> words);
  void check_same_space(const Event& o) const;

  SpacePtr space_;
  std::vector<std::uint64_t> words_;  // trailing bits always zero
};

/// Finite sigma-algebra represented by its atom partition: atoms are
/// pairwise disjoint, non-empty, and cover the space; an event is
/// measurable iff it is a union of atoms.
class SigmaAlgebra {
public:
  const SpacePtr& space() const noexcept { return space_; }
  const std::vector<Event>& atoms() const noexcept { return atoms_; }
  std::size_t atom_index_of_outcome(std::size_t outcome) const;

  bool is_measurable(const Event& e) const;

  /// Number of measurable events, 2^#atoms. Defined for up to 63 atoms.
  std::uint64_t event_count() const;

private:
  friend class SigmaAlgebraBuilder;
  SpacePtr space_;
  std::vector<Event> atoms_;
  std::vector<std::uint32_t> atom_of_;
};

using AlgebraPtr = std::shared_ptr<const SigmaAlgebra>;

/// Discrete algebra: singleton atoms, every event measurable.
AlgebraPtr power_set_algebra(SpacePtr space);

/// Smallest sigma-algebra containing all generators, computed by grouping
/// outcomes with identical generator-membership signatures into atoms.
AlgebraPtr generate_algebra(SpacePtr space, std::span<const Event> generators);

} // namespace genprob

#endif // GENPROB_SPACE_HPP
