#include "genprob/space.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

namespace genprob {

namespace {
constexpr std::size_t kWordBits = 64;

std::size_t word_count(std::size_t n) { return (n + kWordBits - 1) / kWordBits; }
} // namespace

SampleSpace::SampleSpace(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) fail(Errc::parse_error, "space", "sample space must be non-empty");
  std::unordered_set<std::string_view> seen;
  for (const auto& l : labels_) {
    if (!seen.insert(l).second) {
      fail(Errc::parse_error, "space", "duplicate outcome label '" + l + "'");
    }
  }
}

std::optional<std::size_t> SampleSpace::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return i;
  }
  return std::nullopt;
}

SpacePtr make_space(std::vector<std::string> labels) {
  return std::make_shared<SampleSpace>(std::move(labels));
}

Event::Event(SpacePtr space, std::vector<std::uint64_t> words)
    : space_(std::move(space)), words_(std::move(words)) {}

Event Event::none(SpacePtr space) {
  auto n = space->size();
  return Event(std::move(space), std::vector<std::uint64_t>(word_count(n), 0));
}

Event Event::all(SpacePtr space) {
  const auto n = space->size();
  std::vector<std::uint64_t> words(word_count(n), ~std::uint64_t{0});
  if (n % kWordBits != 0) words.back() = (std::uint64_t{1} << (n % kWordBits)) - 1;
  return Event(std::move(space), std::move(words));
}

Event Event::of_indices(SpacePtr space, std::span<const std::size_t> indices) {
  Event e = none(std::move(space));
  for (auto i : indices) {
    if (i >= e.space_->size()) fail(Errc::parse_error, "space", "outcome index out of range");
    e.words_[i / kWordBits] |= std::uint64_t{1} << (i % kWordBits);
  }
  return e;
}

Event Event::of_labels(SpacePtr space, std::span<const std::string> labels) {
  std::vector<std::size_t> idx;
  idx.reserve(labels.size());
  for (const auto& l : labels) {
    const auto i = space->index_of(l);
    if (!i) fail(Errc::unknown_name, "space", "unknown outcome label '" + l + "'");
    idx.push_back(*i);
  }
  return of_indices(std::move(space), idx);
}

bool Event::contains(std::size_t index) const {
  if (index >= space_->size()) return false;
  return (words_[index / kWordBits] >> (index % kWordBits)) & 1;
}

std::size_t Event::count() const noexcept {
  std::size_t total = 0;
  for (auto w : words_) total += static_cast<std::size_t>(__builtin_popcountll(w));
  return total;
}

bool Event::empty() const noexcept {
  for (auto w : words_) {
    if (w != 0) return false;
  }
  return true;
}

void Event::check_same_space(const Event& o) const {
  if (space_ != o.space_) {
    fail(Errc::space_mismatch, "space", "events belong to different sample spaces");
  }
}

Event Event::operator|(const Event& o) const {
  check_same_space(o);
  auto words = words_;
  for (std::size_t i = 0; i < words.size(); ++i) words[i] |= o.words_[i];
  return Event(space_, std::move(words));
}

Event Event::operator&(const Event& o) const {
  check_same_space(o);
  auto words = words_;
  for (std::size_t i = 0; i < words.size(); ++i) words[i] &= o.words_[i];
  return Event(space_, std::move(words));
}

Event Event::operator-(const Event& o) const {
  check_same_space(o);
  auto words = words_;
  for (std::size_t i = 0; i < words.size(); ++i) words[i] &= ~o.words_[i];
  return Event(space_, std::move(words));
}

Event Event::operator~() const {
  Event full = all(space_);
  for (std::size_t i = 0; i < words_.size(); ++i) full.words_[i] &= ~words_[i];
  return full;
}

bool Event::operator==(const Event& o) const {
  return space_ == o.space_ && words_ == o.words_;
}

bool Event::is_subset_of(const Event& o) const {
  check_same_space(o);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & ~o.words_[i]) return false;
  }
  return true;
}

std::vector<std::string> Event::member_labels() const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < space_->size(); ++i) {
    if (contains(i)) out.push_back(space_->label(i));
  }
  return out;
}

std::size_t SigmaAlgebra::atom_index_of_outcome(std::size_t outcome) const {
  if (outcome >= atom_of_.size()) fail(Errc::internal, "space", "outcome index out of range");
  return atom_of_[outcome];
}

bool SigmaAlgebra::is_measurable(const Event& e) const {
  if (e.space() != space_) {
    fail(Errc::space_mismatch, "space", "event belongs to a different sample space");
  }
  for (const Event& atom : atoms_) {
    const Event overlap = atom & e;
    if (!overlap.empty() && overlap != atom) return false;
  }
  return true;
}

std::uint64_t SigmaAlgebra::event_count() const {
  if (atoms_.size() > 63) {
    fail(Errc::overflow, "space", "too many atoms to count measurable events");
  }
  return std::uint64_t{1} << atoms_.size();
}

class SigmaAlgebraBuilder {
public:
  static AlgebraPtr build(SpacePtr space, std::vector<Event> atoms,
                          std::vector<std::uint32_t> atom_of) {
    auto algebra = std::make_shared<SigmaAlgebra>();
    algebra->space_ = std::move(space);
    algebra->atoms_ = std::move(atoms);
    algebra->atom_of_ = std::move(atom_of);
    return algebra;
  }
};

AlgebraPtr power_set_algebra(SpacePtr space) {
  std::vector<Event> atoms;
  std::vector<std::uint32_t> atom_of(space->size());
  for (std::size_t i = 0; i < space->size(); ++i) {
    const std::size_t idx[] = {i};
    atoms.push_back(Event::of_indices(space, idx));
    atom_of[i] = static_cast<std::uint32_t>(i);
  }
  return SigmaAlgebraBuilder::build(std::move(space), std::move(atoms), std::move(atom_of));
}

AlgebraPtr generate_algebra(SpacePtr space, std::span<const Event> generators) {
  for (const Event& g : generators) {
    if (g.space() != space) {
      fail(Errc::space_mismatch, "space", "generator belongs to a different sample space");
    }
  }
  // Outcomes with the same membership signature across all generators form
  // one atom; ordering follows the first outcome of each signature.
  std::map<std::vector<bool>, std::vector<std::size_t>> groups;
  std::vector<const std::vector<std::size_t>*> ordered;
  for (std::size_t i = 0; i < space->size(); ++i) {
    std::vector<bool> sig;
    sig.reserve(generators.size());
    for (const Event& g : generators) sig.push_back(g.contains(i));
    auto [it, inserted] = groups.emplace(std::move(sig), std::vector<std::size_t>{});
    it->second.push_back(i);
    if (inserted) ordered.push_back(&it->second);
  }
  std::sort(ordered.begin(), ordered.end(),
            [](const auto* a, const auto* b) { return a->front() < b->front(); });

  std::vector<Event> atoms;
  std::vector<std::uint32_t> atom_of(space->size());
  for (const auto* members : ordered) {
    for (auto outcome : *members) {
      atom_of[outcome] = static_cast<std::uint32_t>(atoms.size());
    }
    atoms.push_back(Event::of_indices(space, *members));
  }
  auto algebra = SigmaAlgebraBuilder::build(std::move(space), std::move(atoms), std::move(atom_of));
  for (const Event& g : generators) {
    if (!algebra->is_measurable(g)) {
      fail(Errc::internal, "space", "generated algebra lost a generator");
    }
  }
  return algebra;
}

} // namespace genprob
