#ifndef GENPROB_ERRORS_HPP
#define GENPROB_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace genprob {

/// Error taxonomy shared by the whole library. The CLI maps these to exit
/// codes: parse/usage problems exit 2, every other domain error exits 1.
enum class Errc {
  capability_missing,
  division_by_zero,
  zero_condition,
  empty_intersection,
  not_normalized,
  negative_weight,
  not_measurable,
  space_mismatch,
  not_a_partition,
  unresolvable_term,
  overlapping_terms,
  negative_value,
  unknown_name,
  parse_error,
  overflow,
  internal,
};

std::string_view errc_name(Errc code);

class Error : public std::runtime_error {
public:
  Error(Errc code, std::string module, const std::string& what)
      : std::runtime_error(what), code_(code), module_(std::move(module)) {}

  Errc code() const noexcept { return code_; }
  const std::string& module() const noexcept { return module_; }

private:
  Errc code_;
  std::string module_;
};

[[noreturn]] inline void fail(Errc code, std::string module, const std::string& what) {
  throw Error(code, std::move(module), what);
}

} // namespace genprob

#endif // GENPROB_ERRORS_HPP
