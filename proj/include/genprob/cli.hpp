#ifndef GENPROB_CLI_HPP
#define GENPROB_CLI_HPP

#include <iosfwd>
#include <string>

#include "genprob/model.hpp"

namespace genprob {

/// Exit codes: 0 all good, 1 domain/validation error, 2 usage/parse error.
int exit_code_for(Errc code);

/// Evaluates one query against a loaded model and prints the result lines.
/// Grammar (names refer to the model's events/variables; inline events and
/// value sets are written {a,b}):
///   prob E | cond A given B | bayes B given A | total A over H1,H2,...
///   union A B | complement A | independent A B
///   dist X in {v,...} | joint X in {v,...} Y in {v,...} | expect X
///   cdist X in {v,...} given Y in {v,...}
void run_query(const Model& model, const std::string& query, std::ostream& out);

/// Law checks plus measure-axiom validation; returns the exit code.
int run_check(const Model& model, int samples, std::uint64_t seed, std::ostream& out);

/// Full command-line driver behind the `genprob` binary.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace genprob

#endif // GENPROB_CLI_HPP
