#ifndef SKEWLOG_CLI_HPP
#define SKEWLOG_CLI_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace skewlog::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFail = 1;  // at least one FAIL record
inline constexpr int kExitUsage = 2; // malformed flags, unknown target, domain error

// Runs one command. args excludes the program name. max_terms_env is the
// raw value of SKEWLOG_MAX_TERMS, if set.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const std::optional<std::string>& max_terms_env = std::nullopt);

// Targets accepted by `eval`, sorted.
const std::vector<std::string>& eval_targets();

} // namespace skewlog::cli

#endif
