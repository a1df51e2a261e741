#ifndef SKEWLOG_EVAL_RESULT_HPP
#define SKEWLOG_EVAL_RESULT_HPP

#include <cstddef>
#include <string_view>

namespace skewlog {

enum class EvalStatus { Converged, MaxTerms, DivergentInput };

constexpr std::string_view to_string(EvalStatus s) noexcept
{
    switch (s) {
    case EvalStatus::Converged: return "CONVERGED";
    case EvalStatus::MaxTerms: return "MAX_TERMS";
    case EvalStatus::DivergentInput: return "DIVERGENT_INPUT";
    }
    return "?";
}

// Output of every truncated or adaptive evaluation. error_bound bounds
// |value - exact| under the tail model of the routine that produced it;
// terms_used counts series terms or integrand evaluations.
struct EvalResult {
    double value = 0.0;
    double error_bound = 0.0;
    std::size_t terms_used = 0;
    EvalStatus status = EvalStatus::Converged;

    bool converged() const noexcept { return status == EvalStatus::Converged; }
};

} // namespace skewlog

#endif
