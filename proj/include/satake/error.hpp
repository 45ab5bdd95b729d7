#ifndef SATAKE_ERROR_HPP
#define SATAKE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace satake {

// All recoverable failures carry a stable machine-readable code string next
// to the human message.  The CLI maps input-validation codes to exit 2 and
// verification failures to exit 1.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(what), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

namespace errc {
// input / construction problems
inline constexpr const char* not_finite_type   = "not_finite_type";
inline constexpr const char* bad_input         = "bad_input";
inline constexpr const char* non_reduced_word  = "non_reduced_word";
inline constexpr const char* degenerate_line   = "degenerate_line";
inline constexpr const char* non_integral_path = "non_integral_path";
inline constexpr const char* budget_exceeded   = "budget_exceeded";
inline constexpr const char* mismatched_data   = "mismatched_data";
inline constexpr const char* not_invariant     = "not_invariant";
inline constexpr const char* parse_error       = "parse_error";
// math-level failures
inline constexpr const char* axiom_violation   = "axiom_violation";
inline constexpr const char* singular_matrix   = "singular_matrix";
inline constexpr const char* inconsistent_system = "inconsistent_system";
inline constexpr const char* division_failed   = "division_failed";
inline constexpr const char* not_subideal      = "not_subideal";
inline constexpr const char* internal          = "internal_consistency";
inline constexpr const char* checksum_mismatch = "checksum_mismatch";
inline constexpr const char* verification_failed = "verification_failed";
}  // namespace errc

}  // namespace satake

#endif
