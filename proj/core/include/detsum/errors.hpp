#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace detsum {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error { using Error::Error; };
struct ModulusMismatch : Error { using Error::Error; };
struct VariantMismatch : Error { using Error::Error; };
struct NotSquare : Error { using Error::Error; };
struct IndexOutOfRange : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };
struct LengthMismatch : Error { using Error::Error; };
struct DegreeOutOfRange : Error { using Error::Error; };
struct WorkloadGuardExceeded : Error { using Error::Error; };
struct ExhaustedRetries : Error { using Error::Error; };
struct ParameterRangeError : Error { using Error::Error; };
struct EntryNotPresent : Error { using Error::Error; };
struct WeightOutOfRange : Error { using Error::Error; };
struct PreconditionViolated : Error { using Error::Error; };
struct ConfigError : Error { using Error::Error; };

// Thrown when an evaluation point sits on a denominator of the closed form.
// Carries every violated constraint, not just the first one found.
struct PoleError : Error {
    std::vector<std::string> violations;
    explicit PoleError(std::vector<std::string> v)
        : Error(join(v)), violations(std::move(v)) {}

private:
    static std::string join(const std::vector<std::string>& v) {
        std::string s = "pole constraints violated:";
        for (const auto& x : v) { s += ' '; s += x; s += ';'; }
        return s;
    }
};

} // namespace detsum
