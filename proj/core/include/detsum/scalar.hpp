#pragma once

/**
 * @file scalar.hpp
 * @brief Exact field arithmetic: Gaussian rationals and prime fields.
 *
 * Two carriers, one value type:
 *  - GaussianRational: re + im*i with arbitrary-precision rational parts
 *    (exact subfield of the complex numbers; both sides of every identity
 *    in this library are rational functions with rational coefficients,
 *    so this carrier is lossless).
 *  - PrimeField: residues mod a prime p < 2^62, for fast large-horizon
 *    identity testing.
 *
 * Equality is exact everywhere; there is no tolerance anywhere in the
 * library. Mixing variants or moduli throws.
 */

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "detsum/errors.hpp"

namespace detsum {

enum class Domain { gaussian_rational, prime_field };

std::string to_string(Domain d);
Domain domain_from_string(const std::string& s);

class ExactScalar {
public:
    struct Gaussian {
        mpq_class re;
        mpq_class im;
    };
    struct Residue {
        std::uint64_t value;
        std::uint64_t modulus;
    };

    // Default: Gaussian rational zero.
    ExactScalar() : rep_(Gaussian{0, 0}) {}

    static ExactScalar integer(long v) { return ExactScalar(Gaussian{mpq_class(v), 0}); }
    static ExactScalar rational(long num, long den);
    static ExactScalar gaussian(mpq_class re, mpq_class im);
    static ExactScalar residue(std::uint64_t v, std::uint64_t p);

    Domain domain() const {
        return std::holds_alternative<Gaussian>(rep_) ? Domain::gaussian_rational
                                                      : Domain::prime_field;
    }
    bool is_gaussian() const { return std::holds_alternative<Gaussian>(rep_); }
    std::uint64_t modulus() const;

    const Gaussian& gaussian_parts() const;
    std::uint64_t residue_value() const;

    // Additive/multiplicative identities of the same variant and modulus.
    ExactScalar zero() const;
    ExactScalar one() const;

    /// The integer v carried into this value's variant and modulus.
    ExactScalar from_integer(std::int64_t v) const;

    bool is_zero() const;
    bool is_one() const;

    ExactScalar operator+(const ExactScalar& rhs) const;
    ExactScalar operator-(const ExactScalar& rhs) const;
    ExactScalar operator*(const ExactScalar& rhs) const;
    ExactScalar operator/(const ExactScalar& rhs) const;
    ExactScalar operator-() const;

    ExactScalar& operator+=(const ExactScalar& rhs) { return *this = *this + rhs; }
    ExactScalar& operator-=(const ExactScalar& rhs) { return *this = *this - rhs; }
    ExactScalar& operator*=(const ExactScalar& rhs) { return *this = *this * rhs; }
    ExactScalar& operator/=(const ExactScalar& rhs) { return *this = *this / rhs; }

    ExactScalar inverse() const { return one() / *this; }

    bool operator==(const ExactScalar& rhs) const;
    bool operator!=(const ExactScalar& rhs) const { return !(*this == rhs); }

    /// Report encoding: "num/den", "re+im*i" / "re-im*i", or "v mod p".
    std::string str() const;

private:
    explicit ExactScalar(Gaussian g) : rep_(std::move(g)) {}
    explicit ExactScalar(Residue r) : rep_(r) {}

    const Gaussian& g() const { return std::get<Gaussian>(rep_); }
    const Residue& r() const { return std::get<Residue>(rep_); }

    void require_compatible(const ExactScalar& rhs) const;

    std::variant<Gaussian, Residue> rep_;
};

enum class ArithOp { add, sub, mul, div };

/// Dispatch form of the four field operations (same checks as the operators).
ExactScalar arith(const ExactScalar& x, const ExactScalar& y, ArithOp op);

/// x^e by binary exponentiation; pow(x, 0) == 1 for every x, including 0.
ExactScalar pow(const ExactScalar& x, std::uint64_t e);

/// Evaluation point (a_1, ..., a_n), all entries from one carrier.
struct EvalPoint {
    std::vector<ExactScalar> values;
    bool admissible = false;

    int size() const { return static_cast<int>(values.size()); }
    const ExactScalar& operator[](int k_one_based) const;

    ExactScalar scalar_one() const { return values.at(0).one(); }
    ExactScalar scalar_zero() const { return values.at(0).zero(); }

    std::string str() const;
};

/// Builds a point and computes its admissibility flag.
EvalPoint make_eval_point(std::vector<ExactScalar> values);

/// Every violated admissibility constraint, in a fixed order; empty means
/// admissible. Admissible <=> a_k not in {0,1}, a_i*a_j != 1 for all
/// i <= j, and no nonempty-subset product equals 1.
std::vector<std::string> admissibility_violations(const std::vector<ExactScalar>& values);

/// The constraints rhs_closed / gamma actually divide by: a_k not in {0,1}
/// and a_i*a_j != 1 for i < j. Subset-product freedom is not required here.
std::vector<std::string> pole_violations_closed_form(const std::vector<ExactScalar>& values);

struct SampleOptions {
    std::uint64_t modulus = 0;     // required for prime_field
    int max_retries = 10000;
};

/// Deterministic rejection sampler. Returned points are admissible and have
/// pairwise-distinct values. Gaussian components are +/- num/den with
/// num, den in [2, 17]. Throws ExhaustedRetries after max_retries attempts.
EvalPoint sample_admissible(int n, Domain domain, std::uint64_t seed,
                            const SampleOptions& opts = {});

} // namespace detsum
