#include "detsum/scalar.hpp"

#include <algorithm>

#include "detsum/prng.hpp"

namespace detsum {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(u128(a) * b % p); }

u64 addmod(u64 a, u64 b, u64 p) {
    u64 s = a + b;   // p < 2^62, so no overflow
    return s >= p ? s - p : s;
}

u64 submod(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }

u64 powmod(u64 base, u64 e, u64 p) {
    u64 acc = 1 % p;
    while (e) {
        if (e & 1) acc = mulmod(acc, base, p);
        base = mulmod(base, base, p);
        e >>= 1;
    }
    return acc;
}

u64 invmod(u64 a, u64 p) {
    if (a == 0) throw DivisionByZero("inverse of 0 mod " + std::to_string(p));
    return powmod(a, p - 2, p);   // p prime
}

std::string mpq_str(const mpq_class& q) { return q.get_str(); }

} // namespace

std::string to_string(Domain d) {
    return d == Domain::gaussian_rational ? "gauss-rational" : "gf";
}

Domain domain_from_string(const std::string& s) {
    if (s == "gauss-rational") return Domain::gaussian_rational;
    if (s == "gf") return Domain::prime_field;
    throw ConfigError("unknown domain '" + s + "' (expected gauss-rational or gf)");
}

ExactScalar ExactScalar::rational(long num, long den) {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return ExactScalar(Gaussian{q, 0});
}

ExactScalar ExactScalar::gaussian(mpq_class re, mpq_class im) {
    re.canonicalize();
    im.canonicalize();
    return ExactScalar(Gaussian{std::move(re), std::move(im)});
}

ExactScalar ExactScalar::residue(std::uint64_t v, std::uint64_t p) {
    if (p < 2 || p >= (1ULL << 62))
        throw ParameterRangeError("prime-field modulus must be in [2, 2^62)");
    return ExactScalar(Residue{v % p, p});
}

std::uint64_t ExactScalar::modulus() const {
    if (is_gaussian()) throw VariantMismatch("modulus() on a Gaussian rational");
    return r().modulus;
}

const ExactScalar::Gaussian& ExactScalar::gaussian_parts() const {
    if (!is_gaussian()) throw VariantMismatch("gaussian_parts() on a prime-field value");
    return g();
}

std::uint64_t ExactScalar::residue_value() const {
    if (is_gaussian()) throw VariantMismatch("residue_value() on a Gaussian rational");
    return r().value;
}

ExactScalar ExactScalar::zero() const {
    if (is_gaussian()) return ExactScalar(Gaussian{0, 0});
    return ExactScalar(Residue{0, r().modulus});
}

ExactScalar ExactScalar::one() const {
    if (is_gaussian()) return ExactScalar(Gaussian{1, 0});
    return ExactScalar(Residue{1, r().modulus});
}

ExactScalar ExactScalar::from_integer(std::int64_t v) const {
    if (is_gaussian()) return ExactScalar(Gaussian{mpq_class(static_cast<long>(v)), 0});
    const u64 p = r().modulus;
    u64 m = static_cast<u64>(v >= 0 ? v : -v) % p;
    if (v < 0 && m) m = p - m;
    return ExactScalar(Residue{m, p});
}

bool ExactScalar::is_zero() const {
    if (is_gaussian()) return g().re == 0 && g().im == 0;
    return r().value == 0;
}

bool ExactScalar::is_one() const {
    if (is_gaussian()) return g().re == 1 && g().im == 0;
    return r().value == 1;
}

void ExactScalar::require_compatible(const ExactScalar& rhs) const {
    if (is_gaussian() != rhs.is_gaussian())
        throw VariantMismatch("mixed Gaussian-rational and prime-field operands");
    if (!is_gaussian() && r().modulus != rhs.r().modulus)
        throw ModulusMismatch("mixed moduli " + std::to_string(r().modulus) + " and " +
                              std::to_string(rhs.r().modulus));
}

ExactScalar ExactScalar::operator+(const ExactScalar& rhs) const {
    require_compatible(rhs);
    if (is_gaussian())
        return ExactScalar(Gaussian{g().re + rhs.g().re, g().im + rhs.g().im});
    return ExactScalar(Residue{addmod(r().value, rhs.r().value, r().modulus), r().modulus});
}

ExactScalar ExactScalar::operator-(const ExactScalar& rhs) const {
    require_compatible(rhs);
    if (is_gaussian())
        return ExactScalar(Gaussian{g().re - rhs.g().re, g().im - rhs.g().im});
    return ExactScalar(Residue{submod(r().value, rhs.r().value, r().modulus), r().modulus});
}

ExactScalar ExactScalar::operator*(const ExactScalar& rhs) const {
    require_compatible(rhs);
    if (is_gaussian()) {
        const Gaussian& a = g();
        const Gaussian& b = rhs.g();
        return ExactScalar(Gaussian{a.re * b.re - a.im * b.im,
                                    a.re * b.im + a.im * b.re});
    }
    return ExactScalar(Residue{mulmod(r().value, rhs.r().value, r().modulus), r().modulus});
}

ExactScalar ExactScalar::operator/(const ExactScalar& rhs) const {
    require_compatible(rhs);
    if (rhs.is_zero()) throw DivisionByZero("division by zero scalar");
    if (is_gaussian()) {
        const Gaussian& a = g();
        const Gaussian& b = rhs.g();
        mpq_class norm = b.re * b.re + b.im * b.im;
        return ExactScalar(Gaussian{(a.re * b.re + a.im * b.im) / norm,
                                    (a.im * b.re - a.re * b.im) / norm});
    }
    u64 p = r().modulus;
    return ExactScalar(Residue{mulmod(r().value, invmod(rhs.r().value, p), p), p});
}

ExactScalar ExactScalar::operator-() const {
    if (is_gaussian()) return ExactScalar(Gaussian{-g().re, -g().im});
    return ExactScalar(Residue{r().value == 0 ? 0 : r().modulus - r().value, r().modulus});
}

bool ExactScalar::operator==(const ExactScalar& rhs) const {
    require_compatible(rhs);
    if (is_gaussian()) return g().re == rhs.g().re && g().im == rhs.g().im;
    return r().value == rhs.r().value;
}

std::string ExactScalar::str() const {
    if (!is_gaussian())
        return std::to_string(r().value) + " mod " + std::to_string(r().modulus);
    const Gaussian& v = g();
    if (v.im == 0) return mpq_str(v.re);
    mpq_class mag = abs(v.im);
    return mpq_str(v.re) + (v.im < 0 ? "-" : "+") + mpq_str(mag) + "*i";
}

ExactScalar arith(const ExactScalar& x, const ExactScalar& y, ArithOp op) {
    switch (op) {
        case ArithOp::add: return x + y;
        case ArithOp::sub: return x - y;
        case ArithOp::mul: return x * y;
        case ArithOp::div: return x / y;
    }
    throw Error("unreachable arith op");
}

ExactScalar pow(const ExactScalar& x, std::uint64_t e) {
    if (!x.is_gaussian()) {
        u64 p = x.modulus();
        return ExactScalar::residue(powmod(x.residue_value(), e, p), p);
    }
    ExactScalar acc = x.one();
    ExactScalar base = x;
    while (e) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

const ExactScalar& EvalPoint::operator[](int k_one_based) const {
    if (k_one_based < 1 || k_one_based > size())
        throw IndexOutOfRange("EvalPoint index " + std::to_string(k_one_based) +
                              " outside [1, " + std::to_string(size()) + "]");
    return values[static_cast<std::size_t>(k_one_based - 1)];
}

std::string EvalPoint::str() const {
    std::string s = "(";
    for (int k = 1; k <= size(); ++k) {
        if (k > 1) s += ", ";
        s += (*this)[k].str();
    }
    return s + ")";
}

std::vector<std::string> admissibility_violations(const std::vector<ExactScalar>& values) {
    std::vector<std::string> out = pole_violations_closed_form(values);
    const int n = static_cast<int>(values.size());
    if (n == 0) return out;
    const ExactScalar one = values[0].one();
    for (int k = 0; k < n; ++k)
        if (values[k] * values[k] == one)
            out.push_back("a_" + std::to_string(k + 1) + "^2 = 1");
    // Subset products: intermediate sums in the first-summation reduction
    // divide by prod_{j in J} a_j - 1.
    std::vector<ExactScalar> prod(std::size_t(1) << n, one);
    for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << n); ++mask) {
        const int low = __builtin_ctzll(mask);
        prod[mask] = prod[mask & (mask - 1)] * values[low];
        // Singleton masks are covered by the a_k = 1 report above.
        if (__builtin_popcountll(mask) >= 2 && prod[mask] == one) {
            std::string js;
            for (int j = 0; j < n; ++j)
                if (mask >> j & 1) js += (js.empty() ? "" : ",") + std::to_string(j + 1);
            out.push_back("prod over {" + js + "} = 1");
        }
    }
    return out;
}

std::vector<std::string> pole_violations_closed_form(const std::vector<ExactScalar>& values) {
    std::vector<std::string> out;
    const int n = static_cast<int>(values.size());
    if (n == 0) return out;
    const ExactScalar one = values[0].one();
    for (int k = 0; k < n; ++k) {
        if (values[k].is_zero()) out.push_back("a_" + std::to_string(k + 1) + " = 0");
        if (values[k].is_one()) out.push_back("a_" + std::to_string(k + 1) + " = 1");
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (values[i] * values[j] == one)
                out.push_back("a_" + std::to_string(i + 1) + "*a_" +
                              std::to_string(j + 1) + " = 1");
    return out;
}

EvalPoint make_eval_point(std::vector<ExactScalar> values) {
    if (values.empty()) throw ParameterRangeError("EvalPoint must have n >= 1");
    for (std::size_t i = 1; i < values.size(); ++i) {
        if (values[i].is_gaussian() != values[0].is_gaussian())
            throw VariantMismatch("EvalPoint mixes carriers");
        if (!values[0].is_gaussian() && values[i].modulus() != values[0].modulus())
            throw ModulusMismatch("EvalPoint mixes moduli");
    }
    EvalPoint pt;
    pt.admissible = admissibility_violations(values).empty();
    pt.values = std::move(values);
    return pt;
}

namespace {

bool pairwise_distinct(const std::vector<ExactScalar>& v) {
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j)
            if (v[i] == v[j]) return false;
    return true;
}

std::vector<ExactScalar> draw_gaussian(int n, SplitMix64& gen) {
    std::vector<ExactScalar> vals;
    vals.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        // num, den in [2, 17]: 16 choices each, so masking is unbiased.
        long rn = 2 + long(gen.next() & 15), rd = 2 + long(gen.next() & 15);
        long in = 2 + long(gen.next() & 15), id = 2 + long(gen.next() & 15);
        mpq_class re(gen.coin() ? rn : -rn, rd);
        mpq_class im(gen.coin() ? in : -in, id);
        re.canonicalize();
        im.canonicalize();
        vals.push_back(ExactScalar::gaussian(re, im));
    }
    return vals;
}

std::vector<ExactScalar> draw_prime_field(int n, std::uint64_t p, SplitMix64& gen) {
    std::vector<ExactScalar> vals;
    vals.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k)
        vals.push_back(ExactScalar::residue(2 + gen.below(p - 2), p));
    return vals;
}

} // namespace

EvalPoint sample_admissible(int n, Domain domain, std::uint64_t seed,
                            const SampleOptions& opts) {
    if (n < 1) throw ParameterRangeError("sample_admissible: n must be >= 1");
    if (n > 62) throw ParameterRangeError("sample_admissible: n must be <= 62");
    if (domain == Domain::prime_field) {
        if (opts.modulus == 0)
            throw ParameterRangeError("sample_admissible: prime-field modulus required");
        if (opts.modulus <= 2ULL * std::uint64_t(n) * std::uint64_t(n))
            throw ParameterRangeError("sample_admissible: need p > 2n^2");
    }
    SplitMix64 gen(seed);
    for (int attempt = 0; attempt < opts.max_retries; ++attempt) {
        std::vector<ExactScalar> vals =
            domain == Domain::gaussian_rational ? draw_gaussian(n, gen)
                                                : draw_prime_field(n, opts.modulus, gen);
        if (!pairwise_distinct(vals)) continue;
        if (!admissibility_violations(vals).empty()) continue;
        EvalPoint pt;
        pt.values = std::move(vals);
        pt.admissible = true;
        return pt;
    }
    throw ExhaustedRetries("sample_admissible: no admissible point after " +
                           std::to_string(opts.max_retries) + " attempts");
}

} // namespace detsum
