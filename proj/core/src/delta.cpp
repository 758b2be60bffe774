#include "detsum/delta.hpp"

namespace detsum {

ExactScalar vandermonde_delta(const SubsetMask& J, const EvalPoint& a) {
    if (J.n != a.size()) throw IndexOutOfRange("subset universe != point size");
    const std::vector<int> elems = J.elements();
    ExactScalar prod = a.scalar_one();
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (std::size_t j = i + 1; j < elems.size(); ++j)
            prod *= a[elems[j]] - a[elems[i]];
    return prod;
}

ExactScalar power_delta(const ExponentSeq& m, const SubsetMask& J, const EvalPoint& a) {
    if (J.n != a.size()) throw IndexOutOfRange("subset universe != point size");
    if (static_cast<int>(m.size()) != J.size())
        throw DimensionMismatch("exponent count " + std::to_string(m.size()) +
                                " != |J| = " + std::to_string(J.size()));
    for (int e : m)
        if (e < 0) throw ParameterRangeError("negative exponent in power determinant");
    const std::vector<int> elems = J.elements();
    const int k = static_cast<int>(elems.size());
    Matrix mat(k, k, a.scalar_zero());
    for (int r = 0; r < k; ++r)
        for (int c = 0; c < k; ++c)
            mat.at(r, c) = pow(a[elems[r]], static_cast<std::uint64_t>(m[c]));
    return determinant(mat);
}

bool laplace_split_check(const ExponentSeq& m, int k, const EvalPoint& a) {
    const int n = a.size();
    if (static_cast<int>(m.size()) != n)
        throw DimensionMismatch("exponent count != n");
    if (k < 0 || k > n) throw DimensionMismatch("split k outside [0, n]");

    const ExactScalar lhs = power_delta(m, SubsetMask::full(n), a);

    const ExponentSeq head(m.begin(), m.begin() + k);
    const ExponentSeq tail(m.begin() + k, m.end());
    ExactScalar sum = a.scalar_zero();
    for_each_subset_of_size(n, k, [&](const SubsetMask& I) {
        ExactScalar term = power_delta(head, I, a) * power_delta(tail, I.complement(), a);
        if (nu(I) % 2) term = -term;
        sum += term;
    });
    if ((long(k) * (k + 1) / 2) % 2) sum = -sum;
    return lhs == sum;
}

} // namespace detsum
