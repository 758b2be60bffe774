#include "detsum/upseq.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace detsum {

UpSeq::UpSeq(std::vector<int> e, int bound_) : entries(std::move(e)), bound(bound_) {
    if (bound < 0) throw ParameterRangeError("UpSeq bound must be >= 0");
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (entries[i] < 0 || entries[i] > bound)
            throw ParameterRangeError("UpSeq entry " + std::to_string(entries[i]) +
                                      " outside [0, " + std::to_string(bound) + "]");
        if (i > 0 && entries[i] < entries[i - 1])
            throw ParameterRangeError("UpSeq entries must be nondecreasing");
    }
}

long UpSeq::weight() const {
    return std::accumulate(entries.begin(), entries.end(), 0L);
}

std::string UpSeq::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(entries[i]);
    }
    return s + ")";
}

std::strong_ordering lex_compare(const UpSeq& x, const UpSeq& y) {
    if (x.size() != y.size())
        throw LengthMismatch("lex_compare on sequences of different length");
    for (int r = x.size() - 1; r >= 0; --r) {
        if (x.entries[r] != y.entries[r])
            return x.entries[r] <=> y.entries[r];
    }
    return std::strong_ordering::equal;
}

UpSeq phi(const UpSeq& n) {
    std::vector<int> rows(n.bound);
    for (int j = 1; j <= n.bound; ++j) {
        int count = 0;
        for (int e : n.entries)
            if (e > n.bound - j) ++count;
        rows[j - 1] = count;
    }
    return UpSeq(std::move(rows), n.size());
}

ExponentSeq tilde(const UpSeq& m) {
    ExponentSeq out(m.entries.begin(), m.entries.end());
    for (std::size_t r = 0; r < out.size(); ++r) out[r] += static_cast<int>(r);
    return out;
}

ExponentSeq psi(const UpSeq& m) { return tilde(phi(m)); }

std::vector<UpSeq> upseqs_of_weight(int k, int bound, long p) {
    if (k < 0 || bound < 0) throw ParameterRangeError("upseqs_of_weight: negative shape");
    std::vector<UpSeq> out;
    if (p < 0 || p > long(k) * bound) return out;
    std::vector<int> cur(k);
    std::function<void(int, int, long)> rec = [&](int pos, int minv, long rem) {
        if (pos == k) {
            if (rem == 0) out.emplace_back(cur, bound);
            return;
        }
        const int slots = k - pos;
        for (int v = minv; v <= bound; ++v) {
            const long lo = long(v) * slots;              // all remaining at v
            const long hi = long(v) + long(bound) * (slots - 1);
            if (rem < lo || rem > hi) continue;
            cur[pos] = v;
            rec(pos + 1, v, rem - v);
        }
    };
    rec(0, 0, p);
    std::sort(out.begin(), out.end(), UpSeqLexLess{});
    return out;
}

std::string BeadDiagram::ascii() const {
    const int k = columns.size();
    const int height = columns.bound;
    const UpSeq rows = row_counts();
    std::string s;
    for (int j = height; j >= 1; --j) {
        for (int i = 0; i < k; ++i)
            s += columns.entries[i] >= height - j + 1 ? " *" : " .";
        s += "   phi_" + std::to_string(j) + " = " +
             std::to_string(rows.entries[j - 1]) + "\n";
    }
    s += "n =";
    for (int e : columns.entries) s += ' ' + std::to_string(e);
    s += '\n';
    return s;
}

} // namespace detsum
