#include "detsum/fixtures.hpp"

namespace detsum::fixtures {

const std::vector<SignedSeq>& example1_expansion() {
    static const std::vector<SignedSeq> terms = {
        {+1, {4, 4, 4}},
        {-1, {3, 4, 4}},
        {+1, {3, 3, 4}}, {+1, {2, 4, 4}},
        {-1, {3, 3, 3}}, {-1, {2, 3, 4}}, {-1, {1, 4, 4}},
        {+1, {2, 3, 3}}, {+1, {2, 2, 4}}, {+1, {1, 3, 4}}, {+1, {0, 4, 4}},
        {-1, {2, 2, 3}}, {-1, {1, 3, 3}}, {-1, {1, 2, 4}}, {-1, {0, 3, 4}},
        {+1, {2, 2, 2}}, {+1, {1, 2, 3}}, {+1, {0, 3, 3}}, {+1, {1, 1, 4}}, {+1, {0, 2, 4}},
        {-1, {1, 2, 2}}, {-1, {1, 1, 3}}, {-1, {0, 2, 3}}, {-1, {0, 1, 4}},
        {+1, {1, 1, 2}}, {+1, {0, 2, 2}}, {+1, {0, 1, 3}}, {+1, {0, 0, 4}},
        {-1, {1, 1, 1}}, {-1, {0, 1, 2}}, {-1, {0, 0, 3}},
        {+1, {0, 1, 1}}, {+1, {0, 0, 2}},
        {-1, {0, 0, 1}},
        {+1, {0, 0, 0}},
    };
    return terms;
}

const std::vector<std::vector<int>>& example2_labels() {
    static const std::vector<std::vector<int>> labels = {
        {2, 2, 2}, {1, 2, 3}, {0, 3, 3}, {1, 1, 4}, {0, 2, 4},
    };
    return labels;
}

const std::vector<std::vector<int>>& example2_r_matrix() {
    static const std::vector<std::vector<int>> rows = {
        {1, 2, 1, 1, 3},
        {0, 1, 1, 1, 2},
        {0, 0, 1, 0, 1},
        {0, 0, 0, 1, 1},
        {0, 0, 0, 0, 1},
    };
    return rows;
}

const std::vector<RecursionEntry>& example3_recursion() {
    static const std::vector<RecursionEntry> entries = {
        {{2, 2, 2}, 3},
        {{1, 2, 3}, 2},
        {{0, 3, 3}, 1},
        {{1, 1, 4}, 1},
        {{0, 2, 4}, 1},
    };
    return entries;
}

const std::vector<CancelTermFixture>& example3_cancellation() {
    static const std::vector<CancelTermFixture> terms = {
        {3, {1, 3, 5}, -1},
        {3, {2, 3, 4}, -1},
        {2, {1, 2, 6}, -1},
        {2, {2, 3, 4}, +1},
        {1, {1, 2, 6}, +1},
        {1, {1, 3, 5}, +1},
    };
    return terms;
}

const std::vector<int>& example3_degenerate_raw() {
    static const std::vector<int> raw = {4, 1, 4};
    return raw;
}

const PhiFixture& phi_10_4() {
    static const PhiFixture f = {{0, 3, 3, 5}, {0, 1, 1, 3, 3, 3}};
    return f;
}

const BeadStepFixture& bead_step_10_4() {
    static const BeadStepFixture f = {
        {0, 3, 3, 5}, 3, {1, 3, 5, 5}, {0, 2, 2, 3, 3, 4}};
    return f;
}

} // namespace detsum::fixtures
