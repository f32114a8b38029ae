#include <algorithm>
#include <set>

#include "degembed/errors.hpp"
#include "degembed/sequences.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace degembed;

TEST_SUITE_BEGIN("sequences");

TEST_CASE("is_graphic on the named examples") {
    CHECK(is_graphic(DegreeSequence{2, 2, 2}));
    CHECK_FALSE(is_graphic(DegreeSequence{3, 1}));

    // All 64 labeled graphs on 4 vertices never produce the multiset {3,3,1,1}.
    auto multisets = test_util::graphic_multisets(4);
    CHECK(multisets.count({1, 1, 3, 3}) == 0);
    CHECK_FALSE(is_graphic(DegreeSequence{3, 3, 1, 1}));

    CHECK(is_graphic(DegreeSequence{}));
    CHECK(is_graphic(DegreeSequence{0, 0, 0}));
    CHECK_FALSE(is_graphic(DegreeSequence{-1, 1}));
}

TEST_CASE("is_graphic agrees with full graph enumeration for n <= 7") {
    for (int n = 1; n <= 7; ++n) {
        auto realizable = test_util::graphic_multisets(n);
        test_util::for_each_multiset(n, n - 1, [&](const std::vector<int>& m) {
            CHECK_MESSAGE(is_graphic(DegreeSequence(std::vector<int>(m))) ==
                              (realizable.count(m) > 0),
                          "n=" << n);
        });
    }
}

TEST_CASE("is_graphic agrees with the pairing search for every multiset at n = 8") {
    test_util::for_each_multiset(8, 7, [&](const std::vector<int>& m) {
        DegreeSequence seq{std::vector<int>(m)};
        std::vector<int> desc(m.rbegin(), m.rend());
        const bool graphic = is_graphic(seq);
        CHECK(graphic == test_util::degrees_realizable(desc));
        // The realizer succeeds exactly on the graphic side of the line.
        if (graphic) {
            SimpleGraph g = realize_graphic(seq);
            for (int v = 0; v < 8; ++v) CHECK(g.degree(v) == seq[v]);
        } else {
            CHECK_THROWS_AS(realize_graphic(seq), NotGraphicError);
        }
    });
}

TEST_CASE("realize_graphic on the named examples") {
    SimpleGraph edge = realize_graphic(DegreeSequence{1, 1});
    CHECK(edge.num_edges() == 1);
    CHECK(edge.has_edge(0, 1));

    // (2,2,2,2,2) forces the 5-cycle: 2-regular and connected on 5 vertices.
    SimpleGraph c5 = realize_graphic(DegreeSequence{2, 2, 2, 2, 2});
    CHECK(c5.num_edges() == 5);
    for (int v = 0; v < 5; ++v) CHECK(c5.degree(v) == 2);
    CHECK(c5.connected_components().size() == 1);

    // Enumeration shows {2,2,1,1} is only realized by a path on 4 vertices.
    auto multisets = test_util::graphic_multisets(4);
    CHECK(multisets.count({1, 1, 2, 2}) == 1);
    SimpleGraph p4 = realize_graphic(DegreeSequence{2, 2, 1, 1});
    CHECK(p4.num_edges() == 3);
    CHECK(p4.degree(0) == 2);
    CHECK(p4.degree(1) == 2);
    CHECK(p4.degree(2) == 1);
    CHECK(p4.degree(3) == 1);
    CHECK(p4.connected_components().size() == 1);  // 3 edges + connected = tree = P4

    CHECK_THROWS_AS(realize_graphic(DegreeSequence{3, 1}), NotGraphicError);
}

TEST_CASE("realize_graphic is positional and succeeds exactly on graphic input") {
    for (int n = 1; n <= 7; ++n) {
        test_util::for_each_multiset(n, n - 1, [&](const std::vector<int>& m) {
            DegreeSequence seq{std::vector<int>(m.rbegin(), m.rend())};
            if (is_graphic(seq)) {
                SimpleGraph g = realize_graphic(seq);
                for (int v = 0; v < n; ++v) CHECK(g.degree(v) == seq[v]);
            } else {
                CHECK_THROWS_AS(realize_graphic(seq), NotGraphicError);
            }
        });
    }
}

TEST_CASE("ffactor condition on the named examples") {
    CHECK(ffactor_condition_holds({{0, 0}, {0, 0}}));
    CHECK(ffactor_condition_holds({{2, 2}, {2, 2}}));
    CHECK(ffactor_condition_holds({{3, 3}, {1, 1, 1, 1, 1, 1}}));
    CHECK_NOTHROW(realize_bipartite({{3, 3}, {1, 1, 1, 1, 1, 1}}));
    CHECK(ffactor_condition_holds({{2}, {1, 1}}));          // star demand
    CHECK_FALSE(ffactor_condition_holds({{2}, {1}}));       // sums differ
    CHECK_FALSE(ffactor_condition_holds({{2}, {2}}));       // entry exceeds class size
    CHECK_FALSE(ffactor_condition_holds({{3, 1}, {2, 2}}));
}

TEST_CASE("ffactor condition respects the subset-pair budget") {
    BipartiteDemand big;
    big.side_a.assign(12, 1);
    big.side_b.assign(12, 1);
    CHECK_THROWS_AS(ffactor_condition_holds(big), BudgetExceededError);
}

TEST_CASE("realize_bipartite on the named examples") {
    BipartiteRealization k11 = realize_bipartite({{1}, {1}});
    CHECK(k11.graph.num_edges() == 1);
    CHECK(k11.graph.has_edge(0, 1));

    BipartiteRealization k22 = realize_bipartite({{2, 2}, {2, 2}});
    CHECK(k22.graph.num_edges() == 4);
    for (int v = 0; v < 4; ++v) CHECK(k22.graph.degree(v) == 2);

    CHECK_THROWS_AS(realize_bipartite({{2}, {1}}), NotBigraphicError);  // sums differ
    CHECK_THROWS_AS(realize_bipartite({{2}, {2}}), NotBigraphicError);  // needs a double edge
}

TEST_CASE("realize_bipartite hits the demand exactly, side by side") {
    test_util::TinyRand rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const int s = 1 + rng.below(5), t = 1 + rng.below(5);
        BipartiteDemand d;
        for (int i = 0; i < s; ++i) d.side_a.push_back(rng.below(t + 1));
        for (int j = 0; j < t; ++j) d.side_b.push_back(rng.below(s + 1));
        if (d.sum_a() != d.sum_b()) continue;
        bool holds = ffactor_condition_holds(d);
        try {
            BipartiteRealization r = realize_bipartite(d);
            CHECK(holds);
            for (int i = 0; i < s; ++i) CHECK(r.graph.degree(i) == d.side_a[i]);
            for (int j = 0; j < t; ++j) CHECK(r.graph.degree(s + j) == d.side_b[j]);
            for (auto [u, v] : r.graph.edges()) {
                CHECK(u < s);
                CHECK(v >= s);
            }
        } catch (const NotBigraphicError&) {
            CHECK_FALSE(holds);
        }
    }
}

TEST_CASE("demands with both sides past twice the squared maximum always realize") {
    test_util::TinyRand rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        const int max_deg = 1 + rng.below(3);
        const int floor_size = 2 * max_deg * max_deg;
        const int s = floor_size + rng.below(4);
        const int t = floor_size + rng.below(4);
        BipartiteDemand d;
        long long sa = 0, sb = 0;
        for (int i = 0; i < s; ++i) {
            d.side_a.push_back(1 + rng.below(max_deg));
            sa += d.side_a.back();
        }
        for (int j = 0; j < t; ++j) {
            d.side_b.push_back(1);
            sb += 1;
        }
        // Repair the B side to the same sum without breaching the bound.
        int excess = static_cast<int>(sa - sb);
        for (int j = 0; j < t && excess > 0; ++j) {
            const int add = std::min(excess, max_deg - d.side_b[j]);
            d.side_b[j] += add;
            excess -= add;
        }
        if (excess != 0) continue;  // could not match sums within the bound
        CHECK_NOTHROW(realize_bipartite(d));
    }
}

TEST_CASE("zero_sum_split on the named examples") {
    auto groups = zero_sum_split({{1, -1, 1, -1}, 1});
    CHECK(groups.size() == 2);
    for (const auto& g : groups) {
        int sum = 0;
        for (int i : g) sum += std::vector<int>{1, -1, 1, -1}[i];
        CHECK(sum == 0);
        CHECK(g.size() <= 2);
    }

    auto zeros = zero_sum_split({{0, 0, 0}, 3});
    CHECK(zeros.size() == 3);
    for (const auto& g : zeros) CHECK(g.size() == 1);

    std::vector<int> values{2, 2, -1, -1, -2, -2, 1, 1};
    auto mixed = zero_sum_split({values, 2});
    std::set<int> seen;
    for (const auto& g : mixed) {
        int sum = 0;
        for (int i : g) {
            sum += values[i];
            CHECK(seen.insert(i).second);
        }
        CHECK(sum == 0);
        CHECK(g.size() <= 4);
    }
    CHECK(seen.size() == values.size());

    CHECK_THROWS_AS(zero_sum_split({{1, 1}, 1}), NotZeroSumError);
    CHECK(zero_sum_split({{}, 1}).empty());
}

TEST_CASE("zero_sum_split invariants on random zero-sum sequences") {
    test_util::TinyRand rng(23);
    for (int trial = 0; trial < 60; ++trial) {
        const int bound = 1 + rng.below(6);
        const int pairs = 1 + rng.below(20);
        std::vector<int> values;
        for (int i = 0; i < pairs; ++i) {
            const int v = 1 + rng.below(bound);
            values.push_back(v);
            values.push_back(-v);
        }
        for (int i = static_cast<int>(values.size()) - 1; i > 0; --i) {
            std::swap(values[i], values[rng.below(i + 1)]);
        }
        auto groups = zero_sum_split({values, bound});
        std::vector<char> covered(values.size(), 0);
        for (const auto& g : groups) {
            int sum = 0;
            for (int i : g) {
                sum += values[i];
                CHECK_FALSE(covered[i]);
                covered[i] = 1;
            }
            CHECK(sum == 0);
            CHECK(static_cast<int>(g.size()) <= 2 * bound);
        }
        CHECK(std::count(covered.begin(), covered.end(), 0) == 0);
    }
}

TEST_SUITE_END();
