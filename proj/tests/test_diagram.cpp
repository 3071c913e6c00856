#include "schubert/diagram.hpp"

#include <doctest.h>

#include <stdexcept>
#include <vector>

using namespace schubert;

namespace {

Permutation perm(const char* text) { return Permutation::parse(text); }

BoxSet boxes(std::vector<Box> list) { return BoxSet(std::move(list)); }

} // namespace

TEST_CASE("BoxSet keeps boxes sorted row-major without duplicates") {
    const BoxSet s = boxes({{2, 1}, {1, 2}, {1, 1}, {2, 1}});
    REQUIRE(s.size() == 3);
    CHECK(s.boxes() == std::vector<Box>{{1, 1}, {1, 2}, {2, 1}});
    CHECK(s.contains({1, 2}));
    CHECK_FALSE(s.contains({2, 2}));
    CHECK(boxes({{1, 1}}).subset_of(s));
    CHECK_FALSE(s.subset_of(boxes({{1, 1}})));
    CHECK(BoxSet().empty());
}

TEST_CASE("row_lengths and is_young_diagram recognize partition shapes") {
    const BoxSet young = boxes({{1, 1}, {1, 2}, {1, 3}, {2, 1}, {2, 2}, {3, 1}});
    CHECK(row_lengths(young, 3) == std::vector<int>{3, 2, 1});
    CHECK(is_young_diagram(young));
    CHECK(is_young_diagram(BoxSet()));

    CHECK_FALSE(is_young_diagram(boxes({{1, 2}})));          // not left-justified
    CHECK_FALSE(is_young_diagram(boxes({{1, 1}, {2, 1}, {2, 2}}))); // row lengths increase
    CHECK_FALSE(is_young_diagram(boxes({{2, 1}})));          // row 1 empty
}

TEST_CASE("rank_matrix counts dots in northwest submatrices") {
    const RankMatrix id2 = rank_matrix(Permutation::identity(), 2);
    CHECK(id2.at(1, 1) == 1);
    CHECK(id2.at(1, 2) == 1);
    CHECK(id2.at(2, 1) == 1);
    CHECK(id2.at(2, 2) == 2);

    const RankMatrix r = rank_matrix(perm("25314"), 5);
    CHECK(r.at(3, 1) == 0);
    CHECK(r.at(2, 4) == 1);
    CHECK(r.at(5, 5) == 5);

    CHECK(rank_matrix(perm("132"), 3).at(2, 2) == 1);

    CHECK_THROWS_AS(rank_matrix(perm("25314"), 4), std::invalid_argument);
}

TEST_CASE("rank_at agrees with the full matrix") {
    for (const Permutation& w : all_permutations(4)) {
        const RankMatrix r = rank_matrix(w, 4);
        for (int i = 1; i <= 4; ++i) {
            for (int j = 1; j <= 4; ++j) {
                CHECK(rank_at(w, {i, j}) == r.at(i, j));
            }
        }
    }
}

TEST_CASE("rank matrix entries form a monotone staircase ending at n") {
    for (int n = 1; n <= 6; ++n) {
        for (const Permutation& w : all_permutations(n)) {
            const RankMatrix r = rank_matrix(w, n);
            CHECK(r.at(n, n) == n);
            for (int i = 1; i <= n; ++i) {
                for (int j = 1; j <= n; ++j) {
                    const int up = r.at(i, j) - (i > 1 ? r.at(i - 1, j) : 0);
                    const int left = r.at(i, j) - (j > 1 ? r.at(i, j - 1) : 0);
                    CHECK(up >= 0);
                    CHECK(up <= 1);
                    CHECK(left >= 0);
                    CHECK(left <= 1);
                }
            }
        }
    }
}

TEST_CASE("rothe_diagram matches the definition scan") {
    CHECK(rothe_diagram(Permutation::identity()).empty());
    CHECK(rothe_diagram(perm("21")) == boxes({{1, 1}}));
    CHECK(rothe_diagram(perm("25314")) ==
          boxes({{1, 1}, {2, 1}, {2, 3}, {2, 4}, {3, 1}}));
}

TEST_CASE("essential_set keeps the maximally southeast boxes") {
    CHECK(essential_set(perm("21")) == boxes({{1, 1}}));
    CHECK(essential_set(perm("25314")) == boxes({{2, 4}, {3, 1}}));
    CHECK(essential_set(perm("132")) == boxes({{2, 2}}));
    CHECK(essential_set(Permutation::identity()).empty());
}

TEST_CASE("effective_region is the northwest closure of the essential set") {
    CHECK(effective_region(Permutation::identity()).empty());
    CHECK(effective_region(perm("25314")) ==
          boxes({{1, 1}, {1, 2}, {1, 3}, {1, 4}, {2, 1}, {2, 2}, {2, 3}, {2, 4}, {3, 1}}));

    // Adjacent transpositions have a square effective region.
    for (int k = 1; k <= 5; ++k) {
        std::vector<int> word(k + 1);
        for (int i = 0; i < k + 1; ++i) word[i] = i + 1;
        std::swap(word[k - 1], word[k]);
        const BoxSet region = effective_region(Permutation::from_one_line(word));
        CHECK(region.size() == static_cast<std::size_t>(k) * static_cast<std::size_t>(k));
        CHECK(row_lengths(region, k) == std::vector<int>(static_cast<std::size_t>(k), k));
    }
}

TEST_CASE("is_dominant detects partition-shaped diagrams") {
    CHECK(is_dominant(Permutation::identity()));
    CHECK(is_dominant(perm("312")));
    CHECK_FALSE(is_dominant(perm("132")));
    CHECK(rothe_diagram(perm("312")) == boxes({{1, 1}, {1, 2}}));
    CHECK(effective_region(perm("132")) == boxes({{1, 1}, {1, 2}, {2, 1}, {2, 2}}));
}

TEST_CASE("diagram invariants hold across small symmetric groups") {
    for (int n = 1; n <= 6; ++n) {
        for (const Permutation& w : all_permutations(n)) {
            const BoxSet diagram = rothe_diagram(w);
            const BoxSet essential = essential_set(w);
            const BoxSet region = effective_region(w);

            CHECK(static_cast<int>(diagram.size()) == coxeter_length(w));
            CHECK(essential.subset_of(diagram));
            CHECK(is_young_diagram(region));
            CHECK(diagram.subset_of(region));
            for (const Box& b : essential) {
                CHECK_FALSE(diagram.contains({b.row, b.col + 1}));
                CHECK_FALSE(diagram.contains({b.row + 1, b.col}));
            }
            const bool dominant = is_dominant(w);
            CHECK(dominant == (diagram == region));
            CHECK(dominant == is_young_diagram(diagram));
        }
    }
}
