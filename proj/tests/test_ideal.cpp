#include "schubert/ideal.hpp"

#include "schubert/diagram.hpp"

#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <set>
#include <stdexcept>
#include <vector>

using namespace schubert;

namespace {

Permutation perm(const char* text) { return Permutation::parse(text); }

GeneratorSet essential_full(const char* text) {
    const Permutation w = perm(text);
    return fulton_generators(w, true, AmbientSpec::full(w, w.normalized_size()));
}

/// Restores the previous value of an environment variable on scope exit.
struct EnvOverride {
    EnvOverride(const char* name, const char* value) : name_(name) {
        const char* old = std::getenv(name);
        had_old_ = old != nullptr;
        if (had_old_) old_ = old;
        setenv(name, value, 1);
    }
    ~EnvOverride() {
        if (had_old_) {
            setenv(name_, old_.c_str(), 1);
        } else {
            unsetenv(name_);
        }
    }
    const char* name_;
    std::string old_;
    bool had_old_ = false;
};

} // namespace

TEST_CASE("VariableIndex linearizes boxes row-major") {
    const VariableIndex vars({{1, 1}, {1, 2}, {2, 1}});
    CHECK(vars.count() == 3);
    CHECK(vars.index_of({1, 1}) == 1);
    CHECK(vars.index_of({1, 2}) == 2);
    CHECK(vars.index_of({2, 1}) == 3);
    CHECK(vars.box_of(3) == Box{2, 1});
    CHECK_THROWS_WITH_AS(vars.index_of({9, 9}), doctest::Contains("not an ambient variable"),
                         std::invalid_argument);
    CHECK_THROWS_AS(vars.box_of(4), std::invalid_argument);
    CHECK_THROWS_AS(VariableIndex({{1, 1}, {1, 1}}), std::invalid_argument);
}

TEST_CASE("the identity has no generators") {
    const Permutation id = Permutation::identity();
    const GeneratorSet gens = fulton_generators(id, true, AmbientSpec::full(id, 2));
    CHECK(gens.minors.empty());
    CHECK(gens.ambient_vars.size() == 4);
}

TEST_CASE("the worked five-letter example produces nine generators") {
    const GeneratorSet gens = essential_full("25314");
    REQUIRE(gens.minors.size() == 9);
    CHECK(gens.ambient_vars.size() == 25);

    int ones = 0;
    int twos = 0;
    std::set<std::vector<int>> two_cols;
    for (const MinorSpec& m : gens.minors) {
        if (m.size() == 1) {
            ++ones;
            CHECK(m.cols == std::vector<int>{1});
            CHECK(m.source == Box{3, 1});
            CHECK(m.rank == 0);
        } else {
            ++twos;
            REQUIRE(m.size() == 2);
            CHECK(m.rows == std::vector<int>{1, 2});
            CHECK(m.source == Box{2, 4});
            CHECK(m.rank == 1);
            two_cols.insert(m.cols);
        }
    }
    CHECK(ones == 3);
    CHECK(twos == 6);
    CHECK(two_cols == std::set<std::vector<int>>{
                          {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
}

TEST_CASE("a single essential box yields one maximal minor") {
    const Permutation w = bigrassmannian(1, 2, 2);
    const GeneratorSet gens = fulton_generators(w, true, AmbientSpec::full(w, 3));
    REQUIRE(gens.minors.size() == 1);
    CHECK(gens.minors[0].rows == std::vector<int>{1, 2});
    CHECK(gens.minors[0].cols == std::vector<int>{1, 2});
    CHECK(gens.minors[0].rank == 1);
}

TEST_CASE("effective generators of a dominant permutation are the variables themselves") {
    for (const Permutation& w : all_permutations(4)) {
        if (!is_dominant(w) || w.normalized().is_identity()) continue;
        const GeneratorSet gens = fulton_generators(w, true, AmbientSpec::effective_of(w));
        CHECK(gens.minors.size() == gens.ambient_vars.size());
        std::set<Box> minor_boxes;
        for (const MinorSpec& m : gens.minors) {
            REQUIRE(m.size() == 1);
            CHECK(m.rank == 0);
            minor_boxes.insert({m.rows[0], m.cols[0]});
        }
        const std::set<Box> ambient(gens.ambient_vars.begin(), gens.ambient_vars.end());
        CHECK(minor_boxes == ambient);
    }
}

TEST_CASE("effective ambient variables are the effective region") {
    const Permutation w = perm("25314");
    const GeneratorSet gens = fulton_generators(w, true, AmbientSpec::effective_of(w));
    CHECK(BoxSet(gens.ambient_vars) == effective_region(w));
    CHECK(gens.minors.size() == 9);
    // Every minor stays inside the region.
    for (const MinorSpec& m : gens.minors) {
        for (const int r : m.rows) {
            for (const int c : m.cols) {
                CHECK(effective_region(w).contains({r, c}));
            }
        }
    }
}

TEST_CASE("every minor is sized by its rank and fits its source box") {
    for (const Permutation& w : all_permutations(4)) {
        for (const bool essential_only : {true, false}) {
            const GeneratorSet gens =
                fulton_generators(w, essential_only, AmbientSpec::full(w, 4));
            std::set<std::pair<std::vector<int>, std::vector<int>>> seen;
            for (const MinorSpec& m : gens.minors) {
                CHECK(m.size() == m.rank + 1);
                CHECK(std::is_sorted(m.rows.begin(), m.rows.end()));
                CHECK(std::is_sorted(m.cols.begin(), m.cols.end()));
                CHECK(m.rows.back() <= m.source.row);
                CHECK(m.cols.back() <= m.source.col);
                CHECK(m.rank == rank_at(w, m.source));
                CHECK(seen.insert({m.rows, m.cols}).second);
            }
        }
    }
}

TEST_CASE("all-boxes generators require the full ambient") {
    const Permutation w = perm("132");
    CHECK_THROWS_WITH_AS(fulton_generators(w, false, AmbientSpec::effective_of(w)),
                         doctest::Contains("full ambient"), std::invalid_argument);
}

TEST_CASE("expand_minor produces the signed determinant expansion") {
    const Permutation w = perm("25314");
    const GeneratorSet gens = essential_full("25314");
    const VariableIndex vars(gens.ambient_vars);

    const MinorSpec z31{{3}, {1}, {3, 1}, 0};
    const MultiPoly p31 = expand_minor(z31, vars);
    CHECK(p31 == MultiPoly::variable(vars.index_of({3, 1})));

    const MinorSpec det2{{1, 2}, {1, 2}, {2, 4}, 1};
    const MultiPoly p2 = expand_minor(det2, vars);
    CHECK(p2.term_count() == 2);
    Exponents e11_22(static_cast<std::size_t>(vars.index_of({2, 2})), 0);
    e11_22[static_cast<std::size_t>(vars.index_of({1, 1}) - 1)] = 1;
    e11_22[static_cast<std::size_t>(vars.index_of({2, 2}) - 1)] = 1;
    CHECK(p2.coefficient(e11_22) == 1);
    CHECK(p2.total_degree() == 2);
    CHECK(p2.evaluate_all_ones() == 0);

    const MinorSpec det3{{1, 2, 3}, {1, 2, 3}, {3, 3}, 2};
    const MultiPoly p3 = expand_minor(det3, VariableIndex(gens.ambient_vars));
    CHECK(p3.term_count() == 6);
    CHECK(p3.total_degree() == 3);
    CHECK(p3.min_total_degree() == 3);
    CHECK(p3.evaluate_all_ones() == 0);
}

TEST_CASE("brute_force_hf counts graded dimensions exactly") {
    // Degree zero is one-dimensional for any proper homogeneous ideal.
    CHECK(brute_force_hf(essential_full("25314"), 0) == 1);

    // 2x2 minors of a generic 3x3 matrix, degree 2: 45 monomials, one relationless rank drop.
    const Permutation big = bigrassmannian(1, 2, 2);
    const GeneratorSet det = fulton_generators(big, true, AmbientSpec::full(big, 3));
    CHECK(brute_force_hf(det, 2) == 44);

    // One variable modulo itself.
    const Permutation s1 = perm("21");
    const GeneratorSet point = fulton_generators(s1, true, AmbientSpec::effective_of(s1));
    CHECK(brute_force_hf(point, 0) == 1);
    CHECK(brute_force_hf(point, 1) == 0);
    CHECK(brute_force_hf(point, 5) == 0);

    // Zero ideal: plain monomial counting.
    const Permutation id = Permutation::identity();
    const GeneratorSet none = fulton_generators(id, true, AmbientSpec::full(id, 2));
    for (long k = 0; k <= 4; ++k) {
        CHECK(brute_force_hf(none, k) == binomial(3 + k, 3));
    }

    CHECK_THROWS_AS(brute_force_hf(det, -1), std::invalid_argument);
}

TEST_CASE("the tractability guard refuses oversized problems") {
    const Permutation id = Permutation::identity();
    const GeneratorSet none = fulton_generators(id, true, AmbientSpec::full(id, 3));
    OracleGuard tiny;
    tiny.max_monomials = 10;
    tiny.max_rows = 100;
    CHECK_THROWS_WITH_AS(brute_force_hf(none, 3, tiny), doctest::Contains("too large"),
                         OracleTooLarge);

    const GeneratorSet busy = essential_full("25314");
    OracleGuard rows_only;
    rows_only.max_monomials = 1000000;
    rows_only.max_rows = 5;
    CHECK_THROWS_WITH_AS(brute_force_hf(busy, 3, rows_only), doctest::Contains("too large"),
                         OracleTooLarge);
}

TEST_CASE("the guard reads its ceiling from the environment") {
    {
        const EnvOverride env("SCHUBERT_MAX_MONOMIALS", "123");
        const OracleGuard guard = OracleGuard::from_env();
        CHECK(guard.max_monomials == 123);
        CHECK(guard.max_rows == 1230);
    }
    const OracleGuard fallback = OracleGuard::from_env();
    CHECK(fallback.max_monomials == 20000);
    CHECK(fallback.max_rows == 200000);
}

TEST_CASE("cross_check validates the series against brute force") {
    GrothendieckEngine engine;

    const Permutation id = Permutation::identity();
    CHECK(cross_check(id, AmbientSpec::full(id, 2), 3, engine).passed);

    const Permutation w132 = perm("132");
    const CrossCheckResult r132 = cross_check(w132, AmbientSpec::full(w132, 3), 4, engine);
    CHECK(r132.passed);
    CHECK(r132.mismatches.empty());

    const Permutation w = perm("25314");
    CHECK(cross_check(w, AmbientSpec::effective_of(w), 3, engine).passed);
}

TEST_CASE("cross_check covers all of S_3 in the full ambient") {
    GrothendieckEngine engine;
    for (const Permutation& w : all_permutations(3)) {
        CHECK(cross_check(w, AmbientSpec::full(w, 3), 4, engine).passed);
    }
}

TEST_CASE("brute force agrees between essential and all-boxes generators") {
    for (const Permutation& w : all_permutations(3)) {
        const AmbientSpec ambient = AmbientSpec::full(w, 3);
        const GeneratorSet essential = fulton_generators(w, true, ambient);
        const GeneratorSet all_boxes = fulton_generators(w, false, ambient);
        for (long k = 0; k <= 4; ++k) {
            CHECK(brute_force_hf(essential, k) == brute_force_hf(all_boxes, k));
        }
    }
}
