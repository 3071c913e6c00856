#include "schubert/ideal.hpp"

#include "schubert/exact_rank.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <utility>

namespace schubert {

VariableIndex::VariableIndex(const std::vector<Box>& boxes) : boxes_(boxes) {
    for (std::size_t i = 0; i < boxes_.size(); ++i) {
        if (!index_.emplace(boxes_[i], static_cast<int>(i) + 1).second) {
            throw std::invalid_argument("duplicate box in variable index");
        }
    }
}

int VariableIndex::index_of(Box b) const {
    auto it = index_.find(b);
    if (it == index_.end()) {
        throw std::invalid_argument("box is not an ambient variable");
    }
    return it->second;
}

Box VariableIndex::box_of(int index) const {
    if (index < 1 || index > count()) {
        throw std::invalid_argument("variable index out of range");
    }
    return boxes_[static_cast<std::size_t>(index) - 1];
}

namespace {

// Ascending size-k subsets of {1..n} in lexicographic order.
template <typename Fn>
void for_each_combination(int n, int k, Fn&& fn) {
    if (k > n || k < 0) return;
    std::vector<int> c(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) c[static_cast<std::size_t>(i)] = i + 1;
    while (true) {
        fn(c);
        int i = k - 1;
        while (i >= 0 && c[static_cast<std::size_t>(i)] == n - (k - 1 - i)) --i;
        if (i < 0) return;
        ++c[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) {
            c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
}

std::vector<Box> full_grid_boxes(int n) {
    std::vector<Box> boxes;
    boxes.reserve(static_cast<std::size_t>(n) * n);
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) boxes.push_back({i, j});
    }
    return boxes;
}

} // namespace

GeneratorSet fulton_generators(const Permutation& w, bool essential_only, const AmbientSpec& ambient) {
    GeneratorSet out;
    std::vector<Box> source_boxes;
    if (ambient.kind == AmbientSpec::Kind::full) {
        out.ambient_vars = full_grid_boxes(ambient.n);
        if (ambient.n < w.normalized_size()) {
            throw std::invalid_argument("full ambient grid smaller than the permutation");
        }
    } else {
        out.ambient_vars = effective_region(w).boxes();
        if (!essential_only) {
            throw std::invalid_argument("all-boxes generators are defined on the full ambient only");
        }
    }
    if (essential_only) {
        source_boxes = essential_set(w).boxes();
    } else {
        source_boxes = full_grid_boxes(ambient.n);
    }

    const VariableIndex vars(out.ambient_vars);
    std::set<std::pair<std::vector<int>, std::vector<int>>> seen;
    for (const Box& box : source_boxes) {
        const int r = rank_at(w, box);
        const int size = r + 1;
        if (size > box.row || size > box.col) continue;
        for_each_combination(box.row, size, [&](const std::vector<int>& rows) {
            for_each_combination(box.col, size, [&](const std::vector<int>& cols) {
                if (!seen.emplace(rows, cols).second) return;
                for (int a : rows) {
                    for (int b : cols) {
                        vars.index_of({a, b}); // every variable must be ambient
                    }
                }
                out.minors.push_back({rows, cols, box, r});
            });
        });
    }
    return out;
}

MultiPoly expand_minor(const MinorSpec& minor, const VariableIndex& vars) {
    if (minor.rows.size() != minor.cols.size() || minor.rows.empty()) {
        throw std::invalid_argument("minor needs equally many rows and columns, at least one of each");
    }
    const int s = minor.size();
    std::vector<int> perm(static_cast<std::size_t>(s));
    for (int i = 0; i < s; ++i) perm[static_cast<std::size_t>(i)] = i;
    MultiPoly det;
    do {
        int inversions = 0;
        for (int a = 0; a < s; ++a) {
            for (int b = a + 1; b < s; ++b) {
                if (perm[static_cast<std::size_t>(a)] > perm[static_cast<std::size_t>(b)]) ++inversions;
            }
        }
        Exponents exps(static_cast<std::size_t>(vars.count()), 0);
        for (int a = 0; a < s; ++a) {
            const Box b{minor.rows[static_cast<std::size_t>(a)],
                        minor.cols[static_cast<std::size_t>(perm[static_cast<std::size_t>(a)])]};
            ++exps[static_cast<std::size_t>(vars.index_of(b)) - 1];
        }
        det.add_term(std::move(exps), inversions % 2 == 0 ? 1 : -1);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

OracleGuard OracleGuard::from_env() {
    OracleGuard guard;
    if (const char* raw = std::getenv("SCHUBERT_MAX_MONOMIALS")) {
        char* end = nullptr;
        const long value = std::strtol(raw, &end, 10);
        if (end != raw && *end == '\0' && value > 0) {
            guard.max_monomials = value;
            guard.max_rows = 10 * value;
        }
    }
    return guard;
}

namespace {

// All exponent vectors over n_vars variables with the given degree sum, in
// descending lexicographic order.
void enumerate_monomials(int n_vars, long degree, Exponents& prefix, std::vector<Exponents>& out) {
    if (prefix.size() + 1 == static_cast<std::size_t>(n_vars)) {
        prefix.push_back(static_cast<int>(degree));
        out.push_back(prefix);
        prefix.pop_back();
        return;
    }
    for (long e = degree; e >= 0; --e) {
        prefix.push_back(static_cast<int>(e));
        enumerate_monomials(n_vars, degree - e, prefix, out);
        prefix.pop_back();
    }
}

std::vector<Exponents> monomials_of_degree(int n_vars, long degree) {
    std::vector<Exponents> out;
    if (n_vars == 0) return out;
    Exponents prefix;
    enumerate_monomials(n_vars, degree, prefix, out);
    return out;
}

} // namespace

mpz_class brute_force_hf(const GeneratorSet& gens, long k, const OracleGuard& guard) {
    if (k < 0) throw std::invalid_argument("degree k must be >= 0");
    const int n_vars = static_cast<int>(gens.ambient_vars.size());
    if (n_vars == 0) {
        return k == 0 ? 1 : 0;
    }

    const mpz_class monomial_count = binomial(n_vars + k - 1, k);
    if (monomial_count > guard.max_monomials) {
        throw OracleTooLarge("brute-force basis too large: " + monomial_count.get_str() + " monomials of degree " +
                             std::to_string(k) + " in " + std::to_string(n_vars) + " variables (ceiling " +
                             std::to_string(guard.max_monomials) + ")");
    }

    mpz_class row_estimate = 0;
    for (const MinorSpec& m : gens.minors) {
        if (m.size() <= k) {
            row_estimate += binomial(n_vars + (k - m.size()) - 1, k - m.size());
        }
    }
    if (row_estimate > guard.max_rows) {
        throw OracleTooLarge("brute-force row count too large: " + row_estimate.get_str() +
                             " generator multiples at degree " + std::to_string(k) + " (ceiling " +
                             std::to_string(guard.max_rows) + ")");
    }

    std::map<Exponents, long, DescLexOrder> column_of;
    {
        long next = 0;
        for (Exponents& e : monomials_of_degree(n_vars, k)) {
            column_of.emplace(std::move(e), next++);
        }
    }

    const VariableIndex vars(gens.ambient_vars);
    SparseRankAccumulator elimination;
    for (const MinorSpec& m : gens.minors) {
        if (m.size() > k) continue;
        const MultiPoly det = expand_minor(m, vars);
        for (const Exponents& mult : monomials_of_degree(n_vars, k - m.size())) {
            SparseRankAccumulator::Row row;
            row.reserve(det.term_count());
            for (const auto& [exps, coeff] : det.terms()) {
                Exponents product = mult;
                for (std::size_t i = 0; i < exps.size(); ++i) product[i] += exps[i];
                row.emplace_back(column_of.at(product), coeff);
            }
            std::sort(row.begin(), row.end(),
                      [](const auto& x, const auto& y) { return x.first < y.first; });
            elimination.add_row(std::move(row));
        }
    }

    return monomial_count - elimination.rank();
}

CrossCheckResult cross_check(const Permutation& w, const AmbientSpec& ambient, long k_max,
                             GrothendieckEngine& engine, const OracleGuard& guard) {
    CrossCheckResult result;
    const UniPoly k_poly = k_polynomial(w, engine);
    const long n_vars = ambient.variable_count;

    const GeneratorSet essential_gens = fulton_generators(w, true, ambient);
    std::vector<mpz_class> essential_hf;
    essential_hf.reserve(static_cast<std::size_t>(k_max) + 1);
    for (long k = 0; k <= k_max; ++k) {
        essential_hf.push_back(brute_force_hf(essential_gens, k, guard));
        const mpz_class series = hilbert_function(k_poly, n_vars, k);
        if (essential_hf.back() != series) {
            result.passed = false;
            result.mismatches.push_back({k, "brute-force HF (essential generators) vs K-polynomial series",
                                         series, essential_hf.back()});
        }
    }

    if (ambient.kind == AmbientSpec::Kind::full) {
        const GeneratorSet all_gens = fulton_generators(w, false, ambient);
        for (long k = 0; k <= k_max; ++k) {
            const mpz_class all_hf = brute_force_hf(all_gens, k, guard);
            if (all_hf != essential_hf[static_cast<std::size_t>(k)]) {
                result.passed = false;
                result.mismatches.push_back({k, "brute-force HF: all-boxes vs essential generators",
                                             essential_hf[static_cast<std::size_t>(k)], all_hf});
            }
        }
    }
    return result;
}

} // namespace schubert
