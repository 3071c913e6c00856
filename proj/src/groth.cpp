#include "schubert/groth.hpp"

#include "schubert/diagram.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace schubert {

TransitionData transition_step(const Permutation& w) {
    const Permutation v = w.normalized();
    const std::vector<int> ds = descents(v);
    if (ds.empty()) {
        throw std::invalid_argument("no descent: the identity has no transition step");
    }
    TransitionData td;
    td.g = ds.back();
    // m > g with v(m) < v(g) exists because g is a descent, and m <= size
    // because positions past the word are fixed points exceeding v(g).
    for (int cand = td.g + 1; cand <= v.size(); ++cand) {
        if (v(cand) < v(td.g)) td.m = cand;
    }
    td.w_prime = apply_transposition(v, td.g, td.m);
    if (coxeter_length(td.w_prime) != coxeter_length(v) - 1) {
        throw std::logic_error("transition partner did not drop the length by one");
    }
    for (int i = 1; i < td.g; ++i) {
        if (is_length_increasing_transposition(td.w_prime, i, td.g)) {
            td.i_list.push_back(i);
        }
    }
    return td;
}

const MultiPoly& GrothendieckEngine::polynomial(const Permutation& w) {
    const Permutation key = w.normalized();
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    MultiPoly value = compute(key);
    // unordered_map references stay valid across later insertions, so the
    // returned reference survives further recursion.
    return cache_.emplace(key, std::move(value)).first->second;
}

int GrothendieckEngine::degree(const Permutation& w) {
    return polynomial(w).total_degree();
}

int GrothendieckEngine::min_degree(const Permutation& w) {
    return polynomial(w).min_total_degree();
}

MultiPoly GrothendieckEngine::compute(const Permutation& w) {
    if (w.is_identity()) return MultiPoly::constant(1);

    const TransitionData td = transition_step(w);
    const BoxSet lambda_w = effective_region(w);
    auto check_shrinks = [&lambda_w](const Permutation& u) {
        const BoxSet lu = effective_region(u);
        if (!lu.subset_of(lambda_w) || lu == lambda_w) {
            throw std::logic_error("transition produced a permutation whose effective region does not shrink");
        }
    };

    check_shrinks(td.w_prime);
    MultiPoly result = polynomial(td.w_prime);

    // (Id - T_{i_1}) ... (Id - T_{i_s}) applied to G_{w'}: signed sum over
    // subsets, transpositions t_{i,g} applied in increasing index order.
    // No length conditions are imposed on the intermediate products.
    MultiPoly bracket;
    const std::size_t s = td.i_list.size();
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << s); ++mask) {
        Permutation u = td.w_prime;
        for (std::size_t b = 0; b < s; ++b) {
            if (mask & (std::uint32_t{1} << b)) {
                u = apply_transposition(u, td.i_list[b], td.g);
            }
        }
        if (mask != 0) check_shrinks(u);
        if (std::popcount(mask) % 2 == 0) {
            bracket += polynomial(u);
        } else {
            bracket -= polynomial(u);
        }
    }

    const MultiPoly factor = MultiPoly::variable(td.g) - MultiPoly::constant(1);
    result += factor * bracket;

    if (result.min_total_degree() != coxeter_length(w)) {
        throw std::logic_error("transition result has wrong minimal degree");
    }
    return result;
}

Permutation demazure_product(const std::vector<int>& word) {
    int top = 1;
    for (int i : word) {
        if (i < 1) throw std::invalid_argument("simple reflection index must be >= 1");
        top = std::max(top, i + 1);
    }
    std::vector<int> u(static_cast<std::size_t>(top));
    std::iota(u.begin(), u.end(), 1);
    for (int i : word) {
        // u s_i swaps positions i, i+1; absorb the letter unless that
        // increases length, i.e. unless u(i) < u(i+1).
        if (u[static_cast<std::size_t>(i - 1)] < u[static_cast<std::size_t>(i)]) {
            std::swap(u[static_cast<std::size_t>(i - 1)], u[static_cast<std::size_t>(i)]);
        }
    }
    return Permutation::from_one_line(u).normalized();
}

namespace {

// Staircase boxes of {(i,j) : i+j <= n} in reading order: rows top to
// bottom, right to left within a row. Entry = (row, letter i+j-1).
std::vector<std::pair<int, int>> staircase_reading_order(int n) {
    std::vector<std::pair<int, int>> boxes;
    for (int i = 1; i <= n - 1; ++i) {
        for (int j = n - i; j >= 1; --j) {
            boxes.push_back({i, i + j - 1});
        }
    }
    return boxes;
}

constexpr int kMaxStaircaseBits = 24;

int staircase_bits(int n) {
    if (n < 1) throw std::invalid_argument("grid size must be >= 1");
    const int bits = n * (n - 1) / 2;
    if (bits > kMaxStaircaseBits) {
        throw std::invalid_argument("staircase too large for subset enumeration");
    }
    return bits;
}

// Applies fn(permutation, sign_exponent_parity_base |D|, row multiplicities)
// for every cross subset of the n-staircase.
template <typename Fn>
void for_each_pipe_dream(int n, Fn&& fn) {
    const int bits = staircase_bits(n);
    const auto boxes = staircase_reading_order(n);
    std::vector<int> one_line(static_cast<std::size_t>(n));
    std::vector<int> row_counts(static_cast<std::size_t>(n), 0);
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << bits); ++mask) {
        std::iota(one_line.begin(), one_line.end(), 1);
        std::fill(row_counts.begin(), row_counts.end(), 0);
        for (int b = 0; b < bits; ++b) {
            if (!(mask & (std::uint32_t{1} << b))) continue;
            const auto [row, letter] = boxes[static_cast<std::size_t>(b)];
            ++row_counts[static_cast<std::size_t>(row - 1)];
            auto& lo = one_line[static_cast<std::size_t>(letter - 1)];
            auto& hi = one_line[static_cast<std::size_t>(letter)];
            if (lo < hi) std::swap(lo, hi);
        }
        fn(one_line, std::popcount(mask), row_counts);
    }
}

Exponents trim_row_counts(const std::vector<int>& row_counts) {
    Exponents e = row_counts;
    while (!e.empty() && e.back() == 0) e.pop_back();
    return e;
}

} // namespace

GrothendieckTable pipe_dream_table(int n) {
    GrothendieckTable table;
    for_each_pipe_dream(n, [&](const std::vector<int>& one_line, int crosses, const std::vector<int>& row_counts) {
        const Permutation u = Permutation::from_one_line(one_line).normalized();
        const int sign = (crosses - coxeter_length(u)) % 2 == 0 ? 1 : -1;
        table[u].add_term(trim_row_counts(row_counts), sign);
    });
    return table;
}

MultiPoly pipe_dream_grothendieck(const Permutation& w, int n) {
    const Permutation target = w.normalized();
    if (n < target.size()) {
        throw std::invalid_argument("grid size too small for the permutation");
    }
    const int len = coxeter_length(target);
    MultiPoly result;
    bool seen = false;
    for_each_pipe_dream(n, [&](const std::vector<int>& one_line, int crosses, const std::vector<int>& row_counts) {
        const Permutation u = Permutation::from_one_line(one_line).normalized();
        if (!(u == target)) return;
        seen = true;
        const int sign = (crosses - len) % 2 == 0 ? 1 : -1;
        result.add_term(trim_row_counts(row_counts), sign);
    });
    if (!seen) {
        throw std::logic_error("no pipe dream produced the requested permutation");
    }
    return result;
}

int groth_degree(const Permutation& w, GrothendieckEngine& engine) {
    return engine.degree(w);
}

} // namespace schubert
