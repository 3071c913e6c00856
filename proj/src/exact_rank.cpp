#include "schubert/exact_rank.hpp"

#include <algorithm>
#include <stdexcept>

namespace schubert {

namespace {

bool sorted_nonzero(const SparseRankAccumulator::Row& row) {
    for (std::size_t i = 0; i < row.size(); ++i) {
        if (row[i].second == 0) return false;
        if (i > 0 && row[i - 1].first >= row[i].first) return false;
    }
    return true;
}

// row <- a*row - b*pivot, merging the sorted column lists.
SparseRankAccumulator::Row combine(const SparseRankAccumulator::Row& row, const mpz_class& a,
                                   const SparseRankAccumulator::Row& pivot, const mpz_class& b) {
    SparseRankAccumulator::Row out;
    out.reserve(row.size() + pivot.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < row.size() || j < pivot.size()) {
        if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
            out.emplace_back(row[i].first, a * row[i].second);
            ++i;
        } else if (i == row.size() || pivot[j].first < row[i].first) {
            out.emplace_back(pivot[j].first, -b * pivot[j].second);
            ++j;
        } else {
            mpz_class c = a * row[i].second - b * pivot[j].second;
            if (c != 0) out.emplace_back(row[i].first, std::move(c));
            ++i;
            ++j;
        }
    }
    return out;
}

} // namespace

void SparseRankAccumulator::divide_by_content(Row& row) {
    if (row.empty()) return;
    mpz_class g = 0;
    for (const auto& [col, c] : row) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    if (g > 1) {
        for (auto& [col, c] : row) {
            mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
        }
    }
}

bool SparseRankAccumulator::add_row(Row row) {
    if (!sorted_nonzero(row)) {
        throw std::invalid_argument("row entries must have ascending columns and nonzero coefficients");
    }
    divide_by_content(row);
    while (!row.empty()) {
        const long lead = row.front().first;
        auto it = pivots_.find(lead);
        if (it == pivots_.end()) {
            pivots_.emplace(lead, std::move(row));
            ++rank_;
            return true;
        }
        const Row& pivot = it->second;
        row = combine(row, pivot.front().second, pivot, row.front().second);
        divide_by_content(row);
    }
    return false;
}

} // namespace schubert
