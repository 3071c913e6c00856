#ifndef SCHUBERT_EXACT_RANK_HPP
#define SCHUBERT_EXACT_RANK_HPP

#include <gmpxx.h>

#include <map>
#include <utility>
#include <vector>

namespace schubert {

/// Incremental exact rank of an integer matrix fed row by row. Rows are
/// sparse (sorted nonzero columns); elimination is fraction-free
/// cross-multiplication against stored pivot rows, with each intermediate
/// row divided by the gcd of its entries to keep coefficients small.
/// The computed value is the rank over the rationals.
class SparseRankAccumulator {
public:
    using Entry = std::pair<long, mpz_class>; // (column, coefficient)
    using Row = std::vector<Entry>;           // ascending columns, nonzero coefficients

    /// Eliminates the row against the current pivots; if a nonzero residue
    /// remains it becomes a new pivot and the rank grows by one.
    /// Returns true when the rank grew.
    bool add_row(Row row);

    long rank() const { return rank_; }
    std::size_t pivot_count() const { return pivots_.size(); }

private:
    static void divide_by_content(Row& row);
    std::map<long, Row> pivots_; // keyed by leading column
    long rank_ = 0;
};

} // namespace schubert

#endif
