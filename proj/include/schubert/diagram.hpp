#ifndef SCHUBERT_DIAGRAM_HPP
#define SCHUBERT_DIAGRAM_HPP

#include "schubert/perm.hpp"

#include <compare>
#include <vector>

namespace schubert {

/// A cell of the grid, 1-indexed. Ordering is row-major.
struct Box {
    int row = 0;
    int col = 0;
    friend auto operator<=>(const Box&, const Box&) = default;
};

/// Finite set of grid boxes kept sorted row-major with no duplicates.
class BoxSet {
public:
    BoxSet() = default;
    explicit BoxSet(std::vector<Box> boxes);

    const std::vector<Box>& boxes() const { return boxes_; }
    std::size_t size() const { return boxes_.size(); }
    bool empty() const { return boxes_.empty(); }
    bool contains(Box b) const;
    bool subset_of(const BoxSet& other) const;

    auto begin() const { return boxes_.begin(); }
    auto end() const { return boxes_.end(); }

    bool operator==(const BoxSet&) const = default;

private:
    std::vector<Box> boxes_;
};

/// Row lengths of a left-justified region: lengths[i-1] = number of boxes in
/// row i (rows indexed up to the largest occupied row).
std::vector<int> row_lengths(const BoxSet& s, int rows);

/// True iff the set is a Young diagram: rows left-justified with weakly
/// decreasing lengths.
bool is_young_diagram(const BoxSet& s);

/// Northwest rank counts r_{ij} = #{a <= i : w(a) <= j} on an n x n grid.
class RankMatrix {
public:
    RankMatrix(int n) : n_(n), entries_(static_cast<std::size_t>(n) * n, 0) {}
    int n() const { return n_; }
    int at(int i, int j) const { return entries_[idx(i, j)]; }
    int& at(int i, int j) { return entries_[idx(i, j)]; }

private:
    std::size_t idx(int i, int j) const {
        return static_cast<std::size_t>(i - 1) * n_ + (j - 1);
    }
    int n_;
    std::vector<int> entries_;
};

/// Requires n >= normalized size of w.
RankMatrix rank_matrix(const Permutation& w, int n);

/// Single rank value r_{ij} without materializing the matrix.
int rank_at(const Permutation& w, Box b);

/// Rothe diagram D(w) = {(i,j) : j < w(i), i < w^{-1}(j)} on the normalized
/// grid; |D(w)| = coxeter_length(w).
BoxSet rothe_diagram(const Permutation& w);

/// Essential set E(w): boxes of D(w) with no D(w)-box immediately east or
/// south.
BoxSet essential_set(const Permutation& w);

/// Effective region lambda(w): boxes weakly northwest of some essential box.
/// Always a Young diagram.
BoxSet effective_region(const Permutation& w);

/// True iff lambda(w) = D(w).
bool is_dominant(const Permutation& w);

} // namespace schubert

#endif
