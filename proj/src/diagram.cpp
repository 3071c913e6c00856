#include "schubert/diagram.hpp"

#include <algorithm>
#include <stdexcept>

namespace schubert {

BoxSet::BoxSet(std::vector<Box> boxes) : boxes_(std::move(boxes)) {
    std::sort(boxes_.begin(), boxes_.end());
    boxes_.erase(std::unique(boxes_.begin(), boxes_.end()), boxes_.end());
}

bool BoxSet::contains(Box b) const {
    return std::binary_search(boxes_.begin(), boxes_.end(), b);
}

bool BoxSet::subset_of(const BoxSet& other) const {
    return std::includes(other.boxes_.begin(), other.boxes_.end(),
                         boxes_.begin(), boxes_.end());
}

std::vector<int> row_lengths(const BoxSet& s, int rows) {
    std::vector<int> lengths(static_cast<std::size_t>(std::max(rows, 0)), 0);
    for (const Box& b : s) {
        if (b.row > rows) lengths.resize(static_cast<std::size_t>(b.row), 0);
        ++lengths[static_cast<std::size_t>(b.row) - 1];
    }
    return lengths;
}

bool is_young_diagram(const BoxSet& s) {
    if (s.empty()) return true;
    int max_row = 0;
    for (const Box& b : s) max_row = std::max(max_row, b.row);
    const std::vector<int> lengths = row_lengths(s, max_row);
    // left-justified: row i must contain exactly cols 1..lengths[i]
    for (const Box& b : s) {
        if (b.col > lengths[static_cast<std::size_t>(b.row) - 1]) return false;
    }
    for (std::size_t i = 1; i < lengths.size(); ++i) {
        if (lengths[i] > lengths[i - 1]) return false;
    }
    return true;
}

RankMatrix rank_matrix(const Permutation& w, int n) {
    if (n < w.normalized_size()) {
        throw std::invalid_argument("rank_matrix: grid size " + std::to_string(n) +
                                    " smaller than permutation size " +
                                    std::to_string(w.normalized_size()));
    }
    RankMatrix r(n);
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            r.at(i, j) = (i > 1 ? r.at(i - 1, j) : 0) + (w(i) <= j ? 1 : 0);
        }
    }
    return r;
}

int rank_at(const Permutation& w, Box b) {
    int count = 0;
    for (int a = 1; a <= b.row; ++a) {
        if (w(a) <= b.col) ++count;
    }
    return count;
}

BoxSet rothe_diagram(const Permutation& w) {
    const Permutation v = w.normalized();
    const int n = v.size();
    const std::vector<int> inv = v.inverse_word();
    std::vector<Box> boxes;
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j < v(i); ++j) {
            if (i < inv[static_cast<std::size_t>(j) - 1]) boxes.push_back({i, j});
        }
    }
    return BoxSet(std::move(boxes));
}

BoxSet essential_set(const Permutation& w) {
    const BoxSet d = rothe_diagram(w);
    std::vector<Box> boxes;
    for (const Box& b : d) {
        if (!d.contains({b.row, b.col + 1}) && !d.contains({b.row + 1, b.col})) {
            boxes.push_back(b);
        }
    }
    return BoxSet(std::move(boxes));
}

BoxSet effective_region(const Permutation& w) {
    const BoxSet e = essential_set(w);
    // width[i] = max col over essential boxes weakly south of row i
    int max_row = 0;
    for (const Box& b : e) max_row = std::max(max_row, b.row);
    std::vector<Box> boxes;
    for (int i = 1; i <= max_row; ++i) {
        int width = 0;
        for (const Box& b : e) {
            if (b.row >= i) width = std::max(width, b.col);
        }
        for (int j = 1; j <= width; ++j) boxes.push_back({i, j});
    }
    BoxSet region(std::move(boxes));
    if (!is_young_diagram(region)) {
        throw std::logic_error("effective_region: result is not a Young diagram for w = " +
                               to_string(w));
    }
    return region;
}

bool is_dominant(const Permutation& w) {
    return effective_region(w) == rothe_diagram(w);
}

} // namespace schubert
