#ifndef SCHUBERT_PERM_HPP
#define SCHUBERT_PERM_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace schubert {

/// A permutation in one-line notation: word[i-1] = w(i), values 1..n.
///
/// Every permutation is implicitly a member of S_infinity: w(i) = i for all
/// positions beyond the stored word. Two instances compare equal when they
/// agree as functions, so [2,1] == [2,1,3]. The canonical representative of
/// a class strips trailing fixed points and is never shorter than one entry
/// (the identity is [1]).
class Permutation {
public:
    Permutation() : word_{1} {}

    /// Validates and wraps a one-line word exactly as given (no stripping of
    /// trailing fixed points). Throws std::invalid_argument naming the first
    /// offending entry on duplicates or out-of-range values.
    static Permutation from_one_line(std::vector<int> word);

    /// Accepts comma-separated one-line notation ("2,5,3,1,4") or a compact
    /// digit string ("25314") when every value is a single digit.
    static Permutation parse(std::string_view text);

    static Permutation identity() { return Permutation(); }

    /// Length of the stored word.
    int size() const { return static_cast<int>(word_.size()); }

    /// w(i) for any i >= 1; positions beyond the word are fixed points.
    int operator()(int i) const {
        return i <= size() ? word_[static_cast<std::size_t>(i) - 1] : i;
    }

    const std::vector<int>& word() const { return word_; }

    /// Word length after stripping trailing fixed points (at least 1).
    int normalized_size() const;

    Permutation normalized() const;

    bool is_identity() const { return normalized_size() == 1; }

    /// inverse_word()[v-1] is the position of value v, for v = 1..size().
    std::vector<int> inverse_word() const;

    /// S_infinity equality: same function, regardless of stored length.
    bool operator==(const Permutation& other) const;
    bool operator!=(const Permutation& other) const { return !(*this == other); }

private:
    explicit Permutation(std::vector<int> word, int) : word_(std::move(word)) {}
    std::vector<int> word_;
};

struct PermutationHash {
    std::size_t operator()(const Permutation& w) const;
};

/// Comma-separated one-line notation, e.g. "2,5,3,1,4".
std::string to_string(const Permutation& w);

/// Number of inversions #{i<j : w(i)>w(j)}.
int coxeter_length(const Permutation& w);

/// Ascending positions i with w(i) > w(i+1); empty iff w is the identity.
std::vector<int> descents(const Permutation& w);

/// w * t_{a<->b}: exchanges the entries at positions a < b, extending with
/// fixed points when b exceeds the stored word. Result is normalized.
Permutation apply_transposition(const Permutation& w, int a, int b);

/// True iff the transposition t_{a<->b} (a < b) raises the length by exactly
/// one: w(a) < w(b) and no a < c < b has w(a) < w(c) < w(b).
bool is_length_increasing_transposition(const Permutation& w, int a, int b);

inline Permutation normalize(const Permutation& w) { return w.normalized(); }

/// All n! elements of S_n as raw length-n words, in lexicographic order.
std::vector<Permutation> all_permutations(int n);

/// The bigrassmannian permutation whose essential set is the single box
/// (p, q) carrying rank value r; requires r < min(p, q). One-line word:
/// 1..r, then q+1..q+p-r, then r+1..q (the middle run has length p-r so
/// that the lone essential box lands exactly at (p, q)).
Permutation bigrassmannian(int r, int p, int q);

} // namespace schubert

#endif
