#ifndef SCHUBERT_GROTH_HPP
#define SCHUBERT_GROTH_HPP

#include "schubert/perm.hpp"
#include "schubert/poly.hpp"

#include <unordered_map>
#include <vector>

namespace schubert {

/// Data of one Lascoux transition at the last descent of w.
struct TransitionData {
    int g = 0;             // last descent position of w
    int m = 0;             // largest m > g with w(m) < w(g)
    Permutation w_prime;   // w * t_{g,m}, one inversion shorter
    std::vector<int> i_list; // ascending i < g with l(w' t_{i,g}) = l(w') + 1
};

/// Computes the transition data; throws std::invalid_argument ("no descent")
/// on the identity.
TransitionData transition_step(const Permutation& w);

/// Grothendieck polynomials via the transition recursion
///
///   G_w = G_{w'} + (x_g - 1) * [ G_{w'} (Id - T_{i_1}) ... (Id - T_{i_s}) ]
///
/// where T_i sends G_u to G_{u t_{i,g}}, the operator product expands to a
/// signed sum over subsets applied in increasing index order, and G_id = 1.
/// Results are memoized on normalized permutations, so one engine instance
/// serves a whole sweep; instantiate one engine per worker thread.
class GrothendieckEngine {
public:
    const MultiPoly& polynomial(const Permutation& w);
    int degree(const Permutation& w);
    int min_degree(const Permutation& w);
    std::size_t cache_size() const { return cache_.size(); }

private:
    MultiPoly compute(const Permutation& w);
    std::unordered_map<Permutation, MultiPoly, PermutationHash> cache_;
};

/// Demazure (0-Hecke) product of a word in simple reflections s_i, i >= 1:
/// left-to-right fold absorbing each letter unless it increases length.
Permutation demazure_product(const std::vector<int>& word);

/// G_w for every permutation reachable from the staircase
/// {(i,j) : i+j <= n}: one sweep over all cross subsets, bucketed by
/// Demazure product. The bucket of w in S_n is G_w.
using GrothendieckTable = std::unordered_map<Permutation, MultiPoly, PermutationHash>;
GrothendieckTable pipe_dream_table(int n);

/// Independent enumeration engine: sums (-1)^{|D| - l(w)} prod x_row over
/// cross subsets D of the n-staircase whose reading word (rows top to
/// bottom, right to left within a row, letter i+j-1 at box (i,j)) has
/// Demazure product w.
MultiPoly pipe_dream_grothendieck(const Permutation& w, int n);

/// total_degree(G_w); 0 for the identity.
int groth_degree(const Permutation& w, GrothendieckEngine& engine);

} // namespace schubert

#endif
