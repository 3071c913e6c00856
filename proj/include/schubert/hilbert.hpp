#ifndef SCHUBERT_HILBERT_HPP
#define SCHUBERT_HILBERT_HPP

#include "schubert/groth.hpp"
#include "schubert/perm.hpp"
#include "schubert/poly.hpp"

#include <vector>

namespace schubert {

/// Ambient polynomial ring of a matrix Schubert variety: either the full
/// n x n coordinate ring (N = n^2 variables) or the ring on the effective
/// region (N = |effective_region(w)| variables).
struct AmbientSpec {
    enum class Kind { full, effective };

    Kind kind = Kind::full;
    int n = 0;                // grid size; meaningful for the full kind only
    long variable_count = 0;  // N

    /// Full ambient on an n x n grid; throws if n is smaller than the
    /// normalized size of w.
    static AmbientSpec full(const Permutation& w, int n);

    /// Ambient on the effective region; throws if the region is empty
    /// (the identity), since the ring needs at least one variable.
    static AmbientSpec effective_of(const Permutation& w);

    bool operator==(const AmbientSpec&) const = default;
};

/// K_{R_w}(t) = G_w(x_i -> 1-t). Constant term 1, degree = deg(G_w);
/// both are checked and a violation throws std::logic_error.
UniPoly k_polynomial(const Permutation& w, GrothendieckEngine& engine);

/// Coefficient of t^k in K(t)/(1-t)^N, via truncated binomials
/// sum_j K_j * C(N-1+k-j, N-1) with C(m, N-1) = 0 when m < N-1.
mpz_class hilbert_function(const UniPoly& k_poly, long n_vars, long k);

/// The polynomial sum_j K_j * B_{N,j}(k) with
/// B_{N,j}(k) = (k-j+N-1)(k-j+N-2)...(k-j+1)/(N-1)!, exact in k.
RatUniPoly hilbert_polynomial(const UniPoly& k_poly, long n_vars);

/// HP(k) evaluated exactly at an integer point without expanding the
/// polynomial; the product of N-1 consecutive integers over (N-1)! is
/// always an integer.
mpz_class hilbert_polynomial_value(const UniPoly& k_poly, long n_vars, long k);

/// deg(K) - N, the closed form for the postulation number of a
/// Cohen-Macaulay prime quotient.
long postulation(const UniPoly& k_poly, long n_vars);

/// Largest k in 0..k_hi with HF(k) != HP(k), or -1 when they agree on the
/// whole range; the empirical counterpart of the closed form.
long last_disagreement(const UniPoly& k_poly, long n_vars, long k_hi);

/// deg(G_w) - l(w); the same for the full and effective ambients.
int regularity(const Permutation& w, GrothendieckEngine& engine);

struct HilbertReport {
    Permutation permutation;
    AmbientSpec ambient;
    UniPoly k_polynomial;
    long k_max = 0;
    std::vector<mpz_class> hf_table; // HF(k) for k = 0..k_max
    RatUniPoly hilbert_polynomial;
    long postulation = 0;
    int regularity = 0;
    bool hilbertian = false;
};

/// Assembles every invariant for one (permutation, ambient) pair.
/// k_max < 0 selects the default max(deg(K) - N + 3, 5), which always
/// straddles the postulation point.
HilbertReport hilbertian_report(const Permutation& w, const AmbientSpec& ambient,
                                GrothendieckEngine& engine, long k_max = -1);

} // namespace schubert

#endif
