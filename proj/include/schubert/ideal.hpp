#ifndef SCHUBERT_IDEAL_HPP
#define SCHUBERT_IDEAL_HPP

#include "schubert/diagram.hpp"
#include "schubert/groth.hpp"
#include "schubert/hilbert.hpp"
#include "schubert/perm.hpp"
#include "schubert/poly.hpp"

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace schubert {

/// One determinantal generator: the minor of the generic matrix Z on the
/// given rows and columns, of size rank+1, demanded by the rank condition
/// at the source box.
struct MinorSpec {
    std::vector<int> rows; // ascending
    std::vector<int> cols; // ascending, same length as rows
    Box source;            // box (i,j) whose rank condition produced the minor
    int rank = 0;          // r_{ij}; minor size = rank + 1

    int size() const { return static_cast<int>(rows.size()); }
    bool operator==(const MinorSpec&) const = default;
};

/// Generators of a Schubert determinantal ideal together with the ambient
/// variable set they live in.
struct GeneratorSet {
    std::vector<Box> ambient_vars; // row-major
    std::vector<MinorSpec> minors; // deduplicated on (rows, cols), deterministic order
};

/// 1-based linearization of a fixed list of grid boxes, used to map z_{ij}
/// to polynomial variables.
class VariableIndex {
public:
    explicit VariableIndex(const std::vector<Box>& boxes);

    int count() const { return static_cast<int>(boxes_.size()); }
    int index_of(Box b) const; // throws std::invalid_argument for unknown boxes
    Box box_of(int index) const;

private:
    std::vector<Box> boxes_;
    std::map<Box, int> index_;
};

/// Fulton generators of I_w: for each selected box (i,j), all minors of
/// size r_{ij}+1 of the generic northwest i x j submatrix. essential_only
/// selects E(w); otherwise every box of the full n x n grid contributes
/// (full ambient only). Duplicate (rows, cols) pairs are emitted once.
GeneratorSet fulton_generators(const Permutation& w, bool essential_only, const AmbientSpec& ambient);

/// Leibniz expansion of the minor in the variables of the given index.
MultiPoly expand_minor(const MinorSpec& minor, const VariableIndex& vars);

/// Tractability ceilings for the brute-force oracle.
struct OracleGuard {
    long max_monomials = 20000;
    long max_rows = 200000;

    /// Reads SCHUBERT_MAX_MONOMIALS; when set, the row ceiling scales to
    /// ten times the monomial ceiling.
    static OracleGuard from_env();
};

/// Thrown when a brute-force computation would exceed its guard.
struct OracleTooLarge : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// dim (S/I)_k by exact linear algebra: the number of degree-k monomials
/// minus the rank of the matrix of coefficient vectors of
/// {monomial * g : g generator, deg(monomial) = k - deg(g)}.
mpz_class brute_force_hf(const GeneratorSet& gens, long k, const OracleGuard& guard = OracleGuard::from_env());

struct CrossCheckResult {
    struct Mismatch {
        long k = 0;
        std::string what; // which comparison disagreed
        mpz_class expected;
        mpz_class actual;
    };
    bool passed = true;
    std::vector<Mismatch> mismatches;
};

/// Compares the brute-force graded dimensions of the essential-set
/// generators against the K-polynomial series for k = 0..k_max, and (full
/// ambient) the essential-set against the all-boxes generator list.
/// Throws OracleTooLarge when the guard trips.
CrossCheckResult cross_check(const Permutation& w, const AmbientSpec& ambient, long k_max,
                             GrothendieckEngine& engine, const OracleGuard& guard = OracleGuard::from_env());

} // namespace schubert

#endif
