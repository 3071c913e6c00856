#ifndef SCHUBERT_POLY_HPP
#define SCHUBERT_POLY_HPP

#include <gmpxx.h>

#include <map>
#include <vector>

namespace schubert {

/// Exponent vector over variables x_1, x_2, ...; entry i-1 is the exponent
/// of x_i. Canonical form has no trailing zeros (the constant term is the
/// empty vector).
using Exponents = std::vector<int>;

/// Strict ordering placing lexicographically larger exponent vectors first;
/// missing entries compare as zero.
struct DescLexOrder {
    bool operator()(const Exponents& a, const Exponents& b) const {
        const std::size_t n = std::max(a.size(), b.size());
        for (std::size_t i = 0; i < n; ++i) {
            const int ai = i < a.size() ? a[i] : 0;
            const int bi = i < b.size() ? b[i] : 0;
            if (ai != bi) return ai > bi;
        }
        return false;
    }
};

class UniPoly;

/// Sparse multivariate polynomial with exact integer coefficients. Terms are
/// kept in descending lexicographic order on exponent vectors; no zero
/// coefficient is ever stored.
class MultiPoly {
public:
    using TermMap = std::map<Exponents, mpz_class, DescLexOrder>;

    MultiPoly() = default; // zero

    static MultiPoly constant(mpz_class c);
    static MultiPoly variable(int i); // x_i, i >= 1
    static MultiPoly monomial(Exponents exps, mpz_class c);

    /// Adds c * x^exps, trimming trailing zero exponents and dropping the
    /// term if the coefficient cancels.
    void add_term(Exponents exps, const mpz_class& c);

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }
    mpz_class coefficient(const Exponents& exps) const;

    /// Largest exponent sum over terms; throws std::domain_error on zero.
    int total_degree() const;
    /// Smallest exponent sum over terms; throws std::domain_error on zero.
    int min_total_degree() const;

    /// Sum of all coefficients (the value at x_1 = x_2 = ... = 1).
    mpz_class evaluate_all_ones() const;

    /// Substitutes 1 - t for every variable, expanding exactly.
    UniPoly specialize_to_1_minus_t() const;

    MultiPoly& operator+=(const MultiPoly& rhs);
    MultiPoly& operator-=(const MultiPoly& rhs);
    MultiPoly operator*(const MultiPoly& rhs) const;
    friend MultiPoly operator+(MultiPoly lhs, const MultiPoly& rhs) { return lhs += rhs; }
    friend MultiPoly operator-(MultiPoly lhs, const MultiPoly& rhs) { return lhs -= rhs; }
    MultiPoly operator-() const;

    bool operator==(const MultiPoly&) const = default;

private:
    TermMap terms_;
};

/// Dense univariate polynomial in t with exact integer coefficients;
/// coefficient index = degree, leading coefficient nonzero unless zero.
class UniPoly {
public:
    UniPoly() = default; // zero

    static UniPoly constant(mpz_class c);
    static UniPoly t();
    static UniPoly from_coefficients(std::vector<mpz_class> coeffs);

    bool is_zero() const { return coeffs_.empty(); }
    /// Throws std::domain_error on the zero polynomial.
    int degree() const;
    mpz_class coefficient(int d) const;
    const std::vector<mpz_class>& coefficients() const { return coeffs_; }

    mpz_class evaluate(const mpz_class& x) const;

    UniPoly& operator+=(const UniPoly& rhs);
    UniPoly& operator-=(const UniPoly& rhs);
    UniPoly operator*(const UniPoly& rhs) const;
    friend UniPoly operator+(UniPoly lhs, const UniPoly& rhs) { return lhs += rhs; }
    friend UniPoly operator-(UniPoly lhs, const UniPoly& rhs) { return lhs -= rhs; }

    bool operator==(const UniPoly&) const = default;

private:
    void trim();
    std::vector<mpz_class> coeffs_;
};

/// Dense univariate polynomial with exact rational coefficients (reduced,
/// positive denominators); used for Hilbert polynomials in k.
class RatUniPoly {
public:
    RatUniPoly() = default; // zero

    static RatUniPoly constant(mpq_class c);
    static RatUniPoly from_coefficients(std::vector<mpq_class> coeffs);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const;
    mpq_class coefficient(int d) const;
    const std::vector<mpq_class>& coefficients() const { return coeffs_; }

    mpq_class evaluate(const mpz_class& x) const;

    RatUniPoly& operator+=(const RatUniPoly& rhs);
    RatUniPoly& operator-=(const RatUniPoly& rhs);
    RatUniPoly operator*(const RatUniPoly& rhs) const;
    friend RatUniPoly operator+(RatUniPoly lhs, const RatUniPoly& rhs) { return lhs += rhs; }
    friend RatUniPoly operator-(RatUniPoly lhs, const RatUniPoly& rhs) { return lhs -= rhs; }

    bool operator==(const RatUniPoly&) const = default;

private:
    void trim();
    std::vector<mpq_class> coeffs_;
};

/// C(n, k) as an exact integer, 0 when n < k or k < 0. n may be negative.
mpz_class binomial(long n, long k);

} // namespace schubert

#endif
