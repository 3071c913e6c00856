#include "schubert/hilbert.hpp"

#include "schubert/diagram.hpp"

#include <algorithm>
#include <stdexcept>

namespace schubert {

AmbientSpec AmbientSpec::full(const Permutation& w, int n) {
    if (n < w.normalized_size()) {
        throw std::invalid_argument("full ambient grid smaller than the permutation");
    }
    AmbientSpec a;
    a.kind = Kind::full;
    a.n = n;
    a.variable_count = static_cast<long>(n) * n;
    return a;
}

AmbientSpec AmbientSpec::effective_of(const Permutation& w) {
    const BoxSet region = effective_region(w);
    if (region.empty()) {
        throw std::invalid_argument("effective ambient needs a nonempty effective region; the identity has none");
    }
    AmbientSpec a;
    a.kind = Kind::effective;
    a.n = 0;
    a.variable_count = static_cast<long>(region.size());
    return a;
}

UniPoly k_polynomial(const Permutation& w, GrothendieckEngine& engine) {
    const MultiPoly& g = engine.polynomial(w);
    UniPoly k = g.specialize_to_1_minus_t();
    if (k.coefficient(0) != 1) {
        throw std::logic_error("K-polynomial constant term is not 1");
    }
    if (k.degree() != g.total_degree()) {
        throw std::logic_error("K-polynomial degree dropped below deg(G_w)");
    }
    return k;
}

mpz_class hilbert_function(const UniPoly& k_poly, long n_vars, long k) {
    if (n_vars < 1) throw std::invalid_argument("variable count must be >= 1");
    if (k < 0) throw std::invalid_argument("degree k must be >= 0");
    mpz_class total = 0;
    const auto& coeffs = k_poly.coefficients();
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
        if (coeffs[j] == 0) continue;
        total += coeffs[j] * binomial(n_vars - 1 + k - static_cast<long>(j), n_vars - 1);
    }
    return total;
}

namespace {

mpz_class factorial(long n) {
    mpz_class out;
    mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
    return out;
}

} // namespace

RatUniPoly hilbert_polynomial(const UniPoly& k_poly, long n_vars) {
    if (n_vars < 1) throw std::invalid_argument("variable count must be >= 1");
    const mpq_class denom(factorial(n_vars - 1));
    RatUniPoly total;
    const auto& coeffs = k_poly.coefficients();
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
        if (coeffs[j] == 0) continue;
        RatUniPoly basis = RatUniPoly::constant(mpq_class(coeffs[j]) / denom);
        for (long c = 1; c <= n_vars - 1; ++c) {
            // multiply by (k - j + c)
            basis = basis * RatUniPoly::from_coefficients(
                {mpq_class(c - static_cast<long>(j)), mpq_class(1)});
        }
        total += basis;
    }
    return total;
}

mpz_class hilbert_polynomial_value(const UniPoly& k_poly, long n_vars, long k) {
    if (n_vars < 1) throw std::invalid_argument("variable count must be >= 1");
    const mpz_class denom = factorial(n_vars - 1);
    mpz_class total = 0;
    const auto& coeffs = k_poly.coefficients();
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
        if (coeffs[j] == 0) continue;
        mpz_class prod = 1;
        for (long c = 1; c <= n_vars - 1 && prod != 0; ++c) {
            prod *= k - static_cast<long>(j) + c;
        }
        if (prod == 0) continue;
        mpz_class term;
        mpz_divexact(term.get_mpz_t(), prod.get_mpz_t(), denom.get_mpz_t());
        total += coeffs[j] * term;
    }
    return total;
}

long postulation(const UniPoly& k_poly, long n_vars) {
    if (n_vars < 1) throw std::invalid_argument("variable count must be >= 1");
    return static_cast<long>(k_poly.degree()) - n_vars;
}

long last_disagreement(const UniPoly& k_poly, long n_vars, long k_hi) {
    long last = -1;
    for (long k = 0; k <= k_hi; ++k) {
        if (hilbert_function(k_poly, n_vars, k) != hilbert_polynomial_value(k_poly, n_vars, k)) {
            last = k;
        }
    }
    return last;
}

int regularity(const Permutation& w, GrothendieckEngine& engine) {
    return engine.degree(w) - coxeter_length(w);
}

HilbertReport hilbertian_report(const Permutation& w, const AmbientSpec& ambient,
                                GrothendieckEngine& engine, long k_max) {
    if (ambient.kind == AmbientSpec::Kind::full && ambient.n < w.normalized_size()) {
        throw std::invalid_argument("full ambient grid smaller than the permutation");
    }
    HilbertReport report;
    report.permutation = w.normalized();
    report.ambient = ambient;
    report.k_polynomial = k_polynomial(w, engine);
    const long n_vars = ambient.variable_count;
    report.postulation = postulation(report.k_polynomial, n_vars);
    report.regularity = regularity(w, engine);
    report.hilbertian = report.postulation < 0;
    report.k_max = k_max >= 0 ? k_max : std::max(report.postulation + 3, long{5});
    report.hf_table.reserve(static_cast<std::size_t>(report.k_max) + 1);
    for (long k = 0; k <= report.k_max; ++k) {
        report.hf_table.push_back(hilbert_function(report.k_polynomial, n_vars, k));
    }
    report.hilbert_polynomial = hilbert_polynomial(report.k_polynomial, n_vars);
    return report;
}

} // namespace schubert
