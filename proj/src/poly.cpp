#include "schubert/poly.hpp"

#include <numeric>
#include <stdexcept>
#include <utility>

namespace schubert {

namespace {

void trim_exponents(Exponents& e) {
    while (!e.empty() && e.back() == 0) e.pop_back();
}

int exponent_sum(const Exponents& e) {
    return std::accumulate(e.begin(), e.end(), 0);
}

} // namespace

MultiPoly MultiPoly::constant(mpz_class c) {
    MultiPoly p;
    p.add_term({}, c);
    return p;
}

MultiPoly MultiPoly::variable(int i) {
    if (i < 1) throw std::invalid_argument("variable index must be >= 1");
    Exponents e(static_cast<std::size_t>(i), 0);
    e.back() = 1;
    return monomial(std::move(e), 1);
}

MultiPoly MultiPoly::monomial(Exponents exps, mpz_class c) {
    MultiPoly p;
    p.add_term(std::move(exps), c);
    return p;
}

void MultiPoly::add_term(Exponents exps, const mpz_class& c) {
    if (c == 0) return;
    for (int e : exps) {
        if (e < 0) throw std::invalid_argument("negative exponent");
    }
    trim_exponents(exps);
    auto [it, inserted] = terms_.try_emplace(std::move(exps), c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

mpz_class MultiPoly::coefficient(const Exponents& exps) const {
    Exponents key = exps;
    trim_exponents(key);
    auto it = terms_.find(key);
    return it == terms_.end() ? mpz_class(0) : it->second;
}

int MultiPoly::total_degree() const {
    if (is_zero()) throw std::domain_error("total degree of the zero polynomial");
    int best = 0;
    for (const auto& [e, c] : terms_) best = std::max(best, exponent_sum(e));
    return best;
}

int MultiPoly::min_total_degree() const {
    if (is_zero()) throw std::domain_error("minimal total degree of the zero polynomial");
    int best = -1;
    for (const auto& [e, c] : terms_) {
        const int d = exponent_sum(e);
        if (best < 0 || d < best) best = d;
    }
    return best;
}

mpz_class MultiPoly::evaluate_all_ones() const {
    mpz_class total = 0;
    for (const auto& [e, c] : terms_) total += c;
    return total;
}

UniPoly MultiPoly::specialize_to_1_minus_t() const {
    // Each term c * x^e becomes c * (1-t)^{|e|}; cache powers of 1-t since
    // many terms share a total degree.
    std::vector<UniPoly> pow{UniPoly::constant(1)};
    const UniPoly base = UniPoly::constant(1) - UniPoly::t();
    UniPoly result;
    for (const auto& [e, c] : terms_) {
        const int d = exponent_sum(e);
        while (static_cast<int>(pow.size()) <= d) pow.push_back(pow.back() * base);
        result += UniPoly::constant(c) * pow[static_cast<std::size_t>(d)];
    }
    return result;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
}

MultiPoly MultiPoly::operator*(const MultiPoly& rhs) const {
    MultiPoly out;
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : rhs.terms_) {
            Exponents e(std::max(ea.size(), eb.size()), 0);
            for (std::size_t i = 0; i < ea.size(); ++i) e[i] += ea[i];
            for (std::size_t i = 0; i < eb.size(); ++i) e[i] += eb[i];
            out.add_term(std::move(e), ca * cb);
        }
    }
    return out;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly out;
    for (const auto& [e, c] : terms_) out.add_term(e, -c);
    return out;
}

UniPoly UniPoly::constant(mpz_class c) {
    UniPoly p;
    if (c != 0) p.coeffs_.push_back(std::move(c));
    return p;
}

UniPoly UniPoly::t() {
    UniPoly p;
    p.coeffs_ = {0, 1};
    return p;
}

UniPoly UniPoly::from_coefficients(std::vector<mpz_class> coeffs) {
    UniPoly p;
    p.coeffs_ = std::move(coeffs);
    p.trim();
    return p;
}

int UniPoly::degree() const {
    if (is_zero()) throw std::domain_error("degree of the zero polynomial");
    return static_cast<int>(coeffs_.size()) - 1;
}

mpz_class UniPoly::coefficient(int d) const {
    if (d < 0 || d >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[static_cast<std::size_t>(d)];
}

mpz_class UniPoly::evaluate(const mpz_class& x) const {
    mpz_class acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

UniPoly& UniPoly::operator+=(const UniPoly& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

UniPoly UniPoly::operator*(const UniPoly& rhs) const {
    if (is_zero() || rhs.is_zero()) return {};
    UniPoly out;
    out.coeffs_.assign(coeffs_.size() + rhs.coeffs_.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
            out.coeffs_[i + j] += coeffs_[i] * rhs.coeffs_[j];
        }
    }
    out.trim();
    return out;
}

void UniPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

RatUniPoly RatUniPoly::constant(mpq_class c) {
    RatUniPoly p;
    if (c != 0) {
        c.canonicalize();
        p.coeffs_.push_back(std::move(c));
    }
    return p;
}

RatUniPoly RatUniPoly::from_coefficients(std::vector<mpq_class> coeffs) {
    RatUniPoly p;
    p.coeffs_ = std::move(coeffs);
    for (mpq_class& c : p.coeffs_) c.canonicalize();
    p.trim();
    return p;
}

int RatUniPoly::degree() const {
    if (is_zero()) throw std::domain_error("degree of the zero polynomial");
    return static_cast<int>(coeffs_.size()) - 1;
}

mpq_class RatUniPoly::coefficient(int d) const {
    if (d < 0 || d >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[static_cast<std::size_t>(d)];
}

mpq_class RatUniPoly::evaluate(const mpz_class& x) const {
    mpq_class acc = 0;
    const mpq_class xq(x);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * xq + *it;
    return acc;
}

RatUniPoly& RatUniPoly::operator+=(const RatUniPoly& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

RatUniPoly& RatUniPoly::operator-=(const RatUniPoly& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

RatUniPoly RatUniPoly::operator*(const RatUniPoly& rhs) const {
    if (is_zero() || rhs.is_zero()) return {};
    RatUniPoly out;
    out.coeffs_.assign(coeffs_.size() + rhs.coeffs_.size() - 1, mpq_class(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
            out.coeffs_[i + j] += coeffs_[i] * rhs.coeffs_[j];
        }
    }
    out.trim();
    return out;
}

void RatUniPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

mpz_class binomial(long n, long k) {
    if (k < 0 || n < k) return 0;
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

} // namespace schubert
