#include "schubert/format.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace schubert {

std::string default_variable_name(int index) {
    return "x" + std::to_string(index);
}

namespace {

// coefficient magnitude and monomial body, without the sign
std::string term_body(const mpz_class& coeff, const std::string& monomial) {
    mpz_class mag = abs(coeff);
    if (monomial.empty()) return mag.get_str();
    if (mag == 1) return monomial;
    return mag.get_str() + "*" + monomial;
}

void append_term(std::string& out, bool negative, const std::string& body) {
    if (out.empty()) {
        if (negative) out += "-";
        out += body;
    } else {
        out += negative ? " - " : " + ";
        out += body;
    }
}

std::string power_text(std::string_view var, int exp) {
    std::string s{var};
    if (exp > 1) s += "^" + std::to_string(exp);
    return s;
}

} // namespace

std::string to_text(const MultiPoly& p, const VariableNamer& namer) {
    if (p.is_zero()) return "0";
    // Map iteration is descending lex; a stable sort by total degree keeps
    // that order within each degree.
    std::vector<std::pair<const Exponents*, const mpz_class*>> terms;
    terms.reserve(p.term_count());
    for (const auto& [e, c] : p.terms()) terms.push_back({&e, &c});
    std::stable_sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        return std::accumulate(a.first->begin(), a.first->end(), 0) <
               std::accumulate(b.first->begin(), b.first->end(), 0);
    });

    std::string out;
    for (const auto& [exps, coeff] : terms) {
        std::string monomial;
        for (std::size_t i = 0; i < exps->size(); ++i) {
            const int e = (*exps)[i];
            if (e == 0) continue;
            if (!monomial.empty()) monomial += "*";
            monomial += power_text(namer(static_cast<int>(i) + 1), e);
        }
        append_term(out, *coeff < 0, term_body(*coeff, monomial));
    }
    return out;
}

std::string to_text(const UniPoly& p, std::string_view var) {
    if (p.is_zero()) return "0";
    std::string out;
    const auto& coeffs = p.coefficients();
    for (std::size_t d = 0; d < coeffs.size(); ++d) {
        if (coeffs[d] == 0) continue;
        const std::string monomial = d == 0 ? "" : power_text(var, static_cast<int>(d));
        append_term(out, coeffs[d] < 0, term_body(coeffs[d], monomial));
    }
    return out;
}

std::string to_text(const RatUniPoly& p, std::string_view var) {
    if (p.is_zero()) return "0";
    std::string out;
    const auto& coeffs = p.coefficients();
    for (std::size_t d = 0; d < coeffs.size(); ++d) {
        if (coeffs[d] == 0) continue;
        const mpq_class mag = abs(coeffs[d]);
        std::string body = mag.get_num().get_str();
        if (mag.get_den() != 1) body += "/" + mag.get_den().get_str();
        if (d > 0) {
            const std::string monomial = power_text(var, static_cast<int>(d));
            body = mag == 1 ? monomial : body + "*" + monomial;
        }
        append_term(out, coeffs[d] < 0, body);
    }
    return out;
}

std::string diagram_grid(const Permutation& w, int n) {
    const BoxSet diagram = rothe_diagram(w);
    const BoxSet essential = essential_set(w);
    std::ostringstream out;
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            if (j > 1) out << ' ';
            const Box b{i, j};
            if (w(i) == j) {
                out << 'o';
            } else if (essential.contains(b)) {
                const int r = rank_at(w, b);
                out << (r <= 9 ? static_cast<char>('0' + r) : '#');
            } else if (diagram.contains(b)) {
                out << '#';
            } else {
                out << '.';
            }
        }
        out << '\n';
    }
    return out.str();
}

} // namespace schubert
