#include "schubert/json_io.hpp"

#include <stdexcept>
#include <string>

namespace schubert {

namespace {

std::string rational_text(const mpq_class& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

mpz_class mpz_from_string(const std::string& s) {
    mpz_class out;
    if (mpz_set_str(out.get_mpz_t(), s.c_str(), 10) != 0) {
        throw std::invalid_argument("not a decimal integer: " + s);
    }
    return out;
}

mpq_class mpq_from_string(const std::string& s) {
    const auto slash = s.find('/');
    if (slash == std::string::npos) {
        return mpq_class(mpz_from_string(s));
    }
    const mpz_class num = mpz_from_string(s.substr(0, slash));
    const mpz_class den = mpz_from_string(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator: " + s);
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

} // namespace

Json to_json(const Permutation& w) {
    return Json(w.normalized().word());
}

Permutation permutation_from_json(const Json& j) {
    return Permutation::from_one_line(j.get<std::vector<int>>());
}

Json to_json(const Box& b) {
    return Json::array({b.row, b.col});
}

Json to_json(const BoxSet& s) {
    Json out = Json::array();
    for (const Box& b : s) out.push_back(to_json(b));
    return out;
}

Json to_json(const RankMatrix& r) {
    Json out = Json::array();
    for (int i = 1; i <= r.n(); ++i) {
        Json row = Json::array();
        for (int j = 1; j <= r.n(); ++j) row.push_back(r.at(i, j));
        out.push_back(std::move(row));
    }
    return out;
}

Json to_json(const MultiPoly& p) {
    Json terms = Json::array();
    for (const auto& [exps, coeff] : p.terms()) {
        Json term;
        term["coeff"] = coeff.get_str();
        term["exps"] = exps;
        terms.push_back(std::move(term));
    }
    return Json{{"terms", std::move(terms)}};
}

MultiPoly multipoly_from_json(const Json& j) {
    MultiPoly p;
    for (const Json& term : j.at("terms")) {
        p.add_term(term.at("exps").get<std::vector<int>>(),
                   mpz_from_string(term.at("coeff").get<std::string>()));
    }
    return p;
}

Json to_json(const UniPoly& p) {
    Json coeffs = Json::array();
    for (const mpz_class& c : p.coefficients()) coeffs.push_back(c.get_str());
    return Json{{"coeffs", std::move(coeffs)}};
}

UniPoly unipoly_from_json(const Json& j) {
    std::vector<mpz_class> coeffs;
    for (const Json& c : j.at("coeffs")) coeffs.push_back(mpz_from_string(c.get<std::string>()));
    return UniPoly::from_coefficients(std::move(coeffs));
}

Json to_json(const RatUniPoly& p) {
    Json coeffs = Json::array();
    for (const mpq_class& c : p.coefficients()) coeffs.push_back(rational_text(c));
    return Json{{"coeffs", std::move(coeffs)}};
}

RatUniPoly ratunipoly_from_json(const Json& j) {
    std::vector<mpq_class> coeffs;
    for (const Json& c : j.at("coeffs")) coeffs.push_back(mpq_from_string(c.get<std::string>()));
    return RatUniPoly::from_coefficients(std::move(coeffs));
}

Json to_json(const AmbientSpec& a) {
    Json out;
    if (a.kind == AmbientSpec::Kind::full) {
        out["kind"] = "full";
        out["n"] = a.n;
    } else {
        out["kind"] = "effective";
    }
    out["variable_count"] = a.variable_count;
    return out;
}

Json to_json(const MinorSpec& m) {
    Json out;
    out["rows"] = m.rows;
    out["cols"] = m.cols;
    out["source"] = to_json(m.source);
    out["rank"] = m.rank;
    return out;
}

Json to_json(const GeneratorSet& g) {
    Json vars = Json::array();
    for (const Box& b : g.ambient_vars) vars.push_back(to_json(b));
    Json minors = Json::array();
    for (const MinorSpec& m : g.minors) minors.push_back(to_json(m));
    Json out;
    out["ambient_variables"] = std::move(vars);
    out["minors"] = std::move(minors);
    return out;
}

Json to_json(const HilbertReport& report) {
    Json out;
    out["schema_version"] = kSchemaVersion;
    out["permutation"] = to_json(report.permutation);
    out["ambient"] = to_json(report.ambient);
    out["k_polynomial"] = to_json(report.k_polynomial);
    out["k_max"] = report.k_max;
    Json hf = Json::array();
    for (const mpz_class& v : report.hf_table) hf.push_back(v.get_str());
    out["hf_table"] = std::move(hf);
    out["hilbert_polynomial"] = to_json(report.hilbert_polynomial);
    out["postulation"] = report.postulation;
    out["regularity"] = report.regularity;
    out["hilbertian"] = report.hilbertian;
    return out;
}

Json to_json(const VerificationOutcome& outcome) {
    Json out;
    out["schema_version"] = kSchemaVersion;
    out["n"] = outcome.n;
    out["workers"] = outcome.workers;
    Json checks = Json::array();
    for (const CheckResult& r : outcome.results) {
        Json c;
        c["check"] = check_name(r.check);
        c["passed"] = r.passed;
        c["failed"] = r.failed;
        c["skipped"] = r.skipped;
        if (!r.note.empty()) c["note"] = r.note;
        Json exs = Json::array();
        for (const Counterexample& ex : r.counterexamples) {
            exs.push_back(Json{{"permutation", to_json(ex.w)}, {"detail", ex.detail}});
        }
        c["counterexamples"] = std::move(exs);
        checks.push_back(std::move(c));
    }
    out["checks"] = std::move(checks);
    out["all_pass"] = outcome.passed();
    return out;
}

Json to_json(const CrossCheckResult& result) {
    Json out;
    out["passed"] = result.passed;
    Json mismatches = Json::array();
    for (const auto& m : result.mismatches) {
        Json entry;
        entry["k"] = m.k;
        entry["comparison"] = m.what;
        entry["expected"] = m.expected.get_str();
        entry["actual"] = m.actual.get_str();
        mismatches.push_back(std::move(entry));
    }
    out["mismatches"] = std::move(mismatches);
    return out;
}

} // namespace schubert
