#include "schubert/verify.hpp"

#include "schubert/diagram.hpp"
#include "schubert/format.hpp"
#include "schubert/groth.hpp"
#include "schubert/hilbert.hpp"
#include "schubert/ideal.hpp"
#include "schubert/poly.hpp"

#include <atomic>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace schubert {

std::vector<Check> all_checks() {
    return {Check::engine_agreement, Check::degree_bound,      Check::binomial_bound,
            Check::hilbertian_full,  Check::hilbertian_effective, Check::length_diagram,
            Check::oracle};
}

std::string check_name(Check check) {
    switch (check) {
        case Check::engine_agreement: return "engine-agreement";
        case Check::degree_bound: return "degree-bound";
        case Check::binomial_bound: return "binomial-bound";
        case Check::hilbertian_full: return "hilbertian-full";
        case Check::hilbertian_effective: return "hilbertian-effective";
        case Check::length_diagram: return "length-diagram";
        case Check::oracle: return "oracle";
    }
    throw std::logic_error("unknown check");
}

std::optional<Check> parse_check(std::string_view name) {
    for (Check c : all_checks()) {
        if (check_name(c) == name) return c;
    }
    return std::nullopt;
}

bool VerificationOutcome::passed() const {
    for (const CheckResult& r : results) {
        if (!r.ok()) return false;
    }
    return true;
}

namespace {

constexpr long kOracleKMax = 4;
constexpr int kOracleFullMaxN = 3;
constexpr long kOracleEffectiveMaxRegion = 6;

enum class Status { pass, fail, skip };

struct PerPermOutcome {
    Status status = Status::pass;
    std::string detail;
};

std::string scope_note(Check check, int n) {
    switch (check) {
        case Check::hilbertian_full:
            return n < 2 ? "vacuous below n = 2" : "";
        case Check::hilbertian_effective:
            return "identity passes vacuously (empty effective region)";
        case Check::oracle: {
            std::ostringstream note;
            note << "k <= " << kOracleKMax << "; full ambient for n <= " << kOracleFullMaxN
                 << "; effective ambient when 1 <= |lambda(w)| <= " << kOracleEffectiveMaxRegion;
            return note.str();
        }
        default:
            return "";
    }
}

PerPermOutcome check_engine_agreement(const Permutation& w, GrothendieckEngine& engine,
                                      const GrothendieckTable& table) {
    auto it = table.find(w);
    if (it == table.end()) {
        return {Status::fail, "no pipe dream produced the permutation"};
    }
    const MultiPoly& transition = engine.polynomial(w);
    if (transition == it->second) return {};
    return {Status::fail, "transition: " + to_text(transition) + "; pipe dream: " + to_text(it->second)};
}

PerPermOutcome check_degree_bound(const Permutation& w, GrothendieckEngine& engine) {
    const int degree = engine.degree(w);
    const long region = static_cast<long>(effective_region(w).size());
    const bool dominant = is_dominant(w);
    if (degree > region) {
        return {Status::fail, "deg(G_w) = " + std::to_string(degree) + " exceeds |lambda(w)| = " + std::to_string(region)};
    }
    if ((degree == region) != dominant) {
        return {Status::fail, "deg(G_w) = " + std::to_string(degree) + ", |lambda(w)| = " + std::to_string(region) +
                                  ", dominant = " + (dominant ? "true" : "false") +
                                  "; equality must hold exactly on dominant permutations"};
    }
    return {};
}

PerPermOutcome check_binomial_bound(const Permutation& w, GrothendieckEngine& engine, int n) {
    const int degree = engine.degree(w);
    const int bound = n * (n - 1) / 2;
    if (degree > bound) {
        return {Status::fail, "deg(G_w) = " + std::to_string(degree) + " exceeds n(n-1)/2 = " + std::to_string(bound)};
    }
    return {};
}

PerPermOutcome check_hilbertian_full(const Permutation& w, GrothendieckEngine& engine, int n) {
    if (n < 2) return {Status::skip, ""};
    const UniPoly k_poly = k_polynomial(w, engine);
    const long n_vars = static_cast<long>(n) * n;
    const long closed = postulation(k_poly, n_vars);
    const long empirical = last_disagreement(k_poly, n_vars, k_poly.degree() + 3);
    if (closed < 0 && empirical == -1) return {};
    return {Status::fail, "postulation closed form " + std::to_string(closed) + ", last HF/HP disagreement " +
                              std::to_string(empirical) + " (expected < 0 and none)"};
}

PerPermOutcome check_hilbertian_effective(const Permutation& w, GrothendieckEngine& engine) {
    if (w.is_identity()) return {Status::skip, ""};
    const UniPoly k_poly = k_polynomial(w, engine);
    const long n_vars = static_cast<long>(effective_region(w).size());
    const long closed = postulation(k_poly, n_vars);
    const long empirical = last_disagreement(k_poly, n_vars, k_poly.degree() + 3);
    const bool dominant = is_dominant(w);
    if (dominant) {
        const mpz_class hf0 = hilbert_function(k_poly, n_vars, 0);
        const mpz_class hp0 = hilbert_polynomial_value(k_poly, n_vars, 0);
        if (closed == 0 && empirical == 0 && hf0 == 1 && hp0 == 0) return {};
        return {Status::fail, "dominant permutation: postulation " + std::to_string(closed) +
                                  ", last disagreement " + std::to_string(empirical) + ", HF(0) = " + hf0.get_str() +
                                  ", HP(0) = " + hp0.get_str() + " (expected 0, 0, 1, 0)"};
    }
    if (closed < 0 && empirical == -1) return {};
    return {Status::fail, "non-dominant permutation: postulation " + std::to_string(closed) +
                              ", last HF/HP disagreement " + std::to_string(empirical) + " (expected < 0 and none)"};
}

PerPermOutcome check_length_diagram(const Permutation& w, int n) {
    const BoxSet diagram = rothe_diagram(w);
    const BoxSet essential = essential_set(w);
    const BoxSet region = effective_region(w);
    const int length = coxeter_length(w);

    if (static_cast<int>(diagram.size()) != length) {
        return {Status::fail, "|D(w)| = " + std::to_string(diagram.size()) + " but l(w) = " + std::to_string(length)};
    }
    if (!essential.subset_of(diagram)) {
        return {Status::fail, "essential set is not contained in the Rothe diagram"};
    }
    std::vector<Box> locally_essential;
    for (const Box& b : diagram) {
        if (!diagram.contains({b.row, b.col + 1}) && !diagram.contains({b.row + 1, b.col})) {
            locally_essential.push_back(b);
        }
    }
    if (!(essential == BoxSet(locally_essential))) {
        return {Status::fail, "essential set differs from the boxes of D(w) with no D(w)-box east or south"};
    }
    if (!is_young_diagram(region)) {
        return {Status::fail, "effective region is not a Young diagram"};
    }
    if (!diagram.subset_of(region)) {
        return {Status::fail, "Rothe diagram is not contained in the effective region"};
    }
    const bool dominant = is_dominant(w);
    if (dominant != (diagram == region) || dominant != is_young_diagram(diagram)) {
        return {Status::fail, "dominance test disagrees with lambda(w) = D(w) or with D(w) being a partition shape"};
    }
    const RankMatrix ranks = rank_matrix(w, n);
    if (ranks.at(n, n) != n) {
        return {Status::fail, "rank matrix corner is not n"};
    }
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            const int up = i > 1 ? ranks.at(i, j) - ranks.at(i - 1, j) : ranks.at(i, j);
            const int left = j > 1 ? ranks.at(i, j) - ranks.at(i, j - 1) : ranks.at(i, j);
            if (up < 0 || up > 1 || left < 0 || left > 1) {
                return {Status::fail, "rank matrix staircase violated at (" + std::to_string(i) + "," +
                                          std::to_string(j) + ")"};
            }
        }
    }
    return {};
}

PerPermOutcome check_oracle(const Permutation& w, GrothendieckEngine& engine, int n) {
    bool ran_any = false;
    bool skipped_any = false;
    try {
        if (n <= kOracleFullMaxN) {
            ran_any = true;
            const CrossCheckResult full = cross_check(w, AmbientSpec::full(w, n), kOracleKMax, engine);
            if (!full.passed) {
                const auto& m = full.mismatches.front();
                return {Status::fail, "full ambient, k = " + std::to_string(m.k) + ", " + m.what + ": expected " +
                                          m.expected.get_str() + ", got " + m.actual.get_str()};
            }
        }
        const long region = static_cast<long>(effective_region(w).size());
        if (region >= 1 && region <= kOracleEffectiveMaxRegion) {
            ran_any = true;
            const CrossCheckResult eff = cross_check(w, AmbientSpec::effective_of(w), kOracleKMax, engine);
            if (!eff.passed) {
                const auto& m = eff.mismatches.front();
                return {Status::fail, "effective ambient, k = " + std::to_string(m.k) + ", " + m.what +
                                          ": expected " + m.expected.get_str() + ", got " + m.actual.get_str()};
            }
        }
    } catch (const OracleTooLarge&) {
        skipped_any = true;
    }
    if (!ran_any || skipped_any) return {Status::skip, ""};
    return {};
}

} // namespace

VerificationOutcome run_verification(int n, const std::vector<Check>& checks, int workers) {
    const std::vector<Permutation> perms = all_permutations(n);
    if (workers <= 0) {
        workers = static_cast<int>(std::thread::hardware_concurrency());
        if (workers < 1) workers = 1;
    }
    if (static_cast<std::size_t>(workers) > perms.size()) {
        workers = static_cast<int>(perms.size());
    }

    bool need_table = false;
    for (Check c : checks) {
        if (c == Check::engine_agreement) need_table = true;
    }
    const GrothendieckTable table = need_table ? pipe_dream_table(n) : GrothendieckTable{};

    // outcomes[perm][check], filled by workers claiming permutation indices
    // through an atomic counter; aggregation below is index-ordered, so the
    // reported results do not depend on the worker count.
    std::vector<std::vector<PerPermOutcome>> outcomes(
        perms.size(), std::vector<PerPermOutcome>(checks.size()));
    std::atomic<std::size_t> next{0};
    std::atomic<bool> aborted{false};
    std::vector<std::string> worker_errors(static_cast<std::size_t>(workers));

    auto work = [&](int worker_id) {
        GrothendieckEngine engine;
        try {
            while (true) {
                const std::size_t idx = next.fetch_add(1);
                if (idx >= perms.size() || aborted.load()) return;
                const Permutation& w = perms[idx];
                for (std::size_t c = 0; c < checks.size(); ++c) {
                    PerPermOutcome outcome;
                    switch (checks[c]) {
                        case Check::engine_agreement:
                            outcome = check_engine_agreement(w, engine, table);
                            break;
                        case Check::degree_bound:
                            outcome = check_degree_bound(w, engine);
                            break;
                        case Check::binomial_bound:
                            outcome = check_binomial_bound(w, engine, n);
                            break;
                        case Check::hilbertian_full:
                            outcome = check_hilbertian_full(w, engine, n);
                            break;
                        case Check::hilbertian_effective:
                            outcome = check_hilbertian_effective(w, engine);
                            break;
                        case Check::length_diagram:
                            outcome = check_length_diagram(w, n);
                            break;
                        case Check::oracle:
                            outcome = check_oracle(w, engine, n);
                            break;
                    }
                    outcomes[idx][c] = std::move(outcome);
                }
            }
        } catch (const std::exception& e) {
            worker_errors[static_cast<std::size_t>(worker_id)] = e.what();
            aborted.store(true);
        }
    };

    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int t = 0; t < workers; ++t) pool.emplace_back(work, t);
        for (std::thread& t : pool) t.join();
    }
    for (const std::string& err : worker_errors) {
        if (!err.empty()) throw std::runtime_error("verification worker failed: " + err);
    }

    VerificationOutcome outcome;
    outcome.n = n;
    outcome.workers = workers;
    for (std::size_t c = 0; c < checks.size(); ++c) {
        CheckResult result;
        result.check = checks[c];
        result.note = scope_note(checks[c], n);
        for (std::size_t idx = 0; idx < perms.size(); ++idx) {
            const PerPermOutcome& per = outcomes[idx][c];
            if (per.status == Status::fail) {
                ++result.failed;
                if (static_cast<long>(result.counterexamples.size()) < CheckResult::kMaxCounterexamples) {
                    result.counterexamples.push_back({perms[idx].normalized(), per.detail});
                }
            } else {
                ++result.passed;
                if (per.status == Status::skip) ++result.skipped;
            }
        }
        outcome.results.push_back(std::move(result));
    }
    return outcome;
}

} // namespace schubert
