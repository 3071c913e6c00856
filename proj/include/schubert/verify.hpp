#ifndef SCHUBERT_VERIFY_HPP
#define SCHUBERT_VERIFY_HPP

#include "schubert/perm.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace schubert {

/// Exhaustive per-permutation checks over S_n.
enum class Check {
    engine_agreement,    // transition G_w == pipe-dream G_w
    degree_bound,        // deg(G_w) <= |lambda(w)|, equality iff dominant
    binomial_bound,      // deg(G_w) <= n(n-1)/2
    hilbertian_full,     // full-ambient postulation < 0 (closed form and HF/HP scan)
    hilbertian_effective,// effective postulation < 0 iff not dominant; 0 on dominants
    length_diagram,      // diagram/rank-matrix invariants against l(w)
    oracle,              // brute-force graded dimensions vs K-polynomial series
};

std::vector<Check> all_checks();
std::string check_name(Check check);
std::optional<Check> parse_check(std::string_view name);

struct Counterexample {
    Permutation w;
    std::string detail;
};

struct CheckResult {
    Check check = Check::engine_agreement;
    long passed = 0;  // permutations with no violation (vacuous cases included)
    long failed = 0;
    long skipped = 0; // permutations whose oracle runs hit the tractability guard
    std::string note; // fixed scope description
    std::vector<Counterexample> counterexamples; // capped at kMaxCounterexamples
    static constexpr long kMaxCounterexamples = 10;

    long total() const { return passed + failed; }
    bool ok() const { return failed == 0; }
};

struct VerificationOutcome {
    int n = 0;
    int workers = 1;
    std::vector<CheckResult> results;
    bool passed() const;
};

/// Runs the selected checks for every w in S_n (lexicographic order).
/// workers <= 0 picks the hardware concurrency. Results are deterministic
/// regardless of the worker count.
VerificationOutcome run_verification(int n, const std::vector<Check>& checks, int workers = 0);

} // namespace schubert

#endif
