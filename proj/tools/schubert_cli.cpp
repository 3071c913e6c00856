#include "schubert/diagram.hpp"
#include "schubert/format.hpp"
#include "schubert/groth.hpp"
#include "schubert/hilbert.hpp"
#include "schubert/ideal.hpp"
#include "schubert/json_io.hpp"
#include "schubert/perm.hpp"
#include "schubert/verify.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace schubert;

constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;

void emit_json(const Json& j) {
    std::cout << j.dump(2) << "\n";
}

std::string box_text(Box b) {
    return "(" + std::to_string(b.row) + "," + std::to_string(b.col) + ")";
}

std::string minor_variable_name(const VariableIndex& vars, int index) {
    const Box b = vars.box_of(index);
    return "z(" + std::to_string(b.row) + "," + std::to_string(b.col) + ")";
}

struct GrothArgs {
    std::string perm;
    std::string engine = "transition";
    int grid_n = 0;
    bool json = false;
};

int run_groth(const GrothArgs& args) {
    const Permutation w = Permutation::parse(args.perm);
    if (args.engine == "transition" && args.grid_n != 0) {
        throw std::invalid_argument("--n applies to the pipedream engine only");
    }
    MultiPoly g;
    if (args.engine == "transition") {
        GrothendieckEngine engine;
        g = engine.polynomial(w);
    } else {
        const int n = args.grid_n > 0 ? args.grid_n : w.normalized_size();
        g = pipe_dream_grothendieck(w, n);
    }
    if (args.json) {
        Json j;
        j["schema_version"] = kSchemaVersion;
        j["permutation"] = to_json(w);
        j["engine"] = args.engine;
        j["length"] = coxeter_length(w);
        j["degree"] = g.total_degree();
        j["min_degree"] = g.min_total_degree();
        j["polynomial"] = to_json(g);
        emit_json(j);
    } else {
        std::cout << to_text(g) << "\n";
    }
    return kExitPass;
}

struct DiagramArgs {
    std::string perm;
    int grid_n = 0;
    bool json = false;
};

int run_diagram(const DiagramArgs& args) {
    const Permutation w = Permutation::parse(args.perm).normalized();
    const int n = args.grid_n > 0 ? args.grid_n : w.normalized_size();
    const RankMatrix ranks = rank_matrix(w, n); // validates n
    const BoxSet diagram = rothe_diagram(w);
    const BoxSet essential = essential_set(w);
    const BoxSet region = effective_region(w);

    if (args.json) {
        Json j;
        j["schema_version"] = kSchemaVersion;
        j["permutation"] = to_json(w);
        j["n"] = n;
        j["length"] = coxeter_length(w);
        j["descents"] = descents(w);
        j["rothe_diagram"] = to_json(diagram);
        Json ess = Json::array();
        for (const Box& b : essential) {
            ess.push_back(Json{{"box", to_json(b)}, {"rank", rank_at(w, b)}});
        }
        j["essential_set"] = std::move(ess);
        j["effective_region"] = to_json(region);
        j["dominant"] = is_dominant(w);
        j["rank_matrix"] = to_json(ranks);
        emit_json(j);
        return kExitPass;
    }

    std::cout << "permutation: " << to_string(w) << "\n";
    std::cout << "length: " << coxeter_length(w) << "\n";
    std::cout << "descents:";
    for (int d : descents(w)) std::cout << " " << d;
    std::cout << "\n";
    std::cout << "dominant: " << (is_dominant(w) ? "yes" : "no") << "\n";
    std::cout << "grid (o dot, # diagram box, digit = essential box rank):\n";
    std::cout << diagram_grid(w, n);
    std::cout << "essential boxes:";
    if (essential.empty()) std::cout << " none";
    for (const Box& b : essential) {
        std::cout << " " << box_text(b) << " rank " << rank_at(w, b);
    }
    std::cout << "\n";
    std::cout << "effective region (" << region.size() << " boxes):";
    for (const Box& b : region) std::cout << " " << box_text(b);
    std::cout << "\n";
    return kExitPass;
}

struct IdealArgs {
    std::string perm;
    bool effective = false;
    bool all_boxes = false;
    bool expand = false;
    bool json = false;
};

int run_ideal(const IdealArgs& args) {
    if (args.effective && args.all_boxes) {
        throw std::invalid_argument("inconsistent flags: --all-boxes needs the full ambient, not --effective");
    }
    const Permutation w = Permutation::parse(args.perm).normalized();
    const AmbientSpec ambient = args.effective ? AmbientSpec::effective_of(w)
                                               : AmbientSpec::full(w, w.normalized_size());
    const GeneratorSet gens = fulton_generators(w, !args.all_boxes, ambient);
    const VariableIndex vars(gens.ambient_vars);

    if (args.json) {
        Json j;
        j["schema_version"] = kSchemaVersion;
        j["permutation"] = to_json(w);
        j["essential_only"] = !args.all_boxes;
        j["ambient"] = to_json(ambient);
        j["generators"] = to_json(gens);
        if (args.expand) {
            Json expanded = Json::array();
            for (const MinorSpec& m : gens.minors) {
                expanded.push_back(to_json(expand_minor(m, vars)));
            }
            j["expanded"] = std::move(expanded);
        }
        emit_json(j);
        return kExitPass;
    }

    std::cout << "permutation: " << to_string(w) << "\n";
    if (ambient.kind == AmbientSpec::Kind::full) {
        std::cout << "ambient: full " << ambient.n << " x " << ambient.n << " ("
                  << ambient.variable_count << " variables)\n";
    } else {
        std::cout << "ambient: effective region (" << ambient.variable_count << " variables)\n";
    }
    std::cout << "source boxes: " << (args.all_boxes ? "all grid boxes" : "essential set") << "\n";
    std::cout << "generators: " << gens.minors.size() << " minors\n";
    for (const MinorSpec& m : gens.minors) {
        std::cout << "  size " << m.size() << ", rows {";
        for (std::size_t i = 0; i < m.rows.size(); ++i) std::cout << (i ? "," : "") << m.rows[i];
        std::cout << "}, cols {";
        for (std::size_t i = 0; i < m.cols.size(); ++i) std::cout << (i ? "," : "") << m.cols[i];
        std::cout << "}, from box " << box_text(m.source) << " rank " << m.rank;
        if (args.expand) {
            std::cout << ": "
                      << to_text(expand_minor(m, vars),
                                 [&vars](int idx) { return minor_variable_name(vars, idx); });
        }
        std::cout << "\n";
    }
    return kExitPass;
}

struct HilbertArgs {
    std::string perm;
    bool effective = false;
    int grid_n = 0;
    long k_max = -1;
    bool json = false;
};

int run_hilbert(const HilbertArgs& args) {
    if (args.effective && args.grid_n != 0) {
        throw std::invalid_argument("inconsistent flags: --n sizes the full ambient, not --effective");
    }
    const Permutation w = Permutation::parse(args.perm).normalized();
    const AmbientSpec ambient =
        args.effective ? AmbientSpec::effective_of(w)
                       : AmbientSpec::full(w, args.grid_n > 0 ? args.grid_n : w.normalized_size());
    GrothendieckEngine engine;
    const HilbertReport report = hilbertian_report(w, ambient, engine, args.k_max);

    if (args.json) {
        emit_json(to_json(report));
        return kExitPass;
    }

    std::cout << "permutation: " << to_string(w) << "\n";
    if (ambient.kind == AmbientSpec::Kind::full) {
        std::cout << "ambient: full " << ambient.n << " x " << ambient.n << " ("
                  << ambient.variable_count << " variables)\n";
    } else {
        std::cout << "ambient: effective region (" << ambient.variable_count << " variables)\n";
    }
    std::cout << "K-polynomial: " << to_text(report.k_polynomial) << "\n";
    std::cout << "regularity: " << report.regularity << "\n";
    std::cout << "postulation: " << report.postulation << "\n";
    std::cout << "hilbertian: " << (report.hilbertian ? "yes" : "no") << "\n";
    std::cout << "HF(0.." << report.k_max << "):";
    for (const mpz_class& v : report.hf_table) std::cout << " " << v.get_str();
    std::cout << "\n";
    std::cout << "HP(k) = " << to_text(report.hilbert_polynomial) << "\n";
    return kExitPass;
}

struct VerifyArgs {
    int n = 0;
    std::string checks;
    int workers = 0;
    bool json = false;
};

int run_verify(const VerifyArgs& args) {
    std::vector<Check> checks;
    if (args.checks.empty()) {
        checks = all_checks();
    } else {
        std::stringstream stream(args.checks);
        std::string piece;
        while (std::getline(stream, piece, ',')) {
            const auto parsed = parse_check(piece);
            if (!parsed) {
                throw std::invalid_argument("unknown check: " + piece);
            }
            checks.push_back(*parsed);
        }
        if (checks.empty()) {
            throw std::invalid_argument("no checks selected");
        }
    }

    const VerificationOutcome outcome = run_verification(args.n, checks, args.workers);
    if (args.json) {
        emit_json(to_json(outcome));
    } else {
        std::cout << "n = " << outcome.n << ", workers = " << outcome.workers << "\n";
        for (const CheckResult& r : outcome.results) {
            std::cout << check_name(r.check) << ": " << r.passed << "/" << r.total()
                      << " permutations pass";
            if (r.skipped > 0) std::cout << " (" << r.skipped << " vacuous or guard-skipped)";
            std::cout << "\n";
            if (!r.note.empty()) std::cout << "  scope: " << r.note << "\n";
            for (const Counterexample& ex : r.counterexamples) {
                std::cout << "  counterexample " << to_string(ex.w) << ": " << ex.detail << "\n";
            }
            if (r.failed > static_cast<long>(r.counterexamples.size())) {
                std::cout << "  and " << (r.failed - static_cast<long>(r.counterexamples.size()))
                          << " more failures\n";
            }
        }
        std::cout << (outcome.passed() ? "all checks pass" : "CHECKS FAILED") << "\n";
    }
    return outcome.passed() ? kExitPass : kExitCheckFailure;
}

struct OracleArgs {
    std::string perm;
    bool effective = false;
    long k_max = 4;
    bool json = false;
};

int run_oracle(const OracleArgs& args) {
    const Permutation w = Permutation::parse(args.perm).normalized();
    const AmbientSpec ambient = args.effective ? AmbientSpec::effective_of(w)
                                               : AmbientSpec::full(w, w.normalized_size());
    GrothendieckEngine engine;
    const CrossCheckResult result = cross_check(w, ambient, args.k_max, engine);

    if (args.json) {
        Json j;
        j["schema_version"] = kSchemaVersion;
        j["permutation"] = to_json(w);
        j["ambient"] = to_json(ambient);
        j["k_max"] = args.k_max;
        j.update(to_json(result));
        emit_json(j);
    } else {
        std::cout << "oracle check for " << to_string(w) << " ("
                  << (ambient.kind == AmbientSpec::Kind::full ? "full" : "effective") << " ambient, "
                  << ambient.variable_count << " variables, k <= " << args.k_max
                  << "): " << (result.passed ? "pass" : "FAIL") << "\n";
        for (const auto& m : result.mismatches) {
            std::cout << "  k = " << m.k << ", " << m.what << ": expected " << m.expected.get_str()
                      << ", got " << m.actual.get_str() << "\n";
        }
    }
    return result.passed ? kExitPass : kExitCheckFailure;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Grothendieck polynomials, Schubert determinantal ideals, and Hilbert-theoretic"
                 " invariants of matrix Schubert varieties"};
    app.require_subcommand(1);

    GrothArgs groth_args;
    CLI::App* groth_cmd = app.add_subcommand("groth", "Grothendieck polynomial of a permutation");
    groth_cmd->add_option("perm", groth_args.perm, "permutation, e.g. 25314 or 2,5,3,1,4")->required();
    groth_cmd->add_option("--engine", groth_args.engine, "transition (default) or pipedream")
        ->check(CLI::IsMember({"transition", "pipedream"}));
    groth_cmd->add_option("--n", groth_args.grid_n, "staircase grid size for the pipedream engine");
    groth_cmd->add_flag("--json", groth_args.json, "emit JSON");

    DiagramArgs diagram_args;
    CLI::App* diagram_cmd = app.add_subcommand("diagram", "Rothe diagram, essential set, effective region, rank matrix");
    diagram_cmd->add_option("perm", diagram_args.perm)->required();
    diagram_cmd->add_option("--n", diagram_args.grid_n, "grid size (default: normalized size)");
    diagram_cmd->add_flag("--json", diagram_args.json, "emit JSON");

    IdealArgs ideal_args;
    CLI::App* ideal_cmd = app.add_subcommand("ideal", "Fulton generators of the Schubert determinantal ideal");
    ideal_cmd->add_option("perm", ideal_args.perm)->required();
    ideal_cmd->add_flag("--effective", ideal_args.effective, "use the effective-region ambient");
    ideal_cmd->add_flag("--all-boxes", ideal_args.all_boxes, "rank conditions from every grid box, not just the essential set");
    ideal_cmd->add_flag("--expand", ideal_args.expand, "print expanded minors");
    ideal_cmd->add_flag("--json", ideal_args.json, "emit JSON");

    HilbertArgs hilbert_args;
    CLI::App* hilbert_cmd = app.add_subcommand("hilbert", "K-polynomial, Hilbert function/polynomial, postulation, regularity");
    hilbert_cmd->add_option("perm", hilbert_args.perm)->required();
    hilbert_cmd->add_flag("--effective", hilbert_args.effective, "use the effective-region ambient");
    hilbert_cmd->add_option("--n", hilbert_args.grid_n, "full ambient grid size (default: normalized size)");
    hilbert_cmd->add_option("--k-max", hilbert_args.k_max, "HF table upper bound (default: max(postulation + 3, 5))");
    hilbert_cmd->add_flag("--json", hilbert_args.json, "emit JSON");

    VerifyArgs verify_args;
    CLI::App* verify_cmd = app.add_subcommand("verify", "exhaustive checks over all of S_n");
    verify_cmd->add_option("--n", verify_args.n, "symmetric group size")->required()->check(CLI::Range(1, 7));
    verify_cmd->add_option("--checks", verify_args.checks,
                           "comma-separated subset of engine-agreement,degree-bound,binomial-bound,"
                           "hilbertian-full,hilbertian-effective,length-diagram,oracle (default: all)");
    verify_cmd->add_option("--workers", verify_args.workers, "worker threads (default: hardware)");
    verify_cmd->add_flag("--json", verify_args.json, "emit JSON");

    OracleArgs oracle_args;
    CLI::App* oracle_cmd = app.add_subcommand("oracle", "brute-force graded dimensions vs the K-polynomial series");
    oracle_cmd->add_option("perm", oracle_args.perm)->required();
    oracle_cmd->add_flag("--effective", oracle_args.effective, "use the effective-region ambient");
    oracle_cmd->add_option("--k-max", oracle_args.k_max, "check degrees 0..k-max (default 4)");
    oracle_cmd->add_flag("--json", oracle_args.json, "emit JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        std::cout << app.help();
        return kExitPass;
    } catch (const CLI::CallForAllHelp&) {
        std::cout << app.help("", CLI::AppFormatMode::All);
        return kExitPass;
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (app.got_subcommand(groth_cmd)) return run_groth(groth_args);
        if (app.got_subcommand(diagram_cmd)) return run_diagram(diagram_args);
        if (app.got_subcommand(ideal_cmd)) return run_ideal(ideal_args);
        if (app.got_subcommand(hilbert_cmd)) return run_hilbert(hilbert_args);
        if (app.got_subcommand(verify_cmd)) return run_verify(verify_args);
        if (app.got_subcommand(oracle_cmd)) return run_oracle(oracle_args);
        std::cerr << "error: no subcommand\n";
        return kExitUsage;
    } catch (const OracleTooLarge& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailure;
    }
}
