/* Command-line front end: classification, family enumeration, witness
 * verification, record consistency checks, divisor connectedness, and the
 * worked-example gallery.
 *
 * Exit codes: 0 feasible / verified / all checks pass,
 *             2 provably infeasible / not verified / a check fails,
 *             1 malformed input, out-of-range parameters, or resource guard.
 * Output on stdout is byte-deterministic for identical invocations. */

#include "adjsurf/adjoint.hpp"
#include "adjsurf/classify.hpp"
#include "adjsurf/cohomology.hpp"
#include "adjsurf/connectedness.hpp"
#include "adjsurf/core.hpp"
#include "adjsurf/examples.hpp"
#include "adjsurf/json.hpp"
#include "adjsurf/lattice.hpp"

#include <optional>

#include <CLI11.hpp>

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace {

using namespace adjsurf;

constexpr int kExitFeasible = 0;
constexpr int kExitInputError = 1;
constexpr int kExitInfeasible = 2;

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open \"" + path + "\"");
    return Json::parse(in);  // parse errors surface as std::exception -> exit 1
}

/* ---- record input shared by classify and verify ---- */

struct RecordOptions {
    std::optional<std::int64_t> d, n, g, q, k2, h1h, mu;
    bool sections_ln = false;
    std::string json_path;
};

void add_record_options(CLI::App* cmd, RecordOptions& opts) {
    cmd->add_option("--d", opts.d, "degree of the embedded surface");
    cmd->add_option("--n", opts.n, "dimension of the ambient projective space");
    cmd->add_option("--g", opts.g, "sectional genus");
    cmd->add_option("--q", opts.q, "irregularity");
    cmd->add_option("--k2", opts.k2, "K^2 of the minimal desingularization, if known");
    cmd->add_option("--h1h", opts.h1h, "h^1 of the hyperplane class, if known");
    cmd->add_option("--mu", opts.mu, "fibre degree of the adjunction ruling, if known");
    cmd->add_flag("--sections-ln", opts.sections_ln,
                  "assert that the hyperplane sections are linearly normal");
    cmd->add_option("--json", opts.json_path,
                    "read the whole record from a JSON file instead of flags");
}

InvariantRecord build_record(const RecordOptions& opts) {
    InvariantRecord rec;
    if (!opts.json_path.empty()) {
        if (opts.d || opts.n || opts.g || opts.q || opts.k2 || opts.h1h || opts.mu) {
            throw std::invalid_argument("--json is exclusive with the individual record flags");
        }
        rec = invariant_record_from_json(read_json_file(opts.json_path));
    } else {
        if (!opts.d || !opts.n || !opts.g || !opts.q) {
            throw std::invalid_argument("need --d, --n, --g and --q (or --json <file>)");
        }
        rec.d = Int(*opts.d);
        rec.n = Int(*opts.n);
        rec.g = Int(*opts.g);
        rec.q = Int(*opts.q);
        if (opts.k2) rec.k2 = Int(*opts.k2);
        if (opts.h1h) rec.h1h = Int(*opts.h1h);
        if (opts.mu) rec.mu = Int(*opts.mu);
    }
    if (opts.sections_ln) rec.flags.linearly_normal_sections = true;
    return rec;
}

/* ---- classify ---- */

int run_classify(const RecordOptions& opts, const std::string& format) {
    const InvariantRecord rec = build_record(opts);
    const ClassificationResult result = classify(rec);
    if (format == "tsv") {
        std::cout << outcomes_tsv(result.outcomes);
        for (const auto& r : result.rejections) {
            std::cerr << "rejected: " << r.constraint << " - " << r.note << "\n";
        }
    } else {
        std::cout << to_json(result).dump(2) << "\n";
    }
    return result.feasible() ? kExitFeasible : kExitInfeasible;
}

/* ---- verify ---- */

int run_verify(const RecordOptions& opts, const std::string& format) {
    const InvariantRecord rec = build_record(opts);
    const QdReport qd = qd_identities(rec);
    std::optional<FirstAdjointReport> adjoint;
    if (rec.k2 && rec.g > rec.q) adjoint = first_adjoint_predicates(rec);
    std::optional<FeasibilityVerdict> feasibility;
    if (rec.q > 0 && rec.g > rec.q) feasibility = irregular_feasibility(rec);

    const bool ok = qd.consistent() && (!adjoint || adjoint->contradictions.empty()) &&
                    (!feasibility || feasibility->feasible);

    if (format == "text") {
        std::cout << "record: d=" << rec.d << " n=" << rec.n << " g=" << rec.g
                  << " q=" << rec.q;
        if (rec.k2) std::cout << " k2=" << *rec.k2;
        if (rec.mu) std::cout << " mu=" << *rec.mu;
        std::cout << "\n";
        std::cout << "h0(K+H) = " << qd.h0_adjoint << ", h1(H) = " << qd.h1h
                  << ", sections linearly normal: "
                  << (qd.sections_linearly_normal ? "yes" : "no") << "\n";
        if (qd.adjoint_square) {
            std::cout << "(K+H)^2 = " << *qd.adjoint_square << " (bound "
                      << *qd.adjoint_square_bound
                      << (qd.bound_is_equality ? ", attained" : "") << ")\n";
        } else if (qd.adjoint_square_bound) {
            std::cout << "(K+H)^2 <= " << *qd.adjoint_square_bound << "\n";
        }
        for (const auto& c : qd.contradictions) std::cout << "contradiction: " << c << "\n";
        if (adjoint) {
            std::cout << "p_a(K+H) = " << adjoint->pa_adjoint;
            if (adjoint->h0_biadjoint) std::cout << ", h0(2K+H) = " << *adjoint->h0_biadjoint;
            std::cout << "\n";
            for (const auto& c : adjoint->contradictions) {
                std::cout << "contradiction: " << c << "\n";
            }
        }
        if (feasibility) {
            for (const auto& check : feasibility->checks) {
                const char* status = check.status == ConstraintCheck::Status::Pass
                                         ? "pass"
                                         : check.status == ConstraintCheck::Status::Violated
                                               ? "VIOLATED"
                                               : "skipped";
                std::cout << check.id << ": " << status;
                if (!check.note.empty()) std::cout << " (" << check.note << ")";
                std::cout << "\n";
            }
        }
        std::cout << (ok ? "consistent" : "inconsistent") << "\n";
    } else {
        Json out = Json::object();
        out["record"] = to_json(rec);
        out["consistent"] = ok;
        out["qd"] = to_json(qd);
        out["first_adjoint"] = adjoint ? to_json(*adjoint) : Json(nullptr);
        out["irregular_feasibility"] = feasibility ? to_json(*feasibility) : Json(nullptr);
        std::cout << out.dump(2) << "\n";
    }
    return ok ? kExitFeasible : kExitInfeasible;
}

/* ---- witness ---- */

int run_witness(const std::string& json_path, std::int64_t d, std::int64_t g,
                const std::string& format) {
    const Witness witness = witness_from_json(read_json_file(json_path));
    const WitnessVerdict verdict = verify_witness(witness, Int(d), Int(g));
    if (format == "text") {
        std::cout << "d recomputed: " << verdict.d_recomputed << " (claimed " << d << ")\n";
        std::cout << "g recomputed: " << verdict.g_recomputed << " (claimed " << g << ")\n";
        for (const auto& w : verdict.warnings) std::cout << "warning: " << w << "\n";
        std::cout << (verdict.ok ? "verified" : "NOT verified") << "\n";
    } else {
        std::cout << to_json(verdict).dump(2) << "\n";
    }
    return verdict.ok ? kExitFeasible : kExitInfeasible;
}

/* ---- check-connected ---- */

std::int64_t resolve_budget(const std::optional<std::int64_t>& flag_value) {
    if (flag_value) return *flag_value;
    if (const char* env = std::getenv("ADJSURF_BUDGET")) {
        try {
            std::size_t used = 0;
            const std::string text(env);
            const std::int64_t value = std::stoll(text, &used);
            if (used != text.size() || value <= 0) throw std::invalid_argument(text);
            return value;
        } catch (const std::exception&) {
            throw std::invalid_argument(std::string("ADJSURF_BUDGET=\"") + env +
                                        "\" is not a positive integer");
        }
    }
    return kDefaultSplitBudget;
}

int run_check_connected(const std::string& json_path, std::int64_t m,
                        const std::optional<std::int64_t>& budget_flag, bool unit_splits,
                        bool zero_square, const std::string& format) {
    const std::int64_t budget = resolve_budget(budget_flag);
    const ConfiguredDivisor divisor = configured_divisor_from_json(read_json_file(json_path));
    const DecompositionReport report = analyze_decompositions(divisor, budget);
    const bool minus_one = is_minus_one_divisor(divisor, budget);
    const bool connected = report.is_m_connected(Int(m));

    std::optional<UnitSplitReport> units;
    if (unit_splits) units = check_lemma_1conn_cases(divisor, budget);
    std::optional<ZeroSquareVerdict> zero;
    if (zero_square) zero = zero_square_nef_structure(divisor, budget);

    if (format == "text") {
        std::cout << "D^2 = " << divisor.self_intersection()
                  << ", K.D = " << divisor.canonical_degree() << "\n";
        if (report.min_value) {
            std::cout << "min D1.D2 over proper splits: " << *report.min_value << "\n";
        } else {
            std::cout << "no proper split (single reduced component)\n";
        }
        std::cout << m << "-connected: " << (connected ? "yes" : "no") << "\n";
        std::cout << "(-1)-divisor: " << (minus_one ? "yes" : "no") << "\n";
        if (units) {
            std::cout << "unit splits: " << units->cases.size() << " classified, "
                      << units->violations.size() << " violations\n";
        }
        if (zero) {
            std::cout << "zero-square structure: " << (zero->pass ? "pass" : "FAIL") << "\n";
        }
    } else {
        Json out = Json::object();
        out["divisor"] = to_json(divisor);
        out["report"] = to_json(report);
        out["m"] = m;
        out["m_connected"] = connected;
        out["minus_one_divisor"] = minus_one;
        out["unit_splits"] = units ? to_json(*units) : Json(nullptr);
        out["zero_square"] = zero ? to_json(*zero) : Json(nullptr);
        std::cout << out.dump(2) << "\n";
    }
    return connected ? kExitFeasible : kExitInfeasible;
}

/* ---- example ---- */

int run_example(const std::string& name, const ExampleOptions& options,
                const std::string& format) {
    const ExampleReport report = run_gallery_example(name, options);
    if (format == "json") {
        std::cout << to_json(report).dump(2) << "\n";
    } else {
        std::cout << report.name;
        if (!report.parameters.empty()) {
            std::cout << " (";
            bool first = true;
            for (const auto& [key, value] : report.parameters) {
                if (!first) std::cout << ", ";
                first = false;
                std::cout << key << "=" << value;
            }
            std::cout << ")";
        }
        std::cout << "\n";
        for (const auto& check : report.checks) {
            std::cout << "  " << check.quantity << ": expected " << check.expected << ", got "
                      << check.actual << (check.pass() ? "  [pass]" : "  [FAIL]") << "\n";
        }
        for (const auto& note : report.notes) std::cout << "  note: " << note << "\n";
        std::cout << (report.all_pass() ? "PASS" : "FAIL") << "\n";
    }
    return report.all_pass() ? kExitFeasible : kExitInfeasible;
}

/* ---- enumerate ---- */

struct Range {
    std::int64_t lo, hi;
};

Range parse_range(const std::string& text) {
    try {
        const auto pos = text.find("..");
        std::size_t used = 0;
        if (pos == std::string::npos) {
            const std::int64_t v = std::stoll(text, &used);
            if (used != text.size()) throw std::invalid_argument(text);
            return {v, v};
        }
        const std::string lo_text = text.substr(0, pos);
        const std::string hi_text = text.substr(pos + 2);
        const std::int64_t lo = std::stoll(lo_text, &used);
        if (used != lo_text.size()) throw std::invalid_argument(text);
        const std::int64_t hi = std::stoll(hi_text, &used);
        if (used != hi_text.size()) throw std::invalid_argument(text);
        if (lo > hi) throw std::invalid_argument(text);
        return {lo, hi};
    } catch (const std::exception&) {
        throw std::invalid_argument("bad range \"" + text +
                                    "\" (expected N or LO..HI with LO <= HI)");
    }
}

std::string describe_outcome(const ClassificationOutcome& outcome) {
    std::string text = tag_name(outcome.tag);
    for (const auto& [key, value] : outcome.params) {
        text += " " + key + "=" + value.str();
    }
    return text + " at d=" + outcome.d.str() + " g=" + outcome.g.str();
}

struct MuConeRow {
    Int q, e, mu, d, g, h0;
};

int run_enumerate(const std::string& family, const std::optional<std::string>& g_text,
                  const std::optional<std::string>& d_text,
                  const std::optional<std::string>& q_text,
                  const std::optional<std::string>& e_text,
                  const std::optional<std::string>& mu_text, std::int64_t limit,
                  const std::string& format) {
    std::vector<ClassificationOutcome> rows;
    std::vector<MuConeRow> cone_rows;

    const auto guard = [&](std::size_t count) {
        if (static_cast<std::int64_t>(count) > limit) {
            throw std::invalid_argument("row guard exceeded (limit " + std::to_string(limit) +
                                        "); narrow the ranges");
        }
    };

    const auto run_solver = [&](auto solver, Range g_range, auto default_d_range) {
        for (std::int64_t g = g_range.lo; g <= g_range.hi; ++g) {
            const Range d_range = d_text ? parse_range(*d_text) : default_d_range(g);
            for (std::int64_t d = d_range.lo; d <= d_range.hi; ++d) {
                for (auto& outcome : solver(Int(d), Int(g))) {
                    const WitnessVerdict verdict =
                        verify_witness(*outcome.witness, outcome.d, outcome.g);
                    if (!verdict.ok) {
                        throw std::logic_error("enumeration produced an unverifiable row: " +
                                               describe_outcome(outcome));
                    }
                    outcome.verified = true;
                    rows.push_back(std::move(outcome));
                    guard(rows.size());
                }
            }
        }
    };

    if (family == "class1") {
        const Range g_range = g_text ? parse_range(*g_text) : Range{1, 10};
        run_solver([](const Int& d, const Int& g) { return solve_class1(d, g); }, g_range,
                   [](std::int64_t g) {
                       const std::int64_t lo = std::max<std::int64_t>(3, 2 * g - 1);
                       const std::int64_t hi = std::max<std::int64_t>(4 * g + 4, 9);
                       return Range{lo, hi};
                   });
    } else if (family == "class3") {
        const Range g_range = g_text ? parse_range(*g_text) : Range{2, 20};
        run_solver([](const Int& d, const Int& g) { return solve_class3(d, g); }, g_range,
                   [](std::int64_t g) {
                       const std::int64_t lo = std::max<std::int64_t>(3, 2 * g - 1);
                       const std::int64_t hi = std::max<std::int64_t>(4 * g + 4, 64);
                       return Range{lo, hi};
                   });
    } else if (family == "scrolls") {
        const Range d_range = d_text ? parse_range(*d_text) : Range{3, 12};
        for (std::int64_t d = std::max<std::int64_t>(3, d_range.lo); d <= d_range.hi; ++d) {
            for (std::int64_t e = d % 2; e <= d; e += 2) {
                ClassificationOutcome outcome;
                outcome.tag = CaseTag::Scroll;
                outcome.params = {{"q", Int(0)}, {"cone", Int(e == d ? 1 : 0)}, {"e", Int(e)}};
                outcome.d = Int(d);
                outcome.g = Int(0);
                const SurfaceModel model = SurfaceModel::hirzebruch(Int(e));
                outcome.witness =
                    Witness{model, DivisorClass(model, {Int(1), Int((d + e) / 2)}), Int(0),
                            Int(0)};
                const WitnessVerdict verdict =
                    verify_witness(*outcome.witness, outcome.d, outcome.g);
                if (!verdict.ok) {
                    throw std::logic_error("enumeration produced an unverifiable row: " +
                                           describe_outcome(outcome));
                }
                outcome.verified = true;
                rows.push_back(std::move(outcome));
                guard(rows.size());
            }
        }
    } else if (family == "mu-cones") {
        const Range q_range = q_text ? parse_range(*q_text) : Range{1, 3};
        const Range mu_range = mu_text ? parse_range(*mu_text) : Range{2, 5};
        for (std::int64_t q = std::max<std::int64_t>(1, q_range.lo); q <= q_range.hi; ++q) {
            const Range e_range = e_text ? parse_range(*e_text) : Range{2 * q - 1, 2 * q + 4};
            for (std::int64_t e = e_range.lo; e <= e_range.hi; ++e) {
                if (e <= 2 * q - 2) continue;  // outside the family's domain
                for (std::int64_t mu = std::max<std::int64_t>(2, mu_range.lo);
                     mu <= mu_range.hi; ++mu) {
                    const MuConeInvariants inv = mu_cone_invariants(Int(q), Int(e), Int(mu));
                    if (!check_linear_normality_mu_cone(Int(q), Int(e), Int(mu))) {
                        throw std::logic_error(
                            "enumeration hit a cone without linearly normal sections: q=" +
                            std::to_string(q) + " e=" + std::to_string(e) +
                            " mu=" + std::to_string(mu));
                    }
                    cone_rows.push_back({Int(q), Int(e), Int(mu), inv.d, inv.g,
                                         inv.h0_surface});
                    guard(cone_rows.size());
                }
            }
        }
    } else {
        throw std::invalid_argument("unknown family \"" + family +
                                    "\" (known: class1, class3, scrolls, mu-cones)");
    }

    if (family == "mu-cones") {
        if (format == "json") {
            Json out = Json::object();
            out["family"] = family;
            Json list = Json::array();
            for (const auto& row : cone_rows) {
                Json item = Json::object();
                item["q"] = int_to_json(row.q);
                item["e"] = int_to_json(row.e);
                item["mu"] = int_to_json(row.mu);
                item["d"] = int_to_json(row.d);
                item["g"] = int_to_json(row.g);
                item["h0"] = int_to_json(row.h0);
                item["linear_normality"] = true;
                list.push_back(item);
            }
            out["rows"] = list;
            std::cout << out.dump(2) << "\n";
        } else {
            std::cout << "q\te\tmu\td\tg\th0\tlinear_normality\n";
            for (const auto& row : cone_rows) {
                std::cout << row.q << '\t' << row.e << '\t' << row.mu << '\t' << row.d << '\t'
                          << row.g << '\t' << row.h0 << "\ttrue\n";
            }
        }
    } else {
        if (format == "json") {
            Json out = Json::object();
            out["family"] = family;
            Json list = Json::array();
            for (const auto& row : rows) list.push_back(to_json(row));
            out["rows"] = list;
            std::cout << out.dump(2) << "\n";
        } else {
            std::cout << outcomes_tsv(rows);
        }
    }
    return kExitFeasible;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact intersection-theory toolkit for linearly normal surfaces of "
                 "low degree relative to the sectional genus"};
    app.require_subcommand(1);

    /* classify */
    RecordOptions classify_opts;
    std::string classify_format = "json";
    CLI::App* classify_cmd =
        app.add_subcommand("classify", "classify an invariant record into surface families");
    add_record_options(classify_cmd, classify_opts);
    classify_cmd->add_option("--format", classify_format, "output format")
        ->check(CLI::IsMember({"json", "tsv"}));

    /* verify */
    RecordOptions verify_opts;
    std::string verify_format = "json";
    CLI::App* verify_cmd = app.add_subcommand(
        "verify", "check an invariant record against the degree/genus identities");
    add_record_options(verify_cmd, verify_opts);
    verify_cmd->add_option("--format", verify_format, "output format")
        ->check(CLI::IsMember({"json", "text"}));

    /* witness */
    std::string witness_path;
    std::int64_t witness_d = 0, witness_g = 0;
    std::string witness_format = "json";
    CLI::App* witness_cmd = app.add_subcommand(
        "witness", "recompute (d, g) of a lattice witness and compare with a claim");
    witness_cmd->add_option("--json", witness_path, "witness JSON file")->required();
    witness_cmd->add_option("--d", witness_d, "claimed degree")->required();
    witness_cmd->add_option("--g", witness_g, "claimed sectional genus")->required();
    witness_cmd->add_option("--format", witness_format, "output format")
        ->check(CLI::IsMember({"json", "text"}));

    /* check-connected */
    std::string connected_path;
    std::int64_t connected_m = 1;
    std::optional<std::int64_t> connected_budget;
    bool connected_units = false, connected_zero = false;
    std::string connected_format = "json";
    CLI::App* connected_cmd = app.add_subcommand(
        "check-connected", "compute the connectedness level of a configured divisor");
    connected_cmd->add_option("--json", connected_path, "configured-divisor JSON file")
        ->required();
    connected_cmd->add_option("--m", connected_m, "connectedness level to test (default 1)");
    connected_cmd->add_option("--budget", connected_budget,
                              "split-enumeration budget (overrides ADJSURF_BUDGET)");
    connected_cmd->add_flag("--unit-splits", connected_units,
                            "also classify the splits with D1.D2 = 1");
    connected_cmd->add_flag("--zero-square", connected_zero,
                            "also check the nef structure of a D^2 = 0 divisor");
    connected_cmd->add_option("--format", connected_format, "output format")
        ->check(CLI::IsMember({"json", "text"}));

    /* example */
    std::string example_name;
    ExampleOptions example_options;
    std::optional<std::int64_t> example_k, example_g, example_q, example_e, example_mu;
    std::string example_format = "text";
    CLI::App* example_cmd =
        app.add_subcommand("example", "recompute a worked example and report each quantity");
    example_cmd->add_option("name", example_name, "gallery name")->required();
    example_cmd->add_option("--k", example_k, "embedding multiple (ell-ruled-e1)");
    example_cmd->add_option("--g", example_g, "sectional genus (ell-ruled-det0-dec)");
    example_cmd->add_option("--q", example_q, "base-curve genus (mu-cone)");
    example_cmd->add_option("--e", example_e, "cone bundle degree (mu-cone)");
    example_cmd->add_option("--mu", example_mu, "curve multiple (mu-cone)");
    example_cmd->add_option("--format", example_format, "output format")
        ->check(CLI::IsMember({"json", "text"}));

    /* enumerate */
    std::string enum_family;
    std::optional<std::string> enum_g, enum_d, enum_q, enum_e, enum_mu;
    std::int64_t enum_limit = 1'000'000;
    std::string enum_format = "tsv";
    CLI::App* enum_cmd =
        app.add_subcommand("enumerate", "tabulate the members of a surface family");
    enum_cmd->add_option("--family", enum_family, "class1 | class3 | scrolls | mu-cones")
        ->required();
    enum_cmd->add_option("--g", enum_g, "sectional genus range (N or LO..HI)");
    enum_cmd->add_option("--d", enum_d, "degree range (N or LO..HI)");
    enum_cmd->add_option("--q", enum_q, "irregularity range (mu-cones)");
    enum_cmd->add_option("--e", enum_e, "bundle degree range (mu-cones)");
    enum_cmd->add_option("--mu", enum_mu, "curve multiple range (mu-cones)");
    enum_cmd->add_option("--limit", enum_limit, "row guard (default 10^6)");
    enum_cmd->add_option("--format", enum_format, "output format")
        ->check(CLI::IsMember({"json", "tsv"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitFeasible : kExitInputError;
    }

    try {
        if (classify_cmd->parsed()) return run_classify(classify_opts, classify_format);
        if (verify_cmd->parsed()) return run_verify(verify_opts, verify_format);
        if (witness_cmd->parsed()) {
            return run_witness(witness_path, witness_d, witness_g, witness_format);
        }
        if (connected_cmd->parsed()) {
            return run_check_connected(connected_path, connected_m, connected_budget,
                                       connected_units, connected_zero, connected_format);
        }
        if (example_cmd->parsed()) {
            if (example_k) example_options.k = Int(*example_k);
            if (example_g) example_options.g = Int(*example_g);
            if (example_q) example_options.q = Int(*example_q);
            if (example_e) example_options.e = Int(*example_e);
            if (example_mu) example_options.mu = Int(*example_mu);
            return run_example(example_name, example_options, example_format);
        }
        if (enum_cmd->parsed()) {
            return run_enumerate(enum_family, enum_g, enum_d, enum_q, enum_e, enum_mu,
                                 enum_limit, enum_format);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;  // unreachable: require_subcommand(1)
}
