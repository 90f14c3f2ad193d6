#include "adjsurf/json.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>

namespace adjsurf {

namespace {

[[noreturn]] void fail(const std::string& message) {
    throw std::invalid_argument("json: " + message);
}

const Json& require_field(const Json& j, const char* key) {
    if (!j.is_object()) fail(std::string("expected an object with field \"") + key + "\"");
    auto it = j.find(key);
    if (it == j.end()) fail(std::string("missing field \"") + key + "\"");
    return *it;
}

bool has_field(const Json& j, const char* key) {
    return j.is_object() && j.contains(key) && !j.at(key).is_null();
}

Json opt_int_to_json(const std::optional<Int>& x) {
    if (!x) return nullptr;
    return int_to_json(*x);
}

std::vector<Int> int_vector_from_json(const Json& j, const char* key) {
    if (!j.is_array()) fail(std::string("field \"") + key + "\" must be an array");
    std::vector<Int> out;
    out.reserve(j.size());
    for (const auto& item : j) out.push_back(int_from_json(item));
    return out;
}

Json int_vector_to_json(const std::vector<Int>& values) {
    Json arr = Json::array();
    for (const auto& v : values) arr.push_back(int_to_json(v));
    return arr;
}

bool bool_from_json(const Json& j, const char* key) {
    if (!j.is_boolean()) fail(std::string("field \"") + key + "\" must be a boolean");
    return j.get<bool>();
}

}  // namespace

Json int_to_json(const Int& x) {
    static const Int kMax = Int(std::numeric_limits<std::int64_t>::max());
    static const Int kMin = Int(std::numeric_limits<std::int64_t>::min());
    if (x > kMax || x < kMin) {
        throw std::range_error("json: integer exceeds the 64-bit range of JSON numbers: " +
                               x.str());
    }
    return Json(x.convert_to<std::int64_t>());
}

Int int_from_json(const Json& j) {
    if (j.is_number_integer()) {
        if (j.is_number_unsigned()) return Int(j.get<std::uint64_t>());
        return Int(j.get<std::int64_t>());
    }
    if (j.is_string()) {
        const std::string text = j.get<std::string>();
        try {
            return Int(text);
        } catch (const std::exception&) {
            fail("string \"" + text + "\" is not a decimal integer");
        }
    }
    fail("expected an integer (number or decimal string), got " + std::string(j.type_name()));
}

Json to_json(const SurfaceModel& model) {
    Json j = Json::object();
    j["kind"] = to_string(model.kind);
    switch (model.kind) {
        case ModelKind::ProjectivePlane:
            break;
        case ModelKind::Hirzebruch:
            j["e"] = int_to_json(model.e);
            break;
        case ModelKind::BlowupOfPlane:
            j["r"] = int_to_json(model.r);
            j["curvilinear"] = model.curvilinear;
            break;
        case ModelKind::NumericallyRuled:
            j["q"] = int_to_json(model.q);
            j["e"] = int_to_json(model.e);
            break;
    }
    return j;
}

SurfaceModel surface_model_from_json(const Json& j) {
    const Json& kind = require_field(j, "kind");
    if (!kind.is_string()) fail("field \"kind\" must be a string");
    const std::string name = kind.get<std::string>();
    try {
        if (name == "projective_plane") return SurfaceModel::projective_plane();
        if (name == "hirzebruch") {
            return SurfaceModel::hirzebruch(int_from_json(require_field(j, "e")));
        }
        if (name == "blowup_of_plane") {
            bool curvilinear = has_field(j, "curvilinear") &&
                               bool_from_json(j.at("curvilinear"), "curvilinear");
            return SurfaceModel::blowup_of_plane(int_from_json(require_field(j, "r")),
                                                 curvilinear);
        }
        if (name == "numerically_ruled") {
            return SurfaceModel::numerically_ruled(int_from_json(require_field(j, "q")),
                                                   int_from_json(require_field(j, "e")));
        }
    } catch (const std::invalid_argument& err) {
        fail(std::string("invalid surface model: ") + err.what());
    }
    fail("unknown surface model kind \"" + name + "\"");
}

Json to_json(const DivisorClass& divisor) {
    Json j = Json::object();
    j["model"] = to_json(divisor.model);
    j["coeffs"] = int_vector_to_json(divisor.coeffs);
    return j;
}

DivisorClass divisor_class_from_json(const Json& j) {
    SurfaceModel model = surface_model_from_json(require_field(j, "model"));
    std::vector<Int> coeffs = int_vector_from_json(require_field(j, "coeffs"), "coeffs");
    try {
        return DivisorClass(model, std::move(coeffs));
    } catch (const std::exception& err) {
        fail(std::string("invalid divisor class: ") + err.what());
    }
}

Json to_json(const ConfiguredDivisor& divisor) {
    Json j = Json::object();
    Json comps = Json::array();
    for (const auto& name : divisor.components) comps.push_back(name);
    j["components"] = comps;
    j["mults"] = int_vector_to_json(divisor.multiplicities);
    Json gram = Json::array();
    for (const auto& row : divisor.gram) gram.push_back(int_vector_to_json(row));
    j["gram"] = gram;
    j["kdeg"] = int_vector_to_json(divisor.k_degrees);
    return j;
}

ConfiguredDivisor configured_divisor_from_json(const Json& j) {
    ConfiguredDivisor divisor;
    divisor.multiplicities = int_vector_from_json(require_field(j, "mults"), "mults");
    const Json& gram = require_field(j, "gram");
    if (!gram.is_array()) fail("field \"gram\" must be an array of arrays");
    for (const auto& row : gram) divisor.gram.push_back(int_vector_from_json(row, "gram"));
    divisor.k_degrees = int_vector_from_json(require_field(j, "kdeg"), "kdeg");
    if (has_field(j, "components")) {
        const Json& comps = j.at("components");
        if (!comps.is_array()) fail("field \"components\" must be an array of strings");
        for (const auto& name : comps) {
            if (!name.is_string()) fail("component names must be strings");
            divisor.components.push_back(name.get<std::string>());
        }
    } else {
        for (std::size_t i = 0; i < divisor.multiplicities.size(); ++i) {
            divisor.components.push_back("C" + std::to_string(i + 1));
        }
    }
    try {
        divisor.validate();
    } catch (const std::exception& err) {
        fail(std::string("invalid configured divisor: ") + err.what());
    }
    return divisor;
}

Json to_json(const InvariantRecord& rec) {
    Json j = Json::object();
    j["d"] = int_to_json(rec.d);
    j["n"] = int_to_json(rec.n);
    j["g"] = int_to_json(rec.g);
    j["q"] = int_to_json(rec.q);
    j["k2"] = opt_int_to_json(rec.k2);
    j["h1h"] = opt_int_to_json(rec.h1h);
    j["mu"] = opt_int_to_json(rec.mu);
    Json flags = Json::object();
    flags["d_ge_2g_minus_1"] = rec.flags.d_ge_2g_minus_1;
    flags["linearly_normal_surface"] = rec.flags.linearly_normal_surface;
    flags["linearly_normal_sections"] = rec.flags.linearly_normal_sections;
    flags["minimal_desingularization"] = rec.flags.minimal_desingularization;
    j["flags"] = flags;
    return j;
}

InvariantRecord invariant_record_from_json(const Json& j) {
    InvariantRecord rec;
    rec.d = int_from_json(require_field(j, "d"));
    rec.n = int_from_json(require_field(j, "n"));
    rec.g = int_from_json(require_field(j, "g"));
    rec.q = int_from_json(require_field(j, "q"));
    if (has_field(j, "k2")) rec.k2 = int_from_json(j.at("k2"));
    if (has_field(j, "h1h")) rec.h1h = int_from_json(j.at("h1h"));
    if (has_field(j, "mu")) rec.mu = int_from_json(j.at("mu"));
    if (has_field(j, "flags")) {
        const Json& flags = j.at("flags");
        if (!flags.is_object()) fail("field \"flags\" must be an object");
        if (has_field(flags, "d_ge_2g_minus_1")) {
            rec.flags.d_ge_2g_minus_1 = bool_from_json(flags.at("d_ge_2g_minus_1"),
                                                       "d_ge_2g_minus_1");
        }
        if (has_field(flags, "linearly_normal_surface")) {
            rec.flags.linearly_normal_surface =
                bool_from_json(flags.at("linearly_normal_surface"), "linearly_normal_surface");
        }
        if (has_field(flags, "linearly_normal_sections")) {
            rec.flags.linearly_normal_sections =
                bool_from_json(flags.at("linearly_normal_sections"), "linearly_normal_sections");
        }
        if (has_field(flags, "minimal_desingularization")) {
            rec.flags.minimal_desingularization =
                bool_from_json(flags.at("minimal_desingularization"),
                               "minimal_desingularization");
        }
    }
    return rec;
}

Json to_json(const Witness& witness) {
    Json j = Json::object();
    j["model"] = to_json(witness.model);
    j["H"] = int_vector_to_json(witness.h.coeffs);
    j["s"] = int_to_json(witness.s);
    j["t"] = int_to_json(witness.t);
    return j;
}

Witness witness_from_json(const Json& j) {
    Witness witness{SurfaceModel::projective_plane(),
                    DivisorClass(SurfaceModel::projective_plane(), {Int(0)}), Int(0), Int(0)};
    witness.model = surface_model_from_json(require_field(j, "model"));
    std::vector<Int> coeffs = int_vector_from_json(require_field(j, "H"), "H");
    try {
        witness.h = DivisorClass(witness.model, std::move(coeffs));
    } catch (const std::exception& err) {
        fail(std::string("invalid witness divisor: ") + err.what());
    }
    witness.s = int_from_json(require_field(j, "s"));
    witness.t = int_from_json(require_field(j, "t"));
    if (witness.s < 0 || witness.t < 0) fail("witness centre counts must be nonnegative");
    return witness;
}

Json to_json(const ClassificationOutcome& outcome) {
    Json j = Json::object();
    j["case"] = tag_name(outcome.tag);
    Json params = Json::object();
    for (const auto& [key, value] : outcome.params) params[key] = int_to_json(value);
    j["params"] = params;
    j["d"] = int_to_json(outcome.d);
    j["g"] = int_to_json(outcome.g);
    j["witness"] = outcome.witness ? to_json(*outcome.witness) : Json(nullptr);
    j["verified"] = outcome.verified;
    j["implied_k2"] = opt_int_to_json(outcome.implied_k2());
    Json assumptions = Json::array();
    for (const auto& a : outcome.assumptions) assumptions.push_back(a);
    j["assumptions"] = assumptions;
    Json notes = Json::array();
    for (const auto& n : outcome.notes) notes.push_back(n);
    j["notes"] = notes;
    return j;
}

Json to_json(const ClassificationResult& result) {
    Json j = Json::object();
    j["feasible"] = result.feasible();
    Json outcomes = Json::array();
    for (const auto& o : result.outcomes) outcomes.push_back(to_json(o));
    j["outcomes"] = outcomes;
    Json rejections = Json::array();
    for (const auto& r : result.rejections) {
        Json item = Json::object();
        item["constraint"] = r.constraint;
        item["note"] = r.note;
        rejections.push_back(item);
    }
    j["rejections"] = rejections;
    return j;
}

Json to_json(const QdReport& report) {
    Json j = Json::object();
    j["h0_adjoint"] = int_to_json(report.h0_adjoint);
    j["h1h"] = int_to_json(report.h1h);
    j["sections_linearly_normal"] = report.sections_linearly_normal;
    j["adjoint_square"] = opt_int_to_json(report.adjoint_square);
    j["adjoint_square_bound"] = opt_int_to_json(report.adjoint_square_bound);
    j["bound_is_equality"] = report.bound_is_equality;
    Json contradictions = Json::array();
    for (const auto& c : report.contradictions) contradictions.push_back(c);
    j["contradictions"] = contradictions;
    return j;
}

Json to_json(const ConstraintCheck& check) {
    Json j = Json::object();
    j["id"] = check.id;
    switch (check.status) {
        case ConstraintCheck::Status::Pass: j["status"] = "pass"; break;
        case ConstraintCheck::Status::Violated: j["status"] = "violated"; break;
        case ConstraintCheck::Status::Skipped: j["status"] = "skipped"; break;
    }
    j["note"] = check.note;
    return j;
}

Json to_json(const FeasibilityVerdict& verdict) {
    Json j = Json::object();
    j["feasible"] = verdict.feasible;
    Json checks = Json::array();
    for (const auto& c : verdict.checks) checks.push_back(to_json(c));
    j["checks"] = checks;
    return j;
}

Json to_json(const FirstAdjointReport& report) {
    Json j = Json::object();
    j["adjoint_square"] = int_to_json(report.adjoint_square);
    j["pa_adjoint"] = int_to_json(report.pa_adjoint);
    j["h0_biadjoint"] = opt_int_to_json(report.h0_biadjoint);
    j["birational_guaranteed"] = report.birational_guaranteed;
    j["base_point_free_guaranteed"] = report.base_point_free_guaranteed;
    Json contradictions = Json::array();
    for (const auto& c : report.contradictions) contradictions.push_back(c);
    j["contradictions"] = contradictions;
    return j;
}

Json to_json(const AdjointProfile& profile) {
    Json j = Json::object();
    j["m"] = int_to_json(profile.m);
    j["self_int"] = opt_int_to_json(profile.self_int);
    j["deg_vs_H"] = int_to_json(profile.deg_vs_H);
    j["empty_forced"] = profile.empty_forced;
    j["kills_all_higher"] =
        profile.kills_all_higher ? Json(*profile.kills_all_higher) : Json(nullptr);
    return j;
}

Json to_json(const DecompositionReport& report) {
    Json j = Json::object();
    j["min_value"] = opt_int_to_json(report.min_value);
    j["witness_d1"] = int_vector_to_json(report.witness_d1);
    j["witness_d2"] = int_vector_to_json(report.witness_d2);
    return j;
}

Json to_json(const UnitSplitReport& report) {
    Json j = Json::object();
    Json cases = Json::array();
    for (const auto& item : report.cases) {
        Json c = Json::object();
        switch (item.label) {
            case UnitSplitCase::Label::AMinusOne: c["label"] = "a_square_minus_one"; break;
            case UnitSplitCase::Label::AZero: c["label"] = "a_square_zero"; break;
            case UnitSplitCase::Label::BothOne: c["label"] = "both_squares_one"; break;
        }
        c["a_mults"] = int_vector_to_json(item.a_mults);
        c["b_mults"] = int_vector_to_json(item.b_mults);
        c["a2"] = int_to_json(item.a2);
        c["b2"] = int_to_json(item.b2);
        cases.push_back(c);
    }
    j["cases"] = cases;
    Json violations = Json::array();
    for (const auto& v : report.violations) violations.push_back(int_vector_to_json(v));
    j["violations"] = violations;
    j["all_classified"] = report.all_classified();
    return j;
}

Json to_json(const ZeroSquareVerdict& verdict) {
    Json j = Json::object();
    j["pass"] = verdict.pass;
    Json violating = Json::array();
    for (const auto& v : verdict.violating_subdivisors) violating.push_back(int_vector_to_json(v));
    j["violating_subdivisors"] = violating;
    j["min_value"] = opt_int_to_json(verdict.min_value);
    return j;
}

Json to_json(const WitnessVerdict& verdict) {
    Json j = Json::object();
    j["ok"] = verdict.ok;
    j["d_recomputed"] = int_to_json(verdict.d_recomputed);
    j["g_recomputed"] = int_to_json(verdict.g_recomputed);
    Json warnings = Json::array();
    for (const auto& w : verdict.warnings) warnings.push_back(w);
    j["warnings"] = warnings;
    return j;
}

Json to_json(const ExampleCheck& check) {
    Json j = Json::object();
    j["quantity"] = check.quantity;
    j["expected"] = int_to_json(check.expected);
    j["actual"] = int_to_json(check.actual);
    j["pass"] = check.pass();
    return j;
}

Json to_json(const ExampleReport& report) {
    Json j = Json::object();
    j["name"] = report.name;
    Json params = Json::object();
    for (const auto& [key, value] : report.parameters) params[key] = int_to_json(value);
    j["parameters"] = params;
    Json checks = Json::array();
    for (const auto& c : report.checks) checks.push_back(to_json(c));
    j["checks"] = checks;
    Json notes = Json::array();
    for (const auto& n : report.notes) notes.push_back(n);
    j["notes"] = notes;
    j["all_pass"] = report.all_pass();
    return j;
}

std::string outcomes_tsv(const std::vector<ClassificationOutcome>& outcomes) {
    std::ostringstream out;
    out << "case\tparams\td\tg\tverified\n";
    for (const auto& o : outcomes) {
        out << tag_name(o.tag) << '\t';
        if (o.params.empty()) {
            out << '-';
        } else {
            bool first = true;
            for (const auto& [key, value] : o.params) {
                if (!first) out << ',';
                first = false;
                out << key << '=' << value.str();
            }
        }
        out << '\t' << o.d.str() << '\t' << o.g.str() << '\t'
            << (o.verified ? "true" : "false") << '\n';
    }
    return out.str();
}

}  // namespace adjsurf
