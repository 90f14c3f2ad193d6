#include "adjsurf/examples.hpp"

#include "adjsurf/adjoint.hpp"
#include "adjsurf/classify.hpp"
#include "adjsurf/cohomology.hpp"
#include "adjsurf/lattice.hpp"

#include <stdexcept>

namespace adjsurf {

namespace {

Int from_bool(bool b) { return b ? Int(1) : Int(0); }

void push(ExampleReport& report, std::string quantity, Int expected, Int actual) {
    report.checks.push_back({std::move(quantity), std::move(expected), std::move(actual)});
}

}  // namespace

bool ExampleReport::all_pass() const {
    for (const auto& check : checks) {
        if (!check.pass()) return false;
    }
    return true;
}

ExampleReport example_elliptic_ruled_e1(const Int& k) {
    if (k < 3) {
        throw std::invalid_argument("elliptic ruled example: the embedding needs k >= 3");
    }
    ExampleReport report;
    report.name = "ell-ruled-e1";
    report.parameters = {{"k", k}};

    const SurfaceModel model = SurfaceModel::numerically_ruled(Int(1), Int(1));
    const DivisorClass section(model, {Int(1), Int(0)});   // the (-1) section
    const DivisorClass h(model, {k, k});                   // k (C0 + f)
    const DivisorClass adjoint = canonical_class(model) + h;

    const Int d = intersect(h, h);
    const Int g = arithmetic_genus(h);
    push(report, "degree", k * k, d);
    push(report, "section_self_intersection", Int(-1), intersect(section, section));
    push(report, "section_degree_against_H", Int(0), intersect(h, section));
    push(report, "sectional_genus", k * (k - 1) / 2 + 1, g);
    push(report, "degree_vs_genus_gap", k, d - (2 * g - 2));
    push(report, "adjoint_degree_on_section", Int(1), intersect(adjoint, section));

    // Pushforward to the base curve: Sym^k(O + O(-p)) (x) O(kp) is a sum of
    // k+1 line bundles of degrees k, k-1, ..., 1, 0; the degree-0 summand is
    // trivial for the twist by kp and nontrivial for a generic twist kp'.
    DecomposableRuledSurface bundle{Int(1), Int(1),
                                    CurveLineBundle{Int(1), k, ZeroDegreeKind::Trivial, {}},
                                    ZeroDegreeKind::Trivial};
    const H0H1 plain = h0_h1_symk(bundle, k);
    push(report, "h0_hyperplane", 1 + k * (k + 1) / 2, plain.h0);
    push(report, "h1_hyperplane", Int(1), plain.h1);

    bundle.zero_composite = ZeroDegreeKind::Nontrivial;
    const H0H1 twisted = h0_h1_symk(bundle, k);
    push(report, "h0_twisted_variant", k * (k + 1) / 2, twisted.h0);
    push(report, "h1_twisted_variant", Int(0), twisted.h1);

    InvariantRecord rec;
    rec.d = d;
    rec.n = plain.h0 - 1;
    rec.g = g;
    rec.q = Int(1);
    const QdReport qd = qd_identities(rec);
    push(report, "record_h1h", Int(1), qd.h1h);
    push(report, "sections_linearly_normal", Int(1), from_bool(qd.sections_linearly_normal));

    report.notes.push_back(
        "the adjoint system meets the (-1) section in degree 1, giving a base point there");
    report.notes.push_back(
        "d = 2g - 2 + k, so the degree grows arbitrarily large against the genus");
    report.notes.push_back(
        "variant twisted by a different point: h^0 drops by 1 and h^1 = 0; the image is "
        "either a non-linearly-normal surface of degree k^2 or a linearly normal surface "
        "of degree k^2 - 1, and the numerical data leave both possibilities open");
    return report;
}

ExampleReport example_elliptic_ruled_det0(const Int& g) {
    if (g < 3) {
        throw std::invalid_argument("elliptic ruled example: the embedding needs g >= 3");
    }
    ExampleReport report;
    report.name = "ell-ruled-det0-dec";
    report.parameters = {{"g", g}};

    const SurfaceModel model = SurfaceModel::numerically_ruled(Int(1), Int(0));
    const DivisorClass section(model, {Int(1), Int(0)});
    const DivisorClass h(model, {g, Int(1)});              // g C0 + f
    const DivisorClass k = canonical_class(model);
    const DivisorClass zero(model, {Int(0), Int(0)});

    push(report, "self_intersection", 2 * g, intersect(h, h));
    push(report, "sectional_genus", g, arithmetic_genus(h));
    push(report, "image_degree", 2 * g - 2, intersect(h, h) - 2);
    push(report, "canonical_sections_gap", Int(0),
         (intersect(h, h) - 2) - (2 * arithmetic_genus(h) - 2));
    push(report, "anticanonical_is_two_sections", Int(1),
         from_bool(k + section * Int(2) == zero));
    push(report, "degree_against_each_section", Int(1), intersect(h, section));
    push(report, "adjoint_degree_on_section", Int(1), intersect(k + h, section));

    // Pushforward: Sym^g(O + O(eta)) (x) O(p) is a sum of g+1 degree-1
    // bundles p + i eta; no summand has degree 0, so h^0 = g + 1 exactly.
    const DecomposableRuledSurface bundle{
        Int(1), Int(0), CurveLineBundle{Int(1), Int(1), ZeroDegreeKind::Trivial, {}},
        ZeroDegreeKind::Nontrivial};
    const H0H1 coh = h0_h1_symk(bundle, g);
    push(report, "system_dimension", g, coh.h0 - 1);
    push(report, "h1_hyperplane", Int(0), coh.h1);

    report.notes.push_back(
        "one simple base point on each of the two sections composing -K; blowing both up "
        "gives a morphism to a surface of degree 2g - 2 in P^g");
    report.notes.push_back(
        "hyperplane sections are canonical curves of genus g; the two contracted sections "
        "become elliptic double points, and the adjoint system has a base point on each");
    report.notes.push_back(
        "the image degree 2g - 2 sits below the d >= 2g - 1 range of the record identities, "
        "which is the point of the example");
    return report;
}

ExampleReport example_mu_cone(const Int& q, const Int& e, const Int& mu) {
    const MuConeInvariants inv = mu_cone_invariants(q, e, mu);  // validates the ranges
    ExampleReport report;
    report.name = "mu-cone";
    report.parameters = {{"q", q}, {"e", e}, {"mu", mu}};

    push(report, "degree", e * mu * mu, inv.d);

    // Independent genus path: on the ruled model the curve is mu E + mu e f.
    const SurfaceModel model = SurfaceModel::numerically_ruled(q, e);
    const DivisorClass curve(model, {mu, mu * e});
    push(report, "genus_via_lattice", inv.g, arithmetic_genus(curve));

    // Independent h^0 path: sum over the mu+1 pushforward summands O(G^i),
    // of degrees 0, e, ..., mu e.
    const DecomposableRuledSurface bundle{
        q, -e, CurveLineBundle{q, Int(0), ZeroDegreeKind::Trivial, {}},
        ZeroDegreeKind::Nontrivial};
    const H0H1 coh = h0_h1_symk(bundle, mu);
    push(report, "h0_via_pushforward", inv.h0_surface, coh.h0);
    push(report, "h1_surface", q, coh.h1);

    push(report, "linear_normality", Int(1), from_bool(check_linear_normality_mu_cone(q, e, mu)));
    push(report, "d_gt_2g_minus_2", Int(1), from_bool(inv.d > 2 * inv.g - 2));

    report.notes.push_back("hyperplane sections are linearly normal: the restricted series "
                           "on the curve is complete");
    report.notes.push_back("d - (2g - 2) = mu (e - 2q + 2) > 0, so the degree clears the "
                           "2g - 2 barrier on every such cone");
    return report;
}

ExampleReport example_veronese_quartic() {
    ExampleReport report;
    report.name = "veronese-v4";

    const SurfaceModel plane = SurfaceModel::projective_plane();
    const DivisorClass h(plane, {Int(4)});
    const DivisorClass k = canonical_class(plane);

    push(report, "degree", Int(16), intersect(h, h));
    push(report, "sectional_genus", Int(3), arithmetic_genus(h));
    // h^0 = chi here: H is very ample on the plane, so h^1 = h^2 = 0.
    push(report, "h0_hyperplane", Int(15), euler_characteristic(h));
    push(report, "ambient_dimension", Int(14), euler_characteristic(h) - 1);
    push(report, "adjoint_square", Int(1), intersect(k + h, k + h));

    InvariantRecord rec;
    rec.d = Int(16);
    rec.n = Int(14);
    rec.g = Int(3);
    rec.q = Int(0);
    rec.k2 = Int(9);
    const QdReport qd = qd_identities(rec);
    push(report, "record_h1h", Int(0), qd.h1h);
    const FirstAdjointReport adj = first_adjoint_predicates(rec);
    push(report, "h0_biadjoint", Int(0), adj.h0_biadjoint.value_or(Int(-1)));

    const ClassificationResult result = classify(rec);
    bool listed = false;
    for (const auto& outcome : result.outcomes) {
        if (outcome.tag == CaseTag::Class1_V4) listed = true;
    }
    push(report, "classifier_lists_quartic_veronese", Int(1), from_bool(listed));
    push(report, "classifier_outcome_count", Int(1), Int(result.outcomes.size()));

    report.notes.push_back("the un-projected quartic Veronese surface: its biadjoint system "
                           "is empty, so it heads the empty-biadjoint classification list");
    return report;
}

ExampleReport example_veronese_nonic_boundary() {
    ExampleReport report;
    report.name = "veronese-v9-boundary";

    const SurfaceModel plane = SurfaceModel::projective_plane();
    const DivisorClass h(plane, {Int(9)});

    push(report, "degree", Int(81), intersect(h, h));
    push(report, "sectional_genus", Int(28), arithmetic_genus(h));
    push(report, "h0_hyperplane", Int(55), euler_characteristic(h));
    push(report, "ambient_dimension", Int(54), euler_characteristic(h) - 1);
    push(report, "boundary_gap_3g_minus_3", Int(0), Int(3 * 28 - 3 - 81));

    InvariantRecord rec;
    rec.d = Int(81);
    rec.n = Int(54);
    rec.g = Int(28);
    rec.q = Int(0);
    rec.k2 = Int(9);
    const AdjointProfile profile = adjoint_profile(rec, Int(3));
    push(report, "triadjoint_degree_vs_H", Int(0), profile.deg_vs_H);
    push(report, "triadjoint_empty_forced", Int(0), from_bool(profile.empty_forced));
    push(report, "triadjoint_kills_all_higher", Int(0),
         from_bool(profile.kills_all_higher.value_or(false)));

    report.notes.push_back("at the boundary d = 3g - 3 the third adjoint multiple has degree "
                           "0 against H, so its emptiness is not forced by degree alone");
    report.notes.push_back("a = d - n = g - 1, so the hyperplane sections are linearly normal");
    return report;
}

const std::vector<std::string>& gallery_names() {
    static const std::vector<std::string> names = {
        "ell-ruled-e1", "ell-ruled-det0-dec", "mu-cone", "veronese-v4",
        "veronese-v9-boundary"};
    return names;
}

ExampleReport run_gallery_example(const std::string& name, const ExampleOptions& options) {
    if (name == "ell-ruled-e1") {
        return example_elliptic_ruled_e1(options.k.value_or(Int(3)));
    }
    if (name == "ell-ruled-det0-dec") {
        return example_elliptic_ruled_det0(options.g.value_or(Int(3)));
    }
    if (name == "mu-cone") {
        return example_mu_cone(options.q.value_or(Int(1)), options.e.value_or(Int(3)),
                               options.mu.value_or(Int(3)));
    }
    if (name == "veronese-v4") return example_veronese_quartic();
    if (name == "veronese-v9-boundary") return example_veronese_nonic_boundary();

    std::string known;
    for (const auto& entry : gallery_names()) {
        if (!known.empty()) known += ", ";
        known += entry;
    }
    throw std::invalid_argument("unknown example \"" + name + "\" (known: " + known + ")");
}

}  // namespace adjsurf
