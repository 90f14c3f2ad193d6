#include "adjsurf/classify.hpp"

#include "adjsurf/cones.hpp"

#include <algorithm>
#include <cstring>
#include <stdexcept>
#include <tuple>

namespace adjsurf {

namespace {

std::string istr(const Int& x) { return x.str(); }

/* Floor/ceil division with positive divisor (cpp_int '/' truncates to zero). */
Int floor_div(const Int& a, const Int& b) {
    Int quot = a / b;
    if (a % b != 0 && a < 0) --quot;
    return quot;
}

Int ceil_div(const Int& a, const Int& b) {
    Int quot = a / b;
    if (a % b != 0 && a > 0) ++quot;
    return quot;
}

Witness plane_witness(const Int& m, const Int& s, const Int& t) {
    SurfaceModel model = SurfaceModel::projective_plane();
    DivisorClass h(model, {m});
    return Witness{std::move(model), std::move(h), s, t};
}

Witness hirzebruch_witness(const Int& e, const Int& a, const Int& b, const Int& s, const Int& t) {
    SurfaceModel model = SurfaceModel::hirzebruch(e);
    DivisorClass h(model, {a, b});
    return Witness{std::move(model), std::move(h), s, t};
}

ClassificationOutcome make_outcome(CaseTag tag, std::vector<std::pair<std::string, Int>> params,
                                   const Int& d, const Int& g,
                                   std::optional<Witness> witness = std::nullopt) {
    ClassificationOutcome o;
    o.tag = tag;
    o.params = std::move(params);
    o.d = d;
    o.g = g;
    o.witness = std::move(witness);
    return o;
}

void append_note(ClassificationOutcome& o, std::string note) {
    if (std::find(o.notes.begin(), o.notes.end(), note) == o.notes.end())
        o.notes.push_back(std::move(note));
}

bool witness_equal(const std::optional<Witness>& x, const std::optional<Witness>& y) {
    if (x.has_value() != y.has_value()) return false;
    if (!x) return true;
    return x->model == y->model && x->h == y->h && x->s == y->s && x->t == y->t;
}

bool witness_less(const std::optional<Witness>& x, const std::optional<Witness>& y) {
    if (!x || !y) return y.has_value() && !x.has_value();
    auto key = [](const Witness& w) {
        return std::make_tuple(static_cast<int>(w.model.kind), w.model.e, w.model.r, w.model.q,
                               w.h.coeffs, w.s, w.t);
    };
    return key(*x) < key(*y);
}

bool outcome_less(const ClassificationOutcome& x, const ClassificationOutcome& y) {
    const int c = std::strcmp(tag_name(x.tag), tag_name(y.tag));
    if (c != 0) return c < 0;
    if (x.params != y.params) return x.params < y.params;
    if (x.d != y.d) return x.d > y.d;  // higher degree = fewer projections first
    if (x.g != y.g) return x.g < y.g;
    if (!witness_equal(x.witness, y.witness)) return witness_less(x.witness, y.witness);
    return x.assumptions < y.assumptions;
}

bool same_outcome(const ClassificationOutcome& x, const ClassificationOutcome& y) {
    return x.tag == y.tag && x.params == y.params && x.d == y.d && x.g == y.g &&
           witness_equal(x.witness, y.witness);
}

}  // namespace

const char* tag_name(CaseTag tag) {
    switch (tag) {
        case CaseTag::Scroll: return "scroll";
        case CaseTag::VeroneseV2: return "veronese_v2";
        case CaseTag::VeroneseV3: return "veronese_v3";
        case CaseTag::WeakDelPezzo: return "weak_del_pezzo";
        case CaseTag::ConicBundle: return "conic_bundle";
        case CaseTag::Class1_V4: return "class1_v4";
        case CaseTag::Class1_V5: return "class1_v5";
        case CaseTag::Class1_Hyperelliptic: return "class1_hyperelliptic";
        case CaseTag::Class1_Trigonal: return "class1_trigonal";
        case CaseTag::Class2_DoubleDelPezzo: return "class2_double_del_pezzo";
        case CaseTag::Class2_Plane6_2e7: return "class2_plane6_2e7";
        case CaseTag::Class3_Plane7: return "class3_plane7";
        case CaseTag::Class3_Plane8: return "class3_plane8";
        case CaseTag::Class3_Tetragonal: return "class3_tetragonal";
        case CaseTag::Class3_Pentagonal: return "class3_pentagonal";
        case CaseTag::SegreConeVeronese2: return "segre_cone_veronese2";
        case CaseTag::IrregularFeasible: return "irregular_feasible";
    }
    throw std::logic_error("tag_name: unhandled case tag");
}

std::optional<Int> ClassificationOutcome::implied_k2() const {
    if (!witness) return std::nullopt;
    const DivisorClass k = canonical_class(witness->model);
    return intersect(k, k) - witness->s - witness->t;
}

std::vector<ClassificationOutcome> solve_class1(const Int& d, const Int& g) {
    std::vector<ClassificationOutcome> out;
    if (g < 1 || d - g + 1 < 3) return out;

    if (g == 1 && d >= 3 && d <= 9) {
        auto o = make_outcome(CaseTag::WeakDelPezzo, {{"degree", d}}, d, g,
                              plane_witness(3, 0, 9 - d));
        append_note(o, "anticanonical model: plane cubics through " + istr(9 - d) +
                           " simple base points");
        out.push_back(std::move(o));
        if (d == 9) {
            auto v3 = make_outcome(CaseTag::VeroneseV3, {}, d, g, plane_witness(3, 0, 0));
            append_note(v3, "the plane embedded by cubics");
            out.push_back(std::move(v3));
        }
    }
    if (g == 3) {
        const Int b = 16 - d;
        if (b >= 0 && b <= 11) {
            auto o = make_outcome(CaseTag::Class1_V4, {{"b", b}}, d, g, plane_witness(4, 0, b));
            append_note(o, "the plane embedded by quartics, projected from a curvilinear scheme"
                           " of length " + istr(b));
            out.push_back(std::move(o));
        }
    }
    if (g == 6) {
        const Int b = 25 - d;
        if (b >= 0 && b <= 17) {
            auto o = make_outcome(CaseTag::Class1_V5, {{"b", b}}, d, g, plane_witness(5, 0, b));
            append_note(o, "the plane embedded by quintics, projected from a curvilinear scheme"
                           " of length " + istr(b));
            if (b >= 15)
                append_note(o, "centres of length >= 15 need a residual divisor lying on no"
                               " conic");
            out.push_back(std::move(o));
        }
    }
    if (g >= 2) {
        const Int b = 4 * g + 4 - d;
        if (b >= 0) {
            for (Int e = 0; e <= g + 1; ++e) {
                auto o = make_outcome(CaseTag::Class1_Hyperelliptic, {{"e", e}, {"g", g}}, d, g,
                                      hirzebruch_witness(e, 2, g + 1 + e, 0, b));
                append_note(o, "hyperelliptic sections: |2E + (g+1+e)F| on F_" + istr(e));
                append_note(o, "every e in [0, g+1] is emitted as a candidate; finer"
                               " very-ampleness conditions are not re-derived");
                if (b > 0)
                    append_note(o, "projected from a curvilinear scheme of length " + istr(b));
                out.push_back(std::move(o));
            }
        }
        const Int b3 = 3 * g + 6 - d;
        if (b3 >= 0) {
            const Int hmin = ceil_div(g - 2, 2);  // e = 2h + 2 - g >= 0
            const Int hmax = std::min(Int(g - 2), floor_div(2 * g - 2, 3));  // h >= max{e, 2e-2}
            for (Int h = hmin; h <= hmax; ++h) {
                const Int e = 2 * h + 2 - g;
                auto o = make_outcome(CaseTag::Class1_Trigonal, {{"e", e}, {"h", h}}, d, g,
                                      hirzebruch_witness(e, 3, h + e + 2, 0, b3));
                append_note(o, "trigonal sections: |3E + (h+e+2)F| on F_" + istr(e));
                if (e == 2 && h == 2) append_note(o, "cone case (e = h = 2 forces g = 4)");
                if (b3 > 0)
                    append_note(o, "projected from a curvilinear scheme of length " + istr(b3));
                out.push_back(std::move(o));
            }
        }
    }
    return out;
}

std::vector<ClassificationOutcome> solve_class3(const Int& d, const Int& g) {
    std::vector<ClassificationOutcome> out;
    if (d - g + 1 < 3) return out;

    {  // plane septics: d = 49 - 4s - t, g = 15 - s
        const Int s = 15 - g;
        const Int t = 49 - 4 * s - d;
        if (s >= 0 && t >= 0) {
            auto o = make_outcome(CaseTag::Class3_Plane7, {{"s", s}, {"t", t}}, d, g,
                                  plane_witness(7, s, t));
            append_note(o, "plane septics with " + istr(s) + " double and " + istr(t) +
                               " simple base points");
            out.push_back(std::move(o));
        }
    }
    {  // plane octics: d = 64 - 4s - t, g = 21 - s
        const Int s = 21 - g;
        const Int t = 64 - 4 * s - d;
        if (s >= 0 && t >= 0) {
            auto o = make_outcome(CaseTag::Class3_Plane8, {{"s", s}, {"t", t}}, d, g,
                                  plane_witness(8, s, t));
            append_note(o, "plane octics with " + istr(s) + " double and " + istr(t) +
                               " simple base points");
            out.push_back(std::move(o));
        }
    }
    {  // tetragonal: d = 8h + 32 - 4s - t, g = 3h + 9 - s, e >= 0, h >= max{2e-4, e-2}
        const Int hmin = std::max(Int(-2), ceil_div(g - 9, 3));  // s >= 0 and some e >= 0 exists
        const Int hmax = floor_div(4 * g - 4 - d, 4);            // t >= 0
        for (Int h = hmin; h <= hmax; ++h) {
            const Int s = 3 * h + 9 - g;
            const Int t = 4 * g - 4 - d - 4 * h;
            const Int emax = std::min(floor_div(h + 4, 2), Int(h + 2));
            for (Int e = 0; e <= emax; ++e) {
                auto o = make_outcome(CaseTag::Class3_Tetragonal,
                                      {{"e", e}, {"h", h}, {"s", s}, {"t", t}}, d, g,
                                      hirzebruch_witness(e, 4, h + 2 * e + 4, s, t));
                append_note(o, "tetragonal sections: |4E + (h+2e+4)F| on F_" + istr(e) + " with " +
                                   istr(s) + " double and " + istr(t) + " simple base points");
                out.push_back(std::move(o));
            }
        }
    }
    {  // pentagonal: d = 10h - 5e + 40 - 4s - t, g = 4h - 2e + 12 - s,
       // e >= 0, h >= max{3e-4, 2e-2, e}
        for (Int e = 0;; ++e) {
            const Int hmin_family = e >= 2 ? 3 * e - 4 : e;
            const Int hmax = floor_div(3 * e + 4 * g - 8 - d, 6);  // t >= 0
            if (e >= 2 && hmin_family > hmax) break;  // empty for every larger e as well
            const Int hmin = std::max(hmin_family, ceil_div(g - 12 + 2 * e, 4));  // s >= 0
            for (Int h = hmin; h <= hmax; ++h) {
                const Int s = 4 * h - 2 * e + 12 - g;
                const Int t = 3 * e + 4 * g - 8 - d - 6 * h;
                auto o = make_outcome(CaseTag::Class3_Pentagonal,
                                      {{"e", e}, {"h", h}, {"s", s}, {"t", t}}, d, g,
                                      hirzebruch_witness(e, 5, h + 2 * e + 4, s, t));
                append_note(o, "pentagonal sections: |5E + (h+2e+4)F| on F_" + istr(e) + " with " +
                                   istr(s) + " double and " + istr(t) + " simple base points");
                out.push_back(std::move(o));
            }
        }
    }
    return out;
}

WitnessVerdict verify_witness(const Witness& witness, const Int& d, const Int& g) {
    if (witness.model.kind != ModelKind::ProjectivePlane &&
        witness.model.kind != ModelKind::Hirzebruch)
        throw std::invalid_argument(
            "verify_witness: only plane and Hirzebruch witnesses have a decidable nef cone");
    if (!(witness.h.model == witness.model))
        throw ModelMismatch("verify_witness: divisor class lives on a different model");
    if (witness.s < 0 || witness.t < 0)
        throw std::invalid_argument("verify_witness: base point counts must be non-negative");

    WitnessVerdict v;
    v.d_recomputed = intersect(witness.h, witness.h) - 4 * witness.s - witness.t;
    v.g_recomputed = arithmetic_genus(witness.h) - witness.s;
    const Int n = d - g + 1;
    v.ok = v.d_recomputed == d && v.g_recomputed == g && n >= 3 &&
           is_nef(witness.h) == Ternary::True;
    if (d > 3 * g - 3 && !(2 * d < 3 * n))
        v.warnings.push_back("d > 3g - 3 but the degree bound d < (3/2)n fails (d = " + istr(d) +
                             ", n = " + istr(n) + ")");
    return v;
}

std::vector<ClassificationOutcome> internal_projection_closure(
    const ClassificationOutcome& outcome, const Int& max_t) {
    if (!outcome.witness)
        throw std::invalid_argument("internal_projection_closure: outcome carries no witness");
    if (max_t < 0)
        throw std::invalid_argument("internal_projection_closure: max_t must be non-negative");

    std::vector<ClassificationOutcome> out;
    for (Int b = 0; b <= max_t; ++b) {
        const Int d_b = outcome.d - b;
        if (d_b - outcome.g + 1 < 3) break;  // out of projective room
        ClassificationOutcome o = outcome;
        o.d = d_b;
        o.witness->t += b;
        // a parameter counting the centre length ("b") or the simple base
        // points ("t") absorbs the extra projection
        for (auto& [key, value] : o.params)
            if (key == "b" || key == "t") {
                value += b;
                break;
            }
        const WitnessVerdict v = verify_witness(*o.witness, o.d, o.g);
        o.verified = v.ok;
        for (const auto& w : v.warnings) append_note(o, w);
        if (b > 0)
            append_note(o, "internal projection from a curvilinear scheme of length " + istr(b));
        if (d_b >= 2 * outcome.g + 1)
            append_note(o, "any curvilinear centre works: d >= 2g + 1 keeps hyperplane sections"
                           " non-special");
        if (o.tag == CaseTag::Class1_V5 && o.witness->t >= 15)
            append_note(o, "centres of length >= 15 need a residual divisor lying on no conic");
        out.push_back(std::move(o));
    }
    return out;
}

void sort_outcomes(std::vector<ClassificationOutcome>& outcomes) {
    std::sort(outcomes.begin(), outcomes.end(), outcome_less);
}

namespace {

enum class Tri { No, Yes, Unknown };

}  // namespace

ClassificationResult classify(const InvariantRecord& rec) {
    const QdReport qd = qd_identities(rec);
    if (!qd.consistent()) {
        std::string msg = "classify: inconsistent record";
        for (const auto& c : qd.contradictions) msg += "; " + c;
        throw std::invalid_argument(msg);
    }

    ClassificationResult res;
    const Int& d = rec.d;
    const Int& g = rec.g;
    const Int& q = rec.q;

    auto finalize = [&res]() {
        for (auto& o : res.outcomes)
            if (o.witness) {
                const WitnessVerdict v = verify_witness(*o.witness, o.d, o.g);
                o.verified = v.ok;
                for (const auto& w : v.warnings) append_note(o, w);
            }
        sort_outcomes(res.outcomes);
        res.outcomes.erase(std::unique(res.outcomes.begin(), res.outcomes.end(), same_outcome),
                           res.outcomes.end());
        if (res.outcomes.empty() && res.rejections.empty())
            res.rejections.push_back(
                {"families.no_member", "no classification case matches the record"});
    };

    if (g == q) {
        // |K + H| is empty: minimal-degree surfaces and scrolls.
        if (q == 0) {
            if (d == 4 && rec.n == 5) {
                auto o = make_outcome(CaseTag::VeroneseV2, {}, d, g, plane_witness(2, 0, 0));
                append_note(o, "the plane embedded by conics");
                res.outcomes.push_back(std::move(o));
            }
            if (d == rec.n - 1) {
                for (Int e = d % 2; e <= d; e += 2) {
                    const bool cone = e == d;
                    auto o = make_outcome(CaseTag::Scroll, {{"q", q}, {"cone", cone ? 1 : 0}}, d,
                                          g, hirzebruch_witness(e, 1, (d + e) / 2, 0, 0));
                    append_note(o, cone ? "cone over a rational normal curve of degree " + istr(d)
                                        : "rational normal scroll of type (" + istr((d - e) / 2) +
                                              ", " + istr((d + e) / 2) + ")");
                    res.outcomes.push_back(std::move(o));
                }
            } else {
                res.rejections.push_back(
                    {"scroll.rational_minimal_degree",
                     "a rational surface with g = 0 has minimal degree d = n - 1 (d = " + istr(d) +
                         ", n = " + istr(rec.n) + ")"});
            }
        } else {
            const ScrollBoundsVerdict sv = check_scroll_bounds(rec);
            if (sv.valid) {
                auto o = make_outcome(CaseTag::Scroll, {{"q", q}, {"cone", sv.cone ? 1 : 0}}, d, g);
                append_note(o, sv.cone ? "cone over a curve of genus " + istr(q)
                                       : "scroll over a curve of genus " + istr(q));
                append_note(o, "no lattice witness: irregular scrolls are recorded without"
                               " construction");
                res.outcomes.push_back(std::move(o));
            } else {
                res.rejections.push_back(
                    {"scroll.bounds", "a scroll over a genus-" + istr(q) +
                                          " curve needs n + q - 1 <= d <= n + 2q - 1 (d = " +
                                          istr(d) + ", n = " + istr(rec.n) + ")"});
            }
        }
        finalize();
        return res;
    }

    // g > q: |K + H| is nonempty, so (K + H)^2 >= 0 is forced by nefness.
    const std::optional<Int> kh2 = rec.adjoint_square();
    if (kh2 && *kh2 < 0) {
        res.rejections.push_back({"nef.adjoint_square_nonnegative",
                                  "(K + H)^2 = " + istr(*kh2) + " < 0 while K + H is nef (g > q)"});
        finalize();
        return res;
    }
    const bool sign_known = kh2.has_value();
    const bool zero_open = !sign_known || *kh2 == 0;
    const bool pos_open = !sign_known || *kh2 > 0;

    if (q > 0) {
        if (d > 4 * g + 4 - 8 * q) {
            res.rejections.push_back(
                {"nef.d_le_4g_plus_4_minus_8q",
                 "K^2 <= 8 - 8q and (K + H)^2 >= 0 force d <= 4g + 4 - 8q = " +
                     istr(4 * g + 4 - 8 * q) + " (d = " + istr(d) + ")"});
            finalize();
            return res;
        }
        if (zero_open) {
            bool live = true;
            if (rec.mu && *rec.mu != 2) {
                if (sign_known)
                    res.rejections.push_back(
                        {"uno.mu2_iff_adjoint_square_zero",
                         "(K + H)^2 = 0 forces mu = 2 (record has mu = " + istr(*rec.mu) + ")"});
                live = false;
            }
            if (live && g < 2 * q) {
                if (sign_known)
                    res.rejections.push_back(
                        {"cones.alpha_minus_e_positive",
                         "a surface ruled in conics has g = 2q - 1 + (alpha - e) >= 2q (g = " +
                             istr(g) + ", q = " + istr(q) + ")"});
                live = false;
            }
            if (live) {
                const Int d_min_model = 4 * g + 4 - 8 * q;
                auto o = make_outcome(CaseTag::ConicBundle, {{"g", g}}, d, g);
                append_note(o, "Albanese fibres are conics (mu = 2)");
                if (d < d_min_model)
                    append_note(o, "internal projection deficit " + istr(d_min_model - d) +
                                       " from the relatively minimal model of degree " +
                                       istr(d_min_model));
                if (!sign_known) o.assumptions.push_back("assumes (K + H)^2 = 0");
                res.outcomes.push_back(std::move(o));

                if (rec.sections_linearly_normal() && d >= 2 * g + 5) {
                    const ConicRuledData data(q, 0, g - 2 * q + 1);
                    const SegreClassification sc = segre_classify(data, true);
                    if (sc.outcome != SegreOutcome::ConeVeronese2 || !sc.cone_bundle_degree)
                        throw std::logic_error("classify: Segre gate disagrees with the cones"
                                               " module");  // unreachable
                    auto seg = make_outcome(
                        CaseTag::SegreConeVeronese2,
                        {{"q", q}, {"e_or_alpha", *sc.cone_bundle_degree}}, d, g);
                    append_note(seg, "2-Veronese re-embedding of a cone over a genus-" + istr(q) +
                                         " curve embedded by a degree-" +
                                         istr(*sc.cone_bundle_degree) + " bundle");
                    if (d < d_min_model)
                        append_note(seg, "or a simple internal projection thereof (deficit " +
                                             istr(d_min_model - d) + ")");
                    if (d > 3 * g - 3 && min_degree_meets_segre_threshold(g))
                        append_note(seg, "d > 3g - 3 with g >= 7 meets the threshold"
                                         " automatically");
                    if (!sign_known) seg.assumptions.push_back("assumes (K + H)^2 = 0");
                    res.outcomes.push_back(std::move(seg));
                }
            }
        }
        if (pos_open) {
            bool live = true;
            if (sign_known && *kh2 > 0) {
                const Int h02 = *rec.k2 + 3 * g - 2 - d - q;  // h^0(2K + H) = p_a(K + H) - q
                if (h02 < 0) {
                    res.rejections.push_back({"biadjoint.h0_nonnegative",
                                              "h^0(2K + H) = p_a(K + H) - q = " + istr(h02) +
                                                  " < 0"});
                    live = false;
                }
            }
            if (live) {
                const FeasibilityVerdict fv = irregular_feasibility(rec, SignHint::Positive);
                if (fv.feasible) {
                    std::vector<std::pair<std::string, Int>> params{{"q", q}};
                    if (rec.mu) params.emplace_back("mu", *rec.mu);
                    auto o = make_outcome(CaseTag::IrregularFeasible, std::move(params), d, g);
                    if (sign_known) {
                        const Int h02 = *rec.k2 + 3 * g - 2 - d - q;
                        append_note(o, "h^0(2K + H) = " + istr(h02) +
                                           (h02 == 0 ? " (biadjoint system empty)"
                                                     : " (biadjoint system nonempty)"));
                    } else if (d > 4 * g - 4) {
                        append_note(o, "biadjoint system empty (d > 4g - 4)");
                    } else {
                        append_note(o, "biadjoint emptiness undetermined by the record");
                    }
                    Int passed = 0, skipped = 0;
                    for (const auto& c : fv.checks) {
                        if (c.status == ConstraintCheck::Status::Pass) ++passed;
                        if (c.status == ConstraintCheck::Status::Skipped) ++skipped;
                    }
                    append_note(o, "irregular feasibility filters: " + istr(passed) +
                                       " passed, " + istr(skipped) + " not evaluable");
                    append_note(o, "no lattice witness: irregular non-cone surfaces are recorded"
                                   " without construction");
                    if (!sign_known) o.assumptions.push_back("assumes (K + H)^2 > 0");
                    res.outcomes.push_back(std::move(o));
                } else {
                    for (const auto& c : fv.checks)
                        if (c.status == ConstraintCheck::Status::Violated)
                            res.rejections.push_back({c.id, c.note});
                }
            }
        }
        finalize();
        return res;
    }

    // q = 0: every case carries a lattice witness; route by the emptiness of
    // the higher adjoint systems, decided from the record where forced.
    Tri bi_empty = Tri::Unknown;
    if (sign_known) {
        if (*kh2 == 0) {
            bi_empty = Tri::Yes;  // |K + H| is a pencil (or trivial): |2K + H| dies
        } else {
            const Int pa = *rec.k2 + 3 * g - 2 - d;  // h^0(2K + H) = p_a(K + H) - q, q = 0
            if (pa < 0) {
                res.rejections.push_back(
                    {"biadjoint.h0_nonnegative",
                     "h^0(2K + H) = p_a(K + H) = " + istr(pa) + " < 0"});
                finalize();
                return res;
            }
            bi_empty = pa == 0 ? Tri::Yes : Tri::No;
        }
    } else if (d > 4 * g - 4) {
        bi_empty = Tri::Yes;
    }
    const Tri tri_empty = d > 3 * g - 3 ? Tri::Yes : Tri::Unknown;

    Int considered = 0, dropped_sign = 0, dropped_k2 = 0;

    auto admit = [&](ClassificationOutcome o, bool class23) {
        ++considered;
        const Int ik2 = *o.implied_k2();
        const Int ikh2 = ik2 + 4 * g - 4 - d;
        if ((ikh2 == 0 && !zero_open) || (ikh2 > 0 && !pos_open)) {
            ++dropped_sign;
            return;
        }
        if (rec.k2 && ik2 != *rec.k2) {
            ++dropped_k2;
            return;
        }
        if (!rec.k2) append_note(o, "implied K^2 = " + istr(ik2));
        if (!sign_known)
            o.assumptions.push_back(ikh2 == 0 ? "assumes (K + H)^2 = 0"
                                              : "assumes (K + H)^2 > 0");
        if (!class23 && ikh2 > 0 && bi_empty == Tri::Unknown)
            o.assumptions.push_back("assumes h^0(2K + H) = 0");
        if (class23) {
            if (bi_empty == Tri::Unknown) o.assumptions.push_back("assumes h^0(2K + H) > 0");
            if (tri_empty == Tri::Unknown) o.assumptions.push_back("assumes h^0(3K + H) = 0");
        }
        res.outcomes.push_back(std::move(o));
    };

    if (bi_empty != Tri::No)
        for (auto& o : solve_class1(d, g)) admit(std::move(o), false);

    // A structural conic-bundle row accompanies surviving hyperelliptic
    // members: those witnesses realize the mu = 2 fibration.
    if (zero_open && g >= 2) {
        const bool have_conic_member =
            std::any_of(res.outcomes.begin(), res.outcomes.end(), [](const auto& o) {
                return o.tag == CaseTag::Class1_Hyperelliptic;
            });
        if (have_conic_member) {
            auto o = make_outcome(CaseTag::ConicBundle, {{"g", g}}, d, g);
            append_note(o, "ruled in conics (mu = 2) with hyperelliptic sections; realized by"
                           " the class1_hyperelliptic witnesses in this list");
            if (!sign_known) o.assumptions.push_back("assumes (K + H)^2 = 0");
            res.outcomes.push_back(std::move(o));
        }
    }

    if (bi_empty != Tri::Yes && tri_empty != Tri::No && pos_open) {
        std::vector<ClassificationOutcome> candidates;
        if (g >= 4 && g <= 10) {
            // 2K + H ~ 0 on the minimal model: the 2-Veronese of a weak Del Pezzo.
            const Int t2 = 4 * (g - 1) - d;
            if (t2 >= 0) {
                auto o = make_outcome(CaseTag::Class2_DoubleDelPezzo, {{"k2", g - 1}}, d, g,
                                      plane_witness(6, 10 - g, t2));
                append_note(o, "2-Veronese image of a weak Del Pezzo surface of degree " +
                                   istr(g - 1));
                append_note(o, "plane model: sextics with " + istr(10 - g) + " double and " +
                                   istr(t2) + " simple base points");
                if (g == 9)
                    append_note(o, "alternatively the 2-Veronese image of a quadric");
                candidates.push_back(std::move(o));
            }
        }
        if (g == 3) {
            const Int t2 = 8 - d;
            if (t2 >= 0) {
                auto o = make_outcome(CaseTag::Class2_Plane6_2e7, {}, d, g,
                                      plane_witness(6, 7, t2));
                append_note(o, "plane sextics with seven double and " + istr(t2) +
                                   " simple base points");
                candidates.push_back(std::move(o));
            }
        }
        for (auto& o : solve_class3(d, g)) candidates.push_back(std::move(o));
        for (auto& o : candidates) {
            const Int ik2 = *o.implied_k2();
            // the nonempty-biadjoint setup forces (K + H)^2 > 0; corner rows
            // with (K + H)^2 = 0 already live in the conic-bundle families
            if (ik2 + 4 * g - 4 - d <= 0) continue;
            admit(std::move(o), true);
        }
    }

    if (res.outcomes.empty()) {
        if (considered == 0) {
            std::string detail =
                "no classification family attains d = " + istr(d) + ", g = " + istr(g);
            if (bi_empty == Tri::Yes) detail += " with empty biadjoint system";
            if (bi_empty == Tri::No) detail += " with nonempty biadjoint system";
            res.rejections.push_back({"families.no_member", detail});
        }
        if (dropped_sign > 0)
            res.rejections.push_back(
                {"families.adjoint_square_mismatch",
                 "(K + H)^2 = " + istr(*kh2) +
                     " rules out every family matching (d, g) = (" + istr(d) + ", " + istr(g) +
                     ")"});
        if (dropped_k2 > 0)
            res.rejections.push_back(
                {"families.k2_mismatch",
                 "K^2 = " + istr(*rec.k2) +
                     " differs from the value implied by every family matching (d, g) = (" +
                     istr(d) + ", " + istr(g) + ")"});
    }
    finalize();
    return res;
}

}  // namespace adjsurf
