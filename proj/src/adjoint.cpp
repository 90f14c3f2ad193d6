#include "adjsurf/adjoint.hpp"

#include <stdexcept>

namespace adjsurf {

namespace {

void require_standing_hypotheses(const InvariantRecord& rec, const char* who) {
    if (!rec.flags.d_ge_2g_minus_1 || !rec.flags.linearly_normal_surface)
        throw std::invalid_argument(std::string(who) +
                                    ": record must assert d >= 2g - 1 and linear normality of S");
}

std::string istr(const Int& x) { return x.str(); }

}  // namespace

std::optional<Int> InvariantRecord::adjoint_square() const {
    if (!k2) return std::nullopt;
    return *k2 + 4 * g - 4 - d;
}

QdReport qd_identities(const InvariantRecord& rec) {
    require_standing_hypotheses(rec, "qd_identities");
    QdReport rep;
    const Int a = rec.a();
    rep.h0_adjoint = rec.g - rec.q;
    rep.h1h = rec.g - a - 1 + rec.q;
    rep.sections_linearly_normal = rec.g == a + 1;
    rep.bound_is_equality = rep.sections_linearly_normal;

    auto flag = [&rep](std::string msg) { rep.contradictions.push_back(std::move(msg)); };

    if (rec.n < 3) flag("n = " + istr(rec.n) + " < 3: not a surface in projective space");
    if (a < -1) flag("a = d - n = " + istr(a) + " < -1: degree below the minimal-surface bound");
    if (rec.g < 0) flag("sectional genus g = " + istr(rec.g) + " < 0");
    if (rec.q < 0 || rec.q > rec.g)
        flag("irregularity must satisfy 0 <= q <= g (q = " + istr(rec.q) + ", g = " +
             istr(rec.g) + ")");
    if (rec.d < 2 * rec.g - 1)
        flag("d = " + istr(rec.d) + " < 2g - 1 = " + istr(2 * rec.g - 1) +
             " contradicts the standing degree hypothesis");
    if (rep.h1h < 0)
        flag("h^1(H) = g - a - 1 + q = " + istr(rep.h1h) + " < 0 (needs g >= a + 1 - q)");
    if (rep.h1h > rec.q)
        flag("h^1(H) = g - a - 1 + q = " + istr(rep.h1h) + " exceeds q = " + istr(rec.q) +
             " (needs g <= a + 1)");
    if (rec.h1h && *rec.h1h != rep.h1h)
        flag("supplied h^1(H) = " + istr(*rec.h1h) + " but g - a - 1 + q = " + istr(rep.h1h));
    if (rec.mu) {
        if (*rec.mu < 1) flag("mu = " + istr(*rec.mu) + " < 1");
        if (rec.g > rec.q && *rec.mu < 2)
            flag("mu = 1 forces a scroll, contradicting g > q");
        if (rec.q == 0) flag("mu is the Albanese fibre degree; it needs q > 0");
    }
    if (rec.k2) {
        if (rec.q == 0 && *rec.k2 > 9)
            flag("K^2 = " + istr(*rec.k2) + " > 9 is impossible for a regular ruled-type surface");
        if (rec.q > 0 && *rec.k2 > 8 - 8 * rec.q)
            flag("K^2 = " + istr(*rec.k2) + " > 8 - 8q: impossible for irregularity q = " +
                 istr(rec.q));
        // A negative (K + H)^2 is left to the feasibility layer: the record is
        // internally coherent, it just admits no surface.
        rep.adjoint_square = *rec.k2 + 4 * rec.g - 4 - rec.d;
        rep.adjoint_square_bound = *rec.k2 - rec.n + 3 * a;
    }
    return rep;
}

AdjointProfile adjoint_profile(const InvariantRecord& rec, const Int& m) {
    require_standing_hypotheses(rec, "adjoint_profile");
    if (m < 1) throw std::invalid_argument("adjoint_profile: m must be >= 1");
    AdjointProfile prof;
    prof.m = m;
    prof.deg_vs_H = m * (2 * rec.g - 2) - rec.d * (m - 1);
    prof.empty_forced = prof.deg_vs_H < 0;
    if (rec.k2)
        prof.self_int = m * m * *rec.k2 + 2 * m * (2 * rec.g - 2 - rec.d) + rec.d;
    if (m >= 2) {
        // d > 2m(g-1)/(m-1), compared exactly.
        prof.kills_all_higher = Rat(rec.d) > Rat(2 * m * (rec.g - 1), m - 1);
    }
    return prof;
}

ScrollBoundsVerdict check_scroll_bounds(const InvariantRecord& rec) {
    require_standing_hypotheses(rec, "check_scroll_bounds");
    if (rec.q <= 0 || rec.g != rec.q)
        throw std::invalid_argument("check_scroll_bounds: needs q > 0 and g = q");
    ScrollBoundsVerdict v;
    v.valid = rec.d >= rec.n + rec.q - 1 && rec.d <= rec.n + 2 * rec.q - 1;
    v.cone = v.valid && rec.d == rec.n + rec.q - 1;
    return v;
}

FirstAdjointReport first_adjoint_predicates(const InvariantRecord& rec) {
    require_standing_hypotheses(rec, "first_adjoint_predicates");
    if (rec.g <= rec.q)
        throw std::invalid_argument("first_adjoint_predicates: needs g > q (|K + H| nonempty)");
    if (!rec.k2) throw std::invalid_argument("first_adjoint_predicates: needs K^2 on the record");

    FirstAdjointReport rep;
    rep.adjoint_square = *rec.k2 + 4 * rec.g - 4 - rec.d;
    rep.pa_adjoint = *rec.k2 + 3 * rec.g - 2 - rec.d;
    if (rep.adjoint_square != rec.g - 2 + rep.pa_adjoint)
        throw std::logic_error("first_adjoint_predicates: square/genus identity broke");  // unreachable
    if (rep.adjoint_square < 0)
        rep.contradictions.push_back("(K + H)^2 = " + rep.adjoint_square.str() +
                                     " < 0 contradicts nefness of K + H");
    if (rep.adjoint_square > 0) {
        if (rep.pa_adjoint < rec.q)
            rep.contradictions.push_back("p_a(K + H) = " + rep.pa_adjoint.str() +
                                         " < q = " + rec.q.str());
        else
            rep.h0_biadjoint = rep.pa_adjoint - rec.q;
    }
    rep.birational_guaranteed = rep.adjoint_square > 0 && rec.d >= 10;
    rep.base_point_free_guaranteed = rec.q == 0;
    return rep;
}

namespace {

enum class Tri { No, Yes, Unknown };

struct FeasibilityBuilder {
    FeasibilityVerdict verdict{true, {}};

    void pass(std::string id, std::string note = {}) {
        verdict.checks.push_back({std::move(id), ConstraintCheck::Status::Pass, std::move(note)});
    }
    void violated(std::string id, std::string note) {
        verdict.feasible = false;
        verdict.checks.push_back(
            {std::move(id), ConstraintCheck::Status::Violated, std::move(note)});
    }
    void skipped(std::string id, std::string note) {
        verdict.checks.push_back(
            {std::move(id), ConstraintCheck::Status::Skipped, std::move(note)});
    }
    void require(bool ok, std::string id, std::string note) {
        if (ok)
            pass(std::move(id));
        else
            violated(std::move(id), std::move(note));
    }
};

}  // namespace

FeasibilityVerdict irregular_feasibility(const InvariantRecord& rec, SignHint hint) {
    require_standing_hypotheses(rec, "irregular_feasibility");
    if (rec.q <= 0) throw std::invalid_argument("irregular_feasibility: needs q > 0");

    FeasibilityBuilder b;

    // K + H is nef only off the scroll case: for g = q a negative (K + H)^2
    // is unremarkable and the g > q machinery below does not apply.
    const bool non_scroll = rec.g > rec.q;

    // Resolve the sign of (K + H)^2: the record's K^2 wins over the hint.
    const std::optional<Int> kh2 = rec.adjoint_square();
    Tri square_positive = Tri::Unknown;
    Tri square_zero = Tri::Unknown;
    if (kh2) {
        if (*kh2 < 0 && non_scroll) {
            b.violated("nef.adjoint_square_nonnegative",
                       "(K + H)^2 = " + kh2->str() + " < 0 with K + H nef");
            return b.verdict;
        }
        square_positive = *kh2 > 0 ? Tri::Yes : Tri::No;
        square_zero = *kh2 == 0 ? Tri::Yes : Tri::No;
    } else if (hint == SignHint::Positive) {
        square_positive = Tri::Yes;
        square_zero = Tri::No;
    } else if (hint == SignHint::Zero) {
        square_positive = Tri::No;
        square_zero = Tri::Yes;
    }

    // mu may be forced even when the record omits it; track the effective value
    // so that every mu-dependent filter sees the same number.
    std::optional<Int> mu = rec.mu;

    // Past the triadjoint threshold, the Albanese fibration is by conics.
    if (!non_scroll) {
        b.skipped("irr.mu_eq_2_when_d_gt_3g_minus_3", "scroll record (g = q)");
        b.skipped("irr.g_gt_8q_minus_7_when_d_gt_3g_minus_3", "scroll record (g = q)");
    } else if (rec.d > 3 * rec.g - 3) {
        if (mu)
            b.require(*mu == 2, "irr.mu_eq_2_when_d_gt_3g_minus_3",
                      "d > 3g - 3 forces mu = 2, record has mu = " + mu->str());
        else {
            mu = 2;
            b.pass("irr.mu_eq_2_when_d_gt_3g_minus_3", "mu unset; d > 3g - 3 derives mu = 2");
        }
        b.require(rec.g > 8 * rec.q - 7, "irr.g_gt_8q_minus_7_when_d_gt_3g_minus_3",
                  "g = " + rec.g.str() + " <= 8q - 7 = " + Int(8 * rec.q - 7).str());
    } else {
        b.skipped("irr.mu_eq_2_when_d_gt_3g_minus_3", "d <= 3g - 3");
        b.skipped("irr.g_gt_8q_minus_7_when_d_gt_3g_minus_3", "d <= 3g - 3");
    }

    // Riemann-Hurwitz for the Albanese pencil: g - 1 >= mu (q - 1).
    if (mu)
        b.require(rec.g - 1 >= *mu * (rec.q - 1), "setup.g_minus_1_ge_mu_q_minus_1",
                  "g - 1 = " + Int(rec.g - 1).str() + " < mu (q - 1) = " +
                      Int(*mu * (rec.q - 1)).str());
    else
        b.skipped("setup.g_minus_1_ge_mu_q_minus_1", "mu unknown");

    // Positive adjoint square: genus floor and distance from the scroll case.
    if (rec.g > rec.q && square_positive == Tri::Yes) {
        b.require(rec.g >= 9 * rec.q - 7, "bounds.g_ge_9q_minus_7",
                  "g = " + rec.g.str() + " < 9q - 7 = " + Int(9 * rec.q - 7).str());
        b.require(rec.g - rec.q >= 3, "npp.g_minus_q_ge_3",
                  "g - q = " + Int(rec.g - rec.q).str() + " < 3");
    } else {
        const char* why = !non_scroll ? "scroll record (g = q)"
                          : square_positive == Tri::Unknown ? "(K + H)^2 sign unknown"
                                                            : "(K + H)^2 = 0 branch";
        b.skipped("bounds.g_ge_9q_minus_7", why);
        b.skipped("npp.g_minus_q_ge_3", why);
    }

    // Degree bound for a fibration with fibre degree mu: d <= 2 mu (g-1)/(mu-1).
    if (!non_scroll)
        b.skipped("hartshorne.degree_bound", "scroll record (g = q)");
    else if (mu && *mu >= 2)
        b.require(Rat(rec.d) <= Rat(2 * *mu * (rec.g - 1), *mu - 1), "hartshorne.degree_bound",
                  "d = " + rec.d.str() + " > 2 mu (g - 1)/(mu - 1)");
    else
        b.skipped("hartshorne.degree_bound", "mu unknown or < 2");

    // mu = 2 exactly when (K + H)^2 = 0 (g > q, q > 0).
    if (rec.g > rec.q && mu && square_zero != Tri::Unknown) {
        const bool mu_two = *mu == 2;
        b.require(mu_two == (square_zero == Tri::Yes), "uno.mu2_iff_adjoint_square_zero",
                  mu_two ? "mu = 2 needs (K + H)^2 = 0" : "(K + H)^2 = 0 needs mu = 2");
    } else {
        b.skipped("uno.mu2_iff_adjoint_square_zero",
                  rec.g > rec.q ? "mu or (K + H)^2 sign unknown" : "scroll record (g = q)");
    }

    // Empty biadjoint: h^0(2K + H) = p_a(K + H) - q when (K+H)^2 > 0, or forced
    // by degree reasons when d > 4g - 4.
    Tri biadjoint_empty = Tri::Unknown;
    if (kh2 && *kh2 > 0 && rec.g > rec.q) {
        const Int pa = *rec.k2 + 3 * rec.g - 2 - rec.d;
        if (pa >= rec.q) biadjoint_empty = (pa == rec.q) ? Tri::Yes : Tri::No;
    }
    if (biadjoint_empty == Tri::Unknown && rec.d > 4 * rec.g - 4) biadjoint_empty = Tri::Yes;

    if (!non_scroll) {
        b.skipped("empty2adj.mu_eq_3", "scroll record (g = q)");
        b.skipped("empty2adj.small_square_exceptions", "scroll record (g = q)");
    } else if (biadjoint_empty == Tri::Yes && square_positive == Tri::Yes && kh2) {
        if (*kh2 >= 5) {
            if (mu)
                b.require(*mu == 3, "empty2adj.mu_eq_3",
                          "empty |2K + H| with (K + H)^2 >= 5 forces mu = 3, effective mu = " +
                              mu->str());
            else
                b.pass("empty2adj.mu_eq_3", "mu unset; derived mu = 3");
            b.skipped("empty2adj.small_square_exceptions", "(K + H)^2 >= 5");
        } else {
            const bool exceptional = rec.q == 1 && ((rec.g == 5 && *kh2 == 4) ||
                                                    (rec.g == 4 && *kh2 == 3));
            b.require(exceptional, "empty2adj.small_square_exceptions",
                      "empty |2K + H| with 0 < (K + H)^2 < 5 only for q = 1 and"
                      " (g, (K + H)^2) in {(5, 4), (4, 3)}");
            b.skipped("empty2adj.mu_eq_3", "(K + H)^2 < 5");
        }
    } else {
        const char* why = biadjoint_empty == Tri::No ? "|2K + H| nonempty"
                                                     : "biadjoint emptiness undetermined";
        b.skipped("empty2adj.mu_eq_3", why);
        b.skipped("empty2adj.small_square_exceptions", why);
    }

    return b.verdict;
}

}  // namespace adjsurf
