#pragma once

/* Numerical adjoint calculus on an invariant record.
 *
 * A record collects the numerics of a linearly normal surface S in P^n of
 * degree d = n + a with hyperplane class H, sectional genus g, irregularity
 * q of the minimal desingularization S', plus optional K^2, h^1(H), and the
 * Albanese fibre degree mu = H.G.  The standing hypothesis d >= 2g - 1
 * (equivalently K.H < 0) and linear normality of S are carried as flags.
 *
 * Everything here is arithmetic consequence-chasing: the dimension and
 * self-intersection identities for |K + H|, emptiness thresholds for
 * |mK + H|, degree bounds for scrolls, and the feasibility filters for
 * irregular surfaces.  No geometry is constructed; the classifier layers
 * witnesses on top of these verdicts.
 */

#include "adjsurf/core.hpp"

#include <optional>
#include <string>
#include <vector>

namespace adjsurf {

struct RecordFlags {
    bool d_ge_2g_minus_1 = true;            // K.H < 0
    bool linearly_normal_surface = true;    // S is not a projection of a surface of the same degree
    bool linearly_normal_sections = false;  // caller assertion; also derivable as g = a + 1
    bool minimal_desingularization = true;  // S' -> S is the minimal desingularization
};

struct InvariantRecord {
    Int d, n, g, q;
    std::optional<Int> k2;    // K^2 of S'
    std::optional<Int> h1h;   // h^1(S', H)
    std::optional<Int> mu;    // H.G for the Albanese fibre G (q > 0)
    RecordFlags flags;

    Int a() const { return d - n; }
    /* (K + H)^2 = K^2 + 4g - 4 - d, known only with k2. */
    std::optional<Int> adjoint_square() const;
    bool sections_linearly_normal() const { return flags.linearly_normal_sections || g == a() + 1; }
};

/* Identities for the first adjoint system:
 *   h^0(K + H) = g - q,  h^1(H) = g - a - 1 + q,
 *   sections linearly normal iff g = a + 1 iff q = h^1(H),
 *   (K + H)^2 = K^2 + 4g - 4 - d <= K^2 - n + 3a, equality iff g = a + 1.  */
struct QdReport {
    Int h0_adjoint;
    Int h1h;
    bool sections_linearly_normal;
    std::optional<Int> adjoint_square;
    std::optional<Int> adjoint_square_bound;  // K^2 - n + 3a
    bool bound_is_equality;
    std::vector<std::string> contradictions;

    bool consistent() const { return contradictions.empty(); }
};
QdReport qd_identities(const InvariantRecord& rec);

/* Degree of mK + H against H and the forced-emptiness threshold.
 *   deg_vs_H = (mK + H).H = m(2g - 2) - d(m - 1)
 *   deg_vs_H < 0 forces |mK + H| (and all its multiples) empty;
 *   for m >= 2, d > 2m(g-1)/(m-1) (exact rational comparison) kills every
 *   level >= m at once.  self_int = (mK + H)^2 needs K^2.                  */
struct AdjointProfile {
    Int m;
    std::optional<Int> self_int;
    Int deg_vs_H;
    bool empty_forced;
    std::optional<bool> kills_all_higher;  // absent for m = 1
};
AdjointProfile adjoint_profile(const InvariantRecord& rec, const Int& m);

/* Scrolls (g = q > 0): n + q - 1 <= d <= n + 2q - 1, cone iff the lower
 * bound is attained. */
struct ScrollBoundsVerdict {
    bool valid;
    bool cone;
};
ScrollBoundsVerdict check_scroll_bounds(const InvariantRecord& rec);

/* Numerics of K + H when g > q and K^2 is known:
 *   p_a(K + H) = K^2 + 3g - 2 - d,  (K + H)^2 = g - 2 + p_a(K + H),
 *   h^0(2K + H) = p_a(K + H) - q when (K + H)^2 > 0,
 *   |K + H| birational once d >= 10, base point free whenever q = 0.       */
struct FirstAdjointReport {
    Int adjoint_square;
    Int pa_adjoint;
    std::optional<Int> h0_biadjoint;
    bool birational_guaranteed;
    bool base_point_free_guaranteed;
    std::vector<std::string> contradictions;
};
FirstAdjointReport first_adjoint_predicates(const InvariantRecord& rec);

/* Sign information about (K + H)^2 when K^2 is not on the record. */
enum class SignHint { Unknown, Zero, Positive };

struct ConstraintCheck {
    enum class Status { Pass, Violated, Skipped };
    std::string id;
    Status status;
    std::string note;
};

struct FeasibilityVerdict {
    bool feasible;  // no evaluable constraint violated
    std::vector<ConstraintCheck> checks;
};

/* Feasibility filters for irregular records (q > 0, g > q):
 *   setup.g_minus_1_ge_mu_q_minus_1      g - 1 >= mu (q - 1)
 *   bounds.g_ge_9q_minus_7               when (K+H)^2 > 0
 *   npp.g_minus_q_ge_3                   when (K+H)^2 > 0
 *   irr.mu_eq_2_when_d_gt_3g_minus_3     d > 3g - 3 forces mu = 2
 *   irr.g_gt_8q_minus_7_when_d_gt_3g_minus_3
 *   hartshorne.degree_bound              d <= 2 mu (g-1)/(mu-1), exact rational
 *   uno.mu2_iff_adjoint_square_zero      mu = 2  <->  (K+H)^2 = 0
 *   empty2adj.mu_eq_3                    empty |2K+H| and (K+H)^2 >= 5 force mu = 3
 *   empty2adj.small_square_exceptions    empty |2K+H| and 0 < (K+H)^2 < 5 force
 *                                        q = 1 and (g, (K+H)^2) in {(5,4), (4,3)}  */
FeasibilityVerdict irregular_feasibility(const InvariantRecord& rec,
                                         SignHint adjoint_square_sign = SignHint::Unknown);

}  // namespace adjsurf
