#pragma once

/* Classification of linearly normal surfaces with d >= 2g - 1.
 *
 * classify() walks the decision tree on an invariant record:
 *
 *   g = q                minimal adjoint: Veronese V2 at (d, n) = (4, 5), or a
 *                        scroll (rational: d = n - 1; irregular: the bounds
 *                        n + q - 1 <= d <= n + 2q - 1, cone at the lower end)
 *   g > q, (K+H)^2 = 0   weak Del Pezzo (g = 1) or a conic bundle (mu = 2);
 *                        irregular conic bundles past d >= 2g + 5 with
 *                        linearly normal sections are 2-Veronese cones
 *   g > q, (K+H)^2 > 0,  feasibility filters only, labelled by biadjoint
 *   q > 0                emptiness; no witness is constructed
 *   q = 0, |2K+H| empty      the five minimal-biadjoint families
 *   q = 0, |2K+H| nonempty,  double Del Pezzo / plane sextic cases and the
 *          |3K+H| empty      four big rational families
 *
 * When K^2 is absent the sign of (K + H)^2 -- and with it the emptiness of
 * the higher adjoint systems -- can be undecidable from the record; the
 * classifier then follows every open branch and labels each outcome with the
 * assumption it rides on.  Witnesses are lattice data (model, H, s double
 * and t simple assigned base points) on P^2 or a Hirzebruch surface, and
 * verify_witness recomputes (d, g) from the lattice alone:
 *     d = H^2 - 4s - t,   g = p_a(H) - s.
 */

#include "adjsurf/adjoint.hpp"
#include "adjsurf/core.hpp"
#include "adjsurf/lattice.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace adjsurf {

enum class CaseTag {
    Scroll,
    VeroneseV2,
    VeroneseV3,
    WeakDelPezzo,
    ConicBundle,
    Class1_V4,
    Class1_V5,
    Class1_Hyperelliptic,
    Class1_Trigonal,
    Class2_DoubleDelPezzo,
    Class2_Plane6_2e7,
    Class3_Plane7,
    Class3_Plane8,
    Class3_Tetragonal,
    Class3_Pentagonal,
    SegreConeVeronese2,
    IrregularFeasible,
};

const char* tag_name(CaseTag tag);

struct Witness {
    SurfaceModel model;
    DivisorClass h;
    Int s = 0;  // double base points: each drops the degree by 4, the genus by 1
    Int t = 0;  // simple base points: each drops the degree by 1
};

struct ClassificationOutcome {
    CaseTag tag;
    std::vector<std::pair<std::string, Int>> params;
    Int d, g;
    std::optional<Witness> witness;
    bool verified = false;
    std::vector<std::string> assumptions;  // open branches this outcome relies on
    std::vector<std::string> notes;

    /* K^2 of the minimal desingularization the witness describes. */
    std::optional<Int> implied_k2() const;
};

struct Rejection {
    std::string constraint;
    std::string note;
};

struct ClassificationResult {
    std::vector<ClassificationOutcome> outcomes;
    std::vector<Rejection> rejections;

    bool feasible() const { return !outcomes.empty(); }
};

/* Throws std::invalid_argument when qd_identities finds a contradiction. */
ClassificationResult classify(const InvariantRecord& rec);

/* Families with empty biadjoint system, keyed on (d, g) with q = 0:
 *   g = 1            weak Del Pezzo of degree d (Veronese V3 at d = 9)
 *   g = 3, d = 16-b  V4 projected from b <= 11 points
 *   g = 6, d = 25-b  V5 projected from b <= 17 points (b >= 15 needs the
 *                    conic condition on the projected scheme)
 *   g >= 2, d = 4g+4-b   hyperelliptic members |2E + (g+1+e)F|, 0 <= e <= g+1
 *   g >= 2, d = 3g+6-b   trigonal members |3E + (h+e+2)F|, g = 2h - e + 2,
 *                        e >= 0, h >= max(2e - 2, e); (e, h) = (2, 2) is the
 *                        cone corner                                         */
std::vector<ClassificationOutcome> solve_class1(const Int& d, const Int& g);

/* Families with nonempty biadjoint and empty triadjoint system, q = 0:
 *   plane septics   d = 49 - 4s - t, g = 15 - s
 *   plane octics    d = 64 - 4s - t, g = 21 - s
 *   tetragonal      |4E + (h+2e+4)F|, e >= 0, h >= max(2e-4, e-2),
 *                   d = 8h + 32 - 4s - t, g = 3h + 9 - s
 *   pentagonal      |5E + (h+2e+4)F|, e >= 0, h >= max(3e-4, 2e-2, e),
 *                   d = 10h - 5e + 40 - 4s - t, g = 4h - 2e + 12 - s        */
std::vector<ClassificationOutcome> solve_class3(const Int& d, const Int& g);

struct WitnessVerdict {
    bool ok;
    Int d_recomputed, g_recomputed;
    std::vector<std::string> warnings;
};

/* Lattice-only recomputation: d = H^2 - 4s - t and g = p_a(H) - s must match,
 * H must be nef, and n = d - g + 1 >= 3.  When d > 3g - 3 the bound
 * d < (3/2) n is rechecked and reported as a warning if it fails.  The model
 * must be P^2 or Hirzebruch (decidable nef cone). */
WitnessVerdict verify_witness(const Witness& witness, const Int& d, const Int& g);

/* Expands an outcome into its simple internal projections b = 0..max_t
 * (degree drops by b, genus is unchanged), re-verifying each and stopping at
 * n = 3.  For d - b >= 2g + 1 the projection is simple for every curvilinear
 * centre, recorded as a note. */
std::vector<ClassificationOutcome> internal_projection_closure(
    const ClassificationOutcome& outcome, const Int& max_t);

/* Canonical order: case tag name, then parameter list. */
void sort_outcomes(std::vector<ClassificationOutcome>& outcomes);

}  // namespace adjsurf
