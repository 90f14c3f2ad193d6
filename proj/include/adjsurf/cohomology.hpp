#pragma once

/* Curve-level cohomology and ruled-surface pushforwards.
 *
 * h^0/h^1 of a line bundle on a smooth curve of genus q is decided by degree
 * alone outside [1, 2q-2]; inside that window the answer depends on moduli,
 * so the caller must assert a speciality (h^1) value or the call fails with
 * GeneralityRequired.  Degree-0 bundles carry a trivial/nontrivial flag:
 * torsion order never matters for these computations, only whether the
 * bundle is O.
 *
 * On a decomposable ruled surface P(O + L) over the curve, deg L = -e,
 * sections of the k-th twist push forward to Sym^k(O + L) tensor A, a sum of
 * k+1 line bundles of degrees alpha, alpha - e, ..., alpha - k e.  A summand
 * of degree zero with i >= 1 is A tensor L^i; under the standing genericity
 * assumption (no torsion relations between A and L) its triviality is a
 * single bit, recorded as zero_composite.
 */

#include "adjsurf/core.hpp"

#include <array>
#include <optional>

namespace adjsurf {

enum class ZeroDegreeKind { Trivial, Nontrivial };

struct CurveLineBundle {
    Int genus;    // q >= 0
    Int degree;
    ZeroDegreeKind zero_degree_kind = ZeroDegreeKind::Trivial;  // used only at degree 0
    std::optional<Int> speciality_override;  // asserted h^1 for degrees in [1, 2q-2]
};

struct H0H1 {
    Int h0, h1;
    bool operator==(const H0H1&) const = default;
};

/* Degree table, Riemann-Roch h0 - h1 = deg - q + 1 throughout:
 *   deg > 2q-2          (deg - q + 1, 0)
 *   deg < 0             (0, -deg + q - 1)
 *   deg = 0             trivial (1, q), nontrivial (0, q-1)
 *   deg in [1, 2q-2]    requires speciality_override          */
H0H1 h0_h1_curve(const CurveLineBundle& bundle);

struct DecomposableRuledSurface {
    Int base_genus;        // q >= 0
    Int e;                 // summand degrees are 0 and -e
    CurveLineBundle twist; // the class A, degree alpha, genus = base_genus
    ZeroDegreeKind zero_composite = ZeroDegreeKind::Nontrivial;  // A (x) L^i at degree 0, i >= 1

    std::array<Int, 2> summand_degrees() const { return {Int(0), -e}; }
};

/* Componentwise sum of h0_h1_curve over the k+1 pushforward summands.
 * Summand i = 0 is A itself (its own zero-degree kind and override apply);
 * summands i >= 1 landing in the special range raise GeneralityRequired. */
H0H1 h0_h1_symk(const DecomposableRuledSurface& surface, const Int& k);

/* Cone re-embeddings: C in |mu D| on P(O + G), deg G = e > 2q - 2, D the
 * tautological class.  Closed forms:
 *   d = e mu^2,  2g - 2 = mu (2(q-1) + (mu-1) e),
 *   h0 = 1 + mu(mu+1) e / 2 + mu (1 - q).                              */
struct MuConeInvariants {
    Int d, g, h0_surface;
};
MuConeInvariants mu_cone_invariants(const Int& q, const Int& e, const Int& mu);

/* The hyperplane series restricted to C is complete:
 * h^0(C, restriction) = mu^2 e - g + 1 must equal h0_surface - 1. */
bool check_linear_normality_mu_cone(const Int& q, const Int& e, const Int& mu);

}  // namespace adjsurf
