#pragma once

/* Picard-lattice models with an exact integer intersection pairing.
 *
 * Four surface shapes cover everything the classifier needs:
 *
 *   ProjectivePlane      basis L            L^2 = 1            K = -3L
 *   Hirzebruch(e)        basis E, F         E^2 = -e, E.F = 1  K = -2E - (e+2)F
 *   BlowupOfPlane(r)     basis L, E_1..E_r  L^2 = 1, E_i^2 = -1, mixed 0
 *                                           K = -3L + sum E_i
 *   NumericallyRuled(q,e) basis E, F        E^2 = -e, E.F = 1  K = -2E + (2q-2-e)F
 *
 * The last shape is the numerical lattice of a P^1-bundle over a curve of
 * genus q >= 1 (section E, fibre F); only chi(O) = 1 - q distinguishes it
 * from the rational ruled case.  Divisor classes are coefficient vectors in
 * the listed basis, all arithmetic in arbitrary-precision integers.
 */

#include "adjsurf/core.hpp"

#include <span>
#include <vector>

namespace adjsurf {

enum class ModelKind { ProjectivePlane, Hirzebruch, BlowupOfPlane, NumericallyRuled };

const char* to_string(ModelKind kind);

struct SurfaceModel {
    ModelKind kind = ModelKind::ProjectivePlane;
    Int e = 0;                 // Hirzebruch / NumericallyRuled invariant
    Int r = 0;                 // number of blown-up points
    Int q = 0;                 // base-curve genus (NumericallyRuled only)
    bool curvilinear = false;  // blown-up centre lies on a curvilinear scheme

    static SurfaceModel projective_plane();
    static SurfaceModel hirzebruch(Int e);                          // e >= 0
    static SurfaceModel blowup_of_plane(Int r, bool curvilinear = false);  // r >= 0
    static SurfaceModel numerically_ruled(Int q, Int e);            // q >= 1, any e

    std::size_t rank() const;
    Int irregularity() const { return q; }
    Int chi_structure_sheaf() const { return 1 - q; }

    bool operator==(const SurfaceModel& other) const;
};

struct DivisorClass {
    SurfaceModel model;
    std::vector<Int> coeffs;  // coordinates in the model basis

    DivisorClass(SurfaceModel m, std::vector<Int> c);

    DivisorClass operator+(const DivisorClass& other) const;
    DivisorClass operator-(const DivisorClass& other) const;
    DivisorClass operator*(const Int& scalar) const;
    bool operator==(const DivisorClass& other) const;
};

/* Gram matrix of the pairing in the model basis. */
std::vector<std::vector<Int>> intersection_form(const SurfaceModel& model);

/* Exact intersection product; throws ModelMismatch unless both classes live
 * on the same model. */
Int intersect(const DivisorClass& d1, const DivisorClass& d2);

DivisorClass canonical_class(const SurfaceModel& model);

/* Adjunction: p_a(D) = 1 + (D^2 + K.D)/2.  Throws ParityViolation if the
 * numerator is odd (cannot happen for classes of these lattices, kept as a
 * guard for future model kinds). */
Int arithmetic_genus(const DivisorClass& d);

/* Riemann-Roch: chi(D) = chi(O) + (D^2 - K.D)/2. */
Int euler_characteristic(const DivisorClass& d);

/* Nefness where the nef cone is known:
 *   P^2:                        aL nef iff a >= 0
 *   Hirzebruch(e), e >= 0:      aE + bF nef iff a >= 0 and b >= a e
 *   NumericallyRuled(q, e>=0):  same test (D.F >= 0 and D.E >= 0)
 * Everything else is Unknown.  The overload taking test curves answers for
 * blow-ups by pairing against the supplied classes; that check is necessary
 * only, not sufficient, and is documented as such. */
Ternary is_nef(const DivisorClass& d);
Ternary is_nef(const DivisorClass& d, std::span<const DivisorClass> test_curves);

}  // namespace adjsurf
