#pragma once

/* A small gallery of worked surfaces with known invariants.  Each entry
 * recomputes its published numbers through the library (lattice arithmetic,
 * pushforward cohomology, record identities) and reports them as named
 * expected/actual checks, so the gallery doubles as an end-to-end smoke test
 * and as executable documentation of the constructions. */

#include "adjsurf/core.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace adjsurf {

struct ExampleCheck {
    std::string quantity;
    Int expected;
    Int actual;

    bool pass() const { return expected == actual; }
};

struct ExampleReport {
    std::string name;
    std::vector<std::pair<std::string, Int>> parameters;
    std::vector<ExampleCheck> checks;
    std::vector<std::string> notes;

    bool all_pass() const;
};

/* Elliptic ruled surface P(O + O(-p)) over an elliptic curve, embedded by
 * k(C0 + f): degree k^2, sectional genus k(k-1)/2 + 1, h^0 = 1 + k(k+1)/2,
 * h^1 = 1, adjoint base point on the (-1) section.  The variant twisted by a
 * different point p' has h^0 = k(k+1)/2 and h^1 = 0; its image is either a
 * non-linearly-normal surface of degree k^2 or a linearly normal one of
 * degree k^2 - 1, and the report records both alternatives as open.
 * Requires k >= 3. */
ExampleReport example_elliptic_ruled_e1(const Int& k);

/* Elliptic ruled surface P(O + O(eta)) with eta of degree 0 non-torsion,
 * embedded by g C0 + f: the system has dimension g and two simple base
 * points; the blown-up image in P^g has degree 2g - 2 and canonical
 * hyperplane sections of genus g, with two elliptic double points.
 * Requires g >= 3. */
ExampleReport example_elliptic_ruled_det0(const Int& g);

/* Cone re-embedding C in |mu D| on P(O + G), deg G = e > 2q - 2: closed-form
 * d, g, h^0 cross-checked against the pushforward sum and the lattice genus,
 * plus the linear-normality identity h^0(C) = mu^2 e - g + 1. */
ExampleReport example_mu_cone(const Int& q, const Int& e, const Int& mu);

/* Quartic Veronese embedding of the plane: d = 16, g = 3, n = 14,
 * h^0 = 15, (K + H)^2 = 1, h^0(2K + H) = 0, and the classifier lists it. */
ExampleReport example_veronese_quartic();

/* Nonic plane embedding at the d = 3g - 3 boundary: d = 81, g = 28, n = 54;
 * the m = 3 adjoint multiple has degree 0 against H and is not forced
 * empty. */
ExampleReport example_veronese_nonic_boundary();

/* Dispatch by gallery name:
 *   ell-ruled-e1           (k, default 3)
 *   ell-ruled-det0-dec     (g, default 3)
 *   mu-cone                (q, e, mu; defaults 1, 3, 3)
 *   veronese-v4
 *   veronese-v9-boundary
 * Unknown names and out-of-range parameters throw std::invalid_argument. */
struct ExampleOptions {
    std::optional<Int> k, g, q, e, mu;
};
ExampleReport run_gallery_example(const std::string& name,
                                  const ExampleOptions& options = {});

/* The five gallery names, in the order above. */
const std::vector<std::string>& gallery_names();

}  // namespace adjsurf
