#pragma once

/* Conic-ruled irregular surfaces and Veronese re-embeddings of cones.
 *
 * A surface ruled in conics over a curve Gamma of genus q >= 1 has a
 * relatively minimal model P(E), E normalized of degree -e, with hyperplane
 * sections C in |2E0 + alpha G| (E0 the normalized section, G the fibre).
 * Two relations pin the numerics:
 *     g = 2q - 1 + alpha - e,     d = 4(alpha - e) = 4g + 4 - 8q.
 *
 * Once the sections are linearly normal and the degree clears the threshold
 *     d >= 2g + 5   <=>   alpha - e >= 2q + 2
 * the surface is forced to be the 2-Veronese re-embedding of a cone over
 * Gamma: the bundle splits after the twist A = L^(-2), i.e. alpha = 2e, and
 * the cone is over Gamma embedded by a degree alpha - e line bundle.
 */

#include "adjsurf/core.hpp"

#include <optional>

namespace adjsurf {

struct ConicRuledData {
    Int q;      // genus of the base curve, >= 1
    Int e;      // -deg of the normalized rank-2 bundle
    Int alpha;  // fibre-direction degree of the hyperplane class

    ConicRuledData(Int q_, Int e_, Int alpha_);

    Int genus() const { return 2 * q - 1 + alpha - e; }
    Int degree() const { return 4 * (alpha - e); }
};

struct ConeRelations {
    Int d, g;
};

/* Returns (d, g) and checks the closed relation d = 4g + 4 - 8q; throws
 * std::invalid_argument when the degree is not positive. */
ConeRelations cone_relations(const ConicRuledData& data);

/* d >= 2g + 5 computed both as the degree comparison and as
 * alpha - e >= 2q + 2; the two must agree identically. */
bool segre_threshold(const ConicRuledData& data);

enum class SegreOutcome { ConeVeronese2, BelowThreshold, NotLinearlyNormal };

struct SegreClassification {
    SegreOutcome outcome;
    /* Degree of the curve embedding under the cone, alpha - e; in the split
     * normal form the twist is A = L^(-2) with alpha = 2e, so this equals
     * that e.  Present only for ConeVeronese2. */
    std::optional<Int> cone_bundle_degree;
};

SegreClassification segre_classify(const ConicRuledData& data, bool linearly_normal_sections);

/* For d > 3g - 3 the minimal degree is 3g - 2; it meets the Segre threshold
 * exactly when g >= 7 (3g - 2 >= 2g + 5). */
bool min_degree_meets_segre_threshold(const Int& g);

}  // namespace adjsurf
