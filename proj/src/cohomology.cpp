#include "adjsurf/cohomology.hpp"

#include <stdexcept>

namespace adjsurf {

H0H1 h0_h1_curve(const CurveLineBundle& bundle) {
    const Int& q = bundle.genus;
    const Int& deg = bundle.degree;
    if (q < 0) throw std::invalid_argument("h0_h1_curve: genus must be >= 0");

    H0H1 forced{0, 0};
    bool have_forced = true;
    if (deg > 2 * q - 2) {
        forced = {deg - q + 1, 0};
    } else if (deg < 0) {
        forced = {0, -deg + q - 1};
    } else if (deg == 0) {
        forced = bundle.zero_degree_kind == ZeroDegreeKind::Trivial ? H0H1{1, q}
                                                                    : H0H1{0, q - 1};
    } else {
        have_forced = false;  // 1 <= deg <= 2q-2, only possible for q >= 2
    }

    if (have_forced) {
        if (bundle.speciality_override && *bundle.speciality_override != forced.h1)
            throw std::invalid_argument(
                "h0_h1_curve: speciality override contradicts the forced value h1 = " +
                forced.h1.str());
        return forced;
    }

    if (!bundle.speciality_override)
        throw GeneralityRequired(
            "h0_h1_curve: degree " + deg.str() + " lies in the special range [1, " +
            Int(2 * q - 2).str() + "]; assert h^1 via speciality_override");
    const Int h1 = *bundle.speciality_override;
    if (h1 < 0) throw std::invalid_argument("h0_h1_curve: speciality override must be >= 0");
    const Int h0 = deg - q + 1 + h1;
    if (h0 < 0)
        throw std::invalid_argument("h0_h1_curve: override gives negative h^0 = " + h0.str());
    return {h0, h1};
}

H0H1 h0_h1_symk(const DecomposableRuledSurface& surface, const Int& k) {
    if (k < 0) throw std::invalid_argument("h0_h1_symk: k must be >= 0");
    if (surface.twist.genus != surface.base_genus)
        throw std::invalid_argument("h0_h1_symk: twist genus must match the base genus");
    H0H1 total{0, 0};
    for (Int i = 0; i <= k; ++i) {
        CurveLineBundle summand{surface.base_genus, surface.twist.degree - i * surface.e,
                                surface.zero_composite, std::nullopt};
        if (i == 0) {
            summand.zero_degree_kind = surface.twist.zero_degree_kind;
            summand.speciality_override = surface.twist.speciality_override;
        }
        const H0H1 part = h0_h1_curve(summand);
        total.h0 += part.h0;
        total.h1 += part.h1;
    }
    return total;
}

MuConeInvariants mu_cone_invariants(const Int& q, const Int& e, const Int& mu) {
    if (q < 1) throw std::invalid_argument("mu_cone_invariants: q must be >= 1");
    if (mu < 2) throw std::invalid_argument("mu_cone_invariants: mu must be >= 2");
    if (e <= 2 * q - 2)
        throw std::invalid_argument("mu_cone_invariants: needs e > 2q - 2 (got e = " + e.str() +
                                    ", q = " + q.str() + ")");
    MuConeInvariants inv;
    inv.d = e * mu * mu;
    const Int two_g_minus_2 = mu * (2 * (q - 1) + (mu - 1) * e);
    if (two_g_minus_2 % 2 != 0)
        throw std::logic_error("mu_cone_invariants: 2g - 2 came out odd");  // unreachable
    inv.g = two_g_minus_2 / 2 + 1;
    inv.h0_surface = 1 + mu * (mu + 1) / 2 * e + mu * (1 - q);
    return inv;
}

bool check_linear_normality_mu_cone(const Int& q, const Int& e, const Int& mu) {
    const MuConeInvariants inv = mu_cone_invariants(q, e, mu);
    // The restriction has degree d = mu^2 e > 2g - 2, so it is non-special.
    const Int h0_restriction = mu * mu * e - inv.g + 1;
    return h0_restriction == inv.h0_surface - 1;
}

}  // namespace adjsurf
