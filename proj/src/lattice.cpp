#include "adjsurf/lattice.hpp"

#include <stdexcept>

namespace adjsurf {

const char* to_string(ModelKind kind) {
    switch (kind) {
        case ModelKind::ProjectivePlane: return "projective_plane";
        case ModelKind::Hirzebruch: return "hirzebruch";
        case ModelKind::BlowupOfPlane: return "blowup_of_plane";
        default: return "numerically_ruled";
    }
}

SurfaceModel SurfaceModel::projective_plane() {
    return SurfaceModel{ModelKind::ProjectivePlane, 0, 0, 0, false};
}

SurfaceModel SurfaceModel::hirzebruch(Int e) {
    if (e < 0) throw std::invalid_argument("hirzebruch: e must be >= 0");
    return SurfaceModel{ModelKind::Hirzebruch, std::move(e), 0, 0, false};
}

SurfaceModel SurfaceModel::blowup_of_plane(Int r, bool curvilinear) {
    if (r < 0) throw std::invalid_argument("blowup_of_plane: r must be >= 0");
    return SurfaceModel{ModelKind::BlowupOfPlane, 0, std::move(r), 0, curvilinear};
}

SurfaceModel SurfaceModel::numerically_ruled(Int q, Int e) {
    if (q < 1) throw std::invalid_argument("numerically_ruled: q must be >= 1");
    return SurfaceModel{ModelKind::NumericallyRuled, std::move(e), 0, std::move(q), false};
}

std::size_t SurfaceModel::rank() const {
    switch (kind) {
        case ModelKind::ProjectivePlane: return 1;
        case ModelKind::Hirzebruch:
        case ModelKind::NumericallyRuled: return 2;
        default: return 1 + static_cast<std::size_t>(r);
    }
}

bool SurfaceModel::operator==(const SurfaceModel& other) const {
    if (kind != other.kind) return false;
    switch (kind) {
        case ModelKind::ProjectivePlane: return true;
        case ModelKind::Hirzebruch: return e == other.e;
        case ModelKind::BlowupOfPlane:
            return r == other.r && curvilinear == other.curvilinear;
        default: return q == other.q && e == other.e;
    }
}

DivisorClass::DivisorClass(SurfaceModel m, std::vector<Int> c)
    : model(std::move(m)), coeffs(std::move(c)) {
    if (coeffs.size() != model.rank())
        throw std::invalid_argument("divisor class: coefficient count does not match lattice rank");
}

DivisorClass DivisorClass::operator+(const DivisorClass& other) const {
    if (!(model == other.model)) throw ModelMismatch("divisor sum across different models");
    std::vector<Int> c(coeffs);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += other.coeffs[i];
    return DivisorClass(model, std::move(c));
}

DivisorClass DivisorClass::operator-(const DivisorClass& other) const {
    if (!(model == other.model)) throw ModelMismatch("divisor difference across different models");
    std::vector<Int> c(coeffs);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] -= other.coeffs[i];
    return DivisorClass(model, std::move(c));
}

DivisorClass DivisorClass::operator*(const Int& scalar) const {
    std::vector<Int> c(coeffs);
    for (auto& x : c) x *= scalar;
    return DivisorClass(model, std::move(c));
}

bool DivisorClass::operator==(const DivisorClass& other) const {
    return model == other.model && coeffs == other.coeffs;
}

std::vector<std::vector<Int>> intersection_form(const SurfaceModel& model) {
    const std::size_t n = model.rank();
    std::vector<std::vector<Int>> g(n, std::vector<Int>(n, 0));
    switch (model.kind) {
        case ModelKind::ProjectivePlane:
            g[0][0] = 1;
            break;
        case ModelKind::Hirzebruch:
        case ModelKind::NumericallyRuled:
            g[0][0] = -model.e;
            g[0][1] = g[1][0] = 1;
            break;
        default:  // BlowupOfPlane: diag(1, -1, ..., -1)
            g[0][0] = 1;
            for (std::size_t i = 1; i < n; ++i) g[i][i] = -1;
            break;
    }
    return g;
}

Int intersect(const DivisorClass& d1, const DivisorClass& d2) {
    if (!(d1.model == d2.model))
        throw ModelMismatch("intersection product across different models");
    switch (d1.model.kind) {
        case ModelKind::ProjectivePlane:
            return d1.coeffs[0] * d2.coeffs[0];
        case ModelKind::Hirzebruch:
        case ModelKind::NumericallyRuled:
            // (aE + bF).(a'E + b'F) = -e a a' + a b' + a' b
            return -d1.model.e * d1.coeffs[0] * d2.coeffs[0] + d1.coeffs[0] * d2.coeffs[1] +
                   d1.coeffs[1] * d2.coeffs[0];
        default: {
            Int acc = d1.coeffs[0] * d2.coeffs[0];
            for (std::size_t i = 1; i < d1.coeffs.size(); ++i) acc -= d1.coeffs[i] * d2.coeffs[i];
            return acc;
        }
    }
}

DivisorClass canonical_class(const SurfaceModel& model) {
    switch (model.kind) {
        case ModelKind::ProjectivePlane:
            return DivisorClass(model, {-3});
        case ModelKind::Hirzebruch:
            return DivisorClass(model, {-2, -(model.e + 2)});
        case ModelKind::NumericallyRuled:
            return DivisorClass(model, {-2, 2 * model.q - 2 - model.e});
        default: {
            std::vector<Int> c(model.rank(), 1);
            c[0] = -3;
            return DivisorClass(model, std::move(c));
        }
    }
}

namespace {

Int adjunction_numerator(const DivisorClass& d, const char* who) {
    const Int d2 = intersect(d, d);
    const Int kd = intersect(canonical_class(d.model), d);
    const Int num = d2 + kd;
    if (num % 2 != 0)
        throw ParityViolation(std::string(who) + ": D^2 + K.D is odd, class cannot be a curve");
    return num;
}

}  // namespace

Int arithmetic_genus(const DivisorClass& d) {
    return 1 + adjunction_numerator(d, "arithmetic_genus") / 2;
}

Int euler_characteristic(const DivisorClass& d) {
    const Int d2 = intersect(d, d);
    const Int kd = intersect(canonical_class(d.model), d);
    const Int num = d2 - kd;
    if (num % 2 != 0)
        throw ParityViolation("euler_characteristic: D^2 - K.D is odd");
    return d.model.chi_structure_sheaf() + num / 2;
}

Ternary is_nef(const DivisorClass& d) {
    switch (d.model.kind) {
        case ModelKind::ProjectivePlane:
            return d.coeffs[0] >= 0 ? Ternary::True : Ternary::False;
        case ModelKind::Hirzebruch:
        case ModelKind::NumericallyRuled: {
            if (d.model.kind == ModelKind::NumericallyRuled && d.model.e < 0)
                return Ternary::Unknown;  // nef cone not spanned by E, F
            // D.F = a >= 0 and D.E = b - a e >= 0
            const bool nef = d.coeffs[0] >= 0 && d.coeffs[1] >= d.coeffs[0] * d.model.e;
            return nef ? Ternary::True : Ternary::False;
        }
        default:
            return Ternary::Unknown;  // blow-up: position of the centres matters
    }
}

Ternary is_nef(const DivisorClass& d, std::span<const DivisorClass> test_curves) {
    if (d.model.kind != ModelKind::BlowupOfPlane) return is_nef(d);
    if (test_curves.empty()) return Ternary::Unknown;
    for (const auto& c : test_curves)
        if (intersect(d, c) < 0) return Ternary::False;
    // Passing the supplied tests is necessary, not sufficient.
    return Ternary::True;
}

}  // namespace adjsurf
