#include "isotower/facial.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace isotower::facial {

namespace {

const std::complex<double> kI(0.0, 1.0);

} // namespace

std::complex<double> conformal(const EigenTuple& p) {
    if (p.is_infinity()) return {-1.0, 0.0};
    if (p.dim() != 2) throw std::invalid_argument("conformal: expected a point of D_+(2)");
    if (p.kind() == TupleKind::plain && p.front() < 0.0)
        throw std::invalid_argument("conformal: point outside D_+(2)");
    std::complex<double> v(p[1], p[0]);
    std::complex<double> v2 = v * v;
    return (kI - v2) / (kI + v2);
}

EigenTuple conformal_inv(std::complex<double> z) {
    const double tol = 1e-9;
    if (std::abs(z + 1.0) <= tol) return EigenTuple::infinity(TupleKind::nonneg);
    if (std::abs(z) > 1.0 + tol || z.imag() < -tol)
        throw std::invalid_argument("conformal_inv: point outside the closed upper half-disc");
    std::complex<double> v = std::sqrt(kI * (1.0 - z) / (1.0 + z));
    // branch: Re(v) >= Im(v) >= 0 picks the ordered representative of D_+(2)
    double a = std::abs(v.real());
    double b = std::abs(v.imag());
    double t1 = std::max(a, b);
    double t0 = std::min(a, b);
    return EigenTuple({t0, t1}, TupleKind::nonneg);
}

NdrValue<std::complex<double>> ndr_halfdisc(std::complex<double> z, double t) {
    const double tol = 1e-9;
    double r = std::abs(z);
    if (r > 1.0 + tol || z.imag() < -tol)
        throw std::invalid_argument("ndr_halfdisc: point outside the upper half-disc");
    if (t < 0.0 || t > 1.0) throw std::invalid_argument("ndr_halfdisc: t outside [0,1]");
    double u = std::clamp(std::min(1.0, 2.0 - 2.0 * r), 0.0, 1.0);
    // min(1,(2-t)r) e^{i theta}, written to avoid extracting theta at r = 0
    std::complex<double> h = (r == 0.0) ? std::complex<double>(0.0, 0.0)
                                        : z * (std::min(1.0, (2.0 - t) * r) / r);
    return {u, h};
}

double dplus2_u(double t0, double t1) {
    std::complex<double> z = conformal(EigenTuple({t0, t1}, TupleKind::nonneg));
    return std::clamp(std::min(1.0, 2.0 - 2.0 * std::abs(z)), 0.0, 1.0);
}

NdrValue<EigenTuple> ndr_dplus2(const EigenTuple& p, double t) {
    if (p.is_infinity()) {
        // phi(oo) = -1 lies on the semicircle, which the deformation fixes
        return {0.0, EigenTuple::infinity(TupleKind::nonneg)};
    }
    auto z = conformal(p);
    auto hv = ndr_halfdisc(z, t);
    EigenTuple back = conformal_inv(hv.h);
    // when the half-disc deformation clamps onto the circle the image lies in
    // D_0 exactly; pinning t0 avoids losing half the precision in the square
    // root of the inverse map
    if ((2.0 - t) * std::abs(z) >= 1.0 && !back.is_infinity())
        back = EigenTuple({0.0, back[1]}, TupleKind::nonneg);
    return {hv.u, back};
}

FacialMap dplus2_deformation(double t) {
    if (t < 0.0 || t > 1.0) throw std::invalid_argument("dplus2_deformation: t outside [0,1]");
    return FacialMap(2, TupleKind::nonneg,
        [t](const EigenTuple& p) -> FacialImage {
            return {ndr_dplus2(p, t).h, std::nullopt};
        },
        "h'_" + std::to_string(t));
}

CircleMap diagonal_restriction(const FacialMap& f, int dim) {
    if (dim < 1) throw std::invalid_argument("diagonal_restriction: dim must be >= 1");
    return CircleMap(
        [f, dim](ExtReal x) -> ExtReal {
            if (x.at_infinity) {
                FacialImage img = f.apply(EigenTuple::infinity(f.domain_kind()));
                return img.is_basepoint() ? ExtReal::infinity() : ExtReal::of(img.tuple.front());
            }
            std::vector<double> v(static_cast<size_t>(dim), x.value);
            FacialImage img = f.apply(EigenTuple(std::move(v), f.domain_kind()));
            if (img.is_basepoint()) return ExtReal::infinity();
            return ExtReal::of(img.tuple.front());
        },
        f.label() + "|diag");
}

bool facially_homotopic(const FacialMap& f, const FacialMap& g, int dim, int samples) {
    int df = circle_degree(diagonal_restriction(f, dim), samples);
    int dg = circle_degree(diagonal_restriction(g, dim), samples);
    return df == dg;
}

} // namespace isotower::facial
