#pragma once

#include <complex>

#include "isotower/degree.hpp"
#include "isotower/eigen_tuple.hpp"
#include "isotower/facial_map.hpp"

namespace isotower::facial {

// The conformal identification of (D_+(2), D_0(2)) with the closed upper
// half-disc and its semicircle: phi(t0,t1) = (i-(t1+i t0)^2)/(i+(t1+i t0)^2),
// basepoint -> -1.
std::complex<double> conformal(const EigenTuple& p);

// Inverse: solves v^2 = i(1-z)/(1+z), with the branch fixed so that
// Re(v) >= Im(v) >= 0, and returns (Im v, Re v). z = -1 gives the basepoint.
EigenTuple conformal_inv(std::complex<double> z);

// Deformation data (u, h_t) of an NDR pair evaluated at one point.
template <typename Point>
struct NdrValue {
    double u;
    Point h;
};

// (upper half-disc, upper semicircle): u = min(1, 2-2r), h_t = min(1,(2-t)r)e^{i theta}.
NdrValue<std::complex<double>> ndr_halfdisc(std::complex<double> z, double t);

// (D_+(2), D_0(2)) carried through the conformal map.
NdrValue<EigenTuple> ndr_dplus2(const EigenTuple& p, double t);

// The deformation h'_t of the (D_+(2), D_0(2)) pair as a facial map, ready for
// the hat construction.
FacialMap dplus2_deformation(double t);

// u'(t0,t1): the NDR function of the (D_+(2), D_0(2)) pair. Used both by
// ndr_dplus2 and by the hom-level pair in opcalc.
double dplus2_u(double t0, double t1);

// Restriction of a facial self-map of D(d) to the diagonal circle
// {(t,...,t)} u {oo}.
CircleMap diagonal_restriction(const FacialMap& f, int dim);

// Two facial self-maps of D(d) are facially homotopic iff their diagonal
// restrictions have the same degree.
bool facially_homotopic(const FacialMap& f, const FacialMap& g, int dim, int samples = 512);

} // namespace isotower::facial
