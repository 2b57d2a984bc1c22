#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "isotower/eigen_tuple.hpp"

namespace isotower::facial {

// Image of a facial map. Maps with a suspension factor in the target carry an
// extra real coordinate next to the tuple; a basepoint tuple means the whole
// value is the basepoint.
struct FacialImage {
    EigenTuple tuple;
    std::optional<double> suspension;

    bool is_basepoint() const { return tuple.is_infinity(); }
};

// A based face-preserving self-map of D(d) or D_+(d) (possibly with a
// suspension factor in the target). dim_in == 0 accepts tuples of any length.
class FacialMap {
public:
    using Fn = std::function<FacialImage(const EigenTuple&)>;

    FacialMap() = default;
    FacialMap(int dim_in, TupleKind domain, Fn fn, std::string label);

    FacialImage apply(const EigenTuple& p) const;
    // Convenience for maps without a suspension factor.
    EigenTuple operator()(const EigenTuple& p) const;

    int dim_in() const { return dim_in_; }
    TupleKind domain_kind() const { return domain_; }
    const std::string& label() const { return label_; }

private:
    int dim_in_ = 0;
    TupleKind domain_ = TupleKind::plain;
    Fn fn_;
    std::string label_;
};

// A facial map on a smash product D(a) ^ D_+(b), landing in D(a+b). Facial in
// the extended sense: the composite with the canonical homeomorphism
// (s, t) -> (s, s_top + t) is facial.
class SmashFacialMap {
public:
    using Fn = std::function<EigenTuple(const EigenTuple&, const EigenTuple&)>;

    SmashFacialMap() = default;
    SmashFacialMap(int dim_plain, int dim_nonneg, Fn fn, std::string label);

    // Either factor at the basepoint collapses the smash value to it.
    EigenTuple apply(const EigenTuple& s, const EigenTuple& t) const;

    int dim_plain() const { return dim_plain_; }
    int dim_nonneg() const { return dim_nonneg_; }
    const std::string& label() const { return label_; }

private:
    int dim_plain_ = 0;
    int dim_nonneg_ = 0;
    Fn fn_;
    std::string label_;
};

// One failed face check found by verify_facial.
struct FacialViolation {
    int face;               // face index, -1 for the D_0 face, -2 for the basepoint check
    EigenTuple point;
    EigenTuple image;
    double gap;             // |s_i - s_{i+1}| (or |s_0|) at the image
};

struct FacialReport {
    long long samples = 0;
    std::vector<FacialViolation> violations;

    bool ok() const { return violations.empty(); }
};

// Statistical check of the facial property: draws random points on every face
// of the map's domain (F_i ties, plus D_0 for nonneg domains) and tests that
// images stay on the same face. Also checks that the basepoint is fixed.
FacialReport verify_facial(const FacialMap& f, int dim, long long samples,
                           unsigned long long seed, double tol = 0.0);

// The hat construction: extends a facial self-map of D_+(2) to D_+(d) by
// interpolating between the images of the extreme coordinates. Writing
// f(t0,t1) = (g, g+h), the i-th output is g(t0,t_{d-1}) +
// (t_i-t0)/(t_{d-1}-t0) * h(t0,t_{d-1}) when t0 < t_{d-1}, and g alone on the
// degenerate diagonal.
FacialMap hat(const FacialMap& f, int d);

} // namespace isotower::facial
