#include "isotower/builtin_maps.hpp"

#include <cmath>
#include <quadmath.h>

namespace isotower::facial {

namespace detail {

inline double exp_(double x) { return std::exp(x); }
inline double log_(double x) { return std::log(x); }
inline __float128 exp_(__float128 x) { return expq(x); }
inline __float128 log_(__float128 x) { return logq(x); }

// t -> log(8 e^t / (1 - 6 e^t)) below -log 6, oo (here: +inf) above.
template <typename Real>
Real f_double_prime_core(Real t) {
    Real et = exp_(t);
    Real denom = Real(1) - Real(6) * et;
    if (denom <= Real(0)) return Real(HUGE_VAL);
    return log_(Real(8) * et / denom);
}

// t -> log(e^t / (8 + 6 e^t)), the embedding whose collapse is f''.
template <typename Real>
Real f_triple_prime_core(Real t) {
    return t - log_(Real(8) + Real(6) * exp_(t));
}

} // namespace detail

double f_double_prime(double t) { return detail::f_double_prime_core(t); }
double f_triple_prime(double t) { return detail::f_triple_prime_core(t); }

double collapse_roundtrip_error(double t) {
    __float128 u = detail::f_triple_prime_core(static_cast<__float128>(t));
    __float128 back = detail::f_double_prime_core(u);
    return static_cast<double>(fabsq(back - static_cast<__float128>(t)));
}

namespace {

FacialMap identity_map() {
    return FacialMap(0, TupleKind::plain,
        [](const EigenTuple& p) -> FacialImage { return {p, std::nullopt}; }, "identity");
}

FacialMap shift_map(double c) {
    return FacialMap(0, TupleKind::plain,
        [c](const EigenTuple& p) -> FacialImage {
            std::vector<double> v = p.entries();
            for (auto& x : v) x += c;
            return {EigenTuple(std::move(v), TupleKind::plain), std::nullopt};
        },
        "shift:" + std::to_string(c));
}

FacialMap entrywise_nonneg(double (*fn)(double), const std::string& label) {
    return FacialMap(0, TupleKind::nonneg,
        [fn](const EigenTuple& p) -> FacialImage {
            std::vector<double> v = p.entries();
            for (auto& x : v) x = fn(x);
            return {EigenTuple(std::move(v), TupleKind::nonneg), std::nullopt};
        },
        label);
}

FacialMap bottom_collapse_map() {
    return FacialMap(0, TupleKind::plain,
        [](const EigenTuple& p) -> FacialImage {
            std::vector<double> v(static_cast<size_t>(p.dim()), p.front());
            return {EigenTuple(std::move(v), TupleKind::plain), std::nullopt};
        },
        "bottom-collapse");
}

FacialMap constant_infinity_map() {
    return FacialMap(0, TupleKind::plain,
        [](const EigenTuple&) -> FacialImage {
            return {EigenTuple::infinity(), std::nullopt};
        },
        "constant-infinity");
}

} // namespace

std::optional<BuiltinMap> builtin_map(const std::string& id) {
    if (id == "identity") return BuiltinMap(identity_map());
    if (id.rfind("shift:", 0) == 0) {
        try {
            return BuiltinMap(shift_map(std::stod(id.substr(6))));
        } catch (const std::exception&) {
            return std::nullopt;
        }
    }
    if (id == "doubling")
        return BuiltinMap(entrywise_nonneg([](double x) { return 2.0 * x; }, "doubling"));
    if (id == "squaring")
        return BuiltinMap(entrywise_nonneg([](double x) { return x * x; }, "squaring"));
    if (id == "bottom-collapse") return BuiltinMap(bottom_collapse_map());
    if (id == "constant-infinity") return BuiltinMap(constant_infinity_map());

    if (id == "negate")
        return BuiltinMap(CircleMap(
            [](ExtReal x) { return x.at_infinity ? x : ExtReal::of(-x.value); }, "negate"));
    if (id == "circle-identity")
        return BuiltinMap(CircleMap([](ExtReal x) { return x; }, "circle-identity"));
    if (id == "f-double-prime")
        return BuiltinMap(CircleMap(
            [](ExtReal x) {
                if (x.at_infinity) return ExtReal::infinity();
                return ExtReal::of(f_double_prime(x.value));
            },
            "f-double-prime"));
    if (id == "f-triple-prime")
        return BuiltinMap(CircleMap(
            [](ExtReal x) {
                if (x.at_infinity) return ExtReal::infinity();
                return ExtReal::of(f_triple_prime(x.value));
            },
            "f-triple-prime"));

    if (id == "g-triple-prime")
        return BuiltinMap(SphereMap(
            [](PlanePoint p) {
                if (p.at_infinity) return PlanePoint::infinity();
                return PlanePoint::of(p.t - std::exp(-p.s), -p.s);
            },
            "g-triple-prime"));
    if (id == "sphere-identity")
        return BuiltinMap(SphereMap([](PlanePoint p) { return p; }, "sphere-identity"));
    if (id == "sphere-reflect")
        return BuiltinMap(SphereMap(
            [](PlanePoint p) {
                if (p.at_infinity) return PlanePoint::infinity();
                return PlanePoint::of(-p.s, p.t);
            },
            "sphere-reflect"));
    return std::nullopt;
}

} // namespace isotower::facial
