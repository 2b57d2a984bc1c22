#include "doctest.h"

#include <cmath>
#include <complex>

#include "isotower/builtin_maps.hpp"
#include "isotower/degree.hpp"

using namespace isotower;
using facial::CircleMap;
using facial::SphereMap;

namespace {

CircleMap circle(const char* id) {
    return std::get<CircleMap>(*facial::builtin_map(id));
}

SphereMap sphere(const char* id) {
    return std::get<SphereMap>(*facial::builtin_map(id));
}

} // namespace

TEST_CASE("circle degrees of the named maps") {
    CHECK(facial::circle_degree(circle("circle-identity")) == 1);
    CHECK(facial::circle_degree(circle("negate")) == -1);
    CHECK(facial::circle_degree(circle("f-double-prime")) == 1);
    CircleMap constant([](ExtReal) { return ExtReal::of(3.0); }, "const");
    CHECK(facial::circle_degree(constant) == 0);
    CircleMap to_inf([](ExtReal) { return ExtReal::infinity(); }, "const-inf");
    CHECK(facial::circle_degree(to_inf) == 0);
}

TEST_CASE("circle degree rejects discontinuous maps") {
    // a jump of nearly pi in angle coordinates never refines below pi/2
    CircleMap jump(
        [](ExtReal x) {
            if (x.at_infinity) return ExtReal::infinity();
            return ExtReal::of(x.value < 0.0 ? x.value : x.value + 1e9);
        },
        "jump");
    CHECK_THROWS_AS(facial::circle_degree(jump), isotower::degree_error);
}

TEST_CASE("collapse map composed with its embedding") {
    // f'' o f''' = id, evaluated through the quad-precision core
    for (double t : {-30.0, -7.5, 0.0, 3.25, 16.0, 30.0})
        CHECK(facial::collapse_roundtrip_error(t) < 1e-9);
    // the finite branch boundary of f''
    CHECK(facial::f_double_prime(-std::log(6.0) - 1e-3) < 1e4);
    CHECK(std::isinf(facial::f_double_prime(0.0)));
    CHECK(facial::f_triple_prime(0.0) == doctest::Approx(std::log(1.0 / 14.0)));
}

TEST_CASE("chart-lift square commutes on degree data") {
    // the two composites around the level-k chart lift differ by the facial
    // maps whose sphere-level restrictions are the identity and
    // (s,t) -> (t - e^{-s}, -s); equal degrees certify the homotopy
    CHECK(facial::sphere_degree(sphere("sphere-identity")) ==
          facial::sphere_degree(sphere("g-triple-prime")));
}

TEST_CASE("sphere degrees") {
    CHECK(facial::sphere_degree(sphere("sphere-identity")) == 1);
    CHECK(facial::sphere_degree(sphere("sphere-reflect")) == -1);
    CHECK(facial::sphere_degree(sphere("g-triple-prime")) == 1);
    SphereMap constant([](PlanePoint) { return PlanePoint::of(0.3, -0.2); }, "const");
    CHECK(facial::sphere_degree(constant) == 0);
    // a double cover: z -> z^2 in complex coordinates
    SphereMap squaring(
        [](PlanePoint p) {
            if (p.at_infinity) return PlanePoint::infinity();
            std::complex<double> z(p.s, p.t);
            z *= z;
            return PlanePoint::of(z.real(), z.imag());
        },
        "z^2");
    CHECK(facial::sphere_degree(squaring) == 2);
}
