#pragma once

#include <functional>
#include <string>

#include "isotower/ext_real.hpp"

namespace isotower::facial {

// A self-map of the compactified line R u {oo} (a circle).
class CircleMap {
public:
    using Fn = std::function<ExtReal(ExtReal)>;

    CircleMap() = default;
    CircleMap(Fn fn, std::string label) : fn_(std::move(fn)), label_(std::move(label)) {}

    ExtReal operator()(ExtReal x) const { return fn_(x); }
    const std::string& label() const { return label_; }
    bool valid() const { return static_cast<bool>(fn_); }

private:
    Fn fn_;
    std::string label_;
};

// A based self-map of the compactified plane R^2 u {oo} (a 2-sphere).
class SphereMap {
public:
    using Fn = std::function<PlanePoint(PlanePoint)>;

    SphereMap() = default;
    SphereMap(Fn fn, std::string label) : fn_(std::move(fn)), label_(std::move(label)) {}

    PlanePoint operator()(PlanePoint x) const { return fn_(x); }
    const std::string& label() const { return label_; }
    bool valid() const { return static_cast<bool>(fn_); }

private:
    Fn fn_;
    std::string label_;
};

// Winding number of a circle self-map, computed in the angle coordinate
// theta = 2*arctan(t) (oo -> pi) by unwrapping sampled increments. Intervals
// whose angle step reaches pi/2 are bisected; evaluation is capped at 2^20
// points, after which a degree_error is raised.
int circle_degree(const CircleMap& m, int samples = 512);

// Degree of a based self-map of the compactified plane. The sphere is
// triangulated through stereographic coordinates, each image triangle is
// tested for covering a random target value, and signed coverings are summed.
// Targets that are not regular at this grid are re-drawn up to three times.
int sphere_degree(const SphereMap& m, int grid = 192, unsigned long long seed = 0x5ebd1a5ull);

} // namespace isotower::facial
