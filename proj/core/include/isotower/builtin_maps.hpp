#pragma once

#include <optional>
#include <string>
#include <variant>

#include "isotower/degree.hpp"
#include "isotower/facial_map.hpp"

namespace isotower::facial {

using BuiltinMap = std::variant<FacialMap, CircleMap, SphereMap>;

// Resolves builtin map ids used by the CLI and the self-test suites:
//   "identity"          facial identity (any D(d))
//   "shift:<c>"         t_i -> t_i + c on D(d)
//   "doubling"          t_i -> 2 t_i on D_+(d)
//   "squaring"          t_i -> t_i^2 on D_+(d)
//   "bottom-collapse"   t -> (t_0, ..., t_0) on D(d)
//   "constant-infinity" everything to the basepoint
//   "negate"            circle map t -> -t
//   "f-double-prime"    circle map t -> log(8 e^t / (1 - 6 e^t)) for t < -log 6, else oo
//   "f-triple-prime"    circle map t -> log(e^t / (8 + 6 e^t))
//   "g-triple-prime"    sphere map (s,t) -> (t - e^{-s}, -s)
//   "sphere-identity", "sphere-reflect"
std::optional<BuiltinMap> builtin_map(const std::string& id);

// The two maps of the top-of-tower homotopy, with a scalar-templated core.
// The double versions feed degree computations.
double f_double_prime(double t);
double f_triple_prime(double t);

// |f''(f'''(t)) - t| with the composite evaluated in quad precision. A double
// cannot carry f'''(t)'s distance to -log 6 once t is past ~16, so checking the
// collapse identity at 1e-9 over [-30,30] needs the wider mantissa.
double collapse_roundtrip_error(double t);

} // namespace isotower::facial
