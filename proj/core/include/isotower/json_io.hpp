#pragma once

#include <stdexcept>
#include <string>

#include "json.hpp"

#include "isotower/kresidue.hpp"
#include "isotower/tower.hpp"

namespace isotower::io {

using nlohmann::json;

class io_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

json load_json_file(const std::string& path);

// Matrices travel as arrays of rows with [re, im] entries.
json matrix_to_json(const opcalc::Matrix& m);
opcalc::Matrix matrix_from_json(const json& j);

// Tuples are arrays of reals, or the string "infinity" for the basepoint.
json tuple_to_json(const facial::EigenTuple& t);
facial::EigenTuple tuple_from_json(const json& j,
                                   facial::TupleKind kind = facial::TupleKind::plain);

// {"k": int, "alpha": matrix, "theta": matrix | "basepoint"}
json tower_point_to_json(const tower::TowerPoint& p);
tower::TowerPoint tower_point_from_json(const json& j);

// {"kind": "Z"|"I"|"J", "W": matrix, "gamma": matrix, "psi": matrix,
//  "suspension"?: real}; basepoints as {"kind": k, "basepoint": true}.
json thom_point_to_json(const tower::ThomPoint& q);
tower::ThomPoint thom_point_from_json(const json& j);

// {"cyclic": [n, ...], "torus_rank": r}. Anything else is rejected with a
// diagnostic: only finite-abelian x torus groups are supported.
kresidue::AbelianGroupSpec group_from_json(const json& j);
json group_to_json(const kresidue::AbelianGroupSpec& g);

// A representation is an array of characters (integer arrays).
kresidue::Representation representation_from_json(const kresidue::AbelianGroupSpec& g,
                                                  const json& j);
json representation_to_json(const kresidue::Representation& v);

// Term list [{"exponents": [...], "coeff": c}, ...].
json rep_ring_elem_to_json(const kresidue::RepRingElem& e);
// Array of term lists, index = power of z.
json k_polynomial_to_json(const kresidue::KPolynomial& f);

json verdict_to_json(const kresidue::ObstructionVerdict& v);

} // namespace isotower::io
