#include "isotower/json_io.hpp"

#include <fstream>

namespace isotower::io {

using facial::EigenTuple;
using facial::TupleKind;
using opcalc::HermitianOp;
using opcalc::LinOp;
using opcalc::Matrix;

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw io_error("parse error in '" + path + "': " + e.what());
    }
    return j;
}

json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            row.push_back(json::array({m(i, j).real(), m(i, j).imag()}));
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix matrix_from_json(const json& j) {
    if (!j.is_array() || j.empty())
        throw io_error("matrix: expected a non-empty array of rows");
    const size_t rows = j.size();
    if (!j[0].is_array()) throw io_error("matrix: rows must be arrays");
    const size_t cols = j[0].size();
    Matrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    for (size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols)
            throw io_error("matrix: ragged rows");
        for (size_t c = 0; c < cols; ++c) {
            const json& cell = j[i][c];
            double re = 0.0, im = 0.0;
            if (cell.is_number()) {
                re = cell.get<double>();
            } else if (cell.is_array() && cell.size() == 2 && cell[0].is_number() &&
                       cell[1].is_number()) {
                re = cell[0].get<double>();
                im = cell[1].get<double>();
            } else {
                throw io_error("matrix: entries must be numbers or [re, im] pairs");
            }
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(c)) = {re, im};
        }
    }
    return m;
}

json tuple_to_json(const EigenTuple& t) {
    if (t.is_infinity()) return json("infinity");
    return json(t.entries());
}

EigenTuple tuple_from_json(const json& j, TupleKind kind) {
    if (j.is_string() && j.get<std::string>() == "infinity") return EigenTuple::infinity(kind);
    if (!j.is_array()) throw io_error("tuple: expected an array or \"infinity\"");
    std::vector<double> v;
    for (const auto& x : j) {
        if (!x.is_number()) throw io_error("tuple: entries must be numbers");
        v.push_back(x.get<double>());
    }
    try {
        return EigenTuple(std::move(v), kind);
    } catch (const std::invalid_argument& e) {
        throw io_error(std::string("tuple: ") + e.what());
    }
}

json tower_point_to_json(const tower::TowerPoint& p) {
    json j;
    j["k"] = p.level;
    if (p.basepoint) {
        j["theta"] = "basepoint";
        return j;
    }
    j["alpha"] = matrix_to_json(p.alpha.matrix());
    j["theta"] = matrix_to_json(p.theta.matrix());
    return j;
}

tower::TowerPoint tower_point_from_json(const json& j) {
    if (j.is_string() && j.get<std::string>() == "basepoint") return tower::TowerPoint::base(0);
    if (!j.is_object()) throw io_error("tower point: expected an object");
    if (!j.contains("k") || !j["k"].is_number_integer())
        throw io_error("tower point: missing integer field \"k\"");
    int level = j["k"].get<int>();
    if (j.contains("theta") && j["theta"].is_string()) {
        if (j["theta"].get<std::string>() != "basepoint")
            throw io_error("tower point: theta must be a matrix or \"basepoint\"");
        return tower::TowerPoint::base(level);
    }
    if (!j.contains("alpha") || !j.contains("theta"))
        throw io_error("tower point: need \"alpha\" and \"theta\"");
    try {
        HermitianOp alpha(matrix_from_json(j["alpha"]));
        LinOp theta(matrix_from_json(j["theta"]));
        return tower::make_tower_point(level, std::move(alpha), std::move(theta));
    } catch (const std::exception& e) {
        throw io_error(std::string("tower point: ") + e.what());
    }
}

namespace {

std::string kind_name(tower::ThomKind k) {
    switch (k) {
        case tower::ThomKind::Z: return "Z";
        case tower::ThomKind::I: return "I";
        case tower::ThomKind::J: return "J";
    }
    return "?";
}

tower::ThomKind kind_from_name(const std::string& s) {
    if (s == "Z") return tower::ThomKind::Z;
    if (s == "I") return tower::ThomKind::I;
    if (s == "J") return tower::ThomKind::J;
    throw io_error("thom point: kind must be \"Z\", \"I\" or \"J\"");
}

} // namespace

json thom_point_to_json(const tower::ThomPoint& q) {
    json j;
    j["kind"] = kind_name(q.kind);
    if (q.basepoint) {
        j["basepoint"] = true;
        return j;
    }
    j["W"] = matrix_to_json(q.W.projector);
    j["gamma"] = matrix_to_json(q.gamma.matrix());
    j["psi"] = matrix_to_json(q.psi.matrix());
    if (q.suspension) j["suspension"] = *q.suspension;
    return j;
}

tower::ThomPoint thom_point_from_json(const json& j) {
    if (j.is_string() && j.get<std::string>() == "basepoint")
        return tower::ThomPoint::base(tower::ThomKind::Z);
    if (!j.is_object()) throw io_error("thom point: expected an object");
    tower::ThomKind kind = tower::ThomKind::Z;
    if (j.contains("kind")) kind = kind_from_name(j["kind"].get<std::string>());
    if (j.contains("basepoint") && j["basepoint"].get<bool>())
        return tower::ThomPoint::base(kind);
    for (const char* field : {"W", "gamma", "psi"})
        if (!j.contains(field))
            throw io_error(std::string("thom point: missing field \"") + field + "\"");
    try {
        tower::GrassPoint w = tower::grass_from_projector(matrix_from_json(j["W"]));
        LinOp gamma(matrix_from_json(j["gamma"]));
        HermitianOp psi(matrix_from_json(j["psi"]));
        std::optional<double> susp;
        if (j.contains("suspension")) susp = j["suspension"].get<double>();
        return tower::make_thom_point(kind, std::move(w), std::move(gamma), std::move(psi), susp);
    } catch (const io_error&) {
        throw;
    } catch (const std::exception& e) {
        throw io_error(std::string("thom point: ") + e.what());
    }
}

kresidue::AbelianGroupSpec group_from_json(const json& j) {
    if (!j.is_object()) throw io_error("group: expected an object");
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (it.key() != "cyclic" && it.key() != "torus_rank")
            throw io_error("group: unsupported field \"" + it.key() +
                           "\"; only abelian groups {\"cyclic\": [...], \"torus_rank\": r} "
                           "are supported");
    }
    kresidue::AbelianGroupSpec g;
    if (j.contains("cyclic")) {
        if (!j["cyclic"].is_array()) throw io_error("group: \"cyclic\" must be an array");
        for (const auto& n : j["cyclic"]) {
            if (!n.is_number_integer() || n.get<long long>() < 1)
                throw io_error("group: cyclic orders must be integers >= 1");
            g.cyclic.push_back(n.get<long long>());
        }
    }
    if (j.contains("torus_rank")) {
        if (!j["torus_rank"].is_number_integer() || j["torus_rank"].get<int>() < 0)
            throw io_error("group: \"torus_rank\" must be a nonnegative integer");
        g.torus_rank = j["torus_rank"].get<int>();
    }
    return g;
}

json group_to_json(const kresidue::AbelianGroupSpec& g) {
    return json{{"cyclic", g.cyclic}, {"torus_rank", g.torus_rank}};
}

kresidue::Representation representation_from_json(const kresidue::AbelianGroupSpec& g,
                                                  const json& j) {
    if (!j.is_array()) throw io_error("representation: expected an array of characters");
    kresidue::Representation v{g, {}};
    for (const auto& cj : j) {
        if (!cj.is_array()) throw io_error("representation: characters must be integer arrays");
        kresidue::Character c;
        for (const auto& e : cj) {
            if (!e.is_number_integer())
                throw io_error("representation: character exponents must be integers");
            c.push_back(e.get<long long>());
        }
        try {
            v.characters.push_back(kresidue::reduce_character(g, std::move(c)));
        } catch (const std::invalid_argument& e) {
            throw io_error(std::string("representation: ") + e.what());
        }
    }
    return v;
}

json representation_to_json(const kresidue::Representation& v) {
    json chars = json::array();
    for (const auto& c : v.characters) chars.push_back(c);
    return chars;
}

json rep_ring_elem_to_json(const kresidue::RepRingElem& e) {
    json terms = json::array();
    for (const auto& [c, coeff] : e.terms())
        terms.push_back(json{{"exponents", c}, {"coeff", coeff}});
    return terms;
}

json k_polynomial_to_json(const kresidue::KPolynomial& f) {
    json coeffs = json::array();
    for (int i = 0; i <= f.degree(); ++i) coeffs.push_back(rep_ring_elem_to_json(f.coeff(i)));
    return coeffs;
}

json verdict_to_json(const kresidue::ObstructionVerdict& v) {
    json j;
    j["f_v0"] = json{{"coefficients", k_polynomial_to_json(v.f_v0)}, {"pretty", v.f_v0.pretty()}};
    j["f_v1"] = json{{"coefficients", k_polynomial_to_json(v.f_v1)}, {"pretty", v.f_v1.pretty()}};
    j["divides"] = v.divides;
    json residues = json::array();
    json residues_pretty = json::array();
    for (const auto& r : v.residues) {
        residues.push_back(rep_ring_elem_to_json(r));
        residues_pretty.push_back(r.pretty());
    }
    j["residues"] = std::move(residues);
    j["residues_pretty"] = std::move(residues_pretty);
    j["subrepresentation"] = v.subrepresentation;
    return j;
}

} // namespace isotower::io
