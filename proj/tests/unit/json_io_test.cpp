#include "doctest.h"

#include "isotower/json_io.hpp"
#include "isotower/sampling.hpp"

using namespace isotower;
using io::json;
using opcalc::Matrix;

TEST_CASE("matrix json roundtrip") {
    sampling::Rng rng(41);
    for (int n = 0; n < 20; ++n) {
        Matrix m = sampling::gaussian_matrix(rng, 1 + static_cast<int>(rng() % 4),
                                             1 + static_cast<int>(rng() % 4));
        Matrix back = io::matrix_from_json(io::matrix_to_json(m));
        CHECK((m - back).cwiseAbs().maxCoeff() == 0.0);
    }
    // plain numbers are accepted as real entries
    Matrix r = io::matrix_from_json(json::parse("[[1, 2],[3, 4]]"));
    CHECK(r(1, 1).real() == 4.0);
    CHECK_THROWS_AS(io::matrix_from_json(json::parse("[[\"a\"]]")), io::io_error);
    CHECK_THROWS_AS(io::matrix_from_json(json::parse("[[1],[2,3]]")), io::io_error);
}

TEST_CASE("tower and thom point roundtrips") {
    sampling::Rng rng(42);
    tower::TowerPoint p = sampling::random_tower_point(rng, 3, 5, 2);
    tower::TowerPoint back = io::tower_point_from_json(io::tower_point_to_json(p));
    CHECK(back.level == p.level);
    CHECK((back.alpha.matrix() - p.alpha.matrix()).cwiseAbs().maxCoeff() == 0.0);
    CHECK((back.theta.matrix() - p.theta.matrix()).cwiseAbs().maxCoeff() == 0.0);

    json base = io::tower_point_to_json(tower::TowerPoint::base(2));
    CHECK(base["theta"] == "basepoint");
    CHECK(io::tower_point_from_json(base).basepoint);

    tower::ThomPoint q = sampling::random_thom_point(rng, tower::ThomKind::Z, 3, 5, 2);
    q.suspension = -1.25;
    tower::ThomPoint qb = io::thom_point_from_json(io::thom_point_to_json(q));
    CHECK(qb.kind == q.kind);
    CHECK(qb.suspension == q.suspension);
    CHECK((qb.gamma.matrix() - q.gamma.matrix()).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(io::thom_point_from_json(json("basepoint")).basepoint);
    CHECK(io::thom_point_from_json(io::thom_point_to_json(
                                       tower::ThomPoint::base(tower::ThomKind::J)))
              .basepoint);
}

TEST_CASE("group parsing rejects anything non-abelian") {
    auto g = io::group_from_json(json::parse(R"({"cyclic": [2, 3], "torus_rank": 1})"));
    CHECK(g.factors() == 3);
    CHECK_THROWS_WITH_AS(io::group_from_json(json::parse(R"({"weyl_group": "S3"})")),
                         doctest::Contains("only abelian groups"), io::io_error);
    CHECK_THROWS_AS(io::group_from_json(json::parse(R"({"cyclic": [0]})")), io::io_error);
    CHECK_THROWS_AS(io::group_from_json(json::parse(R"({"torus_rank": -1})")), io::io_error);
}

TEST_CASE("representation parsing") {
    auto g = io::group_from_json(json::parse(R"({"cyclic": [4], "torus_rank": 0})"));
    auto v = io::representation_from_json(g, json::parse("[[0], [5]]"));
    CHECK(v.dim() == 2);
    CHECK(v.characters[1] == kresidue::Character{1});  // reduced mod 4
    CHECK_THROWS_AS(io::representation_from_json(g, json::parse("[[0, 1]]")), io::io_error);
}

TEST_CASE("verdict json is byte-stable") {
    kresidue::AbelianGroupSpec c2{{2}, 0};
    kresidue::Representation t{c2, {{0}}};
    kresidue::Representation s{c2, {{1}}};
    auto v = kresidue::obstruction_check(t, s);
    std::string a = io::verdict_to_json(v).dump(2);
    std::string b = io::verdict_to_json(kresidue::obstruction_check(t, s)).dump(2);
    CHECK(a == b);
    CHECK(io::verdict_to_json(v)["residues_pretty"][0] == "1 - x");
}
