#include "doctest.h"

#include <cmath>

#include "isotower/builtin_maps.hpp"
#include "isotower/sampling.hpp"

using namespace isotower;
using facial::EigenTuple;
using facial::FacialMap;
using facial::TupleKind;
using opcalc::HermitianOp;
using opcalc::LinOp;
using opcalc::Matrix;

namespace {

double dev(const Matrix& a, const Matrix& b) {
    return (a - b).cwiseAbs().maxCoeff();
}

Matrix column2(double a, double b) {
    Matrix m(2, 1);
    m(0, 0) = a;
    m(1, 0) = b;
    return m;
}

} // namespace

TEST_CASE("hermitian validation and eig_sorted") {
    Matrix bad(2, 2);
    bad << 0.0, 1.0, 0.0, 0.0;
    CHECK_THROWS_AS(HermitianOp{bad}, std::invalid_argument);

    auto es = opcalc::eig_sorted(HermitianOp::diagonal({3.0, 1.0}));
    CHECK(es.values[0] == doctest::Approx(1.0));
    CHECK(es.values[1] == doctest::Approx(3.0));

    Matrix offdiag(2, 2);
    offdiag << 0.0, 1.0, 1.0, 0.0;
    auto es2 = opcalc::eig_sorted(HermitianOp(offdiag));
    CHECK(es2.values[0] == doctest::Approx(-1.0));
    CHECK(es2.values[1] == doctest::Approx(1.0));

    auto es3 = opcalc::eig_sorted(HermitianOp::zero(3));
    for (int i = 0; i < 3; ++i) CHECK(es3.values[i] == doctest::Approx(0.0));
}

TEST_CASE("synth") {
    LinOp id(Matrix::Identity(2, 2));
    CHECK(dev(opcalc::synth(id, EigenTuple({1.0, 2.0})).matrix(),
              HermitianOp::diagonal({1.0, 2.0}).matrix()) < 1e-14);

    Matrix swap(2, 2);
    swap << 0.0, 1.0, 1.0, 0.0;
    CHECK(dev(opcalc::synth(LinOp(swap), EigenTuple({1.0, 2.0})).matrix(),
              HermitianOp::diagonal({2.0, 1.0}).matrix()) < 1e-14);

    sampling::Rng rng(3);
    LinOp u(sampling::random_unitary(rng, 3));
    CHECK(dev(opcalc::synth(u, EigenTuple({0.7, 0.7, 0.7})).matrix(),
              0.7 * Matrix::Identity(3, 3)) < 1e-12);

    CHECK_THROWS_AS(opcalc::synth(LinOp(2.0 * Matrix::Identity(2, 2)), EigenTuple({1.0, 2.0})),
                    std::invalid_argument);
}

TEST_CASE("exp and log") {
    CHECK(dev(opcalc::op_exp(HermitianOp::zero(3)).matrix(), Matrix::Identity(3, 3)) < 1e-14);
    CHECK(dev(opcalc::op_log(HermitianOp::diagonal({1.0, std::exp(1.0)})).matrix(),
              HermitianOp::diagonal({0.0, 1.0}).matrix()) < 1e-14);
    CHECK_THROWS_AS(opcalc::op_log(HermitianOp::diagonal({-1.0, 2.0})), std::domain_error);
    CHECK_THROWS_AS(opcalc::op_log(HermitianOp::zero(2)), std::domain_error);

    sampling::Rng rng(4);
    for (int n = 0; n < 25; ++n) {
        HermitianOp a = sampling::random_hermitian(rng, 4);
        CHECK(dev(opcalc::op_log(opcalc::op_exp(a)).matrix(), a.matrix()) <
              1e-9 * (1.0 + a.matrix().norm()));
    }
}

TEST_CASE("polar data") {
    CHECK(opcalc::polar_rho(LinOp(3.0 * Matrix::Identity(1, 1))).matrix()(0, 0).real() ==
          doctest::Approx(3.0));
    CHECK(dev(opcalc::polar_rho(LinOp::zero(2, 2)).matrix(), Matrix::Zero(2, 2)) == 0.0);
    // a single column (0,5)^T: rho = [[5]], sigma = the unit column
    LinOp col(column2(0.0, 5.0));
    CHECK(opcalc::polar_rho(col).matrix()(0, 0).real() == doctest::Approx(5.0));
    CHECK(dev(opcalc::polar_sigma(col).matrix(), column2(0.0, 1.0)) < 1e-14);

    CHECK(dev(opcalc::polar_sigma(LinOp(HermitianOp::diagonal({2.0, 3.0}).matrix())).matrix(),
              Matrix::Identity(2, 2)) < 1e-14);
    CHECK(dev(opcalc::polar_sigma(LinOp::zero(3, 2)).matrix(), Matrix::Zero(3, 2)) == 0.0);

    // image of rho is the orthocomplement of the kernel
    sampling::Rng rng(5);
    for (int n = 0; n < 25; ++n) {
        LinOp g(sampling::gaussian_matrix(rng, 4, 3));
        HermitianOp rho = opcalc::polar_rho(g);
        CHECK(dev(rho.matrix() * rho.matrix(), g.matrix().adjoint() * g.matrix()) < 1e-12);
        CHECK(dev(opcalc::polar_sigma(g).matrix() * rho.matrix(), g.matrix()) < 1e-12);
        CHECK(opcalc::numerical_rank(LinOp(rho.matrix())) == opcalc::numerical_rank(g));
    }
}

TEST_CASE("lambda_k") {
    HermitianOp a = HermitianOp::diagonal({-1.0, 4.0});
    CHECK(dev(opcalc::lambda_k(a, 0).matrix(), Matrix::Zero(2, 2)) < 1e-14);
    CHECK(dev(opcalc::lambda_k(a, 1).matrix(), HermitianOp::diagonal({0.0, 5.0}).matrix()) <
          1e-14);
    HermitianOp c = HermitianOp::diagonal({0.3, 0.3, 0.3});
    CHECK(dev(opcalc::lambda_k(c, 2).matrix(), Matrix::Zero(3, 3)) < 1e-14);
    CHECK_THROWS_AS(opcalc::lambda_k(a, 2), std::invalid_argument);  // k = d rejected
    CHECK_THROWS_AS(opcalc::lambda_k(a, -1), std::invalid_argument);
}

TEST_CASE("apply_A") {
    auto id = std::get<FacialMap>(*facial::builtin_map("identity"));
    auto shift = std::get<FacialMap>(*facial::builtin_map("shift:2.5"));
    auto collapse = std::get<FacialMap>(*facial::builtin_map("bottom-collapse"));
    auto to_inf = std::get<FacialMap>(*facial::builtin_map("constant-infinity"));

    sampling::Rng rng(6);
    HermitianOp a = sampling::random_hermitian(rng, 4);
    CHECK(dev(opcalc::apply_A(id, a).op.matrix(), a.matrix()) < 1e-12);
    CHECK(dev(opcalc::apply_A(shift, a).op.matrix(),
              a.matrix() + 2.5 * Matrix::Identity(4, 4)) < 1e-12);
    double e0 = opcalc::eig_sorted(a).values.front();
    CHECK(dev(opcalc::apply_A(collapse, a).op.matrix(), e0 * Matrix::Identity(4, 4)) < 1e-12);
    CHECK(opcalc::apply_A(to_inf, a).basepoint);

    // a non-facial map is detected on a degenerate spectrum
    FacialMap not_facial(0, TupleKind::plain,
        [](const EigenTuple& t) -> facial::FacialImage {
            std::vector<double> v = t.entries();
            for (size_t i = 0; i < v.size(); ++i) v[i] += static_cast<double>(i);
            return {EigenTuple(std::move(v)), std::nullopt};
        },
        "spread");
    HermitianOp degenerate = sampling::hermitian_with_spectrum(rng, {1.0, 1.0, 2.0});
    CHECK_THROWS_AS(opcalc::apply_A(not_facial, degenerate), std::invalid_argument);
}

TEST_CASE("apply_B") {
    auto id = std::get<FacialMap>(*facial::builtin_map("identity"));
    auto doubling = std::get<FacialMap>(*facial::builtin_map("doubling"));
    auto squaring = std::get<FacialMap>(*facial::builtin_map("squaring"));

    sampling::Rng rng(7);
    LinOp g = sampling::random_with_singulars(rng, 5, 3, 0.1, 2.0);
    CHECK(dev(opcalc::apply_B(id, g).hom.matrix(), g.matrix()) < 1e-12);
    CHECK(dev(opcalc::apply_B(doubling, g).hom.matrix(), 2.0 * g.matrix()) < 1e-12);
    CHECK(dev(opcalc::apply_B(squaring, g).hom.matrix(),
              g.matrix() * opcalc::polar_rho(g).matrix()) < 1e-11);

    FacialMap leaves_cone(0, TupleKind::nonneg,
        [](const EigenTuple& t) -> facial::FacialImage {
            std::vector<double> v = t.entries();
            for (auto& x : v) x -= 10.0;
            return {EigenTuple(std::move(v), TupleKind::plain), std::nullopt};
        },
        "down");
    CHECK_THROWS_AS(opcalc::apply_B(leaves_cone, g), std::domain_error);
    CHECK_THROWS_AS(opcalc::apply_B(id, LinOp(sampling::gaussian_matrix(rng, 2, 4))),
                    std::invalid_argument);
}

TEST_CASE("quotient diagrams defining the calculus") {
    sampling::Rng rng(12);
    auto shift = std::get<FacialMap>(*facial::builtin_map("shift:0.75"));
    for (int n = 0; n < 20; ++n) {
        int d = 2 + static_cast<int>(rng() % 3);
        LinOp u(sampling::random_unitary(rng, d));
        auto t = sampling::sorted_spectrum(rng, d, -2.0, 2.0);
        HermitianOp lhs = opcalc::apply_A(shift, opcalc::synth(u, EigenTuple(t))).op;
        HermitianOp rhs = opcalc::synth(u, shift(EigenTuple(t)));
        CHECK(dev(lhs.matrix(), rhs.matrix()) < 1e-10);
    }
    auto squaring = std::get<FacialMap>(*facial::builtin_map("squaring"));
    for (int n = 0; n < 20; ++n) {
        int d = 2 + static_cast<int>(rng() % 3);
        LinOp theta = sampling::random_isometry(rng, d + 2, d);
        HermitianOp a = opcalc::synth(
            LinOp(sampling::random_unitary(rng, d)),
            EigenTuple(sampling::sorted_spectrum(rng, d, 0.0, 3.0), TupleKind::nonneg));
        LinOp lhs = opcalc::apply_B(squaring, LinOp(-theta.matrix() * a.matrix())).hom;
        LinOp rhs(-theta.matrix() * opcalc::apply_A(squaring, a).op.matrix());
        CHECK(dev(lhs.matrix(), rhs.matrix()) < 1e-10);
    }
}

TEST_CASE("kappa and its inverse") {
    CHECK(opcalc::kappa(HermitianOp::zero(1), LinOp(Matrix::Identity(1, 1))).matrix()(0, 0) ==
          std::complex<double>(-1.0, 0.0));

    auto ki = opcalc::kappa_inv(LinOp(column2(2.0, 0.0)));
    CHECK(ki.alpha.matrix()(0, 0).real() == doctest::Approx(std::log(2.0)));
    CHECK(dev(ki.theta.matrix(), column2(-1.0, 0.0)) < 1e-14);

    sampling::Rng rng(8);
    for (int n = 0; n < 25; ++n) {
        HermitianOp a = sampling::random_hermitian(rng, 3);
        LinOp theta = sampling::random_isometry(rng, 5, 3);
        auto back = opcalc::kappa_inv(opcalc::kappa(a, theta));
        CHECK(dev(back.alpha.matrix(), a.matrix()) < 1e-8 * (1.0 + a.matrix().norm()));
        CHECK(dev(back.theta.matrix(), theta.matrix()) < 1e-8);
    }
    CHECK_THROWS_AS(opcalc::kappa_inv(LinOp::zero(3, 2)), std::domain_error);
}

TEST_CASE("conjugation") {
    sampling::Rng rng(9);
    HermitianOp a = HermitianOp::diagonal({1.0, 2.0});
    Matrix swap(2, 2);
    swap << 0.0, 1.0, 1.0, 0.0;
    CHECK(dev(opcalc::conjugate(a, swap).matrix(), HermitianOp::diagonal({2.0, 1.0}).matrix()) <
          1e-14);
    CHECK(dev(opcalc::conjugate(a, Matrix::Identity(2, 2)).matrix(), a.matrix()) == 0.0);
    // spectrum is conjugation invariant
    Matrix u = sampling::random_unitary(rng, 2);
    auto es = opcalc::eig_sorted(opcalc::conjugate(a, u));
    CHECK(es.values[0] == doctest::Approx(1.0));
    CHECK(es.values[1] == doctest::Approx(2.0));
    CHECK_THROWS_AS(opcalc::conjugate(a, Matrix::Identity(3, 3)), std::invalid_argument);
}

TEST_CASE("hom-level ndr pair") {
    sampling::Rng rng(10);
    LinOp g = sampling::random_with_singulars(rng, 4, 3, 0.2, 2.0);
    auto v = opcalc::ndr_hom(g, 1.0);
    CHECK(dev(v.h.matrix(), g.matrix()) < 1e-9 * (1.0 + g.matrix().norm()));
    CHECK(v.u >= 0.0);
    CHECK(v.u <= 1.0);
    // non-injective operators sit at u = 0 and are fixed by the deformation
    auto q = sampling::random_thom_point(rng, tower::ThomKind::J, 3, 4, 3, true);
    CHECK(opcalc::ndr_hom_u(q.gamma) == doctest::Approx(0.0));
    auto fixed = opcalc::ndr_hom(q.gamma, 0.35);
    CHECK(dev(fixed.h.matrix(), q.gamma.matrix()) < 1e-9 * (1.0 + q.gamma.matrix().norm()));
    CHECK_THROWS_AS(opcalc::ndr_hom(LinOp(column2(1.0, 1.0)), 0.5), std::invalid_argument);
}
