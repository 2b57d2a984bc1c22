// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Tolerances and sample counts are pinned here, not configurable.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "isotower/builtin_maps.hpp"
#include "isotower/sampling.hpp"

using namespace isotower;
using facial::EigenTuple;
using facial::FacialMap;
using facial::TupleKind;
using opcalc::HermitianOp;
using opcalc::LinOp;
using opcalc::Matrix;
using sampling::Rng;

namespace {

constexpr unsigned long long kSeed = 20110301;  // fixed: runs are reproducible

struct Outcome {
    bool pass = true;
    double worst = 0.0;
    long long checks = 0;
    std::string note;

    void absorb(double dev, double tol) {
        ++checks;
        worst = std::max(worst, dev);
        if (!(dev <= tol)) pass = false;
    }
    void require(bool ok) { absorb(ok ? 0.0 : 1.0, 0.5); }
};

double dev(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return 1e300;
    if (a.size() == 0) return 0.0;
    return (a - b).cwiseAbs().maxCoeff();
}

// 1. Gysin values are residues: res(z^i / f_V) = delta_{i,d-1} exactly, and
//    1 = sum a_{i+j+1} z^i r_j symbolically, over 20 random groups.
Outcome criterion_gysin_residue() {
    Outcome out;
    Rng rng(kSeed ^ 0x1);
    for (int trial = 0; trial < 20; ++trial) {
        auto g = sampling::random_group(rng, 3, 12, 2);
        int d = 1 + static_cast<int>(rng() % 6);
        auto v = sampling::random_representation(rng, g, d);
        auto r = kresidue::gysin_values(v);
        for (int i = 0; i < d; ++i)
            out.require(i == d - 1 ? r[static_cast<size_t>(i)].is_one()
                                   : r[static_cast<size_t>(i)].is_zero());
        out.require(kresidue::normalization_identity_holds(v));
    }
    return out;
}

// 2. Obstruction theorem, abelian case: exhaustively over C_n (n <= 6) and
//    dimensions <= 3, divisibility of K-theory polynomials coincides with
//    character-multiset inclusion. Exact, zero failures.
Outcome criterion_obstruction_exhaustive() {
    Outcome out;
    for (long long n = 1; n <= 6; ++n) {
        kresidue::AbelianGroupSpec g{{n}, 0};
        std::vector<kresidue::Representation> reps;
        std::vector<long long> cur;
        std::function<void(long long, int)> gen = [&](long long start, int left) {
            kresidue::Representation v{g, {}};
            for (long long c : cur) v.characters.push_back({c});
            reps.push_back(std::move(v));
            if (left == 0) return;
            for (long long c = start; c < n; ++c) {
                cur.push_back(c);
                gen(c, left - 1);
                cur.pop_back();
            }
        };
        gen(0, 3);
        for (const auto& v0 : reps) {
            auto f0 = kresidue::k_polynomial(v0);
            for (const auto& v1 : reps) {
                bool div = kresidue::divides(f0, kresidue::k_polynomial(v1)).divides;
                out.require(div == kresidue::submultiset(v0, v1));
                if (v0.dim() <= v1.dim()) {
                    auto verdict = kresidue::obstruction_check(v0, v1);
                    bool all_zero = true;
                    for (const auto& r : verdict.residues) all_zero = all_zero && r.is_zero();
                    out.require(verdict.divides == all_zero);
                }
            }
        }
    }
    return out;
}

// 3. Degree claims: the collapse map f'' and the plane map g''' have degree 1;
//    identities have degree 1 and reflections -1. Exact integers.
Outcome criterion_degrees() {
    Outcome out;
    auto circle = [](const char* id) { return std::get<facial::CircleMap>(*facial::builtin_map(id)); };
    auto sphere = [](const char* id) { return std::get<facial::SphereMap>(*facial::builtin_map(id)); };
    out.require(facial::circle_degree(circle("f-double-prime")) == 1);
    out.require(facial::circle_degree(circle("circle-identity")) == 1);
    out.require(facial::circle_degree(circle("negate")) == -1);
    out.require(facial::sphere_degree(sphere("g-triple-prime")) == 1);
    out.require(facial::sphere_degree(sphere("sphere-identity")) == 1);
    out.require(facial::sphere_degree(sphere("sphere-reflect")) == -1);
    return out;
}

// 4. chi equals the calculus applied to the log-and-rebase map, pointwise to
//    1e-8 over 1000 random injective operators, d0 <= 5, dim V1 <= 8.
Outcome criterion_chi_is_calculus() {
    Outcome out;
    Rng rng(kSeed ^ 0x4);
    FacialMap g = tower::chi_facial_map();
    for (int trial = 0; trial < 1000; ++trial) {
        int d0 = 2 + static_cast<int>(rng() % 4);
        int n1 = d0 + static_cast<int>(rng() % (9 - d0));
        LinOp gamma = sampling::random_with_singulars(rng, n1, d0, 0.05, 3.0);
        auto lhs = tower::chi_map(gamma);
        auto rhs = opcalc::apply_B(g, gamma);
        out.absorb(std::abs(lhs.coordinate - *rhs.suspension), 1e-8);
        out.absorb(dev(lhs.hom.matrix(), rhs.hom.matrix()), 1e-8);
    }
    return out;
}

// 5. The chart pairs are mutually inverse to 1e-8 on 1000 random valid points
//    each, across all 1 <= k < d0 <= 5.
Outcome criterion_roundtrips() {
    Outcome out;
    Rng rng(kSeed ^ 0x5);
    const double tol = 1e-8;

    for (int trial = 0; trial < 1000; ++trial) {
        int d0 = 2 + static_cast<int>(rng() % 4);
        int n1 = d0 + static_cast<int>(rng() % (9 - d0));
        HermitianOp a = sampling::random_hermitian(rng, d0);
        LinOp theta = sampling::random_isometry(rng, n1, d0);
        auto back = opcalc::kappa_inv(opcalc::kappa(a, theta));
        out.absorb(dev(back.alpha.matrix(), a.matrix()) / (1.0 + a.matrix().norm()), tol);
        out.absorb(dev(back.theta.matrix(), theta.matrix()), tol);

        LinOp gam = sampling::random_with_singulars(rng, n1, d0, 0.2, 3.0);
        auto ki = opcalc::kappa_inv(gam);
        out.absorb(dev(opcalc::kappa(ki.alpha, ki.theta).matrix(), gam.matrix()) /
                       (1.0 + gam.matrix().norm()),
                   tol);
    }

    int combo = 0;
    for (int trial = 0; trial < 1000; ++trial, ++combo) {
        int d0 = 2 + combo % 4;
        int k = 1 + (combo / 4) % (d0 - 1);
        int n1 = d0 + static_cast<int>(rng() % (9 - d0));

        tower::TowerPoint p = sampling::random_tower_point(rng, d0, n1, k);
        tower::TowerPoint pback = tower::rk_map(tower::qk_map(p));
        out.absorb(dev(pback.alpha.matrix(), p.alpha.matrix()) / (1.0 + p.alpha.matrix().norm()),
                   tol);
        out.absorb(dev(pback.theta.matrix(), p.theta.matrix()), tol);

        tower::ThomPoint qi = sampling::random_thom_point(rng, tower::ThomKind::I, d0, n1, k);
        tower::ThomPoint qiback = tower::qk_map(tower::rk_map(qi));
        out.absorb(dev(qiback.W.projector, qi.W.projector), tol);
        out.absorb(dev(qiback.gamma.matrix(), qi.gamma.matrix()) /
                       (1.0 + qi.gamma.matrix().norm()),
                   tol);
        out.absorb(dev(qiback.psi.matrix(), qi.psi.matrix()) / (1.0 + qi.psi.matrix().norm()),
                   tol);

        tower::TowerPoint plow = tower::pi_k(p);
        auto fk = tower::fk_map(plow, k);
        tower::TowerPoint fback = tower::gk_map(fk.coordinate, fk.point);
        out.absorb(dev(fback.alpha.matrix(), plow.alpha.matrix()) /
                       (1.0 + plow.alpha.matrix().norm()),
                   tol);
        out.absorb(dev(fback.theta.matrix(), plow.theta.matrix()), tol);

        tower::ThomPoint qj = sampling::random_thom_point(rng, tower::ThomKind::J, d0, n1, k);
        double t = sampling::uniform(rng, -1.0, 1.0);
        auto gkfk = tower::fk_map(tower::gk_map(t, qj), k);
        out.absorb(std::abs(gkfk.coordinate - t), tol);
        out.absorb(dev(gkfk.point.W.projector, qj.W.projector), tol);
        out.absorb(dev(gkfk.point.gamma.matrix(), qj.gamma.matrix()) /
                       (1.0 + qj.gamma.matrix().norm()),
                   tol);
        out.absorb(dev(gkfk.point.psi.matrix(), qj.psi.matrix()) /
                       (1.0 + qj.psi.matrix().norm()),
                   tol);
    }
    return out;
}

// 6. NDR axioms for the half-disc and D_+(2) pairs on 10^4 samples, plus the
//    operator-level pair spot-checked on 100 operators at d0 <= 4.
Outcome criterion_ndr() {
    Outcome out;
    Rng rng(kSeed ^ 0x6);
    const double pi = 3.14159265358979323846;

    for (int n = 0; n < 10000; ++n) {
        std::complex<double> x = std::polar(std::sqrt(sampling::uniform(rng, 0.0, 1.0)),
                                            sampling::uniform(rng, 0.0, pi));
        std::complex<double> a = std::polar(1.0, sampling::uniform(rng, 0.0, pi));
        double t = sampling::uniform(rng, 0.0, 1.0);
        out.absorb(std::abs(facial::ndr_halfdisc(x, 1.0).h - x), 1e-9);
        out.absorb(std::abs(facial::ndr_halfdisc(a, t).h - a), 1e-9);
        out.absorb(std::abs(facial::ndr_halfdisc(a, t).u), 1e-7);
        auto z0 = facial::ndr_halfdisc(x, 0.0);
        if (z0.u < 1.0 - 1e-6) out.absorb(std::abs(std::abs(z0.h) - 1.0), 1e-7);
        if (z0.u <= 1e-12) out.absorb(std::abs(std::abs(x) - 1.0), 1e-7);

        double lo = sampling::uniform(rng, 0.0, 4.0), hi = sampling::uniform(rng, 0.0, 4.0);
        EigenTuple p({std::min(lo, hi), std::max(lo, hi)}, TupleKind::nonneg);
        EigenTuple a2({0.0, sampling::uniform(rng, 0.0, 4.0)}, TupleKind::nonneg);
        auto h1 = facial::ndr_dplus2(p, 1.0);
        out.absorb(std::max(std::abs(h1.h[0] - p[0]), std::abs(h1.h[1] - p[1])), 1e-9);
        auto ha = facial::ndr_dplus2(a2, t);
        out.absorb(std::max(std::abs(ha.h[0] - a2[0]), std::abs(ha.h[1] - a2[1])), 1e-9);
        out.absorb(std::abs(ha.u), 1e-7);
        auto h0 = facial::ndr_dplus2(p, 0.0);
        if (h0.u < 1.0 - 1e-6)
            out.absorb(h0.h.is_infinity() ? 0.0 : std::abs(h0.h.front()), 1e-7);
        if (h0.u <= 1e-12) out.absorb(std::abs(p.front()), 1e-7);
    }

    for (int n = 0; n < 100; ++n) {
        int d = 2 + static_cast<int>(rng() % 3);
        int m = d + static_cast<int>(rng() % 3);
        double t = sampling::uniform(rng, 0.0, 1.0);
        LinOp g = sampling::random_with_singulars(rng, m, d, 0.05, 2.0);
        double scale = 1.0 + g.matrix().norm();
        out.absorb(dev(opcalc::ndr_hom(g, 1.0).h.matrix(), g.matrix()) / scale, 1e-9);
        LinOp gj = sampling::random_thom_point(rng, tower::ThomKind::J, d, m, d, true).gamma;
        auto fixed = opcalc::ndr_hom(gj, t);
        out.absorb(dev(fixed.h.matrix(), gj.matrix()) / (1.0 + gj.matrix().norm()), 1e-9);
        out.absorb(std::abs(fixed.u), 1e-7);
        auto h0 = opcalc::ndr_hom(g, 0.0);
        if (h0.u < 1.0 - 1e-6)
            out.absorb(opcalc::smallest_singular(h0.h) / scale, 1e-7);
    }
    return out;
}

// 7. Well-definedness of the calculus: basis independence under planted
//    degeneracies, and the defining square rho(B_f(g)) = A_f(rho(g)).
Outcome criterion_well_definedness() {
    Outcome out;
    Rng rng(kSeed ^ 0x7);
    for (int trial = 0; trial < 1000; ++trial) {
        int d = 3 + static_cast<int>(rng() % 3);
        auto eigs = sampling::sorted_spectrum(rng, d, -2.0, 2.0);
        eigs[1] = eigs[0];
        HermitianOp a = sampling::hermitian_with_spectrum(rng, eigs);
        auto es = opcalc::eig_sorted(a);
        Matrix u = Matrix::Identity(d, d);
        Matrix block = sampling::random_unitary(rng, 2);
        Matrix v01 = es.vectors.leftCols(2);
        u += v01 * (block - Matrix::Identity(2, 2)) * v01.adjoint();
        FacialMap f = sampling::random_facial_plain(rng);
        HermitianOp applied = opcalc::apply_A(f, a).op;
        out.absorb(dev(u * applied.matrix() * u.adjoint(), applied.matrix()) /
                       (1.0 + applied.matrix().norm()),
                   1e-8);

        int m = d + static_cast<int>(rng() % 3);
        LinOp g = sampling::random_with_singulars(rng, m, d, 0.0, 3.0);
        FacialMap fq = facial::hat(sampling::random_facial_dplus2(rng), d);
        HermitianOp lhs = opcalc::polar_rho(opcalc::apply_B(fq, g).hom);
        HermitianOp rhs = opcalc::apply_A(fq, opcalc::polar_rho(g)).op;
        out.absorb(dev(lhs.matrix(), rhs.matrix()) / (1.0 + rhs.matrix().norm()), 1e-8);
    }
    return out;
}

// 8. phi_k agrees with the Thom-point calculus of the canonical facial map,
//    to 1e-8 over 1000 random Thom points, 1 <= k <= d0 <= 5.
Outcome criterion_phik_calculus() {
    Outcome out;
    Rng rng(kSeed ^ 0x8);
    for (int trial = 0; trial < 1000; ++trial) {
        int d0 = 1 + static_cast<int>(rng() % 5);
        int k = 1 + static_cast<int>(rng() % d0);
        int n1 = d0 + static_cast<int>(rng() % (9 - d0));
        tower::ThomPoint q = sampling::random_thom_point(rng, tower::ThomKind::Z, d0, n1, k);
        tower::TowerPoint lhs = tower::phi_k(q);
        tower::TowerPoint rhs = tower::apply_C(tower::canonical_smash(d0, k), q);
        out.require(lhs.basepoint == rhs.basepoint);
        if (!lhs.basepoint) {
            out.absorb(dev(lhs.alpha.matrix(), rhs.alpha.matrix()) /
                           (1.0 + rhs.alpha.matrix().norm()),
                       1e-8);
            out.absorb(dev(lhs.theta.matrix(), rhs.theta.matrix()), 1e-8);
        }
    }
    return out;
}

// 9. Equivariance of every calculus and tower operation under random block
//    unitaries, 100 trials per operation.
Outcome criterion_equivariance() {
    Outcome out;
    const double tol = 1e-8;

    auto conj_tower = [](const tower::TowerPoint& p, const Matrix& u0, const Matrix& u1) {
        return tower::make_tower_point(p.level, opcalc::conjugate(p.alpha, u0),
                                       opcalc::conjugate(p.theta, u0, u1));
    };
    auto conj_thom = [](const tower::ThomPoint& q, const Matrix& u0, const Matrix& u1) {
        return tower::make_thom_point(q.kind,
                                      tower::grass_from_projector(u0 * q.W.projector * u0.adjoint()),
                                      opcalc::conjugate(q.gamma, u0, u1),
                                      opcalc::conjugate(q.psi, u0), q.suspension);
    };

    // opcalc operations
    {
        Rng rng(kSeed ^ 0x90);
        for (int trial = 0; trial < 100; ++trial) {
            int d = 2 + static_cast<int>(rng() % 4);
            int m = d + static_cast<int>(rng() % 3);
            Matrix u0 = sampling::random_unitary(rng, d);
            Matrix u1 = sampling::random_unitary(rng, m);
            HermitianOp a = sampling::random_hermitian(rng, d);
            LinOp g = sampling::random_with_singulars(rng, m, d, 0.1, 3.0);
            HermitianOp ca = opcalc::conjugate(a, u0);
            LinOp cg = opcalc::conjugate(g, u0, u1);
            double sa = 1.0 + a.matrix().norm();
            double sg = 1.0 + g.matrix().norm();

            out.absorb(dev(opcalc::op_exp(ca).matrix(),
                           opcalc::conjugate(opcalc::op_exp(a), u0).matrix()) / sa, tol);
            out.absorb(dev(opcalc::polar_rho(cg).matrix(),
                           opcalc::conjugate(opcalc::polar_rho(g), u0).matrix()) / sg, tol);
            out.absorb(dev(opcalc::polar_sigma(cg).matrix(),
                           opcalc::conjugate(opcalc::polar_sigma(g), u0, u1).matrix()), tol);
            int k = static_cast<int>(rng() % d);
            out.absorb(dev(opcalc::lambda_k(ca, k).matrix(),
                           opcalc::conjugate(opcalc::lambda_k(a, k), u0).matrix()) / sa, tol);

            FacialMap fp = sampling::random_facial_plain(rng);
            out.absorb(dev(opcalc::apply_A(fp, ca).op.matrix(),
                           opcalc::conjugate(opcalc::apply_A(fp, a).op, u0).matrix()) / sa, tol);
            FacialMap fq = facial::hat(sampling::random_facial_dplus2(rng), d);
            out.absorb(dev(opcalc::apply_B(fq, cg).hom.matrix(),
                           opcalc::conjugate(opcalc::apply_B(fq, g).hom, u0, u1).matrix()) / sg,
                       tol);

            LinOp theta = sampling::random_isometry(rng, m, d);
            LinOp ctheta = opcalc::conjugate(theta, u0, u1);
            out.absorb(dev(opcalc::kappa(ca, ctheta).matrix(),
                           opcalc::conjugate(opcalc::kappa(a, theta), u0, u1).matrix()), tol);
            auto ki = opcalc::kappa_inv(cg);
            auto kio = opcalc::kappa_inv(g);
            out.absorb(dev(ki.alpha.matrix(), opcalc::conjugate(kio.alpha, u0).matrix()) / sg,
                       tol);
            out.absorb(dev(ki.theta.matrix(),
                           opcalc::conjugate(kio.theta, u0, u1).matrix()), tol);
        }
    }

    // tower operations
    {
        Rng rng(kSeed ^ 0x91);
        for (int trial = 0; trial < 100; ++trial) {
            int d0 = 2 + static_cast<int>(rng() % 4);
            int k = 1 + static_cast<int>(rng() % (d0 - 1));
            int n1 = d0 + static_cast<int>(rng() % (9 - d0));
            Matrix u0 = sampling::random_unitary(rng, d0);
            Matrix u1 = sampling::random_unitary(rng, n1);

            tower::TowerPoint p = sampling::random_tower_point(rng, d0, n1, k);
            tower::TowerPoint cp = conj_tower(p, u0, u1);
            double sa = 1.0 + p.alpha.matrix().norm();

            auto pk = tower::pk_projector(p.alpha, k);
            auto cpk = tower::pk_projector(opcalc::conjugate(p.alpha, u0), k);
            out.absorb(dev(cpk.grass.projector, u0 * pk.grass.projector * u0.adjoint()), tol);

            tower::TowerPoint lhs_pi = tower::pi_k(cp);
            tower::TowerPoint rhs_pi = conj_tower(tower::pi_k(p), u0, u1);
            out.absorb(dev(lhs_pi.alpha.matrix(), rhs_pi.alpha.matrix()) / sa, tol);
            out.absorb(dev(lhs_pi.theta.matrix(), rhs_pi.theta.matrix()), tol);

            auto lhs_qk = tower::qk_map(cp);
            auto rhs_qk = conj_thom(tower::qk_map(p), u0, u1);
            out.absorb(dev(lhs_qk.W.projector, rhs_qk.W.projector), tol);
            out.absorb(dev(lhs_qk.gamma.matrix(), rhs_qk.gamma.matrix()) /
                           (1.0 + rhs_qk.gamma.matrix().norm()), tol);
            out.absorb(dev(lhs_qk.psi.matrix(), rhs_qk.psi.matrix()) /
                           (1.0 + rhs_qk.psi.matrix().norm()), tol);

            tower::TowerPoint plow = tower::pi_k(p);
            tower::TowerPoint cplow = conj_tower(plow, u0, u1);
            auto lhs_fk = tower::fk_map(cplow, k);
            auto rhs_fk = tower::fk_map(plow, k);
            out.absorb(std::abs(lhs_fk.coordinate - rhs_fk.coordinate), tol);
            out.absorb(dev(lhs_fk.point.gamma.matrix(),
                           conj_thom(rhs_fk.point, u0, u1).gamma.matrix()) /
                           (1.0 + rhs_fk.point.gamma.matrix().norm()), tol);

            auto lhs_dk = tower::delta_k(cplow, k);
            auto rhs_dk = conj_thom(tower::delta_k(plow, k), u0, u1);
            out.absorb(std::abs(*lhs_dk.suspension - *rhs_dk.suspension), tol);
            out.absorb(dev(lhs_dk.psi.matrix(), rhs_dk.psi.matrix()) /
                           (1.0 + rhs_dk.psi.matrix().norm()), tol);

            auto [ea, eb] = tower::embed_coords(p);
            auto [cea, ceb] = tower::embed_coords(cp);
            out.absorb(dev(cea.matrix(), opcalc::conjugate(ea, u0).matrix()) / sa, tol);
            out.absorb(dev(ceb.matrix(), opcalc::conjugate(eb, u0, u1).matrix()), tol);

            tower::ThomPoint qi = sampling::random_thom_point(rng, tower::ThomKind::I, d0, n1, k);
            tower::TowerPoint lhs_rk = tower::rk_map(conj_thom(qi, u0, u1));
            tower::TowerPoint rhs_rk = conj_tower(tower::rk_map(qi), u0, u1);
            out.absorb(dev(lhs_rk.alpha.matrix(), rhs_rk.alpha.matrix()) /
                           (1.0 + rhs_rk.alpha.matrix().norm()), tol);
            out.absorb(dev(lhs_rk.theta.matrix(), rhs_rk.theta.matrix()), tol);

            tower::ThomPoint qj = sampling::random_thom_point(rng, tower::ThomKind::J, d0, n1, k);
            double t = sampling::uniform(rng, -1.0, 1.0);
            tower::TowerPoint lhs_gk = tower::gk_map(t, conj_thom(qj, u0, u1));
            tower::TowerPoint rhs_gk = conj_tower(tower::gk_map(t, qj), u0, u1);
            out.absorb(dev(lhs_gk.alpha.matrix(), rhs_gk.alpha.matrix()) /
                           (1.0 + rhs_gk.alpha.matrix().norm()), tol);

            tower::ThomPoint qz = sampling::random_thom_point(rng, tower::ThomKind::Z, d0, n1, k);
            tower::TowerPoint lhs_phi = tower::phi_k(conj_thom(qz, u0, u1));
            tower::TowerPoint rhs_phi = conj_tower(tower::phi_k(qz), u0, u1);
            out.absorb(dev(lhs_phi.alpha.matrix(), rhs_phi.alpha.matrix()) /
                           (1.0 + rhs_phi.alpha.matrix().norm()), tol);
            tower::TowerPoint lhs_c = tower::apply_C(tower::canonical_smash(d0, k),
                                                     conj_thom(qz, u0, u1));
            out.absorb(dev(lhs_c.alpha.matrix(), rhs_phi.alpha.matrix()) /
                           (1.0 + rhs_phi.alpha.matrix().norm()), tol);

            // top of the tower through tau and chi
            HermitianOp a = sampling::random_hermitian(rng, d0);
            LinOp th = sampling::random_isometry(rng, n1, d0);
            auto tau_c = tower::tau_map(tower::pi_k(tower::sample_tower_point(
                opcalc::conjugate(a, u0), opcalc::conjugate(th, u0, u1), d0)));
            auto tau_p = tower::tau_map(tower::pi_k(tower::sample_tower_point(a, th, d0)));
            out.absorb(std::abs(tau_c.coordinate - tau_p.coordinate), tol);
            out.absorb(dev(tau_c.hom.matrix(), u1 * tau_p.hom.matrix() * u0.adjoint()) /
                           (1.0 + tau_p.hom.matrix().norm()), tol);

            LinOp gam = sampling::random_with_singulars(rng, n1, d0, 0.1, 3.0);
            auto chi_c = tower::chi_map(opcalc::conjugate(gam, u0, u1));
            auto chi_p = tower::chi_map(gam);
            out.absorb(std::abs(chi_c.coordinate - chi_p.coordinate), tol);
            out.absorb(dev(chi_c.hom.matrix(), u1 * chi_p.hom.matrix() * u0.adjoint()) /
                           (1.0 + chi_p.hom.matrix().norm()), tol);
        }
    }
    return out;
}

// 10. The collapse map inverts its embedding: f''(f'''(t)) = t to 1e-9 over
//     1000 samples of t in [-30, 30].
Outcome criterion_collapse_identity() {
    Outcome out;
    Rng rng(kSeed ^ 0xa);
    for (int n = 0; n < 1000; ++n) {
        double t = sampling::uniform(rng, -30.0, 30.0);
        out.absorb(facial::collapse_roundtrip_error(t), 1e-9);
    }
    return out;
}

struct Criterion {
    const char* name;
    Outcome (*run)();
    double time_budget_s;  // <= 0: no budget stated
};

} // namespace

int main() {
    const Criterion criteria[] = {
        {"gysin-residue-identities", criterion_gysin_residue, 5.0},
        {"obstruction-divides-iff-subrep", criterion_obstruction_exhaustive, 30.0},
        {"degree-claims", criterion_degrees, 0.0},
        {"chi-equals-calculus", criterion_chi_is_calculus, 10.0},
        {"chart-roundtrips", criterion_roundtrips, 0.0},
        {"ndr-axioms", criterion_ndr, 0.0},
        {"calculus-well-definedness", criterion_well_definedness, 0.0},
        {"phik-equals-calculus", criterion_phik_calculus, 0.0},
        {"equivariance", criterion_equivariance, 0.0},
        {"collapse-embedding-identity", criterion_collapse_identity, 0.0},
    };

    int failures = 0;
    int index = 0;
    for (const auto& c : criteria) {
        ++index;
        auto start = std::chrono::steady_clock::now();
        Outcome out;
        std::string error;
        try {
            out = c.run();
        } catch (const std::exception& e) {
            out.pass = false;
            error = e.what();
        }
        double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool in_budget = (c.time_budget_s <= 0.0) || (elapsed <= c.time_budget_s);
        bool pass = out.pass && in_budget;
        if (!pass) ++failures;
        std::printf("[%2d] %-32s %s  (checks=%lld worst=%.3e time=%.2fs%s)%s%s\n", index,
                    c.name, pass ? "PASS" : "FAIL", out.checks, out.worst, elapsed,
                    in_budget ? "" : " OVER BUDGET", error.empty() ? "" : " error: ",
                    error.c_str());
    }
    if (failures) std::printf("%d criterion(s) FAILED\n", failures);
    else std::printf("all %d criteria passed\n", index);
    return failures == 0 ? 0 : 1;
}
