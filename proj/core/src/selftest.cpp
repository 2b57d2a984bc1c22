#include "isotower/selftest.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <stdexcept>

#include "isotower/builtin_maps.hpp"
#include "isotower/sampling.hpp"

namespace isotower::selftest {

using facial::CircleMap;
using facial::EigenTuple;
using facial::FacialMap;
using facial::TupleKind;
using opcalc::HermitianOp;
using opcalc::LinOp;
using opcalc::Matrix;
using sampling::Rng;

namespace {

double entry_dev(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return 1e300;
    if (a.size() == 0) return 0.0;
    return (a - b).cwiseAbs().maxCoeff();
}

struct Recorder {
    CheckResult r;

    explicit Recorder(std::string name, double tol) {
        r.name = std::move(name);
        r.tol = tol;
    }
    void sample(double dev) {
        r.samples++;
        r.worst = std::max(r.worst, dev);
        if (dev > r.tol) r.failures++;
    }
    void expect(bool ok) { sample(ok ? 0.0 : 1.0); }
    CheckResult done() {
        r.pass = (r.failures == 0);
        return r;
    }
};

EigenTuple random_dplus2_point(Rng& rng) {
    double a = sampling::uniform(rng, 0.0, 4.0);
    double b = sampling::uniform(rng, 0.0, 4.0);
    return EigenTuple({std::min(a, b), std::max(a, b)}, TupleKind::nonneg);
}

// ── facial ──────────────────────────────────────────────────────────────────

CheckResult check_hat_d2(const Options& opt) {
    Recorder rec("hat-collapses-at-d2", 0.0);
    Rng rng(opt.seed ^ 0x11);
    for (long long n = 0; n < opt.samples; ++n) {
        FacialMap f = sampling::random_facial_dplus2(rng);
        EigenTuple p = random_dplus2_point(rng);
        EigenTuple lhs = facial::hat(f, 2)(p);
        EigenTuple rhs = f(p);
        double dev = std::max(std::abs(lhs[0] - rhs[0]), std::abs(lhs[1] - rhs[1]));
        rec.sample(dev);
    }
    return rec.done();
}

CheckResult check_conformal(const Options& opt) {
    Recorder rec("conformal-roundtrip", opt.tol > 0 ? opt.tol : 1e-9);
    Rng rng(opt.seed ^ 0x12);
    for (long long n = 0; n < opt.samples; ++n) {
        EigenTuple p = random_dplus2_point(rng);
        if (n % 5 == 0) p = EigenTuple({0.0, p[1]}, TupleKind::nonneg);      // D_0 face
        if (n % 7 == 0) p = EigenTuple({p[0], p[0]}, TupleKind::nonneg);     // diagonal
        auto z = facial::conformal(p);
        EigenTuple back = facial::conformal_inv(z);
        rec.sample(std::max(std::abs(back[0] - p[0]), std::abs(back[1] - p[1])));
    }
    // basepoint pinned at -1
    rec.expect(facial::conformal(EigenTuple::infinity(TupleKind::nonneg)) ==
               std::complex<double>(-1.0, 0.0));
    rec.expect(facial::conformal_inv({-1.0, 0.0}).is_infinity());
    return rec.done();
}

CheckResult check_conformal_modulus(const Options& opt) {
    Recorder rec("conformal-modulus", opt.tol > 0 ? opt.tol : 1e-9);
    Rng rng(opt.seed ^ 0x13);
    for (long long n = 0; n < opt.samples; ++n) {
        EigenTuple p = random_dplus2_point(rng);
        double m = std::abs(facial::conformal(p));
        rec.sample(std::max(0.0, m - 1.0));                      // |phi| <= 1
        EigenTuple q = EigenTuple({0.0, p[1]}, TupleKind::nonneg);
        rec.sample(std::abs(std::abs(facial::conformal(q)) - 1.0));  // D_0 -> circle
    }
    return rec.done();
}

CheckResult check_ndr_halfdisc(const Options& opt) {
    using C = std::complex<double>;
    Recorder rec("ndr-halfdisc-axioms", opt.tol > 0 ? opt.tol : 1e-7);
    Rng rng(opt.seed ^ 0x15);
    const double pi = 3.14159265358979323846;
    for (long long n = 0; n < opt.samples; ++n) {
        C x = std::polar(std::sqrt(sampling::uniform(rng, 0.0, 1.0)),
                         sampling::uniform(rng, 0.0, pi));
        C a = std::polar(1.0, sampling::uniform(rng, 0.0, pi));
        double t = sampling::uniform(rng, 0.0, 1.0);
        // h_1 = id; h_t fixes A; u < 1 => h_0 in A; u = 0 <=> in A
        double d_id = std::abs(facial::ndr_halfdisc(x, 1.0).h - x);
        rec.sample(d_id <= 1e-9 ? 0.0 : d_id);
        double d_fix = std::abs(facial::ndr_halfdisc(a, t).h - a);
        rec.sample(d_fix <= 1e-9 ? 0.0 : d_fix);
        auto z0 = facial::ndr_halfdisc(x, 0.0);
        if (z0.u < 1.0 - 1e-6) rec.sample(std::abs(std::abs(z0.h) - 1.0));
        rec.sample(std::abs(facial::ndr_halfdisc(a, t).u));
        if (z0.u <= 1e-12) rec.sample(std::abs(std::abs(x) - 1.0));
    }
    return rec.done();
}

CheckResult check_ndr_dplus2(const Options& opt) {
    Recorder rec("ndr-dplus2-axioms", opt.tol > 0 ? opt.tol : 1e-7);
    Rng rng(opt.seed ^ 0x16);
    auto dist_pt = [](const EigenTuple& a, const EigenTuple& b) {
        if (a.is_infinity() || b.is_infinity())
            return (a.is_infinity() && b.is_infinity()) ? 0.0 : 1e300;
        return std::max(std::abs(a[0] - b[0]), std::abs(a[1] - b[1]));
    };
    for (long long n = 0; n < opt.samples; ++n) {
        EigenTuple x = random_dplus2_point(rng);
        EigenTuple a({0.0, sampling::uniform(rng, 0.0, 4.0)}, TupleKind::nonneg);  // D_0
        double t = sampling::uniform(rng, 0.0, 1.0);

        auto h1 = facial::ndr_dplus2(x, 1.0);
        rec.sample(dist_pt(h1.h, x) <= 1e-9 ? 0.0 : dist_pt(h1.h, x));

        auto ha = facial::ndr_dplus2(a, t);
        rec.sample(dist_pt(ha.h, a) <= 1e-9 ? 0.0 : dist_pt(ha.h, a));
        rec.sample(std::abs(ha.u));

        auto h0 = facial::ndr_dplus2(x, 0.0);
        if (h0.u < 1.0 - 1e-6)
            rec.sample(h0.h.is_infinity() ? 0.0 : std::abs(h0.h.front()));
        if (h0.u <= 1e-12) rec.sample(std::abs(x.front()));

        // the basepoint behaves like a point of A
        auto hb = facial::ndr_dplus2(EigenTuple::infinity(TupleKind::nonneg), t);
        rec.expect(hb.h.is_infinity() && hb.u == 0.0);
    }
    return rec.done();
}

CircleMap monotone_circle_map(Rng& rng) {
    int pick = static_cast<int>(rng() % 3);
    double a = sampling::uniform(rng, 0.3, 2.0);
    double b = sampling::uniform(rng, -2.0, 2.0);
    bool flip = (rng() % 2) == 0;
    double sign = flip ? -1.0 : 1.0;
    std::string label = flip ? "dec" : "inc";
    return CircleMap(
        [pick, a, b, sign](ExtReal x) -> ExtReal {
            if (x.at_infinity) return ExtReal::infinity();
            double t = x.value;
            double y = 0;
            switch (pick) {
                case 0: y = a * t + b; break;
                case 1: y = t * t * t + a * t + b; break;
                default: y = t + std::sin(t) + b; break;
            }
            return ExtReal::of(sign * y);
        },
        label);
}

CheckResult check_degree_homomorphism(const Options& opt) {
    Recorder rec("circle-degree-homomorphism", 0.0);
    Rng rng(opt.seed ^ 0x17);
    long long pairs = std::max<long long>(8, opt.samples / 16);
    for (long long n = 0; n < pairs; ++n) {
        CircleMap m1 = monotone_circle_map(rng);
        CircleMap m2 = monotone_circle_map(rng);
        CircleMap comp([m1, m2](ExtReal x) { return m1(m2(x)); }, "comp");
        int d1 = facial::circle_degree(m1);
        int d2 = facial::circle_degree(m2);
        int dc = facial::circle_degree(comp);
        rec.expect(dc == d1 * d2);
    }
    return rec.done();
}

CheckResult check_collapse_roundtrip(const Options& opt) {
    Recorder rec("collapse-embedding-roundtrip", opt.tol > 0 ? opt.tol : 1e-9);
    Rng rng(opt.seed ^ 0x18);
    for (long long n = 0; n < opt.samples; ++n) {
        double t = sampling::uniform(rng, -30.0, 30.0);
        rec.sample(facial::collapse_roundtrip_error(t));
    }
    return rec.done();
}

CheckResult check_builtin_degrees(const Options&) {
    Recorder rec("builtin-degrees", 0.0);
    auto circle = [](const char* id) {
        return std::get<CircleMap>(*facial::builtin_map(id));
    };
    auto sphere = [](const char* id) {
        return std::get<facial::SphereMap>(*facial::builtin_map(id));
    };
    rec.expect(facial::circle_degree(circle("circle-identity")) == 1);
    rec.expect(facial::circle_degree(circle("negate")) == -1);
    rec.expect(facial::circle_degree(circle("f-double-prime")) == 1);
    CircleMap constant([](ExtReal) { return ExtReal::of(0.25); }, "const");
    rec.expect(facial::circle_degree(constant) == 0);
    rec.expect(facial::sphere_degree(sphere("sphere-identity")) == 1);
    rec.expect(facial::sphere_degree(sphere("sphere-reflect")) == -1);
    rec.expect(facial::sphere_degree(sphere("g-triple-prime")) == 1);
    return rec.done();
}

CheckResult check_verify_facial(const Options& opt) {
    Recorder rec("verify-facial-builtins", 0.0);
    long long n = std::max<long long>(200, opt.samples);
    auto fac = [](const char* id) { return std::get<FacialMap>(*facial::builtin_map(id)); };
    rec.expect(facial::verify_facial(fac("identity"), 3, n, opt.seed).ok());
    rec.expect(facial::verify_facial(fac("shift:1.0"), 4, n, opt.seed).ok());
    FacialMap reversal(2, TupleKind::plain,
        [](const EigenTuple& p) -> facial::FacialImage {
            return {EigenTuple({-p[1], -p[0]}, TupleKind::plain), std::nullopt};
        },
        "reversal");
    rec.expect(facial::verify_facial(reversal, 2, n, opt.seed).ok());
    FacialMap broken(2, TupleKind::plain,
        [](const EigenTuple& p) -> facial::FacialImage {
            return {EigenTuple({p[0], p[1] + 1.0}, TupleKind::plain), std::nullopt};
        },
        "broken");
    rec.expect(!facial::verify_facial(broken, 2, n, opt.seed).ok());
    Rng rng(opt.seed ^ 0x19);
    for (int i = 0; i < 4; ++i) {
        FacialMap h = facial::hat(sampling::random_facial_dplus2(rng), 4);
        rec.expect(facial::verify_facial(h, 4, n, opt.seed + static_cast<unsigned>(i)).ok());
    }
    return rec.done();
}

// ── opcalc ──────────────────────────────────────────────────────────────────

CheckResult check_synth_eig(const Options& opt) {
    Recorder rec("synth-eig-roundtrip", opt.tol > 0 ? opt.tol : 1e-9);
    Rng rng(opt.seed ^ 0x21);
    for (long long n = 0; n < opt.samples; ++n) {
        int d = 1 + static_cast<int>(rng() % 8);
        HermitianOp a = sampling::random_hermitian(rng, d);
        auto es = opcalc::eig_sorted(a);
        HermitianOp back = opcalc::synth(LinOp(es.vectors), es.values);
        rec.sample(entry_dev(back.matrix(), a.matrix()) / (1.0 + a.matrix().norm()));
    }
    return rec.done();
}

CheckResult check_eig_of_synth(const Options& opt) {
    Recorder rec("eig-of-synth", opt.tol > 0 ? opt.tol : 1e-9);
    Rng rng(opt.seed ^ 0x22);
    for (long long n = 0; n < opt.samples; ++n) {
        int d = 1 + static_cast<int>(rng() % 6);
        auto t = sampling::sorted_spectrum(rng, d, -3.0, 3.0);
        LinOp u(sampling::random_unitary(rng, d));
        auto es = opcalc::eig_sorted(opcalc::synth(u, EigenTuple(t)));
        double dev = 0;
        for (int i = 0; i < d; ++i)
            dev = std::max(dev, std::abs(es.values[i] - t[static_cast<size_t>(i)]));
        rec.sample(dev / (1.0 + std::abs(t.back()) + std::abs(t.front())));
    }
    return rec.done();
}

CheckResult check_exp_log(const Options& opt) {
    Recorder rec("exp-log-roundtrip", opt.tol > 0 ? opt.tol : 1e-9);
    Rng rng(opt.seed ^ 0x23);
    for (long long n = 0; n < opt.samples; ++n) {
        int d = 1 + static_cast<int>(rng() % 6);
        HermitianOp a = sampling::random_hermitian(rng, d);
        rec.sample(entry_dev(opcalc::op_log(opcalc::op_exp(a)).matrix(), a.matrix()) /
                   (1.0 + a.matrix().norm()));
    }
    return rec.done();
}

CheckResult check_polar(const Options& opt) {
    Recorder rec("polar-identities", opt.tol > 0 ? opt.tol : 1e-9);
    Rng rng(opt.seed ^ 0x24);
    for (long long n = 0; n < opt.samples; ++n) {
        int d = 1 + static_cast<int>(rng() % 5);
        int m = d + static_cast<int>(rng() % 4);
        LinOp g(sampling::gaussian_matrix(rng, m, d));
        if (n % 4 == 0) {
            // plant a kernel
            Matrix gm = g.matrix();
            gm.col(0).setZero();
            g = LinOp(gm);
        }
        HermitianOp rho = opcalc::polar_rho(g);
        LinOp sigma = opcalc::polar_sigma(g);
        double scale = 1.0 + g.matrix().norm();
        double d1 = entry_dev(rho.matrix() * rho.matrix(), g.matrix().adjoint() * g.matrix());
        double d2 = entry_dev(sigma.matrix() * rho.matrix(), g.matrix());
        rec.sample(d1 / (scale * scale));
        rec.sample(d2 / scale);
        rec.expect(opcalc::numerical_rank(LinOp(rho.matrix())) == opcalc::numerical_rank(g));
    }
    return rec.done();
}

CheckResult check_applyA_basis_independence(const Options& opt) {
    Recorder rec("applyA-basis-independence", opt.tol > 0 ? opt.tol : 1e-8);
    Rng rng(opt.seed ^ 0x25);
    for (long long n = 0; n < opt.samples; ++n) {
        int d = 3 + static_cast<int>(rng() % 3);
        // plant a repeated eigenvalue
        auto eigs = sampling::sorted_spectrum(rng, d, -2.0, 2.0);
        eigs[1] = eigs[0];
        HermitianOp a = sampling::hermitian_with_spectrum(rng, eigs);
        // a unitary commuting with a: rotate inside the planted eigenspace
        auto es = opcalc::eig_sorted(a);
        Matrix u = Matrix::Identity(d, d);
        Matrix block = sampling::random_unitary(rng, 2);
        Matrix v01 = es.vectors.leftCols(2);
        u += v01 * (block - Matrix::Identity(2, 2)) * v01.adjoint();

        FacialMap f = sampling::random_facial_plain(rng);
        HermitianOp out = opcalc::apply_A(f, a).op;
        rec.sample(entry_dev(u * out.matrix() * u.adjoint(), out.matrix()) /
                   (1.0 + out.matrix().norm()));
    }
    return rec.done();
}

CheckResult check_applyAB_equivariance(const Options& opt) {
    Recorder rec("applyAB-equivariance", opt.tol > 0 ? opt.tol : 1e-8);
    Rng rng(opt.seed ^ 0x26);
    for (long long n = 0; n < opt.samples; ++n) {
        int d = 2 + static_cast<int>(rng() % 4);
        int m = d + static_cast<int>(rng() % 3);
        HermitianOp a = sampling::random_hermitian(rng, d);
        LinOp g = sampling::random_with_singulars(rng, m, d, 0.05, 3.0);
        Matrix u0 = sampling::random_unitary(rng, d);
        Matrix u1 = sampling::random_unitary(rng, m);

        FacialMap fp = sampling::random_facial_plain(rng);
        HermitianOp lhsA = opcalc::apply_A(fp, opcalc::conjugate(a, u0)).op;
        HermitianOp rhsA = opcalc::conjugate(opcalc::apply_A(fp, a).op, u0);
        rec.sample(entry_dev(lhsA.matrix(), rhsA.matrix()) / (1.0 + rhsA.matrix().norm()));

        FacialMap fq = facial::hat(sampling::random_facial_dplus2(rng), d);
        LinOp lhsB = opcalc::apply_B(fq, opcalc::conjugate(g, u0, u1)).hom;
        LinOp rhsB = opcalc::conjugate(opcalc::apply_B(fq, g).hom, u0, u1);
        rec.sample(entry_dev(lhsB.matrix(), rhsB.matrix()) / (1.0 + rhsB.matrix().norm()));
    }
    return rec.done();
}

CheckResult check_nu_mu_diagrams(const Options& opt) {
    // the quotient diagrams defining the calculus, as identities:
    //   apply_A(f, synth(u, t)) = synth(u, f(t))        (nu)
    //   apply_B(f, -theta a)    = -theta apply_A(f, a)  (mu), a >= 0
    Recorder rec("nu-mu-quotient-diagrams", opt.tol > 0 ? opt.tol : 1e-8);
    Rng rng(opt.seed ^ 0x2b);
    for (long long n = 0; n < opt.samples; ++n) {
        int d = 2 + static_cast<int>(rng() % 4);
        LinOp u(sampling::random_unitary(rng, d));
        auto t = sampling::sorted_spectrum(rng, d, -2.0, 2.0);
        FacialMap fp = sampling::random_facial_plain(rng);
        HermitianOp lhs = opcalc::apply_A(fp, opcalc::synth(u, EigenTuple(t))).op;
        HermitianOp rhs = opcalc::synth(u, fp(EigenTuple(t)));
        rec.sample(entry_dev(lhs.matrix(), rhs.matrix()) / (1.0 + rhs.matrix().norm()));

        int m = d + static_cast<int>(rng() % 3);
        LinOp theta = sampling::random_isometry(rng, m, d);
        auto spec = sampling::sorted_spectrum(rng, d, 0.0, 3.0);
        HermitianOp a = opcalc::synth(LinOp(sampling::random_unitary(rng, d)),
                                      EigenTuple(spec, TupleKind::nonneg));
        FacialMap fq = facial::hat(sampling::random_facial_dplus2(rng), d);
        LinOp lhsB = opcalc::apply_B(fq, LinOp(-theta.matrix() * a.matrix())).hom;
        LinOp rhsB(-theta.matrix() * opcalc::apply_A(fq, a).op.matrix());
        rec.sample(entry_dev(lhsB.matrix(), rhsB.matrix()) / (1.0 + rhsB.matrix().norm()));
    }
    return rec.done();
}

CheckResult check_applyB_square(const Options& opt) {
    Recorder rec("applyB-defining-square", opt.tol > 0 ? opt.tol : 1e-8);
    Rng rng(opt.seed ^ 0x27);
    for (long long n = 0; n < opt.samples; ++n) {
        int d = 2 + static_cast<int>(rng() % 4);
        int m = d + static_cast<int>(rng() % 3);
        LinOp g = sampling::random_with_singulars(rng, m, d, 0.0, 3.0);
        FacialMap f = facial::hat(sampling::random_facial_dplus2(rng), d);
        HermitianOp lhs = opcalc::polar_rho(opcalc::apply_B(f, g).hom);
        HermitianOp rhs = opcalc::apply_A(f, opcalc::polar_rho(g)).op;
        rec.sample(entry_dev(lhs.matrix(), rhs.matrix()) / (1.0 + rhs.matrix().norm()));
    }
    return rec.done();
}

CheckResult check_kappa(const Options& opt) {
    Recorder rec("kappa-roundtrip", opt.tol > 0 ? opt.tol : 1e-8);
    Rng rng(opt.seed ^ 0x28);
    for (long long n = 0; n < opt.samples; ++n) {
        int d = 1 + static_cast<int>(rng() % 5);
        int m = d + static_cast<int>(rng() % 4);
        HermitianOp a = sampling::random_hermitian(rng, d);
        LinOp theta = sampling::random_isometry(rng, m, d);
        auto back = opcalc::kappa_inv(opcalc::kappa(a, theta));
        double scale = 1.0 + a.matrix().norm();
        rec.sample(entry_dev(back.alpha.matrix(), a.matrix()) / scale);
        rec.sample(entry_dev(back.theta.matrix(), theta.matrix()));

        LinOp g = sampling::random_with_singulars(rng, m, d, 0.2, 3.0);
        auto ki = opcalc::kappa_inv(g);
        LinOp again = opcalc::kappa(ki.alpha, ki.theta);
        rec.sample(entry_dev(again.matrix(), g.matrix()) / (1.0 + g.matrix().norm()));
    }
    return rec.done();
}

CheckResult check_ndr_hom(const Options& opt) {
    Recorder rec("ndr-hom-axioms", opt.tol > 0 ? opt.tol : 1e-7);
    Rng rng(opt.seed ^ 0x29);
    long long n_ops = std::max<long long>(20, opt.samples / 10);
    for (long long n = 0; n < n_ops; ++n) {
        int d = 2 + static_cast<int>(rng() % 3);
        int m = d + static_cast<int>(rng() % 3);
        double t = sampling::uniform(rng, 0.0, 1.0);
        LinOp g = sampling::random_with_singulars(rng, m, d, 0.05, 2.0);
        double scale = 1.0 + g.matrix().norm();

        auto h1 = opcalc::ndr_hom(g, 1.0);
        rec.sample(entry_dev(h1.h.matrix(), g.matrix()) / scale <= 1e-9
                       ? 0.0 : entry_dev(h1.h.matrix(), g.matrix()) / scale);

        // non-injective operators are fixed and sit at u = 0
        LinOp gk = sampling::random_thom_point(rng, tower::ThomKind::J, d, m, d, true).gamma;
        auto hk = opcalc::ndr_hom(gk, t);
        double fix_dev = entry_dev(hk.h.matrix(), gk.matrix()) / (1.0 + gk.matrix().norm());
        rec.sample(fix_dev <= 1e-9 ? 0.0 : fix_dev);
        rec.sample(std::abs(hk.u));

        auto h0 = opcalc::ndr_hom(g, 0.0);
        if (h0.u < 1.0 - 1e-6)
            rec.sample(opcalc::smallest_singular(h0.h) / scale);
        if (h0.u <= 1e-12)
            rec.sample(opcalc::smallest_singular(g) / scale);
    }
    return rec.done();
}

CheckResult check_lambda(const Options& opt) {
    Recorder rec("lambda-rank", 0.0);
    Rng rng(opt.seed ^ 0x2a);
    for (long long n = 0; n < opt.samples; ++n) {
        int d = 2 + static_cast<int>(rng() % 5);
        int k = 1 + static_cast<int>(rng() % (d - 1));
        auto eigs = sampling::sorted_spectrum(rng, d, -2.0, 2.0, d - k - 1, 0.1);
        HermitianOp a = sampling::hermitian_with_spectrum(rng, eigs);
        HermitianOp lam = opcalc::lambda_k(a, k);
        auto es = opcalc::eig_sorted(lam);
        rec.expect(es.values.front() >= -1e-10);
        int rank = 0;
        for (int i = 0; i < d; ++i)
            if (es.values[i] > 1e-8) ++rank;
        rec.expect(rank == k);
        // degenerate spectrum collapses to zero
        HermitianOp c = HermitianOp::diagonal(std::vector<double>(static_cast<size_t>(d), 0.7));
        rec.expect(entry_dev(opcalc::lambda_k(c, k).matrix(), Matrix::Zero(d, d)) <= 1e-12);
    }
    return rec.done();
}

// ── tower ───────────────────────────────────────────────────────────────────

double tower_point_dev(const tower::TowerPoint& a, const tower::TowerPoint& b) {
    if (a.basepoint || b.basepoint)
        return (a.basepoint == b.basepoint) ? 0.0 : 1e300;
    double scale = 1.0 + a.alpha.matrix().norm();
    return std::max(entry_dev(a.alpha.matrix(), b.alpha.matrix()) / scale,
                    entry_dev(a.theta.matrix(), b.theta.matrix()));
}

double thom_point_dev(const tower::ThomPoint& a, const tower::ThomPoint& b) {
    if (a.basepoint || b.basepoint)
        return (a.basepoint == b.basepoint) ? 0.0 : 1e300;
    double d = entry_dev(a.W.projector, b.W.projector);
    d = std::max(d, entry_dev(a.gamma.matrix(), b.gamma.matrix()) /
                        (1.0 + b.gamma.matrix().norm()));
    d = std::max(d, entry_dev(a.psi.matrix(), b.psi.matrix()) / (1.0 + b.psi.matrix().norm()));
    if (a.suspension.has_value() != b.suspension.has_value()) return 1e300;
    if (a.suspension) d = std::max(d, std::abs(*a.suspension - *b.suspension));
    return d;
}

CheckResult check_qk_rk(const Options& opt) {
    Recorder rec("qk-rk-roundtrip", opt.tol > 0 ? opt.tol : 1e-8);
    Rng rng(opt.seed ^ 0x31);
    for (long long n = 0; n < opt.samples; ++n) {
        int d0 = 2 + static_cast<int>(rng() % 4);
        int k = 1 + static_cast<int>(rng() % (d0 - 1));
        int n1 = d0 + static_cast<int>(rng() % (9 - d0));
        tower::TowerPoint p = sampling::random_tower_point(rng, d0, n1, k);
        rec.sample(tower_point_dev(tower::rk_map(tower::qk_map(p)), p));

        tower::ThomPoint q = sampling::random_thom_point(rng, tower::ThomKind::I, d0, n1, k);
        rec.sample(thom_point_dev(tower::qk_map(tower::rk_map(q)), q));
    }
    return rec.done();
}

CheckResult check_fk_gk(const Options& opt) {
    Recorder rec("fk-gk-roundtrip", opt.tol > 0 ? opt.tol : 1e-8);
    Rng rng(opt.seed ^ 0x32);
    for (long long n = 0; n < opt.samples; ++n) {
        int d0 = 2 + static_cast<int>(rng() % 4);
        int k = 1 + static_cast<int>(rng() % (d0 - 1));
        int n1 = d0 + static_cast<int>(rng() % (9 - d0));
        tower::TowerPoint p0 = sampling::random_tower_point(rng, d0, n1, k);
        tower::TowerPoint p = tower::pi_k(p0);  // honest level k-1 point with a gap at k
        auto fk = tower::fk_map(p, k);
        rec.sample(tower_point_dev(tower::gk_map(fk.coordinate, fk.point), p));

        tower::ThomPoint q = sampling::random_thom_point(rng, tower::ThomKind::J, d0, n1, k);
        double t = sampling::uniform(rng, -1.0, 1.0);
        auto back = tower::fk_map(tower::gk_map(t, q), k);
        rec.sample(thom_point_dev(back.point, q));
        rec.sample(std::abs(back.coordinate - t));
    }
    return rec.done();
}

CheckResult check_tau_chi_square(const Options& opt) {
    Recorder rec("tau-chi-square", opt.tol > 0 ? opt.tol : 1e-8);
    Rng rng(opt.seed ^ 0x33);
    for (long long n = 0; n < opt.samples; ++n) {
        int d0 = 2 + static_cast<int>(rng() % 4);
        int n1 = d0 + static_cast<int>(rng() % 4);
        HermitianOp a = sampling::random_hermitian(rng, d0);
        LinOp theta = sampling::random_isometry(rng, n1, d0);
        tower::TowerPoint top = tower::sample_tower_point(a, theta, d0);
        auto lhs = tower::tau_map(tower::pi_k(top));
        auto rhs = tower::chi_map(opcalc::kappa(a, theta));
        rec.sample(std::abs(lhs.coordinate - rhs.coordinate));
        rec.sample(entry_dev(lhs.hom.matrix(), rhs.hom.matrix()) /
                   (1.0 + rhs.hom.matrix().norm()));
    }
    return rec.done();
}

CheckResult check_chi_is_applyB(const Options& opt) {
    Recorder rec("chi-is-applyB", opt.tol > 0 ? opt.tol : 1e-8);
    Rng rng(opt.seed ^ 0x34);
    FacialMap g = tower::chi_facial_map();
    for (long long n = 0; n < opt.samples; ++n) {
        int d = 2 + static_cast<int>(rng() % 4);
        int m = d + static_cast<int>(rng() % (9 - d));
        LinOp gamma = sampling::random_with_singulars(rng, m, d, 0.05, 3.0);
        auto lhs = tower::chi_map(gamma);
        auto rhs = opcalc::apply_B(g, gamma);
        rec.sample(std::abs(lhs.coordinate - *rhs.suspension));
        rec.sample(entry_dev(lhs.hom.matrix(), rhs.hom.matrix()) /
                   (1.0 + lhs.hom.matrix().norm()));
    }
    return rec.done();
}

CheckResult check_phik_is_applyC(const Options& opt) {
    Recorder rec("phik-is-applyC", opt.tol > 0 ? opt.tol : 1e-8);
    Rng rng(opt.seed ^ 0x35);
    for (long long n = 0; n < opt.samples; ++n) {
        int d0 = 2 + static_cast<int>(rng() % 4);
        int k = 1 + static_cast<int>(rng() % d0);
        int n1 = d0 + static_cast<int>(rng() % (9 - d0));
        tower::ThomPoint q = sampling::random_thom_point(rng, tower::ThomKind::Z, d0, n1, k);
        tower::TowerPoint lhs = tower::phi_k(q);
        tower::TowerPoint rhs = tower::apply_C(tower::canonical_smash(d0, k), q);
        rec.sample(tower_point_dev(lhs, rhs));
    }
    return rec.done();
}

CheckResult check_delta_collapse(const Options& opt) {
    Recorder rec("deltak-collapse", 0.0);
    Rng rng(opt.seed ^ 0x36);
    for (long long n = 0; n < opt.samples; ++n) {
        int d0 = 2 + static_cast<int>(rng() % 4);
        int k = 1 + static_cast<int>(rng() % (d0 - 1));
        int n1 = d0 + 2;
        // strict gap: delta lands off the basepoint with suspension -e_{d0-k}
        tower::TowerPoint p = tower::pi_k(sampling::random_tower_point(rng, d0, n1, k));
        auto es = opcalc::eig_sorted(p.alpha);
        tower::ThomPoint q = tower::delta_k(p, k);
        rec.expect(!q.basepoint);
        if (!q.basepoint && q.suspension)
            rec.expect(std::abs(*q.suspension + es.values[d0 - k]) <= 1e-10);
        // tie: collapse to the basepoint
        auto eigs = sampling::sorted_spectrum(rng, d0, -2.0, 2.0);
        eigs[static_cast<size_t>(d0 - k)] = eigs[static_cast<size_t>(d0 - k - 1)];
        HermitianOp a_tied = sampling::hermitian_with_spectrum(rng, eigs);
        tower::TowerPoint p_tied =
            tower::sample_tower_point(a_tied, sampling::random_isometry(rng, n1, d0), k - 1);
        rec.expect(tower::delta_k(p_tied, k).basepoint);
        rec.expect(tower::delta_k(tower::TowerPoint::base(k - 1), k).basepoint);
    }
    return rec.done();
}

tower::TowerPoint conj_tower(const tower::TowerPoint& p, const Matrix& u0, const Matrix& u1) {
    if (p.basepoint) return p;
    return tower::make_tower_point(p.level, opcalc::conjugate(p.alpha, u0),
                                   opcalc::conjugate(p.theta, u0, u1));
}

tower::ThomPoint conj_thom(const tower::ThomPoint& q, const Matrix& u0, const Matrix& u1) {
    if (q.basepoint) return q;
    tower::GrassPoint w = tower::grass_from_projector(u0 * q.W.projector * u0.adjoint());
    return tower::make_thom_point(q.kind, std::move(w), opcalc::conjugate(q.gamma, u0, u1),
                                  opcalc::conjugate(q.psi, u0), q.suspension);
}

CheckResult check_tower_equivariance(const Options& opt) {
    Recorder rec("tower-equivariance", opt.tol > 0 ? opt.tol : 1e-8);
    Rng rng(opt.seed ^ 0x37);
    long long trials = std::max<long long>(25, opt.samples / 4);
    for (long long n = 0; n < trials; ++n) {
        int d0 = 2 + static_cast<int>(rng() % 4);
        int k = 1 + static_cast<int>(rng() % (d0 - 1));
        int n1 = d0 + static_cast<int>(rng() % (9 - d0));
        Matrix u0 = sampling::random_unitary(rng, d0);
        Matrix u1 = sampling::random_unitary(rng, n1);

        tower::TowerPoint p = sampling::random_tower_point(rng, d0, n1, k);
        rec.sample(tower_point_dev(tower::pi_k(conj_tower(p, u0, u1)),
                                   conj_tower(tower::pi_k(p), u0, u1)));
        rec.sample(thom_point_dev(tower::qk_map(conj_tower(p, u0, u1)),
                                  conj_thom(tower::qk_map(p), u0, u1)));

        tower::TowerPoint pk1 = tower::pi_k(p);
        auto fk_c = tower::fk_map(conj_tower(pk1, u0, u1), k);
        auto fk_p = tower::fk_map(pk1, k);
        rec.sample(std::abs(fk_c.coordinate - fk_p.coordinate));
        rec.sample(thom_point_dev(fk_c.point, conj_thom(fk_p.point, u0, u1)));
        rec.sample(thom_point_dev(tower::delta_k(conj_tower(pk1, u0, u1), k),
                                  conj_thom(tower::delta_k(pk1, k), u0, u1)));

        tower::ThomPoint qi = sampling::random_thom_point(rng, tower::ThomKind::I, d0, n1, k);
        rec.sample(tower_point_dev(tower::rk_map(conj_thom(qi, u0, u1)),
                                   conj_tower(tower::rk_map(qi), u0, u1)));

        tower::ThomPoint qz = sampling::random_thom_point(rng, tower::ThomKind::Z, d0, n1, k);
        rec.sample(tower_point_dev(tower::phi_k(conj_thom(qz, u0, u1)),
                                   conj_tower(tower::phi_k(qz), u0, u1)));

        tower::ThomPoint qj = sampling::random_thom_point(rng, tower::ThomKind::J, d0, n1, k);
        double t = sampling::uniform(rng, -1.0, 1.0);
        rec.sample(tower_point_dev(tower::gk_map(t, conj_thom(qj, u0, u1)),
                                   conj_tower(tower::gk_map(t, qj), u0, u1)));

        // top-level data through tau/chi/kappa
        HermitianOp a = sampling::random_hermitian(rng, d0);
        LinOp th = sampling::random_isometry(rng, n1, d0);
        auto tau_c = tower::tau_map(tower::pi_k(
            tower::sample_tower_point(opcalc::conjugate(a, u0), LinOp(u1 * th.matrix() * u0.adjoint()), d0)));
        auto tau_p = tower::tau_map(tower::pi_k(tower::sample_tower_point(a, th, d0)));
        rec.sample(std::abs(tau_c.coordinate - tau_p.coordinate));
        rec.sample(entry_dev(tau_c.hom.matrix(), u1 * tau_p.hom.matrix() * u0.adjoint()) /
                   (1.0 + tau_p.hom.matrix().norm()));
    }
    return rec.done();
}

CheckResult check_tower_invariants(const Options& opt) {
    Recorder rec("tower-point-invariants", opt.tol > 0 ? opt.tol : 1e-8);
    Rng rng(opt.seed ^ 0x38);
    for (long long n = 0; n < opt.samples; ++n) {
        int d0 = 2 + static_cast<int>(rng() % 4);
        int k = 1 + static_cast<int>(rng() % (d0 - 1));
        int n1 = d0 + static_cast<int>(rng() % (9 - d0));
        tower::TowerPoint p = sampling::random_tower_point(rng, d0, n1, k);
        auto c1 = tower::check_tower_point(p);
        rec.sample(std::max(c1.support_dev, c1.embed_dev));
        auto c2 = tower::check_tower_point(tower::pi_k(p));
        rec.sample(std::max(c2.support_dev, c2.embed_dev));
        auto c3 = tower::check_tower_point(
            tower::rk_map(sampling::random_thom_point(rng, tower::ThomKind::I, d0, n1, k)));
        rec.sample(std::max(c3.support_dev, c3.embed_dev));
        auto c4 = tower::check_tower_point(
            tower::phi_k(sampling::random_thom_point(rng, tower::ThomKind::Z, d0, n1, k)));
        rec.sample(std::max(c4.support_dev, c4.embed_dev));
    }
    return rec.done();
}

CheckResult check_pk(const Options& opt) {
    Recorder rec("pk-projector", opt.tol > 0 ? opt.tol : 1e-9);
    Rng rng(opt.seed ^ 0x39);
    for (long long n = 0; n < opt.samples; ++n) {
        int d0 = 2 + static_cast<int>(rng() % 5);
        int k = 1 + static_cast<int>(rng() % (d0 - 1));
        auto eigs = sampling::sorted_spectrum(rng, d0, -2.0, 2.0, d0 - k - 1, 0.1);
        HermitianOp a = sampling::hermitian_with_spectrum(rng, eigs);
        auto pk = tower::pk_projector(a, k);
        rec.expect(!pk.under_rank && pk.grass.rank == k);

        // cross-check against the midpoint positive-part indicator
        double mid = 0.5 * (eigs[static_cast<size_t>(d0 - k - 1)] + eigs[static_cast<size_t>(d0 - k)]);
        auto es = opcalc::eig_sorted(a);
        Matrix indicator = Matrix::Zero(d0, d0);
        for (int i = 0; i < d0; ++i)
            if (es.values[i] > mid)
                indicator += es.vectors.col(i) * es.vectors.col(i).adjoint();
        rec.sample(entry_dev(pk.grass.projector, indicator));

        rec.expect(tower::pk_projector(a, 0).grass.rank == 0);
        rec.expect(tower::pk_projector(a, d0).grass.rank == d0);
        // identity spectrum: everything ties, rank collapses to zero
        HermitianOp id = HermitianOp::identity(d0);
        auto under = tower::pk_projector(id, k);
        rec.expect(under.under_rank && under.grass.rank == 0);
    }
    return rec.done();
}

CheckResult check_pi_compose(const Options& opt) {
    Recorder rec("pi-compose-sample", opt.tol > 0 ? opt.tol : 1e-9);
    Rng rng(opt.seed ^ 0x3a);
    for (long long n = 0; n < opt.samples; ++n) {
        int d0 = 2 + static_cast<int>(rng() % 4);
        int n1 = d0 + 2;
        int k = 1 + static_cast<int>(rng() % d0);
        auto eigs = sampling::sorted_spectrum(rng, d0, -2.0, 2.0, std::max(0, d0 - k), 0.1);
        HermitianOp a = sampling::hermitian_with_spectrum(rng, eigs);
        LinOp th = sampling::random_isometry(rng, n1, d0);
        tower::TowerPoint via_pi = tower::pi_k(tower::sample_tower_point(a, th, k));
        tower::TowerPoint direct = tower::sample_tower_point(a, th, k - 1);
        rec.sample(tower_point_dev(via_pi, direct));
    }
    return rec.done();
}

CheckResult check_miller_rank(const Options& opt) {
    Recorder rec("miller-rank", 0.0);
    Rng rng(opt.seed ^ 0x3b);
    for (long long n = 0; n < std::max<long long>(50, opt.samples / 4); ++n) {
        int d0 = 2 + static_cast<int>(rng() % 4);
        int n1 = d0 + 1 + static_cast<int>(rng() % 3);
        Matrix incl = Matrix::Zero(n1, d0);
        incl.topRows(d0) = Matrix::Identity(d0, d0);
        rec.expect(tower::miller_rank(LinOp(incl), LinOp(incl)) == 0);

        Matrix flip = Matrix::Identity(d0, d0);
        flip(0, 0) = -1.0;
        rec.expect(tower::miller_rank(LinOp(incl * flip), LinOp(incl)) == 1);

        LinOp generic = sampling::random_isometry(rng, n1, d0);
        rec.expect(tower::miller_rank(generic, LinOp(incl)) <= d0);
    }
    return rec.done();
}

// ── kresidue ────────────────────────────────────────────────────────────────

using kresidue::KPolynomial;
using kresidue::RepRingElem;
using kresidue::Representation;

KPolynomial product_form(const Representation& v) {
    KPolynomial f = KPolynomial::one(v.group);
    for (const auto& line : v.characters) {
        KPolynomial factor(v.group, {RepRingElem::character(v.group, line).scaled(-1),
                                     RepRingElem::one(v.group)});
        f = f * factor;
    }
    return f;
}

CheckResult check_fv_product(const Options& opt) {
    Recorder rec("fv-product-form", 0.0);
    Rng rng(opt.seed ^ 0x41);
    long long trials = std::max<long long>(40, opt.samples / 8);
    for (long long n = 0; n < trials; ++n) {
        auto g = sampling::random_group(rng, 3, 12, 2);
        auto v = sampling::random_representation(rng, g, static_cast<int>(rng() % 7));
        rec.expect(kresidue::k_polynomial(v) == product_form(v));
    }
    return rec.done();
}

CheckResult check_gysin_delta(const Options& opt) {
    Recorder rec("gysin-residue-delta", 0.0);
    Rng rng(opt.seed ^ 0x42);
    long long trials = std::max<long long>(40, opt.samples / 8);
    for (long long n = 0; n < trials; ++n) {
        auto g = sampling::random_group(rng, 3, 12, 2);
        int d = 1 + static_cast<int>(rng() % 6);
        auto v = sampling::random_representation(rng, g, d);
        auto r = kresidue::gysin_values(v);
        for (int i = 0; i < d; ++i) {
            if (i == d - 1) rec.expect(r[static_cast<size_t>(i)].is_one());
            else rec.expect(r[static_cast<size_t>(i)].is_zero());
        }
        rec.expect(kresidue::normalization_identity_holds(v));
    }
    return rec.done();
}

CheckResult check_residue_linearity(const Options& opt) {
    Recorder rec("residue-linearity", 0.0);
    Rng rng(opt.seed ^ 0x43);
    long long trials = std::max<long long>(40, opt.samples / 8);
    for (long long n = 0; n < trials; ++n) {
        auto g = sampling::random_group(rng, 2, 8, 1);
        int d = 1 + static_cast<int>(rng() % 4);
        auto v = sampling::random_representation(rng, g, d);
        KPolynomial f = kresidue::k_polynomial(v);

        auto rand_poly = [&](int deg) {
            KPolynomial p = KPolynomial::zero(g);
            for (int i = 0; i <= deg; ++i) {
                auto w = sampling::random_representation(rng, g, 1);
                long long c = static_cast<long long>(rng() % 7) - 3;
                p += KPolynomial::monomial(
                    g, RepRingElem::character(g, w.characters[0]).scaled(c), i);
            }
            return p;
        };
        KPolynomial g1 = rand_poly(d + 1), g2 = rand_poly(d);
        RepRingElem a = RepRingElem::character(g, sampling::random_representation(rng, g, 1).characters[0]);
        KPolynomial combo = KPolynomial::monomial(g, a, 0) * g1 + g2;
        RepRingElem lhs = kresidue::residue(combo, f);
        RepRingElem rhs = a * kresidue::residue(g1, f) + kresidue::residue(g2, f);
        rec.expect(lhs == rhs);
        rec.expect(kresidue::residue(g1 * f, f).is_zero());
    }
    return rec.done();
}

void enumerate_multisets(int n_chars, int max_dim, std::vector<std::vector<int>>& out) {
    std::vector<int> cur;
    std::function<void(int, int)> go = [&](int start, int left) {
        out.push_back(cur);
        if (left == 0) return;
        for (int c = start; c < n_chars; ++c) {
            cur.push_back(c);
            go(c, left - 1);
            cur.pop_back();
        }
    };
    go(0, max_dim);
}

CheckResult check_divides_iff_subrep(const Options&) {
    Recorder rec("divides-iff-subrep", 0.0);
    for (long long nn = 1; nn <= 6; ++nn) {
        kresidue::AbelianGroupSpec g{{nn}, 0};
        std::vector<std::vector<int>> multisets;
        enumerate_multisets(static_cast<int>(nn), 3, multisets);
        std::vector<Representation> reps;
        for (const auto& ms : multisets) {
            Representation v{g, {}};
            for (int c : ms) v.characters.push_back({static_cast<long long>(c)});
            reps.push_back(std::move(v));
        }
        for (const auto& v0 : reps) {
            KPolynomial f0 = kresidue::k_polynomial(v0);
            for (const auto& v1 : reps) {
                bool div = kresidue::divides(f0, kresidue::k_polynomial(v1)).divides;
                bool sub = kresidue::submultiset(v0, v1);
                rec.expect(div == sub);
            }
        }
    }
    return rec.done();
}

CheckResult check_diagonal_class(const Options& opt) {
    Recorder rec("diagonal-class-identity", 0.0);
    Rng rng(opt.seed ^ 0x44);
    long long trials = std::max<long long>(30, opt.samples / 10);
    for (long long n = 0; n < trials; ++n) {
        auto g = sampling::random_group(rng, 2, 9, 1);
        int d = 1 + static_cast<int>(rng() % 5);
        auto v = sampling::random_representation(rng, g, d);
        KPolynomial f = kresidue::k_polynomial(v);
        auto e = kresidue::diagonal_class(v);

        // (z - w) e as a bivariate coefficient table, compared with f(z) - f(w)
        std::map<std::pair<int, int>, RepRingElem> lhs;
        auto add = [&](int i, int j, const RepRingElem& c) {
            auto key = std::make_pair(i, j);
            auto it = lhs.find(key);
            if (it == lhs.end()) lhs.emplace(key, c);
            else it->second += c;
        };
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                const RepRingElem& c = e.coeffs[static_cast<size_t>(i)][static_cast<size_t>(j)];
                if (c.is_zero()) continue;
                add(i + 1, j, c);
                add(i, j + 1, -c);
            }
        std::map<std::pair<int, int>, RepRingElem> rhs;
        for (int i = 0; i <= d; ++i) {
            RepRingElem c = f.coeff(i);
            if (c.is_zero()) continue;
            rhs[{i, 0}] = c;
            auto it = rhs.find({0, i});
            if (it == rhs.end()) rhs[{0, i}] = -c;
            else it->second += -c;
        }
        bool equal = true;
        for (const auto& [k, c] : lhs)
            if (!c.is_zero()) {
                auto it = rhs.find(k);
                if (it == rhs.end() || !(it->second == c)) equal = false;
            }
        for (const auto& [k, c] : rhs)
            if (!c.is_zero()) {
                auto it = lhs.find(k);
                if (it == lhs.end() || !(it->second == c)) equal = false;
            }
        rec.expect(equal);
    }
    return rec.done();
}

CheckResult check_obstruction_examples(const Options&) {
    Recorder rec("obstruction-examples", 0.0);
    kresidue::AbelianGroupSpec c2{{2}, 0};
    Representation trivial{c2, {{0}}};
    Representation sign{c2, {{1}}};
    Representation both{c2, {{0}, {1}}};

    auto v1 = kresidue::obstruction_check(trivial, sign);
    rec.expect(!v1.divides && !v1.subrepresentation);
    RepRingElem expected = RepRingElem::one(c2) - RepRingElem::character(c2, {1});
    rec.expect(v1.residues.size() == 1 && v1.residues[0] == expected);

    auto v2 = kresidue::obstruction_check(trivial, both);
    rec.expect(v2.divides && v2.subrepresentation && v2.residues[0].is_zero());

    auto v3 = kresidue::obstruction_check(both, both);
    rec.expect(v3.divides && v3.subrepresentation);
    return rec.done();
}

} // namespace

std::vector<CheckResult> run_facial(const Options& opt) {
    return {check_hat_d2(opt),        check_conformal(opt),      check_conformal_modulus(opt),
            check_ndr_halfdisc(opt),  check_ndr_dplus2(opt),     check_degree_homomorphism(opt),
            check_collapse_roundtrip(opt), check_builtin_degrees(opt), check_verify_facial(opt)};
}

std::vector<CheckResult> run_opcalc(const Options& opt) {
    return {check_synth_eig(opt),   check_eig_of_synth(opt), check_exp_log(opt),
            check_polar(opt),       check_lambda(opt),       check_applyA_basis_independence(opt),
            check_applyAB_equivariance(opt), check_nu_mu_diagrams(opt), check_applyB_square(opt),
            check_kappa(opt),       check_ndr_hom(opt)};
}

std::vector<CheckResult> run_tower(const Options& opt) {
    return {check_qk_rk(opt),         check_fk_gk(opt),        check_tau_chi_square(opt),
            check_chi_is_applyB(opt), check_phik_is_applyC(opt), check_delta_collapse(opt),
            check_tower_equivariance(opt), check_tower_invariants(opt), check_pk(opt),
            check_pi_compose(opt),    check_miller_rank(opt)};
}

std::vector<CheckResult> run_kresidue(const Options& opt) {
    return {check_fv_product(opt),        check_gysin_delta(opt),
            check_residue_linearity(opt), check_divides_iff_subrep(opt),
            check_diagonal_class(opt),    check_obstruction_examples(opt)};
}

std::vector<CheckResult> run_suite(const std::string& suite, const Options& opt) {
    if (suite == "facial") return run_facial(opt);
    if (suite == "opcalc") return run_opcalc(opt);
    if (suite == "tower") return run_tower(opt);
    if (suite == "kresidue") return run_kresidue(opt);
    if (suite == "all") {
        std::vector<CheckResult> all;
        for (const auto* s : {"facial", "opcalc", "tower", "kresidue"}) {
            auto part = run_suite(s, opt);
            all.insert(all.end(), part.begin(), part.end());
        }
        return all;
    }
    throw std::invalid_argument("unknown suite '" + suite +
                                "' (expected all|facial|opcalc|tower|kresidue)");
}

} // namespace isotower::selftest
