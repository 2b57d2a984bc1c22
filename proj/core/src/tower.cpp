#include "isotower/tower.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <stdexcept>

namespace isotower::tower {

using facial::EigenTuple;
using facial::TupleKind;
using opcalc::eig_sorted;
using opcalc::EigenSystem;
using opcalc::svd_ascending;

namespace {

GrassPoint grass_from_columns(const Matrix& all_vectors, int first_selected) {
    const int d0 = static_cast<int>(all_vectors.rows());
    const int rank = d0 - first_selected;
    GrassPoint w;
    w.rank = rank;
    w.basis = all_vectors.rightCols(rank);
    w.basis_perp = all_vectors.leftCols(first_selected);
    w.projector = w.basis * w.basis.adjoint();
    return w;
}

void require_not_basepoint(const TowerPoint& p, const char* who) {
    if (p.basepoint) throw std::invalid_argument(std::string(who) + ": basepoint input");
}

void require_not_basepoint(const ThomPoint& q, const char* who) {
    if (q.basepoint) throw std::invalid_argument(std::string(who) + ": basepoint input");
}

// gamma restricted to W, as a dim_out x rank matrix in W's chosen basis.
Matrix restrict_to_w(const LinOp& gamma, const GrassPoint& w) {
    return gamma.matrix() * w.basis;
}

Matrix psi_block(const HermitianOp& psi, const GrassPoint& w) {
    return w.basis_perp.adjoint() * psi.matrix() * w.basis_perp;
}

// Exp(-psi) on W^perp, embedded full-size (zero on W).
Matrix exp_minus_psi_on_perp(const HermitianOp& psi, const GrassPoint& w) {
    if (w.basis_perp.cols() == 0) return Matrix::Zero(w.ambient_dim(), w.ambient_dim());
    Eigen::SelfAdjointEigenSolver<Matrix> es(psi_block(psi, w));
    Matrix d = Matrix::Zero(es.eigenvalues().size(), es.eigenvalues().size());
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i)
        d(i, i) = std::exp(-es.eigenvalues()(i));
    Matrix block = es.eigenvectors() * d * es.eigenvectors().adjoint();
    return w.basis_perp * block * w.basis_perp.adjoint();
}

} // namespace

GrassPoint grass_from_projector(const Matrix& projector) {
    if (projector.rows() != projector.cols())
        throw std::invalid_argument("grass_from_projector: projector must be square");
    double scale = 1.0 + projector.norm();
    if ((projector - projector.adjoint()).norm() > 1e-8 * scale ||
        (projector * projector - projector).norm() > 1e-8 * scale)
        throw std::invalid_argument("grass_from_projector: matrix is not an orthogonal projector");
    Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (projector + projector.adjoint().eval()));
    int first = 0;
    while (first < es.eigenvalues().size() && es.eigenvalues()(first) < 0.5) ++first;
    return grass_from_columns(es.eigenvectors(), first);
}

PkResult pk_projector(const HermitianOp& alpha, int k) {
    const int d0 = alpha.dim();
    if (k < 0 || k > d0) throw std::out_of_range("pk_projector: k out of range");
    EigenSystem es = eig_sorted(alpha);
    if (k == d0) return PkResult{grass_from_columns(es.vectors, 0), false};
    if (k == 0) return PkResult{grass_from_columns(es.vectors, d0), false};
    const auto& e = es.values.entries();
    double tie = opcalc::tie_tolerance(e);
    double thresh = e[static_cast<size_t>(d0 - k - 1)];
    int first = 0;
    while (first < d0 && e[static_cast<size_t>(first)] <= thresh + tie) ++first;
    GrassPoint w = grass_from_columns(es.vectors, first);
    return PkResult{w, w.rank != k};
}

TowerPoint TowerPoint::base(int level) {
    TowerPoint p;
    p.level = level;
    p.basepoint = true;
    return p;
}

TowerPoint make_tower_point(int level, HermitianOp alpha, LinOp theta) {
    if (level < 0 || level > alpha.dim())
        throw std::out_of_range("make_tower_point: level out of range");
    if (theta.dim_in() != alpha.dim())
        throw std::invalid_argument("make_tower_point: theta domain must be V0");
    TowerPoint p;
    p.level = level;
    p.alpha = std::move(alpha);
    p.theta = std::move(theta);
    return p;
}

TowerPoint sample_tower_point(const HermitianOp& alpha, const LinOp& theta_full, int k) {
    opcalc::require_isometry(theta_full, "sample_tower_point");
    PkResult pk = pk_projector(alpha, k);
    return make_tower_point(k, alpha, LinOp(theta_full.matrix() * pk.grass.projector));
}

TowerPoint pi_k(const TowerPoint& p) {
    if (p.basepoint) return TowerPoint::base(p.level - 1);
    if (p.level < 1) throw std::out_of_range("pi_k: already at the bottom of the tower");
    PkResult pk = pk_projector(p.alpha, p.level - 1);
    return make_tower_point(p.level - 1, p.alpha, LinOp(p.theta.matrix() * pk.grass.projector));
}

ThomPoint ThomPoint::base(ThomKind kind) {
    ThomPoint q;
    q.kind = kind;
    q.basepoint = true;
    return q;
}

ThomPoint make_thom_point(ThomKind kind, GrassPoint W, LinOp gamma, HermitianOp psi,
                          std::optional<double> suspension) {
    const int d0 = W.ambient_dim();
    if (gamma.dim_in() != d0 || psi.dim() != d0)
        throw std::invalid_argument("make_thom_point: dimension mismatch");
    double scale = 1.0 + gamma.matrix().norm() + psi.matrix().norm();
    Matrix perp = Matrix::Identity(d0, d0) - W.projector;
    if ((gamma.matrix() * perp).norm() > 1e-7 * scale)
        throw std::invalid_argument("make_thom_point: gamma is not supported on W");
    if ((psi.matrix() * W.projector).norm() > 1e-7 * scale)
        throw std::invalid_argument("make_thom_point: psi is not supported on W^perp");
    ThomPoint q;
    q.kind = kind;
    q.W = std::move(W);
    q.gamma = std::move(gamma);
    q.psi = std::move(psi);
    q.suspension = suspension;
    return q;
}

SuspendedHom tau_map(const TowerPoint& p) {
    if (p.basepoint) return SuspendedHom{true, 0.0, LinOp()};
    const int d0 = p.alpha.dim();
    if (p.level != d0 - 1)
        throw std::invalid_argument("tau_map: defined at level d0-1 only");
    EigenSystem es = eig_sorted(p.alpha);
    double e0 = es.values.front();
    Matrix shifted = p.alpha.matrix() - e0 * Matrix::Identity(d0, d0);
    return SuspendedHom{false, e0, LinOp(-p.theta.matrix() * shifted)};
}

SuspendedHom chi_map(const LinOp& gamma) {
    if (opcalc::smallest_singular(gamma) <= opcalc::rank_tolerance(gamma))
        throw std::domain_error("chi_map: operator is not injective");
    HermitianOp logrho = opcalc::op_log(opcalc::polar_rho(gamma));
    EigenSystem es = eig_sorted(logrho);
    double e0 = es.values.front();
    Matrix shifted = logrho.matrix() - e0 * Matrix::Identity(logrho.dim(), logrho.dim());
    LinOp sigma = opcalc::polar_sigma(gamma);
    return SuspendedHom{false, e0, LinOp(sigma.matrix() * shifted)};
}

facial::FacialMap chi_facial_map() {
    return facial::FacialMap(0, TupleKind::nonneg,
        [](const EigenTuple& p) -> facial::FacialImage {
            if (p.front() <= 0.0) return {EigenTuple::infinity(TupleKind::zero_based), std::nullopt};
            double l0 = std::log(p.front());
            std::vector<double> v(static_cast<size_t>(p.dim()));
            v[0] = 0.0;
            for (int i = 1; i < p.dim(); ++i) v[static_cast<size_t>(i)] = std::log(p[i]) - l0;
            return {EigenTuple(std::move(v), TupleKind::zero_based), l0};
        },
        "log-rebase");
}

ThomPoint qk_map(const TowerPoint& p) {
    require_not_basepoint(p, "qk_map");
    const int d0 = p.alpha.dim();
    const int k = p.level;
    if (k < 1 || k > d0 - 1) throw std::out_of_range("qk_map: need 1 <= level <= d0-1");
    EigenSystem es = eig_sorted(p.alpha);
    const auto& e = es.values.entries();
    double tie = opcalc::tie_tolerance(e);
    double upper = e[static_cast<size_t>(d0 - k)];
    if (upper - e[static_cast<size_t>(d0 - k - 1)] <= tie)
        throw std::domain_error("qk_map: degenerate spectral gap (point of Y_k)");
    GrassPoint w = grass_from_columns(es.vectors, d0 - k);

    Matrix expw = Matrix::Zero(d0, d0);
    Matrix psi = Matrix::Zero(d0, d0);
    for (int i = 0; i < d0; ++i) {
        auto v = es.vectors.col(i);
        if (i >= d0 - k)
            expw += std::exp(e[static_cast<size_t>(i)]) * (v * v.adjoint());
        else
            psi += -std::log(upper - e[static_cast<size_t>(i)]) * (v * v.adjoint());
    }
    return make_thom_point(ThomKind::I, std::move(w), LinOp(-p.theta.matrix() * expw),
                           HermitianOp(psi));
}

TowerPoint rk_map(const ThomPoint& q) {
    require_not_basepoint(q, "rk_map");
    if (q.kind != ThomKind::I)
        throw std::invalid_argument("rk_map: expects a kind-I Thom point");
    const int d0 = q.W.ambient_dim();
    const int k = q.W.rank;
    LinOp gamma_w(restrict_to_w(q.gamma, q.W));
    double smin = opcalc::smallest_singular(gamma_w);
    if (smin <= opcalc::rank_tolerance(gamma_w))
        throw std::domain_error("rk_map: gamma is not injective on W");

    HermitianOp logrho_w = opcalc::op_log(opcalc::polar_rho(gamma_w));
    Matrix perp_proj = Matrix::Identity(d0, d0) - q.W.projector;
    Matrix alpha = std::log(smin) * perp_proj - exp_minus_psi_on_perp(q.psi, q.W) +
                   q.W.basis * logrho_w.matrix() * q.W.basis.adjoint();
    LinOp theta(-opcalc::polar_sigma(q.gamma).matrix());
    return make_tower_point(k, HermitianOp(std::move(alpha)), std::move(theta));
}

FkValue fk_map(const TowerPoint& p, int k) {
    require_not_basepoint(p, "fk_map");
    const int d0 = p.alpha.dim();
    if (k < 1 || k > d0 - 1) throw std::out_of_range("fk_map: need 1 <= k <= d0-1");
    if (p.level != k - 1)
        throw std::invalid_argument("fk_map: point must live at level k-1");
    EigenSystem es = eig_sorted(p.alpha);
    const auto& e = es.values.entries();
    double tie = opcalc::tie_tolerance(e);
    double t = e[static_cast<size_t>(d0 - k)];
    if (t - e[static_cast<size_t>(d0 - k - 1)] <= tie)
        throw std::domain_error("fk_map: degenerate spectral gap (point of Y_k)");
    GrassPoint w = grass_from_columns(es.vectors, d0 - k);

    Matrix lam = Matrix::Zero(d0, d0);
    Matrix psi = Matrix::Zero(d0, d0);
    for (int i = 0; i < d0; ++i) {
        auto v = es.vectors.col(i);
        if (i >= d0 - k)
            lam += std::max(e[static_cast<size_t>(i)] - t, 0.0) * (v * v.adjoint());
        else
            psi += -std::log(t - e[static_cast<size_t>(i)]) * (v * v.adjoint());
    }
    ThomPoint q = make_thom_point(ThomKind::J, std::move(w), LinOp(-p.theta.matrix() * lam),
                                  HermitianOp(psi));
    return FkValue{t, std::move(q)};
}

TowerPoint gk_map(double t, const ThomPoint& q) {
    require_not_basepoint(q, "gk_map");
    if (q.kind != ThomKind::J)
        throw std::invalid_argument("gk_map: expects a kind-J Thom point");
    const int d0 = q.W.ambient_dim();
    const int k = q.W.rank;
    LinOp delta_w(restrict_to_w(q.gamma, q.W));
    if (opcalc::smallest_singular(delta_w) > opcalc::rank_tolerance(delta_w))
        throw std::domain_error("gk_map: delta must be non-injective on W");

    Matrix perp_proj = Matrix::Identity(d0, d0) - q.W.projector;
    Matrix alpha = t * perp_proj - exp_minus_psi_on_perp(q.psi, q.W) +
                   opcalc::polar_rho(q.gamma).matrix() + t * q.W.projector;
    LinOp theta(-opcalc::polar_sigma(q.gamma).matrix());
    return make_tower_point(k - 1, HermitianOp(std::move(alpha)), std::move(theta));
}

ThomPoint delta_k(const TowerPoint& p, int k) {
    if (p.basepoint) return ThomPoint::base(ThomKind::Z);
    const int d0 = p.alpha.dim();
    if (k < 1 || k > d0 - 1) throw std::out_of_range("delta_k: need 1 <= k <= d0-1");
    EigenSystem es = eig_sorted(p.alpha);
    const auto& e = es.values.entries();
    double tie = opcalc::tie_tolerance(e);
    if (e[static_cast<size_t>(d0 - k)] - e[static_cast<size_t>(d0 - k - 1)] <= tie)
        return ThomPoint::base(ThomKind::Z);  // collapse of Y_k
    FkValue fk = fk_map(p, k);
    ThomPoint q = std::move(fk.point);
    q.kind = ThomKind::Z;
    q.suspension = -fk.coordinate;  // the -Sigma twist negates the coordinate
    return q;
}

TowerPoint phi_k(const ThomPoint& q) {
    const int k = q.basepoint ? 0 : q.W.rank;
    if (q.basepoint) return TowerPoint::base(k);
    if (q.kind != ThomKind::Z)
        throw std::invalid_argument("phi_k: expects a kind-Z Thom point");
    const int d0 = q.W.ambient_dim();
    LinOp gamma_w(restrict_to_w(q.gamma, q.W));
    if (k == 0 || opcalc::smallest_singular(gamma_w) <= opcalc::rank_tolerance(gamma_w))
        return TowerPoint::base(k);  // the unbased map is proper; extend by the basepoint

    double etop = 0.0;
    if (q.W.basis_perp.cols() > 0) {
        Eigen::SelfAdjointEigenSolver<Matrix> es(psi_block(q.psi, q.W));
        etop = es.eigenvalues()(es.eigenvalues().size() - 1);
    }
    Matrix rho_w = opcalc::polar_rho(gamma_w).matrix();
    Matrix alpha = q.psi.matrix() +
                   q.W.basis * (rho_w + etop * Matrix::Identity(k, k)) * q.W.basis.adjoint();
    LinOp theta(-opcalc::polar_sigma(q.gamma).matrix());
    (void)d0;
    return make_tower_point(k, HermitianOp(std::move(alpha)), std::move(theta));
}

TowerPoint apply_C(const facial::SmashFacialMap& g, const ThomPoint& q) {
    if (q.basepoint) return TowerPoint::base(0);
    const int d0 = q.W.ambient_dim();
    const int k = q.W.rank;

    // eigendata of psi on W^perp, ascending, with full-size eigenvectors
    Matrix perp_vecs(d0, d0 - k);
    std::vector<double> perp_vals(static_cast<size_t>(d0 - k));
    if (d0 - k > 0) {
        Eigen::SelfAdjointEigenSolver<Matrix> es(psi_block(q.psi, q.W));
        perp_vecs = q.W.basis_perp * es.eigenvectors();
        for (int i = 0; i < d0 - k; ++i) perp_vals[static_cast<size_t>(i)] = es.eigenvalues()(i);
    }
    // singular data of gamma on W, ascending, right vectors full-size
    LinOp gamma_w(restrict_to_w(q.gamma, q.W));
    auto sv = svd_ascending(gamma_w);
    Matrix w_vecs = q.W.basis * sv.right;

    EigenTuple s_tuple(perp_vals, TupleKind::plain);
    EigenTuple t_tuple(sv.values, TupleKind::nonneg);
    EigenTuple image = g.apply(s_tuple, t_tuple);
    if (image.is_infinity()) return TowerPoint::base(k);
    if (image.dim() != d0)
        throw std::invalid_argument("apply_C: image tuple has wrong length");

    // ties inside either eigendata block must land on ties, or the
    // resynthesis would depend on the basis choice
    auto check_ties = [&image](const std::vector<double>& e, int offset) {
        double in_tol = opcalc::tie_tolerance(e);
        double out_scale = 0.0;
        for (int i = 0; i < image.dim(); ++i) out_scale = std::max(out_scale, std::abs(image[i]));
        for (size_t i = 0; i + 1 < e.size(); ++i) {
            if (e[i + 1] - e[i] <= in_tol &&
                std::abs(image[offset + static_cast<int>(i) + 1] -
                         image[offset + static_cast<int>(i)]) > 1e-6 * (1.0 + out_scale))
                throw std::invalid_argument(
                    "apply_C: map is not facial (tied eigendata mapped to distinct values)");
        }
    };
    check_ties(perp_vals, 0);
    check_ties(sv.values, d0 - k);

    Matrix alpha = Matrix::Zero(d0, d0);
    for (int i = 0; i < d0 - k; ++i)
        alpha += image[i] * (perp_vecs.col(i) * perp_vecs.col(i).adjoint());
    for (int j = 0; j < k; ++j)
        alpha += image[d0 - k + j] * (w_vecs.col(j) * w_vecs.col(j).adjoint());
    LinOp theta(-opcalc::polar_sigma(q.gamma).matrix());
    return make_tower_point(k, HermitianOp(std::move(alpha)), std::move(theta));
}

facial::SmashFacialMap canonical_smash(int d0, int k) {
    if (k < 0 || k > d0) throw std::out_of_range("canonical_smash: k out of range");
    return facial::SmashFacialMap(d0 - k, k,
        [](const EigenTuple& s, const EigenTuple& t) -> EigenTuple {
            double s_top = s.dim() > 0 ? s.back() : 0.0;
            std::vector<double> out;
            out.reserve(static_cast<size_t>(s.dim() + t.dim()));
            for (int i = 0; i < s.dim(); ++i) out.push_back(s[i]);
            for (int j = 0; j < t.dim(); ++j) out.push_back(s_top + t[j]);
            return EigenTuple(std::move(out), TupleKind::plain);
        },
        "(s,t)->(s,s_top+t)");
}

std::pair<HermitianOp, LinOp> embed_coords(const TowerPoint& p) {
    require_not_basepoint(p, "embed_coords");
    if (p.level >= p.alpha.dim())
        throw std::invalid_argument("embed_coords: top level embeds through kappa");
    HermitianOp lam = opcalc::lambda_k(p.alpha, p.level);
    return {p.alpha, LinOp(-p.theta.matrix() * lam.matrix())};
}

int miller_rank(const LinOp& theta, const LinOp& inclusion) {
    if (theta.dim_in() != inclusion.dim_in() || theta.dim_out() != inclusion.dim_out())
        throw std::invalid_argument("miller_rank: dimension mismatch");
    return opcalc::numerical_rank(LinOp(theta.matrix() - inclusion.matrix()));
}

TowerCheck check_tower_point(const TowerPoint& p) {
    if (p.basepoint) return TowerCheck{};
    TowerCheck out;
    PkResult pk = pk_projector(p.alpha, p.level);
    out.support_dev = (p.theta.matrix().adjoint() * p.theta.matrix() - pk.grass.projector).norm();
    if (p.level < p.alpha.dim()) {
        HermitianOp lam = opcalc::lambda_k(p.alpha, p.level);
        LinOp beta(-p.theta.matrix() * lam.matrix());
        out.embed_dev = (opcalc::polar_rho(beta).matrix() - lam.matrix()).norm();
    }
    return out;
}

} // namespace isotower::tower
