#include "isotower/opcalc.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace isotower::opcalc {

using facial::EigenTuple;
using facial::FacialImage;
using facial::FacialMap;
using facial::TupleKind;

HermitianOp::HermitianOp(Matrix m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("HermitianOp: matrix must be square");
    double scale = 1.0 + m.norm();
    double dev = (m - m.adjoint()).norm();
    if (dev > 1e-12 * scale * 10.0) {
        std::ostringstream os;
        os << "HermitianOp: matrix is not self-adjoint (deviation " << dev << ")";
        throw std::invalid_argument(os.str());
    }
    m_ = 0.5 * (m + m.adjoint().eval());
}

HermitianOp HermitianOp::zero(int d) { return HermitianOp(Matrix::Zero(d, d)); }
HermitianOp HermitianOp::identity(int d) { return HermitianOp(Matrix::Identity(d, d)); }

HermitianOp HermitianOp::diagonal(const std::vector<double>& d) {
    Matrix m = Matrix::Zero(static_cast<Eigen::Index>(d.size()), static_cast<Eigen::Index>(d.size()));
    for (size_t i = 0; i < d.size(); ++i) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = d[i];
    return HermitianOp(std::move(m));
}

double tie_tolerance(const std::vector<double>& eigenvalues) {
    double m = 0.0;
    for (double e : eigenvalues) m = std::max(m, std::abs(e));
    return 1e-9 * (1.0 + m);
}

double tie_tolerance(const HermitianOp& a) {
    return 1e-9 * (1.0 + a.matrix().norm());
}

std::vector<double> singular_values_ascending(const LinOp& g) {
    if (g.dim_in() == 0 || g.dim_out() == 0) return {};
    Eigen::JacobiSVD<Matrix> svd(g.matrix());
    auto sv = svd.singularValues();
    std::vector<double> out(static_cast<size_t>(sv.size()));
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        out[static_cast<size_t>(sv.size() - 1 - i)] = sv(i);
    return out;
}

double rank_tolerance(const LinOp& g) {
    auto sv = singular_values_ascending(g);
    double top = sv.empty() ? 0.0 : sv.back();
    return 1e-8 * (1.0 + top);
}

double smallest_singular(const LinOp& g) {
    auto sv = singular_values_ascending(g);
    return sv.empty() ? 0.0 : sv.front();
}

int numerical_rank(const LinOp& g) {
    auto sv = singular_values_ascending(g);
    double top = sv.empty() ? 0.0 : sv.back();
    double tol = 1e-8 * (1.0 + top);
    int rank = 0;
    for (double s : sv)
        if (s > tol) ++rank;
    return rank;
}

bool is_isometry(const LinOp& g, double tol) {
    if (g.dim_in() > g.dim_out()) return false;
    Matrix gram = g.matrix().adjoint() * g.matrix();
    return (gram - Matrix::Identity(g.dim_in(), g.dim_in())).norm() <= tol * (1.0 + std::sqrt(double(g.dim_in())));
}

void require_isometry(const LinOp& g, const char* who) {
    if (!is_isometry(g))
        throw std::invalid_argument(std::string(who) + ": operator is not an isometry");
}

EigenSystem eig_sorted(const HermitianOp& a) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(a.matrix());
    if (es.info() != Eigen::Success)
        throw std::runtime_error("eig_sorted: eigendecomposition failed");
    std::vector<double> vals(static_cast<size_t>(a.dim()));
    for (int i = 0; i < a.dim(); ++i) vals[static_cast<size_t>(i)] = es.eigenvalues()(i);
    return EigenSystem{EigenTuple(std::move(vals), TupleKind::plain), es.eigenvectors()};
}

SingularSystem svd_ascending(const LinOp& g) {
    Eigen::JacobiSVD<Matrix> svd(g.matrix(), Eigen::ComputeThinU | Eigen::ComputeThinV);
    const Eigen::Index n = svd.singularValues().size();
    SingularSystem out;
    out.values.resize(static_cast<size_t>(n));
    out.left = Matrix(g.dim_out(), n);
    out.right = Matrix(g.dim_in(), n);
    for (Eigen::Index i = 0; i < n; ++i) {
        Eigen::Index j = n - 1 - i;
        out.values[static_cast<size_t>(i)] = svd.singularValues()(j);
        out.left.col(i) = svd.matrixU().col(j);
        out.right.col(i) = svd.matrixV().col(j);
    }
    return out;
}

HermitianOp synth(const LinOp& theta, const EigenTuple& t) {
    require_isometry(theta, "synth");
    if (t.is_infinity()) throw std::invalid_argument("synth: basepoint tuple has no synthesis");
    if (t.dim() != theta.dim_in())
        throw std::invalid_argument("synth: tuple length does not match the isometry domain");
    Matrix d = Matrix::Zero(t.dim(), t.dim());
    for (int i = 0; i < t.dim(); ++i) d(i, i) = t[i];
    return HermitianOp(theta.matrix() * d * theta.matrix().adjoint());
}

namespace {

HermitianOp spectral_apply(const HermitianOp& a, double (*fn)(double)) {
    EigenSystem es = eig_sorted(a);
    Matrix d = Matrix::Zero(a.dim(), a.dim());
    for (int i = 0; i < a.dim(); ++i) d(i, i) = fn(es.values[i]);
    return HermitianOp(es.vectors * d * es.vectors.adjoint());
}

} // namespace

HermitianOp op_exp(const HermitianOp& a) {
    return spectral_apply(a, [](double x) { return std::exp(x); });
}

HermitianOp op_log(const HermitianOp& a) {
    EigenSystem es = eig_sorted(a);
    if (a.dim() > 0 && es.values.front() <= 0.0)
        throw std::domain_error("op_log: operator is not positive definite");
    Matrix d = Matrix::Zero(a.dim(), a.dim());
    for (int i = 0; i < a.dim(); ++i) d(i, i) = std::log(es.values[i]);
    return HermitianOp(es.vectors * d * es.vectors.adjoint());
}

HermitianOp polar_rho(const LinOp& g) {
    if (g.dim_in() == 0) return HermitianOp::zero(0);
    // via the SVD rather than the square root of g^dag g: the singular values
    // keep full precision near zero
    SingularSystem sv = svd_ascending(g);
    Matrix out = Matrix::Zero(g.dim_in(), g.dim_in());
    for (size_t i = 0; i < sv.values.size(); ++i)
        out += sv.values[i] * sv.right.col(static_cast<Eigen::Index>(i)) *
               sv.right.col(static_cast<Eigen::Index>(i)).adjoint();
    return HermitianOp(out);
}

LinOp polar_sigma(const LinOp& g) {
    SingularSystem sv = svd_ascending(g);
    double tol = sv.values.empty() ? 0.0 : 1e-8 * (1.0 + sv.values.back());
    Matrix out = Matrix::Zero(g.dim_out(), g.dim_in());
    for (size_t i = 0; i < sv.values.size(); ++i) {
        if (sv.values[i] <= tol) continue;
        out += sv.left.col(static_cast<Eigen::Index>(i)) *
               sv.right.col(static_cast<Eigen::Index>(i)).adjoint();
    }
    return LinOp(out);
}

HermitianOp lambda_k(const HermitianOp& a, int k) {
    const int d = a.dim();
    if (k < 0 || k > d - 1)
        throw std::invalid_argument("lambda_k: need 0 <= k <= d-1 (the top-of-tower chart is kappa)");
    EigenSystem es = eig_sorted(a);
    double thresh = es.values[d - k - 1];
    Matrix diag = Matrix::Zero(d, d);
    for (int i = 0; i < d; ++i) diag(i, i) = std::max(es.values[i] - thresh, 0.0);
    return HermitianOp(es.vectors * diag * es.vectors.adjoint());
}

namespace {

// Ties in the input spectrum must land on ties in the image; otherwise the
// resynthesis depends on the eigenbasis choice and f was not facial.
void check_tie_consistency(const std::vector<double>& e, const EigenTuple& s, const char* who) {
    double in_tol = tie_tolerance(e);
    double out_scale = 0.0;
    for (int i = 0; i < s.dim(); ++i) out_scale = std::max(out_scale, std::abs(s[i]));
    double out_tol = 1e-6 * (1.0 + out_scale);
    for (size_t i = 0; i + 1 < e.size(); ++i) {
        if (e[i + 1] - e[i] <= in_tol && std::abs(s[static_cast<int>(i) + 1] - s[static_cast<int>(i)]) > out_tol) {
            std::ostringstream os;
            os << who << ": map is not facial (tied eigenvalues " << e[i]
               << " mapped to distinct values " << s[static_cast<int>(i)] << ", "
               << s[static_cast<int>(i) + 1] << ")";
            throw std::invalid_argument(os.str());
        }
    }
}

} // namespace

AppliedOp apply_A(const FacialMap& f, const HermitianOp& a) {
    EigenSystem es = eig_sorted(a);
    EigenTuple in = es.values;
    if (f.domain_kind() != TupleKind::plain)
        in = EigenTuple(es.values.entries(), f.domain_kind());
    FacialImage img = f.apply(in);
    if (img.is_basepoint()) return AppliedOp{true, HermitianOp(), img.suspension};
    if (img.tuple.dim() != a.dim())
        throw std::invalid_argument("apply_A: image tuple has wrong length");
    check_tie_consistency(es.values.entries(), img.tuple, "apply_A");
    Matrix d = Matrix::Zero(a.dim(), a.dim());
    for (int i = 0; i < a.dim(); ++i) d(i, i) = img.tuple[i];
    return AppliedOp{false, HermitianOp(es.vectors * d * es.vectors.adjoint()), img.suspension};
}

AppliedHom apply_B(const FacialMap& f, const LinOp& g) {
    if (g.dim_in() > g.dim_out())
        throw std::invalid_argument("apply_B: need dim_in <= dim_out");
    SingularSystem sv = svd_ascending(g);
    EigenTuple in(sv.values, TupleKind::nonneg);
    FacialImage img = f.apply(in);
    if (img.is_basepoint()) return AppliedHom{true, LinOp(), img.suspension};
    if (img.tuple.dim() != g.dim_in())
        throw std::invalid_argument("apply_B: image tuple has wrong length");
    if (img.tuple.front() < -1e-9 * (1.0 + std::abs(img.tuple.back())))
        throw std::domain_error("apply_B: map leaves the nonneg cone");
    check_tie_consistency(sv.values, img.tuple, "apply_B");
    Matrix out = Matrix::Zero(g.dim_out(), g.dim_in());
    for (int i = 0; i < g.dim_in(); ++i)
        out += img.tuple[i] * sv.left.col(i) * sv.right.col(i).adjoint();
    return AppliedHom{false, LinOp(out), img.suspension};
}

LinOp kappa(const HermitianOp& a, const LinOp& theta) {
    require_isometry(theta, "kappa");
    if (theta.dim_in() != a.dim())
        throw std::invalid_argument("kappa: dimension mismatch");
    return LinOp(-theta.matrix() * op_exp(a).matrix());
}

KappaInverse kappa_inv(const LinOp& g) {
    if (smallest_singular(g) <= rank_tolerance(g))
        throw std::domain_error("kappa_inv: operator is not injective");
    HermitianOp rho = polar_rho(g);
    return KappaInverse{op_log(rho), LinOp(-polar_sigma(g).matrix())};
}

HermitianOp conjugate(const HermitianOp& a, const Matrix& u) {
    if (u.rows() != a.dim() || u.cols() != a.dim())
        throw std::invalid_argument("conjugate: unitary dimension mismatch");
    return HermitianOp(u * a.matrix() * u.adjoint());
}

LinOp conjugate(const LinOp& g, const Matrix& u_in, const Matrix& u_out) {
    if (u_in.rows() != g.dim_in() || u_out.rows() != g.dim_out())
        throw std::invalid_argument("conjugate: unitary dimension mismatch");
    return LinOp(u_out * g.matrix() * u_in.adjoint());
}

double ndr_hom_u(const LinOp& g) {
    auto sv = singular_values_ascending(g);
    if (sv.empty()) throw std::invalid_argument("ndr_hom: empty operator");
    return facial::dplus2_u(sv.front(), sv.back());
}

facial::NdrValue<LinOp> ndr_hom(const LinOp& g, double t) {
    if (g.dim_in() < 2)
        throw std::invalid_argument("ndr_hom: need dim_in >= 2");
    double u = ndr_hom_u(g);
    FacialMap ht = facial::hat(facial::dplus2_deformation(t), g.dim_in());
    AppliedHom moved = apply_B(ht, g);
    if (moved.basepoint)
        throw std::runtime_error("ndr_hom: deformation unexpectedly hit the basepoint");
    return {u, moved.hom};
}

} // namespace isotower::opcalc
