#pragma once

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "isotower/eigen_tuple.hpp"
#include "isotower/facial.hpp"
#include "isotower/facial_map.hpp"

namespace isotower::opcalc {

using Matrix = Eigen::MatrixXcd;
using Complex = std::complex<double>;

// A complex self-adjoint operator. Construction validates self-adjointness to
// 1e-12*(1+||M||) and stores the symmetrized matrix.
class HermitianOp {
public:
    HermitianOp() = default;
    explicit HermitianOp(Matrix m);

    static HermitianOp zero(int d);
    static HermitianOp identity(int d);
    static HermitianOp diagonal(const std::vector<double>& d);

    int dim() const { return static_cast<int>(m_.rows()); }
    const Matrix& matrix() const { return m_; }

private:
    Matrix m_;
};

// A rectangular complex operator V_in -> V_out (rows = dim_out, cols = dim_in).
class LinOp {
public:
    LinOp() = default;
    LinOp(Matrix m) : m_(std::move(m)) {}

    static LinOp zero(int rows, int cols) { return LinOp(Matrix::Zero(rows, cols)); }

    int dim_in() const { return static_cast<int>(m_.cols()); }
    int dim_out() const { return static_cast<int>(m_.rows()); }
    const Matrix& matrix() const { return m_; }

private:
    Matrix m_;
};

// ── tolerances ──────────────────────────────────────────────────────────────

// Two eigenvalues tie (same face) when their gap is at most this.
double tie_tolerance(const std::vector<double>& eigenvalues);
double tie_tolerance(const HermitianOp& a);

// Injectivity cutoff: smallest singular value must clear 1e-8*(1+||g||).
double rank_tolerance(const LinOp& g);

std::vector<double> singular_values_ascending(const LinOp& g);
double smallest_singular(const LinOp& g);
int numerical_rank(const LinOp& g);
bool is_isometry(const LinOp& g, double tol = 1e-8);
void require_isometry(const LinOp& g, const char* who);

// ── spectral data ───────────────────────────────────────────────────────────

struct EigenSystem {
    facial::EigenTuple values;  // ascending
    Matrix vectors;             // orthonormal columns, matching order
};

EigenSystem eig_sorted(const HermitianOp& a);

// Ascending singular data: g * right.col(i) = values[i] * left.col(i).
struct SingularSystem {
    std::vector<double> values;
    Matrix left;
    Matrix right;
};

SingularSystem svd_ascending(const LinOp& g);

// ── the calculus ────────────────────────────────────────────────────────────

// (theta, t) -> theta diag(t) theta^dag for an isometry theta: C^d -> V.
HermitianOp synth(const LinOp& theta, const facial::EigenTuple& t);

HermitianOp op_exp(const HermitianOp& a);
// requires strictly positive spectrum
HermitianOp op_log(const HermitianOp& a);

// (g^dag g)^{1/2}; its image is the orthocomplement of Ker(g).
HermitianOp polar_rho(const LinOp& g);

// The partial isometry of the polar decomposition, as a matrix vanishing on
// Ker(g); g = polar_sigma(g) * polar_rho(g).
LinOp polar_sigma(const LinOp& g);

// Spectral application of x -> max(x - e_{d-k-1}(a), 0); 0 <= k <= d-1.
HermitianOp lambda_k(const HermitianOp& a, int k);

struct AppliedOp {
    bool basepoint = false;
    HermitianOp op;
    std::optional<double> suspension;
};

// Eigenvalue-space functional calculus on self-adjoint operators: apply f to
// the sorted spectrum and resynthesize on the same eigenbasis. Throws when a
// tie in the spectrum is sent to distinct values (non-facial f).
AppliedOp apply_A(const facial::FacialMap& f, const HermitianOp& a);

struct AppliedHom {
    bool basepoint = false;
    LinOp hom;
    std::optional<double> suspension;
};

// Singular-value-space calculus on rectangular operators (dim_in <= dim_out):
// apply f to the ascending singular values, resynthesize with the same
// singular pairs. Throws when f leaves the nonneg cone.
AppliedHom apply_B(const facial::FacialMap& f, const LinOp& g);

// (a, theta) -> -theta Exp(a), a homeomorphism onto the injective operators.
LinOp kappa(const HermitianOp& a, const LinOp& theta);

struct KappaInverse {
    HermitianOp alpha;
    LinOp theta;
};

// g -> (log rho(g), -sigma(g)); requires g injective.
KappaInverse kappa_inv(const LinOp& g);

// Conjugation action: u a u^dag / u_out g u_in^dag.
HermitianOp conjugate(const HermitianOp& a, const Matrix& u);
LinOp conjugate(const LinOp& g, const Matrix& u_in, const Matrix& u_out);

// The operator-level NDR pair on (S^Hom, non-injective locus):
// u(g) = u'(e_0(rho g), e_{d-1}(rho g)), h_t(g) = B_{hat(h'_t)}(g).
facial::NdrValue<LinOp> ndr_hom(const LinOp& g, double t);
double ndr_hom_u(const LinOp& g);

} // namespace isotower::opcalc
