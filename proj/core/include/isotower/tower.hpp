#pragma once

#include <optional>
#include <utility>

#include "isotower/opcalc.hpp"

namespace isotower::tower {

using opcalc::HermitianOp;
using opcalc::LinOp;
using opcalc::Matrix;

// A point of the Grassmannian of k-planes, stored as its orthogonal projector
// together with orthonormal bases of the plane and its complement.
struct GrassPoint {
    Matrix projector;   // d0 x d0, idempotent self-adjoint
    int rank = 0;
    Matrix basis;       // d0 x rank
    Matrix basis_perp;  // d0 x (d0 - rank)

    int ambient_dim() const { return static_cast<int>(projector.rows()); }
};

GrassPoint grass_from_projector(const Matrix& projector);

// The spectral projector P_k(alpha): orthocomplement of the span of the
// eigenspaces of the bottom d0-k sorted eigenvalues. Rank equals k exactly
// when e_{d0-k-1} < e_{d0-k}; otherwise the result is flagged under_rank with
// the actual rank (the Y_k collapse locus).
struct PkResult {
    GrassPoint grass;
    bool under_rank = false;
};

PkResult pk_projector(const HermitianOp& alpha, int k);

// A point of the level-k space of the tower: (alpha, theta|_{P_k(alpha)}).
// theta is stored full-size, vanishing off P_k(alpha).
struct TowerPoint {
    int level = 0;
    bool basepoint = false;
    HermitianOp alpha;
    LinOp theta;

    static TowerPoint base(int level);
};

TowerPoint make_tower_point(int level, HermitianOp alpha, LinOp theta);

// Restriction of a full isometry to P_k(alpha): the point-level tower
// projection.
TowerPoint sample_tower_point(const HermitianOp& alpha, const LinOp& theta_full, int k);

// Tower structure map: (alpha, theta) -> (alpha, theta|_{P_{k-1}(alpha)}).
TowerPoint pi_k(const TowerPoint& p);

// A point of the Thom-space fibres over the Grassmannian. gamma is supported
// on W, psi on its complement.
enum class ThomKind { Z, I, J };

struct ThomPoint {
    ThomKind kind = ThomKind::Z;
    bool basepoint = false;
    GrassPoint W;
    LinOp gamma;
    HermitianOp psi;
    std::optional<double> suspension;

    static ThomPoint base(ThomKind kind);
};

ThomPoint make_thom_point(ThomKind kind, GrassPoint W, LinOp gamma, HermitianOp psi,
                          std::optional<double> suspension = std::nullopt);

// A suspension-coordinate paired with an operator: the shape of the values of
// tau and chi.
struct SuspendedHom {
    bool basepoint = false;
    double coordinate = 0.0;
    LinOp hom;
};

// (alpha, theta) -> (e_0(alpha), -theta (alpha - e_0(alpha))) at level d0-1.
SuspendedHom tau_map(const TowerPoint& p);

// gamma -> (e_0(log rho(gamma)), sigma(gamma) (log rho(gamma) - e_0(...))),
// for injective gamma. Agrees with apply_B of the log-and-rebase map.
SuspendedHom chi_map(const LinOp& gamma);

// The facial map underlying chi: t -> suspension log t_0 with the zero-based
// tuple (0, log t_1 - log t_0, ...). Basepoint on the D_0 face.
facial::FacialMap chi_facial_map();

// Level-k chart (alpha, theta) -> (P_k(alpha), -theta Exp(alpha|_{P_k}),
// -log((e_{d0-k}(alpha) - alpha)|_{P_k^perp})); requires a strict spectral gap.
ThomPoint qk_map(const TowerPoint& p);

// Inverse chart on injective-gamma Thom points.
TowerPoint rk_map(const ThomPoint& q);

// (alpha, theta) at level k-1 with rank P_k = k ->
// (e_{d0-k}(alpha), P_k(alpha), -theta lambda_{k-1}(alpha)|_{P_k},
//  -log((e_{d0-k}(alpha) - alpha)|_{P_k^perp})).
struct FkValue {
    double coordinate = 0.0;
    ThomPoint point;
};

FkValue fk_map(const TowerPoint& p, int k);

// Inverse of fk on non-injective (kind J) Thom points.
TowerPoint gk_map(double t, const ThomPoint& q);

// Connecting map into the Thom space: collapse of Y_k followed by fk and the
// fibrewise inclusion, with the suspension coordinate negated (the -Sigma
// twist). Total: degenerate spectral gaps go to the basepoint.
ThomPoint delta_k(const TowerPoint& p, int k);

// (W, gamma, psi) -> (psi|_{W^perp} + (rho(gamma) + e_top(psi))|_W, -sigma(gamma)).
// Non-injective gamma goes to the basepoint.
TowerPoint phi_k(const ThomPoint& q);

// Thom-point functional calculus: feed psi's spectrum and gamma's singular
// values through a facial map on D(d0-k) ^ D_+(k) and resynthesize.
TowerPoint apply_C(const facial::SmashFacialMap& g, const ThomPoint& q);

// The canonical homeomorphism (s, t) -> (s, s_top + t); apply_C of it is phi_k.
facial::SmashFacialMap canonical_smash(int d0, int k);

// Level-k embedding coordinates (alpha, -theta lambda_k(alpha)); satisfies
// rho(beta) = lambda_k(alpha).
std::pair<HermitianOp, LinOp> embed_coords(const TowerPoint& p);

// Numerical rank of theta - inclusion; filtration membership is rank <= k.
int miller_rank(const LinOp& theta, const LinOp& inclusion);

// Deviations from the TowerPoint invariants, for tests: theta^dag theta vs the
// P_level projector, and the embedding identity.
struct TowerCheck {
    double support_dev = 0.0;
    double embed_dev = 0.0;
};

TowerCheck check_tower_point(const TowerPoint& p);

} // namespace isotower::tower
