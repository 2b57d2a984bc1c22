#include "isotower/sampling.hpp"

#include <Eigen/QR>
#include <algorithm>
#include <cmath>

namespace isotower::sampling {

using facial::EigenTuple;
using facial::FacialImage;
using facial::FacialMap;
using facial::TupleKind;

double uniform(Rng& rng, double lo, double hi) {
    std::uniform_real_distribution<double> dist(lo, hi);
    return dist(rng);
}

std::complex<double> gaussian(Rng& rng) {
    std::normal_distribution<double> dist(0.0, 1.0);
    return {dist(rng), dist(rng)};
}

Matrix gaussian_matrix(Rng& rng, int rows, int cols) {
    Matrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = gaussian(rng);
    return m;
}

Matrix random_unitary(Rng& rng, int n) {
    Eigen::HouseholderQR<Matrix> qr(gaussian_matrix(rng, n, n));
    Matrix q = qr.householderQ();
    Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int i = 0; i < n; ++i) {
        auto d = r(i, i);
        if (std::abs(d) > 1e-12) q.col(i) *= d / std::abs(d);
    }
    return q;
}

LinOp random_isometry(Rng& rng, int rows, int cols) {
    return LinOp(random_unitary(rng, rows).leftCols(cols));
}

HermitianOp random_hermitian(Rng& rng, int d, double scale) {
    Matrix m = gaussian_matrix(rng, d, d);
    return HermitianOp(0.5 * scale * (m + m.adjoint().eval()));
}

HermitianOp hermitian_with_spectrum(Rng& rng, const std::vector<double>& eigs) {
    int d = static_cast<int>(eigs.size());
    Matrix u = random_unitary(rng, d);
    Matrix diag = Matrix::Zero(d, d);
    for (int i = 0; i < d; ++i) diag(i, i) = eigs[static_cast<size_t>(i)];
    return HermitianOp(u * diag * u.adjoint());
}

std::vector<double> sorted_spectrum(Rng& rng, int d, double lo, double hi, int gap_index,
                                    double min_gap) {
    std::vector<double> e(static_cast<size_t>(d));
    for (auto& x : e) x = uniform(rng, lo, hi);
    std::sort(e.begin(), e.end());
    if (gap_index >= 0 && gap_index + 1 < d) {
        double need = e[static_cast<size_t>(gap_index)] + min_gap;
        double shift = need - e[static_cast<size_t>(gap_index) + 1];
        if (shift > 0.0)
            for (int i = gap_index + 1; i < d; ++i) e[static_cast<size_t>(i)] += shift;
    }
    return e;
}

LinOp random_with_singulars(Rng& rng, int rows, int cols, double smin, double smax) {
    Matrix u = random_unitary(rng, rows);
    Matrix v = random_unitary(rng, cols);
    Matrix s = Matrix::Zero(rows, cols);
    for (int i = 0; i < std::min(rows, cols); ++i) s(i, i) = uniform(rng, smin, smax);
    return LinOp(u * s * v.adjoint());
}

FacialMap random_facial_dplus2(Rng& rng) {
    double a = uniform(rng, 0.2, 2.0);
    double b = uniform(rng, 0.0, 2.0);
    double c = uniform(rng, 0.0, 2.0);
    double p = uniform(rng, 0.0, 2.0);
    double q = uniform(rng, 0.0, 2.0);
    return FacialMap(2, TupleKind::nonneg,
        [a, b, c, p, q](const EigenTuple& t) -> FacialImage {
            double t0 = t[0], t1 = t[1];
            double g = a * t0 + b * t0 * t0 / (1.0 + t0) + c * t0 * t1 / (1.0 + t1);
            double h = p * (t1 - t0) + q * (t1 - t0) * t1 / (1.0 + t1);
            return {EigenTuple({g, g + h}, TupleKind::nonneg), std::nullopt};
        },
        "random-dplus2");
}

FacialMap random_facial_plain(Rng& rng) {
    double a = uniform(rng, 0.3, 2.0);
    double b = uniform(rng, -1.0, 1.0);
    double c = uniform(rng, 0.0, 0.5);
    return FacialMap(0, TupleKind::plain,
        [a, b, c](const EigenTuple& t) -> FacialImage {
            std::vector<double> out(static_cast<size_t>(t.dim()));
            for (int i = 0; i < t.dim(); ++i)
                out[static_cast<size_t>(i)] = a * t[i] + b + c * t[i] * t[i] * t[i];
            return {EigenTuple(std::move(out), TupleKind::plain), std::nullopt};
        },
        "random-monotone");
}

tower::TowerPoint random_tower_point(Rng& rng, int d0, int n1, int k) {
    int gap_index = (k >= 1 && k <= d0 - 1) ? d0 - k - 1 : -1;
    auto eigs = sorted_spectrum(rng, d0, -2.0, 2.0, gap_index, 0.1);
    HermitianOp alpha = hermitian_with_spectrum(rng, eigs);
    LinOp theta_full = random_isometry(rng, n1, d0);
    return tower::sample_tower_point(alpha, theta_full, k);
}

tower::ThomPoint random_thom_point(Rng& rng, tower::ThomKind kind, int d0, int n1, int k,
                                   bool force_noninjective) {
    Matrix u = random_unitary(rng, d0);
    tower::GrassPoint w;
    w.rank = k;
    w.basis = u.leftCols(k);
    w.basis_perp = u.rightCols(d0 - k);
    w.projector = w.basis * w.basis.adjoint();

    bool noninjective = (kind == tower::ThomKind::J) || force_noninjective;
    // the kernel is planted below; keep the surviving singular values away
    // from the rank cutoff so the point sits inside its stratum
    Matrix gw = random_with_singulars(rng, n1, k, noninjective ? 0.2 : 0.1, 3.0).matrix();
    if (noninjective && k > 0) {
        // zero out the smallest singular value
        auto sv = opcalc::svd_ascending(LinOp(gw));
        Matrix rebuilt = Matrix::Zero(n1, k);
        for (size_t i = 1; i < sv.values.size(); ++i)
            rebuilt += sv.values[i] * sv.left.col(static_cast<Eigen::Index>(i)) *
                       sv.right.col(static_cast<Eigen::Index>(i)).adjoint();
        gw = rebuilt;
    }
    LinOp gamma(gw * w.basis.adjoint());

    Matrix psi_full = Matrix::Zero(d0, d0);
    if (d0 - k > 0) {
        Matrix h = gaussian_matrix(rng, d0 - k, d0 - k);
        h = 0.5 * (h + h.adjoint().eval());
        psi_full = w.basis_perp * h * w.basis_perp.adjoint();
    }
    return tower::make_thom_point(kind, std::move(w), std::move(gamma),
                                  HermitianOp(psi_full));
}

kresidue::AbelianGroupSpec random_group(Rng& rng, int max_cyclic_factors, long long max_order,
                                        int max_torus_rank) {
    std::uniform_int_distribution<int> ncyc(0, max_cyclic_factors);
    std::uniform_int_distribution<long long> order(1, max_order);
    std::uniform_int_distribution<int> ntor(0, max_torus_rank);
    kresidue::AbelianGroupSpec g;
    int c = ncyc(rng);
    for (int i = 0; i < c; ++i) g.cyclic.push_back(order(rng));
    g.torus_rank = ntor(rng);
    if (g.factors() == 0) g.cyclic.push_back(order(rng));  // keep the lattice nontrivial
    return g;
}

kresidue::Representation random_representation(Rng& rng, const kresidue::AbelianGroupSpec& g,
                                               int dim) {
    std::uniform_int_distribution<long long> expo(-3, 3);
    kresidue::Representation v{g, {}};
    for (int i = 0; i < dim; ++i) {
        kresidue::Character c(static_cast<size_t>(g.factors()));
        for (auto& e : c) e = expo(rng);
        v.characters.push_back(kresidue::reduce_character(g, std::move(c)));
    }
    return v;
}

} // namespace isotower::sampling
