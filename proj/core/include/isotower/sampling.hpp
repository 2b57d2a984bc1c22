#pragma once

#include <random>

#include "isotower/kresidue.hpp"
#include "isotower/tower.hpp"

namespace isotower::sampling {

using Rng = std::mt19937_64;
using opcalc::HermitianOp;
using opcalc::LinOp;
using opcalc::Matrix;

double uniform(Rng& rng, double lo, double hi);
std::complex<double> gaussian(Rng& rng);

Matrix gaussian_matrix(Rng& rng, int rows, int cols);
// Haar-ish unitary via QR with phase-fixed diagonal (deterministic per seed).
Matrix random_unitary(Rng& rng, int n);
// First cols columns of a random unitary.
LinOp random_isometry(Rng& rng, int rows, int cols);

HermitianOp random_hermitian(Rng& rng, int d, double scale = 1.0);
// Self-adjoint operator with a prescribed (sorted) spectrum.
HermitianOp hermitian_with_spectrum(Rng& rng, const std::vector<double>& eigs);

// Sorted eigenvalues in [lo, hi]; when gap_index >= 0, entries gap_index and
// gap_index+1 are separated by at least min_gap.
std::vector<double> sorted_spectrum(Rng& rng, int d, double lo, double hi,
                                    int gap_index = -1, double min_gap = 0.05);

// Rectangular operator with singular values in [smin, smax].
LinOp random_with_singulars(Rng& rng, int rows, int cols, double smin, double smax);

// A random facial self-map of D_+(2) from the (g, g+h) family: g vanishes on
// t0 = 0, h vanishes on the diagonal, both nonneg, g proper.
facial::FacialMap random_facial_dplus2(Rng& rng);

// Random entrywise-monotone facial self-map of D(d): t -> a t + b + c t^3.
facial::FacialMap random_facial_plain(Rng& rng);

// Level-k point with a clean spectral gap at the P_k boundary.
tower::TowerPoint random_tower_point(Rng& rng, int d0, int n1, int k);

// Thom point over a random k-plane; kind I (injective), J (one singular value
// forced to zero), or Z (injective unless `force_noninjective`).
tower::ThomPoint random_thom_point(Rng& rng, tower::ThomKind kind, int d0, int n1, int k,
                                   bool force_noninjective = false);

kresidue::AbelianGroupSpec random_group(Rng& rng, int max_cyclic_factors, long long max_order,
                                        int max_torus_rank);
kresidue::Representation random_representation(Rng& rng, const kresidue::AbelianGroupSpec& g,
                                               int dim);

} // namespace isotower::sampling
