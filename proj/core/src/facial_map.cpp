#include "isotower/facial_map.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace isotower::facial {

FacialMap::FacialMap(int dim_in, TupleKind domain, Fn fn, std::string label)
    : dim_in_(dim_in), domain_(domain), fn_(std::move(fn)), label_(std::move(label)) {}

FacialImage FacialMap::apply(const EigenTuple& p) const {
    if (!fn_) throw std::logic_error("FacialMap: empty map");
    if (p.is_infinity()) return FacialImage{EigenTuple::infinity(), std::nullopt};
    if (dim_in_ > 0 && p.dim() != dim_in_)
        throw std::invalid_argument("FacialMap: tuple dimension mismatch for map '" + label_ + "'");
    return fn_(p);
}

EigenTuple FacialMap::operator()(const EigenTuple& p) const {
    return apply(p).tuple;
}

SmashFacialMap::SmashFacialMap(int dim_plain, int dim_nonneg, Fn fn, std::string label)
    : dim_plain_(dim_plain), dim_nonneg_(dim_nonneg), fn_(std::move(fn)), label_(std::move(label)) {}

EigenTuple SmashFacialMap::apply(const EigenTuple& s, const EigenTuple& t) const {
    if (!fn_) throw std::logic_error("SmashFacialMap: empty map");
    if (s.is_infinity() || t.is_infinity()) return EigenTuple::infinity();
    if (dim_plain_ > 0 && s.dim() != dim_plain_)
        throw std::invalid_argument("SmashFacialMap: plain factor dimension mismatch");
    if (dim_nonneg_ > 0 && t.dim() != dim_nonneg_)
        throw std::invalid_argument("SmashFacialMap: nonneg factor dimension mismatch");
    return fn_(s, t);
}

namespace {

// Random point on the requested face of D(d) / D_+(d).
EigenTuple face_sample(std::mt19937_64& rng, int dim, TupleKind kind, int face) {
    std::normal_distribution<double> gauss(0.0, 2.0);
    std::vector<double> v(static_cast<size_t>(dim));
    for (auto& x : v) x = gauss(rng);
    if (kind != TupleKind::plain)
        for (auto& x : v) x = std::abs(x);
    std::sort(v.begin(), v.end());
    if (face >= 0) v[static_cast<size_t>(face) + 1] = v[static_cast<size_t>(face)];
    if (face == -1) {  // D_0 face
        double shift = v.front();
        for (auto& x : v) x -= shift;
    }
    return EigenTuple(std::move(v), kind);
}

} // namespace

FacialReport verify_facial(const FacialMap& f, int dim, long long samples,
                           unsigned long long seed, double tol) {
    if (samples <= 0) throw std::invalid_argument("verify_facial: samples must be positive");
    if (dim < 1) throw std::invalid_argument("verify_facial: dim must be >= 1");
    std::mt19937_64 rng(seed);
    FacialReport report;

    // basepoint must be fixed
    report.samples++;
    FacialImage at_inf = f.apply(EigenTuple::infinity(f.domain_kind()));
    if (!at_inf.is_basepoint())
        report.violations.push_back({-2, EigenTuple::infinity(), at_inf.tuple, 0.0});

    std::vector<int> faces;
    for (int i = 0; i + 1 < dim; ++i) faces.push_back(i);
    if (f.domain_kind() == TupleKind::nonneg) faces.push_back(-1);
    if (faces.empty()) return report;  // d = 1: no faces to check

    for (long long n = 0; n < samples; ++n) {
        int face = faces[static_cast<size_t>(n) % faces.size()];
        EigenTuple p = face_sample(rng, dim, f.domain_kind(), face);
        FacialImage img = f.apply(p);
        report.samples++;
        if (img.is_basepoint()) continue;  // basepoint lies in every face
        const EigenTuple& q = img.tuple;
        double use_tol = tol > 0.0 ? tol : std::max(p.default_tol(), q.default_tol());
        if (face >= 0) {
            if (q.dim() <= face + 1) continue;
            double gap = std::abs(q[face] - q[face + 1]);
            if (gap > use_tol) report.violations.push_back({face, p, q, gap});
        } else {
            double gap = std::abs(q.front());
            if (gap > use_tol) report.violations.push_back({-1, p, q, gap});
        }
        if (report.violations.size() >= 32) break;  // enough evidence
    }
    return report;
}

FacialMap hat(const FacialMap& f, int d) {
    if (d < 2) throw std::invalid_argument("hat: need d >= 2");
    if (f.domain_kind() != TupleKind::nonneg)
        throw std::invalid_argument("hat: input map must live on D_+(2)");
    std::string label = "hat(" + f.label() + "," + std::to_string(d) + ")";
    return FacialMap(d, TupleKind::nonneg,
        [f](const EigenTuple& p) -> FacialImage {
            const double t0 = p.front();
            const double td = p.back();
            FacialImage ends = f.apply(EigenTuple({t0, td}, TupleKind::nonneg));
            if (ends.is_basepoint()) return ends;
            const double g = ends.tuple[0];
            const double h = ends.tuple[1] - ends.tuple[0];
            std::vector<double> out(static_cast<size_t>(p.dim()));
            for (int i = 0; i < p.dim(); ++i) {
                if (t0 == td) {
                    out[static_cast<size_t>(i)] = g;
                    continue;
                }
                const double c = (p[i] - t0) / (td - t0);
                // exact at the extremes so that hat(f,2) == f pointwise
                if (c <= 0.0) out[static_cast<size_t>(i)] = g;
                else if (c >= 1.0) out[static_cast<size_t>(i)] = ends.tuple[1];
                else out[static_cast<size_t>(i)] = g + c * h;
            }
            return FacialImage{EigenTuple(std::move(out), TupleKind::nonneg), std::nullopt};
        },
        label);
}

} // namespace isotower::facial
