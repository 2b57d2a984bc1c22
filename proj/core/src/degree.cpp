#include "isotower/degree.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

namespace isotower::facial {

namespace {

constexpr double kPi = std::numbers::pi;

double to_angle(ExtReal v) {
    if (v.at_infinity) return kPi;
    return 2.0 * std::atan(v.value);
}

// Circle parameter x in [0,1): x = 0 is the point at infinity, increasing x
// follows increasing t.
ExtReal circle_point(double x) {
    if (x <= 0.0 || x >= 1.0) return ExtReal::infinity();
    return ExtReal::of(-1.0 / std::tan(kPi * x));
}

struct DegreeWork {
    const CircleMap* map;
    long long evals = 0;
    long long budget = 1 << 20;

    double eval(double x) {
        if (++evals > budget)
            throw degree_error("circle_degree: refinement budget exhausted (map too wild?)");
        return to_angle((*map)(circle_point(x)));
    }

    double refine(double x0, double psi0, double x1, double psi1, int depth) {
        double step = std::remainder(psi1 - psi0, 2.0 * kPi);
        if (std::abs(step) < kPi / 2.0) return step;
        if (depth > 48 || x1 - x0 < 1e-14)
            throw degree_error("circle_degree: angle step failed to shrink under refinement");
        double xm = 0.5 * (x0 + x1);
        double psim = eval(xm);
        return refine(x0, psi0, xm, psim, depth + 1) + refine(xm, psim, x1, psi1, depth + 1);
    }
};

} // namespace

int circle_degree(const CircleMap& m, int samples) {
    if (!m.valid()) throw std::invalid_argument("circle_degree: empty map");
    if (samples < 8) samples = 8;

    DegreeWork work{&m};
    std::vector<double> xs(static_cast<size_t>(samples));
    std::vector<double> psis(static_cast<size_t>(samples));
    for (int j = 0; j < samples; ++j) {
        xs[static_cast<size_t>(j)] = static_cast<double>(j) / samples;
        psis[static_cast<size_t>(j)] = work.eval(xs[static_cast<size_t>(j)]);
    }
    double total = 0.0;
    for (int j = 0; j < samples; ++j) {
        int jn = (j + 1) % samples;
        double x1 = (jn == 0) ? 1.0 : xs[static_cast<size_t>(jn)];
        total += work.refine(xs[static_cast<size_t>(j)], psis[static_cast<size_t>(j)],
                             x1, psis[static_cast<size_t>(jn)], 0);
    }
    double deg = total / (2.0 * kPi);
    double rounded = std::round(deg);
    if (std::abs(deg - rounded) > 0.25)
        throw degree_error("circle_degree: winding total is not near an integer");
    return static_cast<int>(rounded);
}

namespace {

using Vec3 = std::array<double, 3>;

Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}
double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

// Inverse stereographic projection (from the south pole): the plane origin is
// the north pole, oo is the south pole.
Vec3 plane_to_sphere(const PlanePoint& p) {
    if (p.at_infinity) return {0.0, 0.0, -1.0};
    double r2 = p.s * p.s + p.t * p.t;
    if (!std::isfinite(r2) || r2 > 1e300) return {0.0, 0.0, -1.0};
    double d = 1.0 + r2;
    return {2.0 * p.s / d, 2.0 * p.t / d, (1.0 - r2) / d};
}

PlanePoint sphere_to_plane(const Vec3& v) {
    if (v[2] <= -1.0 + 1e-300) return PlanePoint::infinity();
    return PlanePoint::of(v[0] / (1.0 + v[2]), v[1] / (1.0 + v[2]));
}

struct Tri {
    int a, b, c;
};

} // namespace

int sphere_degree(const SphereMap& m, int grid, unsigned long long seed) {
    if (!m.valid()) throw std::invalid_argument("sphere_degree: empty map");
    if (grid < 8) grid = 8;
    const int rows = grid + 1;
    const int cols = grid;

    std::vector<Vec3> domain(static_cast<size_t>(rows * cols));
    std::vector<Vec3> image(static_cast<size_t>(rows * cols));
    for (int i = 0; i < rows; ++i) {
        double xi = kPi * i / grid;
        for (int j = 0; j < cols; ++j) {
            double eta = 2.0 * kPi * j / grid;
            Vec3 v{std::sin(xi) * std::cos(eta), std::sin(xi) * std::sin(eta), std::cos(xi)};
            size_t idx = static_cast<size_t>(i * cols + j);
            domain[idx] = v;
            image[idx] = plane_to_sphere(m(sphere_to_plane(v)));
        }
    }

    std::vector<Tri> tris;
    tris.reserve(static_cast<size_t>(2 * grid * grid));
    auto at = [cols](int i, int j) { return i * cols + (j % cols); };
    for (int i = 0; i < grid; ++i) {
        for (int j = 0; j < grid; ++j) {
            int a = at(i, j), b = at(i + 1, j), c = at(i + 1, j + 1), d = at(i, j + 1);
            for (Tri t : {Tri{a, b, c}, Tri{a, c, d}}) {
                const Vec3 &A = domain[static_cast<size_t>(t.a)],
                           &B = domain[static_cast<size_t>(t.b)],
                           &C = domain[static_cast<size_t>(t.c)];
                double orient = dot(cross(A, B), C);
                if (std::abs(orient) < 1e-18) continue;  // degenerate pole sliver
                if (orient < 0.0) std::swap(t.b, t.c);
                tris.push_back(t);
            }
        }
    }

    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    const double margin = 1e-9;

    for (int attempt = 0; attempt < 3; ++attempt) {
        Vec3 y{gauss(rng), gauss(rng), gauss(rng)};
        double n = norm(y);
        if (n < 1e-6) { --attempt; continue; }
        for (auto& v : y) v /= n;

        long long total = 0;
        bool suspect = false;
        for (const Tri& t : tris) {
            const Vec3 &A = image[static_cast<size_t>(t.a)],
                       &B = image[static_cast<size_t>(t.b)],
                       &C = image[static_cast<size_t>(t.c)];
            Vec3 cAB = cross(A, B), cBC = cross(B, C), cCA = cross(C, A);
            double nAB = norm(cAB), nBC = norm(cBC), nCA = norm(cCA);
            if (nAB < 1e-14 || nBC < 1e-14 || nCA < 1e-14) {
                // image triangle collapsed: it cannot cover an interior point,
                // unless the target sits essentially on it
                if (dot(y, A) > 1.0 - 1e-12) { suspect = true; break; }
                continue;
            }
            // same-sign triple products also match the antipodal triangle;
            // gate on the target sharing a hemisphere with the triangle
            Vec3 centroid{A[0] + B[0] + C[0], A[1] + B[1] + C[1], A[2] + B[2] + C[2]};
            if (dot(y, centroid) <= 0.0) continue;
            double d1 = dot(cAB, y) / nAB;
            double d2 = dot(cBC, y) / nBC;
            double d3 = dot(cCA, y) / nCA;
            if (d1 > margin && d2 > margin && d3 > margin) { total += 1; continue; }
            if (d1 < -margin && d2 < -margin && d3 < -margin) { total -= 1; continue; }
            double amin = std::min({std::abs(d1), std::abs(d2), std::abs(d3)});
            if (amin <= margin) {
                // target close to a great circle through an edge: only a
                // problem when it is also close to the triangle itself
                auto chord = [](const Vec3& u, const Vec3& v) {
                    return std::sqrt((u[0] - v[0]) * (u[0] - v[0]) + (u[1] - v[1]) * (u[1] - v[1]) +
                                     (u[2] - v[2]) * (u[2] - v[2]));
                };
                double diam = std::max({chord(A, B), chord(B, C), chord(C, A)});
                double dist = std::min({chord(y, A), chord(y, B), chord(y, C)});
                if (dist < 2.0 * diam + 1e-6) { suspect = true; break; }
            }
        }
        if (!suspect) return static_cast<int>(total);
    }
    throw degree_error("sphere_degree: no regular target value found at this grid resolution");
}

} // namespace isotower::facial
