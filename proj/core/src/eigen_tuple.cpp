#include "isotower/eigen_tuple.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace isotower::facial {

std::string to_string(TupleKind k) {
    switch (k) {
        case TupleKind::plain: return "plain";
        case TupleKind::nonneg: return "nonneg";
        case TupleKind::zero_based: return "zero-based";
    }
    return "?";
}

namespace {

double scale_tol(const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return 1e-9 * (1.0 + m);
}

} // namespace

EigenTuple::EigenTuple(std::vector<double> entries, TupleKind kind)
    : entries_(std::move(entries)), kind_(kind) {
    if (entries_.empty()) return;
    const double tol = scale_tol(entries_);
    for (double x : entries_) {
        if (!std::isfinite(x))
            throw std::invalid_argument("EigenTuple: non-finite entry; use EigenTuple::infinity() for the basepoint");
    }
    for (size_t i = 1; i < entries_.size(); ++i) {
        if (entries_[i] < entries_[i - 1]) {
            if (entries_[i - 1] - entries_[i] > tol) {
                std::ostringstream os;
                os << "EigenTuple: entries not weakly increasing at index " << i
                   << " (" << entries_[i - 1] << " > " << entries_[i] << ")";
                throw std::invalid_argument(os.str());
            }
            entries_[i] = entries_[i - 1];
        }
    }
    if (kind_ == TupleKind::nonneg || kind_ == TupleKind::zero_based) {
        if (entries_.front() < 0.0) {
            if (-entries_.front() > tol)
                throw std::invalid_argument("EigenTuple: negative entry in a nonneg tuple");
            // tiny negative noise: shift the offending prefix up to zero
            for (auto& x : entries_) {
                if (x < 0.0) x = 0.0;
            }
        }
    }
    if (kind_ == TupleKind::zero_based) {
        if (std::abs(entries_.front()) > tol)
            throw std::invalid_argument("EigenTuple: zero-based tuple with t0 != 0");
        entries_.front() = 0.0;
    }
}

EigenTuple EigenTuple::infinity(TupleKind kind) {
    EigenTuple p;
    p.kind_ = kind;
    p.infinite_ = true;
    return p;
}

double EigenTuple::default_tol() const {
    if (infinite_) return 1e-9;
    return scale_tol(entries_);
}

std::string EigenTuple::to_string() const {
    if (infinite_) return "oo";
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < entries_.size(); ++i) {
        if (i) os << ", ";
        os << entries_[i];
    }
    os << ")";
    return os.str();
}

bool face_member(const EigenTuple& p, int i, double tol) {
    if (p.is_infinity()) return true;
    if (i < 0 || i > p.dim() - 2)
        throw std::out_of_range("face_member: face index out of range");
    if (tol <= 0.0) tol = p.default_tol();
    return std::abs(p[i] - p[i + 1]) <= tol;
}

bool zero_face_member(const EigenTuple& p, double tol) {
    if (p.is_infinity()) return true;
    if (p.dim() == 0) return true;
    if (tol <= 0.0) tol = p.default_tol();
    return std::abs(p.front()) <= tol;
}

} // namespace isotower::facial
