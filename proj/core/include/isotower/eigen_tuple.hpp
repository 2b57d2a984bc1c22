#pragma once

#include <string>
#include <vector>

namespace isotower::facial {

// Which eigenvalue space a tuple lives in. `nonneg` asks t0 >= 0, `zero_based`
// asks t0 = 0; `plain` is unconstrained.
enum class TupleKind { plain, nonneg, zero_based };

std::string to_string(TupleKind k);

// A point of one of the compactified ordered-eigenvalue spaces: a weakly
// increasing tuple of reals, or the compactification basepoint. The basepoint
// is a tagged value with no entries.
class EigenTuple {
public:
    EigenTuple() = default;

    // Validates ordering and the variant constraint. Violations within
    // 1e-9*(1+max|t_i|) are repaired in place; larger ones throw.
    EigenTuple(std::vector<double> entries, TupleKind kind = TupleKind::plain);

    static EigenTuple infinity(TupleKind kind = TupleKind::plain);

    bool is_infinity() const { return infinite_; }
    int dim() const { return static_cast<int>(entries_.size()); }
    TupleKind kind() const { return kind_; }
    const std::vector<double>& entries() const { return entries_; }
    double operator[](int i) const { return entries_.at(static_cast<size_t>(i)); }
    double front() const { return entries_.front(); }
    double back() const { return entries_.back(); }

    // Scale-aware comparison tolerance used throughout: 1e-9*(1+max|t_i|).
    double default_tol() const;

    std::string to_string() const;

private:
    std::vector<double> entries_;
    TupleKind kind_ = TupleKind::plain;
    bool infinite_ = false;
};

// Face membership: p in F_i iff t_i = t_{i+1} within tol. The basepoint lies
// in every face. tol <= 0 selects the scale-aware default.
bool face_member(const EigenTuple& p, int i, double tol = 0.0);

// Membership in the D_0 face (t0 = 0) of a nonneg tuple.
bool zero_face_member(const EigenTuple& p, double tol = 0.0);

} // namespace isotower::facial
