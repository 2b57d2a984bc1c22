#include "isotower/kresidue.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace isotower::kresidue {

void AbelianGroupSpec::validate() const {
    for (long long n : cyclic)
        if (n < 1) throw std::invalid_argument("AbelianGroupSpec: cyclic orders must be >= 1");
    if (torus_rank < 0) throw std::invalid_argument("AbelianGroupSpec: torus rank must be >= 0");
}

Character reduce_character(const AbelianGroupSpec& g, Character c) {
    if (static_cast<int>(c.size()) != g.factors())
        throw std::invalid_argument("Character: exponent count does not match the group");
    for (size_t i = 0; i < g.cyclic.size(); ++i) {
        long long n = g.cyclic[i];
        c[i] = ((c[i] % n) + n) % n;
    }
    return c;
}

RepRingElem::RepRingElem(AbelianGroupSpec group) : group_(std::move(group)) {
    group_.validate();
}

RepRingElem RepRingElem::constant(const AbelianGroupSpec& g, long long c) {
    RepRingElem e(g);
    if (c != 0) e.terms_[Character(static_cast<size_t>(g.factors()), 0)] = c;
    return e;
}

RepRingElem RepRingElem::character(const AbelianGroupSpec& g, const Character& c) {
    RepRingElem e(g);
    e.terms_[reduce_character(g, c)] = 1;
    return e;
}

bool RepRingElem::is_one() const {
    if (terms_.size() != 1) return false;
    const auto& [c, coeff] = *terms_.begin();
    if (coeff != 1) return false;
    return std::all_of(c.begin(), c.end(), [](long long e) { return e == 0; });
}

void RepRingElem::add_term(const Character& c, long long coeff) {
    if (coeff == 0) return;
    auto it = terms_.find(c);
    if (it == terms_.end()) {
        terms_.emplace(c, coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

RepRingElem& RepRingElem::operator+=(const RepRingElem& o) {
    if (terms_.empty() && group_.factors() == 0 && o.group_.factors() != 0) group_ = o.group_;
    if (!(group_ == o.group_) && !o.terms_.empty() && !terms_.empty())
        throw std::invalid_argument("RepRingElem: mixed groups");
    if (terms_.empty()) group_ = o.group_;
    for (const auto& [c, coeff] : o.terms_) add_term(c, coeff);
    return *this;
}

RepRingElem& RepRingElem::operator-=(const RepRingElem& o) {
    return *this += -o;
}

RepRingElem RepRingElem::operator-() const {
    RepRingElem out(group_);
    for (const auto& [c, coeff] : terms_) out.terms_[c] = -coeff;
    return out;
}

RepRingElem operator*(const RepRingElem& a, const RepRingElem& b) {
    RepRingElem out(a.terms_.empty() ? b.group_ : a.group_);
    for (const auto& [ca, xa] : a.terms_) {
        for (const auto& [cb, xb] : b.terms_) {
            Character c(ca.size());
            for (size_t i = 0; i < ca.size(); ++i) c[i] = ca[i] + cb[i];
            out.add_term(reduce_character(out.group_, std::move(c)), xa * xb);
        }
    }
    return out;
}

RepRingElem RepRingElem::scaled(long long c) const {
    RepRingElem out(group_);
    if (c == 0) return out;
    for (const auto& [ch, coeff] : terms_) out.terms_[ch] = coeff * c;
    return out;
}

namespace {

std::string var_name(const AbelianGroupSpec& g, size_t i) {
    if (g.factors() == 1) return "x";
    return "x" + std::to_string(i);
}

std::string monomial_string(const AbelianGroupSpec& g, const Character& c) {
    std::string out;
    for (size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += var_name(g, i);
        if (c[i] != 1) out += "^" + std::to_string(c[i]);
    }
    return out;
}

} // namespace

std::string RepRingElem::pretty() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [c, coeff] : terms_) {
        std::string mono = monomial_string(group_, c);
        long long a = coeff;
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        if (mono.empty()) os << a;
        else if (a == 1) os << mono;
        else os << a << "*" << mono;
        first = false;
    }
    return os.str();
}

KPolynomial::KPolynomial(AbelianGroupSpec group) : group_(std::move(group)) {
    group_.validate();
}

KPolynomial::KPolynomial(AbelianGroupSpec group, std::vector<RepRingElem> coeffs)
    : group_(std::move(group)), coeffs_(std::move(coeffs)) {
    group_.validate();
    normalize();
}

KPolynomial KPolynomial::one(const AbelianGroupSpec& g) {
    return KPolynomial(g, {RepRingElem::one(g)});
}

KPolynomial KPolynomial::monomial(const AbelianGroupSpec& g, RepRingElem c, int power) {
    if (power < 0) throw std::invalid_argument("KPolynomial: negative power");
    std::vector<RepRingElem> coeffs(static_cast<size_t>(power) + 1, RepRingElem::zero(g));
    coeffs.back() = std::move(c);
    return KPolynomial(g, std::move(coeffs));
}

RepRingElem KPolynomial::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return RepRingElem::zero(group_);
    return coeffs_[static_cast<size_t>(i)];
}

bool KPolynomial::is_monic() const {
    return !coeffs_.empty() && coeffs_.back().is_one();
}

void KPolynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

KPolynomial& KPolynomial::operator+=(const KPolynomial& o) {
    if (coeffs_.size() < o.coeffs_.size())
        coeffs_.resize(o.coeffs_.size(), RepRingElem::zero(group_));
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    normalize();
    return *this;
}

KPolynomial& KPolynomial::operator-=(const KPolynomial& o) {
    if (coeffs_.size() < o.coeffs_.size())
        coeffs_.resize(o.coeffs_.size(), RepRingElem::zero(group_));
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    normalize();
    return *this;
}

KPolynomial operator*(const KPolynomial& a, const KPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return KPolynomial::zero(a.group_);
    std::vector<RepRingElem> out(a.coeffs_.size() + b.coeffs_.size() - 1,
                                 RepRingElem::zero(a.group_));
    for (size_t i = 0; i < a.coeffs_.size(); ++i)
        for (size_t j = 0; j < b.coeffs_.size(); ++j)
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return KPolynomial(a.group_, std::move(out));
}

std::string KPolynomial::pretty() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        RepRingElem c = coeffs_[static_cast<size_t>(i)];
        if (c.is_zero()) continue;
        bool negated = std::all_of(c.terms().begin(), c.terms().end(),
                                   [](const auto& t) { return t.second < 0; });
        if (negated) c = -c;
        if (first) os << (negated ? "-" : "");
        else os << (negated ? " - " : " + ");
        std::string cs = c.pretty();
        bool needs_parens = cs.find(' ') != std::string::npos;
        if (i == 0) {
            os << cs;
        } else {
            if (c.is_one()) { /* bare power */ }
            else if (needs_parens) os << "(" << cs << ")*";
            else os << cs << "*";
            os << "z";
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

std::vector<RepRingElem> exterior_powers(const Representation& v) {
    const int d = v.dim();
    std::vector<RepRingElem> es(static_cast<size_t>(d) + 1, RepRingElem::zero(v.group));
    es[0] = RepRingElem::one(v.group);
    int used = 0;
    for (const Character& line : v.characters) {
        RepRingElem x = RepRingElem::character(v.group, line);
        ++used;
        for (int k = std::min(used, d); k >= 1; --k)
            es[static_cast<size_t>(k)] += es[static_cast<size_t>(k - 1)] * x;
    }
    return es;
}

KPolynomial k_polynomial(const Representation& v) {
    const int d = v.dim();
    auto lambda = exterior_powers(v);
    std::vector<RepRingElem> coeffs(static_cast<size_t>(d) + 1, RepRingElem::zero(v.group));
    for (int k = 0; k <= d; ++k) {
        long long sign = (k % 2 == 0) ? 1 : -1;
        coeffs[static_cast<size_t>(d - k)] = lambda[static_cast<size_t>(k)].scaled(sign);
    }
    return KPolynomial(v.group, std::move(coeffs));
}

DivModResult divmod(const KPolynomial& g, const KPolynomial& q) {
    if (!q.is_monic()) throw std::invalid_argument("divmod: divisor must be monic");
    const int dq = q.degree();
    std::vector<RepRingElem> rem(g.coeffs().begin(), g.coeffs().end());
    int dg = static_cast<int>(rem.size()) - 1;
    std::vector<RepRingElem> quot;
    if (dg >= dq) quot.assign(static_cast<size_t>(dg - dq) + 1, RepRingElem::zero(g.group()));
    for (int i = dg; i >= dq; --i) {
        RepRingElem c = rem[static_cast<size_t>(i)];
        if (c.is_zero()) continue;
        quot[static_cast<size_t>(i - dq)] = c;
        for (int j = 0; j <= dq; ++j)
            rem[static_cast<size_t>(i - dq + j)] -= c * q.coeff(j);
    }
    return DivModResult{KPolynomial(g.group(), std::move(quot)),
                        KPolynomial(g.group(), std::move(rem))};
}

RepRingElem residue(const KPolynomial& g, const KPolynomial& q) {
    if (!q.is_monic()) throw std::invalid_argument("residue: divisor must be monic");
    const int d = q.degree();
    if (d == 0) return RepRingElem::zero(g.group());
    return divmod(g, q).remainder.coeff(d - 1);
}

std::vector<RepRingElem> gysin_values(const Representation& v) {
    KPolynomial f = k_polynomial(v);
    std::vector<RepRingElem> out;
    for (int i = 0; i < v.dim(); ++i)
        out.push_back(residue(KPolynomial::monomial(v.group, RepRingElem::one(v.group), i), f));
    return out;
}

DiagonalClass diagonal_class(const Representation& v) {
    const int d = v.dim();
    if (d < 1) throw std::invalid_argument("diagonal_class: need dim >= 1");
    KPolynomial f = k_polynomial(v);
    DiagonalClass e;
    e.coeffs.assign(static_cast<size_t>(d),
                    std::vector<RepRingElem>(static_cast<size_t>(d), RepRingElem::zero(v.group)));
    for (int i = 0; i < d; ++i)
        for (int j = 0; i + j < d; ++j)
            e.coeffs[static_cast<size_t>(i)][static_cast<size_t>(j)] = f.coeff(i + j + 1);
    return e;
}

DivideResult divides(const KPolynomial& p, const KPolynomial& q) {
    if (!p.is_monic()) throw std::invalid_argument("divides: divisor must be monic");
    DivModResult dm = divmod(q, p);
    if (dm.remainder.is_zero()) return DivideResult{true, dm.quotient};
    return DivideResult{false, KPolynomial::zero(p.group())};
}

bool submultiset(const Representation& v0, const Representation& v1) {
    std::map<Character, int> counts;
    for (const Character& c : v1.characters) counts[reduce_character(v1.group, c)]++;
    for (const Character& c : v0.characters) {
        auto it = counts.find(reduce_character(v0.group, c));
        if (it == counts.end() || it->second == 0) return false;
        it->second--;
    }
    return true;
}

ObstructionVerdict obstruction_check(const Representation& v0, const Representation& v1) {
    if (!(v0.group == v1.group))
        throw std::invalid_argument("obstruction_check: representations over different groups");
    if (v0.dim() > v1.dim())
        throw std::invalid_argument("obstruction_check: need dim V0 <= dim V1");
    ObstructionVerdict out;
    out.f_v0 = k_polynomial(v0);
    out.f_v1 = k_polynomial(v1);
    bool all_zero = true;
    for (int i = 0; i < v0.dim(); ++i) {
        KPolynomial zi_f1 =
            KPolynomial::monomial(v0.group, RepRingElem::one(v0.group), i) * out.f_v1;
        RepRingElem r = residue(zi_f1, out.f_v0);
        all_zero = all_zero && r.is_zero();
        out.residues.push_back(std::move(r));
    }
    out.divides = divides(out.f_v0, out.f_v1).divides;
    if (out.divides != all_zero)
        throw std::logic_error("obstruction_check: residue/divisibility disagreement");
    out.subrepresentation = submultiset(v0, v1);
    return out;
}

bool normalization_identity_holds(const Representation& v) {
    const int d = v.dim();
    if (d == 0) return true;
    KPolynomial f = k_polynomial(v);
    auto r = gysin_values(v);
    KPolynomial total = KPolynomial::zero(v.group);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; i + j < d; ++j) {
            RepRingElem term = f.coeff(i + j + 1) * r[static_cast<size_t>(j)];
            total += KPolynomial::monomial(v.group, std::move(term), i);
        }
    }
    return total == KPolynomial::one(v.group);
}

} // namespace isotower::kresidue
