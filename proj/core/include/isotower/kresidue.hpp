#pragma once

#include <map>
#include <string>
#include <vector>

namespace isotower::kresidue {

// A compact abelian Lie group: a product of cyclic groups and a torus. The
// representation ring is the group ring of the character lattice: Laurent
// polynomials with cyclic exponents reduced mod order.
struct AbelianGroupSpec {
    std::vector<long long> cyclic;  // orders >= 1
    int torus_rank = 0;

    int factors() const { return static_cast<int>(cyclic.size()) + torus_rank; }
    void validate() const;

    bool operator==(const AbelianGroupSpec& o) const {
        return cyclic == o.cyclic && torus_rank == o.torus_rank;
    }
};

// A character: one integer exponent per factor, cyclic ones reduced into
// [0, order).
using Character = std::vector<long long>;

Character reduce_character(const AbelianGroupSpec& g, Character c);

// An element of R(G): a finitely supported integer combination of characters,
// in canonical form. All arithmetic is exact.
class RepRingElem {
public:
    RepRingElem() = default;
    explicit RepRingElem(AbelianGroupSpec group);

    static RepRingElem zero(const AbelianGroupSpec& g) { return RepRingElem(g); }
    static RepRingElem constant(const AbelianGroupSpec& g, long long c);
    static RepRingElem one(const AbelianGroupSpec& g) { return constant(g, 1); }
    static RepRingElem character(const AbelianGroupSpec& g, const Character& c);

    const AbelianGroupSpec& group() const { return group_; }
    const std::map<Character, long long>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;

    RepRingElem& operator+=(const RepRingElem& o);
    RepRingElem& operator-=(const RepRingElem& o);
    RepRingElem operator-() const;
    friend RepRingElem operator+(RepRingElem a, const RepRingElem& b) { return a += b; }
    friend RepRingElem operator-(RepRingElem a, const RepRingElem& b) { return a -= b; }
    friend RepRingElem operator*(const RepRingElem& a, const RepRingElem& b);
    RepRingElem scaled(long long c) const;

    bool operator==(const RepRingElem& o) const { return terms_ == o.terms_; }

    std::string pretty() const;

private:
    void add_term(const Character& c, long long coeff);

    AbelianGroupSpec group_;
    std::map<Character, long long> terms_;
};

// A representation described by its character multiset.
struct Representation {
    AbelianGroupSpec group;
    std::vector<Character> characters;

    int dim() const { return static_cast<int>(characters.size()); }
};

// A polynomial in z over R(G).
class KPolynomial {
public:
    KPolynomial() = default;
    explicit KPolynomial(AbelianGroupSpec group);
    KPolynomial(AbelianGroupSpec group, std::vector<RepRingElem> coeffs);

    static KPolynomial zero(const AbelianGroupSpec& g) { return KPolynomial(g); }
    static KPolynomial one(const AbelianGroupSpec& g);
    // z^i with coefficient c
    static KPolynomial monomial(const AbelianGroupSpec& g, RepRingElem c, int power);

    const AbelianGroupSpec& group() const { return group_; }
    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    // coefficient of z^i (zero elem outside the stored range)
    RepRingElem coeff(int i) const;
    const std::vector<RepRingElem>& coeffs() const { return coeffs_; }
    bool is_monic() const;

    KPolynomial& operator+=(const KPolynomial& o);
    KPolynomial& operator-=(const KPolynomial& o);
    friend KPolynomial operator+(KPolynomial a, const KPolynomial& b) { return a += b; }
    friend KPolynomial operator-(KPolynomial a, const KPolynomial& b) { return a -= b; }
    friend KPolynomial operator*(const KPolynomial& a, const KPolynomial& b);

    bool operator==(const KPolynomial& o) const { return coeffs_ == o.coeffs_; }

    std::string pretty() const;

private:
    void normalize();

    AbelianGroupSpec group_;
    std::vector<RepRingElem> coeffs_;
};

// lambda^0 ... lambda^d: elementary symmetric functions of the characters.
std::vector<RepRingElem> exterior_powers(const Representation& v);

// f_V(z) = sum z^{d-k} (-1)^k lambda^k(V) = prod (z - [L_i]).
KPolynomial k_polynomial(const Representation& v);

struct DivModResult {
    KPolynomial quotient;
    KPolynomial remainder;
};

// Exact long division by a monic polynomial.
DivModResult divmod(const KPolynomial& g, const KPolynomial& q);

// res(g/q dz): the b_{-1} coefficient of the Laurent expansion at infinity,
// i.e. the z^{deg q - 1} coefficient of g mod q.
RepRingElem residue(const KPolynomial& g, const KPolynomial& q);

// r_i = res(z^i / f_V) for 0 <= i < d.
std::vector<RepRingElem> gysin_values(const Representation& v);

// The divided difference e = (f_V(z) - f_V(w))/(z - w) = sum a_{i+j+1} z^i w^j.
// coeffs[i][j] is the z^i w^j coefficient.
struct DiagonalClass {
    std::vector<std::vector<RepRingElem>> coeffs;
};

DiagonalClass diagonal_class(const Representation& v);

struct DivideResult {
    bool divides = false;
    KPolynomial quotient;
};

// Exact divisibility in R(G)[z] for monic p.
DivideResult divides(const KPolynomial& p, const KPolynomial& q);

// Character-multiset inclusion v0 <= v1.
bool submultiset(const Representation& v0, const Representation& v1);

struct ObstructionVerdict {
    KPolynomial f_v0;
    KPolynomial f_v1;
    bool divides = false;
    std::vector<RepRingElem> residues;  // res(z^i f_{V1} / f_{V0}), i < dim V0
    bool subrepresentation = false;
};

// The splitting obstruction: the delta_1^* pairing values, the divisibility
// verdict, and the subrepresentation check (which agrees for abelian G).
ObstructionVerdict obstruction_check(const Representation& v0, const Representation& v1);

// Checks the identity 1 = sum_{i+j<d} a_{i+j+1} z^i r_j with r = gysin_values.
bool normalization_identity_holds(const Representation& v);

} // namespace isotower::kresidue
