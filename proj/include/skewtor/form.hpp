#pragma once

// Exterior algebra over R^n (n <= 8) in an orthonormal coframe.
//
// A blade is a bitmask: bit i stands for e_{i+1}. The coefficient of e_I is
// the value of the form on (e_{i1}, ..., e_{ip}) with i1 < ... < ip.
// Indices are 0-based in the API; only e(...), parsing and printing use the
// 1-based names e1, e2, ...

#include "skewtor/scalar.hpp"

#include <cstdint>
#include <initializer_list>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace skewtor {

using Blade = std::uint32_t;

constexpr int kMaxDim = 8;

struct BladeOrder {
    // by degree, then lexicographically on the ascending index list
    bool operator()(Blade a, Blade b) const {
        int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
        if (pa != pb) return pa < pb;
        Blade x = a ^ b;
        if (x == 0) return false;
        return (a & (x & (~x + 1))) != 0;
    }
};

std::vector<int> bladeIndices(Blade b);     // 0-based, ascending
Blade bladeOf(const std::vector<int>& idx); // 0-based, must be distinct
// All blades of degree p in dimension n, in BladeOrder.
std::vector<Blade> bladesOfDegree(int n, int p);
// Sign of reordering idx (0-based) into ascending order, 0 if an index repeats.
int permutationSign(const std::vector<int>& idx);

class Form {
public:
    using Terms = std::map<Blade, Rational, BladeOrder>;

    Form() = default;
    explicit Form(int dim);

    // Scalar (0-form) c.
    static Form constant(int dim, const Rational& c);
    // c * e_{i1} ^ ... ^ e_{ip}; indices 1-based, any order (sign applied).
    static Form e(int dim, std::initializer_list<int> idx, const Rational& c = 1);
    static Form eIdx(int dim, const std::vector<int>& idx0, const Rational& c = 1);
    // The 1-form with the given coframe coefficients.
    static Form oneForm(const Vec& v);
    static Form volume(int dim);

    int dim() const { return n_; }
    const Terms& terms() const { return terms_; }
    bool isZero() const { return terms_.empty(); }
    // Degree of a homogeneous nonzero form; -1 for zero or mixed forms.
    int degree() const;
    bool isHomogeneous() const;
    std::vector<Form> homogeneousParts() const;
    Form part(int p) const;

    Rational coeff(Blade b) const;
    // Component a(e_{i1}, ..., e_{ip}) for 0-based indices in any order.
    Rational at(const std::vector<int>& idx0) const;
    Rational at(int i, int j) const { return at(std::vector<int>{i, j}); }
    Rational at(int i, int j, int k) const { return at(std::vector<int>{i, j, k}); }
    Rational at(int i, int j, int k, int l) const { return at(std::vector<int>{i, j, k, l}); }

    // Builder; keeps the canonical form (no zero entries).
    Form& add(Blade b, const Rational& c);

    Form& operator+=(const Form& o);
    Form& operator-=(const Form& o);
    Form& operator*=(const Rational& s);

    std::string toString() const;

private:
    int n_ = 0;
    Terms terms_;
};

Form operator+(Form a, const Form& b);
Form operator-(Form a, const Form& b);
Form operator-(Form a);
Form operator*(const Rational& s, Form a);
Form operator*(Form a, const Rational& s);
bool operator==(const Form& a, const Form& b);
inline bool operator!=(const Form& a, const Form& b) { return !(a == b); }
std::ostream& operator<<(std::ostream& os, const Form& a);

Form wedge(const Form& a, const Form& b);
Form interior(const Vec& x, const Form& a);
Form interior(int i, const Form& a);  // e_i, 0-based
Form hodge(const Form& a);
// Sum of products of blade coefficients; blades of different degree do not pair.
Rational inner(const Form& a, const Form& b);
// Degree-strict variant: throws std::invalid_argument on a degree mismatch.
Rational innerStrict(const Form& a, const Form& b);
// 1/2 sum_i (e_i -| T) ^ (e_i -| T)
Form sigmaT(const Form& t);
// sigma^T(X,Y,Z,V) = g(T(X,Y),T(Z,V)) + g(T(Y,Z),T(X,V)) + g(T(Z,X),T(Y,V))
Form sigmaTQuadratic(const Form& t);
// a(v_1, ..., v_p) via determinants.
Rational evaluate(const Form& a, const std::vector<Vec>& vs);
Vec basisVector(int dim, int i);
// Vector T(e_i, e_j) = sum_k T(e_i,e_j,e_k) e_k.
Vec torsionVector(const Form& t, int i, int j);

// The degree-0 derivation extending e_j -> sum_k a(j,k) e_k from 1-forms to
// all forms (so(n) acting on Lambda^*).
Form derive(const Mat& a, const Form& f);

// Blade-sum expression grammar: "c*e1^e2^e5 + e3^e4 - 1/2*e7 + 3".
// Throws ParseError carrying the character position.
struct ParseError : std::runtime_error {
    std::size_t position;
    ParseError(const std::string& msg, std::size_t pos);
};
Form parseForm(int dim, const std::string& expr);

} // namespace skewtor
