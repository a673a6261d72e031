#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

#include <ostream>
#include <string>

namespace skewtor {

using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

using Vec = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using Mat = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;

// Accepts "p", "-p", "p/q". Throws std::invalid_argument otherwise.
Rational parseRational(const std::string& s);
std::string str(const Rational& r);

inline bool isZero(const Rational& r) { return r.is_zero(); }

// Exact complex number a + b i with rational parts.
struct Gauss {
    Rational re, im;

    Gauss() = default;
    Gauss(const Rational& r) : re(r) {}
    Gauss(int r) : re(r) {}
    Gauss(const Rational& r, const Rational& i) : re(r), im(i) {}

    Gauss& operator+=(const Gauss& o) { re += o.re; im += o.im; return *this; }
    Gauss& operator-=(const Gauss& o) { re -= o.re; im -= o.im; return *this; }
    Gauss& operator*=(const Gauss& o) {
        Rational r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = r;
        return *this;
    }
    Gauss& operator/=(const Gauss& o) {
        Rational n = o.re * o.re + o.im * o.im;
        Rational r = (re * o.re + im * o.im) / n;
        im = (im * o.re - re * o.im) / n;
        re = r;
        return *this;
    }
    Gauss operator-() const { return {-re, -im}; }
    Gauss conj() const { return {re, -im}; }
};

inline Gauss operator+(Gauss a, const Gauss& b) { return a += b; }
inline Gauss operator-(Gauss a, const Gauss& b) { return a -= b; }
inline Gauss operator*(Gauss a, const Gauss& b) { return a *= b; }
inline Gauss operator/(Gauss a, const Gauss& b) { return a /= b; }
inline bool operator==(const Gauss& a, const Gauss& b) { return a.re == b.re && a.im == b.im; }
inline bool operator!=(const Gauss& a, const Gauss& b) { return !(a == b); }
inline bool isZero(const Gauss& z) { return z.re.is_zero() && z.im.is_zero(); }
inline Gauss imagUnit() { return {Rational(0), Rational(1)}; }

std::string str(const Gauss& z);
std::ostream& operator<<(std::ostream& os, const Gauss& z);

using CVec = Eigen::Matrix<Gauss, Eigen::Dynamic, 1>;
using CMat = Eigen::Matrix<Gauss, Eigen::Dynamic, Eigen::Dynamic>;

CMat toComplex(const Mat& m);
CMat adjoint(const CMat& m);

} // namespace skewtor

namespace Eigen {
template <>
struct NumTraits<skewtor::Gauss> : GenericNumTraits<skewtor::Gauss> {
    typedef skewtor::Gauss Real;
    typedef skewtor::Gauss NonInteger;
    typedef skewtor::Gauss Nested;
    typedef skewtor::Gauss Literal;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 4,
        AddCost = 8,
        MulCost = 16
    };
    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
    static inline int digits10() { return 0; }
};
} // namespace Eigen
