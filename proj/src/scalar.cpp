#include "skewtor/scalar.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace skewtor {

Rational parseRational(const std::string& s) {
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    std::size_t digits = 0, slash = std::string::npos;
    for (; i < s.size(); ++i) {
        if (std::isdigit(static_cast<unsigned char>(s[i]))) {
            ++digits;
        } else if (s[i] == '/' && slash == std::string::npos && digits > 0) {
            slash = i;
            digits = 0;
        } else {
            throw std::invalid_argument("not a rational: '" + s + "'");
        }
    }
    if (digits == 0) throw std::invalid_argument("not a rational: '" + s + "'");
    std::string t = (s[0] == '+') ? s.substr(1) : s;
    if (slash != std::string::npos) {
        std::string den = s.substr(slash + 1);
        if (den.find_first_not_of('0') == std::string::npos)
            throw std::invalid_argument("zero denominator: '" + s + "'");
    }
    Rational r(t);
    return r;
}

std::string str(const Rational& r) { return r.str(); }

std::string str(const Gauss& z) {
    if (z.im.is_zero()) return str(z.re);
    std::ostringstream os;
    if (!z.re.is_zero()) {
        os << str(z.re) << (z.im > 0 ? "+" : "-");
        Rational a = abs(z.im);
        if (a != 1) os << str(a) << "*";
        os << "i";
        return os.str();
    }
    if (z.im == 1) return "i";
    if (z.im == -1) return "-i";
    os << str(z.im) << "*i";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Gauss& z) { return os << str(z); }

CMat toComplex(const Mat& m) {
    CMat r(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) r(i, j) = Gauss(m(i, j));
    return r;
}

CMat adjoint(const CMat& m) {
    CMat r(m.cols(), m.rows());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) r(j, i) = m(i, j).conj();
    return r;
}

} // namespace skewtor
