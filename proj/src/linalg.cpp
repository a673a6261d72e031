#include "skewtor/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <sstream>

namespace skewtor {

Poly charPoly(const CMat& a) {
    // Faddeev-LeVerrier: M_k = a M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(a M_k) / k
    const Eigen::Index n = a.rows();
    Poly c(n + 1, Gauss(0));
    c[n] = Gauss(1);
    CMat m = CMat::Zero(n, n);
    CMat id = CMat::Identity(n, n);
    for (Eigen::Index k = 1; k <= n; ++k) {
        m = a * m + id * c[n - k + 1];
        CMat am = a * m;
        Gauss tr(0);
        for (Eigen::Index i = 0; i < n; ++i) tr += am(i, i);
        c[n - k] = -tr / Gauss(Rational(static_cast<long>(k)));
    }
    return c;
}

Gauss evalPoly(const Poly& p, const Gauss& x) {
    Gauss acc(0);
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly deflate(const Poly& p, const Gauss& r) {
    // synthetic division by (x - r)
    const std::size_t n = p.size() - 1;
    Poly q(n, Gauss(0));
    Gauss carry(0);
    for (std::size_t k = n; k >= 1; --k) {
        carry = p[k] + carry * r;
        q[k - 1] = carry;
    }
    return q;
}

std::string str(const Poly& p) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = p.size(); k-- > 0;) {
        if (isZero(p[k])) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << str(p[k]) << ")";
        if (k >= 1) os << "*x";
        if (k >= 2) os << "^" << k;
    }
    if (first) os << "0";
    return os.str();
}

int RootReport::degreeAccounted() const {
    int d = static_cast<int>(residual.size()) - 1;
    for (const auto& r : roots) d += r.second;
    return d;
}

namespace {

using cld = std::complex<long double>;

std::vector<cld> numericRoots(const Poly& p) {
    const int n = static_cast<int>(p.size()) - 1;
    std::vector<cld> coef(n + 1);
    for (int k = 0; k <= n; ++k)
        coef[k] = cld(p[k].re.convert_to<long double>(), p[k].im.convert_to<long double>());
    long double bound = 0;
    for (int k = 0; k < n; ++k) bound = std::max(bound, std::abs(coef[k] / coef[n]));
    bound = 1 + bound;
    auto eval = [&](cld x, cld& d) {
        cld v = coef[n];
        d = 0;
        for (int k = n - 1; k >= 0; --k) {
            d = d * x + v;
            v = v * x + coef[k];
        }
        return v;
    };
    std::vector<cld> z(n);
    for (int k = 0; k < n; ++k)
        z[k] = std::polar(bound * 0.5L, 2.0L * 3.14159265358979323846L * (k + 0.25L) / n);
    // Aberth iteration
    for (int iter = 0; iter < 2000; ++iter) {
        long double moved = 0;
        for (int k = 0; k < n; ++k) {
            cld d;
            cld v = eval(z[k], d);
            if (std::abs(v) == 0) continue;
            cld ratio = v / d;
            cld s = 0;
            for (int j = 0; j < n; ++j)
                if (j != k) s += 1.0L / (z[k] - z[j]);
            cld step = ratio / (1.0L - ratio * s);
            z[k] -= step;
            moved = std::max(moved, std::abs(step));
        }
        if (moved < 1e-30L) break;
    }
    return z;
}

// Convergents of the continued fraction of x, smallest denominators first.
std::vector<Rational> convergents(long double x, int maxTerms = 12) {
    std::vector<Rational> out;
    long double frac = x;
    Rational h0(0), h1(1), k0(1), k1(0);
    for (int t = 0; t < maxTerms; ++t) {
        long double a = std::floor(frac);
        if (std::fabs(a) > 1e15L) break;
        Rational ai(static_cast<long long>(a));
        Rational h2 = ai * h1 + h0, k2 = ai * k1 + k0;
        out.push_back(h2 / k2);
        h0 = h1; h1 = h2; k0 = k1; k1 = k2;
        long double rest = frac - a;
        if (rest < 1e-12L) break;
        frac = 1.0L / rest;
    }
    if (std::fabs(x) < 1e-6L) out.insert(out.begin(), Rational(0));
    return out;
}

} // namespace

RootReport gaussianRationalRoots(Poly p) {
    RootReport out;
    while (p.size() > 1 && isZero(p.back())) p.pop_back();
    if (!p.empty() && !isZero(p.back())) {
        Gauss lead = p.back();
        for (auto& c : p) c = c / lead;
    }
    auto record = [&](const Gauss& r) {
        for (auto& e : out.roots)
            if (e.first == r) { ++e.second; return; }
        out.roots.push_back({r, 1});
    };
    while (p.size() > 1) {
        if (isZero(p[0])) {
            record(Gauss(0));
            p = deflate(p, Gauss(0));
            continue;
        }
        bool found = false;
        for (const cld& z : numericRoots(p)) {
            auto res = convergents(z.real());
            auto ims = convergents(z.imag());
            if (ims.size() > 6) ims.resize(6);
            for (const auto& a : res) {
                for (const auto& b : ims) {
                    Gauss cand(a, b);
                    if (isZero(evalPoly(p, cand))) {
                        record(cand);
                        p = deflate(p, cand);
                        found = true;
                        break;
                    }
                }
                if (found) break;
            }
            if (found) break;
        }
        if (!found) break;
    }
    out.residual = p;
    std::sort(out.roots.begin(), out.roots.end(), [](const auto& x, const auto& y) {
        if (x.first.re != y.first.re) return x.first.re < y.first.re;
        return x.first.im < y.first.im;
    });
    return out;
}

Poly krylovMinimalPolynomial(const Mat& a, const Vec& v) {
    std::vector<Vec> ks{v};
    for (;;) {
        Vec next = a * ks.back();
        Mat k(v.size(), static_cast<Eigen::Index>(ks.size()));
        for (std::size_t j = 0; j < ks.size(); ++j) k.col(static_cast<Eigen::Index>(j)) = ks[j];
        if (auto c = solve<Rational>(k, next)) {
            Poly p(ks.size() + 1, Gauss(0));
            for (std::size_t j = 0; j < ks.size(); ++j) p[j] = Gauss(-(*c)(static_cast<Eigen::Index>(j)));
            p.back() = Gauss(1);
            return p;
        }
        ks.push_back(next);
    }
}

} // namespace skewtor
