#pragma once

// Exact elimination over Q and Q(i). Eigen's decompositions choose pivots by
// magnitude, which is meaningless here, so the reductions are written out.

#include "skewtor/scalar.hpp"

#include <optional>
#include <vector>

namespace skewtor {

template <class S>
using DMat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using DVec = Eigen::Matrix<S, Eigen::Dynamic, 1>;

template <class S>
struct Echelon {
    DMat<S> m;                // reduced row echelon form
    std::vector<int> pivots;  // pivot column of each nonzero row
    int rank() const { return static_cast<int>(pivots.size()); }
};

template <class S>
Echelon<S> rref(DMat<S> a) {
    Echelon<S> out;
    const Eigen::Index rows = a.rows(), cols = a.cols();
    Eigen::Index r = 0;
    for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
        Eigen::Index p = -1;
        for (Eigen::Index i = r; i < rows; ++i)
            if (!isZero(a(i, c))) { p = i; break; }
        if (p < 0) continue;
        if (p != r) a.row(p).swap(a.row(r));
        S inv = S(1) / a(r, c);
        for (Eigen::Index j = c; j < cols; ++j)
            if (!isZero(a(r, j))) a(r, j) = a(r, j) * inv;
        for (Eigen::Index i = 0; i < rows; ++i) {
            if (i == r || isZero(a(i, c))) continue;
            S f = a(i, c);
            for (Eigen::Index j = c; j < cols; ++j)
                if (!isZero(a(r, j))) a(i, j) = a(i, j) - f * a(r, j);
        }
        out.pivots.push_back(static_cast<int>(c));
        ++r;
    }
    out.m = std::move(a);
    return out;
}

template <class S>
int rank(const DMat<S>& a) {
    // eliminate on the short side
    if (a.rows() > a.cols()) return rref<S>(a.transpose()).rank();
    return rref<S>(a).rank();
}

// Columns form a basis of {x : a x = 0}.
template <class S>
DMat<S> nullspace(const DMat<S>& a) {
    Echelon<S> e = rref<S>(a);
    const Eigen::Index n = a.cols();
    std::vector<bool> isPivot(n, false);
    for (int p : e.pivots) isPivot[p] = true;
    DMat<S> basis = DMat<S>::Zero(n, n - e.rank());
    Eigen::Index k = 0;
    for (Eigen::Index f = 0; f < n; ++f) {
        if (isPivot[f]) continue;
        basis(f, k) = S(1);
        for (int row = 0; row < e.rank(); ++row) basis(e.pivots[row], k) = -e.m(row, f);
        ++k;
    }
    return basis;
}

// Some solution of a x = b, or nullopt if inconsistent.
template <class S>
std::optional<DVec<S>> solve(const DMat<S>& a, const DVec<S>& b) {
    DMat<S> aug(a.rows(), a.cols() + 1);
    aug << a, b;
    Echelon<S> e = rref<S>(aug);
    if (!e.pivots.empty() && e.pivots.back() == a.cols()) return std::nullopt;
    DVec<S> x = DVec<S>::Zero(a.cols());
    for (int row = 0; row < e.rank(); ++row) x(e.pivots[row]) = e.m(row, a.cols());
    return x;
}

template <class S>
bool isZeroMatrix(const DMat<S>& a) {
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            if (!isZero(a(i, j))) return false;
    return true;
}

template <class S>
DMat<S> hstack(const std::vector<DMat<S>>& blocks) {
    Eigen::Index cols = 0, rows = blocks.empty() ? 0 : blocks.front().rows();
    for (const auto& b : blocks) cols += b.cols();
    DMat<S> out(rows, cols);
    Eigen::Index c = 0;
    for (const auto& b : blocks) {
        out.middleCols(c, b.cols()) = b;
        c += b.cols();
    }
    return out;
}

template <class S>
DMat<S> vstack(const std::vector<DMat<S>>& blocks) {
    Eigen::Index rows = 0, cols = blocks.empty() ? 0 : blocks.front().cols();
    for (const auto& b : blocks) rows += b.rows();
    DMat<S> out(rows, cols);
    Eigen::Index r = 0;
    for (const auto& b : blocks) {
        out.middleRows(r, b.rows()) = b;
        r += b.rows();
    }
    return out;
}

// Polynomials are coefficient vectors, lowest degree first.
using Poly = std::vector<Gauss>;

Poly charPoly(const CMat& a);  // det(x I - a), monic
Gauss evalPoly(const Poly& p, const Gauss& x);
// Divides p by (x - r); requires p(r) = 0.
Poly deflate(const Poly& p, const Gauss& r);
std::string str(const Poly& p);

struct RootReport {
    std::vector<std::pair<Gauss, int>> roots;  // ascending (re, im)
    Poly residual;                              // monic factor with no Gaussian-rational root found
    int degreeAccounted() const;
};

// Gaussian-rational roots with multiplicity. Candidates come from a numeric
// root finder and are accepted only after exact verification.
RootReport gaussianRationalRoots(Poly p);

// Minimal polynomial of v with respect to a (monic, lowest degree first).
Poly krylovMinimalPolynomial(const Mat& a, const Vec& v);

} // namespace skewtor
