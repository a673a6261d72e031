#include "skewtor/clifford.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace skewtor {

namespace {

CMat kron(const CMat& a, const CMat& b) {
    CMat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = b * a(i, j);
    return out;
}

CMat pauli(char which) {
    const Gauss i = imagUnit();
    CMat m = CMat::Zero(2, 2);
    switch (which) {
    case 'x': m(0, 1) = 1; m(1, 0) = 1; break;
    case 'y': m(0, 1) = -i; m(1, 0) = i; break;
    case 'z': m(0, 0) = 1; m(1, 1) = -1; break;
    default: m(0, 0) = 1; m(1, 1) = 1; break;
    }
    return m;
}

CMat tensor(const std::vector<CMat>& slots) {
    CMat out = CMat::Identity(1, 1);
    for (const auto& s : slots) out = kron(out, s);
    return out;
}

} // namespace

int defaultOrientation(int n) { return n == 7 ? -1 : 1; }

GammaRep buildRep(int n) { return buildRep(n, defaultOrientation(n)); }

GammaRep buildRep(int n, int epsilon) {
    if (n < 2 || n > kMaxDim) throw std::invalid_argument("spin representation needs 2 <= n <= 8");
    if (epsilon != 1 && epsilon != -1) throw std::invalid_argument("orientation sign must be +-1");
    GammaRep rep;
    rep.n = n;
    rep.epsilon = epsilon;
    const int m = n / 2;
    const Gauss i = imagUnit();
    for (int j = 0; j < m; ++j)
        for (char p : {'x', 'y'}) {
            std::vector<CMat> slots;
            for (int s = 0; s < m; ++s)
                slots.push_back(s < j ? pauli('z') : s == j ? CMat(pauli(p) * i) : pauli('1'));
            rep.gamma.push_back(tensor(slots));
        }
    if (n % 2) {
        std::vector<CMat> slots(m, pauli('z'));
        rep.gamma.push_back(tensor(slots) * (i * Gauss(epsilon)));
    }
    return rep;
}

bool cliffordRelationsHold(const GammaRep& rep) {
    const int s = rep.size();
    for (int a = 0; a < rep.n; ++a)
        for (int b = a; b < rep.n; ++b) {
            CMat ac = rep.gamma[a] * rep.gamma[b] + rep.gamma[b] * rep.gamma[a];
            if (a == b) ac += CMat::Identity(s, s) * Gauss(2);
            if (!isZeroMatrix<Gauss>(ac)) return false;
        }
    return true;
}

CMat actForm(const GammaRep& rep, const Form& a) {
    if (a.dim() != rep.n) throw std::invalid_argument("form and spin representation differ in dimension");
    const int s = rep.size();
    CMat out = CMat::Zero(s, s);
    for (const auto& [b, c] : a.terms()) {
        CMat prod = CMat::Identity(s, s);
        for (int k : bladeIndices(b)) prod = prod * rep.gamma[k];
        out += prod * Gauss(c);
    }
    return out;
}

CMat actVector(const GammaRep& rep, const Vec& x) { return actForm(rep, Form::oneForm(x)); }

bool isHermitian(const CMat& m) { return isZeroMatrix<Gauss>(CMat(m - adjoint(m))); }
bool isAntiHermitian(const CMat& m) { return isZeroMatrix<Gauss>(CMat(m + adjoint(m))); }

bool EigenReport::matches(const std::vector<Gauss>& expected) const {
    if (!splits()) return false;
    std::vector<Gauss> have = multiset();
    if (have.size() != expected.size()) return false;
    std::vector<bool> used(have.size(), false);
    for (const auto& e : expected) {
        bool hit = false;
        for (std::size_t k = 0; k < have.size(); ++k)
            if (!used[k] && have[k] == e) {
                used[k] = hit = true;
                break;
            }
        if (!hit) return false;
    }
    return true;
}

std::vector<Gauss> EigenReport::multiset() const {
    std::vector<Gauss> out;
    for (const auto& [v, mult] : values)
        for (int k = 0; k < mult; ++k) out.push_back(v);
    return out;
}

std::string EigenReport::toString() const {
    std::ostringstream os;
    os << "{";
    for (std::size_t k = 0; k < values.size(); ++k)
        os << (k ? ", " : "") << str(values[k].first) << " x" << values[k].second;
    os << "}";
    if (!splits()) os << " residual " << str(residual);
    return os.str();
}

EigenReport eigenvalues(const CMat& m) {
    RootReport r = gaussianRationalRoots(charPoly(m));
    EigenReport out;
    out.values = r.roots;
    out.residual = r.residual;
    out.size = static_cast<int>(m.rows());
    return out;
}

CMat commonKernel(const std::vector<CMat>& ops, int size) {
    if (ops.empty()) return CMat::Identity(size, size);
    std::vector<CMat> rows;
    for (const auto& op : ops) {
        if (op.cols() != size) throw std::invalid_argument("endomorphisms of different sizes");
        rows.push_back(op);
    }
    return nullspace<Gauss>(vstack<Gauss>(rows));
}

CMat eigenspace(const CMat& m, const Gauss& value) {
    return nullspace<Gauss>(CMat(m - CMat::Identity(m.rows(), m.cols()) * value));
}

CMat restrictTo(const CMat& m, const CMat& basis) {
    CMat image = m * basis;
    CMat out(basis.cols(), basis.cols());
    for (Eigen::Index c = 0; c < basis.cols(); ++c) {
        auto x = solve<Gauss>(basis, CVec(image.col(c)));
        if (!x) throw std::invalid_argument("subspace is not invariant");
        out.col(c) = *x;
    }
    return out;
}

std::pair<CMat, CMat> halfSpinBases(const GammaRep& rep) {
    if (rep.n % 2) throw std::invalid_argument("half-spin modules need even dimension");
    CMat vol = actForm(rep, Form::volume(rep.n));
    // vol^2 = (-1)^(n/2), so the eigenvalues are +-1 or +-i
    Gauss root = (rep.n / 2) % 2 ? imagUnit() : Gauss(1);
    return {eigenspace(vol, root), eigenspace(vol, -root)};
}

std::vector<CVec> distinguishedSpinors5d(const GammaRep& rep, Spinor5 kind) {
    if (rep.n != 5) throw std::invalid_argument("distinguished spinors live in dimension 5");
    CMat e = actForm(rep, parseForm(5, "2*e1^e2^e5 + 2*e3^e4^e5"));
    std::vector<CVec> out;
    if (kind == Spinor5::Line) {
        out.push_back(eigenspace(e, Gauss(4)).col(0));
        out.push_back(eigenspace(e, Gauss(-4)).col(0));
    } else {
        out.push_back(eigenspace(e, Gauss(0)).col(0));
    }
    return out;
}

bool kernelConditions5d(const Form& t, const Vec& x, Spinor5 kind) {
    if (t.dim() != 5 || x.size() != 5) throw std::invalid_argument("kernel conditions live in dimension 5");
    auto T = [&](int i, int j, int k) { return t.at(i - 1, j - 1, k - 1); };
    const int s = kind == Spinor5::Line ? 1 : -1;
    return x(0) == -s * T(2, 3, 4) && x(1) == s * T(1, 3, 4) && x(2) == -s * T(1, 2, 4) &&
           x(3) == s * T(1, 2, 3) && x(4) == 0 && T(1, 2, 5) == -s * T(3, 4, 5) &&
           T(2, 3, 5) == -s * T(1, 4, 5) && T(2, 4, 5) == s * T(1, 3, 5);
}

bool kernelMembership5d(const GammaRep& rep, const Form& t, const Vec& x, Spinor5 kind) {
    CMat op = actForm(rep, t.part(3)) + actVector(rep, x);
    for (const auto& psi : distinguishedSpinors5d(rep, kind))
        if (!isZeroMatrix<Gauss>(CMat(op * psi))) return false;
    return true;
}

} // namespace skewtor
