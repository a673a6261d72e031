#include "skewtor/equivar.hpp"

#include "skewtor/g2kit.hpp"
#include "skewtor/liegeom.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace skewtor {

namespace {

constexpr int N = 7;

int power7(int k) {
    int p = 1;
    for (int i = 0; i < k; ++i) p *= N;
    return p;
}

Form formOfMatrix(const Mat& a) {
    Form f(N);
    for (int i = 0; i < N; ++i)
        for (int j = i + 1; j < N; ++j)
            if (!a(i, j).is_zero()) f += a(i, j) * Form::e(N, {i + 1, j + 1});
    return f;
}

// A * B skipping zero entries; the g2 generators are very sparse.
Mat sparseProduct(const Mat& a, const Mat& b) {
    Mat out = Mat::Zero(a.rows(), b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index k = 0; k < a.cols(); ++k) {
            if (a(i, k).is_zero()) continue;
            const Rational& x = a(i, k);
            for (Eigen::Index j = 0; j < b.cols(); ++j)
                if (!b(k, j).is_zero()) out(i, j) += x * b(k, j);
        }
    return out;
}

Mat columns(const std::vector<Vec>& cols) {
    Mat m(cols.front().size(), static_cast<Eigen::Index>(cols.size()));
    for (std::size_t c = 0; c < cols.size(); ++c) m.col(static_cast<Eigen::Index>(c)) = cols[c];
    return m;
}

Mat inverse(const Mat& a) {
    const Eigen::Index n = a.rows();
    Mat aug(n, 2 * n);
    aug << a, Mat::Identity(n, n);
    Echelon<Rational> e = rref<Rational>(aug);
    if (e.rank() != n || e.pivots.back() >= n) throw std::logic_error("singular Gram matrix");
    return e.m.rightCols(n);
}

std::vector<Form> valuedOfTensor(const Vec& t) {
    std::vector<Form> out(N, Form(N));
    for (int x = 0; x < N; ++x)
        for (int a = 0; a < N; ++a)
            for (int b = a + 1; b < N; ++b) {
                const Rational& v = t(x * 49 + a * 7 + b);
                if (!v.is_zero()) out[x] += v * Form::e(N, {a + 1, b + 1});
            }
    return out;
}

Form prG2(const Form& a) { return project2(a).part14; }

// Gamma(Y) = sum_j gamma(Y, j) e_j -| w3 as a 1-form with values in m.
std::vector<Form> mValued(const Mat& gamma) {
    std::vector<Form> out(N, Form(N));
    for (int y = 0; y < N; ++y)
        for (int j = 0; j < N; ++j)
            if (!gamma(y, j).is_zero()) out[y] += gamma(y, j) * interior(j, g2Form());
    return out;
}

Mat rankStack(const Mat& a, const std::vector<Vec>& extra) {
    Mat m(a.rows(), a.cols() + static_cast<Eigen::Index>(extra.size()));
    m.leftCols(a.cols()) = a;
    for (std::size_t c = 0; c < extra.size(); ++c) m.col(a.cols() + static_cast<Eigen::Index>(c)) = extra[c];
    return m;
}

} // namespace

Form bracket2(const Form& a, const Form& b) {
    Mat ma = skewMatrix(a), mb = skewMatrix(b);
    return formOfMatrix(mb * ma - ma * mb);
}

G2Algebra buildG2Basis() {
    G2Algebra g;
    const auto blades = bladesOfDegree(N, 2);
    Mat eq(N, static_cast<Eigen::Index>(blades.size()));
    for (std::size_t c = 0; c < blades.size(); ++c) {
        Form e(N);
        e.add(blades[c], 1);
        eq.col(static_cast<Eigen::Index>(c)) = g2Equations(e);
    }
    Mat ker = nullspace<Rational>(eq);
    for (Eigen::Index k = 0; k < ker.cols(); ++k) {
        Form f(N);
        for (std::size_t c = 0; c < blades.size(); ++c) f.add(blades[c], ker(static_cast<Eigen::Index>(c), k));
        g.basis.push_back(f);
    }
    const int d = static_cast<int>(g.basis.size());
    g.gram = Mat(d, d);
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) g.gram(a, b) = inner(g.basis[a], g.basis[b]);

    // coordinates in the basis via the free columns of the kernel
    Echelon<Rational> e = rref<Rational>(eq);
    std::vector<int> freeCols;
    for (int c = 0, p = 0; c < static_cast<int>(blades.size()); ++c) {
        if (p < e.rank() && e.pivots[p] == c) { ++p; continue; }
        freeCols.push_back(c);
    }
    g.closed = true;
    for (int a = 0; a < d; ++a) {
        Mat s = Mat::Zero(d, d);
        for (int b = 0; b < d; ++b) {
            Form br = bracket2(g.basis[a], g.basis[b]);
            if (!inG2(br)) g.closed = false;
            for (int c = 0; c < d; ++c) s(b, c) = br.coeff(blades[freeCols[c]]);
            Form back(N);
            for (int c = 0; c < d; ++c) back += s(b, c) * g.basis[c];
            if (back != br) g.closed = false;
        }
        g.bracket.push_back(s);
    }
    return g;
}

Vec TensorSpace::coordinates(const Vec& tensor) const {
    Vec c(dim());
    for (int i = 0; i < dim(); ++i) c(i) = tensor(pivots[i]);
    return c;
}

TensorSpace makeSpace(const std::string& name, int rank, const Mat& spanning) {
    Echelon<Rational> e = rref<Rational>(spanning.transpose());
    TensorSpace s;
    s.name = name;
    s.rank = rank;
    s.basis = e.m.topRows(e.rank()).transpose();
    s.pivots = e.pivots;
    return s;
}

Vec tensorOf(const Form& f) {
    const int p = f.degree() < 0 ? 0 : f.degree();
    Vec t = Vec::Zero(power7(p));
    for (const auto& [b, c] : f.terms()) {
        std::vector<int> idx = bladeIndices(b);
        // all permutations with signs
        std::vector<int> perm = idx;
        std::sort(perm.begin(), perm.end());
        do {
            int pos = 0;
            for (int i : perm) pos = pos * N + i;
            t(pos) = c * permutationSign(perm);
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return t;
}

Vec actOnTensor(const Form& xi, int rank, const Vec& t) {
    Mat a = skewMatrix(xi);
    const int size = power7(rank);
    Vec out = Vec::Zero(size);
    std::vector<int> stride(rank);
    for (int s = 0; s < rank; ++s) stride[s] = power7(rank - 1 - s);
    for (int pos = 0; pos < size; ++pos) {
        if (t(pos).is_zero()) continue;
        for (int s = 0; s < rank; ++s) {
            int j = (pos / stride[s]) % N;
            int base = pos - j * stride[s];
            for (int k = 0; k < N; ++k)
                if (!a(j, k).is_zero()) out(base + k * stride[s]) += a(j, k) * t(pos);
        }
    }
    return out;
}

Mat action(const TensorSpace& s, const Form& xi) {
    Mat out(s.dim(), s.dim());
    for (int c = 0; c < s.dim(); ++c) {
        Vec img = actOnTensor(xi, s.rank, s.basis.col(c));
        out.col(c) = s.coordinates(img);
    }
    return out;
}

std::string spaceName(G2Space which) {
    switch (which) {
    case G2Space::R7: return "R7";
    case G2Space::G2: return "g2";
    case G2Space::M: return "m";
    case G2Space::L2: return "Lambda2";
    case G2Space::L3: return "Lambda3";
    case G2Space::L4: return "Lambda4";
    case G2Space::L3_27: return "Lambda3_27";
    case G2Space::R7xM: return "R7(x)m";
    case G2Space::R7xG2: return "R7(x)g2";
    case G2Space::R7xS2: return "R7(x)S2";
    }
    return "?";
}

TensorSpace space(G2Space which) {
    const std::string name = spaceName(which);
    std::vector<Vec> span;
    auto forms = [&](const std::vector<Form>& fs) {
        for (const auto& f : fs) span.push_back(tensorOf(f));
    };
    auto allBlades = [&](int p) {
        std::vector<Form> fs;
        for (Blade b : bladesOfDegree(N, p)) {
            Form f(N);
            f.add(b, 1);
            fs.push_back(f);
        }
        return fs;
    };
    std::vector<Form> mBasis;
    for (int i = 0; i < N; ++i) mBasis.push_back(interior(i, g2Form()));
    // R^7 (x) V for V given by 2-tensors
    auto tensorWithR7 = [&](const std::vector<Vec>& v) {
        for (int x = 0; x < N; ++x)
            for (const Vec& t : v) {
                Vec big = Vec::Zero(power7(3));
                big.segment(x * 49, 49) = t;
                span.push_back(big);
            }
    };
    switch (which) {
    case G2Space::R7: forms(allBlades(1)); return makeSpace(name, 1, columns(span));
    case G2Space::G2: forms(buildG2Basis().basis); return makeSpace(name, 2, columns(span));
    case G2Space::M: forms(mBasis); return makeSpace(name, 2, columns(span));
    case G2Space::L2: forms(allBlades(2)); return makeSpace(name, 2, columns(span));
    case G2Space::L3: forms(allBlades(3)); return makeSpace(name, 3, columns(span));
    case G2Space::L4: forms(allBlades(4)); return makeSpace(name, 4, columns(span));
    case G2Space::L3_27: forms(lambda3_27Basis()); return makeSpace(name, 3, columns(span));
    case G2Space::R7xM: {
        std::vector<Vec> v;
        for (const auto& f : mBasis) v.push_back(tensorOf(f));
        tensorWithR7(v);
        return makeSpace(name, 3, columns(span));
    }
    case G2Space::R7xG2: {
        std::vector<Vec> v;
        for (const auto& f : buildG2Basis().basis) v.push_back(tensorOf(f));
        tensorWithR7(v);
        return makeSpace(name, 3, columns(span));
    }
    case G2Space::R7xS2: {
        std::vector<Vec> v;
        for (int y = 0; y < N; ++y)
            for (int z = y; z < N; ++z) {
                Vec s = Vec::Zero(49);
                s(y * 7 + z) = 1;
                s(z * 7 + y) = 1;
                v.push_back(s);
            }
        tensorWithR7(v);
        return makeSpace(name, 3, columns(span));
    }
    }
    throw std::logic_error("unknown space");
}

Vec symmetrizedImage(const std::vector<Form>& sigma) {
    Vec out = Vec::Zero(power7(3));
    for (int x = 0; x < N; ++x)
        for (int y = 0; y < N; ++y)
            for (int z = 0; z < N; ++z) out((x * N + y) * N + z) = sigma[z].at(x, y) + sigma[y].at(x, z);
    return out;
}

namespace {

BigMap symmetrizingMap(const std::string& name, const TensorSpace& dom) {
    BigMap m;
    m.name = name;
    m.domain = dom;
    m.codomain = space(G2Space::R7xS2);
    m.matrix = Mat(m.codomain.dim(), dom.dim());
    for (int c = 0; c < dom.dim(); ++c)
        m.matrix.col(c) = m.codomain.coordinates(symmetrizedImage(valuedOfTensor(dom.basis.col(c))));
    return m;
}

} // namespace

BigMap phiMap() { return symmetrizingMap("Phi", space(G2Space::R7xG2)); }
BigMap psiMap() { return symmetrizingMap("Psi", space(G2Space::R7xM)); }

Residual equivarianceResidual(const BigMap& m) {
    for (const Form& xi : buildG2Basis().basis) {
        Mat d = sparseProduct(action(m.codomain, xi), m.matrix) - sparseProduct(m.matrix, action(m.domain, xi));
        std::string f = firstNonzero(d, "defect");
        if (!f.empty()) return {m.name + " is g2-equivariant", false, f};
    }
    return {m.name + " is g2-equivariant", true, "0"};
}

std::vector<Residual> RankCertificates::residuals() const {
    auto eq = [](const std::string& name, int got, int want) {
        return Residual{name, got == want, std::to_string(got)};
    };
    return {eq("rank Phi = 98", rankPhi, 98),
            eq("ker Phi = 0", kernelPhi, 0),
            eq("dim Psi(Lambda^2_14) = 14", rankPsi14, 14),
            eq("rank [Phi | Psi(Lambda^2_14)] = 112", rankPhiPsi14, 112),
            eq("rank [Phi | Psi(Lambda^0_1)] = 98", rankPhiPsi1, 98),
            eq("rank [Phi | Psi(Lambda^1_7)] = 98", rankPhiPsi7, 98),
            eq("rank [Phi | Psi(Lambda^3_27)] = 98", rankPhiPsi27, 98),
            {"Psi(Id) = 0", psiIdentityZero, psiIdentityZero ? "0" : "nonzero"}};
}

RankCertificates rankCertificates() {
    RankCertificates r;
    BigMap phi = phiMap();
    const TensorSpace& cod = phi.codomain;
    r.rankPhi = rank<Rational>(phi.matrix);
    r.kernelPhi = phi.domain.dim() - r.rankPhi;

    auto psiOf = [&](const Mat& gamma) { return cod.coordinates(symmetrizedImage(mValued(gamma))); };

    std::vector<Vec> p14, p1, p7, p27;
    for (const Form& xi : buildG2Basis().basis) p14.push_back(psiOf(skewMatrix(xi)));
    Vec pid = psiOf(Mat::Identity(N, N));
    p1.push_back(pid);
    r.psiIdentityZero = isZeroMatrix<Rational>(Mat(pid));
    for (int b = 0; b < N; ++b) p7.push_back(psiOf(skewMatrix(interior(b, g2Form()))));
    for (const Form& g : lambda3_27Basis()) {
        Mat gamma(N, N);
        for (int x = 0; x < N; ++x)
            for (int i = 0; i < N; ++i) gamma(x, i) = inner(interior(x, g), interior(i, g2Form())) / 6;
        p27.push_back(psiOf(gamma));
    }
    r.rankPsi14 = rank<Rational>(columns(p14));
    r.rankPhiPsi14 = rank<Rational>(rankStack(phi.matrix, p14));
    r.rankPhiPsi1 = rank<Rational>(rankStack(phi.matrix, p1));
    r.rankPhiPsi7 = rank<Rational>(rankStack(phi.matrix, p7));
    r.rankPhiPsi27 = rank<Rational>(rankStack(phi.matrix, p27));
    return r;
}

Rational sigma0Constant() {
    std::optional<Rational> c;
    for (int b = 0; b < N; ++b) {
        Vec beta = basisVector(N, b);
        Form bf = Form::oneForm(beta);
        std::vector<Form> sigma0(N), gamma(N, Form(N));
        for (int y = 0; y < N; ++y) {
            sigma0[y] = prG2(wedge(bf, Form::e(N, {y + 1})));
            for (int j = 0; j < N; ++j)
                gamma[y] += g2Form().at(b, y, j) * interior(j, g2Form());
        }
        Vec lhs = symmetrizedImage(sigma0), rhs = symmetrizedImage(gamma);
        for (Eigen::Index i = 0; i < lhs.size(); ++i) {
            if (rhs(i).is_zero()) {
                if (!lhs(i).is_zero()) throw std::logic_error("Phi(Sigma0) is not proportional to Psi");
                continue;
            }
            Rational q = lhs(i) / rhs(i);
            if (c && *c != q) throw std::logic_error("Phi(Sigma0) is not proportional to Psi");
            c = q;
        }
    }
    if (!c) throw std::logic_error("Psi vanishes on Lambda^1_7");
    return *c;
}

std::vector<Residual> sigmaFormulaCheck() {
    const Form w = g2Form();
    auto check = [&](const Vec& beta, const Form& g27) {
        Form bf = Form::oneForm(beta);
        std::vector<Form> sigma(N), gamma(N, Form(N));
        for (int y = 0; y < N; ++y) {
            Form ey = Form::e(N, {y + 1});
            sigma[y] = Rational(-1, 2) * prG2(interior(y, g27) - Rational(1, 4) * wedge(bf, ey));
            for (int i = 0; i < N; ++i) {
                Rational c = inner(wedge(bf, ey), interior(i, w)) / 12 + inner(interior(y, g27), interior(i, w)) / 6;
                if (!c.is_zero()) gamma[y] += c * interior(i, w);
            }
        }
        return Vec(symmetrizedImage(sigma) - symmetrizedImage(gamma));
    };
    std::vector<Vec> defects27, defects7;
    for (const Form& g : lambda3_27Basis()) defects27.push_back(check(Vec::Zero(N), g));
    for (int b = 0; b < N; ++b) defects7.push_back(check(basisVector(N, b), Form(N)));
    return {zeroResidual("Phi(Sigma(G27)) = Psi(G27)", columns(defects27)),
            zeroResidual("Phi(Sigma(beta)) = Psi(beta)", columns(defects7))};
}

int IsotypicReport::accounted() const {
    int d = 0;
    for (const auto& p : parts) d += p.dim;
    return d;
}

std::string IsotypicReport::summary() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) os << " + ";
        if (parts[i].multiplicity > 1) os << parts[i].multiplicity << "x";
        os << parts[i].label;
    }
    return os.str();
}

Mat casimir(const TensorSpace& s) {
    G2Algebra g = buildG2Basis();
    Mat ginv = inverse(g.gram);
    const int d = static_cast<int>(g.basis.size());
    std::vector<Mat> rho;
    for (const Form& xi : g.basis) rho.push_back(action(s, xi));
    Mat c = Mat::Zero(s.dim(), s.dim());
    for (int a = 0; a < d; ++a) {
        Mat dual = Mat::Zero(s.dim(), s.dim());
        for (int b = 0; b < d; ++b)
            if (!ginv(a, b).is_zero()) dual += ginv(a, b) * rho[b];
        c -= sparseProduct(rho[a], dual);
    }
    return c;
}

CasimirCalibration calibrateCasimir() {
    // on an irreducible space the Casimir is a scalar; read it off (0,0)
    CasimirCalibration cal;
    cal.c1 = 0;
    cal.c7 = casimir(space(G2Space::R7))(0, 0);
    cal.c14 = casimir(space(G2Space::G2))(0, 0);
    cal.c27 = casimir(space(G2Space::L3_27))(0, 0);
    return cal;
}

IsotypicReport casimirDecompose(G2Space which) { return casimirDecompose(space(which), calibrateCasimir()); }

IsotypicReport casimirDecompose(const TensorSpace& s, const CasimirCalibration& cal) {
    IsotypicReport rep;
    rep.space = s.name;
    rep.dim = s.dim();
    Mat c = casimir(s);

    rep.commutes = true;
    for (const Form& xi : buildG2Basis().basis) {
        Mat a = action(s, xi);
        if (!isZeroMatrix<Rational>(Mat(sparseProduct(c, a) - sparseProduct(a, c)))) rep.commutes = false;
    }

    // the distinct eigenvalues are the roots of the minimal polynomial of a generic vector
    Vec v(s.dim());
    for (int i = 0; i < s.dim(); ++i) v(i) = Rational((i * 37 + 11) % 17 - 8, 1 + i % 5);
    Poly minimal = krylovMinimalPolynomial(c, v);
    RootReport roots = gaussianRationalRoots(minimal);
    if (!roots.residual.empty() && roots.residual.size() > 1)
        throw std::logic_error("Casimir spectrum is not rational on " + s.name);

    const std::map<int, Rational> known{{1, cal.c1}, {7, cal.c7}, {14, cal.c14}, {27, cal.c27}};
    for (const auto& [z, mult] : roots.roots) {
        (void)mult;
        if (!z.im.is_zero()) throw std::logic_error("complex Casimir eigenvalue");
        Mat shifted = c - z.re * Mat::Identity(s.dim(), s.dim());
        IsotypicPart part;
        part.casimir = z.re;
        part.dim = s.dim() - rank<Rational>(shifted);
        part.label = "UNMATCHED";
        for (const auto& [irrep, value] : known)
            if (value == z.re && part.dim % irrep == 0) {
                part.label = std::to_string(irrep);
                part.multiplicity = part.dim / irrep;
            }
        rep.parts.push_back(part);
    }
    // 64 and 77 are not calibrated; they are recognised by dimension alone
    for (auto& p : rep.parts)
        if (p.label == "UNMATCHED" && (p.dim == 64 || p.dim == 77)) {
            p.label = std::to_string(p.dim);
            p.multiplicity = 1;
        }
    std::sort(rep.parts.begin(), rep.parts.end(), [](const auto& a, const auto& b) { return a.casimir < b.casimir; });
    return rep;
}

} // namespace skewtor
