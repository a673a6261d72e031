#include "skewtor/acskit.hpp"

#include <functional>
#include <sstream>

namespace skewtor {

namespace {

Tensor3 table3(const Form& f) {
    const int n = f.dim();
    Tensor3 t(n);
    for (const auto& [b, c] : f.terms()) {
        if (__builtin_popcount(b) != 3) continue;
        auto idx = bladeIndices(b);
        const int p[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}};
        for (int s = 0; s < 6; ++s) t(idx[p[s][0]], idx[p[s][1]], idx[p[s][2]]) = s < 3 ? c : Rational(-c);
    }
    return t;
}

Mat table2(const Form& f) {
    const int n = f.dim();
    Mat m = Mat::Zero(n, n);
    for (const auto& [b, c] : f.terms()) {
        if (__builtin_popcount(b) != 2) continue;
        auto idx = bladeIndices(b);
        m(idx[0], idx[1]) = c;
        m(idx[1], idx[0]) = -c;
    }
    return m;
}

Tensor3 build(int n, const std::function<Rational(int, int, int)>& f) {
    Tensor3 t(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) t(i, j, k) = f(i, j, k);
    return t;
}

Mat build2(int n, const std::function<Rational(int, int)>& f) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = f(i, j);
    return m;
}

// t with the endomorphism a inserted in slot s: t(.., a e_i, ..).
Tensor3 slot(const Tensor3& t, int s, const Mat& a) {
    const int n = t.n;
    Tensor3 out(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                const Rational& v = t(i, j, k);
                if (v.is_zero()) continue;
                int idx[3] = {i, j, k};
                const int src = idx[s];
                for (int p = 0; p < n; ++p) {
                    // component src of a(e_p) is a(src, p)
                    if (a(src, p).is_zero()) continue;
                    idx[s] = p;
                    out(idx[0], idx[1], idx[2]) += a(src, p) * v;
                }
            }
    return out;
}

Tensor3 phiAll(const Tensor3& t, const Mat& a) { return slot(slot(slot(t, 0, a), 1, a), 2, a); }

Residual zero3(const std::string& name, const Tensor3& t) {
    for (int i = 0; i < t.n; ++i)
        for (int j = 0; j < t.n; ++j)
            for (int k = 0; k < t.n; ++k)
                if (!t(i, j, k).is_zero()) {
                    std::ostringstream os;
                    os << "residual(" << i + 1 << "," << j + 1 << "," << k + 1 << ")=" << str(t(i, j, k));
                    return {name, false, os.str()};
                }
    return {name, true, "0"};
}

bool isSkewTable(const Tensor3& t) {
    const int n = t.n;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (t(i, j, k) != -t(i, k, j) || t(i, j, k) != -t(j, i, k)) return false;
    return true;
}

Form formOf(const Tensor3& t) {
    Form f(t.n);
    for (int i = 0; i < t.n; ++i)
        for (int j = i + 1; j < t.n; ++j)
            for (int k = j + 1; k < t.n; ++k) f.add(bladeOf({i, j, k}), t(i, j, k));
    return f;
}

Form formOf(const Mat& m) {
    Form f(static_cast<int>(m.rows()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = i + 1; j < m.cols(); ++j) f.add(bladeOf({i, j}), m(i, j));
    return f;
}

// N(X,Y) = [PX,PY] + P^2[X,Y] - P[PX,Y] - P[X,PY] (+ extra(X,Y))
Tensor3 nijenhuisTable(const LieModel& m, const Mat& p, const std::function<Vec(int, int)>& extra) {
    const int n = m.dim();
    Tensor3 t(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Vec x = basisVector(n, i), y = basisVector(n, j);
            Vec px = p.col(i), py = p.col(j);
            Vec v = m.bracket(px, py) + p * (p * m.bracket(x, y)) - p * m.bracket(px, y) - p * m.bracket(x, py);
            if (extra) v += extra(i, j);
            for (int k = 0; k < n; ++k) t(i, j, k) = v(k);
        }
    return t;
}

// g((nabla^g_{e_i} P) e_j, e_k)
Tensor3 nablaEndo(const Connection& lc, const Mat& p) {
    const int n = lc.dim();
    return build(n, [&](int i, int j, int k) {
        Rational s = 0;
        for (int a = 0; a < n; ++a) {
            if (!p(a, j).is_zero()) s += p(a, j) * lc.w(i, a, k);
            if (!p(k, a).is_zero()) s -= lc.w(i, j, a) * p(k, a);
        }
        return s;
    });
}

// Defect of nabla_{e_i} commuting with P: M_i P - P M_i with M_i(k,j) = w(i,j,k).
Residual commutesWith(const std::string& name, const Connection& conn, const Mat& p) {
    const int n = conn.dim();
    for (int i = 0; i < n; ++i) {
        Mat mi = conn.matrix(i).transpose();
        Mat c = mi * p - p * mi;
        std::string f = firstNonzero(c, "[nabla_" + std::to_string(i + 1) + ",P]");
        if (!f.empty()) return {name, false, f};
    }
    return {name, true, "0"};
}

Residual metricResidual(const Connection& conn) {
    const int n = conn.dim();
    Tensor3 d = build(n, [&](int i, int j, int k) { return conn.w(i, j, k) + conn.w(i, k, j); });
    return zero3("nabla g = 0", d);
}

bool squareRoot(const Rational& q, Rational& out) {
    using boost::multiprecision::mpz_int;
    if (q < 0) return false;
    mpz_int num = numerator(q), den = denominator(q);
    mpz_int rn = sqrt(num), rd = sqrt(den);
    if (rn * rn != num || rd * rd != den) return false;
    out = Rational(rn) / Rational(rd);
    return true;
}

Rational ricciFormRho(const Curvature& cv, const Mat& p, int x, int y) {
    const int n = p.rows();
    Rational s = 0;
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
            if (!p(k, i).is_zero()) s += cv.R(x, y, i, k) * p(k, i);
    return s / 2;
}

RicciForms ricciFormsImpl(const LieModel& m, const Mat& p, const Form& t, bool hermitian) {
    const int n = m.dim();
    Connection conn = withTorsion(m, t);
    Curvature cv = curvature(m, conn);
    Tensor3 tt = table3(t);
    Form dT = m.d(t);
    RicciForms out;
    out.ric = cv.ric;
    out.torsionSq = torsionSquare(t);
    out.rho = build2(n, [&](int x, int y) { return ricciFormRho(cv, p, x, y); });
    // sum_i T(., e_i, P e_i)
    Vec c(n);
    for (int x = 0; x < n; ++x) {
        Rational s = 0;
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k)
                if (!p(k, i).is_zero()) s += tt(x, i, k) * p(k, i);
        c(x) = s;
    }
    if (hermitian)
        out.omega = -(p.transpose() * c) / 2;  // theta(X) = -1/2 sum T(JX, e_i, J e_i)
    else
        out.omega = -c / 2;
    out.lambda = build2(n, [&](int x, int y) {
        Rational s = 0;
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k)
                if (!p(k, i).is_zero()) s += dT.at(x, y, i, k) * p(k, i);
        return s;
    });
    return out;
}

// (nabla_{e_x} a)(e_y) for a 1-form with constant coefficients.
Mat nablaOneForm(const Connection& conn, const Vec& a) {
    const int n = conn.dim();
    return build2(n, [&](int x, int y) {
        Rational s = 0;
        for (int k = 0; k < n; ++k) s -= conn.w(x, y, k) * a(k);
        return s;
    });
}

UniquenessCertificate uniqueness(int n, const Mat& p, const Vec* xi) {
    auto blades = bladesOfDegree(n, 3);
    const int rowsPerI = n * n + (xi ? n : 0);
    Mat sys = Mat::Zero(static_cast<Eigen::Index>(n) * rowsPerI, static_cast<Eigen::Index>(blades.size()));
    for (std::size_t b = 0; b < blades.size(); ++b) {
        Tensor3 s = table3(Form(n).add(blades[b], 1));
        for (int i = 0; i < n; ++i) {
            Mat mi(n, n);
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k) mi(k, j) = s(i, j, k) / 2;
            Mat c = mi * p - p * mi;
            int r = i * rowsPerI;
            for (int a = 0; a < n; ++a)
                for (int q = 0; q < n; ++q) sys(r++, b) = c(a, q);
            if (xi)
                for (int k = 0; k < n; ++k) {
                    Rational v = 0;
                    for (int a = 0; a < n; ++a) v += (*xi)(a) * s(i, a, k);
                    sys(r++, b) = v / 2;
                }
        }
    }
    return {rank(sys), static_cast<int>(blades.size())};
}

} // namespace

// ---------------------------------------------------------------------------

AlmostContact::AlmostContact(LieModel m, Vec xi, Mat phi) : m_(std::move(m)), xi_(std::move(xi)), phi_(std::move(phi)) {
    const int n = m_.dim();
    if (n % 2 == 0) throw InvalidStructure("almost contact structures live in odd dimension");
    if (xi_.size() != n || phi_.rows() != n || phi_.cols() != n)
        throw InvalidStructure("xi and phi must match the model dimension");
    if (xi_.dot(xi_) != 1) throw InvalidStructure("eta(xi) != 1");
    Mat id = Mat::Identity(n, n);
    Mat outer = xi_ * xi_.transpose();
    if (phi_ * phi_ != -id + outer) throw InvalidStructure("phi^2 != -Id + eta (x) xi");
    if (phi_.transpose() * phi_ != id - outer) throw InvalidStructure("phi is not compatible with g");
    if (!(phi_ * xi_).isZero()) throw InvalidStructure("phi xi != 0");
}

AlmostContact AlmostContact::fromPairs(LieModel m, int xi, const std::vector<std::pair<int, int>>& pairs) {
    const int n = m.dim();
    Mat p = Mat::Zero(n, n);
    for (auto [a, b] : pairs) {
        p(a, b) = 1;
        p(b, a) = -1;
    }
    Vec x = basisVector(n, xi);
    return AlmostContact(std::move(m), x, p);
}

Form AlmostContact::fundamental() const { return formOf(phi_); }

AlmostHermitian::AlmostHermitian(LieModel m, Mat j) : m_(std::move(m)), j_(std::move(j)) {
    const int n = m_.dim();
    if (n % 2) throw InvalidStructure("almost hermitian structures live in even dimension");
    if (j_.rows() != n || j_.cols() != n) throw InvalidStructure("J must match the model dimension");
    Mat id = Mat::Identity(n, n);
    if (j_ * j_ != -id) throw InvalidStructure("J^2 != -Id");
    if (j_.transpose() * j_ != id) throw InvalidStructure("J is not orthogonal");
}

AlmostHermitian AlmostHermitian::fromPairs(LieModel m, const std::vector<std::pair<int, int>>& pairs) {
    const int n = m.dim();
    Mat p = Mat::Zero(n, n);
    for (auto [a, b] : pairs) {
        p(a, b) = 1;
        p(b, a) = -1;
    }
    return AlmostHermitian(std::move(m), p);
}

Form AlmostHermitian::kaehler() const { return formOf(j_); }

bool NijTensor::isZero() const {
    for (const auto& v : table.v)
        if (!v.is_zero()) return false;
    return true;
}

Form NijTensor::form() const {
    if (!skew) throw std::logic_error("Nijenhuis tensor is not a 3-form");
    return formOf(table);
}

NijTensor nijenhuis(const AlmostContact& s) {
    const LieModel& m = s.model();
    Mat deta = table2(m.d(s.eta()));
    NijTensor out;
    out.table = nijenhuisTable(m, s.phi(), [&](int i, int j) -> Vec { return deta(i, j) * s.xi(); });
    out.skew = isSkewTable(out.table);
    return out;
}

NijTensor nijenhuis(const AlmostHermitian& s) {
    NijTensor out;
    out.table = nijenhuisTable(s.model(), s.J(), {});
    out.skew = isSkewTable(out.table);
    return out;
}

Mat nijenhuis2(const AlmostContact& s) {
    Mat deta = table2(s.model().d(s.eta()));
    const Mat& p = s.phi();
    // d eta(P e_i, e_j) = (P^T deta)(i,j)
    return p.transpose() * deta + deta * p;
}

Mat nablaXi(const AlmostContact& s) {
    Connection lc = leviCivita(s.model());
    const int n = s.dim();
    return build2(n, [&](int i, int j) {
        Rational v = 0;
        for (int a = 0; a < n; ++a) v += s.xi()(a) * lc.w(i, a, j);
        return v;
    });
}

bool reebKilling(const AlmostContact& s) {
    Mat k = nablaXi(s);
    return Mat(k + k.transpose()).isZero();
}

Form dPhiF(const AlmostContact& s) {
    Tensor3 df = table3(s.model().d(s.fundamental()));
    Tensor3 t = phiAll(df, s.phi());
    for (auto& v : t.v) v = -v;
    return formOf(t);
}

Form contactTorsion(const AlmostContact& s) {
    NijTensor nij = nijenhuis(s);
    if (!nij.skew)
        throw NoSkewConnection(NoSkewConnection::Reason::NijenhuisNotSkew,
                               "Nijenhuis tensor is not totally skew-symmetric");
    if (!reebKilling(s))
        throw NoSkewConnection(NoSkewConnection::Reason::NotKilling, "the Reeb vector field is not Killing");
    const LieModel& m = s.model();
    Form eta = s.eta(), n3 = nij.form();
    return wedge(eta, m.d(eta)) + dPhiF(s) + n3 - wedge(eta, interior(s.xi(), n3));
}

Form hermitianTorsion(const AlmostHermitian& s) {
    NijTensor nij = nijenhuis(s);
    const LieModel& m = s.model();
    Form dOmega = m.d(s.kaehler());
    if (!nij.skew) {
        if (dOmega.isZero())
            throw NoSkewConnection(NoSkewConnection::Reason::AlmostKaehler,
                                   "almost Kaehler and not Kaehler: no hermitian connection with skew torsion");
        throw NoSkewConnection(NoSkewConnection::Reason::NijenhuisNotSkew,
                               "Nijenhuis tensor is not totally skew-symmetric");
    }
    Tensor3 t = phiAll(table3(dOmega), s.J());
    for (auto& v : t.v) v = -v;
    return formOf(t) + nij.form();
}

std::vector<Residual> contactParallelism(const AlmostContact& s, const Form& t) {
    Connection conn = withTorsion(s.model(), t);
    std::vector<Residual> out;
    out.push_back(metricResidual(conn));
    out.push_back(zeroResidual("nabla eta = 0", nablaOneForm(conn, s.xi())));
    out.push_back(commutesWith("nabla phi = 0", conn, s.phi()));
    return out;
}

std::vector<Residual> hermitianParallelism(const AlmostHermitian& s, const Form& t) {
    Connection conn = withTorsion(s.model(), t);
    std::vector<Residual> out;
    out.push_back(metricResidual(conn));
    out.push_back(commutesWith("nabla J = 0", conn, s.J()));
    // nearly Kaehler input: (nabla^g_X J)X = 0, and then 4T = N
    Tensor3 nj = nablaEndo(leviCivita(s.model()), s.J());
    bool nearly = true;
    for (int i = 0; i < s.dim() && nearly; ++i)
        for (int j = 0; j < s.dim() && nearly; ++j)
            for (int k = 0; k < s.dim(); ++k)
                if (nj(i, j, k) != -nj(j, i, k)) { nearly = false; break; }
    if (nearly) {
        NijTensor nij = nijenhuis(s);
        Form diff = Rational(4) * t - (nij.skew ? nij.form() : Form(s.dim()));
        out.push_back(zeroResidual("nearly Kaehler: 4T = N", diff));
    }
    return out;
}

UniquenessCertificate contactUniqueness(const AlmostContact& s) { return uniqueness(s.dim(), s.phi(), &s.xi()); }

UniquenessCertificate hermitianUniqueness(const AlmostHermitian& s) { return uniqueness(s.dim(), s.J(), nullptr); }

RicciForms ricciForms(const AlmostContact& s, const Form& t) { return ricciFormsImpl(s.model(), s.phi(), t, false); }

RicciForms ricciForms(const AlmostHermitian& s, const Form& t) { return ricciFormsImpl(s.model(), s.J(), t, true); }

Residual contactRicciFormIdentity(const AlmostContact& s, const Form& t) {
    RicciForms rf = ricciForms(s, t);
    Connection conn = withTorsion(s.model(), t);
    Mat nablaOmega = nablaOneForm(conn, rf.omega);
    Mat rhs = Mat(rf.ric * s.phi()) - nablaOmega + rf.lambda / 4;
    return zeroResidual("Ricci form identity (contact)", Mat(rf.rho - rhs));
}

SUnCriterion suNCriterion(const AlmostHermitian& s, const Form& t) {
    RicciForms rf = ricciForms(s, t);
    Connection conn = withTorsion(s.model(), t);
    Mat nablaTheta = nablaOneForm(conn, rf.omega);
    SUnCriterion out;
    out.rightHandSide = Mat(rf.ric * s.J()) + Mat(nablaTheta * s.J()) + rf.lambda / 4;
    out.identity = zeroResidual("Ricci form identity (hermitian)", Mat(rf.rho - out.rightHandSide));
    out.rhoVanishes = rf.rho.isZero();
    return out;
}

std::vector<Residual> contactGeneralIdentities(const AlmostContact& s) {
    const LieModel& m = s.model();
    const int n = s.dim();
    const Mat& p = s.phi();
    const Vec& eta = s.xi();
    Connection lc = leviCivita(m);
    Tensor3 np = nablaEndo(lc, p);
    Tensor3 df = table3(m.d(s.fundamental()));
    Tensor3 nt = nijenhuis(s).table;
    Mat n2 = nijenhuis2(s);
    Mat deta = table2(m.d(s.eta()));
    Mat nx = nablaXi(s);
    Mat nEta = nablaOneForm(lc, eta);
    auto xiDot = [&](const Tensor3& t, int slotIdx, int a, int b) {
        Rational v = 0;
        for (int q = 0; q < n; ++q) {
            if (eta(q).is_zero()) continue;
            int idx[3];
            int r = 0;
            for (int z = 0; z < 3; ++z) idx[z] = z == slotIdx ? q : (r++ == 0 ? a : b);
            v += eta(q) * t(idx[0], idx[1], idx[2]);
        }
        return v;
    };

    std::vector<Residual> out;
    {
        Tensor3 dfPP = slot(slot(df, 1, p), 2, p);
        Tensor3 nP = slot(nt, 2, p);  // N(Y,Z,phi X) read as nP(Y,Z,X)
        Mat etaDphi = p.transpose() * deta;  // d eta(phi e_i, e_j)
        Mat detaPhi = deta * p;              // d eta(e_i, phi e_j)
        Tensor3 r = build(n, [&](int x, int y, int z) {
            Rational rhs = dfPP(x, y, z) - df(x, y, z) + nP(y, z, x) + eta(x) * n2(y, z) + eta(z) * etaDphi(y, x) +
                           eta(y) * detaPhi(x, z);
            return 2 * np(x, y, z) - rhs;
        });
        out.push_back(zero3("2 g((nabla_X phi)Y,Z) through dF, N, N^2 and d eta", r));
    }
    {
        Tensor3 npPP = slot(slot(np, 1, p), 2, p);
        Mat nEtaP = nEta * p;  // (nabla_X eta)(phi e_j)
        Tensor3 r = build(n, [&](int x, int y, int z) {
            return np(x, y, z) + npPP(x, y, z) - (eta(y) * nEtaP(x, z) - eta(z) * nEtaP(x, y));
        });
        out.push_back(zero3("(nabla_X phi)Y + (nabla_X phi)phi Y against nabla eta", r));
    }
    {
        Tensor3 npP = slot(np, 1, p);
        Mat a = build2(n, [&](int x, int y) {
            Rational v = 0;
            for (int q = 0; q < n; ++q) v += eta(q) * npP(x, y, q);
            return v;
        });
        Mat r(2 * n, n);
        r << Mat(a - nEta), Mat(nEta - nx);
        out.push_back(zeroResidual("g((nabla_X phi)phi Y, xi) = (nabla_X eta)Y = g(nabla_X xi, Y)", r));
    }
    {
        Tensor3 nPP = slot(slot(nt, 0, p), 1, p);
        Tensor3 r = build(n, [&](int x, int y, int z) {
            return nt(x, y, z) + nPP(x, y, z) - eta(x) * xiDot(nt, 0, y, z) - eta(y) * xiDot(nt, 1, x, z);
        });
        out.push_back(zero3("N(X,Y,Z) = -N(phi X,phi Y,Z) + eta terms", r));
    }
    {
        Tensor3 nPxPz = slot(slot(nt, 0, p), 2, p);
        Tensor3 nYZ = slot(slot(nt, 1, p), 2, p);  // N(., phi Y, phi Z)
        Tensor3 r = build(n, [&](int x, int y, int z) {
            Rational xiPhi = 0;
            for (int q = 0; q < n; ++q) xiPhi += eta(q) * nYZ(q, y, z);
            // eta(Z) N(X,Y,xi): with N(xi,X,Y) in that slot the identity fails at X = Y
            return nt(x, y, z) + nPxPz(x, y, z) - eta(z) * xiDot(nt, 2, x, y) + eta(x) * xiPhi;
        });
        out.push_back(zero3("N(X,Y,Z) = -N(phi X,Y,phi Z) + eta terms", r));
    }
    return out;
}

std::vector<Residual> contactNijenhuisIdentities(const AlmostContact& s) {
    const LieModel& m = s.model();
    const int n = s.dim();
    const Mat& p = s.phi();
    const Vec& eta = s.xi();
    Connection lc = leviCivita(m);
    Tensor3 np = nablaEndo(lc, p);
    Tensor3 df = table3(m.d(s.fundamental()));
    Tensor3 nt = nijenhuis(s).table;
    Mat nx = nablaXi(s);
    std::vector<Residual> out;
    {
        Tensor3 a = slot(slot(df, 1, p), 2, p), b = slot(slot(df, 0, p), 2, p), c = slot(slot(df, 0, p), 1, p);
        Tensor3 nP = slot(nt, 2, p);
        Tensor3 r = build(n, [&](int x, int y, int z) {
            Rational dfMinus = a(x, y, z) + b(x, y, z) + c(x, y, z) - df(x, y, z);
            return dfMinus + nP(x, y, z) + nP(y, z, x) + nP(z, x, y);
        });
        out.push_back(zero3("dF^- = -N(X,Y,phi Z) - N(Y,Z,phi X) - N(Z,X,phi Y)", r));
    }
    {
        Tensor3 np0 = slot(np, 0, p), np1 = slot(np, 1, p);
        Tensor3 r = build(n, [&](int x, int y, int z) {
            Rational rhs = np0(x, y, z) - np0(y, x, z) + np1(x, y, z) - np1(y, x, z) - eta(y) * nx(x, z) +
                           eta(x) * nx(y, z);
            return nt(x, y, z) - rhs;
        });
        out.push_back(zero3("N through nabla^g phi", r));
    }
    return out;
}

ReebChain reebChain(const AlmostContact& s) {
    NijTensor nij = nijenhuis(s);
    if (!nij.skew)
        throw NoSkewConnection(NoSkewConnection::Reason::NijenhuisNotSkew,
                               "Nijenhuis tensor is not totally skew-symmetric");
    if (!reebKilling(s))
        throw NoSkewConnection(NoSkewConnection::Reason::NotKilling, "the Reeb vector field is not Killing");
    const LieModel& m = s.model();
    const int n = s.dim();
    const Mat& p = s.phi();
    const Vec& xi = s.xi();
    Mat nx = nablaXi(s);
    Mat deta = table2(m.d(s.eta()));
    Tensor3 df = table3(m.d(s.fundamental()));
    const Tensor3& nt = nij.table;
    auto withXi = [&](const Tensor3& t) {
        return build2(n, [&](int x, int y) {
            Rational v = 0;
            for (int q = 0; q < n; ++q) v += xi(q) * t(x, y, q);
            return v;
        });
    };
    ReebChain out;
    out.commonValue = nijenhuis2(s);
    Mat a1 = withXi(slot(nt, 0, p)), a2 = withXi(slot(nt, 1, p)), a4 = withXi(df);
    Mat a5 = -withXi(slot(slot(df, 0, p), 1, p));
    out.residuals.push_back(zeroResidual("nabla^g_xi xi = 0", Mat(Mat(xi.transpose() * nx).transpose())));
    out.residuals.push_back(zeroResidual("xi -| d eta = 0", Mat(Mat(xi.transpose() * deta).transpose())));
    out.residuals.push_back(zeroResidual("N(phi X,Y,xi) = N^2(X,Y)", Mat(a1 - out.commonValue)));
    out.residuals.push_back(zeroResidual("N(X,phi Y,xi) = N^2(X,Y)", Mat(a2 - out.commonValue)));
    out.residuals.push_back(zeroResidual("dF(X,Y,xi) = N^2(X,Y)", Mat(a4 - out.commonValue)));
    out.residuals.push_back(zeroResidual("-dF(phi X,phi Y,xi) = N^2(X,Y)", Mat(a5 - out.commonValue)));
    return out;
}

Residual closedFundamentalFormCheck(const AlmostContact& s) {
    const std::string name = "dF = 0 and skew N force N = 0";
    NijTensor nij = nijenhuis(s);
    if (!s.model().d(s.fundamental()).isZero() || !nij.skew) return {name, true, "hypothesis not met"};
    if (nij.isZero()) return {name, true, "N = 0"};
    return {name, false, "N = " + nij.form().toString()};
}

std::vector<Residual> hermitianGeneralIdentities(const AlmostHermitian& s) {
    const LieModel& m = s.model();
    const int n = s.dim();
    const Mat& j = s.J();
    Tensor3 nj = nablaEndo(leviCivita(m), j);
    Tensor3 dO = table3(m.d(s.kaehler()));
    NijTensor nij = nijenhuis(s);
    const Tensor3& nt = nij.table;
    std::vector<Residual> out;
    {
        Tensor3 dJJ = slot(slot(dO, 1, j), 2, j);
        Tensor3 nJ = slot(nt, 2, j);
        Tensor3 r = build(n, [&](int x, int y, int z) {
            return 2 * nj(x, y, z) - (dJJ(x, y, z) - dO(x, y, z) + nJ(y, z, x));
        });
        out.push_back(zero3("2 g((nabla_X J)Y,Z) through d Omega and N", r));
    }
    if (nij.skew) {
        Tensor3 a = slot(slot(dO, 1, j), 2, j), b = slot(slot(dO, 0, j), 1, j), c = slot(slot(dO, 0, j), 2, j);
        Tensor3 nJ = slot(nt, 0, j);
        Tensor3 r = build(n, [&](int x, int y, int z) {
            return a(x, y, z) - dO(x, y, z) + b(x, y, z) + c(x, y, z) + 3 * nJ(x, y, z);
        });
        out.push_back(zero3("4 d Omega^- = -3 N(JX,Y,Z)", r));
    }
    return out;
}

bool isSasakian(const AlmostContact& s) {
    const LieModel& m = s.model();
    if (m.d(s.eta()) != Rational(2) * s.fundamental()) return false;
    return nijenhuis(s).isZero() && reebKilling(s);
}

AlmostContact tannoDeform(const AlmostContact& s, const Rational& a2) {
    if (a2 <= 0) throw std::invalid_argument("a^2 must be positive");
    if (!isSasakian(s)) throw std::invalid_argument("Tanno deformation needs a Sasakian structure");
    const int n = s.dim();
    int r = -1;
    for (int i = 0; i < n; ++i)
        if (s.xi()(i) == 1) r = i;
    if (r < 0) throw std::invalid_argument("the Reeb vector must be a frame vector");
    Rational a;
    const bool haveA = squareRoot(a2, a);
    auto weight = [&](int i) { return i == r ? 2 : 1; };
    std::vector<Form> de(n, Form(n));
    const LieModel& m = s.model();
    for (int i = 0; i < n; ++i)
        for (const auto& [b, c] : m.de(i).terms()) {
            auto idx = bladeIndices(b);
            int e = weight(idx[0]) + weight(idx[1]) - weight(i);
            Rational f = 1;
            for (int q = 0; q < e / 2; ++q) f *= a2;
            if (e % 2) {
                if (!haveA) throw std::invalid_argument("odd weight needs a rational a; a^2 = " + str(a2));
                f *= a;
            }
            de[i].add(b, c * f);
        }
    return AlmostContact(LieModel(m.name() + "~", de), s.xi(), s.phi());
}

Mat tannoRicci(const Mat& ric, int xi, const Rational& a2) {
    const int n = ric.rows();
    Mat out = Mat::Zero(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == xi || j == xi) continue;
            Rational delta = i == j ? 1 : 0;
            out(i, j) = a2 * (ric(i, j) + 2 * delta) - 2 * delta;
        }
    out(xi, xi) = ric(xi, xi);
    return out;
}

namespace {

const std::vector<std::pair<int, int>> kPairs6 = {{0, 1}, {2, 3}, {4, 5}};

Form nkTorsion(const Rational& s) {
    Form re = parseForm(6, "e135 - e146 - e236 - e245");
    Form im = parseForm(6, "e136 + e145 + e235 - e246");
    return (s / 2) * (re + im);
}

} // namespace

std::vector<Residual> nearlyKaehlerAlgebra(const Rational& a) {
    Rational s;
    if (!squareRoot(a, s)) throw std::invalid_argument("a must be the square of a rational");
    const int n = 6;
    Mat j = Mat::Zero(n, n);
    for (auto [p, q] : kPairs6) {
        j(p, q) = 1;
        j(q, p) = -1;
    }
    Form omega = formOf(j);
    Form t = nkTorsion(s);
    Form dT = a * wedge(omega, omega);
    Form sigma = sigmaT(t);
    Mat g = Mat::Identity(n, n);
    Mat tt = torsionSquare(t);
    Mat ricG = Rational(5, 2) * a * g;
    Mat ricN = ricG - tt / 4;

    std::vector<Residual> out;
    Tensor3 t3 = table3(t);
    Tensor3 tJJ = slot(slot(t3, 0, j), 1, j);
    Tensor3 typ = build(n, [&](int x, int y, int z) { return tJJ(x, y, z) + t3(x, y, z); });
    out.push_back(zero3("T(JX,JY,Z) = -T(X,Y,Z)", typ));
    out.push_back(zeroResidual("T_imn T_jmn = 2a g", Mat(tt - 2 * a * g)));
    out.push_back(zeroResidual("2 sigma^T = dT = a Omega ^ Omega", Form(Rational(2) * sigma - dT)));
    out.push_back(zeroResidual("Ric^nabla = Ric^g - 1/4 TT = 2a g", Mat(ricN - 2 * a * g)));
    // lambda^omega(X,Y) = sum dT(X,Y,e_i,J e_i); Ric^nabla(X,Y) = 1/4 lambda(X,JY)
    Mat lam = build2(n, [&](int x, int y) {
        Rational v = 0;
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k)
                if (!j(k, i).is_zero()) v += dT.at(x, y, i, k) * j(k, i);
        return v;
    });
    out.push_back(zeroResidual("Ric^nabla(X,Y) = 1/4 lambda^omega(X,JY)", Mat(ricN - Mat(lam * j) / 4)));
    Form lhs = Rational(3, 4) * dT - Rational(1, 2) * sigma, rhs = Rational(1, 4) * dT + Rational(1, 2) * sigma;
    out.push_back(zeroResidual("3/4 dT - 1/2 sigma^T = 1/4 dT + 1/2 sigma^T", Form(lhs - rhs)));
    Rational scal = ricN.trace();
    Form endo = lhs + Form::constant(n, scal / 4);
    Form expected = a * parseForm(n, "e1234 + e1256 + e3456 + 3");
    out.push_back(zeroResidual("3/4 dT - 1/2 sigma^T + 1/4 Scal = a(e1234 + e1256 + e3456 + 3)", Form(endo - expected)));
    // constant type: |T(X,Y)|^2 = 1/2 a (|X|^2|Y|^2 - g(X,Y)^2 - g(X,JY)^2)
    {
        std::string first;
        std::vector<Vec> probes;
        for (int i = 0; i < n; ++i) probes.push_back(basisVector(n, i));
        for (int i = 0; i < n; ++i)
            for (int k = i + 1; k < n; ++k) probes.push_back(basisVector(n, i) + Rational(k + 1) * basisVector(n, k));
        for (const Vec& x : probes)
            for (const Vec& y : probes) {
                Vec txy = Vec::Zero(n);
                for (int z = 0; z < n; ++z) txy(z) = evaluate(t, {x, y, basisVector(n, z)});
                Rational l = txy.dot(txy);
                Rational gxy = x.dot(y), gxjy = x.dot(j * y);
                Rational r = a / 2 * (x.dot(x) * y.dot(y) - gxy * gxy - gxjy * gxjy);
                if (l != r && first.empty()) first = "difference " + str(l - r);
            }
        out.push_back({"constant type |T(X,Y)|^2", first.empty(), first.empty() ? "0" : first});
    }
    // 1/2 (X -| dT) Psi - Ric(X) Psi = 0 for all X exactly on E+ + E-
    if (!a.is_zero()) {
        GammaRep rep = buildRep(n);
        std::vector<CMat> eqs, ePlus, eMinus;
        for (int x = 0; x < n; ++x) {
            Vec ex = basisVector(n, x);
            eqs.push_back(CMat(actForm(rep, Rational(1, 2) * interior(x, dT)) - actVector(rep, Vec(ricN * ex))));
            CMat jx = actVector(rep, Vec(j * ex)), vx = actVector(rep, ex);
            ePlus.push_back(CMat(jx + imagUnit() * vx));
            eMinus.push_back(CMat(jx - imagUnit() * vx));
        }
        CMat k = commonKernel(eqs, rep.size());
        CMat kp = commonKernel(ePlus, rep.size()), km = commonKernel(eMinus, rep.size());
        CMat all(rep.size(), k.cols() + kp.cols() + km.cols());
        all << k, kp, km;
        const int rk = rank<Gauss>(all);
        std::ostringstream os;
        os << "dim kernel " << k.cols() << ", dim E+ " << kp.cols() << ", dim E- " << km.cols() << ", span " << rk;
        bool ok = k.cols() == 2 && kp.cols() == 1 && km.cols() == 1 && rk == 2;
        out.push_back({"1/2 (X -| dT) Psi = Ric(X) Psi exactly on E+ and E-", ok, os.str()});
    }
    return out;
}

std::pair<EigenReport, EigenReport> nearlyKaehlerSpinorSpectrum(const Rational& a) {
    GammaRep rep = buildRep(6);
    CMat e = actForm(rep, a * parseForm(6, "e1234 + e1256 + e3456 + 3"));
    auto [plus, minus] = halfSpinBases(rep);
    return {eigenvalues(restrictTo(e, plus)), eigenvalues(restrictTo(e, minus))};
}

} // namespace skewtor
