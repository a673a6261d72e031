#include "skewtor/g2kit.hpp"

namespace skewtor {

namespace {

const Rational kThird = Rational(1) / 3;

Form wE(int i) { return interior(i, g2Form()); }
Form sE(int i) { return interior(i, g2StarForm()); }

Residual equal(const std::string& name, const Form& lhs, const Form& rhs) {
    return zeroResidual(name, lhs - rhs);
}

Residual scalarEqual(const std::string& name, const Rational& lhs, const Rational& rhs) {
    bool ok = lhs == rhs;
    return {name, ok, ok ? str(lhs) : str(lhs) + " != " + str(rhs)};
}

Form fromVec(const Vec& v) { return Form::oneForm(v); }

// sum_i (e_i -| w3, a) e_i for a 2-form a: the vector Z with pr_m(a) = Z -| w3, times 3.
Vec mCoefficients(const Form& a) {
    Vec z(7);
    for (int i = 0; i < 7; ++i) z(i) = inner(wE(i), a);
    return z;
}

} // namespace

Form g2Form() { return parseForm(7, "e127 + e135 - e146 - e236 - e245 + e347 + e567"); }
Form g2StarForm() { return hodge(g2Form()); }

Vec g2Equations(const Form& a) { return mCoefficients(a); }

bool inG2(const Form& a) {
    Vec v = g2Equations(a);
    for (Eigen::Index i = 0; i < v.size(); ++i)
        if (!v(i).is_zero()) return false;
    return true;
}

Split2 project2(const Form& a) {
    Vec z = mCoefficients(a);
    Form p7(7);
    for (int i = 0; i < 7; ++i) p7 += (kThird * z(i)) * wE(i);
    return {p7, a - p7};
}

Split3 project3(const Form& a) {
    const Form w = g2Form();
    Form p1 = (inner(a, w) / 7) * w;
    Form p7(7);
    for (int i = 0; i < 7; ++i) p7 += (inner(a, sE(i)) / 4) * sE(i);
    return {p1, p7, a - p1 - p7};
}

std::vector<Form> lambda3_27Basis() {
    // kernel of a -> (a ^ w3, a ^ *w3) on Lambda^3
    const auto blades = bladesOfDegree(7, 3);
    const Form w = g2Form(), sw = g2StarForm();
    const auto six = bladesOfDegree(7, 6);
    Mat m = Mat::Zero(8, static_cast<Eigen::Index>(blades.size()));
    for (std::size_t c = 0; c < blades.size(); ++c) {
        Form e(7);
        e.add(blades[c], 1);
        Form a = wedge(e, w), b = wedge(e, sw);
        for (std::size_t r = 0; r < six.size(); ++r) m(static_cast<Eigen::Index>(r), c) = a.coeff(six[r]);
        m(7, c) = b.coeff(Blade(0x7f));
    }
    Mat ker = nullspace<Rational>(m);
    std::vector<Form> out;
    for (Eigen::Index k = 0; k < ker.cols(); ++k) {
        Form f(7);
        for (std::size_t c = 0; c < blades.size(); ++c) f.add(blades[c], ker(static_cast<Eigen::Index>(c), k));
        out.push_back(f);
    }
    return out;
}

Mat skewMatrix(const Form& a2) {
    const int n = a2.dim();
    Mat a = Mat::Zero(n, n);
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
            if (j != k) a(j, k) = a2.at(j, k);
    return a;
}

Form rhoOnForm(const Form& a2, const Form& f) { return derive(skewMatrix(a2), f); }

G2Structure::G2Structure(LieModel m) : G2Structure(std::move(m), g2Form()) {}

G2Structure::G2Structure(LieModel m, Form w) : model(std::move(m)), omega(std::move(w)) {
    if (model.dim() != 7) throw std::invalid_argument("G2 structure needs a 7-dimensional model");
    if (inner(omega, omega) != 7) throw std::invalid_argument("3-form does not have norm^2 7");
    for (int i = 0; i < 7; ++i) {
        Form x = interior(i, omega);
        if (hodge(wedge(omega, x)) != 2 * x)
            throw std::invalid_argument("3-form is not of G2 type: *(w ^ (X -| w)) != 2 X -| w");
    }
    if (omega != g2Form()) throw std::invalid_argument("only the canonical G2 frame is supported");
}

bool TorsionClass::cocalibrated() const {
    for (Eigen::Index i = 0; i < beta.size(); ++i)
        if (!beta(i).is_zero()) return false;
    return true;
}

bool TorsionClass::nearlyParallel() const {
    return !lambda.is_zero() && cocalibrated() && gamma27.isZero() && obstruction14.isZero();
}

TorsionClass classify(const G2Structure& s) {
    const LieModel& m = s.model;
    const Form w = s.omega, sw = hodge(w);
    Connection lc = leviCivita(m);
    TorsionClass out;

    // Gamma(e_i) = Z_i -| w3 from rho(Z -| w3) w3 = -3 Z -| *w3 and (e_i -| *w3, e_j -| *w3) = 4 delta
    out.gamma = Mat::Zero(7, 7);
    for (int i = 0; i < 7; ++i) {
        Form nab = covariant(lc, i, w);
        Form zw(7);
        for (int j = 0; j < 7; ++j) {
            out.gamma(i, j) = -inner(nab, sE(j)) / 12;
            zw += out.gamma(i, j) * wE(j);
        }
        if (rhoOnForm(zw, w) != nab) throw std::logic_error("nabla^g w3 is not in the image of m");
    }

    out.lambda = -inner(m.d(w), sw) / 7;
    out.lambdaTrace = out.gamma.trace() * 12 / 7;

    Form delta = codiff(m, w);
    out.beta = Vec::Zero(7);
    for (int j = 0; j < 7; ++j) out.beta(j) = -inner(delta, wE(j)) / 3;

    // skew part: Lambda^2_7 carries beta/12, Lambda^2_14 is the obstruction
    Form skew(7);
    for (int i = 0; i < 7; ++i)
        for (int j = i + 1; j < 7; ++j) skew += ((out.gamma(i, j) - out.gamma(j, i)) / 2) * Form::e(7, {i + 1, j + 1});
    out.obstruction14 = project2(skew).part14;

    // symmetric traceless part: S(X, e_i) = 1/6 (X -| Gamma27, e_i -| w3)
    Mat sym = (out.gamma + out.gamma.transpose()) / 2;
    for (int i = 0; i < 7; ++i) sym(i, i) -= out.gamma.trace() / 7;
    auto basis = lambda3_27Basis();
    Mat a = Mat::Zero(49, static_cast<Eigen::Index>(basis.size()));
    Vec b(49);
    for (int x = 0; x < 7; ++x)
        for (int i = 0; i < 7; ++i) {
            b(x * 7 + i) = sym(x, i);
            for (std::size_t k = 0; k < basis.size(); ++k)
                a(x * 7 + i, static_cast<Eigen::Index>(k)) = inner(interior(x, basis[k]), wE(i)) / 6;
        }
    auto c = solve<Rational>(a, b);
    if (!c) throw std::logic_error("symmetric part of Gamma is not of type Lambda^3_27");
    out.gamma27 = Form(7);
    for (std::size_t k = 0; k < basis.size(); ++k) out.gamma27 += (*c)(static_cast<Eigen::Index>(k)) * basis[k];
    return out;
}

Form torsionForm(const G2Structure& s) {
    TorsionClass tc = classify(s);
    if (!tc.hasSkewConnection())
        throw NoSkewConnection(NoSkewConnection::Reason::G2Obstruction,
                               "Lambda^2_14 component of Gamma is nonzero: " + tc.obstruction14.toString());
    const Form w = s.omega, sw = hodge(w), dw = s.model.d(w);
    return (inner(dw, sw) / 6) * w - hodge(dw) + hodge(wedge(fromVec(tc.beta), w));
}

Mat ricciViaDT(const G2Structure& s, const Form& t) {
    Connection conn = withTorsion(s.model, t);
    Form dT = s.model.d(t);
    Mat ric = Mat::Zero(7, 7);
    for (int a = 0; a < 7; ++a) {
        Form x = interior(a, dT) + 2 * covariant(conn, a, t);
        for (int i = 0; i < 7; ++i) ric(a, i) = inner(x, sE(i)) / 2;
    }
    return ric;
}

std::vector<Residual> g2RicciResiduals(const G2Structure& s, const Form& t) {
    const LieModel& m = s.model;
    Connection conn = withTorsion(m, t);
    Mat viaDT = ricciViaDT(s, t);
    Curvature cn = curvature(m, conn), cg = curvature(m, leviCivita(m));
    Form dT = m.d(t), delta = codiff(m, t);
    Mat tt = torsionSquare(t);
    Mat balance = cg.ric - tt / 4 - viaDT;
    Mat trace = Mat::Zero(7, 1);
    for (int i = 0; i < 7; ++i) {
        for (int j = 0; j < 7; ++j) balance(i, j) -= delta.at(i, j) / 2;
        trace(i) = inner(interior(i, dT), s.omega) + 2 * inner(covariant(conn, i, t), s.omega);
    }
    return {zeroResidual("Ric via dT and nabla T equals curvature Ric", Mat(viaDT - cn.ric)),
            zeroResidual("Ric^g - 1/4 TT - 1/2 (X -| dT + 2 nabla T, *w) - 1/2 delta T", balance),
            zeroResidual("(X -| dT, w3) = -2 (nabla_X T, w3)", trace)};
}

std::vector<Residual> nearlyParallelAlgebra(const Rational& lambda) {
    const Form w = g2Form(), sw = g2StarForm();
    const Rational l2 = lambda * lambda;
    Form t = (-lambda / 6) * w;
    Form dT = (l2 / 6) * sw;
    Form dw = -lambda * sw;
    Mat id = Mat::Identity(7, 7);
    Mat tt = torsionSquare(t);
    Mat half = Mat::Zero(7, 7);
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j) half(i, j) = inner(interior(i, dT), sE(j)) / 2;
    Mat ricg = id * (l2 * 27 / 72);
    Mat tStar = torsionSquare(3 * t);
    std::vector<Residual> out;
    out.push_back(zeroResidual("1/4 T_imn T_jmn = 3/72 lambda^2", Mat(tt / 4 - id * (l2 * 3 / 72))));
    out.push_back(zeroResidual("1/2 (e_i -| dT, e_j -| *w) = 24/72 lambda^2", Mat(half - id * (l2 * 24 / 72))));
    out.push_back(zeroResidual("Ric^g - 1/4 TT - 1/2 (e_i -| dT, e_j -| *w) = 0", Mat(ricg - tt / 4 - half)));
    out.push_back(zeroResidual("Ric^g - 1/4 T*T* = 0 with T* = 3T", Mat(ricg - tStar / 4)));
    out.push_back(equal("6T = 1/7 (dw, *w) w", 6 * t, (inner(dw, sw) / 7) * w));
    out.push_back(equal("dT = 2 sigma^T", dT, 2 * sigmaT(t)));
    return out;
}

RicciFlatReport ricciFlatConditions(const G2Structure& s, const Form& t) {
    TorsionClass tc = classify(s);
    if (!tc.cocalibrated()) throw std::invalid_argument("Ricci-flat criterion needs a cocalibrated structure");
    const LieModel& m = s.model;
    const Form w = s.omega, dw = m.d(w);
    const Rational c = tc.lambda * 7 / 6;
    RicciFlatReport r;
    r.ricciFlat = isZeroMatrix<Rational>(curvature(m, withTorsion(m, t)).ric);
    r.closedCoclosed = m.d(t).isZero() && codiff(m, t).isZero();
    r.cubicEquation = (m.d(hodge(dw)) + c * dw).isZero();
    r.wedgeIdentity = wedge(hodge(dw) + c * w, dw).isZero();
    return r;
}

std::vector<Residual> g2Constants() {
    const Form w = g2Form(), sw = g2StarForm();
    std::vector<Residual> out;
    Mat g3(7, 7), g4(7, 7);
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j) {
            g3(i, j) = inner(wE(i), wE(j)) - (i == j ? 3 : 0);
            g4(i, j) = inner(sE(i), sE(j)) - (i == j ? 4 : 0);
        }
    out.push_back(zeroResidual("(e_i -| w, e_j -| w) = 3 delta", g3));
    out.push_back(zeroResidual("(e_i -| *w, e_j -| *w) = 4 delta", g4));

    Form rho(7), g2act(7), tBeta(7), starBeta(7), c4(7), c3(7);
    for (int b = 0; b < 7; ++b) {
        rho += rhoOnForm(wE(b), w) + 3 * sE(b);
        Form beta = Form::e(7, {b + 1});
        Form s1(7), s2(7);
        for (int i = 0; i < 7; ++i)
            for (int j = 0; j < 7; ++j) {
                Rational c = inner(wedge(beta, Form::e(7, {j + 1})), wE(i));
                if (c.is_zero()) continue;
                s1 += c * interior(j, sE(i));
                s2 += c * wedge(Form::e(7, {j + 1}), sE(i));
            }
        c4 += s1 + 4 * interior(b, w);
        c3 += s2 + 3 * wedge(beta, w);
        starBeta += hodge(wedge(beta, w)) + interior(b, sw);
    }
    for (int i = 0; i < 7; ++i)
        for (int j = i + 1; j < 7; ++j) g2act += rhoOnForm(project2(Form::e(7, {i + 1, j + 1})).part14, w);
    out.push_back(zeroResidual("rho(Z -| w) w = -3 Z -| *w", rho));
    out.push_back(zeroResidual("rho(g2) w = 0", g2act));
    out.push_back(zeroResidual("sum (b ^ e_j, e_i -| w)(e_j -| e_i -| *w) = -4 b -| w", c4));
    out.push_back(zeroResidual("sum (b ^ e_j, e_i -| w)(e_j ^ e_i -| *w) = -3 b ^ w", c3));
    out.push_back(zeroResidual("*(b ^ w) = -b -| *w", starBeta));

    Form k0(7), k2(7), inv(7);
    for (const Form& g : lambda3_27Basis()) {
        Form s1(7), s2(7);
        for (int i = 0; i < 7; ++i)
            for (int j = 0; j < 7; ++j) {
                Rational c = inner(interior(j, g), wE(i));
                if (c.is_zero()) continue;
                s1 += c * interior(j, sE(i));
                s2 += c * wedge(Form::e(7, {j + 1}), sE(i));
            }
        k0 += s1;
        k2 += s2 + 2 * hodge(g);
        inv += wedge(g, w) + wedge(g, sw);
    }
    out.push_back(zeroResidual("Gamma27 ^ w = 0 = Gamma27 ^ *w on the basis", inv));
    out.push_back(zeroResidual("sum (e_j -| G, e_i -| w)(e_j -| e_i -| *w) = 0", k0));
    out.push_back(zeroResidual("sum (e_j -| G, e_i -| w)(e_j ^ e_i -| *w) = -2 *G", k2));

    // T_beta(X,Y,Z) = 3/8 (pr_m(b^Y)(X,Z) - pr_m(b^X)(Y,Z)) + 1/8 (b(Y) g(X,Z) - b(X) g(Y,Z)),
    // skew-symmetrized, against -1/4 b -| *w
    for (int b = 0; b < 7; ++b) {
        Form beta = Form::e(7, {b + 1});
        std::vector<Form> prm(7);
        for (int y = 0; y < 7; ++y) prm[y] = project2(wedge(beta, Form::e(7, {y + 1}))).part7;
        auto raw = [&](int x, int y, int z) {
            Rational v = Rational(3, 8) * (prm[y].at(x, z) - prm[x].at(y, z));
            if (y == b && x == z) v += Rational(1, 8);
            if (x == b && y == z) v -= Rational(1, 8);
            return v;
        };
        Form alt(7);
        for (const Blade bl : bladesOfDegree(7, 3)) {
            auto idx = bladeIndices(bl);
            int x = idx[0], y = idx[1], z = idx[2];
            Rational v = raw(x, y, z) + raw(y, z, x) + raw(z, x, y) - raw(y, x, z) - raw(x, z, y) - raw(z, y, x);
            alt.add(bl, v / 6);
        }
        tBeta += alt + Rational(1, 4) * interior(b, sw);
    }
    out.push_back(zeroResidual("T_beta = -1/4 b -| *w", tBeta));
    return out;
}

std::vector<Residual> dOmegaDecomposition(const G2Structure& s) {
    const LieModel& m = s.model;
    const Form w = s.omega, sw = hodge(w), dw = m.d(w);
    TorsionClass tc = classify(s);
    Form beta = fromVec(tc.beta);
    Connection lc = leviCivita(m);
    std::vector<Residual> out;
    out.push_back(scalarEqual("lambda from the trace of Gamma", tc.lambdaTrace, tc.lambda));
    out.push_back(equal("beta from the Lambda^2_7 part of Gamma", project2([&] {
                            Form skew(7);
                            for (int i = 0; i < 7; ++i)
                                for (int j = i + 1; j < 7; ++j)
                                    skew += ((tc.gamma(i, j) - tc.gamma(j, i)) * 6) * Form::e(7, {i + 1, j + 1});
                            return skew;
                        }()).part7,
                        interior(tc.beta, w)));
    out.push_back(equal("dw = -lambda *w + *Gamma27 + 3/4 beta ^ w", dw,
                        -tc.lambda * sw + hodge(tc.gamma27) + Rational(3, 4) * wedge(beta, w)));
    out.push_back(equal("Gamma27 = *dw + lambda w - 3/4 *(beta ^ w)", tc.gamma27,
                        hodge(dw) + tc.lambda * w - Rational(3, 4) * hodge(wedge(beta, w))));
    // the remaining identities assume Gamma has no Lambda^2_14 part
    if (!tc.hasSkewConnection()) return out;
    out.push_back(equal("delta w = -beta -| w", codiff(m, w), -interior(tc.beta, w)));
    Form nab(7);
    for (int x = 0; x < 7; ++x) {
        Form rhs = (-tc.lambda / 4) * sE(x);
        Form inner2 = Rational(1, 4) * wedge(beta, Form::e(7, {x + 1})) + Rational(1, 2) * interior(x, tc.gamma27);
        for (int i = 0; i < 7; ++i) rhs -= inner(inner2, wE(i)) * sE(i);
        nab += covariant(lc, x, w) - rhs;
    }
    out.push_back(zeroResidual("nabla^g_X w = -lambda/4 X -| *w - sum (1/4 b ^ X + 1/2 X -| G, e_i -| w) e_i -| *w", nab));
    Form t = torsionForm(s);
    out.push_back(equal("T = -lambda/6 w - Gamma27 - 1/4 beta -| *w", t,
                        (-tc.lambda / 6) * w - tc.gamma27 - Rational(1, 4) * interior(tc.beta, sw)));
    bool par = isParallel(withTorsion(m, t), w);
    out.push_back({"characteristic connection preserves w", par, par ? "0" : "nabla w != 0"});
    return out;
}

CVec canonicalSpinor(const GammaRep& rep) {
    CMat e = eigenspace(actForm(rep, g2Form()), Gauss(-7));
    if (e.cols() != 1) throw std::logic_error("w3 does not have a simple eigenvalue -7");
    return e.col(0);
}

std::vector<Residual> g2SpinorIdentities() {
    GammaRep rep = buildRep(7);
    CVec psi = canonicalSpinor(rep);
    const Form sw = g2StarForm();
    // one column per basis element, so that nothing cancels
    std::vector<CMat> g27, star, t;
    for (const Form& g : lambda3_27Basis()) g27.push_back(actForm(rep, g) * psi);
    for (int x = 0; x < 7; ++x) {
        Vec e = basisVector(7, x);
        star.push_back(actForm(rep, sE(x)) * psi - Gauss(4) * (actVector(rep, e) * psi));
        // -3/4 T psi with T = -lambda/6 w - 1/4 b -| *w at lambda = 1, b = e_x
        Form tf = Rational(-1, 6) * g2Form() - Rational(1, 4) * interior(x, sw);
        t.push_back(Gauss(Rational(-3, 4)) * (actForm(rep, tf) * psi) -
                    (Gauss(Rational(-7, 8)) * psi + Gauss(Rational(3, 16)) * (actForm(rep, interior(x, sw)) * psi)));
    }
    return {zeroResidual("Gamma27 . Psi0 = 0", hstack<Gauss>(g27)),
            zeroResidual("(X -| *w) . Psi0 = 4 X . Psi0", hstack<Gauss>(star)),
            zeroResidual("-3/4 T Psi0 = -7/8 lambda Psi0 + 3/16 (b -| *w) Psi0", hstack<Gauss>(t))};
}

std::vector<Residual> g2ModelSpinorIdentities(const G2Structure& s, const Form& t) {
    GammaRep rep = buildRep(7);
    CVec psi = canonicalSpinor(rep);
    auto lambda = spinorConnection(withTorsion(s.model, t), rep);
    std::vector<CMat> cols;
    for (const auto& l : lambda) cols.push_back(l * psi);
    CMat par = hstack<Gauss>(cols);
    CMat dg = diracOperator(spinorConnection(leviCivita(s.model), rep), rep);
    CMat res = dg * psi + Gauss(Rational(3, 4)) * (actForm(rep, t) * psi);
    return {zeroResidual("Psi0 is parallel for the characteristic connection", par),
            zeroResidual("D^g Psi0 = -3/4 T Psi0", res)};
}

} // namespace skewtor
