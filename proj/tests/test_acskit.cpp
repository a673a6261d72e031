#include "fixtures.hpp"
#include "test_util.hpp"

#include "skewtor/acskit.hpp"

#include <doctest.h>

#include <random>

using namespace skewtor;

namespace {

void requireAll(const std::vector<Residual>& rs) {
    for (const auto& r : rs) {
        INFO(r.name << ": " << r.detail);
        CHECK(r.ok);
    }
}

AlmostContact contact(LieModel m) { return AlmostContact::fromPairs(std::move(m), 4, {{0, 1}, {2, 3}}); }

Mat diag(std::initializer_list<int> d) {
    Mat m = Mat::Zero(static_cast<int>(d.size()), static_cast<int>(d.size()));
    int i = 0;
    for (int v : d) {
        m(i, i) = v;
        ++i;
    }
    return m;
}

// Independent oracle: solve for the 3-form T whose connection
// w = w^g + T/2 commutes with P (and kills xi), straight from the structure
// constants. Returns nullopt when there is no solution.
std::optional<Form> solveSkewTorsion(const LieModel& m, const Mat& p, const Vec* xi) {
    const int n = m.dim();
    auto blades = bladesOfDegree(n, 3);
    auto lc = [&](int i, int j, int k) { return (m.c(i, j, k) - m.c(j, k, i) + m.c(k, i, j)) / 2; };
    std::vector<std::vector<Rational>> rows;
    std::vector<Rational> rhs;
    for (int i = 0; i < n; ++i) {
        // (M P - P M)(a,q) with M(k,j) = w(i,j,k)
        for (int a = 0; a < n; ++a)
            for (int q = 0; q < n; ++q) {
                std::vector<Rational> row(blades.size());
                Rational c0 = 0;
                for (int r = 0; r < n; ++r) {
                    c0 += lc(i, r, a) * p(r, q) - p(a, r) * lc(i, q, r);
                    for (std::size_t b = 0; b < blades.size(); ++b) {
                        Form e = Form(n).add(blades[b], 1);
                        row[b] += (e.at(i, r, a) * p(r, q) - p(a, r) * e.at(i, q, r)) / 2;
                    }
                }
                rows.push_back(row);
                rhs.push_back(-c0);
            }
        if (xi)
            for (int k = 0; k < n; ++k) {
                std::vector<Rational> row(blades.size());
                Rational c0 = 0;
                for (int a = 0; a < n; ++a) {
                    c0 += (*xi)(a) * lc(i, a, k);
                    for (std::size_t b = 0; b < blades.size(); ++b)
                        row[b] += (*xi)(a) * Form(n).add(blades[b], 1).at(i, a, k) / 2;
                }
                rows.push_back(row);
                rhs.push_back(-c0);
            }
    }
    Mat a(rows.size(), blades.size());
    Vec b(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t c = 0; c < blades.size(); ++c) a(r, c) = rows[r][c];
        b(r) = rhs[r];
    }
    auto sol = solve<Rational>(a, b);
    if (!sol) return std::nullopt;
    Form t(n);
    for (std::size_t c = 0; c < blades.size(); ++c) t.add(blades[c], (*sol)(c));
    return t;
}

} // namespace

TEST_CASE("structures are validated at construction") {
    Mat bad = Mat::Zero(5, 5);
    CHECK_THROWS_AS(AlmostContact(fixtures::heis5(), basisVector(5, 4), bad), InvalidStructure);
    Vec half = basisVector(5, 4) * Rational(1, 2);
    CHECK_THROWS_AS(AlmostContact::fromPairs(fixtures::heis5(), 4, {{0, 1}}), InvalidStructure);
    Mat p = contact(fixtures::heis5()).phi();
    CHECK_THROWS_AS(AlmostContact(fixtures::heis5(), half, p), InvalidStructure);
    CHECK_THROWS_AS(AlmostHermitian::fromPairs(LieModel::abelian(4), {{0, 1}}), InvalidStructure);
    CHECK_THROWS_AS(AlmostHermitian::fromPairs(LieModel::abelian(5), {{0, 1}, {2, 3}}), InvalidStructure);
    CHECK(contact(fixtures::heis5()).fundamental() == parseForm(5, "e12 + e34"));
}

TEST_CASE("Sasakian heis5") {
    AlmostContact s = contact(fixtures::heis5());
    const LieModel& m = s.model();
    CHECK(m.d(s.eta()) == 2 * s.fundamental());
    CHECK(nijenhuis(s).isZero());
    CHECK(reebKilling(s));
    CHECK(isSasakian(s));

    Form t = contactTorsion(s);
    CHECK(t == wedge(s.eta(), m.d(s.eta())));
    CHECK(t == fixtures::heis5Torsion());
    CHECK(solveSkewTorsion(m, s.phi(), &s.xi()) == t);
    requireAll(contactParallelism(s, t));
    CHECK(contactUniqueness(s).unique());

    Connection conn = withTorsion(m, t);
    Form dT = m.d(t);
    CHECK(dT == Rational(2) * sigmaT(t));
    CHECK(dT == wedge(m.d(s.eta()), m.d(s.eta())));
    CHECK(isParallel(conn, t));
    CHECK(codiff(m, t).isZero());
    CHECK(curvature(m, conn).ric == diag({-4, -4, -4, -4, 0}));
    CHECK(curvature(m, leviCivita(m)).ric == diag({-2, -2, -2, -2, 4}));

    RicciForms rf = ricciForms(s, t);
    CHECK(rf.lambda == -16 * Mat(s.phi()));
    CHECK(rf.torsionSq == diag({8, 8, 8, 8, 16}));
    // rho = -8F: no parallel spinor of extreme type; the parallel spinors sit
    // in the kernel of d eta
    CHECK(rf.rho == -8 * Mat(s.phi()));
    CHECK(contactRicciFormIdentity(s, t).ok);
    GammaRep rep = buildRep(5);
    CMat par = parallelSpinors(m, t, rep);
    CHECK(par.cols() == 2);
    CHECK(zeroResidual("d eta on parallel spinors", CMat(actForm(rep, m.d(s.eta())) * par)).ok);
}

TEST_CASE("contact identities hold on every fixture") {
    for (LieModel m : {fixtures::heis5(), fixtures::m5n(), fixtures::aff5(), fixtures::cosymp5(), fixtures::nk5(),
                       fixtures::nokill5(), LieModel::abelian(5)}) {
        AlmostContact s = contact(m);
        INFO(m.name());
        requireAll(contactGeneralIdentities(s));
        requireAll(contactNijenhuisIdentities(s));
        CHECK(closedFundamentalFormCheck(s).ok);
    }
    AlmostContact su = AlmostContact::fromPairs(fixtures::su2r2(), 0, {{1, 3}, {2, 4}});
    requireAll(contactGeneralIdentities(su));
    requireAll(contactNijenhuisIdentities(su));
}

TEST_CASE("contact identities on random models") {
    std::mt19937 rng(23);
    auto blades = bladesOfDegree(5, 2);
    int tested = 0;
    for (int trial = 0; trial < 400; ++trial) {
        std::vector<Form> de(5, Form(5));
        const int k = 1 + static_cast<int>(rng() % 3);
        for (int q = 0; q < k; ++q) de[rng() % 5].add(blades[rng() % blades.size()], testutil::randomRational(rng, 2));
        LieModel m;
        try {
            m = LieModel("random", de);
        } catch (const InvalidModel&) {
            continue;
        }
        ++tested;
        AlmostContact s = contact(m);
        requireAll(contactGeneralIdentities(s));
        requireAll(contactNijenhuisIdentities(s));
        CHECK(closedFundamentalFormCheck(s).ok);
        NijTensor nij = nijenhuis(s);
        if (nij.skew && reebKilling(s)) {
            Form t = contactTorsion(s);
            requireAll(contactParallelism(s, t));
            requireAll(reebChain(s).residuals);
            CHECK(contactRicciFormIdentity(s, t).ok);
            CHECK(solveSkewTorsion(m, s.phi(), &s.xi()) == t);
        } else {
            CHECK_FALSE(solveSkewTorsion(m, s.phi(), &s.xi()).has_value());
        }
    }
    CHECK(tested > 100);
}

TEST_CASE("torsion branches") {
    // normal, Killing, not Sasakian: T = eta ^ d eta + d^phi F
    AlmostContact n = contact(fixtures::m5n());
    CHECK(nijenhuis(n).isZero());
    CHECK_FALSE(isSasakian(n));
    Form t = contactTorsion(n);
    CHECK(t == wedge(n.eta(), n.model().d(n.eta())) + dPhiF(n));
    CHECK(t == parseForm(5, "e124"));
    requireAll(contactParallelism(n, t));
    CHECK(contactRicciFormIdentity(n, t).ok);

    AlmostContact aff = contact(fixtures::aff5());
    CHECK(isSasakian(aff));
    Form ta = contactTorsion(aff);
    CHECK(ta == wedge(aff.eta(), aff.model().d(aff.eta())));
    CHECK(isParallel(withTorsion(aff.model(), ta), ta));

    // dF = 0: N vanishes and T = 0
    AlmostContact c = contact(fixtures::cosymp5());
    CHECK(c.model().d(c.fundamental()).isZero());
    CHECK(nijenhuis(c).isZero());
    CHECK(contactTorsion(c).isZero());

    auto reason = [](const AlmostContact& s) {
        try {
            contactTorsion(s);
        } catch (const NoSkewConnection& e) {
            return static_cast<int>(e.reason);
        }
        return -1;
    };
    CHECK(reason(contact(fixtures::nk5())) == static_cast<int>(NoSkewConnection::Reason::NijenhuisNotSkew));
    AlmostContact nk = contact(fixtures::nokill5());
    CHECK(nijenhuis(nk).skew);
    CHECK(reason(nk) == static_cast<int>(NoSkewConnection::Reason::NotKilling));
    CHECK_THROWS_AS(reebChain(nk), NoSkewConnection);
}

TEST_CASE("Reeb chain with a nonzero common value") {
    AlmostContact s = AlmostContact::fromPairs(fixtures::su2r2(), 0, {{1, 3}, {2, 4}});
    NijTensor nij = nijenhuis(s);
    CHECK(nij.skew);
    CHECK(nij.form() == parseForm(5, "e123 - e145"));
    ReebChain ch = reebChain(s);
    requireAll(ch.residuals);
    CHECK_FALSE(ch.commonValue.isZero());
    Form t = contactTorsion(s);
    CHECK(t == parseForm(5, "e123"));
    requireAll(contactParallelism(s, t));
    CHECK(contactRicciFormIdentity(s, t).ok);

    requireAll(reebChain(contact(fixtures::heis5())).residuals);
    CHECK(reebChain(contact(fixtures::heis5())).commonValue.isZero());
    requireAll(reebChain(contact(LieModel::abelian(5))).residuals);
}

TEST_CASE("Tanno deformation") {
    AlmostContact aff = contact(fixtures::aff5());
    AlmostContact same = tannoDeform(aff, 1);
    CHECK(same.model().differentials() == aff.model().differentials());

    for (Rational a2 : {Rational(4), Rational(9, 4), Rational(1, 4)}) {
        AlmostContact d = tannoDeform(aff, a2);
        CHECK(isSasakian(d));
        CHECK(d.model().d(d.eta()) == aff.model().d(aff.eta()));
        Mat before = curvature(aff.model(), leviCivita(aff.model())).ric;
        Mat after = curvature(d.model(), leviCivita(d.model())).ric;
        CHECK(tannoRicci(before, 4, a2) == after);
    }
    // heis5 only carries weight-zero constants, so any rational a^2 works
    AlmostContact h = tannoDeform(contact(fixtures::heis5()), Rational(4, 3));
    CHECK(isSasakian(h));
    CHECK_THROWS_AS(tannoDeform(aff, Rational(4, 3)), std::invalid_argument);
    CHECK_THROWS_AS(tannoDeform(contact(fixtures::m5n()), 4), std::invalid_argument);
    CHECK_THROWS_AS(tannoDeform(aff, -1), std::invalid_argument);

    // Einstein-Sasakian Ric = 2k g in dimension 5, deformed with a^2 = 2k/(k+1)
    const int k = 2;
    Mat ric = tannoRicci(Mat(2 * k * Mat::Identity(5, 5)), 4, Rational(2 * k, k + 1));
    CHECK(ric == diag({6, 6, 6, 6, 4}));
    Mat eta = Mat::Zero(5, 5);
    eta(4, 4) = 1;
    Mat g = Mat::Identity(5, 5);
    CHECK(ric == 2 * (2 * k - 1) * g - 2 * (k - 1) * eta);
    Mat tt = 8 * g + 8 * (k - 1) * eta;
    CHECK(Mat(ric - tt / 4) == 4 * (k - 1) * Mat(g - eta));
}

TEST_CASE("almost hermitian torsion") {
    AlmostHermitian flat = AlmostHermitian::fromPairs(LieModel::abelian(6), {{0, 1}, {2, 3}, {4, 5}});
    CHECK(nijenhuis(flat).isZero());
    Form t0 = hermitianTorsion(flat);
    CHECK(t0.isZero());
    RicciForms rf0 = ricciForms(flat, t0);
    CHECK(rf0.rho.isZero());
    CHECK(rf0.omega.isZero());
    CHECK(rf0.lambda.isZero());

    AlmostHermitian s = AlmostHermitian::fromPairs(fixtures::solv6(), {{0, 1}, {2, 3}, {4, 5}});
    NijTensor nij = nijenhuis(s);
    CHECK(nij.skew);
    requireAll(hermitianGeneralIdentities(s));
    Form t = hermitianTorsion(s);
    CHECK(t == parseForm(6, "-2*e234 + 2*e256"));
    CHECK(solveSkewTorsion(s.model(), s.J(), nullptr) == t);
    requireAll(hermitianParallelism(s, t));
    CHECK(hermitianUniqueness(s).unique());
    SUnCriterion su = suNCriterion(s, t);
    CHECK(su.identity.ok);
    CHECK(su.holonomyInSUn());
    CHECK(su.rightHandSide.isZero());

    auto reason = [](const AlmostHermitian& h) {
        try {
            hermitianTorsion(h);
        } catch (const NoSkewConnection& e) {
            return static_cast<int>(e.reason);
        }
        return -1;
    };
    AlmostHermitian kt = AlmostHermitian::fromPairs(fixtures::kt4(), {{0, 2}, {1, 3}});
    CHECK(kt.model().d(kt.kaehler()).isZero());
    CHECK_FALSE(nijenhuis(kt).isZero());
    CHECK(reason(kt) == static_cast<int>(NoSkewConnection::Reason::AlmostKaehler));
    CHECK_FALSE(solveSkewTorsion(kt.model(), kt.J(), nullptr).has_value());
    AlmostHermitian h4 = AlmostHermitian::fromPairs(fixtures::herm4(), {{0, 1}, {2, 3}});
    CHECK(reason(h4) == static_cast<int>(NoSkewConnection::Reason::NijenhuisNotSkew));
}

TEST_CASE("hermitian identities on random models") {
    std::mt19937 rng(29);
    auto blades = bladesOfDegree(4, 2);
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<Form> de(4, Form(4));
        const int k = 1 + static_cast<int>(rng() % 2);
        for (int q = 0; q < k; ++q) de[rng() % 4].add(blades[rng() % blades.size()], testutil::randomRational(rng, 2));
        LieModel m;
        try {
            m = LieModel("random", de);
        } catch (const InvalidModel&) {
            continue;
        }
        AlmostHermitian s = AlmostHermitian::fromPairs(m, {{0, 1}, {2, 3}});
        requireAll(hermitianGeneralIdentities(s));
        if (nijenhuis(s).skew) {
            Form t = hermitianTorsion(s);
            requireAll(hermitianParallelism(s, t));
            CHECK(suNCriterion(s, t).identity.ok);
            CHECK(solveSkewTorsion(m, s.J(), nullptr) == t);
        }
    }
}

TEST_CASE("nearly Kaehler algebra") {
    requireAll(nearlyKaehlerAlgebra(1));
    requireAll(nearlyKaehlerAlgebra(Rational(9, 4)));
    requireAll(nearlyKaehlerAlgebra(0));
    CHECK_THROWS_AS(nearlyKaehlerAlgebra(2), std::invalid_argument);
    auto [plus, minus] = nearlyKaehlerSpinorSpectrum(1);
    CHECK(plus.matches({0, 4, 4, 4}));
    CHECK(minus.matches({0, 4, 4, 4}));
}
