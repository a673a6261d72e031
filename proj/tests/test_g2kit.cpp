#include "fixtures.hpp"
#include "test_util.hpp"

#include "skewtor/g2kit.hpp"

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

} // namespace

TEST_CASE("canonical forms and Gram matrices") {
    CHECK(g2Form() == fixtures::omega());
    CHECK(g2StarForm() == parseForm(7, "e1234 + e1256 + e1367 + e1457 + e2357 - e2467 + e3456"));
    CHECK(inner(g2Form(), g2Form()) == 7);
    requireAll(g2Constants());
}

TEST_CASE("two-form splitting") {
    for (int x = 0; x < 7; ++x) CHECK(project2(interior(x, g2Form())).part14.isZero());
    Form a = parseForm(7, "e12 - e34");
    CHECK(inG2(a));
    CHECK(project2(a).part7.isZero());

    std::mt19937 rng(11);
    const Form w = g2Form();
    for (int trial = 0; trial < 20; ++trial) {
        Form r = testutil::randomForm(rng, 7, 2, 0.6);
        Split2 s = project2(r);
        CHECK(s.part7 + s.part14 == r);
        CHECK(hodge(wedge(w, s.part7)) == 2 * s.part7);
        CHECK(hodge(wedge(w, s.part14)) == -s.part14);
        CHECK(inner(s.part7, s.part14) == 0);
        CHECK(project2(s.part7).part7 == s.part7);
        CHECK(inG2(s.part14));
    }
}

TEST_CASE("three-form splitting") {
    const Form w = g2Form(), sw = g2StarForm();
    Split3 s = project3(w);
    CHECK(s.part1 == w);
    CHECK(s.part7.isZero());
    CHECK(s.part27.isZero());
    Form a = interior(0, sw);
    CHECK(project3(a).part7 == a);
    Split3 h = project3(fixtures::heis7Torsion());
    CHECK(h.part1.isZero());
    CHECK(h.part7.isZero());

    auto basis = lambda3_27Basis();
    CHECK(basis.size() == 27);

    std::mt19937 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        Form r = testutil::randomForm(rng, 7, 3, 0.5);
        Split3 p = project3(r);
        CHECK(p.part1 + p.part7 + p.part27 == r);
        CHECK(wedge(p.part27, w).isZero());
        CHECK(wedge(p.part27, sw).isZero());
        CHECK(inner(p.part1, p.part7) == 0);
        CHECK(inner(p.part7, p.part27) == 0);
        CHECK(inner(p.part1, p.part27) == 0);
        CHECK(project3(p.part27).part27 == p.part27);
    }
}

TEST_CASE("G2 structure validation") {
    CHECK_THROWS_AS(G2Structure(fixtures::heis5()), std::invalid_argument);
    CHECK_THROWS_AS(G2Structure(LieModel::abelian(7), parseForm(7, "e123")), std::invalid_argument);
    CHECK_NOTHROW(G2Structure(LieModel::abelian(7)));
}

TEST_CASE("abelian model is parallel") {
    G2Structure s(LieModel::abelian(7));
    TorsionClass tc = classify(s);
    CHECK(tc.lambda == 0);
    CHECK(tc.cocalibrated());
    CHECK(tc.gamma27.isZero());
    CHECK(tc.hasSkewConnection());
    Form t = torsionForm(s);
    CHECK(t.isZero());
    CHECK(isZeroMatrix<Rational>(ricciViaDT(s, t)));
    RicciFlatReport r = ricciFlatConditions(s, t);
    CHECK(r.ricciFlat);
    CHECK(r.closedCoclosed);
    CHECK(r.cubicEquation);
    CHECK(r.wedgeIdentity);
}

TEST_CASE("Heisenberg G2 structure") {
    G2Structure s(fixtures::heis7());
    TorsionClass tc = classify(s);
    CHECK(tc.lambda == 0);
    CHECK(tc.lambdaTrace == 0);
    CHECK(tc.cocalibrated());
    CHECK(tc.hasSkewConnection());
    CHECK_FALSE(tc.gamma27.isZero());
    CHECK_FALSE(tc.nearlyParallel());

    Form t = torsionForm(s);
    CHECK(t == -parseForm(7, "e567 - e135 + e347 + e146"));
    CHECK(t == fixtures::heis7Torsion());
    CHECK(isParallel(withTorsion(s.model, t), s.omega));

    Mat expect = Mat::Zero(7, 7);
    for (int i : {0, 2, 5, 6}) expect(i, i) = -2;
    CHECK(ricciViaDT(s, t) == expect);
    requireAll(g2RicciResiduals(s, t));
    requireAll(dOmegaDecomposition(s));
    requireAll(g2ModelSpinorIdentities(s, t));

    CHECK(s.model.d(t) == parseForm(7, "-4*e1367"));
    RicciFlatReport r = ricciFlatConditions(s, t);
    CHECK_FALSE(r.ricciFlat);
    CHECK_FALSE(r.closedCoclosed);
    CHECK(r.consistent());
}

TEST_CASE("solvable G2 structure") {
    G2Structure s(fixtures::solv7());
    TorsionClass tc = classify(s);
    CHECK(tc.cocalibrated());
    CHECK(tc.lambda == 0);
    Form t = torsionForm(s);
    CHECK(t == parseForm(7, "2*e256 - 2*e234"));
    CHECK(s.model.d(t) == parseForm(7, "-4*e1256 - 4*e1234"));
    requireAll(g2RicciResiduals(s, t));
    requireAll(dOmegaDecomposition(s));
    requireAll(g2ModelSpinorIdentities(s, t));
    RicciFlatReport r = ricciFlatConditions(s, t);
    CHECK_FALSE(r.ricciFlat);
    CHECK_FALSE(r.closedCoclosed);
    CHECK(r.consistent());
}

TEST_CASE("almost-abelian structure with all three torsion types") {
    G2Structure s(fixtures::almab7());
    TorsionClass tc = classify(s);
    CHECK(tc.lambda == Rational(-6, 7));
    CHECK(tc.lambdaTrace == tc.lambda);
    Vec beta = Vec::Zero(7);
    beta(6) = 2;
    CHECK(tc.beta == beta);
    CHECK(tc.hasSkewConnection());
    CHECK_FALSE(tc.cocalibrated());
    Form t = torsionForm(s);
    CHECK(isParallel(withTorsion(s.model, t), s.omega));
    requireAll(dOmegaDecomposition(s));
    requireAll(g2RicciResiduals(s, t));
    requireAll(g2ModelSpinorIdentities(s, t));
    CHECK_THROWS_AS(ricciFlatConditions(s, t), std::invalid_argument);
}

TEST_CASE("obstructed structure has no characteristic connection") {
    G2Structure s(fixtures::almab7Obstructed());
    TorsionClass tc = classify(s);
    CHECK_FALSE(tc.hasSkewConnection());
    CHECK(inG2(tc.obstruction14));
    CHECK(tc.obstruction14 == parseForm(7, "1/9*e12 - 1/18*e34 - 1/18*e56"));
    CHECK_THROWS_AS(torsionForm(s), NoSkewConnection);
    try {
        torsionForm(s);
    } catch (const NoSkewConnection& e) {
        CHECK(e.reason == NoSkewConnection::Reason::G2Obstruction);
    }
    // dw does not see the Lambda^2_14 part, the codifferential does
    auto rs = dOmegaDecomposition(s);
    CHECK(rs.size() == 4);
    requireAll(rs);
    CHECK(codiff(s.model, s.omega) != -interior(tc.beta, s.omega));
}

TEST_CASE("nearly parallel algebra") {
    requireAll(nearlyParallelAlgebra(6));
    requireAll(nearlyParallelAlgebra(0));
    requireAll(nearlyParallelAlgebra(Rational(-5, 3)));
    CHECK(torsionSquare(Rational(-1) * g2Form()) / 4 == Mat::Identity(7, 7) * Rational(3, 2));
    CHECK(sigmaT(g2Form()) == 3 * g2StarForm());
}

TEST_CASE("canonical spinor") {
    requireAll(g2SpinorIdentities());
    GammaRep rep = buildRep(7);
    CVec psi = canonicalSpinor(rep);
    CHECK(psi.size() == 8);
}
