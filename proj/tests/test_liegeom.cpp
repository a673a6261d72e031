#include "doctest.h"
#include "fixtures.hpp"
#include "test_util.hpp"

using namespace skewtor;

namespace {

Mat diag(std::initializer_list<int> v) {
    Mat m = Mat::Zero(static_cast<Eigen::Index>(v.size()), static_cast<Eigen::Index>(v.size()));
    int i = 0;
    for (int x : v) m(i, i) = x, ++i;
    return m;
}

} // namespace

TEST_CASE("structure equations and d") {
    LieModel h = fixtures::heis7();
    CHECK(h.d(Form::e(7, {4})) == parseForm(7, "e16 + e37"));
    CHECK(h.d(fixtures::omega()) == parseForm(7, "e1234 + e2467 + e1256 - e2357"));
    CHECK(h.d(Form::constant(7, 3)).isZero());
    CHECK(h.c(0, 5, 3) == -1);  // [e1,e6] = -e4
    CHECK_NOTHROW(fixtures::model("so3", 3, {{1, "e23"}, {2, "-e13"}, {3, "e12"}}));
    // d(de3) = e34 ^ e2 != 0
    CHECK_THROWS_AS(fixtures::model("bad", 4, {{1, "e34"}, {3, "e12"}}), InvalidModel);
}

TEST_CASE("d squares to zero") {
    std::mt19937 rng(31);
    for (const LieModel& m : {fixtures::heis7(), fixtures::solv7(), fixtures::heis5()})
        for (int p = 0; p < m.dim(); ++p) {
            Form a = testutil::randomForm(rng, m.dim(), p);
            CHECK(m.d(m.d(a)).isZero());
        }
}

TEST_CASE("Levi-Civita connection") {
    LieModel a = LieModel::abelian(5);
    Connection lc = leviCivita(a);
    for (const auto& v : lc.w.v) CHECK(v.is_zero());

    LieModel h = fixtures::heis5();
    Connection g = leviCivita(h);
    CHECK(g.w(0, 1, 4) == -1);  // nabla^g_{e1} e2 = -e5
    for (const LieModel& m : {fixtures::heis7(), fixtures::solv7(), h}) {
        Connection c = leviCivita(m);
        Tensor3 t = torsionTensor(m, c);
        for (const auto& v : t.v) CHECK(v.is_zero());
        const int n = m.dim();
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k) CHECK(c.w(i, j, k) == -c.w(i, k, j));
    }
}

TEST_CASE("connections with torsion") {
    LieModel h = fixtures::heis7();
    Form t = fixtures::heis7Torsion();
    Connection c = withTorsion(h, t);
    CHECK(isParallel(c, fixtures::omega()));
    Tensor3 tt = torsionTensor(h, c);
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j)
            for (int k = 0; k < 7; ++k) CHECK(tt(i, j, k) == t.at(i, j, k));
    Connection s = withTorsion(fixtures::heis5(), fixtures::heis5Torsion());
    CHECK(isParallel(s, Form::e(5, {5})));
    CHECK(isParallel(s, fixtures::heis5Torsion()));
    CHECK_THROWS(withTorsion(h, Form::e(7, {1, 2})));
}

TEST_CASE("codifferential") {
    CHECK(codiff(fixtures::solv7(), fixtures::omega()).isZero());
    CHECK(codiff(fixtures::heis5(), fixtures::heis5Torsion()).isZero());
    CHECK(codiff(fixtures::heis5(), Form::constant(5, 2)).isZero());
    std::mt19937 rng(32);
    LieModel aff = fixtures::model("aff5", 5, {{2, "e12"}, {4, "e34"}, {5, "2*e12 + 2*e34"}});
    LieModel six = fixtures::model("solv6", 6, {{3, "e13 - e24"}, {4, "e23 + e14"}, {5, "-e15 + e26"}, {6, "-e25 - e16"}});
    for (const LieModel& m : {fixtures::heis7(), fixtures::solv7(), fixtures::heis5(), aff, six})
        for (int p = 1; p <= m.dim(); ++p) {
            Form a = testutil::randomForm(rng, m.dim(), p);
            CHECK(codiff(m, a) == starDStar(m, a));
        }
}

TEST_CASE("curvature of the Heisenberg and solvable models") {
    LieModel a = LieModel::abelian(6);
    Curvature flat = curvature(a, leviCivita(a));
    for (const auto& v : flat.R.v) CHECK(v.is_zero());

    LieModel h = fixtures::heis7();
    Curvature cn = curvature(h, withTorsion(h, fixtures::heis7Torsion()));
    CHECK(cn.ric == diag({-2, 0, -2, 0, 0, -2, -2}));
    CHECK(cn.scal == -8);
    Curvature cg = curvature(h, leviCivita(h));
    CHECK(cg.ric == diag({-1, 0, -1, 1, 1, -1, -1}));
    CHECK(torsionSquare(fixtures::heis7Torsion()) == diag({4, 0, 4, 4, 4, 4, 4}));

    Curvature cs = curvature(fixtures::solv7(), withTorsion(fixtures::solv7(), fixtures::solv7Torsion()));
    CHECK(cs.scal == -16);

    LieModel h5 = fixtures::heis5();
    CHECK(curvature(h5, withTorsion(h5, fixtures::heis5Torsion())).ric == diag({-4, -4, -4, -4, 0}));
    CHECK(curvature(h5, leviCivita(h5)).ric == diag({-2, -2, -2, -2, 4}));

    // pair skew-symmetries
    const int n = 7;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    CHECK(cn.R(i, j, k, l) == -cn.R(j, i, k, l));
                    CHECK(cn.R(i, j, k, l) == -cn.R(i, j, l, k));
                }
}

TEST_CASE("torsion identities hold on models with random torsion") {
    std::mt19937 rng(33);
    LieModel aff = fixtures::model("aff5", 5, {{2, "e12"}, {4, "e34"}, {5, "2*e12 + 2*e34"}});
    for (const LieModel& m : {fixtures::heis7(), fixtures::solv7(), fixtures::heis5(), aff, LieModel::abelian(5)}) {
        Form t = testutil::randomForm(rng, m.dim(), 3, 0.4);
        for (const auto& r : verifyTorsionIdentities(m, t)) {
            INFO(m.name() << ": " << r.name << " " << r.detail);
            CHECK(r.ok);
        }
    }
    for (const auto& r : verifyTorsionIdentities(LieModel::abelian(5), Form::e(5, {1, 2, 3}))) CHECK(r.ok);
}

TEST_CASE("spinor formulas") {
    GammaRep r7 = buildRep(7), r5 = buildRep(5);
    CHECK(parallelSpinors(fixtures::heis7(), fixtures::heis7Torsion(), r7).cols() == 4);
    CHECK(parallelSpinors(fixtures::solv7(), fixtures::solv7Torsion(), r7).cols() == 2);
    CHECK(parallelSpinors(fixtures::heis5(), fixtures::heis5Torsion(), r5).cols() == 2);
    for (const auto& lam : spinorConnection(leviCivita(LieModel::abelian(7)), r7)) CHECK(isZeroMatrix<Gauss>(lam));

    std::mt19937 rng(34);
    LieModel aff = fixtures::model("aff5", 5, {{2, "e12"}, {4, "e34"}, {5, "2*e12 + 2*e34"}});
    struct Case {
        LieModel m;
        Form t;
    };
    std::vector<Case> cases{{fixtures::heis7(), fixtures::heis7Torsion()},
                            {fixtures::solv7(), fixtures::solv7Torsion()},
                            {fixtures::heis5(), fixtures::heis5Torsion()},
                            {aff, testutil::randomForm(rng, 5, 3, 0.5)},
                            {fixtures::solv7(), testutil::randomForm(rng, 7, 3, 0.3)}};
    for (const auto& c : cases) {
        GammaRep rep = buildRep(c.m.dim());
        for (const auto& r : verifySpinorFormulas(c.m, c.t, rep)) {
            INFO(c.m.name() << ": " << r.name << " " << r.detail);
            CHECK(r.ok);
        }
    }
}
