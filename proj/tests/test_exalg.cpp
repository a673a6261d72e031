#include "doctest.h"
#include "test_util.hpp"

using namespace skewtor;

namespace {

Form omega() {
    return parseForm(7, "e1^e2^e7 + e1^e3^e5 - e1^e4^e6 - e2^e3^e6 - e2^e4^e5 + e3^e4^e7 + e5^e6^e7");
}

} // namespace

TEST_CASE("wedge basics") {
    CHECK(wedge(Form::e(4, {1}), Form::e(4, {2})) == Form::e(4, {1, 2}));
    CHECK(wedge(Form::e(4, {2}), Form::e(4, {1})) == Form::e(4, {1, 2}, -1));
    Form deta = parseForm(5, "2*e1^e2 + 2*e3^e4");
    CHECK(wedge(deta, deta) == Form::e(5, {1, 2, 3, 4}, 8));
    CHECK(wedge(omega(), omega()).isZero());
    CHECK_THROWS_AS(wedge(Form::e(4, {1}), Form::e(5, {1})), std::invalid_argument);
}

TEST_CASE("interior examples") {
    CHECK(interior(0, Form::e(3, {1, 2})) == Form::e(3, {2}));
    CHECK(interior(1, Form::e(3, {1, 2})) == Form::e(3, {1}, -1));
    Form eta = Form::e(5, {5});
    Form deta = parseForm(5, "2*e1^e2 + 2*e3^e4");
    CHECK(interior(4, wedge(eta, deta)) == deta);
    CHECK(interior(0, omega()) == parseForm(7, "e2^e7 + e3^e5 - e4^e6"));
    CHECK(interior(0, Form::constant(3, 5)).isZero());
}

TEST_CASE("hodge and inner products") {
    CHECK(hodge(Form::constant(7, 1)) == Form::volume(7));
    CHECK(inner(Form::e(4, {1, 2}), Form::e(4, {1, 2})) == 1);
    CHECK(inner(omega(), omega()) == 7);
    CHECK(inner(Form::e(4, {1, 2}), Form::e(4, {1})) == 0);
    CHECK_THROWS(innerStrict(Form::e(4, {1, 2}), Form::e(4, {1})));
    Form so = hodge(omega());
    CHECK(so == parseForm(7, "e1^e2^e3^e4 + e1^e2^e5^e6 + e1^e3^e6^e7 + e1^e4^e5^e7 + e2^e3^e5^e7"
                             " - e2^e4^e6^e7 + e3^e4^e5^e6"));
    // Gram matrices of the contractions, computed blade by blade here
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j) {
            Rational g3 = 0, g4 = 0;
            Form a = interior(i, omega()), b = interior(j, omega());
            Form c = interior(i, so), d = interior(j, so);
            for (const auto& [bl, v] : a.terms()) g3 += v * b.coeff(bl);
            for (const auto& [bl, v] : c.terms()) g4 += v * d.coeff(bl);
            CHECK(g3 == (i == j ? 3 : 0));
            CHECK(g4 == (i == j ? 4 : 0));
        }
}

TEST_CASE("sigmaT examples") {
    CHECK(sigmaT(Form::e(5, {1, 2, 3})).isZero());
    Form t = parseForm(5, "2*e1^e2^e5 + 2*e3^e4^e5");
    CHECK(sigmaT(t) == Form::e(5, {1, 2, 3, 4}, 4));
    CHECK_THROWS(sigmaT(Form::e(5, {1, 2})));
}

TEST_CASE("evaluate uses determinants") {
    Form a = Form::e(3, {1, 2});
    Vec x = basisVector(3, 0), y = basisVector(3, 1);
    CHECK(evaluate(a, {x, y}) == 1);
    CHECK(evaluate(a, {y, x}) == -1);
    Vec z = x + y;
    CHECK(evaluate(a, {z, y}) == 1);
    CHECK(evaluate(omega(), {basisVector(7, 6), basisVector(7, 0), basisVector(7, 1)}) == 1);
}

TEST_CASE("parser") {
    CHECK(parseForm(5, "-e1 + 1/2*e2^e3 + 3") ==
          Form::e(5, {1}, -1) + Form::e(5, {2, 3}, Rational(1, 2)) + Form::constant(5, 3));
    CHECK(parseForm(5, "e2^e1") == Form::e(5, {1, 2}, -1));
    CHECK(parseForm(5, "e125") == Form::e(5, {1, 2, 5}));
    CHECK(parseForm(5, "e1 - e1").isZero());
    CHECK_THROWS_AS(parseForm(5, "e6"), ParseError);
    CHECK_THROWS_AS(parseForm(5, "e1^e1"), ParseError);
    CHECK_THROWS_AS(parseForm(5, "2*"), ParseError);
    CHECK_THROWS_AS(parseForm(5, "e1 e2"), ParseError);
    CHECK_THROWS_AS(parseForm(5, "1/0*e1"), ParseError);
    try {
        parseForm(5, "e1 + x");
    } catch (const ParseError& e) {
        CHECK(e.position == 5);
    }
    Form w = omega();
    CHECK(parseForm(7, w.toString()) == w);
    CHECK(Form(4).toString() == "0");
    CHECK(parseForm(4, "1/2*e1 - 2*e2^e3").toString() == "1/2*e1 - 2*e2^e3");
}

TEST_CASE("property: graded commutativity and associativity") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 2 + trial % 7;
        int p = trial % (n + 1), q = (trial / 2) % (n + 1), r = (trial / 3) % 3;
        Form a = testutil::randomForm(rng, n, p), b = testutil::randomForm(rng, n, q),
             c = testutil::randomForm(rng, n, r);
        Rational s = ((p * q) % 2) ? -1 : 1;
        CHECK(wedge(a, b) == s * wedge(b, a));
        CHECK(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)));
    }
}

TEST_CASE("property: antiderivation law for interior") {
    std::mt19937 rng(12);
    for (int n = 2; n <= 8; ++n)
        for (int p = 0; p <= n; ++p)
            for (int q = 0; p + q <= n; ++q) {
                Form a = testutil::randomForm(rng, n, p), b = testutil::randomForm(rng, n, q);
                Vec x = testutil::randomVec(rng, n);
                Rational s = (p % 2) ? -1 : 1;
                CHECK(interior(x, wedge(a, b)) == wedge(interior(x, a), b) + s * wedge(a, interior(x, b)));
            }
}

TEST_CASE("property: hodge involution sign and inner product") {
    std::mt19937 rng(13);
    for (int n = 2; n <= 8; ++n)
        for (int p = 0; p <= n; ++p) {
            Form a = testutil::randomForm(rng, n, p), b = testutil::randomForm(rng, n, p);
            Rational s = ((p * (n - p)) % 2) ? -1 : 1;
            CHECK(hodge(hodge(a)) == s * a);
            CHECK(wedge(a, hodge(b)) == inner(a, b) * Form::volume(n));
        }
}

TEST_CASE("property: both sigmaT definitions agree") {
    std::mt19937 rng(14);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 3 + trial % 6;
        Form t = testutil::randomForm(rng, n, 3, 0.6);
        CHECK(sigmaT(t) == sigmaTQuadratic(t));
    }
}
