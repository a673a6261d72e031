#include "skewtor/equivar.hpp"
#include "skewtor/g2kit.hpp"

#include <doctest.h>

using namespace skewtor;

namespace {

void requireAll(const std::vector<Residual>& rs) {
    for (const auto& r : rs) {
        INFO(r.name << ": " << r.detail);
        CHECK(r.ok);
    }
}

IsotypicPart partWithLabel(const IsotypicReport& r, const std::string& label) {
    for (const auto& p : r.parts)
        if (p.label == label) return p;
    return {};
}

} // namespace

TEST_CASE("g2 as a subalgebra of so(7)") {
    G2Algebra g = buildG2Basis();
    REQUIRE(g.basis.size() == 14);
    CHECK(g.closed);
    for (const auto& xi : g.basis) {
        CHECK(inG2(xi));
        CHECK(rhoOnForm(xi, g2Form()).isZero());
    }
    CHECK(inG2(parseForm(7, "e12 - e34")));
    CHECK_FALSE(inG2(interior(0, g2Form())));
    // the seven displayed equations, checked literally on the basis
    for (const auto& x : g.basis) {
        auto w = [&](int i, int j) { return x.at(i - 1, j - 1); };
        CHECK(w(1, 2) + w(3, 4) + w(5, 6) == 0);
        CHECK(-w(1, 3) + w(2, 4) - w(6, 7) == 0);
        CHECK(w(1, 4) + w(2, 3) + w(5, 7) == 0);
        CHECK(w(1, 6) + w(2, 5) - w(3, 7) == 0);
        CHECK(w(1, 5) - w(2, 6) - w(4, 7) == 0);
        CHECK(w(1, 7) + w(3, 6) + w(4, 5) == 0);
        CHECK(w(2, 7) + w(3, 5) - w(4, 6) == 0);
    }
}

TEST_CASE("bracket is compatible with the tensor action") {
    G2Algebra g = buildG2Basis();
    TensorSpace r7 = space(G2Space::R7);
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 14; b += 5) {
            Mat lhs = action(r7, bracket2(g.basis[a], g.basis[b]));
            Mat ra = action(r7, g.basis[a]), rb = action(r7, g.basis[b]);
            CHECK(lhs == Mat(ra * rb - rb * ra));
        }
}

TEST_CASE("tensor spaces") {
    CHECK(space(G2Space::R7).dim() == 7);
    CHECK(space(G2Space::G2).dim() == 14);
    CHECK(space(G2Space::M).dim() == 7);
    CHECK(space(G2Space::L3_27).dim() == 27);
    CHECK(space(G2Space::R7xM).dim() == 49);
    CHECK(space(G2Space::R7xG2).dim() == 98);
    CHECK(space(G2Space::R7xS2).dim() == 196);
    TensorSpace l2 = space(G2Space::L2);
    Form f = parseForm(7, "e13 - 2*e57");
    CHECK(l2.basis * l2.coordinates(tensorOf(f)) == tensorOf(f));
}

TEST_CASE("Phi and Psi") {
    BigMap phi = phiMap(), psi = psiMap();
    CHECK(phi.matrix.rows() == 196);
    CHECK(phi.matrix.cols() == 98);
    CHECK(psi.matrix.cols() == 49);
    requireAll({equivarianceResidual(phi), equivarianceResidual(psi)});
}

TEST_CASE("rank certificates") {
    RankCertificates r = rankCertificates();
    CHECK(r.rankPhi == 98);
    CHECK(r.kernelPhi == 0);
    CHECK(r.rankPhiPsi14 == 112);
    requireAll(r.residuals());
}

TEST_CASE("Sigma0 constant and the Sigma formula") {
    CHECK(sigma0Constant() == Rational(2, 3));
    requireAll(sigmaFormulaCheck());
}

TEST_CASE("Casimir calibration") {
    CasimirCalibration cal = calibrateCasimir();
    // irreducible: the Casimir is a multiple of the identity
    for (G2Space s : {G2Space::R7, G2Space::G2, G2Space::L3_27}) {
        TensorSpace sp = space(s);
        CHECK(casimir(sp) == Mat(Mat::Identity(sp.dim(), sp.dim()) * casimir(sp)(0, 0)));
    }
    CHECK(cal.c7 == 4);
    CHECK(cal.c14 == 8);
    CHECK(cal.c27 == Rational(28, 3));
}

TEST_CASE("isotypic decompositions of forms") {
    IsotypicReport l2 = casimirDecompose(G2Space::L2);
    CHECK(l2.summary() == "7 + 14");
    IsotypicReport l3 = casimirDecompose(G2Space::L3);
    CHECK(l3.summary() == "1 + 7 + 27");
    IsotypicReport l4 = casimirDecompose(G2Space::L4);
    CHECK(l4.summary() == "1 + 7 + 27");
    CHECK(l4.commutes);
}

TEST_CASE("isotypic decompositions of the tensor spaces") {
    IsotypicReport m = casimirDecompose(G2Space::R7xM);
    CHECK(m.summary() == "1 + 7 + 14 + 27");
    CHECK(m.complete());
    IsotypicReport g = casimirDecompose(G2Space::R7xG2);
    CHECK(g.summary() == "7 + 27 + 64");
    CHECK(g.complete());
    IsotypicReport s = casimirDecompose(G2Space::R7xS2);
    CHECK(s.summary() == "2x7 + 14 + 27 + 64 + 77");
    CHECK(s.complete());
    CHECK(s.commutes);
    CHECK(partWithLabel(s, "7").multiplicity == 2);
    CHECK(partWithLabel(s, "64").dim == 64);
    CHECK(partWithLabel(s, "77").dim == 77);
}
