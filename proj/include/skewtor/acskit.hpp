#pragma once

// Almost contact metric and almost hermitian structures on Lie models, their
// Nijenhuis tensors and the characteristic connection with skew torsion.
//
// An endomorphism is stored as a matrix P with P(i,j) = component i of P(e_j).
// The fundamental form is F(X,Y) = g(X, phi Y), the Kaehler form
// Omega(X,Y) = g(X, J Y). A pair (a,b) in fromPairs means phi e_b = e_a,
// phi e_a = -e_b, so that F contains +e_a ^ e_b.

#include "skewtor/check.hpp"
#include "skewtor/g2kit.hpp"
#include "skewtor/liegeom.hpp"

#include <utility>
#include <vector>

namespace skewtor {

struct InvalidStructure : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

class AlmostContact {
public:
    // Throws InvalidStructure unless eta(xi) = 1, phi^2 = -Id + eta (x) xi,
    // g(phi X, phi Y) = g(X,Y) - eta(X) eta(Y) and phi xi = 0.
    AlmostContact(LieModel m, Vec xi, Mat phi);
    // 0-based Reeb index and 0-based pairs.
    static AlmostContact fromPairs(LieModel m, int xi, const std::vector<std::pair<int, int>>& pairs);

    const LieModel& model() const { return m_; }
    int dim() const { return m_.dim(); }
    const Vec& xi() const { return xi_; }
    const Mat& phi() const { return phi_; }
    Form eta() const { return Form::oneForm(xi_); }
    Form fundamental() const;

private:
    LieModel m_;
    Vec xi_;
    Mat phi_;
};

class AlmostHermitian {
public:
    // Throws InvalidStructure unless J^2 = -Id and J is orthogonal.
    AlmostHermitian(LieModel m, Mat j);
    static AlmostHermitian fromPairs(LieModel m, const std::vector<std::pair<int, int>>& pairs);

    const LieModel& model() const { return m_; }
    int dim() const { return m_.dim(); }
    const Mat& J() const { return j_; }
    Form kaehler() const;

private:
    LieModel m_;
    Mat j_;
};

// N(X,Y,Z) = g(N(X,Y),Z).
struct NijTensor {
    Tensor3 table;
    bool skew = false;  // totally skew-symmetric
    bool isZero() const;
    // The 3-form; throws std::logic_error when not skew.
    Form form() const;
};

NijTensor nijenhuis(const AlmostContact& s);
NijTensor nijenhuis(const AlmostHermitian& s);
// N^2(X,Y) = d eta(phi X, Y) + d eta(X, phi Y)
Mat nijenhuis2(const AlmostContact& s);

// g(nabla^g_{e_i} xi, e_j); xi is Killing iff this is skew.
Mat nablaXi(const AlmostContact& s);
bool reebKilling(const AlmostContact& s);

// d^phi F(X,Y,Z) = -dF(phi X, phi Y, phi Z)
Form dPhiF(const AlmostContact& s);

// T = eta ^ d eta + d^phi F + N - eta ^ (xi -| N). Throws NoSkewConnection
// with reason NijenhuisNotSkew or NotKilling.
Form contactTorsion(const AlmostContact& s);
// T = -d Omega(J,J,J) + N. Throws NoSkewConnection: AlmostKaehler when
// d Omega = 0 and N != 0, NijenhuisNotSkew otherwise.
Form hermitianTorsion(const AlmostHermitian& s);

// nabla g = nabla eta = nabla phi = 0 for the connection with torsion t.
std::vector<Residual> contactParallelism(const AlmostContact& s, const Form& t);
std::vector<Residual> hermitianParallelism(const AlmostHermitian& s, const Form& t);
// Rank of the linear map from 3-forms S to the defect of nabla + S/2 preserving
// the structure. Full rank (= dim Lambda^3) certifies uniqueness.
struct UniquenessCertificate {
    int rank = 0;
    int unknowns = 0;
    bool unique() const { return rank == unknowns; }
};
UniquenessCertificate contactUniqueness(const AlmostContact& s);
UniquenessCertificate hermitianUniqueness(const AlmostHermitian& s);

// rho(X,Y) = 1/2 sum R(X,Y,e_i,phi e_i),
// omega(X) = -1/2 sum T(X,e_i,phi e_i)   (Lee form theta with J(X) inserted),
// lambda(X,Y) = sum dT(X,Y,e_i,phi e_i).
struct RicciForms {
    Mat rho;
    Vec omega;
    Mat lambda;
    Mat ric;        // Ric of the connection with torsion
    Mat torsionSq;  // sum_i g(T(X,e_i), T(Y,e_i))
};
RicciForms ricciForms(const AlmostContact& s, const Form& t);
RicciForms ricciForms(const AlmostHermitian& s, const Form& t);

// rho - (Ric(X,phi Y) - (nabla_X omega)(Y) + 1/4 lambda) on all index pairs.
Residual contactRicciFormIdentity(const AlmostContact& s, const Form& t);
// Ric(X,JY) + (nabla_X theta)(JY) + 1/4 lambda: the identity against rho and
// whether it vanishes (holonomy in SU(n)).
struct SUnCriterion {
    Residual identity;
    Mat rightHandSide;
    bool rhoVanishes = false;
    bool holonomyInSUn() const { return identity.ok && rhoVanishes; }
};
SUnCriterion suNCriterion(const AlmostHermitian& s, const Form& t);

// The five general identities for nabla^g phi and N, individually.
std::vector<Residual> contactGeneralIdentities(const AlmostContact& s);
// dF^- = -N(X,Y,phi Z) - cyclic, and N through nabla^g phi.
std::vector<Residual> contactNijenhuisIdentities(const AlmostContact& s);
// nabla^g_xi xi = xi -| d eta = 0 and
// N(phi X,Y,xi) = N(X,phi Y,xi) = N^2(X,Y) = dF(X,Y,xi) = -dF(phi X,phi Y,xi).
// Requires skew N and Killing xi (throws NoSkewConnection otherwise).
struct ReebChain {
    std::vector<Residual> residuals;
    Mat commonValue;  // N^2
};
ReebChain reebChain(const AlmostContact& s);
// dF = 0 together with skew N forces N = 0; fails only on a counterexample.
Residual closedFundamentalFormCheck(const AlmostContact& s);
// Pieces of the almost hermitian theory: the nabla^g J formula and
// 4 dOmega^- = -3 N(JX,Y,Z), for skew N.
std::vector<Residual> hermitianGeneralIdentities(const AlmostHermitian& s);

bool isSasakian(const AlmostContact& s);

// Tanno deformation phi~ = phi, xi~ = a^2 xi, eta~ = a^-2 eta,
// g~ = a^-2 g + (a^-4 - a^-2) eta (x) eta, on the coframe e~ = a^-1 e
// (horizontal), eta~. Structure constants scale by a^(w_j + w_k - w_i) with
// weights 1 (horizontal) and 2 (Reeb); odd exponents need a rational a.
// Requires a Sasakian structure whose xi is a coframe vector.
AlmostContact tannoDeform(const AlmostContact& s, const Rational& a2);
// Pointwise Ricci of the deformed Sasakian metric in the orthonormal frame:
// horizontal a^2 (Ric + 2) - 2, Reeb entry 2k, for a Sasakian Ric^g.
Mat tannoRicci(const Mat& ric, int xi, const Rational& a2);

// Six-dimensional nearly Kaehler identities at a point for the constant a,
// with T = a-scaled (Re psi + Im psi)/2, dT = a Omega ^ Omega and
// Ric^g = 5/2 a g taken as data.
std::vector<Residual> nearlyKaehlerAlgebra(const Rational& a);
// a (e1234 + e1256 + e3456 + 3) on the half-spin modules.
std::pair<EigenReport, EigenReport> nearlyKaehlerSpinorSpectrum(const Rational& a);

} // namespace skewtor
