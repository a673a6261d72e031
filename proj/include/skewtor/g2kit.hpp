#pragma once

// G2-structures in the canonical frame
//   w3 = e127 + e135 - e146 - e236 - e245 + e347 + e567
// and their characteristic connection.

#include "skewtor/check.hpp"
#include "skewtor/liegeom.hpp"

#include <stdexcept>

namespace skewtor {

Form g2Form();      // w3
Form g2StarForm();  // *w3

// Coefficient vector of the seven linear equations cutting out g2 in so(7).
Vec g2Equations(const Form& a);
bool inG2(const Form& a);

struct Split2 {
    Form part7, part14;
};
struct Split3 {
    Form part1, part7, part27;
};

Split2 project2(const Form& a);
Split3 project3(const Form& a);
// Basis of Lambda^3_27 (27 forms, exact).
std::vector<Form> lambda3_27Basis();

// rho(a) w3 for a 2-form a, with e_j -> sum_k a(e_j,e_k) e_k.
Form rhoOnForm(const Form& a2, const Form& f);
Mat skewMatrix(const Form& a2);

struct NoSkewConnection : std::runtime_error {
    enum class Reason { G2Obstruction, NijenhuisNotSkew, NotKilling, AlmostKaehler };
    Reason reason;
    NoSkewConnection(Reason r, const std::string& msg) : std::runtime_error(msg), reason(r) {}
};

struct G2Structure {
    LieModel model;
    Form omega;
    // Accepts 7-dimensional models; omega must be the canonical form.
    explicit G2Structure(LieModel m);
    G2Structure(LieModel m, Form w);
};

struct TorsionClass {
    Rational lambda;       // -(1/7)(dw3, *w3)
    Rational lambdaTrace;  // the same number read off the Lambda^0_1 part of Gamma
    Vec beta;
    Form gamma27;
    Form obstruction14;    // Lambda^2_14 part of Gamma; zero iff the connection exists
    Mat gamma;             // gamma(i,j): Gamma(e_i) = sum_j gamma(i,j) e_j -| w3

    bool cocalibrated() const;
    bool nearlyParallel() const;
    bool hasSkewConnection() const { return obstruction14.isZero(); }
};

TorsionClass classify(const G2Structure& s);
// T = 1/6 (dw3,*w3) w3 - *dw3 + *(beta ^ w3). Throws NoSkewConnection.
Form torsionForm(const G2Structure& s);
// Ric(X) = 1/2 sum_i (X -| dT + 2 nabla_X T, e_i -| *w3) e_i, as a table Ric(e_a, e_i).
Mat ricciViaDT(const G2Structure& s, const Form& t);

// ricciViaDT against the curvature Ricci tensor, the Riemannian balance
// equation and (X -| dT, w3) = -2 (nabla_X T, w3).
std::vector<Residual> g2RicciResiduals(const G2Structure& s, const Form& t);

std::vector<Residual> nearlyParallelAlgebra(const Rational& lambda);

struct RicciFlatReport {
    bool ricciFlat = false;
    bool closedCoclosed = false;
    bool cubicEquation = false;
    bool wedgeIdentity = false;
    bool consistent() const { return ricciFlat == closedCoclosed && closedCoclosed == cubicEquation; }
};
RicciFlatReport ricciFlatConditions(const G2Structure& s, const Form& t);

// Universal contraction constants of the G2 decomposition.
std::vector<Residual> g2Constants();
// Model-level: delta w3 = -beta -| w3, dw3 = -lambda *w3 + *Gamma27 + 3/4 beta ^ w3,
// the Gamma27 reconstruction, the nabla^g w3 formula and the torsion split.
std::vector<Residual> dOmegaDecomposition(const G2Structure& s);
// Canonical spinor identities, plus D^g Psi0 = -3/4 T Psi0 on a model.
std::vector<Residual> g2SpinorIdentities();
std::vector<Residual> g2ModelSpinorIdentities(const G2Structure& s, const Form& t);

// Common (-7)-eigenvector of w3 in the 7-dimensional spin module.
CVec canonicalSpinor(const GammaRep& rep);

} // namespace skewtor
