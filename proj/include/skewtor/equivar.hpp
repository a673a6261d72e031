#pragma once

// g2 acting on tensor spaces over R^7, the equivariant maps Phi and Psi, and
// Casimir-based isotypic decomposition.
//
// A tensor of rank k is a vector of length 7^k of components T(i1,...,ik),
// index ((i1*7 + i2)*7 + i3)... . A 2-form X is the tensor X(i,j).

#include "skewtor/check.hpp"
#include "skewtor/form.hpp"
#include "skewtor/linalg.hpp"

#include <string>
#include <vector>

namespace skewtor {

struct G2Algebra {
    std::vector<Form> basis;  // 14 two-forms
    Mat gram;                 // (xi_a, xi_b)
    // structure constants: [xi_a, xi_b] = sum_c bracket[a](b, c) xi_c
    std::vector<Mat> bracket;
    bool closed = false;
};

G2Algebra buildG2Basis();
// Commutator of skew endomorphisms, as a 2-form.
Form bracket2(const Form& a, const Form& b);

// A g2-invariant subspace of the rank-k tensors. basis has one column per
// element; the rows listed in pivots form an identity block, so coordinates
// of a tensor in the subspace are read off those rows.
struct TensorSpace {
    std::string name;
    int rank = 0;
    Mat basis;
    std::vector<int> pivots;
    int dim() const { return static_cast<int>(basis.cols()); }
    Vec coordinates(const Vec& tensor) const;
};

TensorSpace makeSpace(const std::string& name, int rank, const Mat& spanning);
Vec tensorOf(const Form& f);
// Derivation action of a 2-form on a rank-k tensor (e_j -> sum_k a(e_j,e_k) e_k in every slot).
Vec actOnTensor(const Form& xi, int rank, const Vec& t);
// Matrix of xi on the space in its own coordinates.
Mat action(const TensorSpace& s, const Form& xi);

enum class G2Space { R7, G2, M, L2, L3, L4, L3_27, R7xM, R7xG2, R7xS2 };
TensorSpace space(G2Space which);
std::string spaceName(G2Space which);

struct BigMap {
    std::string name;
    TensorSpace domain, codomain;
    Mat matrix;  // codomain coordinates x domain coordinates
};

// Phi(S)(X,Y,Z) = S(Z)(X,Y) + S(Y)(X,Z) on R^7 (x) g2 -> R^7 (x) S^2.
BigMap phiMap();
// The same formula on R^7 (x) m -> R^7 (x) S^2 (Psi).
BigMap psiMap();
// Phi or Psi applied to a 1-form with values in 2-forms, sigma[z] = S(e_z).
Vec symmetrizedImage(const std::vector<Form>& sigma);
// Largest commutation defect of the map with the 14 generators.
Residual equivarianceResidual(const BigMap& m);

struct RankCertificates {
    int rankPhi = 0;          // 98: Phi injective
    int kernelPhi = 0;
    int rankPsi14 = 0;        // dim Psi(Lambda^2_14)
    int rankPhiPsi14 = 0;     // 112: the intersection with Im Phi is zero
    int rankPhiPsi1 = 0;      // 98: Psi(Lambda^0_1) inside Im Phi
    int rankPhiPsi7 = 0;      // 98
    int rankPhiPsi27 = 0;     // 98
    bool psiIdentityZero = false;
    std::vector<Residual> residuals() const;
};
RankCertificates rankCertificates();

// The c with Phi(Sigma0(b)) = c Psi(b) for Sigma0(b)(Y) = pr_g2(b ^ Y) and
// b embedded as Y -> sum_j w3(b, Y, e_j) e_j -| w3. Throws if not proportional.
Rational sigma0Constant();
// Phi(Sigma(G)) = Psi(G) for Sigma(G)(Y) = -1/2 pr_g2(Y -| G27 - 1/4 b ^ Y),
// with b(X) = 1/12 sum (b ^ X, e_i -| w3) e_i -| w3 and G27(X) = 1/6 sum (X -| G27, e_i -| w3) e_i -| w3.
std::vector<Residual> sigmaFormulaCheck();

struct IsotypicPart {
    Rational casimir;
    int dim = 0;
    std::string label;  // "1", "7", "14", "27", "64", "77" or "UNMATCHED"
    int multiplicity = 0;
};

struct IsotypicReport {
    std::string space;
    int dim = 0;
    std::vector<IsotypicPart> parts;
    bool commutes = false;  // Casimir commutes with all generators
    int accounted() const;
    bool complete() const { return accounted() == dim; }
    // e.g. "7 + 27 + 64", multiplicities as "2x7"
    std::string summary() const;
};

struct CasimirCalibration {
    Rational c1, c7, c14, c27;
};
CasimirCalibration calibrateCasimir();
// -sum_{a,b} (gram^-1)_ab rho(xi_a) rho(xi_b), nonnegative spectrum.
Mat casimir(const TensorSpace& s);
IsotypicReport casimirDecompose(G2Space which);
IsotypicReport casimirDecompose(const TensorSpace& s, const CasimirCalibration& cal);

} // namespace skewtor
