#pragma once

// Complex spin representations for 2 <= n <= 8 with e_i . e_i = -1.
//
// Gamma_{2j+1} = sz^(x)j (x) (i sx) (x) 1..., Gamma_{2j+2} = sz^(x)j (x) (i sy) (x) 1...
// (1-based names). In odd dimension Gamma_n = eps * i * sz^(x)m; the sign eps
// selects one of the two inequivalent Cl_n modules.

#include "skewtor/form.hpp"
#include "skewtor/linalg.hpp"

#include <string>
#include <vector>

namespace skewtor {

struct GammaRep {
    int n = 0;
    int epsilon = 1;
    std::vector<CMat> gamma;
    int size() const { return gamma.empty() ? 0 : static_cast<int>(gamma.front().rows()); }
};

// eps = -1 in dimension 7 (so that w3 has the eigenvalue -7), +1 otherwise.
int defaultOrientation(int n);
GammaRep buildRep(int n);
GammaRep buildRep(int n, int epsilon);

// Largest |Gamma_i Gamma_j + Gamma_j Gamma_i + 2 delta_ij| entry is zero.
bool cliffordRelationsHold(const GammaRep& rep);

CMat actForm(const GammaRep& rep, const Form& a);
CMat actVector(const GammaRep& rep, const Vec& x);

bool isHermitian(const CMat& m);
bool isAntiHermitian(const CMat& m);

struct EigenReport {
    std::vector<std::pair<Gauss, int>> values;  // ascending by (re, im)
    Poly residual;                               // does not split over Q(i); {1} when it does
    int size = 0;

    bool splits() const { return residual.size() <= 1; }
    // Multiset comparison against a list of eigenvalues in any order.
    bool matches(const std::vector<Gauss>& multiset) const;
    std::vector<Gauss> multiset() const;
    std::string toString() const;
};

EigenReport eigenvalues(const CMat& m);

// Columns span the intersection of the kernels; identity for an empty list.
CMat commonKernel(const std::vector<CMat>& ops, int size);
CMat eigenspace(const CMat& m, const Gauss& value);
// Matrix of m on the invariant subspace spanned by the columns of basis.
CMat restrictTo(const CMat& m, const CMat& basis);
// Even n: the two eigenspaces of the volume element (half-spin modules).
std::pair<CMat, CMat> halfSpinBases(const GammaRep& rep);

// Distinguished spinors of the 5-dimensional module, relative to
// eta ^ d eta with d eta = 2(e12 + e34):
//   Line  - the eigenvectors for +4 and -4 (xi acts by +i there),
//   Plane - the first basis vector of the kernel.
enum class Spinor5 { Line, Plane };
std::vector<CVec> distinguishedSpinors5d(const GammaRep& rep, Spinor5 kind);

// Closed-form conditions for sum t_ijk e_i e_j e_k + sum x_i e_i to kill the
// distinguished spinor(s) of the given kind.
bool kernelConditions5d(const Form& t, const Vec& x, Spinor5 kind);
// The same question answered by applying the endomorphism.
bool kernelMembership5d(const GammaRep& rep, const Form& t, const Vec& x, Spinor5 kind);

} // namespace skewtor
