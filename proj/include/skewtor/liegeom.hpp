#pragma once

// Left-invariant geometry of a Lie group with an orthonormal coframe e_1..e_n.
// The model is given by the differentials de_i; the structure constants are
// c_ijk = g([e_i,e_j], e_k) = -de_k(e_i, e_j).

#include "skewtor/check.hpp"
#include "skewtor/clifford.hpp"
#include "skewtor/form.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace skewtor {

struct InvalidModel : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class LieModel {
public:
    LieModel() = default;
    // Throws InvalidModel when d(de_i) != 0 for some i.
    LieModel(std::string name, std::vector<Form> de);
    static LieModel abelian(int n);

    const std::string& name() const { return name_; }
    int dim() const { return n_; }
    const Form& de(int i) const { return de_[i]; }
    const std::vector<Form>& differentials() const { return de_; }

    const Rational& c(int i, int j, int k) const { return c_[(i * n_ + j) * n_ + k]; }
    Vec bracket(int i, int j) const;
    Vec bracket(const Vec& x, const Vec& y) const;

    // Chevalley-Eilenberg differential on invariant forms.
    Form d(const Form& a) const;
    bool isUnimodular() const;

private:
    std::string name_;
    int n_ = 0;
    std::vector<Form> de_;
    std::vector<Rational> c_;
};

// Dense index tables, row-major.
struct Tensor3 {
    int n = 0;
    std::vector<Rational> v;
    explicit Tensor3(int dim = 0) : n(dim), v(static_cast<std::size_t>(dim) * dim * dim) {}
    Rational& operator()(int i, int j, int k) { return v[(i * n + j) * n + k]; }
    const Rational& operator()(int i, int j, int k) const { return v[(i * n + j) * n + k]; }
};

struct Tensor4 {
    int n = 0;
    std::vector<Rational> v;
    explicit Tensor4(int dim = 0) : n(dim), v(static_cast<std::size_t>(dim) * dim * dim * dim) {}
    Rational& operator()(int i, int j, int k, int l) { return v[((i * n + j) * n + k) * n + l]; }
    const Rational& operator()(int i, int j, int k, int l) const { return v[((i * n + j) * n + k) * n + l]; }
};

// w(i,j,k) = g(nabla_{e_i} e_j, e_k), skew in (j,k).
struct Connection {
    Tensor3 w;
    Form torsion;
    bool leviCivita = true;

    int dim() const { return w.n; }
    // Matrix of nabla_{e_i} on the coframe, A(j,k) = w(i,j,k).
    Mat matrix(int i) const;
};

Connection leviCivita(const LieModel& m);
// g(nabla_X Y, Z) = g(nabla^g_X Y, Z) + 1/2 T(X,Y,Z)
Connection withTorsion(const LieModel& m, const Form& t);
// Torsion tensor T(X,Y) = nabla_X Y - nabla_Y X - [X,Y] as w(i,j,k) - w(j,i,k) - c_ijk.
Tensor3 torsionTensor(const LieModel& m, const Connection& conn);

Form covariant(const Connection& conn, int i, const Form& a);
Form covariant(const Connection& conn, const Vec& x, const Form& a);
bool isParallel(const Connection& conn, const Form& a);

// delta^g a = -sum_i e_i -| nabla^g_{e_i} a
Form codiff(const LieModel& m, const Form& a);
// -sum_i e_i -| nabla_{e_i} a for the given connection
Form codiff(const Connection& conn, const Form& a);
// (-1)^(n(p+1)+1) * d * on homogeneous p-forms
Form starDStar(const LieModel& m, const Form& a);

struct Curvature {
    Tensor4 R;  // R(e_i,e_j,e_k,e_l) = g(R(e_i,e_j)e_k, e_l)
    Mat ric;    // Ric(Y,Z) = sum_i R(e_i,Y,Z,e_i)
    Rational scal;
};

Curvature curvature(const LieModel& m, const Connection& conn);

// TT(i,j) = sum_{m,n} T_imn T_jmn
Mat torsionSquare(const Form& t);
// Ric(e_i) as a coframe vector, i.e. row i of the table.
Vec ricciVector(const Mat& ric, int i);

// The six displayed identities relating T, dT, sigma^T and the two curvatures.
std::vector<Residual> verifyTorsionIdentities(const LieModel& m, const Form& t);

// Lambda_i = 1/2 sum_{j<k} w(i,j,k) Gamma_j Gamma_k
std::vector<CMat> spinorConnection(const Connection& conn, const GammaRep& rep);
CMat diracOperator(const std::vector<CMat>& lambda, const GammaRep& rep);
// -sum Lambda_i^2 + sum_k V_k Lambda_k with V = sum_i nabla^g_{e_i} e_i
CMat connectionLaplacian(const LieModel& m, const std::vector<CMat>& lambda);
// Invariant parallel spinors: common kernel of the Lambda_i.
CMat parallelSpinors(const LieModel& m, const Form& t, const GammaRep& rep);

// Skew-torsion Schroedinger-Lichnerowicz formula and the anticommutator
// {D, T} as matrix identities on invariant spinors, plus the two pointwise
// conditions on each parallel spinor.
std::vector<Residual> verifySpinorFormulas(const LieModel& m, const Form& t, const GammaRep& rep);

// First nonzero entry of a table as "name(i,j,...)=value", empty if none.
std::string firstNonzero(const Mat& m, const std::string& name);
std::string firstNonzero(const CMat& m, const std::string& name);
std::string firstNonzero(const Form& f, const std::string& name);

// Residual that passes when the table (or form) is zero.
Residual zeroResidual(const std::string& name, const Mat& m);
Residual zeroResidual(const std::string& name, const CMat& m);
Residual zeroResidual(const std::string& name, const Form& f);

} // namespace skewtor
