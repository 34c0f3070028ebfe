#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qschub/schubert.hpp"

namespace qs {

// gamma_bar + k delta
struct AffineRoot {
    Vec root;
    Int k = 0;
    bool operator<(const AffineRoot& o) const { return std::tie(k, root) < std::tie(o.k, o.root); }
    bool operator==(const AffineRoot& o) const { return k == o.k && root == o.root; }
};

// q^d sigma_cls, affine weight eta = weight(cls) - d delta
struct QuantumMonomial {
    int cls = 0;
    Int d = 0;
    bool operator<(const QuantumMonomial& o) const { return std::tie(d, cls) < std::tie(o.d, o.cls); }
    bool operator==(const QuantumMonomial& o) const { return d == o.d && cls == o.cls; }
};

Int total_length(const Space& sp, const QuantumMonomial& m);
QuantumMonomial monomial_of(const Space& sp, const Vec& weight, Int d);  // throws BadLabel

struct ClassVector {
    std::map<QuantumMonomial, mpq_class> terms;
    void add(const QuantumMonomial& m, const mpq_class& c);
    mpq_class coeff(const QuantumMonomial& m) const;
    bool operator==(const ClassVector& o) const { return terms == o.terms; }
    static ClassVector basis(int cls, Int d = 0);
};

ClassVector shift_q(const ClassVector& v, Int by);

std::vector<AffineRoot> affine_simple_roots(const RootSystem& rs);
bool is_real_affine_root(const RootSystem& rs, const AffineRoot& g);
// s_gamma(eta): weight - m gamma_bar, d + m k with m = <weight, gamma_bar^vee>
QuantumMonomial affine_reflect(const Space& sp, const QuantumMonomial& m, const AffineRoot& g);

struct Interaction {
    AffineRoot gamma;
    Int coeff;
};

// Interacting roots of the restricted formula; flavor defaults to the space's own.
std::vector<Interaction> interacting_roots(const Space& sp, const QuantumMonomial& m);
std::vector<Interaction> interacting_roots(const Space& sp, const QuantumMonomial& m, Flavor f);
// All positive affine roots raising the length by one with positive pairing.
std::vector<Interaction> fulton_roots(const Space& sp, const QuantumMonomial& m);

ClassVector quantum_chevalley(const Space& sp, const ClassVector& v);
ClassVector quantum_chevalley(const Space& sp, const ClassVector& v, Flavor f);
ClassVector fulton_chevalley(const Space& sp, const ClassVector& v);

// Entry (row, col) maps q-power -> coefficient.
struct QMatrix {
    int n = 0;
    std::vector<std::map<int, std::map<Int, Int>>> cols;  // cols[c][r][k]
    explicit QMatrix(int n_ = 0) : n(n_), cols(n_) {}
    void add(int r, int c, Int k, Int v);
    Int entry(int r, int c, Int k) const;
    bool operator==(const QMatrix& o) const { return n == o.n && cols == o.cols; }
};
QMatrix operator*(const QMatrix& a, const QMatrix& b);

QMatrix mh_matrix(const Space& sp);
QMatrix classical_part(const QMatrix& m);

// Apply the classical Chevalley operator k times to sigma_start.
std::vector<mpz_class> classical_power_apply(const Space& sp, int start, int k);
mpz_class class_degree(const Space& sp, int cls);
mpz_class product_degree(const Space& sp, int u, int v);

struct LengthIdentity {
    Int lhs = 0;
    Int rhs = 0;       // l or l + floor(l / c1)
    Int rhs_sign = 0;  // l or l + d + [label negative]
};
LengthIdentity length_identity_check(const Space& sp, const QuantumMonomial& m);
LengthIdentity length_identity_check(const Space& sp, const QuantumMonomial& m, Flavor f);

struct AffineSymmetry {
    int node = 0;
    std::vector<int> tau;  // permutation of affine nodes 0..rank (0 = affine node)
    int v_class = 0;       // class of sigma_{v_c}
    std::vector<QuantumMonomial> image;  // S(sigma_cls) per class
    QMatrix matrix;
    ClassVector apply(const ClassVector& v) const;
};
std::vector<int> cominuscule_nodes(const RootSystem& rs);
AffineRoot tau_c(const Space& sp, int node, const AffineRoot& g);
AffineSymmetry affine_symmetry(const Space& sp, int node);

// Classes reachable from varpi by steps of pairing exactly one (in the dual
// system when cominuscule is set).
std::vector<bool> lambda_minuscule_marks(const Space& sp, bool cominuscule);

std::string hasse_dot(const Space& sp, Int lo, Int hi);

std::string class_vector_json(const Space& sp, const ClassVector& v);
std::string class_vector_str(const Space& sp, const ClassVector& v);
std::string class_name(const Space& sp, int cls);

}  // namespace qs
