#pragma once

#include <gmpxx.h>

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qschub/upoly.hpp"

namespace qs {

constexpr int kMaxVars = 6;

struct Mono {
    std::array<int, kMaxVars> e{};
    auto operator<=>(const Mono&) const = default;
    Mono operator*(const Mono& o) const;
    bool divides(const Mono& o) const;
};

// Sparse polynomial: exponent vector -> exact coefficient, no zero entries.
using Poly = std::map<Mono, mpq_class>;

Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly operator*(const Poly& a, const Poly& b);
Poly operator*(const Poly& a, const mpq_class& s);
Poly poly_pow(const Poly& a, int k);
void add_term(Poly& p, const Mono& m, const mpq_class& c);

// Weighted polynomial ring. At most one variable is the quantum parameter;
// it is ordered last, so weighted grevlex makes it the cheapest variable.
class GradedRing {
public:
    GradedRing() = default;
    GradedRing(std::vector<std::string> names, std::vector<int> weights, int qvar = -1);

    std::vector<std::string> names;
    std::vector<int> weights;
    int qvar = -1;

    int nvars() const { return static_cast<int>(names.size()); }
    int var(const std::string& name) const;  // throws Parse
    Poly var_poly(int i) const;
    Poly constant(const mpq_class& c) const;
    int degree(const Mono& m) const;
    // weighted degree, then reverse lexicographic with the last variable smallest
    bool greater(const Mono& a, const Mono& b) const;
    // Monomials of weighted degree d, largest first.
    std::vector<Mono> monomials(int d) const;
    std::optional<int> homogeneous_degree(const Poly& p) const;  // nullopt for 0 or mixed

    Poly parse(const std::string& text) const;
    std::string str(const Poly& p) const;
    std::string mono_str(const Mono& m) const;
};

// Substitute x_var -> value everywhere.
Poly substitute(const Poly& p, int var, const mpq_class& value);
// Replace x_var^exp by `replacement` until no exponent of var reaches exp.
Poly reduce_power(const Poly& p, int var, int exp, const Poly& replacement);
// Coefficients of a polynomial that involves only `var`.
UPoly to_upoly(const Poly& p, int var);

// Degreewise quotient of a weighted-homogeneous ideal by Macaulay matrices:
// in degree d the rows are all monomial multiples of the relations, reduced to
// echelon form with columns in decreasing monomial order. Pivot columns are the
// leading monomials, the others form the basis of the degree-d quotient.
class GradedQuotient {
public:
    GradedQuotient(GradedRing ring, std::vector<Poly> relations);

    const GradedRing& ring() const { return ring_; }
    const std::vector<Poly>& relations() const { return relations_; }
    const std::vector<int>& relation_degrees() const { return rel_deg_; }

    // Builds degrees 0..d, in parallel (QSCHUB_THREADS caps the thread count).
    void prepare(int d);
    int dim(int d);
    int relation_rank(int d);  // rank of the Macaulay matrix
    const std::vector<Mono>& basis(int d);
    // Coordinates of a homogeneous polynomial on basis(deg).
    std::vector<mpq_class> coords(const Poly& f);
    Poly from_coords(int d, const std::vector<mpq_class>& c);
    Poly normal_form(const Poly& f);  // componentwise

private:
    struct Row {
        std::vector<std::pair<int, mpq_class>> t;  // increasing column
    };
    struct Level {
        std::vector<Mono> monos;
        std::map<Mono, int> index;
        std::map<int, Row> pivots;
        std::vector<int> basis_cols;
        std::vector<Mono> basis;
        std::map<int, int> basis_pos;  // column -> position in basis
    };
    Level build(int d) const;
    Level& level(int d);
    static void reduce(Row& r, const std::map<int, Row>& pivots, bool full);

    GradedRing ring_;
    std::vector<Poly> relations_;
    std::vector<int> rel_deg_;
    std::map<int, Level> levels_;
};

// Quotient-as-Q[q]-module data read off the degreewise bases.
struct ModuleBasis {
    std::vector<Mono> basis;  // q-free basis monomials, by degree
    bool free = false;        // every degree-d basis monomial is q^k b with b in basis
    int checked_to = 0;
};
ModuleBasis module_basis(GradedQuotient& gq, int dmax);

struct Presentation {
    std::string space;  // "F4/P1"
    GradedRing ring;
    std::vector<std::string> relation_text;
    std::vector<Poly> relations;
    int expected_rank = 0;
    int dim = 0;
    std::map<std::string, std::string> generators;  // variable -> Weyl word
    std::string note;
    std::map<int, std::string> errata;  // relation index -> corrected text
};
// Relations with the errata substituted.
Presentation with_errata(const Presentation& p);

std::string default_catalog_path();
std::vector<Presentation> load_catalog(const std::string& path = default_catalog_path());
Presentation catalog_presentation(const std::string& space, const std::string& path = default_catalog_path());
std::vector<std::string> catalog_spaces(const std::string& path = default_catalog_path());

// #{(k, j) : j + k w_q = d} weighted by Betti numbers: the quantum-monomial count.
std::vector<int> monomial_count_oracle(const std::vector<int>& betti, int qweight, int dmax);
std::vector<int> graded_dims(const Presentation& p, int dmax);
// Independent count of the degree-d quotient: monomials minus Macaulay rank,
// recomputed from scratch with full row reduction and no shared state.
int macaulay_dim(const GradedRing& ring, const std::vector<Poly>& relations, int d);

// Finite-dimensional algebra at a value of the quantum parameter.
struct QuotientAlgebra {
    std::vector<Mono> basis;        // q-free module basis
    std::vector<int> gen_vars;      // non-q variables
    std::vector<QMat> ops;          // ops[i] = multiplication by gen_vars[i], columns = images
    mpq_class q_value;
    int dim() const { return static_cast<int>(basis.size()); }
    const GradedRing* ring = nullptr;

    QMat op_of(const Poly& f) const;                 // multiplication operator of f (q substituted)
    std::vector<mpq_class> element(const Poly& f) const;  // f * 1 in the basis
    bool commuting() const;
    QMat trace_form() const;
};

QuotientAlgebra specialize(GradedQuotient& gq, const ModuleBasis& mb, const mpq_class& q_value);

struct SemisimpleReport {
    int dim = 0;
    int trace_rank = 0;  // number of distinct points of the spectrum
    mpq_class det;
    bool semisimple = false;
};
SemisimpleReport trace_form_report(const QuotientAlgebra& a);

struct PresentationAlgebra {
    Presentation pres;
    GradedQuotient gq;
    ModuleBasis mb;
    explicit PresentationAlgebra(Presentation p, int dmax);
};

QuotientAlgebra mult_operators(PresentationAlgebra& pa, const mpq_class& q_value);
SemisimpleReport semisimple(PresentationAlgebra& pa, const mpq_class& q_value);

// Type B_n adjoint (odd orthogonal Grassmannian of planes): two equations in x1, x2.
struct BnCount {
    int n = 0;
    int branch_axes = 0;    // x1 x2 = 0
    int branch_ratio = 0;   // x2 = lambda x1
    int total = 0;
    bool identity_ok = false;     // (lambda+1) sum lambda^{2k} = 1 mod Phi
    bool second_eq_ok = false;    // second equation on the same branch
    bool squarefree_ok = false;
    int algebra_dim = 0;          // via the quotient at q = 1
    int algebra_points = 0;       // trace-form rank
};
Presentation bn_presentation(int n);
BnCount bn_solution_count(int n);

struct EliminantReport {
    std::string step;   // h^4 relation after the first elimination
    UPoly eliminant;    // monic, in s
    UPoly expected;
    bool equal = false;
    mpq_class p_at_minus2, p_at_0;
    int real_roots = 0;
    bool simple = false;
};
EliminantReport f4_eliminant_check();

// Incidence variety of points and hyperplanes in P^n.
Presentation incidence_presentation(int n);
// Same ring with q1 = a t, q2 = b t for the one-parameter family through (a, b).
Presentation incidence_scaled(int n, const mpq_class& a, const mpq_class& b);
struct IncidenceReport {
    int n = 0;
    mpq_class q1, q2;
    bool admissible = false;
    int algebra_dim = 0;
    int points = 0;           // trace-form rank
    bool semisimple = false;
    int reduction_count = -1; // lambda route, -1 when it does not apply
};
IncidenceReport incidence(int n, const mpq_class& q1, const mpq_class& q2);

}  // namespace qs
