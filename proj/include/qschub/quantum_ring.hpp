#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qschub/polyring.hpp"
#include "qschub/qchevalley.hpp"

namespace qs {

// Schubert classes inside a presentation at formal q. X[w] is found length by
// length from the quantum Chevalley rule h * X[w] = sum c q^d X[w'] together
// with the generator identifications (variable = Schubert class of its word).
// Where that leaves a degree below c1 underdetermined, classical products of
// the generators (localization cup constants) supply the missing equations.
// Any inconsistency between the presentation, the generator words and the
// Chevalley rule surfaces as a Certificate error.
class SchubertRing {
public:
    // Errata in the catalog entry are applied.
    SchubertRing(const Presentation& p, int extra_degrees = 0);

    const Space& space() const { return *sp_; }
    PresentationAlgebra& algebra() { return pa_; }
    const Poly& cls(int w) const { return X_.at(w); }
    int hvar() const { return h_; }

    // X[u] X[v] expanded on the q^d X[w].
    ClassVector product(int u, int v);
    ClassVector expand(const Poly& f);  // homogeneous f

private:
    std::vector<mpq_class> solve_in_degree(int D, const std::vector<mpq_class>& y);

    std::shared_ptr<const Space> sp_;
    PresentationAlgebra pa_;
    int h_ = -1;
    std::vector<Poly> X_;
    std::map<int, std::pair<std::vector<QuantumMonomial>, QMat>> inverse_;
};

// Classical part (q = 0) of each relation evaluated on Schubert classes, with
// generator products taken from localization cup constants.
struct RelationCheck {
    int index = 0;
    int degree = 0;
    bool vanishes = false;
    int residual_terms = 0;  // classes with nonzero coefficient
};
std::vector<RelationCheck> classical_relation_check(const Presentation& p);

struct PresentationReport {
    std::string space;
    bool pass = false;
    int dmax = 0;
    std::vector<int> dims, oracle;
    int first_bad = -1;
    std::vector<int> relation_degrees;
    bool free = false;
    int module_rank = 0;
    bool h_generated = false;
    std::optional<bool> minimal_polynomial_ok;
    std::string minimal_polynomial;
    std::vector<RelationCheck> classical;
    std::optional<bool> classical_ok;  // unset without generator words
    std::string message;
};
// dmax defaults to 2 dim + 2 c1. `pass` covers the dimension count and, for
// h-generated rings, the minimal polynomial; classical_ok is reported apart.
PresentationReport verify_presentation(const Presentation& p, std::optional<int> dmax = std::nullopt);

// Characteristic polynomial of M_h over Q[q] as a polynomial in (h, q).
Poly mh_char_poly(const Space& sp, const GradedRing& ring);
bool mh_cyclic(const Space& sp);  // 1, h, ..., h^(n-1) independent at q = 1

struct RingProperties {
    Int max_q_power = 0;
    int products = 0;
    ClassVector pt_square;
    bool pt_square_ok = false;  // 2 q^2 [line]
    struct Spectrum {
        int cls = 0;
        UPoly charpoly;
        int distinct = 0;
        int distinct_real = 0;
    };
    std::vector<Spectrum> spectra;  // classes of degree c1 at q = 1
    bool real_spectrum = false;
};
RingProperties ring_properties(SchubertRing& ring);

// Multiplication by sigma^2 (sigma = s4 s3 s2 s1) on span(q, sigma_{-a1}, sigma_{-a2})
// at q = 1, columns = images.
struct BlockReport {
    QMat matrix;
    UPoly charpoly;
    int real_roots = 0, positive = 0, negative = 0;
    bool squarefree = false;
};
BlockReport f4_square_block(SchubertRing& ring);

}  // namespace qs
