#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

#include "qschub/lie.hpp"
#include "qschub/schubert.hpp"

namespace qs {

// Polynomial in the simple roots alpha_1..alpha_r; key = exponent vector.
struct LocalizationValue {
    std::map<std::vector<int>, mpq_class> terms;
    int rank = 0;

    static LocalizationValue constant(int rank, const mpq_class& c);
    static LocalizationValue linear(const Vec& root);  // root in simple-root coordinates
    bool zero() const { return terms.empty(); }
    int degree() const;  // -1 for zero
    mpq_class eval(const std::vector<mpq_class>& point) const;
    std::string str() const;
    bool operator==(const LocalizationValue& o) const { return terms == o.terms; }
};
LocalizationValue operator+(const LocalizationValue& a, const LocalizationValue& b);
LocalizationValue operator-(const LocalizationValue& a, const LocalizationValue& b);
LocalizationValue operator*(const LocalizationValue& a, const LocalizationValue& b);
// True when the linear form gamma divides f.
bool divisible_by_root(const LocalizationValue& f, const Vec& gamma);

// Subword sums over a reduced word of v. States are weights lambda' = u(lambda)
// of the dominant weight lambda; a letter b is admissible on state mu when
// <mu, alpha_b^vee> > 0, which keeps every subword reduced and inside W^lambda.
// Returns, for each reachable weight, sigma_{weight}|_v.
std::map<Vec, LocalizationValue> localize_all(const RootSystem& rs, const Vec& lambda, const std::vector<int>& v_word);
// Same at a numeric point alpha_i -> point[i].
std::map<Vec, mpq_class> localize_all_at(const RootSystem& rs, const Vec& lambda, const std::vector<int>& v_word,
                                         const std::vector<mpq_class>& point);

// sigma_w|_v in G/B; v_word must be reduced.
LocalizationValue billey_localize(const RootSystem& rs, const WeylElement& w, const WeylElement& v);
// sigma_w|_v for classes of a G/P.
LocalizationValue billey_localize(const Space& sp, int w, int v);

// Product of the inversion roots of the class rep: sigma_w|_w.
LocalizationValue inversion_product(const Space& sp, int w);

// Fixed points with more than this many classes are refused.
constexpr int kCupCapacity = 4000;

// sigma_u sigma_v = sum c^w sigma_w, classical cup product.
std::map<int, mpz_class> cup_constants(const Space& sp, int u, int v);
// Single coefficient c^target_{u,v}, using only the Bruhat interval below target.
mpz_class cup_coefficient(const Space& sp, int u, int v, int target);

// Line varieties F = G/Q of adjoint spaces: node of Q (0-based), from the catalog.
struct LineVariety {
    std::string space;
    int q_node = -1;
};
std::vector<LineVariety> load_line_varieties(const std::string& path);
LineVariety line_variety(const std::string& space, const std::string& path);
std::string default_line_variety_path();

struct GwReport {
    int value = 0;
    bool balanced = false;
    std::string F;               // "E6/P4"
    WeylElement wZ;              // fiber over a point, as an element of W^Q
    int u_star = -1, v_star = -1, target = -1;  // classes of F
    bool closed_form_ok = true;  // hat(u^vee)^star = u s_alpha, same for v
    bool wz_bullets_ok = true;   // w_Z from the longest elements agrees
};
// I_1(sigma^u, sigma^v, sigma^w) through the variety of lines; u, v, w are
// classes of the space (codimension = length).
GwReport gw_degree_one(const Space& sp, int u, int v, int w, const std::string& path = default_line_variety_path());

}  // namespace qs
