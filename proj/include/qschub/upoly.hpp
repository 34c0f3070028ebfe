#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace qs {

// Dense univariate polynomial over Q, c[i] is the coefficient of x^i.
struct UPoly {
    std::vector<mpq_class> c;

    UPoly() = default;
    explicit UPoly(std::vector<mpq_class> coeffs);
    static UPoly constant(const mpq_class& a);
    static UPoly monomial(const mpq_class& a, int k);
    static UPoly x() { return monomial(1, 1); }

    int deg() const { return static_cast<int>(c.size()) - 1; }  // -1 for zero
    bool zero() const { return c.empty(); }
    const mpq_class& lead() const { return c.back(); }
    mpq_class coeff(int k) const { return k >= 0 && k < static_cast<int>(c.size()) ? c[k] : mpq_class(0); }
    mpq_class eval(const mpq_class& t) const;
    UPoly derivative() const;
    UPoly monic() const;
    void trim();
    std::string str(const std::string& var = "x") const;

    bool operator==(const UPoly& o) const { return c == o.c; }
    bool operator!=(const UPoly& o) const { return c != o.c; }
};

UPoly operator+(const UPoly& a, const UPoly& b);
UPoly operator-(const UPoly& a, const UPoly& b);
UPoly operator-(const UPoly& a);
UPoly operator*(const UPoly& a, const UPoly& b);
UPoly operator*(const UPoly& a, const mpq_class& s);
UPoly operator/(const UPoly& a, const mpq_class& s);
void divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r);
UPoly operator%(const UPoly& a, const UPoly& b);
UPoly gcd(UPoly a, UPoly b);  // monic, zero if both zero
bool squarefree(const UPoly& p);
UPoly squarefree_part(const UPoly& p);

// Sturm chain p, p', -rem, ...
std::vector<UPoly> sturm_chain(const UPoly& p);
// Distinct real roots, and those in (a, b].
int count_real_roots(const UPoly& p);
int count_roots_between(const UPoly& p, const mpq_class& a, const mpq_class& b);
// Distinct positive / negative real roots.
int count_positive_roots(const UPoly& p);
int count_negative_roots(const UPoly& p);

using QMat = std::vector<std::vector<mpq_class>>;
QMat identity_matrix(int n);
QMat mat_mul(const QMat& a, const QMat& b);
int mat_rank(QMat m);
mpq_class mat_det(QMat m);
mpq_class mat_trace(const QMat& m);
// det(x I - M) by Hessenberg reduction
UPoly char_poly(const QMat& m);

// Matrices over Q[q]: charpoly coefficients by Faddeev-LeVerrier.
using PMat = std::vector<std::vector<UPoly>>;
std::vector<UPoly> char_poly_over_q(const PMat& m);  // coefficients of x^0..x^n
PMat pmat_mul(const PMat& a, const PMat& b);

}  // namespace qs
