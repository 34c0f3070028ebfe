#include "qschub/upoly.hpp"

#include <sstream>
#include <stdexcept>

namespace qs {

UPoly::UPoly(std::vector<mpq_class> coeffs) : c(std::move(coeffs)) { trim(); }

UPoly UPoly::constant(const mpq_class& a) { return UPoly(std::vector<mpq_class>{a}); }

UPoly UPoly::monomial(const mpq_class& a, int k) {
    std::vector<mpq_class> v(k + 1, 0);
    v[k] = a;
    return UPoly(v);
}

void UPoly::trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

mpq_class UPoly::eval(const mpq_class& t) const {
    mpq_class r = 0;
    for (int i = deg(); i >= 0; --i) r = r * t + c[i];
    return r;
}

UPoly UPoly::derivative() const {
    std::vector<mpq_class> v;
    for (size_t i = 1; i < c.size(); ++i) v.push_back(c[i] * static_cast<long>(i));
    return UPoly(v);
}

UPoly UPoly::monic() const {
    if (zero()) return *this;
    return *this / lead();
}

std::string UPoly::str(const std::string& var) const {
    if (zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = deg(); i >= 0; --i) {
        if (c[i] == 0) continue;
        mpq_class a = c[i];
        if (!first) os << (a < 0 ? " - " : " + ");
        else if (a < 0) os << "-";
        mpq_class m = abs(a);
        if (m != 1 || i == 0) os << m.get_str();
        if (i > 0) {
            if (m != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

UPoly operator+(const UPoly& a, const UPoly& b) {
    std::vector<mpq_class> v(std::max(a.c.size(), b.c.size()), 0);
    for (size_t i = 0; i < a.c.size(); ++i) v[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) v[i] += b.c[i];
    return UPoly(v);
}

UPoly operator-(const UPoly& a) {
    UPoly r = a;
    for (auto& x : r.c) x = -x;
    return r;
}

UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.zero() || b.zero()) return {};
    std::vector<mpq_class> v(a.c.size() + b.c.size() - 1, 0);
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j) v[i + j] += a.c[i] * b.c[j];
    return UPoly(v);
}

UPoly operator*(const UPoly& a, const mpq_class& s) {
    UPoly r = a;
    for (auto& x : r.c) x *= s;
    r.trim();
    return r;
}

UPoly operator/(const UPoly& a, const mpq_class& s) {
    if (s == 0) throw std::domain_error("division by zero");
    UPoly r = a;
    for (auto& x : r.c) x /= s;
    return r;
}

void divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r) {
    if (b.zero()) throw std::domain_error("polynomial division by zero");
    r = a;
    std::vector<mpq_class> qc(std::max(0, a.deg() - b.deg() + 1), 0);
    while (!r.zero() && r.deg() >= b.deg()) {
        int k = r.deg() - b.deg();
        mpq_class f = r.lead() / b.lead();
        qc[k] = f;
        for (int i = 0; i <= b.deg(); ++i) r.c[i + k] -= f * b.c[i];
        r.trim();
    }
    q = UPoly(qc);
}

UPoly operator%(const UPoly& a, const UPoly& b) {
    UPoly q, r;
    divmod(a, b, q, r);
    return r;
}

UPoly gcd(UPoly a, UPoly b) {
    while (!b.zero()) {
        UPoly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

bool squarefree(const UPoly& p) { return gcd(p, p.derivative()).deg() == 0; }

UPoly squarefree_part(const UPoly& p) {
    UPoly g = gcd(p, p.derivative());
    UPoly q, r;
    divmod(p, g, q, r);
    return q.monic();
}

std::vector<UPoly> sturm_chain(const UPoly& p) {
    std::vector<UPoly> s{p, p.derivative()};
    while (!s.back().zero()) {
        UPoly r = s[s.size() - 2] % s.back();
        if (r.zero()) break;
        s.push_back(-r);
    }
    if (s.back().zero()) s.pop_back();
    return s;
}

namespace {

int sign(const mpq_class& a) { return a > 0 ? 1 : (a < 0 ? -1 : 0); }

int variations(const std::vector<int>& signs) {
    int v = 0, last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

// at +inf (dir = 1) or -inf (dir = -1)
int variations_inf(const std::vector<UPoly>& chain, int dir) {
    std::vector<int> s;
    for (auto& p : chain) {
        int sg = sign(p.lead());
        if (dir < 0 && p.deg() % 2 == 1) sg = -sg;
        s.push_back(sg);
    }
    return variations(s);
}

int variations_at(const std::vector<UPoly>& chain, const mpq_class& t) {
    std::vector<int> s;
    for (auto& p : chain) s.push_back(sign(p.eval(t)));
    return variations(s);
}

}  // namespace

int count_real_roots(const UPoly& p) {
    if (p.deg() <= 0) return 0;
    auto ch = sturm_chain(p);
    return variations_inf(ch, -1) - variations_inf(ch, 1);
}

int count_roots_between(const UPoly& p, const mpq_class& a, const mpq_class& b) {
    if (p.deg() <= 0) return 0;
    auto ch = sturm_chain(p);
    return variations_at(ch, a) - variations_at(ch, b);
}

int count_positive_roots(const UPoly& p) {
    if (p.deg() <= 0) return 0;
    auto ch = sturm_chain(p);
    return variations_at(ch, 0) - variations_inf(ch, 1);
}

int count_negative_roots(const UPoly& p) {
    if (p.deg() <= 0) return 0;
    auto ch = sturm_chain(p);
    int at0 = variations_at(ch, 0);
    int zero_root = p.eval(0) == 0 ? 1 : 0;
    // (-inf, 0] minus a possible root at 0
    return variations_inf(ch, -1) - at0 - zero_root;
}

QMat identity_matrix(int n) {
    QMat m(n, std::vector<mpq_class>(n, 0));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

QMat mat_mul(const QMat& a, const QMat& b) {
    size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    QMat r(n, std::vector<mpq_class>(m, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t l = 0; l < k; ++l) {
            if (a[i][l] == 0) continue;
            for (size_t j = 0; j < m; ++j)
                if (b[l][j] != 0) r[i][j] += a[i][l] * b[l][j];
        }
    return r;
}

int mat_rank(QMat m) {
    int rows = static_cast<int>(m.size());
    if (rows == 0) return 0;
    int cols = static_cast<int>(m[0].size());
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int p = -1;
        for (int r = rank; r < rows; ++r)
            if (m[r][c] != 0) {
                p = r;
                break;
            }
        if (p < 0) continue;
        std::swap(m[p], m[rank]);
        for (int r = rank + 1; r < rows; ++r) {
            if (m[r][c] == 0) continue;
            mpq_class f = m[r][c] / m[rank][c];
            for (int j = c; j < cols; ++j) m[r][j] -= f * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

mpq_class mat_det(QMat m) {
    int n = static_cast<int>(m.size());
    mpq_class det = 1;
    for (int c = 0; c < n; ++c) {
        int p = -1;
        for (int r = c; r < n; ++r)
            if (m[r][c] != 0) {
                p = r;
                break;
            }
        if (p < 0) return 0;
        if (p != c) {
            std::swap(m[p], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (int r = c + 1; r < n; ++r) {
            if (m[r][c] == 0) continue;
            mpq_class f = m[r][c] / m[c][c];
            for (int j = c; j < n; ++j) m[r][j] -= f * m[c][j];
        }
    }
    return det;
}

mpq_class mat_trace(const QMat& m) {
    mpq_class t = 0;
    for (size_t i = 0; i < m.size(); ++i) t += m[i][i];
    return t;
}

UPoly char_poly(const QMat& input) {
    // Hessenberg form by similarity, then the standard recurrence.
    QMat h = input;
    int n = static_cast<int>(h.size());
    for (int m = 1; m < n - 1; ++m) {
        int i = -1;
        for (int r = m; r < n; ++r)
            if (h[r][m - 1] != 0) {
                i = r;
                break;
            }
        if (i < 0) continue;
        if (i != m) {
            std::swap(h[i], h[m]);
            for (int r = 0; r < n; ++r) std::swap(h[r][i], h[r][m]);
        }
        mpq_class t = h[m][m - 1];
        for (int k = m + 1; k < n; ++k) {
            if (h[k][m - 1] == 0) continue;
            mpq_class u = h[k][m - 1] / t;
            for (int j = 0; j < n; ++j) h[k][j] -= u * h[m][j];
            for (int r = 0; r < n; ++r) h[r][m] += u * h[r][k];
        }
    }
    std::vector<UPoly> p(n + 1);
    p[0] = UPoly::constant(1);
    UPoly x = UPoly::x();
    for (int m = 1; m <= n; ++m) {
        p[m] = (x - UPoly::constant(h[m - 1][m - 1])) * p[m - 1];
        mpq_class t = 1;
        for (int i = 1; i <= m - 1; ++i) {
            t *= h[m - i][m - i - 1];
            p[m] = p[m] - p[m - i - 1] * (t * h[m - i - 1][m - 1]);
        }
    }
    return p[n];
}

PMat pmat_mul(const PMat& a, const PMat& b) {
    size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    PMat r(n, std::vector<UPoly>(m));
    for (size_t i = 0; i < n; ++i)
        for (size_t l = 0; l < k; ++l) {
            if (a[i][l].zero()) continue;
            for (size_t j = 0; j < m; ++j)
                if (!b[l][j].zero()) r[i][j] = r[i][j] + a[i][l] * b[l][j];
        }
    return r;
}

std::vector<UPoly> char_poly_over_q(const PMat& a) {
    int n = static_cast<int>(a.size());
    std::vector<UPoly> c(n + 1);
    c[n] = UPoly::constant(1);
    PMat m(n, std::vector<UPoly>(n));
    for (int k = 1; k <= n; ++k) {
        PMat am = pmat_mul(a, m);
        for (int i = 0; i < n; ++i) am[i][i] = am[i][i] + c[n - k + 1];
        m = am;
        PMat t = pmat_mul(a, m);
        UPoly tr;
        for (int i = 0; i < n; ++i) tr = tr + t[i][i];
        c[n - k] = -(tr / mpq_class(k));
    }
    return c;
}

}  // namespace qs
