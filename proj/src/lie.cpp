#include "qschub/lie.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>

namespace qs {

namespace {

Mat cartan_matrix(char series, int n) {
    Mat a(n, Vec(n, 0));
    for (int i = 0; i < n; ++i) a[i][i] = 2;
    auto link = [&](int i, int j) { a[i][j] = a[j][i] = -1; };
    switch (series) {
    case 'A':
        for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
        break;
    case 'B':
        for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
        a[n - 1][n - 2] = -2;  // <alpha_{n-1}, alpha_n^vee>
        break;
    case 'C':
        for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
        a[n - 2][n - 1] = -2;  // <alpha_n, alpha_{n-1}^vee>
        break;
    case 'D':
        for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
        link(n - 3, n - 1);
        break;
    case 'E':
        link(0, 2);
        link(1, 3);
        for (int i = 2; i + 1 < n; ++i) link(i, i + 1);
        break;
    case 'F':
        link(0, 1);
        link(1, 2);
        link(2, 3);
        a[2][1] = -2;
        break;
    case 'G':
        a[0][1] = -3;
        a[1][0] = -1;
        break;
    }
    return a;
}

bool valid_type(char s, int n) {
    switch (s) {
    case 'A': return n >= 1;
    case 'B': return n >= 2;
    case 'C': return n >= 2;
    case 'D': return n >= 4;
    case 'E': return n >= 6 && n <= 8;
    case 'F': return n == 4;
    case 'G': return n == 2;
    default: return false;
    }
}

}  // namespace

RootSystem RootSystem::build(char series, int rank) {
    series = static_cast<char>(std::toupper(static_cast<unsigned char>(series)));
    if (!valid_type(series, rank))
        throw Error(ErrorKind::InvalidType,
                    "invalid root system type " + std::string(1, series) + std::to_string(rank));
    return from_cartan(series, rank, cartan_matrix(series, rank));
}

RootSystem RootSystem::from_cartan(char series, int rank, Mat cartan) {
    RootSystem rs;
    rs.series = series;
    rs.rank = rank;
    rs.cartan = std::move(cartan);
    rs.finish();
    return rs;
}

RootSystem RootSystem::dual() const {
    Mat t(rank, Vec(rank));
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) t[i][j] = cartan[j][i];
    char s = series == 'B' ? 'C' : series == 'C' ? 'B' : series;
    return from_cartan(s, rank, t);
}

void RootSystem::finish() {
    const int n = rank;
    // symmetrizing factors
    std::vector<mpq_class> f(n, 0);
    std::vector<bool> seen(n, false);
    f[0] = 1;
    seen[0] = true;
    std::vector<int> stack{0};
    while (!stack.empty()) {
        int i = stack.back();
        stack.pop_back();
        for (int j = 0; j < n; ++j)
            if (!seen[j] && cartan[i][j] != 0) {
                f[j] = f[i] * mpq_class(cartan[i][j]) / mpq_class(cartan[j][i]);
                seen[j] = true;
                stack.push_back(j);
            }
    }
    mpq_class mn = *std::min_element(f.begin(), f.end());
    half_norm.assign(n, 0);
    for (int i = 0; i < n; ++i) {
        mpq_class v = f[i] / mn;
        half_norm[i] = v.get_num().get_si();
    }

    // positive roots level by level with root strings
    std::set<Vec> found;
    std::vector<std::vector<Vec>> levels(1);
    for (int i = 0; i < n; ++i) {
        Vec e(n, 0);
        e[i] = 1;
        levels[0].push_back(e);
        found.insert(e);
    }
    while (!levels.back().empty()) {
        std::set<Vec> next;
        for (const Vec& b : levels.back()) {
            Vec lam = root_to_weight(b);
            for (int i = 0; i < n; ++i) {
                int p = 0;
                Vec c = b;
                while (true) {
                    c[i] -= 1;
                    if (!found.count(c)) break;
                    ++p;
                }
                if (p - lam[i] > 0) {
                    Vec up = b;
                    up[i] += 1;
                    next.insert(up);
                }
            }
        }
        std::vector<Vec> lv(next.begin(), next.end());
        for (auto& v : lv) found.insert(v);
        levels.push_back(lv);
    }
    positive_roots.clear();
    for (auto& lv : levels)
        for (auto& v : lv) positive_roots.push_back(v);

    all_roots_.clear();
    for (auto& r : positive_roots) all_roots_.push_back(r);
    for (auto& r : positive_roots) {
        Vec m = r;
        for (auto& x : m) x = -x;
        all_roots_.push_back(m);
    }
    root_pos_.clear();
    for (size_t k = 0; k < all_roots_.size(); ++k) root_pos_[all_roots_[k]] = static_cast<int>(k);

    highest_root = positive_roots.back();
    Int shortest = norm2(positive_roots[0]);
    for (auto& r : positive_roots) shortest = std::min(shortest, norm2(r));
    highest_short_root.clear();
    for (auto& r : positive_roots)
        if (norm2(r) == shortest) highest_short_root = r;  // last by height
    rho.assign(n, 1);
    rho_check.assign(n, 1);
}

std::string RootSystem::name() const { return std::string(1, series) + std::to_string(rank); }

bool RootSystem::simply_laced() const {
    for (auto h : half_norm)
        if (h != 1) return false;
    return true;
}

Vec RootSystem::root_to_weight(const Vec& root) const {
    Vec w(rank, 0);
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) w[i] += cartan[i][j] * root[j];
    return w;
}

Vec RootSystem::weight_to_root(const Vec& weight) const {
    const int n = rank;
    std::vector<std::vector<mpq_class>> m(n, std::vector<mpq_class>(n + 1));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m[i][j] = cartan[i][j];
        m[i][n] = weight[i];
    }
    for (int c = 0; c < n; ++c) {
        int p = c;
        while (m[p][c] == 0) ++p;
        std::swap(m[p], m[c]);
        for (int r = 0; r < n; ++r) {
            if (r == c || m[r][c] == 0) continue;
            mpq_class f = m[r][c] / m[c][c];
            for (int k = c; k <= n; ++k) m[r][k] -= f * m[c][k];
        }
    }
    Vec out(n);
    for (int i = 0; i < n; ++i) {
        mpq_class v = m[i][n] / m[i][i];
        if (v.get_den() != 1) throw Error(ErrorKind::NotARoot, "weight not in the root lattice");
        out[i] = v.get_num().get_si();
    }
    return out;
}

Int RootSystem::norm2(const Vec& r) const {
    Int s = 0;
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) s += r[i] * r[j] * cartan[i][j] * half_norm[i];
    return s;
}

bool RootSystem::is_root(const Vec& r) const { return root_pos_.count(r) > 0; }

int RootSystem::root_index(const Vec& r) const {
    auto it = root_pos_.find(r);
    return it == root_pos_.end() ? -1 : it->second;
}

bool RootSystem::is_long(const Vec& r) const {
    return is_root(r) && norm2(r) == norm2(highest_root);
}

bool RootSystem::is_short(const Vec& r) const {
    return is_root(r) && norm2(r) == norm2(highest_short_root);
}

Vec RootSystem::coroot(const Vec& r) const {
    if (!is_root(r)) throw Error(ErrorKind::NotARoot, "not a root: " + vec_str(r));
    Int nb = norm2(r);
    Vec c(rank);
    for (int i = 0; i < rank; ++i) c[i] = r[i] * half_norm[i] * 2 / nb;
    return c;
}

Int RootSystem::pair(const Vec& lambda, const Vec& root) const {
    Vec c = coroot(root);
    Int s = 0;
    for (int i = 0; i < rank; ++i) s += lambda[i] * c[i];
    return s;
}

Int RootSystem::pair_roots(const Vec& beta, const Vec& gamma) const {
    return pair(root_to_weight(beta), gamma);
}

Vec RootSystem::reflect(const Vec& lambda, const Vec& root) const {
    Int m = pair(lambda, root);
    Vec a = root_to_weight(root);
    Vec out = lambda;
    for (int i = 0; i < rank; ++i) out[i] -= m * a[i];
    return out;
}

Vec RootSystem::simple_reflect(const Vec& lambda, int i) const {
    Vec out = lambda;
    Int m = lambda[i];
    if (m == 0) return out;
    for (int k = 0; k < rank; ++k) out[k] -= m * cartan[k][i];
    return out;
}

Vec RootSystem::fundamental(int i) const {
    Vec w(rank, 0);
    w[i] = 1;
    return w;
}

int RootSystem::max_root_length_ratio() const {
    return static_cast<int>(norm2(highest_root) / norm2(highest_short_root));
}

std::vector<Vec> roots_by_reflection_closure(const RootSystem& rs) {
    std::set<Vec> roots;
    std::vector<Vec> todo;
    for (int i = 0; i < rs.rank; ++i) {
        Vec e(rs.rank, 0);
        e[i] = 1;
        roots.insert(e);
        todo.push_back(e);
    }
    while (!todo.empty()) {
        Vec r = todo.back();
        todo.pop_back();
        for (int i = 0; i < rs.rank; ++i) {
            // s_i(beta) = beta - <beta, alpha_i^vee> alpha_i
            Int m = 0;
            for (int j = 0; j < rs.rank; ++j) m += rs.cartan[i][j] * r[j];
            Vec s = r;
            s[i] -= m;
            if (roots.insert(s).second) todo.push_back(s);
        }
    }
    return {roots.begin(), roots.end()};
}

std::string WeylElement::str() const {
    if (word.empty()) return "e";
    std::string s;
    for (size_t k = 0; k < word.size(); ++k) {
        if (k) s += ' ';
        s += 's' + std::to_string(word[k] + 1);
    }
    return s;
}

std::vector<int> parse_word(const std::string& text) {
    std::vector<int> out;
    size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t j = i;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            int v = std::stoi(text.substr(i, j - i));
            if (v < 1) throw Error(ErrorKind::Parse, "bad letter in word: " + text);
            out.push_back(v - 1);
            i = j;
        } else if (c == 's' || c == 'S' || c == ' ' || c == ',' || c == '*' || c == '.') {
            ++i;
        } else if (c == 'e' && text.size() == 1) {
            ++i;
        } else {
            throw Error(ErrorKind::Parse, "cannot parse word: " + text);
        }
    }
    return out;
}

Vec weyl_apply(const RootSystem& rs, const std::vector<int>& word, const Vec& lambda) {
    Vec v = lambda;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        if (*it < 0 || *it >= rs.rank) throw Error(ErrorKind::Parse, "letter out of range");
        v = rs.simple_reflect(v, *it);
    }
    return v;
}

WeylElement element_from_rho_image(const RootSystem& rs, Vec mu) {
    std::vector<int> letters;
    while (true) {
        int i = -1;
        for (int k = 0; k < rs.rank; ++k)
            if (mu[k] < 0) {
                i = k;
                break;
            }
        if (i < 0) break;
        mu = rs.simple_reflect(mu, i);
        letters.push_back(i);
    }
    return WeylElement(letters);
}

WeylElement normalize(const RootSystem& rs, const std::vector<int>& word) {
    return element_from_rho_image(rs, weyl_apply(rs, word, rs.rho));
}

int inversion_count(const RootSystem& rs, const std::vector<int>& word) {
    // l(w) = #{beta > 0 : w^{-1}(beta) < 0} = #{beta > 0 : <w rho, beta^vee> < 0}
    Vec mu = weyl_apply(rs, word, rs.rho);
    int c = 0;
    for (auto& b : rs.positive_roots)
        if (rs.pair(mu, b) < 0) ++c;
    return c;
}

bool same_element(const RootSystem& rs, const std::vector<int>& a, const std::vector<int>& b) {
    return weyl_apply(rs, a, rs.rho) == weyl_apply(rs, b, rs.rho);
}

WeylElement longest_element(const RootSystem& rs) {
    Vec m = rs.rho;
    for (auto& x : m) x = -x;
    return element_from_rho_image(rs, m);
}

std::vector<int> weyl_involution(const RootSystem& rs) {
    WeylElement w0 = longest_element(rs);
    std::vector<int> perm(rs.rank);
    for (int i = 0; i < rs.rank; ++i) {
        Vec v = weyl_apply(rs, w0, rs.fundamental(i));
        for (int j = 0; j < rs.rank; ++j)
            if (v[j] == -1) perm[i] = j;
    }
    return perm;
}

bool dominant(const Vec& lambda) {
    return std::all_of(lambda.begin(), lambda.end(), [](Int x) { return x >= 0; });
}

bool leq_coefficientwise(const Vec& a, const Vec& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Int height(const Vec& r) { return std::accumulate(r.begin(), r.end(), Int(0)); }

bool is_positive(const Vec& r) {
    for (auto x : r)
        if (x != 0) return x > 0;
    return false;
}

std::string vec_str(const Vec& v) {
    std::ostringstream os;
    os << '[';
    for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ']';
    return os.str();
}

}  // namespace qs
