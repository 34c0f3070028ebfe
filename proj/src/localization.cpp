#include "qschub/localization.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

namespace qs {

LocalizationValue LocalizationValue::constant(int rank, const mpq_class& c) {
    LocalizationValue v;
    v.rank = rank;
    if (c != 0) v.terms[std::vector<int>(rank, 0)] = c;
    return v;
}

LocalizationValue LocalizationValue::linear(const Vec& root) {
    LocalizationValue v;
    v.rank = static_cast<int>(root.size());
    for (int i = 0; i < v.rank; ++i) {
        if (root[i] == 0) continue;
        std::vector<int> e(v.rank, 0);
        e[i] = 1;
        v.terms[e] = mpq_class(root[i]);
    }
    return v;
}

int LocalizationValue::degree() const {
    int d = -1;
    for (auto& [e, c] : terms) {
        int s = 0;
        for (int x : e) s += x;
        d = std::max(d, s);
    }
    return d;
}

mpq_class LocalizationValue::eval(const std::vector<mpq_class>& point) const {
    mpq_class r = 0;
    for (auto& [e, c] : terms) {
        mpq_class t = c;
        for (int i = 0; i < rank; ++i)
            for (int k = 0; k < e[i]; ++k) t *= point[i];
        r += t;
    }
    return r;
}

std::string LocalizationValue::str() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // largest exponent vectors first
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        const auto& [e, c] = *it;
        mpq_class m = abs(c);
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        bool unit = true;
        for (int x : e) unit = unit && x == 0;
        if (m != 1 || unit) os << m.get_str();
        bool star = m != 1 && !unit;
        for (int i = 0; i < rank; ++i) {
            if (e[i] == 0) continue;
            if (star) os << "*";
            os << "a" << i + 1;
            if (e[i] > 1) os << "^" << e[i];
            star = true;
        }
        first = false;
    }
    return os.str();
}

LocalizationValue operator+(const LocalizationValue& a, const LocalizationValue& b) {
    LocalizationValue r = a;
    r.rank = std::max(a.rank, b.rank);
    for (auto& [e, c] : b.terms) {
        mpq_class& x = r.terms[e];
        x += c;
        if (x == 0) r.terms.erase(e);
    }
    return r;
}

LocalizationValue operator-(const LocalizationValue& a, const LocalizationValue& b) {
    LocalizationValue nb = b;
    for (auto& [e, c] : nb.terms) c = -c;
    return a + nb;
}

LocalizationValue operator*(const LocalizationValue& a, const LocalizationValue& b) {
    LocalizationValue r;
    r.rank = std::max(a.rank, b.rank);
    for (auto& [ea, ca] : a.terms)
        for (auto& [eb, cb] : b.terms) {
            std::vector<int> e(r.rank, 0);
            for (int i = 0; i < r.rank; ++i) e[i] = ea[i] + eb[i];
            mpq_class& x = r.terms[e];
            x += ca * cb;
            if (x == 0) r.terms.erase(e);
        }
    return r;
}

bool divisible_by_root(const LocalizationValue& f, const Vec& gamma) {
    // f vanishes on the hyperplane gamma = 0: eliminate one coordinate.
    int r = static_cast<int>(gamma.size());
    int k = -1;
    for (int i = 0; i < r; ++i)
        if (gamma[i] != 0) k = i;
    if (k < 0) throw Error(ErrorKind::NotARoot, "zero vector");
    LocalizationValue sub;
    sub.rank = r;
    for (int i = 0; i < r; ++i) {
        if (i == k || gamma[i] == 0) continue;
        std::vector<int> e(r, 0);
        e[i] = 1;
        mpq_class c(-gamma[i], gamma[k]);
        c.canonicalize();
        sub.terms[e] = c;
    }
    LocalizationValue out = LocalizationValue::constant(r, 0);
    for (auto& [e, c] : f.terms) {
        std::vector<int> rest = e;
        rest[k] = 0;
        LocalizationValue t;
        t.rank = r;
        t.terms[rest] = c;
        for (int m = 0; m < e[k]; ++m) t = t * sub;
        out = out + t;
    }
    return out.zero();
}

namespace {

// r_j = s_{b_1} ... s_{b_{j-1}}(alpha_{b_j}) in simple-root coordinates
std::vector<Vec> prefix_roots(const RootSystem& rs, const std::vector<int>& word) {
    std::vector<Vec> out;
    for (size_t j = 0; j < word.size(); ++j) {
        Vec beta(rs.rank, 0);
        beta[word[j]] = 1;
        for (size_t i = j; i-- > 0;) {
            Vec ai(rs.rank, 0);
            ai[word[i]] = 1;
            Int c = rs.pair_roots(beta, ai);
            beta[word[i]] -= c;
        }
        out.push_back(beta);
    }
    return out;
}

template <class T, class Factor>
std::map<Vec, T> subword_dp(const RootSystem& rs, const Vec& lambda, const std::vector<int>& word, const T& one,
                            Factor factor) {
    std::map<Vec, T> states{{lambda, one}};
    for (size_t j = word.size(); j-- > 0;) {
        int b = word[j];
        T f = factor(j);
        std::map<Vec, T> next = states;
        for (auto& [mu, val] : states) {
            Vec ab(rs.rank, 0);
            ab[b] = 1;
            if (rs.pair(mu, ab) <= 0) continue;
            Vec nu = rs.simple_reflect(mu, b);
            auto it = next.find(nu);
            if (it == next.end()) next.emplace(nu, val * f);
            else it->second = it->second + val * f;
        }
        states.swap(next);
    }
    return states;
}

void check_reduced(const RootSystem& rs, const std::vector<int>& word) {
    if (inversion_count(rs, word) != static_cast<int>(word.size()))
        throw Error(ErrorKind::Parse, "word " + WeylElement(word).str() + " is not reduced");
}

std::vector<mpq_class> default_point(int rank) {
    static const int primes[] = {2, 3, 5, 7, 11, 13, 17, 19};
    std::vector<mpq_class> p;
    for (int i = 0; i < rank; ++i) p.push_back(primes[i % 8] + 8 * (i / 8));
    return p;
}

template <class F>
void parallel_for(int n, F body) {
    unsigned threads = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("QSCHUB_THREADS")) threads = std::max(1, std::atoi(env));
    threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max(n, 1)));
    std::atomic<int> next{0};
    auto worker = [&] {
        for (int i = next++; i < n; i = next++) body(i);
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
}

// Triangular solve on the fixed points `pts` (closed downward in Bruhat order,
// sorted by length): c^x = (u|x v|x - sum_{y<x} c^y y|x) / x|x.
std::map<int, mpq_class> solve_constants(const Space& sp, int u, int v, const std::vector<int>& pts) {
    auto point = default_point(sp.rs.rank);
    std::vector<std::map<Vec, mpq_class>> loc(pts.size());
    parallel_for(static_cast<int>(pts.size()), [&](int i) {
        loc[i] = localize_all_at(sp.rs, sp.varpi, sp.classes[pts[i]].rep.word, point);
    });
    auto at = [&](int i, int cls) -> mpq_class {
        auto it = loc[i].find(sp.classes[cls].weight);
        return it == loc[i].end() ? mpq_class(0) : it->second;
    };
    std::map<int, mpq_class> c;
    for (size_t i = 0; i < pts.size(); ++i) {
        int x = pts[i];
        mpq_class r = at(i, u) * at(i, v);
        for (auto& [y, cy] : c)
            if (cy != 0) r -= cy * at(i, y);
        mpq_class d = at(i, x);
        if (d == 0) throw Error(ErrorKind::Certificate, "vanishing diagonal localization");
        c[x] = r / d;
    }
    return c;
}

mpz_class as_integer(const mpq_class& q) {
    if (q.get_den() != 1) throw Error(ErrorKind::Certificate, "non-integral structure constant " + q.get_str());
    return q.get_num();
}

}  // namespace

std::map<Vec, LocalizationValue> localize_all(const RootSystem& rs, const Vec& lambda, const std::vector<int>& v_word) {
    check_reduced(rs, v_word);
    auto roots = prefix_roots(rs, v_word);
    return subword_dp(rs, lambda, v_word, LocalizationValue::constant(rs.rank, 1),
                      [&](size_t j) { return LocalizationValue::linear(roots[j]); });
}

std::map<Vec, mpq_class> localize_all_at(const RootSystem& rs, const Vec& lambda, const std::vector<int>& v_word,
                                         const std::vector<mpq_class>& point) {
    check_reduced(rs, v_word);
    auto roots = prefix_roots(rs, v_word);
    return subword_dp(rs, lambda, v_word, mpq_class(1), [&](size_t j) {
        mpq_class s = 0;
        for (int i = 0; i < rs.rank; ++i) s += roots[j][i] * point[i];
        return s;
    });
}

LocalizationValue billey_localize(const RootSystem& rs, const WeylElement& w, const WeylElement& v) {
    check_reduced(rs, w.word);
    auto all = localize_all(rs, rs.rho, v.word);
    auto it = all.find(weyl_apply(rs, w, rs.rho));
    return it == all.end() ? LocalizationValue::constant(rs.rank, 0) : it->second;
}

LocalizationValue billey_localize(const Space& sp, int w, int v) {
    auto all = localize_all(sp.rs, sp.varpi, sp.classes.at(v).rep.word);
    auto it = all.find(sp.classes.at(w).weight);
    return it == all.end() ? LocalizationValue::constant(sp.rs.rank, 0) : it->second;
}

LocalizationValue inversion_product(const Space& sp, int w) {
    // positive beta with w^{-1}(beta) < 0
    const auto& word = sp.classes.at(w).rep.word;
    LocalizationValue r = LocalizationValue::constant(sp.rs.rank, 1);
    for (const Vec& beta : sp.rs.positive_roots) {
        Vec g = beta;
        for (int b : word) {  // w^{-1} = reversed word, applied right to left
            Vec ab(sp.rs.rank, 0);
            ab[b] = 1;
            g[b] -= sp.rs.pair_roots(g, ab);
        }
        if (!is_positive(g)) r = r * LocalizationValue::linear(beta);
    }
    return r;
}

std::map<int, mpz_class> cup_constants(const Space& sp, int u, int v) {
    int L = sp.classes.at(u).length + sp.classes.at(v).length;
    std::map<int, mpz_class> out;
    if (L > sp.dim) return out;
    std::vector<int> pts;
    for (int c = 0; c < static_cast<int>(sp.size()); ++c)
        if (sp.classes[c].length <= L) pts.push_back(c);
    if (static_cast<int>(pts.size()) > kCupCapacity)
        throw Error(ErrorKind::Capacity, sp.name() + ": " + std::to_string(pts.size()) + " fixed points exceed the limit of " +
                                             std::to_string(kCupCapacity));
    auto c = solve_constants(sp, u, v, pts);
    for (auto& [x, cx] : c) {
        if (sp.classes[x].length != L || cx == 0) continue;
        out[x] = as_integer(cx);
    }
    return out;
}

mpz_class cup_coefficient(const Space& sp, int u, int v, int target) {
    const auto& t = sp.classes.at(target);
    if (sp.classes.at(u).length + sp.classes.at(v).length != t.length) return 0;
    std::set<Vec> below = subword_orbit(sp.rs, t.rep.word, sp.varpi);
    std::vector<int> pts;
    for (const Vec& wt : below) pts.push_back(sp.index_of_weight(wt));
    if (static_cast<int>(pts.size()) > kCupCapacity)
        throw Error(ErrorKind::Capacity, sp.name() + ": interval too large");
    std::sort(pts.begin(), pts.end(), [&](int a, int b) {
        return std::make_pair(sp.classes[a].length, a) < std::make_pair(sp.classes[b].length, b);
    });
    if (!below.count(sp.classes[u].weight) || !below.count(sp.classes[v].weight)) return 0;
    auto c = solve_constants(sp, u, v, pts);
    return as_integer(c.at(target));
}

// ---------------------------------------------------------------------------

std::string default_line_variety_path() {
    if (const char* env = std::getenv("QSCHUB_DATA")) return std::string(env) + "/line_varieties.json";
#ifdef QSCHUB_DATA_DIR
    return std::string(QSCHUB_DATA_DIR) + "/line_varieties.json";
#else
    return "data/line_varieties.json";
#endif
}

std::vector<LineVariety> load_line_varieties(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::Parse, "cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw Error(ErrorKind::Parse, path + ": " + e.what());
    }
    if (j.value("version", 0) != 1) throw Error(ErrorKind::Parse, path + ": unsupported version");
    std::vector<LineVariety> out;
    for (auto& e : j.at("line_varieties")) {
        LineVariety lv;
        lv.space = e.at("space").get<std::string>();
        lv.q_node = e.at("q_node").get<int>() - 1;
        out.push_back(lv);
    }
    return out;
}

LineVariety line_variety(const std::string& space, const std::string& path) {
    for (auto& lv : load_line_varieties(path))
        if (lv.space == space) return lv;
    throw Error(ErrorKind::Unsupported, "no line variety configured for " + space);
}

GwReport gw_degree_one(const Space& sp, int u, int v, int w, const std::string& path) {
    if (sp.flavor != Flavor::Adjoint) throw Error(ErrorKind::Unsupported, sp.name() + " is not adjoint");
    LineVariety lv = line_variety(sp.name(), path);
    const RootSystem& rs = sp.rs;
    int alpha = sp.id.node;
    SpaceId fid = sp.id;
    fid.node = lv.q_node;
    auto F = Space::get(fid);
    GwReport rep;
    rep.F = F->name();

    // fiber over the base point: lowest weight of varpi_Q under the Levi of P
    Vec lam = F->varpi;
    std::vector<int> zw;
    for (bool moved = true; moved;) {
        moved = false;
        for (int i = 0; i < rs.rank; ++i) {
            if (i == alpha) continue;
            Vec ai(rs.rank, 0);
            ai[i] = 1;
            if (rs.pair(lam, ai) > 0) {
                lam = rs.simple_reflect(lam, i);
                zw.insert(zw.begin(), i);
                moved = true;
                break;
            }
        }
    }
    rep.wZ = WeylElement(zw);
    int zcls = F->index_of_weight(lam);

    // same element from the longest elements: s_alpha w_X w_Z = w_F
    {
        std::vector<int> wx = sp.classes[sp.point()].rep.word;
        std::vector<int> word(wx.rbegin(), wx.rend());  // w_X^{-1}
        word.push_back(alpha);
        const auto& wf = F->classes[F->point()].rep.word;
        word.insert(word.end(), wf.begin(), wf.end());
        rep.wz_bullets_ok = weyl_apply(rs, word, F->varpi) == lam;
    }

    int lu = sp.classes.at(u).length, lv_ = sp.classes.at(v).length, lw = sp.classes.at(w).length;
    rep.balanced = lu + lv_ + lw == sp.dim + sp.c1;
    if (!rep.balanced || lu == 0 || lv_ == 0 || lw == 0) return rep;

    // class of F(hat(x^vee)) for x a class of the space
    auto hat = [&](int x) {
        if (x == sp.point()) return zcls;
        std::vector<int> word = sp.classes[sp.dual(x)].rep.word;
        word.insert(word.end(), zw.begin(), zw.end());
        int idx = F->index_of_weight(weyl_apply(rs, word, F->varpi));
        if (idx < 0) throw Error(ErrorKind::Certificate, "image in the line variety not found");
        return idx;
    };
    auto closed = [&](int x) {
        std::vector<int> word = sp.classes[x].rep.word;
        word.push_back(alpha);
        return F->index_of_weight(weyl_apply(rs, word, F->varpi));
    };
    rep.u_star = F->dual(hat(u));
    rep.v_star = F->dual(hat(v));
    rep.target = hat(w);
    rep.closed_form_ok = rep.u_star == closed(u) && rep.v_star == closed(v);
    mpz_class a = cup_coefficient(*F, rep.u_star, rep.v_star, rep.target);
    rep.value = static_cast<int>(a.get_si());
    return rep;
}

}  // namespace qs
