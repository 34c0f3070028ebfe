#include "qschub/qchevalley.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "json.hpp"

namespace qs {

namespace {

Int floor_div(Int a, Int b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

Int mod_pos(Int a, Int b) { return ((a % b) + b) % b; }

}  // namespace

Int total_length(const Space& sp, const QuantumMonomial& m) {
    return sp.classes[m.cls].length + m.d * sp.c1;
}

QuantumMonomial monomial_of(const Space& sp, const Vec& weight, Int d) {
    int k = sp.index_of_weight(weight);
    if (k < 0) throw Error(ErrorKind::BadLabel, "weight outside the orbit: " + vec_str(weight));
    return {k, d};
}

void ClassVector::add(const QuantumMonomial& m, const mpq_class& c) {
    if (c == 0) return;
    auto it = terms.find(m);
    if (it == terms.end()) {
        terms.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms.erase(it);
}

mpq_class ClassVector::coeff(const QuantumMonomial& m) const {
    auto it = terms.find(m);
    return it == terms.end() ? mpq_class(0) : it->second;
}

ClassVector ClassVector::basis(int cls, Int d) {
    ClassVector v;
    v.add({cls, d}, 1);
    return v;
}

ClassVector shift_q(const ClassVector& v, Int by) {
    ClassVector out;
    for (auto& [m, c] : v.terms) out.add({m.cls, m.d + by}, c);
    return out;
}

std::vector<AffineRoot> affine_simple_roots(const RootSystem& rs) {
    std::vector<AffineRoot> out;
    Vec t = rs.highest_root;
    for (auto& x : t) x = -x;
    out.push_back({t, 1});
    for (int i = 0; i < rs.rank; ++i) {
        Vec e(rs.rank, 0);
        e[i] = 1;
        out.push_back({e, 0});
    }
    return out;
}

bool is_real_affine_root(const RootSystem& rs, const AffineRoot& g) { return rs.is_root(g.root); }

QuantumMonomial affine_reflect(const Space& sp, const QuantumMonomial& m, const AffineRoot& g) {
    const Vec& lam = sp.classes[m.cls].weight;
    Int p = sp.rs.pair(lam, g.root);
    return monomial_of(sp, sp.rs.reflect(lam, g.root), m.d + p * g.k);
}

std::vector<Interaction> interacting_roots(const Space& sp, const QuantumMonomial& m) {
    return interacting_roots(sp, m, sp.flavor);
}

std::vector<Interaction> interacting_roots(const Space& sp, const QuantumMonomial& m, Flavor f) {
    if (f == Flavor::Other) throw Error(ErrorKind::Unsupported, "no restricted formula for " + sp.name());
    const RootSystem& rs = sp.rs;
    const Vec& lam = sp.classes[m.cls].weight;
    auto simple = affine_simple_roots(rs);
    std::vector<Interaction> out;
    auto consider = [&](const AffineRoot& g) {
        Int p = rs.pair(lam, g.root);
        if (p > 0) out.push_back({g, p});
    };
    bool quasi = f == Flavor::Adjoint || f == Flavor::Coadjoint;
    int a = -1;
    if (quasi) {
        Vec root = rs.weight_to_root(lam);
        for (size_t k = 0; k < simple.size(); ++k)
            if (simple[k].root == root) a = static_cast<int>(k);
    }
    if (a < 0) {
        for (auto& g : simple) consider(g);
        return out;
    }
    consider(simple[a]);
    for (size_t b = 0; b < simple.size(); ++b) {
        if (static_cast<int>(b) == a) continue;
        AffineRoot g;
        g.root = simple[a].root;
        for (int i = 0; i < rs.rank; ++i) g.root[i] += simple[b].root[i];
        g.k = simple[a].k + simple[b].k;
        if (is_real_affine_root(rs, g) && rs.norm2(g.root) == rs.norm2(simple[a].root)) consider(g);
    }
    return out;
}

std::vector<Interaction> fulton_roots(const Space& sp, const QuantumMonomial& m) {
    const RootSystem& rs = sp.rs;
    const Vec& lam = sp.classes[m.cls].weight;
    Int l = total_length(sp, m);
    std::vector<Interaction> out;
    Int kmax = (sp.dim + 1) / sp.c1 + 1;
    for (const Vec& g : rs.all_roots()) {
        Int p = rs.pair(lam, g);
        if (p <= 0) continue;
        Vec nl = rs.reflect(lam, g);
        int cls = sp.index_of_weight(nl);
        for (Int k = is_positive(g) ? 0 : 1; k <= kmax; ++k) {
            QuantumMonomial t{cls, m.d + p * k};
            if (total_length(sp, t) == l + 1) out.push_back({{g, k}, p});
        }
    }
    std::sort(out.begin(), out.end(), [](const Interaction& a, const Interaction& b) { return a.gamma < b.gamma; });
    return out;
}

ClassVector quantum_chevalley(const Space& sp, const ClassVector& v) { return quantum_chevalley(sp, v, sp.flavor); }

ClassVector quantum_chevalley(const Space& sp, const ClassVector& v, Flavor f) {
    ClassVector out;
    for (auto& [m, c] : v.terms)
        for (auto& it : interacting_roots(sp, m, f)) out.add(affine_reflect(sp, m, it.gamma), c * it.coeff);
    return out;
}

ClassVector fulton_chevalley(const Space& sp, const ClassVector& v) {
    ClassVector out;
    for (auto& [m, c] : v.terms)
        for (auto& it : fulton_roots(sp, m)) out.add(affine_reflect(sp, m, it.gamma), c * it.coeff);
    return out;
}

void QMatrix::add(int r, int c, Int k, Int v) {
    if (v == 0) return;
    auto& e = cols[c][r];
    e[k] += v;
    if (e[k] == 0) {
        e.erase(k);
        if (e.empty()) cols[c].erase(r);
    }
}

Int QMatrix::entry(int r, int c, Int k) const {
    auto it = cols[c].find(r);
    if (it == cols[c].end()) return 0;
    auto jt = it->second.find(k);
    return jt == it->second.end() ? 0 : jt->second;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
    QMatrix out(a.n);
    for (int c = 0; c < b.n; ++c)
        for (auto& [mid, pb] : b.cols[c])
            for (auto& [r, pa] : a.cols[mid])
                for (auto& [kb, vb] : pb)
                    for (auto& [ka, va] : pa) out.add(r, c, ka + kb, va * vb);
    return out;
}

QMatrix mh_matrix(const Space& sp) {
    QMatrix m(static_cast<int>(sp.size()));
    for (int c = 0; c < static_cast<int>(sp.size()); ++c) {
        ClassVector r = quantum_chevalley(sp, ClassVector::basis(c));
        for (auto& [mon, coef] : r.terms) m.add(mon.cls, c, mon.d, coef.get_num().get_si());
    }
    return m;
}

QMatrix classical_part(const QMatrix& m) {
    QMatrix out(m.n);
    for (int c = 0; c < m.n; ++c)
        for (auto& [r, p] : m.cols[c]) {
            auto it = p.find(0);
            if (it != p.end()) out.add(r, c, 0, it->second);
        }
    return out;
}

std::vector<mpz_class> classical_power_apply(const Space& sp, int start, int k) {
    std::vector<std::vector<std::pair<int, Int>>> adj(sp.size());
    for (int c = 0; c < static_cast<int>(sp.size()); ++c)
        for (auto& it : fulton_roots(sp, {c, 0}))
            if (it.gamma.k == 0)
                adj[c].push_back({sp.index_of_weight(sp.rs.reflect(sp.classes[c].weight, it.gamma.root)), it.coeff});
    std::vector<mpz_class> v(sp.size(), 0);
    v[start] = 1;
    for (int step = 0; step < k; ++step) {
        std::vector<mpz_class> w(sp.size(), 0);
        for (size_t c = 0; c < v.size(); ++c) {
            if (v[c] == 0) continue;
            for (auto& [r, coef] : adj[c]) w[r] += v[c] * coef;
        }
        v.swap(w);
    }
    return v;
}

mpz_class class_degree(const Space& sp, int cls) {
    return classical_power_apply(sp, cls, sp.dim - sp.classes[cls].length)[sp.point()];
}

mpz_class product_degree(const Space& sp, int u, int v) {
    int k = sp.dim - sp.classes[u].length - sp.classes[v].length;
    if (k < 0) throw Error(ErrorKind::Capacity, "product degree exceeds the dimension");
    return classical_power_apply(sp, v, k)[sp.dual(u)];
}

LengthIdentity length_identity_check(const Space& sp, const QuantumMonomial& m) {
    return length_identity_check(sp, m, sp.flavor);
}

LengthIdentity length_identity_check(const Space& sp, const QuantumMonomial& m, Flavor f) {
    const RootSystem& rs = sp.rs;
    Vec diff = sp.varpi;
    const Vec& lam = sp.classes[m.cls].weight;
    for (int i = 0; i < rs.rank; ++i) diff[i] -= lam[i];
    Vec c = rs.weight_to_root(diff);
    LengthIdentity out;
    Int l = total_length(sp, m);
    if (f == Flavor::Minuscule || f == Flavor::Coadjoint) {
        out.lhs = height(c) + m.d * (height(rs.highest_root) + 1);
    } else if (f == Flavor::Cominuscule || f == Flavor::Adjoint) {
        // (x)^vee extends beta -> beta^vee linearly from long roots
        Int nlong = rs.norm2(rs.highest_root) / 2;
        Int s = 0;
        for (int i = 0; i < rs.rank; ++i) s += c[i] * rs.half_norm[i];
        if (s % nlong != 0) throw Error(ErrorKind::Certificate, "non-integral dual pairing");
        out.lhs = s / nlong + m.d * (height(rs.coroot(rs.highest_root)) + 1);
    } else {
        throw Error(ErrorKind::Unsupported, "no length identity for this flavor");
    }
    bool quasi = f == Flavor::Adjoint || f == Flavor::Coadjoint;
    out.rhs = quasi ? l + floor_div(l, sp.c1) : l;
    out.rhs_sign = l;
    if (quasi) out.rhs_sign += m.d + (is_positive(rs.weight_to_root(lam)) ? 0 : 1);
    return out;
}

std::vector<int> cominuscule_nodes(const RootSystem& rs) {
    std::vector<int> out;
    for (int i = 0; i < rs.rank; ++i)
        if (rs.highest_root[i] == 1) out.push_back(i);
    return out;
}

namespace {

std::vector<int> parabolic_longest_word(const RootSystem& rs, int node) {
    Vec mu = rs.rho;
    std::vector<int> applied;
    while (true) {
        int i = -1;
        for (int k = 0; k < rs.rank; ++k)
            if (k != node && mu[k] > 0) {
                i = k;
                break;
            }
        if (i < 0) break;
        mu = rs.simple_reflect(mu, i);
        applied.push_back(i);
    }
    std::reverse(applied.begin(), applied.end());
    return applied;
}

// v for the coweight of i(node): then tau sends the affine node to `node`
// (with the coweight of `node` itself it would land on i(node)).
std::vector<int> v_word(const RootSystem& rs, int node) {
    auto w = longest_element(rs).word;
    auto wc = parabolic_longest_word(rs, weyl_involution(rs)[node]);
    w.insert(w.end(), wc.begin(), wc.end());
    return w;
}

}  // namespace

AffineRoot tau_c(const Space& sp, int node, const AffineRoot& g) {
    const RootSystem& rs = sp.rs;
    auto w = v_word(rs, node);
    int c = weyl_involution(rs)[node];
    Vec img = rs.weight_to_root(weyl_apply(rs, w, rs.root_to_weight(g.root)));
    return {img, g.k + g.root[c]};
}

AffineSymmetry affine_symmetry(const Space& sp, int node) {
    auto cn = cominuscule_nodes(sp.rs);
    if (std::find(cn.begin(), cn.end(), node) == cn.end())
        throw Error(ErrorKind::Unsupported, "node is not cominuscule");
    if (!sp.labeled()) throw Error(ErrorKind::Unsupported, "affine symmetry needs an adjoint or coadjoint space");
    const RootSystem& rs = sp.rs;
    AffineSymmetry s;
    s.node = node;
    auto simple = affine_simple_roots(rs);
    for (auto& g : simple) {
        AffineRoot t = tau_c(sp, node, g);
        int pos = -1;
        for (size_t k = 0; k < simple.size(); ++k)
            if (simple[k] == t) pos = static_cast<int>(k);
        if (pos < 0) throw Error(ErrorKind::Certificate, "rotation does not permute the affine simple roots");
        s.tau.push_back(pos);
    }
    if (s.tau[0] != node + 1) throw Error(ErrorKind::Certificate, "rotation does not send the affine node to the chosen node");
    auto w = v_word(rs, node);
    int cc = weyl_involution(rs)[node];
    s.matrix = QMatrix(static_cast<int>(sp.size()));
    for (int c = 0; c < static_cast<int>(sp.size()); ++c) {
        const Vec& lab = sp.classes[c].label;
        Vec img = weyl_apply(rs, w, sp.classes[c].weight);
        QuantumMonomial m = monomial_of(sp, img, 1 - lab[cc]);
        s.image.push_back(m);
        s.matrix.add(m.cls, c, m.d, 1);
    }
    s.v_class = s.image[0].cls;
    if (s.image[0].d != 0) throw Error(ErrorKind::Certificate, "affine symmetry moves the unit off degree zero");
    return s;
}

ClassVector AffineSymmetry::apply(const ClassVector& v) const {
    ClassVector out;
    for (auto& [m, c] : v.terms) out.add({image[m.cls].cls, image[m.cls].d + m.d}, c);
    return out;
}

std::vector<bool> lambda_minuscule_marks(const Space& sp, bool cominuscule) {
    RootSystem rs = cominuscule ? sp.rs.dual() : sp.rs;
    Vec start = rs.fundamental(sp.id.node);
    std::map<Vec, std::vector<int>> seen{{start, {}}};
    std::vector<Vec> todo{start};
    std::vector<bool> marks(sp.size(), false);
    while (!todo.empty()) {
        Vec mu = todo.back();
        todo.pop_back();
        auto word = seen[mu];
        marks[sp.index_of_word(word)] = true;
        for (int i = 0; i < rs.rank; ++i) {
            if (mu[i] != 1) continue;
            Vec nu = rs.simple_reflect(mu, i);
            if (seen.count(nu)) continue;
            std::vector<int> nw{i};
            nw.insert(nw.end(), word.begin(), word.end());
            seen[nu] = nw;
            todo.push_back(nu);
        }
    }
    return marks;
}

std::string class_name(const Space& sp, int cls) {
    if (sp.labeled()) return vec_str(sp.classes[cls].label);
    return sp.classes[cls].rep.str();
}

std::string hasse_dot(const Space& sp, Int lo, Int hi) {
    std::ostringstream os;
    os << "digraph \"" << sp.name() << "\" {\n";
    if (lo > hi) {
        os << "}\n";
        return os.str();
    }
    os << "  rankdir=TB;\n  node [shape=box, style=filled];\n";
    bool co = sp.flavor == Flavor::Adjoint || sp.flavor == Flavor::Cominuscule;
    std::vector<bool> marks;
    if (sp.flavor != Flavor::Other) marks = lambda_minuscule_marks(sp, co);
    static const char* band[] = {"white", "lightblue", "lightgreen", "khaki", "pink", "lavender"};
    std::vector<std::pair<Int, QuantumMonomial>> nodes;
    for (Int d = floor_div(lo - sp.dim, sp.c1); d <= floor_div(hi, sp.c1) + 1; ++d)
        for (int c = 0; c < static_cast<int>(sp.size()); ++c) {
            QuantumMonomial m{c, d};
            Int l = total_length(sp, m);
            if (l >= lo && l <= hi) nodes.push_back({l, m});
        }
    std::sort(nodes.begin(), nodes.end(), [](auto& a, auto& b) {
        return std::tie(a.first, a.second.d, a.second.cls) < std::tie(b.first, b.second.d, b.second.cls);
    });
    auto id = [](const QuantumMonomial& m) {
        return "n" + std::string(m.d < 0 ? "m" : "") + std::to_string(m.d < 0 ? -m.d : m.d) + "_" +
               std::to_string(m.cls);
    };
    for (auto& [l, m] : nodes) {
        os << "  " << id(m) << " [label=\"" << class_name(sp, m.cls) << " q^" << m.d << "\\nl=" << l
           << "\", fillcolor=" << band[mod_pos(m.d, 6)];
        if (!marks.empty() && !marks[m.cls]) os << ", peripheries=2";
        os << "];\n";
    }
    for (auto& [l, m] : nodes) {
        if (l + 1 > hi) continue;
        for (auto& it : interacting_roots(sp, m)) {
            auto t = affine_reflect(sp, m, it.gamma);
            os << "  " << id(m) << " -> " << id(t) << " [label=\"" << it.coeff << "\"];\n";
        }
    }
    os << "}\n";
    return os.str();
}

std::string class_vector_json(const Space& sp, const ClassVector& v) {
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (auto& [m, c] : v.terms) {
        nlohmann::ordered_json t;
        if (sp.labeled())
            t["root"] = sp.classes[m.cls].label;
        else
            t["word"] = sp.classes[m.cls].rep.str();
        t["q"] = m.d;
        t["coeff"] = c.get_str();
        terms.push_back(t);
    }
    nlohmann::ordered_json j;
    j["terms"] = terms;
    return j.dump();
}

std::string class_vector_str(const Space& sp, const ClassVector& v) {
    if (v.terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [m, c] : v.terms) {
        if (!first) os << " + ";
        first = false;
        if (c != 1) os << c.get_str() << "*";
        if (m.d == 1) os << "q*";
        if (m.d > 1 || m.d < 0) os << "q^" << m.d << "*";
        os << "s" << class_name(sp, m.cls);
    }
    return os.str();
}

}  // namespace qs
