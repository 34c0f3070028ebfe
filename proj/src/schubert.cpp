#include "qschub/schubert.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <mutex>
#include <regex>
#include <unordered_map>

namespace qs {

std::string flavor_name(Flavor f) {
    switch (f) {
    case Flavor::Minuscule: return "minuscule";
    case Flavor::Cominuscule: return "cominuscule";
    case Flavor::Adjoint: return "adjoint";
    case Flavor::Coadjoint: return "coadjoint";
    default: return "other";
    }
}

std::string SpaceId::name() const {
    return std::string(1, series) + std::to_string(rank) + "/P" + std::to_string(node + 1);
}

SpaceId parse_space(const std::string& text) {
    static const std::regex re(R"(\s*([A-Ga-g])\s*(\d+)\s*/\s*[Pp]\s*(\d+)\s*)");
    std::smatch m;
    if (!std::regex_match(text, m, re)) throw Error(ErrorKind::InvalidType, "cannot parse space: " + text);
    SpaceId id;
    id.series = static_cast<char>(std::toupper(static_cast<unsigned char>(m[1].str()[0])));
    id.rank = std::stoi(m[2]);
    id.node = std::stoi(m[3]) - 1;
    RootSystem::build(id.series, id.rank);  // validates the type
    if (id.node < 0 || id.node >= id.rank)
        throw Error(ErrorKind::InvalidType, "marked node out of range: " + text);
    return id;
}

std::set<Flavor> table_flavors(char s, int n, int node) {
    const int k = node + 1;
    std::set<Flavor> f;
    auto in = [&](std::initializer_list<int> l) { return std::find(l.begin(), l.end(), k) != l.end(); };
    switch (s) {
    case 'A':
        f.insert(Flavor::Minuscule);
        f.insert(Flavor::Cominuscule);
        break;
    case 'B':
        if (k == n) f.insert(Flavor::Minuscule);
        if (k == 1) f.insert(Flavor::Cominuscule), f.insert(Flavor::Coadjoint);
        if (k == 2 && n >= 3) f.insert(Flavor::Adjoint);
        break;
    case 'C':
        if (k == 1) f.insert(Flavor::Minuscule);
        if (k == n) f.insert(Flavor::Cominuscule);
        if (k == 2) f.insert(Flavor::Coadjoint);
        break;
    case 'D':
        if (in({1, n - 1, n})) f.insert(Flavor::Minuscule), f.insert(Flavor::Cominuscule);
        if (k == 2) f.insert(Flavor::Adjoint), f.insert(Flavor::Coadjoint);
        break;
    case 'E':
        if (n == 6) {
            if (in({1, 6})) f.insert(Flavor::Minuscule), f.insert(Flavor::Cominuscule);
            if (k == 2) f.insert(Flavor::Adjoint), f.insert(Flavor::Coadjoint);
        } else if (n == 7) {
            if (k == 7) f.insert(Flavor::Minuscule), f.insert(Flavor::Cominuscule);
            if (k == 1) f.insert(Flavor::Adjoint), f.insert(Flavor::Coadjoint);
        } else {
            if (k == 8) f.insert(Flavor::Adjoint), f.insert(Flavor::Coadjoint);
        }
        break;
    case 'F':
        if (k == 1) f.insert(Flavor::Adjoint);
        if (k == 4) f.insert(Flavor::Coadjoint);
        break;
    case 'G':
        if (k == 2) f.insert(Flavor::Adjoint);
        if (k == 1) f.insert(Flavor::Coadjoint);
        break;
    }
    return f;
}

std::set<Flavor> computed_flavors(const RootSystem& rs, int node) {
    std::set<Flavor> f;
    Vec w = rs.fundamental(node);
    Int mx = 0;
    for (auto& b : rs.positive_roots) mx = std::max(mx, rs.pair(w, b));
    if (mx == 1) f.insert(Flavor::Minuscule);
    if (rs.highest_root[node] == 1) f.insert(Flavor::Cominuscule);
    if (rs.root_to_weight(rs.highest_root) == w) f.insert(Flavor::Adjoint);
    if (rs.root_to_weight(rs.highest_short_root) == w) f.insert(Flavor::Coadjoint);
    return f;
}

Flavor primary_flavor(const std::set<Flavor>& fl) {
    for (Flavor f : {Flavor::Adjoint, Flavor::Coadjoint, Flavor::Minuscule, Flavor::Cominuscule})
        if (fl.count(f)) return f;
    return Flavor::Other;
}

Space::Space(SpaceId sid) : id(sid), rs(RootSystem::build(sid.series, sid.rank)) {
    if (id.node < 0 || id.node >= rs.rank) throw Error(ErrorKind::InvalidType, "marked node out of range");
    varpi = rs.fundamental(id.node);
    flavors = table_flavors(id.series, id.rank, id.node);
    flavor = primary_flavor(flavors);

    classes.push_back({WeylElement(), varpi, {}, 0});
    by_weight_[varpi] = 0;
    size_t start = 0;
    while (start < classes.size()) {
        size_t end = classes.size();
        for (size_t k = start; k < end; ++k) {
            for (int i = 0; i < rs.rank; ++i) {
                if (classes[k].weight[i] <= 0) continue;
                Vec nw = rs.simple_reflect(classes[k].weight, i);
                if (by_weight_.count(nw)) continue;
                std::vector<int> word{i};
                word.insert(word.end(), classes[k].rep.word.begin(), classes[k].rep.word.end());
                by_weight_[nw] = static_cast<int>(classes.size());
                classes.push_back({WeylElement(word), nw, {}, classes[k].length + 1});
            }
        }
        start = end;
    }
    dim = classes.back().length;
    c1 = static_cast<int>(index_by_root_sum(rs, id.node));
    if (labeled())
        for (auto& c : classes) c.label = rs.weight_to_root(c.weight);

    WeylElement w0 = longest_element(rs);
    dual_.resize(classes.size());
    for (size_t k = 0; k < classes.size(); ++k) dual_[k] = index_of_weight(weyl_apply(rs, w0, classes[k].weight));
}

std::shared_ptr<const Space> Space::get(const SpaceId& sid) {
    static std::mutex mu;
    static std::map<std::string, std::shared_ptr<const Space>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = sid.name();
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    auto sp = std::make_shared<const Space>(sid);
    cache[key] = sp;
    return sp;
}

std::shared_ptr<const Space> Space::get(const std::string& name) { return get(parse_space(name)); }

std::vector<int> Space::betti() const {
    std::vector<int> b(dim + 1, 0);
    for (auto& c : classes) ++b[c.length];
    return b;
}

int Space::index_of_weight(const Vec& weight) const {
    auto it = by_weight_.find(weight);
    return it == by_weight_.end() ? -1 : it->second;
}

int Space::index_of_label(const Vec& root) const {
    if (!labeled()) throw Error(ErrorKind::Unsupported, name() + " has no root labels");
    if (static_cast<int>(root.size()) != rs.rank || !rs.is_root(root))
        throw Error(ErrorKind::BadLabel, "not a root: " + vec_str(root));
    int k = index_of_weight(rs.root_to_weight(root));
    if (k < 0) throw Error(ErrorKind::BadLabel, "root of the wrong length: " + vec_str(root));
    return k;
}

int Space::index_of_word(const std::vector<int>& word) const {
    return index_of_weight(weyl_apply(rs, word, varpi));
}

int Space::index_of_spec(const std::string& text) const {
    auto t = text;
    t.erase(std::remove(t.begin(), t.end(), ' '), t.end());
    if (!t.empty() && t.front() == '[') {
        Vec r;
        std::string cur;
        for (char c : t.substr(1)) {
            if (c == ',' || c == ']') {
                if (!cur.empty()) r.push_back(std::stoll(cur));
                cur.clear();
            } else {
                cur += c;
            }
        }
        return index_of_label(r);
    }
    if (t == "e" || t == "1" || t == "id") return 0;
    return index_of_word(parse_word(text));
}

const Vec& Space::root_label(int index) const {
    if (!labeled()) throw Error(ErrorKind::Unsupported, name() + " has no root labels");
    return classes.at(index).label;
}

int Space::dual(int index) const { return dual_.at(index); }

Vec Space::poincare_dual_label(const Vec& root) const { return classes[dual(index_of_label(root))].label; }

bool connected_support(const RootSystem& rs, const Vec& a, const Vec& b) {
    std::vector<int> nodes;
    for (int i = 0; i < rs.rank; ++i)
        if (a[i] != 0 || b[i] != 0) nodes.push_back(i);
    if (nodes.empty()) return true;
    std::set<int> in(nodes.begin(), nodes.end()), seen{nodes[0]};
    std::vector<int> st{nodes[0]};
    while (!st.empty()) {
        int i = st.back();
        st.pop_back();
        for (int j : in)
            if (!seen.count(j) && rs.cartan[i][j] != 0) {
                seen.insert(j);
                st.push_back(j);
            }
    }
    return seen.size() == in.size();
}

bool Space::bruhat_leq(const Vec& a, const Vec& b) const {
    index_of_label(a);
    index_of_label(b);
    bool pa = is_positive(a), pb = is_positive(b);
    if (pa == pb) return leq_coefficientwise(a, b);
    if (!pa && pb) return connected_support(rs, a, b);
    return false;
}

std::set<Vec> subword_orbit(const RootSystem& rs, const std::vector<int>& word, const Vec& varpi) {
    std::set<Vec> t{varpi};
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        std::set<Vec> add;
        for (auto& m : t) add.insert(rs.simple_reflect(m, *it));
        t.insert(add.begin(), add.end());
    }
    return t;
}

bool Space::bruhat_contained(int i, int j) const {
    // X(class i) in X(class j) iff rep_j <= rep_i
    auto t = subword_orbit(rs, classes[i].rep.word, varpi);
    return t.count(classes[j].weight) > 0;
}

namespace {

bool minuscule_search(const RootSystem& rs, const std::vector<int>& v, const Vec& mu,
                      std::map<Vec, bool>& memo) {
    if (v.empty()) return true;
    Vec key = weyl_apply(rs, v, rs.rho);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    bool ok = false;
    int lv = static_cast<int>(v.size());
    for (int i = 0; i < rs.rank && !ok; ++i) {
        if (mu[i] != 1) continue;
        std::vector<int> w = v;
        w.push_back(i);
        WeylElement r = normalize(rs, w);
        if (r.length() >= lv) continue;  // s_i is not a right descent
        ok = minuscule_search(rs, r.word, rs.simple_reflect(mu, i), memo);
    }
    memo[key] = ok;
    return ok;
}

}  // namespace

bool is_lambda_minuscule(const RootSystem& rs, const WeylElement& w, const Vec& lambda) {
    if (!dominant(lambda)) throw Error(ErrorKind::Unsupported, "weight not dominant");
    WeylElement r = normalize(rs, w.word);
    std::map<Vec, bool> memo;
    return minuscule_search(rs, r.word, lambda, memo);
}

bool is_lambda_cominuscule(const RootSystem& rs, const WeylElement& w, const Vec& lambda) {
    return is_lambda_minuscule(rs.dual(), w, lambda);
}

int parabolic_dimension(const RootSystem& rs, int node) {
    int c = 0;
    for (auto& b : rs.positive_roots)
        if (b[node] > 0) ++c;
    return c;
}

Int index_by_root_sum(const RootSystem& rs, int node) {
    Vec s(rs.rank, 0);
    for (auto& b : rs.positive_roots)
        if (b[node] > 0)
            for (int i = 0; i < rs.rank; ++i) s[i] += b[i];
    Vec e(rs.rank, 0);
    e[node] = 1;
    return rs.pair_roots(s, e);
}

Int index_by_largest_coroot(const RootSystem& rs, int node) {
    Vec beta(rs.rank, 0);
    beta[node] = 1;
    Int nb = rs.norm2(beta);
    std::vector<Vec> cands;
    for (auto& g : rs.positive_roots) {
        if (rs.norm2(g) != nb) continue;
        Vec c = rs.coroot(g);
        if (c[node] == 1) cands.push_back(c);
    }
    std::vector<Vec> maxima;
    for (auto& c : cands) {
        bool top = true;
        for (auto& d : cands)
            if (d != c && leq_coefficientwise(c, d)) top = false;
        if (top) maxima.push_back(c);
    }
    if (maxima.size() != 1) throw Error(ErrorKind::Certificate, "no unique largest coroot");
    return height(maxima[0]) + 1;
}

Int index_by_flavor_formula(const RootSystem& rs, Flavor f, bool second_line) {
    auto rho_on = [&](const Vec& root) { return height(rs.coroot(root)); };
    Int ht_theta = height(rs.highest_root);
    switch (f) {
    case Flavor::Minuscule:
        return second_line ? ht_theta + 1 : rho_on(rs.highest_short_root) + 1;
    case Flavor::Coadjoint:
        return second_line ? ht_theta : rho_on(rs.highest_short_root);
    case Flavor::Cominuscule: return rho_on(rs.highest_root) + 1;
    case Flavor::Adjoint: return rho_on(rs.highest_root);
    default: throw Error(ErrorKind::Unsupported, "no index formula for this flavor");
    }
}

}  // namespace qs
