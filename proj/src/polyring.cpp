#include "qschub/polyring.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "qschub/lie.hpp"

namespace qs {

Mono Mono::operator*(const Mono& o) const {
    Mono r;
    for (int i = 0; i < kMaxVars; ++i) r.e[i] = e[i] + o.e[i];
    return r;
}

bool Mono::divides(const Mono& o) const {
    for (int i = 0; i < kMaxVars; ++i)
        if (e[i] > o.e[i]) return false;
    return true;
}

void add_term(Poly& p, const Mono& m, const mpq_class& c) {
    if (c == 0) return;
    auto [it, fresh] = p.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) p.erase(it);
    }
}

Poly operator+(const Poly& a, const Poly& b) {
    Poly r = a;
    for (auto& [m, c] : b) add_term(r, m, c);
    return r;
}

Poly operator-(const Poly& a, const Poly& b) {
    Poly r = a;
    for (auto& [m, c] : b) add_term(r, m, -c);
    return r;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    for (auto& [ma, ca] : a)
        for (auto& [mb, cb] : b) add_term(r, ma * mb, ca * cb);
    return r;
}

Poly operator*(const Poly& a, const mpq_class& s) {
    Poly r;
    if (s == 0) return r;
    for (auto& [m, c] : a) r.emplace(m, c * s);
    return r;
}

Poly poly_pow(const Poly& a, int k) {
    Poly r;
    r.emplace(Mono{}, 1);
    for (int i = 0; i < k; ++i) r = r * a;
    return r;
}

GradedRing::GradedRing(std::vector<std::string> n, std::vector<int> w, int q)
    : names(std::move(n)), weights(std::move(w)), qvar(q) {
    if (names.size() != weights.size() || names.size() > static_cast<size_t>(kMaxVars))
        throw Error(ErrorKind::Parse, "bad variable list");
    for (int x : weights)
        if (x < 1) throw Error(ErrorKind::Parse, "weights must be positive");
    if (qvar >= 0 && qvar != nvars() - 1) throw Error(ErrorKind::Parse, "the quantum parameter must be the last variable");
}

int GradedRing::var(const std::string& name) const {
    for (int i = 0; i < nvars(); ++i)
        if (names[i] == name) return i;
    throw Error(ErrorKind::Parse, "unknown variable '" + name + "'");
}

Poly GradedRing::var_poly(int i) const {
    Mono m;
    m.e[i] = 1;
    return Poly{{m, 1}};
}

Poly GradedRing::constant(const mpq_class& c) const {
    Poly p;
    add_term(p, Mono{}, c);
    return p;
}

int GradedRing::degree(const Mono& m) const {
    int d = 0;
    for (int i = 0; i < nvars(); ++i) d += m.e[i] * weights[i];
    return d;
}

bool GradedRing::greater(const Mono& a, const Mono& b) const {
    int da = degree(a), db = degree(b);
    if (da != db) return da > db;
    for (int i = nvars() - 1; i >= 0; --i)
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i];
    return false;
}

std::vector<Mono> GradedRing::monomials(int d) const {
    std::vector<Mono> out;
    if (d < 0) return out;
    Mono cur;
    std::function<void(int, int)> go = [&](int i, int left) {
        if (i == nvars()) {
            if (left == 0) out.push_back(cur);
            return;
        }
        for (int k = 0; k * weights[i] <= left; ++k) {
            cur.e[i] = k;
            go(i + 1, left - k * weights[i]);
        }
        cur.e[i] = 0;
    };
    go(0, d);
    std::sort(out.begin(), out.end(), [&](const Mono& a, const Mono& b) { return greater(a, b); });
    return out;
}

std::optional<int> GradedRing::homogeneous_degree(const Poly& p) const {
    if (p.empty()) return std::nullopt;
    int d = degree(p.begin()->first);
    for (auto& [m, c] : p)
        if (degree(m) != d) return std::nullopt;
    return d;
}

namespace {

struct Parser {
    const GradedRing& ring;
    std::string s;
    size_t i = 0;

    void ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    [[noreturn]] void fail(const std::string& what) {
        throw Error(ErrorKind::Parse, what + " at position " + std::to_string(i) + " in '" + s + "'");
    }
    bool eat(char c) {
        ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    long integer() {
        ws();
        size_t j = i;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        if (j == i) fail("expected an integer");
        long v = std::stol(s.substr(i, j - i));
        i = j;
        return v;
    }
    Poly expr() {
        ws();
        Poly r;
        bool neg = false;
        if (eat('-')) neg = true;
        else eat('+');
        Poly t = term();
        r = neg ? r - t : t;
        while (true) {
            if (eat('+')) r = r + term();
            else if (eat('-')) r = r - term();
            else break;
        }
        return r;
    }
    Poly term() {
        Poly r = factor();
        while (true) {
            ws();
            if (eat('*')) {
                r = r * factor();
            } else if (eat('/')) {
                long d = integer();
                if (d == 0) fail("division by zero");
                r = r * mpq_class(1, d);
            } else if (i < s.size() && (std::isalpha(static_cast<unsigned char>(s[i])) || s[i] == '(')) {
                r = r * factor();  // implicit product after a number
            } else {
                break;
            }
        }
        return r;
    }
    Poly factor() {
        ws();
        Poly base;
        if (i >= s.size()) fail("unexpected end");
        if (eat('(')) {
            base = expr();
            if (!eat(')')) fail("expected ')'");
        } else if (std::isdigit(static_cast<unsigned char>(s[i]))) {
            ws();
            size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            base = ring.constant(mpq_class(mpz_class(s.substr(i, j - i))));
            i = j;
        } else if (std::isalpha(static_cast<unsigned char>(s[i]))) {
            size_t j = i;
            while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
            base = ring.var_poly(ring.var(s.substr(i, j - i)));
            i = j;
        } else {
            fail("unexpected character");
        }
        if (eat('^')) base = poly_pow(base, static_cast<int>(integer()));
        return base;
    }
};

}  // namespace

Poly GradedRing::parse(const std::string& text) const {
    Parser p{*this, text};
    Poly r = p.expr();
    p.ws();
    if (p.i != text.size()) p.fail("trailing input");
    return r;
}

std::string GradedRing::mono_str(const Mono& m) const {
    std::string out;
    for (int i = 0; i < nvars(); ++i) {
        if (m.e[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += names[i];
        if (m.e[i] > 1) out += "^" + std::to_string(m.e[i]);
    }
    return out.empty() ? "1" : out;
}

std::string GradedRing::str(const Poly& p) const {
    if (p.empty()) return "0";
    std::vector<std::pair<Mono, mpq_class>> terms(p.begin(), p.end());
    std::sort(terms.begin(), terms.end(), [&](auto& a, auto& b) { return greater(a.first, b.first); });
    std::string out;
    bool first = true;
    for (auto& [m, c] : terms) {
        mpq_class a = abs(c);
        if (!first) out += c < 0 ? " - " : " + ";
        else if (c < 0) out += "-";
        std::string ms = mono_str(m);
        if (ms == "1") out += a.get_str();
        else if (a == 1) out += ms;
        else out += a.get_str() + "*" + ms;
        first = false;
    }
    return out;
}

Poly substitute(const Poly& p, int var, const mpq_class& value) {
    Poly r;
    for (auto& [m, c] : p) {
        Mono n = m;
        mpq_class f = c;
        for (int k = 0; k < m.e[var]; ++k) f *= value;
        n.e[var] = 0;
        add_term(r, n, f);
    }
    return r;
}

Poly reduce_power(const Poly& p, int var, int exp, const Poly& replacement) {
    Poly cur = p;
    while (true) {
        Poly next;
        bool changed = false;
        for (auto& [m, c] : cur) {
            if (m.e[var] < exp) {
                add_term(next, m, c);
                continue;
            }
            changed = true;
            Mono rest = m;
            rest.e[var] -= exp;
            Poly t{{rest, c}};
            next = next + t * replacement;
        }
        cur.swap(next);
        if (!changed) return cur;
    }
}

UPoly to_upoly(const Poly& p, int var) {
    std::vector<mpq_class> c;
    for (auto& [m, a] : p) {
        for (int i = 0; i < kMaxVars; ++i)
            if (i != var && m.e[i] != 0) throw Error(ErrorKind::Unsupported, "polynomial is not univariate");
        int k = m.e[var];
        if (static_cast<int>(c.size()) <= k) c.resize(k + 1, 0);
        c[k] += a;
    }
    return UPoly(c);
}

// ---------------------------------------------------------------------------

GradedQuotient::GradedQuotient(GradedRing ring, std::vector<Poly> relations)
    : ring_(std::move(ring)), relations_(std::move(relations)) {
    for (auto& r : relations_) {
        auto d = ring_.homogeneous_degree(r);
        if (!d) throw Error(ErrorKind::Parse, "relation " + ring_.str(r) + " is not weighted homogeneous");
        rel_deg_.push_back(*d);
    }
}

void GradedQuotient::reduce(Row& r, const std::map<int, Row>& pivots, bool full) {
    // Merge-subtract pivot rows; `full` also clears non-leading pivot columns.
    size_t pos = 0;
    while (pos < r.t.size()) {
        int c = r.t[pos].first;
        auto it = pivots.find(c);
        if (it == pivots.end()) {
            if (!full) return;
            ++pos;
            continue;
        }
        mpq_class f = r.t[pos].second;
        const auto& pv = it->second.t;
        std::vector<std::pair<int, mpq_class>> out;
        out.reserve(r.t.size() + pv.size());
        for (size_t a = 0; a < pos; ++a) out.push_back(std::move(r.t[a]));
        size_t a = pos, b = 0;
        while (a < r.t.size() || b < pv.size()) {
            if (b == pv.size() || (a < r.t.size() && r.t[a].first < pv[b].first)) {
                out.push_back(std::move(r.t[a++]));
            } else if (a == r.t.size() || pv[b].first < r.t[a].first) {
                out.emplace_back(pv[b].first, -f * pv[b].second);
                ++b;
            } else {
                mpq_class v = r.t[a].second - f * pv[b].second;
                if (v != 0) out.emplace_back(r.t[a].first, std::move(v));
                ++a;
                ++b;
            }
        }
        r.t.swap(out);
    }
}

GradedQuotient::Level GradedQuotient::build(int d) const {
    Level L;
    L.monos = ring_.monomials(d);
    for (size_t i = 0; i < L.monos.size(); ++i) L.index[L.monos[i]] = static_cast<int>(i);
    for (size_t k = 0; k < relations_.size(); ++k) {
        int e = rel_deg_[k];
        if (e > d) continue;
        for (auto& m : ring_.monomials(d - e)) {
            Row r;
            for (auto& [rm, c] : relations_[k]) r.t.emplace_back(L.index.at(rm * m), c);
            std::sort(r.t.begin(), r.t.end(), [](auto& x, auto& y) { return x.first < y.first; });
            reduce(r, L.pivots, false);
            if (r.t.empty()) continue;
            mpq_class lead = r.t[0].second;
            for (auto& [c, v] : r.t) v /= lead;
            int col = r.t[0].first;
            L.pivots.emplace(col, std::move(r));
        }
    }
    for (int c = 0; c < static_cast<int>(L.monos.size()); ++c)
        if (!L.pivots.count(c)) {
            L.basis_pos[c] = static_cast<int>(L.basis.size());
            L.basis_cols.push_back(c);
            L.basis.push_back(L.monos[c]);
        }
    return L;
}

void GradedQuotient::prepare(int d) {
    std::vector<int> todo;
    for (int k = 0; k <= d; ++k)
        if (!levels_.count(k)) todo.push_back(k);
    if (todo.empty()) return;
    unsigned threads = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("QSCHUB_THREADS")) threads = std::max(1, std::atoi(env));
    threads = std::min<unsigned>(threads, static_cast<unsigned>(todo.size()));
    std::vector<Level> out(todo.size());
    // largest degrees first, they dominate the cost
    std::vector<size_t> order(todo.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = order.size() - 1 - i;
    std::atomic<size_t> next{0};
    auto worker = [&] {
        while (true) {
            size_t j = next.fetch_add(1);
            if (j >= order.size()) return;
            out[order[j]] = build(todo[order[j]]);
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    for (size_t i = 0; i < todo.size(); ++i) levels_.emplace(todo[i], std::move(out[i]));
}

GradedQuotient::Level& GradedQuotient::level(int d) {
    auto it = levels_.find(d);
    if (it == levels_.end()) it = levels_.emplace(d, build(d)).first;
    return it->second;
}

int GradedQuotient::dim(int d) { return d < 0 ? 0 : static_cast<int>(level(d).basis.size()); }

int GradedQuotient::relation_rank(int d) { return static_cast<int>(level(d).pivots.size()); }

const std::vector<Mono>& GradedQuotient::basis(int d) { return level(d).basis; }

std::vector<mpq_class> GradedQuotient::coords(const Poly& f) {
    if (f.empty()) return {};
    auto d = ring_.homogeneous_degree(f);
    if (!d) throw Error(ErrorKind::Unsupported, "coords of a non-homogeneous polynomial");
    Level& L = level(*d);
    Row r;
    for (auto& [m, c] : f) r.t.emplace_back(L.index.at(m), c);
    std::sort(r.t.begin(), r.t.end(), [](auto& x, auto& y) { return x.first < y.first; });
    reduce(r, L.pivots, true);
    std::vector<mpq_class> out(L.basis.size(), 0);
    for (auto& [c, v] : r.t) out[L.basis_pos.at(c)] = v;
    return out;
}

Poly GradedQuotient::from_coords(int d, const std::vector<mpq_class>& c) {
    const auto& b = basis(d);
    Poly p;
    for (size_t i = 0; i < c.size(); ++i) add_term(p, b[i], c[i]);
    return p;
}

Poly GradedQuotient::normal_form(const Poly& f) {
    std::map<int, Poly> parts;
    for (auto& [m, c] : f) parts[ring_.degree(m)].emplace(m, c);
    Poly out;
    for (auto& [d, part] : parts) out = out + from_coords(d, coords(part));
    return out;
}

ModuleBasis module_basis(GradedQuotient& gq, int dmax) {
    ModuleBasis mb;
    const GradedRing& R = gq.ring();
    if (R.qvar < 0) throw Error(ErrorKind::Unsupported, "ring without a quantum parameter");
    int wq = R.weights[R.qvar];
    gq.prepare(dmax);
    std::map<int, std::vector<Mono>> by_deg;
    for (int d = 0; d <= dmax; ++d)
        for (auto& m : gq.basis(d))
            if (m.e[R.qvar] == 0) {
                mb.basis.push_back(m);
                by_deg[d].push_back(m);
            }
    mb.free = true;
    for (int d = 0; d <= dmax && mb.free; ++d) {
        size_t expect = 0;
        for (int k = 0; d - k * wq >= 0; ++k) expect += by_deg.count(d - k * wq) ? by_deg[d - k * wq].size() : 0;
        const auto& b = gq.basis(d);
        if (b.size() != expect) mb.free = false;
        for (auto& m : b) {
            Mono base = m;
            base.e[R.qvar] = 0;
            auto& v = by_deg[R.degree(base)];
            if (std::find(v.begin(), v.end(), base) == v.end()) mb.free = false;
        }
        mb.checked_to = d;
    }
    return mb;
}

// ---------------------------------------------------------------------------

std::string default_catalog_path() {
    if (const char* env = std::getenv("QSCHUB_DATA")) return std::string(env) + "/presentations.json";
#ifdef QSCHUB_DATA_DIR
    return std::string(QSCHUB_DATA_DIR) + "/presentations.json";
#else
    return "data/presentations.json";
#endif
}

std::vector<Presentation> load_catalog(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::Parse, "cannot open catalog " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw Error(ErrorKind::Parse, std::string("catalog: ") + e.what());
    }
    if (j.value("version", 0) != 1) throw Error(ErrorKind::Parse, "unsupported catalog version");
    std::vector<Presentation> out;
    for (auto& e : j.at("presentations")) {
        Presentation p;
        p.space = e.at("space").get<std::string>();
        std::vector<std::string> names;
        std::vector<int> weights;
        for (auto& v : e.at("vars")) {
            names.push_back(v.at(0).get<std::string>());
            weights.push_back(v.at(1).get<int>());
        }
        std::string q = e.value("q", std::string("q"));
        int qv = -1;
        for (size_t i = 0; i < names.size(); ++i)
            if (names[i] == q) qv = static_cast<int>(i);
        p.ring = GradedRing(names, weights, qv);
        for (auto& r : e.at("relations")) {
            p.relation_text.push_back(r.get<std::string>());
            p.relations.push_back(p.ring.parse(p.relation_text.back()));
        }
        p.expected_rank = e.at("expected_rank").get<int>();
        p.dim = e.at("dim").get<int>();
        if (e.contains("generators"))
            for (auto& [k, v] : e.at("generators").items()) p.generators[k] = v.get<std::string>();
        p.note = e.value("note", std::string());
        if (e.contains("errata"))
            for (auto& er : e.at("errata")) {
                int i = er.at("index").get<int>();
                if (i < 0 || i >= static_cast<int>(p.relations.size())) throw Error(ErrorKind::Parse, "erratum index out of range");
                p.errata[i] = er.at("relation").get<std::string>();
                p.ring.parse(p.errata[i]);
            }
        out.push_back(std::move(p));
    }
    return out;
}

Presentation with_errata(const Presentation& p) {
    Presentation c = p;
    for (auto& [i, text] : p.errata) {
        c.relation_text[i] = text;
        c.relations[i] = c.ring.parse(text);
    }
    c.errata.clear();
    return c;
}

Presentation catalog_presentation(const std::string& space, const std::string& path) {
    for (auto& p : load_catalog(path))
        if (p.space == space) return p;
    throw Error(ErrorKind::Unsupported, "no presentation for " + space);
}

std::vector<std::string> catalog_spaces(const std::string& path) {
    std::vector<std::string> out;
    for (auto& p : load_catalog(path)) out.push_back(p.space);
    return out;
}

std::vector<int> monomial_count_oracle(const std::vector<int>& betti, int qweight, int dmax) {
    std::vector<int> out(dmax + 1, 0);
    for (int d = 0; d <= dmax; ++d)
        for (int k = 0; d - k * qweight >= 0; ++k) {
            int j = d - k * qweight;
            if (j < static_cast<int>(betti.size())) out[d] += betti[j];
        }
    return out;
}

std::vector<int> graded_dims(const Presentation& p, int dmax) {
    GradedQuotient gq(p.ring, p.relations);
    gq.prepare(dmax);
    std::vector<int> out;
    for (int d = 0; d <= dmax; ++d) out.push_back(gq.dim(d));
    return out;
}

int macaulay_dim(const GradedRing& ring, const std::vector<Poly>& relations, int d) {
    auto monos = ring.monomials(d);
    std::map<Mono, int> index;
    for (size_t i = 0; i < monos.size(); ++i) index[monos[i]] = static_cast<int>(i);
    QMat m;
    for (auto& r : relations) {
        auto e = ring.homogeneous_degree(r);
        if (!e) throw Error(ErrorKind::Parse, "relation is not homogeneous");
        if (*e > d) continue;
        for (auto& x : ring.monomials(d - *e)) {
            std::vector<mpq_class> row(monos.size(), 0);
            for (auto& [rm, c] : r) row[index.at(rm * x)] += c;
            m.push_back(std::move(row));
        }
    }
    return static_cast<int>(monos.size()) - mat_rank(m);
}

// ---------------------------------------------------------------------------

QuotientAlgebra specialize(GradedQuotient& gq, const ModuleBasis& mb, const mpq_class& q_value) {
    if (!mb.free) throw Error(ErrorKind::Certificate, "quotient is not free over the quantum parameter");
    const GradedRing& R = gq.ring();
    QuotientAlgebra a;
    a.ring = &gq.ring();
    a.basis = mb.basis;
    a.q_value = q_value;
    std::map<Mono, int> pos;
    for (size_t i = 0; i < a.basis.size(); ++i) pos[a.basis[i]] = static_cast<int>(i);
    int n = a.dim();
    for (int v = 0; v < R.nvars(); ++v) {
        if (v == R.qvar) continue;
        a.gen_vars.push_back(v);
        QMat op(n, std::vector<mpq_class>(n, 0));
        for (int j = 0; j < n; ++j) {
            Mono m = a.basis[j];
            m.e[v] += 1;
            Poly f{{m, 1}};
            auto c = gq.coords(f);
            const auto& b = gq.basis(R.degree(m));
            for (size_t k = 0; k < c.size(); ++k) {
                if (c[k] == 0) continue;
                Mono base = b[k];
                int qk = base.e[R.qvar];
                base.e[R.qvar] = 0;
                auto it = pos.find(base);
                if (it == pos.end()) throw Error(ErrorKind::Certificate, "basis extraction failed at " + R.mono_str(b[k]));
                mpq_class f2 = c[k];
                for (int t = 0; t < qk; ++t) f2 *= q_value;
                op[it->second][j] += f2;
            }
        }
        a.ops.push_back(std::move(op));
    }
    if (pos.find(Mono{}) == pos.end() || pos[Mono{}] != 0) throw Error(ErrorKind::Certificate, "unit is not the first basis element");
    return a;
}

std::vector<mpq_class> QuotientAlgebra::element(const Poly& f) const {
    int n = dim();
    std::vector<mpq_class> out(n, 0);
    for (auto& [m, c] : f) {
        std::vector<mpq_class> v(n, 0);
        v[0] = c;
        for (int g = 0; g < ring->nvars(); ++g) {
            if (g == ring->qvar) {
                for (int t = 0; t < m.e[g]; ++t)
                    for (auto& x : v) x *= q_value;
                continue;
            }
            size_t oi = std::find(gen_vars.begin(), gen_vars.end(), g) - gen_vars.begin();
            for (int t = 0; t < m.e[g]; ++t) {
                std::vector<mpq_class> w(n, 0);
                for (int r = 0; r < n; ++r)
                    for (int s = 0; s < n; ++s)
                        if (v[s] != 0 && ops[oi][r][s] != 0) w[r] += ops[oi][r][s] * v[s];
                v.swap(w);
            }
        }
        for (int i = 0; i < n; ++i) out[i] += v[i];
    }
    return out;
}

QMat QuotientAlgebra::op_of(const Poly& f) const {
    int n = dim();
    QMat out(n, std::vector<mpq_class>(n, 0));
    for (auto& [m, c] : f) {
        QMat acc = identity_matrix(n);
        mpq_class scale = c;
        for (int g = 0; g < ring->nvars(); ++g) {
            if (g == ring->qvar) {
                for (int t = 0; t < m.e[g]; ++t) scale *= q_value;
                continue;
            }
            size_t oi = std::find(gen_vars.begin(), gen_vars.end(), g) - gen_vars.begin();
            for (int t = 0; t < m.e[g]; ++t) acc = mat_mul(ops[oi], acc);
        }
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (acc[i][j] != 0) out[i][j] += scale * acc[i][j];
    }
    return out;
}

bool QuotientAlgebra::commuting() const {
    for (size_t i = 0; i < ops.size(); ++i)
        for (size_t j = i + 1; j < ops.size(); ++j)
            if (mat_mul(ops[i], ops[j]) != mat_mul(ops[j], ops[i])) return false;
    return true;
}

QMat QuotientAlgebra::trace_form() const {
    int n = dim();
    std::vector<QMat> mb;
    for (auto& b : basis) mb.push_back(op_of(Poly{{b, 1}}));
    QMat t(n, std::vector<mpq_class>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            mpq_class s = 0;
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l)
                    if (mb[i][k][l] != 0 && mb[j][l][k] != 0) s += mb[i][k][l] * mb[j][l][k];
            t[i][j] = t[j][i] = s;
        }
    return t;
}

SemisimpleReport trace_form_report(const QuotientAlgebra& a) {
    SemisimpleReport r;
    QMat t = a.trace_form();
    r.dim = a.dim();
    r.trace_rank = mat_rank(t);
    r.det = mat_det(t);
    r.semisimple = r.det != 0;
    return r;
}

PresentationAlgebra::PresentationAlgebra(Presentation p, int dmax)
    : pres(std::move(p)), gq(pres.ring, pres.relations), mb() {
    mb = module_basis(gq, dmax);
}

QuotientAlgebra mult_operators(PresentationAlgebra& pa, const mpq_class& q_value) {
    if (static_cast<int>(pa.mb.basis.size()) != pa.pres.expected_rank)
        throw Error(ErrorKind::Certificate, pa.pres.space + ": module basis has " + std::to_string(pa.mb.basis.size()) +
                                                " elements, expected " + std::to_string(pa.pres.expected_rank));
    return specialize(pa.gq, pa.mb, q_value);
}

SemisimpleReport semisimple(PresentationAlgebra& pa, const mpq_class& q_value) {
    return trace_form_report(mult_operators(pa, q_value));
}

// ---------------------------------------------------------------------------

Presentation bn_presentation(int n) {
    if (n < 2) throw Error(ErrorKind::Unsupported, "B_n needs n >= 2");
    Presentation p;
    p.space = "B" + std::to_string(n) + "/P2 cover";
    p.ring = GradedRing({"x1", "x2", "q"}, {1, 1, 2 * n - 2}, 2);
    Poly x1 = p.ring.var_poly(0), x2 = p.ring.var_poly(1), q = p.ring.var_poly(2);
    Poly e1, s2;
    for (int k = 0; k <= n - 1; ++k) e1 = e1 - poly_pow(x1, 2 * k) * poly_pow(x2, 2 * n - 2 - 2 * k);
    e1 = e1 - q * mpq_class(2);
    for (int k = 0; k <= n - 2; ++k) s2 = s2 + poly_pow(x1, 2 * k) * poly_pow(x2, 2 * n - 4 - 2 * k);
    Poly e2 = poly_pow(x1, 2) * poly_pow(x2, 2) * s2 - q * x1 * x2 * mpq_class(2);
    p.relations = {e1, e2};
    for (auto& r : p.relations) p.relation_text.push_back(p.ring.str(r));
    p.expected_rank = 2 * n * (2 * n - 2);
    p.dim = (2 * n - 2) + 2 * n - 2;  // socle degree of the complete intersection
    return p;
}

BnCount bn_solution_count(int n) {
    BnCount r;
    r.n = n;
    // x1 x2 = 0: x_other^(2n-2) = -2
    UPoly axis = UPoly::monomial(1, 2 * n - 2) + UPoly::constant(2);
    bool sq_axis = squarefree(axis);
    r.branch_axes = 2 * axis.deg();
    // x2 = lambda x1, lambda a root of Phi = 1 + lambda + ... + lambda^(2n-2)
    std::vector<mpq_class> phi(2 * n - 1, 1);
    UPoly Phi(phi);
    UPoly even, even_short;
    for (int k = 0; k <= n - 1; ++k) even = even + UPoly::monomial(1, 2 * k);
    for (int k = 0; k <= n - 2; ++k) even_short = even_short + UPoly::monomial(1, 2 * k);
    UPoly lp1 = UPoly::x() + UPoly::constant(1);
    r.identity_ok = (lp1 * even) % Phi == UPoly::constant(1);
    // with x1^(2n-2) = -2(lambda+1): lambda (lambda+1) sum_{k<=n-2} lambda^{2k} = -1
    r.second_eq_ok = (UPoly::x() * lp1 * even_short) % Phi == UPoly::constant(-1);
    bool sq_phi = squarefree(Phi) && Phi.eval(-1) != 0;
    r.squarefree_ok = sq_axis && sq_phi;
    // x1^(2n-2) = c with c = -2(lambda+1) != 0 has 2n-2 distinct roots
    r.branch_ratio = Phi.deg() * (2 * n - 2);
    r.total = r.branch_axes + r.branch_ratio;
    if (!r.identity_ok || !r.second_eq_ok || !r.squarefree_ok)
        throw Error(ErrorKind::Certificate, "B_n branch certificate failed for n = " + std::to_string(n));
    Presentation p = bn_presentation(n);
    PresentationAlgebra pa(p, p.dim + 2 * n);
    QuotientAlgebra a = mult_operators(pa, 1);
    SemisimpleReport s = trace_form_report(a);
    r.algebra_dim = s.dim;
    r.algebra_points = s.trace_rank;
    return r;
}

EliminantReport f4_eliminant_check() {
    EliminantReport rep;
    GradedRing R({"h", "s"}, {1, 4});
    int h = 0, s = 1;
    Poly r1 = R.parse("h^8 - 12*s^2 - 16");  // q = 1
    Poly r2 = R.parse("3*h^12 - 18*h^8*s + 24*h^4*s^2 + 8*s^3");
    Poly h8 = R.parse("12*s^2 + 16");
    if (reduce_power(r1, h, 8, h8) != Poly{}) throw Error(ErrorKind::Certificate, "h^8 substitution");
    Poly step = reduce_power(r2, h, 8, h8);
    Poly printed = R.parse("3*h^4*(5*s^2 + 4) - 4*s*(13*s^2 + 18)");
    rep.step = R.str(printed);
    if (step != printed * mpq_class(4)) throw Error(ErrorKind::Certificate, "first elimination step gives " + R.str(step));
    // step = A h^4 - B; square A h^4 = B and eliminate h^8 again
    Poly A, B;
    for (auto& [m, c] : step) {
        Mono rest = m;
        rest.e[h] = 0;
        if (m.e[h] == 4) add_term(A, rest, c);
        else if (m.e[h] == 0) add_term(B, rest, -c);
        else throw Error(ErrorKind::Certificate, "unexpected h power in the elimination step");
    }
    Poly lhs = reduce_power(A * A * R.parse("h^8"), h, 8, h8);
    UPoly e = to_upoly(lhs - B * B, s);
    rep.eliminant = e.monic();
    rep.expected = to_upoly(R.parse("s^6 - 108*s^4 - 576*s^2 - 576"), s);
    rep.equal = rep.eliminant == rep.expected;
    std::vector<mpq_class> pc;
    for (int k = 0; k <= rep.eliminant.deg(); k += 2) pc.push_back(rep.eliminant.coeff(k));
    for (int k = 1; k <= rep.eliminant.deg(); k += 2)
        if (rep.eliminant.coeff(k) != 0) throw Error(ErrorKind::Certificate, "eliminant is not even");
    UPoly P(pc);
    rep.p_at_minus2 = P.eval(-2);
    rep.p_at_0 = P.eval(0);
    rep.real_roots = count_real_roots(P);
    rep.simple = squarefree(P);
    return rep;
}

// ---------------------------------------------------------------------------

namespace {

Poly incidence_first(const GradedRing& R, int n) {
    Poly h1 = R.var_poly(0), mh2 = R.var_poly(1) * mpq_class(-1);
    Poly s;
    for (int k = 0; k <= n; ++k) s = s + poly_pow(h1, k) * poly_pow(mh2, n - k);
    return s;
}

}  // namespace

Presentation incidence_presentation(int n) {
    if (n < 2) throw Error(ErrorKind::Unsupported, "incidence variety needs n >= 2");
    Presentation p;
    p.space = "A" + std::to_string(n) + "/P1,P" + std::to_string(n);
    p.ring = GradedRing({"h1", "h2", "q1", "q2"}, {1, 1, n, n});
    Poly q1 = p.ring.var_poly(2), q2 = p.ring.var_poly(3), h1 = p.ring.var_poly(0), h2 = p.ring.var_poly(1);
    mpq_class sign = n % 2 == 0 ? 1 : -1;
    p.relations = {incidence_first(p.ring, n) - q1 - q2 * sign, poly_pow(h1, n + 1) - q1 * (h1 + h2)};
    for (auto& r : p.relations) p.relation_text.push_back(p.ring.str(r));
    p.expected_rank = n * (n + 1);
    p.dim = 2 * n - 1;
    return p;
}

Presentation incidence_scaled(int n, const mpq_class& a, const mpq_class& b) {
    Presentation p;
    p.space = "A" + std::to_string(n) + "/P1,P" + std::to_string(n) + " at (" + a.get_str() + "," + b.get_str() + ")";
    p.ring = GradedRing({"h1", "h2", "t"}, {1, 1, n}, 2);
    Poly t = p.ring.var_poly(2), h1 = p.ring.var_poly(0), h2 = p.ring.var_poly(1);
    mpq_class sign = n % 2 == 0 ? 1 : -1;
    p.relations = {incidence_first(p.ring, n) - t * (a + sign * b), poly_pow(h1, n + 1) - t * (h1 + h2) * a};
    for (auto& r : p.relations) p.relation_text.push_back(p.ring.str(r));
    p.expected_rank = n * (n + 1);
    p.dim = 2 * n - 1;
    return p;
}

IncidenceReport incidence(int n, const mpq_class& q1, const mpq_class& q2) {
    IncidenceReport r;
    r.n = n;
    r.q1 = q1;
    r.q2 = q2;
    mpq_class sign = n % 2 == 0 ? 1 : -1;
    mpq_class sum = q1 + sign * q2;
    r.admissible = q1 != 0 && q2 != 0 && sum != 0;
    if (q1 == 0 && q2 == 0) throw Error(ErrorKind::Unsupported, "q1 = q2 = 0 is the classical ring");
    Presentation p = incidence_scaled(n, q1, q2);
    PresentationAlgebra pa(p, p.dim + n + 1);
    QuotientAlgebra a = mult_operators(pa, 1);
    SemisimpleReport s = trace_form_report(a);
    r.algebra_dim = s.dim;
    r.points = s.trace_rank;
    r.semisimple = s.semisimple;
    if (sum != 0) {
        // scale so that q1 + (-1)^n q2 = 1, then q1 l^(n+1) = (-1)^(n+1) (q1 - 1)
        mpq_class a1 = q1 / sum;
        UPoly P = UPoly::monomial(a1, n + 1) - UPoly::constant(-sign * (a1 - 1));
        bool ok = a1 != 0 && squarefree(P) && P.eval(-1) != 0 && P.deg() == n + 1 && P.eval(0) != 0;
        r.reduction_count = ok ? n * (n + 1) : -1;
    }
    return r;
}

}  // namespace qs
