#include "qschub/quantum_ring.hpp"

#include <algorithm>

#include "qschub/localization.hpp"

namespace qs {

namespace {

// Gauss-Jordan inverse; throws Certificate when singular.
QMat invert(QMat a) {
    int n = static_cast<int>(a.size());
    QMat inv = identity_matrix(n);
    for (int c = 0; c < n; ++c) {
        int p = -1;
        for (int r = c; r < n; ++r)
            if (a[r][c] != 0) {
                p = r;
                break;
            }
        if (p < 0) throw Error(ErrorKind::Certificate, "Schubert classes are not a basis in some degree");
        std::swap(a[p], a[c]);
        std::swap(inv[p], inv[c]);
        mpq_class f = a[c][c];
        for (int j = 0; j < n; ++j) {
            a[c][j] /= f;
            inv[c][j] /= f;
        }
        for (int r = 0; r < n; ++r) {
            if (r == c || a[r][c] == 0) continue;
            mpq_class g = a[r][c];
            for (int j = 0; j < n; ++j) {
                a[r][j] -= g * a[c][j];
                inv[r][j] -= g * inv[c][j];
            }
        }
    }
    return inv;
}

// Gauss-Jordan on C with the same operations on Y; returns the rank.
int eliminate(std::vector<std::vector<mpq_class>>& C, std::vector<std::vector<mpq_class>>& Y, int nu, int m) {
    int rows = static_cast<int>(C.size()), rank = 0;
    for (int c = 0; c < nu; ++c) {
        int p = -1;
        for (int r = rank; r < rows; ++r)
            if (C[r][c] != 0) {
                p = r;
                break;
            }
        if (p < 0) continue;
        std::swap(C[p], C[rank]);
        std::swap(Y[p], Y[rank]);
        mpq_class f = C[rank][c];
        for (auto& x : C[rank]) x /= f;
        for (auto& x : Y[rank]) x /= f;
        for (int r = 0; r < rows; ++r) {
            if (r == rank || C[r][c] == 0) continue;
            mpq_class g = C[r][c];
            for (int j = 0; j < nu; ++j) C[r][j] -= g * C[rank][j];
            for (int j = 0; j < m; ++j) Y[r][j] -= g * Y[rank][j];
        }
        ++rank;
    }
    return rank;
}

Poly q_power(const GradedRing& R, Int d) { return poly_pow(R.var_poly(R.qvar), static_cast<int>(d)); }

}  // namespace

SchubertRing::SchubertRing(const Presentation& p, int extra_degrees)
    : sp_(Space::get(p.space)), pa_(with_errata(p), 2 * Space::get(p.space)->dim + extra_degrees) {
    const Space& sp = *sp_;
    const GradedRing& R = pa_.gq.ring();
    if (R.qvar < 0 || R.weights[R.qvar] != sp.c1)
        throw Error(ErrorKind::Certificate, p.space + ": weight of q differs from c1 = " + std::to_string(sp.c1));
    if (p.expected_rank != static_cast<int>(sp.size()))
        throw Error(ErrorKind::Certificate, p.space + ": expected rank differs from the number of classes");
    // generator identifications
    std::map<int, int> gen_class;  // class -> variable
    for (int v = 0; v < R.nvars(); ++v) {
        if (v == R.qvar) continue;
        auto it = p.generators.find(R.names[v]);
        if (it == p.generators.end()) throw Error(ErrorKind::Unsupported, "no Schubert class for generator " + R.names[v]);
        int c = sp.index_of_spec(it->second);
        if (sp.classes[c].length != R.weights[v])
            throw Error(ErrorKind::Certificate, "generator " + R.names[v] + " has weight " + std::to_string(R.weights[v]) +
                                                    " but its class has length " + std::to_string(sp.classes[c].length));
        gen_class[c] = v;
        if (R.weights[v] == 1) h_ = v;
    }
    if (h_ < 0) throw Error(ErrorKind::Unsupported, "presentation without a hyperplane generator");

    std::vector<std::vector<int>> by_len(sp.dim + 1);
    for (int c = 0; c < static_cast<int>(sp.size()); ++c) by_len[sp.classes[c].length].push_back(c);
    X_.assign(sp.size(), Poly{});
    X_[by_len[0].at(0)] = R.constant(1);
    GradedQuotient& gq = pa_.gq;
    Poly hp = R.var_poly(h_);
    for (int l = 0; l < sp.dim; ++l) {
        const auto& N = by_len[l + 1];
        int nu = static_cast<int>(N.size());
        int m = gq.dim(l + 1);
        std::map<int, int> col;
        for (int i = 0; i < nu; ++i) col[N[i]] = i;
        std::vector<std::vector<mpq_class>> C, Y;
        for (int w : by_len[l]) {
            std::vector<mpq_class> row(nu, 0);
            std::vector<mpq_class> rhs = gq.coords(hp * X_[w]);
            rhs.resize(m, 0);
            ClassVector hv = quantum_chevalley(sp, ClassVector::basis(w));
            for (auto& [mon, c] : hv.terms) {
                if (mon.d == 0) {
                    row[col.at(mon.cls)] += c;
                } else {
                    auto y = gq.coords(q_power(R, mon.d) * X_[mon.cls]);
                    for (size_t k = 0; k < y.size(); ++k) rhs[k] -= c * y[k];
                }
            }
            C.push_back(row);
            Y.push_back(rhs);
        }
        for (int w : N)
            if (gen_class.count(w)) {
                std::vector<mpq_class> row(nu, 0);
                row[col[w]] = 1;
                auto y = gq.coords(R.var_poly(gen_class[w]));
                y.resize(m, 0);
                C.push_back(row);
                Y.push_back(y);
            }
        int rank = eliminate(C, Y, nu, m);
        if (rank < nu && l + 1 < sp.c1) {
            // below degree c1 the product is classical: use cup constants of
            // the other generators
            for (auto& [g, var] : gen_class) {
                int k = sp.classes[g].length;
                if (var == h_ || k > l + 1) continue;
                for (int w : by_len[l + 1 - k]) {
                    std::vector<mpq_class> row(nu, 0);
                    for (auto& [x, c] : cup_constants(sp, g, w)) row[col.at(x)] += mpq_class(c);
                    auto y = gq.coords(R.var_poly(var) * X_[w]);
                    y.resize(m, 0);
                    C.push_back(row);
                    Y.push_back(y);
                }
            }
            rank = eliminate(C, Y, nu, m);
        }
        int rows = static_cast<int>(C.size());
        if (rank < nu)
            throw Error(ErrorKind::Certificate, p.space + ": classes of length " + std::to_string(l + 1) +
                                                    " are not determined by the generators and the Chevalley rule");
        for (int r = rank; r < rows; ++r)
            for (auto& x : Y[r])
                if (x != 0)
                    throw Error(ErrorKind::Certificate, p.space + ": presentation contradicts the Chevalley rule in degree " +
                                                            std::to_string(l + 1));
        // after full elimination row i carries unknown i
        for (int i = 0; i < nu; ++i) X_[N[i]] = gq.from_coords(l + 1, Y[i]);
    }
}

std::vector<mpq_class> SchubertRing::solve_in_degree(int D, const std::vector<mpq_class>& y) {
    auto it = inverse_.find(D);
    if (it == inverse_.end()) {
        const Space& sp = *sp_;
        const GradedRing& R = pa_.gq.ring();
        std::vector<QuantumMonomial> mons;
        for (Int d = 0; d * sp.c1 <= D; ++d)
            for (int c = 0; c < static_cast<int>(sp.size()); ++c)
                if (sp.classes[c].length + d * sp.c1 == D) mons.push_back({c, d});
        int m = pa_.gq.dim(D);
        if (static_cast<int>(mons.size()) != m)
            throw Error(ErrorKind::Certificate, "degree " + std::to_string(D) + " has dimension " + std::to_string(m) + " but " +
                                                    std::to_string(mons.size()) + " quantum monomials");
        QMat b(m, std::vector<mpq_class>(m, 0));
        for (int j = 0; j < m; ++j) {
            auto v = pa_.gq.coords(q_power(R, mons[j].d) * X_[mons[j].cls]);
            for (size_t i = 0; i < v.size(); ++i) b[i][j] = v[i];
        }
        it = inverse_.emplace(D, std::make_pair(mons, invert(b))).first;
    }
    const QMat& inv = it->second.second;
    std::vector<mpq_class> x(inv.size(), 0);
    for (size_t i = 0; i < inv.size(); ++i)
        for (size_t j = 0; j < y.size(); ++j)
            if (inv[i][j] != 0 && y[j] != 0) x[i] += inv[i][j] * y[j];
    return x;
}

ClassVector SchubertRing::expand(const Poly& f) {
    ClassVector out;
    if (f.empty()) return out;
    int D = *pa_.gq.ring().homogeneous_degree(f);
    auto x = solve_in_degree(D, pa_.gq.coords(f));
    const auto& mons = inverse_.at(D).first;
    for (size_t i = 0; i < x.size(); ++i) out.add(mons[i], x[i]);
    return out;
}

ClassVector SchubertRing::product(int u, int v) { return expand(X_.at(u) * X_.at(v)); }

// ---------------------------------------------------------------------------

Poly mh_char_poly(const Space& sp, const GradedRing& ring) {
    QMatrix m = mh_matrix(sp);
    int n = m.n;
    PMat pm(n, std::vector<UPoly>(n));
    for (int c = 0; c < n; ++c)
        for (auto& [r, ks] : m.cols[c])
            for (auto& [k, v] : ks) pm[r][c] = pm[r][c] + UPoly::monomial(v, static_cast<int>(k));
    auto coeffs = char_poly_over_q(pm);
    int h = -1;
    for (int v = 0; v < ring.nvars(); ++v)
        if (v != ring.qvar) h = v;
    Poly out;
    for (int i = 0; i <= n; ++i)
        for (int k = 0; k <= coeffs[i].deg(); ++k) {
            Mono mono;
            mono.e[h] = i;
            mono.e[ring.qvar] = k;
            add_term(out, mono, coeffs[i].coeff(k));
        }
    return out;
}

bool mh_cyclic(const Space& sp) {
    QMatrix m = mh_matrix(sp);
    int n = m.n;
    QMat a(n, std::vector<mpq_class>(n, 0));
    for (int c = 0; c < n; ++c)
        for (auto& [r, ks] : m.cols[c])
            for (auto& [k, v] : ks) a[r][c] += v;  // q = 1
    QMat kry(n, std::vector<mpq_class>(n, 0));
    std::vector<mpq_class> v(n, 0);
    v[0] = 1;
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) kry[i][j] = v[i];
        std::vector<mpq_class> w(n, 0);
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) w[i] += a[i][k] * v[k];
        v.swap(w);
    }
    return mat_rank(kry) == n;
}

PresentationReport verify_presentation(const Presentation& p, std::optional<int> dmax) {
    PresentationReport rep;
    rep.space = p.space;
    auto sp = Space::get(p.space);
    const GradedRing& R = p.ring;
    if (R.qvar < 0) throw Error(ErrorKind::Unsupported, "presentation without a quantum parameter");
    int c1 = R.weights[R.qvar];
    rep.dmax = dmax.value_or(2 * sp->dim + 2 * c1);
    rep.oracle = monomial_count_oracle(sp->betti(), c1, rep.dmax);
    GradedQuotient gq(p.ring, p.relations);
    gq.prepare(rep.dmax);
    for (int d = 0; d <= rep.dmax; ++d) {
        rep.dims.push_back(gq.dim(d));
        if (rep.first_bad < 0 && rep.dims.back() != rep.oracle[d]) rep.first_bad = d;
    }
    rep.relation_degrees = gq.relation_degrees();
    ModuleBasis mb = module_basis(gq, rep.dmax);
    rep.free = mb.free;
    rep.module_rank = static_cast<int>(mb.basis.size());
    rep.h_generated = R.nvars() == 2;
    bool ok = rep.first_bad < 0 && rep.free && rep.module_rank == p.expected_rank &&
              p.expected_rank == static_cast<int>(sp->size()) && c1 == sp->c1 && p.dim == sp->dim;
    if (rep.h_generated) {
        Poly cp = mh_char_poly(*sp, R);
        rep.minimal_polynomial = R.str(cp);
        rep.minimal_polynomial_ok = mh_cyclic(*sp) && p.relations.size() == 1 && cp == p.relations[0];
        ok = ok && *rep.minimal_polynomial_ok;
    }
    rep.pass = ok;
    bool words = true;
    for (int v = 0; v < R.nvars(); ++v)
        if (v != R.qvar && !p.generators.count(R.names[v])) words = false;
    if (words) {
        rep.classical = classical_relation_check(p);
        bool all = true;
        for (auto& c : rep.classical) all = all && c.vanishes;
        rep.classical_ok = all;
    }
    if (rep.first_bad >= 0)
        rep.message = "degree " + std::to_string(rep.first_bad) + ": quotient dimension " +
                      std::to_string(rep.dims[rep.first_bad]) + ", quantum monomials " +
                      std::to_string(rep.oracle[rep.first_bad]);
    else if (!rep.free)
        rep.message = "quotient is not free over Q[q]";
    else if (rep.module_rank != p.expected_rank)
        rep.message = "module rank " + std::to_string(rep.module_rank);
    else if (rep.minimal_polynomial_ok && !*rep.minimal_polynomial_ok)
        rep.message = "relation differs from the characteristic polynomial of M_h: " + rep.minimal_polynomial;
    else if (rep.classical_ok && !*rep.classical_ok)
        for (auto& c : rep.classical)
            if (!c.vanishes) {
                rep.message = "relation " + std::to_string(c.index + 1) + " (degree " + std::to_string(c.degree) +
                              ") does not vanish in classical cohomology";
                break;
            }
    return rep;
}

std::vector<RelationCheck> classical_relation_check(const Presentation& p) {
    auto sp = Space::get(p.space);
    const GradedRing& R = p.ring;
    std::map<int, int> var_class;
    for (int v = 0; v < R.nvars(); ++v)
        if (v != R.qvar) var_class[v] = sp->index_of_spec(p.generators.at(R.names[v]));
    std::map<std::pair<int, int>, std::map<int, mpz_class>> cache;
    auto times = [&](const std::map<int, mpq_class>& a, int g) {
        std::map<int, mpq_class> r;
        for (auto& [c, x] : a) {
            if (x == 0) continue;
            auto key = std::make_pair(g, c);
            auto it = cache.find(key);
            if (it == cache.end()) it = cache.emplace(key, cup_constants(*sp, g, c)).first;
            for (auto& [y, k] : it->second) r[y] += x * mpq_class(k);
        }
        return r;
    };
    std::vector<RelationCheck> out;
    for (size_t i = 0; i < p.relations.size(); ++i) {
        RelationCheck rc;
        rc.index = static_cast<int>(i);
        rc.degree = R.homogeneous_degree(p.relations[i]).value_or(-1);
        std::map<int, mpq_class> total;
        for (auto& [m, c] : p.relations[i]) {
            if (R.qvar >= 0 && m.e[R.qvar] > 0) continue;
            std::map<int, mpq_class> cur{{0, 1}};
            for (auto& [v, g] : var_class)
                for (int k = 0; k < m.e[v]; ++k) cur = times(cur, g);
            for (auto& [y, x] : cur) total[y] += c * x;
        }
        for (auto& [y, x] : total)
            if (x != 0) ++rc.residual_terms;
        rc.vanishes = rc.residual_terms == 0;
        out.push_back(rc);
    }
    return out;
}

RingProperties ring_properties(SchubertRing& ring) {
    RingProperties rp;
    const Space& sp = ring.space();
    int n = static_cast<int>(sp.size());
    for (int u = 0; u < n; ++u)
        for (int v = u; v < n; ++v) {
            ClassVector p = ring.product(u, v);
            ++rp.products;
            for (auto& [m, c] : p.terms)
                if (c != 0) rp.max_q_power = std::max(rp.max_q_power, m.d);
        }
    int pt = sp.point(), line = -1;
    for (int c = 0; c < n; ++c)
        if (sp.classes[c].length == sp.dim - 1) line = c;
    rp.pt_square = ring.product(pt, pt);
    ClassVector expect;
    expect.add({line, 2}, 2);
    rp.pt_square_ok = rp.pt_square == expect;
    QuotientAlgebra a = mult_operators(ring.algebra(), 1);
    rp.real_spectrum = true;
    for (int c = 0; c < n; ++c) {
        if (sp.classes[c].length != sp.c1) continue;
        RingProperties::Spectrum s;
        s.cls = c;
        s.charpoly = char_poly(a.op_of(ring.cls(c)));
        UPoly sf = squarefree_part(s.charpoly);
        s.distinct = sf.deg();
        s.distinct_real = count_real_roots(sf);
        if (s.distinct != s.distinct_real) rp.real_spectrum = false;
        rp.spectra.push_back(s);
    }
    return rp;
}

BlockReport f4_square_block(SchubertRing& ring) {
    const Space& sp = ring.space();
    if (sp.name() != "F4/P1") throw Error(ErrorKind::Unsupported, "block defined for F4/P1");
    const GradedRing& R = ring.algebra().gq.ring();
    int sigma = sp.index_of_spec("s4 s3 s2 s1");
    int a1 = sp.index_of_label({-1, 0, 0, 0}), a2 = sp.index_of_label({0, -1, 0, 0});
    int id = 0;
    Poly sq = ring.cls(sigma) * ring.cls(sigma);
    std::vector<Poly> basis = {R.var_poly(R.qvar), ring.cls(a1), ring.cls(a2)};
    std::map<int, int> slot = {{id, 0}, {a1, 1}, {a2, 2}};
    BlockReport b;
    b.matrix.assign(3, std::vector<mpq_class>(3, 0));
    for (int j = 0; j < 3; ++j) {
        ClassVector img = ring.expand(sq * basis[j]);
        for (auto& [m, c] : img.terms) {
            if (c == 0) continue;
            auto it = slot.find(m.cls);
            if (it == slot.end()) throw Error(ErrorKind::Certificate, "block is not stable under sigma^2");
            b.matrix[it->second][j] += c;  // q = 1
        }
    }
    b.charpoly = char_poly(b.matrix);
    b.squarefree = squarefree(b.charpoly);
    b.real_roots = count_real_roots(b.charpoly);
    b.positive = count_positive_roots(b.charpoly);
    b.negative = count_negative_roots(b.charpoly);
    return b;
}

}  // namespace qs
