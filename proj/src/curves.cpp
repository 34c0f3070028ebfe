#include "qschub/curves.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "json.hpp"

namespace qs {

namespace {

// Irreducible component of `roots` (closed under negation) containing `seed`.
std::vector<Vec> component_of(const RootSystem& rs, const std::vector<Vec>& roots, const Vec& seed) {
    std::vector<bool> in(roots.size(), false);
    std::vector<size_t> todo;
    for (size_t i = 0; i < roots.size(); ++i)
        if (roots[i] == seed) {
            in[i] = true;
            todo.push_back(i);
        }
    while (!todo.empty()) {
        size_t i = todo.back();
        todo.pop_back();
        for (size_t j = 0; j < roots.size(); ++j)
            if (!in[j] && rs.pair_roots(roots[j], roots[i]) != 0) {
                in[j] = true;
                todo.push_back(j);
            }
    }
    std::vector<Vec> out;
    for (size_t i = 0; i < roots.size(); ++i)
        if (in[i]) out.push_back(roots[i]);
    return out;
}

Int coroot_pairing(const RootSystem& rs, const Vec& varpi, const Vec& root) { return rs.pair(varpi, root); }

}  // namespace

Vec theta_d(const RootSystem& rs, const Vec& varpi, Int d) { return theta_d(rs, varpi, d, rs.positive_roots); }

Vec theta_d(const RootSystem& rs, const Vec& varpi, Int d, const std::vector<Vec>& positive) {
    std::vector<const Vec*> ok;
    for (auto& b : positive)
        if (coroot_pairing(rs, varpi, b) <= d) ok.push_back(&b);
    if (ok.empty()) throw Error(ErrorKind::NotARoot, "no root with pairing at most " + std::to_string(d));
    const Vec* best = ok.front();
    for (auto* b : ok)
        if (height(*b) > height(*best)) best = b;
    for (auto* b : ok)
        if (!leq_coefficientwise(*b, *best))
            throw Error(ErrorKind::Certificate, "incomparable maximal roots " + vec_str(*best) + " and " + vec_str(*b));
    return *best;
}

Vec apply_reflections(const RootSystem& rs, const std::vector<Vec>& roots, const Vec& lambda) {
    Vec mu = lambda;
    for (auto it = roots.rbegin(); it != roots.rend(); ++it) mu = rs.reflect(mu, *it);
    return mu;
}

Int parabolic_length(const RootSystem& rs, const Vec& mu) {
    Int l = 0;
    for (auto& b : rs.positive_roots)
        if (rs.pair(mu, b) < 0) ++l;
    return l;
}

Cascade cascade(const RootSystem& rs, int node, std::optional<Int> budget) {
    Cascade c;
    c.budget = budget;
    Vec varpi = rs.fundamental(node);
    Vec ap(rs.rank, 0);
    ap[node] = 1;
    std::vector<Vec> system = rs.all_roots();
    Int left = budget.value_or(0);
    while (true) {
        if (budget && left <= 0) break;
        std::vector<Vec> comp = component_of(rs, system, ap);
        if (comp.empty()) break;
        std::vector<Vec> pos;
        for (auto& b : comp)
            if (is_positive(b)) pos.push_back(b);
        Vec t = budget ? theta_d(rs, varpi, left, pos) : theta_d(rs, varpi, 1'000'000, pos);
        Int d = coroot_pairing(rs, varpi, t);
        if (!c.steps.empty()) {
            if (!leq_coefficientwise(t, c.steps.back().theta)) c.monotone = false;
        }
        for (auto& s : c.steps)
            if (rs.pair_roots(t, s.theta) != 0 || rs.pair_roots(s.theta, t) != 0) c.orthogonal = false;
        c.steps.push_back({t, d});
        c.total += d;
        left -= d;
        if (rs.pair_roots(ap, t) != 0) break;
        std::vector<Vec> next;
        for (auto& b : comp)
            if (rs.pair_roots(b, t) == 0) next.push_back(b);
        system.swap(next);
    }
    std::vector<Vec> refl;
    for (auto& s : c.steps) refl.push_back(s.theta);
    c.image = apply_reflections(rs, refl, varpi);
    return c;
}

bool cascade_stable(const RootSystem& rs, int node) {
    Cascade u = cascade(rs, node);
    for (Int b : {u.total, u.total + 1}) {
        Cascade c = cascade(rs, node, b);
        if (c.steps.size() != u.steps.size()) return false;
        for (size_t i = 0; i < c.steps.size(); ++i)
            if (c.steps[i].theta != u.steps[i].theta || c.steps[i].d != u.steps[i].d) return false;
    }
    return true;
}

Int dmax_alg(const RootSystem& rs, int node) { return cascade(rs, node).total; }

bool full_schubert_check(const RootSystem& rs, int node, const std::vector<Vec>& reflections) {
    Vec varpi = rs.fundamental(node);
    Vec mu = apply_reflections(rs, reflections, varpi);
    bool by_length = parabolic_length(rs, mu) == parabolic_dimension(rs, node);
    Vec lowest = weyl_apply(rs, longest_element(rs), varpi);
    bool by_weight = mu == lowest;
    if (by_length != by_weight) throw Error(ErrorKind::Certificate, "coset length and weight disagree");
    return by_length;
}

std::vector<ChainSpec> enumerate_chains(const RootSystem& rs, const Vec& varpi, const std::vector<Int>& degrees,
                                        const std::optional<Vec>& target) {
    std::vector<ChainSpec> out;
    ChainSpec cur;
    cur.degrees = degrees;
    std::function<void(size_t, const Vec&)> go = [&](size_t m, const Vec& mu) {
        if (m == degrees.size()) {
            if (!target || mu == *target) {
                ChainSpec c = cur;
                c.endpoint = mu;
                out.push_back(c);
            }
            return;
        }
        for (auto& a : rs.positive_roots) {
            if (rs.pair(mu, a) != degrees[m]) continue;
            cur.roots.push_back(a);
            go(m + 1, rs.reflect(mu, a));
            cur.roots.pop_back();
        }
    };
    for (Int d : degrees)
        if (d < 1) throw Error(ErrorKind::Parse, "chain degrees must be positive");
    go(0, varpi);
    return out;
}

std::vector<ChainSpec> enumerate_chains_total(const RootSystem& rs, const Vec& varpi, Int total,
                                              const std::optional<Vec>& target) {
    std::vector<ChainSpec> out;
    std::vector<Int> parts;
    std::function<void(Int)> comp = [&](Int left) {
        if (left == 0) {
            auto c = enumerate_chains(rs, varpi, parts, target);
            out.insert(out.end(), c.begin(), c.end());
            return;
        }
        for (Int p = left; p >= 1; --p) {
            parts.push_back(p);
            comp(left - p);
            parts.pop_back();
        }
    };
    comp(total);
    return out;
}

DimIdentity dim_identity(const RootSystem& rs, int node, Int d, Int delta_d3) {
    DimIdentity r;
    if (d > 0) {
        Cascade c = cascade(rs, node, d);
        r.length_wd = parabolic_length(rs, c.image);
    }
    r.predicted = d * index_by_root_sum(rs, node) - r.length_wd - delta_d3;
    r.inconsistent = r.predicted < 0;
    return r;
}

std::vector<std::pair<char, int>> finite_types(int max_rank) {
    std::vector<std::pair<char, int>> out;
    for (int n = 1; n <= max_rank; ++n) out.push_back({'A', n});
    for (int n = 2; n <= max_rank; ++n) out.push_back({'B', n});
    for (int n = 2; n <= max_rank; ++n) out.push_back({'C', n});
    for (int n = 4; n <= max_rank; ++n) out.push_back({'D', n});
    for (int n = 6; n <= std::min(8, max_rank); ++n) out.push_back({'E', n});
    if (max_rank >= 4) out.push_back({'F', 4});
    if (max_rank >= 2) out.push_back({'G', 2});
    return out;
}

std::vector<CensusRow> curves_census(int max_rank) {
    std::vector<CensusRow> rows;
    for (auto [s, n] : finite_types(max_rank)) {
        RootSystem rs = RootSystem::build(s, n);
        for (int node = 0; node < n; ++node) {
            CensusRow r;
            r.type = std::string(1, s) + std::to_string(n);
            r.node = node + 1;
            r.dim = parabolic_dimension(rs, node);
            r.c1 = index_by_root_sum(rs, node);
            r.run = cascade(rs, node);
            r.stable = cascade_stable(rs, node);
            std::vector<Vec> refl;
            for (auto& st : r.run.steps) refl.push_back(st.theta);
            r.full_schubert = full_schubert_check(rs, node, refl);
            rows.push_back(std::move(r));
        }
    }
    return rows;
}

std::string census_json(const std::vector<CensusRow>& rows) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (auto& r : rows) {
        nlohmann::ordered_json j;
        j["type"] = r.type;
        j["node"] = r.node;
        j["dim"] = r.dim;
        j["c1"] = r.c1;
        j["dmax_alg"] = r.run.total;
        nlohmann::ordered_json steps = nlohmann::ordered_json::array();
        for (auto& s : r.run.steps) steps.push_back({{"theta", s.theta}, {"d", s.d}});
        j["steps"] = steps;
        j["orthogonal"] = r.run.orthogonal;
        j["monotone"] = r.run.monotone;
        j["stable"] = r.stable;
        j["full_schubert"] = r.full_schubert;
        j["conjectural"] = true;
        arr.push_back(j);
    }
    return arr.dump(2);
}

std::string census_csv(const std::vector<CensusRow>& rows) {
    std::ostringstream os;
    os << "type,node,dim,c1,dmax_alg,steps,orthogonal,monotone,stable,full_schubert\n";
    for (auto& r : rows) {
        os << r.type << ',' << r.node << ',' << r.dim << ',' << r.c1 << ',' << r.run.total << ",\"";
        for (size_t i = 0; i < r.run.steps.size(); ++i) {
            if (i) os << ';';
            os << vec_str(r.run.steps[i].theta) << ':' << r.run.steps[i].d;
        }
        os << "\"," << r.run.orthogonal << ',' << r.run.monotone << ',' << r.stable << ',' << r.full_schubert << '\n';
    }
    return os.str();
}

}  // namespace qs
