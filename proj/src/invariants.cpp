#include "qschub/invariants.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace qs {

ParabolicInvariants parabolic_invariants(const RootSystem& rs, const Vec& lambda) {
    ParabolicInvariants p;
    for (int i = 0; i < rs.rank; ++i)
        if (lambda[i] != 0) {
            if (lambda[i] < 0) throw Error(ErrorKind::InvalidType, "weight is not dominant");
            p.nodes.push_back(i);
            p.multiplicity.push_back(lambda[i]);
        }
    if (p.nodes.empty()) throw Error(ErrorKind::InvalidType, "zero weight");
    Vec s(rs.rank, 0);
    for (auto& b : rs.positive_roots) {
        bool rad = false;
        for (int i : p.nodes) rad = rad || b[i] > 0;
        if (!rad) continue;
        ++p.dim;
        for (int i = 0; i < rs.rank; ++i) s[i] += b[i];
    }
    for (size_t k = 0; k < p.nodes.size(); ++k) {
        Vec e(rs.rank, 0);
        e[p.nodes[k]] = 1;
        mpq_class c(rs.pair_roots(s, e), p.multiplicity[k]);
        c.canonicalize();
        p.c1.push_back(c);
    }
    return p;
}

std::string default_table_path() {
    if (const char* env = std::getenv("QSCHUB_DATA")) return std::string(env) + "/invariants_table.json";
#ifdef QSCHUB_DATA_DIR
    return std::string(QSCHUB_DATA_DIR) + "/invariants_table.json";
#else
    return "data/invariants_table.json";
#endif
}

namespace {

Int linear(const nlohmann::json& f, int n) { return f.at(0).get<Int>() * n + f.at(1).get<Int>(); }

}  // namespace

std::vector<TableCheck> invariants_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::Parse, "cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw Error(ErrorKind::Parse, path + ": " + e.what());
    }
    if (j.value("version", 0) != 1) throw Error(ErrorKind::Parse, path + ": unsupported version");
    std::vector<TableCheck> out;
    for (auto& row : j.at("rows")) {
        char series = row.at("type").get<std::string>().at(0);
        for (int n = row.at("min_rank").get<int>(); n <= row.at("max_rank").get<int>(); ++n) {
            RootSystem rs = RootSystem::build(series, n);
            for (const char* kind : {"adjoint", "coadjoint"}) {
                if (!row.contains(kind)) continue;
                const auto& e = row.at(kind);
                TableCheck t;
                t.type = std::string(1, series) + std::to_string(n);
                t.kind = kind;
                t.printed_weight.assign(n, 0);
                for (auto& w : e.at("weight")) {
                    int node = w.at(0).get<int>();
                    node = node < 0 ? n + node : node - 1;
                    t.printed_weight[node] += w.at(1).get<Int>();
                }
                t.printed_dim = static_cast<int>(linear(e.at("dim"), n));
                for (auto& c : e.at("c1")) t.printed_c1.push_back(mpq_class(linear(c, n)));
                const Vec& top = t.kind == "adjoint" ? rs.highest_root : rs.highest_short_root;
                t.weight = rs.root_to_weight(top);
                t.computed = parabolic_invariants(rs, t.weight);
                t.weight_ok = t.weight == t.printed_weight;
                t.dim_ok = t.computed.dim == t.printed_dim;
                t.c1_ok = t.computed.c1 == t.printed_c1;
                if (t.kind == "adjoint")
                    for (auto& c : t.computed.c1) t.dim_2c1 = t.dim_2c1 && mpq_class(t.computed.dim) == 2 * c - 1;
                out.push_back(t);
            }
        }
    }
    return out;
}

namespace {

std::string c1_str(const std::vector<mpq_class>& c) {
    std::string s;
    for (size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + c[i].get_str();
    return c.size() > 1 ? "(" + s + ")" : s;
}

}  // namespace

std::string table_json(const std::vector<TableCheck>& rows) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (auto& t : rows) {
        nlohmann::ordered_json j;
        j["type"] = t.type;
        j["kind"] = t.kind;
        j["weight"] = vec_str(t.weight);
        j["dim"] = t.computed.dim;
        j["c1"] = c1_str(t.computed.c1);
        j["printed_dim"] = t.printed_dim;
        j["printed_c1"] = c1_str(t.printed_c1);
        j["ok"] = t.ok();
        arr.push_back(j);
    }
    return arr.dump(2);
}

std::string table_csv(const std::vector<TableCheck>& rows) {
    std::ostringstream os;
    os << "type,kind,weight,dim,c1,printed_dim,printed_c1,ok\n";
    for (auto& t : rows)
        os << t.type << "," << t.kind << ",\"" << vec_str(t.weight) << "\"," << t.computed.dim << ",\"" << c1_str(t.computed.c1)
           << "\"," << t.printed_dim << ",\"" << c1_str(t.printed_c1) << "\"," << (t.ok() ? "yes" : "no") << "\n";
    return os.str();
}

}  // namespace qs
