// qschub: command-line front end.
// Exit codes: 0 ok, 1 internal failure, 2 bad input, 3 a printed claim is
// contradicted by exact computation.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "qschub/curves.hpp"
#include "qschub/invariants.hpp"
#include "qschub/localization.hpp"
#include "qschub/qchevalley.hpp"
#include "qschub/quantum_ring.hpp"

using namespace qs;
using ojson = nlohmann::ordered_json;

namespace {

constexpr const char* kVersion = "1.0.0";
constexpr int kFalsified = 3;

struct Options {
    bool json = false;
    unsigned seed = 0;
    std::vector<std::string> argv;
};

struct Result {
    ojson json;
    std::string text;
    int code = 0;
};

RootSystem parse_type(const std::string& t) {
    if (t.size() < 2 || !std::isalpha(static_cast<unsigned char>(t[0])))
        throw Error(ErrorKind::InvalidType, "bad type " + t);
    int rank = 0;
    try {
        size_t used = 0;
        rank = std::stoi(t.substr(1), &used);
        if (used != t.size() - 1) throw std::invalid_argument(t);
    } catch (const std::exception&) {
        throw Error(ErrorKind::InvalidType, "bad type " + t);
    }
    return RootSystem::build(static_cast<char>(std::toupper(static_cast<unsigned char>(t[0]))), rank);
}

// generator names of the catalog presentation, a label "[..]" or a word
int resolve_class(const Space& sp, const std::string& text) {
    try {
        auto p = catalog_presentation(sp.name());
        auto it = p.generators.find(text);
        if (it != p.generators.end()) return sp.index_of_spec(it->second);
    } catch (const Error&) {
    }
    return sp.index_of_spec(text);
}

ojson class_json(const Space& sp, int c) {
    ojson j;
    j["index"] = c;
    j["length"] = sp.classes[c].length;
    j["word"] = sp.classes[c].rep.str();
    j["weight"] = sp.classes[c].weight;
    if (sp.labeled()) j["label"] = sp.classes[c].label;
    return j;
}

mpq_class parse_rational(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw Error(ErrorKind::Parse, "bad rational " + s);
    q.canonicalize();
    return q;
}

std::pair<Int, Int> parse_window(const std::string& w) {
    auto pos = w.find("..");
    if (pos == std::string::npos) throw Error(ErrorKind::Parse, "window must look like a..b");
    try {
        return {std::stol(w.substr(0, pos)), std::stol(w.substr(pos + 2))};
    } catch (const std::exception&) {
        throw Error(ErrorKind::Parse, "bad window " + w);
    }
}

std::vector<Int> parse_list(const std::string& s) {
    std::vector<Int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(std::stol(item));
        } catch (const std::exception&) {
            throw Error(ErrorKind::Parse, "bad list " + s);
        }
    }
    if (out.empty()) throw Error(ErrorKind::Parse, "empty list");
    return out;
}

// ---------------------------------------------------------------------------

Result cmd_roots(const std::string& type) {
    RootSystem rs = parse_type(type);
    Result r;
    r.json["type"] = rs.name();
    r.json["rank"] = rs.rank;
    r.json["cartan"] = rs.cartan;
    r.json["count"] = rs.positive_roots.size();
    r.json["highest_root"] = rs.highest_root;
    r.json["highest_short_root"] = rs.highest_short_root;
    r.json["positive_roots"] = rs.positive_roots;
    std::ostringstream os;
    os << rs.name() << ": " << rs.positive_roots.size() << " positive roots\n";
    os << "highest root " << vec_str(rs.highest_root) << ", highest short root " << vec_str(rs.highest_short_root) << "\n";
    for (auto& b : rs.positive_roots) os << "  " << vec_str(b) << "\n";
    r.text = os.str();
    return r;
}

Result cmd_classes(const std::string& name) {
    auto sp = Space::get(name);
    Result r;
    r.json["space"] = sp->name();
    r.json["dim"] = sp->dim;
    r.json["c1"] = sp->c1;
    r.json["flavor"] = flavor_name(sp->flavor);
    ojson arr = ojson::array();
    std::ostringstream os;
    os << sp->name() << " (" << flavor_name(sp->flavor) << "), dim " << sp->dim << ", c1 " << sp->c1 << ", " << sp->size()
       << " classes\n";
    for (int c = 0; c < static_cast<int>(sp->size()); ++c) {
        arr.push_back(class_json(*sp, c));
        os << "  " << c << "  l=" << sp->classes[c].length << "  " << sp->classes[c].rep.str();
        if (sp->labeled()) os << "  " << vec_str(sp->classes[c].label);
        os << "\n";
    }
    r.json["classes"] = arr;
    r.text = os.str();
    return r;
}

Result cmd_hasse(const std::string& name, const std::string& window, const std::string& dot) {
    auto sp = Space::get(name);
    auto [lo, hi] = window.empty() ? std::pair<Int, Int>{0, sp->dim} : parse_window(window);
    std::string g = hasse_dot(*sp, lo, hi);
    Result r;
    r.json["space"] = sp->name();
    r.json["window"] = {lo, hi};
    if (!dot.empty()) {
        std::ofstream out(dot);
        if (!out) throw Error(ErrorKind::Parse, "cannot write " + dot);
        out << g;
        r.json["dot_file"] = dot;
        r.text = "wrote " + dot + "\n";
    } else {
        r.json["dot"] = g;
        r.text = g;
    }
    return r;
}

Result cmd_chevalley(const std::string& name, const std::string& cls, int power) {
    if (power < 0) throw Error(ErrorKind::Parse, "power must be nonnegative");
    auto sp = Space::get(name);
    int c = resolve_class(*sp, cls);
    ClassVector v = ClassVector::basis(c);
    for (int k = 0; k < power; ++k) v = quantum_chevalley(*sp, v);
    Result r;
    r.json["space"] = sp->name();
    r.json["class"] = class_json(*sp, c);
    r.json["power"] = power;
    r.json["result"] = ojson::parse(class_vector_json(*sp, v));
    r.text = "h^" + std::to_string(power) + " * " + class_name(*sp, c) + " = " + class_vector_str(*sp, v) + "\n";
    return r;
}

Result cmd_degree(const std::string& name, const std::string& cls, const std::vector<std::string>& pair) {
    auto sp = Space::get(name);
    Result r;
    r.json["space"] = sp->name();
    if (!cls.empty() == !pair.empty()) throw Error(ErrorKind::Parse, "give exactly one of --class and --pair");
    if (!cls.empty()) {
        int c = resolve_class(*sp, cls);
        mpz_class d = class_degree(*sp, c);
        r.json["class"] = class_json(*sp, c);
        r.json["degree"] = d.get_str();
        r.text = "deg " + class_name(*sp, c) + " = " + d.get_str() + "\n";
    } else {
        int u = resolve_class(*sp, pair.at(0)), v = resolve_class(*sp, pair.at(1));
        mpz_class d = product_degree(*sp, u, v);
        r.json["pair"] = {class_json(*sp, u), class_json(*sp, v)};
        r.json["degree"] = d.get_str();
        r.text = "deg " + pair[0] + " * " + pair[1] + " = " + d.get_str() + "\n";
    }
    return r;
}

Result cmd_presentation(const std::string& name, bool verify, bool errata) {
    Presentation p = catalog_presentation(name);
    if (errata) p = with_errata(p);
    Result r;
    r.json["space"] = p.space;
    r.json["relations"] = p.relation_text;
    std::ostringstream os;
    os << p.space << (errata && !catalog_presentation(name).errata.empty() ? " (errata applied)" : "") << "\n";
    for (auto& t : p.relation_text) os << "  " << t << "\n";
    if (!p.errata.empty()) {
        ojson e = ojson::array();
        for (auto& [i, t] : p.errata) e.push_back({{"index", i}, {"relation", t}});
        r.json["errata"] = e;
    }
    if (verify) {
        PresentationReport rep = verify_presentation(p);
        ojson v;
        v["pass"] = rep.pass;
        v["dmax"] = rep.dmax;
        v["relation_degrees"] = rep.relation_degrees;
        v["dims"] = rep.dims;
        v["oracle"] = rep.oracle;
        v["free"] = rep.free;
        v["module_rank"] = rep.module_rank;
        if (rep.minimal_polynomial_ok) {
            v["minimal_polynomial"] = rep.minimal_polynomial;
            v["minimal_polynomial_ok"] = *rep.minimal_polynomial_ok;
        }
        if (rep.classical_ok) {
            ojson cl = ojson::array();
            for (auto& c : rep.classical)
                cl.push_back({{"index", c.index}, {"degree", c.degree}, {"vanishes", c.vanishes}, {"residual_terms", c.residual_terms}});
            v["classical"] = cl;
            v["classical_ok"] = *rep.classical_ok;
        }
        v["message"] = rep.message;
        r.json["verify"] = v;
        bool ok = rep.pass && rep.classical_ok.value_or(true);
        os << (rep.pass ? "PASS" : "FAIL") << ": graded dimensions up to degree " << rep.dmax
           << (rep.first_bad < 0 ? " match" : " differ from") << " the quantum-monomial count; module rank " << rep.module_rank
           << "\n";
        os << "relation degrees:";
        for (int d : rep.relation_degrees) os << " " << d;
        os << "\n";
        if (rep.minimal_polynomial_ok) os << "characteristic polynomial of M_h: " << rep.minimal_polynomial << "\n";
        if (rep.classical_ok)
            for (auto& c : rep.classical)
                os << "relation " << c.index + 1 << " (degree " << c.degree << ") "
                   << (c.vanishes ? "vanishes" : "does NOT vanish") << " on Schubert classes\n";
        if (!ok) {
            os << "FALSIFIED: " << rep.message << "\n";
            auto orig = catalog_presentation(name);
            for (auto& [i, t] : orig.errata)
                if (!errata) os << "corrected relation " << i + 1 << ": " << t << " (rerun with --errata)\n";
            r.code = kFalsified;
        }
    }
    r.text = os.str();
    return r;
}

Result cmd_semisimple(const std::string& name, const std::string& qtext) {
    Result r;
    std::ostringstream os;
    r.json["space"] = name;
    r.json["q"] = qtext;
    SemisimpleReport rep;
    auto slash = name.find('/');
    std::string base = name.substr(0, slash);
    std::string par = slash == std::string::npos ? "" : name.substr(slash + 1);
    if (!base.empty() && base[0] == 'A' && par.find(',') != std::string::npos) {
        // point-hyperplane incidence: two quantum parameters
        int n = parse_type(base).rank;
        auto qs_ = qtext;
        auto comma = qs_.find(',');
        if (comma == std::string::npos) throw Error(ErrorKind::Parse, "incidence variety needs --q a,b");
        IncidenceReport ir = incidence(n, parse_rational(qs_.substr(0, comma)), parse_rational(qs_.substr(comma + 1)));
        rep.dim = ir.algebra_dim;
        rep.trace_rank = ir.points;
        rep.semisimple = ir.semisimple;
        r.json["admissible"] = ir.admissible;
    } else {
        Presentation p;
        SpaceId id = parse_space(name);
        bool in_catalog = false;
        for (auto& s : catalog_spaces())
            if (s == id.name()) in_catalog = true;
        if (in_catalog) p = with_errata(catalog_presentation(id.name()));
        else if (id.series == 'B' && id.node == 1) p = bn_presentation(id.rank);
        else throw Error(ErrorKind::Unsupported, "no presentation for " + name);
        PresentationAlgebra pa(p, 2 * p.dim + 2);
        rep = semisimple(pa, parse_rational(qtext));
        r.json["det"] = rep.det.get_str();
    }
    r.json["dim"] = rep.dim;
    r.json["trace_rank"] = rep.trace_rank;
    r.json["semisimple"] = rep.semisimple;
    os << (rep.semisimple ? "SEMISIMPLE" : "NOT SEMISIMPLE") << " at q = " << qtext << " (dimension " << rep.dim
       << ", trace form rank " << rep.trace_rank << ")\n";
    r.text = os.str();
    return r;
}

Result cmd_dmax(const std::string& type, int node, std::optional<Int> budget) {
    RootSystem rs = parse_type(type);
    if (node < 1 || node > rs.rank) throw Error(ErrorKind::Parse, "node out of range");
    Cascade c = cascade(rs, node - 1, budget);
    Result r;
    r.json["type"] = rs.name();
    r.json["node"] = node;
    if (budget) r.json["budget"] = *budget;
    ojson steps = ojson::array();
    std::ostringstream os;
    os << rs.name() << "/P" << node << (budget ? " budget " + std::to_string(*budget) : std::string(" unbounded")) << "\n";
    for (auto& s : c.steps) {
        steps.push_back({{"theta", s.theta}, {"d", s.d}});
        os << "  theta " << vec_str(s.theta) << "  d " << s.d << "\n";
    }
    r.json["steps"] = steps;
    r.json["total"] = c.total;
    r.json["image"] = c.image;
    r.json["orthogonal"] = c.orthogonal;
    r.json["monotone"] = c.monotone;
    if (!budget) r.json["stable"] = cascade_stable(rs, node - 1);
    os << (budget ? "total " : "dmax_alg ") << c.total << "\n";
    r.text = os.str();
    return r;
}

Result cmd_chains(const std::string& name, const std::string& degrees, const std::string& endpoint) {
    auto sp = Space::get(name);
    auto degs = parse_list(degrees);
    std::optional<Vec> target;
    if (endpoint == "lowest") target = weyl_apply(sp->rs, longest_element(sp->rs), sp->varpi);
    else if (!endpoint.empty()) target = sp->classes[resolve_class(*sp, endpoint)].weight;
    auto chains = enumerate_chains(sp->rs, sp->varpi, degs, target);
    Result r;
    r.json["space"] = sp->name();
    r.json["degrees"] = degs;
    if (target) r.json["endpoint"] = *target;
    r.json["count"] = chains.size();
    ojson arr = ojson::array();
    std::ostringstream os;
    os << chains.size() << " chain(s)\n";
    for (auto& ch : chains) {
        arr.push_back({{"roots", ch.roots}, {"degrees", ch.degrees}, {"endpoint", ch.endpoint}});
        os << " ";
        for (size_t i = 0; i < ch.roots.size(); ++i) os << " " << vec_str(ch.roots[i]) << ":" << ch.degrees[i];
        os << "  -> " << vec_str(ch.endpoint) << "\n";
    }
    r.json["chains"] = arr;
    r.text = os.str();
    return r;
}

Result cmd_gw1(const std::string& name, const std::string& u, const std::string& v, const std::string& w) {
    auto sp = Space::get(name);
    int cu = resolve_class(*sp, u), cv = resolve_class(*sp, v);
    int cw = w.empty() ? sp->point() : resolve_class(*sp, w);
    GwReport g = gw_degree_one(*sp, cu, cv, cw);
    Result r;
    r.json["space"] = sp->name();
    r.json["u"] = class_json(*sp, cu);
    r.json["v"] = class_json(*sp, cv);
    r.json["w"] = class_json(*sp, cw);
    r.json["balanced"] = g.balanced;
    r.json["value"] = g.value;
    r.json["line_variety"] = g.F;
    r.json["wZ"] = g.wZ.str();
    r.json["closed_form_ok"] = g.closed_form_ok;
    r.json["wz_bullets_ok"] = g.wz_bullets_ok;
    std::ostringstream os;
    if (!g.balanced)
        os << "codimensions do not sum to dim + c1 = " << sp->dim + sp->c1 << ": invariant is 0\n";
    else
        os << "I_1 = " << g.value << "  (line variety " << g.F << ", w_Z = " << g.wZ.str() << ")\n";
    r.text = os.str();
    return r;
}

Result cmd_census(bool all, bool csv) {
    if (!all) throw Error(ErrorKind::Parse, "census needs --all");
    auto table = invariants_table();
    auto rows = curves_census(8);
    bool table_ok = true;
    for (auto& t : table) table_ok = table_ok && t.ok();
    Result r;
    r.json["invariants"] = ojson::parse(table_json(table));
    r.json["table_ok"] = table_ok;
    r.json["dmax"] = ojson::parse(census_json(rows));
    std::ostringstream os;
    if (csv) {
        os << table_csv(table) << "\n" << census_csv(rows);
    } else {
        os << "invariants table: " << (table_ok ? "all rows match" : "MISMATCH") << "\n";
        for (auto& t : table)
            if (!t.ok()) os << "  " << t.type << " " << t.kind << ": dim " << t.computed.dim << " (printed " << t.printed_dim << ")\n";
        os << "\n" << census_csv(rows);
    }
    if (!table_ok) r.code = kFalsified;
    r.text = os.str();
    return r;
}

int emit(const Options& o, const std::string& verb, const Result& r) {
    if (o.json) {
        ojson env;
        ojson m;
        m["tool"] = "qschub";
        m["version"] = kVersion;
        m["verb"] = verb;
        m["argv"] = o.argv;
        m["seed"] = o.seed;
        env["manifest"] = m;
        env["result"] = r.json;
        env["exit_code"] = r.code;
        std::cout << env.dump(2) << "\n";
    } else {
        std::cout << r.text;
    }
    return r.code;
}

int error_code(ErrorKind k) {
    switch (k) {
        case ErrorKind::Certificate:
            return 1;
        default:
            return 2;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quantum Schubert calculus on adjoint and coadjoint homogeneous spaces"};
    app.require_subcommand(1);
    Options o;
    for (int i = 1; i < argc; ++i) o.argv.push_back(argv[i]);
    app.add_flag("--json", o.json, "stable JSON output");
    app.add_option("--seed", o.seed, "seed for any sampled order");

    std::string type, space, window, dot, cls, qtext = "1", degrees, endpoint, u, v, w;
    std::vector<std::string> pair;
    int power = 1, node = 0;
    Int budget = 0;
    bool verify = false, errata = false, all = false, csv = false;

    auto* roots = app.add_subcommand("roots", "root system data");
    roots->add_option("type", type, "type, e.g. E8")->required();
    auto* classes = app.add_subcommand("classes", "Schubert classes of a space");
    classes->add_option("space", space, "space, e.g. F4/P1")->required();
    auto* hasse = app.add_subcommand("hasse", "quantum Hasse diagram as DOT");
    hasse->add_option("space", space)->required();
    hasse->add_option("--window", window, "length window a..b");
    hasse->add_option("--dot", dot, "output file");
    auto* chev = app.add_subcommand("chevalley", "apply quantum Chevalley multiplication by h");
    chev->add_option("space", space)->required();
    chev->add_option("--class", cls, "label, word or generator name")->required();
    chev->add_option("--power", power, "number of applications");
    auto* degree = app.add_subcommand("degree", "degree of a class or of a product");
    degree->add_option("space", space)->required();
    degree->add_option("--class", cls);
    degree->add_option("--pair", pair)->expected(2);
    auto* pres = app.add_subcommand("presentation", "catalog presentation");
    pres->add_option("space", space)->required();
    pres->add_flag("--verify", verify, "check against the quantum-monomial count and Schubert classes");
    pres->add_flag("--errata", errata, "use the corrected relations");
    auto* ss = app.add_subcommand("semisimple", "trace-form semisimplicity at a value of q");
    ss->add_option("space", space)->required();
    ss->add_option("--q", qtext, "rational value (a,b for incidence varieties)");
    auto* dm = app.add_subcommand("dmax", "orthogonal cascade and d_max");
    dm->add_option("type", type)->required();
    dm->add_option("--node", node)->required();
    auto* budget_opt = dm->add_option("--budget", budget);
    auto* ch = app.add_subcommand("chains", "T-invariant chains of given degrees");
    ch->add_option("space", space)->required();
    ch->add_option("--degrees", degrees, "d1,d2,...")->required();
    ch->add_option("--endpoint", endpoint, "lowest, or a class");
    auto* gw = app.add_subcommand("gw1", "degree-one Gromov-Witten invariant via the variety of lines");
    gw->add_option("space", space)->required();
    gw->add_option("--u", u)->required();
    gw->add_option("--v", v)->required();
    gw->add_option("--w", w, "defaults to the point class");
    auto* census = app.add_subcommand("census", "invariants table and d_max census");
    census->add_flag("--all", all);
    census->add_flag("--csv", csv);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        auto* sub = app.get_subcommands().front();
        std::string verb = sub->get_name();
        Result r;
        if (sub == roots) r = cmd_roots(type);
        else if (sub == classes) r = cmd_classes(space);
        else if (sub == hasse) r = cmd_hasse(space, window, dot);
        else if (sub == chev) r = cmd_chevalley(space, cls, power);
        else if (sub == degree) r = cmd_degree(space, cls, pair);
        else if (sub == pres) r = cmd_presentation(space, verify, errata);
        else if (sub == ss) r = cmd_semisimple(space, qtext);
        else if (sub == dm) r = cmd_dmax(type, node, budget_opt->count() ? std::optional<Int>(budget) : std::nullopt);
        else if (sub == ch) r = cmd_chains(space, degrees, endpoint);
        else if (sub == gw) r = cmd_gw1(space, u, v, w);
        else r = cmd_census(all, csv);
        return emit(o, verb, r);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return error_code(e.kind);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
