#include <logdgen/logdgen.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using json = nlohmann::ordered_json;
using namespace logdgen;

namespace {

enum class Format { TSV, JSON };

struct ParseFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Output

struct Report {
    std::string command;
    json inputs = json::object();
    std::vector<std::pair<std::string, std::string>> results;
    std::string status = "OK";

    void add(const std::string& name, const std::string& value) { results.emplace_back(name, value); }
    void add(const std::string& name, const Rational& q) { add(name, q.str()); }
    void add(const std::string& name, bool b) { add(name, std::string(b ? "true" : "false")); }

    void print(Format f) const {
        if (f == Format::JSON) {
            json res = json::array();
            for (auto& [n, v] : results) res.push_back({{"name", n}, {"value", v}});
            json out = {{"command", command}, {"inputs", inputs}, {"results", res}, {"status", status}};
            std::cout << out.dump(2) << "\n";
            return;
        }
        for (auto& [n, v] : results) std::cout << n << "\t" << v << "\n";
        std::cout << "status\t" << status << "\n";
    }
};

// Tables are a header plus string rows, printed as TSV or a JSON array.
struct Table {
    std::string name;
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    json to_json() const {
        json arr = json::array();
        for (auto& r : rows) {
            json o = json::object();
            for (std::size_t i = 0; i < header.size(); ++i) o[header[i]] = r[i];
            arr.push_back(o);
        }
        return arr;
    }

    void print_tsv(bool titled) const {
        if (titled) std::cout << "# Table " << name << "\n";
        for (std::size_t i = 0; i < header.size(); ++i) std::cout << (i ? "\t" : "") << header[i];
        std::cout << "\n";
        for (auto& r : rows) {
            for (std::size_t i = 0; i < r.size(); ++i) std::cout << (i ? "\t" : "") << r[i];
            std::cout << "\n";
        }
    }
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

// ---------------------------------------------------------------------------
// Tables, each recomputed and compared with the literal data.

Table table_i(bool& ok) {
    Table t{"I", {"case", "base", "cover", "r", "n", "e_p", "o_p", "c_p", "delta_p", "grid_points", "match"}, {}};
    auto grid = cover_case_grid();
    for (auto& row : tables::table_i) {
        long checked = 0;
        bool match = true;
        for (auto& c : grid) {
            if (c.case_id != row.case_id) continue;
            auto got = duval_record(c);
            auto want = table_i_closed_form(c);
            match = match && got.e_p == want.e_p && got.o_p == want.o_p && got.c_p == want.c_p &&
                    got.delta_p == want.delta_p;
            ++checked;
        }
        ok = ok && match;
        t.rows.push_back({std::to_string(row.case_id), row.base, row.cover, row.r, row.n_range, row.e_p, row.o_p,
                          row.c_p, row.delta_p, std::to_string(checked), yes_no(match)});
    }
    return t;
}

Table table_iv(bool& ok) {
    Table t{"IV", {"row", "degree", "singularities", "e_orb", "e_orb_literal", "match"}, {}};
    auto cat = delpezzo_catalog();
    for (std::size_t i = 0; i < cat.size(); ++i) {
        auto& e = cat[i];
        bool match = e.e_orb == Rational::parse(tables::table_iv[i].e_orb);
        ok = ok && match;
        t.rows.push_back({std::to_string(e.row), std::to_string(e.degree), singularity_sum_str(e.singularities),
                          e.e_orb.str(), tables::table_iv[i].e_orb, yes_no(match)});
    }
    return t;
}

Table table_v(bool& ok) {
    Table t{"V", {"fibre", "ell", "mu", "s", "match"}, {}};
    for (auto& row : tables::table_v) {
        std::string label = row.label;
        bool match = true;
        if (row.ell == 0) {
            for (long m : {1L, 2L, 3L, 5L}) {
                auto inv = elliptic_table(KodairaLabel::In(1), m);
                match = match && inv.ell == m && inv.mu == 0 && inv.s == Rational(m - 1, m);
            }
            t.rows.push_back({label, "m", row.mu, row.s, yes_no(match)});
        } else {
            auto inv = elliptic_table(label == "I*_b" ? KodairaLabel::Istar(0) : KodairaLabel::parse(label));
            match = inv.ell == row.ell && inv.mu == Rational::parse(row.mu) && inv.s == Rational::parse(row.s);
            t.rows.push_back({label, std::to_string(inv.ell), inv.mu.str(), inv.s.str(), yes_no(match)});
        }
        ok = ok && match;
    }
    return t;
}

Table table_quotient(int kind, bool& ok) {
    Table t{kind == 1 ? "VI" : "VII", {"row", "vector", "mu", "s", "divisibility", "c_star", "match"}, {}};
    auto checks = regenerate_table_vi_vii();
    for (std::size_t i = 0; i < checks.size(); ++i) {
        auto& q = checks[i];
        auto& row = tables::table_vi_vii[i];
        if (q.vector.kind != kind) continue;
        ok = ok && q.matches;
        std::string mu = row.mu_den == 1 ? std::to_string(row.mu_num) + "/l"
                                         : std::to_string(row.mu_num) + "/(" + std::to_string(row.mu_den) + "l)";
        std::string sw = row.s_w == 1 ? "l" : std::to_string(row.s_w) + "l";
        std::string s = "(" + sw + "-" + std::to_string(row.s_q) + ")/" + sw;
        t.rows.push_back({std::to_string(q.row), q.vector.str(), mu, s, std::to_string(q.divisibility) + "|l",
                          q.c_star.str(), yes_no(q.matches)});
    }
    return t;
}

int cmd_tables(const std::string& which, Format f) {
    bool ok = true;
    std::vector<Table> out;
    if (which == "I" || which == "ALL") out.push_back(table_i(ok));
    if (which == "IV" || which == "ALL") out.push_back(table_iv(ok));
    if (which == "V" || which == "ALL") out.push_back(table_v(ok));
    if (which == "VI" || which == "ALL") out.push_back(table_quotient(1, ok));
    if (which == "VII" || which == "ALL") out.push_back(table_quotient(2, ok));
    if (f == Format::JSON) {
        if (out.size() == 1) {
            std::cout << out[0].to_json().dump(2) << "\n";
        } else {
            json o = json::object();
            for (auto& t : out) o[t.name] = t.to_json();
            std::cout << o.dump(2) << "\n";
        }
    } else {
        for (std::size_t i = 0; i < out.size(); ++i) {
            if (i) std::cout << "\n";
            out[i].print_tsv(out.size() > 1);
        }
    }
    if (!ok) std::cerr << "logdgen: recomputed table does not match the literal data\n";
    return ok ? 0 : 1;
}

// ---------------------------------------------------------------------------
// Input parsing

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseFailure("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    std::string text = ss.str();
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        // The message already carries the line and column.
        throw ParseFailure(e.what());
    }
}

Rational rational_of(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    throw ParseFailure("expected an integer or a \"p/q\" string, got " + j.dump());
}

StandardCoeff coeff_of(const json& j) {
    if (j.is_string() && (j == "inf" || j == "infinity")) return StandardCoeff::infinity();
    if (j.is_number_integer()) return StandardCoeff::finite(j.get<long>());
    throw ParseFailure("expected a positive integer or \"inf\" for b, got " + j.dump());
}

template <class T>
T field(const json& o, const char* key, T fallback) {
    if (!o.contains(key)) return fallback;
    return o.at(key).get<T>();
}

DualGraph graph_of(const json& j) {
    DualGraph g;
    try {
        for (auto& v : j.at("vertices")) {
            CurveVertex c;
            c.id = v.at("id").get<std::string>();
            c.self_int = field<long>(v, "self_int", 0);
            c.genus = field<long>(v, "genus", 0);
            c.mult = field<long>(v, "mult", 1);
            c.cusps = field<long>(v, "cusps", 0);
            c.boundary = v.contains("boundary") ? rational_of(v.at("boundary")) : Rational(0);
            c.role = parse_role(field<std::string>(v, "role", "exceptional"));
            g.add(c);
        }
        if (j.contains("edges"))
            for (auto& e : j.at("edges")) g.link(e.at("a").get<std::string>(), e.at("b").get<std::string>(), field<long>(e, "w", 1));
        if (j.contains("tangency"))
            for (auto& [id, c] : j.at("tangency").items()) g.tangency[id] = c.get<long>();
        if (j.contains("concurrent"))
            for (auto& grp : j.at("concurrent")) g.concurrent.push_back(grp.get<std::vector<std::string>>());
    } catch (const json::exception& e) {
        throw ParseFailure(std::string("graph schema: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw ParseFailure(std::string("graph schema: ") + e.what());
    }
    g.validate();
    return g;
}

// ---------------------------------------------------------------------------
// Commands over files

int cmd_graph(const std::string& path, const std::string& action, Report& rep) {
    rep.inputs = {{"file", path}, {"action", action}};
    DualGraph g = graph_of(load_json(path));
    if (action == "recognize") {
        auto none = std::string("UNRECOGNIZED");
        auto dv = recognize_duval(g);
        auto kd = recognize_kodaira(g);
        auto hc = recognize_half_catalog(g);
        auto ft = recognize_fibre_type(g);
        rep.add("duval", dv ? dv->str() : none);
        rep.add("kodaira", kd ? kd->str() : none);
        rep.add("half_catalog", hc ? hc->str() : none);
        rep.add("fibre_type", ft ? ft->str() : none);
    } else if (action == "discrepancies") {
        for (auto& [id, a] : pullback_coefficients(g)) rep.add(id, a);
    } else {
        rep.add("class", std::string(to_string(classify_pair(g))));
    }
    return 0;
}

int cmd_euler(const std::string& path, Report& rep) {
    rep.inputs = {{"file", path}};
    json j = load_json(path);
    std::vector<FibreComponentData> comps;
    try {
        for (auto& c : j.at("components")) {
            FibreComponentData d{c.at("m").get<long>(), rational_of(c.at("e_orb")), {}};
            if (c.contains("deltas"))
                for (auto& x : c.at("deltas")) d.deltas.push_back(rational_of(x));
            comps.push_back(std::move(d));
        }
    } catch (const json::exception& e) {
        throw ParseFailure(std::string("euler schema: ") + e.what());
    }
    for (auto& c : comps) {
        if (c.m < 1) throw DomainError("component multiplicity must be positive");
        for (auto& d : c.deltas)
            if (d < 0) throw DomainError("negative delta " + d.str() + " is impossible");
    }
    rep.add("e_top", euler_degenerate_fibre(comps));
    rep.add("chi_zero_consistent", chi_zero_consistent(comps));
    return 0;
}

int cmd_mw(const std::string& path, Report& rep) {
    rep.inputs = {{"file", path}};
    json j = load_json(path);
    std::vector<FibreSpec> fibres;
    Rational target;
    long chi = 1, po_max = 0;
    try {
        target = rational_of(j.at("target"));
        chi = field<long>(j, "chi", 1);
        po_max = field<long>(j, "po_max", 0);
        if (j.contains("fibres"))
            for (auto& f : j.at("fibres"))
                fibres.push_back({KodairaLabel::parse(f.at("label").get<std::string>()), f.at("components").get<long>()});
    } catch (const json::exception& e) {
        throw ParseFailure(std::string("mw schema: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw DomainError(std::string("unsupported fibre label: ") + e.what());
    }
    for (auto& f : fibres)
        if (f.label.kind != KodairaLabel::I && f.label.kind != KodairaLabel::I_STAR && f.components != 1)
            throw DomainError("fibre " + f.label.str() + " has no contribution table");
    auto configs = solve_section_config(target, fibres, chi, po_max);
    rep.add("count", std::to_string(configs.size()));
    for (std::size_t i = 0; i < configs.size(); ++i) {
        std::string hits;
        for (std::size_t k = 0; k < configs[i].hits.size(); ++k)
            hits += (k ? "," : "") + fibres[k].label.str() + ":" + std::to_string(configs[i].hits[k]);
        rep.add("config" + std::to_string(i + 1), "po=" + std::to_string(configs[i].po) + (hits.empty() ? "" : " " + hits));
    }
    return 0;
}

int cmd_typ(const std::string& path, Report& rep) {
    rep.inputs = {{"file", path}};
    json j = load_json(path);
    TypRecord rec;
    HorizontalProfile prof;
    long genus = 0;
    try {
        auto label = [](const json& o) {
            long k = field<long>(o, "k", 0);
            return FibreTypeLabel::make(parse_fibre_kind(o.at("kind").get<std::string>()), coeff_of(o.at("b")), k);
        };
        for (auto& s : j.at("special")) rec.special.push_back(label(s));
        rec.generic = label(j.at("generic"));
        prof = parse_profile(j.at("profile").get<std::string>());
        genus = field<long>(j, "base_genus", 0);
    } catch (const json::exception& e) {
        throw ParseFailure(std::string("typ schema: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw ParseFailure(std::string("typ schema: ") + e.what());
    }
    std::string special;
    for (auto& l : rec.special) special += (special.empty() ? "" : " + ") + l.str();
    rep.add("special", special.empty() ? std::string("-") : special);
    rep.add("generic", rec.generic.str());
    rep.add("profile", std::string(to_string(prof)));
    rep.add("budget", boundary_budget(rec, prof));
    rep.add("consistent", check_typ(rec, prof, genus));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"logdgen: exact invariants of log surfaces, fibrations and degenerate fibres"};
    app.require_subcommand(1);
    std::string format = "tsv";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"tsv", "json"}));
    app.fallthrough();

    std::string which;
    auto* tables_cmd = app.add_subcommand("tables", "Regenerate and cross-check the numeric tables");
    tables_cmd->add_option("which", which, "I, IV, V, VI, VII or ALL")
        ->required()
        ->check(CLI::IsMember({"I", "IV", "V", "VI", "VII", "ALL"}));

    std::string graph_file, graph_action;
    auto* graph_cmd = app.add_subcommand("graph", "Analyse a dual graph file");
    graph_cmd->add_option("file", graph_file)->required();
    graph_cmd->add_option("action", graph_action)
        ->required()
        ->check(CLI::IsMember({"recognize", "discrepancies", "classify"}));

    std::string euler_file;
    auto* euler_cmd = app.add_subcommand("euler", "Euler number of a degenerate fibre");
    euler_cmd->add_option("file", euler_file)->required();

    auto* cbf_cmd = app.add_subcommand("cbf", "Canonical bundle formula invariants");
    cbf_cmd->require_subcommand(1);
    std::string inv_kind;
    long inv_r = 0, inv_a0 = 0, inv_a1 = 0, inv_a2 = 0, inv_ell = 0;
    auto* inv_cmd = cbf_cmd->add_subcommand("invariants", "mu*, s*, c* of a quotient datum");
    inv_cmd->add_option("kind", inv_kind)->required()->check(CLI::IsMember({"v1", "v2", "V1", "V2"}));
    inv_cmd->add_option("r", inv_r)->required();
    inv_cmd->add_option("a0", inv_a0)->required();
    inv_cmd->add_option("a1", inv_a1)->required();
    inv_cmd->add_option("a2", inv_a2)->required();
    inv_cmd->add_option("ell", inv_ell)->required();
    long bound_d = 0, bound_n = 0;
    auto* bound_cmd = cbf_cmd->add_subcommand("bound", "Bound on the number of singular fibres");
    bound_cmd->add_option("d", bound_d)->required();
    bound_cmd->add_option("n_va", bound_n)->required();
    std::string mori_s;
    long mori_b = 0, mori_n = 0;
    auto* mori_cmd = cbf_cmd->add_subcommand("mori", "Smallest (u, v) in Mori's estimate");
    mori_cmd->add_option("s", mori_s)->required();
    mori_cmd->add_option("b", mori_b)->required();
    mori_cmd->add_option("N", mori_n)->required();
    long nx_x = 0;
    auto* nx_cmd = cbf_cmd->add_subcommand("nx", "lcm of all n with phi(n) <= x");
    nx_cmd->add_option("x", nx_x)->required();

    std::string mw_file;
    auto* mw_cmd = app.add_subcommand("mw", "Section configurations of a given height");
    mw_cmd->add_option("file", mw_file)->required();

    std::string typ_file;
    auto* typ_cmd = app.add_subcommand("typ", "Check a fibration type record");
    typ_cmd->add_option("file", typ_file)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    Format f = format == "json" ? Format::JSON : Format::TSV;
    if (tables_cmd->parsed()) return cmd_tables(which, f);

    Report rep;
    int code = 0;
    try {
        if (graph_cmd->parsed()) {
            rep.command = "graph";
            code = cmd_graph(graph_file, graph_action, rep);
        } else if (euler_cmd->parsed()) {
            rep.command = "euler";
            code = cmd_euler(euler_file, rep);
        } else if (mw_cmd->parsed()) {
            rep.command = "mw";
            code = cmd_mw(mw_file, rep);
        } else if (typ_cmd->parsed()) {
            rep.command = "typ";
            code = cmd_typ(typ_file, rep);
        } else if (inv_cmd->parsed()) {
            rep.command = "cbf invariants";
            rep.inputs = {{"kind", inv_kind}, {"r", inv_r}, {"a", {inv_a0, inv_a1, inv_a2}}, {"ell", inv_ell}};
            auto v = PrimitiveVector::make(inv_kind == "v1" || inv_kind == "V1" ? 1 : 2, inv_r, {inv_a0, inv_a1, inv_a2});
            Rational mu = mu_star(v, inv_ell);
            rep.add("mu", mu);
            rep.add("s", s_star(1, inv_ell, mu));
            rep.add("c_star", mu * Rational(inv_ell));
            rep.add("divisibility", std::to_string(v.divisibility()));
        } else if (bound_cmd->parsed()) {
            rep.command = "cbf bound";
            rep.inputs = {{"d", bound_d}, {"n_va", bound_n}};
            rep.add("bound", fibre_bound(bound_d, bound_n).str());
        } else if (mori_cmd->parsed()) {
            rep.command = "cbf mori";
            rep.inputs = {{"s", mori_s}, {"b", mori_b}, {"N", mori_n}};
            Rational s;
            try {
                s = Rational::parse(mori_s);
            } catch (const std::exception& e) {
                std::cerr << "logdgen: " << e.what() << "\n";
                return 2;
            }
            auto sol = mori_feasible(s, mori_b, mori_n);
            if (sol) {
                rep.add("u", std::to_string(sol->u));
                rep.add("v", std::to_string(sol->v));
            } else {
                rep.add("result", std::string("INFEASIBLE"));
            }
        } else if (nx_cmd->parsed()) {
            rep.command = "cbf nx";
            rep.inputs = {{"x", nx_x}};
            rep.add("N", n_of_x(nx_x).str());
        }
    } catch (const ParseFailure& e) {
        rep.status = std::string("ParseError: ") + e.what();
        code = 1;
    } catch (const DomainError& e) {
        rep.status = std::string("DomainError: ") + e.what();
        code = 1;
    } catch (const std::domain_error& e) {
        rep.status = std::string("DomainError: ") + e.what();
        code = 1;
    }
    rep.print(f);
    return code;
}
