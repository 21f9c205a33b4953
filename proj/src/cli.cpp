#include "uqmod/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>

#include "uqmod/io.hpp"
#include "uqmod/rep.hpp"
#include "uqmod/twist.hpp"

namespace uqmod {

namespace {

int exit_code_for(Err kind) {
    switch (kind) {
        case Err::NotDominant:
            return 3;
        case Err::UnboundedSearch:
            return 4;
        case Err::BudgetExceeded:
        case Err::DegreeBudgetExceeded:
        case Err::DimensionTooLarge:
            return 5;
        default:
            return 2;
    }
}

long env_long(const char* name, long fallback) {
    const char* v = std::getenv(name);
    if (!v) return fallback;
    return std::atol(v);
}

struct LoadedDatum {
    bool reduced = false;
    CartanDatum d;
    LinkingData lam;
    ReducedDatum rd;
};

LoadedDatum load_any_datum(const std::string& path) {
    LoadedDatum out;
    Json j = load_json_file(path);
    if (is_reduced_file(j)) {
        out.reduced = true;
        out.rd = reduced_from_json(j);
    } else {
        auto [d, lam] = datum_from_json(j);
        out.d = std::move(d);
        out.lam = std::move(lam);
    }
    return out;
}

// reduces a full datum to its non-degenerate core; identity for reduced files
struct Pipeline {
    LoadedDatum in;
    ProjectedDatum proj; // valid when !in.reduced
    ReducedDatum rd;
};

Pipeline reduce_pipeline(const std::string& path, bool swap_sides) {
    Pipeline p;
    p.in = load_any_datum(path);
    if (p.in.reduced) {
        p.rd = p.in.rd;
    } else {
        p.proj = project_datum(p.in.d, p.in.lam, swap_sides);
        p.rd = to_reduced(p.proj);
    }
    return p;
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

int cmd_validate(const std::string& path, std::ostream& out) {
    Json report;
    report["command"] = "validate";
    report["input"] = path;
    LoadedDatum in = load_any_datum(path);
    if (in.reduced) {
        report["kind"] = "reduced";
        report["n"] = in.rd.n();
        auto [gen, wit] = in.rd.is_generic();
        report["generic"] = gen;
        if (!gen) report["generic_witness"] = wit + 1;
        Json q = Json::array();
        for (int i = 0; i < in.rd.n(); ++i) {
            Json row = Json::array();
            for (int jj = 0; jj < in.rd.n(); ++jj) row.push_back(in.rd.q(i, jj).to_string());
            q.push_back(std::move(row));
        }
        report["braiding"] = std::move(q);
    } else {
        report["kind"] = "datum";
        report["theta"] = in.d.theta();
        Json q = Json::array();
        for (int i = 0; i < in.d.theta(); ++i) {
            Json row = Json::array();
            for (int jj = 0; jj < in.d.theta(); ++jj) row.push_back(in.d.q(i, jj).to_string());
            q.push_back(std::move(row));
        }
        report["braiding"] = std::move(q);
        Json comps = Json::array();
        const auto& cd = in.d.cartan().components();
        for (size_t c = 0; c < cd.components.size(); ++c) {
            Json cj;
            cj["type"] = cd.components[c].type + std::to_string(cd.components[c].rank);
            Json verts = Json::array();
            for (int v : cd.components[c].vertices) verts.push_back(v + 1);
            cj["vertices"] = std::move(verts);
            auto qJ = in.d.q_component(static_cast<int>(c));
            cj["q_J"] = qJ ? Json(qJ->to_string()) : Json(nullptr);
            comps.push_back(std::move(cj));
        }
        report["components"] = std::move(comps);
        auto [gen, wit] = in.d.is_generic();
        report["generic"] = gen;
        if (!gen) report["generic_witness"] = wit + 1;
        Json linkable = Json::array();
        for (int i = 0; i < in.d.theta(); ++i)
            for (int jj = i + 1; jj < in.d.theta(); ++jj)
                if (in.d.linkable(i, jj)) linkable.push_back(Json::array({i + 1, jj + 1}));
        report["linkable_pairs"] = std::move(linkable);
        Json linked = Json::array();
        for (auto [a, b] : in.lam.linked_pairs()) linked.push_back(Json::array({a + 1, b + 1}));
        report["linked_pairs"] = std::move(linked);
        report["warnings"] = in.lam.warnings();
        // odd-cycle status without failing validation
        try {
            auto part = bipartite_partition(in.d, in.lam);
            Json pj;
            Json mc = Json::array(), pc = Json::array();
            for (int c : part.minus_components) mc.push_back(c + 1);
            for (int c : part.plus_components) pc.push_back(c + 1);
            pj["minus_components"] = std::move(mc);
            pj["plus_components"] = std::move(pc);
            report["bipartite"] = true;
            report["partition"] = std::move(pj);
        } catch (const Error& e) {
            if (e.kind() != Err::OddCycle && e.kind() != Err::MultipleLinksFromVertex) throw;
            report["bipartite"] = false;
            report["bipartite_error"] = e.what();
        }
    }
    report["outcome"] = "ok";
    emit(out, report);
    return 0;
}

int cmd_graph(const std::string& path, const std::string& dot_path,
              const std::string& dynkin_path, bool swap_sides, std::ostream& out) {
    LoadedDatum in = load_any_datum(path);
    if (in.reduced) fail(Err::ParseError, "graph needs a full datum file");
    std::string dot = linking_dot(in.d, in.lam);
    if (!dot_path.empty()) {
        std::ofstream f(dot_path);
        if (!f) fail(Err::Io, "cannot write " + dot_path);
        f << dot;
    }
    if (!dynkin_path.empty()) {
        std::ofstream f(dynkin_path);
        if (!f) fail(Err::Io, "cannot write " + dynkin_path);
        f << dynkin_dot(in.d.cartan());
    }
    Json report;
    report["command"] = "graph";
    report["input"] = path;
    auto part = bipartite_partition(in.d, in.lam, swap_sides);
    Json pj;
    pj["n"] = part.n;
    Json t = Json::array();
    for (int v : part.t) t.push_back(v + 1);
    pj["t"] = std::move(t);
    Json im = Json::array(), ip = Json::array();
    for (int v : part.i_minus) im.push_back(v + 1);
    for (int v : part.i_plus) ip.push_back(v + 1);
    pj["I_minus"] = std::move(im);
    pj["I_plus"] = std::move(ip);
    report["partition"] = std::move(pj);
    if (dot_path.empty()) report["dot"] = dot;
    report["outcome"] = "ok";
    emit(out, report);
    return 0;
}

int cmd_reduce(const std::string& path, const std::string& out_path, bool swap_sides,
               std::ostream& out) {
    Pipeline p = reduce_pipeline(path, swap_sides);
    Json j = reduced_to_json(p.rd);
    if (!p.in.reduced) {
        Json pi;
        Json t = Json::array();
        for (int v : p.proj.part.t) t.push_back(v + 1);
        pi["t"] = std::move(t);
        Json killed = Json::array();
        for (int v : p.proj.killed) killed.push_back(v + 1);
        pi["killed"] = std::move(killed);
        j["projection"] = std::move(pi);
    }
    if (!out_path.empty()) save_json_file(out_path, j);
    Json report;
    report["command"] = "reduce";
    report["input"] = path;
    report["n"] = p.rd.n();
    if (!out_path.empty())
        report["output"] = out_path;
    else
        report["reduced"] = j;
    report["outcome"] = "ok";
    emit(out, report);
    return 0;
}

int cmd_dominant(const std::string& path, const std::string& chi_csv, bool enumerate, long bound,
                 bool swap_sides, std::ostream& out) {
    Pipeline p = reduce_pipeline(path, swap_sides);
    Json report;
    report["command"] = "dominant";
    report["input"] = path;
    if (enumerate) {
        auto fams = enumerate_dominant(p.rd, bound);
        Json fj = Json::array();
        for (const auto& f : fams) {
            Json e;
            e["m"] = f.m;
            e["chi_m"] = character_to_json(f.chi_m);
            fj.push_back(std::move(e));
        }
        report["families"] = std::move(fj);
        report["outcome"] = "ok";
        emit(out, report);
        return 0;
    }
    Character chi = character_from_literals(p.rd.F, p.rd.group, chi_csv);
    auto res = is_dominant(p.rd, chi, env_long("UQMOD_M_MAX", 64));
    report["complete"] = res.complete;
    switch (res.status) {
        case DominanceResult::Status::Dominant:
            report["dominant"] = true;
            report["m"] = res.m;
            report["outcome"] = "ok";
            emit(out, report);
            return 0;
        case DominanceResult::Status::NotDominant:
            report["dominant"] = false;
            report["witness"] = res.witness + 1;
            report["outcome"] = "not dominant";
            emit(out, report);
            return 3;
        case DominanceResult::Status::Inconclusive:
            report["dominant"] = nullptr;
            report["witness"] = res.witness + 1;
            report["outcome"] = "inconclusive (bounded search exhausted)";
            emit(out, report);
            return 4;
    }
    return 2;
}

int cmd_module(const std::string& path, const std::string& chi_csv, const std::string& rho_csv,
               const std::string& out_path, bool force_general, long dim_budget,
               long degree_budget, bool swap_sides, std::ostream& out) {
    Pipeline p = reduce_pipeline(path, swap_sides);
    Character chi = character_from_literals(p.rd.F, p.rd.group, chi_csv);
    if (!rho_csv.empty()) {
        // only pairs with rho(z_i) = chi(L_i) descend to the quotient
        std::vector<Scalar> vals;
        std::stringstream ss(rho_csv);
        std::string tok;
        while (std::getline(ss, tok, ',')) vals.push_back(Scalar::parse(p.rd.F, tok));
        if (static_cast<int>(vals.size()) != p.rd.n())
            fail(Err::ParseError, "--rho needs one value per z_i, got " +
                                      std::to_string(vals.size()));
        for (int i = 0; i < p.rd.n(); ++i)
            if (vals[static_cast<size_t>(i)] != chi(p.rd.L[static_cast<size_t>(i)]))
                fail(Err::ParseError,
                     "rho(z_" + std::to_string(i + 1) +
                         ") must equal chi(L_i): only such pairs descend to U(D,lambda)");
    }
    bool qls = true;
    for (int i = 0; i < p.rd.n() && qls; ++i)
        for (int jj = 0; jj < p.rd.n(); ++jj)
            if (i != jj && p.rd.cartan.entry(i, jj) != 0) qls = false;

    ModuleRep rep;
    std::string route;
    if (p.rd.group.is_finite() && qls && !force_general) {
        rep = finite_qls(p.rd, chi);
        route = "finite-qls";
    } else {
        auto res = is_dominant(p.rd, chi, env_long("UQMOD_M_MAX", 64));
        if (res.status == DominanceResult::Status::NotDominant)
            fail(Err::NotDominant, "chi is not dominant (witness i = " +
                                       std::to_string(res.witness + 1) + ")");
        if (res.status == DominanceResult::Status::Inconclusive)
            fail(Err::UnboundedSearch,
                 "dominance inconclusive after bounded search at i = " +
                     std::to_string(res.witness + 1));
        if (qls && !force_general) {
            rep = build_qls_module(p.rd, chi, res.m);
            route = "qls";
        } else {
            rep = build_general_module(p.rd, chi, res.m, static_cast<size_t>(dim_budget),
                                       static_cast<int>(degree_budget));
            route = "general";
        }
    }
    auto reduced_report = verify_module_reduced(rep, p.rd);

    Json report;
    report["command"] = "module";
    report["input"] = path;
    report["route"] = route;
    report["dim"] = rep.dim();
    report["m"] = rep.m_exponents;
    report["verified"] = reduced_report.all_passed;
    ModuleRep final_rep = rep;
    if (!p.in.reduced) {
        final_rep = pullback_module(p.proj, p.in.d, rep);
        auto full_report = verify_module_full(final_rep, p.in.d, p.in.lam);
        report["verified_full"] = full_report.all_passed;
    }
    if (!out_path.empty()) {
        save_json_file(out_path, rep_to_json(final_rep));
        report["output"] = out_path;
    }
    report["outcome"] = "ok";
    emit(out, report);
    return 0;
}

int cmd_nichols(const std::string& path, long degree, std::ostream& out) {
    Pipeline p = reduce_pipeline(path, false);
    Json report;
    report["command"] = "nichols";
    report["input"] = path;
    report["degree"] = degree;
    if (p.rd.n() > 0) {
        auto spec = make_pairing(p.rd, static_cast<int>(degree));
        report["graded_dims_W"] = spec.U().nich->graded_dims(static_cast<int>(degree));
        report["graded_dims_V"] = spec.A().nich->graded_dims(static_cast<int>(degree));
    } else {
        report["graded_dims_W"] = Json::array();
        report["graded_dims_V"] = Json::array();
    }
    report["outcome"] = "ok";
    emit(out, report);
    return 0;
}

int cmd_verify(const std::string& datum_path, const std::string& rep_path, std::ostream& out) {
    LoadedDatum in = load_any_datum(datum_path);
    ModuleRep rep = rep_from_json(load_json_file(rep_path));
    RelationReport rr;
    if (rep.full_datum_form) {
        if (in.reduced) fail(Err::ParseError, "datum-form module needs a full datum file");
        rr = verify_module_full(rep, in.d, in.lam);
    } else {
        ReducedDatum rd = in.reduced ? in.rd : to_reduced(project_datum(in.d, in.lam));
        rr = verify_module_reduced(rep, rd);
    }
    Json report;
    report["command"] = "verify";
    report["input"] = rep_path;
    Json rels = Json::array();
    for (const auto& [name, ok] : rr.relations) {
        Json e;
        e["relation"] = name;
        e["passed"] = ok;
        rels.push_back(std::move(e));
    }
    report["relations"] = std::move(rels);
    report["all_passed"] = rr.all_passed;
    report["outcome"] = rr.all_passed ? "ok" : "relation failure";
    emit(out, report);
    return rr.all_passed ? 0 : 2;
}

int cmd_twist_check(const std::string& path, long degree, std::ostream& out) {
    Pipeline p = reduce_pipeline(path, false);
    auto spec = make_pairing(p.rd);
    auto rep = cocycle_check(spec, static_cast<int>(degree));
    Json report;
    report["command"] = "twist-check";
    report["input"] = path;
    report["degree"] = degree;
    report["checks"] = rep.checks;
    report["failures"] = rep.failures;
    report["outcome"] = rep.passed ? "ok" : "check failed";
    emit(out, report);
    return rep.passed ? 0 : 2;
}

int cmd_preset(const std::string& name, char type, int rank, const std::string& out_path,
               std::ostream& out) {
    if (name == "list") {
        Json report;
        report["command"] = "preset";
        report["presets"] = Json::array(
            {Json{{"name", "uqsl"},
                  {"description", "one-parameter quantum group U_q(g), reduced datum; "
                                  "--type A..G --rank n; q is the indeterminate"}},
             Json{{"name", "benkart"},
                  {"description", "two-parameter U_{r,s}(gl_{n+1}) reduced datum; --rank n"}}});
        report["outcome"] = "ok";
        emit(out, report);
        return 0;
    }
    ReducedDatum rd;
    if (name == "uqsl")
        rd = preset_uqsl(type, rank);
    else if (name == "benkart")
        rd = preset_benkart(rank);
    else
        fail(Err::ParseError, "unknown preset '" + name + "' (try: preset list)");
    Json j = reduced_to_json(rd);
    Json report;
    report["command"] = "preset";
    report["name"] = name;
    if (!out_path.empty()) {
        save_json_file(out_path, j);
        report["output"] = out_path;
    } else {
        report["datum"] = j;
    }
    report["outcome"] = "ok";
    emit(out, report);
    return 0;
}

} // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"uqmod: pointed Hopf algebras of finite Cartan type and their simple modules"};
    app.require_subcommand(1);

    std::string path, out_path, chi_csv, dot_path, rep_path, preset_name;
    std::string type_str = "A";
    int rank = 1;
    long bound = 3, degree = 2;
    long dim_budget = env_long("UQMOD_DIM_BUDGET", 200);
    long degree_budget = env_long("UQMOD_DEGREE_BUDGET", -1);
    bool swap_sides = false, enumerate = false, force_general = false;

    auto* validate = app.add_subcommand("validate", "validate a datum file");
    validate->add_option("file", path)->required();

    auto* graph = app.add_subcommand("graph", "linking graph DOT export and bipartition");
    graph->add_option("file", path)->required();
    graph->add_option("--dot", dot_path, "write the linking graph DOT to this file");
    std::string dynkin_path;
    graph->add_option("--dynkin-dot", dynkin_path, "write the Dynkin diagram DOT to this file");
    graph->add_flag("--swap-sides", swap_sides, "exchange I^- and I^+");

    auto* nichols = app.add_subcommand("nichols", "graded dimensions of the Nichols algebras");
    nichols->add_option("--datum", path)->required();
    long nich_degree = 6;
    nichols->add_option("--degree", nich_degree);

    auto* reduce = app.add_subcommand("reduce", "project to the linked core and emit D_red");
    reduce->add_option("file", path)->required();
    reduce->add_option("-o,--out", out_path);
    reduce->add_flag("--swap-sides", swap_sides);

    auto* dominant = app.add_subcommand("dominant", "dominance test or enumeration");
    dominant->add_option("--datum", path)->required();
    dominant->add_option("--chi", chi_csv, "character values, comma separated literals");
    dominant->add_flag("--enumerate", enumerate);
    dominant->add_option("--bound", bound, "max m_i for enumeration");
    dominant->add_flag("--swap-sides", swap_sides);

    auto* module_cmd = app.add_subcommand("module", "construct the simple module L(chi)");
    module_cmd->add_option("--datum", path)->required();
    module_cmd->add_option("--chi", chi_csv)->required();
    std::string rho_csv;
    module_cmd->add_option("--rho", rho_csv,
                           "optional values rho(z_i); must match chi(L_i)");
    module_cmd->add_option("--out", out_path);
    module_cmd->add_flag("--general", force_general, "force the Nichols spinning path");
    module_cmd->add_option("--dim-budget", dim_budget);
    module_cmd->add_option("--budget", degree_budget, "Nichols degree budget");
    module_cmd->add_flag("--swap-sides", swap_sides);

    auto* verify = app.add_subcommand("verify", "re-check every defining relation on a module file");
    verify->add_option("--datum", path)->required();
    verify->add_option("rep", rep_path)->required();

    auto* twist = app.add_subcommand("twist-check", "Hopf-pairing and 2-cocycle identities");
    twist->add_option("--datum", path)->required();
    twist->add_option("--degree", degree);

    auto* preset = app.add_subcommand("preset", "named example data: preset list | preset emit");
    std::string preset_action;
    preset->add_option("action", preset_action, "list or emit")->required();
    preset->add_option("name", preset_name);
    preset->add_option("--type", type_str, "Cartan type letter");
    preset->add_option("--rank", rank);
    preset->add_option("-o,--out", out_path);

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (validate->parsed()) return cmd_validate(path, out);
        if (graph->parsed()) return cmd_graph(path, dot_path, dynkin_path, swap_sides, out);
        if (nichols->parsed()) return cmd_nichols(path, nich_degree, out);
        if (reduce->parsed()) return cmd_reduce(path, out_path, swap_sides, out);
        if (dominant->parsed()) {
            if (!enumerate && chi_csv.empty())
                fail(Err::ParseError, "dominant needs --chi or --enumerate");
            return cmd_dominant(path, chi_csv, enumerate, bound, swap_sides, out);
        }
        if (module_cmd->parsed())
            return cmd_module(path, chi_csv, rho_csv, out_path, force_general, dim_budget,
                              degree_budget, swap_sides, out);
        if (verify->parsed()) return cmd_verify(path, rep_path, out);
        if (twist->parsed()) return cmd_twist_check(path, degree, out);
        if (preset->parsed()) {
            if (preset_action == "list") return cmd_preset("list", 'A', 0, "", out);
            if (preset_action != "emit") fail(Err::ParseError, "preset action must be list or emit");
            if (preset_name.empty()) fail(Err::ParseError, "preset emit needs a name");
            return cmd_preset(preset_name, type_str.empty() ? 'A' : type_str[0], rank, out_path, out);
        }
    } catch (const Error& e) {
        Json report;
        report["outcome"] = "error";
        report["error"] = err_name(e.kind());
        report["message"] = e.what();
        out << report.dump(2) << "\n";
        err << "error [" << err_name(e.kind()) << "]: " << e.what() << "\n";
        return exit_code_for(e.kind());
    }
    return 2;
}

} // namespace uqmod
