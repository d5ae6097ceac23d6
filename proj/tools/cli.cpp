#include "cli.hpp"

#include <ramseylab/arrowing.hpp>
#include <ramseylab/constructions.hpp>
#include <ramseylab/formulas.hpp>
#include <ramseylab/graph6.hpp>
#include <ramseylab/invariants.hpp>
#include <ramseylab/kernels.hpp>
#include <ramseylab/search.hpp>
#include <ramseylab/stability.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace ramseylab::cli {

namespace {

using nlohmann::json;

struct InputError : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

FanSpec parse_fan(const std::string & text)
{
    // fan:n:t
    auto first = text.find(':');
    auto second = text.find(':', first + 1);
    if (first == std::string::npos || second == std::string::npos)
        throw InputError("fan targets are written fan:n:t, got '" + text + "'");
    try {
        std::size_t used = 0;
        FanSpec spec{std::stoi(text.substr(first + 1, second - first - 1)), std::stoi(text.substr(second + 1), &used)};
        if (used != text.size() - second - 1 || spec.n < 1 || spec.t < 1)
            throw InputError("bad fan parameters in '" + text + "'");
        return spec;
    }
    catch (const std::logic_error &) {
        throw InputError("bad fan parameters in '" + text + "'");
    }
}

bool is_fan(const std::string & text) { return text.rfind("fan:", 0) == 0; }

/// "K3", "C5", "fan:n:t", "g6:<graph6>", or a bare graph6/sparse6 string.
Graph parse_graph_spec(const std::string & text)
{
    if (is_fan(text))
        return fan(parse_fan(text));
    if (text.rfind("g6:", 0) == 0)
        return parse_graph_line(text.substr(3));
    try {
        return named_graph(text);
    }
    catch (const GraphError &) {
        return parse_graph_line(text);
    }
}

BlueTarget parse_target(const std::string & text)
{
    if (is_fan(text))
        return parse_fan(text);
    return parse_graph_spec(text);
}

std::string read_all(const std::string & path, std::istream & in)
{
    if (path.empty() || path == "-") {
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }
    std::ifstream f(path);
    if (!f)
        throw InputError("cannot open " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

TwoColoring read_coloring(const std::string & path, std::istream & in)
{
    json j;
    try {
        j = json::parse(read_all(path, in));
    }
    catch (const json::exception & e) {
        throw InputError(std::string("invalid colouring JSON: ") + e.what());
    }
    try {
        return coloring_from_json(j);
    }
    catch (const json::exception & e) {
        throw InputError(std::string("invalid colouring JSON: ") + e.what());
    }
}

void write_json_file(const std::string & path, const json & j)
{
    std::ofstream f(path);
    if (!f)
        throw InputError("cannot write " + path);
    f << j.dump(2) << '\n';
}

json classes_json(const ProperColoring & c)
{
    auto arr = json::array();
    for (VertexSet s : c.classes)
        arr.push_back(members(s));
    return arr;
}

json invariants_json(const Graph & g)
{
    json j{{"graph6", emit_graph6(g)}, {"order", g.order()}, {"edges", g.edge_count()}};
    auto chi = chromatic_number(g);
    j["chi"] = chi.chi;
    j["chromatic_colouring"] = classes_json(chi.witness);
    if (chi.chi >= 2) {
        auto s = s_of(g);
        auto tau = tau_of(g);
        j["s"] = s.s;
        j["tau"] = tau.tau;
        j["tau_colouring"] = classes_json(tau.witness);
    }
    else {
        j["s"] = nullptr;
        j["tau"] = nullptr;
    }
    bool critical = g.edge_count() > 0 && is_edge_critical(g);
    j["edge_critical"] = critical;
    if (critical) {
        auto w = critical_coloring(g);
        j["critical_coloring"] = {{"classes", classes_json(w.coloring)},
                                  {"edge", {w.edge.first, w.edge.second}},
                                  {"singleton_vertex", w.singleton_vertex},
                                  {"low_class", w.low_class}};
    }
    else
        j["critical_coloring"] = nullptr;
    return j;
}

struct SearchOptions
{
    int workers = 1;
    std::uint64_t budget = 0;
    double time_limit = 3600.0;
    std::string edge_order = "lexicographic";
    std::string symmetry = "automatic";
    int prefix_depth = 8;
};

void add_search_options(CLI::App * cmd, SearchOptions & o)
{
    cmd->add_option("--workers", o.workers, "Worker threads (results do not depend on it)")->check(CLI::PositiveNumber);
    cmd->add_option("--budget", o.budget, "Node budget (default: $RAMSEYLAB_BUDGET or 1e10)");
    cmd->add_option("--time-limit", o.time_limit, "Wall-clock budget in seconds")->check(CLI::PositiveNumber);
    cmd->add_option("--edge-order", o.edge_order, "lexicographic | colexicographic")
        ->check(CLI::IsMember({"lexicographic", "colexicographic"}));
    cmd->add_option("--symmetry", o.symmetry, "automatic | none | vertex_orbit | canonical_augmentation")
        ->check(CLI::IsMember({"automatic", "none", "vertex_orbit", "canonical_augmentation"}));
    cmd->add_option("--prefix-depth", o.prefix_depth, "Edges fixed per parallel subtree")->check(CLI::NonNegativeNumber);
}

std::uint64_t default_budget()
{
    if (const char * env = std::getenv("RAMSEYLAB_BUDGET")) {
        char * end = nullptr;
        auto v = std::strtoull(env, &end, 10);
        if (end == env || *end != '\0' || v == 0)
            throw InputError("RAMSEYLAB_BUDGET must be a positive integer");
        return v;
    }
    return SearchConfig{}.node_budget;
}

SearchConfig make_config(const SearchOptions & o)
{
    SearchConfig cfg;
    cfg.workers = o.workers;
    cfg.node_budget = o.budget ? o.budget : default_budget();
    cfg.time_budget_seconds = o.time_limit;
    cfg.prefix_depth = o.prefix_depth;
    cfg.edge_order = o.edge_order == "colexicographic" ? EdgeOrderPolicy::colexicographic : EdgeOrderPolicy::lexicographic;
    if (o.symmetry == "none")
        cfg.symmetry = SymmetryMode::none;
    else if (o.symmetry == "vertex_orbit")
        cfg.symmetry = SymmetryMode::vertex_orbit;
    else if (o.symmetry == "canonical_augmentation")
        cfg.symmetry = SymmetryMode::canonical_augmentation;
    return cfg;
}

json config_json(const SearchConfig & cfg)
{
    return {{"edge_order", to_string(cfg.edge_order)}, {"symmetry", to_string(cfg.symmetry)},
            {"workers", cfg.workers},                  {"prefix_depth", cfg.prefix_depth},
            {"node_budget", cfg.node_budget},          {"time_budget_seconds", cfg.time_budget_seconds},
            {"isa", std::string(kernels::isa_name(kernels::active_isa()))}};
}

int limit_for(const BlueTarget & h, const SearchConfig & cfg)
{
    return std::holds_alternative<FanSpec>(h) ? cfg.max_fan_order : cfg.max_generic_order;
}

/// One row of the formula-versus-search table.
json table_row(int k, int t, int n, const SearchConfig & cfg)
{
    FanSpec spec{n, t};
    Graph g = complete(k + 1);
    auto predicted_r = predict_R_fan(k, t, n);
    auto predicted_rs = predict_rstar_fan(k, t, n);
    auto burr = burr_lower(k + 1, 1, spec.order());
    // The fan is treated as having a cut vertex, so only the first bound applies.
    auto hao_lin = hao_lin_lower(k + 1, 1, 1, spec.order(), t, false);
    auto upper = fan_ramsey_upper(k + 1, spec);

    json row{{"k", k},
             {"t", t},
             {"n", n},
             {"G", "K" + std::to_string(k + 1)},
             {"H", describe(BlueTarget{spec})},
             {"formula_R", *predicted_r.value},
             {"burr_lower", *burr.value},
             {"upper_bound", *upper.value},
             {"formula_rstar", *predicted_rs.value},
             {"hao_lin_lower", *hao_lin.value}};

    auto marker = [](std::int64_t exact, std::int64_t formula) {
        return exact == formula ? "matches formula" : "asymptotic threshold not reached";
    };

    int lo = static_cast<int>(*burr.value);
    int hi = std::min<std::int64_t>(limit_for(spec, cfg), *upper.value);
    if (lo > hi) {
        row["R"] = nullptr;
        row["R_status"] = "unsolved (size limit)";
        row["rstar"] = nullptr;
        row["rstar_status"] = "unsolved (size limit)";
        return row;
    }
    auto r = ramsey_number(g, spec, lo, hi, cfg);
    if (r.status != ResultStatus::decided) {
        row["R"] = nullptr;
        row["R_status"] = r.status == ResultStatus::budget_exhausted ? "unsolved (budget)" : "unsolved (size limit)";
        row["rstar"] = nullptr;
        row["rstar_status"] = "unsolved (needs R)";
        return row;
    }
    row["R"] = r.value;
    row["R_status"] = marker(r.value, *predicted_r.value);
    auto rs = star_critical_number(g, spec, r.value, cfg);
    if (rs.status != ResultStatus::decided) {
        row["rstar"] = nullptr;
        row["rstar_status"] = "unsolved (budget)";
        return row;
    }
    row["rstar"] = rs.value;
    row["rstar_status"] = marker(rs.value, *predicted_rs.value);
    return row;
}

std::vector<int> parse_range(const std::string & text, const char * what)
{
    // "a", "a..b" or "a-b"; an empty or reversed range is empty.
    std::vector<int> out;
    if (text.empty())
        return out;
    try {
        auto dots = text.find("..");
        std::size_t sep = dots != std::string::npos ? dots : text.find('-', 1);
        std::size_t skip = dots != std::string::npos ? 2 : 1;
        int a = 0;
        int b = 0;
        std::size_t used = 0;
        if (sep == std::string::npos) {
            a = b = std::stoi(text, &used);
            if (used != text.size())
                throw std::invalid_argument(text);
        }
        else {
            a = std::stoi(text.substr(0, sep), &used);
            if (used != sep)
                throw std::invalid_argument(text);
            std::string tail = text.substr(sep + skip);
            b = std::stoi(tail, &used);
            if (used != tail.size())
                throw std::invalid_argument(text);
        }
        for (int v = a; v <= b; ++v)
            out.push_back(v);
    }
    catch (const std::logic_error &) {
        throw InputError(std::string("bad ") + what + " range '" + text + "'");
    }
    return out;
}

std::string cell(const json & v)
{
    if (v.is_null())
        return "-";
    if (v.is_string())
        return v.get<std::string>();
    return v.dump();
}

void print_markdown(const json & rows, std::ostream & out)
{
    out << "| k | t | n | H | R formula | R exact | R status | r* formula | r* exact | r* status |\n";
    out << "|---|---|---|---|---|---|---|---|---|---|\n";
    for (auto & r : rows)
        out << "| " << r["k"] << " | " << r["t"] << " | " << r["n"] << " | " << cell(r["H"]) << " | "
            << r["formula_R"] << " | " << cell(r["R"]) << " | " << cell(r["R_status"]) << " | " << r["formula_rstar"]
            << " | " << cell(r["rstar"]) << " | " << cell(r["rstar_status"]) << " |\n";
}

}

int run(const std::vector<std::string> & args, std::istream & in, std::ostream & out, std::ostream & err)
{
    CLI::App app{"Ramsey and star-critical Ramsey numbers for generalised fans", "ramseylab"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    // invariants
    auto * inv = app.add_subcommand("invariants", "chi, s, tau and edge-criticality of graphs (graph6 on stdin)");
    std::vector<std::string> inv_graphs;
    inv->add_option("graphs", inv_graphs, "Graphs (K5, C7, g6:<graph6>, ...); stdin if omitted");

    // construct
    auto * con = app.add_subcommand("construct", "Emit a lower-bound colouring as JSON");
    std::string con_kind;
    int con_chi = 3, con_s = 1, con_h = 5, con_k = 2, con_t = 2, con_n = 1;
    std::string con_out;
    con->add_option("kind", con_kind, "burr | ramsey-witness | star-witness")
        ->required()
        ->check(CLI::IsMember({"burr", "ramsey-witness", "star-witness"}));
    con->add_option("--chi", con_chi);
    con->add_option("--s", con_s);
    con->add_option("--h-order", con_h, "|V(H)|");
    con->add_option("--k", con_k);
    con->add_option("--t", con_t);
    con->add_option("--n", con_n);
    con->add_option("--out", con_out, "Write the colouring here instead of stdout");

    // verify
    auto * ver = app.add_subcommand("verify", "Check a colouring for a red G or a blue H");
    std::string ver_file, ver_red, ver_blue;
    int ver_rgkt = 0;
    ver->add_option("--coloring", ver_file, "Colouring JSON (stdin if omitted)");
    ver->add_option("--red", ver_red, "Red target G")->required();
    ver->add_option("--blue", ver_blue, "Blue target H (fan:n:t or a graph)")->required();
    ver->add_option("--degree-bound", ver_rgkt, "Also check blue degrees given R(G, K_t)");

    // ramsey
    auto * ram = app.add_subcommand("ramsey", "Exact R(G, H) by exhaustive search");
    std::string ram_red, ram_blue, ram_cert;
    int ram_lo = 0, ram_hi = 0;
    SearchOptions ram_opts;
    ram->add_option("--red", ram_red, "Red target G")->required();
    ram->add_option("--blue", ram_blue, "Blue target H")->required();
    ram->add_option("--lo", ram_lo, "Smallest host order to try (default: Burr lower bound)");
    ram->add_option("--hi", ram_hi, "Largest host order to try (default: search limit)");
    ram->add_option("--certificate", ram_cert, "Write certificates to this JSON file");
    add_search_options(ram, ram_opts);

    // star-ramsey
    auto * star = app.add_subcommand("star-ramsey", "Exact star-critical Ramsey number r*(G, H)");
    std::string star_red, star_blue, star_cert;
    int star_r = 0;
    SearchOptions star_opts;
    star->add_option("--red", star_red, "Red target G")->required();
    star->add_option("--blue", star_blue, "Blue target H")->required();
    star->add_option("--ramsey", star_r, "Known R(G, H); computed when omitted");
    star->add_option("--certificate", star_cert, "Write certificates to this JSON file");
    add_search_options(star, star_opts);

    // predict
    auto * pre = app.add_subcommand("predict", "Closed-form values for generalised fans and listed results");
    int pre_k = 2, pre_t = 2, pre_n = 1, pre_h = 0, pre_r = 0, pre_m = 0, pre_delta = 0;
    std::string pre_tag;
    pre->add_option("--k", pre_k);
    pre->add_option("--t", pre_t);
    pre->add_option("--n", pre_n);
    pre->add_option("--h-order", pre_h, "|V(H)| for tags c and g");
    pre->add_option("--r", pre_r);
    pre->add_option("--m", pre_m);
    pre->add_option("--delta", pre_delta);
    pre->add_option("--tag", pre_tag, "Listed result a..i instead of the fan prediction");

    // diagnose
    auto * dia = app.add_subcommand("diagnose", "Partition a colouring and evaluate the extremal-structure claims");
    std::string dia_file, dia_fan;
    int dia_k = 2, dia_restarts = 8, dia_workers = 1;
    std::uint64_t dia_seed = 0;
    double dia_xi = 0.01;
    bool dia_clique = false;
    dia->add_option("--coloring", dia_file, "Colouring JSON (stdin if omitted)");
    dia->add_option("--k", dia_k, "Number of classes")->check(CLI::Range(2, 64));
    dia->add_option("--fan", dia_fan, "Fan fan:n:t for the class-size claim")->required();
    dia->add_option("--xi", dia_xi, "Tolerance xi in (0, 1)");
    dia->add_option("--restarts", dia_restarts)->check(CLI::PositiveNumber);
    dia->add_option("--seed", dia_seed);
    dia->add_option("--workers", dia_workers)->check(CLI::PositiveNumber);
    dia->add_flag("--clique-only", dia_clique, "Drop the pendant vertex of a star-book colouring first");

    // table
    auto * tab = app.add_subcommand("table", "Compare fan formulas with exact search, G = K_{k+1}");
    std::string tab_k = "2", tab_t = "2", tab_n = "1..2";
    bool tab_md = false;
    SearchOptions tab_opts;
    tab_opts.budget = 0;
    tab->add_option("--k", tab_k, "Range such as 2..3");
    tab->add_option("--t", tab_t);
    tab->add_option("--n", tab_n);
    tab->add_flag("--md", tab_md, "Markdown instead of JSON");
    add_search_options(tab, tab_opts);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    }
    catch (const CLI::ParseError & e) {
        int code = app.exit(e, out, err);
        return code == 0 ? ok : input_error;
    }

    try {
        if (inv->parsed()) {
            std::vector<Graph> graphs;
            if (!inv_graphs.empty())
                for (auto & s : inv_graphs)
                    graphs.push_back(parse_graph_spec(s));
            else {
                std::string line;
                while (std::getline(in, line)) {
                    if (!line.empty() && line.back() == '\r')
                        line.pop_back();
                    if (line.empty())
                        throw InputError("empty input line");
                    graphs.push_back(parse_graph_line(line));
                }
                if (graphs.empty())
                    throw InputError("no graphs on input");
            }
            if (graphs.size() == 1)
                out << invariants_json(graphs[0]).dump(2) << '\n';
            else {
                auto arr = json::array();
                for (auto & g : graphs)
                    arr.push_back(invariants_json(g));
                out << arr.dump(2) << '\n';
            }
            return ok;
        }

        if (con->parsed()) {
            TwoColoring c = con_kind == "burr"             ? burr_coloring(con_chi, con_s, con_h)
                            : con_kind == "ramsey-witness" ? ramsey_witness_fan(con_k, con_t, con_n)
                                                           : star_witness_fan(con_k, con_t, con_n);
            json j = to_json(c);
            if (con_kind == "burr")
                j["parameters"] = {{"chi", con_chi}, {"s", con_s}, {"h", con_h}};
            else
                j["parameters"] = {{"k", con_k}, {"t", con_t}, {"n", con_n}};
            if (con_out.empty())
                out << j.dump(2) << '\n';
            else
                write_json_file(con_out, j);
            return ok;
        }

        if (ver->parsed()) {
            TwoColoring c = read_coloring(ver_file, in);
            Graph g = parse_graph_spec(ver_red);
            BlueTarget h = parse_target(ver_blue);
            Witness w = contains_red(c, g);
            if (!w.found())
                w = std::holds_alternative<FanSpec>(h) ? contains_blue_fan(c, std::get<FanSpec>(h))
                                                       : contains_blue_subgraph(c, std::get<Graph>(h));
            json j{{"host", host_to_json(c.host())}, {"G", emit_graph6(g)}, {"H", describe(h)}};
            j["verdict"] = w.found() ? to_string(w.kind) : "neither";
            j["witness"] = to_json(w);
            if (ver_rgkt > 0 && std::holds_alternative<FanSpec>(h) && !w.found()) {
                auto rep = blue_degree_bound_check(c, g, std::get<FanSpec>(h), ver_rgkt);
                j["degree_bound"] = {{"bound", rep.bound},
                                     {"max_blue_degree", rep.max_blue_degree},
                                     {"violations", rep.violations},
                                     {"holds", rep.holds()}};
            }
            out << j.dump(2) << '\n';
            return ok;
        }

        if (ram->parsed()) {
            SearchConfig cfg = make_config(ram_opts);
            Graph g = parse_graph_spec(ram_red);
            BlueTarget h = parse_target(ram_blue);
            int lo = ram_lo;
            if (lo <= 0) {
                lo = 1;
                if (g.edge_count() > 0 && blue_target_graph(h).components().size() == 1) {
                    auto chi = chromatic_number(g).chi;
                    auto s = s_of(g).s;
                    if (blue_target_order(h) >= s)
                        lo = static_cast<int>(*burr_lower(chi, s, blue_target_order(h)).value);
                }
            }
            int hi = ram_hi > 0 ? ram_hi : limit_for(h, cfg);
            auto r = ramsey_number(g, h, lo, std::max(lo, hi), cfg);
            json j = to_json(r);
            j["G"] = emit_graph6(g);
            j["H"] = describe(h);
            j["configuration"] = config_json(cfg);
            if (!ram_cert.empty())
                write_json_file(ram_cert, j);
            j.erase("lower_certificate");
            j.erase("upper_certificate");
            if (r.lower)
                j["lower_digest"] = r.lower->digest();
            if (r.upper)
                j["upper_digest"] = r.upper->digest();
            out << j.dump(2) << '\n';
            return r.status == ResultStatus::budget_exhausted ? budget_exhausted : ok;
        }

        if (star->parsed()) {
            SearchConfig cfg = make_config(star_opts);
            Graph g = parse_graph_spec(star_red);
            BlueTarget h = parse_target(star_blue);
            std::optional<int> known;
            if (star_r > 0)
                known = star_r;
            auto r = star_critical_number(g, h, known, cfg);
            json j = to_json(r);
            j["G"] = emit_graph6(g);
            j["H"] = describe(h);
            j["configuration"] = config_json(cfg);
            if (!star_cert.empty())
                write_json_file(star_cert, j);
            j.erase("lower_certificate");
            j.erase("upper_certificate");
            if (r.lower)
                j["lower_digest"] = r.lower->digest();
            if (r.upper)
                j["upper_digest"] = r.upper->digest();
            out << j.dump(2) << '\n';
            return r.status == ResultStatus::budget_exhausted ? budget_exhausted : ok;
        }

        if (pre->parsed()) {
            json j;
            if (!pre_tag.empty()) {
                if (pre_tag.size() != 1)
                    throw InputError("tags are single letters a..i");
                KnownParams p{pre_k, pre_n, pre_t, pre_h, pre_r, pre_m, pre_delta};
                j = to_json(known_result(pre_tag[0], p));
                j["tag"] = pre_tag;
            }
            else {
                FanSpec spec{pre_n, pre_t};
                // evaluated up front so a ParameterError never escapes a half-built initializer list
                json r = to_json(predict_R_fan(pre_k, pre_t, pre_n));
                json rs = to_json(predict_rstar_fan(pre_k, pre_t, pre_n));
                json burr = to_json(burr_lower(pre_k + 1, 1, spec.order()));
                json hl = to_json(hao_lin_lower(pre_k + 1, 1, 1, spec.order(), pre_t, false));
                json up = to_json(fan_ramsey_upper(pre_k + 1, spec));
                j = {{"k", pre_k},   {"t", pre_t},    {"n", pre_n},           {"R", r},
                     {"rstar", rs},  {"burr_lower", burr}, {"hao_lin_lower", hl}, {"upper_bound", up}};
            }
            out << j.dump(2) << '\n';
            return ok;
        }

        if (dia->parsed()) {
            TwoColoring c = read_coloring(dia_file, in);
            if (dia_clique)
                c = c.restricted_to_clique();
            FanSpec spec = parse_fan(dia_fan);
            PartitionOptions opts;
            opts.restarts = dia_restarts;
            opts.seed = dia_seed;
            opts.workers = dia_workers;
            opts.xi = dia_xi;
            auto p = optimize_partition(c, dia_k, opts);
            auto cores = core_sets(c, p);
            auto rep = claims_report(c, p, cores, spec);
            json j{{"host", host_to_json(c.host())},
                   {"fan", describe(BlueTarget{spec})},
                   {"partition", to_json(p)},
                   {"report", to_json(rep)},
                   {"configuration", {{"k", dia_k}, {"restarts", dia_restarts}, {"seed", dia_seed}, {"xi", dia_xi}}}};
            out << j.dump(2) << '\n';
            return ok;
        }

        if (tab->parsed()) {
            if (tab_opts.budget == 0 && !std::getenv("RAMSEYLAB_BUDGET"))
                tab_opts.budget = 50'000'000;
            SearchConfig cfg = make_config(tab_opts);
            auto rows = json::array();
            for (int k : parse_range(tab_k, "k"))
                for (int t : parse_range(tab_t, "t"))
                    for (int n : parse_range(tab_n, "n"))
                        rows.push_back(table_row(k, t, n, cfg));
            if (tab_md)
                print_markdown(rows, out);
            else
                out << json{{"rows", rows}, {"configuration", config_json(cfg)}}.dump(2) << '\n';
            return ok;
        }
    }
    catch (const SizeLimitError & e) {
        err << "size limit: " << e.what() << '\n';
        return size_limit;
    }
    catch (const BudgetError & e) {
        err << "budget exhausted: " << e.what() << '\n';
        return budget_exhausted;
    }
    catch (const PatternTooLarge & e) {
        err << "size limit: " << e.what() << '\n';
        return size_limit;
    }
    catch (const std::invalid_argument & e) {
        err << "error: " << e.what() << '\n';
        return input_error;
    }
    catch (const std::domain_error & e) {
        err << "error: " << e.what() << '\n';
        return input_error;
    }
    catch (const std::runtime_error & e) {
        err << "error: " << e.what() << '\n';
        return input_error;
    }
    return ok;
}

}
