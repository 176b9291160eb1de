// Command-line front end: generate digraphs, emit the closed-form colorings,
// verify colorings, solve rc*/src* exactly, predict family values, and
// reproduce the family tables as CSV.
//
// Exit codes: 0 success / verified true, 1 verification false, 2 usage or
// input error, 3 solver stopped before an exact value (budget or color cap).

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "rcdc/constructions.hpp"
#include "rcdc/serialize.hpp"
#include "rcdc/solver.hpp"
#include "rcdc/verify.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFalse = 1;
constexpr int kUsage = 2;
constexpr int kNotExact = 3;

long long default_budget() {
    if (const char* env = std::getenv("RCDC_BUDGET_DEFAULT")) {
        try {
            const long long value = std::stoll(env);
            if (value > 0) return value;
        } catch (...) {
        }
        throw std::invalid_argument("RCDC_BUDGET_DEFAULT must be a positive integer");
    }
    return rcdc::SolveLimits{}.node_budget;
}

// "0-1,4-3" -> arcs {0,1},{4,3}
std::vector<rcdc::Arc> parse_arc_list(const std::string& text) {
    std::vector<rcdc::Arc> arcs;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) {
        const auto dash = item.find('-');
        if (dash == std::string::npos)
            throw std::invalid_argument("arc list entries look like '<tail>-<head>'");
        arcs.push_back({std::stoi(item.substr(0, dash)), std::stoi(item.substr(dash + 1))});
    }
    return arcs;
}

void emit_digraph(const rcdc::Digraph& d, const std::string& out_path) {
    if (out_path.empty())
        rcdc::write_digraph(std::cout, d);
    else
        rcdc::save_digraph(out_path, d);
}

void emit_coloring(const rcdc::Digraph& d, const rcdc::ArcColoring& coloring,
                   const std::string& out_path) {
    if (out_path.empty())
        rcdc::write_coloring(std::cout, d, coloring);
    else
        rcdc::save_coloring(out_path, d, coloring);
}

struct Options {
    std::string family;
    int n = 0;
    int k = 0;
    int a = 0;
    int i = -1;
    std::vector<int> set;
    std::vector<int> parts;
    std::string remove;
    std::string variant = "k";
    bool extra_arc = false;
    std::string out;
    std::string graph_out;
    std::string graph_path;
    std::string coloring_path;
    std::string mode = "rainbow";
    std::string target = "rc";
    int max_colors = rcdc::kMaxColors;
    long long budget = 0;
    bool json = false;
    int max_n = 0;
    int max_k = 0;
};

rcdc::Digraph build_family_digraph(const Options& opt) {
    using rcdc::Arc;
    if (opt.family == "circulant") {
        if (opt.set.empty()) throw std::invalid_argument("circulant needs --set");
        return rcdc::make_circulant({opt.n, opt.set});
    }
    if (opt.family == "dircycle") return rcdc::make_circulant({opt.n, {1}});
    if (opt.family == "biorient-path") return rcdc::color_bior_path(opt.n).digraph;
    if (opt.family == "biorient-cycle") return rcdc::color_bior_cycle(opt.n).digraph;
    if (opt.family == "biorient-star") return rcdc::color_bior_star(opt.n).digraph;
    if (opt.family == "biorient-multipartite")
        return rcdc::color_bior_multipartite(opt.parts).digraph;
    if (opt.family == "figure1") return rcdc::gap_gadget(opt.extra_arc).digraph;
    if (opt.family == "subcycle") {
        auto outcome = rcdc::color_subcycle(opt.n, parse_arc_list(opt.remove));
        return std::move(outcome.digraph);
    }
    throw std::invalid_argument("unknown family: " + opt.family);
}

int run_gen(const Options& opt) {
    const rcdc::Digraph d = build_family_digraph(opt);
    emit_digraph(d, opt.out);
    std::ostream& info = opt.out.empty() ? std::cerr : std::cout;
    info << "n=" << d.vertex_count() << " m=" << d.arc_count()
         << " strong=" << (rcdc::is_strongly_connected(d) ? "true" : "false") << '\n';
    return kOk;
}

int run_color(const Options& opt) {
    rcdc::PredictQuery query;
    std::optional<rcdc::ColoredDigraph> built;
    if (opt.family == "interval") {
        built = rcdc::color_circulant_interval(opt.n, opt.k);
        query = {rcdc::Family::Interval, opt.n, opt.k};
    } else if (opt.family == "c2k") {
        const auto variant = opt.variant == "k+1" ? rcdc::C2kVariant::OneKPlusOne
                                                  : rcdc::C2kVariant::OneK;
        built = rcdc::color_c2k(opt.k, variant);
        query.family = rcdc::Family::TwoBlock;
        query.k = opt.k;
        query.variant = variant;
    } else if (opt.family == "square") {
        built = rcdc::color_square(opt.k);
        query.family = rcdc::Family::Square;
        query.k = opt.k;
    } else if (opt.family == "multiple") {
        built = rcdc::color_multiple(opt.k, opt.a);
        query.family = rcdc::Family::Multiple;
        query.k = opt.k;
        query.a = opt.a;
    } else if (opt.family == "path") {
        built = rcdc::color_bior_path(opt.n);
        query = {rcdc::Family::BiorPath, opt.n};
    } else if (opt.family == "cycle") {
        built = rcdc::color_bior_cycle(opt.n);
        query = {rcdc::Family::BiorCycle, opt.n};
    } else if (opt.family == "star") {
        built = rcdc::color_bior_star(opt.n);
        query = {rcdc::Family::BiorStar, opt.n};
    } else if (opt.family == "multipartite") {
        built = rcdc::color_bior_multipartite(opt.parts);
        query.family = rcdc::Family::BiorMultipartite;
        query.parts = opt.parts;
    } else if (opt.family == "figure1") {
        built = rcdc::gap_gadget(opt.extra_arc);
    } else if (opt.family == "subcycle") {
        auto outcome = rcdc::color_subcycle(opt.n, parse_arc_list(opt.remove));
        query.family = rcdc::Family::Subcycle;
        query.n = opt.n;
        query.asymmetric_arcs = outcome.asymmetric_arcs;
        if (!outcome.coloring) {
            std::cerr << "no (n-1)-coloring exists with " << outcome.asymmetric_arcs
                      << " asymmetric arcs; rc*=src*=" << *outcome.exact_value << '\n';
            return kUsage;
        }
        built = rcdc::ColoredDigraph{std::move(outcome.digraph), std::move(*outcome.coloring)};
    } else {
        throw std::invalid_argument("unknown construction: " + opt.family);
    }

    emit_coloring(built->digraph, built->coloring, opt.out);
    if (!opt.graph_out.empty()) rcdc::save_digraph(opt.graph_out, built->digraph);
    std::ostream& info = opt.out.empty() ? std::cerr : std::cout;
    info << "colors=" << built->coloring.color_count();
    if (opt.family != "figure1") {
        const auto predicted = rcdc::predict(query);
        if (predicted.applicable) {
            if (predicted.rc) info << " predicted_rc=" << *predicted.rc;
            if (predicted.src) info << " predicted_src=" << *predicted.src;
        }
    }
    info << '\n';
    return kOk;
}

int run_verify(const Options& opt) {
    const rcdc::Digraph d = rcdc::load_digraph(opt.graph_path);
    const rcdc::ArcColoring coloring = rcdc::load_coloring(opt.coloring_path, d);
    rcdc::VerificationReport report;
    if (opt.mode == "rainbow")
        report = rcdc::is_rainbow_connected(d, coloring);
    else if (opt.mode == "strong")
        report = rcdc::is_strong_rainbow_connected(d, coloring);
    else
        throw std::invalid_argument("--mode must be rainbow or strong");
    if (opt.json) {
        std::cout << rcdc::to_json(report).dump(2) << '\n';
    } else if (report.verdict) {
        std::cout << "verdict=true pairs=" << report.witnesses.size() << '\n';
    } else {
        std::cout << "verdict=false failures=" << report.failures.size() << '\n';
        for (const auto& [u, v] : report.failures)
            std::cout << "  no rainbow " << (opt.mode == "strong" ? "geodesic " : "path ")
                      << u << " -> " << v << '\n';
    }
    return report.verdict ? kOk : kVerifyFalse;
}

int run_solve(const Options& opt) {
    const rcdc::Digraph d = rcdc::load_digraph(opt.graph_path);
    rcdc::SolveLimits limits;
    limits.max_colors = opt.max_colors;
    limits.node_budget = opt.budget > 0 ? opt.budget : default_budget();
    const auto result = opt.target == "src" ? rcdc::exact_src(d, limits)
                                            : rcdc::exact_rc(d, limits);
    std::cout << rcdc::to_json(result, d).dump(2) << '\n';
    return result.status == rcdc::SolveStatus::Exact ? kOk : kNotExact;
}

int run_predict(const Options& opt) {
    const auto family = rcdc::family_from_name(opt.family);
    if (!family) throw std::invalid_argument("unknown family: " + opt.family);
    rcdc::PredictQuery query;
    query.family = *family;
    query.n = opt.n;
    query.k = opt.k;
    query.a = opt.a;
    query.asymmetric_arcs = opt.i >= 0 ? opt.i : 0;  // --asym shares the i slot
    query.parts = opt.parts;
    query.variant = opt.variant == "k+1" ? rcdc::C2kVariant::OneKPlusOne
                                         : rcdc::C2kVariant::OneK;
    std::cout << rcdc::to_json(rcdc::predict(query)).dump(2) << '\n';
    return kOk;
}

int run_distance(const Options& opt) {
    if (!rcdc::circulant_formula_applicable(opt.n, opt.k)) {
        std::cerr << "formula inapplicable: needs 2 <= k <= n-1 and n >= (k-1)*ceil(n/k)\n";
        return kUsage;
    }
    const rcdc::Digraph d = rcdc::make_circulant({opt.n, {1, opt.k}});
    if (opt.i >= 0) {
        const int formula = rcdc::circulant_distance_formula(opt.n, opt.k, opt.i);
        const int bfs = rcdc::distances_from(d, 0)[static_cast<std::size_t>(opt.i)];
        std::cout << "n=" << opt.n << " k=" << opt.k << " i=" << opt.i
                  << " formula=" << formula << " bfs=" << bfs
                  << " agree=" << (formula == bfs ? "true" : "false") << '\n';
        return formula == bfs ? kOk : kVerifyFalse;
    }
    const int formula = rcdc::circulant_diameter_formula(opt.n, opt.k);
    const int bfs = rcdc::diameter(d);
    std::cout << "n=" << opt.n << " k=" << opt.k << " formula_diameter=" << formula
              << " bfs_diameter=" << bfs
              << " agree=" << (formula == bfs ? "true" : "false") << '\n';
    return formula == bfs ? kOk : kVerifyFalse;
}

struct ReportRow {
    std::string family;
    std::string params;
    std::optional<int> predicted_rc;
    std::optional<int> predicted_src;
    std::optional<int> diameter;
    bool construction_verified = false;
    std::optional<int> solver_rc;
    std::optional<int> solver_src;
    bool agree = false;
};

void write_csv(std::ostream& out, const std::vector<ReportRow>& rows) {
    out << "family,params,predicted_rc,predicted_src,diameter,"
           "construction_verified,solver_rc,solver_src,agree\n";
    auto cell = [](const std::optional<int>& v) {
        return v ? std::to_string(*v) : std::string();
    };
    for (const auto& row : rows) {
        out << row.family << ',' << row.params << ',' << cell(row.predicted_rc) << ','
            << cell(row.predicted_src) << ',' << cell(row.diameter) << ','
            << (row.construction_verified ? "true" : "false") << ','
            << cell(row.solver_rc) << ',' << cell(row.solver_src) << ','
            << (row.agree ? "true" : "false") << '\n';
    }
}

ReportRow check_construction(const std::string& family, const rcdc::PredictedValue& predicted,
                             const rcdc::ColoredDigraph& built, bool solve) {
    ReportRow row;
    row.family = family;
    row.params = predicted.params;
    row.predicted_rc = predicted.rc;
    row.predicted_src = predicted.src;
    row.diameter = rcdc::diameter(built.digraph);
    const auto report = rcdc::is_strong_rainbow_connected(built.digraph, built.coloring);
    row.construction_verified =
        report.verdict && built.coloring.color_count() == predicted.src.value_or(-1);
    row.agree = row.construction_verified && *row.diameter <= *predicted.rc;
    if (solve) {
        const auto rc = rcdc::exact_rc(built.digraph);
        const auto src = rcdc::exact_src(built.digraph);
        if (rc.status == rcdc::SolveStatus::Exact) {
            row.solver_rc = rc.value;
            row.agree = row.agree && rc.value == predicted.rc;
        }
        if (src.status == rcdc::SolveStatus::Exact) {
            row.solver_src = src.value;
            row.agree = row.agree && src.value == predicted.src;
        }
    }
    return row;
}

int run_report(const Options& opt) {
    std::vector<ReportRow> rows;
    if (opt.family == "interval") {
        const int max_n = opt.max_n > 0 ? opt.max_n : 10;
        for (int n = 3; n <= max_n; ++n)
            for (int k = 1; k <= n - 2; ++k)
                rows.push_back(check_construction(
                    "interval", rcdc::predict({rcdc::Family::Interval, n, k}),
                    rcdc::color_circulant_interval(n, k), n <= 6 && k <= 3));
    } else if (opt.family == "diametro") {
        const int max_n = opt.max_n > 0 ? opt.max_n : 200;
        for (int n = 3; n <= max_n; ++n) {
            for (int k = 2; k <= n - 1; ++k) {
                if (!rcdc::circulant_formula_applicable(n, k)) continue;
                ReportRow row;
                row.family = "diametro";
                std::ostringstream params;
                params << "n=" << n << " k=" << k;
                row.params = params.str();
                const rcdc::Digraph d = rcdc::make_circulant({n, {1, k}});
                const auto bfs = rcdc::distances_from(d, 0);
                bool all_match = true;
                for (int i = 0; i < n; ++i)
                    all_match = all_match &&
                                bfs[static_cast<std::size_t>(i)] ==
                                    rcdc::circulant_distance_formula(n, k, i);
                row.diameter = rcdc::diameter(d);
                all_match = all_match &&
                            *row.diameter == rcdc::circulant_diameter_formula(n, k);
                row.construction_verified = all_match;
                row.agree = all_match;
                rows.push_back(std::move(row));
            }
        }
    } else if (opt.family == "c2k") {
        const int max_k = opt.max_k > 0 ? opt.max_k : 6;
        for (int k = 2; k <= max_k; ++k) {
            for (const auto variant : {rcdc::C2kVariant::OneK, rcdc::C2kVariant::OneKPlusOne}) {
                rcdc::PredictQuery query;
                query.family = rcdc::Family::TwoBlock;
                query.k = k;
                query.variant = variant;
                rows.push_back(check_construction("c2k", rcdc::predict(query),
                                                  rcdc::color_c2k(k, variant), k <= 3));
            }
        }
    } else if (opt.family == "square") {
        const int max_k = opt.max_k > 0 ? opt.max_k : 6;
        for (int k = 3; k <= max_k; ++k) {
            rcdc::PredictQuery query;
            query.family = rcdc::Family::Square;
            query.k = k;
            rows.push_back(
                check_construction("square", rcdc::predict(query), rcdc::color_square(k), k == 3));
        }
    } else if (opt.family == "multiple") {
        for (int k = 3; k <= 4; ++k) {
            for (int a = k - 1; a <= 5; ++a) {
                if (a * k > 20) continue;
                rcdc::PredictQuery query;
                query.family = rcdc::Family::Multiple;
                query.k = k;
                query.a = a;
                rows.push_back(check_construction("multiple", rcdc::predict(query),
                                                  rcdc::color_multiple(k, a), a * k <= 6));
            }
        }
    } else {
        throw std::invalid_argument("unknown report family: " + opt.family);
    }
    if (opt.out.empty()) {
        write_csv(std::cout, rows);
    } else {
        std::ofstream out(opt.out);
        if (!out) throw std::runtime_error("cannot open " + opt.out);
        write_csv(out, rows);
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rainbow connection numbers of digraphs"};
    app.require_subcommand(1);
    Options opt;

    auto* gen = app.add_subcommand("gen", "generate a digraph file");
    gen->add_option("family", opt.family,
                    "circulant|dircycle|biorient-path|biorient-cycle|biorient-star|"
                    "biorient-multipartite|figure1|subcycle")
        ->required();
    gen->add_option("--n", opt.n, "vertex count / size parameter");
    gen->add_option("--set", opt.set, "circulant generators")->delimiter(',');
    gen->add_option("--parts", opt.parts, "multipartite part sizes")->delimiter(',');
    gen->add_option("--remove", opt.remove, "arcs to delete, e.g. 4-3,2-1");
    gen->add_flag("--extra-arc", opt.extra_arc, "add the a1->a2 arc (figure1)");
    gen->add_option("-o,--out", opt.out, "output path (stdout when omitted)");

    auto* color = app.add_subcommand("color", "emit a closed-form coloring");
    color->add_option("construction", opt.family,
                      "interval|c2k|square|multiple|path|cycle|star|multipartite|"
                      "subcycle|figure1")
        ->required();
    color->add_option("--n", opt.n, "vertex count");
    color->add_option("--k", opt.k, "jump / block parameter");
    color->add_option("--a", opt.a, "block count (multiple family)");
    color->add_option("--variant", opt.variant, "c2k generator set: k or k+1")
        ->check(CLI::IsMember({"k", "k+1"}));
    color->add_option("--parts", opt.parts, "multipartite part sizes")->delimiter(',');
    color->add_option("--remove", opt.remove, "arcs to delete (subcycle)");
    color->add_flag("--extra-arc", opt.extra_arc, "color the figure1 digraph with a1->a2");
    color->add_option("-o,--out", opt.out, "coloring output path");
    color->add_option("--graph-out", opt.graph_out, "also write the digraph file");

    auto* verify = app.add_subcommand("verify", "verify a coloring against a digraph");
    verify->add_option("graph", opt.graph_path, "digraph file")->required();
    verify->add_option("coloring", opt.coloring_path, "coloring file")->required();
    verify->add_option("--mode", opt.mode, "rainbow|strong")
        ->check(CLI::IsMember({"rainbow", "strong"}));
    verify->add_flag("--json", opt.json, "emit the full report as JSON");

    auto* solve = app.add_subcommand("solve", "compute rc* or src* exactly");
    solve->add_option("graph", opt.graph_path, "digraph file")->required();
    solve->add_option("--target", opt.target, "rc|src")
        ->check(CLI::IsMember({"rc", "src"}));
    solve->add_option("--max-colors", opt.max_colors, "largest palette to try");
    solve->add_option("--budget", opt.budget, "node budget (default from RCDC_BUDGET_DEFAULT)");

    auto* predict = app.add_subcommand("predict", "closed-form rc*/src* for a family");
    predict->add_option("family", opt.family,
                        "interval|c2k|c2k1|square|multiple|path|cycle|star|"
                        "multipartite|subcycle|dircycle|complete")
        ->required();
    predict->add_option("--n", opt.n, "vertex count");
    predict->add_option("--k", opt.k, "jump / block parameter");
    predict->add_option("--a", opt.a, "block count");
    predict->add_option("--asym", opt.i, "asymmetric arc count (subcycle)");
    predict->add_option("--parts", opt.parts, "multipartite part sizes")->delimiter(',');
    predict->add_option("--variant", opt.variant, "c2k generator set: k or k+1")
        ->check(CLI::IsMember({"k", "k+1"}));

    auto* distance = app.add_subcommand("distance", "closed-form distances in C_n({1,k})");
    distance->add_option("--n", opt.n, "vertex count")->required();
    distance->add_option("--k", opt.k, "second generator")->required();
    distance->add_option("--i", opt.i, "target vertex (diameter when omitted)");

    auto* report = app.add_subcommand("report", "family table as CSV");
    report->add_option("family", opt.family, "interval|diametro|c2k|square|multiple")
        ->required();
    report->add_option("--max-n", opt.max_n, "largest n to sweep");
    report->add_option("--max-k", opt.max_k, "largest k to sweep");
    report->add_option("-o,--out", opt.out, "CSV path (stdout when omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kUsage;
    }

    try {
        if (gen->parsed()) return run_gen(opt);
        if (color->parsed()) return run_color(opt);
        if (verify->parsed()) return run_verify(opt);
        if (solve->parsed()) return run_solve(opt);
        if (predict->parsed()) return run_predict(opt);
        if (distance->parsed()) return run_distance(opt);
        if (report->parsed()) return run_report(opt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
