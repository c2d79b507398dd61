#include "sizefn/bounds.hpp"
#include "sizefn/io.hpp"
#include "sizefn/matching.hpp"
#include "sizefn/persistence.hpp"
#include "sizefn/reparam.hpp"
#include "sizefn/size_pair.hpp"
#include "sizefn/svg.hpp"
#include "sizefn/worked_example.hpp"

#include "CLI11.hpp"

#include <cmath>
#include <iostream>
#include <string>

namespace {

using namespace sizefn;

struct RunConfig {
    std::string command;
    std::string input_a, input_b;
    SeminormId seminorm = SeminormId::sup;
    int samples = 129;
    double snap_tol = 0.0; // 0 = off
    Connectivity connectivity = Connectivity::strong;
    bool coarse = false;
    std::string output, svg_output;
};

// Interval CSV or graph JSON, by extension; snapping applied when requested.
DiscreteSizePair load_pair(const std::string& path, double snap_tol) {
    DiscreteSizePair p;
    if (path.size() >= 5 && path.substr(path.size() - 5) == ".json")
        p = read_graph_json(path);
    else
        p = from_interval_samples(read_interval_csv(path));
    return snap_tol > 0.0 ? snap_values(p, snap_tol) : p;
}

IntervalSamples load_samples(const std::string& path, double snap_tol) {
    IntervalSamples s = read_interval_csv(path);
    if (snap_tol > 0.0) s = snap_values(s, snap_tol);
    from_interval_samples(s); // validation only
    return s;
}

void emit_json(const RunConfig& cfg, const nlohmann::json& j) {
    if (cfg.output.empty())
        std::cout << j.dump(2) << "\n";
    else
        write_json_file(cfg.output, j);
}

int run_diagram(const RunConfig& cfg) {
    const SizeFunctionDiagram d = compute_diagram(load_pair(cfg.input_a, cfg.snap_tol));
    emit_json(cfg, diagram_to_json(d));
    if (!cfg.svg_output.empty()) write_text_file(cfg.svg_output, diagram_to_svg(d));
    return 0;
}

int run_product(const RunConfig& cfg) {
    const DiscreteSizePair p = load_pair(cfg.input_a, cfg.snap_tol);
    emit_json(cfg, graph_to_json(product_pair(p, cfg.connectivity)));
    return 0;
}

int run_match(const RunConfig& cfg) {
    const SizeFunctionDiagram d1 = read_diagram_json(cfg.input_a);
    const SizeFunctionDiagram d2 = read_diagram_json(cfg.input_b);
    const MatchingResult m = compute_matching(d1, d2);
    std::cout << format_extended(m.distance) << "\n";
    if (!cfg.output.empty()) write_json_file(cfg.output, matching_to_json(m));
    return 0;
}

int run_lower_bound(const RunConfig& cfg) {
    const DiscreteSizePair a = load_pair(cfg.input_a, cfg.snap_tol);
    const DiscreteSizePair b = load_pair(cfg.input_b, cfg.snap_tol);
    const BoundReport rep = cfg.seminorm == SeminormId::sup
                                ? natural_lower_bound(a, b)
                                : lambda_lower_bound(a, b, cfg.connectivity);
    std::cout << format_extended(rep.value) << "\n";
    if (!cfg.output.empty()) write_json_file(cfg.output, bound_report_to_json(rep));
    return 0;
}

int run_estimate(const RunConfig& cfg) {
    const IntervalSamples a = load_samples(cfg.input_a, cfg.snap_tol);
    const IntervalSamples b = load_samples(cfg.input_b, cfg.snap_tol);
    const Estimate est = estimate_upper(a, b, cfg.seminorm, {cfg.coarse});
    std::cout << format_number(est.value) << "\n";
    if (!cfg.output.empty()) write_json_file(cfg.output, estimate_to_json(est));
    return 0;
}

int run_worked(const RunConfig& cfg) {
    const WorkedExampleReport rep = run_worked_example(cfg.samples, cfg.coarse);
    const double sup_gap = rep.sup_estimate - rep.base_matching.value();
    const double range_gap = rep.range_estimate - rep.product_matching.value();
    const bool sharp = std::abs(sup_gap) <= 0.02 && std::abs(range_gap) <= 0.02;

    std::cout << "worked example: (I, sin t) vs (I, 2 sin 2t), " << rep.samples << " samples"
              << (rep.coarse ? ", coarse search" : "") << "\n";
    std::cout << "  natural pseudodistance:  lower bound "
              << format_extended(rep.base_matching) << " (base matching distance), upper estimate "
              << format_number(rep.sup_estimate) << " (sup seminorm)\n";
    std::cout << "  range pseudodistance:    lower bound "
              << format_extended(rep.product_matching)
              << " (product matching distance), upper estimate "
              << format_number(rep.range_estimate) << " (range seminorm)\n";
    std::cout << "  sharpness: bounds meet within 0.02: " << (sharp ? "yes" : "NO") << "\n";
    std::cout << "  sin 2t vs 0:  range estimate " << format_number(rep.sin2_vs_zero_range)
              << ", sup estimate " << format_number(rep.sin2_vs_zero_sup) << "\n";
    std::cout << "  sin t  vs 0:  range estimate " << format_number(rep.sin_vs_zero_range)
              << ", sup estimate " << format_number(rep.sin_vs_zero_sup) << "\n";

    if (!cfg.output.empty()) {
        nlohmann::json j = {
            {"samples", rep.samples},
            {"coarse", rep.coarse},
            {"base_matching", rep.base_matching.value()},
            {"sup_estimate", rep.sup_estimate},
            {"product_matching", rep.product_matching.value()},
            {"range_estimate", rep.range_estimate},
            {"sin2_vs_zero", {{"range", rep.sin2_vs_zero_range}, {"sup", rep.sin2_vs_zero_sup}}},
            {"sin_vs_zero", {{"range", rep.sin_vs_zero_range}, {"sup", rep.sin_vs_zero_sup}}},
            {"base_left", diagram_to_json(rep.base_left)},
            {"base_right", diagram_to_json(rep.base_right)},
            {"product_left", diagram_to_json(rep.product_left)},
            {"product_right", diagram_to_json(rep.product_right)},
        };
        write_json_file(cfg.output, j);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"size functions, matching distance, and pseudodistance bounds"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string seminorm = "sup", connectivity = "strong";

    auto add_seminorm = [&](CLI::App* cmd) {
        cmd->add_option("--seminorm", seminorm, "seminorm: sup or range")
            ->check(CLI::IsMember({"sup", "range"}));
    };
    auto add_connectivity = [&](CLI::App* cmd) {
        cmd->add_option("--connectivity", connectivity, "product connectivity: strong or 4")
            ->check(CLI::IsMember({"strong", "4"}));
    };
    auto add_snap = [&](CLI::App* cmd) {
        cmd->add_option("--snap", cfg.snap_tol, "snap values to multiples of this tolerance")
            ->check(CLI::PositiveNumber);
    };

    CLI::App* diagram = app.add_subcommand(
        "diagram", "size function diagram of an interval CSV or graph JSON input");
    diagram->add_option("input", cfg.input_a, "interval CSV or graph JSON")->required();
    add_snap(diagram);
    diagram->add_option("-o,--output", cfg.output, "write diagram JSON here (default: stdout)");
    diagram->add_option("--svg", cfg.svg_output, "also write an SVG plot");

    CLI::App* product = app.add_subcommand(
        "product", "product pair (values phi(p)-phi(q)) of an input pair, as graph JSON");
    product->add_option("input", cfg.input_a, "interval CSV or graph JSON")->required();
    add_connectivity(product);
    add_snap(product);
    product->add_option("-o,--output", cfg.output, "write graph JSON here (default: stdout)");

    CLI::App* match = app.add_subcommand(
        "match", "matching distance between two diagram JSON files");
    match->add_option("left", cfg.input_a, "diagram JSON")->required();
    match->add_option("right", cfg.input_b, "diagram JSON")->required();
    match->add_option("-o,--output", cfg.output, "write the optimal matching JSON here");

    CLI::App* lower = app.add_subcommand(
        "lower-bound",
        "certified pseudodistance lower bound: sup seminorm compares the diagrams, range "
        "seminorm compares the product-pair diagrams");
    lower->add_option("left", cfg.input_a, "interval CSV or graph JSON")->required();
    lower->add_option("right", cfg.input_b, "interval CSV or graph JSON")->required();
    add_seminorm(lower);
    add_connectivity(lower);
    add_snap(lower);
    lower->add_option("-o,--output", cfg.output, "write the bound report JSON here");

    CLI::App* estimate = app.add_subcommand(
        "estimate", "pseudodistance upper estimate over monotone alignments of two interval CSVs");
    estimate->add_option("left", cfg.input_a, "interval CSV")->required();
    estimate->add_option("right", cfg.input_b, "interval CSV")->required();
    add_seminorm(estimate);
    estimate->add_flag("--coarse", cfg.coarse, "subsample the range-search candidates");
    add_snap(estimate);
    estimate->add_option("-o,--output", cfg.output, "write the estimate JSON here");

    CLI::App* worked = app.add_subcommand(
        "paper-example", "built-in worked example: sin t vs 2 sin 2t on [0, pi], end to end");
    worked->add_option("--samples", cfg.samples, "sample count (critical points always included)")
        ->check(CLI::Range(5, 100000000));
    worked->add_flag("--coarse", cfg.coarse, "subsample the range-search candidates");
    worked->add_option("-o,--output", cfg.output, "write the full report JSON here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    cfg.seminorm = parse_seminorm(seminorm);
    cfg.connectivity = connectivity == "4" ? Connectivity::four : Connectivity::strong;

    try {
        if (diagram->parsed()) return run_diagram(cfg);
        if (product->parsed()) return run_product(cfg);
        if (match->parsed()) return run_match(cfg);
        if (lower->parsed()) return run_lower_bound(cfg);
        if (estimate->parsed()) return run_estimate(cfg);
        if (worked->parsed()) return run_worked(cfg);
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
