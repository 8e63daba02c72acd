#include "cli.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "bicq/front_csv.hpp"
#include "bicq/verify.hpp"

namespace bicq::cli {

namespace {

const std::map<std::string, ProblemClass::Tag> class_names = {
    {"sep-k", ProblemClass::Tag::sep_k}, {"sep-o", ProblemClass::Tag::sep_o}, {"sep-two-o", ProblemClass::Tag::sep_two_o},
    {"one", ProblemClass::Tag::one},     {"one-o", ProblemClass::Tag::one_o}, {"two", ProblemClass::Tag::two},
    {"two-o", ProblemClass::Tag::two_o},
};

const std::map<std::string, SpectrumKind> spectrum_names = {
    {"sphere", SpectrumKind::sphere}, {"cigtab", SpectrumKind::cigtab}, {"ellipsoid", SpectrumKind::ellipsoid}};

const std::map<std::string, Normalization> normalization_names = {
    {"fig2", Normalization::fig2}, {"kappa_unit", Normalization::kappa_unit}, {"none", Normalization::none}};

const std::map<std::string, TGrid> grid_names = {{"uniform", TGrid::uniform}, {"chebyshev", TGrid::chebyshev}};

struct GenerateOptions {
    ProblemClass::Tag tag = ProblemClass::Tag::two_o;
    int k = 0;
    int n = 0;
    SpectrumKind spectrum = SpectrumKind::sphere;
    std::vector<double> spectrum_entries;
    std::uint64_t seed = 0;
    Normalization normalization = Normalization::fig2;
    std::string output;
};

struct FrontOptions {
    std::string instance;
    int samples = 1001;
    TGrid grid = TGrid::uniform;
    std::string output;
};

struct VerifyOptions {
    std::string instance;
    std::string output;
    int samples = 1001;
    TGrid grid = TGrid::uniform;
    int grid_points = 401;
    bool brute_force = true;
};

struct HvOptions {
    std::string front;
    std::vector<double> reference = {1.0, 1.0};
};

struct P10Options {
    Normalization normalization = Normalization::none;
    std::string output = "p10.json";
};

std::string join_keys(const auto& map)
{
    std::string out;
    for (const auto& [key, value] : map) out += (out.empty() ? "" : "|") + key;
    return out;
}

int cmd_generate(const GenerateOptions& o)
{
    const ProblemClass problem_class = o.tag == ProblemClass::Tag::sep_k ? ProblemClass::sep_k(o.k)
                                                                         : ProblemClass::of(o.tag);
    InstanceDescriptor d;
    if (o.spectrum_entries.empty()) {
        d = make_instance(problem_class, o.n, o.spectrum, o.seed, o.normalization);
    } else {
        const Vec entries = Eigen::Map<const Vec>(o.spectrum_entries.data(), Eigen::Index(o.spectrum_entries.size()));
        d = make_instance(problem_class, o.n, SpectrumSpec<double>(entries), o.seed, o.normalization);
    }
    const std::string path = o.output.empty() ? d.id() + ".json" : o.output;
    to_file(d, path);
    std::printf("%s\n", path.c_str());
    std::printf("class=%s n=%d condition(Delta)=%.6g\n", to_string(d.problem_class.tag), d.n,
                d.spectrum->condition_number());
    return 0;
}

int cmd_front(const FrontOptions& o)
{
    if (o.samples < 2) throw DomainError("front: --samples must be at least 2");
    const InstanceDescriptor d = from_file(o.instance);
    const BiQuadraticProblem<double> p = d.problem();
    const std::vector<FrontSample<double>> samples = front_samples(p, o.samples, o.grid);
    std::optional<ClosedFormFront<double>> closed_form;
    if (is_proportional(p)) closed_form = closed_form_front(p);
    if (o.output.empty()) {
        write_front_csv(std::cout, samples, closed_form);
    } else {
        std::ofstream out(o.output, std::ios::binary);
        if (!out) throw std::runtime_error("cannot open '" + o.output + "' for writing");
        write_front_csv(out, samples, closed_form);
    }
    return 0;
}

int cmd_verify(const VerifyOptions& o)
{
    const InstanceDescriptor d = from_file(o.instance);
    ReportConfig config;
    config.samples = o.samples;
    config.grid = o.grid;
    config.brute_force_points = o.grid_points;
    config.brute_force = o.brute_force;
    const PropertyReport report = run_report(d, config);
    std::cout << report.to_table();
    if (!o.output.empty()) {
        std::ofstream out(o.output, std::ios::binary);
        if (!out) throw std::runtime_error("cannot open '" + o.output + "' for writing");
        out << report.to_json();
    }
    return report.all_pass() ? 0 : 1;
}

int cmd_hv(const HvOptions& o)
{
    const auto points = read_front_points(o.front);
    std::printf("%.12g\n", hypervolume_2d(points, {o.reference[0], o.reference[1]}));
    return 0;
}

int cmd_p10(const P10Options& o)
{
    const InstanceDescriptor d = make_p10(o.normalization);
    to_file(d, o.output);
    std::printf("%s\n", o.output.c_str());
    return 0;
}

} // namespace

int run(int argc, char** argv)
{
    CLI::App app{"Bi-objective convex-quadratic benchmark problems with exact Pareto fronts"};
    app.require_subcommand(1, 1);

    GenerateOptions gen;
    auto* generate = app.add_subcommand("generate", "materialize a problem instance to a JSON file");
    generate->add_option("--class", gen.tag, "problem class (" + join_keys(class_names) + ")")
        ->required()
        ->transform(CLI::CheckedTransformer(class_names));
    generate->add_option("--k", gen.k, "1-based axis of x2 for sep-k");
    generate->add_option("--n", gen.n, "dimension")->required()->check(CLI::PositiveNumber);
    auto* spectrum = generate->add_option("--spectrum", gen.spectrum, "named spectrum (" + join_keys(spectrum_names) + ")")
                         ->transform(CLI::CheckedTransformer(spectrum_names));
    generate->add_option("--spectrum-entries", gen.spectrum_entries, "explicit positive spectrum, n values")
        ->excludes(spectrum);
    generate->add_option("--seed", gen.seed, "random seed");
    generate->add_option("--normalization", gen.normalization, "fig2|kappa_unit|none (default fig2)")
        ->transform(CLI::CheckedTransformer(normalization_names));
    generate->add_option("-o,--output", gen.output, "output path (default <instance-id>.json)");

    FrontOptions front;
    auto* front_cmd = app.add_subcommand("front", "sample the exact Pareto set and front to CSV");
    front_cmd->add_option("--instance", front.instance, "instance file")->required();
    front_cmd->add_option("-m,--samples", front.samples, "number of samples (>= 2)");
    front_cmd->add_option("--grid", front.grid, "uniform|chebyshev")->transform(CLI::CheckedTransformer(grid_names));
    front_cmd->add_option("-o,--output", front.output, "output CSV (default standard output)");

    VerifyOptions verify;
    auto* verify_cmd = app.add_subcommand("verify", "check every analytic property of an instance");
    verify_cmd->add_option("--instance", verify.instance, "instance file")->required();
    verify_cmd->add_option("-o,--output", verify.output, "JSON report path");
    verify_cmd->add_option("-m,--samples", verify.samples, "number of samples")->check(CLI::Range(3, 1000000));
    verify_cmd->add_option("--grid", verify.grid, "uniform|chebyshev")->transform(CLI::CheckedTransformer(grid_names));
    verify_cmd->add_option("--grid-points", verify.grid_points, "brute-force points per axis (n = 2)")
        ->check(CLI::Range(2, 3000));
    verify_cmd->add_flag("!--no-brute-force", verify.brute_force, "skip the n = 2 grid cross-check");

    HvOptions hv;
    auto* hv_cmd = app.add_subcommand("hv", "hypervolume of a front CSV");
    hv_cmd->add_option("--front", hv.front, "front CSV")->required();
    hv_cmd->add_option("--ref", hv.reference, "reference point r1 r2")->expected(2);

    P10Options p10;
    auto* p10_cmd = app.add_subcommand("p10", "write the fixed n = 10 diagonal instance");
    p10_cmd->add_option("--normalization", p10.normalization, "fig2|kappa_unit|none (default none)")
        ->transform(CLI::CheckedTransformer(normalization_names));
    p10_cmd->add_option("-o,--output", p10.output, "output path (default p10.json)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : usage_error;
    }

    try {
        if (*generate) {
            if (gen.tag == ProblemClass::Tag::sep_k && generate->count("--k") == 0) {
                std::cerr << "error: --class sep-k requires --k\n";
                return usage_error;
            }
            return cmd_generate(gen);
        }
        if (*front_cmd) return cmd_front(front);
        if (*verify_cmd) return cmd_verify(verify);
        if (*hv_cmd) return cmd_hv(hv);
        if (*p10_cmd) return cmd_p10(p10);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return failure;
    }
    return usage_error;
}

} // namespace bicq::cli
