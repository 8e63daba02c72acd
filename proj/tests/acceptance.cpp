// Acceptance suite: one PASS/FAIL line per criterion.
//
// usage: bicq_acceptance <path-to-bicq-cli>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>
#include <unistd.h>

#include "bicq/checks.hpp"
#include "bicq/front_csv.hpp"
#include "bicq/verify.hpp"

namespace fs = std::filesystem;
using namespace bicq;
using Tag = ProblemClass::Tag;
using Real = long double;

namespace {

constexpr int sweep_seeds = 50;
constexpr int samples = 1001;

struct Outcome {
    bool pass;
    std::string detail;
};

int dimension_for(int seed) { return std::array{2, 5, 10}[std::size_t(seed % 3)]; }

SpectrumKind spectrum_for(int seed)
{
    return std::array{SpectrumKind::sphere, SpectrumKind::ellipsoid, SpectrumKind::cigtab}[std::size_t((seed / 3) % 3)];
}

ProblemClass class_for(Tag tag, int seed)
{
    return tag == Tag::sep_k ? ProblemClass::sep_k(1 + seed % dimension_for(seed)) : ProblemClass::of(tag);
}

// The seeds 0..49 sweep of one class: n cycles through 2, 5, 10 and the
// spectrum through sphere, ellipsoid, cigtab.
std::vector<InstanceDescriptor> sweep(Tag tag, Normalization normalization = Normalization::fig2)
{
    std::vector<InstanceDescriptor> out;
    for (int s = 0; s < sweep_seeds; ++s)
        out.push_back(make_instance(class_for(tag, s), dimension_for(s), spectrum_for(s), std::uint64_t(s), normalization));
    return out;
}

const std::vector<Tag> all_classes = {Tag::sep_k, Tag::sep_o, Tag::sep_two_o, Tag::one, Tag::one_o, Tag::two, Tag::two_o};

std::string fmt(const char* format, auto... args)
{
    char buffer[512];
    std::snprintf(buffer, sizeof buffer, format, args...);
    return buffer;
}

Outcome residuals()
{
    Real worst3 = 0, worst5 = 0;
    for (const auto& d : sweep(Tag::two_o)) {
        const auto p = cast_problem<Real>(d.problem());
        const Real scale = checks::residual_scale(p);
        for (const auto& s : front_samples(p, samples)) {
            worst3 = std::max(worst3, checks::stationarity_residual(p, s.x, s.t) / scale);
            worst5 = std::max(worst5, checks::normal_equation_residual(p, s.x, s.t) / scale);
        }
    }
    return {worst3 <= 1e-9L && worst5 <= 1e-9L,
            fmt("50 two-o instances x %d t; max stationarity %.2e, max normal-equation %.2e (tol 1e-9)", samples,
                double(worst3), double(worst5))};
}

Outcome segments()
{
    Real worst = 0;
    int count = 0;
    for (Tag tag : {Tag::sep_k, Tag::sep_o, Tag::one}) {
        for (const auto& d : sweep(tag)) {
            const auto p = cast_problem<Real>(d.problem());
            const Real length = (p.x2() - p.x1()).norm();
            for (const auto& s : front_samples(p, samples))
                worst = std::max(worst, checks::distance_to_segment(s.x, p.x1(), p.x2()) / length);
            ++count;
        }
    }
    return {worst <= 1e-9L, fmt("%d sep-k/sep-o/one instances; max distance to [x1, x2] %.2e |x2 - x1| (tol 1e-9)",
                                count, double(worst))};
}

Outcome closed_form()
{
    Real worst = 0, worst_unit = 0;
    int count = 0;
    for (Tag tag : all_classes) {
        for (Normalization mode : {Normalization::fig2, Normalization::kappa_unit}) {
            for (const auto& d : sweep(tag, mode)) {
                const auto p = cast_problem<Real>(d.problem());
                if (!is_proportional(p)) continue;
                ++count;
                const auto front = closed_form_front(p);
                for (const auto& s : front_samples(p, samples)) {
                    worst = std::max(worst, std::abs(s.f2 - front(s.f1)) / front.kappa_beta);
                    if (mode == Normalization::kappa_unit) {
                        const Real g = (1 - std::sqrt(std::min(s.f1, Real(1)))) * (1 - std::sqrt(std::min(s.f1, Real(1))));
                        worst_unit = std::max(worst_unit, std::abs(s.f2 - g));
                    }
                }
            }
        }
    }
    return {count > 0 && worst <= 1e-9L && worst_unit <= 1e-9L,
            fmt("%d proportional instances; max |v - g(u)| %.2e kappa_beta, kappa_unit vs (1 - sqrt u)^2 %.2e (tol 1e-9)",
                count, double(worst), double(worst_unit))};
}

Outcome convexity()
{
    int count = 0, nonconvex = 0;
    Real identity = 0, endpoint = 0;
    for (Tag tag : all_classes) {
        for (const auto& d : sweep(tag)) {
            ++count;
            const auto p = cast_problem<Real>(d.problem());
            const auto s = front_samples(p, samples);
            for (Real c : checks::curvature_numerators(s)) nonconvex += !(c > 0);
            for (const auto& x : s) identity = std::max(identity, checks::weighted_derivative_defect(x));
            endpoint = std::max({endpoint, std::abs(s.front().du), std::abs(s.back().dv)});
        }
    }
    return {nonconvex == 0 && identity <= 1e-8L && endpoint <= 1e-9L,
            fmt("%d instances; %d interior points with u'v'' - u''v' <= 0; max |(1-t)u' + tv'| %.2e (tol 1e-8); "
                "max |u'(0)|, |v'(1)| %.2e (tol 1e-9)",
                count, nonconvex, double(identity), double(endpoint))};
}

Outcome tangent_limits()
{
    std::vector<InstanceDescriptor> instances = sweep(Tag::two_o);
    instances.push_back(make_p10());
    int failures = 0, sign_failures = 0, well_conditioned = 0, well_conditioned_failures = 0;
    Real worst = 0;
    std::string worst_id;
    for (const auto& d : instances) {
        const auto p = cast_problem<Real>(d.problem());
        const Real zero = tangent_limit_at_zero(p);
        const Real one = tangent_limit_at_one(p);
        sign_failures += !(zero > 0) + !(one < 0);
        const Real e0 = std::abs(checks::tangent_estimate_at_zero(p, Real(1e-4)) / zero - 1);
        const Real e1 = std::abs(checks::tangent_estimate_at_one(p, Real(1e-4)) / one - 1);
        const Real e = std::max(e0, e1);
        failures += !(e <= 1e-3L);
        if (d.spectrum && d.spectrum->condition_number() <= 10) {
            ++well_conditioned;
            well_conditioned_failures += !(e <= 1e-3L);
        }
        if (e > worst) {
            worst = e;
            worst_id = d.id();
        }
    }
    return {failures == 0 && sign_failures == 0,
            fmt("%zu instances (two-o sweep + p10); %d outside 1e-3 relative at step 1e-4 (%d of %d with "
                "cond(Delta) <= 10), %d sign errors; worst %.2e (%s)",
                instances.size(), failures, well_conditioned_failures, well_conditioned, sign_failures, double(worst),
                worst_id.c_str())};
}

Outcome brute_force()
{
    Vec spectrum(2);
    spectrum << 1, 10;
    double worst = 0;
    std::size_t dominated = 0;
    for (int s = 0; s < 10; ++s) {
        const auto p =
            make_instance(ProblemClass::of(Tag::two_o), 2, SpectrumSpec<double>(spectrum), std::uint64_t(s)).problem();
        const GridSpec grid = default_grid(p.x1(), p.x2(), 401);
        const auto objectives = objectives_of(p);
        const auto oracle = front_samples(p, samples);
        worst = std::max(worst, hausdorff_to_oracle(brute_force_pareto(objectives, grid), oracle) / grid.spacing());
        dominated += dominated_samples(objectives, grid, oracle, grid.spacing()).size();
    }
    return {worst <= 2.0 && dominated == 0,
            fmt("10 two-o n=2 instances, spectrum (1, 10), 401^2 grid; max Hausdorff %.3f spacings (tol 2); "
                "%zu samples dominated beyond one spacing",
                worst, dominated)};
}

Outcome invariance()
{
    Vec x1 = Vec::Zero(2), x2(2);
    x2 << 3, 4;
    const TransformedProblem norm = double_norm_problem(x1, x2);
    const GridSpec norm_grid = default_grid(x1, x2, 201);
    bool ok = lemma1_check(norm.base, norm.g1, norm.g2, norm_grid);
    int passed = ok;

    for (int s = 0; s < 5; ++s) {
        const auto p = make_instance(ProblemClass::of(Tag::two_o), 2, SpectrumKind::ellipsoid, std::uint64_t(s)).problem();
        const GridSpec grid = default_grid(p.x1(), p.x2(), 101);
        for (const auto& [g1, g2] : {std::pair{MonotoneTransform::affine(2, 0), MonotoneTransform::power(2)},
                                     std::pair{MonotoneTransform::affine(0.5, 3), MonotoneTransform::power(0.3)}}) {
            const bool same = lemma1_check(p, g1, g2, grid);
            ok = ok && same;
            passed += same;
        }
    }

    // Front of the double-norm problem: endpoints (0, 5), (5, 0) and v = 5 - u.
    const auto base = front_samples(norm.base, samples);
    const double u0 = norm.value1(base.front().x), v0 = norm.value2(base.front().x);
    const double u1 = norm.value1(base.back().x), v1 = norm.value2(base.back().x);
    const bool endpoints = u0 == 0.0 && std::abs(v0 - 5) <= 1e-12 && std::abs(u1 - 5) <= 1e-12 && v1 == 0.0;
    double deviation = 0;
    for (const auto& s : base) deviation = std::max(deviation, std::abs(norm.value2(s.x) - (5 - norm.value1(s.x))));
    double grid_deviation = 0;
    for (const auto& g : brute_force_pareto(objectives_of(norm), norm_grid))
        grid_deviation = std::max(grid_deviation, std::abs(g.f2 - (5 - g.f1)));
    const bool linear = deviation <= 1e-12 && grid_deviation <= norm_grid.spacing();
    return {ok && endpoints && linear,
            fmt("%d/11 transformed grid fronts identical; endpoints (%.3g, %.3g), (%.3g, %.3g); "
                "max |v - (5 - u)| %.1e on samples, %.1e on grid (spacing %.3g)",
                passed, u0, v0, u1, v1, deviation, grid_deviation, norm_grid.spacing())};
}

Outcome p10()
{
    const auto d = make_p10();
    bool diagonals = true;
    for (int i = 0; i < 10; ++i) {
        diagonals = diagonals && d.q1(i, i) == std::pow(100.0, i / 9.0) && d.q2(i, i) == std::pow(10.0, i / 9.0);
        for (int j = 0; j < 10; ++j) diagonals = diagonals && (i == j || (d.q1(i, j) == 0.0 && d.q2(i, j) == 0.0));
    }
    int unordered = 0;
    const auto s = front_samples(d.problem(), samples);
    for (std::size_t k = 1; k + 1 < s.size(); ++k)
        for (int i = 0; i + 1 < 10; ++i) unordered += !(s[k].x[i] > s[k].x[i + 1]);
    return {diagonals && unordered == 0,
            fmt("diagonals %s; %d ordering violations over %d interior samples", diagonals ? "exact" : "MISMATCH",
                unordered, samples - 2)};
}

Outcome hypervolume()
{
    const int m = 10000;
    std::vector<std::pair<double, double>> points;
    for (int i = 0; i < m; ++i) {
        const double u = double(i) / (m - 1);
        points.emplace_back(u, (1 - std::sqrt(u)) * (1 - std::sqrt(u)));
    }
    const double hv = hypervolume_2d(points, {1, 1});
    const double pair = hypervolume_2d(std::vector<std::pair<double, double>>{{0, 0.5}, {0.5, 0}}, {1, 1});
    return {std::abs(hv - 5.0 / 6.0) <= 1e-4 && pair == 0.75,
            fmt("hv of %d samples %.8f (5/6 = %.8f, tol 1e-4); two-point hv %.17g (expected 0.75)", m, hv, 5.0 / 6.0,
                pair)};
}

std::string slurp(const fs::path& path)
{
    std::ifstream in(path, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

Outcome reproducibility(const std::string& cli)
{
    const fs::path dir = fs::temp_directory_path() / ("bicq_acceptance_" + std::to_string(getpid()));
    fs::create_directories(dir);
    auto run = [&](const std::string& args) {
        const std::string command = "'" + cli + "' " + args + " >'" + (dir / "stdout.txt").string() + "' 2>&1";
        const int status = std::system(command.c_str());
        return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    };
    const std::string flags = "generate --class two-o --n 10 --spectrum ellipsoid --seed 1 -o ";
    const bool generated = run(flags + "'" + (dir / "a.json").string() + "'") == 0
                           && run(flags + "'" + (dir / "b.json").string() + "'") == 0;
    const bool identical = generated && slurp(dir / "a.json") == slurp(dir / "b.json");

    const fs::path csv = dir / "front.csv";
    double cli_hv = std::nan(""), local_hv = std::nan("");
    if (generated && run("front --instance '" + (dir / "a.json").string() + "' -m 1001 -o '" + csv.string() + "'") == 0
        && run("hv --front '" + csv.string() + "' --ref 1 1") == 0) {
        cli_hv = std::strtod(slurp(dir / "stdout.txt").c_str(), nullptr);
        local_hv = hypervolume_2d(front_samples(from_file(dir / "a.json").problem(), 1001), {1, 1});
    }
    fs::remove_all(dir);
    const bool round_trip = std::abs(cli_hv - local_hv) <= 5e-12 * std::abs(local_hv);
    return {identical && round_trip,
            fmt("generate twice: %s; front -> hv %.12g vs in-process %.12g", identical ? "byte-identical" : "DIFFERENT",
                cli_hv, local_hv)};
}

} // namespace

int main(int argc, char** argv)
{
    if (argc != 2) {
        std::fprintf(stderr, "usage: %s <path-to-bicq-cli>\n", argv[0]);
        return 2;
    }
    const std::string cli = argv[1];

    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"optimality residuals", residuals},
        {"segment for proportional classes", segments},
        {"closed-form front", closed_form},
        {"convexity and derivative identities", convexity},
        {"endpoint tangent limits", tangent_limits},
        {"brute-force equivalence", brute_force},
        {"invariance under monotone transforms", invariance},
        {"p10 regression", p10},
        {"hypervolume", hypervolume},
        {"reproducibility", [&] { return reproducibility(cli); }},
    };

    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome outcome;
        try {
            outcome = criteria[i].second();
        } catch (const std::exception& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        failed += !outcome.pass;
        std::printf("%s %2zu  %-38s %s\n", outcome.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                    outcome.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%zu/%zu criteria pass\n", criteria.size() - std::size_t(failed), criteria.size());
    return failed == 0 ? 0 : 1;
}
