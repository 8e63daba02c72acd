#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "bicq/checks.hpp"
#include "bicq/verify.hpp"

namespace bicq {

namespace {

using Real = long double;

constexpr double residual_tolerance = 1e-9;
constexpr double derivative_identity_tolerance = 1e-8;
constexpr double endpoint_tolerance = 1e-9;
constexpr double segment_tolerance = 1e-9;
constexpr double closed_form_tolerance = 1e-9;
constexpr double finite_difference_tolerance = 1e-5;
constexpr double tangent_offset = 1e-4;
constexpr double tangent_tolerance = 1e-3;
constexpr double hausdorff_spacings = 2.0;

PropertyEntry at_most(std::string name, double value, double tolerance, std::string detail = {})
{
    const Status status = value <= tolerance ? Status::pass : Status::fail;
    return {std::move(name), status, value, tolerance, std::move(detail)};
}

PropertyEntry not_applicable(std::string name, std::string detail)
{
    return {std::move(name), Status::not_applicable, std::numeric_limits<double>::quiet_NaN(), 0.0, std::move(detail)};
}

std::string format(double value)
{
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "%.3e", value);
    return buffer;
}

} // namespace

const char* to_string(Status status)
{
    switch (status) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::not_applicable: return "not-applicable";
    }
    return "?";
}

bool PropertyReport::all_pass() const
{
    return std::none_of(properties.begin(), properties.end(), [](const auto& p) { return p.status == Status::fail; });
}

const PropertyEntry* PropertyReport::find(const std::string& name) const
{
    for (const auto& p : properties)
        if (p.name == name) return &p;
    return nullptr;
}

std::string PropertyReport::to_json() const
{
    nlohmann::ordered_json doc;
    doc["instance_id"] = instance_id;
    doc["properties"] = nlohmann::ordered_json::array();
    for (const auto& p : properties) {
        nlohmann::ordered_json entry;
        entry["name"] = p.name;
        entry["status"] = to_string(p.status);
        entry["value"] = std::isfinite(p.value) ? nlohmann::ordered_json(p.value) : nlohmann::ordered_json(nullptr);
        entry["tolerance"] = p.tolerance;
        if (!p.detail.empty()) entry["detail"] = p.detail;
        doc["properties"].push_back(std::move(entry));
    }
    doc["notes"] = notes;
    return doc.dump(2) + "\n";
}

std::string PropertyReport::to_table() const
{
    std::ostringstream out;
    out << "instance " << instance_id << "\n";
    char line[256];
    std::snprintf(line, sizeof line, "  %-30s %-15s %-11s %-11s\n", "property", "status", "value", "tolerance");
    out << line;
    for (const auto& p : properties) {
        const std::string value = std::isfinite(p.value) ? format(p.value) : "-";
        const std::string tolerance = p.status == Status::not_applicable ? "-" : format(p.tolerance);
        std::snprintf(line, sizeof line, "  %-30s %-15s %-11s %-11s", p.name.c_str(), to_string(p.status),
                      value.c_str(), tolerance.c_str());
        out << line;
        if (!p.detail.empty()) out << "  " << p.detail;
        out << "\n";
    }
    for (const auto& note : notes) out << "  note: " << note << "\n";
    out << (all_pass() ? "all applicable properties pass\n" : "some properties FAIL\n");
    return out.str();
}

const std::vector<std::string>& report_property_names()
{
    static const std::vector<std::string> names = {
        "stationarity_residual",        "normal_equation_residual", "tangent_equation_residual",
        "weighted_derivative_identity", "monotonicity",             "endpoint_derivatives",
        "convexity",                    "segment",                  "closed_form_front",
        "finite_difference_consistency", "tangent_limit_zero",      "tangent_limit_one",
        "brute_force_hausdorff",        "rematerialization",
    };
    return names;
}

PropertyReport run_report(const InstanceDescriptor& d, const ReportConfig& config)
{
    PropertyReport report;
    report.instance_id = d.id();

    const BiQuadraticProblem<double> problem = d.problem();
    const BiQuadraticProblem<Real> p = cast_problem<Real>(problem);
    const std::vector<FrontSample<Real>> samples = front_samples(p, config.samples, config.grid);
    const Real scale = checks::residual_scale(p);

    Real stationarity = 0;
    Real normal = 0;
    Real tangent_eq = 0;
    Real identity = 0;
    for (const auto& s : samples) {
        stationarity = std::max(stationarity, checks::stationarity_residual(p, s.x, s.t) / scale);
        normal = std::max(normal, checks::normal_equation_residual(p, s.x, s.t) / scale);
        tangent_eq = std::max(tangent_eq, checks::tangent_equation_residual(p, s.x, phi_prime(p, s.t), s.t) / scale);
        identity = std::max(identity, checks::weighted_derivative_defect(s));
    }
    report.properties.push_back(at_most("stationarity_residual", double(stationarity), residual_tolerance));
    report.properties.push_back(at_most("normal_equation_residual", double(normal), residual_tolerance));
    report.properties.push_back(at_most("tangent_equation_residual", double(tangent_eq), residual_tolerance));
    report.properties.push_back(at_most("weighted_derivative_identity", double(identity), derivative_identity_tolerance));

    int violations = 0;
    for (std::size_t k = 0; k < samples.size(); ++k) {
        if (k > 0 && !(samples[k].du > 0)) ++violations;
        if (k + 1 < samples.size() && !(samples[k].dv < 0)) ++violations;
    }
    report.properties.push_back(at_most("monotonicity", violations, 0.0, "count of samples with u' <= 0 or v' >= 0"));

    const double endpoint = double(std::max(std::abs(samples.front().du), std::abs(samples.back().dv)));
    report.properties.push_back(at_most("endpoint_derivatives", endpoint, endpoint_tolerance, "max(|u'(0)|, |v'(1)|)"));

    const std::vector<Real> curvature = checks::curvature_numerators(samples);
    const Real smallest = curvature.empty() ? Real(0) : *std::min_element(curvature.begin(), curvature.end());
    report.properties.push_back({"convexity", smallest > 0 ? Status::pass : Status::fail, double(smallest), 0.0,
                                 "min of u'v'' - u''v' over interior samples (must be > 0)"});

    if (is_proportional(p)) {
        const Real length = (p.x2() - p.x1()).norm();
        Real distance = 0;
        for (const auto& s : samples)
            distance = std::max(distance, checks::distance_to_segment(s.x, p.x1(), p.x2()) / length);
        report.properties.push_back(at_most("segment", double(distance), segment_tolerance));

        const ClosedFormFront<Real> front = closed_form_front(p);
        Real mismatch = 0;
        for (const auto& s : samples) mismatch = std::max(mismatch, std::abs(s.f2 - front(s.f1)) / front.kappa_beta);
        report.properties.push_back(at_most("closed_form_front", double(mismatch), closed_form_tolerance));
    } else {
        report.properties.push_back(not_applicable("segment", "Hessians are not proportional"));
        report.properties.push_back(not_applicable("closed_form_front", "Hessians are not proportional"));
    }

    // Central differences of u and v with step 1e-3 min(t, 1 - t), relative to
    // |u'| + |v'| + f1(x2) + f2(x1).
    {
        auto u = [&](Real t) { return evaluate(p.f1(), phi(p, t)); };
        auto v = [&](Real t) { return evaluate(p.f2(), phi(p, t)); };
        const Real ranges = samples.back().f1 + samples.front().f2;
        Real worst = 0;
        for (std::size_t k = 1; k + 1 < samples.size(); ++k) {
            const auto& s = samples[k];
            const Real h = Real(1e-3) * std::min(s.t, Real(1) - s.t);
            const Real denominator = std::abs(s.du) + std::abs(s.dv) + ranges;
            worst = std::max(worst, std::abs(checks::central_difference(u, s.t, h) - s.du) / denominator);
            worst = std::max(worst, std::abs(checks::central_difference(v, s.t, h) - s.dv) / denominator);
        }
        report.properties.push_back(at_most("finite_difference_consistency", double(worst),
                                            finite_difference_tolerance));
    }

    {
        const Real limit = tangent_limit_at_zero(p);
        const Real estimate = checks::tangent_estimate_at_zero(p, Real(tangent_offset));
        const double relative = double(std::abs(estimate - limit) / std::abs(limit));
        PropertyEntry entry = at_most("tangent_limit_zero", relative, tangent_tolerance,
                                      "limit " + format(double(limit)) + ", one-sided step 1e-4");
        if (!(limit > 0)) entry.status = Status::fail;
        report.properties.push_back(std::move(entry));
    }
    {
        const Real limit = tangent_limit_at_one(p);
        const Real estimate = checks::tangent_estimate_at_one(p, Real(tangent_offset));
        const double relative = double(std::abs(estimate - limit) / std::abs(limit));
        PropertyEntry entry = at_most("tangent_limit_one", relative, tangent_tolerance,
                                      "limit " + format(double(limit)) + ", one-sided step 1e-4");
        if (!(limit < 0)) entry.status = Status::fail;
        report.properties.push_back(std::move(entry));
    }

    if (d.n == 2 && config.brute_force) {
        const GridSpec grid = default_grid(problem.x1(), problem.x2(), config.brute_force_points);
        const std::vector<GridPoint> brute = brute_force_pareto(objectives_of(problem), grid);
        const double distance = hausdorff_to_oracle(brute, front_samples(problem, config.samples, config.grid));
        report.properties.push_back(at_most("brute_force_hausdorff", distance / grid.spacing(), hausdorff_spacings,
                                            "in grid spacings (" + std::to_string(config.brute_force_points)
                                                + " points per axis)"));
    } else {
        report.properties.push_back(
            not_applicable("brute_force_hausdorff", d.n == 2 ? "disabled" : "grid cross-check runs for n = 2 only"));
    }

    report.properties.push_back({"rematerialization", rematerializes(d) ? Status::pass : Status::fail,
                                 std::numeric_limits<double>::quiet_NaN(), 0.0,
                                 "generating fields reproduce the stored matrices bit for bit"});

    report.notes.push_back("identities evaluated with the long double instantiation of the oracle");
    report.notes.push_back("optimal mu-distributions of the hypervolume indicator are not computed");
    return report;
}

} // namespace bicq
