#include "bicq/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace bicq {

void GridSpec::validate() const
{
    if (lower.size() < 1 || lower.size() != upper.size()) throw DimensionMismatch("grid: bounds have different sizes");
    if (points_per_axis < 1) throw ValidationError("grid: at least 1 point per axis required");
    for (Eigen::Index i = 0; i < lower.size(); ++i) {
        if (points_per_axis == 1 && lower[i] != upper[i])
            throw ValidationError("grid: a 1-point grid needs lower == upper on every axis");
        if (points_per_axis > 1 && !(lower[i] < upper[i]))
            throw ValidationError("grid: lower bound must be below upper bound on every axis");
    }
    // (points_per_axis)^n without overflowing
    std::uint64_t total = 1;
    for (Eigen::Index i = 0; i < lower.size(); ++i) {
        if (total > budget / static_cast<std::uint64_t>(points_per_axis))
            throw BudgetExceeded("grid: " + std::to_string(points_per_axis) + "^" + std::to_string(lower.size())
                                 + " points exceed the budget of " + std::to_string(budget));
        total *= static_cast<std::uint64_t>(points_per_axis);
    }
}

std::uint64_t GridSpec::total_points() const
{
    std::uint64_t total = 1;
    for (Eigen::Index i = 0; i < lower.size(); ++i) total *= static_cast<std::uint64_t>(points_per_axis);
    return total;
}

double GridSpec::spacing() const
{
    return points_per_axis > 1 ? (upper - lower).maxCoeff() / double(points_per_axis - 1) : 0.0;
}

Vec GridSpec::point(std::uint64_t linear_index) const
{
    const auto p = static_cast<std::uint64_t>(points_per_axis);
    Vec x(lower.size());
    for (Eigen::Index i = 0; i < lower.size(); ++i) {
        const auto j = static_cast<double>(linear_index % p);
        linear_index /= p;
        x[i] = points_per_axis > 1 ? lower[i] + (upper[i] - lower[i]) * j / double(points_per_axis - 1) : lower[i];
    }
    return x;
}

bool GridSpec::contains(const Vec& x) const
{
    return (x.array() >= lower.array()).all() && (x.array() <= upper.array()).all();
}

GridSpec default_grid(const Vec& x1, const Vec& x2, int points_per_axis)
{
    const double pad = 0.5 * (x2 - x1).cwiseAbs().maxCoeff();
    GridSpec grid;
    grid.lower = x1.cwiseMin(x2).array() - pad;
    grid.upper = x1.cwiseMax(x2).array() + pad;
    grid.points_per_axis = points_per_axis;
    return grid;
}

ObjectivePair objectives_of(const BiQuadraticProblem<double>& p)
{
    return {[p](const Vec& x) { return evaluate(p.f1(), x); }, [p](const Vec& x) { return evaluate(p.f2(), x); }};
}

ObjectivePair objectives_of(const TransformedProblem& p)
{
    return {[p](const Vec& x) { return p.value1(x); }, [p](const Vec& x) { return p.value2(x); }};
}

ObjectivePair transformed(const BiQuadraticProblem<double>& p, const MonotoneTransform& g1,
                          const MonotoneTransform& g2)
{
    return objectives_of(TransformedProblem{p, g1, g2});
}

namespace {

struct Evaluated {
    std::uint64_t index;
    double f1;
    double f2;
};

std::vector<Evaluated> evaluate_grid(const ObjectivePair& objectives, const GridSpec& grid)
{
    grid.validate();
    const std::uint64_t total = grid.total_points();
    std::vector<Evaluated> values(total);
    for (std::uint64_t i = 0; i < total; ++i) {
        const Vec x = grid.point(i);
        values[i] = {i, objectives.f1(x), objectives.f2(x)};
    }
    return values;
}

// Indices (into the sorted `values`) of the nondominated entries. `values`
// must be sorted by (f1, f2). An entry survives iff its f2 is the smallest
// within its f1-group and strictly below every f2 seen at smaller f1.
std::vector<std::size_t> nondominated_sorted(const std::vector<Evaluated>& values)
{
    std::vector<std::size_t> keep;
    double best_before = std::numeric_limits<double>::infinity();
    std::size_t i = 0;
    while (i < values.size()) {
        std::size_t j = i;
        while (j < values.size() && values[j].f1 == values[i].f1) ++j;
        const double group_min = values[i].f2;
        if (group_min < best_before) {
            for (std::size_t k = i; k < j && values[k].f2 == group_min; ++k) keep.push_back(k);
            best_before = group_min;
        }
        i = j;
    }
    return keep;
}

bool by_objectives(const Evaluated& a, const Evaluated& b)
{
    if (a.f1 != b.f1) return a.f1 < b.f1;
    if (a.f2 != b.f2) return a.f2 < b.f2;
    return a.index < b.index;
}

} // namespace

std::vector<GridPoint> brute_force_pareto(const ObjectivePair& objectives, const GridSpec& grid)
{
    std::vector<Evaluated> values = evaluate_grid(objectives, grid);
    std::sort(values.begin(), values.end(), by_objectives);
    std::vector<GridPoint> front;
    for (std::size_t k : nondominated_sorted(values)) {
        const Evaluated& e = values[k];
        front.push_back({e.index, grid.point(e.index), e.f1, e.f2});
    }
    return front;
}

bool lemma1_check(const BiQuadraticProblem<double>& p, const MonotoneTransform& g1, const MonotoneTransform& g2,
                  const GridSpec& grid)
{
    auto indices = [](const std::vector<GridPoint>& points) {
        std::vector<std::uint64_t> out;
        for (const auto& point : points) out.push_back(point.index);
        std::sort(out.begin(), out.end());
        return out;
    };
    return indices(brute_force_pareto(objectives_of(p), grid))
           == indices(brute_force_pareto(transformed(p, g1, g2), grid));
}

double hausdorff_distance(const std::vector<Vec>& a, const std::vector<Vec>& b)
{
    if (a.empty() || b.empty()) throw ValidationError("hausdorff: both point sets must be nonempty");
    auto directed = [](const std::vector<Vec>& from, const std::vector<Vec>& to) {
        double worst = 0.0;
        for (const Vec& x : from) {
            double nearest = std::numeric_limits<double>::infinity();
            for (const Vec& y : to) nearest = std::min(nearest, (x - y).squaredNorm());
            worst = std::max(worst, nearest);
        }
        return std::sqrt(worst);
    };
    return std::max(directed(a, b), directed(b, a));
}

double hausdorff_to_oracle(const std::vector<GridPoint>& brute_force, const std::vector<FrontSample<double>>& samples)
{
    std::vector<Vec> a;
    std::vector<Vec> b;
    for (const auto& point : brute_force) a.push_back(point.x);
    for (const auto& sample : samples) b.push_back(sample.x);
    return hausdorff_distance(a, b);
}

std::vector<DominanceViolation> dominated_samples(const ObjectivePair& objectives, const GridSpec& grid,
                                                  const std::vector<FrontSample<double>>& samples, double radius)
{
    std::vector<Evaluated> values = evaluate_grid(objectives, grid);
    std::sort(values.begin(), values.end(), by_objectives);
    std::vector<DominanceViolation> violations;
    for (std::size_t s = 0; s < samples.size(); ++s) {
        const FrontSample<double>& sample = samples[s];
        if (!grid.contains(sample.x)) continue;
        const double u = objectives.f1(sample.x);
        const double v = objectives.f2(sample.x);
        double farthest = -1.0;
        for (const Evaluated& e : values) {
            if (e.f1 > u) break;
            if (e.f2 > v || (e.f1 == u && e.f2 == v)) continue;
            farthest = std::max(farthest, (grid.point(e.index) - sample.x).norm());
        }
        if (farthest > radius) violations.push_back({s, farthest});
    }
    return violations;
}

double hypervolume_2d(std::vector<std::pair<double, double>> points, std::pair<double, double> reference)
{
    const auto [r1, r2] = reference;
    std::erase_if(points, [&](const auto& p) { return !(p.first < r1 && p.second < r2); });
    std::sort(points.begin(), points.end());
    double volume = 0.0;
    double ceiling = r2;
    for (const auto& [f1, f2] : points) {
        if (f2 < ceiling) {
            volume += (r1 - f1) * (ceiling - f2);
            ceiling = f2;
        }
    }
    return volume;
}

double hypervolume_2d(const std::vector<FrontSample<double>>& samples, std::pair<double, double> reference)
{
    std::vector<std::pair<double, double>> points;
    points.reserve(samples.size());
    for (const auto& s : samples) points.emplace_back(s.f1, s.f2);
    return hypervolume_2d(std::move(points), reference);
}

} // namespace bicq
