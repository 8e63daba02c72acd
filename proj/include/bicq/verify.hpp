#ifndef BICQ_VERIFY_HPP
#define BICQ_VERIFY_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "bicq/suite.hpp"

namespace bicq {

/// Regular tensor grid: points_per_axis points per coordinate between lower and upper.
struct GridSpec {
    Vec lower;
    Vec upper;
    int points_per_axis = 2;
    std::uint64_t budget = 10'000'000;

    /// Throws if the box is empty or the grid exceeds its budget.
    void validate() const;
    std::uint64_t total_points() const;
    /// Largest per-axis spacing.
    double spacing() const;
    Vec point(std::uint64_t linear_index) const;
    bool contains(const Vec& x) const;
};

/// Bounding box of {x1, x2} padded on every side by half of its widest extent.
GridSpec default_grid(const Vec& x1, const Vec& x2, int points_per_axis = 401);

struct ObjectivePair {
    std::function<double(const Vec&)> f1;
    std::function<double(const Vec&)> f2;
};

ObjectivePair objectives_of(const BiQuadraticProblem<double>& p);
ObjectivePair objectives_of(const TransformedProblem& p);
ObjectivePair transformed(const BiQuadraticProblem<double>& p, const MonotoneTransform& g1,
                          const MonotoneTransform& g2);

struct GridPoint {
    std::uint64_t index; ///< linear index into the grid
    Vec x;
    double f1;
    double f2;
};

/// Grid points not dominated by any other grid point (exact float
/// comparisons), sorted by f1 then f2.
std::vector<GridPoint> brute_force_pareto(const ObjectivePair& objectives, const GridSpec& grid);

/// True iff the original and transformed problems have the same
/// nondominated grid points.
bool lemma1_check(const BiQuadraticProblem<double>& p, const MonotoneTransform& g1, const MonotoneTransform& g2,
                  const GridSpec& grid);

/// Symmetric Hausdorff distance in decision space.
double hausdorff_to_oracle(const std::vector<GridPoint>& brute_force, const std::vector<FrontSample<double>>& samples);
double hausdorff_distance(const std::vector<Vec>& a, const std::vector<Vec>& b);

struct DominanceViolation {
    std::size_t sample = 0; ///< index of the sample
    double distance = 0.0;  ///< distance of the farthest dominating grid point
};

/// Samples inside the grid box that some grid point farther than `radius`
/// dominates.
std::vector<DominanceViolation> dominated_samples(const ObjectivePair& objectives, const GridSpec& grid,
                                                  const std::vector<FrontSample<double>>& samples, double radius);

/// Area dominated by `points` and bounded by `reference`. Points that do not
/// strictly dominate the reference contribute nothing.
double hypervolume_2d(std::vector<std::pair<double, double>> points, std::pair<double, double> reference);

double hypervolume_2d(const std::vector<FrontSample<double>>& samples, std::pair<double, double> reference);

enum class Status { pass, fail, not_applicable };

const char* to_string(Status status);

struct PropertyEntry {
    std::string name;
    Status status = Status::not_applicable;
    double value = 0.0;
    double tolerance = 0.0;
    std::string detail;
};

struct PropertyReport {
    std::string instance_id;
    std::vector<PropertyEntry> properties;
    std::vector<std::string> notes;

    bool all_pass() const;
    const PropertyEntry* find(const std::string& name) const;
    std::string to_json() const;
    std::string to_table() const;
};

struct ReportConfig {
    int samples = 1001;
    TGrid grid = TGrid::uniform;
    int brute_force_points = 401;
    bool brute_force = true; ///< cross-check against a grid when n = 2
};

/// Names of the properties a report always carries, in report order.
const std::vector<std::string>& report_property_names();

PropertyReport run_report(const InstanceDescriptor& d, const ReportConfig& config = {});

} // namespace bicq

#endif
