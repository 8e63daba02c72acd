#ifndef BICQ_FRONT_CSV_HPP
#define BICQ_FRONT_CSV_HPP

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bicq/oracle.hpp"

namespace bicq {

/// CSV with header `t,x_1,...,x_n,f1,f2,du,dv` and one row per sample, every
/// float printed with 17 significant digits. A leading comment line
/// `# closed_form kappa_alpha=<v> kappa_beta=<v>` is emitted when `closed_form` is set.
void write_front_csv(std::ostream& out, const std::vector<FrontSample<double>>& samples,
                     const std::optional<ClosedFormFront<double>>& closed_form = std::nullopt);

/// Reads the (f1, f2) columns of a front CSV. Lines starting with '#' are
/// skipped; an empty input yields no points. Throws ParseError naming the line.
std::vector<std::pair<double, double>> read_front_points(std::istream& in);
std::vector<std::pair<double, double>> read_front_points(const std::filesystem::path& path);

} // namespace bicq

#endif
