#include "bicq/front_csv.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace bicq {

namespace {

std::string number(double value)
{
    char buffer[40];
    std::snprintf(buffer, sizeof buffer, "%.17g", value);
    return buffer;
}

std::vector<std::string> split(const std::string& line)
{
    std::vector<std::string> cells;
    std::stringstream stream(line);
    std::string cell;
    while (std::getline(stream, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    return cells;
}

std::string trim(std::string s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double parse_double(const std::string& cell, const std::string& where)
{
    const std::string text = trim(cell);
    double value = 0.0;
    const auto [end, error] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || error != std::errc() || end != text.data() + text.size())
        throw ParseError(where, "'" + text + "' is not a number");
    return value;
}

} // namespace

void write_front_csv(std::ostream& out, const std::vector<FrontSample<double>>& samples,
                     const std::optional<ClosedFormFront<double>>& closed_form)
{
    if (closed_form)
        out << "# closed_form kappa_alpha=" << number(closed_form->kappa_alpha)
            << " kappa_beta=" << number(closed_form->kappa_beta) << "\n";
    const Eigen::Index n = samples.empty() ? 0 : samples.front().x.size();
    out << "t";
    for (Eigen::Index i = 1; i <= n; ++i) out << ",x_" << i;
    out << ",f1,f2,du,dv\n";
    for (const auto& s : samples) {
        out << number(s.t);
        for (Eigen::Index i = 0; i < n; ++i) out << ',' << number(s.x[i]);
        out << ',' << number(s.f1) << ',' << number(s.f2) << ',' << number(s.du) << ',' << number(s.dv) << '\n';
    }
}

std::vector<std::pair<double, double>> read_front_points(std::istream& in)
{
    std::vector<std::pair<double, double>> points;
    std::string line;
    int line_number = 0;
    std::optional<std::size_t> f1_column;
    std::optional<std::size_t> f2_column;
    std::size_t width = 0;
    while (std::getline(in, line)) {
        ++line_number;
        const std::string where = "line " + std::to_string(line_number);
        if (trim(line).empty() || trim(line).front() == '#') continue;
        const std::vector<std::string> cells = split(line);
        if (!f1_column) {
            for (std::size_t i = 0; i < cells.size(); ++i) {
                const std::string name = trim(cells[i]);
                if (name == "f1") f1_column = i;
                if (name == "f2") f2_column = i;
            }
            if (!f1_column || !f2_column) throw ParseError(where, "header must name columns f1 and f2");
            width = cells.size();
            continue;
        }
        if (cells.size() != width)
            throw ParseError(where, "expected " + std::to_string(width) + " columns, found " + std::to_string(cells.size()));
        points.emplace_back(parse_double(cells[*f1_column], where), parse_double(cells[*f2_column], where));
    }
    return points;
}

std::vector<std::pair<double, double>> read_front_points(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
    return read_front_points(in);
}

} // namespace bicq
