#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "bicq/suite.hpp"

namespace bicq {

namespace {

constexpr int format_version = 1;

// 17 significant digits; a trailing ".0" keeps integral values (and -0)
// floating-point on the way back in.
std::string number(double value)
{
    char buffer[40];
    std::snprintf(buffer, sizeof buffer, "%.17g", value);
    std::string text(buffer);
    if (text.find_first_of(".eEn") == std::string::npos) text += ".0";
    return text;
}

void write_vector(std::ostream& out, const Vec& v)
{
    out << '[';
    for (Eigen::Index i = 0; i < v.size(); ++i) out << (i ? ", " : "") << number(v[i]);
    out << ']';
}

void write_matrix(std::ostream& out, const Mat& m)
{
    out << "[\n";
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        out << "    ";
        write_vector(out, m.row(i).transpose());
        out << (i + 1 < m.rows() ? ",\n" : "\n");
    }
    out << "  ]";
}

using json = nlohmann::json;

const json& field(const json& doc, const char* name)
{
    if (!doc.contains(name)) throw ParseError(std::string("field '") + name + "'", "missing");
    return doc.at(name);
}

double read_number(const json& value, const std::string& where)
{
    if (!value.is_number()) throw ParseError(where, "expected a number");
    return value.get<double>();
}

Vec read_vector(const json& value, const std::string& where, int n)
{
    if (!value.is_array()) throw ParseError(where, "expected an array");
    if (static_cast<int>(value.size()) != n)
        throw ParseError(where, "expected " + std::to_string(n) + " entries, found " + std::to_string(value.size()));
    Vec v(n);
    for (int i = 0; i < n; ++i) v[i] = read_number(value[i], where + "[" + std::to_string(i) + "]");
    return v;
}

Mat read_matrix(const json& value, const std::string& where, int n)
{
    if (!value.is_array()) throw ParseError(where, "expected an array of rows");
    if (static_cast<int>(value.size()) != n)
        throw ParseError(where, "expected " + std::to_string(n) + " rows, found " + std::to_string(value.size()));
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.row(i) = read_vector(value[i], where + "[" + std::to_string(i) + "]", n).transpose();
    return m;
}

std::string read_string(const json& doc, const char* name)
{
    const json& value = field(doc, name);
    if (!value.is_string()) throw ParseError(std::string("field '") + name + "'", "expected a string");
    return value.get<std::string>();
}

} // namespace

std::string to_json_string(const InstanceDescriptor& d)
{
    std::ostringstream out;
    out << "{\n";
    out << "  \"format_version\": " << format_version << ",\n";
    out << "  \"class\": \"" << to_string(d.problem_class.tag) << "\",\n";
    if (d.problem_class.tag == ProblemClass::Tag::sep_k) out << "  \"k\": " << d.problem_class.k << ",\n";
    out << "  \"n\": " << d.n << ",\n";
    if (d.spectrum_kind) {
        out << "  \"spectrum_kind\": \"" << to_string(*d.spectrum_kind) << "\",\n";
    } else if (d.spectrum) {
        out << "  \"spectrum_entries\": ";
        write_vector(out, d.spectrum->entries());
        out << ",\n";
    }
    out << "  \"seed\": " << d.seed << ",\n";
    out << "  \"normalization\": \"" << to_string(d.normalization) << "\",\n";
    out << "  \"x1\": ";
    write_vector(out, d.x1);
    out << ",\n  \"x2\": ";
    write_vector(out, d.x2);
    out << ",\n  \"Q1\": ";
    write_matrix(out, d.q1);
    out << ",\n  \"Q2\": ";
    write_matrix(out, d.q2);
    out << ",\n  \"alpha\": " << number(d.alpha) << ",\n";
    out << "  \"beta\": " << number(d.beta) << "\n";
    out << "}\n";
    return out.str();
}

InstanceDescriptor from_json_string(const std::string& text)
{
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        const std::size_t end = std::min<std::size_t>(e.byte, text.size());
        const auto line = 1 + std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(end), '\n');
        throw ParseError("line " + std::to_string(line), "malformed JSON");
    }
    if (!doc.is_object()) throw ParseError("line 1", "expected a JSON object");

    const json& version = field(doc, "format_version");
    if (!version.is_number_integer() || version.get<int>() != format_version)
        throw ParseError("field 'format_version'", "unsupported version");

    InstanceDescriptor d;
    const std::string class_name = read_string(doc, "class");
    const auto tag = class_tag_from_string(class_name);
    if (!tag) throw ParseError("field 'class'", "unknown class '" + class_name + "'");
    d.problem_class.tag = *tag;

    const json& n_value = field(doc, "n");
    if (!n_value.is_number_integer() || n_value.get<long long>() < 1)
        throw ValidationError("field 'n': must be a positive integer");
    d.n = n_value.get<int>();

    if (*tag == ProblemClass::Tag::sep_k) {
        const json& k_value = field(doc, "k");
        if (!k_value.is_number_integer()) throw ParseError("field 'k'", "expected an integer");
        const long long k = k_value.get<long long>();
        if (k < 1 || k > d.n)
            throw ValidationError("field 'k': sep-k requires 1 <= k <= n (k = " + std::to_string(k)
                                  + ", n = " + std::to_string(d.n) + ")");
        d.problem_class.k = static_cast<int>(k);
    }

    if (doc.contains("spectrum_kind")) {
        const std::string name = read_string(doc, "spectrum_kind");
        const auto kind = spectrum_kind_from_string(name);
        if (!kind) throw ParseError("field 'spectrum_kind'", "unknown spectrum '" + name + "'");
        d.spectrum_kind = kind;
        try {
            d.spectrum = make_spectrum(*kind, d.n);
        } catch (const std::invalid_argument& e) {
            throw ValidationError(std::string("field 'spectrum_kind': ") + e.what());
        }
    }
    if (doc.contains("spectrum_entries")) {
        const Vec entries = read_vector(doc.at("spectrum_entries"), "field 'spectrum_entries'", d.n);
        try {
            SpectrumSpec<double> spectrum(entries);
            if (d.spectrum && !(*d.spectrum == spectrum))
                throw ValidationError("does not match spectrum_kind");
            d.spectrum = std::move(spectrum);
        } catch (const std::invalid_argument& e) {
            throw ValidationError(std::string("field 'spectrum_entries': ") + e.what());
        }
    }
    if (d.problem_class.randomized() && !d.spectrum)
        throw ParseError("field 'spectrum_kind'", "generated classes need spectrum_kind or spectrum_entries");

    const json& seed = field(doc, "seed");
    if (!seed.is_number_unsigned() && !(seed.is_number_integer() && seed.get<long long>() >= 0))
        throw ParseError("field 'seed'", "expected a non-negative integer");
    d.seed = seed.get<std::uint64_t>();

    const std::string normalization = read_string(doc, "normalization");
    const auto mode = normalization_from_string(normalization);
    if (!mode) throw ParseError("field 'normalization'", "unknown normalization '" + normalization + "'");
    d.normalization = *mode;

    d.x1 = read_vector(field(doc, "x1"), "field 'x1'", d.n);
    d.x2 = read_vector(field(doc, "x2"), "field 'x2'", d.n);
    d.q1 = read_matrix(field(doc, "Q1"), "field 'Q1'", d.n);
    d.q2 = read_matrix(field(doc, "Q2"), "field 'Q2'", d.n);
    d.alpha = read_number(field(doc, "alpha"), "field 'alpha'");
    d.beta = read_number(field(doc, "beta"), "field 'beta'");
    if (!(d.alpha > 0.0) || !(d.beta > 0.0)) throw ValidationError("fields 'alpha'/'beta' must be positive");

    for (const auto& [name, matrix] : {std::pair{"Q1", &d.q1}, std::pair{"Q2", &d.q2}}) {
        try {
            (void)SpdMatrix<double>(*matrix);
        } catch (const NotPositiveDefinite& e) {
            throw NotPositiveDefinite(std::string("field '") + name + "': " + e.what());
        }
    }
    (void)d.problem();
    return d;
}

void to_file(const InstanceDescriptor& d, const std::filesystem::path& path)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
    out << to_json_string(d);
    if (!out) throw std::runtime_error("failed writing '" + path.string() + "'");
}

InstanceDescriptor from_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return from_json_string(buffer.str());
}

} // namespace bicq
