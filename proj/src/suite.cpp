#include "bicq/suite.hpp"

#include <cmath>
#include <sstream>

namespace bicq {

namespace {

bool same(const Vec& a, const Vec& b) { return a.size() == b.size() && a == b; }
bool same(const Mat& a, const Mat& b) { return a.rows() == b.rows() && a.cols() == b.cols() && a == b; }

// Applies the normalization to freshly materialized data.
void normalize(InstanceDescriptor& d)
{
    d.alpha = 1.0;
    d.beta = 1.0;
    if (d.normalization == Normalization::none) return;
    const BiQuadraticProblem<double> scaled = normalize_scales(d.problem(), d.normalization);
    d.alpha = scaled.alpha();
    d.beta = scaled.beta();
}

} // namespace

const char* to_string(ProblemClass::Tag tag)
{
    using Tag = ProblemClass::Tag;
    switch (tag) {
    case Tag::sep_k: return "sep-k";
    case Tag::sep_o: return "sep-o";
    case Tag::sep_two_o: return "sep-two-o";
    case Tag::one: return "one";
    case Tag::one_o: return "one-o";
    case Tag::two: return "two";
    case Tag::two_o: return "two-o";
    case Tag::p10: return "p10";
    case Tag::custom: return "custom";
    }
    return "?";
}

std::optional<ProblemClass::Tag> class_tag_from_string(const std::string& name)
{
    using Tag = ProblemClass::Tag;
    for (Tag tag : {Tag::sep_k, Tag::sep_o, Tag::sep_two_o, Tag::one, Tag::one_o, Tag::two, Tag::two_o, Tag::p10,
                    Tag::custom}) {
        if (name == to_string(tag)) return tag;
    }
    return std::nullopt;
}

BiQuadraticProblem<double> InstanceDescriptor::problem() const
{
    if (x1.size() != n || x2.size() != n || q1.rows() != n || q2.rows() != n)
        throw DimensionMismatch("instance: materialized data does not match n = " + std::to_string(n));
    QuadraticObjective<double> f1(SpdMatrix<double>(q1), x1, alpha);
    QuadraticObjective<double> f2(SpdMatrix<double>(q2), x2, beta);
    return {std::move(f1), std::move(f2)};
}

std::string InstanceDescriptor::id() const
{
    std::ostringstream out;
    out << to_string(problem_class.tag);
    if (problem_class.tag == ProblemClass::Tag::sep_k) out << problem_class.k;
    out << "_n" << n;
    if (problem_class.randomized()) {
        if (spectrum_kind)
            out << '_' << to_string(*spectrum_kind);
        else
            out << "_spectrum";
        out << "_s" << seed;
    }
    return out.str();
}

bool operator==(const InstanceDescriptor& a, const InstanceDescriptor& b)
{
    return a.problem_class == b.problem_class && a.n == b.n && a.spectrum_kind == b.spectrum_kind
           && a.spectrum == b.spectrum && a.seed == b.seed && a.normalization == b.normalization && same(a.x1, b.x1)
           && same(a.x2, b.x2) && same(a.q1, b.q1) && same(a.q2, b.q2) && a.alpha == b.alpha && a.beta == b.beta;
}

InstanceDescriptor make_instance(ProblemClass problem_class, int n, const SpectrumSpec<double>& spectrum,
                                 std::uint64_t seed, Normalization normalization)
{
    using Tag = ProblemClass::Tag;
    if (n < 1) throw InvalidDimension("make_instance: n must be at least 1");
    if (spectrum.size() != n)
        throw DimensionMismatch("make_instance: spectrum has " + std::to_string(spectrum.size())
                                + " entries but n = " + std::to_string(n));
    if (!problem_class.randomized()) throw ValidationError("make_instance: p10/custom instances are not generated here");
    if (problem_class.tag == Tag::sep_k && (problem_class.k < 1 || problem_class.k > n))
        throw ValidationError("sep-k: k must satisfy 1 <= k <= n (k = " + std::to_string(problem_class.k)
                              + ", n = " + std::to_string(n) + ")");
    if (problem_class.tag != Tag::sep_k) problem_class.k = 0;

    InstanceDescriptor d;
    d.problem_class = problem_class;
    d.n = n;
    d.spectrum = spectrum;
    d.seed = seed;
    d.normalization = normalization;
    d.x1 = Vec::Zero(n);

    const Mat delta = spectrum.entries().asDiagonal();
    const Vec ones = Vec::Ones(n);
    auto rotated_ones = [&] { return Vec(haar_orthogonal(n, substream::o(seed)).matrix() * ones); };
    auto rotated_delta = [&](std::uint64_t stream) {
        return conjugate(spectrum, haar_orthogonal(n, stream)).matrix();
    };

    switch (problem_class.tag) {
    case Tag::sep_k:
        d.x2 = Vec::Zero(n);
        d.x2[problem_class.k - 1] = std::sqrt(double(n));
        d.q1 = d.q2 = delta;
        break;
    case Tag::sep_o:
        d.x2 = rotated_ones();
        d.q1 = d.q2 = delta;
        break;
    case Tag::sep_two_o:
        d.x2 = rotated_ones();
        d.q1 = delta;
        d.q2 = conjugate(spectrum, random_permutation(n, substream::o1(seed))).matrix();
        break;
    case Tag::one:
        d.x2 = ones;
        d.q1 = d.q2 = rotated_delta(substream::o1(seed));
        break;
    case Tag::one_o:
        d.x2 = rotated_ones();
        d.q1 = d.q2 = rotated_delta(substream::o1(seed));
        break;
    case Tag::two:
        d.x2 = ones;
        d.q1 = rotated_delta(substream::o1(seed));
        d.q2 = rotated_delta(substream::o2(seed));
        break;
    case Tag::two_o:
        d.x2 = rotated_ones();
        d.q1 = rotated_delta(substream::o1(seed));
        d.q2 = rotated_delta(substream::o2(seed));
        break;
    case Tag::p10:
    case Tag::custom: break;
    }
    normalize(d);
    return d;
}

InstanceDescriptor make_instance(ProblemClass problem_class, int n, SpectrumKind kind, std::uint64_t seed,
                                 Normalization normalization)
{
    InstanceDescriptor d = make_instance(problem_class, n, make_spectrum(kind, n), seed, normalization);
    d.spectrum_kind = kind;
    return d;
}

InstanceDescriptor make_p10(Normalization normalization)
{
    constexpr int n = 10;
    InstanceDescriptor d;
    d.problem_class = ProblemClass::of(ProblemClass::Tag::p10);
    d.n = n;
    d.normalization = normalization;
    d.x1 = Vec::Zero(n);
    d.x2 = Vec::Ones(n);
    d.q1 = Mat::Zero(n, n);
    d.q2 = Mat::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        d.q1(i, i) = std::pow(100.0, double(i) / 9.0);
        d.q2(i, i) = std::pow(10.0, double(i) / 9.0);
    }
    normalize(d);
    return d;
}

InstanceDescriptor make_custom(const Vec& x1, const Vec& x2, const Mat& q1, const Mat& q2, Normalization normalization)
{
    InstanceDescriptor d;
    d.problem_class = ProblemClass::of(ProblemClass::Tag::custom);
    d.n = static_cast<int>(x1.size());
    d.normalization = normalization;
    d.x1 = x1;
    d.x2 = x2;
    d.q1 = q1;
    d.q2 = q2;
    normalize(d);
    return d;
}

bool rematerializes(const InstanceDescriptor& d)
{
    switch (d.problem_class.tag) {
    case ProblemClass::Tag::custom: return true;
    case ProblemClass::Tag::p10: return make_p10(d.normalization) == d;
    default: break;
    }
    if (!d.spectrum) return false;
    InstanceDescriptor again = make_instance(d.problem_class, d.n, *d.spectrum, d.seed, d.normalization);
    again.spectrum_kind = d.spectrum_kind;
    return again == d;
}

TransformedProblem double_norm_problem(const Vec& x1, const Vec& x2)
{
    if (x1.size() != x2.size()) throw DimensionMismatch("double_norm_problem: optima have different dimensions");
    const SpdMatrix<double> identity(Mat::Identity(x1.size(), x1.size()));
    BiQuadraticProblem<double> base(QuadraticObjective<double>(identity, x1), QuadraticObjective<double>(identity, x2));
    return {std::move(base), MonotoneTransform::sqrt(), MonotoneTransform::sqrt()};
}

} // namespace bicq
