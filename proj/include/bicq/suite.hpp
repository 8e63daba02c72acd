#ifndef BICQ_SUITE_HPP
#define BICQ_SUITE_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "bicq/oracle.hpp"

namespace bicq {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

/// The seven test-problem classes, plus two tags for fixed instances:
/// `p10` (the diagonal n = 10 regression instance) and `custom` (matrices
/// given explicitly, nothing to re-materialize).
struct ProblemClass {
    enum class Tag { sep_k, sep_o, sep_two_o, one, one_o, two, two_o, p10, custom };

    Tag tag = Tag::two_o;
    int k = 0; ///< 1-based axis of x2 for sep-k, unused otherwise

    static ProblemClass sep_k(int axis) { return {Tag::sep_k, axis}; }
    static ProblemClass of(Tag tag) { return {tag, 0}; }

    bool randomized() const { return tag != Tag::p10 && tag != Tag::custom; }

    friend bool operator==(const ProblemClass&, const ProblemClass&) = default;
};

const char* to_string(ProblemClass::Tag tag);
std::optional<ProblemClass::Tag> class_tag_from_string(const std::string& name);

/// Seed offsets of the independent random matrices of an instance.
/// O (rotating x2) uses the seed itself, O1 uses seed ^ 1, O2 uses seed ^ 2.
namespace substream {
inline std::uint64_t o(std::uint64_t seed) { return seed; }
inline std::uint64_t o1(std::uint64_t seed) { return seed ^ 1u; }
inline std::uint64_t o2(std::uint64_t seed) { return seed ^ 2u; }
} // namespace substream

struct InstanceDescriptor {
    ProblemClass problem_class;
    int n = 0;
    std::optional<SpectrumKind> spectrum_kind;       ///< named spectrum, if any
    std::optional<SpectrumSpec<double>> spectrum;    ///< absent for p10/custom
    std::uint64_t seed = 0;
    Normalization normalization = Normalization::fig2;

    Vec x1;
    Vec x2;
    Mat q1;
    Mat q2;
    double alpha = 1.0;
    double beta = 1.0;

    /// Validates Q1, Q2 (SPD) and the optima, then builds the problem.
    BiQuadraticProblem<double> problem() const;

    /// Short identifier such as "two-o_n10_ellipsoid_s1".
    std::string id() const;
};

/// Field-by-field equality, matrices compared exactly.
bool operator==(const InstanceDescriptor& a, const InstanceDescriptor& b);

/// Materializes an instance per class:
///
///   class      x2             Q1            Q2
///   sep-k      sqrt(n) e_k    D             D
///   sep-o      O 1            D             D
///   sep-two-o  O 1            D             P^T D P   (P permutation)
///   one        1              O1^T D O1     O1^T D O1
///   one-o      O 1            O1^T D O1     O1^T D O1
///   two        1              O1^T D O1     O2^T D O2
///   two-o      O 1            O1^T D O1     O2^T D O2
///
/// with x1 = 0 and D = diag(spectrum). Scales are normalized last.
InstanceDescriptor make_instance(ProblemClass problem_class, int n, const SpectrumSpec<double>& spectrum,
                                 std::uint64_t seed, Normalization normalization = Normalization::fig2);

InstanceDescriptor make_instance(ProblemClass problem_class, int n, SpectrumKind kind, std::uint64_t seed,
                                 Normalization normalization = Normalization::fig2);

/// n = 10, x1 = 0, x2 = 1, Q1 = diag(100^((i-1)/9)), Q2 = diag(10^((i-1)/9)).
InstanceDescriptor make_p10(Normalization normalization = Normalization::none);

/// Instance with explicitly given data (class tag `custom`).
InstanceDescriptor make_custom(const Vec& x1, const Vec& x2, const Mat& q1, const Mat& q2,
                               Normalization normalization = Normalization::none);

/// Re-runs make_instance/make_p10 from the generating fields and compares the
/// materialized data bit for bit. Custom instances trivially pass.
bool rematerializes(const InstanceDescriptor& d);

void to_file(const InstanceDescriptor& d, const std::filesystem::path& path);
InstanceDescriptor from_file(const std::filesystem::path& path);

std::string to_json_string(const InstanceDescriptor& d);
InstanceDescriptor from_json_string(const std::string& text);

/// (g o f1, g o f2) for a common strictly increasing g.
struct TransformedProblem {
    BiQuadraticProblem<double> base;
    MonotoneTransform g1;
    MonotoneTransform g2;

    double value1(const Vec& x) const { return apply_transform(g1, evaluate(base.f1(), x)); }
    double value2(const Vec& x) const { return apply_transform(g2, evaluate(base.f2(), x)); }
};

/// (x -> |x - x1|, x -> |x - x2|) written as sqrt of the unit double sphere.
TransformedProblem double_norm_problem(const Vec& x1, const Vec& x2);

} // namespace bicq

#endif
