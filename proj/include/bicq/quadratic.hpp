#ifndef BICQ_QUADRATIC_HPP
#define BICQ_QUADRATIC_HPP

#include <cmath>
#include <optional>
#include <string>
#include <utility>

#include "bicq/matrixcore.hpp"

namespace bicq {

/// f(x) = (x - optimum)^T Q (x - optimum) / scale
template <typename Scalar>
class QuadraticObjective {
public:
    QuadraticObjective(SpdMatrix<Scalar> hessian, Vector<Scalar> optimum, Scalar scale = Scalar(1))
        : q_(std::move(hessian)), optimum_(std::move(optimum)), scale_(scale)
    {
        if (optimum_.size() != q_.size()) throw DimensionMismatch("quadratic: optimum and matrix sizes differ");
        if (!(scale_ > Scalar(0)) || !std::isfinite(static_cast<double>(scale_)))
            throw DomainError("quadratic: scale must be a finite positive number");
    }

    const SpdMatrix<Scalar>& hessian() const { return q_; }
    const Vector<Scalar>& optimum() const { return optimum_; }
    Scalar scale() const { return scale_; }
    Index dim() const { return optimum_.size(); }

    QuadraticObjective with_scale(Scalar scale) const { return QuadraticObjective(q_, optimum_, scale); }

private:
    SpdMatrix<Scalar> q_;
    Vector<Scalar> optimum_;
    Scalar scale_;
};

template <typename Scalar, typename Derived>
Scalar evaluate(const QuadraticObjective<Scalar>& f, const Eigen::MatrixBase<Derived>& x)
{
    if (x.size() != f.dim()) throw DimensionMismatch("evaluate: point has wrong dimension");
    const Vector<Scalar> d = x - f.optimum();
    const Scalar value = d.dot(f.hessian().matrix() * d) / f.scale();
    return value > Scalar(0) ? value : Scalar(0);
}

/// (2 / scale) Q (x - optimum)
template <typename Scalar, typename Derived>
Vector<Scalar> gradient(const QuadraticObjective<Scalar>& f, const Eigen::MatrixBase<Derived>& x)
{
    if (x.size() != f.dim()) throw DimensionMismatch("gradient: point has wrong dimension");
    return (Scalar(2) / f.scale()) * (f.hessian().matrix() * (x - f.optimum()));
}

/// Ordered pair (f1, f2) with distinct optima on a common dimension.
template <typename Scalar>
class BiQuadraticProblem {
public:
    BiQuadraticProblem(QuadraticObjective<Scalar> f1, QuadraticObjective<Scalar> f2)
        : f1_(std::move(f1)), f2_(std::move(f2))
    {
        if (f1_.dim() != f2_.dim()) throw DimensionMismatch("problem: objectives have different dimensions");
        if (f1_.optimum() == f2_.optimum()) throw ValidationError("problem: the two optima must differ");
    }

    const QuadraticObjective<Scalar>& f1() const { return f1_; }
    const QuadraticObjective<Scalar>& f2() const { return f2_; }
    Index dim() const { return f1_.dim(); }

    const Vector<Scalar>& x1() const { return f1_.optimum(); }
    const Vector<Scalar>& x2() const { return f2_.optimum(); }
    const SpdMatrix<Scalar>& q1() const { return f1_.hessian(); }
    const SpdMatrix<Scalar>& q2() const { return f2_.hessian(); }
    Scalar alpha() const { return f1_.scale(); }
    Scalar beta() const { return f2_.scale(); }

    BiQuadraticProblem with_scales(Scalar alpha, Scalar beta) const
    {
        return BiQuadraticProblem(f1_.with_scale(alpha), f2_.with_scale(beta));
    }

    BiQuadraticProblem swapped() const { return BiQuadraticProblem(f2_, f1_); }

private:
    QuadraticObjective<Scalar> f1_;
    QuadraticObjective<Scalar> f2_;
};

/// Converts the problem to another scalar type (e.g. long double for
/// high-accuracy reference computations).
template <typename To, typename From>
BiQuadraticProblem<To> cast_problem(const BiQuadraticProblem<From>& p)
{
    auto convert = [](const QuadraticObjective<From>& f) {
        return QuadraticObjective<To>(SpdMatrix<To>(f.hessian().matrix().template cast<To>()),
                                      f.optimum().template cast<To>(), static_cast<To>(f.scale()));
    };
    return BiQuadraticProblem<To>(convert(p.f1()), convert(p.f2()));
}

enum class SpectrumKind { sphere, cigtab, ellipsoid };

inline const char* to_string(SpectrumKind kind)
{
    switch (kind) {
    case SpectrumKind::sphere: return "sphere";
    case SpectrumKind::cigtab: return "cigtab";
    case SpectrumKind::ellipsoid: return "ellipsoid";
    }
    return "?";
}

inline std::optional<SpectrumKind> spectrum_kind_from_string(const std::string& name)
{
    if (name == "sphere") return SpectrumKind::sphere;
    if (name == "cigtab") return SpectrumKind::cigtab;
    if (name == "ellipsoid") return SpectrumKind::ellipsoid;
    return std::nullopt;
}

/// sphere: all ones; cigtab: (1, 1e4, ..., 1e4, 1e8); ellipsoid: 10^(6 (i-1)/(n-1)).
template <typename Scalar = double>
SpectrumSpec<Scalar> make_spectrum(SpectrumKind kind, Index n)
{
    detail::require_dimension(n, "make_spectrum");
    Vector<Scalar> entries(n);
    switch (kind) {
    case SpectrumKind::sphere:
        entries.setOnes();
        break;
    case SpectrumKind::cigtab:
        if (n < 2) throw InvalidDimension("make_spectrum: cigtab needs n >= 2");
        entries.setConstant(Scalar(1e4));
        entries[0] = Scalar(1);
        entries[n - 1] = Scalar(1e8);
        break;
    case SpectrumKind::ellipsoid:
        if (n < 2) throw InvalidDimension("make_spectrum: ellipsoid needs n >= 2");
        for (Index i = 0; i < n; ++i)
            entries[i] = std::pow(Scalar(10), Scalar(6) * Scalar(i) / Scalar(n - 1));
        break;
    }
    return SpectrumSpec<Scalar>(std::move(entries));
}

/// Strictly increasing map on [0, inf). A closed set of shapes so that
/// transformed problems stay serializable.
class MonotoneTransform {
public:
    enum class Kind { identity, sqrt, affine, power };

    static MonotoneTransform identity() { return MonotoneTransform(Kind::identity, 1.0, 0.0, 1.0); }
    static MonotoneTransform sqrt() { return MonotoneTransform(Kind::sqrt, 1.0, 0.0, 0.5); }
    static MonotoneTransform affine(double a, double b)
    {
        if (!(a > 0.0)) throw DomainError("affine transform needs a positive slope");
        return MonotoneTransform(Kind::affine, a, b, 1.0);
    }
    static MonotoneTransform power(double p)
    {
        if (!(p > 0.0)) throw DomainError("power transform needs a positive exponent");
        return MonotoneTransform(Kind::power, 1.0, 0.0, p);
    }

    Kind kind() const { return kind_; }
    double slope() const { return a_; }
    double offset() const { return b_; }
    double exponent() const { return p_; }

    std::string name() const
    {
        switch (kind_) {
        case Kind::identity: return "identity";
        case Kind::sqrt: return "sqrt";
        case Kind::affine: return "affine(" + std::to_string(a_) + "," + std::to_string(b_) + ")";
        case Kind::power: return "power(" + std::to_string(p_) + ")";
        }
        return "?";
    }

private:
    MonotoneTransform(Kind kind, double a, double b, double p) : kind_(kind), a_(a), b_(b), p_(p) {}

    Kind kind_;
    double a_;
    double b_;
    double p_;
};

template <typename Scalar>
Scalar apply_transform(const MonotoneTransform& g, Scalar value)
{
    if (!(value >= Scalar(0))) throw DomainError("transform: argument must be non-negative");
    using std::pow;
    using std::sqrt;
    switch (g.kind()) {
    case MonotoneTransform::Kind::identity: return value;
    case MonotoneTransform::Kind::sqrt: return sqrt(value);
    case MonotoneTransform::Kind::affine: return Scalar(g.slope()) * value + Scalar(g.offset());
    case MonotoneTransform::Kind::power: return pow(value, Scalar(g.exponent()));
    }
    return value;
}

/// Factor gamma > 0 with Q1/alpha = gamma Q2/beta, if one exists.
///
/// The ratio is read off the largest-magnitude entry of Q2/beta and then
/// checked on every entry: |A_ij - gamma B_ij| <= 1e-10 max|A|.
template <typename Scalar>
std::optional<Scalar> is_proportional(const BiQuadraticProblem<Scalar>& p)
{
    const Matrix<Scalar> a = p.q1().matrix() / p.alpha();
    const Matrix<Scalar> b = p.q2().matrix() / p.beta();
    Index row = 0;
    Index col = 0;
    b.cwiseAbs().maxCoeff(&row, &col);
    const Scalar gamma = a(row, col) / b(row, col);
    if (!(gamma > Scalar(0))) return std::nullopt;
    const Scalar tolerance = Scalar(1e-10) * detail::max_abs<Scalar>(a);
    if (detail::max_abs<Scalar>(a - gamma * b) > tolerance) return std::nullopt;
    return gamma;
}

} // namespace bicq

#endif
