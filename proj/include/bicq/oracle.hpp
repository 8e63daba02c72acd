#ifndef BICQ_ORACLE_HPP
#define BICQ_ORACLE_HPP

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <vector>

#include "bicq/quadratic.hpp"

namespace bicq {

/// One point of the Pareto set/front, parametrized by the scalarization
/// weight t: x = phi(t), f1 = u(t), f2 = v(t), du = u'(t), dv = v'(t).
template <typename Scalar>
struct FrontSample {
    Scalar t;
    Vector<Scalar> x;
    Scalar f1;
    Scalar f2;
    Scalar du;
    Scalar dv;
};

/// Front of a problem with proportional Hessians: v = kb (1 - sqrt(u / ka))^2 on [0, ka].
template <typename Scalar>
struct ClosedFormFront {
    Scalar kappa_alpha;
    Scalar kappa_beta;

    Scalar operator()(Scalar u) const
    {
        using std::sqrt;
        const Scalar ratio = std::clamp(u / kappa_alpha, Scalar(0), Scalar(1));
        const Scalar s = Scalar(1) - sqrt(ratio);
        return kappa_beta * s * s;
    }
};

enum class TGrid { uniform, chebyshev };

enum class Normalization { fig2, kappa_unit, none };

namespace detail {

template <typename Scalar>
void require_unit_interval(Scalar t, const char* what)
{
    if (!(t >= Scalar(0) && t <= Scalar(1))) throw DomainError(std::string(what) + ": t must lie in [0, 1]");
}

template <typename Scalar>
struct PointAndTangent {
    Vector<Scalar> x;
    Vector<Scalar> dx;
};

// phi(t) solves [(1-t)Q1 + tQ2] x = (1-t)Q1 x1 + tQ2 x2. Differentiating that
// system gives [(1-t)Q1 + tQ2] phi' = Q2 (x2 - phi) + Q1 (phi - x1), which is
// regular on all of [0, 1] and equivalent to t M phi' = Q1 (phi - x1) on (0, 1].
template <typename Scalar>
PointAndTangent<Scalar> phi_and_tangent(const BiQuadraticProblem<Scalar>& p, Scalar t)
{
    require_unit_interval(t, "phi");
    const Matrix<Scalar>& q1 = p.q1().matrix();
    const Matrix<Scalar>& q2 = p.q2().matrix();
    const SpdMatrix<Scalar> m = convex_combination(p.q1(), p.q2(), t);

    Vector<Scalar> x;
    if (t == Scalar(0))
        x = p.x1();
    else if (t == Scalar(1))
        x = p.x2();
    else
        x = m.solve((Scalar(1) - t) * (q1 * p.x1()) + t * (q2 * p.x2()));

    Vector<Scalar> dx = m.solve(q2 * (p.x2() - x) + q1 * (x - p.x1()));
    return {std::move(x), std::move(dx)};
}

} // namespace detail

/// Point of the Pareto set minimizing (1 - t) f1 + t f2 (in the unit-scale
/// parametrization); phi(0) = x1 and phi(1) = x2 exactly.
template <typename Scalar>
Vector<Scalar> phi(const BiQuadraticProblem<Scalar>& p, Scalar t)
{
    return detail::phi_and_tangent(p, t).x;
}

/// d phi / dt. At t = 0 this is Q1^{-1} Q2 (x2 - x1); at t = 1, Q2^{-1} Q1 (x2 - x1).
template <typename Scalar>
Vector<Scalar> phi_prime(const BiQuadraticProblem<Scalar>& p, Scalar t)
{
    return detail::phi_and_tangent(p, t).dx;
}

template <typename Scalar>
FrontSample<Scalar> front_sample(const BiQuadraticProblem<Scalar>& p, Scalar t)
{
    auto [x, dx] = detail::phi_and_tangent(p, t);
    const Scalar u = evaluate(p.f1(), x);
    const Scalar v = evaluate(p.f2(), x);
    const Scalar du = gradient(p.f1(), x).dot(dx);
    const Scalar dv = gradient(p.f2(), x).dot(dx);
    return {t, std::move(x), u, v, du, dv};
}

/// m parameter values in [0, 1], both endpoints included. The Chebyshev grid
/// uses the Lobatto nodes (1 - cos(pi k / (m - 1))) / 2.
template <typename Scalar = double>
std::vector<Scalar> make_t_grid(int m, TGrid grid = TGrid::uniform)
{
    if (m < 2) throw DomainError("t grid: at least 2 samples required");
    std::vector<Scalar> ts(static_cast<std::size_t>(m));
    const Scalar last = Scalar(m - 1);
    for (int k = 0; k < m; ++k) {
        if (grid == TGrid::uniform) {
            ts[k] = Scalar(k) / last;
        } else {
            using std::cos;
            ts[k] = (Scalar(1) - cos(std::numbers::pi_v<Scalar> * Scalar(k) / last)) / Scalar(2);
        }
    }
    ts.front() = Scalar(0);
    ts.back() = Scalar(1);
    return ts;
}

template <typename Scalar>
std::vector<FrontSample<Scalar>> front_samples(const BiQuadraticProblem<Scalar>& p, int m, TGrid grid = TGrid::uniform)
{
    std::vector<FrontSample<Scalar>> samples;
    samples.reserve(static_cast<std::size_t>(m));
    for (Scalar t : make_t_grid<Scalar>(m, grid)) samples.push_back(front_sample(p, t));
    return samples;
}

/// kappa_alpha = d^T Q1 d / alpha, kappa_beta = d^T Q2 d / beta with d = x2 - x1.
/// Throws NotApplicable unless the Hessians are proportional.
template <typename Scalar>
ClosedFormFront<Scalar> closed_form_front(const BiQuadraticProblem<Scalar>& p)
{
    if (!is_proportional(p)) throw NotApplicable("closed-form front requires proportional Hessians");
    const Vector<Scalar> d = p.x2() - p.x1();
    return {d.dot(p.q1().matrix() * d) / p.alpha(), d.dot(p.q2().matrix() * d) / p.beta()};
}

/// Weight s of the scaled objectives (1 - s) f1 + s f2 mapped to the
/// unit-scale parameter t = s alpha / ((1 - s) beta + s alpha).
template <typename Scalar>
Scalar reparam_s_to_t(Scalar s, Scalar alpha, Scalar beta)
{
    detail::require_unit_interval(s, "reparam_s_to_t");
    if (!(alpha > Scalar(0) && beta > Scalar(0))) throw DomainError("reparam_s_to_t: scales must be positive");
    if (s == Scalar(0) || s == Scalar(1)) return s;
    return s * alpha / ((Scalar(1) - s) * beta + s * alpha);
}

/// lim_{t->0} u'(t) / t = (2/alpha) <Q1^{-1} Q2 d, Q2 d>, d = x2 - x1.
template <typename Scalar>
Scalar tangent_limit_at_zero(const BiQuadraticProblem<Scalar>& p)
{
    const Vector<Scalar> w = p.q2().matrix() * (p.x2() - p.x1());
    return Scalar(2) / p.alpha() * p.q1().solve(w).dot(w);
}

/// lim_{t->1} v'(t) / (1 - t) = -(2/beta) <Q2^{-1} Q1 d, Q1 d>, d = x1 - x2.
template <typename Scalar>
Scalar tangent_limit_at_one(const BiQuadraticProblem<Scalar>& p)
{
    const Vector<Scalar> w = p.q1().matrix() * (p.x1() - p.x2());
    return -Scalar(2) / p.beta() * p.q2().solve(w).dot(w);
}

/// fig2: alpha = beta = max(f1(x2), f2(x1)) measured with unit scales.
/// kappa_unit: alpha = d^T Q1 d, beta = d^T Q2 d, so that kappa_alpha = kappa_beta = 1.
template <typename Scalar>
BiQuadraticProblem<Scalar> normalize_scales(const BiQuadraticProblem<Scalar>& p, Normalization mode)
{
    const Vector<Scalar> d = p.x2() - p.x1();
    const Scalar a = d.dot(p.q1().matrix() * d);
    const Scalar b = d.dot(p.q2().matrix() * d);
    switch (mode) {
    case Normalization::fig2: {
        const Scalar s = std::max(a, b);
        return p.with_scales(s, s);
    }
    case Normalization::kappa_unit: return p.with_scales(a, b);
    case Normalization::none: return p;
    }
    return p;
}

inline const char* to_string(Normalization mode)
{
    switch (mode) {
    case Normalization::fig2: return "fig2";
    case Normalization::kappa_unit: return "kappa_unit";
    case Normalization::none: return "none";
    }
    return "?";
}

inline std::optional<Normalization> normalization_from_string(const std::string& name)
{
    if (name == "fig2") return Normalization::fig2;
    if (name == "kappa_unit") return Normalization::kappa_unit;
    if (name == "none") return Normalization::none;
    return std::nullopt;
}

inline const char* to_string(TGrid grid) { return grid == TGrid::uniform ? "uniform" : "chebyshev"; }

} // namespace bicq

#endif
