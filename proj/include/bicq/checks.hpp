#ifndef BICQ_CHECKS_HPP
#define BICQ_CHECKS_HPP

#include <algorithm>
#include <cmath>
#include <vector>

#include "bicq/oracle.hpp"

// Measurements of the analytic identities satisfied by the Pareto-set
// parametrization. Every function returns the measured defect; the caller
// compares it against a tolerance.

namespace bicq::checks {

/// 1 + |x1|_inf + |x2|_inf
template <typename Scalar>
Scalar residual_scale(const BiQuadraticProblem<Scalar>& p)
{
    return Scalar(1) + p.x1().cwiseAbs().maxCoeff() + p.x2().cwiseAbs().maxCoeff();
}

/// |(1-t) Q1 (x - x1) - t Q2 (x2 - x)|_inf
template <typename Scalar>
Scalar stationarity_residual(const BiQuadraticProblem<Scalar>& p, const Vector<Scalar>& x, Scalar t)
{
    const Vector<Scalar> r = (Scalar(1) - t) * (p.q1().matrix() * (x - p.x1())) - t * (p.q2().matrix() * (p.x2() - x));
    return r.cwiseAbs().maxCoeff();
}

/// |[(1-t) Q1 + t Q2] x - (1-t) Q1 x1 - t Q2 x2|_inf
template <typename Scalar>
Scalar normal_equation_residual(const BiQuadraticProblem<Scalar>& p, const Vector<Scalar>& x, Scalar t)
{
    const Matrix<Scalar>& q1 = p.q1().matrix();
    const Matrix<Scalar>& q2 = p.q2().matrix();
    const Vector<Scalar> r = ((Scalar(1) - t) * q1 + t * q2) * x - (Scalar(1) - t) * (q1 * p.x1()) - t * (q2 * p.x2());
    return r.cwiseAbs().maxCoeff();
}

/// |t M phi'(t) - Q1 (phi(t) - x1)|_inf with M = (1-t) Q1 + t Q2.
template <typename Scalar>
Scalar tangent_equation_residual(const BiQuadraticProblem<Scalar>& p, const Vector<Scalar>& x,
                                 const Vector<Scalar>& dx, Scalar t)
{
    const Matrix<Scalar>& q1 = p.q1().matrix();
    const Vector<Scalar> r = t * (((Scalar(1) - t) * q1 + t * p.q2().matrix()) * dx) - q1 * (x - p.x1());
    return r.cwiseAbs().maxCoeff();
}

/// |(1-t) u' + t v'| / (|u'| + |v'| + 1)
template <typename Scalar>
Scalar weighted_derivative_defect(const FrontSample<Scalar>& s)
{
    using std::abs;
    return abs((Scalar(1) - s.t) * s.du + s.t * s.dv) / (abs(s.du) + abs(s.dv) + Scalar(1));
}

/// Euclidean distance from x to the segment [a, b].
template <typename Scalar>
Scalar distance_to_segment(const Vector<Scalar>& x, const Vector<Scalar>& a, const Vector<Scalar>& b)
{
    const Vector<Scalar> d = b - a;
    const Scalar length2 = d.squaredNorm();
    Scalar s = length2 > Scalar(0) ? (x - a).dot(d) / length2 : Scalar(0);
    s = std::clamp(s, Scalar(0), Scalar(1));
    return (x - a - s * d).norm();
}

/// Three-point derivative of y over the (possibly non-uniform) grid t at interior index k.
template <typename Scalar>
Scalar interior_derivative(const std::vector<Scalar>& t, const std::vector<Scalar>& y, std::size_t k)
{
    const Scalar h0 = t[k] - t[k - 1];
    const Scalar h1 = t[k + 1] - t[k];
    return (-h1 / (h0 * (h0 + h1))) * y[k - 1] + ((h1 - h0) / (h0 * h1)) * y[k] + (h0 / (h1 * (h0 + h1))) * y[k + 1];
}

/// u' v'' - u'' v' at every interior sample, with u'', v'' obtained by
/// differencing the analytic first derivatives over the sample grid.
template <typename Scalar>
std::vector<Scalar> curvature_numerators(const std::vector<FrontSample<Scalar>>& samples)
{
    std::vector<Scalar> t, du, dv;
    for (const auto& s : samples) {
        t.push_back(s.t);
        du.push_back(s.du);
        dv.push_back(s.dv);
    }
    std::vector<Scalar> out;
    for (std::size_t k = 1; k + 1 < samples.size(); ++k) {
        const Scalar ddu = interior_derivative(t, du, k);
        const Scalar ddv = interior_derivative(t, dv, k);
        out.push_back(du[k] * ddv - ddu * dv[k]);
    }
    return out;
}

/// Central difference of a scalar function at t with half-step h.
template <typename Scalar, typename F>
Scalar central_difference(F&& f, Scalar t, Scalar h)
{
    return (f(t + h) - f(t - h)) / (Scalar(2) * h);
}

/// One-sided estimate of lim_{t->0} u'(t)/t = u''(0) from values of
/// u = f1 o phi at 0, h, 2h, 3h (second-order stencil).
template <typename Scalar>
Scalar tangent_estimate_at_zero(const BiQuadraticProblem<Scalar>& p, Scalar h)
{
    auto u = [&](Scalar s) { return evaluate(p.f1(), phi(p, s)); };
    return (Scalar(2) * u(Scalar(0)) - Scalar(5) * u(h) + Scalar(4) * u(Scalar(2) * h) - u(Scalar(3) * h)) / (h * h);
}

/// One-sided estimate of lim_{t->1} v'(t)/(1 - t) = -v''(1) from values of
/// v = f2 o phi at 1, 1 - h, 1 - 2h, 1 - 3h.
template <typename Scalar>
Scalar tangent_estimate_at_one(const BiQuadraticProblem<Scalar>& p, Scalar h)
{
    auto v = [&](Scalar s) { return evaluate(p.f2(), phi(p, s)); };
    const Scalar one(1);
    return -(Scalar(2) * v(one) - Scalar(5) * v(one - h) + Scalar(4) * v(one - Scalar(2) * h) - v(one - Scalar(3) * h))
           / (h * h);
}

} // namespace bicq::checks

#endif
