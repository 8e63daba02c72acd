#include <doctest.h>

#include <cmath>

#include "bicq/quadratic.hpp"
#include "bicq/random.hpp"

using namespace bicq;
using M = Matrix<double>;
using V = Vector<double>;

namespace {

QuadraticObjective<double> scalar(double q, double optimum, double scale = 1.0)
{
    return QuadraticObjective<double>(SpdMatrix<double>(M::Constant(1, 1, q)), V::Constant(1, optimum), scale);
}

} // namespace

TEST_CASE("evaluate")
{
    const QuadraticObjective<double> sphere(SpdMatrix<double>(M::Identity(3, 3)), V::Zero(3));
    CHECK(evaluate(sphere, V::Zero(3)) == 0.0);
    CHECK(evaluate(scalar(2, 0), V::Constant(1, 3.0)) == 18.0);

    V delta(3);
    delta << 1, 4, 9;
    const OrthogonalMatrix<double> o = haar_orthogonal(3, 5);
    const QuadraticObjective<double> f(conjugate(SpectrumSpec<double>(delta), o), V::Ones(3), 2.0);
    // O^T e_i is an eigenvector of O^T diag O with eigenvalue delta_i.
    for (Index i = 0; i < 3; ++i) {
        const V e = 0.5 * o.matrix().transpose().col(i);
        CHECK(evaluate(f, V(V::Ones(3) + e)) == doctest::Approx(delta[i] * e.squaredNorm() / 2.0));
    }
    CHECK_THROWS_AS(evaluate(f, V::Zero(2)), DimensionMismatch);
}

TEST_CASE("gradient")
{
    CHECK(gradient(scalar(2, 0), V::Constant(1, 3.0))[0] == 12.0);
    V x(3);
    x << 1, -2, 0.5;
    CHECK(gradient(QuadraticObjective<double>(SpdMatrix<double>(M::Identity(3, 3)), V::Zero(3), 2.0), x) == x);

    V delta(4);
    delta << 1, 2, 5, 7;
    V optimum(4);
    optimum << 0.5, -1, 2, 1;
    const QuadraticObjective<double> f(conjugate(SpectrumSpec<double>(delta), haar_orthogonal(4, 8)), optimum, 3.0);
    CHECK(gradient(f, f.optimum()).cwiseAbs().maxCoeff() == 0.0);

    // Central differences of evaluate agree with the analytic gradient.
    Rng rng(4);
    for (int trial = 0; trial < 20; ++trial) {
        V y(4);
        for (Index i = 0; i < 4; ++i) y[i] = 3 * rng.gaussian();
        const V g = gradient(f, y);
        for (Index i = 0; i < 4; ++i) {
            const double h = 1e-5;
            V plus = y, minus = y;
            plus[i] += h;
            minus[i] -= h;
            const double fd = (evaluate(f, plus) - evaluate(f, minus)) / (2 * h);
            CHECK(std::abs(fd - g[i]) <= 1e-6 * (1 + std::abs(g[i])));
        }
    }
}

TEST_CASE("make_spectrum")
{
    CHECK(make_spectrum(SpectrumKind::sphere, 3).entries() == V::Ones(3));
    V cigtab(4);
    cigtab << 1, 1e4, 1e4, 1e8;
    CHECK(make_spectrum(SpectrumKind::cigtab, 4).entries() == cigtab);
    const V ellipsoid = make_spectrum(SpectrumKind::ellipsoid, 3).entries();
    CHECK(ellipsoid[0] == 1.0);
    CHECK(ellipsoid[1] == doctest::Approx(1e3));
    CHECK(ellipsoid[2] == doctest::Approx(1e6));
    CHECK(make_spectrum(SpectrumKind::ellipsoid, 10).condition_number() == doctest::Approx(1e6));
    CHECK_THROWS_AS(make_spectrum(SpectrumKind::sphere, 0), InvalidDimension);
    CHECK(spectrum_kind_from_string("cigtab") == SpectrumKind::cigtab);
    CHECK_FALSE(spectrum_kind_from_string("rosenbrock"));
}

TEST_CASE("monotone transforms")
{
    CHECK(apply_transform(MonotoneTransform::identity(), 0.7) == 0.7);
    CHECK(apply_transform(MonotoneTransform::sqrt(), 25.0) == 5.0);
    CHECK(apply_transform(MonotoneTransform::affine(2, 1), 3.0) == 7.0);
    CHECK(apply_transform(MonotoneTransform::power(2), 3.0) == 9.0);
    CHECK_THROWS_AS(apply_transform(MonotoneTransform::sqrt(), -1.0), DomainError);
    CHECK_THROWS_AS(MonotoneTransform::affine(0, 1), DomainError);
    CHECK_THROWS_AS(MonotoneTransform::power(-1), DomainError);

    Rng rng(21);
    for (const MonotoneTransform& g : {MonotoneTransform::identity(), MonotoneTransform::sqrt(),
                                       MonotoneTransform::affine(0.3, -2), MonotoneTransform::power(0.2),
                                       MonotoneTransform::power(3)}) {
        for (int trial = 0; trial < 200; ++trial) {
            const double a = 10 * rng.uniform();
            const double b = a + 1e-3 + rng.uniform();
            CHECK(apply_transform(g, a) < apply_transform(g, b));
        }
    }
}

TEST_CASE("BiQuadraticProblem preconditions")
{
    const SpdMatrix<double> q(M::Identity(2, 2));
    const QuadraticObjective<double> f1(q, V::Zero(2));
    CHECK_THROWS_AS(BiQuadraticProblem<double>(f1, QuadraticObjective<double>(q, V::Zero(2))), ValidationError);
    CHECK_THROWS_AS(BiQuadraticProblem<double>(f1, QuadraticObjective<double>(SpdMatrix<double>(M::Identity(3, 3)), V::Ones(3))),
                    DimensionMismatch);
    CHECK_THROWS_AS(QuadraticObjective<double>(q, V::Zero(2), 0.0), DomainError);
}

TEST_CASE("is_proportional")
{
    const SpdMatrix<double> identity(M::Identity(2, 2));
    const BiQuadraticProblem<double> double_sphere(QuadraticObjective<double>(identity, V::Zero(2)),
                                                   QuadraticObjective<double>(identity, V::Ones(2)));
    CHECK(is_proportional(double_sphere) == 1.0);

    V delta(3);
    delta << 1, 2, 7;
    const SpdMatrix<double> q2 = conjugate(SpectrumSpec<double>(delta), haar_orthogonal(3, 2));
    const SpdMatrix<double> q1(M(3.0 * q2.matrix()));
    const BiQuadraticProblem<double> scaled(QuadraticObjective<double>(q1, V::Zero(3)),
                                            QuadraticObjective<double>(q2, V::Ones(3)));
    REQUIRE(is_proportional(scaled));
    CHECK(*is_proportional(scaled) == doctest::Approx(3.0));
    CHECK(*is_proportional(scaled.swapped()) == doctest::Approx(1.0 / 3.0));
    CHECK(*is_proportional(scaled.with_scales(3.0, 1.0)) == doctest::Approx(1.0));

    M p1 = M::Zero(10, 10), p2 = M::Zero(10, 10);
    for (int i = 0; i < 10; ++i) {
        p1(i, i) = std::pow(100.0, i / 9.0);
        p2(i, i) = std::pow(10.0, i / 9.0);
    }
    const BiQuadraticProblem<double> p10(QuadraticObjective<double>(SpdMatrix<double>(p1), V::Zero(10)),
                                         QuadraticObjective<double>(SpdMatrix<double>(p2), V::Ones(10)));
    CHECK_FALSE(is_proportional(p10));
}
