#ifndef BICQ_MATRIXCORE_HPP
#define BICQ_MATRIXCORE_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "bicq/errors.hpp"
#include "bicq/random.hpp"

namespace bicq {

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using Index = Eigen::Index;

namespace detail {

inline void require_dimension(Index n, const char* what)
{
    if (n < 1) throw InvalidDimension(std::string(what) + ": dimension must be at least 1");
}

template <typename Scalar>
Scalar max_abs(const Matrix<Scalar>& m)
{
    return m.size() == 0 ? Scalar(0) : m.cwiseAbs().maxCoeff();
}

} // namespace detail

/// Diagonal of a positive diagonal matrix (the eigen-spectrum shared by the
/// Hessians of a problem class).
template <typename Scalar>
class SpectrumSpec {
public:
    explicit SpectrumSpec(Vector<Scalar> entries) : entries_(std::move(entries))
    {
        if (entries_.size() < 1) throw InvalidDimension("spectrum: at least one entry required");
        for (Index i = 0; i < entries_.size(); ++i) {
            if (!(entries_[i] > Scalar(0)) || !std::isfinite(static_cast<double>(entries_[i])))
                throw ValidationError("spectrum: entry " + std::to_string(i + 1) + " is not a finite positive number");
        }
    }

    const Vector<Scalar>& entries() const { return entries_; }
    Index size() const { return entries_.size(); }
    Scalar condition_number() const { return entries_.maxCoeff() / entries_.minCoeff(); }

    friend bool operator==(const SpectrumSpec& a, const SpectrumSpec& b)
    {
        return a.entries_.size() == b.entries_.size() && a.entries_ == b.entries_;
    }

private:
    Vector<Scalar> entries_;
};

template <typename Scalar>
class OrthogonalMatrix {
public:
    /// Throws ValidationError when max|O^T O - I| exceeds the orthogonality tolerance.
    explicit OrthogonalMatrix(Matrix<Scalar> data) : data_(std::move(data))
    {
        if (data_.rows() != data_.cols()) throw DimensionMismatch("orthogonal matrix must be square");
        detail::require_dimension(data_.rows(), "orthogonal matrix");
        const Scalar defect = orthogonality_defect(data_);
        if (!(defect <= tolerance(data_.rows())))
            throw ValidationError("matrix is not orthogonal (max|O^T O - I| = " + std::to_string(double(defect)) + ")");
    }

    const Matrix<Scalar>& matrix() const { return data_; }
    Index size() const { return data_.rows(); }

    static Scalar orthogonality_defect(const Matrix<Scalar>& m)
    {
        const Matrix<Scalar> gram = m.transpose() * m;
        return detail::max_abs<Scalar>(gram - Matrix<Scalar>::Identity(m.rows(), m.cols()));
    }

    static Scalar tolerance(Index n)
    {
        return std::max(Scalar(1e-12), Scalar(64) * Scalar(n) * std::numeric_limits<Scalar>::epsilon());
    }

private:
    Matrix<Scalar> data_;
};

/// Symmetric positive-definite matrix together with its Cholesky factor.
///
/// The input is symmetrized as (A + A^T)/2. Construction fails when a
/// Cholesky pivot is at or below 1e-14 times the largest diagonal entry.
template <typename Scalar>
class SpdMatrix {
public:
    explicit SpdMatrix(const Matrix<Scalar>& a)
    {
        if (a.rows() != a.cols()) throw DimensionMismatch("SPD matrix must be square");
        detail::require_dimension(a.rows(), "SPD matrix");
        if (!a.allFinite()) throw NotPositiveDefinite("matrix has non-finite entries");
        data_ = (a + a.transpose()) / Scalar(2);
        factor_.compute(data_);
        const Scalar largest = data_.diagonal().maxCoeff();
        if (factor_.info() != Eigen::Success || !(largest > Scalar(0)))
            throw NotPositiveDefinite("matrix is not positive definite (Cholesky factorization failed)");
        const Vector<Scalar> pivots = Matrix<Scalar>(factor_.matrixL()).diagonal().array().square();
        const Scalar threshold = Scalar(1e-14) * largest;
        for (Index i = 0; i < pivots.size(); ++i) {
            if (!(pivots[i] > threshold))
                throw NotPositiveDefinite("matrix is not positive definite (pivot " + std::to_string(i + 1) + " = "
                                          + std::to_string(double(pivots[i])) + ")");
        }
    }

    const Matrix<Scalar>& matrix() const { return data_; }
    Index size() const { return data_.rows(); }

    template <typename Derived>
    Vector<Scalar> solve(const Eigen::MatrixBase<Derived>& b) const
    {
        if (b.rows() != data_.rows()) throw DimensionMismatch("solve: right-hand side has wrong length");
        return factor_.solve(b);
    }

    friend bool operator==(const SpdMatrix& a, const SpdMatrix& b)
    {
        return a.data_.rows() == b.data_.rows() && a.data_ == b.data_;
    }

private:
    Matrix<Scalar> data_;
    Eigen::LLT<Matrix<Scalar>> factor_;
};

/// Haar-distributed orthogonal matrix.
///
/// An n x n matrix of standard Gaussians (drawn in row-major order from
/// Rng(seed)) is QR-factored and the columns of Q are multiplied by the signs
/// of diag(R). The determinant is left as it falls.
template <typename Scalar = double>
OrthogonalMatrix<Scalar> haar_orthogonal(Index n, std::uint64_t seed)
{
    detail::require_dimension(n, "haar_orthogonal");
    Rng rng(seed);
    Matrix<Scalar> gaussian(n, n);
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j) gaussian(i, j) = Scalar(rng.gaussian());

    Eigen::HouseholderQR<Matrix<Scalar>> qr(gaussian);
    Matrix<Scalar> q = qr.householderQ();
    const auto& r = qr.matrixQR();
    for (Index j = 0; j < n; ++j) {
        if (r(j, j) < Scalar(0)) q.col(j) = -q.col(j);
    }
    return OrthogonalMatrix<Scalar>(std::move(q));
}

/// Uniform random permutation matrix P with P(i, perm[i]) = 1, so that
/// (P v)_i = v[perm[i]]. perm comes from a Fisher-Yates shuffle of 0..n-1
/// driven by Rng(seed).
template <typename Scalar = double>
OrthogonalMatrix<Scalar> random_permutation(Index n, std::uint64_t seed)
{
    detail::require_dimension(n, "random_permutation");
    Rng rng(seed);
    std::vector<Index> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), Index(0));
    for (Index i = n - 1; i > 0; --i) {
        const auto j = static_cast<Index>(rng.below(static_cast<std::uint64_t>(i + 1)));
        std::swap(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]);
    }
    Matrix<Scalar> p = Matrix<Scalar>::Zero(n, n);
    for (Index i = 0; i < n; ++i) p(i, perm[static_cast<std::size_t>(i)]) = Scalar(1);
    return OrthogonalMatrix<Scalar>(std::move(p));
}

/// O^T diag(delta) O.
template <typename Scalar>
SpdMatrix<Scalar> conjugate(const SpectrumSpec<Scalar>& delta, const OrthogonalMatrix<Scalar>& o)
{
    if (delta.size() != o.size()) throw DimensionMismatch("conjugate: spectrum and orthogonal matrix sizes differ");
    const Matrix<Scalar>& m = o.matrix();
    const Matrix<Scalar> product = m.transpose() * delta.entries().asDiagonal() * m;
    return SpdMatrix<Scalar>(product);
}

template <typename Scalar, typename Derived>
Vector<Scalar> spd_solve(const SpdMatrix<Scalar>& a, const Eigen::MatrixBase<Derived>& b)
{
    return a.solve(b);
}

/// (1 - t) Q1 + t Q2 for t in [0, 1].
template <typename Scalar>
SpdMatrix<Scalar> convex_combination(const SpdMatrix<Scalar>& q1, const SpdMatrix<Scalar>& q2, Scalar t)
{
    if (q1.size() != q2.size()) throw DimensionMismatch("convex_combination: matrix sizes differ");
    if (!(t >= Scalar(0) && t <= Scalar(1))) throw DomainError("convex_combination: t must lie in [0, 1]");
    if (t == Scalar(0)) return q1;
    if (t == Scalar(1)) return q2;
    return SpdMatrix<Scalar>((Scalar(1) - t) * q1.matrix() + t * q2.matrix());
}

} // namespace bicq

#endif
