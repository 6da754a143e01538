#pragma once

#include "medgeo/rational.hpp"

#include <Eigen/Core>

#include <optional>
#include <utility>
#include <vector>

namespace medgeo {

/// LDL^T with symmetric (diagonal) pivoting, used as a positive
/// semidefiniteness test. Templated on the scalar so the same elimination
/// runs exactly over Rational or approximately over double.
///
/// At step k the largest remaining diagonal entry is pivoted to position k.
/// A positive pivot is eliminated. Otherwise the Schur complement is PSD only
/// if it vanishes, and a direction u with u^T A u < 0 is recovered from the
/// partial factorization.
template <typename Scalar>
class SymmetricPivotLdl {
 public:
  using MatrixType = Matrix<Scalar>;
  using VectorType = Vector<Scalar>;
  using Index = Eigen::Index;

  SymmetricPivotLdl() = default;
  explicit SymmetricPivotLdl(const MatrixType& a, Scalar threshold = Scalar(0)) {
    compute(a, threshold);
  }

  SymmetricPivotLdl& compute(const MatrixType& a, Scalar threshold = Scalar(0)) {
    const Index n = a.rows();
    MatrixType work = a;
    lower_ = MatrixType::Zero(n, n);
    pivots_.clear();
    perm_.resize(static_cast<std::size_t>(n));
    for (Index i = 0; i < n; ++i) perm_[static_cast<std::size_t>(i)] = i;
    psd_ = true;
    negative_.reset();

    Index k = 0;
    for (; k < n; ++k) {
      Index p = k;
      for (Index i = k + 1; i < n; ++i)
        if (work(i, i) > work(p, p)) p = i;
      if (work(p, p) <= threshold) break;
      if (p != k) {
        work.row(k).swap(work.row(p));
        work.col(k).swap(work.col(p));
        lower_.row(k).head(k).swap(lower_.row(p).head(k));
        std::swap(perm_[static_cast<std::size_t>(k)], perm_[static_cast<std::size_t>(p)]);
      }
      const Scalar d = work(k, k);
      pivots_.push_back(d);
      lower_(k, k) = Scalar(1);
      for (Index i = k + 1; i < n; ++i) lower_(i, k) = work(i, k) / d;
      for (Index j = k + 1; j < n; ++j) {
        if (work(k, j) == Scalar(0)) continue;
        for (Index i = k + 1; i < n; ++i) work(i, j) -= lower_(i, k) * work(k, j);
      }
      for (Index i = k; i < n; ++i) work(i, k) = work(k, i) = Scalar(0);
    }
    rank_ = k;
    if (k == n) return *this;

    // Trailing Schur complement has no positive diagonal entry.
    VectorType trailing = VectorType::Zero(n - k);
    for (Index i = k; i < n && psd_; ++i)
      if (work(i, i) < -threshold) {
        trailing(i - k) = Scalar(1);
        psd_ = false;
      }
    for (Index i = k; i < n && psd_; ++i)
      for (Index j = i + 1; j < n && psd_; ++j) {
        if (work(i, j) > threshold || work(i, j) < -threshold) {
          trailing(i - k) = Scalar(1);
          trailing(j - k) = work(i, j) > Scalar(0) ? Scalar(-1) : Scalar(1);
          psd_ = false;
        }
      }
    if (psd_) return *this;

    // u = [x; v] with L11^T x = -L21^T v makes u^T (P A P^T) u = v^T S v.
    VectorType rhs = -(lower_.block(k, 0, n - k, k).transpose() * trailing);
    VectorType head(k);
    for (Index i = k - 1; i >= 0; --i) {
      Scalar s = rhs(i);
      for (Index j = i + 1; j < k; ++j) s -= lower_(j, i) * head(j);
      head(i) = s;
    }
    VectorType u(n);
    for (Index i = 0; i < k; ++i) u(perm_[static_cast<std::size_t>(i)]) = head(i);
    for (Index i = k; i < n; ++i) u(perm_[static_cast<std::size_t>(i)]) = trailing(i - k);
    negative_ = std::move(u);
    return *this;
  }

  bool is_psd() const { return psd_; }
  /// Number of positive pivots eliminated before stopping.
  Index rank() const { return rank_; }
  /// Unit lower-trapezoidal factor in pivoted order; only the first rank()
  /// columns are meaningful.
  const MatrixType& matrix_l() const { return lower_; }
  const std::vector<Scalar>& pivots() const { return pivots_; }
  /// perm[k] is the original index placed at position k.
  const std::vector<Index>& permutation() const { return perm_; }
  /// A vector in original order with u^T A u < 0, when not PSD.
  const std::optional<VectorType>& negative_direction() const { return negative_; }

 private:
  MatrixType lower_;
  std::vector<Scalar> pivots_;
  std::vector<Index> perm_;
  Index rank_ = 0;
  bool psd_ = true;
  std::optional<VectorType> negative_;
};

}  // namespace medgeo
