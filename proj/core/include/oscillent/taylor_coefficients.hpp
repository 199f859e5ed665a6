#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace oscillent {

/// Taylor coefficients of exp(z^T N z) for symmetric N, on the box of
/// multi-indices 0 <= kappa_i <= max_orders[i].
///
/// Stored normalized: d_kappa = c_kappa * sqrt(kappa!), where c_kappa is the
/// coefficient of prod z_i^kappa_i and kappa! = prod kappa_i!. The table is
/// filled with the recurrence that follows from dG/dz_i = 2 (N z)_i G,
///
///   d_kappa = 2 / sqrt(kappa_i) * sum_j N_ij sqrt(kappa_j - delta_ij) d_{kappa - e_i - e_j},
///
/// which keeps entries O(1) for the moderately large orders the truncated
/// basis needs. Odd total degree gives exactly zero.
template <typename Scalar>
class TaylorBox {
 public:
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

  TaylorBox(const Matrix& N, std::vector<int> max_orders);

  std::size_t dimension() const { return extents_.size(); }
  const std::vector<int>& max_orders() const { return max_orders_; }

  /// d_kappa; `index` must lie inside the box.
  Scalar normalized(std::span<const int> index) const;
  Scalar normalized(std::initializer_list<int> index) const {
    return normalized(std::span<const int>(index.begin(), index.size()));
  }
  /// c_kappa = d_kappa / sqrt(kappa!).
  Scalar coefficient(std::span<const int> index) const;

  std::size_t size() const { return data_.size(); }

 private:
  std::size_t offset(std::span<const int> index) const;

  std::vector<int> max_orders_;
  std::vector<std::size_t> extents_;
  std::vector<std::size_t> strides_;
  std::vector<Scalar> data_;
};

extern template class TaylorBox<double>;
extern template class TaylorBox<std::complex<double>>;

/// Total number of stored entries for a box; used to enforce resource caps
/// before allocating.
std::size_t taylor_box_size(std::span<const int> max_orders);

}  // namespace oscillent
