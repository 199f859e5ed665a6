#include "oscillent/taylor_coefficients.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "oscillent/errors.hpp"

namespace oscillent {

std::size_t taylor_box_size(std::span<const int> max_orders) {
  std::size_t total = 1;
  for (int order : max_orders) {
    if (order < 0) throw DomainError("negative Taylor order");
    total *= static_cast<std::size_t>(order) + 1;
  }
  return total;
}

template <typename Scalar>
TaylorBox<Scalar>::TaylorBox(const Matrix& N, std::vector<int> max_orders)
    : max_orders_(std::move(max_orders)) {
  const std::size_t dim = max_orders_.size();
  if (N.rows() != static_cast<Eigen::Index>(dim) || N.cols() != static_cast<Eigen::Index>(dim)) {
    throw DomainError("quadratic form has size " + std::to_string(N.rows()) + " but " +
                      std::to_string(dim) + " orders were given");
  }
  extents_.resize(dim);
  strides_.resize(dim);
  std::size_t stride = 1;
  for (std::size_t i = dim; i-- > 0;) {
    extents_[i] = static_cast<std::size_t>(max_orders_[i]) + 1;
    strides_[i] = stride;
    stride *= extents_[i];
  }
  data_.assign(taylor_box_size(max_orders_), Scalar{0});
  data_[0] = Scalar{1};

  std::vector<int> kappa(dim, 0);
  std::vector<double> sqrt_table;
  int max_order = 0;
  for (int order : max_orders_) max_order = std::max(max_order, order);
  sqrt_table.resize(static_cast<std::size_t>(max_order) + 1);
  for (std::size_t k = 0; k < sqrt_table.size(); ++k) sqrt_table[k] = std::sqrt(double(k));

  // Row-major traversal visits every kappa after all of its predecessors.
  for (std::size_t linear = 1; linear < data_.size(); ++linear) {
    for (std::size_t i = dim; i-- > 0;) {
      if (++kappa[i] < static_cast<int>(extents_[i])) break;
      kappa[i] = 0;
    }
    std::size_t lead = 0;
    while (kappa[lead] == 0) ++lead;

    // Target index minus e_lead; its offset is linear - stride[lead].
    const std::size_t base = linear - strides_[lead];
    Scalar acc{0};
    for (std::size_t j = 0; j < dim; ++j) {
      const int reduced = kappa[j] - (j == lead ? 1 : 0);
      if (reduced == 0) continue;
      const Scalar n_ij = N(static_cast<Eigen::Index>(lead), static_cast<Eigen::Index>(j));
      if (n_ij == Scalar{0}) continue;
      acc += n_ij * sqrt_table[static_cast<std::size_t>(reduced)] * data_[base - strides_[j]];
    }
    data_[linear] = (2.0 / sqrt_table[static_cast<std::size_t>(kappa[lead])]) * acc;
  }
}

template <typename Scalar>
std::size_t TaylorBox<Scalar>::offset(std::span<const int> index) const {
  if (index.size() != extents_.size()) {
    throw DomainError("multi-index has wrong dimension");
  }
  std::size_t off = 0;
  for (std::size_t i = 0; i < index.size(); ++i) {
    if (index[i] < 0 || static_cast<std::size_t>(index[i]) >= extents_[i]) {
      throw DomainError("multi-index outside the computed Taylor box");
    }
    off += static_cast<std::size_t>(index[i]) * strides_[i];
  }
  return off;
}

template <typename Scalar>
Scalar TaylorBox<Scalar>::normalized(std::span<const int> index) const {
  return data_[offset(index)];
}

template <typename Scalar>
Scalar TaylorBox<Scalar>::coefficient(std::span<const int> index) const {
  double log_factorial = 0.0;
  for (int k : index) log_factorial += std::lgamma(k + 1.0);
  return data_[offset(index)] * std::exp(-0.5 * log_factorial);
}

template class TaylorBox<double>;
template class TaylorBox<std::complex<double>>;

}  // namespace oscillent
