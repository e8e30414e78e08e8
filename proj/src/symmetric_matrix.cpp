#include "quartic/symmetric_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace quartic {

SymmetricMatrix::SymmetricMatrix(int dim, std::vector<double> entries,
                                 std::vector<int> band_offsets)
    : dim_(dim), entries_(std::move(entries)), band_offsets_(std::move(band_offsets)) {
  if (dim_ < 0) {
    throw std::invalid_argument("SymmetricMatrix: dimension must be >= 0");
  }
  for (int& b : band_offsets_) {
    if (b < 0) b = -b;
  }
  std::sort(band_offsets_.begin(), band_offsets_.end());
  band_offsets_.erase(std::unique(band_offsets_.begin(), band_offsets_.end()),
                      band_offsets_.end());
  check_invariants();
}

void SymmetricMatrix::check_invariants() const {
  if (entries_.size() != static_cast<std::size_t>(dim_) * dim_) {
    throw std::invalid_argument("SymmetricMatrix: entry count does not match dimension");
  }
  for (int i = 0; i < dim_; ++i) {
    for (int j = i + 1; j < dim_; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) {
        throw std::invalid_argument("SymmetricMatrix: entries are not symmetric");
      }
      const bool on_band = std::binary_search(band_offsets_.begin(), band_offsets_.end(),
                                              j - i);
      if (!on_band && (*this)(i, j) != 0.0) {
        throw std::invalid_argument(
            "SymmetricMatrix: nonzero entry outside the declared bands");
      }
    }
  }
  if (dim_ > 0 && !std::binary_search(band_offsets_.begin(), band_offsets_.end(), 0)) {
    for (int i = 0; i < dim_; ++i) {
      if ((*this)(i, i) != 0.0) {
        throw std::invalid_argument(
            "SymmetricMatrix: nonzero diagonal but 0 is not a declared band");
      }
    }
  }
}

double SymmetricMatrix::trace() const noexcept {
  double sum = 0.0;
  for (int i = 0; i < dim_; ++i) sum += (*this)(i, i);
  return sum;
}

double SymmetricMatrix::frobenius_norm() const noexcept {
  double sum = 0.0;
  for (double v : entries_) sum += v * v;
  return std::sqrt(sum);
}

}  // namespace quartic
