#pragma once

#include <utility>
#include <vector>

namespace quartic {

// Dense real symmetric matrix with a declared band structure: entries may be
// nonzero only at |i - j| in band_offsets.  Symmetry and the band pattern are
// validated on construction, so downstream code can rely on both.  Storage is
// row-major and full (both triangles), which keeps the eigensolver's access
// pattern simple; the matrices here are small enough that the redundancy is
// irrelevant.
class SymmetricMatrix {
 public:
  SymmetricMatrix() = default;  // dimension-0 matrix

  SymmetricMatrix(int dim, std::vector<double> entries, std::vector<int> band_offsets);

  // Builds a dim x dim matrix from a generator evaluated on the upper
  // triangle (i <= j) and mirrored.  The generator is consulted for every
  // pair, so a nonzero outside the declared bands is caught by validation
  // rather than silently dropped.
  template <typename Fn>
  static SymmetricMatrix build(int dim, std::vector<int> band_offsets, Fn&& element) {
    std::vector<double> entries(static_cast<std::size_t>(dim) * dim, 0.0);
    for (int i = 0; i < dim; ++i) {
      for (int j = i; j < dim; ++j) {
        const double value = element(i, j);
        entries[static_cast<std::size_t>(i) * dim + j] = value;
        entries[static_cast<std::size_t>(j) * dim + i] = value;
      }
    }
    return SymmetricMatrix(dim, std::move(entries), std::move(band_offsets));
  }

  int dim() const noexcept { return dim_; }

  double operator()(int i, int j) const {
    return entries_[static_cast<std::size_t>(i) * dim_ + j];
  }

  const std::vector<double>& entries() const noexcept { return entries_; }
  const std::vector<int>& band_offsets() const noexcept { return band_offsets_; }

  double trace() const noexcept;
  double frobenius_norm() const noexcept;

 private:
  void check_invariants() const;

  int dim_ = 0;
  std::vector<double> entries_;
  std::vector<int> band_offsets_;
};

}  // namespace quartic
