#pragma once

// Exact integer matrix algebra: Smith normal form, kernels, cokernels.
//
// All arithmetic is on int64_t with overflow checks; an overflow raises
// hfcone::OverflowError instead of wrapping.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "hfcone/errors.hpp"

namespace hfcone {

namespace checked {
std::int64_t add(std::int64_t a, std::int64_t b);
std::int64_t sub(std::int64_t a, std::int64_t b);
std::int64_t mul(std::int64_t a, std::int64_t b);
std::int64_t neg(std::int64_t a);
}  // namespace checked

/// Floor division rounding toward negative infinity. Requires b != 0.
std::int64_t floor_div(std::int64_t a, std::int64_t b);
/// Ceiling division. Requires b != 0.
std::int64_t ceil_div(std::int64_t a, std::int64_t b);

/// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix row(std::span<const std::int64_t> entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return data_.empty(); }

  std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const std::int64_t> row_view(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  std::span<const std::int64_t> entries() const { return data_; }

  bool is_zero() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
std::vector<std::int64_t> operator*(const IntMatrix& a, std::span<const std::int64_t> x);
std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

/// Finitely generated abelian group Z^free_rank + Z/d_1 + ... with d_1 | d_2 | ...
struct AbelianGroup {
  std::int64_t free_rank = 0;
  std::vector<std::int64_t> torsion;

  bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
  /// True exactly for the infinite cyclic group.
  bool is_z() const { return free_rank == 1 && torsion.empty(); }

  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

/// Renders as `Z^r + Z/d1 + Z/d2`, or `0` for the trivial group.
std::string to_string(const AbelianGroup& g);
std::ostream& operator<<(std::ostream& os, const AbelianGroup& g);

struct SmithForm {
  std::vector<std::int64_t> divisors;  // nonzero elementary divisors, d_k | d_{k+1}
  std::size_t rank = 0;
};

/// Smith normal form together with unimodular transforms:
///   left * M * right == diag(divisors, 0...).
struct SmithDecomposition {
  SmithForm form;
  IntMatrix left;
  IntMatrix left_inverse;
  IntMatrix right;
  IntMatrix right_inverse;
};

SmithForm smith_normal_form(const IntMatrix& m);
SmithDecomposition smith_decomposition(const IntMatrix& m);

/// Rank of the integer kernel lattice, cols - rank(M).
std::size_t kernel_rank(const IntMatrix& m);

/// Z^rows / image(M).
AbelianGroup cokernel_group(const IntMatrix& m);

}  // namespace hfcone
