#include "hfcone/exactla.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <sstream>
#include <utility>

namespace hfcone {

namespace checked {

std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
  return r;
}

std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
  return r;
}

std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
  return r;
}

std::int64_t neg(std::int64_t a) { return sub(0, a); }

}  // namespace checked

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) == (b < 0))) ++q;
  return q;
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw InputError("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::row(std::span<const std::int64_t> entries) {
  IntMatrix m(1, entries.size());
  std::copy(entries.begin(), entries.end(), m.data_.begin());
  return m;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](std::int64_t x) { return x == 0; });
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw InputError("matrix product shape mismatch");
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const std::int64_t aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (b(k, j) != 0) out(i, j) = checked::add(out(i, j), checked::mul(aik, b(k, j)));
    }
  return out;
}

std::vector<std::int64_t> operator*(const IntMatrix& a, std::span<const std::int64_t> x) {
  if (a.cols() != x.size()) throw InputError("matrix-vector shape mismatch");
  std::vector<std::int64_t> out(a.rows(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k)
      if (a(i, k) != 0 && x[k] != 0) out[i] = checked::add(out[i], checked::mul(a(i, k), x[k]));
  return out;
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
  os << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (r) os << ", ";
    os << '[';
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) os << ',';
      os << m(r, c);
    }
    os << ']';
  }
  return os << ']';
}

std::string to_string(const AbelianGroup& g) {
  if (g.is_trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  if (g.free_rank > 0) {
    os << "Z^" << g.free_rank;
    first = false;
  }
  for (std::int64_t d : g.torsion) {
    if (!first) os << " + ";
    os << "Z/" << d;
    first = false;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const AbelianGroup& g) { return os << to_string(g); }

namespace {

// In-place elimination. When Track is set, the four transform matrices are
// kept so that left * M * right equals the reduced matrix at all times.
template <bool Track>
class Eliminator {
 public:
  explicit Eliminator(const IntMatrix& m) : a_(m) {
    if constexpr (Track) {
      left_ = IntMatrix::identity(m.rows());
      left_inv_ = IntMatrix::identity(m.rows());
      right_ = IntMatrix::identity(m.cols());
      right_inv_ = IntMatrix::identity(m.cols());
    }
  }

  SmithForm run() {
    const std::size_t n = std::min(a_.rows(), a_.cols());
    SmithForm out;
    for (std::size_t t = 0; t < n; ++t) {
      auto piv = smallest_in_block(t);
      if (!piv) break;
      move_to_pivot(t, piv->first, piv->second);
      reduce_pivot(t);
      if (a_(t, t) < 0) negate_row(t);
      out.divisors.push_back(a_(t, t));
    }
    out.rank = out.divisors.size();
    return out;
  }

  IntMatrix a_;
  IntMatrix left_, left_inv_, right_, right_inv_;

 private:
  using Pos = std::pair<std::size_t, std::size_t>;

  std::optional<Pos> smallest_in_block(std::size_t t) const {
    std::optional<Pos> best;
    std::int64_t best_abs = 0;
    for (std::size_t r = t; r < a_.rows(); ++r)
      for (std::size_t c = t; c < a_.cols(); ++c) {
        const std::int64_t v = a_(r, c);
        if (v == 0) continue;
        const std::int64_t av = v < 0 ? -v : v;
        if (!best || av < best_abs) {
          best = Pos{r, c};
          best_abs = av;
          if (av == 1) return best;
        }
      }
    return best;
  }

  void move_to_pivot(std::size_t t, std::size_t r, std::size_t c) {
    if (r != t) swap_rows(t, r);
    if (c != t) swap_cols(t, c);
  }

  // Clears row t and column t outside the pivot and enforces that the pivot
  // divides every entry of the trailing block.
  void reduce_pivot(std::size_t t) {
    for (;;) {
      bool clean = true;
      for (std::size_t r = t + 1; r < a_.rows(); ++r) {
        if (a_(r, t) == 0) continue;
        const std::int64_t q = a_(r, t) / a_(t, t);
        if (q != 0) add_row(r, t, checked::neg(q));
        if (a_(r, t) != 0) clean = false;
      }
      for (std::size_t c = t + 1; c < a_.cols(); ++c) {
        if (a_(t, c) == 0) continue;
        const std::int64_t q = a_(t, c) / a_(t, t);
        if (q != 0) add_col(c, t, checked::neg(q));
        if (a_(t, c) != 0) clean = false;
      }
      if (!clean) {
        // A remainder smaller than the pivot survived: promote the smallest one.
        std::size_t br = t, bc = t;
        std::int64_t best = std::llabs(a_(t, t));
        for (std::size_t r = t + 1; r < a_.rows(); ++r)
          if (a_(r, t) != 0 && std::llabs(a_(r, t)) < best) best = std::llabs(a_(r, t)), br = r, bc = t;
        for (std::size_t c = t + 1; c < a_.cols(); ++c)
          if (a_(t, c) != 0 && std::llabs(a_(t, c)) < best) best = std::llabs(a_(t, c)), br = t, bc = c;
        move_to_pivot(t, br, bc);
        continue;
      }
      bool divisible = true;
      for (std::size_t r = t + 1; r < a_.rows() && divisible; ++r)
        for (std::size_t c = t + 1; c < a_.cols(); ++c)
          if (a_(r, c) % a_(t, t) != 0) {
            add_row(t, r, 1);
            divisible = false;
            break;
          }
      if (divisible) return;
    }
  }

  // row_i += k * row_j
  void add_row(std::size_t i, std::size_t j, std::int64_t k) {
    for (std::size_t c = 0; c < a_.cols(); ++c)
      if (a_(j, c) != 0) a_(i, c) = checked::add(a_(i, c), checked::mul(k, a_(j, c)));
    if constexpr (Track) {
      for (std::size_t c = 0; c < left_.cols(); ++c)
        if (left_(j, c) != 0) left_(i, c) = checked::add(left_(i, c), checked::mul(k, left_(j, c)));
      for (std::size_t r = 0; r < left_inv_.rows(); ++r)
        if (left_inv_(r, i) != 0)
          left_inv_(r, j) = checked::sub(left_inv_(r, j), checked::mul(k, left_inv_(r, i)));
    }
  }

  // col_i += k * col_j
  void add_col(std::size_t i, std::size_t j, std::int64_t k) {
    for (std::size_t r = 0; r < a_.rows(); ++r)
      if (a_(r, j) != 0) a_(r, i) = checked::add(a_(r, i), checked::mul(k, a_(r, j)));
    if constexpr (Track) {
      for (std::size_t r = 0; r < right_.rows(); ++r)
        if (right_(r, j) != 0) right_(r, i) = checked::add(right_(r, i), checked::mul(k, right_(r, j)));
      for (std::size_t c = 0; c < right_inv_.cols(); ++c)
        if (right_inv_(i, c) != 0)
          right_inv_(j, c) = checked::sub(right_inv_(j, c), checked::mul(k, right_inv_(i, c)));
    }
  }

  void swap_rows(std::size_t i, std::size_t j) {
    for (std::size_t c = 0; c < a_.cols(); ++c) std::swap(a_(i, c), a_(j, c));
    if constexpr (Track) {
      for (std::size_t c = 0; c < left_.cols(); ++c) std::swap(left_(i, c), left_(j, c));
      for (std::size_t r = 0; r < left_inv_.rows(); ++r) std::swap(left_inv_(r, i), left_inv_(r, j));
    }
  }

  void swap_cols(std::size_t i, std::size_t j) {
    for (std::size_t r = 0; r < a_.rows(); ++r) std::swap(a_(r, i), a_(r, j));
    if constexpr (Track) {
      for (std::size_t r = 0; r < right_.rows(); ++r) std::swap(right_(r, i), right_(r, j));
      for (std::size_t c = 0; c < right_inv_.cols(); ++c) std::swap(right_inv_(i, c), right_inv_(j, c));
    }
  }

  void negate_row(std::size_t i) {
    for (std::size_t c = 0; c < a_.cols(); ++c) a_(i, c) = checked::neg(a_(i, c));
    if constexpr (Track) {
      for (std::size_t c = 0; c < left_.cols(); ++c) left_(i, c) = checked::neg(left_(i, c));
      for (std::size_t r = 0; r < left_inv_.rows(); ++r) left_inv_(r, i) = checked::neg(left_inv_(r, i));
    }
  }
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) { return Eliminator<false>(m).run(); }

SmithDecomposition smith_decomposition(const IntMatrix& m) {
  Eliminator<true> e(m);
  SmithDecomposition out;
  out.form = e.run();
  out.left = std::move(e.left_);
  out.left_inverse = std::move(e.left_inv_);
  out.right = std::move(e.right_);
  out.right_inverse = std::move(e.right_inv_);
  return out;
}

std::size_t kernel_rank(const IntMatrix& m) { return m.cols() - smith_normal_form(m).rank; }

AbelianGroup cokernel_group(const IntMatrix& m) {
  const SmithForm f = smith_normal_form(m);
  AbelianGroup g;
  g.free_rank = static_cast<std::int64_t>(m.rows() - f.rank);
  for (std::int64_t d : f.divisors)
    if (d > 1) g.torsion.push_back(d);
  return g;
}

}  // namespace hfcone
