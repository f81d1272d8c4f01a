#ifndef DEFLAB_LINALG_HPP
#define DEFLAB_LINALG_HPP

#include <cstdint>
#include <cstdlib>
#include <utility>
#include <vector>

#include "deflab/error.hpp"
#include "deflab/matrix.hpp"

namespace deflab {

// Scalar helpers so the algorithms below work for mpz_class and built-in
// integers alike.
inline int sign_of(const BigInt& x) { return sgn(x); }
inline int sign_of(std::int64_t x) { return (x > 0) - (x < 0); }
inline BigInt abs_of(const BigInt& x) { return abs(x); }
inline std::int64_t abs_of(std::int64_t x) { return x < 0 ? -x : x; }
inline std::uint64_t residue(const BigInt& x, std::uint64_t p) {
  return mpz_fdiv_ui(x.get_mpz_t(), p);
}
inline std::uint64_t residue(std::int64_t x, std::uint64_t p) {
  auto m = static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(((x % m) + m) % m);
}

bool is_prime(std::uint64_t p);

inline BigInt gcd_of(const BigInt& a, const BigInt& b) { return gcd(a, b); }
inline std::int64_t gcd_of(std::int64_t a, std::int64_t b) {
  a = abs_of(a);
  b = abs_of(b);
  while (b != 0) {
    std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}


template <typename Scalar>
struct SNFResult {
  std::vector<Scalar> diagonal;  ///< d_1 | d_2 | ... | d_r, all positive
  std::size_t rank = 0;
  Matrix<Scalar> left;   ///< unimodular, rows x rows
  Matrix<Scalar> right;  ///< unimodular, cols x cols

  /// Invariant factors different from 1.
  std::vector<Scalar> torsion() const {
    std::vector<Scalar> t;
    for (const Scalar& d : diagonal)
      if (d != 1) t.push_back(d);
    return t;
  }
};

struct SNFOptions {
  bool transforms = true;
  bool verify = true;
};

namespace detail {

template <typename Scalar>
class SmithReducer {
 public:
  SmithReducer(Matrix<Scalar> a, bool transforms)
      : d_(std::move(a)), transforms_(transforms) {
    if (transforms_) {
      left_ = Matrix<Scalar>::Identity(d_.rows(), d_.rows());
      right_ = Matrix<Scalar>::Identity(d_.cols(), d_.cols());
    }
  }

  SNFResult<Scalar> run() {
    const Eigen::Index m = d_.rows();
    const Eigen::Index n = d_.cols();
    Eigen::Index t = 0;
    for (; t < std::min(m, n); ++t) {
      if (!move_smallest_to(t, t, m, t, n)) break;
      while (true) {
        bool clean = true;
        for (Eigen::Index i = t + 1; i < m; ++i) {
          if (sign_of(d_(i, t)) == 0) continue;
          Scalar q = d_(i, t) / d_(t, t);
          if (sign_of(q) != 0) add_row(i, t, -q);
          if (sign_of(d_(i, t)) != 0) clean = false;
        }
        for (Eigen::Index j = t + 1; j < n; ++j) {
          if (sign_of(d_(t, j)) == 0) continue;
          Scalar q = d_(t, j) / d_(t, t);
          if (sign_of(q) != 0) add_col(j, t, -q);
          if (sign_of(d_(t, j)) != 0) clean = false;
        }
        if (!clean) {
          move_smallest_in_cross(t);
          continue;
        }
        if (!fix_divisibility(t)) break;
      }
      if (sign_of(d_(t, t)) < 0) negate_row(t);
    }
    SNFResult<Scalar> out;
    out.rank = static_cast<std::size_t>(t);
    for (Eigen::Index i = 0; i < t; ++i) out.diagonal.push_back(d_(i, i));
    out.left = std::move(left_);
    out.right = std::move(right_);
    return out;
  }

 private:
  void add_row(Eigen::Index target, Eigen::Index source, const Scalar& factor) {
    for (Eigen::Index j = 0; j < d_.cols(); ++j)
      if (sign_of(d_(source, j)) != 0) d_(target, j) += factor * d_(source, j);
    if (transforms_)
      for (Eigen::Index j = 0; j < left_.cols(); ++j)
        if (sign_of(left_(source, j)) != 0) left_(target, j) += factor * left_(source, j);
  }

  void add_col(Eigen::Index target, Eigen::Index source, const Scalar& factor) {
    for (Eigen::Index i = 0; i < d_.rows(); ++i)
      if (sign_of(d_(i, source)) != 0) d_(i, target) += factor * d_(i, source);
    if (transforms_)
      for (Eigen::Index i = 0; i < right_.rows(); ++i)
        if (sign_of(right_(i, source)) != 0) right_(i, target) += factor * right_(i, source);
  }

  void swap_rows(Eigen::Index a, Eigen::Index b) {
    if (a == b) return;
    d_.row(a).swap(d_.row(b));
    if (transforms_) left_.row(a).swap(left_.row(b));
  }

  void swap_cols(Eigen::Index a, Eigen::Index b) {
    if (a == b) return;
    d_.col(a).swap(d_.col(b));
    if (transforms_) right_.col(a).swap(right_.col(b));
  }

  void negate_row(Eigen::Index a) {
    for (Eigen::Index j = 0; j < d_.cols(); ++j) d_(a, j) = -d_(a, j);
    if (transforms_)
      for (Eigen::Index j = 0; j < left_.cols(); ++j) left_(a, j) = -left_(a, j);
  }

  // Smallest nonzero |entry| of the block [r0,r1) x [c0,c1) moved to (t,t).
  bool move_smallest_to(Eigen::Index t, Eigen::Index r0, Eigen::Index r1, Eigen::Index c0,
                        Eigen::Index c1) {
    Eigen::Index bi = -1;
    Eigen::Index bj = -1;
    Scalar best = 0;
    for (Eigen::Index i = r0; i < r1; ++i)
      for (Eigen::Index j = c0; j < c1; ++j) {
        if (sign_of(d_(i, j)) == 0) continue;
        Scalar v = abs_of(d_(i, j));
        if (bi < 0 || v < best) {
          best = v;
          bi = i;
          bj = j;
          if (best == 1) break;
        }
      }
    if (bi < 0) return false;
    swap_rows(t, bi);
    swap_cols(t, bj);
    return true;
  }

  void move_smallest_in_cross(Eigen::Index t) {
    Eigen::Index bi = t;
    Eigen::Index bj = t;
    Scalar best = abs_of(d_(t, t));
    for (Eigen::Index i = t + 1; i < d_.rows(); ++i)
      if (sign_of(d_(i, t)) != 0 && abs_of(d_(i, t)) < best) {
        best = abs_of(d_(i, t));
        bi = i;
        bj = t;
      }
    for (Eigen::Index j = t + 1; j < d_.cols(); ++j)
      if (sign_of(d_(t, j)) != 0 && abs_of(d_(t, j)) < best) {
        best = abs_of(d_(t, j));
        bi = t;
        bj = j;
      }
    swap_rows(t, bi);
    swap_cols(t, bj);
  }

  // Returns true when a row was folded into the pivot row.
  bool fix_divisibility(Eigen::Index t) {
    for (Eigen::Index i = t + 1; i < d_.rows(); ++i)
      for (Eigen::Index j = t + 1; j < d_.cols(); ++j)
        if (sign_of(d_(i, j)) != 0 && sign_of(Scalar(d_(i, j) % d_(t, t))) != 0) {
          add_row(t, i, Scalar(1));
          return true;
        }
    return false;
  }

  Matrix<Scalar> d_;
  Matrix<Scalar> left_;
  Matrix<Scalar> right_;
  bool transforms_;
};

}  // namespace detail

/// Smith normal form: left * a * right = diag(d_1, ..., d_r, 0, ...). Pivots on
/// the entry of least absolute value. With `verify`, the transforms and the
/// divisibility chain are checked before returning.
template <typename Derived>
SNFResult<typename Derived::Scalar> smith_normal_form(const Eigen::MatrixBase<Derived>& a,
                                                      SNFOptions options = {}) {
  using Scalar = typename Derived::Scalar;
  SNFResult<Scalar> r =
      detail::SmithReducer<Scalar>(Matrix<Scalar>(a), options.transforms).run();
  if (options.verify) {
    for (std::size_t i = 0; i + 1 < r.diagonal.size(); ++i)
      if (sign_of(Scalar(r.diagonal[i + 1] % r.diagonal[i])) != 0)
        throw Error(ErrorKind::internal, "Smith form divisibility chain broken");
    if (options.transforms) {
      Matrix<Scalar> expect = Matrix<Scalar>::Zero(a.rows(), a.cols());
      for (std::size_t i = 0; i < r.rank; ++i)
        expect(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = r.diagonal[i];
      Matrix<Scalar> got = r.left * Matrix<Scalar>(a) * r.right;
      if (got != expect) throw Error(ErrorKind::internal, "Smith form transforms do not verify");
    }
  }
  return r;
}

/// Exact determinant by fraction-free (Bareiss) elimination.
template <typename Derived>
typename Derived::Scalar determinant(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  if (a.rows() != a.cols()) throw Error(ErrorKind::invalid_argument, "determinant of non-square matrix");
  Matrix<Scalar> m(a);
  const Eigen::Index n = m.rows();
  Scalar sign = 1;
  Scalar prev = 1;
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index pivot = k;
    while (pivot < n && sign_of(m(pivot, k)) == 0) ++pivot;
    if (pivot == n) return Scalar(0);
    if (pivot != k) {
      m.row(pivot).swap(m.row(k));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i)
      for (Eigen::Index j = k + 1; j < n; ++j)
        m(i, j) = Scalar((m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev);
    prev = m(k, k);
  }
  return Scalar(sign * m(n - 1, n - 1));
}

/// Rank over Q (fraction-free elimination).
template <typename Derived>
std::size_t rank_rational(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  Matrix<Scalar> m(a);
  const Eigen::Index rows = m.rows();
  const Eigen::Index cols = m.cols();
  std::size_t rank = 0;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index pivot = r;
    while (pivot < rows && sign_of(m(pivot, c)) == 0) ++pivot;
    if (pivot == rows) continue;
    m.row(pivot).swap(m.row(r));
    for (Eigen::Index i = r + 1; i < rows; ++i) {
      if (sign_of(m(i, c)) == 0) continue;
      Scalar f = m(i, c);
      Scalar g = m(r, c);
      for (Eigen::Index j = c; j < cols; ++j) m(i, j) = m(i, j) * g - m(r, j) * f;
      // keep entries small
      Scalar content = 0;
      for (Eigen::Index j = c; j < cols; ++j) content = gcd_of(content, m(i, j));
      if (sign_of(content) != 0 && content != 1)
        for (Eigen::Index j = c; j < cols; ++j) m(i, j) = Scalar(m(i, j) / content);
    }
    ++r;
    ++rank;
  }
  return rank;
}

/// Row-reduced working copy over F_p.
class ModPMatrix {
 public:
  ModPMatrix(std::size_t rows, std::size_t cols, std::uint64_t p)
      : rows_(rows), cols_(cols), p_(p), data_(rows * cols, 0) {}

  std::uint64_t& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  std::size_t rank();

 private:
  std::size_t rows_, cols_;
  std::uint64_t p_;
  std::vector<std::uint64_t> data_;
};

/// Rank over F_p. Throws ErrorKind::invalid_argument for non-prime p.
template <typename Derived>
std::size_t rank_mod_p(const Eigen::MatrixBase<Derived>& a, std::uint64_t p) {
  if (!is_prime(p)) throw Error(ErrorKind::invalid_argument, std::to_string(p) + " is not prime");
  ModPMatrix m(static_cast<std::size_t>(a.rows()), static_cast<std::size_t>(a.cols()), p);
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = residue(a(i, j), p);
  return m.rank();
}

}  // namespace deflab

#endif  // DEFLAB_LINALG_HPP
