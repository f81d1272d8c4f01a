#ifndef DEFLAB_MATRIX_HPP
#define DEFLAB_MATRIX_HPP

#include <gmpxx.h>

#include <Eigen/Dense>

#include <cstdint>
#include <string>

// Eigen needs to know how to treat GMP integers as a scalar type.
namespace Eigen {
template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  using Real = mpz_class;
  using NonInteger = mpz_class;
  using Nested = mpz_class;
  using Literal = mpz_class;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 30,
    MulCost = 100
  };
  static inline int digits10() { return 0; }
};
}  // namespace Eigen

namespace deflab {

using BigInt = mpz_class;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// Dense integer matrix with arbitrary-precision entries.
using IntMatrix = Matrix<BigInt>;

/// Small-integer matrix, used where entries are known to stay bounded.
using SmallMatrix = Matrix<std::int64_t>;

inline IntMatrix to_big(const SmallMatrix& m) {
  IntMatrix out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      out(i, j) = static_cast<long>(m(i, j));
  return out;
}

inline bool is_zero(const IntMatrix& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (sgn(m(i, j)) != 0) return false;
  return true;
}

/// Exact product; Eigen's lazy product is fine for mpz but we want an
/// explicit owning result.
inline IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix out = IntMatrix::Zero(a.rows(), b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index k = 0; k < a.cols(); ++k) {
      const BigInt& x = a(i, k);
      if (sgn(x) == 0) continue;
      for (Eigen::Index j = 0; j < b.cols(); ++j)
        if (sgn(b(k, j)) != 0) out(i, j) += x * b(k, j);
    }
  return out;
}

inline std::int64_t to_int64(const BigInt& x) {
  return static_cast<std::int64_t>(x.get_si());
}

}  // namespace deflab

#endif  // DEFLAB_MATRIX_HPP
