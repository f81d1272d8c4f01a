#include "deflab/homology.hpp"

#include <algorithm>

namespace deflab {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::size_t ModPMatrix::rank() {
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
    std::size_t pivot = r;
    while (pivot < rows_ && (*this)(pivot, c) == 0) ++pivot;
    if (pivot == rows_) continue;
    if (pivot != r)
      for (std::size_t j = c; j < cols_; ++j) std::swap((*this)(pivot, j), (*this)(r, j));
    // normalize the pivot row
    std::uint64_t inv = 1;
    {
      std::uint64_t base = (*this)(r, c);
      std::uint64_t e = p_ - 2;
      while (e) {
        if (e & 1U) inv = inv * base % p_;
        base = base * base % p_;
        e >>= 1U;
      }
    }
    for (std::size_t j = c; j < cols_; ++j) (*this)(r, j) = (*this)(r, j) * inv % p_;
    for (std::size_t i = r + 1; i < rows_; ++i) {
      std::uint64_t f = (*this)(i, c);
      if (f == 0) continue;
      for (std::size_t j = c; j < cols_; ++j) {
        std::uint64_t sub = f * (*this)(r, j) % p_;
        (*this)(i, j) = ((*this)(i, j) + p_ - sub) % p_;
      }
    }
    ++r;
  }
  return r;
}

std::string Field::name() const {
  return is_rational() ? "Q" : "F_" + std::to_string(characteristic);
}

std::size_t rank_over(const IntMatrix& m, Field f) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  return f.is_rational() ? rank_rational(m) : rank_mod_p(m, f.characteristic);
}

BettiVector betti_numbers(const ChainComplex& c, Field field) {
  BettiVector out;
  out.field = field;
  const std::size_t top = c.dimension();
  // ranks_of[i] = rank of d_i, with d_0 = d_{top+1} = 0.
  std::vector<std::size_t> rank_of(top + 2, 0);
  std::vector<std::vector<BigInt>> invariant(top + 2);
  for (std::size_t i = 1; i <= top; ++i) {
    const IntMatrix& d = c.boundaries[i - 1];
    if (d.rows() == 0 || d.cols() == 0) continue;
    if (field.is_rational()) {
      auto snf = smith_normal_form(d, {.transforms = false, .verify = true});
      rank_of[i] = snf.rank;
      invariant[i] = snf.torsion();
    } else {
      rank_of[i] = rank_mod_p(d, field.characteristic);
    }
  }
  for (std::size_t i = 0; i <= top; ++i) {
    long dim = static_cast<long>(c.module_dimension(i));
    out.b.push_back(dim - static_cast<long>(rank_of[i]) - static_cast<long>(rank_of[i + 1]));
    out.torsion.push_back(field.is_rational() ? invariant[i + 1] : std::vector<BigInt>{});
  }
  return out;
}

EulerData partial_euler_mu(const std::vector<long>& ranks, std::size_t n) {
  EulerData e;
  e.n = n;
  for (std::size_t i = 0; i <= n; ++i) e.ranks.push_back(i < ranks.size() ? ranks[i] : 0);
  for (std::size_t i = 0; i <= n; ++i) {
    long sign_mu = (n - i) % 2 == 0 ? 1 : -1;
    long sign_chi = i % 2 == 0 ? 1 : -1;
    e.mu += sign_mu * e.ranks[i];
    e.chi += sign_chi * e.ranks[i];
  }
  if (n == 2 && e.ranks[0] == 1) e.nu2 = 1 - (e.ranks[1] - e.ranks[2]);
  return e;
}

MorseResult morse_check(const BettiVector& b, const EulerData& e) {
  MorseResult m;
  m.mu = e.mu;
  for (std::size_t i = 0; i <= e.n; ++i) {
    long bi = i < b.b.size() ? b.b[i] : 0;
    m.alternating_betti += ((e.n - i) % 2 == 0 ? 1 : -1) * bi;
  }
  m.slack = m.mu - m.alternating_betti;
  m.holds = m.slack >= 0;
  return m;
}

IntMatrix exponent_matrix(const Presentation& p) {
  IntMatrix m = IntMatrix::Zero(static_cast<Eigen::Index>(p.relator_count()),
                                static_cast<Eigen::Index>(p.generator_count()));
  auto rows = exponent_sum_matrix(p);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
  return m;
}

AbelianInvariants abelianization(const Presentation& p) {
  AbelianInvariants a;
  IntMatrix m = exponent_matrix(p);
  if (m.rows() == 0 || m.cols() == 0) {
    a.free_rank = p.generator_count();
    return a;
  }
  auto snf = smith_normal_form(m, {.transforms = false, .verify = true});
  a.free_rank = p.generator_count() - snf.rank;
  a.torsion = snf.torsion();
  return a;
}

std::size_t abelianization_rank_mod_p(const Presentation& p, std::uint64_t prime) {
  IntMatrix m = exponent_matrix(p);
  std::size_t r = (m.rows() == 0 || m.cols() == 0) ? 0 : rank_mod_p(m, prime);
  return p.generator_count() - r;
}

}  // namespace deflab
