#include "deflab/modp.hpp"

#include "deflab/error.hpp"
#include "deflab/fox.hpp"
#include "deflab/homology.hpp"
#include "deflab/linalg.hpp"
#include "deflab/schreier.hpp"

namespace deflab {

namespace {

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
  std::uint64_t r = 1, e = p - 2;
  while (e) {
    if (e & 1U) r = r * a % p;
    a = a * a % p;
    e >>= 1U;
  }
  return r;
}

// Row echelon basis grown one row at a time; rows arrive sparse.
class IncrementalRank {
 public:
  IncrementalRank(std::size_t cols, std::uint64_t p) : cols_(cols), p_(p), pivot_(cols) {}

  void add(std::vector<std::uint64_t> row) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (row[c] == 0) continue;
      if (pivot_[c].empty()) {
        std::uint64_t inv = inverse_mod(row[c], p_);
        for (std::size_t j = c; j < cols_; ++j) row[j] = row[j] * inv % p_;
        pivot_[c] = std::move(row);
        ++rank_;
        return;
      }
      const std::uint64_t f = row[c];
      const auto& piv = pivot_[c];
      for (std::size_t j = c; j < cols_; ++j)
        if (piv[j] != 0) row[j] = (row[j] + (p_ - f) * piv[j]) % p_;
    }
  }
  std::size_t rank() const { return rank_; }

 private:
  std::size_t cols_;
  std::uint64_t p_;
  std::vector<std::vector<std::uint64_t>> pivot_;
  std::size_t rank_ = 0;
};

void check_table(const MultiplicationTable& t) {
  const std::size_t q = t.size();
  if (q == 0) throw Error(ErrorKind::invalid_argument, "empty multiplication table");
  for (std::size_t g = 0; g < q; ++g) {
    if (t[g].size() != q) throw Error(ErrorKind::invalid_argument, "table is not square");
    if (t[0][g] != g || t[g][0] != g)
      throw Error(ErrorKind::invalid_argument, "element 0 is not the identity");
    std::vector<char> seen(q, 0);
    for (std::uint32_t x : t[g]) {
      if (x >= q) throw Error(ErrorKind::invalid_argument, "table entry out of range");
      if (seen[x]++) throw Error(ErrorKind::invalid_argument, "table row is not a permutation");
    }
  }
}

}  // namespace

CohomologyDims bar_cohomology_dims(const MultiplicationTable& table, std::uint64_t p,
                                   std::size_t max_order) {
  if (!is_prime(p)) throw Error(ErrorKind::invalid_argument, std::to_string(p) + " is not prime");
  if (table.size() > max_order)
    throw Error(ErrorKind::cap_exceeded, "group order " + std::to_string(table.size()) +
                                             " exceeds the bar cap " + std::to_string(max_order));
  check_table(table);
  const std::size_t q = table.size();
  CohomologyDims out;
  out.p = p;
  out.group_order = q;
  out.dims[0] = 1;
  if (q == 1) return out;

  // Normalized cochains: arguments range over the q-1 nonidentity elements.
  const std::size_t m = q - 1;
  auto pos1 = [](std::size_t g) { return g - 1; };
  auto pos2 = [m](std::size_t g, std::size_t h) { return (g - 1) * m + (h - 1); };

  // d1 f(g,h) = f(h) - f(gh) + f(g)
  IncrementalRank d1(m, p);
  for (std::size_t g = 1; g < q; ++g)
    for (std::size_t h = 1; h < q; ++h) {
      std::vector<std::uint64_t> row(m, 0);
      auto bump = [&](std::size_t x, std::uint64_t v) {
        if (x != 0) row[pos1(x)] = (row[pos1(x)] + v) % p;
      };
      bump(h, 1);
      bump(table[g][h], p - 1);
      bump(g, 1);
      d1.add(std::move(row));
    }

  // d2 f(g,h,k) = f(h,k) - f(gh,k) + f(g,hk) - f(g,h)
  IncrementalRank d2(m * m, p);
  for (std::size_t g = 1; g < q; ++g)
    for (std::size_t h = 1; h < q; ++h)
      for (std::size_t k = 1; k < q; ++k) {
        std::vector<std::uint64_t> row(m * m, 0);
        auto bump = [&](std::size_t x, std::size_t y, std::uint64_t v) {
          if (x != 0 && y != 0) row[pos2(x, y)] = (row[pos2(x, y)] + v) % p;
        };
        bump(h, k, 1);
        bump(table[g][h], k, p - 1);
        bump(g, table[h][k], 1);
        bump(g, h, p - 1);
        d2.add(std::move(row));
      }

  out.dims[1] = m - d1.rank();
  out.dims[2] = m * m - d2.rank() - d1.rank();
  return out;
}

MultiplicationTable cyclic_group_table(std::size_t n) {
  MultiplicationTable t(n, std::vector<std::uint32_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a][b] = static_cast<std::uint32_t>((a + b) % n);
  return t;
}

MultiplicationTable direct_product_table(const MultiplicationTable& a, const MultiplicationTable& b) {
  const std::size_t n = a.size(), m = b.size();
  MultiplicationTable t(n * m, std::vector<std::uint32_t>(n * m));
  for (std::size_t x = 0; x < n * m; ++x)
    for (std::size_t y = 0; y < n * m; ++y)
      t[x][y] = static_cast<std::uint32_t>(a[x / m][y / m] * m + b[x % m][y % m]);
  return t;
}

DualComplexReport dual_complex_dims(const Presentation& p, const SubgroupRecord& normal,
                                    std::uint64_t prime, std::size_t max_order) {
  if (!is_prime(prime))
    throw Error(ErrorKind::invalid_argument, std::to_string(prime) + " is not prime");
  if (!normal.is_normal) throw Error(ErrorKind::non_normal_subgroup, "subgroup is not normal");
  if (normal.index() > max_order)
    throw Error(ErrorKind::cap_exceeded, "quotient order " + std::to_string(normal.index()) +
                                             " exceeds the cap " + std::to_string(max_order));
  CoreQuotient cq = core_quotient(normal, max_order);
  const FiniteQuotient& q = cq.quotient;
  const long k = static_cast<long>(q.order());
  const long e1 = static_cast<long>(p.generator_count());
  const long e2 = static_cast<long>(p.relator_count());

  ChainComplex c = presentation_chain_complex(p, q);
  DualComplexReport rep;
  rep.p = prime;
  rep.index = q.order();
  // Transposing leaves ranks unchanged.
  rep.rank_d1 = rank_over(c.boundaries[0], Field::prime(prime));
  rep.rank_d2 = rank_over(c.boundaries[1], Field::prime(prime));
  const long r1 = static_cast<long>(rep.rank_d1), r2 = static_cast<long>(rep.rank_d2);
  rep.dims = {k - r1, e1 * k - r1 - r2, e2 * k - r2};
  rep.euler_residual = (rep.dims[0] - rep.dims[1] + rep.dims[2]) - (1 - e1 + e2) * k;

  SubgroupPresentation sp = rewrite_subgroup_presentation(p, normal);
  rep.schreier_h1 = abelianization_rank_mod_p(sp.presentation, prime);

  // Bar oracle on N itself when N is finite and small. A free part in H1(N)
  // already rules finiteness out.
  if (rank_rational(exponent_matrix(sp.presentation)) < sp.presentation.generator_count()) return rep;
  try {
    CosetTable regular = todd_coxeter(sp.presentation, {}, 20000);
    if (regular.index() <= max_order) {
      FiniteQuotient n = FiniteQuotient::from_permutations(sp.presentation, regular.action(), max_order);
      rep.bar = bar_cohomology_dims(n.table(), prime, max_order);
      rep.jbar_dim = rep.dims[2] - static_cast<long>(rep.bar->dims[2]);
    }
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::limit_exceeded && e.kind() != ErrorKind::cap_exceeded) throw;
  }
  return rep;
}

}  // namespace deflab
