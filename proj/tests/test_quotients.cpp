#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "deflab/error.hpp"
#include "deflab/quotients.hpp"
#include "oracles.hpp"

using namespace deflab;

namespace {

// Isomorphism invariants computed straight from a multiplication table.
struct Invariants {
  std::vector<std::size_t> order_histogram;
  std::size_t center = 0, squares = 0, commuting_pairs = 0, derived = 0;
  auto operator<=>(const Invariants&) const = default;
};

Invariants invariants(const FiniteQuotient& q) {
  const auto n = static_cast<std::uint32_t>(q.order());
  Invariants inv;
  inv.order_histogram.assign(n + 1, 0);
  std::set<std::uint32_t> sq, comm{0};
  for (std::uint32_t x = 0; x < n; ++x) {
    std::uint32_t y = x, k = 1;
    while (y != 0) y = q.multiply(y, x), ++k;
    ++inv.order_histogram[x == 0 ? 1 : k];
    sq.insert(q.multiply(x, x));
    bool central = true;
    for (std::uint32_t z = 0; z < n; ++z) {
      bool c = q.multiply(x, z) == q.multiply(z, x);
      central = central && c;
      inv.commuting_pairs += c;
      comm.insert(q.multiply(q.multiply(q.inverse(x), q.inverse(z)), q.multiply(x, z)));
    }
    inv.center += central;
  }
  inv.squares = sq.size();
  // closure of the commutators
  std::vector<std::uint32_t> d(comm.begin(), comm.end());
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::uint32_t c : comm) {
      std::uint32_t e = q.multiply(d[i], c);
      if (std::find(d.begin(), d.end(), e) == d.end()) d.push_back(e);
    }
  inv.derived = d.size();
  return inv;
}

FiniteQuotient realize(const SmallGroup& s) {
  return FiniteQuotient::from_permutations(s.presentation, todd_coxeter(s.presentation, {}).action());
}

std::vector<std::vector<Coset>> low_index_normals(const Presentation& p, std::size_t k) {
  std::vector<std::vector<Coset>> out;
  for (const auto& r : low_index_subgroups(p, k))
    if (r.is_normal) out.push_back(r.table.flattened());
  return out;
}

std::vector<std::vector<Coset>> flattened(const std::vector<SubgroupRecord>& rs) {
  std::vector<std::vector<Coset>> out;
  for (const auto& r : rs) out.push_back(r.table.flattened());
  return out;
}

}  // namespace

TEST_CASE("small group list: counts per order and pairwise distinct") {
  // number of groups of each order 1..16
  const std::vector<std::size_t> known{1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5, 1, 2, 1, 14};
  auto groups = small_groups(16);
  std::map<std::size_t, std::size_t> per_order;
  std::map<std::size_t, std::set<Invariants>> seen;
  for (const auto& g : groups) {
    INFO(g.name);
    FiniteQuotient q = realize(g);
    CHECK(q.order() == g.order);
    ++per_order[g.order];
    CHECK(seen[g.order].insert(invariants(q)).second);
  }
  for (std::size_t n = 1; n <= 16; ++n) CHECK(per_order[n] == known[n - 1]);
  CHECK_THROWS_AS(small_groups(17), Error);
}

TEST_CASE("normal subgroups agree with filtered low-index output") {
  for (auto [name, k] : {std::pair{"free2", 6UL}, {"z2", 12UL}, {"trefoil", 8UL}, {"gadget_b3", 8UL},
                         {"q8", 16UL}, {"d8", 16UL}, {"c2xc2", 16UL}, {"free1", 16UL}, {"genus2", 4UL},
                         {"f2xf2", 5UL}, {"redundant_z2", 10UL}, {"free3", 4UL}}) {
    INFO(name << " up to " << k);
    Presentation p = oracle::load(name);
    auto ours = normal_subgroups(p, k);
    for (const auto& r : ours) {
      CHECK(r.is_normal);
      CHECK(r.table.is_standard());
      CHECK(r.table.relators_hold());
    }
    CHECK(flattened(ours) == low_index_normals(p, k));
  }
}

TEST_CASE("normal subgroup counts from independent formulas") {
  // Z^2: every subgroup is normal; index-n subgroups number sigma(n)
  auto z2 = normal_subgroups(oracle::load("z2"), 16);
  std::map<std::size_t, std::size_t> c;
  for (const auto& r : z2) ++c[r.index()];
  for (std::size_t n = 1; n <= 16; ++n) {
    std::size_t sigma = 0;
    for (std::size_t d = 1; d <= n; ++d) sigma += n % d == 0 ? d : 0;
    CHECK(c[n] == sigma);
  }
  // F2 onto C_p: (p^2 - 1) / (p - 1) = p + 1 kernels for p prime
  auto f2 = normal_subgroups(oracle::load("free2"), 16);
  std::map<std::size_t, std::size_t> f;
  for (const auto& r : f2) ++f[r.index()];
  for (std::size_t p : {2, 3, 5, 7, 11, 13}) CHECK(f[p] == p + 1);
  // a finite group of order 8 has its own normal subgroups only
  for (const auto& r : normal_subgroups(oracle::load("q8"), 16)) CHECK(8 % r.index() == 0);
  CHECK(normal_subgroups(oracle::load("q8"), 16).size() == 6);
  CHECK(normal_subgroups(oracle::load("d8"), 16).size() == 6);
}

TEST_CASE("normal subgroup search budget") {
  try {
    normal_subgroups(oracle::load("genus3"), 16, 1000);
    FAIL("budget");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::limit_exceeded);
  }
}
