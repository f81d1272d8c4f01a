#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "deflab/error.hpp"
#include "deflab/homology.hpp"
#include "deflab/modp.hpp"
#include "deflab/schreier.hpp"
#include "oracles.hpp"

using namespace deflab;

namespace {

using Dims = std::array<std::size_t, 3>;

Dims bar(const MultiplicationTable& t, std::uint64_t p) { return bar_cohomology_dims(t, p).dims; }

// dim H^n(C_m, F_p): 1 in every degree when p | m, else only degree 0
Dims cyclic_oracle(std::size_t m, std::uint64_t p) {
  return m % p == 0 ? Dims{1, 1, 1} : Dims{1, 0, 0};
}

// Kunneth over a field, degrees 0..2
Dims kunneth(const Dims& x, const Dims& y) {
  Dims out{};
  for (std::size_t n = 0; n < 3; ++n)
    for (std::size_t i = 0; i <= n; ++i) out[n] += x[i] * y[n - i];
  return out;
}

}  // namespace

TEST_CASE("bar cohomology of small groups") {
  CHECK(bar(cyclic_group_table(1), 2) == Dims{1, 0, 0});
  for (std::uint64_t p : {2, 3, 5}) CHECK(bar(cyclic_group_table(p), p) == Dims{1, 1, 1});
  CHECK(bar(cyclic_group_table(3), 2) == Dims{1, 0, 0});
  CHECK(bar(cyclic_group_table(2), 3) == Dims{1, 0, 0});
  for (std::size_t m = 2; m <= 8; ++m)
    for (std::uint64_t p : {2, 3, 5, 7}) {
      INFO("C" << m << " p " << p);
      CHECK(bar(cyclic_group_table(m), p) == cyclic_oracle(m, p));
    }
}

TEST_CASE("bar cohomology of products matches kunneth") {
  for (auto [m, n] : {std::pair{2, 2}, {2, 3}, {2, 4}, {3, 3}, {2, 6}})
    for (std::uint64_t p : {2, 3}) {
      auto t = direct_product_table(cyclic_group_table(m), cyclic_group_table(n));
      INFO("C" << m << " x C" << n << " p " << p);
      CHECK(bar(t, p) == kunneth(cyclic_oracle(m, p), cyclic_oracle(n, p)));
    }
}

TEST_CASE("bar cohomology input checks") {
  CHECK_THROWS_AS(bar_cohomology_dims(cyclic_group_table(4), 4), Error);
  try {
    bar_cohomology_dims(cyclic_group_table(70), 2);
    FAIL("past the cap");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::cap_exceeded);
  }
  MultiplicationTable broken = cyclic_group_table(3);
  broken[1][1] = 1;
  CHECK_THROWS_AS(bar_cohomology_dims(broken, 3), Error);
}

TEST_CASE("dual complex examples") {
  Presentation z = oracle::load("free1");
  for (const auto& r : low_index_subgroups(z, 2)) {
    if (r.index() != 2) continue;
    DualComplexReport d = dual_complex_dims(z, r, 2);
    CHECK(d.dims == std::array<long, 3>{1, 1, 0});
    CHECK(d.euler_residual == 0);
    CHECK(d.h1_agrees());
    CHECK_FALSE(d.bar.has_value());
    CHECK_FALSE(d.jbar_dim.has_value());
  }
  Presentation torus = oracle::load("z2");
  DualComplexReport t = dual_complex_dims(torus, low_index_subgroups(torus, 1).front(), 2);
  CHECK(t.dims == std::array<long, 3>{1, 2, 1});
  CHECK(t.schreier_h1 == 2);

  Presentation c2 = oracle::load("c2");
  DualComplexReport c = dual_complex_dims(c2, low_index_subgroups(c2, 1).front(), 2);
  CHECK(c.dims == std::array<long, 3>{1, 1, 1});
  REQUIRE(c.bar.has_value());
  CHECK(c.bar->dims == Dims{1, 1, 1});
  REQUIRE(c.jbar_dim.has_value());
  CHECK(*c.jbar_dim == 0);
}

TEST_CASE("dual H1 equals Schreier H1 on corpus normal subgroups") {
  std::size_t checked = 0;
  for (const char* name : {"free2", "z2", "genus2", "trefoil", "gadget_b3", "q8", "d8", "c2xc2",
                           "redundant_z2", "f2xf2", "c4"}) {
    Presentation p = oracle::load(name);
    for (const auto& r : low_index_subgroups(p, 4)) {
      if (!r.is_normal) continue;
      for (std::uint64_t prime : {2, 3}) {
        DualComplexReport d = dual_complex_dims(p, r, prime);
        // independent: rank of H1(N) mod p from the rewrite's exponent matrix
        auto sp = rewrite_subgroup_presentation(p, r);
        IntMatrix e = exponent_matrix(sp.presentation);
        const long h1 = static_cast<long>(sp.presentation.generator_count()) -
                        static_cast<long>(rank_mod_p(e, prime));
        INFO(name << " index " << r.index() << " p " << prime);
        CHECK(d.dims[1] == h1);
        CHECK(d.h1_agrees());
        CHECK(d.euler_residual == 0);
        CHECK(d.dims[0] == 1);
        if (d.bar) {
          CHECK(d.bar->dims[0] == 1);
          CHECK(static_cast<long>(d.bar->dims[1]) == d.dims[1]);
          CHECK(*d.jbar_dim >= 0);
        }
        ++checked;
      }
    }
  }
  CHECK(checked > 40);
}

TEST_CASE("dual complex rejects non-normal subgroups") {
  Presentation f2 = oracle::load("free2");
  std::size_t rejected = 0;
  for (const auto& r : low_index_subgroups(f2, 3)) {
    if (r.is_normal) continue;
    try {
      dual_complex_dims(f2, r, 2);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::non_normal_subgroup);
      ++rejected;
    }
  }
  CHECK(rejected > 0);
}
