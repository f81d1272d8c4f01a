#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "deflab/error.hpp"
#include "deflab/homology.hpp"
#include "deflab/linalg.hpp"
#include "oracles.hpp"

using namespace deflab;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, int max_size, int bound) {
  std::uniform_int_distribution<int> size(1, max_size), entry(-bound, bound);
  IntMatrix m(size(rng), size(rng));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) m(i, j) = entry(rng);
  return m;
}

}  // namespace

TEST_CASE("smith normal form examples") {
  IntMatrix id = IntMatrix::Identity(3, 3);
  auto r = smith_normal_form(id);
  CHECK(r.rank == 3);
  CHECK(r.diagonal == std::vector<BigInt>{1, 1, 1});

  auto z = smith_normal_form(IntMatrix(IntMatrix::Zero(2, 3)));
  CHECK(z.rank == 0);

  IntMatrix d(2, 2);
  d << 2, 0, 0, 3;
  auto s = smith_normal_form(d);
  CHECK(s.diagonal == std::vector<BigInt>{1, 6});
  CHECK(oracle::snf_verified(d, s));
}

TEST_CASE("smith normal form matches determinantal divisors") {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 150; ++i) {
    IntMatrix a = random_matrix(rng, 4, 6);
    auto r = smith_normal_form(a);
    CHECK(oracle::snf_verified(a, r));
    CHECK(r.diagonal == oracle::determinantal_invariants(a));
  }
}

TEST_CASE("smith normal form self-verification on random matrices") {
  std::mt19937_64 rng(500);
  for (int i = 0; i < 200; ++i) {
    IntMatrix a = random_matrix(rng, 12, 9);
    auto r = smith_normal_form(a);
    REQUIRE(oracle::snf_verified(a, r));
    CHECK(r.rank == rank_rational(a));
  }
}

TEST_CASE("smith normal form survives large entries") {
  IntMatrix a(3, 3);
  a << BigInt("123456789012345678901234567890"), 7, 11,
      13, BigInt("-98765432109876543210"), 17,
      19, 23, BigInt("5000000000000000000000000000001");
  auto r = smith_normal_form(a);
  CHECK(oracle::snf_verified(a, r));
  CHECK(r.rank == 3);
}

TEST_CASE("determinant and rational rank") {
  IntMatrix a(3, 3);
  a << 2, -1, 0, -1, 2, -1, 0, -1, 2;
  CHECK(determinant(a) == 4);
  IntMatrix s(3, 3);
  s << 1, 2, 3, 2, 4, 6, 1, 0, 1;
  CHECK(determinant(s) == 0);
  CHECK(rank_rational(s) == 2);
}

TEST_CASE("rank mod p examples") {
  IntMatrix two(1, 1);
  two << 2;
  CHECK(rank_mod_p(two, 2) == 0);
  CHECK(rank_mod_p(two, 3) == 1);
  IntMatrix ones(2, 2);
  ones << 1, 1, 1, 1;
  for (std::uint64_t p : {2, 3, 5, 7}) CHECK(rank_mod_p(ones, p) == 1);
  try {
    rank_mod_p(ones, 4);
    FAIL("4 is not prime");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::invalid_argument);
  }
}

TEST_CASE("rank mod p agrees with the naive oracle and with Q away from torsion") {
  std::mt19937_64 rng(77);
  for (int i = 0; i < 200; ++i) {
    IntMatrix a = random_matrix(rng, 8, 5);
    auto snf = smith_normal_form(a, {.transforms = false, .verify = true});
    for (std::uint64_t p : {2, 3, 5, 7, 11}) {
      CHECK(rank_mod_p(a, p) == oracle::naive_rank_mod_p(a, p));
      bool divides = false;
      for (const auto& d : snf.diagonal) divides = divides || d % static_cast<unsigned long>(p) == 0;
      if (!divides) CHECK(rank_mod_p(a, p) == snf.rank);
    }
  }
}

TEST_CASE("betti numbers of presentation complexes") {
  auto b = [](const char* name, Field f = Field::rationals()) {
    Presentation p = oracle::load(name);
    return betti_numbers(presentation_chain_complex(p, FiniteQuotient::trivial(p)), f);
  };
  CHECK(b("z2").b == std::vector<long>{1, 2, 1});
  CHECK(b("genus2").b == std::vector<long>{1, 4, 1});
  CHECK(b("free2").b == std::vector<long>{1, 2, 0});
  BettiVector c5 = b("c5");
  CHECK(c5.b == std::vector<long>{1, 0, 0});
  CHECK(c5.torsion[1] == std::vector<BigInt>{5});
  CHECK(b("c5", Field::prime(5)).b == std::vector<long>{1, 1, 1});
  CHECK(b("c5", Field::prime(2)).b == std::vector<long>{1, 0, 0});
  for (const char* name : {"z2", "genus2", "genus3", "f2xf2", "trefoil", "gadget_b3", "q8", "d8"})
    CHECK(b(name).b[0] == 1);
}

TEST_CASE("partial euler characteristics") {
  auto e = partial_euler_mu({1, 2, 1}, 2);
  CHECK(e.mu == 0);
  CHECK(e.chi == 0);
  REQUIRE(e.nu2.has_value());
  CHECK(*e.nu2 == 0);
  CHECK(partial_euler_mu({1, 5, 3}, 2).mu == 1 - 5 + 3);
  CHECK(partial_euler_mu({1, 4, 1}, 2).mu == -2);
  CHECK(partial_euler_mu({1, 3, 3, 1}, 3).mu == 0);
  CHECK(partial_euler_mu({1, 3}, 1).mu == 2);
}

TEST_CASE("morse check examples") {
  BettiVector torus{{1, 2, 1}, {}, Field::rationals()};
  auto m = morse_check(torus, partial_euler_mu({1, 2, 1}, 2));
  CHECK(m.holds);
  CHECK(m.slack == 0);
  BettiVector g2{{1, 4, 1}, {}, Field::rationals()};
  auto m2 = morse_check(g2, partial_euler_mu({1, 4, 1}, 2));
  CHECK(m2.holds);
  CHECK(m2.slack == 0);
  BettiVector fake{{1, 0, 5}, {}, Field::rationals()};
  auto bad = morse_check(fake, partial_euler_mu({1, 2, 1}, 2));
  CHECK_FALSE(bad.holds);
  CHECK(bad.alternating_betti == 6);
  CHECK(bad.slack == -6);
}

TEST_CASE("morse inequalities on every corpus cover complex") {
  for (const char* name : {"z2", "genus2", "trefoil", "f2xf2", "gadget_b3", "redundant_z2", "q8", "c2xc2"}) {
    Presentation p = oracle::load(name);
    for (const auto& r : low_index_subgroups(p, 3)) {
      CoreQuotient cq = core_quotient(r);
      ChainComplex c = presentation_chain_complex(p, cq.quotient);
      std::vector<long> dims;
      for (std::size_t i = 0; i <= 2; ++i) dims.push_back(static_cast<long>(c.module_dimension(i)));
      for (Field f : {Field::rationals(), Field::prime(2), Field::prime(3)}) {
        BettiVector b = betti_numbers(c, f);
        for (std::size_t n = 0; n <= 2; ++n) CHECK(morse_check(b, partial_euler_mu(dims, n)).holds);
      }
    }
  }
}

TEST_CASE("abelianization") {
  CHECK(abelianization(oracle::load("z2")).free_rank == 2);
  AbelianInvariants q8 = abelianization(oracle::load("q8"));
  CHECK(q8.free_rank == 0);
  CHECK(q8.torsion == std::vector<BigInt>{2, 2});
  AbelianInvariants g = abelianization(oracle::load("gadget_b3"));
  CHECK(g.free_rank == 1);
  CHECK(g.torsion == std::vector<BigInt>{3});
  CHECK(abelianization_rank_mod_p(oracle::load("gadget_b3"), 3) == 2);
  CHECK(abelianization_rank_mod_p(oracle::load("gadget_b3"), 2) == 1);
}
