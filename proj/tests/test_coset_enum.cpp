#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "deflab/coset_table.hpp"
#include "deflab/error.hpp"
#include "oracles.hpp"

using namespace deflab;

namespace {

const Letter a{0, 1}, b{1, 1};

std::map<std::size_t, std::size_t> counts_by_index(const std::vector<SubgroupRecord>& rs) {
  std::map<std::size_t, std::size_t> c;
  for (const auto& r : rs) ++c[r.index()];
  return c;
}

void check_group_axioms(const FiniteQuotient& q) {
  const auto n = static_cast<std::uint32_t>(q.order());
  for (std::uint32_t x = 0; x < n; ++x) {
    CHECK(q.multiply(0, x) == x);
    CHECK(q.multiply(x, 0) == x);
    CHECK(q.multiply(x, q.inverse(x)) == 0);
    for (std::uint32_t y = 0; y < n; ++y)
      for (std::uint32_t z = 0; z < n; ++z)
        REQUIRE(q.multiply(q.multiply(x, y), z) == q.multiply(x, q.multiply(y, z)));
  }
}

}  // namespace

TEST_CASE("todd-coxeter examples") {
  CHECK(todd_coxeter(parse_presentation("< a | a^5 >"), {}).index() == 5);
  CHECK(todd_coxeter(parse_presentation("< a, b | >"), {Word{a}, Word{b}}).index() == 1);
  CHECK(todd_coxeter(parse_presentation("< a, b | [a,b] >"), {Word{a, a}, Word{b}}).index() == 2);
  CHECK(todd_coxeter(oracle::load("q8"), {}).index() == 8);
  CHECK(todd_coxeter(oracle::load("d8"), {}).index() == 8);
  CHECK(todd_coxeter(oracle::load("c2xc2"), {}).index() == 4);
  // S3 = < a, b | a^2, b^3, (ab)^2 >
  CHECK(todd_coxeter(parse_presentation("< a, b | a^2, b^3, a b a b >"), {}).index() == 6);
  CHECK(todd_coxeter(parse_presentation("< a, b | a^2, b^3, a b a b >"), {Word{b}}).index() == 2);
}

TEST_CASE("todd-coxeter output is standard and valid") {
  CosetTable t = todd_coxeter(parse_presentation("< a, b | a^2, b^3, a b a b >"), {});
  CHECK(t.is_standard());
  CHECK(t.is_transitive());
  CHECK(t.relators_hold());
  CHECK(t.standardized() == t);
}

TEST_CASE("todd-coxeter limit") {
  try {
    todd_coxeter(parse_presentation("< a, b | [a,b] >"), {}, 500);
    FAIL("an infinite index cannot complete");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::limit_exceeded);
  }
}

TEST_CASE("low-index counts for F2 against Hall and brute force") {
  Presentation f2 = oracle::load("free2");
  auto hall = oracle::hall_counts(2, 5);
  CHECK(hall[1] == 1);
  CHECK(hall[2] == 3);
  CHECK(hall[3] == 13);
  CHECK(hall[4] == 71);
  CHECK(hall[5] == 461);
  auto counts = counts_by_index(low_index_subgroups(f2, 5));
  for (std::size_t n = 1; n <= 5; ++n) CHECK(counts[n] == static_cast<std::size_t>(hall[n]));
  for (int n = 1; n <= 4; ++n)
    CHECK(oracle::brute_force_subgroup_count(f2, n) == hall[n]);
}

TEST_CASE("low-index counts for F3 against Hall") {
  auto hall = oracle::hall_counts(3, 3);
  auto counts = counts_by_index(low_index_subgroups(oracle::load("free3"), 3));
  for (std::size_t n = 1; n <= 3; ++n) CHECK(counts[n] == static_cast<std::size_t>(hall[n]));
}

TEST_CASE("low-index counts against brute force on corpus groups") {
  for (const char* name : {"z2", "trefoil", "genus2", "f2xf2", "gadget_b3", "q8", "d8", "c2xc2", "redundant_z2"}) {
    Presentation p = oracle::load(name);
    const int top = p.generator_count() > 2 ? 3 : 4;
    auto counts = counts_by_index(low_index_subgroups(p, static_cast<std::size_t>(top)));
    for (int n = 1; n <= top; ++n) {
      INFO(name << " index " << n);
      CHECK(static_cast<std::int64_t>(counts[static_cast<std::size_t>(n)]) ==
            oracle::brute_force_subgroup_count(p, n));
    }
  }
}

TEST_CASE("subgroups of Z: one per index") {
  auto counts = counts_by_index(low_index_subgroups(oracle::load("free1"), 4));
  for (std::size_t n = 1; n <= 4; ++n) CHECK(counts[n] == 1);
}

TEST_CASE("low-index output: canonical, distinct, valid, transversals bijective") {
  auto rs = low_index_subgroups(oracle::load("genus2"), 3);
  std::set<std::vector<Coset>> seen;
  for (std::size_t i = 0; i < rs.size(); ++i) {
    const SubgroupRecord& r = rs[i];
    CHECK(r.table.is_standard());
    CHECK(r.table.is_transitive());
    CHECK(r.table.relators_hold());
    CHECK(seen.insert(r.table.flattened()).second);
    if (i > 0) {
      const auto& prev = rs[i - 1];
      CHECK((prev.index() < r.index() ||
             (prev.index() == r.index() && prev.table.flattened() < r.table.flattened())));
    }
    std::set<Coset> hit;
    for (Coset c = 0; c < r.index(); ++c) {
      CHECK(r.table.act(0, r.transversal[c]) == c);
      hit.insert(r.table.act(0, r.transversal[c]));
      // prefix closed
      const Word& t = r.transversal[c];
      if (!t.empty()) {
        Word prefix(std::vector<Letter>(t.begin(), t.end() - 1));
        bool found = false;
        for (const Word& u : r.transversal) found = found || u == prefix;
        CHECK(found);
      }
    }
    CHECK(hit.size() == r.index());
    CHECK(r.transversal[0].empty());
  }
  CHECK(rs.front().index() == 1);
}

TEST_CASE("schreier transversal examples") {
  Presentation f2 = oracle::load("free2");
  CHECK(schreier_transversal(todd_coxeter(f2, {Word{a}, Word{b}})).transversal ==
        std::vector<Word>{Word{}});
  // <a^2, b> alone has infinite index in F2; a b a^-1 closes it to index 2
  SubgroupRecord r = schreier_transversal(todd_coxeter(f2, {Word{a, a}, Word{b}, Word{a, b, a.inverse()}}));
  CHECK(r.transversal == std::vector<Word>{Word{}, Word{a}});
  SubgroupRecord c5 = schreier_transversal(todd_coxeter(parse_presentation("< a | a^5 >"), {}));
  // breadth-first with a before A: both directions around the 5-cycle
  const Letter A = a.inverse();
  CHECK(std::set<Word>(c5.transversal.begin(), c5.transversal.end()) ==
        std::set<Word>{Word{}, Word{a}, Word{A}, Word{a, a}, Word{A, A}});
}

TEST_CASE("normality") {
  Presentation f2 = oracle::load("free2");
  for (const auto& r : low_index_subgroups(f2, 3)) {
    if (r.index() <= 2) CHECK(r.is_normal);
    // brute force: H normal iff every transversal conjugate of every Schreier
    // generator fixes coset 0, i.e. the action of each w in H fixes all cosets
    bool normal = true;
    for (Coset c = 0; c < r.index(); ++c)
      for (std::size_t g = 0; g < 2; ++g) {
        Word h = r.transversal[c] * Word{Letter(g, 1)} *
                 r.transversal[r.table.act(c, Letter(g, 1))].inverse();
        for (Coset d = 0; d < r.index(); ++d) normal = normal && r.table.act(d, h) == d;
      }
    CHECK(r.is_normal == normal);
  }
}

TEST_CASE("core quotients") {
  Presentation f2 = oracle::load("free2");
  auto rs = low_index_subgroups(f2, 3);
  std::size_t s3_cores = 0;
  for (const auto& r : rs) {
    CoreQuotient cq = core_quotient(r);
    check_group_axioms(cq.quotient);
    CHECK(cq.core.is_normal);
    CHECK(cq.core.index() == cq.quotient.order());
    CHECK(cq.quotient.order() % r.index() == 0);
    if (r.index() == 2) CHECK(cq.quotient.order() == 2);
    if (r.index() == 1) CHECK(cq.quotient.order() == 1);
    if (r.index() == 3 && !r.is_normal) {
      CHECK(cq.quotient.order() == 6);
      ++s3_cores;
    }
  }
  CHECK(s3_cores > 0);
}

TEST_CASE("finite quotient from permutations") {
  Presentation s3 = parse_presentation("< a, b | a^2, b^3, a b a b >");
  FiniteQuotient q = FiniteQuotient::from_permutations(s3, {{1, 0, 2}, {1, 2, 0}});
  CHECK(q.order() == 6);
  check_group_axioms(q);
  for (const Word& r : s3.relators()) CHECK(q.image(r) == 0);
  // element words are shortlex least and map to their own element
  for (std::uint32_t g = 0; g < q.order(); ++g) CHECK(q.image(q.element_words()[g]) == g);
  CHECK_THROWS_AS(FiniteQuotient::from_permutations(s3, {{1, 2, 0}, {1, 2, 0}}), Error);
  CHECK_THROWS_AS(FiniteQuotient::from_permutations(oracle::load("free2"), {{1, 0, 2}, {1, 2, 0}}, 5),
                  Error);
}
