#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "deflab/error.hpp"
#include "deflab/homology.hpp"
#include "deflab/presentation.hpp"
#include "oracles.hpp"

using namespace deflab;

namespace {
const Letter a{0, 1}, A{0, -1}, b{1, 1}, B{1, -1};
}

TEST_CASE("words reduce freely") {
  CHECK(free_reduce(std::vector<Letter>{a, A, b}) == Word{b});
  CHECK(free_reduce(std::vector<Letter>{}).empty());
  CHECK(free_reduce(std::vector<Letter>{b, A, a, B}).empty());
  CHECK(Word{a, b} * Word{B, A} == Word{});
  CHECK(Word{a, b}.inverse() == Word{B, A});
  CHECK(Word::generator(0, 3) == Word{a, a, a});
  CHECK(Word::generator(1, -2) == Word{B, B});
}

TEST_CASE("cyclic reduction and rotation") {
  CHECK(cyclic_reduce(Word{b, a, b, B}) == Word{b, a});  // b a b b^-1 reduces to b a
  CHECK(cyclic_reduce(Word{B, a, b}) == Word{a});
  // least rotation of b a^-1 b^-1 a is a b a^-1 b^-1
  CHECK(canonical_rotation(Word{b, A, B, a}) == Word{a, b, A, B});
  auto [root, m] = root_and_power(Word{a, b, a, b, a, b});
  CHECK(m == 3);
  CHECK(root == Word{a, b});
  CHECK(root_and_power(Word{a, a, b}).second == 1);
}

TEST_CASE("parser grammar") {
  Presentation t = parse_presentation("< a, b | [a,b] >");
  CHECK(t.generators() == std::vector<std::string>{"a", "b"});
  REQUIRE(t.relator_count() == 1);
  CHECK(t.relators()[0] == Word{a, b, A, B});

  Presentation c5 = parse_presentation("< a | a^5 >");
  CHECK(c5.relators()[0] == Word::generator(0, 5));

  Presentation f2 = parse_presentation("< a, b | >");
  CHECK(f2.relator_count() == 0);
  CHECK(f2.deficiency() == 2);

  Presentation g = parse_presentation("<x1,y_2|x1^-2 y_2^3, [x1, [x1,y_2]]>");
  CHECK(g.generator_count() == 2);
  CHECK(g.relator_count() == 2);

  // cancellation happens at parse time; an empty relator disappears
  CHECK(parse_presentation("< a | a a^-1 >").relator_count() == 0);
}

TEST_CASE("parser errors") {
  CHECK_THROWS_AS(parse_presentation("< a, b | c >"), Error);
  CHECK_THROWS_AS(parse_presentation("< | >"), Error);
  CHECK_THROWS_AS(parse_presentation("< a, a | >"), Error);
  try {
    parse_presentation("< a, b | a^ >");
    FAIL("expected a syntax error");
  } catch (const SyntaxError& e) {
    CHECK(e.position() > 0);
    CHECK(e.kind() == ErrorKind::syntax);
  }
  try {
    parse_presentation("< a | b >");
    FAIL("expected an unknown generator");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::unknown_generator);
  }
  try {
    parse_presentation("< | a >");
    FAIL("expected an empty generator list");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::empty_generators);
  }
}

TEST_CASE("serialize then parse is the identity") {
  for (const char* name : {"z2", "genus2", "genus3", "f2xf2", "trefoil", "gadget_b3", "q8", "free3"}) {
    Presentation p = oracle::load(name);
    CHECK(parse_presentation(p.to_string()) == p);
  }
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    std::vector<Word> rel;
    for (int j = 0; j < 3; ++j) rel.push_back(oracle::random_word(rng, 3, 12));
    Presentation p({"x", "y", "z"}, rel);
    CHECK(parse_presentation(p.to_string()) == p);
  }
}

TEST_CASE("free_reduce is idempotent and never lengthens") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::size_t> code(0, 5), len(0, 30);
  for (int i = 0; i < 500; ++i) {
    std::vector<Letter> raw;
    for (std::size_t k = len(rng); k > 0; --k) raw.push_back(Letter::from_code(code(rng)));
    Word w = free_reduce(raw);
    CHECK(w.size() <= raw.size());
    CHECK(free_reduce(std::vector<Letter>(w.begin(), w.end())) == w);
    for (std::size_t k = 1; k < w.size(); ++k) CHECK(w[k] != w[k - 1].inverse());
  }
}

TEST_CASE("tietze examples") {
  CHECK(tietze_simplify(parse_presentation("< a, b | b^3, b^3 >")) ==
        parse_presentation("< a, b | b^3 >"));
  Presentation e = tietze_simplify(parse_presentation("< a, b | a b^-2 >"));
  CHECK(e.generator_count() == 1);
  CHECK(e.relator_count() == 0);
  Presentation t = parse_presentation("< a, b | [a,b] >");
  CHECK(tietze_simplify(t) == t);

  CHECK(deficiency_lower_bound(oracle::load("genus2")) == 3);
  CHECK(deficiency_lower_bound(t) == 1);
  CHECK(deficiency_lower_bound(oracle::load("free3")) == 3);
}

TEST_CASE("tietze preserves H1 and never lowers the deficiency") {
  std::vector<Presentation> ps;
  for (const char* name : {"z2", "genus2", "f2xf2", "trefoil", "gadget_b3", "gadget_torus",
                           "redundant_z2", "c2xc2", "d8", "q8", "free2"})
    ps.push_back(oracle::load(name));
  std::mt19937_64 rng(3);
  for (int i = 0; i < 150; ++i) {
    std::vector<Word> rel;
    for (int j = 0; j < 3; ++j) rel.push_back(oracle::random_word(rng, 3, 6));
    ps.emplace_back(std::vector<std::string>{"x", "y", "z"}, rel);
  }
  for (const Presentation& p : ps) {
    Presentation s = tietze_simplify(p);
    CHECK(s.deficiency() >= p.deficiency());
    CHECK(abelianization(s) == abelianization(p));
  }
}
