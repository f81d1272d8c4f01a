#ifndef DEFLAB_PRESENTATION_HPP
#define DEFLAB_PRESENTATION_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace deflab {

/// A generator or its inverse. Encoded as 2*generator + (inverse ? 1 : 0), so
/// the natural order is a < a^-1 < b < b^-1 < ...
class Letter {
 public:
  constexpr Letter() = default;
  constexpr Letter(std::size_t generator, int sign)
      : code_(static_cast<std::uint32_t>(2 * generator + (sign < 0 ? 1 : 0))) {}

  static constexpr Letter from_code(std::size_t code) {
    Letter l;
    l.code_ = static_cast<std::uint32_t>(code);
    return l;
  }

  constexpr std::size_t generator() const { return code_ >> 1; }
  constexpr int sign() const { return (code_ & 1U) ? -1 : 1; }
  constexpr bool is_inverse() const { return (code_ & 1U) != 0; }
  constexpr std::size_t code() const { return code_; }
  constexpr Letter inverse() const { return from_code(code_ ^ 1U); }

  constexpr auto operator<=>(const Letter&) const = default;

 private:
  std::uint32_t code_ = 0;
};

/// Freely reduced word in a free group. Ordered shortlex.
class Word {
 public:
  Word() = default;
  /// Reduces its input.
  explicit Word(std::span<const Letter> letters);
  Word(std::initializer_list<Letter> letters);

  static Word generator(std::size_t g, int power = 1);

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }
  std::span<const Letter> letters() const { return letters_; }

  Word inverse() const;
  Word operator*(const Word& rhs) const;
  Word& operator*=(const Word& rhs);
  Word power(int n) const;

  /// Number of occurrences of generator g (either sign).
  std::size_t occurrences(std::size_t generator) const;
  /// Sum of exponents of generator g.
  long exponent_sum(std::size_t generator) const;
  std::size_t max_generator_plus_one() const;

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& a, const Word& b);

 private:
  std::vector<Letter> letters_;
};

/// Unique freely reduced form of an arbitrary letter sequence.
Word free_reduce(std::span<const Letter> letters);

/// Strips inverse pairs from the two ends.
Word cyclic_reduce(const Word& w);

/// Lexicographically least rotation of the cyclic reduction of w.
Word canonical_rotation(const Word& w);

/// Returns the root s and exponent m with w cyclically reduced equal to s^m
/// and m maximal.
std::pair<Word, std::size_t> root_and_power(const Word& w);

/// ⟨generators | relators⟩. Relators are stored cyclically reduced in their
/// least rotation; empty relators are dropped.
class Presentation {
 public:
  Presentation() = default;
  Presentation(std::vector<std::string> generators, std::vector<Word> relators);

  /// Unnamed generators x1..xn.
  static Presentation free(std::size_t rank);

  const std::vector<std::string>& generators() const { return generators_; }
  const std::vector<Word>& relators() const { return relators_; }
  std::size_t generator_count() const { return generators_.size(); }
  std::size_t relator_count() const { return relators_.size(); }
  long deficiency() const {
    return static_cast<long>(generators_.size()) -
           static_cast<long>(relators_.size());
  }
  /// Euler characteristic 1 - e1 + e2 of the presentation complex.
  long euler_characteristic() const { return 1 - deficiency(); }
  std::size_t total_length() const;

  std::string word_to_string(const Word& w) const;
  std::string to_string() const;

  friend bool operator==(const Presentation&, const Presentation&) = default;

 private:
  std::vector<std::string> generators_;
  std::vector<Word> relators_;
};

Presentation parse_presentation(std::string_view text);
/// Parses a word in the presentation's generator names ("1" or "" is the
/// identity).
Word parse_word(std::string_view text, const std::vector<std::string>& generators);

/// Bounded greedy Tietze simplification. Never lowers e1 - e2.
Presentation tietze_simplify(const Presentation& p, int effort = 32);

long deficiency_lower_bound(const Presentation& p, int effort = 32);

/// Exponent-sum matrix (relators x generators); its cokernel is H1.
std::vector<std::vector<long>> exponent_sum_matrix(const Presentation& p);

}  // namespace deflab

#endif  // DEFLAB_PRESENTATION_HPP
