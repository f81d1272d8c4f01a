#include "deflab/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "deflab/error.hpp"

namespace deflab {

// ---------------------------------------------------------------- words

Word::Word(std::span<const Letter> letters) {
  letters_.reserve(letters.size());
  for (Letter l : letters) {
    if (!letters_.empty() && letters_.back() == l.inverse())
      letters_.pop_back();
    else
      letters_.push_back(l);
  }
}

Word free_reduce(std::span<const Letter> letters) { return Word(letters); }

Word::Word(std::initializer_list<Letter> letters)
    : Word(std::span<const Letter>(letters.begin(), letters.size())) {}

Word Word::generator(std::size_t g, int power) {
  std::vector<Letter> ls(static_cast<std::size_t>(std::abs(power)),
                         Letter(g, power < 0 ? -1 : 1));
  Word w;
  w.letters_ = std::move(ls);
  return w;
}

Word Word::inverse() const {
  Word w;
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    w.letters_.push_back(it->inverse());
  return w;
}

Word& Word::operator*=(const Word& rhs) {
  std::size_t k = 0;
  while (k < rhs.size() && !letters_.empty() &&
         letters_.back() == rhs.letters_[k].inverse()) {
    letters_.pop_back();
    ++k;
  }
  letters_.insert(letters_.end(), rhs.letters_.begin() + static_cast<long>(k),
                  rhs.letters_.end());
  return *this;
}

Word Word::operator*(const Word& rhs) const {
  Word out = *this;
  out *= rhs;
  return out;
}

Word Word::power(int n) const {
  Word base = n < 0 ? inverse() : *this;
  Word out;
  for (int i = 0; i < std::abs(n); ++i) out *= base;
  return out;
}

std::size_t Word::occurrences(std::size_t g) const {
  return static_cast<std::size_t>(std::count_if(
      letters_.begin(), letters_.end(),
      [g](Letter l) { return l.generator() == g; }));
}

long Word::exponent_sum(std::size_t g) const {
  long s = 0;
  for (Letter l : letters_)
    if (l.generator() == g) s += l.sign();
  return s;
}

std::size_t Word::max_generator_plus_one() const {
  std::size_t m = 0;
  for (Letter l : letters_) m = std::max(m, l.generator() + 1);
  return m;
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(
      a.letters_.begin(), a.letters_.end(), b.letters_.begin(),
      b.letters_.end());
}

Word cyclic_reduce(const Word& w) {
  std::size_t lo = 0;
  std::size_t hi = w.size();
  while (hi - lo >= 2 && w[lo] == w[hi - 1].inverse()) {
    ++lo;
    --hi;
  }
  std::vector<Letter> core(w.begin() + static_cast<long>(lo),
                           w.begin() + static_cast<long>(hi));
  return Word(core);
}

Word canonical_rotation(const Word& w) {
  Word c = cyclic_reduce(w);
  const std::size_t n = c.size();
  if (n <= 1) return c;
  std::size_t best = 0;
  for (std::size_t s = 1; s < n; ++s) {
    for (std::size_t t = 0; t < n; ++t) {
      Letter x = c[(s + t) % n];
      Letter y = c[(best + t) % n];
      if (x < y) {
        best = s;
        break;
      }
      if (y < x) break;
    }
  }
  std::vector<Letter> rotated;
  rotated.reserve(n);
  for (std::size_t t = 0; t < n; ++t) rotated.push_back(c[(best + t) % n]);
  return Word(rotated);
}

std::pair<Word, std::size_t> root_and_power(const Word& w) {
  Word c = cyclic_reduce(w);
  const std::size_t n = c.size();
  for (std::size_t period = 1; period < n; ++period) {
    if (n % period != 0) continue;
    bool periodic = true;
    for (std::size_t i = period; i < n && periodic; ++i)
      periodic = c[i] == c[i - period];
    if (periodic) {
      std::vector<Letter> root(c.begin(), c.begin() + static_cast<long>(period));
      return {Word(root), n / period};
    }
  }
  return {c, n == 0 ? 0 : 1};
}

// --------------------------------------------------------- presentation

Presentation::Presentation(std::vector<std::string> generators,
                           std::vector<Word> relators)
    : generators_(std::move(generators)) {
  std::set<std::string> seen;
  for (const auto& g : generators_)
    if (!seen.insert(g).second)
      throw Error(ErrorKind::invalid_argument, "duplicate generator name '" + g + "'");
  relators_.reserve(relators.size());
  for (const Word& r : relators) {
    if (r.max_generator_plus_one() > generators_.size())
      throw Error(ErrorKind::unknown_generator,
                  "relator uses a generator index beyond the generator list");
    Word c = canonical_rotation(r);
    if (!c.empty()) relators_.push_back(std::move(c));
  }
}

Presentation Presentation::free(std::size_t rank) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < rank; ++i) names.push_back("x" + std::to_string(i + 1));
  return Presentation(std::move(names), {});
}

std::size_t Presentation::total_length() const {
  std::size_t n = 0;
  for (const Word& r : relators_) n += r.size();
  return n;
}

std::string Presentation::word_to_string(const Word& w) const {
  if (w.empty()) return "1";
  std::ostringstream out;
  std::size_t i = 0;
  bool first = true;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    const long run = static_cast<long>(j - i) * w[i].sign();
    if (!first) out << ' ';
    first = false;
    out << generators_.at(w[i].generator());
    if (run != 1) out << '^' << run;
    i = j;
  }
  return out.str();
}

std::string Presentation::to_string() const {
  std::ostringstream out;
  out << "< ";
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (i) out << ", ";
    out << generators_[i];
  }
  out << " |";
  for (std::size_t i = 0; i < relators_.size(); ++i) {
    out << (i ? ", " : " ") << word_to_string(relators_[i]);
  }
  out << " >";
  return out.str();
}

// -------------------------------------------------------------- parsing

namespace {

bool is_name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Presentation presentation() {
    expect('<');
    std::vector<std::string> names;
    skip();
    if (peek() == '|') throw SyntaxError(ErrorKind::empty_generators, pos_, "empty generator list");
    while (true) {
      std::size_t at = pos_;
      std::string n = name();
      if (std::find(names.begin(), names.end(), n) != names.end())
        throw SyntaxError(ErrorKind::syntax, at, "duplicate generator '" + n + "'");
      names.push_back(std::move(n));
      skip();
      if (peek() == ',') {
        ++pos_;
        continue;
      }
      break;
    }
    generators_ = &names;
    expect('|');
    std::vector<Word> relators;
    skip();
    if (peek() != '>') {
      while (true) {
        relators.push_back(word({',', '>'}));
        skip();
        if (peek() == ',') {
          ++pos_;
          continue;
        }
        break;
      }
    }
    expect('>');
    skip();
    if (pos_ != text_.size()) throw SyntaxError(ErrorKind::syntax, pos_, "trailing input");
    return Presentation(std::move(names), std::move(relators));
  }

  Word standalone_word(const std::vector<std::string>& generators) {
    generators_ = &generators;
    skip();
    if (pos_ == text_.size()) return Word{};
    if (peek() == '1') {
      ++pos_;
      skip();
      if (pos_ != text_.size()) throw SyntaxError(ErrorKind::syntax, pos_, "trailing input");
      return Word{};
    }
    Word w = word({'\0'});
    skip();
    if (pos_ != text_.size()) throw SyntaxError(ErrorKind::syntax, pos_, "trailing input");
    return w;
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect(char c) {
    skip();
    if (peek() != c)
      throw SyntaxError(ErrorKind::syntax, pos_, std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string name() {
    skip();
    if (!is_name_start(peek())) throw SyntaxError(ErrorKind::syntax, pos_, "expected a generator name");
    std::size_t start = pos_;
    while (pos_ < text_.size() && is_name_char(text_[pos_])) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  long signed_int() {
    skip();
    std::size_t start = pos_;
    bool negative = false;
    if (peek() == '-' || peek() == '+') {
      negative = peek() == '-';
      ++pos_;
    }
    skip();
    if (!std::isdigit(static_cast<unsigned char>(peek())))
      throw SyntaxError(ErrorKind::syntax, pos_, "expected an integer exponent");
    long value = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + (peek() - '0');
      if (value > 1000000) throw SyntaxError(ErrorKind::syntax, start, "exponent too large");
      ++pos_;
    }
    return negative ? -value : value;
  }

  Word exponentiate(Word base) {
    skip();
    if (peek() != '^') return base;
    ++pos_;
    return base.power(static_cast<int>(signed_int()));
  }

  Word term() {
    skip();
    if (peek() == '[') {
      ++pos_;
      Word u = word({','});
      expect(',');
      Word v = word({']'});
      expect(']');
      return exponentiate(u * v * u.inverse() * v.inverse());
    }
    std::size_t at = pos_;
    std::string n = name();
    const auto& gens = *generators_;
    auto it = std::find(gens.begin(), gens.end(), n);
    if (it == gens.end())
      throw SyntaxError(ErrorKind::unknown_generator, at, "unknown generator '" + n + "'");
    return exponentiate(Word::generator(static_cast<std::size_t>(it - gens.begin())));
  }

  // term+ terminated by one of the stop characters (not consumed).
  Word word(std::initializer_list<char> stops) {
    Word w;
    std::size_t count = 0;
    while (true) {
      skip();
      char c = peek();
      if (std::find(stops.begin(), stops.end(), c) != stops.end() && count > 0) break;
      if (c == '\0') {
        if (count > 0 && std::find(stops.begin(), stops.end(), '\0') != stops.end()) break;
        throw SyntaxError(ErrorKind::syntax, pos_, "unexpected end of input");
      }
      if (c == '*' && count > 0) {
        ++pos_;
        continue;
      }
      w *= term();
      ++count;
    }
    return w;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  const std::vector<std::string>* generators_ = nullptr;
};

}  // namespace

Presentation parse_presentation(std::string_view text) {
  return Parser(text).presentation();
}

Word parse_word(std::string_view text, const std::vector<std::string>& generators) {
  return Parser(text).standalone_word(generators);
}

// -------------------------------------------------------------- tietze

namespace {

struct TietzeState {
  std::vector<std::string> generators;
  std::vector<Word> relators;

  std::size_t total() const {
    std::size_t n = 0;
    for (const auto& r : relators) n += r.size();
    return n;
  }

  void canonicalize() {
    std::vector<Word> kept;
    for (const Word& r : relators) {
      Word c = canonical_rotation(r);
      if (!c.empty()) kept.push_back(std::move(c));
    }
    relators = std::move(kept);
  }

  bool dedupe() {
    std::set<Word> seen;
    std::vector<Word> kept;
    for (const Word& r : relators) {
      Word key = std::min(r, canonical_rotation(r.inverse()));
      if (seen.insert(key).second) kept.push_back(r);
    }
    bool changed = kept.size() != relators.size();
    relators = std::move(kept);
    return changed;
  }

  // Solve some relator for a generator occurring in it exactly once.
  bool eliminate_one() {
    struct Candidate {
      std::size_t length, relator, generator;
      auto operator<=>(const Candidate&) const = default;
    };
    std::vector<Candidate> candidates;
    for (std::size_t i = 0; i < relators.size(); ++i)
      for (std::size_t g = 0; g < generators.size(); ++g)
        if (relators[i].occurrences(g) == 1)
          candidates.push_back({relators[i].size(), i, g});
    std::sort(candidates.begin(), candidates.end());

    const std::size_t before = total();
    const std::size_t cap = std::max<std::size_t>(4 * before, before + 200);
    for (const Candidate& c : candidates) {
      const Word& r = relators[c.relator];
      std::size_t at = 0;
      while (r[at].generator() != c.generator) ++at;
      // r = x^e w (rotated)  =>  x = w^{-e}
      std::vector<Letter> rest;
      for (std::size_t t = 1; t < r.size(); ++t) rest.push_back(r[(at + t) % r.size()]);
      Word w(rest);
      Word value = r[at].sign() > 0 ? w.inverse() : w;

      std::vector<Word> next;
      std::size_t length = 0;
      for (std::size_t i = 0; i < relators.size(); ++i) {
        if (i == c.relator) continue;
        Word out;
        for (Letter l : relators[i]) {
          if (l.generator() == c.generator)
            out *= l.sign() > 0 ? value : value.inverse();
          else
            out *= Word{l};
        }
        length += out.size();
        next.push_back(std::move(out));
      }
      if (length > cap) continue;

      // Drop the generator and shift higher indices down.
      for (Word& out : next) {
        std::vector<Letter> shifted;
        for (Letter l : out) {
          std::size_t g = l.generator();
          shifted.emplace_back(g > c.generator ? g - 1 : g, l.sign());
        }
        out = Word(shifted);
      }
      generators.erase(generators.begin() + static_cast<long>(c.generator));
      relators = std::move(next);
      canonicalize();
      return true;
    }
    return false;
  }

  // Replace a long piece of relator j by the shorter complement taken from
  // a cyclic conjugate of relator i (or its inverse).
  static std::optional<Word> shorten(const Word& target, const Word& by) {
    const std::size_t n = target.size();
    const std::size_t len = by.size();
    if (len == 0 || len > n) return std::nullopt;
    for (const Word& base : {by, by.inverse()}) {
      for (std::size_t m = len; m > len / 2; --m) {
        for (std::size_t rot = 0; rot < len; ++rot) {
          for (std::size_t s = 0; s < n; ++s) {
            bool match = true;
            for (std::size_t t = 0; t < m && match; ++t)
              match = target[(s + t) % n] == base[(rot + t) % len];
            if (!match) continue;
            std::vector<Letter> out;
            for (std::size_t t = len; t > m; --t)
              out.push_back(base[(rot + t - 1) % len].inverse());
            for (std::size_t t = m; t < n; ++t) out.push_back(target[(s + t) % n]);
            return canonical_rotation(Word(out));
          }
        }
      }
    }
    return std::nullopt;
  }

  bool substitute() {
    bool changed = false;
    bool progress = true;
    while (progress) {
      progress = false;
      for (std::size_t j = 0; j < relators.size() && !progress; ++j)
        for (std::size_t i = 0; i < relators.size() && !progress; ++i) {
          if (i == j || relators[i].size() > relators[j].size()) continue;
          if (auto shorter = shorten(relators[j], relators[i])) {
            relators[j] = *shorter;
            canonicalize();
            progress = changed = true;
          }
        }
    }
    return changed;
  }
};

}  // namespace

Presentation tietze_simplify(const Presentation& p, int effort) {
  TietzeState s{p.generators(), p.relators()};
  for (int pass = 0; pass < effort; ++pass) {
    bool changed = s.dedupe();
    while (s.eliminate_one()) {
      changed = true;
      s.dedupe();
    }
    changed = s.substitute() || changed;
    changed = s.dedupe() || changed;
    if (!changed) break;
  }
  return Presentation(std::move(s.generators), std::move(s.relators));
}

long deficiency_lower_bound(const Presentation& p, int effort) {
  return tietze_simplify(p, effort).deficiency();
}

std::vector<std::vector<long>> exponent_sum_matrix(const Presentation& p) {
  std::vector<std::vector<long>> m(p.relator_count(),
                                   std::vector<long>(p.generator_count(), 0));
  for (std::size_t i = 0; i < p.relator_count(); ++i)
    for (Letter l : p.relators()[i]) m[i][l.generator()] += l.sign();
  return m;
}

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::syntax: return "syntax";
    case ErrorKind::unknown_generator: return "unknown-generator";
    case ErrorKind::empty_generators: return "empty-generators";
    case ErrorKind::invalid_argument: return "invalid-argument";
    case ErrorKind::limit_exceeded: return "limit-exceeded";
    case ErrorKind::incomplete_table: return "incomplete-table";
    case ErrorKind::composition_nonzero: return "composition-nonzero";
    case ErrorKind::invalid_quotient: return "invalid-quotient";
    case ErrorKind::incompatible_subgroup: return "incompatible-subgroup";
    case ErrorKind::zero_witness: return "zero-witness";
    case ErrorKind::witness_not_in_kernel: return "witness-not-in-kernel";
    case ErrorKind::search_exhausted: return "search-exhausted";
    case ErrorKind::non_normal_subgroup: return "non-normal-subgroup";
    case ErrorKind::cap_exceeded: return "cap-exceeded";
    case ErrorKind::invalid_certificate: return "invalid-certificate";
    case ErrorKind::internal: return "internal";
  }
  return "unknown";
}

}  // namespace deflab
