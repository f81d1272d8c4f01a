#include "deflab/coset_table.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

#include "deflab/error.hpp"

namespace deflab {

namespace {

constexpr std::int32_t kUndefined = -1;

Permutation invert(const Permutation& p) {
  Permutation inv(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) inv[p[i]] = static_cast<Coset>(i);
  return inv;
}

bool is_bijection(const Permutation& p) {
  std::vector<bool> hit(p.size(), false);
  for (Coset c : p) {
    if (c >= p.size() || hit[c]) return false;
    hit[c] = true;
  }
  return true;
}

}  // namespace

// ----------------------------------------------------------- CosetTable

CosetTable::CosetTable(Presentation origin, std::vector<Permutation> action)
    : origin_(std::move(origin)), action_(std::move(action)) {
  if (action_.size() != origin_.generator_count())
    throw Error(ErrorKind::invalid_argument, "coset table needs one permutation per generator");
  index_ = action_.empty() ? 1 : action_.front().size();
  if (index_ == 0) throw Error(ErrorKind::invalid_argument, "coset table must be non-empty");
  for (const auto& perm : action_) {
    if (perm.size() != index_ || !is_bijection(perm))
      throw Error(ErrorKind::invalid_argument, "generator action is not a permutation");
    inverse_.push_back(invert(perm));
  }
  if (!relators_hold())
    throw Error(ErrorKind::invalid_argument, "a relator does not act trivially on the cosets");
  if (!is_transitive()) throw Error(ErrorKind::invalid_argument, "coset action is not transitive");
}

bool CosetTable::relators_hold() const {
  for (const Word& r : origin_.relators())
    for (Coset c = 0; c < index_; ++c)
      if (act(c, r) != c) return false;
  return true;
}

bool CosetTable::is_transitive() const {
  std::vector<bool> seen(index_, false);
  std::vector<Coset> queue{0};
  seen[0] = true;
  for (std::size_t head = 0; head < queue.size(); ++head)
    for (std::size_t code = 0; code < 2 * action_.size(); ++code) {
      Coset d = act(queue[head], Letter::from_code(code));
      if (!seen[d]) {
        seen[d] = true;
        queue.push_back(d);
      }
    }
  return queue.size() == index_;
}

CosetTable CosetTable::standardized() const {
  constexpr Coset unseen = ~Coset{0};
  std::vector<Coset> relabel(index_, unseen);
  std::vector<Coset> order{0};
  relabel[0] = 0;
  for (std::size_t head = 0; head < order.size(); ++head)
    for (std::size_t code = 0; code < 2 * action_.size(); ++code) {
      Coset d = act(order[head], Letter::from_code(code));
      if (relabel[d] == unseen) {
        relabel[d] = static_cast<Coset>(order.size());
        order.push_back(d);
      }
    }
  std::vector<Permutation> out(action_.size(), Permutation(index_));
  for (std::size_t g = 0; g < action_.size(); ++g)
    for (Coset c = 0; c < index_; ++c) out[g][relabel[c]] = relabel[action_[g][c]];
  return CosetTable(origin_, std::move(out));
}

bool CosetTable::is_standard() const { return standardized().action_ == action_; }

std::vector<Coset> CosetTable::flattened() const {
  std::vector<Coset> flat;
  flat.reserve(index_ * 2 * action_.size());
  for (Coset c = 0; c < index_; ++c)
    for (std::size_t code = 0; code < 2 * action_.size(); ++code)
      flat.push_back(act(c, Letter::from_code(code)));
  return flat;
}

// --------------------------------------------------------- Todd-Coxeter

namespace {

class Enumerator {
 public:
  Enumerator(const Presentation& p, std::size_t limit)
      : letters_(2 * p.generator_count()), limit_(limit) {
    define_row();
  }

  CosetTable run(const Presentation& p, const std::vector<Word>& subgens) {
    for (const Word& w : subgens)
      if (!w.empty()) scan_and_fill(0, w);
    for (std::size_t alpha = 0; alpha < parent_.size(); ++alpha) {
      for (const Word& r : p.relators()) {
        if (!live(alpha)) break;
        scan_and_fill(static_cast<std::int32_t>(alpha), r);
      }
      if (!live(alpha)) continue;
      for (std::size_t x = 0; x < letters_; ++x)
        if (entry(alpha, x) == kUndefined) define(static_cast<std::int32_t>(alpha), x);
    }
    return compact(p);
  }

 private:
  std::int32_t& entry(std::size_t c, std::size_t x) { return table_[c * letters_ + x]; }
  bool live(std::size_t c) const { return parent_[c] == static_cast<std::int32_t>(c); }
  static std::size_t inv(std::size_t x) { return x ^ 1U; }

  std::int32_t define_row() {
    if (parent_.size() >= limit_)
      throw Error(ErrorKind::limit_exceeded,
                  "coset enumeration exceeded " + std::to_string(limit_) + " cosets");
    auto c = static_cast<std::int32_t>(parent_.size());
    parent_.push_back(c);
    table_.resize(table_.size() + letters_, kUndefined);
    return c;
  }

  void define(std::int32_t c, std::size_t x) {
    std::int32_t d = define_row();
    entry(c, x) = d;
    entry(d, inv(x)) = c;
  }

  std::int32_t rep(std::int32_t c) {
    std::int32_t r = c;
    while (parent_[r] != r) r = parent_[r];
    while (parent_[c] != r) {
      std::int32_t next = parent_[c];
      parent_[c] = r;
      c = next;
    }
    return r;
  }

  void merge(std::int32_t a, std::int32_t b, std::vector<std::int32_t>& queue) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent_[b] = a;
    queue.push_back(b);
  }

  void coincidence(std::int32_t a, std::int32_t b) {
    std::vector<std::int32_t> queue;
    merge(a, b, queue);
    for (std::size_t i = 0; i < queue.size(); ++i) {
      std::int32_t gamma = queue[i];
      for (std::size_t x = 0; x < letters_; ++x) {
        std::int32_t delta = entry(gamma, x);
        if (delta == kUndefined) continue;
        if (entry(delta, inv(x)) == gamma) entry(delta, inv(x)) = kUndefined;
        std::int32_t mu = rep(gamma);
        std::int32_t nu = rep(delta);
        if (entry(mu, x) != kUndefined) {
          merge(nu, entry(mu, x), queue);
        } else if (entry(nu, inv(x)) != kUndefined) {
          merge(mu, entry(nu, inv(x)), queue);
        } else {
          entry(mu, x) = nu;
          entry(nu, inv(x)) = mu;
        }
      }
    }
  }

  void scan_and_fill(std::int32_t alpha, const Word& w) {
    const std::size_t n = w.size();
    std::int32_t f = alpha;
    std::int32_t b = alpha;
    std::size_t i = 0;
    std::size_t j = n;  // one past the last unscanned letter
    while (true) {
      while (i < n && entry(f, w[i].code()) != kUndefined) f = entry(f, w[i++].code());
      if (i == n) {
        if (f != alpha) coincidence(f, alpha);
        return;
      }
      while (j > i && entry(b, inv(w[j - 1].code())) != kUndefined)
        b = entry(b, inv(w[--j].code()));
      if (j < i + 1) {
        coincidence(f, b);
        return;
      }
      if (j == i + 1) {
        entry(f, w[i].code()) = b;
        entry(b, inv(w[i].code())) = f;
        return;
      }
      define(f, w[i].code());
    }
  }

  CosetTable compact(const Presentation& p) {
    std::vector<std::int32_t> renumber(parent_.size(), kUndefined);
    std::size_t count = 0;
    for (std::size_t c = 0; c < parent_.size(); ++c)
      if (live(c)) renumber[c] = static_cast<std::int32_t>(count++);
    std::vector<Permutation> action(p.generator_count(), Permutation(count));
    for (std::size_t c = 0; c < parent_.size(); ++c) {
      if (!live(c)) continue;
      for (std::size_t g = 0; g < p.generator_count(); ++g) {
        std::int32_t d = entry(c, 2 * g);
        if (d == kUndefined)
          throw Error(ErrorKind::internal, "coset enumeration left an undefined entry");
        action[g][static_cast<std::size_t>(renumber[c])] =
            static_cast<Coset>(renumber[rep(d)]);
      }
    }
    return CosetTable(p, std::move(action)).standardized();
  }

  std::size_t letters_;
  std::size_t limit_;
  std::vector<std::int32_t> table_;
  std::vector<std::int32_t> parent_;
};

}  // namespace

CosetTable todd_coxeter(const Presentation& p, const std::vector<Word>& subgroup_generators,
                        std::size_t limit) {
  if (limit < 1) throw Error(ErrorKind::invalid_argument, "coset limit must be at least 1");
  for (const Word& w : subgroup_generators)
    if (w.max_generator_plus_one() > p.generator_count())
      throw Error(ErrorKind::unknown_generator, "subgroup generator outside the presentation");
  if (p.generator_count() == 0) return CosetTable(p, {});
  return Enumerator(p, limit).run(p, subgroup_generators);
}

// ----------------------------------------------------------- transversal

bool is_normal_subgroup(const CosetTable& t, const std::vector<Word>& transversal) {
  const std::size_t gens = t.origin().generator_count();
  for (Coset c = 0; c < t.index(); ++c)
    for (std::size_t g = 0; g < gens; ++g) {
      Letter x(g, 1);
      Word s = transversal[c] * Word{x} * transversal[t.act(c, x)].inverse();
      for (Coset i = 0; i < t.index(); ++i)
        if (t.act(i, s) != i) return false;
    }
  return true;
}

SubgroupRecord schreier_transversal(const CosetTable& t) {
  SubgroupRecord r;
  r.table = t;
  const std::size_t n = t.index();
  r.transversal.assign(n, Word{});
  r.tree_edge.assign(n, {0, Letter{}});
  std::vector<bool> seen(n, false);
  std::vector<Coset> order{0};
  seen[0] = true;
  const std::size_t letters = 2 * t.origin().generator_count();
  for (std::size_t head = 0; head < order.size(); ++head) {
    Coset c = order[head];
    for (std::size_t code = 0; code < letters; ++code) {
      Letter l = Letter::from_code(code);
      Coset d = t.act(c, l);
      if (seen[d]) continue;
      seen[d] = true;
      r.transversal[d] = r.transversal[c] * Word{l};
      r.tree_edge[d] = {c, l};
      order.push_back(d);
    }
  }
  r.is_normal = is_normal_subgroup(t, r.transversal);
  return r;
}

// ------------------------------------------------------------ low index

namespace {

class LowIndexSearch {
 public:
  LowIndexSearch(const Presentation& p, std::size_t max_index, std::size_t budget)
      : p_(p), letters_(2 * p.generator_count()), max_(max_index), budget_(budget) {
    starts_.resize(letters_);
    for (const Word& r : p.relators())
      for (std::size_t s = 0; s < r.size(); ++s) {
        std::vector<std::size_t> conj;
        for (std::size_t t = 0; t < r.size(); ++t) conj.push_back(r[(s + t) % r.size()].code());
        starts_[conj.front()].push_back(std::move(conj));
      }
  }

  std::vector<SubgroupRecord> run() {
    State s;
    s.table.assign(max_ * letters_, kUndefined);
    s.count = 1;
    search(s);
    std::sort(found_.begin(), found_.end(), [](const CosetTable& a, const CosetTable& b) {
      if (a.index() != b.index()) return a.index() < b.index();
      return a.flattened() < b.flattened();
    });
    std::vector<SubgroupRecord> out;
    out.reserve(found_.size());
    for (const CosetTable& t : found_) out.push_back(schreier_transversal(t));
    return out;
  }

 private:
  struct State {
    std::vector<std::int32_t> table;
    std::size_t count = 0;
    std::int32_t& at(std::size_t c, std::size_t x, std::size_t letters) {
      return table[c * letters + x];
    }
  };

  static std::size_t inv(std::size_t x) { return x ^ 1U; }

  bool scan(State& s, std::int32_t c, const std::vector<std::size_t>& w,
            std::vector<std::pair<std::int32_t, std::size_t>>& pending) {
    const std::size_t n = w.size();
    std::int32_t f = c;
    std::size_t i = 0;
    while (i < n && s.at(f, w[i], letters_) != kUndefined) f = s.at(f, w[i++], letters_);
    if (i == n) return f == c;
    std::int32_t b = c;
    std::size_t j = n;
    while (j > i && s.at(b, inv(w[j - 1]), letters_) != kUndefined)
      b = s.at(b, inv(w[--j]), letters_);
    if (j < i + 1) return f == b;
    if (j == i + 1) {
      s.at(f, w[i], letters_) = b;
      s.at(b, inv(w[i]), letters_) = f;
      pending.emplace_back(f, w[i]);
    }
    return true;
  }

  bool assign(State& s, std::int32_t c, std::size_t x, std::int32_t d) {
    s.at(c, x, letters_) = d;
    s.at(d, inv(x), letters_) = c;
    std::vector<std::pair<std::int32_t, std::size_t>> pending{{c, x}};
    while (!pending.empty()) {
      auto [from, letter] = pending.back();
      pending.pop_back();
      std::int32_t to = s.at(from, letter, letters_);
      for (const auto& w : starts_[letter])
        if (!scan(s, from, w, pending)) return false;
      for (const auto& w : starts_[inv(letter)])
        if (!scan(s, to, w, pending)) return false;
    }
    return true;
  }

  void search(const State& s) {
    if (++nodes_ > budget_)
      throw Error(ErrorKind::limit_exceeded, "low-index search exceeded its node budget");
    std::size_t slot = s.count * letters_;
    for (std::size_t k = 0; k < s.count * letters_; ++k)
      if (s.table[k] == kUndefined) {
        slot = k;
        break;
      }
    if (slot == s.count * letters_) {
      emit(s);
      return;
    }
    const auto c = static_cast<std::int32_t>(slot / letters_);
    const std::size_t x = slot % letters_;
    for (std::size_t d = 0; d < s.count; ++d) {
      if (s.table[d * letters_ + inv(x)] != kUndefined) continue;
      State next = s;
      if (assign(next, c, x, static_cast<std::int32_t>(d))) search(next);
    }
    if (s.count < max_) {
      State next = s;
      auto d = static_cast<std::int32_t>(next.count++);
      if (assign(next, c, x, d)) search(next);
    }
  }

  void emit(const State& s) {
    std::vector<Permutation> action(p_.generator_count(), Permutation(s.count));
    for (std::size_t c = 0; c < s.count; ++c)
      for (std::size_t g = 0; g < p_.generator_count(); ++g)
        action[g][c] = static_cast<Coset>(s.table[c * letters_ + 2 * g]);
    found_.emplace_back(p_, std::move(action));
  }

  const Presentation& p_;
  std::size_t letters_;
  std::size_t max_;
  std::size_t budget_;
  std::size_t nodes_ = 0;
  std::vector<std::vector<std::vector<std::size_t>>> starts_;
  std::vector<CosetTable> found_;
};

}  // namespace

std::vector<SubgroupRecord> low_index_subgroups(const Presentation& p, std::size_t max_index,
                                                std::size_t node_budget) {
  if (max_index < 1) throw Error(ErrorKind::invalid_argument, "max_index must be at least 1");
  if (p.generator_count() == 0) return {schreier_transversal(CosetTable(p, {}))};
  return LowIndexSearch(p, max_index, node_budget).run();
}

// ------------------------------------------------------- finite quotient

FiniteQuotient FiniteQuotient::from_permutations(const Presentation& p,
                                                 const std::vector<Permutation>& images,
                                                 std::size_t max_order) {
  if (images.size() != p.generator_count())
    throw Error(ErrorKind::invalid_argument, "one permutation per generator required");
  const std::size_t points = images.empty() ? 1 : images.front().size();
  std::vector<Permutation> letter_perm;
  for (const auto& img : images) {
    if (img.size() != points || !is_bijection(img))
      throw Error(ErrorKind::invalid_argument, "generator image is not a permutation");
    letter_perm.push_back(img);
    letter_perm.push_back(invert(img));
  }
  const std::size_t letters = letter_perm.size();

  Permutation identity(points);
  std::iota(identity.begin(), identity.end(), Coset{0});
  std::map<Permutation, std::uint32_t> index{{identity, 0}};
  std::vector<Permutation> elements{identity};
  FiniteQuotient q;
  q.words_.push_back(Word{});
  std::vector<std::vector<std::uint32_t>> right;  // right multiplication by letters
  for (std::size_t head = 0; head < elements.size(); ++head) {
    right.emplace_back(letters);
    for (std::size_t code = 0; code < letters; ++code) {
      Permutation prod(points);
      for (std::size_t c = 0; c < points; ++c) prod[c] = letter_perm[code][elements[head][c]];
      auto [it, inserted] = index.try_emplace(prod, static_cast<std::uint32_t>(elements.size()));
      if (inserted) {
        if (elements.size() >= max_order)
          throw Error(ErrorKind::cap_exceeded,
                      "quotient order exceeds cap " + std::to_string(max_order));
        elements.push_back(std::move(prod));
        q.words_.push_back(q.words_[head] * Word{Letter::from_code(code)});
      }
      right[head][code] = it->second;
    }
  }
  const std::size_t order = elements.size();
  q.generator_image_.resize(p.generator_count());
  for (std::size_t g = 0; g < p.generator_count(); ++g) q.generator_image_[g] = right[0][2 * g];

  q.mult_.assign(order, std::vector<std::uint32_t>(order));
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b) {
      std::uint32_t x = static_cast<std::uint32_t>(a);
      for (Letter l : q.words_[b]) x = right[x][l.code()];
      q.mult_[a][b] = x;
    }
  q.inverse_.assign(order, 0);
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b)
      if (q.mult_[a][b] == 0) q.inverse_[a] = static_cast<std::uint32_t>(b);

  for (const Word& r : p.relators())
    if (q.image(r) != 0)
      throw Error(ErrorKind::invalid_quotient, "a relator does not map to the identity");
  return q;
}

FiniteQuotient FiniteQuotient::trivial(const Presentation& p) {
  return from_permutations(p, std::vector<Permutation>(p.generator_count(), Permutation{0}));
}

std::uint32_t FiniteQuotient::image(const Word& w) const {
  std::uint32_t x = 0;
  for (Letter l : w) x = mult_[x][image(l)];
  return x;
}

CosetTable FiniteQuotient::regular_table(const Presentation& p) const {
  std::vector<Permutation> action(p.generator_count(), Permutation(order()));
  for (std::size_t g = 0; g < p.generator_count(); ++g)
    for (std::size_t e = 0; e < order(); ++e)
      action[g][e] = mult_[e][generator_image_[g]];
  return CosetTable(p, std::move(action));
}

CoreQuotient core_quotient(const SubgroupRecord& r, std::size_t max_order) {
  const Presentation& p = r.table.origin();
  FiniteQuotient q = FiniteQuotient::from_permutations(p, r.table.action(), max_order);
  SubgroupRecord core = schreier_transversal(q.regular_table(p));
  return {std::move(core), std::move(q)};
}

}  // namespace deflab
