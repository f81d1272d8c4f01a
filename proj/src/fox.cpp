#include "deflab/fox.hpp"

#include <algorithm>
#include <numeric>

#include "deflab/error.hpp"

namespace deflab {

// ------------------------------------------------------ group ring

GroupRingElement::GroupRingElement(const Word& w, std::int64_t coefficient) {
  add(w, coefficient);
}

std::int64_t GroupRingElement::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? 0 : it->second;
}

std::set<Word> GroupRingElement::support() const {
  std::set<Word> s;
  for (const auto& [w, a] : terms_) s.insert(w);
  return s;
}

std::int64_t GroupRingElement::augmentation() const {
  std::int64_t s = 0;
  for (const auto& [w, a] : terms_) s += a;
  return s;
}

GroupRingElement& GroupRingElement::add(const Word& w, std::int64_t coefficient) {
  if (coefficient == 0) return *this;
  auto [it, inserted] = terms_.try_emplace(w, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
  return *this;
}

GroupRingElement& GroupRingElement::operator+=(const GroupRingElement& rhs) {
  for (const auto& [w, a] : rhs.terms_) add(w, a);
  return *this;
}

GroupRingElement& GroupRingElement::operator-=(const GroupRingElement& rhs) {
  for (const auto& [w, a] : rhs.terms_) add(w, -a);
  return *this;
}

GroupRingElement GroupRingElement::operator-() const { return scaled(-1); }

GroupRingElement GroupRingElement::scaled(std::int64_t s) const {
  GroupRingElement out;
  if (s == 0) return out;
  for (const auto& [w, a] : terms_) out.terms_.emplace(w, a * s);
  return out;
}

GroupRingElement GroupRingElement::divided(std::int64_t d) const {
  if (d == 0) throw Error(ErrorKind::invalid_argument, "division by zero");
  GroupRingElement out;
  for (const auto& [w, a] : terms_) {
    if (a % d != 0) throw Error(ErrorKind::invalid_argument, "coefficient not divisible");
    out.terms_.emplace(w, a / d);
  }
  return out;
}

GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) {
  GroupRingElement out;
  for (const auto& [u, x] : a.terms_)
    for (const auto& [v, y] : b.terms_) out.add(u * v, x * y);
  return out;
}

// ---------------------------------------------------------------- Fox

GroupRingElement fox_derivative(const Word& relator, std::size_t generator) {
  GroupRingElement d;
  Word prefix;
  for (Letter l : relator) {
    if (l.generator() == generator) {
      if (l.is_inverse())
        d.add(prefix * Word{l}, -1);
      else
        d.add(prefix, 1);
    }
    prefix *= Word{l};
  }
  return d;
}

// ---------------------------------------------------------- pushforward

std::vector<std::int64_t> project(const GroupRingElement& x, const FiniteQuotient& q) {
  std::vector<std::int64_t> v(q.order(), 0);
  for (const auto& [w, a] : x.terms()) v[q.image(w)] += a;
  return v;
}

std::vector<std::int64_t> multiply(const std::vector<std::int64_t>& a,
                                   const std::vector<std::int64_t>& b, const FiniteQuotient& q) {
  std::vector<std::int64_t> out(q.order(), 0);
  for (std::size_t g = 0; g < a.size(); ++g) {
    if (a[g] == 0) continue;
    for (std::size_t h = 0; h < b.size(); ++h)
      if (b[h] != 0)
        out[q.multiply(static_cast<std::uint32_t>(g), static_cast<std::uint32_t>(h))] +=
            a[g] * b[h];
  }
  return out;
}

SmallMatrix push_to_quotient(const GroupRingElement& x, const FiniteQuotient& q) {
  const auto n = static_cast<Eigen::Index>(q.order());
  SmallMatrix m = SmallMatrix::Zero(n, n);
  std::vector<std::int64_t> v = project(x, q);
  for (std::uint32_t g = 0; g < v.size(); ++g) {
    if (v[g] == 0) continue;
    for (std::uint32_t h = 0; h < q.order(); ++h) m(h, q.multiply(h, g)) += v[g];
  }
  return m;
}

// -------------------------------------------------------- chain complex

long ChainComplex::euler_characteristic() const {
  long chi = 0;
  for (std::size_t i = 0; i < ranks.size(); ++i)
    chi += (i % 2 == 0 ? 1 : -1) * static_cast<long>(ranks[i]);
  return chi;
}

bool ChainComplex::is_valid() const {
  if (ranks.empty() || boundaries.size() + 1 != ranks.size()) return false;
  for (std::size_t i = 1; i < ranks.size(); ++i) {
    const IntMatrix& d = boundaries[i - 1];
    if (static_cast<std::size_t>(d.rows()) != module_dimension(i - 1) ||
        static_cast<std::size_t>(d.cols()) != module_dimension(i))
      return false;
  }
  for (std::size_t i = 1; i + 1 < ranks.size(); ++i)
    if (!is_zero(multiply(boundaries[i - 1], boundaries[i]))) return false;
  return true;
}

namespace {

void place_transposed(IntMatrix& target, Eigen::Index row_block, Eigen::Index col_block,
                      const SmallMatrix& block) {
  const Eigen::Index n = block.rows();
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      if (block(j, i) != 0) target(row_block * n + i, col_block * n + j) = static_cast<long>(block(j, i));
}

}  // namespace

ChainComplex presentation_chain_complex(const Presentation& p, const FiniteQuotient& q) {
  if (q.generator_count() != p.generator_count())
    throw Error(ErrorKind::invalid_quotient, "quotient built for a different generator count");
  for (const Word& r : p.relators())
    if (q.image(r) != 0)
      throw Error(ErrorKind::invalid_quotient, "a relator does not map to the identity");

  const auto n = static_cast<Eigen::Index>(q.order());
  const auto e1 = static_cast<Eigen::Index>(p.generator_count());
  const auto e2 = static_cast<Eigen::Index>(p.relator_count());

  ChainComplex c;
  c.ranks = {1, p.generator_count(), p.relator_count()};
  c.quotient_order = q.order();

  IntMatrix d1 = IntMatrix::Zero(n, e1 * n);
  for (Eigen::Index i = 0; i < e1; ++i) {
    GroupRingElement x = GroupRingElement(Word::generator(static_cast<std::size_t>(i))) -
                         GroupRingElement::one();
    place_transposed(d1, 0, i, push_to_quotient(x, q));
  }
  IntMatrix d2 = IntMatrix::Zero(e1 * n, e2 * n);
  for (Eigen::Index j = 0; j < e2; ++j)
    for (Eigen::Index i = 0; i < e1; ++i)
      place_transposed(d2, i, j,
                       push_to_quotient(fox_derivative(p.relators()[static_cast<std::size_t>(j)],
                                                       static_cast<std::size_t>(i)),
                                        q));
  c.boundaries = {std::move(d1), std::move(d2)};
  if (!is_zero(multiply(c.boundaries[0], c.boundaries[1])))
    throw Error(ErrorKind::composition_nonzero, "boundary composition d1 d2 is not zero");
  return c;
}

// ---------------------------------------------------------- restriction

std::vector<std::uint32_t> subgroup_elements(const FiniteQuotient& q, const SubgroupRecord& r) {
  const CosetTable& t = r.table;
  if (t.origin().generator_count() != q.generator_count())
    throw Error(ErrorKind::incompatible_subgroup, "subgroup and quotient use different generators");
  // The coset action must factor through q.
  std::vector<Permutation> sigma(q.order(), Permutation(t.index()));
  for (std::uint32_t g = 0; g < q.order(); ++g)
    for (Coset c = 0; c < t.index(); ++c) sigma[g][c] = t.act(c, q.element_words()[g]);
  for (std::uint32_t g = 0; g < q.order(); ++g)
    for (std::size_t x = 0; x < q.generator_count(); ++x) {
      Letter l(x, 1);
      const Permutation& target = sigma[q.multiply(g, q.image(l))];
      for (Coset c = 0; c < t.index(); ++c)
        if (target[c] != t.act(sigma[g][c], l))
          throw Error(ErrorKind::incompatible_subgroup,
                      "the quotient's kernel is not contained in the subgroup");
    }
  std::vector<std::uint32_t> h;
  for (std::uint32_t g = 0; g < q.order(); ++g)
    if (sigma[g][0] == 0) h.push_back(g);
  return h;
}

ChainComplex restrict_to_subgroup(const ChainComplex& c, const FiniteQuotient& q,
                                  const SubgroupRecord& r) {
  if (c.quotient_order != q.order())
    throw Error(ErrorKind::incompatible_subgroup, "complex is not over the given quotient");
  const std::vector<std::uint32_t> h = subgroup_elements(q, r);
  const std::size_t k = r.index();
  if (h.size() * k != q.order())
    throw Error(ErrorKind::incompatible_subgroup, "subgroup index does not divide the quotient");

  std::vector<std::size_t> h_pos(q.order(), 0);
  for (std::size_t i = 0; i < h.size(); ++i) h_pos[h[i]] = i;
  std::vector<std::uint32_t> rep(k);
  for (Coset cst = 0; cst < k; ++cst) rep[cst] = q.image(r.transversal[cst]);

  // g = h e_c  goes to position c |H/N| + index(h).
  std::vector<std::size_t> perm(q.order());
  for (std::uint32_t g = 0; g < q.order(); ++g) {
    Coset cst = r.table.act(0, q.element_words()[g]);
    std::uint32_t hh = q.multiply(g, q.inverse(rep[cst]));
    perm[g] = cst * h.size() + h_pos[hh];
  }

  ChainComplex out;
  out.quotient_order = h.size();
  for (std::size_t f : c.ranks) out.ranks.push_back(f * k);
  const std::size_t n = q.order();
  for (const IntMatrix& d : c.boundaries) {
    IntMatrix m(d.rows(), d.cols());
    for (Eigen::Index i = 0; i < d.rows(); ++i)
      for (Eigen::Index j = 0; j < d.cols(); ++j) {
        auto bi = static_cast<std::size_t>(i);
        auto bj = static_cast<std::size_t>(j);
        auto ri = static_cast<Eigen::Index>((bi / n) * n + perm[bi % n]);
        auto rj = static_cast<Eigen::Index>((bj / n) * n + perm[bj % n]);
        m(ri, rj) = d(i, j);
      }
    out.boundaries.push_back(std::move(m));
  }
  return out;
}

}  // namespace deflab
