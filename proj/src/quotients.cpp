#include "deflab/quotients.hpp"

#include <algorithm>

#include "deflab/error.hpp"

namespace deflab {

namespace {

struct Entry {
  const char* name;
  std::size_t order;
  const char* text;
};

// All groups of order <= 16 are solvable and small enough to list by hand.
constexpr Entry kGroups[] = {
    {"1", 1, "< a | a >"},
    {"C2", 2, "< a | a^2 >"},
    {"C3", 3, "< a | a^3 >"},
    {"C4", 4, "< a | a^4 >"},
    {"C2xC2", 4, "< a, b | a^2, b^2, [a,b] >"},
    {"C5", 5, "< a | a^5 >"},
    {"C6", 6, "< a | a^6 >"},
    {"S3", 6, "< a, b | a^2, b^3, a b a b >"},
    {"C7", 7, "< a | a^7 >"},
    {"C8", 8, "< a | a^8 >"},
    {"C4xC2", 8, "< a, b | a^4, b^2, [a,b] >"},
    {"C2^3", 8, "< a, b, c | a^2, b^2, c^2, [a,b], [a,c], [b,c] >"},
    {"D8", 8, "< a, b | a^4, b^2, a b a b >"},
    {"Q8", 8, "< a, b | a^4, a^2 b^-2, b^-1 a b a >"},
    {"C9", 9, "< a | a^9 >"},
    {"C3xC3", 9, "< a, b | a^3, b^3, [a,b] >"},
    {"C10", 10, "< a | a^10 >"},
    {"D10", 10, "< a, b | a^5, b^2, a b a b >"},
    {"C11", 11, "< a | a^11 >"},
    {"C12", 12, "< a | a^12 >"},
    {"C6xC2", 12, "< a, b | a^6, b^2, [a,b] >"},
    {"D12", 12, "< a, b | a^6, b^2, a b a b >"},
    {"A4", 12, "< a, b | a^2, b^3, a b a b a b >"},
    {"Dic12", 12, "< a, b | a^6, a^3 b^-2, b^-1 a b a >"},
    {"C13", 13, "< a | a^13 >"},
    {"C14", 14, "< a | a^14 >"},
    {"D14", 14, "< a, b | a^7, b^2, a b a b >"},
    {"C15", 15, "< a | a^15 >"},
    {"C16", 16, "< a | a^16 >"},
    {"C4xC4", 16, "< a, b | a^4, b^4, [a,b] >"},
    {"C8xC2", 16, "< a, b | a^8, b^2, [a,b] >"},
    {"C4xC2xC2", 16, "< a, b, c | a^4, b^2, c^2, [a,b], [a,c], [b,c] >"},
    {"C2^4", 16, "< a, b, c, d | a^2, b^2, c^2, d^2, [a,b], [a,c], [a,d], [b,c], [b,d], [c,d] >"},
    {"D16", 16, "< a, b | a^8, b^2, a b a b >"},
    {"SD16", 16, "< a, b | a^8, b^2, b a b a^-3 >"},
    {"Q16", 16, "< a, b | a^8, a^4 b^-2, b^-1 a b a >"},
    {"M16", 16, "< a, b | a^8, b^2, b a b a^-5 >"},
    {"C4:C4", 16, "< a, b | a^4, b^4, b^-1 a b a >"},
    {"C2xD8", 16, "< a, b, c | a^4, b^2, a b a b, c^2, [a,c], [b,c] >"},
    {"C2xQ8", 16, "< a, b, c | a^4, a^2 b^-2, b^-1 a b a, c^2, [a,c], [b,c] >"},
    {"(C4xC2):C2", 16, "< a, b, c | a^4, b^2, c^2, [a,b], [b,c], c a c a^-1 b >"},
    {"C4oD8", 16, "< a, b, c | a^4, b^2, c^2, [a,b], [a,c], b c b c a^-2 >"},
};

// The target group as a multiplication table plus its automorphisms, each an
// element permutation.
struct Target {
  FiniteQuotient group;
  std::vector<std::vector<std::uint32_t>> automorphisms;
};

std::uint32_t evaluate(const FiniteQuotient& q, const std::vector<std::uint32_t>& images,
                       const Word& w) {
  std::uint32_t e = 0;
  for (Letter l : w) {
    std::uint32_t x = images[l.generator()];
    e = q.multiply(e, l.is_inverse() ? q.inverse(x) : x);
  }
  return e;
}

bool generates(const FiniteQuotient& q, const std::vector<std::uint32_t>& images) {
  std::vector<char> seen(q.order(), 0);
  std::vector<std::uint32_t> stack{0};
  seen[0] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    std::uint32_t e = stack.back();
    stack.pop_back();
    for (std::uint32_t x : images) {
      std::uint32_t f = q.multiply(e, x);
      if (!seen[f]) {
        seen[f] = 1;
        ++count;
        stack.push_back(f);
      }
    }
  }
  return count == q.order();
}

bool is_hom(const Presentation& p, const FiniteQuotient& q, const std::vector<std::uint32_t>& images) {
  for (const Word& r : p.relators())
    if (evaluate(q, images, r) != 0) return false;
  return true;
}

Target make_target(const SmallGroup& s) {
  const Presentation& p = s.presentation;
  CosetTable regular = todd_coxeter(p, {});
  if (regular.index() != s.order)
    throw Error(ErrorKind::internal, "small group " + s.name + " has the wrong order");
  Target t{FiniteQuotient::from_permutations(p, regular.action(), s.order), {}};
  const FiniteQuotient& q = t.group;
  const std::size_t n = q.order(), k = p.generator_count();
  std::vector<std::uint32_t> images(k, 0);
  for (;;) {
    if (is_hom(p, q, images) && generates(q, images)) {
      std::vector<std::uint32_t> sigma(n);
      for (std::uint32_t e = 0; e < n; ++e) sigma[e] = evaluate(q, images, q.element_words()[e]);
      t.automorphisms.push_back(std::move(sigma));
    }
    std::size_t g = 0;
    while (g < k && ++images[g] == n) images[g++] = 0;
    if (g == k) break;
  }
  return t;
}

// Depth-first over generator images, keeping only tuples that are
// lexicographically least in their orbit under the automorphism group. Each
// kernel of an epimorphism then shows up exactly once.
class EpimorphismSearch {
 public:
  EpimorphismSearch(const Presentation& p, const Target& t, std::size_t& budget,
                    const NormalSubgroupVisitor& visit)
      : p_(p), t_(t), budget_(budget), visit_(visit), images_(p.generator_count(), 0) {}

  void run() {
    std::vector<std::uint32_t> all(t_.automorphisms.size());
    for (std::uint32_t i = 0; i < all.size(); ++i) all[i] = i;
    descend(0, all);
  }

 private:
  void descend(std::size_t level, const std::vector<std::uint32_t>& stabilizer) {
    const FiniteQuotient& q = t_.group;
    if (level == images_.size()) {
      if (budget_ == 0) throw Error(ErrorKind::limit_exceeded, "normal subgroup search exceeded its budget");
      --budget_;
      if (is_hom(p_, q, images_) && generates(q, images_)) emit();
      return;
    }
    for (std::uint32_t x = 0; x < q.order(); ++x) {
      bool least = true;
      std::vector<std::uint32_t> next;
      for (std::uint32_t a : stabilizer) {
        std::uint32_t y = t_.automorphisms[a][x];
        if (y < x) {
          least = false;
          break;
        }
        if (y == x) next.push_back(a);
      }
      if (!least) continue;
      images_[level] = x;
      descend(level + 1, next);
    }
  }

  void emit() {
    const FiniteQuotient& q = t_.group;
    std::vector<Permutation> action(p_.generator_count(), Permutation(q.order()));
    for (std::size_t g = 0; g < action.size(); ++g)
      for (std::uint32_t e = 0; e < q.order(); ++e) action[g][e] = q.multiply(e, images_[g]);
    visit_(schreier_transversal(CosetTable(p_, std::move(action)).standardized()));
  }

  const Presentation& p_;
  const Target& t_;
  std::size_t& budget_;
  const NormalSubgroupVisitor& visit_;
  std::vector<std::uint32_t> images_;
};

}  // namespace

std::vector<SmallGroup> small_groups(std::size_t max_order) {
  if (max_order > 16) throw Error(ErrorKind::invalid_argument, "small groups are listed up to order 16");
  std::vector<SmallGroup> out;
  for (const Entry& e : kGroups)
    if (e.order <= max_order) out.push_back({e.name, e.order, parse_presentation(e.text)});
  return out;
}

void for_each_normal_subgroup(const Presentation& p, std::size_t max_order,
                              const NormalSubgroupVisitor& visit, std::size_t budget) {
  for (const SmallGroup& s : small_groups(max_order)) {
    if (s.order == 1) {
      std::vector<Permutation> action(p.generator_count(), Permutation{0});
      visit(schreier_transversal(CosetTable(p, std::move(action))));
      continue;
    }
    if (p.generator_count() == 0) continue;
    Target t = make_target(s);
    EpimorphismSearch(p, t, budget, visit).run();
  }
}

std::vector<SubgroupRecord> normal_subgroups(const Presentation& p, std::size_t max_order,
                                             std::size_t budget) {
  std::vector<SubgroupRecord> out;
  for_each_normal_subgroup(p, max_order, [&](const SubgroupRecord& r) { out.push_back(r); }, budget);
  std::sort(out.begin(), out.end(), [](const SubgroupRecord& a, const SubgroupRecord& b) {
    if (a.index() != b.index()) return a.index() < b.index();
    return a.table.flattened() < b.table.flattened();
  });
  return out;
}

}  // namespace deflab
