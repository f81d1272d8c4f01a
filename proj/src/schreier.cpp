#include "deflab/schreier.hpp"

#include <string>

#include "deflab/error.hpp"

namespace deflab {

SubgroupPresentation rewrite_subgroup_presentation(const Presentation& p,
                                                   const SubgroupRecord& r) {
  const CosetTable& t = r.table;
  const std::size_t k = t.index();
  const std::size_t gens = p.generator_count();
  if (t.origin().generator_count() != gens || r.transversal.size() != k ||
      r.tree_edge.size() != k)
    throw Error(ErrorKind::incomplete_table, "subgroup record does not match the presentation");

  // Edge (c, g) is a tree edge when it discovered its target in the BFS.
  std::vector<std::vector<bool>> tree(k, std::vector<bool>(gens, false));
  for (Coset d = 1; d < k; ++d) {
    auto [c, l] = r.tree_edge[d];
    if (l.is_inverse())
      tree[d][l.generator()] = true;  // c = d.x^{-1}, i.e. the edge d --x--> c
    else
      tree[c][l.generator()] = true;
  }

  SubgroupPresentation out;
  out.parent = p;
  out.record = r;
  std::vector<std::vector<std::size_t>> label(k, std::vector<std::size_t>(gens, 0));
  std::vector<std::string> names;
  for (Coset c = 0; c < k; ++c)
    for (std::size_t g = 0; g < gens; ++g) {
      if (tree[c][g]) continue;
      label[c][g] = names.size();
      names.push_back("g_" + std::to_string(c + 1) + "_" + p.generators()[g]);
      Letter x(g, 1);
      out.generator_map.push_back(r.transversal[c] * Word{x} *
                                  r.transversal[t.act(c, x)].inverse());
      out.generator_label.emplace_back(c, g);
    }

  std::vector<Word> relators;
  relators.reserve(k * p.relator_count());
  for (Coset c = 0; c < k; ++c)
    for (const Word& rel : p.relators()) {
      std::vector<Letter> letters;
      Coset at = c;
      for (Letter l : rel) {
        const std::size_t g = l.generator();
        if (!l.is_inverse()) {
          if (!tree[at][g]) letters.emplace_back(label[at][g], 1);
          at = t.act(at, l);
        } else {
          Coset from = t.act(at, l);
          if (!tree[from][g]) letters.emplace_back(label[from][g], -1);
          at = from;
        }
      }
      if (at != c) throw Error(ErrorKind::incomplete_table, "relator does not close in the table");
      Word w(letters);
      if (w.empty())
        throw Error(ErrorKind::internal, "rewritten relator collapsed to the empty word");
      relators.push_back(std::move(w));
    }
  out.presentation = Presentation(std::move(names), std::move(relators));
  return out;
}

}  // namespace deflab
