#ifndef DEFLAB_SCHREIER_HPP
#define DEFLAB_SCHREIER_HPP

#include <vector>

#include "deflab/coset_table.hpp"
#include "deflab/presentation.hpp"

namespace deflab {

/// Reidemeister-Schreier presentation of a finite-index subgroup.
struct SubgroupPresentation {
  Presentation presentation;
  Presentation parent;
  SubgroupRecord record;
  /// Subgroup generator i as t_c x t_{c.x}^{-1} in the parent generators.
  std::vector<Word> generator_map;
  /// (coset, parent generator) labelling each subgroup generator.
  std::vector<std::pair<Coset, std::size_t>> generator_label;
};

/// Schreier generators are the non-tree edges of the BFS spanning tree; one
/// rewritten relator per (coset, relator) pair, freely reduced only.
SubgroupPresentation rewrite_subgroup_presentation(const Presentation& p,
                                                   const SubgroupRecord& r);

}  // namespace deflab

#endif  // DEFLAB_SCHREIER_HPP
