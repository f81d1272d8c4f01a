#ifndef DEFLAB_QUOTIENTS_HPP
#define DEFLAB_QUOTIENTS_HPP

#include <functional>
#include <string>
#include <vector>

#include "deflab/coset_table.hpp"

namespace deflab {

struct SmallGroup {
  std::string name;
  std::size_t order = 0;
  Presentation presentation;
};

/// One presentation for each isomorphism type of order <= max_order, which
/// must be at most 16.
std::vector<SmallGroup> small_groups(std::size_t max_order);

using NormalSubgroupVisitor = std::function<void(const SubgroupRecord&)>;

/// Streams the normal subgroups below without storing them, grouped by the
/// isomorphism type of G/N.
void for_each_normal_subgroup(const Presentation& p, std::size_t max_order,
                              const NormalSubgroupVisitor& visit, std::size_t budget = 200000000);

/// Every normal subgroup N with |G/N| <= max_order (at most 16), as kernels of
/// epimorphisms onto each small group taken up to automorphisms of the target.
/// Ordered by index and then by the flattened table, like
/// low_index_subgroups. Throws limit_exceeded past `budget` image tuples.
std::vector<SubgroupRecord> normal_subgroups(const Presentation& p, std::size_t max_order,
                                             std::size_t budget = 200000000);

}  // namespace deflab

#endif  // DEFLAB_QUOTIENTS_HPP
