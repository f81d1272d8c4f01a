#ifndef DEFLAB_COSET_TABLE_HPP
#define DEFLAB_COSET_TABLE_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "deflab/presentation.hpp"

namespace deflab {

using Coset = std::uint32_t;
using Permutation = std::vector<Coset>;

/// Right action of the generators on the cosets of a finite-index subgroup.
/// Cosets are numbered 0..index-1 internally (coset 0 is the subgroup) and in
/// BFS-canonical order; serialized forms are 1-based.
class CosetTable {
 public:
  CosetTable() = default;
  /// Takes ownership of per-generator permutations. Throws when they are not
  /// bijections or the relators of `origin` do not act trivially.
  CosetTable(Presentation origin, std::vector<Permutation> action);

  std::size_t index() const { return index_; }
  const Presentation& origin() const { return origin_; }
  const std::vector<Permutation>& action() const { return action_; }

  Coset act(Coset c, Letter l) const {
    return l.is_inverse() ? inverse_[l.generator()][c] : action_[l.generator()][c];
  }
  Coset act(Coset c, const Word& w) const {
    for (Letter l : w) c = act(c, l);
    return c;
  }

  /// Relabels cosets in BFS order from coset 0 (letters a, a^-1, b, ...).
  CosetTable standardized() const;
  bool is_standard() const;
  bool is_transitive() const;
  bool relators_hold() const;

  /// Row-major flattening (coset, letter) used for canonical ordering.
  std::vector<Coset> flattened() const;

  friend bool operator==(const CosetTable& a, const CosetTable& b) {
    return a.action_ == b.action_;
  }

 private:
  Presentation origin_;
  std::size_t index_ = 0;
  std::vector<Permutation> action_;
  std::vector<Permutation> inverse_;
};

/// A subgroup given by its coset table, with a Schreier transversal.
struct SubgroupRecord {
  CosetTable table;
  std::vector<Word> transversal;  ///< transversal[c] maps coset 0 to coset c
  /// For c > 0: the BFS tree edge (parent coset, letter) that discovered c.
  std::vector<std::pair<Coset, Letter>> tree_edge;
  bool is_normal = false;

  std::size_t index() const { return table.index(); }
};

/// HLT coset enumeration. Throws ErrorKind::limit_exceeded if more than
/// `limit` cosets get defined.
CosetTable todd_coxeter(const Presentation& p, const std::vector<Word>& subgroup_generators,
                        std::size_t limit = 100000);

/// Every subgroup of index <= max_index exactly once (not up to conjugacy),
/// ordered by index and then by the flattened table.
std::vector<SubgroupRecord> low_index_subgroups(const Presentation& p, std::size_t max_index,
                                                std::size_t node_budget = 50000000);

SubgroupRecord schreier_transversal(const CosetTable& t);

/// Finite quotient G/N realized as a permutation group; element 0 is the
/// identity and elements are numbered in BFS order over the letters.
class FiniteQuotient {
 public:
  FiniteQuotient() = default;

  /// Closure of the permutation images of the generators. Throws
  /// ErrorKind::cap_exceeded past `max_order` elements and
  /// ErrorKind::invalid_quotient if some relator is not mapped to 1.
  static FiniteQuotient from_permutations(const Presentation& p,
                                          const std::vector<Permutation>& images,
                                          std::size_t max_order = 5000);
  static FiniteQuotient trivial(const Presentation& p);

  std::size_t order() const { return mult_.size(); }
  std::size_t generator_count() const { return generator_image_.size(); }
  std::uint32_t multiply(std::uint32_t a, std::uint32_t b) const { return mult_[a][b]; }
  std::uint32_t inverse(std::uint32_t a) const { return inverse_[a]; }
  std::uint32_t image(Letter l) const {
    return l.is_inverse() ? inverse_[generator_image_[l.generator()]]
                          : generator_image_[l.generator()];
  }
  std::uint32_t image(const Word& w) const;
  /// Shortlex-least word representing each element.
  const std::vector<Word>& element_words() const { return words_; }
  const std::vector<std::vector<std::uint32_t>>& table() const { return mult_; }

  /// The regular right action, as a coset table for the kernel.
  CosetTable regular_table(const Presentation& p) const;

 private:
  std::vector<std::vector<std::uint32_t>> mult_;
  std::vector<std::uint32_t> inverse_;
  std::vector<std::uint32_t> generator_image_;
  std::vector<Word> words_;
};

struct CoreQuotient {
  SubgroupRecord core;      ///< the normal core, as a subgroup record
  FiniteQuotient quotient;  ///< G / core
};

/// Kernel of the coset permutation representation and the image group.
CoreQuotient core_quotient(const SubgroupRecord& r, std::size_t max_order = 5000);

/// True when the subgroup is normal (stabilizer of every coset agrees).
bool is_normal_subgroup(const CosetTable& t, const std::vector<Word>& transversal);

}  // namespace deflab

#endif  // DEFLAB_COSET_TABLE_HPP
