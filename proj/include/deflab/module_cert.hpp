#ifndef DEFLAB_MODULE_CERT_HPP
#define DEFLAB_MODULE_CERT_HPP

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "deflab/coset_table.hpp"
#include "deflab/fox.hpp"
#include "deflab/homology.hpp"
#include "deflab/presentation.hpp"

namespace deflab {

/// Left ZG-module (ZG)^r / submodule generated by the relation tuples.
struct ModulePresentation {
  Presentation ambient;
  std::size_t free_rank = 0;
  std::vector<std::vector<GroupRingElement>> relations;

  /// Throws invalid_argument when a tuple has the wrong length.
  void validate() const;
};

struct KernelWitness {
  std::vector<GroupRingElement> rho;

  bool is_zero() const;
  /// Union of the supports of all components, as words.
  std::set<Word> supports() const;
  /// gcd of all coefficients; 0 for the zero witness.
  std::int64_t gcd() const;
};

/// Rank (field) of the H-coinvariants of M restricted to H:
/// r k - rank of the augmented relation matrix. Bounded by d_H(M).
std::size_t coinvariant_rank_lower_bound(const ModulePresentation& m, const SubgroupRecord& r,
                                         Field field = Field::rationals());

/// Minimal generator count of the coinvariant abelian group over Z.
std::size_t coinvariant_generator_count(const ModulePresentation& m, const SubgroupRecord& r);

/// Augmented relation matrix: rows (relation, coset), columns (component, coset).
IntMatrix coinvariant_relation_matrix(const ModulePresentation& m, const SubgroupRecord& r);

/// Divides every coefficient by the gcd. Throws zero_witness on rho = 0.
KernelWitness primitivize(const KernelWitness& w);

/// A normal subgroup of index <= max_index whose right cosets separate the
/// words of C, checked by evaluating each word on the coset table. Normal
/// subgroups are tried in the canonical low-index order. Throws
/// search_exhausted.
SubgroupRecord separating_subgroup(const std::set<Word>& support, const Presentation& p,
                                   std::size_t max_index);

/// True when the words land in pairwise distinct cosets of r.
bool separates(const SubgroupRecord& r, const std::set<Word>& support);

struct RankDropCertificate {
  KernelWitness witness;
  std::int64_t gcd = 0;
  KernelWitness primitive;
  SubgroupRecord subgroup;
  std::size_t index = 0;
  std::size_t separated_count = 0;
  /// Nonzero coordinates of the primitive witness in (Z E)^{e2}, with E the
  /// coset representatives: (relator, coset, coefficient).
  struct Coordinate {
    std::size_t relator;
    Coset coset;
    std::int64_t coefficient;
  };
  std::vector<Coordinate> coordinates;
  std::int64_t coordinate_gcd = 0;

  std::size_t schreier_generators = 0;  ///< k (e1 - 1) + 1
  std::size_t schreier_relators = 0;    ///< k e2
  std::size_t u = 0;                    ///< generator bound, = k e2 - 1
  long mu2_bound = 0;                   ///< 1 - e1' + u
  long deficiency_side = 0;             ///< 1 - (e1' - e2')
  std::size_t coinvariant_bound = 0;    ///< over Q, of Z H^{k e2} / rho'

  std::size_t verification_order = 0;
  std::string verification_level;

  /// u < e2', mu2_bound < deficiency_side, coinvariant_bound <= u.
  bool consistent() const;
};

/// Checks the witness pushes to ker d2 over q, primitivizes, separates its
/// support and records the resulting bounds. Throws witness_not_in_kernel,
/// zero_witness, search_exhausted or invalid_argument.
RankDropCertificate rank_drop_certificate(const Presentation& p, const KernelWitness& w,
                                          const FiniteQuotient& q, std::size_t max_index = 6);

/// d2 applied to rho after pushforward to q, one Z[Q] vector per generator.
std::vector<std::vector<std::int64_t>> pushed_boundary(const Presentation& p,
                                                       const KernelWitness& w,
                                                       const FiniteQuotient& q);

}  // namespace deflab

#endif  // DEFLAB_MODULE_CERT_HPP
