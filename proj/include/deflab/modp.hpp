#ifndef DEFLAB_MODP_HPP
#define DEFLAB_MODP_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "deflab/coset_table.hpp"
#include "deflab/presentation.hpp"

namespace deflab {

using MultiplicationTable = std::vector<std::vector<std::uint32_t>>;

struct CohomologyDims {
  std::uint64_t p = 2;
  std::array<std::size_t, 3> dims{};
  std::size_t group_order = 0;
};

/// H^0..H^2 with trivial F_p coefficients from inhomogeneous bar cochains in
/// degrees <= 3. Element 0 of the table must be the identity. Throws
/// cap_exceeded past max_order and invalid_argument on a bad table or prime.
CohomologyDims bar_cohomology_dims(const MultiplicationTable& table, std::uint64_t p,
                                   std::size_t max_order = 64);

MultiplicationTable cyclic_group_table(std::size_t n);
MultiplicationTable direct_product_table(const MultiplicationTable& a, const MultiplicationTable& b);

struct DualComplexReport {
  std::uint64_t p = 2;
  std::size_t index = 0;
  std::size_t rank_d1 = 0;  ///< mod-p rank of d1 (equal to that of its dual)
  std::size_t rank_d2 = 0;
  /// Homology of Hom(C_*, F_p) at positions 0, 1, 2; position 2 is the
  /// truncated complex, i.e. H^2(N) plus the dual of J.
  std::array<long, 3> dims{};
  long euler_residual = 0;
  /// dim H^1(N, F_p) from the Schreier presentation's abelianization mod p.
  std::size_t schreier_h1 = 0;
  /// Present when N is finite within the cap and the bar oracle applies.
  std::optional<CohomologyDims> bar;
  std::optional<long> jbar_dim;

  bool h1_agrees() const { return dims[1] == static_cast<long>(schreier_h1); }
};

/// Dualizes the presentation complex pushed to F_p[G/N] for a normal subgroup
/// N. Throws non_normal_subgroup, cap_exceeded.
DualComplexReport dual_complex_dims(const Presentation& p, const SubgroupRecord& normal,
                                    std::uint64_t prime, std::size_t max_order = 64);

}  // namespace deflab

#endif  // DEFLAB_MODP_HPP
