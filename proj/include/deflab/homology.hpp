#ifndef DEFLAB_HOMOLOGY_HPP
#define DEFLAB_HOMOLOGY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "deflab/fox.hpp"
#include "deflab/linalg.hpp"
#include "deflab/presentation.hpp"

namespace deflab {

/// Coefficient field: Q when characteristic is 0, otherwise F_p.
struct Field {
  std::uint64_t characteristic = 0;

  static Field rationals() { return {}; }
  static Field prime(std::uint64_t p) { return {p}; }
  bool is_rational() const { return characteristic == 0; }
  std::string name() const;
};

std::size_t rank_over(const IntMatrix& m, Field f);

struct BettiVector {
  std::vector<long> b;
  /// Torsion invariant factors of H_i over Z (only when field is Q).
  std::vector<std::vector<BigInt>> torsion;
  Field field;
};

/// Homology of a chain complex over the chosen field; for Q the Z-torsion is
/// read off the Smith forms of the boundaries.
BettiVector betti_numbers(const ChainComplex& c, Field field = Field::rationals());

struct EulerData {
  std::size_t n = 0;
  std::vector<long> ranks;  ///< f_0..f_n
  long mu = 0;              ///< sum (-1)^{n-i} f_i
  long chi = 0;             ///< sum (-1)^i f_i
  std::optional<long> nu2;  ///< 1 - (f_1 - f_2) when n = 2 and f_0 = 1
};

EulerData partial_euler_mu(const std::vector<long>& ranks, std::size_t n);

struct MorseResult {
  bool holds = false;
  long alternating_betti = 0;  ///< sum (-1)^{n-i} b_i
  long mu = 0;
  long slack = 0;  ///< mu - alternating_betti; negative on violation
};

MorseResult morse_check(const BettiVector& b, const EulerData& e);

/// H_1 of the presented group: free rank and torsion invariant factors.
struct AbelianInvariants {
  std::size_t free_rank = 0;
  std::vector<BigInt> torsion;

  friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;
};

IntMatrix exponent_matrix(const Presentation& p);
AbelianInvariants abelianization(const Presentation& p);
/// dim H_1(G; F_p) = dim Hom(H_1(G), F_p).
std::size_t abelianization_rank_mod_p(const Presentation& p, std::uint64_t prime);

}  // namespace deflab

#endif  // DEFLAB_HOMOLOGY_HPP
