#ifndef DEFLAB_FOX_HPP
#define DEFLAB_FOX_HPP

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "deflab/coset_table.hpp"
#include "deflab/matrix.hpp"
#include "deflab/presentation.hpp"

namespace deflab {

/// Finite Z-linear combination of freely reduced words. Words are not
/// normalized by any quotient until pushed.
class GroupRingElement {
 public:
  using Terms = std::map<Word, std::int64_t>;

  GroupRingElement() = default;
  explicit GroupRingElement(const Word& w, std::int64_t coefficient = 1);
  static GroupRingElement one() { return GroupRingElement(Word{}); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::int64_t coefficient(const Word& w) const;
  std::set<Word> support() const;
  /// Sum of coefficients.
  std::int64_t augmentation() const;

  GroupRingElement& add(const Word& w, std::int64_t coefficient);
  GroupRingElement& operator+=(const GroupRingElement& rhs);
  GroupRingElement& operator-=(const GroupRingElement& rhs);
  GroupRingElement operator-() const;
  GroupRingElement scaled(std::int64_t s) const;
  /// Exact division of every coefficient by d.
  GroupRingElement divided(std::int64_t d) const;

  friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b) { return a += b; }
  friend GroupRingElement operator-(GroupRingElement a, const GroupRingElement& b) { return a -= b; }
  /// Product in ZF: words concatenate and freely reduce.
  friend GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b);
  friend GroupRingElement operator*(const Word& w, const GroupRingElement& b) {
    return GroupRingElement(w) * b;
  }
  friend bool operator==(const GroupRingElement&, const GroupRingElement&) = default;

 private:
  Terms terms_;
};

/// Free derivative d(relator)/d(x_generator).
GroupRingElement fox_derivative(const Word& relator, std::size_t generator);

/// Coefficient vector of the image in Z[Q], indexed by quotient elements.
std::vector<std::int64_t> project(const GroupRingElement& x, const FiniteQuotient& q);

/// Product in Z[Q] of coefficient vectors.
std::vector<std::int64_t> multiply(const std::vector<std::int64_t>& a,
                                   const std::vector<std::int64_t>& b, const FiniteQuotient& q);

/// Matrix of v -> v * x on row vectors in the basis of group elements:
/// M[h][h g] += x_g. The map x -> M is a ring homomorphism Z[Q] -> M_q(Z).
SmallMatrix push_to_quotient(const GroupRingElement& x, const FiniteQuotient& q);

/// Free chain complex C_n -> ... -> C_0 of the cover with deck group Q.
/// boundaries[i-1] is d_i with shape (ranks[i-1] q) x (ranks[i] q), acting on
/// column vectors (the transpose of the row-vector module convention).
struct ChainComplex {
  std::vector<std::size_t> ranks;
  std::vector<IntMatrix> boundaries;
  std::size_t quotient_order = 1;

  std::size_t dimension() const { return ranks.size() - 1; }
  std::size_t module_dimension(std::size_t degree) const {
    return ranks.at(degree) * quotient_order;
  }
  /// Alternating sum of free ranks sum (-1)^i f_i.
  long euler_characteristic() const;
  /// Shapes consistent and every composite boundary is zero.
  bool is_valid() const;
};

/// The cellular chain complex (ZQ)^{e2} -> (ZQ)^{e1} -> ZQ of the cover of
/// the presentation complex. Throws ErrorKind::invalid_quotient when q does not
/// satisfy the relators and ErrorKind::composition_nonzero if d1 d2 != 0.
ChainComplex presentation_chain_complex(const Presentation& p, const FiniteQuotient& q);

/// Regards a complex over Z[G/N] as one over Z[H/N] for N <= H, regrouping the
/// basis of each Z[G/N] summand as [G:H] blocks indexed by the transversal.
ChainComplex restrict_to_subgroup(const ChainComplex& c, const FiniteQuotient& q,
                                  const SubgroupRecord& r);

/// Elements of q lying in the subgroup of r, in increasing order. Throws
/// ErrorKind::incompatible_subgroup unless the kernel of G -> q lies in H.
std::vector<std::uint32_t> subgroup_elements(const FiniteQuotient& q, const SubgroupRecord& r);

}  // namespace deflab

#endif  // DEFLAB_FOX_HPP
