#ifndef DEFLAB_EXPERIMENT_HPP
#define DEFLAB_EXPERIMENT_HPP

#include <string>
#include <vector>

#include "deflab/homology.hpp"
#include "deflab/presentation.hpp"

namespace deflab {

enum class CertificateRequest { none, automatic, asserted };

enum class Certificate { none, aspherical_asserted, aspherical_validated_one_relator };
const char* to_string(Certificate c);

struct DeficiencyInterval {
  long lower = 0;
  long upper = 0;
  Certificate certificate = Certificate::none;

  bool is_point() const { return lower == upper; }
  friend bool operator==(const DeficiencyInterval&, const DeficiencyInterval&) = default;
};

/// One-relator presentation whose relator is not a proper power.
bool one_relator_aspherical(const Presentation& p);

/// lower: deficiency of the simplified presentation. upper: b1 (b2 >= 0), or
/// 1 - chi when an asphericity certificate applies. Throws invalid_certificate
/// when an asserted certificate is refuted (proper-power relator, or the
/// bounds contradict 1 - chi).
DeficiencyInterval deficiency_interval(const Presentation& p,
                                       CertificateRequest request = CertificateRequest::automatic,
                                       int effort = 32);

enum class IdentityStatus { certified_holds, consistent, violated_upper, inconclusive };
const char* to_string(IdentityStatus s);

/// Status of delta(H) - 1 = k (delta(G) - 1) given brackets for both sides.
IdentityStatus identity_status(const DeficiencyInterval& g, const DeficiencyInterval& h,
                               std::size_t k);

struct StabilityRow {
  std::size_t index = 0;
  std::size_t ordinal = 0;  ///< position among the subgroups of this index, from 1
  bool normal = false;
  std::size_t schreier_generators = 0;
  std::size_t schreier_relators = 0;
  std::size_t simplified_generators = 0;
  std::size_t simplified_relators = 0;
  long chi = 0;  ///< of the Schreier presentation; equals k chi(G)
  long b1 = 0;
  std::vector<BigInt> torsion;
  DeficiencyInterval interval;
  IdentityStatus status = IdentityStatus::inconclusive;
  std::string note;
};

struct StabilityOptions {
  std::size_t max_index = 3;
  CertificateRequest request = CertificateRequest::automatic;
  int effort = 32;
  unsigned threads = 1;
  std::size_t node_budget = 50000000;
};

struct StabilityReport {
  std::string group;
  Presentation presentation;
  Presentation simplified;
  DeficiencyInterval base;
  long chi = 0;  ///< of the presentation the rows are rewritten from
  std::vector<StabilityRow> rows;
  IdentityStatus verdict = IdentityStatus::consistent;
  std::size_t searched_index = 0;
  bool partial = false;

  /// 0 when every row is certified or consistent (inconclusive rows too), 2 on
  /// a violation row.
  int exit_code() const;
};

/// Rows for every subgroup of index <= max_index in canonical order. Output is
/// identical for any thread count. Throws internal if the Schreier lower
/// bound direction ever fails.
StabilityReport stability_report(const Presentation& p, const StabilityOptions& options,
                                 const std::string& group = "G");

struct NuBookkeeping {
  EulerData base;
  EulerData cover;
  long base_value = 0;   ///< (-1)^n chi of the base counts
  long cover_value = 0;  ///< same for k f_i
  std::size_t cover_index = 1;
  bool multiplicative = false;
};

NuBookkeeping nu_bookkeeping(const std::vector<long>& cell_counts, std::size_t n, std::size_t k);

}  // namespace deflab

#endif  // DEFLAB_EXPERIMENT_HPP
