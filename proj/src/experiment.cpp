#include "deflab/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>

#include "deflab/coset_table.hpp"
#include "deflab/error.hpp"
#include "deflab/schreier.hpp"

namespace deflab {

const char* to_string(Certificate c) {
  switch (c) {
    case Certificate::none: return "none";
    case Certificate::aspherical_asserted: return "aspherical-asserted";
    case Certificate::aspherical_validated_one_relator: return "aspherical-validated-one-relator";
  }
  return "?";
}

const char* to_string(IdentityStatus s) {
  switch (s) {
    case IdentityStatus::certified_holds: return "certified-holds";
    case IdentityStatus::consistent: return "consistent";
    case IdentityStatus::violated_upper: return "violated-upper";
    case IdentityStatus::inconclusive: return "inconclusive";
  }
  return "?";
}

bool one_relator_aspherical(const Presentation& p) {
  return p.relator_count() == 1 && root_and_power(p.relators()[0]).second == 1;
}

namespace {

long first_betti(const Presentation& p) {
  return static_cast<long>(abelianization(p).free_rank);
}

}  // namespace

DeficiencyInterval deficiency_interval(const Presentation& p, CertificateRequest request,
                                       int effort) {
  Presentation simplified = tietze_simplify(p, effort);
  DeficiencyInterval out;
  out.lower = std::max(p.deficiency(), simplified.deficiency());
  out.upper = first_betti(p);

  auto apply = [&](long chi, Certificate c) {
    const long delta = 1 - chi;
    if (out.lower > delta || out.upper < delta)
      throw Error(ErrorKind::invalid_certificate,
                  "asphericity contradicts the bounds [" + std::to_string(out.lower) + ", " +
                      std::to_string(out.upper) + "] with 1 - chi = " + std::to_string(delta));
    out.lower = out.upper = delta;
    out.certificate = c;
  };

  switch (request) {
    case CertificateRequest::none:
      break;
    case CertificateRequest::asserted:
      if (p.relator_count() == 1 && !one_relator_aspherical(p))
        throw Error(ErrorKind::invalid_certificate, "the single relator is a proper power");
      apply(p.euler_characteristic(), Certificate::aspherical_asserted);
      break;
    case CertificateRequest::automatic:
      if (one_relator_aspherical(p))
        apply(p.euler_characteristic(), Certificate::aspherical_validated_one_relator);
      else if (one_relator_aspherical(simplified))
        apply(simplified.euler_characteristic(), Certificate::aspherical_validated_one_relator);
      break;
  }
  if (out.lower > out.upper)
    throw Error(ErrorKind::internal, "deficiency lower bound exceeds b1");
  return out;
}

IdentityStatus identity_status(const DeficiencyInterval& g, const DeficiencyInterval& h,
                               std::size_t k) {
  const long kk = static_cast<long>(k);
  if (g.is_point() && h.is_point() && h.lower - 1 == kk * (g.lower - 1))
    return IdentityStatus::certified_holds;
  if (h.upper - 1 < kk * (g.lower - 1)) return IdentityStatus::violated_upper;
  for (long d = g.lower; d <= g.upper; ++d) {
    long target = kk * (d - 1) + 1;
    if (target >= h.lower && target <= h.upper) return IdentityStatus::consistent;
  }
  return IdentityStatus::inconclusive;
}

int StabilityReport::exit_code() const {
  for (const auto& r : rows)
    if (r.status == IdentityStatus::violated_upper) return 2;
  return 0;
}

namespace {

StabilityRow build_row(const Presentation& base, const SubgroupRecord& record,
                       const DeficiencyInterval& g, long chi, const StabilityOptions& opt) {
  const std::size_t k = record.index();
  SubgroupPresentation sp = rewrite_subgroup_presentation(base, record);
  const Presentation& h = sp.presentation;
  Presentation hs = tietze_simplify(h, opt.effort);

  StabilityRow row;
  row.index = k;
  row.normal = record.is_normal;
  row.schreier_generators = h.generator_count();
  row.schreier_relators = h.relator_count();
  row.simplified_generators = hs.generator_count();
  row.simplified_relators = hs.relator_count();
  row.chi = h.euler_characteristic();
  AbelianInvariants ab = abelianization(hs);
  row.b1 = static_cast<long>(ab.free_rank);
  row.torsion = ab.torsion;

  const long kk = static_cast<long>(k);
  row.interval.lower = std::max(h.deficiency(), hs.deficiency());
  row.interval.upper = row.b1;
  if (g.certificate != Certificate::none) {
    // Finite covers of an aspherical complex are aspherical.
    const long delta = 1 - kk * chi;
    row.interval = {delta, delta, g.certificate};
  } else if (opt.request == CertificateRequest::automatic) {
    if (one_relator_aspherical(hs)) {
      const long delta = 1 - hs.euler_characteristic();
      row.interval = {delta, delta, Certificate::aspherical_validated_one_relator};
    }
  }

  if (row.interval.lower - 1 < kk * (g.lower - 1))
    throw Error(ErrorKind::internal, "Schreier lower bound direction failed at index " +
                                         std::to_string(k));
  if (row.interval.lower > row.interval.upper)
    throw Error(ErrorKind::internal, "subgroup interval is empty at index " + std::to_string(k));
  if (row.chi != kk * chi)
    throw Error(ErrorKind::internal, "Euler characteristic is not multiplicative");

  row.status = identity_status(g, row.interval, k);
  if (row.status == IdentityStatus::inconclusive && row.interval.lower - 1 > kk * (g.upper - 1))
    row.note = "identity fails strictly: lower(H) - 1 > k (upper(G) - 1)";
  return row;
}

}  // namespace

StabilityReport stability_report(const Presentation& p, const StabilityOptions& opt,
                                 const std::string& group) {
  StabilityReport rep;
  rep.group = group;
  rep.presentation = p;
  rep.simplified = tietze_simplify(p, opt.effort);
  rep.base = deficiency_interval(p, opt.request, opt.effort);
  // Rows are rewritten from the certified complex when there is one, so that
  // Euler characteristics scale exactly; otherwise from the simplified one.
  const bool use_original = rep.base.certificate == Certificate::aspherical_asserted ||
                            (rep.base.certificate == Certificate::aspherical_validated_one_relator &&
                             one_relator_aspherical(p));
  const Presentation& rewrite_from = use_original ? p : rep.simplified;
  rep.chi = rewrite_from.euler_characteristic();

  std::vector<SubgroupRecord> subgroups;
  rep.searched_index = opt.max_index;
  for (;;) {
    try {
      subgroups = low_index_subgroups(rewrite_from, rep.searched_index, opt.node_budget);
      break;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::limit_exceeded || rep.searched_index <= 1) throw;
      --rep.searched_index;
      rep.partial = true;
    }
  }

  DeficiencyInterval g = rep.base;
  if (g.certificate == Certificate::none)
    g.lower = std::max(g.lower, rewrite_from.deficiency());

  rep.rows.resize(subgroups.size());
  std::vector<std::exception_ptr> errors(subgroups.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < subgroups.size(); i = next++) {
      try {
        rep.rows[i] = build_row(rewrite_from, subgroups[i], g, rep.chi, opt);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned threads = std::max(1U, std::min<unsigned>(opt.threads, static_cast<unsigned>(subgroups.size())));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  std::size_t ordinal = 0, last_index = 0;
  for (auto& row : rep.rows) {
    ordinal = row.index == last_index ? ordinal + 1 : 1;
    last_index = row.index;
    row.ordinal = ordinal;
  }

  auto any = [&](IdentityStatus s) {
    return std::any_of(rep.rows.begin(), rep.rows.end(), [s](const auto& r) { return r.status == s; });
  };
  if (any(IdentityStatus::violated_upper))
    rep.verdict = IdentityStatus::violated_upper;
  else if (std::all_of(rep.rows.begin(), rep.rows.end(),
                       [](const auto& r) { return r.status == IdentityStatus::certified_holds; }))
    rep.verdict = IdentityStatus::certified_holds;
  else if (any(IdentityStatus::inconclusive))
    rep.verdict = IdentityStatus::inconclusive;
  else
    rep.verdict = IdentityStatus::consistent;
  return rep;
}

NuBookkeeping nu_bookkeeping(const std::vector<long>& counts, std::size_t n, std::size_t k) {
  if (n < 1) throw Error(ErrorKind::invalid_argument, "n must be at least 1");
  NuBookkeeping out;
  out.cover_index = k;
  out.base = partial_euler_mu(counts, n);
  std::vector<long> scaled;
  for (long f : counts) scaled.push_back(f * static_cast<long>(k));
  out.cover = partial_euler_mu(scaled, n);
  const long sign = n % 2 == 0 ? 1 : -1;
  out.base_value = sign * out.base.chi;
  out.cover_value = sign * out.cover.chi;
  out.multiplicative = out.cover_value == static_cast<long>(k) * out.base_value;
  return out;
}

}  // namespace deflab
