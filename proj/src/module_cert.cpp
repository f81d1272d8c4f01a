#include "deflab/module_cert.hpp"

#include <numeric>

#include "deflab/error.hpp"

namespace deflab {

void ModulePresentation::validate() const {
  for (const auto& rel : relations)
    if (rel.size() != free_rank)
      throw Error(ErrorKind::invalid_argument, "relation tuple length differs from the free rank");
}

bool KernelWitness::is_zero() const {
  for (const auto& x : rho)
    if (!x.is_zero()) return false;
  return true;
}

std::set<Word> KernelWitness::supports() const {
  std::set<Word> c;
  for (const auto& x : rho)
    for (const auto& [w, a] : x.terms()) c.insert(w);
  return c;
}

std::int64_t KernelWitness::gcd() const {
  std::int64_t d = 0;
  for (const auto& x : rho)
    for (const auto& [w, a] : x.terms()) d = std::gcd(d, a);
  return d;
}

IntMatrix coinvariant_relation_matrix(const ModulePresentation& m, const SubgroupRecord& r) {
  m.validate();
  const std::size_t k = r.index();
  const auto rows = static_cast<Eigen::Index>(m.relations.size() * k);
  const auto cols = static_cast<Eigen::Index>(m.free_rank * k);
  IntMatrix a = IntMatrix::Zero(rows, cols);
  // g rho_j with g in coset c contributes sum a_x [c . x] in component i.
  for (std::size_t j = 0; j < m.relations.size(); ++j)
    for (Coset c = 0; c < k; ++c)
      for (std::size_t i = 0; i < m.free_rank; ++i)
        for (const auto& [w, coeff] : m.relations[j][i].terms()) {
          Coset d = r.table.act(c, w);
          auto& cell = a(static_cast<Eigen::Index>(j * k + c), static_cast<Eigen::Index>(i * k + d));
          cell += coeff;
        }
  return a;
}

std::size_t coinvariant_rank_lower_bound(const ModulePresentation& m, const SubgroupRecord& r,
                                         Field field) {
  IntMatrix a = coinvariant_relation_matrix(m, r);
  return m.free_rank * r.index() - rank_over(a, field);
}

std::size_t coinvariant_generator_count(const ModulePresentation& m, const SubgroupRecord& r) {
  IntMatrix a = coinvariant_relation_matrix(m, r);
  const std::size_t total = m.free_rank * r.index();
  if (a.rows() == 0 || a.cols() == 0) return total;
  auto snf = smith_normal_form(a, {.transforms = false, .verify = true});
  std::size_t units = 0;
  for (std::size_t i = 0; i < snf.rank; ++i)
    if (abs_of(snf.diagonal[i]) == 1) ++units;
  return total - units;
}

KernelWitness primitivize(const KernelWitness& w) {
  std::int64_t d = w.gcd();
  if (d == 0) throw Error(ErrorKind::zero_witness, "the witness is zero");
  KernelWitness out;
  for (const auto& x : w.rho) out.rho.push_back(x.divided(d));
  return out;
}

bool separates(const SubgroupRecord& r, const std::set<Word>& support) {
  std::set<Coset> seen;
  for (const Word& w : support)
    if (!seen.insert(r.table.act(0, w)).second) return false;
  return true;
}

SubgroupRecord separating_subgroup(const std::set<Word>& support, const Presentation& p,
                                   std::size_t max_index) {
  if (support.size() > max_index)
    throw Error(ErrorKind::search_exhausted,
                std::to_string(support.size()) + " elements cannot occupy " +
                    std::to_string(max_index) + " cosets");
  for (SubgroupRecord& r : low_index_subgroups(p, max_index)) {
    if (!r.is_normal || r.index() < support.size()) continue;
    if (separates(r, support)) return std::move(r);
  }
  throw Error(ErrorKind::search_exhausted,
              "no normal subgroup of index <= " + std::to_string(max_index) +
                  " separates the support");
}

std::vector<std::vector<std::int64_t>> pushed_boundary(const Presentation& p,
                                                       const KernelWitness& w,
                                                       const FiniteQuotient& q) {
  if (w.rho.size() != p.relator_count())
    throw Error(ErrorKind::invalid_argument, "witness needs one component per relator");
  std::vector<std::vector<std::int64_t>> out;
  for (std::size_t i = 0; i < p.generator_count(); ++i) {
    std::vector<std::int64_t> acc(q.order(), 0);
    for (std::size_t j = 0; j < p.relator_count(); ++j) {
      if (w.rho[j].is_zero()) continue;
      auto term = multiply(project(w.rho[j], q), project(fox_derivative(p.relators()[j], i), q), q);
      for (std::size_t g = 0; g < acc.size(); ++g) acc[g] += term[g];
    }
    out.push_back(std::move(acc));
  }
  return out;
}

bool RankDropCertificate::consistent() const {
  return u < schreier_relators && mu2_bound < deficiency_side && coinvariant_bound <= u &&
         coordinate_gcd == 1 && separated_count == primitive.supports().size();
}

RankDropCertificate rank_drop_certificate(const Presentation& p, const KernelWitness& w,
                                          const FiniteQuotient& q, std::size_t max_index) {
  if (w.is_zero()) throw Error(ErrorKind::zero_witness, "the witness is zero");
  for (const auto& v : pushed_boundary(p, w, q))
    for (std::int64_t x : v)
      if (x != 0)
        throw Error(ErrorKind::witness_not_in_kernel,
                    "d2(rho) is nonzero in the quotient of order " + std::to_string(q.order()));

  RankDropCertificate cert;
  cert.witness = w;
  cert.gcd = w.gcd();
  cert.primitive = primitivize(w);
  const std::set<Word> support = cert.primitive.supports();
  cert.subgroup = separating_subgroup(support, p, max_index);
  cert.index = cert.subgroup.index();
  {
    std::set<Coset> images;
    for (const Word& g : support) images.insert(cert.subgroup.table.act(0, g));
    cert.separated_count = images.size();
  }

  const std::size_t k = cert.index;
  for (std::size_t j = 0; j < cert.primitive.rho.size(); ++j)
    for (const auto& [g, a] : cert.primitive.rho[j].terms()) {
      cert.coordinates.push_back({j, cert.subgroup.table.act(0, g), a});
      cert.coordinate_gcd = std::gcd(cert.coordinate_gcd, a);
    }

  const std::size_t e1 = p.generator_count();
  const std::size_t e2 = p.relator_count();
  cert.schreier_generators = k * (e1 - 1) + 1;
  cert.schreier_relators = k * e2;
  cert.u = cert.schreier_relators - 1;
  cert.mu2_bound = 1 - static_cast<long>(cert.schreier_generators) + static_cast<long>(cert.u);
  cert.deficiency_side = 1 - (static_cast<long>(cert.schreier_generators) -
                              static_cast<long>(cert.schreier_relators));

  ModulePresentation m{p, e2, {cert.primitive.rho}};
  cert.coinvariant_bound = coinvariant_rank_lower_bound(m, cert.subgroup);

  cert.verification_order = q.order();
  cert.verification_level = "d2(rho) = 0 checked in Z[Q] for a quotient of order " +
                            std::to_string(q.order()) + " (necessary condition only)";
  return cert;
}

}  // namespace deflab
