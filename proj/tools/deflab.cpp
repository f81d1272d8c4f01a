// deflab command line: thin wrappers that print JSON on stdout.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "deflab/error.hpp"
#include "deflab/experiment.hpp"
#include "deflab/fox.hpp"
#include "deflab/homology.hpp"
#include "deflab/modp.hpp"
#include "deflab/module_cert.hpp"
#include "deflab/quotients.hpp"
#include "deflab/report.hpp"
#include "deflab/schreier.hpp"

using namespace deflab;

namespace {

struct IndexSpec {
  std::size_t index = 1;
  std::size_t ordinal = 1;
};

IndexSpec parse_index_spec(const std::string& s) {
  IndexSpec spec;
  try {
    std::size_t used = 0;
    auto colon = s.find(':');
    spec.index = std::stoul(s.substr(0, colon), &used);
    if (used != s.substr(0, colon).size()) throw std::invalid_argument(s);
    if (colon != std::string::npos) {
      std::string rest = s.substr(colon + 1);
      spec.ordinal = std::stoul(rest, &used);
      if (used != rest.size()) throw std::invalid_argument(s);
    }
  } catch (const std::logic_error&) {
    throw Error(ErrorKind::invalid_argument, "index spec must look like K or K:N, got '" + s + "'");
  }
  if (spec.index == 0 || spec.ordinal == 0)
    throw Error(ErrorKind::invalid_argument, "index spec entries start at 1");
  return spec;
}

SubgroupRecord select_subgroup(const Presentation& p, const IndexSpec& spec, bool normal_only) {
  std::size_t seen = 0;
  // normal subgroups of small index come from quotient enumeration, in the
  // same relative order low-index search would give
  auto candidates = normal_only && spec.index <= 16
                        ? normal_subgroups(p, spec.index)
                        : low_index_subgroups(p, spec.index);
  for (SubgroupRecord& r : candidates) {
    if (r.index() != spec.index || (normal_only && !r.is_normal)) continue;
    if (++seen == spec.ordinal) return std::move(r);
  }
  throw Error(ErrorKind::invalid_argument,
              "only " + std::to_string(seen) + (normal_only ? " normal" : "") +
                  " subgroups of index " + std::to_string(spec.index));
}

FiniteQuotient select_quotient(const Presentation& p, const std::string& text) {
  IndexSpec spec = parse_index_spec(text);
  if (spec.index == 1) return FiniteQuotient::trivial(p);
  return core_quotient(select_subgroup(p, spec, false)).quotient;
}

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

CertificateRequest request_from(bool aspherical, bool no_certificate) {
  if (aspherical) return CertificateRequest::asserted;
  return no_certificate ? CertificateRequest::none : CertificateRequest::automatic;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"deflab: deficiency intervals, subgroup covers and homology of finite presentations"};
  app.set_version_flag("--version", tool_version());
  app.require_subcommand(1);

  std::string file;
  auto add_file = [&](CLI::App* sub) {
    sub->add_option("presentation", file, "presentation file")->required()->check(CLI::ExistingFile);
  };
  int effort = 32;

  auto* parse = app.add_subcommand("parse", "parse and simplify a presentation");
  add_file(parse);
  parse->add_option("--effort", effort, "Tietze effort");

  std::size_t max_index = 3;
  auto* subgroups = app.add_subcommand("subgroups", "all subgroups of index <= N");
  add_file(subgroups);
  subgroups->add_option("--max-index", max_index)->required();

  std::string index_spec;
  auto* schreier = app.add_subcommand("schreier", "Reidemeister-Schreier presentation");
  add_file(schreier);
  schreier->add_option("--index-spec", index_spec, "K or K:N, the N-th subgroup of index K")->required();

  std::string quotient_spec = "1";
  std::uint64_t prime = 0;
  auto* homology = app.add_subcommand("homology", "homology of the cover for the core of a subgroup");
  add_file(homology);
  homology->add_option("--quotient", quotient_spec, "K or K:N; 1 is the trivial quotient");
  homology->add_option("-p,--prime", prime, "coefficients in F_p instead of Q");

  bool aspherical = false, no_certificate = false;
  auto* deficiency = app.add_subcommand("deficiency", "deficiency interval");
  add_file(deficiency);
  deficiency->add_flag("--aspherical", aspherical, "assert the presentation complex is aspherical");
  deficiency->add_flag("--no-certificate", no_certificate, "do not grant one-relator certificates");
  deficiency->add_option("--effort", effort, "Tietze effort");

  std::string out_path, csv_path, group_name;
  unsigned threads = 1;
  auto* stability = app.add_subcommand("stability", "stabilization report over low-index subgroups");
  add_file(stability);
  stability->add_option("--max-index", max_index)->required();
  stability->add_flag("--aspherical", aspherical, "assert the presentation complex is aspherical");
  stability->add_flag("--no-certificate", no_certificate, "do not grant one-relator certificates");
  stability->add_option("--out", out_path, "JSON report path (stdout when omitted)");
  stability->add_option("--csv", csv_path, "CSV row dump path");
  stability->add_option("--group", group_name, "group id for the report");
  stability->add_option("--threads", threads, "worker threads");
  stability->add_option("--effort", effort, "Tietze effort");

  std::string witness_path;
  std::size_t verify_index = 0, separation_budget = 0;
  auto* cert = app.add_subcommand("cert", "rank-drop certificate for a kernel witness");
  add_file(cert);
  cert->add_option("--witness", witness_path, "witness JSON")->required()->check(CLI::ExistingFile);
  cert->add_option("--quotient", quotient_spec, "verification quotient K or K:N");
  cert->add_option("--max-index", separation_budget, "separation search budget");
  cert->add_option("--verify-index", verify_index,
                   "verify over the largest core quotient of a subgroup of index <= K");

  std::string normal_spec;
  std::size_t cap = 64;
  auto* modp = app.add_subcommand("modp", "dualized complex over F_p[G/N]");
  add_file(modp);
  modp->add_option("-p,--prime", prime)->required();
  modp->add_option("--normal-index", normal_spec, "K or K:N, the N-th normal subgroup of index K")->required();
  modp->add_option("--cap", cap, "quotient order cap");

  std::vector<long> counts;
  std::size_t nu_n = 2, nu_k = 1;
  auto* nu = app.add_subcommand("nu", "Euler characteristic bookkeeping for cell counts");
  nu->add_option("--counts", counts, "f_0 ... f_n")->required()->delimiter(',');
  nu->add_option("-n", nu_n, "dimension");
  nu->add_option("-k", nu_k, "cover index");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // help prints and exits 0; every other usage error is operational
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*nu) {
      emit(to_json(nu_bookkeeping(counts, nu_n, nu_k)));
      return 0;
    }
    const Presentation p = read_presentation_file(file);

    if (*parse) {
      Json j = to_json(p);
      j["simplified"] = to_json(tietze_simplify(p, effort));
      j["abelianization"] = {{"free_rank", abelianization(p).free_rank}};
      Json t = Json::array();
      for (const auto& x : abelianization(p).torsion) t.push_back(x.get_str());
      j["abelianization"]["torsion"] = t;
      emit(j);
    } else if (*subgroups) {
      Json rows = Json::array();
      for (const auto& r : low_index_subgroups(p, max_index)) rows.push_back(to_json(r));
      emit(Json{{"presentation", to_json(p)}, {"max_index", max_index}, {"subgroups", rows}});
    } else if (*schreier) {
      SubgroupRecord r = select_subgroup(p, parse_index_spec(index_spec), false);
      emit(to_json(rewrite_subgroup_presentation(p, r)));
    } else if (*homology) {
      FiniteQuotient q = select_quotient(p, quotient_spec);
      ChainComplex c = presentation_chain_complex(p, q);
      Field f = prime == 0 ? Field::rationals() : Field::prime(prime);
      BettiVector b = betti_numbers(c, f);
      std::vector<long> dims;
      for (std::size_t i = 0; i <= c.dimension(); ++i) dims.push_back(static_cast<long>(c.module_dimension(i)));
      Json morse = Json::array();
      for (std::size_t n = 0; n <= c.dimension(); ++n) {
        MorseResult m = morse_check(b, partial_euler_mu(dims, n));
        morse.push_back({{"n", n}, {"mu", m.mu}, {"alternating_betti", m.alternating_betti},
                         {"slack", m.slack}, {"holds", m.holds}});
      }
      Json j = to_json(b);
      j["quotient_order"] = q.order();
      j["chain_dims"] = dims;
      j["morse"] = morse;
      emit(j);
    } else if (*deficiency) {
      Json j = to_json(deficiency_interval(p, request_from(aspherical, no_certificate), effort));
      j["presentation"] = to_json(p);
      j["tool_version"] = tool_version();
      emit(j);
    } else if (*stability) {
      StabilityOptions opt;
      opt.max_index = max_index;
      opt.request = request_from(aspherical, no_certificate);
      opt.effort = effort;
      opt.threads = threads;
      if (group_name.empty()) {
        group_name = file.substr(file.find_last_of('/') + 1);
        group_name = group_name.substr(0, group_name.find('.'));
      }
      StabilityReport rep = stability_report(p, opt, group_name);
      std::string text = to_json(rep).dump(2) + "\n";
      if (out_path.empty()) {
        std::cout << text;
      } else {
        std::ofstream(out_path) << text;
        std::cerr << rep.rows.size() << " rows, verdict " << to_string(rep.verdict) << '\n';
      }
      if (!csv_path.empty()) std::ofstream(csv_path) << stability_csv(rep);
      return rep.exit_code();
    } else if (*cert) {
      std::ifstream in(witness_path);
      Json wj = Json::parse(in);
      KernelWitness w = witness_from_json(wj, p);
      if (separation_budget == 0) separation_budget = wj.value("max_index", std::size_t{6});
      if (verify_index == 0) verify_index = wj.value("verify_index", std::size_t{0});
      if (cert->count("--quotient") == 0 && wj.contains("quotient"))
        quotient_spec = wj["quotient"].get<std::string>();

      FiniteQuotient q = FiniteQuotient::trivial(p);
      if (verify_index > 0) {
        for (const auto& r : low_index_subgroups(p, verify_index)) {
          FiniteQuotient cand = core_quotient(r).quotient;
          if (cand.order() > q.order()) q = std::move(cand);
        }
      } else {
        q = select_quotient(p, quotient_spec);
      }
      RankDropCertificate c = rank_drop_certificate(p, w, q, separation_budget);
      emit(to_json(c, p));
      return c.consistent() ? 0 : 2;
    } else if (*modp) {
      SubgroupRecord r = select_subgroup(p, parse_index_spec(normal_spec), true);
      emit(to_json(dual_complex_dims(p, r, prime, cap)));
    }
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
