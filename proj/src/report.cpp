#include "deflab/report.hpp"

#include <fstream>
#include <sstream>

#include "deflab/error.hpp"

namespace deflab {

const char* tool_version() { return "deflab " DEFLAB_VERSION; }

namespace {

Json big_list(const std::vector<BigInt>& v) {
  Json a = Json::array();
  for (const BigInt& x : v) a.push_back(x.get_str());
  return a;
}

std::string torsion_string(const std::vector<BigInt>& v) {
  std::string s;
  for (const BigInt& x : v) s += (s.empty() ? "" : " ") + x.get_str();
  return s;
}

}  // namespace

Json to_json(const Presentation& p) {
  Json rel = Json::array();
  for (const Word& r : p.relators()) rel.push_back(p.word_to_string(r));
  return Json{{"text", p.to_string()},
              {"generators", p.generators()},
              {"relators", rel},
              {"deficiency", p.deficiency()},
              {"euler_characteristic", p.euler_characteristic()}};
}

Json to_json(const CosetTable& t) {
  Json gens = Json::object();
  for (std::size_t g = 0; g < t.action().size(); ++g) {
    Json perm = Json::array();
    for (Coset c : t.action()[g]) perm.push_back(c + 1);
    gens[t.origin().generators()[g]] = perm;
  }
  return Json{{"index", t.index()}, {"action", gens}};
}

Json to_json(const SubgroupRecord& r) {
  const Presentation& p = r.table.origin();
  Json tr = Json::array();
  for (const Word& w : r.transversal) tr.push_back(p.word_to_string(w));
  Json j = to_json(r.table);
  j["normal"] = r.is_normal;
  j["transversal"] = tr;
  return j;
}

Json to_json(const SubgroupPresentation& s) {
  Json map = Json::array();
  for (std::size_t i = 0; i < s.generator_map.size(); ++i)
    map.push_back({{"generator", s.presentation.generators()[i]},
                   {"word", s.parent.word_to_string(s.generator_map[i])}});
  return Json{{"index", s.record.index()},
              {"presentation", to_json(s.presentation)},
              {"generator_map", map}};
}

Json to_json(const GroupRingElement& x, const Presentation& p) {
  Json j = Json::object();
  for (const auto& [w, a] : x.terms()) j[p.word_to_string(w)] = a;
  return j;
}

Json to_json(const DeficiencyInterval& d) {
  return Json{{"lower", d.lower}, {"upper", d.upper}, {"certificate", to_string(d.certificate)}};
}

Json to_json(const StabilityRow& r) {
  Json j{{"index", r.index},
         {"ordinal", r.ordinal},
         {"normal", r.normal},
         {"schreier_generators", r.schreier_generators},
         {"schreier_relators", r.schreier_relators},
         {"simplified_generators", r.simplified_generators},
         {"simplified_relators", r.simplified_relators},
         {"euler_characteristic", r.chi},
         {"b1", r.b1},
         {"torsion", big_list(r.torsion)},
         {"interval", to_json(r.interval)},
         {"identity_status", to_string(r.status)}};
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

Json to_json(const StabilityReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows) rows.push_back(to_json(row));
  return Json{{"group", r.group},
              {"presentation", to_json(r.presentation)},
              {"simplified", to_json(r.simplified)},
              {"interval", to_json(r.base)},
              {"euler_characteristic", r.chi},
              {"max_index", r.searched_index},
              {"partial", r.partial},
              {"rows", rows},
              {"verdict", to_string(r.verdict)},
              {"tool_version", tool_version()}};
}

std::string stability_csv(const StabilityReport& r) {
  std::ostringstream out;
  out << "group,index,ordinal,normal,schreier_generators,schreier_relators,simplified_generators,"
         "simplified_relators,euler_characteristic,b1,torsion,lower,upper,certificate,identity_status\n";
  for (const auto& row : r.rows)
    out << r.group << ',' << row.index << ',' << row.ordinal << ',' << (row.normal ? 1 : 0) << ','
        << row.schreier_generators << ',' << row.schreier_relators << ','
        << row.simplified_generators << ',' << row.simplified_relators << ',' << row.chi << ','
        << row.b1 << ',' << torsion_string(row.torsion) << ',' << row.interval.lower << ','
        << row.interval.upper << ',' << to_string(row.interval.certificate) << ','
        << to_string(row.status) << '\n';
  return out.str();
}

Json to_json(const RankDropCertificate& c, const Presentation& p) {
  Json w = Json::array(), pw = Json::array(), coords = Json::array();
  for (const auto& x : c.witness.rho) w.push_back(to_json(x, p));
  for (const auto& x : c.primitive.rho) pw.push_back(to_json(x, p));
  for (const auto& e : c.coordinates)
    coords.push_back({{"relator", e.relator + 1}, {"coset", e.coset + 1}, {"coefficient", e.coefficient}});
  return Json{{"witness", w},
              {"gcd", c.gcd},
              {"primitive_witness", pw},
              {"subgroup", to_json(c.subgroup)},
              {"index", c.index},
              {"separated_support", c.separated_count},
              {"coordinates", coords},
              {"coordinate_gcd", c.coordinate_gcd},
              {"schreier_generators", c.schreier_generators},
              {"schreier_relators", c.schreier_relators},
              {"u", c.u},
              {"coinvariant_bound", c.coinvariant_bound},
              {"mu2_bound", c.mu2_bound},
              {"one_minus_deficiency", c.deficiency_side},
              {"consistent", c.consistent()},
              {"verification_quotient_order", c.verification_order},
              {"verification_level", c.verification_level},
              {"tool_version", tool_version()}};
}

Json to_json(const CohomologyDims& d) {
  return Json{{"p", d.p}, {"group_order", d.group_order}, {"dims", d.dims}};
}

Json to_json(const DualComplexReport& d) {
  Json j{{"p", d.p},
         {"index", d.index},
         {"rank_d1", d.rank_d1},
         {"rank_d2", d.rank_d2},
         {"dims", d.dims},
         {"position_2_label", "h2 of the truncated complex"},
         {"euler_residual", d.euler_residual},
         {"schreier_h1", d.schreier_h1},
         {"h1_agrees", d.h1_agrees()}};
  j["bar"] = d.bar ? to_json(*d.bar) : Json(nullptr);
  j["jbar_dim"] = d.jbar_dim ? Json(*d.jbar_dim) : Json(nullptr);
  j["tool_version"] = tool_version();
  return j;
}

Json to_json(const BettiVector& b) {
  Json t = Json::array();
  for (const auto& v : b.torsion) t.push_back(big_list(v));
  return Json{{"field", b.field.name()}, {"betti", b.b}, {"torsion", t}};
}

Json to_json(const NuBookkeeping& n) {
  return Json{{"n", n.base.n},
              {"counts", n.base.ranks},
              {"cover_index", n.cover_index},
              {"cover_counts", n.cover.ranks},
              {"value", n.base_value},
              {"cover_value", n.cover_value},
              {"mu", n.base.mu},
              {"multiplicative", n.multiplicative}};
}

Presentation read_presentation_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::invalid_argument, "cannot open " + path);
  std::string line, text;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first != std::string::npos && line[first] == '#') continue;
    text += line + '\n';
  }
  return parse_presentation(text);
}

KernelWitness witness_from_json(const Json& j, const Presentation& p) {
  if (!j.contains("rho") || !j["rho"].is_array())
    throw Error(ErrorKind::invalid_argument, "witness needs a \"rho\" array");
  KernelWitness w;
  for (const auto& comp : j["rho"]) {
    if (!comp.is_object())
      throw Error(ErrorKind::invalid_argument, "each rho component maps words to coefficients");
    GroupRingElement x;
    for (const auto& [word, coeff] : comp.items()) {
      if (!coeff.is_number_integer())
        throw Error(ErrorKind::invalid_argument, "coefficient of " + word + " is not an integer");
      x.add(parse_word(word, p.generators()), coeff.get<std::int64_t>());
    }
    w.rho.push_back(std::move(x));
  }
  if (w.rho.size() != p.relator_count())
    throw Error(ErrorKind::invalid_argument, "witness has " + std::to_string(w.rho.size()) +
                                                 " components for " +
                                                 std::to_string(p.relator_count()) + " relators");
  return w;
}

}  // namespace deflab
