#ifndef DEFLAB_REPORT_HPP
#define DEFLAB_REPORT_HPP

#include <string>

#include <json.hpp>

#include "deflab/experiment.hpp"
#include "deflab/fox.hpp"
#include "deflab/modp.hpp"
#include "deflab/module_cert.hpp"
#include "deflab/schreier.hpp"

namespace deflab {

using Json = nlohmann::ordered_json;

const char* tool_version();

Json to_json(const Presentation& p);
Json to_json(const CosetTable& t);
Json to_json(const SubgroupRecord& r);
Json to_json(const SubgroupPresentation& s);
Json to_json(const GroupRingElement& x, const Presentation& p);
Json to_json(const DeficiencyInterval& d);
Json to_json(const StabilityRow& r);
Json to_json(const StabilityReport& r);
Json to_json(const RankDropCertificate& c, const Presentation& p);
Json to_json(const CohomologyDims& d);
Json to_json(const DualComplexReport& d);
Json to_json(const BettiVector& b);
Json to_json(const NuBookkeeping& n);

/// Reads a presentation file; lines whose first non-blank character is '#'
/// are comments.
Presentation read_presentation_file(const std::string& path);

std::string stability_csv(const StabilityReport& r);

/// {"rho": [{"word": coeff, ...}, ...], ...} with words in p's generator names.
KernelWitness witness_from_json(const Json& j, const Presentation& p);

}  // namespace deflab

#endif  // DEFLAB_REPORT_HPP
