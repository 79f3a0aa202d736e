#pragma once

// JSON and CSV forms of reports, certificates and graft instances. JSON
// objects keep a fixed field order.

#include <json.hpp>
#include <string>
#include <vector>

#include "rdd/extremal.hpp"
#include "rdd/lemmas.hpp"
#include "rdd/metrics.hpp"
#include "rdd/structure.hpp"
#include "rdd/verify.hpp"

namespace rdd {

using Json = nlohmann::ordered_json;

Json rational_json(const Rational& r);
Json index_report_json(const IndexReport& r);
Json cut_structure_json(const Graph& g, const CutStructure& s, const std::vector<PendantPath>& paths);
Json certificate_json(const ExtremalCertificate& c, bool include_timing = true);
Json lemma_report_json(const LemmaReport& r);

inline constexpr char kCertificateCsvHeader[] = "n,k,family,max_rdd_num,max_rdd_den,match";
std::string certificate_csv_row(const ExtremalCertificate& c);

// Instance files: {"lemma": "l31", "graph6": "..." | "edges": "n; ...", "roles": {...}}.
// Role keys: l31 u v g1 g2 x z; c33 u v path_u path_v; l34 u v1 w1 kp kq
// path_w path_v; l41 w1 w2; l42 u v g0 g1 g2.
GraftInstance instance_from_json(const Json& j);
Json instance_json(const GraftInstance& inst);

}  // namespace rdd
