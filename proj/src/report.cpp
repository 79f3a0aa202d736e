#include "rdd/report.hpp"

#include "rdd/codec.hpp"

namespace rdd {

Json rational_json(const Rational& r) {
  Json j;
  j["value"] = r.to_string();
  j["num"] = int128_to_string(r.numerator());
  j["den"] = int128_to_string(r.denominator());
  j["approx"] = r.to_double();
  return j;
}

Json index_report_json(const IndexReport& r) {
  Json j;
  j["n"] = r.order;
  j["edges"] = r.edge_count;
  j["rdd"] = rational_json(r.rdd);
  j["wiener"] = r.wiener ? rational_json(*r.wiener) : Json(nullptr);
  j["harary"] = rational_json(r.harary);
  j["dd"] = r.degree_distance ? rational_json(*r.degree_distance) : Json(nullptr);
  return j;
}

namespace {

Json edge_json(const Edge& e) { return Json::array({e.u, e.v}); }

Json edges_json(std::span<const Edge> edges) {
  Json arr = Json::array();
  for (const Edge& e : edges) arr.push_back(edge_json(e));
  return arr;
}


Json optional_rational_json(const std::optional<Rational>& r) { return r ? Json(r->to_string()) : Json(nullptr); }

}  // namespace

Json cut_structure_json(const Graph& g, const CutStructure& s, const std::vector<PendantPath>& paths) {
  Json j;
  j["n"] = g.order();
  j["graph6"] = write_graph6(g);
  j["cut_vertices"] = to_vertex_list(s.cut_vertices);
  j["cut_edges"] = edges_json(s.cut_edges);
  Json blocks = Json::array();
  for (const auto& b : s.blocks) {
    Json block;
    block["vertices"] = to_vertex_list(block_vertices(b));
    block["edges"] = edges_json(b);
    block["complete"] = is_block_complete(g, b);
    blocks.push_back(std::move(block));
  }
  j["blocks"] = std::move(blocks);
  Json pp = Json::array();
  for (const auto& p : paths) {
    Json path;
    path["anchor"] = p.anchor;
    path["vertices"] = p.vertices;
    pp.push_back(std::move(path));
  }
  j["pendant_paths"] = std::move(pp);
  return j;
}

Json certificate_json(const ExtremalCertificate& c, bool include_timing) {
  Json j;
  j["n"] = c.n;
  j["k"] = c.k;
  j["family"] = std::string(family_name(c.family));
  j["empty_family"] = c.empty_family;
  j["max_rdd"] = optional_rational_json(c.max_rdd);
  j["maximizer_count_labeled"] = c.maximizer_count_labeled;
  j["maximizers_isomorphic_to_theory"] = c.maximizers_isomorphic_to_theory;
  j["maximizers_graph6"] = c.maximizers_graph6;
  j["theory_applicable"] = c.theory_applicable;
  j["theory_graph"] = c.theory_applicable ? Json(c.theory_graph6) : Json(nullptr);
  j["theory_rdd"] = optional_rational_json(c.theory_rdd);
  j["closed_form"] = optional_rational_json(c.closed_form);
  j["all_maximizers_isomorphic_to_theory"] = c.all_maximizers_isomorphic_to_theory;
  j["match"] = c.theory_applicable ? Json(c.matches_theory) : Json(nullptr);
  j["family_size"] = c.family_size;
  j["graphs_scanned"] = c.graphs_scanned;
  j["transmission_identity_mismatches"] = c.transmission_identity_mismatches;
  if (include_timing) j["elapsed_ms"] = c.elapsed_ms;
  return j;
}

Json lemma_report_json(const LemmaReport& r) {
  Json j;
  j["lemma"] = std::string(lemma_name(r.lemma));
  j["trials"] = r.trials;
  j["seed"] = r.seed;
  j["prng"] = r.prng;
  j["comparisons"] = r.comparisons;
  j["failures"] = r.failures;
  j["min_gap"] = optional_rational_json(r.min_gap);
  j["transmission_mismatches"] = r.transmission_mismatches;
  return j;
}

std::string certificate_csv_row(const ExtremalCertificate& c) {
  std::string num;
  std::string den;
  if (c.max_rdd) {
    num = int128_to_string(c.max_rdd->numerator());
    den = int128_to_string(c.max_rdd->denominator());
  }
  const std::string match = !c.theory_applicable ? "n/a" : (c.matches_theory ? "true" : "false");
  return std::to_string(c.n) + "," + std::to_string(c.k) + "," + std::string(family_name(c.family)) + "," + num +
         "," + den + "," + match;
}

namespace {

Graph graph_from_instance(const Json& j) {
  if (j.contains("graph6")) return parse_graph6(j.at("graph6").get<std::string>());
  if (j.contains("edges")) return parse_edge_list(j.at("edges").get<std::string>()).graph;
  throw InvalidArgumentError("instance needs a \"graph6\" or \"edges\" field");
}

std::vector<int> ints(const Json& roles, const char* key) {
  if (!roles.contains(key)) throw InvalidArgumentError(std::string("instance roles missing \"") + key + "\"");
  return roles.at(key).get<std::vector<int>>();
}

int one(const Json& roles, const char* key) {
  if (!roles.contains(key)) throw InvalidArgumentError(std::string("instance roles missing \"") + key + "\"");
  return roles.at(key).get<int>();
}

}  // namespace

GraftInstance instance_from_json(const Json& j) {
  try {
    GraftInstance inst;
    inst.lemma = parse_lemma(j.at("lemma").get<std::string>());
    inst.graph = graph_from_instance(j);
    const Json& r = j.at("roles");
    switch (inst.lemma) {
      case Lemma::kL31:
        inst.roles = L31Roles{one(r, "u"), one(r, "v"), ints(r, "g1"), ints(r, "g2"), ints(r, "x"), ints(r, "z")};
        break;
      case Lemma::kC33:
        inst.roles = C33Roles{one(r, "u"), one(r, "v"), ints(r, "path_u"), ints(r, "path_v")};
        break;
      case Lemma::kL34:
        inst.roles = L34Roles{one(r, "u"),   one(r, "v1"),     one(r, "w1"),     ints(r, "kp"),
                              ints(r, "kq"), ints(r, "path_w"), ints(r, "path_v")};
        break;
      case Lemma::kL41:
        inst.roles = L41Roles{one(r, "w1"), one(r, "w2")};
        break;
      case Lemma::kL42:
        inst.roles = L42Roles{one(r, "u"), one(r, "v"), ints(r, "g0"), ints(r, "g1"), ints(r, "g2")};
        break;
      case Lemma::kL21:
        throw InvalidArgumentError("l21 has no transformation instance");
    }
    return inst;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgumentError(std::string("malformed instance: ") + e.what());
  }
}

Json instance_json(const GraftInstance& inst) {
  Json j;
  j["lemma"] = std::string(lemma_name(inst.lemma));
  j["graph6"] = write_graph6(inst.graph);
  Json r;
  std::visit(
      [&](const auto& roles) {
        using T = std::decay_t<decltype(roles)>;
        if constexpr (std::is_same_v<T, L31Roles>) {
          r["u"] = roles.u, r["v"] = roles.v, r["g1"] = roles.g1, r["g2"] = roles.g2, r["x"] = roles.x,
          r["z"] = roles.z;
        } else if constexpr (std::is_same_v<T, C33Roles>) {
          r["u"] = roles.u, r["v"] = roles.v, r["path_u"] = roles.path_u, r["path_v"] = roles.path_v;
        } else if constexpr (std::is_same_v<T, L34Roles>) {
          r["u"] = roles.u, r["v1"] = roles.v1, r["w1"] = roles.w1, r["kp"] = roles.kp, r["kq"] = roles.kq,
          r["path_w"] = roles.path_w, r["path_v"] = roles.path_v;
        } else if constexpr (std::is_same_v<T, L41Roles>) {
          r["w1"] = roles.w1, r["w2"] = roles.w2;
        } else {
          r["u"] = roles.u, r["v"] = roles.v, r["g0"] = roles.g0, r["g1"] = roles.g1, r["g2"] = roles.g2;
        }
      },
      inst.roles);
  j["roles"] = std::move(r);
  return j;
}

}  // namespace rdd
