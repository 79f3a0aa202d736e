#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "rdd/codec.hpp"
#include "rdd/enumerate.hpp"
#include "rdd/extremal.hpp"
#include "rdd/lemmas.hpp"
#include "rdd/metrics.hpp"
#include "rdd/report.hpp"
#include "rdd/structure.hpp"
#include "rdd/verify.hpp"

namespace rdd::cli {

namespace {

struct InputFlags {
  std::string edges;
  std::string g6_file;

  void attach(CLI::App* app) {
    auto* e = app->add_option("--edges", edges, "inline edge list \"n; u-v, ...\"");
    auto* g = app->add_option("--g6", g6_file, "file of newline-delimited graph6");
    e->excludes(g);
  }

  // Reads the single selected source; stdin graph6 when no flag is given.
  std::vector<Graph> read(std::istream& in, std::ostream& err) const {
    std::vector<Graph> graphs;
    if (!edges.empty()) {
      auto parsed = parse_edge_list(edges);
      for (const auto& w : parsed.warnings) err << "warning: " << w << "\n";
      graphs.push_back(parsed.graph);
    } else if (!g6_file.empty()) {
      enumerate_from_file(g6_file, [&](const Graph& g, std::size_t) { graphs.push_back(g); });
    } else {
      read_graph6_stream(in, [&](const Graph& g, std::size_t) { graphs.push_back(g); });
    }
    return graphs;
  }
};

std::size_t retain_cap_from_env() {
  const char* raw = std::getenv("RDD_MAX_RETAINED_MAXIMIZERS");
  if (raw == nullptr) return kDefaultRetainedMaximizers;
  try {
    const long value = std::stol(raw);
    if (value < 0) throw std::invalid_argument("negative");
    return static_cast<std::size_t>(value);
  } catch (const std::exception&) {
    throw InvalidArgumentError(std::string("RDD_MAX_RETAINED_MAXIMIZERS is not a nonnegative integer: ") + raw);
  }
}

void print_index_text(const Graph& g, const std::string& index, bool prefix, std::ostream& out) {
  const std::string lead = prefix ? write_graph6(g) + " " : "";
  if (index == "all") {
    const IndexReport r = index_report(g);
    out << lead << "rdd " << r.rdd.to_display() << "\n";
    out << lead << "wiener " << (r.wiener ? r.wiener->to_display() : "undefined (disconnected)") << "\n";
    out << lead << "harary " << r.harary.to_display() << "\n";
    out << lead << "dd " << (r.degree_distance ? r.degree_distance->to_display() : "undefined (disconnected)")
        << "\n";
    return;
  }
  Rational value;
  if (index == "rdd") value = rdd(g);
  if (index == "wiener") value = wiener(g);
  if (index == "harary") value = harary(g);
  if (index == "dd") value = degree_distance(g);
  out << lead << value.to_display() << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Reciprocal degree distance and related graph indices", "rdd"};
  app.require_subcommand(1);
  int exit_code = kExitOk;

  // compute
  auto* compute = app.add_subcommand("compute", "evaluate distance-degree indices");
  std::string index = "all";
  std::string format = "text";
  InputFlags compute_in;
  compute->add_option("--index", index)->check(CLI::IsMember({"rdd", "wiener", "harary", "dd", "all"}));
  compute->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  compute_in.attach(compute);

  // construct
  auto* construct = app.add_subcommand("construct", "build an extremal graph");
  std::string family = "gnk";
  int n = 0;
  int k = 0;
  std::string out_format = "graph6";
  construct->add_option("family", family)->required()->check(CLI::IsMember({"gnk", "gbar"}));
  construct->add_option("--n", n)->required();
  construct->add_option("--k", k)->required();
  construct->add_option("--out", out_format)->check(CLI::IsMember({"graph6", "edges", "json"}));

  // transform
  auto* transform = app.add_subcommand("transform", "apply a grafting rewrite to an instance file");
  std::string lemma_flag;
  std::string instance_path;
  transform->add_option("--lemma", lemma_flag)->required()->check(CLI::IsMember({"l31", "c33", "l34", "l41", "l42"}));
  transform->add_option("--instance", instance_path)->required();

  // structure
  auto* structure = app.add_subcommand("structure", "cut vertices, bridges, blocks and pendant paths as JSON");
  InputFlags structure_in;
  structure_in.attach(structure);

  // closed-form
  auto* closed = app.add_subcommand("closed-form", "closed-form RDD of the cut-edge maximiser");
  closed->add_option("--n", n)->required();
  closed->add_option("--k", k)->required();

  // verify
  auto* verify = app.add_subcommand("verify", "exhaustively certify an extremal theorem");
  std::string theorem;
  int n_max = 0;
  bool big = false;
  int jobs = 1;
  std::string from_g6;
  std::string verify_format = "json";
  bool no_timing = false;
  verify->add_option("theorem", theorem)->required()->check(CLI::IsMember({"thm36", "thm43"}));
  verify->add_option("--n-max", n_max)->required();
  verify->add_flag("--big", big, "allow n = 8");
  verify->add_option("--jobs", jobs)->check(CLI::Range(1, 256));
  verify->add_option("--from-g6", from_g6);
  verify->add_option("--format", verify_format)->check(CLI::IsMember({"json", "csv"}));
  verify->add_flag("--no-timing", no_timing, "omit elapsed times");

  // maximize
  auto* maximize = app.add_subcommand("maximize", "maximum RDD over one (n, k) family");
  std::string max_family = "cut-vertex";
  maximize->add_option("--family", max_family)->check(CLI::IsMember({"cut-vertex", "cut-edge"}));
  maximize->add_option("--n", n)->required();
  maximize->add_option("--k", k)->required();
  maximize->add_flag("--big", big);
  maximize->add_option("--jobs", jobs)->check(CLI::Range(1, 256));
  maximize->add_option("--from-g6", from_g6);
  maximize->add_flag("--no-timing", no_timing);

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "stream labeled connected graphs as graph6");
  int cut_vertices = -1;
  int cut_edges = -1;
  enumerate->add_option("--n", n)->required();
  auto* cv = enumerate->add_option("--cut-vertices", cut_vertices);
  auto* ce = enumerate->add_option("--cut-edges", cut_edges);
  cv->excludes(ce);
  enumerate->add_flag("--big", big);

  // check-lemma
  auto* check = app.add_subcommand("check-lemma", "randomised monotonicity check of a lemma");
  std::string check_lemma_id;
  int trials = 0;
  std::uint64_t seed = 0;
  check->add_option("--lemma", check_lemma_id)->required()->check(
      CLI::IsMember({"l21", "l31", "c33", "l34", "l41", "l42"}));
  check->add_option("--trials", trials)->required()->check(CLI::PositiveNumber);
  check->add_option("--seed", seed)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    const auto* sub = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
    err << sub->help();
    return kExitUsage;
  }

  try {
    if (compute->parsed()) {
      const auto graphs = compute_in.read(in, err);
      const bool many = compute_in.edges.empty();
      for (const Graph& g : graphs) {
        if (format == "json") {
          Json j = index_report_json(index_report(g));
          j["graph6"] = write_graph6(g);
          out << j.dump() << "\n";
        } else {
          print_index_text(g, index, many && graphs.size() > 1, out);
        }
      }
    } else if (construct->parsed()) {
      const Graph g = family == "gnk" ? build_g_nk(n, k) : build_gbar_nk(n, k);
      if (out_format == "graph6") out << write_graph6(g) << "\n";
      if (out_format == "edges") out << write_edge_list(g) << "\n";
      if (out_format == "json") {
        Json j;
        j["family"] = family;
        j["n"] = n;
        j["k"] = k;
        j["graph6"] = write_graph6(g);
        j["edges"] = write_edge_list(g);
        j["rdd"] = rational_json(rdd(g));
        out << j.dump(2) << "\n";
      }
    } else if (transform->parsed()) {
      std::ifstream file(instance_path);
      if (!file) throw InvalidArgumentError("cannot open instance file '" + instance_path + "'");
      Json raw = Json::parse(file);
      if (!raw.contains("lemma")) raw["lemma"] = lemma_flag;
      if (parse_lemma(raw.at("lemma").get<std::string>()) != parse_lemma(lemma_flag)) {
        throw InvalidArgumentError("instance file is for lemma " + raw.at("lemma").get<std::string>());
      }
      auto checked = validate_instance(instance_from_json(raw));
      Json j;
      j["lemma"] = lemma_flag;
      if (!checked.ok()) {
        j["valid"] = false;
        j["violations"] = checked.violations;
        out << j.dump(2) << "\n";
        return kExitUsage;
      }
      const auto& inst = checked.instance;
      const Rational before = rdd(inst.graph);
      j["valid"] = true;
      j["before"] = {{"graph6", write_graph6(inst.graph)}, {"rdd", before.to_string()}};
      std::vector<Graph> results;
      switch (inst.lemma) {
        case Lemma::kL31:
          results.push_back(graft_l31(inst).graph);
          break;
        case Lemma::kC33:
          results.push_back(shift_pendant_paths_c33(inst).graph);
          break;
        case Lemma::kL34:
          results.push_back(graft_l34(inst).graph);
          break;
        case Lemma::kL41:
          results.push_back(contract_cut_edge_l41(inst).graph);
          break;
        default: {
          auto merged = merge_blocks_l42(inst);
          results.push_back(merged.h1);
          results.push_back(merged.h2);
        }
      }
      Json after = Json::array();
      bool increased = true;
      for (const Graph& h : results) {
        const Rational value = rdd(h);
        increased = increased && value > before;
        after.push_back({{"graph6", write_graph6(h)}, {"rdd", value.to_string()}, {"gain", (value - before).to_string()}});
      }
      j["after"] = std::move(after);
      j["increased"] = increased;
      out << j.dump(2) << "\n";
      if (!increased) exit_code = kExitCheckFailed;
    } else if (structure->parsed()) {
      for (const Graph& g : structure_in.read(in, err)) {
        out << cut_structure_json(g, cut_structure(g), pendant_paths(g)).dump() << "\n";
      }
    } else if (closed->parsed()) {
      out << closed_form_gbar(n, k).to_display() << "\n";
    } else if (verify->parsed()) {
      ScanOptions options;
      options.jobs = jobs;
      options.allow_big = big;
      options.retain_cap = retain_cap_from_env();
      const GraphSource source = from_g6.empty() ? GraphSource::labeled() : GraphSource::file(from_g6);
      const auto certs = theorem == "thm36" ? verify_theorem_36(n_max, options, source)
                                            : verify_theorem_43(n_max, options, source);
      const bool failed = std::any_of(certs.begin(), certs.end(), certificate_failed);
      if (verify_format == "csv") {
        out << kCertificateCsvHeader << "\n";
        for (const auto& c : certs) out << certificate_csv_row(c) << "\n";
      } else {
        Json j;
        j["theorem"] = theorem;
        j["n_max"] = n_max;
        j["all_match"] = !failed;
        Json arr = Json::array();
        for (const auto& c : certs) arr.push_back(certificate_json(c, !no_timing));
        j["certificates"] = std::move(arr);
        out << j.dump(2) << "\n";
      }
      if (failed) {
        for (const auto& c : certs) {
          if (certificate_failed(c)) {
            err << "MISMATCH n=" << c.n << " k=" << c.k << " family=" << family_name(c.family)
                << " max=" << (c.max_rdd ? c.max_rdd->to_string() : "none")
                << " theory=" << (c.theory_rdd ? c.theory_rdd->to_string() : "none") << " isomorphic "
                << c.maximizers_isomorphic_to_theory << "/" << c.maximizer_count_labeled << "\n";
          }
        }
        exit_code = kExitCheckFailed;
      }
    } else if (maximize->parsed()) {
      ScanOptions options;
      options.jobs = jobs;
      options.allow_big = big;
      options.retain_cap = retain_cap_from_env();
      const GraphSource source = from_g6.empty() ? GraphSource::labeled() : GraphSource::file(from_g6);
      const auto cert = max_rdd_over_family(n, k, parse_family(max_family), source, options);
      out << certificate_json(cert, !no_timing).dump(2) << "\n";
      if (certificate_failed(cert)) exit_code = kExitCheckFailed;
    } else if (enumerate->parsed()) {
      enumerate_connected(
          n,
          [&](const Graph& g, std::uint64_t) {
            if (cut_vertices >= 0 || cut_edges >= 0) {
              const CutCounts counts = cut_counts(g);
              if (cut_vertices >= 0 && counts.cut_vertices != cut_vertices) return;
              if (cut_edges >= 0 && counts.cut_edges != cut_edges) return;
            }
            out << write_graph6(g) << "\n";
          },
          big);
    } else if (check->parsed()) {
      const LemmaReport report = check_lemma(parse_lemma(check_lemma_id), trials, seed);
      out << lemma_report_json(report).dump(2) << "\n";
      if (!report.failures.empty() || report.transmission_mismatches != 0) exit_code = kExitCheckFailed;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return exit_code;
}

}  // namespace rdd::cli
