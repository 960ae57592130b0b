#include "spix/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>

#include "CLI11.hpp"
#include "spix/error.hpp"
#include "spix/io.hpp"
#include "spix/report.hpp"

namespace spix {

namespace {

constexpr int kMaxBandListing = 2000;

struct UsageError : Error {
  using Error::Error;
};

struct InputOptions {
  std::string file;
  std::string format;
  bool largest = false;

  void attach(CLI::App* cmd) {
    cmd->add_option("file", file, "Graph file (edge list or GML)")->required();
    cmd->add_option("--format", format, "Input format; inferred from the extension when omitted")
        ->check(CLI::IsMember({"edgelist", "gml"}));
    cmd->add_flag("--largest-component", largest, "Analyze only the largest connected component");
  }

  GraphFormat resolved_format() const {
    if (format.empty()) return format_for_path(file);
    return format == "gml" ? GraphFormat::Gml : GraphFormat::EdgeList;
  }

  WeightedGraph load() const {
    WeightedGraph g = load_graph(file, resolved_format());
    return largest ? largest_component(g) : g;
  }

  Json echo() const {
    Json j;
    j["file"] = file;
    j["format"] = to_string(resolved_format());
    j["largest_component"] = largest;
    return j;
  }
};

Json header(const char* command) {
  Json j;
  j["tool"] = "spix";
  j["version"] = kToolVersion;
  j["command"] = command;
  return j;
}

Basis basis_for(const std::string& t1, Quantity q) {
  if (q == Quantity::EdgeWeight) {
    if (t1 == "total") return Basis::ObservedTotal;
    if (t1 == "emax") return Basis::EdgeMaxWeight;
    throw UsageError("--t1 " + t1 + " does not apply to edge weights (use total or emax)");
  }
  if (t1 == "total") return Basis::ObservedTotal;
  if (t1 == "potential") return Basis::PotentialDegree;
  if (t1 == "nsmax") return Basis::NodeMaximum;
  throw UsageError("--t1 emax applies to edge weights only");
}

void emit(const Json& j, const std::string& path, std::ostream& out) {
  const std::string text = j.dump(2) + "\n";
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot write '" + path + "'");
  f << text;
  if (!f) throw Error("failed writing '" + path + "'");
}

std::string format_point(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", x);
  return buf;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sparsity indices, closed-form bounds and overlapping communities of weighted graphs", "spix"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));

  InputOptions stats_in;
  std::string stats_t1 = "nsmax";
  auto* stats = app.add_subcommand("stats", "Degree, strength and edge-weight sparsity report (JSON)");
  stats_in.attach(stats);
  stats->add_option("--t1", stats_t1, "Reference total for degree and strength indices")
      ->check(CLI::IsMember({"total", "potential", "nsmax"}))
      ->capture_default_str();

  InputOptions lorenz_in;
  std::string quantity;
  std::string lorenz_t1 = "total";
  std::string lorenz_out;
  auto* lorenz = app.add_subcommand("lorenz", "Lorenz curve points as CSV");
  lorenz_in.attach(lorenz);
  lorenz->add_option("--quantity", quantity, "Sequence to plot")
      ->required()
      ->check(CLI::IsMember({"degree", "strength", "weight"}));
  lorenz->add_option("--t1", lorenz_t1, "Reference total (emax: |E| * max weight, edge weights only)")
      ->check(CLI::IsMember({"total", "potential", "nsmax", "emax"}))
      ->capture_default_str();
  lorenz->add_option("--out", lorenz_out, "CSV output path ('-' for stdout)")->required();

  InputOptions comm_in;
  DetectionConfig cfg;
  bool no_tuning = false;
  std::string denominator = "min";
  std::string comm_out;
  auto* communities = app.add_subcommand("communities", "Overlapping community detection (JSON)");
  comm_in.attach(communities);
  communities->add_option("--merge-threshold", cfg.merge_threshold, "Overlap fraction that triggers a merge")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  communities->add_option("--min-sparsity", cfg.min_strength_sparsity, "Warn below this strength sparsity")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  communities->add_flag("--no-tuning", no_tuning, "Skip the overlap-merge step");
  communities->add_option("--overlap-denominator", denominator, "Denominator of the overlap fraction")
      ->check(CLI::IsMember({"min", "max", "union"}))
      ->capture_default_str();
  communities->add_option("--out", comm_out, "JSON output path (stdout when omitted)");

  int nodes = 0;
  std::optional<std::int64_t> edges;
  auto* bounds = app.add_subcommand("bounds", "Closed-form degree-sparsity brackets (JSON)");
  bounds->add_option("--nodes", nodes, "Node count n")->required()->check(CLI::Range(3, 1 << 20));
  bounds->add_option("--edges", edges, "Edge count m of a connected graph");

  InputOptions validate_in;
  auto* validate = app.add_subcommand("validate", "Check a graph's indices against every applicable bound");
  validate_in.attach(validate);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (stats->parsed()) {
      const Basis basis = basis_for(stats_t1, Quantity::Degree);
      const WeightedGraph g = stats_in.load();
      Json j = header("stats");
      j["input"] = stats_in.echo();
      j.update(stats_report(g, basis));
      emit(j, "", out);
    } else if (lorenz->parsed()) {
      const Quantity q = quantity == "degree"     ? Quantity::Degree
                         : quantity == "strength" ? Quantity::Strength
                                                  : Quantity::EdgeWeight;
      const Basis basis = basis_for(lorenz_t1, q);
      const WeightedGraph g = lorenz_in.load();
      const double t1 = resolve_t1(g, q, basis);
      const LorenzCurve curve = q == Quantity::Degree     ? lorenz_curve(degree_sequence(g), t1)
                                : q == Quantity::Strength ? lorenz_curve(strength_sequence(g), t1)
                                                          : lorenz_curve(weight_frequency_table(g), t1);
      std::string csv = "x,y\n";
      for (const auto& p : curve.points) csv += format_point(p.x) + "," + format_point(p.y) + "\n";
      if (lorenz_out == "-") {
        out << csv;
      } else {
        std::ofstream f(lorenz_out, std::ios::binary);
        if (!f || !(f << csv)) throw Error("cannot write '" + lorenz_out + "'");
      }
    } else if (communities->parsed()) {
      cfg.merge_overlaps = !no_tuning;
      cfg.denominator = denominator == "max"     ? OverlapDenominator::Max
                        : denominator == "union" ? OverlapDenominator::Union
                                                 : OverlapDenominator::Min;
      if (cfg.merge_threshold <= 0.0) throw UsageError("--merge-threshold must lie in (0, 1]");
      if (cfg.min_strength_sparsity >= 1.0) throw UsageError("--min-sparsity must lie in [0, 1)");
      const WeightedGraph g = comm_in.load();
      const CommunityRun run = run_communities(g, cfg);
      for (const auto& w : run.warnings) err << "warning: " << w << "\n";

      Json j = header("communities");
      j["input"] = comm_in.echo();
      Json c;
      c["merge_threshold"] = cfg.merge_threshold;
      c["min_sparsity"] = cfg.min_strength_sparsity;
      c["overlap_denominator"] = to_string(cfg.denominator);
      c["tuning"] = cfg.merge_overlaps;
      j["config"] = std::move(c);
      j["graph"] = graph_summary(g);
      j["strength_sparsity"] = round6(run.strength_sparsity);
      j["warnings"] = run.warnings;
      j["pre_tuning"] = cover_metrics(g, run.candidates);
      j["final"] = cover_metrics(g, run.cover);
      j["communities"] = cover_json(g, run.cover);
      j["tie_breaks"] = run.ties;
      emit(j, comm_out, out);
    } else if (bounds->parsed()) {
      Json j = header("bounds");
      if (!edges && nodes > kMaxBandListing) {
        throw UsageError("listing every band is limited to --nodes <= " + std::to_string(kMaxBandListing) +
                         "; pass --edges for a single bracket");
      }
      try {
        j.update(edges ? bounds_report(nodes, *edges) : bounds_report(nodes));
      } catch (const DomainError& e) {
        throw UsageError(e.what());
      }
      emit(j, "", out);
    } else if (validate->parsed()) {
      const WeightedGraph g = validate_in.load();
      const auto checks = check_bounds(g);
      Json j = header("validate");
      j["input"] = validate_in.echo();
      j["graph"] = graph_summary(g);
      Json arr = Json::array();
      std::size_t violations = 0;
      for (const auto& ch : checks) {
        Json x;
        x["check"] = ch.name;
        x["value"] = round6(ch.value);
        x["lower"] = round6(ch.lower);
        x["upper"] = round6(ch.upper);
        x["holds"] = ch.holds;
        arr.push_back(std::move(x));
        if (!ch.holds) {
          ++violations;
          err << "violation: " << ch.name << "\n";
        }
      }
      j["checks"] = std::move(arr);
      j["violations"] = violations;
      emit(j, "", out);
      if (violations > 0) return kExitBoundViolated;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitDataError;
  }
  return kExitOk;
}

}  // namespace spix
