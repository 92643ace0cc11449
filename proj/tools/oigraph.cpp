// oigraph: build and analyse orthogonal inner product graphs.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "oigraph/autsearch.hpp"
#include "oigraph/symmetry.hpp"
#include "oigraph/verify.hpp"
#include "oigraph/version.hpp"

namespace {

using namespace oigraph;
using ordered_json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  int nu = -1;
  int delta = -1;
  std::string disc;
  std::string field;
  std::string modulus;
  std::size_t dim = 0;
  std::string method = "generated";
  std::string suite = "core";
  std::string on = "vertices";
  std::uint64_t budget = 0;  // 0: not given
  unsigned threads = 1;
  std::string format = "json";
  std::string out;
  bool no_header = false;
};

std::vector<std::uint32_t> parse_modulus(const std::string& text) {
  std::vector<std::uint32_t> coeffs;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const unsigned long v = std::stoul(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      coeffs.push_back(static_cast<std::uint32_t>(v));
    } catch (const std::exception&) {
      throw UsageError("bad --modulus coefficient '" + item + "'");
    }
  }
  return coeffs;
}

SpacePtr space_from(const Options& o) {
  if (o.nu < 0 || o.delta < 0 || o.field.empty()) throw UsageError("--nu, --delta and --field are required");
  std::optional<std::vector<std::uint32_t>> modulus;
  if (!o.modulus.empty()) modulus = parse_modulus(o.modulus);
  DiscVariant disc = DiscVariant::none;
  if (!o.disc.empty()) {
    disc = parse_disc(o.disc);
  } else if (o.delta == 1) {
    disc = DiscVariant::one;
  }
  return SpaceDescriptor::make(o.nu, o.delta, disc, Field::parse(o.field, modulus));
}

std::uint64_t vertex_budget(const Options& o, bool flag_is_vertex_budget) {
  if (flag_is_vertex_budget && o.budget) return o.budget;
  if (const char* env = std::getenv("OIGRAPH_BUDGET")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw UsageError(std::string("OIGRAPH_BUDGET is not a number: ") + env);
    }
  }
  return BuildOptions{}.budget;
}

OiGraph build(const Options& o, bool flag_is_vertex_budget = true) {
  BuildOptions b;
  b.budget = vertex_budget(o, flag_is_vertex_budget);
  b.threads = o.threads;
  return build_graph(space_from(o), b);
}

void require_format(const Options& o, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed) {
    if (o.format == f) return;
  }
  throw UsageError("format '" + o.format + "' is not available for this command");
}

ordered_json space_json(const SpaceDescriptor& sp) {
  ordered_json j = {{"nu", sp.nu()}, {"delta", sp.delta()}, {"disc", to_string(sp.disc())},
                    {"field", sp.field()->descriptor()}};
  if (!sp.field()->default_modulus()) j["modulus"] = sp.field()->modulus();
  return j;
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty() || o.out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream file(o.out, std::ios::binary);
  if (!file) throw Error("cannot open " + o.out + " for writing");
  file << text;
  if (!file) throw Error("write to " + o.out + " failed");
}

std::string dump(const Options& o, ordered_json doc) {
  if (!o.no_header) {
    ordered_json with_header = {{"tool", std::string("oigraph ") + kVersion}};
    for (auto& [k, v] : doc.items()) with_header[k] = v;
    doc = std::move(with_header);
  }
  return doc.dump(2) + "\n";
}

int cmd_build(const Options& o) {
  require_format(o, {"json", "dot"});
  const OiGraph g = build(o);
  ordered_json summary = {{"space", g.space()->label()},
                          {"vertices", g.size()},
                          {"edges", g.edge_count()},
                          {"loops", g.loop_count()}};
  if (!o.out.empty()) {
    emit(o, o.format == "dot" ? export_dot(g, !o.no_header) : export_json(g));
    (o.out == "-" ? std::cerr : std::cout) << summary.dump() << "\n";
  } else {
    std::cout << summary.dump() << "\n";
  }
  return kExitOk;
}

int cmd_classify(const Options& o) {
  require_format(o, {"json", "csv"});
  const SpacePtr space = space_from(o);
  if (o.dim < 1 || o.dim >= space->n()) throw UsageError("--dim must lie in 1..n-1");
  const auto counts = count_by_type(space, o.dim, vertex_budget(o, true));
  if (o.format == "csv") {
    std::ostringstream os;
    if (!o.no_header) os << "type,count\n";
    for (const auto& [t, c] : counts) os << '"' << t.to_string() << "\"," << c << '\n';
    emit(o, os.str());
    return kExitOk;
  }
  ordered_json rows = ordered_json::array();
  std::uint64_t total = 0;
  for (const auto& [t, c] : counts) {
    rows.push_back({{"type", t.to_string()}, {"count", c}});
    total += c;
  }
  emit(o, dump(o, {{"space", space_json(*space)}, {"dim", o.dim}, {"types", rows}, {"total", total}}));
  return kExitOk;
}

int cmd_orbits(const Options& o) {
  require_format(o, {"json", "csv"});
  if (o.on != "vertices" && o.on != "edges") throw UsageError("--on must be vertices or edges");
  const OiGraph g = build(o);
  const auto gens = po_e_generators(g);
  std::vector<std::pair<std::size_t, std::string>> rows;  // size, type label
  if (o.on == "vertices") {
    for (const auto& orbit : vertex_orbits(g, gens)) {
      rows.emplace_back(orbit.size(), classify_type(g.vertex(orbit.front())).to_string());
    }
  } else {
    const auto eo = edge_orbits(g, gens);
    for (const auto& orbit : eo.orbits) {
      const auto [u, v] = eo.edges[orbit.front()];
      rows.emplace_back(orbit.size(), EdgeTypeTriple::of(g.vertex(u), g.vertex(v)).to_string());
    }
  }
  if (o.format == "csv") {
    std::ostringstream os;
    if (!o.no_header) os << "orbit,size,type\n";
    for (std::size_t i = 0; i < rows.size(); ++i) os << i << ',' << rows[i].first << ",\"" << rows[i].second << "\"\n";
    emit(o, os.str());
    return kExitOk;
  }
  ordered_json arr = ordered_json::array();
  for (std::size_t i = 0; i < rows.size(); ++i) arr.push_back({{"orbit", i}, {"size", rows[i].first}, {"type", rows[i].second}});
  emit(o, dump(o, {{"space", space_json(*g.space())}, {"on", o.on}, {"orbits", arr}}));
  return kExitOk;
}

int cmd_diameter(const Options& o) {
  require_format(o, {"json", "csv"});
  const OiGraph g = build(o);
  const std::size_t d = diameter(g, o.threads);
  const std::string shown = d == kInfiniteDistance ? "infinite" : std::to_string(d);
  if (o.format == "csv") {
    emit(o, (o.no_header ? "" : "diameter,components\n") + shown + "," + std::to_string(components(g).size()) + "\n");
    return kExitOk;
  }
  ordered_json value = d == kInfiniteDistance ? ordered_json("infinite") : ordered_json(d);
  emit(o, dump(o, {{"space", space_json(*g.space())}, {"diameter", value}, {"components", components(g).size()}}));
  return kExitOk;
}

int cmd_aut(const Options& o) {
  require_format(o, {"json"});
  if (o.method == "formula") {
    const SpacePtr space = space_from(o);
    const auto r = aut_order_formula(space->nu(), space->delta(), *space->field());
    ordered_json doc = {{"space", space_json(*space)}, {"method", "formula"}};
    doc["order"] = r.value ? ordered_json(r.value->str()) : ordered_json(nullptr);
    doc["status"] = !r.value ? "no-closed-form" : (r.covered ? "covered" : "outside-paper-coverage");
    doc["branch"] = r.branch;
    if (!r.note.empty()) doc["note"] = r.note;
    emit(o, dump(o, doc));
    return r.value ? kExitOk : kExitCheckFailed;
  }
  if (o.method == "generated") {
    const OiGraph g = build(o);
    const auto summary = group_order(po_e_generators(g), g.size());
    emit(o, dump(o, {{"space", space_json(*g.space())},
                     {"method", "generated"},
                     {"order", summary.order.str()},
                     {"base", summary.base},
                     {"transversal_sizes", summary.transversal_sizes}}));
    return kExitOk;
  }
  if (o.method == "search") {
    const OiGraph g = build(o, false);
    const auto r = automorphism_search(g, o.budget ? o.budget : 2000);
    ordered_json doc = {{"space", space_json(*g.space())},
                        {"method", "search"},
                        {"order", r.order.str()},
                        {"generators", r.generators},
                        {"node_count", r.nodes}};
    if (!o.no_header) doc["runtime"] = r.seconds;
    emit(o, dump(o, doc));
    return kExitOk;
  }
  throw UsageError("--method must be generated, formula or search");
}

int cmd_verify(const Options& o) {
  require_format(o, {"json", "csv"});
  VerifyOptions v;
  v.suite = o.suite;
  v.threads = o.threads;
  v.budget = vertex_budget(o, true);
  if (o.suite != "core" && o.suite != "extended") throw UsageError("unknown suite '" + o.suite + "'");
  const VerifyReport report = run_verify(v);
  emit(o, o.format == "csv" ? report.to_csv(!o.no_header) : report.to_json());
  return report.ok() ? kExitOk : kExitCheckFailed;
}

void add_space_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--nu", o.nu, "number of hyperbolic pairs");
  cmd->add_option("--delta", o.delta, "dimension of the definite part (0, 1 or 2)");
  cmd->add_option("--disc", o.disc, "definite block for delta=1: one or z");
  cmd->add_option("--field", o.field, "field as q or p^e");
  cmd->add_option("--modulus", o.modulus, "modulus coefficients c0,c1,...,1");
}

void add_common_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--budget", o.budget, "vertex budget (search budget for aut --method search)");
  cmd->add_option("--threads", o.threads, "worker threads")->check(CLI::PositiveNumber);
  cmd->add_option("--format", o.format, "json, csv or dot");
  cmd->add_option("--out", o.out, "output path ('-' for stdout)");
  cmd->add_flag("--no-header", o.no_header, "omit version and runtime fields");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Orthogonal inner product graphs over finite fields"};
  app.set_version_flag("--version", std::string("oigraph ") + kVersion);
  app.require_subcommand(1);
  Options o;

  auto* build_cmd = app.add_subcommand("build", "build a graph and export it");
  auto* classify_cmd = app.add_subcommand("classify", "count subspaces of one dimension by type");
  classify_cmd->add_option("--dim", o.dim, "subspace dimension")->required();
  auto* orbits_cmd = app.add_subcommand("orbits", "orbits of the generated group");
  orbits_cmd->add_option("--on", o.on, "vertices or edges");
  auto* diameter_cmd = app.add_subcommand("diameter", "diameter and component count");
  auto* aut_cmd = app.add_subcommand("aut", "automorphism group order");
  aut_cmd->add_option("--method", o.method, "generated, formula or search");
  auto* verify_cmd = app.add_subcommand("verify", "run the acceptance checks");
  verify_cmd->add_option("--suite", o.suite, "core or extended");

  for (auto* cmd : {build_cmd, classify_cmd, orbits_cmd, diameter_cmd, aut_cmd}) add_space_flags(cmd, o);
  for (auto* cmd : {build_cmd, classify_cmd, orbits_cmd, diameter_cmd, aut_cmd, verify_cmd}) add_common_flags(cmd, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*build_cmd) return cmd_build(o);
    if (*classify_cmd) return cmd_classify(o);
    if (*orbits_cmd) return cmd_orbits(o);
    if (*diameter_cmd) return cmd_diameter(o);
    if (*aut_cmd) return cmd_aut(o);
    if (*verify_cmd) return cmd_verify(o);
  } catch (const BudgetError& e) {
    std::cerr << "oigraph: " << e.what() << "\n";
    return kExitBudget;
  } catch (const UsageError& e) {
    std::cerr << "oigraph: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "oigraph: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "oigraph: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  return kExitUsage;
}
