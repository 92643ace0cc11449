#include "oigraph/verify.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <memory>
#include <random>
#include <set>
#include <sstream>
#include <tuple>

#include <json.hpp>

#include "oigraph/autsearch.hpp"
#include "oigraph/symmetry.hpp"

namespace oigraph {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass:
      return "pass";
    case CheckStatus::fail:
      return "fail";
    case CheckStatus::outside_coverage:
      return "outside-paper-coverage";
  }
  return "fail";
}

bool VerifyReport::ok() const {
  for (const auto& r : records) {
    if (r.status == CheckStatus::fail) return false;
  }
  return true;
}

std::vector<int> VerifyReport::criteria() const {
  std::set<int> ids;
  for (const auto& r : records) ids.insert(r.criterion);
  return {ids.begin(), ids.end()};
}

bool VerifyReport::criterion_passed(int id) const {
  bool seen = false;
  for (const auto& r : records) {
    if (r.criterion != id) continue;
    seen = true;
    if (r.status == CheckStatus::fail) return false;
  }
  return seen;
}

std::string VerifyReport::to_json() const {
  nlohmann::ordered_json doc;
  doc["suite"] = suite;
  doc["ok"] = ok();
  doc["checks"] = nlohmann::ordered_json::array();
  for (const auto& r : records) {
    doc["checks"].push_back({{"criterion", r.criterion},
                             {"name", r.name},
                             {"space", r.space},
                             {"anchor", r.anchor},
                             {"expected", r.expected},
                             {"computed", r.computed},
                             {"status", to_string(r.status)},
                             {"runtime", r.seconds}});
  }
  return doc.dump(2) + "\n";
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string VerifyReport::to_csv(bool header) const {
  std::ostringstream os;
  if (header) os << "criterion,name,space,anchor,expected,computed,status,runtime\n";
  for (const auto& r : records) {
    os << r.criterion << ',' << csv_field(r.name) << ',' << csv_field(r.space) << ',' << csv_field(r.anchor) << ','
       << csv_field(r.expected) << ',' << csv_field(r.computed) << ',' << to_string(r.status) << ',' << r.seconds
       << '\n';
  }
  return os.str();
}

std::string criterion_title(int id) {
  switch (id) {
    case 1:
      return "connectivity and diameter";
    case 2:
      return "dimension-1 vertex counts";
    case 3:
      return "nu=1 automorphism orders";
    case 4:
      return "delta=0 automorphism group of Oi(4,3)";
    case 5:
      return "delta=1 group order on Oi(5,3)";
    case 6:
      return "vertex orbits equal type fibers";
    case 7:
      return "edge orbits equal type-triple fibers";
    case 8:
      return "Witt decomposition against brute force";
    case 9:
      return "reflection closure order on Oi(4,3)";
    case 10:
      return "parameter recovery from the dimension-1 subgraph";
    case 11:
      return "edge-condition finding for Oi(2,q)";
    default:
      throw Error("unknown acceptance item " + std::to_string(id));
  }
}

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct SpaceSpec {
  int nu;
  int delta;
  DiscVariant disc;
  std::string field;
};

SpacePtr make_space(const SpaceSpec& s) { return SpaceDescriptor::make(s.nu, s.delta, s.disc, Field::parse(s.field)); }

/// Built graphs shared between the checks of one run.
class GraphCache {
 public:
  explicit GraphCache(const VerifyOptions& o) : options_(o) {}

  const OiGraph& get(const SpaceSpec& s) {
    const auto key = std::make_tuple(s.nu, s.delta, static_cast<int>(s.disc), s.field);
    auto it = graphs_.find(key);
    if (it == graphs_.end()) {
      BuildOptions b;
      b.budget = options_.budget;
      b.threads = options_.threads;
      it = graphs_.emplace(key, std::make_unique<OiGraph>(build_graph(make_space(s), b))).first;
    }
    return *it->second;
  }

 private:
  VerifyOptions options_;
  std::map<std::tuple<int, int, int, std::string>, std::unique_ptr<OiGraph>> graphs_;
};

const std::vector<SpaceSpec> kConnectivitySpaces = {
    {1, 0, DiscVariant::none, "3"}, {1, 0, DiscVariant::none, "5"}, {1, 1, DiscVariant::one, "3"},
    {1, 1, DiscVariant::z, "3"},    {2, 0, DiscVariant::none, "3"}, {2, 1, DiscVariant::one, "3"},
};

std::string show_distance(std::size_t d) { return d == kInfiniteDistance ? "infinite" : std::to_string(d); }

CheckRecord record(int criterion, std::string name, std::string space, std::string anchor, std::string expected,
                   std::string computed, Clock::time_point t0) {
  CheckRecord r;
  r.criterion = criterion;
  r.name = std::move(name);
  r.space = std::move(space);
  r.anchor = std::move(anchor);
  r.status = expected == computed ? CheckStatus::pass : CheckStatus::fail;
  r.expected = std::move(expected);
  r.computed = std::move(computed);
  r.seconds = since(t0);
  return r;
}

std::uint64_t projective_points(std::uint64_t q, std::size_t n) {
  std::uint64_t qn = 1;
  for (std::size_t i = 0; i < n; ++i) qn *= q;
  return (qn - 1) / (q - 1);
}

std::vector<CheckRecord> check_connectivity(GraphCache& cache, const VerifyOptions& o) {
  std::vector<CheckRecord> out;
  for (const auto& s : kConnectivitySpaces) {
    const auto t0 = Clock::now();
    const OiGraph& g = cache.get(s);
    const std::string expected = g.space()->n() == 2 ? "infinite" : "4";
    out.push_back(record(1, "diameter", g.space()->label(),
                         "connected with diameter 4 iff n >= 3; Oi(2,q) disconnected", expected,
                         show_distance(diameter(g, o.threads)), t0));
  }
  return out;
}

std::vector<CheckRecord> check_dim1_counts(GraphCache& cache) {
  std::vector<CheckRecord> out;
  for (const auto& s : kConnectivitySpaces) {
    const auto t0 = Clock::now();
    const OiGraph& g = cache.get(s);
    const auto expected = projective_points(g.space()->field()->q(), g.space()->n());
    out.push_back(record(2, "dim1 vertex count", g.space()->label(), "dimension-1 vertices are the projective points",
                         std::to_string(expected), std::to_string(dim1_subgraph(g).size()), t0));
  }
  return out;
}

std::vector<CheckRecord> check_nu1_orders(GraphCache& cache, const VerifyOptions& o) {
  std::vector<CheckRecord> out;
  const std::vector<std::pair<std::string, std::string>> cases = {{"3", "4"}, {"5", "16"}, {"9", "768"}};
  for (const auto& [field, value] : cases) {
    const auto t0 = Clock::now();
    const OiGraph& g = cache.get({1, 0, DiscVariant::none, field});
    const auto formula = aut_order_formula(1, 0, *g.space()->field());
    out.push_back(record(3, "closed form", g.space()->label(), "|Aut Oi(2,q)| = 2^((q+1)/2) ((q-1)/2)!", value,
                         formula.value->str(), t0));
    const auto t1 = Clock::now();
    out.push_back(record(3, "full_aut_order", g.space()->label(), "|Aut Oi(2,q)| = 2^((q+1)/2) ((q-1)/2)!", value,
                         full_aut_order(g, o.search_budget).str(), t1));
  }
  return out;
}

std::vector<CheckRecord> check_delta0_theorem(GraphCache& cache, const VerifyOptions& o) {
  std::vector<CheckRecord> out;
  const OiGraph& g = cache.get({2, 0, DiscVariant::none, "3"});
  const std::string label = g.space()->label();
  const std::string anchor = "Aut(Oi(2nu,q)) = PO.E with the delta=0 order formula";
  auto t0 = Clock::now();
  out.push_back(record(4, "group_order(PO.E)", label, anchor, "576",
                       group_order(po_e_generators(g), g.size()).order.str(), t0));
  t0 = Clock::now();
  out.push_back(
      record(4, "aut_order_formula", label, anchor, "576", aut_order_formula(2, 0, *g.space()->field()).value->str(), t0));
  t0 = Clock::now();
  out.push_back(record(4, "full_aut_order", label, anchor, "576", full_aut_order(g, o.search_budget).str(), t0));
  return out;
}

std::vector<CheckRecord> check_delta1_order(GraphCache& cache) {
  std::vector<CheckRecord> out;
  const OiGraph& g = cache.get({2, 1, DiscVariant::one, "3"});
  const std::string anchor = "|Aut Oi(2nu+1,q)| = q^(nu^2) prod(q^i-1) prod(q^i+1) [F_q:F_p]";
  auto t0 = Clock::now();
  out.push_back(record(5, "group_order(PO.E)", g.space()->label(), anchor, "51840",
                       group_order(po_e_generators(g), g.size()).order.str(), t0));
  t0 = Clock::now();
  out.push_back(record(5, "aut_order_formula", g.space()->label(), anchor, "51840",
                       aut_order_formula(2, 1, *g.space()->field()).value->str(), t0));
  return out;
}

const std::vector<SpaceSpec> kOrbitSpaces = {
    {2, 0, DiscVariant::none, "3"}, {1, 1, DiscVariant::one, "3"}, {1, 1, DiscVariant::z, "3"}};

std::string partition_summary(const std::vector<std::vector<std::size_t>>& p) {
  std::ostringstream os;
  os << p.size() << " classes";
  return os.str();
}

std::vector<CheckRecord> check_vertex_orbits(GraphCache& cache) {
  std::vector<CheckRecord> out;
  for (const auto& s : kOrbitSpaces) {
    const auto t0 = Clock::now();
    const OiGraph& g = cache.get(s);
    const auto orbs = vertex_orbits(g, po_e_generators(g));
    const auto fibers = type_fibers(g);
    CheckRecord r = record(6, "vertex orbits vs types", g.space()->label(), "each subspace type is exactly one orbit",
                           partition_summary(fibers) + ", equal", "", t0);
    r.computed = partition_summary(orbs) + (same_partition(orbs, fibers) ? ", equal" : ", different");
    r.status = r.computed == r.expected ? CheckStatus::pass : CheckStatus::fail;
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<CheckRecord> check_edge_orbits(GraphCache& cache) {
  std::vector<CheckRecord> out;
  for (const auto& s : kOrbitSpaces) {
    const auto t0 = Clock::now();
    const OiGraph& g = cache.get(s);
    const auto orbs = edge_orbits(g, po_e_generators(g)).orbits;
    const auto fibers = edge_type_fibers(g);
    CheckRecord r =
        record(7, "edge orbits vs type triples", g.space()->label(),
               "edges are in one orbit iff endpoint types and sum type agree", partition_summary(fibers) + ", equal",
               "", t0);
    r.computed = partition_summary(orbs) + (same_partition(orbs, fibers) ? ", equal" : ", different");
    r.status = r.computed == r.expected ? CheckStatus::pass : CheckStatus::fail;
    out.push_back(std::move(r));
  }
  return out;
}

std::size_t witt_mismatches(const MatFq& m) {
  const auto closed = witt_decompose(m);
  const int oracle = witt_bruteforce_oracle(m);
  const int rank = static_cast<int>(rref(m).rank);
  return (closed.s != oracle || closed.rank != rank || closed.rank != 2 * closed.s + closed.gamma) ? 1 : 0;
}

std::vector<CheckRecord> check_witt_oracle() {
  std::vector<CheckRecord> out;
  {
    const auto t0 = Clock::now();
    auto f3 = Field::make(3, 1);
    std::size_t bad = 0, total = 0;
    for (int code = 0; code < 729; ++code) {
      int c = code;
      std::vector<long long> u(6);
      for (auto& x : u) {
        x = c % 3;
        c /= 3;
      }
      const auto m = MatFq::from_ints(f3, {{u[0], u[1], u[2]}, {u[1], u[3], u[4]}, {u[2], u[4], u[5]}});
      bad += witt_mismatches(m);
      ++total;
    }
    out.push_back(record(8, "all symmetric 3x3 over F_3", "F_3", "derived oracle", "0 mismatches of 729",
                         std::to_string(bad) + " mismatches of " + std::to_string(total), t0));
  }
  {
    const auto t0 = Clock::now();
    auto f5 = Field::make(5, 1);
    std::mt19937_64 rng(20240531);
    std::uniform_int_distribution<int> digit(0, 4);
    std::size_t bad = 0;
    for (int trial = 0; trial < 500; ++trial) {
      MatFq m(f5, 4, 4);
      for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = i; j < 4; ++j) {
          m(i, j) = f5->from_int(digit(rng));
          m(j, i) = m(i, j);
        }
      }
      bad += witt_mismatches(m);
    }
    out.push_back(record(8, "random symmetric 4x4 over F_5", "F_5", "derived oracle", "0 mismatches of 500",
                         std::to_string(bad) + " mismatches of 500", t0));
  }
  return out;
}

std::vector<CheckRecord> check_reflection_closure() {
  const auto t0 = Clock::now();
  auto space = make_space({2, 0, DiscVariant::none, "3"});
  return {record(9, "reflection closure", space->label(), "|PO_2nu(F_q)| = |O_2nu(F_q)| / 2", "1152",
                 matrix_group_order(*space, orthogonal_generators(space)).str(), t0)};
}

std::vector<CheckRecord> check_parameter_recovery(GraphCache& cache) {
  std::vector<CheckRecord> out;
  const std::string anchor = "max clique of dim-1 vertices gives nu+delta and delta; point count gives q";
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, std::set<std::tuple<int, int, std::uint32_t>>> seen;
  for (const auto& s : kConnectivitySpaces) {
    const auto t0 = Clock::now();
    const OiGraph& g = cache.get(s);
    const OiGraph sub = dim1_subgraph(g);
    const auto clique = max_clique_dim1(sub);
    const auto& sp = *g.space();
    const std::string expected =
        "(" + std::to_string(sp.nu() + sp.delta()) + "," + std::to_string(sp.delta()) + ")";
    const std::string computed = "(" + std::to_string(clique.size) + "," + std::to_string(clique.anisotropic) + ")";
    out.push_back(record(10, "max_clique_dim1 (|M|,|N|)", sp.label(), anchor, expected, computed, t0));
    seen[{clique.size, clique.anisotropic, sub.size()}].insert({sp.nu(), sp.delta(), sp.field()->q()});
  }
  const auto t0 = Clock::now();
  std::size_t clashes = 0;
  for (const auto& [invariant, params] : seen) clashes += params.size() > 1 ? 1 : 0;
  out.push_back(record(10, "distinct parameters give distinct invariants", "criterion-1 spaces", anchor,
                       "0 collisions", std::to_string(clashes) + " collisions", t0));
  return out;
}

std::vector<CheckRecord> check_e1_finding(GraphCache& cache) {
  std::vector<CheckRecord> out;
  for (const std::string field : {"3", "5"}) {
    const auto t0 = Clock::now();
    const OiGraph& g = cache.get({1, 0, DiscVariant::none, field});
    const Field& f = *g.space()->field();
    // Vertices [(1,x)]: the graph must follow x + y = 0.
    std::size_t definitional_mismatch = 0, product_disagreements = 0;
    for (std::size_t u = 0; u < g.size(); ++u) {
      for (std::size_t v = u; v < g.size(); ++v) {
        const MatFq& a = g.vertex(u).basis();
        const MatFq& b = g.vertex(v).basis();
        if (a(0, 0) != f.one() || b(0, 0) != f.one()) continue;
        const Elem x = a(0, 1), y = b(0, 1);
        const bool sum_rule = f.add(x, y) == f.zero();
        const bool product_rule = f.mul(x, y) == f.neg(f.one());
        if (g.has_edge(u, v) != sum_rule) ++definitional_mismatch;
        if (product_rule != sum_rule) ++product_disagreements;
      }
    }
    out.push_back(record(11, "adjacency follows A S B^T = 0", g.space()->label(), "edge iff A S B^T = 0",
                         "0 mismatches", std::to_string(definitional_mismatch) + " mismatches", t0));
    CheckRecord finding = record(11, "finding: xy=-1 versus x+y=0", g.space()->label(),
                                 "worked example states [(1,x)]-[(1,y)] iff xy=-1",
                                 "edge iff xy=-1", "edge iff x+y=0", t0);
    finding.computed += "; the two rules disagree on " + std::to_string(product_disagreements) + " vertex pairs";
    finding.status = CheckStatus::outside_coverage;
    out.push_back(std::move(finding));
  }
  return out;
}

std::vector<CheckRecord> dispatch(int id, GraphCache& cache, const VerifyOptions& o) {
  switch (id) {
    case 1:
      return check_connectivity(cache, o);
    case 2:
      return check_dim1_counts(cache);
    case 3:
      return check_nu1_orders(cache, o);
    case 4:
      return check_delta0_theorem(cache, o);
    case 5:
      return check_delta1_order(cache);
    case 6:
      return check_vertex_orbits(cache);
    case 7:
      return check_edge_orbits(cache);
    case 8:
      return check_witt_oracle();
    case 9:
      return check_reflection_closure();
    case 10:
      return check_parameter_recovery(cache);
    case 11:
      return check_e1_finding(cache);
    default:
      throw Error("unknown acceptance item " + std::to_string(id));
  }
}

}  // namespace

std::vector<CheckRecord> run_criterion(int id, const VerifyOptions& options) {
  GraphCache cache(options);
  return dispatch(id, cache, options);
}

VerifyReport run_verify(const VerifyOptions& options) {
  std::vector<int> ids;
  if (options.suite == "core") {
    ids = {1, 2, 3, 4, 6, 7, 8, 9, 10, 11};
  } else if (options.suite == "extended") {
    ids = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11};
  } else {
    throw Error("unknown suite '" + options.suite + "' (expected core or extended)");
  }
  GraphCache cache(options);
  VerifyReport report;
  report.suite = options.suite;
  for (int id : ids) {
    for (auto& r : dispatch(id, cache, options)) report.records.push_back(std::move(r));
  }
  return report;
}

}  // namespace oigraph
