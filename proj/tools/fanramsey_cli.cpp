// fanramsey: command-line front end.
//
// Exit codes: 0 success / all claims hold, 1 a claim or verification failed,
// 2 usage or unsupported parameters, 3 I/O or parse failure.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "fanramsey/bigraphic.hpp"
#include "fanramsey/constructions.hpp"
#include "fanramsey/fans.hpp"
#include "fanramsey/graph_io.hpp"
#include "fanramsey/matching.hpp"
#include "fanramsey/ramsey.hpp"
#include "fanramsey/report.hpp"

using namespace fanramsey;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitClaimsFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;
constexpr std::uint64_t kDefaultSeed = 20240229;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Common {
  bool json = false;
  std::string format = "edgelist";
};

void emit(const Common& c, const json& j, const std::string& text) {
  if (c.json) {
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << text;
  }
}

std::string join_ints(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

std::string set_text(const std::vector<Vertex>& v) { return "{" + join_ints(v) + "}"; }

std::string fan_text(const FanWitness& w) {
  std::ostringstream out;
  out << "centre " << w.center << ", spokes";
  for (auto [a, b] : w.spokes) out << ' ' << a << '-' << b;
  return out.str();
}

std::string report_text(const WitnessReport& r) {
  std::ostringstream out;
  out << "N = " << r.N << '\n';
  for (const auto& c : r.claims) {
    out << (c.holds ? "  holds  " : "  FAILS  ") << c.property;
    if (!c.holds) out << "  " << c.certificate.dump();
    out << '\n';
  }
  out << (r.bound_implied ? "certified: " + *r.bound_implied : std::string("no bound certified")) << '\n';
  return out.str();
}

int default_workers() {
  if (const char* env = std::getenv("FANRAMSEY_WORKERS")) {
    try {
      const int w = std::stoi(env);
      if (w >= 1) return w;
    } catch (const std::exception&) {
    }
    throw UsageError(std::string("FANRAMSEY_WORKERS must be a positive integer, got '") + env + "'");
  }
  return static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
}

Target parse_target(const std::string& kind, const std::string& size) {
  int s = 0;
  try {
    s = std::stoi(size);
  } catch (const std::exception&) {
    throw UsageError("target size must be an integer, got '" + size + "'");
  }
  if (s < 1) throw UsageError("target size must be positive");
  if (kind == "star") return Target::star(s);
  if (kind == "fan") return Target::fan(s);
  throw UsageError("target kind must be 'star' or 'fan', got '" + kind + "'");
}

// ---- construct --------------------------------------------------------------

struct ConstructArgs {
  std::string kind;
  int m = 0;
  int n = 0;
  int k = 0;
  std::string out;
};

int cmd_construct(const Common& c, const ConstructArgs& a) {
  const GraphFormat fmt = parse_format(c.format);
  json j{{"kind", a.kind}};
  std::ostringstream text;
  bool ok = true;
  Graph written;

  if (a.kind == "star-fan" || a.kind == "star-fan-special") {
    const StarFanConstruction s = a.kind == "star-fan" ? star_fan_lower(a.m, a.n) : star_fan_lower_special(a.n);
    const WitnessReport r = verify_star_fan_witness(s.coloring, s.params.m, s.params.n);
    ok = r.all_hold();
    j["params"] = to_json(s.params);
    j["verification"] = to_json(r);
    written = s.coloring.red();
    const auto& p = s.params;
    text << a.kind << " colouring for m=" << p.m << ", n=" << p.n << '\n'
         << "  a=" << p.a << " b=" << p.b << " sigma=" << p.sigma << " N=" << p.N << '\n'
         << "  blocks X1=[" << p.x1.first << "," << p.x1.first + p.x1.size << ") X2=[" << p.x2.first << ","
         << p.x2.first + p.x2.size << ") Y1=[" << p.y1.first << "," << p.y1.first + p.y1.size << ") Y2=["
         << p.y2.first << "," << p.y2.first + p.y2.size << ")\n"
         << "  claimed bound (3m+sqrt(m^2+8n^2))/2-8 = " << p.claimed_bound << '\n'
         << report_text(r);
  } else if (a.kind == "chromatic") {
    const TwoColoring k = chromatic_lower(a.n);
    const WitnessReport r = verify_fan_fan_witness(k, a.n);
    ok = r.all_hold();
    j["params"] = {{"n", a.n}, {"N", k.order()}};
    j["verification"] = to_json(r);
    written = k.red();
    text << "two red K_" << 2 * a.n << " joined in blue, N=" << k.order() << '\n' << report_text(r);
  } else if (a.kind == "turan") {
    const TuranConstruction t = turan_lower(a.n, a.k);
    const long long ex = efgg_extremal_number(a.n, a.k);
    j["params"] = {{"n", a.n}, {"k", a.k}, {"regime", to_string(t.regime)}, {"part_sizes", t.part_sizes}};
    j["edges"] = t.graph.size();
    j["fan_free"] = true;  // turan_lower refuses to return otherwise
    j["extremal_number_small_k"] = ex;
    written = t.graph;
    text << "F_" << a.k << "-free graph on " << a.n << " vertices (" << to_string(t.regime) << ")\n"
         << "  edges " << t.graph.size() << ", min degree " << t.graph.min_degree() << ", max degree "
         << t.graph.max_degree() << '\n';
    if (!t.part_sizes.empty()) text << "  parts " << join_ints(t.part_sizes) << '\n';
    text << "  small-k extremal number floor(n^2/4)+k^2-k or k^2-3k/2: " << ex << '\n';
  } else {
    throw UsageError("unknown construction '" + a.kind + "'");
  }

  j["order"] = written.order();
  if (!a.out.empty()) {
    write_graph(a.out, written, fmt);
    text << "wrote " << a.out << '\n';
  } else {
    std::vector<json> edges;
    for (auto [u, v] : written.edges()) edges.push_back({u, v});
    j[a.kind == "turan" ? "graph_edges" : "red_edges"] = edges;
    text << format_graph(written, fmt);
  }
  emit(c, j, text.str());
  return ok ? kExitOk : kExitClaimsFail;
}

// ---- verify -----------------------------------------------------------------

int cmd_verify(const Common& c, const std::string& input, std::optional<int> m, int n) {
  const TwoColoring k = read_coloring(input, parse_format(c.format));
  const WitnessReport r = m ? verify_star_fan_witness(k, *m, n) : verify_fan_fan_witness(k, n);
  json j = to_json(r);
  j["mode"] = m ? "star-fan" : "fan-fan";
  emit(c, j, report_text(r));
  return r.all_hold() ? kExitOk : kExitClaimsFail;
}

// ---- decompose --------------------------------------------------------------

int cmd_decompose(const Common& c, const std::string& input) {
  const Graph g = read_graph(input, parse_format(c.format));
  const EGPartition eg = edmonds_gallai(g);
  std::ostringstream text;
  text << "A = " << set_text(eg.A) << "\nC = " << set_text(eg.C) << "\nD =";
  for (const auto& d : eg.D) text << ' ' << set_text(d);
  text << "\np = " << eg.p() << "\ndeficiency = " << eg.deficiency << "\nnu = " << eg.nu << '\n';
  emit(c, to_json(eg), text.str());
  return kExitOk;
}

// ---- realize ----------------------------------------------------------------

struct RealizeArgs {
  std::vector<int> xs;
  std::vector<int> ys;
  std::vector<int> interval;  // a, b, c, d, sigma
};

std::string sided_edges(const BipartiteRealization& r) {
  std::ostringstream out;
  out << "# A side: 0.." << r.a - 1 << ", B side: " << r.a << ".." << r.a + r.b - 1 << '\n';
  out << format_edge_list(r.graph);
  return out.str();
}

int cmd_realize(const Common& c, const RealizeArgs& a) {
  if (!a.interval.empty()) {
    if (a.interval.size() != 5) throw UsageError("--interval takes a,b,c,d,sigma");
    const IntervalRealization r =
        realize_interval({a.interval[0], a.interval[1], a.interval[2], a.interval[3], a.interval[4]});
    std::ostringstream text;
    text << "ac - bd = " << r.excess << " = " << r.q << "*" << (r.a_side_reduced ? "a" : "b") << " + " << r.r
         << "\nA degrees " << join_ints(r.degrees.xs) << "\nB degrees " << join_ints(r.degrees.ys) << '\n'
         << sided_edges(r.realization);
    emit(c, to_json(r), text.str());
    return kExitOk;
  }
  const DegreePairSpec spec{a.xs, a.ys};
  const BigraphicCertificate cert = is_bigraphic(spec);
  if (!cert) {
    std::ostringstream text;
    text << "not bigraphic: " << to_string(cert.failure);
    if (cert.failure == BigraphicFailure::PrefixViolated) {
      text << " at k=" << cert.violated_k << " (" << cert.lhs << " > " << cert.rhs << ")";
    }
    text << '\n';
    emit(c, json{{"certificate", to_json(cert)}}, text.str());
    return kExitClaimsFail;
  }
  const BipartiteRealization r = realize_bigraphic(spec);
  emit(c, json{{"certificate", to_json(cert)}, {"realization", to_json(r)}}, sided_edges(r));
  return kExitOk;
}

// ---- fan-find ---------------------------------------------------------------

struct FanFindArgs {
  std::string input;
  int k = 1;
  bool coloring = false;
  int trials = 0;
  std::uint64_t seed = kDefaultSeed;
};

int cmd_fan_find_trials(const Common& c, const FanFindArgs& a) {
  // Uniform colourings of K_{3k+1}, kept only when some vertex has 3k
  // neighbours in one colour.
  std::mt19937_64 rng(a.seed);
  std::bernoulli_distribution coin(0.5);
  const int order = 3 * a.k + 1;
  int found = 0;
  long long drawn = 0;
  for (int t = 0; t < a.trials; ++t) {
    std::optional<TwoColoring> k;
    while (!k) {
      ++drawn;
      GraphBuilder red(order);
      std::vector<int> deg(static_cast<std::size_t>(order), 0);
      for (Vertex u = 0; u < order; ++u)
        for (Vertex v = u + 1; v < order; ++v)
          if (coin(rng)) {
            red.add_edge(u, v);
            ++deg[static_cast<std::size_t>(u)];
            ++deg[static_cast<std::size_t>(v)];
          }
      for (int d : deg)
        if (d >= 3 * a.k || order - 1 - d >= 3 * a.k) {
          k.emplace(red.build());
          break;
        }
    }
    const HighDegreeFan h = high_degree_fan(*k, a.k);
    if (h.fan && !validate_fan(k->graph(h.fan->color), h.fan->witness, a.k)) ++found;
  }
  json j{{"n", a.k}, {"trials", a.trials}, {"seed", a.seed}, {"found", found}, {"colourings_drawn", drawn}};
  std::ostringstream text;
  text << "monochromatic F_" << a.k << " found in " << found << "/" << a.trials << " conditioned colourings (seed "
       << a.seed << ")\n";
  emit(c, j, text.str());
  return found == a.trials ? kExitOk : kExitClaimsFail;
}

int cmd_fan_find(const Common& c, const FanFindArgs& a) {
  if (a.k < 1) throw UsageError("--k must be positive");
  if (a.trials > 0) return cmd_fan_find_trials(c, a);
  if (a.input.empty()) throw UsageError("fan-find needs an input file or --trials");
  const GraphFormat fmt = parse_format(c.format);
  json j{{"k", a.k}};
  std::string text;
  if (a.coloring) {
    const TwoColoring k = read_coloring(a.input, fmt);
    const auto mono = find_mono_fan(k, a.k);
    j["found"] = mono.has_value();
    if (mono) j["fan"] = to_json(*mono);
    text = mono ? std::string(color_name(mono->color)) + " F_" + std::to_string(a.k) + ": " + fan_text(mono->witness)
                : "no monochromatic F_" + std::to_string(a.k);
  } else {
    const Graph g = read_graph(a.input, fmt);
    const auto w = find_fan(g, a.k);
    j["found"] = w.has_value();
    if (w) j["fan"] = to_json(*w);
    text = w ? "F_" + std::to_string(a.k) + ": " + fan_text(*w) : "no F_" + std::to_string(a.k);
  }
  emit(c, j, text + '\n');
  return kExitOk;
}

// ---- search -----------------------------------------------------------------

int cmd_search(const Common& c, const std::vector<std::string>& pattern, int cap, std::optional<int> workers) {
  if (pattern.size() != 4) throw UsageError("search takes <kind> <size> <kind> <size>, blue target first");
  const Target blue = parse_target(pattern[0], pattern[1]);
  const Target red = parse_target(pattern[2], pattern[3]);
  const int w = workers ? *workers : default_workers();
  if (w < 1) throw UsageError("--workers must be positive");
  const SearchResult r = brute_force_ramsey(blue, red, cap, w);
  json j = to_json(r);
  j["blue"] = blue.name();
  j["red"] = red.name();
  j["cap"] = cap;
  const std::string rel = r.exact ? " = " : " >= ";
  emit(c, j, "R(" + blue.name() + ", " + red.name() + ")" + rel + std::to_string(r.value) + '\n');
  return kExitOk;
}

// ---- formula ----------------------------------------------------------------

struct FormulaArgs {
  std::string kind;
  int m = 0;
  int n = 0;
  int k = 0;
  double epsilon = 0.1;
};

int cmd_formula(const Common& c, const FormulaArgs& a) {
  std::ostringstream text;
  text.precision(10);
  if (a.kind == "star-fan") {
    if (a.m < 1 || a.n < 1) throw UsageError("star-fan formula needs m, n >= 1");
    const FormulaResult f = star_fan_formula(a.m, a.n);
    text << "R(K_{1," << a.m << "}, F_" << a.n << ") [" << to_string(f.regime) << "]: ";
    if (f.exact) {
      text << "= " << f.lower << '\n';
    } else {
      text << "in (" << f.lower << ", " << f.upper << ")\n";
    }
    emit(c, to_json(f), text.str());
  } else if (a.kind == "fan-bounds") {
    if (a.n < 1) throw UsageError("fan-bounds needs n >= 1");
    if (!(a.epsilon > 0)) throw UsageError("--epsilon must be positive");
    const FanRamseyBounds b = fan_ramsey_bounds(a.n, a.epsilon);
    text << "R(F_" << a.n << ") > " << b.lower << "\nR(F_" << a.n << ") <= " << b.upper << " (needs n >= " << b.gate
         << ": " << (b.upper_valid ? "satisfied" : "NOT satisfied") << ")\n";
    emit(c, to_json(b), text.str());
  } else if (a.kind == "dirac") {
    const DiracThreshold t = dirac_threshold(a.n, a.k);
    text << "minimum degree forcing F_" << a.k << " on " << a.n << " vertices: " << t.value << " (case "
         << t.case_label << (t.constant_unresolved ? ", up to an additive constant" : "") << ")\n";
    emit(c, to_json(t), text.str());
  } else {
    throw UsageError("unknown formula '" + a.kind + "'");
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fan and star-fan Ramsey constructions, verifiers and oracles"};
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_flag("--json", common.json, "Emit the report as JSON");
  app.add_option("--format", common.format, "Graph file format: edgelist or graph6")->capture_default_str();

  ConstructArgs construct;
  auto* cons = app.add_subcommand("construct", "Build a lower-bound colouring or F_k-free graph");
  cons->add_option("kind", construct.kind, "star-fan, star-fan-special, chromatic or turan")
      ->required()
      ->check(CLI::IsMember({"star-fan", "star-fan-special", "chromatic", "turan"}));
  cons->add_option("--m", construct.m, "Star size");
  cons->add_option("--n", construct.n, "Fan size, or vertex count for turan")->required();
  cons->add_option("--k", construct.k, "Fan size for turan");
  cons->add_option("--out", construct.out, "Write the colouring (red graph) or graph here");

  std::string verify_input;
  std::optional<int> verify_m;
  int verify_n = 0;
  auto* ver = app.add_subcommand("verify", "Check a colouring's lower-bound claims");
  ver->add_option("input", verify_input, "Colouring file (red graph)")->required();
  ver->add_option("--m", verify_m, "Star size; omit for fan-vs-fan mode");
  ver->add_option("--n", verify_n, "Fan size")->required()->check(CLI::PositiveNumber);

  std::string decompose_input;
  auto* dec = app.add_subcommand("decompose", "Gallai-Edmonds decomposition of a graph");
  dec->add_option("input", decompose_input, "Graph file")->required();

  RealizeArgs realize;
  auto* rea = app.add_subcommand("realize", "Bipartite degree realization");
  auto* xs_opt = rea->add_option("--xs", realize.xs, "A-side degrees, comma separated")->delimiter(',');
  auto* ys_opt = rea->add_option("--ys", realize.ys, "B-side degrees, comma separated")->delimiter(',');
  auto* iv_opt = rea->add_option("--interval", realize.interval, "a,b,c,d,sigma for the interval realization")
                     ->delimiter(',');
  xs_opt->needs(ys_opt);
  ys_opt->needs(xs_opt);
  iv_opt->excludes(xs_opt)->excludes(ys_opt);

  FanFindArgs fan;
  auto* ff = app.add_subcommand("fan-find", "Find F_k in a graph or a monochromatic F_k in a colouring");
  ff->add_option("input", fan.input, "Graph or colouring file");
  ff->add_option("--k", fan.k, "Fan size")->required();
  ff->add_flag("--coloring", fan.coloring, "Treat the input as a colouring and search both colours");
  ff->add_option("--trials", fan.trials, "Conditioned random colourings of K_{3k+1} to test instead of a file")
      ->check(CLI::NonNegativeNumber);
  ff->add_option("--seed", fan.seed, "Seed for --trials")->capture_default_str();

  std::vector<std::string> pattern;
  int cap = 0;
  std::optional<int> workers;
  auto* sea = app.add_subcommand("search", "Exhaustive small Ramsey number search");
  sea->add_option("pattern", pattern, "<kind> <size> <kind> <size>: blue target, then red target")->expected(4);
  sea->add_option("--cap", cap, "Largest order searched")->required();
  sea->add_option("--workers", workers, "Worker threads (default $FANRAMSEY_WORKERS or all cores)");

  FormulaArgs formula;
  auto* frm = app.add_subcommand("formula", "Evaluate closed-form bounds");
  frm->add_option("kind", formula.kind, "star-fan, fan-bounds or dirac")
      ->required()
      ->check(CLI::IsMember({"star-fan", "fan-bounds", "dirac"}));
  frm->add_option("--m", formula.m, "Star size");
  frm->add_option("--n", formula.n, "Fan size or vertex count");
  frm->add_option("--k", formula.k, "Fan size for dirac");
  frm->add_option("--epsilon", formula.epsilon, "Slack in the upper bound")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*cons) return cmd_construct(common, construct);
    if (*ver) return cmd_verify(common, verify_input, verify_m, verify_n);
    if (*dec) return cmd_decompose(common, decompose_input);
    if (*rea) {
      if (realize.interval.empty() && realize.xs.empty() && realize.ys.empty()) {
        throw UsageError("realize needs --xs/--ys or --interval");
      }
      return cmd_realize(common, realize);
    }
    if (*ff) return cmd_fan_find(common, fan);
    if (*sea) return cmd_search(common, pattern, cap, workers);
    if (*frm) return cmd_formula(common, formula);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UnsupportedRange& e) {
    std::cerr << "unsupported parameters: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CapExceeded& e) {
    std::cerr << "search cap exceeded: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitIo;
  } catch (const IoError& e) {
    std::cerr << "I/O error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::logic_error& e) {
    std::cerr << "verification failed: " << e.what() << '\n';
    return kExitClaimsFail;
  }
  return kExitUsage;
}
