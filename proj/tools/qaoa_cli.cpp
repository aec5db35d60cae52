// Command-line front end. Everything goes through the shared-library C API;
// no direct linkage against the C++ core.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qaoa/capi.h"

namespace {

constexpr double kPi = 3.14159265358979323846;

// ---------------------------------------------------------------------------
// Deterministic JSON-style document writer: floats at 17 significant digits,
// fixed key order, no locale surprises. Re-running a subcommand with the same
// parameters reproduces the document byte for byte.
class DocWriter {
 public:
  std::string str() const { return out_.str(); }

  void begin_object() { open('{'); }
  void end_object() { close('}'); }
  void begin_array() { open('['); }
  void end_array() { close(']'); }

  void key(const std::string& k) {
    comma();
    out_ << '"' << k << "\":";
    pending_value_ = true;
  }
  void value(double v) {
    comma();
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    out_ << buf;
  }
  void value(int v) {
    comma();
    out_ << v;
  }
  void value(long long v) {
    comma();
    out_ << v;
  }
  void value(std::uint64_t v) {
    comma();
    out_ << v;
  }
  void value(bool v) {
    comma();
    out_ << (v ? "true" : "false");
  }
  void value(const std::string& v) {
    comma();
    out_ << '"';
    for (char c : v) {
      if (c == '"' || c == '\\') out_ << '\\';
      out_ << c;
    }
    out_ << '"';
  }
  void value(const char* v) { value(std::string(v)); }
  void null_value() {
    comma();
    out_ << "null";
  }

  template <typename T>
  void field(const std::string& k, const T& v) {
    key(k);
    value(v);
  }
  void field(const std::string& k, const std::vector<double>& vs) {
    key(k);
    begin_array();
    for (double v : vs) value(v);
    end_array();
  }

 private:
  void open(char c) {
    comma();
    out_ << c;
    first_.push_back(true);
    pending_value_ = false;
  }
  void close(char c) {
    out_ << c;
    first_.pop_back();
  }
  void comma() {
    if (pending_value_) {
      pending_value_ = false;
      return;
    }
    if (!first_.empty()) {
      if (!first_.back()) out_ << ',';
      first_.back() = false;
    }
  }

  std::ostringstream out_;
  std::vector<bool> first_;
  bool pending_value_ = false;
};

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// ---------------------------------------------------------------------------
// Errors and exit codes: 2 usage, 3 domain.
struct CliError {
  int exit_code;
  std::string code;
  std::string message;
};

[[noreturn]] void usage_error(const std::string& msg) {
  throw CliError{2, "E_USAGE", msg};
}

[[noreturn]] void domain_error(const std::string& code, const std::string& msg) {
  throw CliError{3, code, msg};
}

void check(qaoa_status st, const std::string& context) {
  if (st == QAOA_OK) return;
  const std::string msg = context + ": " + qaoa_last_error();
  switch (st) {
    case QAOA_ERR_PARSE:
      domain_error("E_PARSE", msg);
    case QAOA_ERR_DOMAIN:
      domain_error("E_DOMAIN", msg);
    default:
      domain_error("E_INTERNAL", msg);
  }
}

// Angle literals: plain radians or a multiple of pi with a "pi" suffix
// (e.g. 0.375pi). Lists are comma-separated.
double parse_angle(std::string token) {
  while (!token.empty() && (token.front() == ' ' || token.front() == '\t')) token.erase(0, 1);
  while (!token.empty() && (token.back() == ' ' || token.back() == '\t')) token.pop_back();
  double scale = 1.0;
  if (token.size() >= 2 && (token.ends_with("pi") || token.ends_with("PI"))) {
    scale = kPi;
    token.resize(token.size() - 2);
    if (token.empty() || token == "-" || token == "+") token += "1";
  }
  try {
    std::size_t used = 0;
    const double v = std::stod(token, &used);
    if (used != token.size()) throw std::invalid_argument(token);
    return v * scale;
  } catch (const std::exception&) {
    usage_error("bad angle literal: '" + token + "'");
  }
}

std::vector<double> parse_angle_list(const std::string& list) {
  std::vector<double> out;
  std::string token;
  std::istringstream in(list);
  while (std::getline(in, token, ',')) out.push_back(parse_angle(token));
  if (out.empty()) usage_error("empty angle list");
  return out;
}

// First half gammas, second half betas.
void split_angles(const std::vector<double>& all, std::vector<double>& gammas,
                  std::vector<double>& betas) {
  if (all.size() % 2 != 0)
    usage_error("angle list must hold 2p values (gamma_1..gamma_p, beta_1..beta_p)");
  const std::size_t p = all.size() / 2;
  gammas.assign(all.begin(), all.begin() + p);
  betas.assign(all.begin() + p, all.end());
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) domain_error("E_IO", "cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

using GraphHandle = std::unique_ptr<qaoa_graph, decltype(&qaoa_graph_free)>;

GraphHandle load_graph(const std::string& path) {
  const std::string text = read_file(path);
  qaoa_graph* g = nullptr;
  check(qaoa_graph_parse(text.c_str(), &g), "parsing " + path);
  return GraphHandle(g, &qaoa_graph_free);
}

int qubit_cap_from_env() {
  const char* env = std::getenv("QAOA_QUBIT_CAP");
  if (!env) return 0;  // library default
  char* end = nullptr;
  const long cap = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || cap < 1)
    domain_error("E_DOMAIN", "QAOA_QUBIT_CAP must be a positive integer");
  return static_cast<int>(cap);
}

std::string bits_to_string(std::uint64_t bits, int n) {
  std::string s(n, '0');
  for (int j = 0; j < n; ++j)
    if ((bits >> j) & 1u) s[j] = '1';
  return s;
}

struct Manifest {
  std::string subcommand;
  std::vector<std::pair<std::string, std::string>> params;  // preformatted values
  std::optional<std::uint64_t> seed;

  void add(const std::string& k, const std::string& v) { params.emplace_back(k, "\"" + v + "\""); }
  void add(const std::string& k, int v) { params.emplace_back(k, std::to_string(v)); }
  void add(const std::string& k, double v) { params.emplace_back(k, format_double(v)); }
  void add(const std::string& k, bool v) { params.emplace_back(k, v ? "true" : "false"); }
  void add(const std::string& k, const std::vector<double>& vs) {
    std::string s = "[";
    for (std::size_t i = 0; i < vs.size(); ++i) {
      if (i) s += ',';
      s += format_double(vs[i]);
    }
    params.emplace_back(k, s + "]");
  }

  std::string to_json() const {
    std::string s = "{\"subcommand\":\"" + subcommand + "\",\"parameters\":{";
    for (std::size_t i = 0; i < params.size(); ++i) {
      if (i) s += ',';
      s += "\"" + params[i].first + "\":" + params[i].second;
    }
    s += "},\"seed\":";
    s += seed ? std::to_string(*seed) : "null";
    s += ",\"version\":\"";
    s += qaoa_version();
    s += "\"}";
    return s;
  }
};

class WallClock {
 public:
  WallClock() : start_(std::chrono::steady_clock::now()) {}
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

void emit_document(const Manifest& manifest, const DocWriter& result, const WallClock& clock) {
  std::cout << "{\"manifest\":" << manifest.to_json() << ",\"result\":" << result.str() << "}\n";
  std::cerr << "# wall_ms=" << format_double(clock.ms()) << "\n";
}

// ---------------------------------------------------------------------------
// Subcommands.

struct EvalP1Args {
  std::string graph_file;
  std::string gamma, beta;
};

int run_eval_p1(const EvalP1Args& args) {
  WallClock clock;
  const double gamma = parse_angle(args.gamma);
  const double beta = parse_angle(args.beta);
  GraphHandle g = load_graph(args.graph_file);

  int count = 0;
  check(qaoa_graph_classify(g.get(), 0, &count, nullptr, nullptr, nullptr, nullptr), "classify");
  std::vector<int> d(count), e(count), f(count), chi(count);
  check(qaoa_graph_classify(g.get(), count, &count, d.data(), e.data(), f.data(), chi.data()),
        "classify");

  double total = 0.0;
  check(qaoa_graph_expectation_p1(g.get(), gamma, beta, &total), "eval-p1");
  const int edges = qaoa_graph_edge_count(g.get());

  Manifest m;
  m.subcommand = "eval-p1";
  m.add("graph", args.graph_file);
  m.add("gamma", gamma);
  m.add("beta", beta);

  DocWriter w;
  w.begin_object();
  w.field("n_vertices", qaoa_graph_vertex_count(g.get()));
  w.field("n_edges", edges);
  w.key("classes");
  w.begin_array();
  for (int i = 0; i < count; ++i) {
    double val = 0.0;
    check(qaoa_edge_expectation_p1(d[i], e[i], f[i], gamma, beta, &val), "edge expectation");
    w.begin_object();
    w.field("d", d[i]);
    w.field("e", e[i]);
    w.field("f", f[i]);
    w.field("chi", chi[i]);
    w.field("edge_expectation", val);
    w.end_object();
  }
  w.end_array();
  w.field("F", total);
  w.field("F_per_edge", edges > 0 ? total / edges : 0.0);
  w.field("r_lower_bound", edges > 0 ? total / edges : 0.0);
  w.end_object();
  emit_document(m, w, clock);
  return 0;
}

struct SimulateArgs {
  std::string graph_file;
  std::string convention = "maxcut";
  std::string angles;
  int samples = 0;
  std::uint64_t seed = 0;
};

int run_simulate(const SimulateArgs& args) {
  WallClock clock;
  if (args.convention != "maxcut" && args.convention != "ring")
    usage_error("--convention must be maxcut or ring");
  const qaoa_convention conv =
      args.convention == "maxcut" ? QAOA_CONVENTION_MAXCUT : QAOA_CONVENTION_RING;
  std::vector<double> gammas, betas;
  split_angles(parse_angle_list(args.angles), gammas, betas);
  GraphHandle g = load_graph(args.graph_file);
  const int cap = qubit_cap_from_env();

  double f = 0.0;
  check(qaoa_simulate_expectation(g.get(), conv, gammas.data(), betas.data(),
                                  static_cast<int>(gammas.size()), cap, &f),
        "simulate");

  Manifest m;
  m.subcommand = "simulate";
  m.add("graph", args.graph_file);
  m.add("convention", args.convention);
  m.add("gammas", gammas);
  m.add("betas", betas);
  m.add("samples", args.samples);
  if (args.samples > 0) m.seed = args.seed;

  const int n = qaoa_graph_vertex_count(g.get());
  const int edges = qaoa_graph_edge_count(g.get());
  DocWriter w;
  w.begin_object();
  w.field("n_vertices", n);
  w.field("n_edges", edges);
  w.field("p", static_cast<int>(gammas.size()));
  w.field("F", f);
  w.field("F_per_edge", edges > 0 ? f / edges : 0.0);
  if (args.samples > 0) {
    std::vector<std::uint64_t> bits(args.samples);
    std::vector<int> cuts(args.samples);
    check(qaoa_sample_bitstrings(g.get(), conv, gammas.data(), betas.data(),
                                 static_cast<int>(gammas.size()), args.samples, args.seed, cap,
                                 bits.data(), cuts.data()),
          "sampling");
    double mean = 0.0;
    for (int c : cuts) mean += c;
    mean /= args.samples;
    w.key("samples");
    w.begin_object();
    w.field("prng", "mt19937_64");
    w.field("seed", args.seed);
    w.field("count", args.samples);
    w.field("mean_cut", mean);
    w.key("items");
    w.begin_array();
    for (int i = 0; i < args.samples; ++i) {
      w.begin_object();
      w.field("bits", bits_to_string(bits[i], n));
      w.field("cut", cuts[i]);
      w.end_object();
    }
    w.end_array();
    w.end_object();
  }
  w.end_object();
  emit_document(m, w, clock);
  return 0;
}

struct RingEvalArgs {
  int n = 0;
  std::string angles;
  bool tilde = false;
};

int run_ring_eval(const RingEvalArgs& args) {
  WallClock clock;
  std::vector<double> gammas, betas;
  split_angles(parse_angle_list(args.angles), gammas, betas);
  if (args.tilde)
    for (double& gv : gammas) {
      double mapped_g = 0.0, mapped_b = 0.0;
      qaoa_convention_map(gv, 0.0, &mapped_g, &mapped_b);
      gv = mapped_g;
    }

  double f = 0.0, fps = 0.0, r = 0.0;
  check(qaoa_ring_expectation(args.n, gammas.data(), betas.data(),
                              static_cast<int>(gammas.size()), &f, &fps, &r),
        "ring-eval");

  Manifest m;
  m.subcommand = "ring-eval";
  m.add("n", args.n);
  m.add("gammas", gammas);
  m.add("betas", betas);
  m.add("tilde", args.tilde);

  DocWriter w;
  w.begin_object();
  w.field("p", static_cast<int>(gammas.size()));
  w.field("gammas", gammas);
  w.field("betas", betas);
  w.field("F", f);
  w.field("F_per_site", fps);
  w.field("r", r);
  w.field("tilde_F", qaoa_tilde_value(f, args.n));
  w.end_object();
  emit_document(m, w, clock);
  return 0;
}

qaoa_manifold parse_manifold(const std::string& name) {
  if (name == "full") return QAOA_MANIFOLD_FULL;
  if (name == "m1") return QAOA_MANIFOLD_M1;
  if (name == "m2") return QAOA_MANIFOLD_M2;
  usage_error("--manifold must be full, m1 or m2");
}

struct OptimizeArgs {
  int p = 1;
  std::string manifold = "m1";
  int starts = 0;  // 0: default
  std::uint64_t seed = 1;
  std::string warm_start_file;
};

std::vector<double> warm_start_from_file(const std::string& path) {
  const std::string text = read_file(path);
  try {
    const nlohmann::json doc = nlohmann::json::parse(text);
    const auto& optima = doc.at("result").at("optima");
    if (optima.empty()) domain_error("E_DOMAIN", "warm-start file holds no optima");
    return optima.at(0).at("free").get<std::vector<double>>();
  } catch (const CliError&) {
    throw;
  } catch (const std::exception& e) {
    domain_error("E_PARSE", "cannot read warm start from " + path + ": " + e.what());
  }
}

void write_optimize_result(DocWriter& w, const qaoa_opt_result* res, qaoa_manifold kind, int p,
                           const qaoa_optimizer_config& cfg) {
  const int free_count = qaoa_manifold_free_count(kind, p);
  w.begin_object();
  w.field("p", p);
  w.field("best_F_per_site", qaoa_opt_result_best_f_per_site(res));
  w.field("best_r", qaoa_opt_result_best_r(res));
  w.field("starts", qaoa_opt_result_starts(res));
  w.field("converged", qaoa_opt_result_converged(res));
  w.key("tolerances");
  w.begin_object();
  w.field("grad_tol", cfg.grad_tol);
  w.field("grad_step", cfg.grad_step);
  w.field("dedup_tol", cfg.dedup_tol);
  w.field("max_iterations", cfg.max_iterations);
  w.end_object();
  w.key("optima");
  w.begin_array();
  const int count = qaoa_opt_result_optimum_count(res);
  for (int i = 0; i < count; ++i) {
    std::vector<double> free_params(free_count), gammas(p), betas(p);
    double fps = 0.0;
    check(qaoa_opt_result_optimum(res, i, free_params.data(), gammas.data(), betas.data(), &fps),
          "optimum");
    w.begin_object();
    w.field("free", free_params);
    w.field("gammas", gammas);
    w.field("betas", betas);
    w.field("F_per_site", fps);
    w.end_object();
  }
  w.end_array();
  w.end_object();
}

int run_optimize(const OptimizeArgs& args) {
  WallClock clock;
  const qaoa_manifold kind = parse_manifold(args.manifold);
  qaoa_optimizer_config cfg;
  qaoa_optimizer_config_init(&cfg);
  if (args.starts > 0) cfg.starts = args.starts;

  std::vector<double> warm;
  if (!args.warm_start_file.empty()) warm = warm_start_from_file(args.warm_start_file);

  qaoa_opt_result* res = nullptr;
  check(qaoa_optimize(kind, args.p, &cfg, args.seed, warm.empty() ? nullptr : warm.data(),
                      static_cast<int>(warm.size()), &res),
        "optimize");
  std::unique_ptr<qaoa_opt_result, decltype(&qaoa_opt_result_free)> guard(res,
                                                                          &qaoa_opt_result_free);

  Manifest m;
  m.subcommand = "optimize";
  m.add("p", args.p);
  m.add("manifold", args.manifold);
  m.add("starts", cfg.starts);
  m.seed = args.seed;
  if (!args.warm_start_file.empty()) m.add("warm_start", args.warm_start_file);

  DocWriter w;
  write_optimize_result(w, res, kind, args.p, cfg);
  emit_document(m, w, clock);
  return 0;
}

struct ScanArgs {
  int p = 1;
  std::string manifold = "m1";
  int resolution = 64;
  int n = 0;
};

int run_scan(const ScanArgs& args) {
  WallClock clock;
  const qaoa_manifold kind = parse_manifold(args.manifold);
  qaoa_grid* grid = nullptr;
  check(qaoa_landscape_scan(kind, args.p, args.resolution, args.n, &grid), "scan");
  std::unique_ptr<qaoa_grid, decltype(&qaoa_grid_free)> guard(grid, &qaoa_grid_free);

  Manifest m;
  m.subcommand = "scan";
  m.add("p", args.p);
  m.add("manifold", args.manifold);
  m.add("resolution", args.resolution);
  m.add("n", qaoa_grid_ring_size(grid));

  const int dims = qaoa_grid_dims(grid);
  const int res = qaoa_grid_resolution(grid);
  const long long cells = qaoa_grid_cell_count(grid);

  std::cout << "# manifest: " << m.to_json() << "\n";
  // Header: free-parameter names in manifold order, then the value.
  for (int d = 0; d < dims; ++d) {
    int level = 0;
    const char* kindname;
    if (kind == QAOA_MANIFOLD_FULL) {
      kindname = d < args.p ? "gamma" : "beta";
      level = d < args.p ? d + 1 : d - args.p + 1;
    } else {
      kindname = d % 2 == 0 ? "gamma" : "beta";
      level = d / 2 + 1;
    }
    std::cout << kindname << level << ",";
  }
  std::cout << "F_per_site\n";

  std::vector<int> coords(dims, 0);
  for (long long flat = 0; flat < cells; ++flat) {
    long long rem = flat;
    for (int d = dims - 1; d >= 0; --d) {
      coords[d] = static_cast<int>(rem % res);
      rem /= res;
    }
    for (int d = 0; d < dims; ++d)
      std::cout << format_double(qaoa_grid_axis_value(grid, coords[d])) << ",";
    std::cout << format_double(qaoa_grid_value(grid, flat)) << "\n";
  }
  std::cerr << "# wall_ms=" << format_double(clock.ms()) << "\n";
  return 0;
}

struct ClassifyArgs {
  std::string graph_file;
};

int run_classify(const ClassifyArgs& args) {
  WallClock clock;
  GraphHandle g = load_graph(args.graph_file);
  int count = 0;
  check(qaoa_graph_classify(g.get(), 0, &count, nullptr, nullptr, nullptr, nullptr), "classify");
  std::vector<int> d(count), e(count), f(count), chi(count);
  check(qaoa_graph_classify(g.get(), count, &count, d.data(), e.data(), f.data(), chi.data()),
        "classify");

  Manifest m;
  m.subcommand = "classify";
  m.add("graph", args.graph_file);

  std::cout << "# manifest: " << m.to_json() << "\n";
  std::cout << "d,e,f,chi\n";
  for (int i = 0; i < count; ++i)
    std::cout << d[i] << "," << e[i] << "," << f[i] << "," << chi[i] << "\n";
  std::cerr << "# wall_ms=" << format_double(clock.ms()) << "\n";
  return 0;
}

struct TableArgs {
  int p_max = 5;
  std::uint64_t seed = 20;
};

int run_table(const TableArgs& args) {
  WallClock clock;
  if (args.p_max < 1) usage_error("--p-max must be >= 1");

  Manifest m;
  m.subcommand = "table";
  m.add("p_max", args.p_max);
  m.seed = args.seed;

  std::cout << "# manifest: " << m.to_json() << "\n";
  std::cout << "p,r,F_per_site";
  for (int i = 1; i <= args.p_max; ++i) {
    const char* kindname = (i % 2 == 1) ? "gamma" : "beta";
    std::cout << "," << kindname << (i + 1) / 2;
  }
  std::cout << "\n";

  qaoa_optimizer_config cfg;
  qaoa_optimizer_config_init(&cfg);

  // Level p seeds level p+1, as in the reference search protocol.
  std::vector<double> warm;
  for (int p = 1; p <= args.p_max; ++p) {
    qaoa_opt_result* res = nullptr;
    check(qaoa_optimize(QAOA_MANIFOLD_M1, p, &cfg, args.seed, warm.empty() ? nullptr : warm.data(),
                        static_cast<int>(warm.size()), &res),
          "optimize");
    std::unique_ptr<qaoa_opt_result, decltype(&qaoa_opt_result_free)> guard(
        res, &qaoa_opt_result_free);

    // Report the canonical schedule's interleaved prefix: it lies in
    // [0, pi/2) and still satisfies the manifold constraints mod pi/2.
    const int free_count = qaoa_manifold_free_count(QAOA_MANIFOLD_M1, p);
    std::vector<double> free_params(free_count), gammas(p), betas(p);
    double fps = qaoa_opt_result_best_f_per_site(res);
    if (qaoa_opt_result_optimum_count(res) > 0) {
      check(qaoa_opt_result_optimum(res, 0, nullptr, gammas.data(), betas.data(), &fps),
            "optimum");
      for (int i = 0; i < free_count; ++i)
        free_params[i] = i % 2 == 0 ? gammas[i / 2] : betas[i / 2];
    }

    char buf[64];
    std::snprintf(buf, sizeof buf, "%d,%.6f,%.6f", p, qaoa_opt_result_best_r(res), fps);
    std::cout << buf;
    for (int i = 0; i < free_count; ++i) {
      std::snprintf(buf, sizeof buf, ",%.4f", free_params[i] / kPi);
      std::cout << buf;
    }
    std::cout << "\n";
    warm = free_params;
  }
  std::cerr << "# wall_ms=" << format_double(clock.ms()) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"QAOA for MaxCut: state-vector oracle, level-1 closed forms, and the "
               "ring-of-disagrees pseudospin reduction"};
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::simple);

  EvalP1Args eval_args;
  auto* eval = app.add_subcommand("eval-p1", "Level-1 analytic F for a graph");
  eval->add_option("--graph", eval_args.graph_file, "graph file")->required();
  eval->add_option("--gamma", eval_args.gamma, "gamma (radians or e.g. 0.25pi)")->required();
  eval->add_option("--beta", eval_args.beta, "beta")->required();

  SimulateArgs sim_args;
  auto* sim = app.add_subcommand("simulate", "State-vector expectation (oracle)");
  sim->add_option("--graph", sim_args.graph_file, "graph file")->required();
  sim->add_option("--convention", sim_args.convention, "maxcut|ring");
  sim->add_option("--angles", sim_args.angles, "2p comma-separated angles")->required();
  sim->add_option("--samples", sim_args.samples, "number of bitstring samples");
  sim->add_option("--seed", sim_args.seed, "sampling seed");

  RingEvalArgs ring_args;
  auto* ring = app.add_subcommand("ring-eval", "Pseudospin evaluation on the ring");
  ring->add_option("--n", ring_args.n, "even ring size >= 4")->required();
  ring->add_option("--angles", ring_args.angles, "2p comma-separated angles")->required();
  ring->add_flag("--tilde", ring_args.tilde, "angles are in the cut-counting convention");

  OptimizeArgs opt_args;
  auto* opt = app.add_subcommand("optimize", "Multi-start gradient descent on the ring");
  opt->add_option("--p", opt_args.p, "level")->required();
  opt->add_option("--manifold", opt_args.manifold, "full|m1|m2");
  opt->add_option("--starts", opt_args.starts, "number of starts");
  opt->add_option("--seed", opt_args.seed, "start-point seed");
  opt->add_option("--warm-start", opt_args.warm_start_file, "previous optimize output");

  ScanArgs scan_args;
  auto* scan = app.add_subcommand("scan", "Landscape grid as CSV");
  scan->add_option("--p", scan_args.p, "level")->required();
  scan->add_option("--manifold", scan_args.manifold, "full|m1|m2");
  scan->add_option("--resolution", scan_args.resolution, "grid cells per axis")->required();
  scan->add_option("--n", scan_args.n, "ring size (default 2p+2)");

  ClassifyArgs classify_args;
  auto* classify = app.add_subcommand("classify", "Edge class table as CSV");
  classify->add_option("--graph", classify_args.graph_file, "graph file")->required();

  TableArgs table_args;
  auto* table = app.add_subcommand("table", "Optimal-angle table up to p-max");
  table->add_option("--p-max", table_args.p_max, "largest level")->required();
  table->add_option("--seed", table_args.seed, "start-point seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error[E_USAGE]: " << e.what() << "\n";
    return 2;
  }

  try {
    if (eval->parsed()) return run_eval_p1(eval_args);
    if (sim->parsed()) return run_simulate(sim_args);
    if (ring->parsed()) return run_ring_eval(ring_args);
    if (opt->parsed()) return run_optimize(opt_args);
    if (scan->parsed()) return run_scan(scan_args);
    if (classify->parsed()) return run_classify(classify_args);
    if (table->parsed()) return run_table(table_args);
  } catch (const CliError& e) {
    std::cerr << "error[" << e.code << "]: " << e.message << "\n";
    return e.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "error[E_INTERNAL]: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
