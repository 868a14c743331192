#include "sfi/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <functional>
#include <iomanip>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "sfi/fair_graph.hpp"
#include "sfi/graded_gjs.hpp"
#include "sfi/group_algebra.hpp"
#include "sfi/loop_algebra.hpp"
#include "sfi/modular.hpp"
#include "sfi/rational.hpp"
#include "sfi/temperley_lieb.hpp"

namespace sfi::cli {

using json = nlohmann::ordered_json;

namespace {

constexpr int loop_degree_cap = 6;
constexpr int horizon_cap = 12;
constexpr int gram_degree_cap = 4;
constexpr int tl_cap = 8;
constexpr int jw_cap = 6;

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string path;
  std::string basepoint;
  std::string r;
  std::string delta;
  std::string eigs;
  std::string output;
  std::string format = "text";
  int n = -1;
  int max_len = -1;
  int max_degree = -1;
  bool unsafe = false;
};

struct Report {
  std::string command;
  json inputs = json::object();
  json results = json::object();
  bool pass = true;
  int code = ok;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int thread_count() {
  const char* env = std::getenv("SFI_THREADS");
  if (env == nullptr) return std::max(1u, std::thread::hardware_concurrency());
  const std::string s(env);
  if (s.empty() || s.size() > 6 || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }) ||
      std::stoi(s) < 1)
    throw InputError("SFI_THREADS must be a positive integer, got '" + s + "'");
  return std::stoi(s);
}

// Evaluates fn(0..count-1) on up to SFI_THREADS workers; results keep index order.
template <class T>
std::vector<T> ordered_map(std::size_t count, const std::function<T(std::size_t)>& fn) {
  std::vector<std::optional<T>> slots(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        slots[i] = fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const auto workers = std::min<std::size_t>(static_cast<std::size_t>(thread_count()), count);
  {
    std::vector<std::jthread> pool;
    for (std::size_t t = 1; t < workers; ++t) pool.emplace_back(worker);
    worker();
  }
  std::vector<T> out;
  for (std::size_t i = 0; i < count; ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    out.push_back(std::move(*slots[i]));
  }
  return out;
}

Rational parse_rational(const std::string& text, const std::string& flag) {
  try {
    return Rational::parse(text);
  } catch (const ParseError& e) {
    throw InputError(flag + ": " + e.what());
  }
}

BaseParam parse_param(const Options& o, json& inputs) {
  if (o.r.empty() && o.delta.empty()) throw InputError("one of --r or --delta is required");
  std::optional<BaseParam> p;
  if (!o.r.empty()) {
    p = BaseParam::from_r(parse_rational(o.r, "--r"));
    inputs["r"] = p->r()->to_string();
  }
  if (!o.delta.empty()) {
    const Rational d = parse_rational(o.delta, "--delta");
    if (p && p->delta() != d)
      throw InputError("--delta " + d.to_string() + " disagrees with --r (delta = " + p->delta().to_string() + ")");
    if (!p) p = BaseParam::from_delta(d);
    inputs["delta"] = d.to_string();
  }
  return *p;
}

int checked_cap(int value, int fallback, int cap, const std::string& flag, bool unsafe) {
  const int v = value < 0 ? fallback : value;
  if (v > cap && !unsafe)
    throw InputError(flag + " " + std::to_string(v) + " exceeds the default cap " + std::to_string(cap) +
                     "; pass --unsafe-large to override");
  return v;
}

std::string str(const Rational& r) { return r.to_string(); }

json rationals(const std::vector<Rational>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(str(x));
  return a;
}

FairGraph load_graph(const Options& o, Report& rep) {
  const std::string text = read_file(o.path);
  rep.inputs["path"] = o.path;
  rep.inputs["digest"] = fnv1a64(text);
  return read_graph(text);
}

json violations_json(const std::vector<Violation>& vs) {
  json a = json::array();
  for (const auto& v : vs)
    a.push_back({{"kind", to_string(v.kind)}, {"subject", v.subject}, {"defect", str(v.defect)},
                 {"message", v.message}});
  return a;
}

// Fills in violations and returns false when the graph is not fair and balanced.
bool require_valid(const FairGraph& g, Report& rep) {
  const auto vs = validate(g);
  if (vs.empty()) return true;
  rep.results["valid"] = false;
  rep.results["violations"] = violations_json(vs);
  rep.pass = false;
  rep.code = violation;
  return false;
}

LoopAlgebra algebra_at(FairGraph g, const Options& o, Report& rep) {
  const std::string base = o.basepoint.empty() ? g.vertices().front() : o.basepoint;
  rep.inputs["basepoint"] = base;
  try {
    return LoopAlgebra::at(std::move(g), base);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

json spectrum_json(const SpectrumDescriptor& s) {
  json j;
  j["kind"] = to_string(s.kind);
  j["lambda"] = s.lambda ? json(str(*s.lambda)) : json(nullptr);
  j["rank"] = s.rank;
  j["basis"] = rationals(s.group.basis());
  json w = json::array();
  for (const auto& x : s.witness) w.push_back({{"label", x.label}, {"weight", str(x.weight)}});
  j["witness"] = w;
  j["warnings"] = s.warnings;
  return j;
}

void cmd_graph_validate(const Options& o, Report& rep) {
  const FairGraph g = load_graph(o, rep);
  rep.results["vertices"] = g.vertex_count();
  rep.results["edges"] = g.edge_count();
  rep.results["delta"] = str(g.delta());
  rep.results["regime"] = g.param().regime() == BaseParam::Regime::critical ? "critical" : "generic";
  const auto vs = validate(g);
  rep.results["valid"] = vs.empty();
  rep.results["violations"] = violations_json(vs);
  rep.pass = vs.empty();
  rep.code = vs.empty() ? ok : violation;
}

void cmd_graph_spectrum(const Options& o, Report& rep) {
  FairGraph g = load_graph(o, rep);
  if (o.max_len >= 0) rep.inputs["max_len"] = o.max_len;
  if (!require_valid(g, rep)) return;
  const int horizon = o.max_len < 0 ? -1 : checked_cap(o.max_len, o.max_len, horizon_cap, "--max-len", o.unsafe);
  const LoopAlgebra a = algebra_at(std::move(g), o, rep);
  const SpectrumDescriptor exact = spectrum_exact(a);
  const FactorType type = classify_type(exact);
  const bool tracial = is_tracial(a);
  rep.results["exact"] = spectrum_json(exact);
  rep.results["type"] = type.to_string();
  rep.results["tracial"] = tracial;
  std::string summary = exact.summary() + ", type " + type.to_string();
  if (tracial) summary += ", tracial";
  if (horizon >= 0) {
    const SpectrumDescriptor brute = spectrum_bruteforce(a, horizon);
    const bool agrees = brute.group == exact.group;
    json b = spectrum_json(brute);
    b["horizon"] = horizon;
    b["agrees"] = agrees;
    rep.results["bruteforce"] = b;
    summary += agrees ? ", oracle agrees" : ", oracle disagrees";
    rep.pass = agrees;
    rep.code = agrees ? ok : violation;
  }
  rep.results["summary"] = summary;
}

void cmd_graph_loops(const Options& o, Report& rep) {
  FairGraph g = load_graph(o, rep);
  const int n_max = checked_cap(o.n, 4, loop_degree_cap, "--n", o.unsafe);
  if (n_max < 0) throw InputError("--n must be non-negative");
  rep.inputs["n"] = n_max;
  if (!require_valid(g, rep)) return;
  const LoopAlgebra a = algebra_at(std::move(g), o, rep);
  const auto count = static_cast<std::size_t>(n_max) + 1;

  const std::vector<std::size_t> iso =
      ordered_map<std::size_t>(count, [&](std::size_t k) { return a.isotypic_dim(static_cast<int>(k)); });
  const std::vector<TraceBounds> bounds =
      ordered_map<TraceBounds>(count, [&](std::size_t n) { return trace_bounds(a, static_cast<int>(n)); });

  bool all = true;
  json rows = json::array();
  for (std::size_t n = 0; n < count; ++n) {
    const std::size_t loops = a.loop_count(static_cast<int>(n));
    const Rational d2n = a.delta().pow(2 * static_cast<int>(n));
    const bool count_pass = Rational(static_cast<long>(loops)) <= d2n;
    long decomposition = 0;
    for (std::size_t k = 0; k <= n; ++k)
      decomposition += branching_multiplicity(static_cast<int>(n), static_cast<int>(k)) * static_cast<long>(iso[k]);
    const bool decomposition_pass = decomposition == static_cast<long>(loops);
    const TraceBounds& b = bounds[n];
    rows.push_back({{"n", n},
                    {"loop_count", loops},
                    {"delta_2n", str(d2n)},
                    {"count_pass", count_pass},
                    {"trace", str(b.trace)},
                    {"inverse_trace", str(b.inverse_trace)},
                    {"delta_n", str(b.bound)},
                    {"trace_pass", b.pass},
                    {"decomposition", decomposition},
                    {"decomposition_pass", decomposition_pass}});
    all = all && count_pass && b.pass && decomposition_pass;
  }
  json iso_rows = json::array();
  for (std::size_t k = 0; k < count; ++k) {
    const Rational qk = quantum_int(static_cast<int>(k) + 1, a.graph().param());
    const bool pass = Rational(static_cast<long>(iso[k])) <= qk * qk;
    iso_rows.push_back({{"k", k}, {"isotypic_dim", iso[k]}, {"bound", str(qk * qk)}, {"pass", pass}});
    all = all && pass;
  }
  rep.results["delta"] = str(a.delta());
  rep.results["degrees"] = rows;
  rep.results["isotypic"] = iso_rows;
  rep.pass = all;
  rep.code = all ? ok : violation;
}

void cmd_graph_from_dims(const Options& o, Report& rep) {
  const std::string text = read_file(o.path);
  rep.inputs["path"] = o.path;
  rep.inputs["digest"] = fnv1a64(text);
  const DimensionData data = read_dimension_data(text);
  FairGraph g = [&] {
    try {
      return from_dimension_function(data.graph, data.dimension, data.delta);
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
  }();
  const std::string serialized = write_graph(g);
  if (!o.output.empty()) {
    std::ofstream out(o.output, std::ios::binary);
    if (!out) throw InputError("cannot write " + o.output);
    out << serialized;
    rep.inputs["output"] = o.output;
  }
  const auto vs = validate(g);
  rep.results["vertices"] = g.vertex_count();
  rep.results["edges"] = g.edge_count();
  rep.results["delta"] = str(g.delta());
  rep.results["valid"] = vs.empty();
  rep.results["violations"] = violations_json(vs);
  rep.results["graph"] = json::parse(serialized);
  rep.pass = vs.empty();
  rep.code = vs.empty() ? ok : violation;
}

void cmd_tl_check(const Options& o, Report& rep) {
  const BaseParam p = parse_param(o, rep.inputs);
  const int n_max = checked_cap(o.n, 6, tl_cap, "--n", o.unsafe);
  rep.inputs["n"] = n_max;
  const tl::Category c(p.delta());
  using tl::generator;
  using tl::TLMorphism;

  json failures = json::array();
  long checked = 0;
  auto expect = [&](bool ok_, const std::string& what) {
    ++checked;
    if (!ok_) failures.push_back(what);
  };
  for (int n = 2; n <= n_max; ++n) {
    for (int i = 1; i < n; ++i) {
      const TLMorphism ei = generator(i, n);
      const std::string at = " (n=" + std::to_string(n) + ", i=" + std::to_string(i) + ")";
      expect(c.compose(ei, ei) == p.delta() * ei, "e_i^2 = delta e_i" + at);
      if (i + 1 < n) {
        const TLMorphism ej = generator(i + 1, n);
        expect(c.compose(ei, c.compose(ej, ei)) == ei, "e_i e_{i+1} e_i = e_i" + at);
        expect(c.compose(ej, c.compose(ei, ej)) == ej, "e_{i+1} e_i e_{i+1} = e_{i+1}" + at);
      }
      for (int j = i + 2; j < n; ++j) {
        const TLMorphism ej = generator(j, n);
        expect(c.compose(ei, ej) == c.compose(ej, ei),
               "e_i e_j = e_j e_i" + at + " j=" + std::to_string(j));
      }
    }
  }

  json jw = json::array();
  bool jw_ok = true;
  for (int n = 1; n <= std::min(n_max, o.unsafe ? n_max : jw_cap); ++n) {
    const TLMorphism f = c.jones_wenzl(n);
    const bool idempotent = c.compose(f, f) == f;
    bool annihilated = true;
    for (int i = 1; i < n; ++i) {
      const TLMorphism ei = generator(i, n);
      annihilated = annihilated && c.compose(ei, f).is_zero() && c.compose(f, ei).is_zero();
    }
    const Rational trace = c.markov_trace(f);
    const Rational expected = c.quantum_int(n + 1);
    const bool spherical = c.left_trace(f) == trace && c.right_trace(f) == trace;
    bool closed_form = true;
    if (p.has_r()) closed_form = quantum_int(n + 1, p) == expected;
    const bool pass = idempotent && annihilated && trace == expected && spherical && closed_form;
    jw_ok = jw_ok && pass;
    jw.push_back({{"n", n},
                  {"terms", f.terms().size()},
                  {"idempotent", idempotent},
                  {"annihilated", annihilated},
                  {"trace", str(trace)},
                  {"expected", str(expected)},
                  {"spherical", spherical},
                  {"closed_form_agrees", closed_form},
                  {"pass", pass}});
  }
  rep.results["delta"] = str(p.delta());
  rep.results["relations"] = {{"checked", checked}, {"failures", failures}};
  rep.results["jones_wenzl"] = jw;
  rep.pass = failures.empty() && jw_ok;
  rep.code = rep.pass ? ok : violation;
}

void cmd_gjs_gram(const Options& o, Report& rep) {
  const BaseParam p = parse_param(o, rep.inputs);
  const int d = checked_cap(o.max_degree, 4, gram_degree_cap, "--max-degree", o.unsafe);
  if (d < 0) throw InputError("--max-degree must be non-negative");
  rep.inputs["max_degree"] = d;
  const gjs::GradedAlgebra alg(p.delta());
  const RationalMatrix g = alg.gram_matrix(d, std::max(d, gram_degree_cap));
  const PsdReport psd = analyze_psd(g);
  const Rational cup_trace = alg.trace(alg.product(gjs::cup2(), gjs::cup2()));

  json basis = json::array();
  for (const auto& b : alg.basis(d)) basis.push_back(b.to_string());
  json rows = json::array();
  for (std::size_t i = 0; i < g.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < g.cols(); ++j) row.push_back(str(g(i, j)));
    rows.push_back(row);
  }
  rep.results["delta"] = str(p.delta());
  rep.results["basis"] = basis;
  rep.results["gram"] = rows;
  rep.results["leading_minors"] = rationals(leading_principal_minors(g));
  rep.results["rank"] = psd.rank;
  rep.results["symmetric"] = psd.symmetric;
  rep.results["positive_semidefinite"] = psd.positive_semidefinite;
  rep.results["positive_definite"] = psd.positive_definite;
  rep.results["cup_trace"] = str(cup_trace);
  rep.results["cup_trace_pass"] = cup_trace == p.delta();
  rep.pass = psd.symmetric && psd.positive_semidefinite && cup_trace == p.delta();
  rep.code = rep.pass ? ok : violation;
}

void cmd_group_check(const Options& o, Report& rep) {
  const std::string text = read_file(o.path);
  rep.inputs["path"] = o.path;
  rep.inputs["digest"] = fnv1a64(text);
  const group::Cocycle2 mu = group::parse_cocycle(text);
  const group::FiniteGroup& G = mu.group();
  const group::ValidationReport v = group::validate_cocycle(mu);
  rep.results["order"] = G.order();
  rep.results["field_order"] = mu.field_order();
  rep.results["cocycle_valid"] = v.valid;
  json fails = json::array();
  for (const auto& f : v.failures) fails.push_back(f.message);
  rep.results["cocycle_failures"] = fails;
  if (!v.valid) {
    rep.pass = false;
    rep.code = violation;
    return;
  }
  const group::TwistedAlgebra alg(mu);
  json j = json::object();
  for (int g = 0; g < G.order(); ++g) j[G.label(g)] = str(alg.j_angle(g));
  rep.results["j_angles"] = j;
  json muj = json::array();
  for (const auto& f : alg.mu_j_violations()) muj.push_back({G.label(f.g), G.label(f.h)});
  rep.results["mu_j_violations"] = muj;
  const group::PositivityReport pos = alg.positivity_check();
  json diag = json::array();
  for (const auto& x : pos.diagonal_entries) diag.push_back(x.to_string());
  rep.results["gram_diagonal"] = diag;
  rep.results["gram_is_diagonal"] = pos.diagonal;
  rep.results["positive_definite"] = pos.positive_definite;
  bool commutative = true;
  for (int g = 0; g < G.order() && commutative; ++g)
    for (int h = 0; h < g && commutative; ++h)
      commutative = alg.multiply(alg.basis(g), alg.basis(h)) == alg.multiply(alg.basis(h), alg.basis(g));
  rep.results["commutative"] = commutative;
  rep.results["center_dimension"] = alg.center_dimension();
  const auto blocks = alg.block_dimensions();
  rep.results["block_dimensions"] = blocks ? json(*blocks) : json(nullptr);
  rep.pass = muj.empty() && pos.positive_definite;
  rep.code = rep.pass ? ok : violation;
}

void cmd_qg_spectrum(const Options& o, Report& rep) {
  if (o.eigs.empty()) throw InputError("--eigs is required");
  std::vector<Rational> eigs;
  std::stringstream ss(o.eigs);
  for (std::string item; std::getline(ss, item, ',');) eigs.push_back(parse_rational(item, "--eigs"));
  rep.inputs["eigs"] = rationals(eigs);
  const QuantumGroupSpectrum q = [&] {
    try {
      return qg_spectrum(eigs);
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
  }();
  const FactorType type = classify_type(q.spectrum);
  rep.results["spectrum"] = spectrum_json(q.spectrum);
  rep.results["type"] = type.to_string();
  rep.results["kac"] = q.kac;
  rep.results["summary"] = q.spectrum.summary() + (q.kac ? ", Kac" : ", non-Kac");
}

std::string text_value(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  return v.dump();
}

void render_text(const json& v, const std::string& prefix, std::ostream& out) {
  if (v.is_object()) {
    for (const auto& [k, x] : v.items()) render_text(x, prefix.empty() ? k : prefix + "." + k, out);
    return;
  }
  if (v.is_array()) {
    const bool flat = std::none_of(v.begin(), v.end(), [](const json& x) { return x.is_structured(); });
    if (flat) {
      out << prefix << ":";
      for (const auto& x : v) out << " " << text_value(x);
      out << "\n";
      return;
    }
    for (std::size_t i = 0; i < v.size(); ++i) render_text(v[i], prefix + "[" + std::to_string(i) + "]", out);
    return;
  }
  out << prefix << ": " << text_value(v) << "\n";
}

void emit(const Report& rep, const std::string& format, std::ostream& out) {
  json doc;
  doc["command"] = rep.command;
  doc["inputs"] = rep.inputs;
  doc["results"] = rep.results;
  doc["pass"] = rep.pass;
  if (format == "json") {
    out << doc.dump(2) << "\n";
    return;
  }
  out << "command: " << rep.command << "\n";
  render_text(rep.inputs, "inputs", out);
  render_text(rep.results, "", out);
  out << "pass: " << (rep.pass ? "true" : "false") << "\n";
}

}  // namespace

std::string fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Standard invariants of discrete subfactors, computed exactly", "sfi"};
  app.require_subcommand(1);
  Options o;
  std::string command;
  std::function<void(const Options&, Report&)> handler;

  auto add_format = [&](CLI::App* c) {
    c->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };
  auto verb = [&](CLI::App* area, const std::string& name, const std::string& help,
                  std::function<void(const Options&, Report&)> fn) {
    CLI::App* c = area->add_subcommand(name, help);
    add_format(c);
    c->callback([&, c, fn = std::move(fn)] {
      command = c->get_parent()->get_name() + " " + c->get_name();
      handler = fn;
    });
    return c;
  };

  CLI::App* graph = app.add_subcommand("graph", "Fair and balanced delta-graphs");
  graph->require_subcommand(1);
  CLI::App* c = verb(graph, "validate", "Check fairness and balance", cmd_graph_validate);
  c->add_option("path", o.path, "Graph file")->required();
  c = verb(graph, "spectrum", "Modular spectrum and factor type", cmd_graph_spectrum);
  c->add_option("path", o.path, "Graph file")->required();
  c->add_option("--basepoint", o.basepoint, "Basepoint vertex id");
  c->add_option("--max-len", o.max_len, "Brute-force horizon");
  c->add_flag("--unsafe-large", o.unsafe, "Lift the default caps");
  c = verb(graph, "loops", "Loop counts, trace bounds and isotypic dimensions", cmd_graph_loops);
  c->add_option("path", o.path, "Graph file")->required();
  c->add_option("--basepoint", o.basepoint, "Basepoint vertex id");
  c->add_option("--n", o.n, "Largest loop length (default 4)");
  c->add_flag("--unsafe-large", o.unsafe, "Lift the default caps");
  c = verb(graph, "from-dims", "Build a graph from a dimension function", cmd_graph_from_dims);
  c->add_option("path", o.path, "Dimension file")->required();
  c->add_option("--output,-o", o.output, "Write the graph file here");

  CLI::App* tl_area = app.add_subcommand("tl", "Temperley-Lieb-Jones relations");
  tl_area->require_subcommand(1);
  c = verb(tl_area, "check", "Relations and Jones-Wenzl identities", cmd_tl_check);
  c->add_option("--r", o.r, "Half-weight base r");
  c->add_option("--delta", o.delta, "Loop value delta");
  c->add_option("--n", o.n, "Largest strand count (default 6)");
  c->add_flag("--unsafe-large", o.unsafe, "Lift the default caps");

  CLI::App* gjs_area = app.add_subcommand("gjs", "Graded algebra of the Temperley-Lieb planar algebra");
  gjs_area->require_subcommand(1);
  c = verb(gjs_area, "gram", "Trace Gram matrix and positivity", cmd_gjs_gram);
  c->add_option("--r", o.r, "Half-weight base r");
  c->add_option("--delta", o.delta, "Loop value delta");
  c->add_option("--max-degree", o.max_degree, "Largest degree (default 4)");
  c->add_flag("--unsafe-large", o.unsafe, "Lift the default caps");

  CLI::App* group_area = app.add_subcommand("group", "Twisted group algebras");
  group_area->require_subcommand(1);
  c = verb(group_area, "check", "Cocycle, star, positivity and center", cmd_group_check);
  c->add_option("path", o.path, "Cocycle file")->required();

  CLI::App* qg_area = app.add_subcommand("qg", "Quantum group helper");
  qg_area->require_subcommand(1);
  c = verb(qg_area, "spectrum", "Spectrum generated by eigenvalues of F*F", cmd_qg_spectrum);
  c->add_option("--eigs", o.eigs, "Comma-separated eigenvalues")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : input_error;
  }

  Report rep;
  rep.command = command;
  try {
    handler(o, rep);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return input_error;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return input_error;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return input_error;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return input_error;
  }
  emit(rep, o.format, out);
  return rep.code;
}

}  // namespace sfi::cli
