#include "ipath/bench.hpp"

#include <atomic>
#include <chrono>
#include <cstdio>
#include <thread>

#include "ipath/errors.hpp"
#include "ipath/oracle.hpp"

namespace ipath {

namespace {

const Representation& require_rep(const Instance& inst, const std::string& extractor) {
  if (!inst.data.rep) throw InputError(extractor + " extractor needs a representation");
  return *inst.data.rep;
}

int max_degree_outside(const Graph& g, const VertexSet& x) {
  std::vector<char> in_x(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v : x)
    if (g.contains(v)) in_x[v] = 1;
  int best = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (in_x[v]) continue;
    int d = 0;
    for (Vertex w : g.neighbors(v)) d += in_x[w] ? 0 : 1;
    best = std::max(best, d);
  }
  return best;
}

int max_torso_degree(const Representation& rep, const Graph& g) {
  std::size_t best = 0;
  for (Node t = 0; t < rep.host_order(); ++t)
    best = std::max(best, torso(rep, g, t).graph.max_degree());
  return static_cast<int>(best);
}

std::optional<int> opt_int(const Json& j, const char* key) {
  if (!j.contains(key)) return std::nullopt;
  if (!j.at(key).is_number_integer()) throw InputError(std::string("'") + key + "' must be an integer");
  return j.at(key).get<int>();
}

std::optional<Rational> opt_rational(const Json& j, const char* key) {
  if (!j.contains(key)) return std::nullopt;
  const auto& v = j.at(key);
  if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
  if (v.is_string()) return parse_rational(v.get<std::string>());
  throw InputError(std::string("'") + key + "' must be an integer or a \"p/q\" string");
}

std::int64_t param_int(const Json& p, const char* key) {
  if (!p.contains(key) || !p.at(key).is_number_integer()) {
    throw ParameterError(std::string("generator parameter '") + key + "' missing");
  }
  return p.at(key).get<std::int64_t>();
}

// Expands list and range values into the cartesian product of scalars.
std::vector<Json> expand(const Json& params) {
  std::vector<Json> out{Json::object()};
  for (const auto& [key, value] : params.items()) {
    std::vector<Json> choices;
    if (value.is_array()) {
      choices.assign(value.begin(), value.end());
    } else if (value.is_object() && value.contains("from")) {
      const auto from = value.at("from").get<std::int64_t>();
      const auto to = value.at("to").get<std::int64_t>();
      const auto step = value.value("step", std::int64_t{1});
      if (step < 1) throw InputError("range step must be positive");
      for (auto v = from; v <= to; v += step) choices.emplace_back(v);
    } else {
      choices.push_back(value);
    }
    std::vector<Json> next;
    for (const auto& partial : out) {
      for (const auto& c : choices) {
        Json p = partial;
        p[key] = c;
        next.push_back(std::move(p));
      }
    }
    out = std::move(next);
  }
  return out;
}

std::string label(const std::string& generator, const Json& params) {
  std::string s = generator;
  for (const auto& [key, value] : params.items()) {
    s += ":" + key + "=" + (value.is_string() ? value.get<std::string>() : value.dump());
  }
  return s;
}

struct Job {
  std::string generator;
  Json params;
  ExtractorOptions opts;
  bool oracle = false;
  Vertex oracle_cap = 32;
};

BenchRow run_job(const Job& job) {
  BenchRow row;
  row.instance = label(job.generator, job.params);
  try {
    const Instance inst = generate_from_json(job.generator, job.params);
    row.n = inst.data.graph.order();
    const auto start = std::chrono::steady_clock::now();
    const auto cert = run_extractor(inst, job.opts);
    row.time_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    for (const char* key : {"k", "a", "delta"}) {
      const auto it = cert.params.find(key);
      if (it != cert.params.end()) {
        row.k = to_string(it->second);
        break;
      }
    }
    const auto verdict = verify_certificate(inst.data.graph, cert);
    if (!verdict.ok) {
      row.error = "certificate rejected: " + verdict.reason;
      return row;
    }
    row.order = cert.order();
    row.bound = bound_value(cert.bound_kind, cert.params);
    if (job.oracle && row.n <= job.oracle_cap) {
      row.oracle = longest_induced_path(inst.data.graph, {job.oracle_cap, 0}).value;
    }
  } catch (const Error& e) {
    row.error = e.what();
  }
  return row;
}

std::string format_double(double x, const char* fmt) {
  char buf[64];
  std::snprintf(buf, sizeof buf, fmt, x);
  return buf;
}

}  // namespace

CompositionBranch composition_branch_from_string(const std::string& s) {
  if (s == "auto") return CompositionBranch::kAuto;
  if (s == "big-bag") return CompositionBranch::kBigBag;
  if (s == "long-path") return CompositionBranch::kLongPath;
  throw ParameterError("unknown branch '" + s + "'");
}

ExtractorOptions extractor_options_from_json(const Json& j) {
  ExtractorOptions o;
  if (!j.is_object()) throw InputError("extractor options must be an object");
  if (!j.contains("name") || !j.at("name").is_string()) throw InputError("extractor name missing");
  o.name = j.at("name").get<std::string>();
  o.k = opt_int(j, "k");
  o.a = opt_int(j, "a");
  o.delta = opt_int(j, "delta");
  o.c = opt_rational(j, "c");
  o.d = opt_rational(j, "d");
  if (j.contains("x")) o.x = j.at("x").get<VertexSet>();
  o.base_k = opt_int(j, "base_k").value_or(0);
  o.base_delta = opt_int(j, "base_delta");
  if (j.contains("branch")) o.branch = composition_branch_from_string(j.at("branch").get<std::string>());
  return o;
}

ExtractionCertificate run_extractor(const Instance& inst, const ExtractorOptions& opts) {
  const Graph& g = inst.data.graph;
  const VertexPath& ham = inst.data.ham;
  ExtractionCertificate cert;
  const std::string& name = opts.name;
  if (name == "pathwidth") {
    cert = extract_pathwidth(g, ham, require_rep(inst, name), opts.k);
  } else if (name == "treewidth") {
    cert = extract_treewidth(g, ham, require_rep(inst, name), opts.k);
  } else if (name == "bounded-degree") {
    cert = extract_bounded_degree(g, ham);
  } else if (name == "subpolynomial-degree") {
    if (!opts.c || !opts.d) throw ParameterError("subpolynomial-degree needs c and d");
    cert = extract_subpolynomial_degree(g, ham, *opts.c, *opts.d);
  } else if (name == "modulator") {
    VertexSet x = opts.x;
    std::sort(x.begin(), x.end());
    const int delta = opts.delta.value_or(max_degree_outside(g, x));
    cert = extract_with_modulator(g, ham, x, bounded_degree_base(delta));
  } else if (name == "adhesion") {
    const auto varied = make_varied(require_rep(inst, name), g).rep;
    cert = extract_adhesion_pathrep(g, ham, varied, opts.a);
  } else if (name == "tree-composition") {
    const auto& rep = require_rep(inst, name);
    const int delta = opts.base_delta.value_or(max_torso_degree(rep, g));
    cert = extract_tree_composition(g, ham, rep, almost_bounded_degree_base(opts.base_k, delta),
                                    opts.a, opts.branch);
  } else if (name == "vortex") {
    cert = extract_from_vortex(g, ham, require_rep(inst, name), opts.k);
  } else if (name == "master") {
    const auto& rep = require_rep(inst, name);
    auto kinds = inst.torso_kinds;
    if (kinds.empty()) {
      const int delta = opts.base_delta.value_or(max_torso_degree(rep, g));
      for (Node t = 0; t < rep.host_order(); ++t)
        kinds[t] = {TorsoKind::Kind::kAlmostBoundedDegree, opts.base_k, delta};
    }
    cert = extract_master(g, ham, rep, kinds);
  } else {
    throw ParameterError("unknown extractor '" + name + "'");
  }
  cert.input_sha256 = graph_sha256(g);
  return cert;
}

Instance generate_from_json(const std::string& generator, const Json& params) {
  Instance inst;
  if (generator == "worstcase") {
    inst.data = gen_worstcase_interval(param_int(params, "n"), param_int(params, "k"));
  } else if (generator == "outerplanar") {
    inst.data = gen_outerplanar_family(static_cast<int>(param_int(params, "gen")));
  } else if (generator == "path-power") {
    inst.data = gen_path_power(param_int(params, "n"), param_int(params, "k"));
  } else if (generator == "chained-cliques") {
    inst.data = gen_chained_cliques(param_int(params, "q"), param_int(params, "s"));
  } else if (generator == "random") {
    if (!params.contains("profile") || !params.at("profile").is_string()) {
      throw ParameterError("generator parameter 'profile' missing");
    }
    inst.data = gen_random_validated(static_cast<std::uint64_t>(param_int(params, "seed")),
                                     random_profile_from_string(params.at("profile").get<std::string>()),
                                     param_int(params, "n"), param_int(params, "k"));
  } else {
    throw ParameterError("unknown generator '" + generator + "'");
  }
  return inst;
}

std::vector<BenchRow> run_bench(const Json& grid, unsigned threads) {
  const Json& specs = grid.is_object() && grid.contains("rows") ? grid.at("rows") : grid;
  if (!specs.is_array()) throw InputError("bench grid must be an array of rows or {\"rows\": [...]}");
  std::vector<Job> jobs;
  for (const auto& entry : specs) {
    if (!entry.is_object() || !entry.contains("generator")) throw InputError("grid row needs a generator");
    Json params = Json::object();
    for (const auto& [key, value] : entry.items()) {
      if (key != "generator" && key != "extract" && key != "oracle" && key != "oracle_cap") {
        params[key] = value;
      }
    }
    if (!entry.contains("extract")) throw InputError("grid row needs an 'extract' object");
    const auto opts = extractor_options_from_json(entry.at("extract"));
    const bool oracle = entry.value("oracle", false);
    const auto cap = static_cast<Vertex>(entry.value("oracle_cap", 32));
    for (auto& p : expand(params)) {
      jobs.push_back({entry.at("generator").get<std::string>(), std::move(p), opts, oracle, cap});
    }
  }

  std::vector<BenchRow> rows(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) rows[i] = run_job(jobs[i]);
  };
  const unsigned n_threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(jobs.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n_threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
  std::string out = "instance,n,k,L,bound,oracle,time_ms\n";
  for (const auto& r : rows) {
    out += r.instance + "," + std::to_string(r.n) + "," + r.k + ",";
    out += r.order ? std::to_string(*r.order) : std::string("ERROR");
    out += ",";
    if (r.bound) out += format_double(*r.bound, "%.6f");
    out += ",";
    if (r.oracle) out += std::to_string(*r.oracle);
    out += "," + format_double(r.time_ms, "%.3f") + "\n";
  }
  return out;
}

}  // namespace ipath
