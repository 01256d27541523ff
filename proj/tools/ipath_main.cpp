// Command-line front end: generate instances, extract and verify
// certificates, run the exact oracle, benchmark grids and convert files.

#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "ipath/bench.hpp"
#include "ipath/errors.hpp"
#include "ipath/io.hpp"
#include "ipath/oracle.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRejected = 1;
constexpr int kExitInput = 2;
constexpr int kExitInternal = 3;

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
  } else {
    ipath::write_text_file(out_path, text);
  }
}

ipath::Instance load_instance(const std::string& path) {
  return ipath::instance_from_json(ipath::read_json_file(path));
}

}  // namespace

int main(int argc, char** argv) {
  using namespace ipath;
  CLI::App app{"Induced paths in graphs with a Hamiltonian path and a width-bounded representation"};
  app.require_subcommand(1);
  std::string out_path;

  // generate
  auto* gen = app.add_subcommand("generate", "Write a generated instance as JSON");
  std::string family;
  std::int64_t n = 0, k = 0, q = 0, s = 0, seed = 0;
  int generation = 0;
  std::string profile = "interval";
  gen->add_option("family", family, "worstcase | outerplanar | path-power | chained-cliques | random")
      ->required();
  gen->add_option("--n", n, "Order parameter");
  gen->add_option("--k", k, "Width parameter (degree bound for the bounded-degree profile)");
  gen->add_option("--gen", generation, "Outerplanar generation");
  gen->add_option("--q", q, "Number of cliques");
  gen->add_option("--s", s, "Clique size");
  gen->add_option("--seed", seed, "Random seed");
  gen->add_option("--profile", profile, "interval | ktree-path-built | bounded-degree");
  gen->add_option("-o,--out", out_path, "Output file (default stdout)");

  // extract
  auto* ext = app.add_subcommand("extract", "Extract a certified induced path");
  std::string instance_path;
  std::string extractor;
  std::string c_str, d_str;
  std::optional<int> opt_k, opt_a, opt_delta, opt_base_delta;
  int base_k = 0;
  std::vector<Vertex> x;
  std::string branch = "auto";
  ext->add_option("instance", instance_path, "Instance JSON")->required();
  ext->add_option("-e,--extractor", extractor,
                  "pathwidth | treewidth | bounded-degree | subpolynomial-degree | modulator | "
                  "adhesion | tree-composition | vortex | master")
      ->required();
  ext->add_option("--k", opt_k, "Width bound (default: width + 1)");
  ext->add_option("--a", opt_a, "Adhesion bound (default: adhesion + 1, at least 2)");
  ext->add_option("--delta", opt_delta, "Degree bound of the modulator base");
  ext->add_option("--c", c_str, "Constant c as p/q");
  ext->add_option("--d", d_str, "Exponent d as p/q");
  ext->add_option("--x", x, "Modulator vertices");
  ext->add_option("--base-k", base_k, "Modulator size of almost-bounded-degree torsos");
  ext->add_option("--base-delta", opt_base_delta, "Degree bound of almost-bounded-degree torsos");
  ext->add_option("--branch", branch, "Tree-composition branch: auto | big-bag | long-path");
  ext->add_option("-o,--out", out_path, "Certificate file (default stdout)");

  // verify
  auto* ver = app.add_subcommand("verify", "Re-verify a certificate against an instance");
  std::string cert_path;
  ver->add_option("instance", instance_path, "Instance JSON")->required();
  ver->add_option("certificate", cert_path, "Certificate JSON")->required();

  // oracle
  auto* orc = app.add_subcommand("oracle", "Exact brute-force optimum on a small instance");
  std::string what = "induced-path";
  Vertex cap = 0;
  std::int64_t time_limit_ms = 0;
  orc->add_option("instance", instance_path, "Instance JSON")->required();
  orc->add_option("--what", what, "induced-path | clique | hamiltonian");
  orc->add_option("--cap", cap, "Vertex cap (default 32, 20 for hamiltonian)");
  orc->add_option("--time-limit-ms", time_limit_ms, "Stop after this many milliseconds");

  // bench
  auto* ben = app.add_subcommand("bench", "Run a grid of generator/extractor rows, CSV output");
  std::string grid_path;
  unsigned threads = 1;
  ben->add_option("grid", grid_path, "Grid JSON")->required();
  ben->add_option("--threads", threads, "Worker threads");
  ben->add_option("-o,--out", out_path, "CSV file (default stdout)");

  // convert
  auto* conv = app.add_subcommand("convert", "Canonical JSON or DOT export of an instance");
  std::string to = "json";
  conv->add_option("instance", instance_path, "Instance JSON")->required();
  conv->add_option("--to", to, "json | dot")->check(CLI::IsMember({"json", "dot"}));
  conv->add_option("-o,--out", out_path, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*gen) {
      Json params = Json::object();
      if (family == "worstcase" || family == "path-power") {
        params = {{"n", n}, {"k", k}};
      } else if (family == "outerplanar") {
        params = {{"gen", generation}};
      } else if (family == "chained-cliques") {
        params = {{"q", q}, {"s", s}};
      } else if (family == "random") {
        params = {{"seed", seed}, {"profile", profile}, {"n", n}, {"k", k}};
      }
      const auto inst = generate_from_json(family, params);
      emit(out_path, canonical_dump(instance_to_json(inst)) + "\n");
      return kExitOk;
    }
    if (*ext) {
      const auto inst = load_instance(instance_path);
      ExtractorOptions opts;
      opts.name = extractor;
      opts.k = opt_k;
      opts.a = opt_a;
      opts.delta = opt_delta;
      if (!c_str.empty()) opts.c = parse_rational(c_str);
      if (!d_str.empty()) opts.d = parse_rational(d_str);
      opts.x = x;
      opts.base_k = base_k;
      opts.base_delta = opt_base_delta;
      opts.branch = composition_branch_from_string(branch);
      const auto cert = run_extractor(inst, opts);
      emit(out_path, canonical_dump(certificate_to_json(cert)) + "\n");
      if (!cert.verified) {
        std::cerr << "certificate does not verify\n";
        return kExitRejected;
      }
      return kExitOk;
    }
    if (*ver) {
      const auto inst = load_instance(instance_path);
      const auto cert = certificate_from_json(read_json_file(cert_path));
      Verdict verdict;
      if (cert.input_sha256 != graph_sha256(inst.data.graph)) {
        verdict = {false, "input hash"};
      } else {
        verdict = verify_certificate(inst.data.graph, cert);
      }
      Json out = {{"verified", verdict.ok}, {"order", cert.order()}};
      if (!verdict.ok) out["reason"] = verdict.reason;
      std::cout << canonical_dump(out) << "\n";
      if (!verdict.ok) std::cerr << verdict.reason << "\n";
      return verdict.ok ? kExitOk : kExitRejected;
    }
    if (*orc) {
      const auto inst = load_instance(instance_path);
      OracleResult r;
      if (what == "induced-path") {
        r = longest_induced_path(inst.data.graph, {cap > 0 ? cap : 32, time_limit_ms});
      } else if (what == "clique") {
        r = max_clique(inst.data.graph, {cap > 0 ? cap : 32, time_limit_ms});
      } else if (what == "hamiltonian") {
        r = hamiltonian_path(inst.data.graph,
                             {cap > 0 ? cap : kHamiltonianDefaultCap, time_limit_ms});
      } else {
        throw ParameterError("unknown oracle '" + what + "'");
      }
      const Json out = {{"what", what},
                        {"value", r.value},
                        {"witness", r.witness},
                        {"nodes_explored", r.nodes_explored},
                        {"time_limit_hit", r.time_limit_hit}};
      std::cout << canonical_dump(out) << "\n";
      return kExitOk;
    }
    if (*ben) {
      const auto rows = run_bench(read_json_file(grid_path), threads);
      for (const auto& r : rows)
        if (!r.error.empty()) std::cerr << r.instance << ": " << r.error << "\n";
      emit(out_path, bench_csv(rows));
      return kExitOk;
    }
    if (*conv) {
      const auto inst = load_instance(instance_path);
      validate_instance(inst.data);
      emit(out_path, to == "dot" ? to_dot(inst.data.graph)
                                 : canonical_dump(instance_to_json(inst)) + "\n");
      return kExitOk;
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const NoPathError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const UnsupportedError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const Error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitOk;
}
