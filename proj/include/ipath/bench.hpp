#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ipath/io.hpp"

namespace ipath {

// Extractor selection shared by the CLI and the bench runner.
struct ExtractorOptions {
  std::string name;  // pathwidth, treewidth, bounded-degree, subpolynomial-degree,
                     // modulator, adhesion, tree-composition, vortex, master
  std::optional<int> k;
  std::optional<int> a;
  std::optional<int> delta;
  std::optional<Rational> c;
  std::optional<Rational> d;
  VertexSet x;  // modulator vertices
  int base_k = 0;
  std::optional<int> base_delta;
  CompositionBranch branch = CompositionBranch::kAuto;
};

CompositionBranch composition_branch_from_string(const std::string& s);

ExtractorOptions extractor_options_from_json(const Json& j);

// Runs the selected extractor and fills in the input hash. Throws the
// library errors for inputs the extractor does not accept.
ExtractionCertificate run_extractor(const Instance& inst, const ExtractorOptions& opts);

Instance generate_from_json(const std::string& generator, const Json& params);

struct BenchRow {
  std::string instance;
  Vertex n = 0;
  std::string k;
  std::optional<std::size_t> order;  // empty when the row failed
  std::optional<double> bound;
  std::optional<std::int64_t> oracle;
  double time_ms = 0;
  std::string error;
};

// Grid: {"rows": [{"generator", <generator params, scalars or lists or
// {"from","to","step"} ranges>, "extract": {...}, "oracle": bool,
// "oracle_cap": int}]}. Lists and ranges expand to their cartesian product.
std::vector<BenchRow> run_bench(const Json& grid, unsigned threads = 1);

std::string bench_csv(const std::vector<BenchRow>& rows);

}  // namespace ipath
