#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "ipath/graph.hpp"
#include "ipath/representation.hpp"

namespace ipath {

struct GeneratedInstance {
  Graph graph;
  VertexPath ham;
  std::optional<Representation> rep;
  std::string family;
  std::map<std::string, std::int64_t> meta;

  bool operator==(const GeneratedInstance&) const = default;
};

// Checks the witness and the representation; throws on failure.
void validate_instance(const GeneratedInstance& inst);

// Interval graph with a Hamiltonian path, clique number at most k and
// longest induced path of order at most n^(2/k) + 1. Requires 2 <= k <= n.
GeneratedInstance gen_worstcase_interval(std::int64_t n, std::int64_t k);

// Parameters of the top level of gen_worstcase_interval: q and, for k >= 4,
// the order n' of the recursive copies (0 when not applicable).
struct WorstcaseParams {
  std::int64_t q = 0;
  std::int64_t n_sub = 0;
};
WorstcaseParams worstcase_params(std::int64_t n, std::int64_t k);

// Generation i >= 1 of the doubling outerplanar family: 3 * 2^(i-1) vertices.
GeneratedInstance gen_outerplanar_family(int generation);

// k-th power of P_n with the sliding-window path representation.
GeneratedInstance gen_path_power(std::int64_t n, std::int64_t k);

// q copies of K_s glued in a chain at single cut vertices.
GeneratedInstance gen_chained_cliques(std::int64_t q, std::int64_t s);

enum class RandomProfile { kInterval, kKtreePathBuilt, kBoundedDegree };

std::string_view to_string(RandomProfile p);
RandomProfile random_profile_from_string(std::string_view s);

// Seeded random instance. k bounds the width (width < k) for the interval
// and k-tree profiles and the maximum degree for the bounded-degree profile,
// which carries no representation.
GeneratedInstance gen_random_validated(std::uint64_t seed, RandomProfile profile, std::int64_t n,
                                       std::int64_t k);

}  // namespace ipath
