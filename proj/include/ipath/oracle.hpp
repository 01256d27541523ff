#pragma once

#include <cstdint>
#include <string>

#include "ipath/certificate.hpp"
#include "ipath/graph.hpp"

namespace ipath {

struct OracleLimits {
  Vertex cap = 32;
  // Zero disables the limit. A search stopped by the limit reports
  // time_limit_hit and its value is only a lower bound.
  std::int64_t time_limit_ms = 0;
};

inline constexpr Vertex kOracleHardCap = 64;
inline constexpr Vertex kHamiltonianDefaultCap = 20;
inline constexpr Vertex kHamiltonianHardCap = 24;

struct OracleResult {
  std::int64_t value = 0;
  VertexPath witness;  // path, or clique vertices in ascending order
  std::uint64_t nodes_explored = 0;
  bool time_limit_hit = false;

  bool certifying() const { return !time_limit_hit; }
};

// Exact maximum order of an induced path. Refuses graphs above the cap
// with CapExceededError.
OracleResult longest_induced_path(const Graph& g, OracleLimits limits = {});

OracleResult max_clique(const Graph& g, OracleLimits limits = {});

// value is 1 and witness the path when one exists, value 0 when none does.
OracleResult hamiltonian_path(const Graph& g,
                              OracleLimits limits = {kHamiltonianDefaultCap, 0});

struct Verdict {
  bool ok = false;
  std::string reason;  // "not induced" or "bound" when !ok
};

// Independent re-check of a certificate against g.
Verdict verify_certificate(const Graph& g, const ExtractionCertificate& cert);

}  // namespace ipath
