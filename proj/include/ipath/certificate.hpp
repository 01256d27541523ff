#pragma once

#include <map>
#include <string>

#include "ipath/exact.hpp"
#include "ipath/graph.hpp"

namespace ipath {

using BoundParams = std::map<std::string, Rational>;

/// An induced path of the input graph together with the lower bound it is
/// claimed to meet. The bound is identified by kind and its parameters:
///
///   pathwidth            n, k      (3L)^k >= n
///   treewidth            n, k      2^((4L)^k) >= n
///   bounded_degree       n, delta  delta^L >= n   (L >= n when n <= 2)
///   subpolynomial_degree n, c, d   c L >= (log2 n)^(1-d)
///   polylog              n, c, d   L >= c (log2 n)^d
///   adhesion_pathrep     ell, a    (3L)^(2a) >= ell
///   tree_composition     n, a, c, d  L >= c (log2 n)^(d / (4ad + 1))
///   vortex               n, k      (3L)^k >= ceil(log2 n)
///   modulator/<base>     n, x, segment, base params
///                        segment (x + 1) >= n - x and the base bound on segment
struct ExtractionCertificate {
  VertexPath path;
  std::string bound_kind;
  BoundParams params;
  bool verified = false;
  std::string input_sha256;

  std::size_t order() const { return path.size(); }
  bool operator==(const ExtractionCertificate&) const = default;
};

// Exact check of the claimed inequality for a path of order L. Unknown
// kinds or missing parameters throw InputError.
bool bound_holds(const std::string& kind, const BoundParams& params, std::size_t order);

// Real value of the lower bound, for reports only.
double bound_value(const std::string& kind, const BoundParams& params);

// Sets cert.verified from is_induced_path and bound_holds.
void certify(const Graph& g, ExtractionCertificate& cert);

}  // namespace ipath
