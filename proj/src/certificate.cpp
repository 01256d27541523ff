#include "ipath/certificate.hpp"

#include <cmath>

#include "ipath/errors.hpp"

namespace ipath {

namespace {

const Rational& param(const BoundParams& params, const std::string& key) {
  const auto it = params.find(key);
  if (it == params.end()) throw InputError("certificate parameter '" + key + "' missing");
  return it->second;
}

BigInt integer_param(const BoundParams& params, const std::string& key) {
  const Rational& r = param(params, key);
  if (boost::multiprecision::denominator(r) != 1 || r < 0) {
    throw InputError("certificate parameter '" + key + "' must be a nonnegative integer");
  }
  return boost::multiprecision::numerator(r);
}

bool log_power_bound(const BoundParams& params, std::size_t order, const Rational& c,
                     const Rational& e) {
  const BigInt n = integer_param(params, "n");
  if (n < 1) return true;
  const auto cmp = compare_with_log_power(Rational(order), c, e, n);
  return cmp.has_value() && *cmp >= 0;
}

double log2d(const Rational& r) { return std::log2(to_double(r)); }

}  // namespace

bool bound_holds(const std::string& kind, const BoundParams& params, std::size_t order) {
  const BigInt L = order;
  if (kind == "pathwidth") {
    const BigInt n = integer_param(params, "n");
    return ipow(3 * L, to_exponent(param(params, "k"))) >= n;
  }
  if (kind == "treewidth") {
    const BigInt n = integer_param(params, "n");
    const BigInt e = ipow(4 * L, to_exponent(param(params, "k")));
    if (n <= 1) return true;
    if (e >= bit_length(n)) return true;
    return (BigInt(1) << static_cast<unsigned>(e)) >= n;
  }
  if (kind == "bounded_degree") {
    const BigInt n = integer_param(params, "n");
    const BigInt delta = integer_param(params, "delta");
    if (n <= 2) return L >= n;
    if (delta < 2) return false;
    return ipow(delta, static_cast<unsigned>(order)) >= n;
  }
  if (kind == "subpolynomial_degree") {
    const Rational& c = param(params, "c");
    const Rational& d = param(params, "d");
    if (c <= 0 || d < 0 || d >= 1) throw InputError("subpolynomial_degree needs c > 0, 0 <= d < 1");
    return log_power_bound(params, order, 1 / c, 1 - d);
  }
  if (kind == "polylog") {
    const Rational& c = param(params, "c");
    const Rational& d = param(params, "d");
    if (c <= 0 || d < 0) throw InputError("polylog needs c > 0, d >= 0");
    return log_power_bound(params, order, c, d);
  }
  if (kind == "adhesion_pathrep") {
    const BigInt ell = integer_param(params, "ell");
    const unsigned a = to_exponent(param(params, "a"));
    return ipow(3 * L, 2 * a) >= ell;
  }
  if (kind == "tree_composition") {
    const Rational& a = param(params, "a");
    const Rational& c = param(params, "c");
    const Rational& d = param(params, "d");
    if (a < 1 || c <= 0 || d <= 0) throw InputError("tree_composition needs a >= 1, c > 0, d > 0");
    return log_power_bound(params, order, c, d / (4 * a * d + 1));
  }
  if (kind == "vortex") {
    const BigInt n = integer_param(params, "n");
    if (n < 1) return true;
    return ipow(3 * L, to_exponent(param(params, "k"))) >= ceil_log2(n);
  }
  if (kind.rfind("modulator/", 0) == 0) {
    const BigInt n = integer_param(params, "n");
    const BigInt x = integer_param(params, "x");
    const BigInt seg = integer_param(params, "segment");
    if (seg * (x + 1) < n - x) return false;
    BoundParams base = params;
    base["n"] = Rational(seg);
    base.erase("x");
    base.erase("segment");
    return bound_holds(kind.substr(10), base, order);
  }
  throw InputError("unknown bound kind '" + kind + "'");
}

double bound_value(const std::string& kind, const BoundParams& params) {
  auto get = [&](const char* key) { return to_double(param(params, key)); };
  if (kind == "pathwidth") return std::pow(get("n"), 1.0 / get("k")) / 3.0;
  if (kind == "treewidth") return std::pow(std::log2(get("n")), 1.0 / get("k")) / 4.0;
  if (kind == "bounded_degree") {
    if (get("n") <= 2) return get("n");
    return std::log2(get("n")) / std::log2(get("delta"));
  }
  if (kind == "subpolynomial_degree") return std::pow(std::log2(get("n")), 1 - get("d")) / get("c");
  if (kind == "polylog") return get("c") * std::pow(std::log2(get("n")), get("d"));
  if (kind == "adhesion_pathrep") return std::pow(get("ell"), 1.0 / (2 * get("a"))) / 3.0;
  if (kind == "tree_composition") {
    const double a = get("a");
    const double d = get("d");
    return get("c") * std::pow(log2d(param(params, "n")), d / (4 * a * d + 1));
  }
  if (kind == "vortex") {
    return std::pow(std::ceil(std::log2(get("n"))), 1.0 / get("k")) / 3.0;
  }
  if (kind.rfind("modulator/", 0) == 0) {
    BoundParams base = params;
    base["n"] = param(params, "segment");
    return bound_value(kind.substr(10), base);
  }
  throw InputError("unknown bound kind '" + kind + "'");
}

void certify(const Graph& g, ExtractionCertificate& cert) {
  cert.verified = is_induced_path(g, cert.path) && bound_holds(cert.bound_kind, cert.params,
                                                                cert.order());
}

}  // namespace ipath
