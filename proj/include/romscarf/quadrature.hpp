#pragma once

#include <functional>
#include <vector>

#include "romscarf/romanovski.hpp"

namespace romscarf {

enum class QuadRule { GaussLegendre, AdaptiveSimpson };

/// How the real line is brought onto a finite interval.
struct LineTransform {
  enum class Kind { ArctanCompactified, TruncatedInterval } kind = Kind::ArctanCompactified;
  double half_width = 0.0;  // X for the truncated mode; must be > 0 there

  static LineTransform arctan() { return LineTransform{}; }
  static LineTransform truncated(double x) {
    return LineTransform{Kind::TruncatedInterval, x};
  }
};

struct QuadratureSpec {
  QuadRule rule = QuadRule::GaussLegendre;
  int nodes = 256;  // Gauss-Legendre node count; Simpson interprets it as a depth budget
  LineTransform transform = LineTransform::arctan();

  static QuadratureSpec defaults() { return QuadratureSpec{}; }
};

struct QuadResult {
  double value = 0.0;
  double error_estimate = 0.0;
};

struct GLNode {
  double x, w;
};

/// Nodes and weights on (-1, 1); computed once per n and cached.
const std::vector<GLNode>& gauss_legendre_nodes(int n);

/// Integral of f over the whole real line under the declared transform.
/// The arctan mode substitutes x = tan(phi), absorbing (1+x^2)^{-p} weight
/// tails into bounded cos-powers on (-pi/2, pi/2). Throws on non-finite
/// samples.
QuadResult integrate_line(const std::function<double(double)>& f, const QuadratureSpec& spec);

/// Integral of f over [lo, hi] with the chosen rule.
QuadResult integrate_interval(const std::function<double(double)>& f, double lo, double hi,
                              const QuadratureSpec& spec);

/// Gamma function restricted to x > 0.
double gamma_pos(double x);

struct GramMatrix {
  int max_n = 0;
  std::vector<std::vector<double>> entries;    // 0 where not computed
  std::vector<std::vector<bool>> convergent;   // mask from the finite-orthogonality predicate
};

/// Weighted inner products of R_0..R_max_n. Entry (m, m') is evaluated only
/// when m + m' < 2p - 1; the rest are flagged divergent and skipped. Each
/// entry is summed in fixed node order, so the parallel and serial versions
/// agree bitwise.
GramMatrix gram(const RomanovskiParams& params, int max_n, const QuadratureSpec& spec);
GramMatrix gram_serial(const RomanovskiParams& params, int max_n, const QuadratureSpec& spec);

}  // namespace romscarf
