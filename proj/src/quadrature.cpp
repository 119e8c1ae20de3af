#include "romscarf/quadrature.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace romscarf {

namespace {

std::vector<GLNode> compute_gauss_legendre(int n) {
  // Newton iteration on the Legendre recurrence, exploiting root symmetry.
  std::vector<GLNode> nodes(static_cast<size_t>(n));
  int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p1 = 1.0, p2 = 0.0;
      for (int j = 0; j < n; ++j) {
        double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1.0);
      }
      pp = n * (z * p1 - p2) / (z * z - 1.0);
      double dz = -p1 / pp;
      z += dz;
      if (std::abs(dz) < 1e-15) break;
    }
    nodes[static_cast<size_t>(i)] = {-z, 2.0 / ((1.0 - z * z) * pp * pp)};
    nodes[static_cast<size_t>(n - 1 - i)] = {z, nodes[static_cast<size_t>(i)].w};
  }
  return nodes;
}

}  // namespace

const std::vector<GLNode>& gauss_legendre_nodes(int n) {
  if (n < 2) throw std::domain_error("gauss_legendre_nodes: need at least 2 nodes");
  static std::map<int, std::vector<GLNode>> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, compute_gauss_legendre(n)).first;
  return it->second;
}

namespace {

double gauss_on_interval(const std::function<double(double)>& f, double lo, double hi, int n) {
  const auto& nodes = gauss_legendre_nodes(n);
  double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
  double sum = 0.0;
  for (const auto& nd : nodes) {
    double v = f(mid + half * nd.x);
    if (!std::isfinite(v)) throw std::runtime_error("integrate: non-finite sample");
    sum += nd.w * v;
  }
  return half * sum;
}

struct SimpsonState {
  const std::function<double(double)>& f;
  double tol;
  int max_depth;
  long evals = 0;

  double sample(double x) {
    double v = f(x);
    if (!std::isfinite(v)) throw std::runtime_error("integrate: non-finite sample");
    ++evals;
    return v;
  }

  double recurse(double lo, double hi, double flo, double fmid, double fhi, double whole,
                 int depth) {
    double mid = 0.5 * (lo + hi);
    double lm = 0.5 * (lo + mid), rm = 0.5 * (mid + hi);
    double flm = sample(lm), frm = sample(rm);
    double left = (mid - lo) / 6.0 * (flo + 4.0 * flm + fmid);
    double right = (hi - mid) / 6.0 * (fmid + 4.0 * frm + fhi);
    double delta = left + right - whole;
    if (depth >= max_depth || std::abs(delta) <= 15.0 * tol)
      return left + right + delta / 15.0;
    return recurse(lo, mid, flo, flm, fmid, left, depth + 1) +
           recurse(mid, hi, fmid, frm, fhi, right, depth + 1);
  }
};

double simpson_on_interval(const std::function<double(double)>& f, double lo, double hi,
                           double tol, int max_depth) {
  SimpsonState st{f, tol, max_depth};
  double flo = st.sample(lo), fhi = st.sample(hi), fmid = st.sample(0.5 * (lo + hi));
  double whole = (hi - lo) / 6.0 * (flo + 4.0 * fmid + fhi);
  return st.recurse(lo, hi, flo, fmid, fhi, whole, 0);
}

}  // namespace

QuadResult integrate_interval(const std::function<double(double)>& f, double lo, double hi,
                              const QuadratureSpec& spec) {
  if (!(hi > lo)) throw std::domain_error("integrate_interval: empty interval");
  if (spec.rule == QuadRule::GaussLegendre) {
    int n = std::max(spec.nodes, 4);
    double fine = gauss_on_interval(f, lo, hi, n);
    double coarse = gauss_on_interval(f, lo, hi, std::max(n / 2, 2));
    return QuadResult{fine, std::abs(fine - coarse)};
  }
  int depth = std::max(8, spec.nodes / 16);
  double tol = 1e-12;
  double fine = simpson_on_interval(f, lo, hi, tol, depth);
  double coarse = simpson_on_interval(f, lo, hi, tol * 16.0, depth - 2);
  return QuadResult{fine, std::abs(fine - coarse)};
}

QuadResult integrate_line(const std::function<double(double)>& f, const QuadratureSpec& spec) {
  // x = tan(phi): integral over phi in (-pi/2, pi/2) of f(tan phi) sec^2 phi.
  auto transformed = [&f](double phi) {
    double c = std::cos(phi);
    double x = std::tan(phi);
    return f(x) / (c * c);
  };
  double half = M_PI / 2.0;
  if (spec.transform.kind == LineTransform::Kind::TruncatedInterval) {
    double X = spec.transform.half_width;
    if (!(X > 0)) throw std::domain_error("integrate_line: truncation width must be > 0");
    half = std::atan(X);
  }
  return integrate_interval(transformed, -half, half, spec);
}

double gamma_pos(double x) {
  if (!(x > 0)) throw std::domain_error("gamma_pos: argument must be > 0");
  return std::tgamma(x);
}

namespace {

GramMatrix gram_impl(const RomanovskiParams& params, int max_n, const QuadratureSpec& spec,
                     bool parallel) {
  if (max_n < 0) throw std::domain_error("gram: max_n must be >= 0");
  int dim = max_n + 1;
  GramMatrix g;
  g.max_n = max_n;
  g.entries.assign(static_cast<size_t>(dim), std::vector<double>(static_cast<size_t>(dim), 0.0));
  g.convergent.assign(static_cast<size_t>(dim), std::vector<bool>(static_cast<size_t>(dim), false));

  std::vector<std::vector<double>> polys(static_cast<size_t>(dim));
  for (int n = 0; n <= max_n; ++n)
    polys[static_cast<size_t>(n)] = to_double_coeffs(romanovski(params, n).poly);

  double p = params.p.to_double(), q = params.q.to_double();

  struct Task {
    int m, mp;
  };
  std::vector<Task> tasks;
  for (int m = 0; m <= max_n; ++m)
    for (int mp = m; mp <= max_n; ++mp)
      if (orthogonal_pair(params, m, mp)) tasks.push_back({m, mp});

  auto entry = [&](const Task& t) {
    auto integrand = [&](double x) {
      return std::pow(1.0 + x * x, -p) * std::exp(q * std::atan(x)) *
             horner(polys[static_cast<size_t>(t.m)], x) *
             horner(polys[static_cast<size_t>(t.mp)], x);
    };
    return integrate_line(integrand, spec).value;
  };

  if (parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (long i = 0; i < static_cast<long>(tasks.size()); ++i) {
      double v = entry(tasks[static_cast<size_t>(i)]);
      const Task& t = tasks[static_cast<size_t>(i)];
      g.entries[static_cast<size_t>(t.m)][static_cast<size_t>(t.mp)] = v;
      g.entries[static_cast<size_t>(t.mp)][static_cast<size_t>(t.m)] = v;
    }
  } else {
    for (const auto& t : tasks) {
      double v = entry(t);
      g.entries[static_cast<size_t>(t.m)][static_cast<size_t>(t.mp)] = v;
      g.entries[static_cast<size_t>(t.mp)][static_cast<size_t>(t.m)] = v;
    }
  }
  for (const auto& t : tasks) {
    g.convergent[static_cast<size_t>(t.m)][static_cast<size_t>(t.mp)] = true;
    g.convergent[static_cast<size_t>(t.mp)][static_cast<size_t>(t.m)] = true;
  }
  return g;
}

}  // namespace

GramMatrix gram(const RomanovskiParams& params, int max_n, const QuadratureSpec& spec) {
  return gram_impl(params, max_n, spec, true);
}

GramMatrix gram_serial(const RomanovskiParams& params, int max_n, const QuadratureSpec& spec) {
  return gram_impl(params, max_n, spec, false);
}

}  // namespace romscarf
