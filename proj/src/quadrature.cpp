#include "abkernel/quadrature.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>

#include <Eigen/Eigenvalues>

namespace abk {

namespace {

Rule make_gauss_legendre(int n) {
  Rule r;
  r.x.resize(n);
  r.w.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      if (n == 1) p1 = x, p0 = 1.0;
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    // recompute derivative at the converged node
    double p0 = 1.0, p1 = x;
    for (int k = 2; k <= n; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = n * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    r.x[i] = -x;
    r.x[n - 1 - i] = x;
    r.w[i] = w;
    r.w[n - 1 - i] = w;
  }
  if (n % 2 == 1) r.x[n / 2] = 0.0;
  return r;
}

// L^a_n(x) and L^a_{n-1}(x), both scaled by e^{-s}; returns s.
double laguerre_pair(int n, double a, double x, double& ln, double& lm1) {
  double p0 = 1.0, p1 = 1.0 + a - x, s = 0.0;
  for (int k = 1; k < n; ++k) {
    const double p2 = ((2.0 * k + 1.0 + a - x) * p1 - (k + a) * p0) / (k + 1.0);
    p0 = p1;
    p1 = p2;
    if (std::abs(p1) > 1e100) {
      p0 *= 1e-100;
      p1 *= 1e-100;
      s += 100.0 * M_LN10;
    }
  }
  ln = p1;
  lm1 = p0;
  return s;
}

// Golub-Welsch nodes polished by Newton on L^a_n; weights from
// w = Gamma(n+a+1) / (n! x L'(x)^2), which keeps the small tail weights
// accurate to relative precision.
Rule make_gauss_laguerre(int n, double a) {
  Rule r;
  r.x.resize(n);
  r.w.resize(n);
  if (n == 1) {
    r.x[0] = 1.0 + a;
    r.w[0] = std::tgamma(a + 1.0);
    return r;
  }
  Eigen::VectorXd diag(n), sub(n - 1);
  for (int i = 0; i < n; ++i) diag(i) = 2.0 * i + 1.0 + a;
  for (int i = 1; i < n; ++i) sub(i - 1) = std::sqrt(i * (i + a));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
  const double log_c = std::lgamma(n + a + 1.0) - std::lgamma(n + 1.0);
  for (int i = 0; i < n; ++i) {
    double x = es.eigenvalues()(i), ln = 0.0, lm1 = 0.0, s = 0.0;
    for (int it = 0; it < 20; ++it) {
      s = laguerre_pair(n, a, x, ln, lm1);
      const double d = (n * ln - (n + a) * lm1) / x;
      const double dx = ln / d;
      x -= dx;
      if (std::abs(dx) <= 1e-15 * x) break;
    }
    s = laguerre_pair(n, a, x, ln, lm1);
    const double d = (n * ln - (n + a) * lm1) / x;
    r.x[i] = x;
    r.w[i] = std::exp(log_c - std::log(x) - 2.0 * (std::log(std::abs(d)) + s));
  }
  return r;
}

std::mutex g_cache_mutex;

} // namespace

const Rule& gauss_legendre(int n) {
  static std::map<int, std::unique_ptr<Rule>> cache;
  std::lock_guard<std::mutex> lock(g_cache_mutex);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<Rule>(make_gauss_legendre(n));
  return *slot;
}

const Rule& gauss_laguerre(int n, double a) {
  static std::map<std::pair<int, double>, std::unique_ptr<Rule>> cache;
  std::lock_guard<std::mutex> lock(g_cache_mutex);
  auto& slot = cache[{n, a}];
  if (!slot) slot = std::make_unique<Rule>(make_gauss_laguerre(n, a));
  return *slot;
}

Rule composite_gauss_legendre(const std::vector<double>& breaks, int order) {
  const Rule& g = gauss_legendre(order);
  Rule out;
  for (size_t i = 0; i + 1 < breaks.size(); ++i) {
    const double a = breaks[i], b = breaks[i + 1];
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    for (int j = 0; j < order; ++j) {
      out.x.push_back(c + h * g.x[j]);
      out.w.push_back(h * g.w[j]);
    }
  }
  return out;
}

} // namespace abk
