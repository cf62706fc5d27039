#include "cyk/quadrature.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <memory>
#include <mutex>

#include <boost/math/special_functions/legendre.hpp>

#include "cyk/error.hpp"

namespace cyk {

namespace {

GaussRule build_rule(int n) {
  // legendre_p_zeros returns the non-negative roots only.
  const std::vector<double> half = boost::math::legendre_p_zeros<double>(n);
  GaussRule rule;
  for (auto it = half.rbegin(); it != half.rend(); ++it) {
    if (*it == 0.0) continue;
    rule.nodes.push_back(-*it);
  }
  for (double x : half) rule.nodes.push_back(x);
  for (double x : rule.nodes) {
    const double dp = boost::math::legendre_p_prime(n, x);
    rule.weights.push_back(2.0 / ((1.0 - x * x) * dp * dp));
  }
  return rule;
}

CVec apply_rule(const GaussRule& rule, const Integrand& f, double a, double b) {
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  CVec acc = rule.weights[0] * f(mid + half * rule.nodes[0]);
  for (std::size_t k = 1; k < rule.nodes.size(); ++k) acc += rule.weights[k] * f(mid + half * rule.nodes[k]);
  return acc * half;
}

struct Panel {
  double a, b;
  CVec whole;
  int depth;
};

}  // namespace

const GaussRule& gauss_legendre(int n) {
  if (n < 2 || n > 128) throw Error(ErrorCode::InvalidArgument, "Gauss-Legendre order out of range");
  static std::mutex mu;
  static std::map<int, std::unique_ptr<GaussRule>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<GaussRule>(build_rule(n));
  return *slot;
}

QuadratureResult integrate_adaptive(const Integrand& f, double a, double b, const QuadratureOptions& opt) {
  const GaussRule& rule = gauss_legendre(opt.nodes);
  QuadratureResult res;
  const CVec first = apply_rule(rule, f, a, b);
  res.value = CVec::Zero(first.size());
  const double scale = std::max(1.0, first.cwiseAbs().maxCoeff());
  const double target = opt.tol * scale;
  const double length = b - a;

  // Depth-first with an explicit stack so panel order, and hence the
  // summation order, is fixed.
  std::vector<Panel> stack{{a, b, first, 0}};
  while (!stack.empty()) {
    Panel p = std::move(stack.back());
    stack.pop_back();
    const double m = 0.5 * (p.a + p.b);
    CVec left = apply_rule(rule, f, p.a, m);
    CVec right = apply_rule(rule, f, m, p.b);
    CVec halves = left + right;
    const double err = (halves - p.whole).cwiseAbs().maxCoeff();
    if (!std::isfinite(err)) throw Error(ErrorCode::QuadratureFailure, "non-finite integrand value");
    // Roundoff floor: below this the halves cannot be distinguished anyway.
    const double floor = 64.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, halves.cwiseAbs().maxCoeff());
    const double share = std::max(target * std::abs((p.b - p.a) / length), floor);
    if (err <= share) {
      res.value += halves;
      res.error_estimate += err;
      ++res.panels;
      continue;
    }
    if (p.depth + 1 >= opt.max_depth) {
      throw Error(ErrorCode::QuadratureFailure, "error estimate not met at maximum refinement");
    }
    stack.push_back({m, p.b, std::move(right), p.depth + 1});
    stack.push_back({p.a, m, std::move(left), p.depth + 1});
  }
  return res;
}

}  // namespace cyk
