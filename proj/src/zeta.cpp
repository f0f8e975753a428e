#include "kempner/zeta.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace kempner {

double zeta(double s, double eps) {
  if (s <= 1.0) throw std::domain_error("zeta: s must be > 1");
  if (s < 1.5) throw std::domain_error("zeta: evaluator certified only for s >= 1.5");
  if (eps < 1e-14) throw std::invalid_argument("zeta: eps floor is 1e-14");

  // Truncation error of the tail correction is below s * N^(-s-1) / 12;
  // pick N so that bound is at most eps/2, leaving the rest for rounding.
  double n_min = std::pow(s / (6.0 * eps), 1.0 / (s + 1.0));
  auto n_limit = uint64_t(n_min) + 2;

  long double sum = 0.0L;
  for (uint64_t n = n_limit - 1; n >= 1; --n)  // small terms first
    sum += std::pow((long double)n, (long double)-s);
  long double nl = (long double)n_limit;
  sum += std::pow(nl, 1.0L - (long double)s) / ((long double)s - 1.0L);
  sum += std::pow(nl, (long double)-s) / 2.0L;
  return double(sum);
}

std::optional<double> zeta_even_closed_form(int s) {
  // zeta(2m) = pi^(2m) * (rational); tabulated through s = 20.
  constexpr double pi = std::numbers::pi;
  switch (s) {
    case 2: return pi * pi / 6.0;
    case 4: return std::pow(pi, 4) / 90.0;
    case 6: return std::pow(pi, 6) / 945.0;
    case 8: return std::pow(pi, 8) / 9450.0;
    case 10: return std::pow(pi, 10) / 93555.0;
    case 12: return 691.0 * std::pow(pi, 12) / 638512875.0;
    case 14: return 2.0 * std::pow(pi, 14) / 18243225.0;
    case 16: return 3617.0 * std::pow(pi, 16) / 325641566250.0;
    case 18: return 43867.0 * std::pow(pi, 18) / 38979295480125.0;
    case 20: return 174611.0 * std::pow(pi, 20) / 1531329465290625.0;
    default: return std::nullopt;
  }
}

double Coefficients::at(const std::map<int, double>& m, int k) const {
  auto it = m.find(k);
  if (it == m.end())
    throw std::invalid_argument("coefficients: k = " + std::to_string(k) +
                                " was not requested");
  return it->second;
}

Coefficients coefficients(const std::vector<int>& ks) {
  constexpr double kEps = 1e-13;
  Coefficients c;
  c.zeta2 = zeta(2.0, kEps);
  c.thm3_stated = c.zeta2;
  c.thm3_consistent = c.zeta2 / 2.0;
  c.alladi_erdos = std::numbers::pi * std::numbers::pi / 12.0;
  for (int k : ks) {
    if (k < 2 || k > 10)
      throw std::invalid_argument("coefficients: k must be in [2, 10], got " +
                                  std::to_string(k));
    double z2k = zeta(2.0 * k, kEps);
    c.zeta_2k[k] = z2k;
    c.thm4_stated[k] = c.zeta2 * c.zeta2 / (2.0 * z2k);
    c.thm4_consistent[k] = c.zeta2 / (2.0 * z2k);
    c.kfree_density[k] = 1.0 / zeta(double(k), kEps);
    c.dirichlet_weight[k] = c.zeta2 / z2k;
  }
  return c;
}

}  // namespace kempner
