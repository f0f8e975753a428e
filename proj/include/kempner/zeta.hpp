#ifndef KEMPNER_ZETA_HPP
#define KEMPNER_ZETA_HPP

#include <map>
#include <optional>
#include <vector>

namespace kempner {

// zeta(s) for real s >= 1.5 with certified absolute error <= eps:
// partial sum to N-1 plus the Euler-Maclaurin tail N^(1-s)/(s-1) + N^(-s)/2,
// truncation error bounded by s*N^(-s-1)/12.  N is chosen from that bound and
// the sum is carried in long double, so rounding stays far below eps down to
// the 1e-14 floor.
double zeta(double s, double eps = 1e-12);

// Closed forms pi^(2m) * rational for even arguments up to 20, used as an
// independent cross-check of the series evaluator.
std::optional<double> zeta_even_closed_form(int s);

// Main-term constants for the asymptotic checks, all with certified absolute
// error <= 1e-12.  The sum_f and k-free sum_f tables each get two first-class
// candidate constants ("stated" and "consistent"); the discrimination report
// decides empirically which one the data follows.
struct Coefficients {
  double zeta2 = 0;                     // zeta(2)
  double thm3_stated = 0;               // zeta(2)
  double thm3_consistent = 0;           // zeta(2)/2
  double alladi_erdos = 0;              // pi^2/12 (= zeta(2)/2)
  std::map<int, double> zeta_2k;        // zeta(2k) per requested k
  std::map<int, double> thm4_stated;    // zeta(2)^2 / (2 zeta(2k))
  std::map<int, double> thm4_consistent;  // zeta(2) / (2 zeta(2k))
  std::map<int, double> kfree_density;  // 1 / zeta(k)
  std::map<int, double> dirichlet_weight;  // zeta(2) / zeta(2k)

  double at(const std::map<int, double>& m, int k) const;
  double thm4_stated_at(int k) const { return at(thm4_stated, k); }
  double thm4_consistent_at(int k) const { return at(thm4_consistent, k); }
  double kfree_density_at(int k) const { return at(kfree_density, k); }
  double dirichlet_weight_at(int k) const { return at(dirichlet_weight, k); }
};

// ks must lie in [2, 10].
Coefficients coefficients(const std::vector<int>& ks);

}  // namespace kempner

#endif  // KEMPNER_ZETA_HPP
