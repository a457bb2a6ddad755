#pragma once

#include <array>
#include <cmath>
#include <vector>

namespace holmc::detail {

inline constexpr int kSeriesTerms = 48;

// gamma^gpow * F(x) with F(x) = P0(x) + P1(x) e^{-x} + P2(x) e^{-2x}.
struct Coef {
  int gpow = 0;
  int lead = kSeriesTerms;  // index of the first nonzero Taylor coefficient
  std::array<double, kSeriesTerms> series{};
  std::vector<double> p0, p1, p2;

  double scaled(double x, double x_switch) const {
    if (lead >= kSeriesTerms) return 0.0;
    if (x < x_switch) {
      double acc = 0.0;
      for (int k = kSeriesTerms - 1; k >= 0; --k) acc = acc * x + series[k];
      return acc;
    }
    return horner(p0, x) + horner(p1, x) * std::exp(-x) + horner(p2, x) * std::exp(-2.0 * x);
  }

  double eval(double gamma, double time, double x_switch) const {
    return std::pow(gamma, gpow) * scaled(gamma * time, x_switch);
  }

 private:
  static double horner(const std::vector<double>& p, double x) {
    double acc = 0.0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
  }
};

inline Coef zero_coef() { return Coef{}; }

}  // namespace holmc::detail
