#pragma once

// Test-only transcription of the printed closed forms, used as a second opinion on the
// generated tables. mu(2,3) carries the missing term; sigma covers i, j <= 2 only.

#include <Eigen/Dense>
#include <cmath>

namespace printed {

inline double pw(double x, int k) { return std::pow(x, k); }

inline Eigen::Matrix4d mu(double g, double h) {
  const double e = std::exp(-g * h);
  Eigen::Matrix4d M = Eigen::Matrix4d::Zero();
  const double B5 = -e/pw(g, 5) + 1.0/pw(g, 5) - h/pw(g, 4) + pw(h, 2)/(2.0*pw(g, 3)) - pw(h, 3)/(6.0*pw(g, 2)) + pw(h, 4)/(24.0*g);
  const double B4 = e/pw(g, 4) - 1.0/pw(g, 4) + h/pw(g, 3) - pw(h, 2)/(2.0*pw(g, 2)) + pw(h, 3)/(6.0*g);
  const double B3 = -e/pw(g, 3) + 1.0/pw(g, 3) - h/pw(g, 2) + pw(h, 2)/(2.0*g);
  const double B2 = e/pw(g, 2) - 1.0/pw(g, 2) + h/g;
  M(0, 0) = 1.0;
  M(0, 1) = h - pw(g, 2)*pw(h, 3)/6.0 + pw(g, 4)*pw(h, 5)/120.0 + pw(g, 4)*B5;
  M(0, 2) = g*pw(h, 2)/2.0 - pw(g, 3)*pw(h, 4)/24.0 - pw(g, 3)*B4;
  M(0, 3) = -pw(g, 4)*pw(h, 5)/120.0 + pw(g, 2)*B3 - pw(g, 4)*B5;
  M(1, 1) = 1.0 - pw(g, 2)*pw(h, 2)/2.0 + pw(g, 4)*pw(h, 4)/24.0 + pw(g, 4)*B4;
  M(1, 2) = g*h - pw(g, 3)*pw(h, 3)/6.0 - pw(g, 3)*B3;
  M(1, 3) = -pw(g, 4)*pw(h, 4)/24.0 + pw(g, 2)*B2 - pw(g, 4)*B4;
  const double C6 = -6.0*e/pw(g, 5) + 6.0/pw(g, 5) - 6.0*h/pw(g, 4) + 3.0*pw(h, 2)/pw(g, 3) - pw(h, 3)/pw(g, 2) + pw(h, 4)/(4.0*g);
  const double D4 = 4.0*e/pw(g, 5) - 4.0/pw(g, 5) + h*e/pw(g, 4) + 3.0*h/pw(g, 4) - pw(h, 2)/pw(g, 3) + pw(h, 3)/(6.0*pw(g, 2));
  M(2, 1) = -g*h + pw(g, 3)*pw(h, 3)/6.0 - pw(g, 5)*pw(h, 5)/120.0 - pw(g, 5)*B5 + pw(g, 3)*B3 - pw(g, 5)/6.0*C6 - pw(g, 5)*D4;
  M(2, 2) = (1.0 - pw(g, 2)*pw(h, 2)/2.0 + pw(g, 4)*pw(h, 4)/24.0 + pw(g, 4)*B4 - pw(g, 2)*B2 + pw(g, 4)/2.0*(2.0*e/pw(g, 4) - 2.0/pw(g, 4) + 2.0*h/pw(g, 3) - pw(h, 2)/pw(g, 2) + pw(h, 3)/(3.0*g)) + pw(g, 4)*(-3.0*e/pw(g, 4) + 3.0/pw(g, 4) - h*e/pw(g, 3) - 2.0*h/pw(g, 3) + pw(h, 2)/(2.0*pw(g, 2))));
  M(2, 3) = pw(g, 5)*pw(h, 5)/120.0 - pw(g, 3)*B3 + pw(g, 5)*B5 + (1.0 - e) + pw(g, 5)/6.0*C6 + pw(g, 5)*D4 + 2.0 - g * h - (2.0 + g * h) * e;
  const double K120 = 120.0*e/pw(g, 6) - 120.0/pw(g, 6) + 120.0*h/pw(g, 5) - 60.0*pw(h, 2)/pw(g, 4) + 20.0*pw(h, 3)/pw(g, 3) - 5.0*pw(h, 4)/pw(g, 2) + pw(h, 5)/g;
  const double K5 = -5.0*e/pw(g, 6) + 5.0/pw(g, 6) - h*e/pw(g, 5) - 4.0*h/pw(g, 5) + 3.0*pw(h, 2)/(2.0*pw(g, 4)) - pw(h, 3)/(3.0*pw(g, 3)) + pw(h, 4)/(24.0*pw(g, 2));
  const double K3 = -3.0*e/pw(g, 4) + 3.0/pw(g, 4) - h*e/pw(g, 3) - 2.0*h/pw(g, 3) + pw(h, 2)/(2.0*pw(g, 2));
  const double K30 = -30.0*e/pw(g, 6) + 30.0/pw(g, 6) - 6.0*h*e/pw(g, 5) - 24.0*h/pw(g, 5) + 9.0*pw(h, 2)/pw(g, 4) - 2.0*pw(h, 3)/pw(g, 3) + pw(h, 4)/(4.0*pw(g, 2));
  const double K10 = 10.0*e/pw(g, 6) - 10.0/pw(g, 6) + 4.0*h*e/pw(g, 5) + 6.0*h/pw(g, 5) + pw(h, 2)*e/(2.0*pw(g, 4)) - 3.0*pw(h, 2)/(2.0*pw(g, 4)) + pw(h, 3)/(6.0*pw(g, 3));
  M(3, 1) = (pw(g, 2)*B2 - pw(g, 4)/6.0*(6.0*e/pw(g, 4) - 6.0/pw(g, 4) + 6.0*h/pw(g, 3) - 3.0*pw(h, 2)/pw(g, 2) + pw(h, 3)/g) + pw(g, 6)/120.0*K120 + pw(g, 6)*K5 - pw(g, 4)*K3 + pw(g, 6)/6.0*K30 + pw(g, 6)*K10);
  M(3, 2) = (-g*(1.0/g - e/g) + pw(g, 3)/2.0*(-2.0*e/pw(g, 3) + 2.0/pw(g, 3) - 2.0*h/pw(g, 2) + pw(h, 2)/g) - pw(g, 5)/24.0*(-24.0*e/pw(g, 5) + 24.0/pw(g, 5) - 24.0*h/pw(g, 4) + 12.0*pw(h, 2)/pw(g, 3) - 4.0*pw(h, 3)/pw(g, 2) + pw(h, 4)/g) - pw(g, 5)*D4 + pw(g, 3)*(2.0*e/pw(g, 3) - 2.0/pw(g, 3) + h*e/pw(g, 2) + h/pw(g, 2)) - pw(g, 5)/2.0*(8.0*e/pw(g, 5) - 8.0/pw(g, 5) + 2.0*h*e/pw(g, 4) + 6.0*h/pw(g, 4) - 2.0*pw(h, 2)/pw(g, 3) + pw(h, 3)/(3.0*pw(g, 2))) - pw(g, 5)*(-6.0*e/pw(g, 5) + 6.0/pw(g, 5) - 3.0*h*e/pw(g, 4) - 3.0*h/pw(g, 4) - pw(h, 2)*e/(2.0*pw(g, 3)) + pw(h, 2)/(2.0*pw(g, 3))));
  M(3, 3) = (e - pw(g, 6)/120.0*K120 + pw(g, 4)*K3 - pw(g, 6)*K5 - pw(g, 2)*(-e/pw(g, 2) + 1.0/pw(g, 2) - h*e/g) - pw(g, 6)/6.0*K30 + pw(g, 4)*(3.0*e/pw(g, 4) - 3.0/pw(g, 4) + 2.0*h*e/pw(g, 3) + h/pw(g, 3) + pw(h, 2)*e/(2.0*pw(g, 2))) - pw(g, 6)*K10);
  return M;
}

/// Entries with an index 3 are left at zero.
inline Eigen::Matrix4d sigma(double g, double h) {
  const double e = std::exp(-g * h);
  const double e2 = std::exp(-2.0 * g * h);
  Eigen::Matrix4d S = Eigen::Matrix4d::Zero();
  S(0, 0) = pw(g, 3)*pw(h, 5)/10.0 - pw(g, 2)*pw(h, 4)/2.0 - e2/pw(g, 2) + 4.0*e/pw(g, 2) - 3.0/pw(g, 2) + 4.0*g*pw(h, 3)/3.0 + 2.0*pw(h, 2)*e + 2.0*h/g - 2.0*pw(h, 2);
  S(1, 1) = 2.0*pw(g, 3)*pw(h, 3)/3.0 - 2.0*pw(g, 2)*pw(h, 2) - 4.0*g*h*e + 2.0*g*h - e2 + 1.0;
  S(2, 2) = (pw(g, 5)*pw(h, 5)/10.0 - 2.0*pw(g, 3)*pw(h, 3)*e - 4.0*pw(g, 3)*pw(h, 3)/3.0 - pw(g, 2)*pw(h, 2)*e2 - 10.0*pw(g, 2)*pw(h, 2)*e - 5.0*g*h*e2 - 12.0*g*h*e + 8.0*g*h - 6.5*e2 + 4.0*e + 2.5);
  S(0, 1) = pw(g, 3)*pw(h, 4)/4.0 - pw(g, 2)*pw(h, 3) - g*pw(h, 2)*e + 2.0*g*pw(h, 2) + 2.0*h*e + e2/g - 2.0*e/g + 1.0/g - 2.0*h;
  S(0, 2) = (-pw(g, 4)*pw(h, 5)/10.0 + pw(g, 3)*pw(h, 4)/4.0 + pw(g, 2)*pw(h, 3)*e + pw(g, 2)*pw(h, 3)/3.0 + 2.0*g*pw(h, 2)*e - 2.0*g*pw(h, 2) - h*e2 + 2.0*h*e - 5.0*e2/(2.0*g) + 10.0*e/g - 15.0/(2.0*g) + 4.0*h);
  S(1, 2) = -pw(g, 4)*pw(h, 4)/4.0 + pw(g, 3)*pw(h, 3)/3.0 + 3.0*pw(g, 2)*pw(h, 2)*e + 2.0*pw(g, 2)*pw(h, 2) + g*h*e2 + 8.0*g*h*e - 4.0*g*h + 2.5*e2 - 2.5;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < i; ++j) S(i, j) = S(j, i);
  return S;
}

}  // namespace printed
