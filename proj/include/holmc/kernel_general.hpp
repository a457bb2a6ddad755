#pragma once

#include <string>
#include <vector>

#include "holmc/numerics.hpp"
#include "holmc/potentials.hpp"

namespace holmc {

/// One constant-coefficient linear SDE holding the frozen copy of x⁽ᵏ⁾, the P−1 stage copies
/// (each with blocks θ, v1..v_{P−1}) and a constant slot. All stages share one Brownian motion.
struct StackedSystem {
  int P = 0;
  double gamma = 0;
  int d = 0;
  int N = 0;  // (P−1)·P·d + P·d + 1
  Matrix G;   // N×N generator
  Matrix S;   // N×d noise map

  /// Row of block `comp` (0 = θ, n = v_n) in copy `copy` (0 = frozen, j = stage j).
  int index(int copy, int comp) const { return (copy * P + comp) * d; }
  int const_index() const { return N - 1; }
  int block_size() const { return P * d; }
};

StackedSystem build_stacked_system(int P, double gamma, const Matrix& A, const Vector& b);
StackedSystem build_stacked_system(int P, double gamma, int d);  // zero potential

struct AffineGaussianKernel {
  Matrix T;      // Pd×Pd
  Vector c;      // Pd
  Matrix Sigma;  // Pd×Pd
  int P = 0;
  double gamma = 0, eta = 0;
  std::string potential_id;
};

/// Exact one-step law for a quadratic potential from the stacked system (expm + Van Loan).
AffineGaussianKernel transition_quadratic(int P, double gamma, double eta, const Matrix& A,
                                          const Vector& b);

/// Same law, computed per eigen-direction of A (cost linear in d after one eigensolve).
AffineGaussianKernel transition_quadratic_decoupled(int P, double gamma, double eta,
                                                    const Matrix& A, const Vector& b);

/// P×P scalar covariance table; the step covariance is table ⊗ I_d for every potential.
Matrix covariance_universal(int P, double gamma, double eta);

/// Last-stage noise kernels (length P) at lag u = η − s for d = 1.
Vector stage_kernels(int P, double gamma, double u);

enum class CenterPolicy {
  CurrentIterate,  // multivariate Taylor surrogate centred at θ⁽ᵏ⁾
  Origin,          // centred at 0
  Line,            // exact linear part plus degree-3 line expansion along v1⁽ᵏ⁾
  Exact,           // true gradient, no surrogate
};

CenterPolicy parse_center_policy(const std::string& s);

struct GeneralMean {
  Vector mean;
  double richardson_gap = 0;  // relative change when doubling substeps
  bool accuracy_warning = false;
  int substeps = 0;
};

/// Deterministic part of the step for a general potential by stage-recursion quadrature.
GeneralMean mean_general(int P, double gamma, double eta, const Vector& x,
                         const PotentialModel& potential, int degree = 3,
                         CenterPolicy policy = CenterPolicy::CurrentIterate,
                         int substeps = tol::kDefaultSubsteps);

/// sup over t ∈ (0, η] of |x^{st_j}_n(t) − x^{st_{j−1}}_n(t)|² for the deterministic part,
/// indexed [j−2][n] for j = 2..P−1 and n = 0 (θ), 1..P−1 (v_n).
std::vector<std::vector<double>> stage_differences(int P, double gamma, double eta,
                                                   const QuadraticPotential& potential,
                                                   const Vector& x, int time_points = 16);

struct StageDifferenceRow {
  int stage = 0;
  int component = 0;  // 0 = θ, n = v_n
  double exponent = 0;
  std::vector<double> values;  // one per η
};

std::vector<StageDifferenceRow> stage_difference_orders(int P, double gamma,
                                                        const std::vector<double>& eta_list,
                                                        const QuadraticPotential& potential,
                                                        const Vector& x);

}  // namespace holmc
