#pragma once

#include <array>
#include <memory>
#include <string>
#include <utility>

#include "holmc/numerics.hpp"

namespace holmc {

/// Coefficients of t ↦ ∇U(θ + t v) up to t³: coef[k] = ω⁽ᵏ⁾(0)/k!.
struct TaylorLine {
  std::array<Vector, 4> coef;
  int degree = 3;

  Vector evaluate(double t) const;
};

/// Line expansion used as a stage surrogate: the part of ∇U that is linear in θ is kept
/// exact along the stage path, the rest is expanded to degree 3 along θ + t·v.
struct LineExpansion {
  double ridge = 0;                  // exact linear part λ·θ (logistic)
  Matrix linear;                     // exact linear part A·θ (quadratic); empty if unused
  Vector offset;                     // constant term (−b for quadratic)
  std::array<Vector, 4> derivative;  // data-part derivatives D⁽ᵏ⁾(0) (logistic)
  bool has_data = false;

  /// Surrogate gradient at time t on a stage path point θ_path.
  Vector evaluate(double t, const Vector& theta_path) const;
};

class PotentialModel {
 public:
  virtual ~PotentialModel() = default;

  virtual std::string kind() const = 0;
  virtual int dim() const = 0;
  virtual double value(const Vector& theta) const = 0;
  virtual Vector gradient(const Vector& theta) const = 0;
  virtual Matrix hessian(const Vector& theta) const = 0;
  /// Curvature bounds (m, L).
  virtual std::pair<double, double> hessian_bounds() const = 0;
  virtual TaylorLine taylor_line(const Vector& theta, const Vector& v, int degree = 3) const = 0;
  virtual LineExpansion line_expansion(const Vector& theta, const Vector& v) const = 0;

  /// Multivariate degree-3 Taylor surrogate of ∇U centred at `center`, evaluated at x.
  Vector evaluate_taylor_at(const Vector& center, const Vector& x) const;
};

enum class Provenance { Explicit, FromDataset };

class QuadraticPotential final : public PotentialModel {
 public:
  QuadraticPotential(Matrix A, Vector b, Provenance provenance = Provenance::Explicit);

  std::string kind() const override { return "quadratic"; }
  int dim() const override { return static_cast<int>(b_.size()); }
  double value(const Vector& theta) const override;
  Vector gradient(const Vector& theta) const override;
  Matrix hessian(const Vector&) const override { return A_; }
  std::pair<double, double> hessian_bounds() const override;
  TaylorLine taylor_line(const Vector& theta, const Vector& v, int degree = 3) const override;
  LineExpansion line_expansion(const Vector& theta, const Vector& v) const override;

  const Matrix& A() const { return A_; }
  const Vector& b() const { return b_; }
  Provenance provenance() const { return provenance_; }
  /// Minimizer A⁻¹b.
  Vector minimizer() const;

 private:
  Matrix A_;
  Vector b_;
  Provenance provenance_;
  double m_ = 0, L_ = 0;
};

/// A = XᵀX/n + λI, b = Xᵀy/n.
QuadraticPotential quadratic_from_dataset(const Matrix& X, const Vector& y, double lambda);

class LogisticPotential final : public PotentialModel {
 public:
  LogisticPotential(Matrix X, Vector y, double lambda);

  std::string kind() const override { return "logistic"; }
  int dim() const override { return static_cast<int>(X_.cols()); }
  double value(const Vector& theta) const override;
  Vector gradient(const Vector& theta) const override;
  Matrix hessian(const Vector& theta) const override;
  std::pair<double, double> hessian_bounds() const override;
  TaylorLine taylor_line(const Vector& theta, const Vector& v, int degree = 3) const override;
  LineExpansion line_expansion(const Vector& theta, const Vector& v) const override;

  /// Data-part derivatives of t ↦ Xᵀ(σ(X(θ+tv)) − y) at t = 0, orders 0..3.
  std::array<Vector, 4> data_derivatives(const Vector& theta, const Vector& v) const;

  const Matrix& X() const { return X_; }
  const Vector& y() const { return y_; }
  double lambda() const { return lambda_; }

 private:
  Matrix X_;
  Vector y_;
  double lambda_;
  double L_ = 0;
};

/// Numerically stable logistic function with inputs clamped at ±500.
double sigmoid(double z);

Vector logistic_gradient(const LogisticPotential& pot, const Vector& theta);
TaylorLine logistic_taylor_line(const LogisticPotential& pot, const Vector& theta, const Vector& v,
                                int degree = 3);

}  // namespace holmc
