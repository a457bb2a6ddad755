#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "holmc/numerics.hpp"

namespace holmc::cli {

struct RawTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> cells;  // row-major
};

/// UTF-8, comma-separated, header row, '.' decimal. Double quotes may wrap a cell.
RawTable read_csv(const std::string& path);

/// Replaces each listed column by 0/1 indicator columns "name=level" (levels sorted).
RawTable one_hot(const RawTable& table, const std::vector<std::string>& columns);

/// Numeric view of a table. A non-numeric target column with exactly two levels is mapped to
/// 0/1 in sorted level order (with a warning); any other non-numeric cell is an error.
struct NumericTable {
  std::vector<std::string> header;
  Matrix values;
};
NumericTable to_numeric(const RawTable& table, const std::string& target_column);

struct Dataset {
  Matrix X_train, X_test;
  Vector y_train, y_test;
  std::vector<std::string> feature_names;
  std::vector<std::string> dropped;  // constant columns removed under standardization
};

struct IngestOptions {
  std::string target_column;  // empty: last column
  double split = 0.7;
  bool standardize = true;
  bool intercept = false;
  std::uint64_t shuffle_seed = 0;
};

/// Seeded train/test split, train-only standardization, optional intercept.
Dataset prepare(const NumericTable& table, const IngestOptions& opt);

Dataset ingest_csv(const std::string& path, const IngestOptions& opt,
                   const std::vector<std::string>& one_hot_columns = {});

/// Regression data: X ~ N(0, I), y = Xθ_true + ξ·ε with θ_true ~ N(0, I).
struct SyntheticRegression {
  Matrix X;
  Vector y;
  Vector theta_true;
};
SyntheticRegression synthetic_regression(int d, int n, std::uint64_t seed, double xi = 1.0);

/// Separable binary data: y = 1{x·θ_true > 0}.
struct SyntheticClassification {
  Matrix X;
  Vector y;
  Vector theta_true;
};
SyntheticClassification synthetic_classification(int d, int n, std::uint64_t seed);

/// Quadratic target U = ½θᵀAθ − bᵀθ with A = Q diag(linspace(m, L, d)) Qᵀ for a seeded
/// orthogonal Q and b ~ N(0, I).
struct SyntheticQuadratic {
  Matrix A;
  Vector b;
};
SyntheticQuadratic synthetic_quadratic(int d, double m, double L, std::uint64_t seed);

/// Parses "synthetic(d,n,seed)" and "spectrum(d,m,L,seed)"; anything else is a CSV path.
struct DataSpec {
  std::string kind;  // "synthetic", "spectrum" or "csv"
  std::vector<double> args;
  std::string path;
};
DataSpec parse_data_spec(const std::string& s);

/// Table built from a synthetic generator (columns x1..xd, y), so it goes through the same
/// preparation as a CSV.
NumericTable table_from(const Matrix& X, const Vector& y);

}  // namespace holmc::cli
