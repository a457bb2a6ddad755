#include "holmc/cli/data.hpp"

#include <spdlog/spdlog.h>

#include <algorithm>
#include <boost/random/mersenne_twister.hpp>
#include <boost/random/uniform_int_distribution.hpp>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "holmc/errors.hpp"
#include "holmc/sampler.hpp"

namespace holmc::cli {

namespace {

// Stream indices reserved for data generation, disjoint from chain streams in practice.
constexpr std::uint64_t kDataStream = 0x5eed'da7a'0000'0001ULL;
constexpr std::uint64_t kSplitStream = 0x5eed'da7a'0000'0002ULL;

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char ch = line[i];
    if (quoted) {
      if (ch == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cell += '"';
        ++i;
      } else if (ch == '"') {
        quoted = false;
      } else {
        cell += ch;
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      out.push_back(cell);
      cell.clear();
    } else {
      cell += ch;
    }
  }
  out.push_back(cell);
  return out;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

bool parse_number(const std::string& s, double& v) {
  const std::string t = trim(s);
  if (t.empty()) return false;
  const char* first = t.data();
  if (*first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, t.data() + t.size(), v);
  return ec == std::errc() && ptr == t.data() + t.size() && std::isfinite(v);
}

std::size_t column_index(const std::vector<std::string>& header, const std::string& name) {
  const auto it = std::find(header.begin(), header.end(), name);
  if (it == header.end()) throw Error(ErrorKind::MissingColumn, "no column named '" + name + "'");
  return static_cast<std::size_t>(it - header.begin());
}

}  // namespace

RawTable read_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open '" + path + "'");
  RawTable t;
  std::string line;
  bool have_header = false;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!have_header) {
      if (line.size() >= 3 && line.compare(0, 3, "\xEF\xBB\xBF") == 0) line.erase(0, 3);
      if (trim(line).empty()) continue;
      for (auto& h : split_line(line)) t.header.push_back(trim(h));
      have_header = true;
      continue;
    }
    if (trim(line).empty()) continue;
    auto cells = split_line(line);
    if (cells.size() != t.header.size())
      throw Error(ErrorKind::InvalidArgument, "row " + std::to_string(t.cells.size() + 1) + " has " +
                                                  std::to_string(cells.size()) + " cells, expected " +
                                                  std::to_string(t.header.size()));
    t.cells.push_back(std::move(cells));
  }
  if (!have_header || t.cells.empty()) throw Error(ErrorKind::EmptyFile, "'" + path + "' has no data rows");
  return t;
}

RawTable one_hot(const RawTable& table, const std::vector<std::string>& columns) {
  if (columns.empty()) return table;
  std::vector<bool> expand(table.header.size(), false);
  std::vector<std::vector<std::string>> levels(table.header.size());
  for (const auto& name : columns) {
    const auto j = column_index(table.header, name);
    expand[j] = true;
    std::set<std::string> seen;
    for (const auto& row : table.cells) seen.insert(trim(row[j]));
    levels[j].assign(seen.begin(), seen.end());
  }
  RawTable out;
  for (std::size_t j = 0; j < table.header.size(); ++j) {
    if (!expand[j]) {
      out.header.push_back(table.header[j]);
      continue;
    }
    for (const auto& lvl : levels[j]) out.header.push_back(table.header[j] + "=" + lvl);
  }
  for (const auto& row : table.cells) {
    std::vector<std::string> r;
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (!expand[j]) {
        r.push_back(row[j]);
        continue;
      }
      const std::string v = trim(row[j]);
      for (const auto& lvl : levels[j]) r.push_back(v == lvl ? "1" : "0");
    }
    out.cells.push_back(std::move(r));
  }
  return out;
}

NumericTable to_numeric(const RawTable& table, const std::string& target_column) {
  if (table.cells.empty()) throw Error(ErrorKind::EmptyFile, "table has no data rows");
  const std::size_t target =
      target_column.empty() ? table.header.size() - 1 : column_index(table.header, target_column);
  NumericTable nt;
  nt.header = table.header;
  const auto n = static_cast<Eigen::Index>(table.cells.size());
  const auto p = static_cast<Eigen::Index>(table.header.size());
  nt.values.resize(n, p);
  for (Eigen::Index j = 0; j < p; ++j) {
    bool numeric = true;
    Eigen::Index bad_row = -1;
    for (Eigen::Index i = 0; i < n && numeric; ++i) {
      double v = 0;
      if (!parse_number(table.cells[i][j], v)) {
        numeric = false;
        bad_row = i;
      } else {
        nt.values(i, j) = v;
      }
    }
    if (numeric) continue;
    if (static_cast<std::size_t>(j) == target) {
      std::set<std::string> lv;
      for (const auto& row : table.cells) lv.insert(trim(row[j]));
      if (lv.size() == 2) {
        const std::string zero = *lv.begin();
        spdlog::warn("target column '{}' mapped to 0/1: '{}' -> 0, '{}' -> 1", table.header[j], zero,
                     *lv.rbegin());
        for (Eigen::Index i = 0; i < n; ++i) nt.values(i, j) = trim(table.cells[i][j]) == zero ? 0.0 : 1.0;
        continue;
      }
    }
    throw Error(ErrorKind::NonNumericCell, "row " + std::to_string(bad_row + 1) + ", column '" +
                                               table.header[j] + "': '" + table.cells[bad_row][j] + "'");
  }
  // Keep the target last so downstream code can address it positionally.
  if (target != table.header.size() - 1) {
    std::vector<Eigen::Index> order;
    for (Eigen::Index j = 0; j < p; ++j)
      if (static_cast<std::size_t>(j) != target) order.push_back(j);
    order.push_back(static_cast<Eigen::Index>(target));
    NumericTable r;
    r.values.resize(n, p);
    for (Eigen::Index k = 0; k < p; ++k) {
      r.values.col(k) = nt.values.col(order[k]);
      r.header.push_back(nt.header[order[k]]);
    }
    return r;
  }
  return nt;
}

Dataset prepare(const NumericTable& table, const IngestOptions& opt) {
  if (!(opt.split > 0 && opt.split < 1))
    throw Error(ErrorKind::InvalidArgument, "split must lie strictly between 0 and 1");
  const Eigen::Index n = table.values.rows();
  const Eigen::Index p = table.values.cols();
  if (n == 0) throw Error(ErrorKind::EmptyFile, "no data rows");
  if (p < 2) throw Error(ErrorKind::InvalidArgument, "need at least one feature and a target");

  std::vector<Eigen::Index> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  boost::random::mt19937_64 eng(stream_key(opt.shuffle_seed, kSplitStream));
  for (Eigen::Index i = n - 1; i > 0; --i) {
    boost::random::uniform_int_distribution<Eigen::Index> pick(0, i);
    std::swap(perm[i], perm[pick(eng)]);
  }
  const Eigen::Index n_train = std::clamp<Eigen::Index>(std::llround(opt.split * n), 1, n);
  const Eigen::Index n_test = n - n_train;

  Matrix Xtr(n_train, p - 1), Xte(n_test, p - 1);
  Vector ytr(n_train), yte(n_test);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto row = table.values.row(perm[i]);
    if (i < n_train) {
      Xtr.row(i) = row.head(p - 1);
      ytr(i) = row(p - 1);
    } else {
      Xte.row(i - n_train) = row.head(p - 1);
      yte(i - n_train) = row(p - 1);
    }
  }

  Dataset ds;
  std::vector<Eigen::Index> keep;
  std::vector<double> mu, sd;
  for (Eigen::Index j = 0; j < p - 1; ++j) {
    if (!opt.standardize) {
      keep.push_back(j);
      continue;
    }
    const double m = Xtr.col(j).mean();
    const double s = std::sqrt((Xtr.col(j).array() - m).square().sum() / static_cast<double>(n_train));
    if (!(s > 0)) {
      spdlog::warn("column '{}' is constant on the training split and was dropped", table.header[j]);
      ds.dropped.push_back(table.header[j]);
      continue;
    }
    keep.push_back(j);
    mu.push_back(m);
    sd.push_back(s);
  }
  const auto k = static_cast<Eigen::Index>(keep.size());
  const Eigen::Index cols = k + (opt.intercept ? 1 : 0);
  if (cols == 0) throw Error(ErrorKind::InvalidArgument, "no usable feature columns");
  ds.X_train.resize(n_train, cols);
  ds.X_test.resize(n_test, cols);
  for (Eigen::Index c = 0; c < k; ++c) {
    const Eigen::Index j = keep[c];
    ds.feature_names.push_back(table.header[j]);
    if (opt.standardize) {
      ds.X_train.col(c) = (Xtr.col(j).array() - mu[c]) / sd[c];
      ds.X_test.col(c) = (Xte.col(j).array() - mu[c]) / sd[c];
    } else {
      ds.X_train.col(c) = Xtr.col(j);
      ds.X_test.col(c) = Xte.col(j);
    }
  }
  if (opt.intercept) {
    ds.X_train.col(k).setOnes();
    ds.X_test.col(k).setOnes();
    ds.feature_names.push_back("intercept");
  }
  ds.y_train = ytr;
  ds.y_test = yte;
  return ds;
}

Dataset ingest_csv(const std::string& path, const IngestOptions& opt,
                   const std::vector<std::string>& one_hot_columns) {
  return prepare(to_numeric(one_hot(read_csv(path), one_hot_columns), opt.target_column), opt);
}

SyntheticRegression synthetic_regression(int d, int n, std::uint64_t seed, double xi) {
  if (d < 1 || n < 1) throw Error(ErrorKind::InvalidArgument, "synthetic data needs d ≥ 1 and n ≥ 1");
  ChainRng rng(seed, kDataStream);
  SyntheticRegression s;
  s.theta_true = rng.normal_vector(d);
  s.X.resize(n, d);
  for (int i = 0; i < n; ++i) s.X.row(i) = rng.normal_vector(d).transpose();
  s.y = s.X * s.theta_true + xi * rng.normal_vector(n);
  return s;
}

SyntheticClassification synthetic_classification(int d, int n, std::uint64_t seed) {
  if (d < 1 || n < 1) throw Error(ErrorKind::InvalidArgument, "synthetic data needs d ≥ 1 and n ≥ 1");
  ChainRng rng(seed, kDataStream);
  SyntheticClassification s;
  s.theta_true = rng.normal_vector(d);
  s.X.resize(n, d);
  for (int i = 0; i < n; ++i) s.X.row(i) = rng.normal_vector(d).transpose();
  const Vector z = s.X * s.theta_true;
  s.y = (z.array() > 0).cast<double>();
  return s;
}

SyntheticQuadratic synthetic_quadratic(int d, double m, double L, std::uint64_t seed) {
  if (d < 1 || !(m > 0) || !(L >= m))
    throw Error(ErrorKind::InvalidArgument, "synthetic quadratic needs d ≥ 1 and 0 < m ≤ L");
  ChainRng rng(seed, kDataStream);
  Matrix G(d, d);
  for (int i = 0; i < d; ++i) G.row(i) = rng.normal_vector(d).transpose();
  Eigen::HouseholderQR<Matrix> qr(G);
  Matrix Q = qr.householderQ() * Matrix::Identity(d, d);
  const Matrix R = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < d; ++j)
    if (R(j, j) < 0) Q.col(j) = -Q.col(j);
  const Vector spec = d == 1 ? Vector::Constant(1, m) : Vector(Vector::LinSpaced(d, m, L));
  SyntheticQuadratic s;
  s.A = sym(Q * spec.asDiagonal() * Q.transpose());
  s.b = rng.normal_vector(d);
  return s;
}

DataSpec parse_data_spec(const std::string& s) {
  DataSpec spec;
  const auto open = s.find('(');
  const std::string head = trim(s.substr(0, open));
  if (open == std::string::npos || (head != "synthetic" && head != "spectrum") || s.back() != ')') {
    spec.kind = "csv";
    spec.path = s;
    return spec;
  }
  spec.kind = head;
  std::stringstream inner(s.substr(open + 1, s.size() - open - 2));
  std::string item;
  while (std::getline(inner, item, ',')) {
    double v = 0;
    if (!parse_number(item, v)) throw Error(ErrorKind::InvalidArgument, "bad data descriptor '" + s + "'");
    spec.args.push_back(v);
  }
  const std::size_t want = head == "synthetic" ? 3 : 4;
  if (spec.args.size() != want)
    throw Error(ErrorKind::InvalidArgument, "'" + head + "' takes " + std::to_string(want) + " arguments");
  return spec;
}

NumericTable table_from(const Matrix& X, const Vector& y) {
  NumericTable t;
  for (Eigen::Index j = 0; j < X.cols(); ++j) t.header.push_back("x" + std::to_string(j + 1));
  t.header.push_back("y");
  t.values.resize(X.rows(), X.cols() + 1);
  t.values << X, y;
  return t;
}

}  // namespace holmc::cli
