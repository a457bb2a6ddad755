#include <charconv>
#include <filesystem>
#include <fstream>

#include "holmc/cli/experiments.hpp"
#include "holmc/errors.hpp"

namespace holmc::cli {

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string curves_csv(const ExperimentReport& r) {
  std::string out = "checkpoint,series,mean,half_std";
  for (auto s : r.seeds) out += ",seed_" + std::to_string(s);
  out += '\n';
  for (const auto& c : r.curves) {
    for (std::size_t k = 0; k < c.checkpoints.size(); ++k) {
      out += std::to_string(c.checkpoints[k]) + ",\"" + c.series + "\"," + format_double(c.mean[k]) + "," +
             format_double(c.half_std[k]);
      for (const auto& row : c.per_seed) out += "," + format_double(row[k]);
      out += '\n';
    }
  }
  return out;
}

namespace {

void write_file(const std::filesystem::path& p, const std::string& body) {
  std::ofstream f(p, std::ios::binary);
  if (!f) throw Error(ErrorKind::InvalidArgument, "cannot write '" + p.string() + "'");
  f << body;
}

}  // namespace

void write_report(const ExperimentReport& r, const std::string& out_dir) {
  const std::filesystem::path dir(out_dir);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error(ErrorKind::InvalidArgument, "cannot create '" + out_dir + "': " + ec.message());
  write_file(dir / "report.json", r.json.dump(2) + "\n");
  if (!r.curves.empty()) write_file(dir / "curves.csv", curves_csv(r));
  nlohmann::ordered_json t;
  t["wall_clock_seconds"] = r.wall_clock_seconds;
  write_file(dir / "timing.json", t.dump(2) + "\n");
}

}  // namespace holmc::cli
