// Copyright 2026 The zeroorder Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "zo/io.hpp"

#include <charconv>

#include <json.hpp>

namespace zo {

std::string format_double(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc()) return "nan";
  return std::string(buf, ptr);
}

std::string format_vector(const Vec& v, char sep) {
  std::string out;
  for (int i = 0; i < v.size(); ++i) {
    if (i > 0) out += sep;
    out += format_double(v[i]);
  }
  return out;
}

namespace {

void write_header_comments(std::ostream& out,
                           const std::map<std::string, std::string>& config_echo) {
  out << "# zeroorder " << kVersion << "\n";
  for (const auto& [key, value] : config_echo) {
    out << "# " << key << " = " << value << "\n";
  }
}

std::string opt_field(const std::optional<double>& v) {
  return v ? format_double(*v) : std::string();
}

nlohmann::json row_to_json(const BenchRow& row) {
  nlohmann::json j;
  j["rep"] = row.rep;
  j["seed"] = row.seed;
  j["d"] = row.d;
  j["T"] = row.T;
  j["eta"] = row.eta;
  j["delta"] = row.delta;
  if (row.avg_regret) j["avg_regret"] = *row.avg_regret;
  if (row.opt_error) j["opt_error"] = *row.opt_error;
  if (row.opt_error_se) j["opt_error_se"] = *row.opt_error_se;
  j["status"] = row.status;
  return j;
}

}  // namespace

void write_bench_csv(std::ostream& out, const std::map<std::string, std::string>& config_echo,
                     const std::vector<BenchRow>& rows, const std::vector<CellNote>& notes,
                     const std::optional<FitNote>& fit) {
  write_header_comments(out, config_echo);
  out << "rep,seed,d,T,eta,delta,avg_regret,opt_error,opt_error_se,status\n";
  for (const BenchRow& row : rows) {
    out << row.rep << ',' << row.seed << ',' << row.d << ',' << row.T << ','
        << format_double(row.eta) << ',' << format_double(row.delta) << ','
        << opt_field(row.avg_regret) << ',' << opt_field(row.opt_error) << ','
        << opt_field(row.opt_error_se) << ',' << row.status << "\n";
  }
  for (const CellNote& note : notes) {
    out << "# cell d=" << note.d << " T=" << note.T
        << " avg_regret_se=" << format_double(note.avg_regret_se) << "\n";
  }
  if (fit) {
    out << "# fit";
    if (fit->alpha_d) {
      out << " alpha_d=" << format_double(*fit->alpha_d)
          << " alpha_d_se=" << format_double(*fit->alpha_d_se);
    }
    if (fit->alpha_T) {
      out << " alpha_T=" << format_double(*fit->alpha_T)
          << " alpha_T_se=" << format_double(*fit->alpha_T_se);
    }
    out << "\n";
  }
}

void write_bench_json(std::ostream& out, const std::map<std::string, std::string>& config_echo,
                      const std::vector<BenchRow>& rows, const std::vector<CellNote>& notes,
                      const std::optional<FitNote>& fit) {
  nlohmann::json j;
  j["version"] = kVersion;
  j["config"] = config_echo;
  j["rows"] = nlohmann::json::array();
  for (const BenchRow& row : rows) j["rows"].push_back(row_to_json(row));
  j["cells"] = nlohmann::json::array();
  for (const CellNote& note : notes) {
    j["cells"].push_back({{"d", note.d}, {"T", note.T}, {"avg_regret_se", note.avg_regret_se}});
  }
  if (fit) {
    nlohmann::json jf;
    if (fit->alpha_d) {
      jf["alpha_d"] = *fit->alpha_d;
      jf["alpha_d_se"] = *fit->alpha_d_se;
    }
    if (fit->alpha_T) {
      jf["alpha_T"] = *fit->alpha_T;
      jf["alpha_T_se"] = *fit->alpha_T_se;
    }
    j["fit"] = jf;
  }
  out << j.dump(2) << "\n";
}

void write_external_csv(std::ostream& out, const std::map<std::string, std::string>& config_echo,
                        const std::vector<TrajectoryPoint>& trajectory,
                        const Vec& average_iterate) {
  write_header_comments(out, config_echo);
  out << "t,f_plus,f_minus\n";
  for (const TrajectoryPoint& p : trajectory) {
    out << p.t << ',' << format_double(p.f_plus) << ',' << format_double(p.f_minus) << "\n";
  }
  out << "# average_iterate = " << format_vector(average_iterate) << "\n";
}

void write_external_json(std::ostream& out, const std::map<std::string, std::string>& config_echo,
                         const std::vector<TrajectoryPoint>& trajectory,
                         const Vec& average_iterate) {
  nlohmann::json j;
  j["version"] = kVersion;
  j["config"] = config_echo;
  j["trajectory"] = nlohmann::json::array();
  for (const TrajectoryPoint& p : trajectory) {
    j["trajectory"].push_back({{"t", p.t}, {"f_plus", p.f_plus}, {"f_minus", p.f_minus}});
  }
  std::vector<double> wbar(average_iterate.data(), average_iterate.data() + average_iterate.size());
  j["average_iterate"] = wbar;
  out << j.dump(2) << "\n";
}

}  // namespace zo
