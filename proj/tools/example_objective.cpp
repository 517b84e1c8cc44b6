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

// Demo black box for `zo optimize-external`: answers the line protocol on
// stdin/stdout with f(w) = ||w - center||_2 (or its square) for a hidden
// center. The caller never sees the center unless it passes one explicitly.

#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "zo/geometry.hpp"
#include "zo/io.hpp"
#include "zo/rng.hpp"

int main(int argc, char** argv) {
  CLI::App app{"zo-example-objective: hidden-center distance oracle"};
  int d = 5;
  std::uint64_t seed = 0;
  std::string center_arg;
  std::string objective = "l2norm";
  app.add_option("--d", d, "dimension")->check(CLI::PositiveNumber);
  app.add_option("--seed", seed, "seed for the hidden center (norm 0.5)");
  app.add_option("--center", center_arg, "explicit center, comma separated (overrides --seed)");
  app.add_option("--objective", objective, "l2norm | quadratic");
  CLI11_PARSE(app, argc, argv);

  if (objective != "l2norm" && objective != "quadratic") {
    std::cerr << "unknown objective '" << objective << "'\n";
    return 2;
  }

  zo::Vec center;
  if (!center_arg.empty()) {
    std::vector<double> coords;
    std::stringstream ss(center_arg);
    std::string item;
    while (std::getline(ss, item, ',')) coords.push_back(std::stod(item));
    center = Eigen::Map<zo::Vec>(coords.data(), static_cast<Eigen::Index>(coords.size()));
    d = static_cast<int>(coords.size());
  } else {
    zo::Rng rng = zo::make_rng(seed);
    center = 0.5 * zo::sample_unit_sphere(d, rng).coords();
  }

  std::string line;
  while (std::getline(std::cin, line)) {
    if (line == "END") return 0;
    if (line.rfind("EVAL ", 0) != 0) {
      std::cerr << "malformed request: " << line << "\n";
      return 1;
    }
    std::stringstream ss(line.substr(5));
    zo::Vec w(d);
    for (int i = 0; i < d; ++i) {
      if (!(ss >> w[i])) {
        std::cerr << "expected " << d << " coordinates: " << line << "\n";
        return 1;
      }
    }
    double trailing;
    if (ss >> trailing) {
      std::cerr << "too many coordinates (expected " << d << "): " << line << "\n";
      return 1;
    }
    const double dist = (w - center).norm();
    const double value = objective == "quadratic" ? 0.5 * dist * dist : dist;
    std::cout << "VAL " << zo::format_double(value) << "\n" << std::flush;
  }
  // stdin closed without END.
  return 1;
}
