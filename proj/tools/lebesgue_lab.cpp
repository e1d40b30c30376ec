// Copyright (c) 2026 The lebesgue-lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0.txt
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "lebesgue_lab/experiment.hpp"

using namespace lebesgue_lab;

int main(int argc, char** argv) {
  CLI::App app{"lebesgue-lab: Lagrange interpolation, Lebesgue constants, Faber bases and porosity"};
  app.footer(output_field_documentation());
  app.require_subcommand(1);

  ExperimentConfig config;
  std::string format = "csv";
  std::string out_path;
  std::string functions;
  std::string points;
  std::vector<Real> interval;

  for (const char* name : {"growth", "converge", "faber-check", "porosity", "oracle"}) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("--matrix", config.matrix_spec,
                    "chebyshev | equispaced | nested:<nodes-file> | <matrix-file>");
    auto* set = sub->add_option("--set", config.set_spec,
                                "set file, geometric:<ratio>:<depth> or cantor:<depth>:<middle-fraction>");
    sub->add_option("--interval", interval, "X = [A, B]")->expected(2)->excludes(set);
    sub->add_option("--nmax", config.n_max, "largest degree (oracle: largest n of random rows)");
    sub->add_option("--functions", functions, "comma-separated registry names");
    sub->add_option("--basis", config.basis_file, "basis file (faber-check)");
    sub->add_option("--nodes", config.nodes_file, "nodes file (faber-check)");
    sub->add_option("--points", points, "comma-separated porosity query points");
    sub->add_option("--format", format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", out_path, "output path (default stdout)");
    sub->add_option("--seed", config.seed, "seed for std::mt19937_64");
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const CLI::App* chosen = app.get_subcommands().front();
  config.command = parse_command(chosen->get_name());
  config.format = format == "json" ? Format::json : Format::csv;
  if (interval.size() == 2) config.interval = std::make_pair(interval[0], interval[1]);
  std::istringstream fin(functions);
  for (std::string f; std::getline(fin, f, ',');) {
    if (!f.empty()) config.functions.push_back(f);
  }
  std::istringstream pin(points);
  for (std::string p; std::getline(pin, p, ',');) {
    try {
      std::size_t used = 0;
      config.points.push_back(std::stod(p, &used));
      if (used != p.size()) throw std::invalid_argument(p);
    } catch (const std::exception&) {
      std::cerr << "input error: bad point '" << p << "'\n";
      return 2;
    }
  }

  std::ostringstream report;
  const int code = run_and_report(config, report, std::cerr);
  if (code != 0) return code;
  if (out_path.empty()) {
    std::cout << report.str();
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "input error: cannot write '" << out_path << "'\n";
      return 2;
    }
    out << report.str();
  }
  return 0;
}
