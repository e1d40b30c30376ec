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

#include "lebesgue_lab/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <ostream>
#include <random>
#include <sstream>

#include "json.hpp"

#include "lebesgue_lab/faber.hpp"
#include "lebesgue_lab/functions.hpp"
#include "lebesgue_lab/io.hpp"
#include "lebesgue_lab/lebesgue.hpp"
#include "lebesgue_lab/porosity.hpp"

namespace lebesgue_lab {

namespace {

using json = nlohmann::ordered_json;

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  return in;
}

template <typename Reader>
auto read_file(const std::string& path, Reader reader) {
  auto in = open_input(path);
  try {
    return reader(in);
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what(), e.line());
  } catch (const DomainError& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) out.push_back(item);
  return out;
}

Real parse_real(const std::string& s, const std::string& context) {
  std::size_t used = 0;
  Real v = 0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size() || !std::isfinite(v))
    throw InputError("bad number '" + s + "' in " + context);
  return v;
}

int parse_int(const std::string& s, const std::string& context) {
  const Real v = parse_real(s, context);
  if (v != std::floor(v) || std::abs(v) > 1e6) throw InputError("bad integer '" + s + "' in " + context);
  return static_cast<int>(v);
}

// RFC 4180 field quoting.
std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + '"';
}

class CsvWriter {
 public:
  explicit CsvWriter(std::ostream& out) : out_(out) {}
  CsvWriter& field(const std::string& s) {
    out_ << (first_ ? "" : ",") << csv_field(s);
    first_ = false;
    return *this;
  }
  CsvWriter& field(Real x) { return field(std::isnan(x) ? std::string() : format_real(x)); }
  CsvWriter& field(int n) { return field(std::to_string(n)); }
  CsvWriter& field(bool b) { return field(std::string(b ? "true" : "false")); }
  void end() {
    out_ << "\r\n";
    first_ = true;
  }
  void header(std::initializer_list<const char*> names) {
    for (const char* n : names) field(std::string(n));
    end();
  }

 private:
  std::ostream& out_;
  bool first_ = true;
};

json number_or_null(Real x) { return std::isfinite(x) ? json(x) : json(nullptr); }

json meta(const ExperimentConfig& c) {
  json j;
  j["schema"] = kSchema;
  j["command"] = command_name(c.command);
  return j;
}

std::vector<SampledFunction> resolve_functions(const std::vector<std::string>& names,
                                               std::vector<std::string> defaults) {
  const auto& use = names.empty() ? defaults : names;
  std::vector<SampledFunction> fs;
  for (const auto& n : use) fs.push_back(registry_function(n));
  return fs;
}

std::string describe_set(const ExperimentConfig& c) {
  if (c.set_spec) return *c.set_spec;
  if (c.interval) return "[" + format_real(c.interval->first) + ", " + format_real(c.interval->second) + "]";
  return "[-1, 1]";
}

void run_growth(const ExperimentConfig& c, std::ostream& out) {
  const CompactSet x_set = resolve_set(c);
  const InterpolationMatrix m = resolve_matrix(c, x_set, c.n_max + 1);
  const auto fs = resolve_functions(c.functions, {"runge"});
  const auto profile = convergence_profile(std::span(fs).first(1), m, x_set, c.n_max);
  if (c.format == Format::csv) {
    CsvWriter w(out);
    w.header({"n", "lambda_max", "argmax_x", "uniform_error", "ratio_log"});
    for (const auto& r : profile) {
      w.field(r.n).field(r.lambda).field(r.argmax).field(r.errors[0]).field(r.ratio_log);
      w.end();
    }
    return;
  }
  json j = meta(c);
  j["matrix"] = c.matrix_spec;
  j["set"] = describe_set(c);
  j["function"] = fs[0].name();
  json rows = json::array();
  for (const auto& r : profile) {
    rows.push_back({{"n", r.n},
                    {"lambda_max", r.lambda},
                    {"argmax_x", r.argmax},
                    {"lambda_at_nodes_max", r.lambda_at_nodes_max},
                    {"uniform_error", r.errors[0]},
                    {"ratio_log", r.ratio_log}});
  }
  j["rows"] = std::move(rows);
  out << j.dump(2) << '\n';
}

void run_converge(const ExperimentConfig& c, std::ostream& out) {
  const CompactSet x_set = resolve_set(c);
  const InterpolationMatrix m = resolve_matrix(c, x_set, c.n_max + 1);
  auto fs = resolve_functions(c.functions, {"abs", "exp", "runge"});
  std::stable_sort(fs.begin(), fs.end(),
                   [](const auto& a, const auto& b) { return a.name() < b.name(); });
  const auto profile = convergence_profile(fs, m, x_set, c.n_max);
  json rows = json::array();
  CsvWriter w(out);
  if (c.format == Format::csv)
    w.header({"n", "function", "lambda_max", "uniform_error", "best_approx_bound", "lemma_slack"});
  for (const auto& r : profile) {
    for (std::size_t i = 0; i < fs.size(); ++i) {
      const Real slack = (1 + r.lambda) * r.best_bounds[i] - r.errors[i];
      if (c.format == Format::csv) {
        w.field(r.n).field(fs[i].name()).field(r.lambda).field(r.errors[i]).field(r.best_bounds[i]).field(slack);
        w.end();
      } else {
        rows.push_back({{"n", r.n},
                        {"function", fs[i].name()},
                        {"lambda_max", r.lambda},
                        {"uniform_error", r.errors[i]},
                        {"best_approx_bound", r.best_bounds[i]},
                        {"lemma_slack", slack}});
      }
    }
  }
  if (c.format == Format::json) {
    json j = meta(c);
    j["matrix"] = c.matrix_spec;
    j["set"] = describe_set(c);
    j["rows"] = std::move(rows);
    out << j.dump(2) << '\n';
  }
}

json chain_witness_json(const std::optional<ChainWitness>& w) {
  if (!w) return nullptr;
  return {{"n", w->n}, {"function", w->function}, {"x", w->x}, {"deviation", w->deviation}};
}

void run_faber_check(const ExperimentConfig& c, std::ostream& out) {
  if (!c.basis_file) throw InputError("faber-check needs --basis");
  const BasisCandidate basis = read_file(*c.basis_file, read_basis);
  std::optional<NodeSequence> nodes;
  if (c.nodes_file) nodes = read_file(*c.nodes_file, read_nodes);
  const int count = static_cast<int>(basis.polys.size());

  json j = meta(c);
  j["basis_size"] = count;
  std::vector<std::pair<std::string, std::pair<bool, std::string>>> checks;

  const auto violation = degree_pattern_violation(basis);
  j["degree_pattern"] = {{"pass", !violation},
                         {"first_violation_k", violation ? json(*violation) : json(nullptr)}};
  checks.push_back({"degree_pattern",
                    {!violation, violation ? "deg p_k != k-1 at k=" + std::to_string(*violation) : ""}});
  if (violation) {
    j["verdict"] = "not a Faber basis candidate";
  } else {
    const NodeRecovery rec = recover_nodes(basis);
    if (!nodes && rec.ok && rec.nodes.size() + 1 >= static_cast<std::size_t>(count)) {
      // x_N is free; any point off the recovered nodes completes the sequence.
      std::vector<Real> pts = rec.nodes;
      Real pad = 1;
      for (Real v : pts) pad = std::max(pad, std::abs(v) + 1);
      pts.push_back(pad);
      nodes = NodeSequence(std::move(pts));
    }
    if (!nodes) throw InputError("faber-check needs --nodes when nodes cannot be recovered");
    if (nodes->size() < basis.polys.size())
      throw InputError("nodes file has fewer nodes than the basis has polynomials");

    const InterpolatingVerdict iv = check_interpolating(basis, *nodes);
    j["interpolating"] = {{"pass", iv.pass},
                          {"k", iv.pass ? json(nullptr) : json(iv.k)},
                          {"j", iv.pass ? json(nullptr) : json(iv.j)},
                          {"value", iv.pass ? json(nullptr) : json(iv.value)}};
    checks.push_back({"interpolating",
                      {iv.pass, iv.pass ? "" : "p_" + std::to_string(iv.k) + "(x_" +
                                                   std::to_string(iv.j) + ") = " + format_real(iv.value)}});

    Real node_dev = rec.ok ? 0 : std::numeric_limits<Real>::quiet_NaN();
    for (std::size_t i = 0; rec.ok && i < rec.nodes.size(); ++i)
      node_dev = std::max(node_dev, std::abs(rec.nodes[i] - (*nodes)[i]));
    const bool rec_pass = rec.ok && node_dev <= tol::recovery_residual;
    json rec_nodes = json::array();
    for (Real x : rec.nodes) rec_nodes.push_back(x);
    json residuals = json::array();
    for (Real r : rec.residuals) residuals.push_back(r);
    j["recovery"] = {{"pass", rec_pass},
                     {"nodes", rec_nodes},
                     {"residuals", residuals},
                     {"max_deviation_from_nodes", number_or_null(node_dev)},
                     {"failure", rec.failure}};
    checks.push_back({"recover_nodes", {rec_pass, rec.failure}});

    const auto fs = resolve_functions(c.functions, {"abs", "exp", "runge"});
    const PartialSumComparison cmp =
        partial_sums_equal(basis, newton_basis_candidate(*nodes, count), *nodes, fs);
    json lambdas = json::array();
    for (Real l : cmp.lambdas) lambdas.push_back(number_or_null(l));
    j["newton_comparison"] = {{"equal", cmp.equal},
                              {"lambdas", lambdas},
                              {"first_mismatch_k", cmp.first_mismatch ? json(cmp.first_mismatch) : json(nullptr)},
                              {"max_coeff_deviation", number_or_null(cmp.max_coeff_deviation)},
                              {"max_partial_sum_deviation", number_or_null(cmp.max_partial_sum_deviation)}};
    checks.push_back({"partial_sums_equal_newton",
                      {cmp.equal, cmp.equal ? "" : "first mismatch at k=" + std::to_string(cmp.first_mismatch)}});

    if (count >= 2) {
      const InterpolationMatrix m = nested_matrix(*nodes, count);
      const ChainReport rep = projection_chain_check(m, fs, count - 1);
      j["projection_chain"] = {{"max_degree", rep.max_degree},
                               {"chain", rep.chain},
                               {"commutation", rep.commutation},
                               {"degrees", rep.degrees},
                               {"chain_witness", chain_witness_json(rep.chain_witness)},
                               {"commutation_witness", chain_witness_json(rep.commutation_witness)},
                               {"degree_witness", chain_witness_json(rep.degree_witness)}};
      checks.push_back({"projection_chain", {rep.all(), ""}});
    } else {
      j["projection_chain"] = nullptr;
    }
    j["verdict"] = iv.pass && rec_pass && cmp.equal ? "interpolating Faber basis"
                                                    : "not an interpolating Faber basis";
  }
  if (c.format == Format::json) {
    out << j.dump(2) << '\n';
    return;
  }
  CsvWriter w(out);
  w.header({"check", "passed", "detail"});
  for (const auto& [name, res] : checks) {
    w.field(name).field(res.first).field(res.second);
    w.end();
  }
  w.field(std::string("verdict")).field(j["verdict"] == "interpolating Faber basis")
      .field(j["verdict"].get<std::string>());
  w.end();
}

void run_porosity(const ExperimentConfig& c, std::ostream& out) {
  const CompactSet x_set = resolve_set(c);
  std::vector<Real> points = c.points;
  if (points.empty()) {
    for (const auto& iv : x_set.intervals()) {
      points.push_back(iv.lo);
      if (iv.hi != iv.lo) points.push_back(iv.hi);
    }
  }
  const Extent ext = extent(x_set);
  const StrongPorosityVerdict strong = strongly_lower_porous_check(x_set);
  json rows = json::array();
  CsvWriter w(out);
  if (c.format == Format::csv) {
    w.header({"point", "p_plus", "p_minus", "p", "p_star", "right_isolated", "left_isolated",
              "p_star_exceeds_half", "converged", "error", "set_min", "set_max", "set_measure"});
  }
  for (Real x0 : points) {
    std::optional<PorosityEstimate> e;
    Isolation iso;
    std::string error;
    try {
      e = lower_porosity(x_set, x0);
      iso = isolation_criterion(x_set, x0);
    } catch (const DomainError& ex) {
      error = ex.what();
    }
    if (c.format == Format::csv) {
      w.field(x0);
      if (e) {
        w.field(e->p_plus).field(e->p_minus).field(e->p).field(e->p_star);
        w.field(iso.right_isolated).field(iso.left_isolated).field(iso.p_star_exceeds_half);
        w.field(e->converged);
      } else {
        for (int i = 0; i < 8; ++i) w.field(std::string());
      }
      w.field(error).field(ext.a).field(ext.b).field(ext.measure);
      w.end();
    } else if (e) {
      rows.push_back({{"point", x0},
                      {"p_plus", e->p_plus},
                      {"p_minus", e->p_minus},
                      {"p", e->p},
                      {"p_star", e->p_star},
                      {"right_isolated", iso.right_isolated},
                      {"left_isolated", iso.left_isolated},
                      {"p_star_exceeds_half", iso.p_star_exceeds_half},
                      {"converged", e->converged},
                      {"r_window_right", {e->right.r_min, e->right.r_max}},
                      {"r_window_left", {e->left.r_min, e->left.r_max}}});
    } else {
      rows.push_back({{"point", x0}, {"error", error}});
    }
  }
  if (c.format == Format::json) {
    json j = meta(c);
    j["set"] = describe_set(c);
    j["extent"] = {{"min", ext.a}, {"max", ext.b}, {"measure", ext.measure}};
    j["strongly_lower_porous"] = strong.strongly_porous;
    j["finite_point_set"] = x_set.is_finite_point_set();
    j["points"] = std::move(rows);
    out << j.dump(2) << '\n';
  }
}

void run_oracle(const ExperimentConfig& c, std::ostream& out) {
  if (c.n_max > 19) throw InputError("oracle enumerates signs; --nmax must be at most 19");
  constexpr int rows_count = 100;
  constexpr int points_per_row = 10;
  std::mt19937_64 rng(c.seed);
  auto uniform = [&rng] { return 2 * (static_cast<Real>(rng() >> 11) * 0x1.0p-53) - 1; };
  json rows = json::array();
  CsvWriter w(out);
  if (c.format == Format::csv)
    w.header({"trial", "n", "x", "lebesgue_function", "sup_oracle", "abs_diff", "rel_diff",
              "generator"});
  for (int t = 0; t < rows_count; ++t) {
    const int n = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(c.n_max));
    std::vector<Real> row(static_cast<std::size_t>(n) + 1);
    for (Real& x : row) x = uniform();
    for (int i = 0; i < points_per_row; ++i) {
      const Real x = uniform();
      const Real closed = lebesgue_function(row, x);
      const Real oracle = lebesgue_sup_oracle(row, x).value;
      const Real diff = std::abs(closed - oracle);
      const Real rel = diff / std::max<Real>(1, closed);
      if (c.format == Format::csv) {
        w.field(t).field(n).field(x).field(closed).field(oracle).field(diff).field(rel);
        w.field(std::string(kGenerator));
        w.end();
      } else {
        rows.push_back({{"trial", t},
                        {"n", n},
                        {"x", x},
                        {"lebesgue_function", closed},
                        {"sup_oracle", oracle},
                        {"abs_diff", diff},
                        {"rel_diff", rel}});
      }
    }
  }
  if (c.format == Format::json) {
    json j = meta(c);
    j["generator"] = kGenerator;
    j["seed"] = c.seed;
    j["rows"] = std::move(rows);
    out << j.dump(2) << '\n';
  }
}

}  // namespace

Command parse_command(const std::string& name) {
  static const std::map<std::string, Command> table{{"growth", Command::growth},
                                                    {"converge", Command::converge},
                                                    {"faber-check", Command::faber_check},
                                                    {"porosity", Command::porosity},
                                                    {"oracle", Command::oracle}};
  const auto it = table.find(name);
  if (it == table.end()) throw InputError("unknown command '" + name + "'");
  return it->second;
}

std::string command_name(Command c) {
  switch (c) {
    case Command::growth: return "growth";
    case Command::converge: return "converge";
    case Command::faber_check: return "faber-check";
    case Command::porosity: return "porosity";
    case Command::oracle: return "oracle";
  }
  return "";
}

CompactSet resolve_set(const ExperimentConfig& c) {
  if (c.set_spec) {
    const auto parts = split(*c.set_spec, ':');
    try {
      if (parts.size() == 3 && parts[0] == "geometric")
        return make_geometric_set(parse_real(parts[1], "set spec"), parse_int(parts[2], "set spec"));
      if (parts.size() == 3 && parts[0] == "cantor")
        return make_cantor(parse_int(parts[1], "set spec"), parse_real(parts[2], "set spec"));
    } catch (const DomainError& e) {
      throw InputError(*c.set_spec + ": " + e.what());
    }
    return read_file(*c.set_spec, read_set);
  }
  if (c.interval) {
    if (!(c.interval->first <= c.interval->second)) throw InputError("--interval needs A <= B");
    return CompactSet::interval(c.interval->first, c.interval->second);
  }
  return CompactSet::interval(-1, 1);
}

InterpolationMatrix resolve_matrix(const ExperimentConfig& c, const CompactSet& x_set, int rows) {
  const std::string& spec = c.matrix_spec;
  auto fit = [&](InterpolationMatrix m) {
    const Real a = x_set.min();
    const Real b = x_set.max();
    if (a == b || (a == -1 && b == 1)) return m;
    return affine_transform(m, (b - a) / 2, (a + b) / 2);
  };
  if (spec == "chebyshev") return fit(chebyshev_matrix(rows));
  if (spec == "equispaced") return fit(equispaced_matrix(rows));
  if (spec.starts_with("nested:")) {
    const NodeSequence seq = read_file(spec.substr(7), read_nodes);
    if (seq.size() < static_cast<std::size_t>(rows))
      throw InputError("nested matrix needs " + std::to_string(rows) + " nodes, file has " +
                       std::to_string(seq.size()));
    return nested_matrix(seq, rows);
  }
  InterpolationMatrix m = read_file(spec, read_matrix);
  if (m.size() < static_cast<std::size_t>(rows))
    throw InputError("matrix file has " + std::to_string(m.size()) + " rows, " +
                     std::to_string(rows) + " needed");
  if (!validate_matrix(m).empty()) throw InputError(spec + ": a row repeats a node");
  return m;
}

void run_experiment(const ExperimentConfig& c, std::ostream& out) {
  if (c.n_max < 1) throw InputError("--nmax must be at least 1");
  switch (c.command) {
    case Command::growth: return run_growth(c, out);
    case Command::converge: return run_converge(c, out);
    case Command::faber_check: return run_faber_check(c, out);
    case Command::porosity: return run_porosity(c, out);
    case Command::oracle: return run_oracle(c, out);
  }
}

int run_and_report(const ExperimentConfig& config, std::ostream& out, std::ostream& err) {
  try {
    std::ostringstream buffer;
    run_experiment(config, buffer);
    out << buffer.str();
    return 0;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return 2;
  } catch (const DomainError& e) {
    err << "input error: " << e.what() << '\n';
    return 2;
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << '\n';
    return 3;
  }
}

std::string output_field_documentation() {
  return R"(Output fields (CSV: RFC 4180, header row first, reals with 17 significant
digits; JSON: UTF-8, keys in the order listed, top-level "schema": "lebesgue-lab/1"
and "command").

growth   n                degree; L_n interpolates at the n+1 nodes of row n+1
         lambda_max       Lebesgue constant of row n+1 over X
         argmax_x         smallest x in X attaining lambda_max
         uniform_error    sup over X of |f - L_n f| for the first --functions entry
                          (default runge)
         ratio_log        lambda_max / ln(n+1)
         JSON adds matrix, set, function and per row lambda_at_nodes_max (max of
         the Lebesgue function over the row's own nodes, always 1).
converge n, function      one row per degree, then function name in lexicographic order
         lambda_max       as above
         uniform_error    sup over X of |f - L_n f|
         best_approx_bound  error on X of the degree-n Chebyshev interpolant on
                          [min X, max X]; an upper bound for E_n(f)
         lemma_slack      (1 + lambda_max) * best_approx_bound - uniform_error;
                          Lebesgue's lemma makes this >= -1e-8
faber-check (JSON)        verdict, basis_size, degree_pattern{pass,first_violation_k},
         interpolating{pass,k,j,value}, recovery{pass,nodes,residuals,
         max_deviation_from_nodes,failure}, newton_comparison{equal,lambdas,
         first_mismatch_k,max_coeff_deviation,max_partial_sum_deviation},
         projection_chain{max_degree,chain,commutation,degrees,chain_witness,
         commutation_witness,degree_witness}
         (CSV)            check, passed, detail; last row is the verdict
porosity point            query point x0
         p_plus, p_minus  right / left lower porosity estimates
         p, p_star        max and min of the two
         right_isolated, left_isolated, p_star_exceeds_half   exact isolation flags
         converged        estimates stable over the last two grid refinements
         error            set when x0 is not in X (other fields empty)
         set_min, set_max, set_measure   extent of X (JSON: extent{min,max,measure},
         plus strongly_lower_porous, finite_point_set, r_window_right/left)
oracle   trial, n, x      random row of n+1 nodes in [-1,1] and a point x
         lebesgue_function  sum_k |l_k(x)|
         sup_oracle       max over all sign vectors of |sum_k s_k l_k(x)|
         abs_diff         |lebesgue_function - sup_oracle|
         rel_diff         abs_diff / max(1, lebesgue_function)
         generator        random generator seeded by --seed (JSON: generator, seed)
)";
}

}  // namespace lebesgue_lab
