// Copyright 2026 The gadgetopt Authors
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

#include "cli.hpp"

#include "bench.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "gadgetopt/ansatz.hpp"
#include "gadgetopt/pipeline.hpp"

namespace gadgetopt::cli {

namespace {

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
}

bool looks_like_gadgets(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    std::istringstream ls(line);
    std::string word;
    ls >> word;
    for (auto& ch : word) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    if (word == "zgadget" || word == "xgadget") return true;
  }
  return false;
}

/** Gate circuit from either file format; gadget files are synthesised. */
GateCircuit load_circuit(const std::string& path, GadgetShape shape) {
  const std::string text = read_file(path);
  if (!looks_like_gadgets(text)) return parse_circuit(text);
  const NormalForm nf = parse_normal_form(text);
  GateCircuit c = synth_gadget_circuit(nf.gadgets, shape);
  c.append(nf.tail.to_gates());
  return c;
}

GadgetCircuit load_gadgets(const std::string& path) {
  const std::string text = read_file(path);
  if (looks_like_gadgets(text)) return parse_normal_form(text).gadgets;
  return extract(lower_to_basis(parse_circuit(text))).gadgets;
}

const std::map<std::string, GadgetShape> kShapes{{"tree", GadgetShape::Tree},
                                                 {"ladder", GadgetShape::Ladder}};

struct AnnealFlags {
  std::uint64_t seed = 0;
  std::optional<std::size_t> attempts;
  std::optional<std::size_t> iterations;
  std::optional<double> t0;

  void attach(CLI::App* app) {
    app->add_option("--seed", seed, "Master seed");
    app->add_option("--attempts", attempts, "Annealing chains")->check(CLI::PositiveNumber);
    app->add_option("--iterations", iterations, "Iterations per chain")
        ->check(CLI::PositiveNumber);
    app->add_option("--t0", t0, "Initial temperature")->check(CLI::PositiveNumber);
  }

  AnnealParams resolve(const BitMatrix& lz, const BitMatrix& lx) const {
    AnnealParams p = default_anneal_params(lz, lx, seed);
    if (attempts) p.attempts = *attempts;
    if (iterations) p.iterations = *iterations;
    if (t0) p.t0 = *t0;
    return p;
  }
};

OptimizeOptions optimize_options(const AnnealFlags& flags) {
  OptimizeOptions o;
  o.seed = flags.seed;
  o.t0 = flags.t0;
  o.iterations = flags.iterations;
  o.attempts = flags.attempts;
  return o;
}

// ------------------------------------------------------------------ bench

struct BenchOptions {
  BenchConfig config;
  std::string shape = "tree";
  std::string csv;
  std::string sweep;
  std::vector<double> sweep_values;
  AnnealFlags anneal;
};

int run_bench_grid(BenchOptions& b, std::ostream& out) {
  b.config.shape = kShapes.at(b.shape);
  b.config.seed = b.anneal.seed;
  b.config.t0 = b.anneal.t0;
  b.config.iterations = b.anneal.iterations;
  b.config.attempts = b.anneal.attempts;
  const std::vector<BenchCell> cells = run_bench(b.config);
  write_bench_table(out, b.config, summarize(b.config, cells));
  if (b.csv.empty()) {
    out << "\n";
    write_bench_csv(out, b.config, cells);
  } else {
    std::ostringstream csv;
    write_bench_csv(csv, b.config, cells);
    write_file(b.csv, csv.str());
  }
  return kExitOk;
}

// Annealing score distributions while one parameter varies.
int run_bench_sweep(BenchOptions& b, std::ostream& out) {
  if (b.sweep_values.empty()) throw InputError("--sweep needs --values");
  b.config.validate();
  std::ostringstream csv;
  csv << kCsvHeader << "\n";
  for (double value : b.sweep_values) {
    if (!(value >= 1.0) || value != std::floor(value)) {
      throw InputError("sweep values must be positive integers");
    }
    const auto v = static_cast<std::size_t>(value);
    std::size_t n = b.config.n_qubits;
    std::size_t gadgets = b.config.gadgets_per_layer.front();
    if (b.sweep == "width") n = v;
    if (b.sweep == "height") gadgets = v;
    for (std::size_t s = 0; s < b.config.samples_per_cell; ++s) {
      AnsatzSpec spec;
      spec.kind = AnsatzKind::RandomGadget;
      spec.n_qubits = n;
      spec.layers = 1;
      spec.gadgets_per_layer = gadgets;
      spec.seed = Rng::derive(b.anneal.seed, {n, gadgets, s});
      const LegMatrices legs = leg_matrices(std::get<GadgetCircuit>(generate(spec)));
      AnnealParams p = b.anneal.resolve(legs.lz, legs.lx);
      p.seed = Rng::derive(b.anneal.seed, {n, gadgets, s, 1});
      if (b.sweep == "attempts") p.attempts = v;
      if (b.sweep == "iterations") p.iterations = v;
      const AnnealResult r = anneal(legs.lz, legs.lx, p);
      csv << "random_gadget," << n << "," << gadgets << ",1," << s << ",energy@"
          << b.sweep << "=" << v << "," << r.initial_energy << "," << r.best_energy << "\n";
    }
  }
  if (b.csv.empty()) {
    out << csv.str();
  } else {
    write_file(b.csv, csv.str());
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Phase-gadget CNOT optimizer", "gadgetopt"};
  app.require_subcommand(1);

  // extract
  std::string extract_in;
  auto* extract_cmd = app.add_subcommand("extract", "Print the gadget normal form of a circuit");
  extract_cmd->add_option("input", extract_in, "Circuit file")->required();

  // optimize
  std::string opt_in;
  std::string opt_out;
  std::string opt_shape = "tree";
  std::string opt_report = "text";
  bool opt_no_verify = false;
  bool opt_match_angles = false;
  AnnealFlags opt_anneal;
  auto* optimize_cmd = app.add_subcommand("optimize", "Reduce CNOTs of a circuit");
  optimize_cmd->add_option("input", opt_in, "Circuit or gadget file")->required();
  optimize_cmd->add_option("-o,--output", opt_out,
                           "Write the circuit here; the report then goes to stdout");
  optimize_cmd->add_option("--shape", opt_shape, "Gadget synthesis shape")
      ->check(CLI::IsMember({"tree", "ladder"}));
  optimize_cmd->add_option("--report", opt_report, "Report format")
      ->check(CLI::IsMember({"text", "kv"}));
  optimize_cmd->add_flag("--no-verify", opt_no_verify, "Skip the unitary check");
  optimize_cmd->add_flag("--match-angles", opt_match_angles,
                         "Layers must also repeat their angles");
  opt_anneal.attach(optimize_cmd);

  // anneal
  std::string anneal_in;
  AnnealFlags anneal_flags;
  auto* anneal_cmd = app.add_subcommand("anneal", "Search for the leg-minimising CNOT action");
  anneal_cmd->add_option("input", anneal_in, "Gadget or circuit file")->required();
  anneal_flags.attach(anneal_cmd);

  // bench
  BenchOptions bench;
  bool bench_no_verify = false;
  auto* bench_cmd = app.add_subcommand("bench", "Random-gadget ansatz benchmark");
  bench_cmd->add_option("--qubits", bench.config.n_qubits, "Qubits")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--gadgets", bench.config.gadgets_per_layer, "Gadgets per layer (list)")
      ->delimiter(',')
      ->check(CLI::PositiveNumber);
  bench_cmd->add_option("--layers", bench.config.layers, "Layer counts (list)")
      ->delimiter(',')
      ->check(CLI::PositiveNumber);
  bench_cmd->add_option("--samples", bench.config.samples_per_cell, "Samples per cell")
      ->check(CLI::PositiveNumber);
  bench_cmd->add_option("--shape", bench.shape, "Gadget synthesis shape")
      ->check(CLI::IsMember({"tree", "ladder"}));
  bench_cmd->add_flag("--no-verify", bench_no_verify, "Skip unitary checks");
  bench_cmd->add_option("--csv", bench.csv, "Write per-cell CSV here");
  bench_cmd->add_option("--sweep", bench.sweep, "Annealing score sweep")
      ->check(CLI::IsMember({"attempts", "iterations", "width", "height"}));
  bench_cmd->add_option("--values", bench.sweep_values, "Sweep values (list)")->delimiter(',');
  bench.anneal.attach(bench_cmd);

  // verify
  std::string verify_a;
  std::string verify_b;
  double verify_tol = 1e-9;
  auto* verify_cmd = app.add_subcommand("verify", "Compare two circuits up to global phase");
  verify_cmd->add_option("a", verify_a, "First circuit")->required();
  verify_cmd->add_option("b", verify_b, "Second circuit")->required();
  verify_cmd->add_option("--tol", verify_tol, "Entry-wise tolerance")
      ->check(CLI::PositiveNumber);

  // generate
  AnsatzSpec gen;
  std::string gen_kind = "staircase";
  auto* generate_cmd = app.add_subcommand("generate", "Emit an ansatz circuit");
  generate_cmd->add_option("--kind", gen_kind, "Ansatz layout")
      ->check(CLI::IsMember({"staircase", "brickwall", "random_gadget"}));
  generate_cmd->add_option("--qubits", gen.n_qubits, "Qubits")->check(CLI::PositiveNumber);
  generate_cmd->add_option("--layers", gen.layers, "Layers")->check(CLI::PositiveNumber);
  generate_cmd->add_option("--gadgets", gen.gadgets_per_layer, "Gadgets per layer")
      ->check(CLI::PositiveNumber);
  generate_cmd->add_option("--seed", gen.seed, "Seed");
  generate_cmd->add_flag("--rx", gen.with_rx, "Add an RX layer");

  std::vector<const char*> argv{"gadgetopt"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }

  try {
    if (*extract_cmd) {
      out << to_text(extract(lower_to_basis(parse_circuit(read_file(extract_in)))));
      return kExitOk;
    }

    if (*optimize_cmd) {
      const GateCircuit c = load_circuit(opt_in, kShapes.at(opt_shape));
      OptimizeOptions o = optimize_options(opt_anneal);
      o.shape = kShapes.at(opt_shape);
      o.verify = !opt_no_verify;
      o.match_angles = opt_match_angles;
      const OptimizeResult r = optimize(c, o);
      if (!opt_no_verify && r.report.verified == Verification::Skipped) {
        err << "warning: " << c.n_qubits() << " qubits exceeds the verification limit of "
            << kMaxOracleQubits << "; result not verified\n";
      }
      const std::string report =
          opt_report == "kv" ? format_report_kv(r.report) : format_report(r.report);
      if (opt_out.empty()) {
        out << to_text(r.circuit);
        err << report;
      } else {
        write_file(opt_out, to_text(r.circuit));
        out << report;
      }
      return kExitOk;
    }

    if (*anneal_cmd) {
      const LegMatrices legs = leg_matrices(load_gadgets(anneal_in));
      const AnnealResult r = anneal(legs.lz, legs.lx, anneal_flags.resolve(legs.lz, legs.lx));
      out << "energy_before=" << r.initial_energy << "\n"
          << "energy_after=" << r.best_energy << "\n"
          << "attempt_energies=";
      for (std::size_t k = 0; k < r.per_attempt_energies.size(); ++k) {
        out << (k ? "," : "") << r.per_attempt_energies[k];
      }
      out << "\nmatrix\n" << r.best_c.to_string();
      return kExitOk;
    }

    if (*bench_cmd) {
      bench.config.verify = !bench_no_verify;
      if (!bench.sweep.empty()) return run_bench_sweep(bench, out);
      return run_bench_grid(bench, out);
    }

    if (*verify_cmd) {
      const GateCircuit a = load_circuit(verify_a, GadgetShape::Ladder);
      const GateCircuit b = load_circuit(verify_b, GadgetShape::Ladder);
      if (a.n_qubits() != b.n_qubits()) throw InputError("circuits have different qubit counts");
      const PhaseComparison cmp =
          compare_up_to_phase(unitary_of_circuit(a), unitary_of_circuit(b), verify_tol);
      out << (cmp.equal ? "equal" : "different") << " max_error=" << cmp.max_error << "\n";
      return cmp.equal ? kExitOk : kExitVerificationFailed;
    }

    if (*generate_cmd) {
      gen.kind = parse_ansatz_kind(gen_kind);
      const Ansatz a = generate(gen);
      if (const auto* c = std::get_if<GateCircuit>(&a)) {
        out << to_text(*c);
      } else {
        out << to_text(std::get<GadgetCircuit>(a));
      }
      return kExitOk;
    }
  } catch (const VerificationFailed& e) {
    err << "error: " << e.what() << "\n";
    return kExitVerificationFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace gadgetopt::cli
