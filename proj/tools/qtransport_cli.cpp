// qtransport — build the transport model's operators, inspect its invariant
// states, propagate states and run the verification suite from the shell.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "qtransport/errors.hpp"
#include "qtransport/evolution.hpp"
#include "qtransport/invariants.hpp"
#include "qtransport/io.hpp"
#include "qtransport/lindblad.hpp"
#include "qtransport/model.hpp"
#include "qtransport/numerics.hpp"
#include "qtransport/presets.hpp"
#include "qtransport/spectrum.hpp"
#include "qtransport/transport.hpp"
#include "qtransport/verify.hpp"

namespace {

using namespace qtransport;

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitValidation = 2;
constexpr int kExitOracleMismatch = 3;
constexpr int kExitSupport = 4;
constexpr int kExitNotInvariant = 5;
constexpr int kExitNoConvergence = 6;
constexpr int kExitDh = 7;

struct ModelOptions {
  std::string file;
  std::string preset;
  int n1 = 0;
  int n2 = 0;

  ModelSpec resolve() const {
    if (!preset.empty()) {
      if (preset == "kv") return kv_model(n1 > 0 ? n1 : 3);
      if (preset == "avk") {
        return avk_model(n1 > 0 ? n1 : 4, n2 > 0 ? n2 : 3);
      }
      throw ValidationError("RateSign", "unknown preset " + preset);
    }
    if (file.empty()) {
      throw IoError("no model file or preset given");
    }
    return io::read_model(file);
  }
};

void add_model_options(CLI::App* cmd, ModelOptions& opts,
                       bool positional = true) {
  if (positional) {
    cmd->add_option("model", opts.file, "model file (JSON)");
  } else {
    cmd->add_option("--model", opts.file, "model file (JSON)");
  }
  cmd->add_option("--preset", opts.preset, "preset name: kv or avk");
  cmd->add_option("--n1", opts.n1, "first-level dimension for presets");
  cmd->add_option("--n2", opts.n2, "second-level dimension for the avk preset");
}

void print_derived(const ModelSpec& spec) {
  std::cout << "d = " << spec.total_dim << "\n";
  for (size_t k = 0; k < spec.bohr.size(); ++k) {
    std::cout << "omega_" << k << " = " << io::format_double(spec.bohr[k])
              << "\n";
  }
  for (size_t k = 1; k < spec.beta.size(); ++k) {
    std::cout << "beta_" << k << " = " << io::format_double(spec.beta[k])
              << "\n";
  }
}

// Round-trip integrity: every state written is re-read and compared.
void write_state_checked(const std::string& path, const Matrix& rho) {
  io::write_state(path, rho);
  const Matrix back = io::read_state(path);
  if ((back - rho).norm() > 1e-12) {
    throw IoError("state round trip failed for " + path);
  }
}

int run_model(const ModelOptions& opts, const std::string& action) {
  const ModelSpec spec = opts.resolve();
  print_derived(spec);
  if (action == "info") {
    std::cout << "N = " << spec.num_levels << "\ndims =";
    for (int d : spec.dims) std::cout << " " << d;
    std::cout << "\nlevel offsets =";
    for (size_t k = 0; k + 1 < spec.offsets.size(); ++k) {
      std::cout << " " << spec.offsets[k];
    }
    std::cout << "\ndimension hypothesis: "
              << (spec.dimension_hypothesis() ? "holds" : "violated") << "\n";
  }
  return kExitOk;
}

int run_subspaces(const ModelOptions& opts, bool check_numeric,
                  const std::string& out) {
  const ModelSpec spec = opts.resolve();
  const SubspaceBasis w = interaction_free_subspace(spec);
  const SubspaceBasis v = harmonic_subspace_v(spec);
  const SubspaceBasis v1 = v1_subspace(spec);
  const SubspaceBasis rl = fast_recurrent_subspace(spec);
  std::cout << "W dim " << w.dim() << "\nV dim " << v.dim() << "\nV_1 dim "
            << v1.dim() << "\nR_L dim " << rl.dim() << "\n";
  if (!out.empty()) {
    io::write_subspace(out + ".W.json", "W", w);
    io::write_subspace(out + ".V.json", "V", v);
    io::write_subspace(out + ".V1.json", "V_1", v1);
    io::write_subspace(out + ".RL.json", "R_L", rl);
  }
  if (check_numeric) {
    const SteadyStateResult oracle = numeric_steady_state(spec);
    double angle = 0.0;
    const bool equal = subspace_equal(rl, oracle.support, tol::angle, &angle);
    std::cout << "numeric support dim " << oracle.support.dim()
              << ", max principal angle " << io::format_double(angle) << "\n";
    if (!equal) {
      std::cerr << "analytic and numeric fast recurrent subspaces disagree\n";
      return kExitOracleMismatch;
    }
  }
  return kExitOk;
}

int run_invariant(const ModelOptions& opts, const std::string& action,
                  const std::string& tau_file, const std::string& u_file,
                  const std::string& state_file, const std::string& out) {
  const ModelSpec spec = opts.resolve();
  if (action == "build") {
    const Matrix tau = io::read_state(tau_file);
    const Matrix rho = build_invariant_from_tau(spec, tau);
    write_state_checked(out.empty() ? "invariant_state.json" : out, rho);
    std::cout << "generator residual = "
              << io::format_double(apply_generator(spec, rho).norm()) << "\n";
    return kExitOk;
  }
  if (action == "extremal") {
    const Vector u = io::read_vector(u_file);
    const Matrix rho = extremal_invariant_from_vector(spec, u);
    write_state_checked(out.empty() ? "invariant_state.json" : out, rho);
    std::cout << "generator residual = "
              << io::format_double(apply_generator(spec, rho).norm()) << "\n";
    return kExitOk;
  }
  const Matrix rho = io::read_state(state_file);
  if (action == "check") {
    const double residual = apply_generator(spec, rho).norm();
    std::cout << "generator residual = " << io::format_double(residual) << "\n";
    const auto balance = detailed_balance_check(spec, rho);
    for (size_t k = 0; k < balance.size(); ++k) {
      std::cout << "detailed balance k=" << k + 1 << " residual = "
                << io::format_double(balance[k]) << "\n";
    }
    std::cout << "dark: " << (is_dark(spec, rho) ? "yes" : "no") << "\n";
    if (!is_invariant(spec, rho, 1e-9)) {
      std::cout << "not invariant\n";
      return kExitNotInvariant;
    }
    std::cout << "invariant\n";
    return kExitOk;
  }
  if (action == "decompose") {
    const InvariantDecomposition dec = decompose_invariant(spec, rho);
    std::cout << "(alpha, beta, lambda) = (" << io::format_double(dec.alpha)
              << ", " << io::format_double(dec.beta) << ", "
              << io::format_double(dec.lambda) << ")\n";
    if (dec.tau) {
      write_state_checked(out.empty() ? "tau.json" : out + ".tau.json",
                          *dec.tau);
    }
    if (dec.eta) {
      write_state_checked(out.empty() ? "eta.json" : out + ".eta.json",
                          *dec.eta);
    }
    return kExitOk;
  }
  throw IoError("unknown invariant action " + action);
}

int run_evolve(const ModelOptions& opts, const std::string& state_file,
               double t_max, int grid, const std::string& limit_kind,
               const std::string& out) {
  const ModelSpec spec = opts.resolve();
  const Matrix rho0 = io::read_state(state_file);

  std::optional<Matrix> analytic;
  std::optional<Matrix> numeric;
  if (limit_kind == "analytic" || limit_kind == "both") {
    analytic = limit_state(spec, rho0, v1_minus_w(spec));
  }
  if (limit_kind == "numeric" || limit_kind == "both") {
    numeric = limit_state_numeric(spec, rho0).state;
  }
  const Matrix* column_limit = analytic ? &*analytic
                               : numeric ? &*numeric
                                         : nullptr;
  const auto rows = evolve_trajectory(spec, rho0, t_max, grid, column_limit);
  io::write_trajectory_csv(out, rows);

  if (analytic && numeric) {
    const double gap = trace_norm(*analytic - *numeric);
    std::ofstream footer(out, std::ios::app);
    footer << "# limit comparison (trace norm) = " << io::format_double(gap)
           << "\n";
    std::cout << "limit comparison (trace norm) = " << io::format_double(gap)
              << "\n";
    if (gap > 1e-8) return kExitOracleMismatch;
  }
  return kExitOk;
}

int run_operators(const ModelOptions& opts, const std::string& out) {
  const ModelSpec spec = opts.resolve();
  std::vector<std::pair<std::string, Matrix>> ops;
  for (int k = 0; k <= spec.num_levels + 1; ++k) {
    ops.emplace_back("P_" + std::to_string(k), level_projector(spec, k));
  }
  for (int k = 0; k <= spec.num_levels; ++k) {
    ops.emplace_back("Z_" + std::to_string(k), transition_operator(spec, k));
  }
  for (int k = 1; k <= spec.num_levels; ++k) {
    ops.emplace_back("absZ_" + std::to_string(k), abs_z(spec, k));
    ops.emplace_back("absZperp_" + std::to_string(k), abs_z_perp(spec, k));
  }
  ops.emplace_back("Z", transport_operator(spec));
  ops.emplace_back("H_eff", effective_hamiltonian(spec));
  for (const auto& [label, kraus] : kraus_operators(spec)) {
    ops.emplace_back("L_" + label, kraus);
  }
  io::write_operators(out, ops);
  std::cout << "wrote " << ops.size() << " operators to " << out << "\n";
  return kExitOk;
}

int run_verify(std::uint64_t seed, const std::string& models) {
  const auto results = verify::run_all(seed);
  std::cout << verify::render_report(results, seed);
  bool ok = verify::all_passed(results);

  if (!models.empty() && models != "default") {
    // Extra models: re-run the oracle comparison on each file in the
    // directory, reported after the fixed table.
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(models)) {
      if (entry.path().extension() == ".json") files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    for (const auto& file : files) {
      const ModelSpec spec = io::read_model(file.string());
      const SubspaceBasis rl = fast_recurrent_subspace(spec);
      const SteadyStateResult oracle = numeric_steady_state(spec);
      double angle = 0.0;
      const bool equal = subspace_equal(rl, oracle.support, tol::angle, &angle);
      std::cout << (equal ? "[PASS] " : "[FAIL] ") << file.filename().string()
                << " — oracle support angle " << io::format_double(angle)
                << "\n";
      ok = ok && equal;
    }
  }
  return ok ? kExitOk : kExitOracleMismatch;
}

int dispatch(int argc, char** argv) {
  CLI::App app{"N-level quantum energy transport model toolkit"};
  app.require_subcommand(1);

  // model validate|info
  auto* model_cmd = app.add_subcommand("model", "validate or describe a model");
  ModelOptions model_opts;
  std::string model_action;
  model_cmd->add_option("action", model_action, "validate or info")
      ->required()
      ->check(CLI::IsMember({"validate", "info"}));
  add_model_options(model_cmd, model_opts);

  // subspaces
  auto* sub_cmd = app.add_subcommand("subspaces", "emit W, V, V_1, R_L");
  ModelOptions sub_opts;
  bool check_numeric = false;
  std::string sub_out;
  add_model_options(sub_cmd, sub_opts);
  sub_cmd->add_flag("--check-numeric", check_numeric,
                    "cross-check against the numeric steady-state oracle");
  sub_cmd->add_option("--out", sub_out, "basename for exported bases");

  // invariant build|extremal|check|decompose
  auto* inv_cmd = app.add_subcommand("invariant", "invariant-state tools");
  ModelOptions inv_opts;
  std::string inv_action, tau_file, u_file, state_file, inv_out;
  inv_cmd->add_option("action", inv_action, "build, extremal, check, decompose")
      ->required()
      ->check(CLI::IsMember({"build", "extremal", "check", "decompose"}));
  add_model_options(inv_cmd, inv_opts, /*positional=*/false);
  inv_cmd->add_option("--tau", tau_file, "seed state file for build");
  inv_cmd->add_option("--u", u_file, "seed vector file for extremal");
  inv_cmd->add_option("--state", state_file, "state file for check/decompose");
  inv_cmd->add_option("--out", inv_out, "output path");

  // evolve
  auto* evo_cmd = app.add_subcommand("evolve", "propagate a state");
  ModelOptions evo_opts;
  std::string evo_state, evo_limit = "none", evo_out = "trajectory.csv";
  double evo_tmax = 10.0;
  int evo_grid = 101;
  add_model_options(evo_cmd, evo_opts);
  evo_cmd->add_option("--state", evo_state, "initial state file")->required();
  evo_cmd->add_option("--tmax", evo_tmax, "final time");
  evo_cmd->add_option("--grid", evo_grid, "number of grid points");
  evo_cmd->add_option("--limit", evo_limit, "analytic, numeric, both or none")
      ->check(CLI::IsMember({"analytic", "numeric", "both", "none"}));
  evo_cmd->add_option("--out", evo_out, "trajectory CSV path");

  // operators
  auto* ops_cmd = app.add_subcommand("operators", "dump operator matrices");
  ModelOptions ops_opts;
  std::string ops_out = "operators.json";
  add_model_options(ops_cmd, ops_opts);
  ops_cmd->add_option("--out", ops_out, "output path");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "run the verification suite");
  std::uint64_t seed = 20240901;
  std::string models = "default";
  verify_cmd->add_option("--seed", seed, "random seed");
  verify_cmd->add_option("--models", models,
                         "default, or a directory of extra model files");

  CLI11_PARSE(app, argc, argv);

  if (model_cmd->parsed()) return run_model(model_opts, model_action);
  if (sub_cmd->parsed()) return run_subspaces(sub_opts, check_numeric, sub_out);
  if (inv_cmd->parsed()) {
    return run_invariant(inv_opts, inv_action, tau_file, u_file, state_file,
                         inv_out);
  }
  if (evo_cmd->parsed()) {
    return run_evolve(evo_opts, evo_state, evo_tmax, evo_grid, evo_limit,
                      evo_out);
  }
  if (ops_cmd->parsed()) return run_operators(ops_opts, ops_out);
  if (verify_cmd->parsed()) return run_verify(seed, models);
  return kExitIo;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return dispatch(argc, argv);
  } catch (const ValidationError& e) {
    std::cerr << e.what() << "\n";
    return kExitValidation;
  } catch (const SupportViolation& e) {
    std::cerr << e.what() << "\n";
    return kExitSupport;
  } catch (const ZeroVector& e) {
    std::cerr << e.what() << "\n";
    return kExitSupport;
  } catch (const NotInSubalgebra& e) {
    std::cerr << e.what() << "\n";
    return kExitSupport;
  } catch (const NotInvariant& e) {
    std::cerr << e.what() << "\n";
    return kExitNotInvariant;
  } catch (const NoConvergence& e) {
    std::cerr << e.what() << "\n";
    return kExitNoConvergence;
  } catch (const DHViolated& e) {
    std::cerr << e.what() << "\n";
    return kExitDh;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kExitIo;
  }
}
