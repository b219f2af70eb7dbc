// Copyright 2026 The zxd developers
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

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "zxd/builders.hpp"
#include "zxd/json_io.hpp"
#include "zxd/properties.hpp"
#include "zxd/rewrite.hpp"
#include "zxd/stabilizer.hpp"

namespace {

using namespace zxd;

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsageError = 2;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Diagram load_diagram(const std::string& path) { return parse_diagram(slurp(path)); }

Backend pick_backend(const std::string& flag, const Diagram& d) {
  if (flag == "exact") return Backend::exact;
  if (flag == "float") return Backend::floating;
  return exactly_representable(d) ? Backend::exact : Backend::floating;
}

Json cmat_entries(const CMat& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      row.push_back(Json::array({m(i, j).real(), m(i, j).imag()}));
    }
    rows.push_back(row);
  }
  return rows;
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

struct Cfg {
  std::string backend = "auto";
  double tol = 1e-9;
  std::uint64_t seed = 0;
  int samples = 25;
  int legs = 3;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"diagrammatic calculi with discard: interpretation, CPM semantics, "
               "axiom soundness and proof checking"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags are accepted after the subcommand

  Cfg cfg;
  app.add_option("--backend", cfg.backend, "exact | float | auto")
      ->envname("ZXD_BACKEND")
      ->check(CLI::IsMember({"exact", "float", "auto"}));
  app.add_option("--tol", cfg.tol, "numeric tolerance")->envname("ZXD_TOL");
  app.add_option("--seed", cfg.seed, "seed for sampled checks")->envname("ZXD_SEED");
  app.add_option("--samples", cfg.samples, "random samples per rule")
      ->envname("ZXD_SAMPLES");
  app.add_option("--legs", cfg.legs, "variadic leg bound")->envname("ZXD_LEGS");

  std::string in_a, in_b;
  auto* cmd_interp = app.add_subcommand("interp", "standard interpretation of a diagram");
  cmd_interp->add_option("diagram", in_a, "diagram json file")->required();

  auto* cmd_cpm = app.add_subcommand("cpm-interp", "CPM interpretation (Choi matrix)");
  cmd_cpm->add_option("diagram", in_a, "diagram json file")->required();

  bool up_to_phase = false;
  auto* cmd_eq = app.add_subcommand("check-equal", "compare two pure interpretations");
  cmd_eq->add_option("a", in_a)->required();
  cmd_eq->add_option("b", in_b)->required();
  cmd_eq->add_flag("--up-to-phase", up_to_phase, "accept a global phase");

  int split_a = 0, split_b = 0;
  auto* cmd_cp = app.add_subcommand("cp-equal", "the ~CP relation on two pure diagrams");
  cmd_cp->add_option("a", in_a)->required();
  cmd_cp->add_option("b", in_b)->required();
  cmd_cp->add_option("--split-a", split_a, "trailing ancilla outputs of a");
  cmd_cp->add_option("--split-b", split_b, "trailing ancilla outputs of b");

  auto* cmd_iso = app.add_subcommand("isometry", "is the interpretation an isometry?");
  cmd_iso->add_option("diagram", in_a)->required();

  auto* cmd_causal = app.add_subcommand("causal", "is the CPM interpretation causal?");
  cmd_causal->add_option("diagram", in_a)->required();

  auto* cmd_purify = app.add_subcommand("purify", "pull grounds out as ancilla outputs");
  cmd_purify->add_option("diagram", in_a)->required();

  auto* cmd_wit = app.add_subcommand("iso-witness", "Stinespring witness for ~iso");
  cmd_wit->add_option("a", in_a)->required();
  cmd_wit->add_option("b", in_b)->required();
  cmd_wit->add_option("--split-a", split_a, "trailing ancilla outputs of a");
  cmd_wit->add_option("--split-b", split_b, "trailing ancilla outputs of b");

  std::string lib_name;
  auto* cmd_ax = app.add_subcommand("verify-axioms", "soundness of a rule library");
  cmd_ax->add_option("library", lib_name,
                     "zx-full zx-pi2 zw zh zx-ground zw-ground zh-ground")
      ->required();

  std::string proof_file;
  bool semantic_check = false;
  auto* cmd_proof = app.add_subcommand("verify-proof", "replay an equational proof script");
  cmd_proof->add_option("script", proof_file)->required();
  cmd_proof->add_flag("--semantic-check", semantic_check,
                      "CPM-compare the diagram after every step");

  auto* cmd_ct = app.add_subcommand("counterexample-cliffordt",
                                    "the 1+2i vs 1-2i separation of ~CP and ~iso");

  int qubits = 1, state_index = -1;
  bool all_states = false;
  auto* cmd_stab = app.add_subcommand("stab-witness",
                                      "Clifford witness U with U phi = conj(phi)");
  cmd_stab->add_option("--qubits", qubits, "1 or 2")->check(CLI::IsMember({1, 2}));
  cmd_stab->add_option("--index", state_index, "stabilizer state index");
  cmd_stab->add_flag("--all", all_states, "run every bundled state");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (*cmd_interp) {
      const Diagram d = load_diagram(in_a);
      if (d.contains_ground()) {
        std::cerr << "interp: diagram contains ground; use cpm-interp\n";
        return kCheckFailed;
      }
      emit(tensor_to_json(interp(d, pick_backend(cfg.backend, d))));
      return kOk;
    }
    if (*cmd_cpm) {
      const Diagram d = load_diagram(in_a);
      emit(superop_to_json(interpret_cpm(d, pick_backend(cfg.backend, d))));
      return kOk;
    }
    if (*cmd_eq) {
      const Diagram a = load_diagram(in_a);
      const Diagram b = load_diagram(in_b);
      const Tensor ta = interp(a, Backend::floating);
      const Tensor tb = interp(b, Backend::floating);
      Json j;
      const bool same_shape = ta.rows() == tb.rows() && ta.cols() == tb.cols();
      const bool eq = same_shape && ta.equal(tb, cfg.tol);
      j["equal"] = eq;
      bool pass = eq;
      if (same_shape) {
        if (const auto lam =
                equal_up_to_global_phase(ta.to_float(), tb.to_float(), cfg.tol)) {
          j["equal_up_to_phase"] = true;
          j["phase"] = Json::array({lam->real(), lam->imag()});
          if (up_to_phase) pass = true;
        } else {
          j["equal_up_to_phase"] = false;
        }
      }
      emit(j);
      return pass ? kOk : kCheckFailed;
    }
    if (*cmd_cp) {
      const Diagram a = load_diagram(in_a);
      const Diagram b = load_diagram(in_b);
      const bool eq = cp_equal(a, b, split_a, split_b, cfg.tol);
      emit(Json{{"cp_equal", eq}, {"split_a", split_a}, {"split_b", split_b}});
      return eq ? kOk : kCheckFailed;
    }
    if (*cmd_iso) {
      const Diagram d = load_diagram(in_a);
      const bool iso = is_isometry(d, cfg.tol);
      emit(Json{{"isometry", iso}});
      return iso ? kOk : kCheckFailed;
    }
    if (*cmd_causal) {
      const Diagram d = load_diagram(in_a);
      const bool causal = is_causal(d, cfg.tol);
      emit(Json{{"causal", causal}});
      return causal ? kOk : kCheckFailed;
    }
    if (*cmd_purify) {
      const Diagram d = load_diagram(in_a);
      const PurificationResult pur = purify(d);
      // Round-trip contract: tracing the ancillas reproduces the channel.
      const SuperOp direct = interpret_cpm(d, Backend::floating);
      const Tensor t = interp(pur.pure, Backend::floating);
      const SuperOp redone(t.in_qubits(), t.out_qubits() - pur.ancilla_count,
                           choi_from_pure(t.floating(), pur.ancilla_count));
      const double residual =
          (direct.to_float() - redone.to_float()).cwiseAbs().maxCoeff();
      Json j;
      j["pure"] = diagram_to_json(pur.pure);
      j["ancilla_count"] = pur.ancilla_count;
      Json placement = Json::array();
      for (const auto& [node, anc] : pur.placement) {
        placement.push_back(Json{{"ground_node", node}, {"ancilla_output", anc}});
      }
      j["placement"] = placement;
      j["semantic_residual"] = residual;
      emit(j);
      return residual <= cfg.tol ? kOk : kCheckFailed;
    }
    if (*cmd_wit) {
      const Diagram a = load_diagram(in_a);
      const Diagram b = load_diagram(in_b);
      const double tol = cfg.tol < 1e-8 ? 1e-8 : cfg.tol;
      const auto wit = iso_witness_qubit(a, b, split_a, split_b, tol);
      Json j;
      j["found"] = wit.has_value();
      if (wit) {
        j["u"] = cmat_entries(wit->u);
        j["v"] = cmat_entries(wit->v);
        const Tensor ta = interp(a, Backend::floating);
        const Tensor tb = interp(b, Backend::floating);
        const Eigen::Index bdim = ta.rows() >> split_a;
        const CMat lhs =
            mat_kron<Complex>(CMat::Identity(bdim, bdim), wit->u) * ta.to_float();
        const CMat rhs =
            mat_kron<Complex>(CMat::Identity(bdim, bdim), wit->v) * tb.to_float();
        j["residual"] = (lhs - rhs).cwiseAbs().maxCoeff();
      }
      emit(j);
      return wit ? kOk : kCheckFailed;
    }
    if (*cmd_ax) {
      VerifyOptions opts;
      opts.samples = cfg.samples;
      opts.tol = cfg.tol;
      opts.seed = cfg.seed;
      opts.max_legs = cfg.legs;
      if (cfg.backend == "exact") opts.samples = 0;
      if (cfg.backend == "float") opts.exact_pass = false;
      const SoundnessReport rep = verify_library(lib_name, opts);
      emit(soundness_to_json(rep));
      std::cerr << soundness_table(rep);
      return rep.all_sound ? kOk : kCheckFailed;
    }
    if (*cmd_proof) {
      const ProofScript script = proof_from_json(Json::parse(slurp(proof_file)));
      ProofOptions opts;
      opts.semantic_check = semantic_check;
      opts.tol = cfg.tol;
      const ProofReport rep = verify_proof(script, opts);
      emit(proof_report_to_json(rep));
      return rep.valid ? kOk : kCheckFailed;
    }
    if (*cmd_ct) {
      const CliffordTCounterexample r = cliffordt_counterexample();
      Json j;
      j["phi"] = r.phi.to_string();
      j["phi_conj"] = r.phi_conj.to_string();
      j["fact_in_ring"] = r.in_ring;
      j["fact_cp_equal"] = r.cp_related;
      j["fact_quotient_outside_ring"] = !r.quotient_in_ring;
      j["float_quotient"] = Json::array({r.float_quotient.real(), r.float_quotient.imag()});
      j["ok"] = r.ok();
      emit(j);
      return r.ok() ? kOk : kCheckFailed;
    }
    if (*cmd_stab) {
      const auto& states = stabilizer_states(qubits);
      std::vector<int> todo;
      if (all_states) {
        for (std::size_t i = 0; i < states.size(); ++i) todo.push_back(static_cast<int>(i));
      } else if (state_index >= 0) {
        if (state_index >= static_cast<int>(states.size())) {
          std::cerr << "stab-witness: index out of range (0.." << states.size() - 1
                    << ")\n";
          return kUsageError;
        }
        todo.push_back(state_index);
      } else {
        std::cerr << "stab-witness: pass --all or --index K\n";
        return kUsageError;
      }
      Json results = Json::array();
      bool all_found = true;
      for (int i : todo) {
        const auto wit =
            stab_conjugate_witness(Tensor(states[static_cast<std::size_t>(i)]));
        Json j;
        j["index"] = i;
        j["found"] = wit.has_value();
        if (wit) {
          j["word"] = wit->word.empty() ? "I" : wit->word;
          j["phase_power"] = wit->phase_power;
          j["residual"] = wit->residual;
        } else {
          all_found = false;
        }
        results.push_back(j);
      }
      emit(Json{{"qubits", qubits}, {"states", results}, {"all_found", all_found}});
      return all_found ? kOk : kCheckFailed;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCheckFailed;
  }
  return kUsageError;
}
