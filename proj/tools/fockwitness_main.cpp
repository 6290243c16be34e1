// Copyright 2026 The fockwitness Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command line front end. Exit codes: 0 success, 2 usage or parse errors,
// 3 I/O and resource errors.

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "fockwitness/entangle.hpp"
#include "fockwitness/errors.hpp"
#include "fockwitness/json_io.hpp"
#include "fockwitness/patterns.hpp"
#include "fockwitness/state.hpp"
#include "fockwitness/unitary.hpp"
#include "fockwitness/witness.hpp"

namespace {

using fockwitness::Complex;
using fockwitness::FockBasis;
using fockwitness::ModeUnitary;
using fockwitness::PhotonPattern;
using fockwitness::PureState;
using fockwitness::Side;
using fockwitness::StratifiedState;
using fockwitness::WitnessReport;
using nlohmann::json;

constexpr size_t kDefaultMaxJointDim = 65536;
constexpr size_t kEigenvalueAutoDim = 1024;

size_t max_joint_dim() {
  const char* env = std::getenv("FOCKWITNESS_MAX_DIM");
  if (env == nullptr || *env == '\0') {
    return kDefaultMaxJointDim;
  }
  try {
    const long long value = std::stoll(env);
    if (value < 1) {
      throw std::invalid_argument("");
    }
    return static_cast<size_t>(value);
  } catch (const std::exception&) {
    throw std::invalid_argument("FOCKWITNESS_MAX_DIM must be a positive integer");
  }
}

void check_joint_dim(size_t dim) {
  const size_t cap = max_joint_dim();
  if (dim > cap) {
    throw fockwitness::resource_error("joint dimension " + std::to_string(dim) +
                                      " exceeds FOCKWITNESS_MAX_DIM=" + std::to_string(cap));
  }
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text << "\n";
    return;
  }
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot open output file " + path);
  }
  out << text << "\n";
  if (!out) {
    throw std::runtime_error("failed while writing " + path);
  }
}

std::string format_probability(double p) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", p);
  return buf;
}

// ---------------------------------------------------------------------------
// State sources shared by `probabilities` and `witness`.

struct StateSource {
  std::string input_path;
  int modes = 0;
  int photons = -1;
  std::string product;
  bool random_product = false;
  std::uint64_t seed = 12345;
};

void add_state_source_options(CLI::App* cmd, StateSource* src) {
  cmd->add_option("--input", src->input_path, "Read a state dump written by `generate`");
  cmd->add_option("-M,--modes", src->modes, "Mode count per side");
  cmd->add_option("-N,--photons", src->photons, "Photons on side A (selects the partition)");
  cmd->add_option("--product", src->product,
                  "Product basis state as A:B pattern pair, e.g. 1100:0011");
  cmd->add_flag("--random-product", src->random_product,
                "Random product state (needs -M, -N and optionally --seed)");
  cmd->add_option("--seed", src->seed, "Seed for --random-product");
}

PureState load_state_file(const std::string& path, int photons_hint) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot read state file " + path);
  }
  std::variant<PureState, StratifiedState> loaded = [&] {
    try {
      return fockwitness::state_from_json(json::parse(in));
    } catch (const json::exception& e) {
      throw std::runtime_error("unreadable state file " + path + ": " + e.what());
    }
  }();
  if (std::holds_alternative<PureState>(loaded)) {
    PureState state = std::get<PureState>(std::move(loaded));
    if (!state.is_joint()) {
      throw std::invalid_argument("state file holds a local state; a joint state is needed");
    }
    return state;
  }
  if (photons_hint < 0) {
    throw std::invalid_argument(
        "stratified state file: pass -N to select the photon partition");
  }
  return std::get<StratifiedState>(loaded).project(photons_hint);
}

PureState resolve_state(const StateSource& src) {
  if (!src.input_path.empty()) {
    PureState state = load_state_file(src.input_path, src.photons);
    check_joint_dim(state.basis_a().size() * state.basis_b().size());
    return state;
  }
  if (!src.product.empty()) {
    const auto sep = src.product.find(':');
    if (sep == std::string::npos) {
      throw std::invalid_argument("--product expects A:B, e.g. 1100:0011");
    }
    const PhotonPattern pa = PhotonPattern::parse(src.product.substr(0, sep));
    const PhotonPattern pb = PhotonPattern::parse(src.product.substr(sep + 1));
    if (pa.modes() != pb.modes() || (src.modes > 0 && pa.modes() != src.modes)) {
      throw std::invalid_argument("--product sides must agree with each other and with -M");
    }
    const FockBasis ba(pa.modes(), pa.photons());
    const FockBasis bb(pb.modes(), pb.photons());
    check_joint_dim(ba.size() * bb.size());
    return PureState::joint_basis_state(ba, bb, pa, pb);
  }
  if (src.modes < 1 || src.photons < 0) {
    throw std::invalid_argument("pass --input, --product, or both -M and -N");
  }
  if (src.photons > src.modes) {
    throw std::invalid_argument("-N must lie between 0 and M");
  }
  const FockBasis ba(src.modes, src.photons);
  const FockBasis bb(src.modes, src.modes - src.photons);
  check_joint_dim(ba.size() * bb.size());
  if (src.random_product) {
    return fockwitness::sample_product_state(ba, bb, src.seed);
  }
  return fockwitness::phi_partition(src.modes, src.photons);
}

// ---------------------------------------------------------------------------
// Display orderings. The canonical basis order is what states and files use;
// figure-style orderings live here, with enough metadata in the output to
// reconstruct either.

struct DisplayOrder {
  std::vector<size_t> indices;  // canonical basis index per display position
  std::vector<std::string> labels;
  struct Block {
    std::string label;
    size_t size;
  };
  std::vector<Block> blocks;
};

DisplayOrder class_block_order(const FockBasis& basis) {
  DisplayOrder order;
  for (const auto& cls : fockwitness::enumerate_classes(basis)) {
    order.blocks.push_back({"class " + cls.representative().str(),
                            static_cast<size_t>(cls.cardinality())});
    for (const auto& e : cls.elements()) {
      order.indices.push_back(*basis.index_of(e));
      order.labels.push_back(e.str());
    }
  }
  return order;
}

DisplayOrder k_block_order(const FockBasis& basis) {
  DisplayOrder order;
  for (int k = 0; k < basis.modes(); ++k) {
    size_t block_size = 0;
    for (size_t i = 0; i < basis.size(); ++i) {
      if (fockwitness::k_value(basis.pattern(i)) == k) {
        order.indices.push_back(i);
        order.labels.push_back(basis.pattern(i).str());
        ++block_size;
      }
    }
    if (block_size > 0) {
      order.blocks.push_back({"K=" + std::to_string(k), block_size});
    }
  }
  return order;
}

json display_order_to_json(const DisplayOrder& order) {
  json blocks = json::array();
  for (const auto& b : order.blocks) {
    blocks.push_back(json{{"label", b.label}, {"size", b.size}});
  }
  return json{{"patterns", order.labels},
              {"canonical_indices", order.indices},
              {"blocks", std::move(blocks)}};
}

// ---------------------------------------------------------------------------
// Subcommand bodies.

struct GenerateOptions {
  int modes = 0;
  int photons = -1;
  std::string output;
};

void run_generate(const GenerateOptions& opt) {
  if (opt.photons >= 0) {
    if (opt.photons > opt.modes) {
      throw std::invalid_argument("-N must lie between 0 and M");
    }
    const FockBasis ba(opt.modes, opt.photons);
    const FockBasis bb(opt.modes, opt.modes - opt.photons);
    check_joint_dim(ba.size() * bb.size());
    write_text(opt.output, fockwitness::state_to_json(
                               fockwitness::phi_partition(opt.modes, opt.photons))
                               .dump(2));
    return;
  }
  write_text(opt.output,
             fockwitness::state_to_json(fockwitness::generate_psi(opt.modes)).dump(2));
}

struct PartitionOptions {
  int modes = 0;
  std::string format = "json";
  std::string output;
};

void run_partition(const PartitionOptions& opt) {
  using fockwitness::Rational;
  std::vector<json> rows;
  for (int n = 0; n <= opt.modes; ++n) {
    const Rational p = fockwitness::partition_probability(opt.modes, n);
    rows.push_back(json{{"photons_a", n},
                        {"photons_b", opt.modes - n},
                        {"probability", fockwitness::to_double(p)},
                        {"probability_exact", fockwitness::to_string(p)},
                        {"gaussian_estimate", fockwitness::gaussian_partition_estimate(opt.modes, n)}});
  }
  const Rational zero_partitions = fockwitness::partition_probability(opt.modes, 0) +
                                   fockwitness::partition_probability(opt.modes, opt.modes);
  const Rational usable = Rational(1) - zero_partitions;

  if (opt.format == "csv") {
    std::ostringstream csv;
    csv << "photons_a,photons_b,probability,probability_exact,gaussian_estimate\n";
    for (const auto& row : rows) {
      csv << row["photons_a"].get<int>() << ',' << row["photons_b"].get<int>() << ','
          << format_probability(row["probability"].get<double>()) << ','
          << row["probability_exact"].get<std::string>() << ','
          << format_probability(row["gaussian_estimate"].get<double>()) << '\n';
    }
    std::string text = csv.str();
    text.pop_back();
    write_text(opt.output, text);
    return;
  }

  write_text(opt.output, json{{"modes", opt.modes},
                              {"partitions", rows},
                              {"zero_partition_probability", fockwitness::to_double(zero_partitions)},
                              {"zero_partition_probability_exact", fockwitness::to_string(zero_partitions)},
                              {"usable_probability", fockwitness::to_double(usable)},
                              {"usable_probability_exact", fockwitness::to_string(usable)}}
                             .dump(2));
}

struct ProbabilitiesOptions {
  StateSource source;
  std::string basis = "input";
  std::string format = "json";
  std::string output;
  std::string dump_unitary;
};

void run_probabilities(const ProbabilitiesOptions& opt) {
  PureState state = resolve_state(opt.source);
  const int modes = state.basis_a().modes();

  if (!opt.dump_unitary.empty()) {
    write_text(opt.dump_unitary,
               fockwitness::mode_unitary_to_json(ModeUnitary::dft(modes)).dump(2));
  }

  const bool dft_basis = opt.basis == "dft";
  if (dft_basis) {
    state = fockwitness::apply(ModeUnitary::dft(modes), state, Side::Both);
  }

  const DisplayOrder rows = dft_basis ? k_block_order(state.basis_a())
                                      : class_block_order(state.basis_a());
  const DisplayOrder cols = dft_basis ? k_block_order(state.basis_b())
                                      : class_block_order(state.basis_b());

  std::vector<std::vector<double>> matrix(rows.indices.size(),
                                          std::vector<double>(cols.indices.size(), 0.0));
  std::vector<double> row_sums(rows.indices.size(), 0.0);
  double total = 0.0;
  for (size_t r = 0; r < rows.indices.size(); ++r) {
    for (size_t c = 0; c < cols.indices.size(); ++c) {
      const double p = std::norm(state.amplitude(
          static_cast<Eigen::Index>(rows.indices[r]), static_cast<Eigen::Index>(cols.indices[c])));
      matrix[r][c] = p;
      row_sums[r] += p;
      total += p;
    }
  }

  if (opt.format == "csv") {
    std::ostringstream csv;
    for (const auto& label : cols.labels) {
      csv << ',' << label;
    }
    csv << '\n';
    for (size_t r = 0; r < rows.indices.size(); ++r) {
      csv << rows.labels[r];
      for (size_t c = 0; c < cols.indices.size(); ++c) {
        csv << ',' << format_probability(matrix[r][c]);
      }
      csv << '\n';
    }
    std::string text = csv.str();
    text.pop_back();
    write_text(opt.output, text);
    return;
  }

  write_text(opt.output, json{{"modes", modes},
                              {"photons_a", state.basis_a().photons()},
                              {"photons_b", state.basis_b().photons()},
                              {"basis", dft_basis ? "dft" : "input"},
                              {"canonical_ordering", "descending-lex"},
                              {"rows", display_order_to_json(rows)},
                              {"columns", display_order_to_json(cols)},
                              {"matrix", matrix},
                              {"row_sums", row_sums},
                              {"total", total}}
                             .dump(2));
}

struct ClassesOptions {
  int modes = 0;
  int photons = 0;
  std::string output;
};

void run_classes(const ClassesOptions& opt) {
  json classes = json::array();
  for (const auto& cls : fockwitness::enumerate_classes(FockBasis(opt.modes, opt.photons))) {
    std::vector<std::string> elements;
    for (const auto& e : cls.elements()) {
      elements.push_back(e.str());
    }
    classes.push_back(json{{"representative", cls.representative().str()},
                           {"cardinality", cls.cardinality()},
                           {"allowed_K", cls.allowed_k()},
                           {"elements", std::move(elements)}});
  }
  write_text(opt.output, json{{"modes", opt.modes},
                              {"photons", opt.photons},
                              {"classes", std::move(classes)}}
                             .dump(2));
}

WitnessReport blend_reports(const WitnessReport& ideal_part, const WitnessReport& noise_part,
                            double p) {
  WitnessReport r = ideal_part;
  r.fidelity_input = p * ideal_part.fidelity_input + (1 - p) * noise_part.fidelity_input;
  r.fidelity_dft = p * ideal_part.fidelity_dft + (1 - p) * noise_part.fidelity_dft;
  r.pattern_defect = p * ideal_part.pattern_defect + (1 - p) * noise_part.pattern_defect;
  r.optimized_lhs = r.fidelity_input - r.pattern_defect + r.fidelity_dft;
  r.witness_value = r.optimized_lhs - 1.0;
  r.entangled_by_basic = r.fidelity_input + r.fidelity_dft > r.basic_bound;
  r.entangled_by_optimized = r.witness_value > 0.0;
  return r;
}

struct WitnessOptions {
  StateSource source;
  double noise_p = -1.0;
  std::string output;
};

void run_witness(const WitnessOptions& opt) {
  const PureState state = resolve_state(opt.source);
  const WitnessReport report = fockwitness::evaluate(state);
  json out = fockwitness::report_to_json(report);

  if (opt.noise_p >= 0.0) {
    const int modes = state.basis_a().modes();
    const int photons = state.basis_a().photons();
    const WitnessReport uniform = fockwitness::evaluate_uniform(modes, photons);
    const WitnessReport noisy = blend_reports(report, uniform, opt.noise_p);
    const fockwitness::MixtureLaw law = fockwitness::mixture_threshold(modes, photons);
    out["noise"] = json{{"p", opt.noise_p},
                        {"report", fockwitness::report_to_json(noisy)},
                        {"mixture_law", json{{"slope", law.slope},
                                             {"offset", law.offset},
                                             {"threshold", law.threshold}}}};
  }
  write_text(opt.output, out.dump(2));
}

struct BoundsOptions {
  int modes = 0;
  int photons = 0;
  bool force_eigenvalue = false;
  std::string output;
};

void run_bounds(const BoundsOptions& opt) {
  using fockwitness::Rational;
  const Rational bound = fockwitness::basic_bound(opt.modes, opt.photons);
  const fockwitness::FidelityThresholds thresholds =
      fockwitness::state_fidelity_thresholds(opt.modes, opt.photons);
  const fockwitness::MixtureLaw law = fockwitness::mixture_threshold(opt.modes, opt.photons);

  json out{{"modes", opt.modes},
           {"photons_a", opt.photons},
           {"basic_bound", fockwitness::to_double(bound)},
           {"basic_bound_exact", fockwitness::to_string(bound)},
           {"fidelity_thresholds",
            json{{"basic", fockwitness::to_double(thresholds.basic)},
                 {"basic_exact", fockwitness::to_string(thresholds.basic)},
                 {"tight", fockwitness::to_double(thresholds.tight)},
                 {"tight_exact", fockwitness::to_string(thresholds.tight)}}},
           {"mixture_law", json{{"slope", law.slope},
                                {"offset", law.offset},
                                {"threshold", law.threshold}}}};

  const size_t dim = FockBasis(opt.modes, opt.photons).size() *
                     FockBasis(opt.modes, opt.modes - opt.photons).size();
  if (dim <= kEigenvalueAutoDim || opt.force_eigenvalue) {
    out["max_witness_eigenvalue"] = fockwitness::max_witness_eigenvalue(opt.modes, opt.photons);
  } else {
    out["max_witness_eigenvalue"] = nullptr;
    out["note"] = "joint dimension " + std::to_string(dim) +
                  "; pass --eigenvalue to diagonalize anyway";
  }
  write_text(opt.output, out.dump(2));
}

struct SuppressionOptions {
  int modes = 0;
  std::string pattern;
  std::string output;
  std::string dump_unitary;
};

void run_suppression(const SuppressionOptions& opt) {
  constexpr double kSuppressionTol = 1e-12;
  const PhotonPattern input = PhotonPattern::parse(opt.pattern);
  if (input.modes() != opt.modes) {
    throw std::invalid_argument("pattern " + opt.pattern + " does not have " +
                                std::to_string(opt.modes) + " modes");
  }
  if (!opt.dump_unitary.empty()) {
    write_text(opt.dump_unitary,
               fockwitness::mode_unitary_to_json(ModeUnitary::dft(opt.modes)).dump(2));
  }

  const FockBasis basis(opt.modes, input.photons());
  check_joint_dim(basis.size());
  const PureState out_state =
      fockwitness::apply(ModeUnitary::dft(opt.modes), PureState::basis_state(basis, input),
                         Side::A);

  std::vector<double> group(static_cast<size_t>(opt.modes), 0.0);
  for (size_t i = 0; i < basis.size(); ++i) {
    group[static_cast<size_t>(fockwitness::k_value(basis.pattern(i)))] +=
        std::norm(out_state.amplitude(static_cast<Eigen::Index>(i)));
  }

  const int cardinality = fockwitness::pattern_class(input).cardinality();
  const bool expected = cardinality == 1;
  json groups = json::array();
  json violations = json::array();
  for (int k = 0; k < opt.modes; ++k) {
    groups.push_back(json{{"K", k}, {"probability", group[static_cast<size_t>(k)]}});
    if (expected && k != 0 && group[static_cast<size_t>(k)] >= kSuppressionTol) {
      violations.push_back(json{{"K", k}, {"probability", group[static_cast<size_t>(k)]}});
    }
  }
  write_text(opt.output, json{{"modes", opt.modes},
                              {"pattern", input.str()},
                              {"photons", input.photons()},
                              {"class_cardinality", cardinality},
                              {"suppression_expected", expected},
                              {"k_groups", std::move(groups)},
                              {"violations", violations},
                              {"suppression_holds", expected && violations.empty()}}
                             .dump(2));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fock-space toolkit for beam-split multi-mode entanglement: state generation, "
               "DFT photon statistics, pattern classes, and entanglement witnesses"};
  app.require_subcommand(1);

  GenerateOptions generate_opt;
  auto* generate = app.add_subcommand("generate", "Write a state dump as JSON");
  generate->add_option("-M,--modes", generate_opt.modes, "Mode count per side")
      ->required()
      ->check(CLI::PositiveNumber);
  generate->add_option("-N,--photons", generate_opt.photons,
                       "Post-select N photons on side A (omit for the full state)");
  generate->add_option("-o,--output", generate_opt.output, "Output path (default stdout)");
  generate->callback([&] { run_generate(generate_opt); });

  PartitionOptions partition_opt;
  auto* partition = app.add_subcommand("partition", "Photon split statistics between the sides");
  partition->add_option("-M,--modes", partition_opt.modes, "Mode count per side")
      ->required()
      ->check(CLI::PositiveNumber);
  partition->add_option("--format", partition_opt.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  partition->add_option("-o,--output", partition_opt.output, "Output path (default stdout)");
  partition->callback([&] { run_partition(partition_opt); });

  ProbabilitiesOptions prob_opt;
  auto* probabilities =
      app.add_subcommand("probabilities", "Joint detection probability matrix");
  add_state_source_options(probabilities, &prob_opt.source);
  probabilities->add_option("--basis", prob_opt.basis, "input (original modes) or dft")
      ->check(CLI::IsMember({"input", "dft"}));
  probabilities->add_option("--format", prob_opt.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  probabilities->add_option("-o,--output", prob_opt.output, "Output path (default stdout)");
  probabilities->add_option("--dump-unitary", prob_opt.dump_unitary,
                            "Also write the DFT mode matrix to this path");
  probabilities->callback([&] { run_probabilities(prob_opt); });

  ClassesOptions classes_opt;
  auto* classes = app.add_subcommand("classes", "Cyclic pattern classes of a Fock basis");
  classes->add_option("-M,--modes", classes_opt.modes, "Mode count")
      ->required()
      ->check(CLI::PositiveNumber);
  classes->add_option("-N,--photons", classes_opt.photons, "Photon number")
      ->required()
      ->check(CLI::NonNegativeNumber);
  classes->add_option("-o,--output", classes_opt.output, "Output path (default stdout)");
  classes->callback([&] { run_classes(classes_opt); });

  WitnessOptions witness_opt;
  auto* witness = app.add_subcommand("witness", "Entanglement witness report for a state");
  add_state_source_options(witness, &witness_opt.source);
  witness->add_option("--noise-p", witness_opt.noise_p,
                      "Also report the p * state + (1-p) * uniform mixture")
      ->check(CLI::Range(0.0, 1.0));
  witness->add_option("-o,--output", witness_opt.output, "Output path (default stdout)");
  witness->callback([&] { run_witness(witness_opt); });

  BoundsOptions bounds_opt;
  auto* bounds = app.add_subcommand("bounds", "Separable bounds and detection thresholds");
  bounds->add_option("-M,--modes", bounds_opt.modes, "Mode count per side")
      ->required()
      ->check(CLI::PositiveNumber);
  bounds->add_option("-N,--photons", bounds_opt.photons, "Photons on side A")
      ->required()
      ->check(CLI::NonNegativeNumber);
  bounds->add_flag("--eigenvalue", bounds_opt.force_eigenvalue,
                   "Diagonalize the witness operator even on large spaces");
  bounds->add_option("-o,--output", bounds_opt.output, "Output path (default stdout)");
  bounds->callback([&] { run_bounds(bounds_opt); });

  SuppressionOptions suppression_opt;
  auto* suppression =
      app.add_subcommand("suppression", "DFT output statistics of one input pattern, by K");
  suppression->add_option("-M,--modes", suppression_opt.modes, "Mode count")
      ->required()
      ->check(CLI::PositiveNumber);
  suppression->add_option("pattern", suppression_opt.pattern, "Input photon pattern")
      ->required();
  suppression->add_option("-o,--output", suppression_opt.output, "Output path (default stdout)");
  suppression->add_option("--dump-unitary", suppression_opt.dump_unitary,
                          "Also write the DFT mode matrix to this path");
  suppression->callback([&] { run_suppression(suppression_opt); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n"
              << "Run '" << argv[0] << " --help' for usage.\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
