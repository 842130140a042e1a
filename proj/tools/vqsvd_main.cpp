/* Copyright 2026 The VQSVD Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/
#include <bit>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "vqsvd/applications.hpp"
#include "vqsvd/kernels/kernels.hpp"
#include "vqsvd/rng.hpp"
#include "vqsvd/verification.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kSchemaVersion = 1;

// ---------------------------------------------------------------------------
// Config <-> JSON

vqsvd::AnsatzSpec ansatz_from_json(const json& j) {
  vqsvd::AnsatzSpec spec;
  const std::string kind = j.value("kind", "hardware_efficient");
  if (kind == "hardware_efficient") {
    spec.kind = vqsvd::AnsatzSpec::Kind::kHardwareEfficient;
  } else if (kind.size() == 1 && kind[0] >= 'a' && kind[0] <= 'd') {
    spec.kind = vqsvd::AnsatzSpec::Kind::kCandidate;
    spec.candidate = static_cast<vqsvd::AnsatzCandidate>(kind[0] - 'a');
  } else {
    throw std::runtime_error("config: unknown ansatz kind '" + kind + "'");
  }
  spec.depth = j.value("depth", 20);
  const std::string mode = j.value("mode", "real");
  if (mode == "real") {
    spec.mode = vqsvd::RotationMode::kReal;
  } else if (mode == "complex") {
    spec.mode = vqsvd::RotationMode::kComplex;
  } else {
    throw std::runtime_error("config: ansatz mode must be real or complex");
  }
  return spec;
}

json ansatz_to_json(const vqsvd::AnsatzSpec& spec) {
  json j;
  if (spec.kind == vqsvd::AnsatzSpec::Kind::kHardwareEfficient) {
    j["kind"] = "hardware_efficient";
  } else {
    j["kind"] = std::string(1, static_cast<char>('a' + static_cast<int>(spec.candidate)));
  }
  j["depth"] = spec.depth;
  j["mode"] = spec.mode == vqsvd::RotationMode::kReal ? "real" : "complex";
  return j;
}

vqsvd::EstimatorMode estimator_mode_from_string(const std::string& s) {
  if (s == "exact") return vqsvd::EstimatorMode::kExact;
  if (s == "shots") return vqsvd::EstimatorMode::kShots;
  if (s == "sampled") return vqsvd::EstimatorMode::kSampledTerms;
  throw std::runtime_error("estimator mode must be exact, shots or sampled");
}

std::string estimator_mode_to_string(vqsvd::EstimatorMode m) {
  switch (m) {
    case vqsvd::EstimatorMode::kExact: return "exact";
    case vqsvd::EstimatorMode::kShots: return "shots";
    case vqsvd::EstimatorMode::kSampledTerms: return "sampled";
  }
  return "exact";
}

vqsvd::VqsvdConfig config_from_json(const json& j) {
  if (j.value("schema_version", kSchemaVersion) != kSchemaVersion) {
    throw std::runtime_error("config: unsupported schema_version");
  }
  vqsvd::VqsvdConfig cfg;
  cfg.rank = j.value("rank", std::size_t{1});
  if (j.contains("weights")) {
    cfg.weights = j.at("weights").get<std::vector<double>>();
  }
  if (j.contains("ansatz")) {
    cfg.u_ansatz = ansatz_from_json(j.at("ansatz"));
  }
  cfg.v_ansatz = j.contains("v_ansatz") ? ansatz_from_json(j.at("v_ansatz"))
                                        : cfg.u_ansatz;
  cfg.max_iterations = j.value("max_iterations", std::size_t{200});
  cfg.tolerance = j.value("tolerance", 1e-6);
  cfg.learning_rate = j.value("learning_rate", 0.05);
  cfg.lr_decay = j.value("lr_decay", 0.0);
  cfg.seed = j.value("seed", std::uint64_t{0});
  cfg.record_m_traces = j.value("record_m_traces", false);
  if (j.contains("estimator")) {
    const json& e = j.at("estimator");
    cfg.estimator.mode = estimator_mode_from_string(e.value("mode", "exact"));
    cfg.estimator.shots_per_term = e.value("shots_per_term", std::size_t{0});
    cfg.estimator.term_samples = e.value("term_samples", std::size_t{0});
  }
  cfg.estimator.seed = cfg.seed;
  return cfg;
}

json config_to_json(const vqsvd::VqsvdConfig& cfg) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["rank"] = cfg.rank;
  j["weights"] = cfg.effective_weights();
  j["ansatz"] = ansatz_to_json(cfg.u_ansatz);
  j["v_ansatz"] = ansatz_to_json(cfg.v_ansatz);
  j["max_iterations"] = cfg.max_iterations;
  j["tolerance"] = cfg.tolerance;
  j["learning_rate"] = cfg.learning_rate;
  j["lr_decay"] = cfg.lr_decay;
  j["seed"] = cfg.seed;
  j["record_m_traces"] = cfg.record_m_traces;
  j["estimator"] = {
      {"mode", estimator_mode_to_string(cfg.estimator.mode)},
      {"shots_per_term", cfg.estimator.shots_per_term},
      {"term_samples", cfg.estimator.term_samples},
  };
  return j;
}

std::string config_hash(const json& config) {
  const std::string dump = config.dump();
  std::uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a
  for (unsigned char c : dump) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[19];
  std::snprintf(buf, sizeof(buf), "0x%016llx", static_cast<unsigned long long>(h));
  return buf;
}

// ---------------------------------------------------------------------------
// Common I/O helpers

void atomic_write(const fs::path& path, const std::string& content) {
  const fs::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) {
      throw std::runtime_error(tmp.string() + ": cannot open for writing");
    }
    out << content;
    if (!out) {
      throw std::runtime_error(tmp.string() + ": write failed");
    }
  }
  fs::rename(tmp, path);
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error(path + ": cannot open for reading");
  }
  json j;
  try {
    in >> j;  // reads one JSON value; trailing report blocks are fine
  } catch (const json::parse_error& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
  return j;
}

bool file_is_lcu(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error(path + ": cannot open for reading");
  }
  std::string header;
  do {
    if (!std::getline(in, header)) {
      throw std::runtime_error(path + ": empty file");
    }
  } while (header.find_first_not_of(" \t\r\n") == std::string::npos);
  std::istringstream hs(header);
  std::string a, b, c;
  hs >> a >> b >> c;
  return c.empty();  // matrix headers have three fields
}

vqsvd::DenseMatrix pad_to_pow2(const vqsvd::DenseMatrix& m) {
  std::size_t side = std::max<std::size_t>({m.rows(), m.cols(), 2});
  side = std::bit_ceil(side);
  if (side == m.rows() && side == m.cols()) return m;
  vqsvd::DenseMatrix out(side, side);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      out(i, j) = m(i, j);
    }
  }
  return out;
}

struct SharedFlags {
  std::string config_path;
  std::string out_dir = ".";
  std::optional<std::uint64_t> seed;
  std::optional<std::string> estimator;
  std::optional<std::size_t> shots;
  std::optional<std::size_t> term_samples;
  bool log_csv = false;
};

void add_shared(CLI::App* cmd, SharedFlags& flags) {
  cmd->add_option("--config", flags.config_path, "JSON config file");
  cmd->add_option("--out-dir", flags.out_dir, "output directory");
  cmd->add_option("--seed", flags.seed, "RNG seed (overrides config)");
  cmd->add_option("--estimator", flags.estimator,
                  "loss backend: exact, shots or sampled");
  cmd->add_option("--shots", flags.shots, "shots per Hadamard test");
  cmd->add_option("--term-samples", flags.term_samples,
                  "importance samples per loss term");
  cmd->add_flag("--log-csv", flags.log_csv, "write per-iteration CSV");
}

vqsvd::VqsvdConfig resolve_config(const SharedFlags& flags) {
  vqsvd::VqsvdConfig cfg;
  if (!flags.config_path.empty()) {
    cfg = config_from_json(load_json_file(flags.config_path));
  }
  if (flags.seed) cfg.seed = *flags.seed;
  if (flags.estimator) {
    cfg.estimator.mode = estimator_mode_from_string(*flags.estimator);
  }
  if (flags.shots) cfg.estimator.shots_per_term = *flags.shots;
  if (flags.term_samples) cfg.estimator.term_samples = *flags.term_samples;
  cfg.estimator.seed = cfg.seed;
  return cfg;
}

std::string convergence_csv(const vqsvd::VqsvdResult& result) {
  std::ostringstream csv;
  csv << "iter,loss";
  const std::size_t t = result.m_values.size();
  if (!result.m_history.empty()) {
    for (std::size_t j = 1; j <= t; ++j) csv << ",m_" << j;
  }
  csv << '\n';
  for (std::size_t i = 0; i < result.loss_history.size(); ++i) {
    csv << i << ',' << vqsvd::format_g17(result.loss_history[i]);
    if (!result.m_history.empty() && i < result.m_history.size()) {
      for (double m : result.m_history[i]) {
        csv << ',' << vqsvd::format_g17(m);
      }
    }
    csv << '\n';
  }
  return csv.str();
}

json result_to_json(const vqsvd::VqsvdResult& result) {
  const json cfg = config_to_json(result.config);
  json j;
  j["schema_version"] = kSchemaVersion;
  j["provenance"] = {
      {"config_hash", config_hash(cfg)},
      {"seed", result.config.seed},
      {"estimator_mode", estimator_mode_to_string(result.config.estimator.mode)},
      {"kernels", vqsvd::kernels::active_kernels().name},
  };
  j["config"] = cfg;
  j["n_qubits"] = result.n_qubits;
  j["m_values"] = result.m_values;
  j["basis_order"] = result.basis_order;
  j["alpha_star"] = result.alpha_star;
  j["beta_star"] = result.beta_star;
  j["converged"] = result.converged;
  j["negative_m_present"] = result.negative_m_present;
  j["iterations"] = result.iterations;
  j["final_loss"] = result.loss_history.empty() ? 0.0 : result.loss_history.back();
  return j;
}

vqsvd::VqsvdResult result_from_json(const json& j) {
  vqsvd::VqsvdResult result;
  result.config = config_from_json(j.at("config"));
  result.n_qubits = j.at("n_qubits").get<int>();
  result.m_values = j.at("m_values").get<std::vector<double>>();
  result.basis_order = j.at("basis_order").get<std::vector<std::size_t>>();
  result.alpha_star = j.at("alpha_star").get<std::vector<double>>();
  result.beta_star = j.at("beta_star").get<std::vector<double>>();
  result.converged = j.at("converged").get<bool>();
  result.iterations = j.at("iterations").get<std::size_t>();
  return result;
}

// ---------------------------------------------------------------------------
// Commands

int cmd_decompose(const std::string& in_path, const std::string& out_path,
                  const std::string& mode) {
  const vqsvd::DenseMatrix m = vqsvd::read_matrix_file(in_path);
  vqsvd::LcuDecomposition lcu;
  if (mode == "pauli") {
    lcu = vqsvd::pauli_decompose(m);
  } else if (mode == "circulant") {
    if (m.rows() != m.cols()) {
      throw std::runtime_error("decompose: circulant input must be square");
    }
    std::vector<vqsvd::cplx> first_row(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) first_row[j] = m(0, j);
    lcu = vqsvd::circulant_decompose(first_row);
    const vqsvd::DenseMatrix rebuilt = vqsvd::lcu_reconstruct(lcu);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) {
        if (std::abs(rebuilt(i, j) - m(i, j)) > 1e-12) {
          throw std::runtime_error(
              "decompose: input is not circulant (first mismatch at row " +
              std::to_string(i) + ", col " + std::to_string(j) + ")");
        }
      }
    }
  } else {
    throw std::runtime_error("decompose: mode must be pauli or circulant");
  }
  std::ostringstream body;
  vqsvd::write_lcu(body, lcu);
  atomic_write(out_path, body.str());
  std::cout << "wrote " << out_path << " (" << lcu.terms.size()
            << " terms, l1 = " << vqsvd::format_g17(lcu.l1_norm) << ")\n";
  return 0;
}

int cmd_svd(const std::string& in_path, const SharedFlags& flags) {
  vqsvd::VqsvdConfig cfg = resolve_config(flags);
  vqsvd::LcuDecomposition lcu;
  if (file_is_lcu(in_path)) {
    lcu = vqsvd::read_lcu_file(in_path);
  } else {
    lcu = vqsvd::pauli_decompose(pad_to_pow2(vqsvd::read_matrix_file(in_path)));
  }
  const vqsvd::VqsvdResult result = vqsvd::run(lcu, cfg);

  fs::create_directories(flags.out_dir);
  const fs::path result_path = fs::path(flags.out_dir) / "result.json";
  atomic_write(result_path, result_to_json(result).dump(2) + "\n");
  if (flags.log_csv) {
    const fs::path csv_path = fs::path(flags.out_dir) / "convergence.csv";
    atomic_write(csv_path, convergence_csv(result));
  }

  std::cout << "converged = " << (result.converged ? "true" : "false")
            << ", iterations = " << result.iterations << '\n';
  for (std::size_t j = 0; j < result.m_values.size(); ++j) {
    std::cout << "m_" << (j + 1) << " = "
              << vqsvd::format_g17(result.m_values[j]) << '\n';
  }
  if (result.negative_m_present) {
    std::cout << "warning: negative m values present (poor local optimum)\n";
  }
  std::cout << "wrote " << result_path.string() << '\n';
  return 0;
}

int cmd_verify(const std::string& matrix_path, const std::string& result_path,
               bool with_vqfne) {
  const vqsvd::DenseMatrix m_raw = vqsvd::read_matrix_file(matrix_path);
  const vqsvd::DenseMatrix m = pad_to_pow2(m_raw);
  const vqsvd::VqsvdResult result = result_from_json(load_json_file(result_path));
  if ((std::size_t{1} << result.n_qubits) != m.rows()) {
    throw std::runtime_error("verify: matrix/result dimensions disagree");
  }

  std::optional<vqsvd::VqfneResult> vqfne;
  if (with_vqfne) {
    vqsvd::VqsvdConfig cfg = result.config;
    cfg.seed = vqsvd::mix_seed(result.config.seed, 0xFE);
    cfg.estimator.seed = cfg.seed;
    vqfne = vqsvd::vqfne_run(vqsvd::pauli_decompose(m), cfg);
  }
  const vqsvd::QualityReport report = vqsvd::assess_quality(m, result, vqfne);

  std::ostringstream block;
  vqsvd::write_quality_report(block, report);
  std::cout << block.str();

  // The report is appended after the JSON document; JSON readers that parse
  // a single value keep working.
  std::ifstream existing(result_path, std::ios::binary);
  std::stringstream buffer;
  buffer << existing.rdbuf();
  existing.close();
  atomic_write(result_path, buffer.str() + block.str());
  std::cout << "appended quality report to " << result_path << '\n';
  return report.bounds_hold && report.majorization_ok ? 0 : 3;
}

int cmd_compress(const std::string& in_path, std::size_t rank, int depth,
                 const SharedFlags& flags) {
  vqsvd::VqsvdConfig cfg = resolve_config(flags);
  cfg.rank = rank;
  cfg.u_ansatz.depth = depth;
  cfg.v_ansatz.depth = depth;

  vqsvd::GrayImage image = vqsvd::read_pgm_file(in_path);
  const std::size_t side = std::bit_ceil(std::max<std::size_t>(
      {image.width, image.height, 2}));
  if (side != image.width || side != image.height) {
    vqsvd::GrayImage padded;
    padded.width = side;
    padded.height = side;
    padded.pixels.assign(side * side, 0.0);
    for (std::size_t r = 0; r < image.height; ++r) {
      for (std::size_t c = 0; c < image.width; ++c) {
        padded.pixels[r * side + c] = image.pixels[r * image.width + c];
      }
    }
    image = std::move(padded);
  }

  const vqsvd::CompressionResult res = vqsvd::compress_image(image, cfg);
  fs::create_directories(flags.out_dir);
  const fs::path img_path = fs::path(flags.out_dir) / "reconstructed.pgm";
  vqsvd::write_pgm_file(img_path.string(), res.reconstructed, false);

  std::ostringstream report;
  report << "rank = " << res.report.rank << '\n'
         << "depth = " << res.report.depth << '\n'
         << "vqsvd_distance = " << vqsvd::format_g17(res.report.vqsvd_distance) << '\n'
         << "classical_distance = "
         << vqsvd::format_g17(res.report.classical_distance) << '\n'
         << "iterations = " << res.report.iterations << '\n'
         << "seed = " << res.report.seed << '\n'
         << "converged = " << (res.report.converged ? "true" : "false") << '\n'
         << "naive_compression_ratio = "
         << vqsvd::format_g17(res.report.naive_compression_ratio) << '\n'
         << "storage_compression_ratio = "
         << vqsvd::format_g17(res.report.storage_compression_ratio) << '\n';
  const fs::path report_path = fs::path(flags.out_dir) / "compression.txt";
  atomic_write(report_path, report.str());
  std::cout << report.str();
  std::cout << "wrote " << img_path.string() << '\n';
  return 0;
}

int cmd_recommend(const std::string& in_path, std::size_t row, std::size_t rank,
                  std::size_t samples, const SharedFlags& flags) {
  vqsvd::VqsvdConfig cfg = resolve_config(flags);
  const vqsvd::DenseMatrix a = pad_to_pow2(vqsvd::read_matrix_file(in_path));
  const vqsvd::RecommendationOutput out =
      vqsvd::recommend(a, rank, cfg, row, samples);

  json j;
  j["schema_version"] = kSchemaVersion;
  j["row"] = row;
  j["rank"] = rank;
  j["g"] = out.g;
  json xi = json::array();
  for (const vqsvd::cplx& x : out.xi) {
    xi.push_back({{"re", x.real()}, {"im", x.imag()}});
  }
  j["xi"] = xi;
  j["probabilities"] = out.probabilities;
  j["samples"] = out.samples;
  fs::create_directories(flags.out_dir);
  const fs::path out_path = fs::path(flags.out_dir) / "recommendation.json";
  atomic_write(out_path, j.dump(2) + "\n");

  std::cout << "G = " << vqsvd::format_g17(out.g) << '\n';
  for (std::size_t i = 0; i < out.probabilities.size(); ++i) {
    std::cout << "p(item " << i << ") = "
              << vqsvd::format_g17(out.probabilities[i]) << '\n';
  }
  std::cout << "wrote " << out_path.string() << '\n';
  return 0;
}

int cmd_polar(const std::string& in_path, const SharedFlags& flags) {
  vqsvd::VqsvdConfig cfg = resolve_config(flags);
  const vqsvd::DenseMatrix m = pad_to_pow2(vqsvd::read_matrix_file(in_path));
  cfg.rank = m.rows();
  cfg.weights.clear();  // default full-rank weights (n, ..., 1)
  const vqsvd::PolarReport report =
      vqsvd::polar_via_vqsvd(vqsvd::pauli_decompose(m), cfg);

  fs::create_directories(flags.out_dir);
  const fs::path w_path = fs::path(flags.out_dir) / "polar_w.txt";
  const fs::path p_path = fs::path(flags.out_dir) / "polar_p.txt";
  std::ostringstream wbody, pbody;
  vqsvd::write_matrix(wbody, report.w);
  vqsvd::write_matrix(pbody, report.p);
  atomic_write(w_path, wbody.str());
  atomic_write(p_path, pbody.str());

  std::cout << "unitarity_residual = "
            << vqsvd::format_g17(report.unitarity_residual) << '\n'
            << "min_eigenvalue = " << vqsvd::format_g17(report.min_eigenvalue)
            << '\n'
            << "product_residual = "
            << vqsvd::format_g17(report.product_residual) << '\n'
            << "wrote " << w_path.string() << " and " << p_path.string() << '\n';
  return 0;
}

int cmd_bench_ansatz(const std::string& in_path, const std::string& mode_str,
                     const SharedFlags& flags) {
  const vqsvd::DenseMatrix m = vqsvd::read_matrix_file(in_path);
  const vqsvd::RotationMode mode = mode_str == "complex"
                                       ? vqsvd::RotationMode::kComplex
                                       : vqsvd::RotationMode::kReal;
  if (mode_str != "real" && mode_str != "complex") {
    throw std::runtime_error("bench-ansatz: mode must be real or complex");
  }
  const std::uint64_t seed = flags.seed.value_or(0);
  const auto rows = vqsvd::benchmark_ansatz(m, mode, seed);

  std::ostringstream csv;
  csv << "candidate,blocks,params_per_circuit,params_total,distance,converged\n";
  for (const vqsvd::BenchmarkRow& r : rows) {
    csv << r.candidate << ',' << r.blocks << ',' << r.params_per_circuit << ','
        << r.params_total << ',' << vqsvd::format_g17(r.distance) << ','
        << (r.converged ? "true" : "false") << '\n';
  }
  fs::create_directories(flags.out_dir);
  const fs::path out_path = fs::path(flags.out_dir) / "bench_ansatz.csv";
  atomic_write(out_path, csv.str());
  std::cout << csv.str() << "wrote " << out_path.string() << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Variational singular value decomposition on a statevector simulator"};
  app.require_subcommand(1);

  SharedFlags flags;

  // decompose
  auto* decompose = app.add_subcommand("decompose", "matrix file -> LCU file");
  std::string dec_in, dec_out, dec_mode = "pauli";
  decompose->add_option("--in", dec_in, "input matrix file")->required();
  decompose->add_option("--out", dec_out, "output LCU file")->required();
  decompose->add_option("--mode", dec_mode, "pauli or circulant");

  // svd
  auto* svd = app.add_subcommand("svd", "train the decomposition");
  std::string svd_in;
  svd->add_option("--in", svd_in, "matrix or LCU file")->required();
  add_shared(svd, flags);

  // verify
  auto* verify = app.add_subcommand("verify", "quality report for a result");
  std::string ver_matrix, ver_result;
  bool ver_vqfne = false;
  verify->add_option("--matrix", ver_matrix, "matrix file")->required();
  verify->add_option("--result", ver_result, "result JSON from svd")->required();
  verify->add_flag("--vqfne", ver_vqfne, "estimate the Frobenius mass variationally");

  // compress
  auto* compress = app.add_subcommand("compress", "low-rank image compression");
  std::string cmp_in;
  std::size_t cmp_rank = 5;
  int cmp_depth = 20;
  compress->add_option("--in", cmp_in, "input PGM image")->required();
  compress->add_option("--rank", cmp_rank, "target rank T");
  compress->add_option("--depth", cmp_depth, "circuit depth D");
  add_shared(compress, flags);

  // recommend
  auto* recommend = app.add_subcommand("recommend", "project a customer row");
  std::string rec_in;
  std::size_t rec_row = 0, rec_rank = 1, rec_samples = 0;
  recommend->add_option("--in", rec_in, "preference matrix file")->required();
  recommend->add_option("--row", rec_row, "customer row index")->required();
  recommend->add_option("--rank", rec_rank, "projection rank k")->required();
  recommend->add_option("--samples", rec_samples, "measurement samples");
  add_shared(recommend, flags);

  // polar
  auto* polar = app.add_subcommand("polar", "polar decomposition via the solver");
  std::string pol_in;
  polar->add_option("--in", pol_in, "matrix file")->required();
  add_shared(polar, flags);

  // bench-ansatz
  auto* bench = app.add_subcommand("bench-ansatz", "24-parameter ansatz comparison");
  std::string ben_in, ben_mode = "real";
  bench->add_option("--in", ben_in, "8x8 matrix file")->required();
  bench->add_option("--mode", ben_mode, "real or complex rotations");
  add_shared(bench, flags);

  CLI11_PARSE(app, argc, argv);

  try {
    if (decompose->parsed()) return cmd_decompose(dec_in, dec_out, dec_mode);
    if (svd->parsed()) return cmd_svd(svd_in, flags);
    if (verify->parsed()) return cmd_verify(ver_matrix, ver_result, ver_vqfne);
    if (compress->parsed()) return cmd_compress(cmp_in, cmp_rank, cmp_depth, flags);
    if (recommend->parsed()) {
      return cmd_recommend(rec_in, rec_row, rec_rank, rec_samples, flags);
    }
    if (polar->parsed()) return cmd_polar(pol_in, flags);
    if (bench->parsed()) return cmd_bench_ansatz(ben_in, ben_mode, flags);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  std::cerr << "error: no subcommand\n";
  return 1;
}
