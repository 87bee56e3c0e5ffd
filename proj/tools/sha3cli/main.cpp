// SPDX-License-Identifier: Apache-2.0
//
// sha3cli — hash files, verify response-file vectors, and run the
// sequential-vs-parallel batch throughput sweep.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "report.hpp"
#include "runner.hpp"
#include "sha3/hex.hpp"
#include "sha3/sha3.hpp"
#include "vectors.hpp"
#include "workload.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

constexpr const char* kAlgoHelp =
    "sha3-224|sha3-256|sha3-384|sha3-512|shake128|shake256";

int cmd_hash(const std::string& algo_name, std::uint64_t bits, const std::string& path) {
  const auto algorithm = sha3::parse_algorithm(algo_name);
  if (!algorithm) {
    std::cerr << "sha3cli: unknown algorithm '" << algo_name << "'\n";
    return kExitUsage;
  }
  const sha3::FunctionVariant& variant = sha3::variant_info(*algorithm);
  if (bits > 0 && !variant.is_xof()) {
    std::cerr << "sha3cli: --bits applies to XOF variants only\n";
    return kExitUsage;
  }
  if (variant.is_xof() && bits == 0) {
    bits = sha3::bench::default_xof_bits(*algorithm);
  }
  if (variant.is_xof() && bits % 8 != 0) {
    std::cerr << "sha3cli: --bits must be a multiple of 8\n";
    return kExitUsage;
  }

  std::ifstream file;
  std::istream* in = &std::cin;
  if (!path.empty() && path != "-") {
    file.open(path, std::ios::binary);
    if (!file) {
      std::cerr << "sha3cli: cannot open " << path << "\n";
      return kExitIo;
    }
    in = &file;
  }

  sha3::Hasher hasher(*algorithm);
  std::vector<std::uint8_t> buf(1 << 16);
  while (*in) {
    in->read(reinterpret_cast<char*>(buf.data()), static_cast<std::streamsize>(buf.size()));
    const std::streamsize n = in->gcount();
    if (n > 0) {
      hasher.update(std::span(buf.data(), static_cast<std::size_t>(n)));
    }
  }
  if (in->bad()) {
    std::cerr << "sha3cli: read error\n";
    return kExitIo;
  }

  std::vector<std::uint8_t> digest;
  if (variant.is_xof()) {
    hasher.finish();
    digest.resize(bits / 8);
    hasher.read(digest);
  } else {
    digest = hasher.digest();
  }
  std::cout << sha3::to_hex(digest) << "\n";
  return kExitOk;
}

int cmd_bench(const sha3::bench::WorkloadSpec& spec, const std::string& backend,
              unsigned workers, std::size_t chunk, unsigned repeats,
              const std::string& csv_path) {
  std::vector<sha3::Backend> backends;
  if (backend == "seq") {
    backends = {sha3::Backend::sequential};
  } else if (backend == "par") {
    backends = {sha3::Backend::parallel};
  } else if (backend == "both") {
    backends = {sha3::Backend::sequential, sha3::Backend::parallel};
  } else {
    std::cerr << "sha3cli: --backend must be seq, par or both\n";
    return kExitUsage;
  }

  std::vector<sha3::bench::BenchmarkRecord> records;
  for (const sha3::Backend b : backends) {
    sha3::EngineConfig config;
    config.backend = b;
    config.workers = workers;
    config.chunk_size = chunk;
    const auto rows = sha3::bench::run_benchmark(spec, config, repeats);
    records.insert(records.end(), rows.begin(), rows.end());
  }

  std::cout << sha3::bench::emit_console(records);
  if (!csv_path.empty()) {
    std::ofstream out(csv_path, std::ios::binary);
    if (!out) {
      std::cerr << "sha3cli: cannot write " << csv_path << "\n";
      return kExitIo;
    }
    out << sha3::bench::emit_csv(records);
    if (!out) {
      std::cerr << "sha3cli: write error on " << csv_path << "\n";
      return kExitIo;
    }
  }
  return kExitOk;
}

int cmd_vectors(const std::string& path, const std::string& algo_name) {
  std::optional<sha3::Algorithm> algorithm;
  if (!algo_name.empty()) {
    algorithm = sha3::parse_algorithm(algo_name);
    if (!algorithm) {
      std::cerr << "sha3cli: unknown algorithm '" << algo_name << "'\n";
      return kExitUsage;
    }
  } else {
    algorithm = sha3::bench::algorithm_from_filename(path);
    if (!algorithm) {
      std::cerr << "sha3cli: cannot infer the algorithm from '" << path
                << "'; pass --algo\n";
      return kExitUsage;
    }
  }

  sha3::bench::VectorFile file;
  try {
    file = sha3::bench::load_vector_file(path);
  } catch (const std::exception& e) {
    std::cerr << "sha3cli: " << e.what() << "\n";
    return kExitIo;
  }

  const auto report = sha3::bench::verify_vectors(file, *algorithm);
  for (const auto& f : report.failures) {
    std::cout << "FAIL line " << f.line << " (Len = " << f.msg_bits << ")\n"
              << "  expected " << f.expected_hex << "\n"
              << "  actual   " << f.actual_hex << "\n";
  }
  std::cout << report.passed << "/" << report.total << " vectors passed ("
            << sha3::variant_info(*algorithm).name << ")\n";
  return report.all_passed() ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"SHA-3 / Keccak toolkit: hashing, vector verification, batch benchmarks"};
  app.require_subcommand(1);

  // hash
  auto* hash = app.add_subcommand("hash", "Digest a file (or stdin) in lowercase hex");
  std::string hash_algo = "sha3-256";
  std::uint64_t hash_bits = 0;
  std::string hash_file;
  hash->add_option("--algo", hash_algo, kAlgoHelp)->capture_default_str();
  hash->add_option("--bits", hash_bits, "XOF output length in bits (default 256/512)");
  hash->add_option("FILE", hash_file, "input file; '-' or absent reads stdin");

  // bench
  auto* bench = app.add_subcommand("bench", "Sequential vs parallel batch throughput sweep");
  sha3::bench::WorkloadSpec spec;
  std::string bench_algo = "sha3-256";
  std::string backend = "both";
  unsigned workers = 0;
  std::size_t chunk = 0;
  unsigned repeats = 3;
  std::string csv_path;
  bench->add_option("--sizes", spec.total_sizes, "total byte targets")
      ->delimiter(',')
      ->capture_default_str();
  bench->add_option("--message-size", spec.message_size, "bytes per message")
      ->capture_default_str();
  bench->add_option("--algo", bench_algo, kAlgoHelp)->capture_default_str();
  bench->add_option("--bits", spec.xof_output_bits, "XOF output bits per message");
  bench->add_option("--backend", backend, "seq|par|both")->capture_default_str();
  bench->add_option("--workers", workers, "worker threads (0 = hardware)");
  bench->add_option("--chunk", chunk, "messages per task (0 = auto)");
  bench->add_option("--repeats", repeats, "timed runs per point (>= 3)")->capture_default_str();
  bench->add_option("--seed", spec.seed, "workload generator seed")->capture_default_str();
  bench->add_option("--csv", csv_path, "also write the report as CSV to this path");

  // vectors
  auto* vectors = app.add_subcommand("vectors", "Verify a response-file of test vectors");
  std::string vec_file;
  std::string vec_algo;
  vectors->add_option("--file", vec_file, "response file (Len/Msg/MD lines)")->required();
  vectors->add_option("--algo", vec_algo, kAlgoHelp);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (hash->parsed()) {
      return cmd_hash(hash_algo, hash_bits, hash_file);
    }
    if (bench->parsed()) {
      const auto algorithm = sha3::parse_algorithm(bench_algo);
      if (!algorithm) {
        std::cerr << "sha3cli: unknown algorithm '" << bench_algo << "'\n";
        return kExitUsage;
      }
      spec.algorithm = *algorithm;
      return cmd_bench(spec, backend, workers, chunk, repeats, csv_path);
    }
    if (vectors->parsed()) {
      return cmd_vectors(vec_file, vec_algo);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "sha3cli: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "sha3cli: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitUsage;
}
