#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace dompack {

enum ExitCode : int {
  kExitPass = 0,
  kExitFailure = 1,
  kExitUsage = 2,
  kExitGuard = 3,
};

// Parameter names accepted by compute: rho, gamma, gamma_t, gamma_o,
// slater, bounds. Empty means all of them.
int cmd_compute(const std::filesystem::path& file, const std::vector<std::string>& params,
                std::ostream& out, std::ostream& err);

struct GenerateRequest {
  std::string family;
  std::optional<std::size_t> n;
  std::optional<std::size_t> r;
  std::optional<std::size_t> k;
  std::optional<std::size_t> a;
  std::optional<std::size_t> b;
  std::optional<std::uint64_t> seed;
  double density = 0.3;
  bool extra_arcs = false;
  std::filesystem::path out_file;
};

// Writes the edge list to out_file and the certificate to out_file + ".cert.json".
int cmd_generate(const GenerateRequest& request, std::ostream& out, std::ostream& err);

struct VerifyRequest {
  std::string theorem_id;
  std::size_t trials = 100;
  std::size_t max_n = 12;
  std::uint64_t seed = 1;
  std::size_t threads = 1;
  std::optional<std::filesystem::path> dump_dir;
  // Re-run the check on one saved instance instead of generating trials.
  std::optional<std::filesystem::path> instance;
};

int cmd_verify(const VerifyRequest& request, std::ostream& out, std::ostream& err);

int cmd_analyze(const std::filesystem::path& file, std::ostream& out, std::ostream& err);

// Full command-line entry point.
int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace dompack
