#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <string>

#include "lcpbound/matrix.h"

namespace lcpbound::cli {

enum class Command { kCheck, kDecompose, kBounds, kVerify, kLcp, kReproduce, kGen };
enum class OutputFormat { kTable, kJson };

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitClass = 2;
inline constexpr int kExitFalsified = 3;

struct RunConfig {
  Command command = Command::kCheck;
  std::optional<std::string> matrix_path;  // "-" reads standard input
  std::optional<std::string> q_path;
  std::int64_t samples = 4096;
  std::uint64_t seed = 42;
  int k_first = 1;
  int k_last = 10;
  std::optional<std::size_t> n;  // gen only
  OutputFormat output_format = OutputFormat::kTable;
};

// Matrix files: a line holding n, then n lines of n numbers. Blank lines and
// lines starting with '#' are ignored. Throws ParseError / DimensionError.
Matrix parse_matrix(std::istream& in);
Matrix parse_matrix_file(const std::string& path);

// Vector files: n, then n numbers separated by any whitespace.
Vector parse_vector(std::istream& in);
Vector parse_vector_file(const std::string& path);

/// Writes m in the format parse_matrix reads, with round-trip precision.
void write_matrix(std::ostream& out, const Matrix& m);

/// Parses "A..B" (or a single "A") into an inclusive range. nullopt if invalid.
std::optional<std::pair<int, int>> parse_k_range(const std::string& text);

/// Executes one command. Reports go to `out`, diagnostics to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace lcpbound::cli
