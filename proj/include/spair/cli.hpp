#pragma once

// Command implementations behind the `spair` tool. Each command writes its
// result table to `out`, diagnostics to `err`, and returns the exit code.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "spair/gf.hpp"

namespace spair::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitIncomplete = 3;

enum class OutputFormat { tsv, json, pretty };

/// std::monostate renders as null / "n/a".
using Cell = std::variant<std::monostate, std::int64_t, double, bool, std::string>;

struct RecordTable {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

void render(const RecordTable& table, OutputFormat format, std::ostream& out);

/// Thrown for bad user input; maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Comma-separated base-10 field element encodings, constant coordinate first.
std::vector<gf::FieldElement> parse_vector(const std::string& literal, const gf::FieldSpec& field);

/// Default lexicographic field, or an explicit monic c_0..c_m modulus list.
gf::FieldSpec make_field(std::uint32_t p, std::uint32_t m, const std::optional<std::string>& modulus);

struct FamilyArgs {
  std::uint32_t p = 0;
  std::uint32_t e = 0;
  std::uint32_t m = 1;
  std::optional<std::string> modulus;
};

struct VerifyArgs {
  FamilyArgs family;
  std::uint64_t max_enum = 10'000'000;
  unsigned jobs = 1;
};

struct WeightArgs {
  std::uint32_t p = 0;
  std::uint32_t m = 1;
  std::optional<std::string> modulus;
  std::string vector;
};

struct PairDistArgs {
  std::uint32_t p = 0;
  std::uint32_t m = 1;
  std::optional<std::string> modulus;
  std::string x;
  std::string y;
};

struct SimulateArgs {
  FamilyArgs family;
  std::uint64_t i = 0;
  std::size_t t = 0;
  std::size_t trials = 100;
  std::uint64_t seed = 0;
  std::uint64_t max_enum = 1'000'000;
};

int cmd_table(const FamilyArgs& args, OutputFormat format, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyArgs& args, OutputFormat format, std::ostream& out, std::ostream& err);
int cmd_weight(const WeightArgs& args, OutputFormat format, std::ostream& out, std::ostream& err);
int cmd_pairdist(const PairDistArgs& args, OutputFormat format, std::ostream& out, std::ostream& err);
int cmd_mds(const FamilyArgs& args, OutputFormat format, std::ostream& out, std::ostream& err);
int cmd_simulate(const SimulateArgs& args, OutputFormat format, std::ostream& out, std::ostream& err);

/// Full command line (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace spair::cli
