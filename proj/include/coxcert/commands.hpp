#pragma once

// Command implementations behind the coxcert executable. Each returns the
// process exit code: 0 all checks pass, 1 some check failed, 2 bad usage.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace coxcert {

struct RunConfig {
  std::string type;         // "E8", "2A4", "3D4"
  std::string q = "auto";   // "auto" or a comma-separated list
  bool exhaustive = false;
  std::uint64_t seed = 1;
  std::string out;          // empty = stdout
  bool force = false;
  bool mutate = false;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

/// "auto" -> {m+1, ..., m+4}; otherwise a comma-separated list such as "7,8".
/// Throws std::invalid_argument on junk or values below 2.
std::vector<long> parse_q_list(const std::string& text, int m);

int cmd_m_table(std::ostream& out, std::ostream& err);
int cmd_certify(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_verify_cells(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_oracle_check(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace coxcert
