#ifndef PG_CLI_HPP
#define PG_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <string>

namespace pg {

// Exit codes shared by every command.
enum ExitCode {
  kExitOk = 0,
  kExitMismatch = 1,
  kExitUsage = 2,
  kExitCap = 3,
};

struct RunConfig {
  std::string command;

  std::string group_kind = "sym";  // sym | alt | gen
  int n = 0;                       // degree
  std::string gens_text;           // comma-separated cycle notation
  std::string gens_file;

  std::string graph = "quotient";  // explicit | quotient | order | type
  std::string format = "text";     // json | csv | text
  std::string out_file;            // empty = stdout
  std::string out_dir;             // export target directory

  std::size_t max_order = 0;  // 0 = defaults (POWERGRAPH_MAX_ORDER applies)
  int threads = 1;
  std::uint64_t seed = 0;

  std::string rows = "2..13";  // verify-tables row range "a..b"
  bool bfs_large = false;      // allow BFS rows at n >= 10

  std::string map_name;  // pi | t | o | ot   (check-hom, bundle mode)
  std::string src_file;  // check-hom, file mode
  std::string dst_file;
  std::string map_file;

  bool full = false;  // closed-form: include procedure steps + structure

  int inject_mismatch_row = 0;  // test fixture: corrupt one computed row
};

int cmd_components(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_verify_tables(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_check_hom(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_closed_form(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_export(const RunConfig& cfg, std::ostream& out, std::ostream& err);

// Dispatch on cfg.command with uniform exception-to-exit-code mapping.
int run_command(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace pg

#endif  // PG_CLI_HPP
