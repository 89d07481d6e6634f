#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "tworep/intw.hpp"

namespace tworep::cli {

// Process exit codes.
enum Exit : int { kOk = 0, kFailure = 1, kParse = 2, kInvalid = 3, kCaps = 4, kIndex = 5 };

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error(what) {}
};
class InvalidSpec : public Error {
 public:
  explicit InvalidSpec(const std::string& what) : Error(what) {}
};
class CapExceeded : public Error {
 public:
  explicit CapExceeded(const std::string& what) : Error(what) {}
};

// Limits on |G|, the dimension n, the scalar order N and the number of
// enumerated rows. Overridden by TWOREP_CAPS="group=24,dim=4,order=64,rows=200000".
struct Caps {
  int group = 24;
  int dim = 4;
  long order = 64;
  double rows = 2e5;

  static Caps from_env();
  void apply(const std::string& spec);  // throws ParseError
};

struct LoadedSpec {
  std::string name;
  std::string pi0;  // "Z/2", "S_3", ...
  std::string pi1;  // "Z/2 x Z/4", "0"
  TwoGroupPtr tg;
  long order = 4;
};

// Throws ParseError for unreadable or malformed input, InvalidSpec when the
// data does not describe a special 2-group.
LoadedSpec parse_spec(const std::string& text);
LoadedSpec load_spec(const std::string& path);

enum class Format { Table, Json };

struct ClassifyOptions {
  int max_dim = 2;
  bool all = false;  // every quadruple instead of one per class
};

struct HomcatOptions {
  int source = 0, target = 0;
  int max_dim = 2;
  std::optional<std::string> reps_file;  // classify --format json output
};

struct SelftestOptions {
  unsigned long seed = 1;
  int size = 64;
  bool inject_fault = false;
};

nlohmann::json quadruple_to_json(const RepQuadruple& q);
RepQuadruple quadruple_from_json(const nlohmann::json& j, const SpecialTwoGroup& tg);

int cmd_validate(const std::string& path, Format fmt, std::ostream& out, std::ostream& err);
int cmd_classify(const std::string& path, const ClassifyOptions& opt, const Caps& caps, Format fmt, std::ostream& out,
                 std::ostream& err);
int cmd_homcat(const std::string& path, const HomcatOptions& opt, const Caps& caps, Format fmt, std::ostream& out,
               std::ostream& err);
int cmd_selftest(const SelftestOptions& opt, std::ostream& out);

// argv dispatch used by the executable
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace tworep::cli
