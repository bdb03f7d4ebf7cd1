#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

namespace uctk::cli {

enum class Format { Text, Structured };

struct Options {
  bool pretty = false;
  std::uint64_t seed = 0;
  std::size_t bound = 4;
  Format format = Format::Text;
};

// Exit status of a single query.
enum Status { Ok = 0, Rejected = 1, UsageError = 2 };

struct Report {
  nlohmann::ordered_json body;
  int status = Ok;
};

// args[0] is the command name.
Report run(const std::vector<std::string>& args, const Options& opts);
std::string render(const Report& r, const Options& opts);
// One report per non-blank, non-comment line, in input order. Returns the
// largest status seen.
int run_batch(std::istream& in, const Options& opts, std::ostream& out);

}  // namespace uctk::cli
