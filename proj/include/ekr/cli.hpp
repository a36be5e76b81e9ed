#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ekr/graph.hpp"
#include "ekr/mis.hpp"

namespace ekr::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kUsage = 2,
  kNotEkr = 3,
  kUncertified = 4,
};

enum class Format { Json, Csv, Text };

struct RRange {
  std::size_t first = 1;
  std::size_t last = 0;  // inclusive; last < first means empty

  bool empty() const noexcept { return last < first; }
};

// "3" or "1..6".
RRange parse_r_range(const std::string& s);
std::vector<std::uint32_t> parse_sequence(const std::string& s);

struct GraphSource {
  std::string family;
  std::string dimacs_path;
  std::string base = "path";  // base kind for the power family
  std::optional<std::uint32_t> n, m, k;
  std::vector<std::uint32_t> s;
};

struct RunConfig {
  std::string command;
  GraphSource graph;
  std::string r_text;
  bool strict = false;
  std::size_t cap = 20000;
  std::size_t strict_cap = 1000;
  std::uint64_t node_limit = 0;
  mis::SearchMode mode = mis::SearchMode::Canonical;
  std::optional<Format> format;
  std::string out_path;
  std::uint64_t seed = 0;
  bool timing = false;
  std::string input_path;
  std::string generate = "star";
  std::optional<std::uint32_t> center;
  std::optional<std::size_t> level;
};

// Builds the graph named by a config; throws ekr::Error on bad parameters.
Graph make_graph(const GraphSource& src);

// Entry point shared by the executable and the tests. args[0] is the
// program name.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace ekr::cli
