#pragma once

#include <atomic>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace ekr::mis {

using Bitset = boost::dynamic_bitset<std::uint64_t>;

enum class SearchMode { Canonical, Parallel };

std::string to_string(SearchMode mode);
SearchMode parse_mode(const std::string& s);

struct SearchOptions {
  SearchMode mode = SearchMode::Canonical;
  // 0 = unlimited. When the limit is hit the result is not certified.
  std::uint64_t node_limit = 0;
  // Worker count for parallel mode; 0 picks hardware concurrency.
  unsigned threads = 0;
};

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t bound_hits = 0;
  std::uint64_t reductions = 0;
  double millis = 0.0;
  bool certified = true;
  SearchMode mode = SearchMode::Canonical;
};

struct SearchResult {
  std::vector<std::size_t> vertices;  // ascending
  SearchStats stats;
};

// Exact maximum independent set of the graph given by symmetric,
// irreflexive adjacency rows. Branch-and-reduce with a greedy clique-cover
// upper bound. In canonical mode the returned set is reproducible.
SearchResult maximum_independent_set(std::span<const Bitset> adjacency,
                                     const SearchOptions& options = {});

struct EnumerationResult {
  std::vector<std::vector<std::size_t>> sets;  // in discovery order
  std::size_t maximum = 0;
  bool cap_hit = false;
  SearchStats stats;
};

// Every maximum independent set, up to `cap` of them, found by repeatedly
// searching for a maximum set that is not one already found.
EnumerationResult all_maximum_independent_sets(
    std::span<const Bitset> adjacency, std::size_t cap,
    const SearchOptions& options = {});

// Minimum-degree greedy; the result is a maximal independent set.
std::vector<std::size_t> greedy_independent_set(
    std::span<const Bitset> adjacency);

}  // namespace ekr::mis
