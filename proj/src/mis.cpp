#include "ekr/mis.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <mutex>
#include <set>
#include <stdexcept>
#include <thread>

#include "ekr/error.hpp"

namespace ekr::mis {

std::string to_string(SearchMode mode) {
  return mode == SearchMode::Canonical ? "canonical" : "parallel";
}

SearchMode parse_mode(const std::string& s) {
  if (s == "canonical") return SearchMode::Canonical;
  if (s == "parallel") return SearchMode::Parallel;
  throw Error(ErrorKind::InvalidParameter, "unknown search mode '" + s + "'");
}

namespace {

using Word = std::uint64_t;
constexpr std::size_t npos = static_cast<std::size_t>(-1);

// Dense row-major adjacency with a fixed word stride, so the hot loops can
// work on raw words without allocating.
class Matrix {
 public:
  explicit Matrix(std::span<const Bitset> rows)
      : n_(rows.size()), stride_((rows.size() + 63) / 64),
        words_(n_ * stride_, 0) {
    for (std::size_t v = 0; v < n_; ++v) {
      if (rows[v].size() != n_)
        throw Error(ErrorKind::InvalidParameter,
                    "adjacency row has wrong length");
      for (auto u = rows[v].find_first(); u != Bitset::npos;
           u = rows[v].find_next(u)) {
        if (u == v)
          throw Error(ErrorKind::InvalidParameter, "adjacency has a self-loop");
        words_[v * stride_ + u / 64] |= Word{1} << (u % 64);
      }
    }
    for (std::size_t v = 0; v < n_; ++v)
      for (std::size_t u = next(row(v), 0); u != npos; u = next(row(v), u + 1))
        if (!test(row(u), v))
          throw Error(ErrorKind::InvalidParameter, "adjacency is not symmetric");
  }

  std::size_t size() const noexcept { return n_; }
  std::size_t stride() const noexcept { return stride_; }
  const Word* row(std::size_t v) const noexcept {
    return words_.data() + v * stride_;
  }

  static bool test(const Word* w, std::size_t i) noexcept {
    return (w[i / 64] >> (i % 64)) & 1u;
  }
  static void reset(Word* w, std::size_t i) noexcept {
    w[i / 64] &= ~(Word{1} << (i % 64));
  }
  std::size_t next(const Word* w, std::size_t from) const noexcept {
    std::size_t wi = from / 64;
    if (wi >= stride_) return npos;
    Word cur = w[wi] & (~Word{0} << (from % 64));
    while (true) {
      if (cur) return wi * 64 + static_cast<std::size_t>(std::countr_zero(cur));
      if (++wi == stride_) return npos;
      cur = w[wi];
    }
  }
  std::size_t and_count(const Word* a, const Word* b) const noexcept {
    std::size_t c = 0;
    for (std::size_t i = 0; i < stride_; ++i)
      c += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
    return c;
  }
  bool any(const Word* a) const noexcept {
    for (std::size_t i = 0; i < stride_; ++i)
      if (a[i]) return true;
    return false;
  }

 private:
  std::size_t n_;
  std::size_t stride_;
  std::vector<Word> words_;
};

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

struct Incumbent {
  std::mutex mutex;
  std::atomic<std::size_t> size{0};
  std::vector<std::size_t> vertices;

  void offer(const std::vector<std::size_t>& chosen) {
    if (chosen.size() <= size.load()) return;
    std::lock_guard lock(mutex);
    if (chosen.size() <= size.load()) return;
    vertices = chosen;
    size.store(chosen.size());
  }
};

// One depth-first worker. `target` > 0 switches to enumeration: every
// independent set of exactly that size is reported and the degree-one
// reduction (which discards some optima) is disabled.
class Searcher {
 public:
  Searcher(const Matrix& m, Incumbent& best, std::uint64_t node_limit,
           std::atomic<bool>& aborted)
      : m_(m), best_(best), node_limit_(node_limit), aborted_(aborted) {}

  void run(std::vector<Word> candidates, std::vector<std::size_t> chosen) {
    chosen_ = std::move(chosen);
    expand(std::move(candidates));
  }

  void enumerate(std::vector<Word> candidates, std::size_t target,
                 std::size_t cap, std::vector<std::vector<std::size_t>>& out) {
    target_ = target;
    cap_ = cap;
    found_ = &out;
    chosen_.clear();
    expand(std::move(candidates));
  }

  bool cap_hit() const noexcept { return cap_hit_; }

  // Applies reductions and, if the subproblem survives bounding, returns the
  // branching vertex; npos means the node is closed.
  std::size_t prepare(std::vector<Word>& p) {
    ++stats.nodes;
    if (node_limit_ && stats.nodes > node_limit_) aborted_.store(true);
    if (aborted_.load(std::memory_order_relaxed)) return npos;

    reduce(p);
    if (!m_.any(p.data())) {
      leaf();
      return npos;
    }
    const std::size_t bound = chosen_.size() + clique_cover(p);
    if (target_ ? bound < target_ : bound <= best_.size.load()) {
      ++stats.bound_hits;
      return npos;
    }
    return branch_vertex(p);
  }

  std::vector<std::size_t>& chosen() noexcept { return chosen_; }

  SearchStats stats;

 private:
  void expand(std::vector<Word> p) {
    const std::size_t marker = chosen_.size();
    const std::size_t v = prepare(p);
    if (v != npos) {
      std::vector<Word> with = p;
      remove_closed_neighborhood(with, v);
      chosen_.push_back(v);
      expand(std::move(with));
      chosen_.pop_back();

      Matrix::reset(p.data(), v);
      expand(std::move(p));
    }
    chosen_.resize(marker);
  }

  void leaf() {
    if (target_) {
      if (chosen_.size() != target_) return;
      if (found_->size() >= cap_) {
        cap_hit_ = true;
        aborted_.store(true);
        return;
      }
      auto s = chosen_;
      std::sort(s.begin(), s.end());
      found_->push_back(std::move(s));
      return;
    }
    best_.offer(sorted(chosen_));
  }

  static std::vector<std::size_t> sorted(std::vector<std::size_t> v) {
    std::sort(v.begin(), v.end());
    return v;
  }

  void remove_closed_neighborhood(std::vector<Word>& p, std::size_t v) const {
    const Word* row = m_.row(v);
    for (std::size_t i = 0; i < m_.stride(); ++i) p[i] &= ~row[i];
    Matrix::reset(p.data(), v);
  }

  void reduce(std::vector<Word>& p) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t v = m_.next(p.data(), 0); v != npos;
           v = m_.next(p.data(), v + 1)) {
        const Word* row = m_.row(v);
        std::size_t deg = 0;
        std::size_t neighbor = npos;
        for (std::size_t i = 0; i < m_.stride() && deg < 2; ++i) {
          const Word w = row[i] & p[i];
          if (!w) continue;
          deg += static_cast<std::size_t>(std::popcount(w));
          if (neighbor == npos)
            neighbor = i * 64 + static_cast<std::size_t>(std::countr_zero(w));
        }
        if (deg == 0) {
          Matrix::reset(p.data(), v);
          chosen_.push_back(v);
          ++stats.reductions;
          changed = true;
        } else if (deg == 1 && !target_) {
          Matrix::reset(p.data(), v);
          Matrix::reset(p.data(), neighbor);
          chosen_.push_back(v);
          ++stats.reductions;
          changed = true;
        }
      }
    }
  }

  // Greedy partition of the candidates into cliques; the count bounds the
  // independence number of the subproblem.
  std::size_t clique_cover(const std::vector<Word>& p) {
    scratch_u_ = p;
    scratch_q_.resize(m_.stride());
    std::size_t cliques = 0;
    for (std::size_t v = m_.next(scratch_u_.data(), 0); v != npos;
         v = m_.next(scratch_u_.data(), v)) {
      Matrix::reset(scratch_u_.data(), v);
      const Word* row = m_.row(v);
      for (std::size_t i = 0; i < m_.stride(); ++i)
        scratch_q_[i] = scratch_u_[i] & row[i];
      for (std::size_t w = m_.next(scratch_q_.data(), 0); w != npos;
           w = m_.next(scratch_q_.data(), w)) {
        Matrix::reset(scratch_u_.data(), w);
        const Word* wrow = m_.row(w);
        for (std::size_t i = 0; i < m_.stride(); ++i) scratch_q_[i] &= wrow[i];
      }
      ++cliques;
    }
    return cliques;
  }

  std::size_t branch_vertex(const std::vector<Word>& p) const {
    std::size_t best_v = npos;
    std::size_t best_deg = 0;
    for (std::size_t v = m_.next(p.data(), 0); v != npos;
         v = m_.next(p.data(), v + 1)) {
      const std::size_t d = m_.and_count(m_.row(v), p.data());
      if (best_v == npos || d > best_deg) {
        best_v = v;
        best_deg = d;
      }
    }
    return best_v;
  }

  const Matrix& m_;
  Incumbent& best_;
  std::uint64_t node_limit_;
  std::atomic<bool>& aborted_;
  std::vector<std::size_t> chosen_;
  std::vector<Word> scratch_u_, scratch_q_;

  std::size_t target_ = 0;
  std::size_t cap_ = 0;
  bool cap_hit_ = false;
  std::vector<std::vector<std::size_t>>* found_ = nullptr;
};

std::vector<Word> full_set(const Matrix& m) {
  std::vector<Word> p(m.stride(), ~Word{0});
  if (m.size() % 64) p.back() = (Word{1} << (m.size() % 64)) - 1;
  if (m.size() == 0) p.clear();
  return p;
}

struct Task {
  std::vector<Word> candidates;
  std::vector<std::size_t> chosen;
};

// Unfolds the first levels of the search tree into independent subproblems.
std::vector<Task> split(const Matrix& m, Incumbent& best,
                        std::atomic<bool>& aborted, std::size_t want,
                        SearchStats& stats) {
  std::vector<Task> frontier{{full_set(m), {}}};
  std::vector<Task> done;
  while (!frontier.empty() && frontier.size() + done.size() < want) {
    Task t = std::move(frontier.front());
    frontier.erase(frontier.begin());
    Searcher s(m, best, 0, aborted);
    s.chosen() = t.chosen;
    const std::size_t v = s.prepare(t.candidates);
    stats.nodes += s.stats.nodes;
    stats.bound_hits += s.stats.bound_hits;
    stats.reductions += s.stats.reductions;
    if (v == npos) continue;
    Task with{t.candidates, s.chosen()};
    const Word* row = m.row(v);
    for (std::size_t i = 0; i < m.stride(); ++i) with.candidates[i] &= ~row[i];
    Matrix::reset(with.candidates.data(), v);
    with.chosen.push_back(v);
    Task without{std::move(t.candidates), s.chosen()};
    Matrix::reset(without.candidates.data(), v);
    frontier.push_back(std::move(with));
    frontier.push_back(std::move(without));
  }
  done.insert(done.end(), std::make_move_iterator(frontier.begin()),
              std::make_move_iterator(frontier.end()));
  return done;
}

void accumulate(SearchStats& into, const SearchStats& s) {
  into.nodes += s.nodes;
  into.bound_hits += s.bound_hits;
  into.reductions += s.reductions;
}

}  // namespace

std::vector<std::size_t> greedy_independent_set(
    std::span<const Bitset> adjacency) {
  const Matrix m(adjacency);
  const std::size_t n = m.size();
  std::vector<std::size_t> degree(n);
  std::vector<bool> alive(n, true);
  std::set<std::pair<std::size_t, std::size_t>> queue;
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t u = m.next(m.row(v), 0); u != npos;
         u = m.next(m.row(v), u + 1))
      ++degree[v];
    queue.emplace(degree[v], v);
  }
  auto kill = [&](std::size_t v) {
    alive[v] = false;
    queue.erase({degree[v], v});
    for (std::size_t u = m.next(m.row(v), 0); u != npos;
         u = m.next(m.row(v), u + 1)) {
      if (!alive[u]) continue;
      queue.erase({degree[u], u});
      --degree[u];
      queue.emplace(degree[u], u);
    }
  };
  std::vector<std::size_t> chosen;
  while (!queue.empty()) {
    const std::size_t v = queue.begin()->second;
    chosen.push_back(v);
    std::vector<std::size_t> nbrs;
    for (std::size_t u = m.next(m.row(v), 0); u != npos;
         u = m.next(m.row(v), u + 1))
      if (alive[u]) nbrs.push_back(u);
    kill(v);
    for (auto u : nbrs) kill(u);
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

SearchResult maximum_independent_set(std::span<const Bitset> adjacency,
                                     const SearchOptions& options) {
  const auto start = Clock::now();
  const Matrix m(adjacency);
  Incumbent best;
  best.vertices = greedy_independent_set(adjacency);
  best.size = best.vertices.size();
  std::atomic<bool> aborted{false};

  SearchResult result;
  result.stats.mode = options.mode;
  if (m.size() == 0) return result;

  if (options.mode == SearchMode::Canonical) {
    Searcher s(m, best, options.node_limit, aborted);
    s.run(full_set(m), {});
    result.stats = s.stats;
  } else {
    unsigned threads = options.threads ? options.threads
                                       : std::thread::hardware_concurrency();
    threads = std::max(1u, threads);
    std::vector<Task> tasks =
        split(m, best, aborted, std::size_t{threads} * 8, result.stats);
    std::atomic<std::size_t> next{0};
    std::mutex stats_mutex;
    std::vector<std::thread> pool;
    const std::uint64_t per_worker_limit = options.node_limit;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        Searcher s(m, best, per_worker_limit, aborted);
        for (std::size_t i = next++; i < tasks.size(); i = next++)
          s.run(std::move(tasks[i].candidates), std::move(tasks[i].chosen));
        std::lock_guard lock(stats_mutex);
        accumulate(result.stats, s.stats);
      });
    }
    for (auto& th : pool) th.join();
  }
  result.stats.mode = options.mode;
  result.stats.certified = !aborted.load();
  result.vertices = best.vertices;
  result.stats.millis = elapsed_ms(start);
  return result;
}

EnumerationResult all_maximum_independent_sets(
    std::span<const Bitset> adjacency, std::size_t cap,
    const SearchOptions& options) {
  if (cap == 0)
    throw Error(ErrorKind::InvalidParameter, "enumeration cap must be >= 1");
  const auto start = Clock::now();
  SearchResult first = maximum_independent_set(adjacency, options);
  EnumerationResult out;
  out.maximum = first.vertices.size();
  out.stats = first.stats;
  if (!first.stats.certified) {
    out.sets.push_back(first.vertices);
    out.stats.millis = elapsed_ms(start);
    return out;
  }
  const Matrix m(adjacency);
  if (m.size() == 0) {
    out.sets.push_back({});
    return out;
  }
  Incumbent unused;
  std::atomic<bool> aborted{false};
  Searcher s(m, unused, options.node_limit, aborted);
  s.enumerate(full_set(m), out.maximum, cap, out.sets);
  accumulate(out.stats, s.stats);
  out.cap_hit = s.cap_hit();
  out.stats.certified = !aborted.load() || out.cap_hit;
  out.stats.mode = SearchMode::Canonical;
  out.stats.millis = elapsed_ms(start);
  return out;
}

}  // namespace ekr::mis
