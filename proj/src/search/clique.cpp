#include <omp.h>

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "starb/search.hpp"

namespace starb {

namespace {

using Clock = std::chrono::steady_clock;
using Bits = std::vector<std::uint64_t>;

// The graph renumbered so that vertex order = branching order (degree desc, index asc).
struct Ordered {
  std::size_t n = 0;
  std::size_t words = 0;
  std::vector<std::size_t> original;  // new index -> original vertex
  std::vector<Bits> adj;

  explicit Ordered(const CompatibilityGraph& g) : n(g.size()), words(g.words()), original(g.size()), adj(g.size()) {
    std::vector<std::size_t> deg(n);
    for (std::size_t i = 0; i < n; ++i) deg[i] = g.degree(i);
    std::iota(original.begin(), original.end(), std::size_t{0});
    std::stable_sort(original.begin(), original.end(), [&](auto a, auto b) { return deg[a] > deg[b]; });
    std::vector<std::size_t> position(n);
    for (std::size_t i = 0; i < n; ++i) position[original[i]] = i;
    for (std::size_t i = 0; i < n; ++i) {
      adj[i].assign(words, 0);
      const auto row = g.row(original[i]);
      for (std::size_t w = 0; w < words; ++w)
        for (auto bits = row[w]; bits; bits &= bits - 1) {
          const auto j = position[w * 64 + static_cast<std::size_t>(std::countr_zero(bits))];
          adj[i][j >> 6] |= std::uint64_t{1} << (j & 63);
        }
    }
  }

  Bits all() const {
    Bits p(words, 0);
    for (std::size_t i = 0; i < n; ++i) p[i >> 6] |= std::uint64_t{1} << (i & 63);
    return p;
  }
};

bool empty(const Bits& b) {
  return std::all_of(b.begin(), b.end(), [](auto w) { return w == 0; });
}

// Greedy sequential colouring in index order. `order` receives vertices by colour class,
// `colour` the running class number (a bound on the clique size within the prefix).
void colour_sort(const Ordered& g, const Bits& p, std::vector<std::size_t>& order, std::vector<std::size_t>& colour) {
  order.clear();
  colour.clear();
  Bits uncoloured = p;
  std::size_t k = 0;
  Bits q(g.words);
  while (!empty(uncoloured)) {
    ++k;
    q = uncoloured;
    for (std::size_t w = 0; w < g.words; ++w) {
      while (q[w]) {
        const auto v = w * 64 + static_cast<std::size_t>(std::countr_zero(q[w]));
        q[w] &= q[w] - 1;
        uncoloured[w] &= ~(std::uint64_t{1} << (v & 63));
        order.push_back(v);
        colour.push_back(k);
        const auto& nv = g.adj[v];
        for (std::size_t x = w; x < g.words; ++x) q[x] &= ~nv[x];
      }
    }
  }
}

class Searcher {
 public:
  Searcher(const Ordered& g, std::size_t initial_best, std::size_t stop_at, Clock::time_point deadline, bool has_deadline,
           std::atomic<std::size_t>* shared_best, std::atomic<bool>* abort)
      : g_(g),
        best_(initial_best),
        stop_at_(stop_at),
        deadline_(deadline),
        has_deadline_(has_deadline),
        shared_best_(shared_best),
        abort_(abort) {}

  void run(Bits p) { expand(p); }
  void push(std::size_t v) { cur_.push_back(v); }

  std::size_t best() const { return best_; }
  const std::vector<std::size_t>& best_set() const { return best_set_; }
  bool timed_out() const { return timed_out_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  std::size_t global_best() const {
    return shared_best_ ? std::max(best_, shared_best_->load(std::memory_order_relaxed)) : best_;
  }

  bool should_stop() {
    if (abort_ && abort_->load(std::memory_order_relaxed)) return true;
    if (stopped_) return true;
    if (has_deadline_ && (nodes_ & 1023) == 0 && Clock::now() > deadline_) {
      timed_out_ = true;
      stopped_ = true;
      if (abort_) abort_->store(true);
    }
    return stopped_;
  }

  void record() {
    best_ = cur_.size();
    best_set_ = cur_;
    if (shared_best_) {
      auto seen = shared_best_->load();
      while (seen < best_ && !shared_best_->compare_exchange_weak(seen, best_)) {
      }
    }
    if (stop_at_ && best_ >= stop_at_) {
      stopped_ = true;
      if (abort_) abort_->store(true);
    }
  }

  void expand(Bits p) {
    ++nodes_;
    if (should_stop()) return;
    std::vector<std::size_t> order, colour;
    colour_sort(g_, p, order, colour);
    Bits np(g_.words);
    for (std::size_t idx = order.size(); idx-- > 0;) {
      if (cur_.size() + colour[idx] <= global_best()) return;
      const auto v = order[idx];
      cur_.push_back(v);
      bool any = false;
      for (std::size_t w = 0; w < g_.words; ++w) {
        np[w] = p[w] & g_.adj[v][w];
        any |= np[w] != 0;
      }
      if (!any) {
        if (cur_.size() > best_ && cur_.size() > global_best()) record();
      } else {
        expand(np);
      }
      cur_.pop_back();
      p[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
      if (stopped_ || (abort_ && abort_->load(std::memory_order_relaxed))) return;
    }
  }

  const Ordered& g_;
  std::size_t best_;
  std::vector<std::size_t> best_set_;
  std::vector<std::size_t> cur_;
  std::size_t stop_at_;
  Clock::time_point deadline_;
  bool has_deadline_;
  std::atomic<std::size_t>* shared_best_;
  std::atomic<bool>* abort_;
  std::uint64_t nodes_ = 0;
  bool timed_out_ = false;
  bool stopped_ = false;
};

CliqueResult to_result(const Ordered& g, std::size_t size, std::vector<std::size_t> set, bool exact, std::uint64_t nodes) {
  CliqueResult r;
  r.size = size;
  r.exact = exact;
  r.nodes = nodes;
  for (auto v : set) r.witness.push_back(g.original[v]);
  std::sort(r.witness.begin(), r.witness.end());
  return r;
}

Clock::time_point deadline_for(const CliqueOptions& opts) {
  return Clock::now() + std::chrono::milliseconds(opts.time_budget_ms > 0 ? opts.time_budget_ms : 0);
}

CliqueResult serial_on(const Ordered& g, const CliqueOptions& opts, std::size_t initial_best) {
  Searcher s(g, initial_best, opts.stop_at, deadline_for(opts), opts.time_budget_ms > 0, nullptr, nullptr);
  if (g.n > 0) s.run(g.all());
  return to_result(g, s.best(), s.best_set(), !s.timed_out(), s.nodes());
}

CliqueResult parallel_on(const Ordered& g, const CliqueOptions& opts) {
  if (g.n == 0) return {};
  const Bits p = g.all();
  std::vector<std::size_t> order, colour;
  colour_sort(g, p, order, colour);
  const std::size_t branches = order.size();

  std::atomic<std::size_t> shared_best{0};
  std::atomic<bool> abort{false};
  std::atomic<bool> timed_out{false};
  std::atomic<std::uint64_t> nodes{0};
  std::mutex merge;
  std::size_t best = 0;
  std::vector<std::size_t> best_set;
  const auto deadline = deadline_for(opts);

  const int threads = opts.threads > 0 ? opts.threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (std::size_t b = 0; b < branches; ++b) {
    // Processing order is from the highest colour down, as in the serial kernel.
    const std::size_t idx = branches - 1 - b;
    if (abort.load() || colour[idx] <= shared_best.load()) continue;
    const auto v = order[idx];
    Bits np(g.words);
    for (std::size_t w = 0; w < g.words; ++w) np[w] = p[w] & g.adj[v][w];
    for (std::size_t earlier = branches - 1; earlier > idx; --earlier)
      np[order[earlier] >> 6] &= ~(std::uint64_t{1} << (order[earlier] & 63));

    Searcher s(g, 0, opts.stop_at, deadline, opts.time_budget_ms > 0, &shared_best, &abort);
    s.push(v);
    if (empty(np)) {
      std::size_t seen = shared_best.load();
      while (seen < 1 && !shared_best.compare_exchange_weak(seen, 1)) {
      }
      std::lock_guard lock(merge);
      if (best < 1) {
        best = 1;
        best_set = {v};
      }
    } else {
      s.run(np);
    }
    nodes += s.nodes();
    if (s.timed_out()) timed_out = true;
    if (s.best() > 0) {
      std::lock_guard lock(merge);
      if (s.best() > best) {
        best = s.best();
        best_set = s.best_set();
      }
    }
    if (opts.stop_at && shared_best.load() >= opts.stop_at) abort = true;
  }
  return to_result(g, best, best_set, !timed_out.load(), nodes.load());
}

}  // namespace

CliqueResult max_clique_serial(const CompatibilityGraph& g, const CliqueOptions& opts) {
  const Ordered og(g);
  return serial_on(og, opts, 0);
}

CliqueResult max_clique_parallel(const CompatibilityGraph& g, const CliqueOptions& opts) {
  const Ordered og(g);
  return parallel_on(og, opts);
}

CliqueResult max_clique(const CompatibilityGraph& g, const CliqueOptions& opts) {
  const Ordered og(g);
  auto sized = opts.threads == 1 ? serial_on(og, opts, 0) : parallel_on(og, opts);
  if (!sized.exact || sized.size == 0) return sized;

  // Canonical witness: first clique of the proven size in serial branching order.
  CliqueOptions locate;
  locate.stop_at = sized.size;
  auto located = serial_on(og, locate, sized.size - 1);
  if (located.size != sized.size) throw std::logic_error("max_clique: witness pass disagrees with size pass");
  located.nodes += sized.nodes;
  return located;
}

}  // namespace starb
