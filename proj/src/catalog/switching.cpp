#include <omp.h>

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>

#include "starb/catalog.hpp"

namespace starb {

namespace {

// '+' < '-' < '0' in ASCII, so adjacency sorts first.
char symbol(int v) { return v > 0 ? '+' : v < 0 ? '-' : '0'; }

struct Labeling {
  std::string code;
  std::vector<std::size_t> order;  // local indices
  std::vector<int> signs;          // indexed by position
};

// Switching automorphism: vertex u goes to perm[u], switched by signs[u].
struct Automorphism {
  std::vector<std::size_t> perm;
  std::vector<int> signs;
};

/// Lex-min search over vertex orders of one connected component.
///
/// Tied candidates in one orbit of the automorphisms that fix the current prefix give
/// equal codes, so only the first of each orbit is explored. Automorphisms come from
/// switching twins and from pairs of leaves with equal codes.
class ComponentSearch {
 public:
  explicit ComponentSearch(std::vector<std::vector<int>> adj) : adj_(std::move(adj)), m_(adj_.size()) { seed_twins(); }

  // Explores all orders starting at `first`, keeping the best against whatever is already held.
  void from(std::size_t first) {
    order_.assign(1, first);
    signs_.assign(1, 1);
    used_.assign(m_, 0);
    used_[first] = 1;
    code_.clear();
    extend();
  }

  // True if some automorphism found so far maps `v` to one of `earlier`.
  bool equivalent_to_any(std::size_t v, const std::vector<std::size_t>& earlier) const {
    if (earlier.empty()) return false;
    const auto root = orbits(all_);
    return std::any_of(earlier.begin(), earlier.end(), [&](std::size_t u) { return root[u] == root[v]; });
  }

  const std::optional<Labeling>& best() const { return best_; }

 private:
  static constexpr std::size_t kMaxFound = 64;

  void seed_twins() {
    std::vector<std::size_t> rep(m_);
    std::iota(rep.begin(), rep.end(), std::size_t{0});
    for (std::size_t v = 0; v < m_; ++v)
      for (std::size_t u = 0; u < v; ++u) {
        if (rep[u] != u) continue;
        if (const int eps = twin_sign(u, v)) {
          rep[v] = u;
          Automorphism a{std::vector<std::size_t>(m_), std::vector<int>(m_, 1)};
          std::iota(a.perm.begin(), a.perm.end(), std::size_t{0});
          a.perm[u] = v;
          a.perm[v] = u;
          a.signs[u] = a.signs[v] = eps;
          all_.push_back(std::move(a));
          break;
        }
      }
  }

  // eps if row v equals eps * row u away from u and v, else 0.
  int twin_sign(std::size_t u, std::size_t v) const {
    int eps = 0;
    for (std::size_t w = 0; w < m_; ++w) {
      if (w == u || w == v) continue;
      const int a = adj_[u][w], b = adj_[v][w];
      if ((a == 0) != (b == 0)) return 0;
      if (a == 0) continue;
      if (eps == 0) eps = a * b;
      else if (eps != a * b) return 0;
    }
    return eps == 0 ? 1 : eps;
  }

  std::vector<std::size_t> orbits(const std::vector<Automorphism>& gens) const {
    std::vector<std::size_t> parent(m_);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& a : gens)
      for (std::size_t v = 0; v < m_; ++v) {
        const auto x = find(v), y = find(a.perm[v]);
        if (x != y) parent[std::max(x, y)] = std::min(x, y);
      }
    for (std::size_t v = 0; v < m_; ++v) parent[v] = find(v);
    return parent;
  }

  // Automorphisms fixing every placed vertex, with one common switching sign on them.
  std::vector<Automorphism> stabiliser() const {
    std::vector<Automorphism> out;
    for (const auto& a : all_) {
      bool fixes = true;
      for (std::size_t i = 0; i < order_.size() && fixes; ++i)
        fixes = a.perm[order_[i]] == order_[i] && a.signs[order_[i]] == a.signs[order_[0]];
      if (fixes) out.push_back(a);
    }
    return out;
  }

  void record_leaf() {
    if (!best_ || code_ < best_->code) {
      best_ = Labeling{code_, order_, signs_};
      return;
    }
    if (code_ != best_->code || found_ >= kMaxFound) return;
    Automorphism a{std::vector<std::size_t>(m_), std::vector<int>(m_)};
    for (std::size_t i = 0; i < m_; ++i) {
      a.perm[best_->order[i]] = order_[i];
      a.signs[best_->order[i]] = best_->signs[i] * signs_[i];
    }
    all_.push_back(std::move(a));
    ++found_;
  }

  void extend() {
    const std::size_t depth = order_.size();
    if (depth == m_) {
      record_leaf();
      return;
    }
    std::string min_block;
    std::vector<std::pair<std::size_t, int>> tied;
    std::string block(depth, '0');
    for (std::size_t v = 0; v < m_; ++v) {
      if (used_[v]) continue;
      int flip = 0;
      for (std::size_t i = 0; i < depth; ++i) {
        int x = adj_[v][order_[i]] * signs_[i];
        if (x != 0 && flip == 0) flip = x;
        block[i] = symbol(x * (flip == 0 ? 1 : flip));
      }
      if (tied.empty() || block < min_block) {
        min_block = block;
        tied.assign(1, {v, flip == 0 ? 1 : flip});
      } else if (block == min_block) {
        tied.emplace_back(v, flip == 0 ? 1 : flip);
      }
    }
    const std::size_t at = code_.size();
    code_ += min_block;
    if (best_) {
      const int cmp = code_.compare(0, code_.size(), best_->code, 0, code_.size());
      if (cmp > 0) {
        code_.resize(at);
        return;
      }
    }
    std::vector<std::size_t> explored;
    for (auto [v, sign] : tied) {
      if (!explored.empty()) {
        const auto root = orbits(stabiliser());
        if (std::any_of(explored.begin(), explored.end(), [&](std::size_t u) { return root[u] == root[v]; })) continue;
      }
      explored.push_back(v);
      order_.push_back(v);
      signs_.push_back(sign);
      used_[v] = 1;
      extend();
      used_[v] = 0;
      signs_.pop_back();
      order_.pop_back();
    }
    code_.resize(at);
  }

  std::vector<std::vector<int>> adj_;
  std::size_t m_;
  std::vector<std::size_t> order_;
  std::vector<int> signs_;
  std::vector<char> used_;
  std::string code_;
  std::optional<Labeling> best_;
  std::vector<Automorphism> all_;
  std::size_t found_ = 0;
};

Labeling canonical_component(const std::vector<std::vector<int>>& adj, int threads) {
  const std::size_t m = adj.size();
  if (threads == 1 || m < 2) {
    ComponentSearch search(adj);
    std::vector<std::size_t> explored;
    for (std::size_t first = 0; first < m; ++first) {
      if (search.equivalent_to_any(first, explored)) continue;
      explored.push_back(first);
      search.from(first);
    }
    return *search.best();
  }
  std::vector<std::optional<Labeling>> per_first(m);
  const int team = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(team)
  for (std::size_t first = 0; first < m; ++first) {
    ComponentSearch search(adj);
    search.from(first);
    per_first[first] = search.best();
  }
  // The code is unique; among equal codes the lowest first vertex matches the serial search.
  std::size_t pick = 0;
  for (std::size_t first = 1; first < m; ++first)
    if (per_first[first]->code < per_first[pick]->code) pick = first;
  return *per_first[pick];
}

}  // namespace

CanonicalForm switching_canonical_form(const SignedGraph& g, int threads) {
  const std::size_t n = g.order();
  if (n > kMaxCanonicalOrder)
    throw std::invalid_argument("exact switching canonical form supports at most " + std::to_string(kMaxCanonicalOrder) +
                                " vertices, got " + std::to_string(n));

  struct Part {
    std::string key;
    std::vector<std::size_t> labeling;
    std::vector<int> signs;
  };
  std::vector<Part> parts;
  for (const auto& comp : g.components()) {
    std::vector<std::vector<int>> adj(comp.size(), std::vector<int>(comp.size()));
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (std::size_t j = 0; j < comp.size(); ++j) adj[i][j] = g.sign(comp[i], comp[j]);
    const auto lab = canonical_component(adj, threads);
    Part p;
    p.key = std::to_string(comp.size()) + ":" + lab.code + ";";
    for (std::size_t i = 0; i < comp.size(); ++i) {
      p.labeling.push_back(comp[lab.order[i]]);
      p.signs.push_back(lab.signs[i]);
    }
    parts.push_back(std::move(p));
  }
  std::stable_sort(parts.begin(), parts.end(), [](const Part& a, const Part& b) {
    if (a.labeling.size() != b.labeling.size()) return a.labeling.size() < b.labeling.size();
    return a.key < b.key;
  });

  CanonicalForm form;
  form.signs.assign(n, 1);
  for (const auto& p : parts) {
    form.code += p.key;
    for (std::size_t i = 0; i < p.labeling.size(); ++i) {
      form.labeling.push_back(p.labeling[i]);
      form.signs[p.labeling[i]] = p.signs[i];
    }
  }
  return form;
}

bool check_certificate(const SignedGraph& g1, const SignedGraph& g2, const SwitchingCertificate& cert) {
  if (g1.order() != g2.order() || cert.perm.size() != g1.order() || cert.signs.size() != g1.order()) return false;
  if (std::any_of(cert.signs.begin(), cert.signs.end(), [](int s) { return s != 1 && s != -1; })) return false;
  try {
    return g1.switched(cert.signs).permuted(cert.perm) == g2;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

std::optional<SwitchingCertificate> switching_isomorphic(const SignedGraph& g1, const SignedGraph& g2, int threads) {
  if (g1.order() != g2.order() || g1.edge_count() != g2.edge_count()) return std::nullopt;
  const auto f1 = switching_canonical_form(g1, threads);
  const auto f2 = switching_canonical_form(g2, threads);
  if (f1.code != f2.code) return std::nullopt;

  const std::size_t n = g1.order();
  SwitchingCertificate cert{std::vector<std::size_t>(n), std::vector<int>(n)};
  for (std::size_t i = 0; i < n; ++i) {
    const auto u = f1.labeling[i], w = f2.labeling[i];
    cert.perm[u] = w;
    cert.signs[u] = f1.signs[u] * f2.signs[w];
  }
  if (!check_certificate(g1, g2, cert)) throw std::logic_error("switching_isomorphic: certificate fails verification");
  return cert;
}

std::string to_string(Equivalence e) {
  switch (e) {
    case Equivalence::Isomorphic:
      return "isomorphic";
    case Equivalence::NotIsomorphic:
      return "not isomorphic";
    case Equivalence::ProbablyIsomorphic:
      return "probably isomorphic";
  }
  return "?";
}

Equivalence switching_equivalence(const SignedGraph& g1, const SignedGraph& g2) {
  if (g1.order() != g2.order() || g1.edge_count() != g2.edge_count()) return Equivalence::NotIsomorphic;
  if (g1.order() <= kMaxCanonicalOrder)
    return switching_isomorphic(g1, g2) ? Equivalence::Isomorphic : Equivalence::NotIsomorphic;
  return invariants_match(g1, g2) ? Equivalence::ProbablyIsomorphic : Equivalence::NotIsomorphic;
}

}  // namespace starb
