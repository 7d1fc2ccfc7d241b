#include "nashlab/iterate.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <mutex>
#include <thread>
#include <utility>

#include "nashlab/nash.hpp"

namespace nashlab {

namespace {

template <typename F>
void parallel_for(std::size_t n, std::size_t jobs, F&& f) {
  if (jobs <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  const std::size_t workers = std::min(jobs, n);
  pool.reserve(workers);
  for (std::size_t t = 0; t < workers; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) {
        try {
          f(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

struct Probe {
  bool smooth = false;
  bool pointed = true;
  std::string key;
};

Probe probe(const AffineSemigroup& s) {
  Probe p;
  p.smooth = is_smooth(s);
  p.pointed = s.is_pointed();
  if (p.pointed) p.key = invariant_key(s);
  else p.key = "~units-not-split";
  return p;
}

struct Expansion {
  std::vector<NashChart> charts;
  std::vector<Probe> probes;
  std::string error;
};

bool is_ancestor(const IterationTree& tree, std::size_t candidate, std::size_t node) {
  for (auto p = tree.nodes[node].parent; p; p = tree.nodes[*p].parent)
    if (*p == candidate) return true;
  return false;
}

}  // namespace

std::size_t default_max_depth(std::size_t rank) { return rank <= 3 ? 25 : 10; }

IterationTree run(const AffineSemigroup& root, const RunConfig& cfg) {
  if (cfg.max_depth < 1) throw Error("max_depth must be at least 1");
  if (cfg.max_nodes < 1) throw Error("max_nodes must be at least 1");
  if (root.rank() == 0 || rank(root.generators(), root.rank()) != root.rank()) {
    throw Error("iteration root must be a full-rank semigroup");
  }
  if (!root.is_pointed()) throw NotPointedError("iteration root must be pointed");

  IterationTree tree;
  tree.config = cfg;
  IterationNode first;
  first.semigroup = root;
  first.base_exponent = LatticeVector(root.rank());
  tree.nodes.push_back(std::move(first));

  std::vector<Probe> probes(1);
  probes[0] = probe(root);
  std::map<std::string, std::vector<std::size_t>> classes;
  std::vector<std::size_t> frontier{0};

  while (!frontier.empty()) {
    std::vector<std::size_t> to_expand;
    for (auto id : frontier) {
      IterationNode& node = tree.nodes[id];
      const Probe& pr = probes[id];
      if (pr.smooth) {
        node.verdict = Verdict::Smooth;
        continue;
      }
      if (!pr.pointed) {
        node.annotation = "units-not-split";
      } else {
        auto& same_key = classes[pr.key];
        std::vector<std::size_t> ordered;
        for (auto c : same_key)
          if (is_ancestor(tree, c, id)) ordered.push_back(c);
        if (cfg.cycle_scope == CycleScope::AllVisited) {
          for (auto c : same_key)
            if (!is_ancestor(tree, c, id)) ordered.push_back(c);
        }
        for (auto c : ordered) {
          auto cert = isomorphic(node.semigroup, tree.nodes[c].semigroup);
          if (!cert) continue;
          node.verdict = Verdict::Cycle;
          node.cycle_target = c;
          node.cycle_to_ancestor = is_ancestor(tree, c, id);
          if (!node.cycle_to_ancestor) node.annotation = "repeated-class";
          node.certificate = std::move(cert);
          break;
        }
        if (node.verdict == Verdict::Cycle) continue;
        same_key.push_back(id);
      }
      if (node.depth >= cfg.max_depth) {
        node.verdict = Verdict::DepthLimit;
        continue;
      }
      to_expand.push_back(id);
    }

    std::vector<Expansion> expansions(to_expand.size());
    parallel_for(to_expand.size(), cfg.jobs, [&](std::size_t i) {
      Expansion& e = expansions[i];
      try {
        e.charts = nash_step_charts(tree.nodes[to_expand[i]].semigroup, cfg.characteristic,
                                    cfg.normalized);
      } catch (const EmptyLogJacobian&) {
        e.error = "empty-log-jacobian";
        return;
      }
      for (const auto& c : e.charts) e.probes.push_back(probe(c.semigroup));
    });

    std::vector<std::size_t> next;
    for (std::size_t i = 0; i < to_expand.size(); ++i) {
      const std::size_t id = to_expand[i];
      Expansion& e = expansions[i];
      if (!e.error.empty()) {
        tree.nodes[id].verdict = Verdict::DepthLimit;
        tree.nodes[id].annotation = e.error;
        continue;
      }
      if (tree.nodes.size() + e.charts.size() > cfg.max_nodes) {
        tree.nodes[id].verdict = Verdict::DepthLimit;
        tree.nodes[id].annotation = "node-limit";
        continue;
      }
      std::vector<std::size_t> order(e.charts.size());
      for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
      std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        if (e.probes[x].key != e.probes[y].key) return e.probes[x].key < e.probes[y].key;
        if (!(e.charts[x].semigroup == e.charts[y].semigroup))
          return e.charts[x].semigroup < e.charts[y].semigroup;
        return e.charts[x].base_exponent < e.charts[y].base_exponent;
      });
      tree.nodes[id].verdict = Verdict::Expanded;
      const std::size_t depth = tree.nodes[id].depth + 1;
      for (auto k : order) {
        IterationNode child;
        child.id = tree.nodes.size();
        child.semigroup = e.charts[k].semigroup;
        child.parent = id;
        child.depth = depth;
        child.base_exponent = e.charts[k].base_exponent;
        tree.nodes[id].children.push_back(child.id);
        next.push_back(child.id);
        probes.push_back(e.probes[k]);
        tree.nodes.push_back(std::move(child));
      }
    }
    frontier = std::move(next);
  }

  if (!verify_cycles(tree)) throw std::logic_error("cycle certificate failed re-verification");
  return tree;
}

bool verify_cycles(const IterationTree& tree) {
  for (const auto& n : tree.nodes) {
    if (n.verdict != Verdict::Cycle) continue;
    if (!n.cycle_target || !n.certificate) return false;
    const auto& target = tree.nodes.at(*n.cycle_target);
    if (n.cycle_to_ancestor != is_ancestor(tree, target.id, n.id)) return false;
    if (!verify_certificate(*n.certificate, n.semigroup, target.semigroup)) return false;
  }
  return true;
}

Summary verdict_summary(const IterationTree& tree) {
  const std::size_t n = tree.nodes.size();
  if (n == 0) return Summary::Inconclusive;
  auto successors = [&](std::size_t id) {
    const auto& node = tree.nodes[id];
    std::vector<std::size_t> out = node.children;
    if (node.verdict == Verdict::Cycle) out.push_back(*node.cycle_target);
    return out;
  };

  // A directed loop through child edges and repeated-class links means some
  // branch of the unfolded iteration revisits a class forever.
  std::vector<int> color(n, 0);
  std::vector<std::pair<std::size_t, std::size_t>> stack{{0, 0}};
  color[0] = 1;
  bool loop = false;
  while (!stack.empty() && !loop) {
    auto& [id, pos] = stack.back();
    auto succ = successors(id);
    if (pos == succ.size()) {
      color[id] = 2;
      stack.pop_back();
      continue;
    }
    const std::size_t next = succ[pos++];
    if (color[next] == 1) loop = true;
    else if (color[next] == 0) {
      color[next] = 1;
      stack.emplace_back(next, 0);
    }
  }
  if (loop) return Summary::CounterexampleCycle;

  std::vector<bool> resolved(n, false);
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = n; i-- > 0;) {
      if (resolved[i]) continue;
      const auto& node = tree.nodes[i];
      bool r = false;
      switch (node.verdict) {
        case Verdict::Smooth:
          r = true;
          break;
        case Verdict::Expanded:
          r = std::all_of(node.children.begin(), node.children.end(),
                          [&](std::size_t c) { return resolved[c]; });
          break;
        case Verdict::Cycle:
          r = resolved[*node.cycle_target];
          break;
        case Verdict::DepthLimit:
          break;
      }
      if (r) {
        resolved[i] = true;
        changed = true;
      }
    }
  }
  return resolved[0] ? Summary::Resolved : Summary::Inconclusive;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Smooth: return "Smooth";
    case Verdict::Cycle: return "Cycle";
    case Verdict::DepthLimit: return "DepthLimit";
    case Verdict::Expanded: return "Expanded";
  }
  return "?";
}

std::string to_string(Summary s) {
  switch (s) {
    case Summary::Resolved: return "Resolved";
    case Summary::CounterexampleCycle: return "CounterexampleCycle";
    case Summary::Inconclusive: return "Inconclusive";
  }
  return "?";
}

std::string to_string(CycleScope s) {
  return s == CycleScope::AncestorsOnly ? "ancestors" : "all";
}

}  // namespace nashlab
