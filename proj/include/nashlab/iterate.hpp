#pragma once

// Iterated (normalized) Nash blowups over a tree of charts.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "nashlab/lattice.hpp"
#include "nashlab/semigroup.hpp"

namespace nashlab {

enum class CycleScope { AncestorsOnly, AllVisited };

struct RunConfig {
  Characteristic characteristic;
  bool normalized = false;
  std::size_t max_depth = 25;
  CycleScope cycle_scope = CycleScope::AllVisited;
  std::size_t max_nodes = 2000;
  /// Worker threads for level expansion; results do not depend on it.
  std::size_t jobs = 1;
};

/// Default depth limit: 25 up to rank 3, 10 from rank 4 on.
std::size_t default_max_depth(std::size_t rank);

enum class Verdict { Smooth, Cycle, DepthLimit, Expanded };

struct IterationNode {
  std::size_t id = 0;
  AffineSemigroup semigroup;
  std::optional<std::size_t> parent;
  std::size_t depth = 0;
  /// Exponent of the parent's Nash chart this node came from.
  LatticeVector base_exponent;
  Verdict verdict = Verdict::DepthLimit;
  std::vector<std::size_t> children;
  /// Cycle verdicts: the matched node and the verified certificate.
  std::optional<std::size_t> cycle_target;
  bool cycle_to_ancestor = false;
  std::optional<IsoCertificate> certificate;
  /// Set when the node could not be processed normally, e.g.
  /// "empty-log-jacobian", "node-limit" or "units-not-split".
  std::string annotation;
};

struct IterationTree {
  RunConfig config;
  std::vector<IterationNode> nodes;  // nodes[i].id == i; node 0 is the root
};

/// Breadth-first, level-synchronous iteration of nash_step from `root`.
/// Throws Error if the root is not pointed or not full rank.
IterationTree run(const AffineSemigroup& root, const RunConfig& cfg);

enum class Summary { Resolved, CounterexampleCycle, Inconclusive };

/// Resolved: every branch ends in a smooth chart (a repeated class counts
/// as its first occurrence). CounterexampleCycle: some chart is isomorphic
/// to one of its ancestors, or the links between repeated classes close a
/// loop. Inconclusive otherwise.
Summary verdict_summary(const IterationTree& tree);

/// Re-checks every Cycle certificate against its target.
bool verify_cycles(const IterationTree& tree);

std::string to_string(Verdict v);
std::string to_string(Summary s);
std::string to_string(CycleScope s);

}  // namespace nashlab
