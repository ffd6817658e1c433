#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "cohft/errors.hpp"

namespace cohft {

// Dual graph of a stable curve: vertex genera, an edge multiset (self-loops
// allowed, stored as [v,v]), and one vertex index per labeled marking.
struct StableGraph {
  std::vector<int> genus;                  // per vertex
  std::vector<std::pair<int, int>> edges;  // unordered pairs, kept sorted
  std::vector<int> legs;                   // legs[i] = vertex of marking i+1

  int numVertices() const { return static_cast<int>(genus.size()); }
  int numEdges() const { return static_cast<int>(edges.size()); }
  int numLegs() const { return static_cast<int>(legs.size()); }

  int firstBetti() const { return numEdges() - numVertices() + 1; }
  int totalGenus() const;
  // Half-edges plus legs at v.
  int valence(int v) const;
  bool isConnected() const;
  // Stability 2g(v) - 2 + n(v) > 0 at every vertex, connected, genera >= 0.
  bool isValid(int g, int n) const;

  void sortEdges();

  // Relabel vertices so the encoding is minimal over all genus-preserving,
  // leg-respecting permutations. Deterministic.
  StableGraph canonical() const;
  // Encoding used for ordering/equality of canonical forms.
  std::vector<int> encode() const;

  // |Aut|: vertex symmetries x parallel-edge swaps x self-loop half-edge swaps.
  std::uint64_t automorphismCount() const;

  friend bool operator==(const StableGraph& a, const StableGraph& b) {
    return a.genus == b.genus && a.edges == b.edges && a.legs == b.legs;
  }
  friend bool operator<(const StableGraph& a, const StableGraph& b) {
    return a.encode() < b.encode();
  }
};

struct GraphIsoClass {
  StableGraph graph;  // canonical representative
  std::uint64_t aut = 1;
};

// All stable graphs of genus g with n labeled legs, up to isomorphism,
// sorted by canonical encoding. Throws UnstablePair when 2g-2+n <= 0.
std::vector<GraphIsoClass> enumerateStableGraphs(int g, int n);

// Subset where every vertex has even valence (half-edges plus legs).
std::vector<GraphIsoClass> evenSubset(const std::vector<GraphIsoClass>& graphs);

// Test oracle: brute-force enumeration over labeled multigraphs. Exponential;
// intended for tiny (g, n) only.
std::vector<GraphIsoClass> enumerateStableGraphsBruteForce(int g, int n);

// Test oracle: |Aut| by explicit search over half-edge permutations.
std::uint64_t automorphismCountBruteForce(const StableGraph& gr);

}  // namespace cohft
