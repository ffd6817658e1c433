#include "cohft/stable_graph.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>

namespace cohft {

int StableGraph::totalGenus() const {
  int s = 0;
  for (int gv : genus) s += gv;
  return s + firstBetti();
}

int StableGraph::valence(int v) const {
  int val = 0;
  for (const auto& e : edges) {
    if (e.first == v) ++val;
    if (e.second == v) ++val;
  }
  for (int lv : legs)
    if (lv == v) ++val;
  return val;
}

bool StableGraph::isConnected() const {
  int nv = numVertices();
  if (nv == 0) return false;
  std::vector<int> seen(nv, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (const auto& e : edges) {
      int other = -1;
      if (e.first == v) other = e.second;
      else if (e.second == v) other = e.first;
      if (other >= 0 && !seen[other]) {
        seen[other] = 1;
        stack.push_back(other);
      }
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](int s) { return s == 1; });
}

bool StableGraph::isValid(int g, int n) const {
  if (numLegs() != n) return false;
  for (int gv : genus)
    if (gv < 0) return false;
  for (const auto& e : edges)
    if (e.first < 0 || e.first >= numVertices() || e.second < 0 || e.second >= numVertices())
      return false;
  for (int lv : legs)
    if (lv < 0 || lv >= numVertices()) return false;
  if (!isConnected()) return false;
  if (totalGenus() != g) return false;
  for (int v = 0; v < numVertices(); ++v)
    if (2 * genus[v] - 2 + valence(v) <= 0) return false;
  return true;
}

void StableGraph::sortEdges() {
  for (auto& e : edges)
    if (e.first > e.second) std::swap(e.first, e.second);
  std::sort(edges.begin(), edges.end());
}

std::vector<int> StableGraph::encode() const {
  std::vector<int> out;
  out.reserve(3 + genus.size() + legs.size() + 2 * edges.size());
  out.push_back(numVertices());
  out.push_back(numEdges());
  out.push_back(numLegs());
  out.insert(out.end(), genus.begin(), genus.end());
  out.insert(out.end(), legs.begin(), legs.end());
  for (const auto& e : edges) {
    out.push_back(e.first);
    out.push_back(e.second);
  }
  return out;
}

namespace {

StableGraph relabel(const StableGraph& gr, const std::vector<int>& perm) {
  // perm[old] = new
  StableGraph out;
  out.genus.resize(gr.genus.size());
  for (int v = 0; v < gr.numVertices(); ++v) out.genus[perm[v]] = gr.genus[v];
  out.legs.reserve(gr.legs.size());
  for (int lv : gr.legs) out.legs.push_back(perm[lv]);
  out.edges.reserve(gr.edges.size());
  for (const auto& e : gr.edges) out.edges.push_back({perm[e.first], perm[e.second]});
  out.sortEdges();
  return out;
}

// Vertex classes under iterated invariant refinement; only permutations within
// a class can take part in an isomorphism.
std::vector<int> refineClasses(const StableGraph& gr) {
  int nv = gr.numVertices();
  std::vector<std::vector<int>> legsAt(nv);
  for (int i = 0; i < gr.numLegs(); ++i) legsAt[gr.legs[i]].push_back(i);
  std::vector<int> cls(nv, 0);
  {
    std::vector<std::pair<std::vector<int>, int>> sig(nv);
    for (int v = 0; v < nv; ++v) {
      std::vector<int> s{gr.genus[v], gr.valence(v)};
      s.insert(s.end(), legsAt[v].begin(), legsAt[v].end());
      sig[v] = {s, v};
    }
    std::vector<std::vector<int>> keys(nv);
    for (int v = 0; v < nv; ++v) keys[v] = sig[v].first;
    std::vector<std::vector<int>> sorted = keys;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (int v = 0; v < nv; ++v)
      cls[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), keys[v]) -
                                sorted.begin());
  }
  // 1-WL style refinement by multiset of neighbor classes (loops counted twice).
  for (int round = 0; round < nv; ++round) {
    std::vector<std::vector<int>> keys(nv);
    for (int v = 0; v < nv; ++v) keys[v].push_back(cls[v]);
    for (const auto& e : gr.edges) {
      keys[e.first].push_back(cls[e.second]);
      keys[e.second].push_back(cls[e.first]);
    }
    for (int v = 0; v < nv; ++v) std::sort(keys[v].begin() + 1, keys[v].end());
    std::vector<std::vector<int>> sorted = keys;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> next(nv);
    for (int v = 0; v < nv; ++v)
      next[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), keys[v]) -
                                 sorted.begin());
    if (next == cls) break;
    cls = next;
  }
  return cls;
}

// Visits every vertex permutation compatible with the class partition.
template <typename F>
void forEachClassPermutation(const std::vector<int>& cls, F&& visit) {
  int nv = static_cast<int>(cls.size());
  std::vector<std::vector<int>> members(
      *std::max_element(cls.begin(), cls.end()) + 1);
  for (int v = 0; v < nv; ++v) members[cls[v]].push_back(v);

  // New indices are assigned blockwise: class c occupies a contiguous range.
  std::vector<int> base(members.size(), 0);
  int acc = 0;
  for (std::size_t c = 0; c < members.size(); ++c) {
    base[c] = acc;
    acc += static_cast<int>(members[c].size());
  }
  std::vector<std::vector<int>> orders;
  for (auto& m : members) {
    std::sort(m.begin(), m.end());
    orders.push_back(m);
  }
  std::vector<int> perm(nv);
  // Iterate the product of per-class permutations.
  std::vector<std::vector<int>> cur = orders;
  while (true) {
    for (std::size_t c = 0; c < cur.size(); ++c)
      for (std::size_t i = 0; i < cur[c].size(); ++i)
        perm[cur[c][i]] = base[c] + static_cast<int>(i);
    visit(perm);
    std::size_t c = 0;
    while (c < cur.size() && !std::next_permutation(cur[c].begin(), cur[c].end())) ++c;
    if (c == cur.size()) break;
  }
}

}  // namespace

StableGraph StableGraph::canonical() const {
  std::vector<int> cls = refineClasses(*this);
  bool have = false;
  StableGraph best;
  std::vector<int> bestEnc;
  forEachClassPermutation(cls, [&](const std::vector<int>& perm) {
    StableGraph cand = relabel(*this, perm);
    std::vector<int> enc = cand.encode();
    if (!have || enc < bestEnc) {
      have = true;
      best = std::move(cand);
      bestEnc = std::move(enc);
    }
  });
  return best;
}

std::uint64_t StableGraph::automorphismCount() const {
  StableGraph sorted = *this;
  sorted.sortEdges();
  std::vector<int> cls = refineClasses(sorted);
  std::vector<int> enc = sorted.encode();
  std::uint64_t vertexAuts = 0;
  forEachClassPermutation(cls, [&](const std::vector<int>& perm) {
    if (relabel(sorted, perm).encode() == enc) ++vertexAuts;
  });

  std::uint64_t half = 1;
  std::map<std::pair<int, int>, int> mult;
  std::vector<int> loops(numVertices(), 0);
  for (auto e : sorted.edges) {
    if (e.first == e.second)
      ++loops[e.first];
    else
      ++mult[e];
  }
  auto fact = [](int k) {
    std::uint64_t f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
  };
  for (const auto& [pair, m] : mult) half *= fact(m);
  for (int v = 0; v < numVertices(); ++v)
    half *= fact(loops[v]) << loops[v];
  return vertexAuts * half;
}

namespace {

void addUnique(std::set<std::vector<int>>& seen, std::vector<GraphIsoClass>& out,
               const StableGraph& gr) {
  StableGraph canon = gr.canonical();
  auto enc = canon.encode();
  if (seen.insert(enc).second) {
    GraphIsoClass cls;
    cls.aut = canon.automorphismCount();
    cls.graph = std::move(canon);
    out.push_back(std::move(cls));
  }
}

// All one-edge degenerations of gr: genus drop with a new self-loop, or a
// vertex split with the incident structure distributed over the two halves.
void degenerations(const StableGraph& gr, std::set<std::vector<int>>& seen,
                   std::vector<GraphIsoClass>& out) {
  int nv = gr.numVertices();
  for (int v = 0; v < nv; ++v) {
    if (gr.genus[v] >= 1) {
      StableGraph next = gr;
      next.genus[v] -= 1;
      next.edges.push_back({v, v});
      next.sortEdges();
      addUnique(seen, out, next);
    }

    // Split v into v (kept index) and a new vertex w.
    std::vector<int> legIdx;
    for (int i = 0; i < gr.numLegs(); ++i)
      if (gr.legs[i] == v) legIdx.push_back(i);
    std::map<int, int> neighborMult;
    int loopCount = 0;
    std::vector<std::pair<int, int>> otherEdges;
    for (const auto& e : gr.edges) {
      if (e.first == v && e.second == v)
        ++loopCount;
      else if (e.first == v)
        ++neighborMult[e.second];
      else if (e.second == v)
        ++neighborMult[e.first];
      else
        otherEdges.push_back(e);
    }
    std::vector<int> neighbors;
    for (auto& [w, m] : neighborMult) neighbors.push_back(w);

    int gv = gr.genus[v];
    int w = nv;  // new vertex index
    for (int g1 = 0; g1 <= gv; ++g1) {
      int g2 = gv - g1;
      for (std::uint32_t legMask = 0; legMask < (1u << legIdx.size()); ++legMask) {
        // Per-neighbor counts staying at v.
        std::vector<int> keep(neighbors.size(), 0);
        while (true) {
          for (int l1 = 0; l1 <= loopCount; ++l1)
            for (int l2 = 0; l1 + l2 <= loopCount; ++l2) {
              int l3 = loopCount - l1 - l2;  // loops that become v-w edges
              StableGraph next;
              next.genus = gr.genus;
              next.genus[v] = g1;
              next.genus.push_back(g2);
              next.legs = gr.legs;
              for (std::size_t i = 0; i < legIdx.size(); ++i)
                next.legs[legIdx[i]] = (legMask >> i) & 1 ? w : v;
              next.edges = otherEdges;
              for (std::size_t i = 0; i < neighbors.size(); ++i) {
                for (int k = 0; k < keep[i]; ++k) next.edges.push_back({v, neighbors[i]});
                for (int k = keep[i]; k < neighborMult[neighbors[i]]; ++k)
                  next.edges.push_back({w, neighbors[i]});
              }
              for (int k = 0; k < l1; ++k) next.edges.push_back({v, v});
              for (int k = 0; k < l2; ++k) next.edges.push_back({w, w});
              for (int k = 0; k < l3; ++k) next.edges.push_back({v, w});
              next.edges.push_back({v, w});
              next.sortEdges();
              if (2 * next.genus[v] - 2 + next.valence(v) <= 0) continue;
              if (2 * next.genus[w] - 2 + next.valence(w) <= 0) continue;
              addUnique(seen, out, next);
            }
          // Advance the per-neighbor keep counters.
          std::size_t i = 0;
          while (i < keep.size()) {
            if (keep[i] < neighborMult[neighbors[i]]) {
              ++keep[i];
              break;
            }
            keep[i] = 0;
            ++i;
          }
          if (i == keep.size()) break;
        }
      }
    }
  }
}

}  // namespace

std::vector<GraphIsoClass> enumerateStableGraphs(int g, int n) {
  if (2 * g - 2 + n <= 0) throw UnstablePair(g, n);

  static std::map<std::pair<int, int>, std::vector<GraphIsoClass>> cache;
  static std::mutex mu;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({g, n});
    if (it != cache.end()) return it->second;
  }

  std::vector<GraphIsoClass> all;
  std::set<std::vector<int>> seen;
  StableGraph smooth;
  smooth.genus = {g};
  smooth.legs.assign(n, 0);
  addUnique(seen, all, smooth);

  std::size_t frontierBegin = 0;
  int maxEdges = 3 * g - 3 + n;
  for (int e = 1; e <= maxEdges; ++e) {
    std::size_t frontierEnd = all.size();
    for (std::size_t i = frontierBegin; i < frontierEnd; ++i) {
      StableGraph gr = all[i].graph;  // copy: `all` may reallocate
      degenerations(gr, seen, all);
    }
    frontierBegin = frontierEnd;
  }
  std::sort(all.begin(), all.end(), [](const GraphIsoClass& a, const GraphIsoClass& b) {
    return a.graph.encode() < b.graph.encode();
  });

  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(std::make_pair(g, n), std::move(all)).first->second;
}

std::vector<GraphIsoClass> evenSubset(const std::vector<GraphIsoClass>& graphs) {
  std::vector<GraphIsoClass> out;
  for (const auto& cls : graphs) {
    bool even = true;
    for (int v = 0; v < cls.graph.numVertices() && even; ++v)
      even = cls.graph.valence(v) % 2 == 0;
    if (even) out.push_back(cls);
  }
  return out;
}

std::vector<GraphIsoClass> enumerateStableGraphsBruteForce(int g, int n) {
  if (2 * g - 2 + n <= 0) throw UnstablePair(g, n);
  std::vector<GraphIsoClass> out;
  std::set<std::vector<int>> seen;

  int maxV = 2 * g - 2 + n;
  for (int nv = 1; nv <= maxV; ++nv) {
    // Genus assignments summing to at most g.
    std::vector<int> genus(nv, 0);
    while (true) {
      int sum = std::accumulate(genus.begin(), genus.end(), 0);
      if (sum <= g) {
        int edges = (g - sum) + nv - 1;
        if (edges >= 0 && edges <= 3 * g - 3 + n) {
          // Multisets of `edges` slots from all unordered pairs.
          std::vector<std::pair<int, int>> slots;
          for (int a = 0; a < nv; ++a)
            for (int b = a; b < nv; ++b) slots.push_back({a, b});
          std::vector<int> pick(edges, 0);
          while (true) {
            bool nondecreasing = true;
            for (int i = 1; i < edges; ++i)
              if (pick[i] < pick[i - 1]) nondecreasing = false;
            if (nondecreasing) {
              std::vector<int> legs(n, 0);
              while (true) {
                StableGraph gr;
                gr.genus = genus;
                gr.legs = legs;
                for (int i = 0; i < edges; ++i) gr.edges.push_back(slots[pick[i]]);
                gr.sortEdges();
                if (gr.isValid(g, n)) addUnique(seen, out, gr);
                int j = 0;
                while (j < n) {
                  if (legs[j] < nv - 1) {
                    ++legs[j];
                    break;
                  }
                  legs[j] = 0;
                  ++j;
                }
                if (j == n) break;
              }
            }
            int j = 0;
            while (j < edges) {
              if (pick[j] < static_cast<int>(slots.size()) - 1) {
                ++pick[j];
                break;
              }
              pick[j] = 0;
              ++j;
            }
            if (j == edges || edges == 0) break;
          }
        }
      }
      int j = 0;
      while (j < nv) {
        if (genus[j] < g) {
          ++genus[j];
          break;
        }
        genus[j] = 0;
        ++j;
      }
      if (j == nv) break;
    }
  }
  std::sort(out.begin(), out.end(), [](const GraphIsoClass& a, const GraphIsoClass& b) {
    return a.graph.encode() < b.graph.encode();
  });
  return out;
}

std::uint64_t automorphismCountBruteForce(const StableGraph& gr) {
  // Half-edge formalism: edge i owns half-edges 2i (at first) and 2i+1.
  int he = 2 * gr.numEdges();
  std::vector<int> vertexOf(he);
  for (int i = 0; i < gr.numEdges(); ++i) {
    vertexOf[2 * i] = gr.edges[i].first;
    vertexOf[2 * i + 1] = gr.edges[i].second;
  }
  auto mate = [](int h) { return h ^ 1; };

  int nv = gr.numVertices();
  std::vector<int> vperm(nv);
  std::iota(vperm.begin(), vperm.end(), 0);
  std::uint64_t count = 0;
  do {
    bool ok = true;
    for (int v = 0; v < nv && ok; ++v) ok = gr.genus[vperm[v]] == gr.genus[v];
    for (int lv : gr.legs)
      if (ok) ok = vperm[lv] == lv;
    if (!ok) continue;

    std::vector<int> hperm(he);
    std::iota(hperm.begin(), hperm.end(), 0);
    do {
      bool good = true;
      for (int h = 0; h < he && good; ++h) {
        if (hperm[mate(h)] != mate(hperm[h])) good = false;
        else if (vertexOf[hperm[h]] != vperm[vertexOf[h]]) good = false;
      }
      if (good) ++count;
    } while (std::next_permutation(hperm.begin(), hperm.end()));
  } while (std::next_permutation(vperm.begin(), vperm.end()));
  return count;
}

}  // namespace cohft
