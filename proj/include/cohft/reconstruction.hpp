#pragma once

#include <algorithm>
#include <atomic>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <thread>
#include <vector>

#include "cohft/frobenius.hpp"
#include "cohft/psi_correlators.hpp"
#include "cohft/rmatrix.hpp"
#include "cohft/stable_graph.hpp"

namespace cohft {

// Marking insertion: a vector in V with a requested psi power at the marking.
struct Insertion {
  std::vector<Rational> vec;
  int psi = 0;
};

// A semisimple theory presented for reconstruction: topological part as
// Frobenius data plus an R-matrix truncated at the order the caller needs
// (3g-3+n covers every request at that size).
template <typename Ring>
class Theory {
 public:
  using Elem = typename Ring::Elem;

  Theory(Ring ring, FrobeniusData frob, RMatrix<Ring> rmat)
      : ring_(ring), frob_(std::move(frob)), r_(std::move(rmat)) {
    int d = frob_.dim();
    if (r_.dim() != d) throw ValidationError("R-matrix dimension mismatch");
    eta_ = embedMat(frob_.eta());
    etaInv_ = embedMat(frob_.etaInverse());
    if (!isSymplectic(ring_, r_, eta_, etaInv_))
      throw NonSymplectic("R(z) R*(-z) != Id through order " + std::to_string(r_.order()));
    kernel_ = edgeKernel(ring_, r_, etaInv_);
    t_ = unitTranslation(ring_, r_, frob_.unitIndex());
  }

  const Ring& ring() const { return ring_; }
  const FrobeniusData& frobenius() const { return frob_; }
  const RMatrix<Ring>& rmatrix() const { return r_; }
  const EdgeKernel<Ring>& kernel() const { return kernel_; }
  int dim() const { return frob_.dim(); }
  int order() const { return r_.order(); }
  // T_k component vector (empty when k out of range or below 2).
  const std::vector<Elem>* tCoeff(int k) const {
    if (k < 2 || k >= static_cast<int>(t_.size()) || t_[k].empty()) return nullptr;
    return &t_[k];
  }

  // Integrated vertex contribution: sum over translation insertions of
  //   1/m! * omega_{g,n+m}(incoming, T-components) * psi/kappa integral,
  // for incoming (basis index, psi power) pairs. Memoized.
  Elem vertexIntegral(int gv, std::vector<std::pair<int, int>> inc) {
    std::sort(inc.begin(), inc.end());
    std::vector<int> key;
    key.reserve(2 * inc.size() + 1);
    key.push_back(gv);
    for (auto& [b, p] : inc) {
      key.push_back(b);
      key.push_back(p);
    }
    {
      std::lock_guard<std::mutex> lock(vertexMu_);
      auto it = vertexCache_.find(key);
      if (it != vertexCache_.end()) return it->second;
    }
    Elem value = vertexIntegralUncached(gv, inc);
    std::lock_guard<std::mutex> lock(vertexMu_);
    vertexCache_.emplace(std::move(key), value);
    return value;
  }

 private:
  Mat<Ring> embedMat(const RatMat& m) const {
    Mat<Ring> out(ring_, m.rows, m.cols);
    for (int i = 0; i < m.rows; ++i)
      for (int j = 0; j < m.cols; ++j) out(i, j) = ring_.embed(m(i, j));
    return out;
  }

  Elem vertexIntegralUncached(int gv, const std::vector<std::pair<int, int>>& inc) {
    int nv = static_cast<int>(inc.size());
    int dim = 3 * gv - 3 + nv;
    std::vector<int> powers;
    std::vector<int> indices;
    powers.reserve(nv);
    indices.reserve(nv);
    int sumP = 0;
    for (auto& [b, p] : inc) {
      indices.push_back(b);
      powers.push_back(p);
      sumP += p;
    }
    int budget = dim - sumP;
    if (budget < 0) return ring_.zero();

    Elem total = ring_.zero();
    std::vector<int> exps;  // nonincreasing T exponents, each >= 2
    enumerateTranslations(gv, indices, powers, budget, exps, total);
    return total;
  }

  // Recursively build exponent multisets with sum(e_j - 1) == budget.
  void enumerateTranslations(int gv, const std::vector<int>& indices,
                             const std::vector<int>& powers, int budget,
                             std::vector<int>& exps, Elem& total) {
    if (budget == 0) {
      accumulateTranslationTerm(gv, indices, powers, exps, total);
      return;
    }
    int maxE = budget + 1;
    if (!exps.empty()) maxE = std::min(maxE, exps.back());
    for (int e = 2; e <= maxE; ++e) {
      exps.push_back(e);
      enumerateTranslations(gv, indices, powers, budget - (e - 1), exps, total);
      exps.pop_back();
    }
  }

  void accumulateTranslationTerm(int gv, const std::vector<int>& indices,
                                 const std::vector<int>& powers,
                                 const std::vector<int>& exps, Elem& total) {
    // All T components must exist.
    std::vector<const std::vector<Elem>*> tvecs;
    tvecs.reserve(exps.size());
    for (int e : exps) {
      const auto* tv = tCoeff(e);
      if (!tv) return;
      tvecs.push_back(tv);
    }
    Rational base = kappaPolyIntegral(gv, powers, pushforwardCached(exps));
    if (base.isZero()) return;
    // 1 / prod(multiplicities!)
    Rational sym(1);
    for (std::size_t i = 0; i < exps.size();) {
      std::size_t j = i;
      while (j < exps.size() && exps[j] == exps[i]) ++j;
      sym /= Rational::factorial(j - i);
      i = j;
    }
    Elem factor = ring_.embed(base * sym);

    // Sum over basis components of the T insertions.
    std::vector<int> full = indices;
    sumTComponents(gv, full, tvecs, 0, factor, total);
  }

  void sumTComponents(int gv, std::vector<int>& indices,
                      const std::vector<const std::vector<Elem>*>& tvecs, std::size_t j,
                      const Elem& coef, Elem& total) {
    if (j == tvecs.size()) {
      Rational omega = frob_.topologicalCorrelator(gv, indices);
      if (!omega.isZero()) total += coef * ring_.embed(omega);
      return;
    }
    const auto& tv = *tvecs[j];
    for (int b = 0; b < dim(); ++b) {
      if (ring_.isZero(tv[b])) continue;
      indices.push_back(b);
      Elem next = coef * tv[b];
      sumTComponents(gv, indices, tvecs, j + 1, next, total);
      indices.pop_back();
    }
  }

  const KappaPolynomial& pushforwardCached(const std::vector<int>& exps) {
    std::lock_guard<std::mutex> lock(pfMu_);
    auto it = pfCache_.find(exps);
    if (it == pfCache_.end())
      it = pfCache_.emplace(exps, forgetfulPushforward(exps)).first;
    return it->second;
  }

  Ring ring_;
  FrobeniusData frob_;
  RMatrix<Ring> r_;
  Mat<Ring> eta_, etaInv_;
  EdgeKernel<Ring> kernel_;
  std::vector<std::vector<Elem>> t_;

  std::map<std::vector<int>, Elem> vertexCache_;
  std::mutex vertexMu_;
  std::map<std::vector<int>, KappaPolynomial> pfCache_;
  std::mutex pfMu_;
};

namespace detail {

// One (basis index, psi power) choice with its ring coefficient.
template <typename Elem>
struct LabeledOption {
  int basis;
  int power;
  Elem coeff;
};

// Evaluates the decorated-graph sum for a single stable graph by sequential
// vertex absorption: a frontier maps labelings of open half-edges to partial
// sums, so parallel edges and loops stay polynomial in the options instead of
// exponential in the edge count.
template <typename Ring>
typename Ring::Elem evaluateGraph(Theory<Ring>& th, const StableGraph& gr,
                                  const std::vector<std::vector<LabeledOption<typename Ring::Elem>>>& legOptions) {
  using Elem = typename Ring::Elem;
  const Ring& ring = th.ring();
  int nv = gr.numVertices();
  int d = th.dim();
  int kmax = th.order();

  // Per-vertex dimension budgets.
  std::vector<int> dimBudget(nv);
  for (int v = 0; v < nv; ++v)
    dimBudget[v] = 3 * gr.genus[v] - 3 + gr.valence(v);

  // Incidence tables.
  std::vector<std::vector<int>> legsAt(nv);
  for (int i = 0; i < gr.numLegs(); ++i) legsAt[gr.legs[i]].push_back(i);
  std::vector<int> loopsAt(nv, 0);
  // cross edges: id -> (a, b) with a < b
  std::vector<std::pair<int, int>> cross;
  for (const auto& e : gr.edges) {
    if (e.first == e.second)
      ++loopsAt[e.first];
    else
      cross.push_back(e);
  }

  // Frontier keyed by labels of open cross-edge slots, in cross-id order.
  struct Frontier {
    std::map<std::vector<int>, Elem> states;
  };
  Frontier cur;
  cur.states.emplace(std::vector<int>{}, ring.one());
  std::vector<int> openIds;  // cross-edge ids with exactly one endpoint processed

  const auto& kernel = th.kernel();
  auto deltaAt = [&](int k, int l, int mu, int nu) -> const Elem& {
    return kernel.at(k, l)(mu, nu);
  };

  for (int v = 0; v < nv; ++v) {
    // Slots to close (other endpoint already processed) and to open.
    std::vector<int> closePos;   // positions in openIds
    std::vector<int> openNew;    // cross ids opened by v
    for (std::size_t id = 0; id < cross.size(); ++id) {
      bool meFirst = cross[id].first == v, meSecond = cross[id].second == v;
      if (!meFirst && !meSecond) continue;
      int other = meFirst ? cross[id].second : cross[id].first;
      if (other < v) {
        auto it = std::find(openIds.begin(), openIds.end(), static_cast<int>(id));
        closePos.push_back(static_cast<int>(it - openIds.begin()));
      } else {
        openNew.push_back(static_cast<int>(id));
      }
    }

    Frontier next;
    for (const auto& [key, acc] : cur.states) {
      // Choice stack: legs, loops, closing slots, then opening slots.
      struct Item {
        int kind;  // 0 = leg, 1 = loop, 2 = close, 3 = open
        int ref;
      };
      std::vector<Item> items;
      for (int leg : legsAt[v]) items.push_back({0, leg});
      for (int i = 0; i < loopsAt[v]; ++i) items.push_back({1, i});
      for (int pos : closePos) items.push_back({2, pos});
      for (int id : openNew) items.push_back({3, id});

      std::vector<std::pair<int, int>> inc;       // (basis, power) at v
      std::vector<int> newLabels(2 * openNew.size(), 0);
      auto rec = [&](auto&& self, std::size_t idx, int used, const Elem& coef) -> void {
        if (used > dimBudget[v]) return;
        if (idx == items.size()) {
          Elem vi = th.vertexIntegral(gr.genus[v], inc);
          if (ring.isZero(vi)) return;
          Elem contrib = acc * coef * vi;
          // Assemble the next frontier key.
          std::vector<int> nk;
          nk.reserve(2 * (openIds.size() - closePos.size() + openNew.size()));
          for (std::size_t s = 0; s < openIds.size(); ++s) {
            if (std::find(closePos.begin(), closePos.end(), static_cast<int>(s)) !=
                closePos.end())
              continue;
            nk.push_back(key[2 * s]);
            nk.push_back(key[2 * s + 1]);
          }
          nk.insert(nk.end(), newLabels.begin(), newLabels.end());
          auto [it, fresh] = next.states.emplace(std::move(nk), contrib);
          if (!fresh) it->second += contrib;
          return;
        }
        const Item& item = items[idx];
        if (item.kind == 0) {
          for (const auto& opt : legOptions[item.ref]) {
            if (opt.power > dimBudget[v] - used) continue;
            inc.push_back({opt.basis, opt.power});
            self(self, idx + 1, used + opt.power, coef * opt.coeff);
            inc.pop_back();
          }
        } else if (item.kind == 1) {
          // Self-loop: both half-edge labels at v.
          for (int k = 0; k + 1 <= kmax; ++k)
            for (int l = 0; k + l <= kmax - 1; ++l) {
              if (k + l > dimBudget[v] - used) continue;
              for (int mu = 0; mu < d; ++mu)
                for (int nu = 0; nu < d; ++nu) {
                  const Elem& dl = deltaAt(k, l, mu, nu);
                  if (ring.isZero(dl)) continue;
                  inc.push_back({mu, k});
                  inc.push_back({nu, l});
                  self(self, idx + 1, used + k + l, coef * dl);
                  inc.pop_back();
                  inc.pop_back();
                }
            }
        } else if (item.kind == 2) {
          int mu = key[2 * item.ref];
          int k = key[2 * item.ref + 1];
          for (int l = 0; k + l <= kmax - 1; ++l) {
            if (l > dimBudget[v] - used) continue;
            for (int nu = 0; nu < d; ++nu) {
              const Elem& dl = deltaAt(k, l, mu, nu);
              if (ring.isZero(dl)) continue;
              inc.push_back({nu, l});
              self(self, idx + 1, used + l, coef * dl);
              inc.pop_back();
            }
          }
        } else {
          // Open a slot: pick this side's label, coefficient applied on close.
          int slot = 0;
          for (std::size_t s = 0; s < static_cast<std::size_t>(items.size()); ++s) {
            if (items[s].kind == 3 && s < idx) ++slot;
            if (s == idx) break;
          }
          for (int k = 0; k + 1 <= kmax; ++k) {
            if (k > dimBudget[v] - used) continue;
            for (int mu = 0; mu < d; ++mu) {
              inc.push_back({mu, k});
              newLabels[2 * slot] = mu;
              newLabels[2 * slot + 1] = k;
              self(self, idx + 1, used + k, coef);
              inc.pop_back();
            }
          }
        }
      };
      rec(rec, 0, 0, ring.one());
    }

    // Update open slot bookkeeping.
    std::vector<int> nextOpen;
    for (std::size_t s = 0; s < openIds.size(); ++s)
      if (std::find(closePos.begin(), closePos.end(), static_cast<int>(s)) == closePos.end())
        nextOpen.push_back(openIds[s]);
    nextOpen.insert(nextOpen.end(), openNew.begin(), openNew.end());
    openIds = std::move(nextOpen);
    cur = std::move(next);
    if (cur.states.empty()) return ring.zero();
  }

  Elem out = ring.zero();
  for (const auto& [key, val] : cur.states) out += val;
  return out;
}

}  // namespace detail

// Full stable-graph sum for the reconstructed correlator
//   int_{Mbar_{g,n}} (R.(T omega))(v_1 psi^{a_1}, ..., v_n psi^{a_n}).
// `graphs` overrides the enumeration when non-null (provenance audits).
template <typename Ring>
typename Ring::Elem reconstructCorrelator(Theory<Ring>& th, int g,
                                          const std::vector<Insertion>& insertions,
                                          const std::vector<GraphIsoClass>* graphs = nullptr,
                                          int jobs = 1) {
  using Elem = typename Ring::Elem;
  const Ring& ring = th.ring();
  int n = static_cast<int>(insertions.size());
  if (2 * g - 2 + n <= 0) throw UnstablePair(g, n);
  for (const auto& ins : insertions) {
    if (static_cast<int>(ins.vec.size()) != th.dim())
      throw ValidationError("insertion vector has wrong dimension");
    if (ins.psi < 0) throw ValidationError("negative psi exponent");
  }

  const std::vector<GraphIsoClass>& gs = graphs ? *graphs : enumerateStableGraphs(g, n);

  // Leg options: coefficient of basis b at power a_i + k is (R_k v_i)_b.
  std::vector<std::vector<detail::LabeledOption<Elem>>> legOptions(n);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k <= th.order(); ++k) {
      const Mat<Ring>& rk = th.rmatrix().coeff[k];
      for (int b = 0; b < th.dim(); ++b) {
        Elem c = ring.zero();
        for (int col = 0; col < th.dim(); ++col) {
          if (insertions[i].vec[col].isZero()) continue;
          c += rk(b, col) * ring.embed(insertions[i].vec[col]);
        }
        if (!ring.isZero(c))
          legOptions[i].push_back({b, insertions[i].psi + k, std::move(c)});
      }
    }
  }

  std::vector<Elem> perGraph(gs.size(), ring.zero());
  std::atomic<std::size_t> cursor{0};
  auto worker = [&] {
    while (true) {
      std::size_t i = cursor.fetch_add(1);
      if (i >= gs.size()) break;
      Elem val = detail::evaluateGraph(th, gs[i].graph, legOptions);
      if (!ring.isZero(val))
        val = val * ring.embed(Rational(1, static_cast<long>(gs[i].aut)));
      perGraph[i] = std::move(val);
    }
  };
  int workers = std::max(1, jobs);
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < workers; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  Elem total = ring.zero();
  for (const auto& val : perGraph) total += val;
  return total;
}

}  // namespace cohft
