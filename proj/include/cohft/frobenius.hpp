#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "cohft/linalg.hpp"
#include "cohft/rational.hpp"

namespace cohft {

// Frobenius data (V, eta, 1) with the 3-point tensor of the quantum product.
// All coefficients rational; theories over larger rings keep their topological
// part here and put the ring dependence in the R-matrix.
class FrobeniusData {
 public:
  FrobeniusData(RatMat eta, std::vector<Rational> threePoint, int unitIndex);

  int dim() const { return eta_.rows; }
  int unitIndex() const { return unit_; }
  const RatMat& eta() const { return eta_; }
  const RatMat& etaInverse() const { return etaInv_; }
  const Rational& threePoint(int i, int j, int k) const {
    return tp_[(i * dim() + j) * dim() + k];
  }

  // Checks: eta symmetric, threePoint totally symmetric, unit axiom
  // Omega_{0,3}(v1,v2,1) = eta(v1,v2), associativity of the product.
  // Called from the constructor; throws ValidationError on failure.
  void validate() const;

  std::vector<Rational> quantumProduct(const std::vector<Rational>& u,
                                       const std::vector<Rational>& v) const;
  std::vector<Rational> unitVector() const;
  // Handle element sum_{j,k} eta^{jk} e_j * e_k.
  const std::vector<Rational>& handle() const { return handle_; }

  // eta(w, 1)
  Rational counit(const std::vector<Rational>& w) const;

  // Genus-g TQFT gluing value on basis insertions (memoized, symmetric).
  Rational topologicalCorrelator(int g, const std::vector<int>& indices) const;

 private:
  RatMat eta_;
  RatMat etaInv_;
  std::vector<Rational> tp_;
  int unit_;
  // product structure constants: C[a][b] = coordinates of e_a * e_b
  std::vector<Rational> structure_;
  std::vector<Rational> handle_;

  struct Cache {
    std::map<std::pair<int, std::vector<int>>, Rational> topo;
    std::mutex mu;
  };
  std::shared_ptr<Cache> cache_;
};

}  // namespace cohft
