#pragma once

#include <map>
#include <vector>

#include "cohft/linalg.hpp"
#include "cohft/rational_function.hpp"

namespace cohft {

// Partition with weakly decreasing positive parts.
using Partition = std::vector<int>;

// |Aut(mu)| * prod mu_i, the Nakajima normalization factor.
Rational zFactor(const Partition& mu);

// Partitions of m, largest-first lexicographic (fixed basis order).
const std::vector<Partition>& partitionsOf(int m);

// Exact linear combination of Nakajima basis vectors of a fixed size.
using FockVector = std::map<Partition, RationalFunction>;

// <mu | nu> = (-1)^{|mu|-l(mu)} / ((t1 t2)^{l(mu)} z(mu)) delta_{mu,nu}.
RationalFunction fockInner(const Partition& mu, const Partition& nu);

// Matrix of quantum multiplication by the divisor D = -|2,1^{m-2}> on the
// Nakajima basis of F_m (columns indexed by the fixed partition order).
struct MDMatrix {
  int m = 0;
  std::vector<Partition> basis;
  Mat<RationalFunctionRing> mat;  // mat(row, col): coefficient of basis[row] in M|basis[col]>
};
MDMatrix mdMatrix(int m);

// M_D applied to a single normalized basis vector.
FockVector mdApply(int m, const Partition& mu);

// sum_d <mu1, D, mu2>_{0,3,d} q^d = <mu1| M_D |mu2> as a rational function.
RationalFunction threePointSeries(int m, const Partition& mu1, const Partition& mu2);

// Discriminant of the characteristic polynomial of M_D; nonzero witnesses
// pairwise-distinct eigenvalues, hence semisimplicity at generic parameters.
RationalFunction semisimplicityWitness(int m);

// Taylor coefficients in q through `order`, each free of q. Throws when the
// denominator vanishes at q = 0.
std::vector<RationalFunction> qSeriesExpansion(const RationalFunction& f, int order);

}  // namespace cohft
