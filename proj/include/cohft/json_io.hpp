#pragma once

#include <json.hpp>

#include "cohft/frobenius.hpp"
#include "cohft/rational_function.hpp"
#include "cohft/reconstruction.hpp"
#include "cohft/rmatrix.hpp"
#include "cohft/stable_graph.hpp"
#include "cohft/trunc_series.hpp"

namespace cohft {

using Json = nlohmann::ordered_json;

Json toJson(const Rational& r);
Rational rationalFromJson(const Json& j);

// {"exponent": "p/q", ...}, zero coefficients omitted, ascending exponents.
Json toJson(const TruncSeries& s);

// {"t1^a t2^b q^c": "p/q", ...} in the canonical monomial order.
Json toJson(const Polynomial& p);
Polynomial polynomialFromJson(const Json& j);

// {"num": {...}, "den": {...}}
Json toJson(const RationalFunction& f);
RationalFunction rationalFunctionFromJson(const Json& j);

// {"vertices": [...], "edges": [[a,b],...], "legs": [...], "aut": n}
Json toJson(const GraphIsoClass& g);
GraphIsoClass graphFromJson(const Json& j);

// {"dim": d, "eta": [[...]], "threePoint": {"i,j,k": "p/q"}, "unit": u}
Json toJson(const FrobeniusData& f);
FrobeniusData frobeniusFromJson(const Json& j);

// {"order": N, "R": [[[...]] per power]}
Json toJson(const RMatrix<RationalRing>& r);
RMatrix<RationalRing> rmatrixFromJson(const Json& j);

// {"genus": g, "insertions": [{"vector": ["p/q",...], "psi": a}, ...]}
struct ReconstructRequest {
  int genus = 0;
  std::vector<Insertion> insertions;
};
ReconstructRequest requestFromJson(const Json& j);
Json toJson(const ReconstructRequest& r);

}  // namespace cohft
