#include "cohft/json_io.hpp"

namespace cohft {

Json toJson(const Rational& r) { return r.str(); }

Rational rationalFromJson(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) throw ValidationError("expected rational string");
  return Rational::parse(j.get<std::string>());
}

Json toJson(const TruncSeries& s) {
  Json out = Json::object();
  for (int k = 0; k <= s.order(); ++k)
    if (!s.coeff(k).isZero()) out[std::to_string(k)] = s.coeff(k).str();
  return out;
}

Json toJson(const Polynomial& p) {
  Json out = Json::object();
  for (const auto& t : p.terms()) out[t.m.str()] = t.c.str();
  return out;
}

Polynomial polynomialFromJson(const Json& j) {
  if (!j.is_object()) throw ValidationError("expected polynomial object");
  Polynomial out;
  for (auto it = j.begin(); it != j.end(); ++it)
    out += Polynomial::term(Mono::parse(it.key()), rationalFromJson(it.value()));
  return out;
}

Json toJson(const RationalFunction& f) {
  Json out = Json::object();
  out["num"] = toJson(f.num());
  out["den"] = toJson(f.den());
  return out;
}

RationalFunction rationalFunctionFromJson(const Json& j) {
  return RationalFunction(polynomialFromJson(j.at("num")), polynomialFromJson(j.at("den")));
}

Json toJson(const GraphIsoClass& g) {
  Json out = Json::object();
  out["vertices"] = g.graph.genus;
  Json edges = Json::array();
  for (const auto& e : g.graph.edges) edges.push_back(Json::array({e.first, e.second}));
  out["edges"] = std::move(edges);
  out["legs"] = g.graph.legs;
  out["aut"] = g.aut;
  return out;
}

GraphIsoClass graphFromJson(const Json& j) {
  GraphIsoClass out;
  out.graph.genus = j.at("vertices").get<std::vector<int>>();
  for (const auto& e : j.at("edges"))
    out.graph.edges.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
  out.graph.sortEdges();
  out.graph.legs = j.at("legs").get<std::vector<int>>();
  if (j.contains("aut"))
    out.aut = j.at("aut").get<std::uint64_t>();
  else
    out.aut = out.graph.automorphismCount();
  return out;
}

Json toJson(const FrobeniusData& f) {
  Json out = Json::object();
  out["dim"] = f.dim();
  Json eta = Json::array();
  for (int i = 0; i < f.dim(); ++i) {
    Json row = Json::array();
    for (int j2 = 0; j2 < f.dim(); ++j2) row.push_back(f.eta()(i, j2).str());
    eta.push_back(std::move(row));
  }
  out["eta"] = std::move(eta);
  Json tp = Json::object();
  for (int i = 0; i < f.dim(); ++i)
    for (int j2 = 0; j2 < f.dim(); ++j2)
      for (int k = 0; k < f.dim(); ++k) {
        const Rational& v = f.threePoint(i, j2, k);
        if (!v.isZero())
          tp[std::to_string(i) + "," + std::to_string(j2) + "," + std::to_string(k)] = v.str();
      }
  out["threePoint"] = std::move(tp);
  out["unit"] = f.unitIndex();
  return out;
}

FrobeniusData frobeniusFromJson(const Json& j) {
  int d = j.at("dim").get<int>();
  if (d <= 0) throw ValidationError("dim must be positive");
  RationalRing ring;
  RatMat eta(ring, d, d);
  const Json& etaJ = j.at("eta");
  for (int i = 0; i < d; ++i)
    for (int k = 0; k < d; ++k) eta(i, k) = rationalFromJson(etaJ.at(i).at(k));
  std::vector<Rational> tp(d * d * d, Rational(0));
  for (auto it = j.at("threePoint").begin(); it != j.at("threePoint").end(); ++it) {
    int a, b, c;
    if (std::sscanf(it.key().c_str(), "%d,%d,%d", &a, &b, &c) != 3)
      throw ValidationError("bad threePoint key: " + it.key());
    if (a < 0 || a >= d || b < 0 || b >= d || c < 0 || c >= d)
      throw ValidationError("threePoint index out of range");
    tp[(a * d + b) * d + c] = rationalFromJson(it.value());
  }
  return FrobeniusData(std::move(eta), std::move(tp), j.at("unit").get<int>());
}

Json toJson(const RMatrix<RationalRing>& r) {
  Json out = Json::object();
  out["order"] = r.order();
  Json mats = Json::array();
  for (const auto& m : r.coeff) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows; ++i) {
      Json row = Json::array();
      for (int j2 = 0; j2 < m.cols; ++j2) row.push_back(m(i, j2).str());
      rows.push_back(std::move(row));
    }
    mats.push_back(std::move(rows));
  }
  out["R"] = std::move(mats);
  return out;
}

RMatrix<RationalRing> rmatrixFromJson(const Json& j) {
  int order = j.at("order").get<int>();
  const Json& mats = j.at("R");
  if (static_cast<int>(mats.size()) != order + 1)
    throw ValidationError("R-matrix list must have order+1 entries");
  RationalRing ring;
  RMatrix<RationalRing> out;
  for (const auto& mj : mats) {
    int rows = static_cast<int>(mj.size());
    Mat<RationalRing> m(ring, rows, rows);
    for (int i = 0; i < rows; ++i)
      for (int k = 0; k < rows; ++k) m(i, k) = rationalFromJson(mj.at(i).at(k));
    out.coeff.push_back(std::move(m));
  }
  return out;
}

ReconstructRequest requestFromJson(const Json& j) {
  ReconstructRequest out;
  out.genus = j.at("genus").get<int>();
  for (const auto& ij : j.at("insertions")) {
    Insertion ins;
    for (const auto& c : ij.at("vector")) ins.vec.push_back(rationalFromJson(c));
    ins.psi = ij.value("psi", 0);
    out.insertions.push_back(std::move(ins));
  }
  return out;
}

Json toJson(const ReconstructRequest& r) {
  Json out = Json::object();
  out["genus"] = r.genus;
  Json ins = Json::array();
  for (const auto& i : r.insertions) {
    Json one = Json::object();
    Json vec = Json::array();
    for (const auto& c : i.vec) vec.push_back(c.str());
    one["vector"] = std::move(vec);
    one["psi"] = i.psi;
    ins.push_back(std::move(one));
  }
  out["insertions"] = std::move(ins);
  return out;
}

}  // namespace cohft
