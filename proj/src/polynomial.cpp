#include "cohft/polynomial.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace cohft {

const char* Mono::varName(int i) {
  static const char* names[3] = {"t1", "t2", "q"};
  return names[i];
}

std::string Mono::str() const {
  std::string out;
  for (int i = 0; i < 3; ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += ' ';
    out += varName(i);
    out += '^';
    out += std::to_string(e[i]);
  }
  return out.empty() ? "1" : out;
}

Mono Mono::parse(const std::string& s) {
  Mono m;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) {
    if (tok == "1") continue;
    std::string name = tok;
    int exp = 1;
    auto caret = tok.find('^');
    if (caret != std::string::npos) {
      name = tok.substr(0, caret);
      exp = std::stoi(tok.substr(caret + 1));
    }
    bool found = false;
    for (int i = 0; i < 3; ++i) {
      if (name == varName(i)) {
        m.e[i] += exp;
        found = true;
        break;
      }
    }
    if (!found) throw ValidationError("unknown variable in monomial: " + name);
  }
  return m;
}

void Polynomial::normalize(std::vector<Term>& t) {
  std::sort(t.begin(), t.end(), [](const Term& a, const Term& b) { return b.m < a.m; });
  std::vector<Term> out;
  out.reserve(t.size());
  for (auto& term : t) {
    if (!out.empty() && out.back().m == term.m)
      out.back().c += term.c;
    else
      out.push_back(term);
    if (!out.empty() && out.back().c.isZero()) out.pop_back();
  }
  t = std::move(out);
}

Polynomial Polynomial::variable(int var, int power) {
  Mono m;
  m.e.at(var) = power;
  return term(m, Rational(1));
}

const Polynomial::Term& Polynomial::leading() const {
  if (terms_.empty()) throw Error("leading term of zero polynomial");
  return terms_.front();
}

int Polynomial::degree(int var) const {
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, t.m.e.at(var));
  return d;
}

int Polynomial::totalDegree() const {
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, t.m.e[0] + t.m.e[1] + t.m.e[2]);
  return d;
}

Rational Polynomial::coeffOf(const Mono& m) const {
  for (const auto& t : terms_)
    if (t.m == m) return t.c;
  return Rational(0);
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.c = -t.c;
  return r;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  // Merge of two sorted term lists.
  Polynomial r;
  r.terms_.reserve(a.terms_.size() + b.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < a.terms_.size() || j < b.terms_.size()) {
    if (j == b.terms_.size() || (i < a.terms_.size() && b.terms_[j].m < a.terms_[i].m)) {
      r.terms_.push_back(a.terms_[i++]);
    } else if (i == a.terms_.size() || a.terms_[i].m < b.terms_[j].m) {
      r.terms_.push_back(b.terms_[j++]);
    } else {
      Rational c = a.terms_[i].c + b.terms_[j].c;
      if (!c.isZero()) r.terms_.push_back({a.terms_[i].m, c});
      ++i;
      ++j;
    }
  }
  return r;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  std::map<Mono, Rational> acc;
  for (const auto& ta : a.terms_)
    for (const auto& tb : b.terms_) {
      Mono m = ta.m * tb.m;
      auto it = acc.find(m);
      if (it == acc.end())
        acc.emplace(m, ta.c * tb.c);
      else
        it->second += ta.c * tb.c;
    }
  Polynomial r;
  r.terms_.reserve(acc.size());
  // map is ascending; we store descending.
  for (auto it = acc.rbegin(); it != acc.rend(); ++it)
    if (!it->second.isZero()) r.terms_.push_back({it->first, it->second});
  return r;
}

Polynomial Polynomial::scaled(const Rational& c) const {
  if (c.isZero()) return Polynomial();
  Polynomial r = *this;
  for (auto& t : r.terms_) t.c *= c;
  return r;
}

bool operator<(const Polynomial& a, const Polynomial& b) {
  std::size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a.terms_[i].m < b.terms_[i].m) return true;
    if (b.terms_[i].m < a.terms_[i].m) return false;
    if (a.terms_[i].c < b.terms_[i].c) return true;
    if (b.terms_[i].c < a.terms_[i].c) return false;
  }
  return a.terms_.size() < b.terms_.size();
}

Rational Polynomial::evaluate(const std::array<Rational, 3>& vals) const {
  Rational out(0);
  for (const auto& t : terms_) {
    Rational v = t.c;
    for (int i = 0; i < 3; ++i)
      for (int k = 0; k < t.m.e[i]; ++k) v *= vals[i];
    out += v;
  }
  return out;
}

Polynomial Polynomial::divExact(const Polynomial& d) const {
  if (d.isZero()) throw DivisionByZero();
  Polynomial rem = *this;
  std::vector<Term> qterms;
  while (!rem.isZero()) {
    const Term& lr = rem.leading();
    const Term& ld = d.leading();
    if (!ld.m.divides(lr.m))
      throw NonDivisible("polynomial division is not exact");
    Term t{lr.m.dividedBy(ld.m), lr.c / ld.c};
    qterms.push_back(t);
    rem = rem - d * Polynomial::term(t.m, t.c);
  }
  normalize(qterms);
  Polynomial q;
  q.terms_ = std::move(qterms);
  return q;
}

Polynomial Polynomial::monic() const {
  if (isZero()) return *this;
  return scaled(leading().c.inverse());
}

std::vector<Polynomial> Polynomial::toUnivariate(int var) const {
  std::vector<Polynomial> coeffs(static_cast<std::size_t>(degree(var)) + 1);
  for (const auto& t : terms_) {
    Mono m = t.m;
    int p = m.e.at(var);
    m.e.at(var) = 0;
    coeffs[p] += term(m, t.c);
  }
  return coeffs;
}

Polynomial Polynomial::fromUnivariate(int var, const std::vector<Polynomial>& coeffs) {
  Polynomial out;
  for (std::size_t p = 0; p < coeffs.size(); ++p) {
    Mono shift;
    shift.e.at(var) = static_cast<int>(p);
    out += coeffs[p] * term(shift, Rational(1));
  }
  return out;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (i) out += " + ";
    out += "(" + terms_[i].c.str() + ")*" + terms_[i].m.str();
  }
  return out;
}

std::size_t Polynomial::hash() const {
  std::size_t h = 1469598103934665603ull;
  auto mix = [&h](std::size_t v) {
    h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  };
  for (const auto& t : terms_) {
    for (int i = 0; i < 3; ++i) mix(static_cast<std::size_t>(t.m.e[i]));
    mix(t.c.hash());
  }
  return h;
}

namespace {

bool tryDivExact(const Polynomial& a, const Polynomial& d, Polynomial* quotient) {
  Polynomial rem = a;
  std::vector<Polynomial::Term> qterms;
  while (!rem.isZero()) {
    const auto& lr = rem.leading();
    const auto& ld = d.leading();
    if (!ld.m.divides(lr.m)) return false;
    Polynomial::Term t{lr.m.dividedBy(ld.m), lr.c / ld.c};
    qterms.push_back(t);
    rem = rem - d * Polynomial::term(t.m, t.c);
  }
  if (quotient) {
    Polynomial::normalize(qterms);
    Polynomial q;
    for (auto& t : qterms) q += Polynomial::term(t.m, t.c);
    *quotient = std::move(q);
  }
  return true;
}

// Scale a rational polynomial to a primitive integer polynomial with a
// positive leading coefficient.
Polynomial integerPrimitive(const Polynomial& a) {
  if (a.isZero()) return a;
  mpz_class den = 1;
  for (const auto& t : a.terms())
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.c.raw().get_den().get_mpz_t());
  mpz_class num = 0;
  for (const auto& t : a.terms()) {
    mpz_class scaled = t.c.raw().get_num() * (den / t.c.raw().get_den());
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), scaled.get_mpz_t());
  }
  Rational scale(mpq_class(den) / mpq_class(num));
  Polynomial p = a.scaled(scale);
  if (p.leading().c.sign() < 0) p = p.scaled(Rational(-1));
  return p;
}

mpz_class maxAbsCoeff(const Polynomial& a) {
  mpz_class m = 0;
  for (const auto& t : a.terms()) {
    mpz_class v = abs(t.c.raw().get_num());
    if (v > m) m = v;
  }
  return m;
}

// Substitute var := xi (a large integer) into an integer polynomial.
Polynomial evalVarAt(const Polynomial& a, int var, const mpz_class& xi) {
  Polynomial out;
  std::vector<Polynomial> coeffs = a.toUnivariate(var);
  mpz_class power = 1;
  for (std::size_t p = 0; p < coeffs.size(); ++p) {
    if (p > 0) power *= xi;
    out += coeffs[p].scaled(Rational(mpq_class(power)));
  }
  return out;
}

// Inverse of evalVarAt on images of integer polynomials: balanced base-xi
// digits become the coefficients of var^i.
Polynomial reconstructFromXi(Polynomial g, int var, const mpz_class& xi) {
  Polynomial out;
  int power = 0;
  mpz_class half = xi / 2;
  while (!g.isZero()) {
    Polynomial digit;
    std::vector<Polynomial::Term> next;
    for (const auto& t : g.terms()) {
      mpz_class c = t.c.raw().get_num();
      mpz_class r;
      mpz_fdiv_r(r.get_mpz_t(), c.get_mpz_t(), xi.get_mpz_t());
      if (r > half) r -= xi;
      if (r != 0) digit += Polynomial::term(t.m, Rational(mpq_class(r)));
      mpz_class rest = (c - r) / xi;
      if (rest != 0) next.push_back({t.m, Rational(mpq_class(rest))});
    }
    if (!digit.isZero()) {
      Mono shift;
      shift.e.at(var) = power;
      out += digit * Polynomial::term(shift, Rational(1));
    }
    Polynomial::normalize(next);
    Polynomial rest;
    for (auto& t : next) rest += Polynomial::term(t.m, t.c);
    g = std::move(rest);
    ++power;
    if (power > 512) throw Error("gcd reconstruction runaway");
  }
  return out;
}

mpz_class integerContent(const Polynomial& a) {
  mpz_class g = 0;
  for (const auto& t : a.terms())
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.raw().get_num().get_mpz_t());
  return g;
}

Polynomial prsGcd(const Polynomial& a, const Polynomial& b);

// Heuristic gcd on integer polynomials: evaluate at a large integer,
// recurse with one fewer variable, reconstruct from balanced digits, and
// certify by exact division. Falls back to the primitive PRS on failure.
Polynomial heuristicGcd(const Polynomial& a, const Polynomial& b) {
  if (a.isConstant() && b.isConstant()) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), integerContent(a).get_mpz_t(), integerContent(b).get_mpz_t());
    return Polynomial(Rational(mpq_class(g)));
  }
  int var = -1;
  for (int v = 2; v >= 0; --v)
    if (a.degree(v) > 0 && b.degree(v) > 0) {
      var = v;
      break;
    }
  if (var < 0) {
    // No shared variable: reduce to the content of the one that has it.
    for (int v = 2; v >= 0; --v) {
      if (a.degree(v) > 0) {
        Polynomial g = b;
        for (const auto& c : a.toUnivariate(v)) {
          if (c.isZero()) continue;
          g = heuristicGcd(c, g);
          if (g.isConstant()) break;
        }
        return g;
      }
      if (b.degree(v) > 0) return heuristicGcd(b, a);
    }
    return Polynomial(Rational(1));
  }

  mpz_class bound = maxAbsCoeff(a);
  if (maxAbsCoeff(b) > bound) bound = maxAbsCoeff(b);
  mpz_class xi = 2 * bound + 29;
  for (int attempt = 0; attempt < 6; ++attempt) {
    Polynomial ea = evalVarAt(a, var, xi);
    Polynomial eb = evalVarAt(b, var, xi);
    if (!ea.isZero() && !eb.isZero()) {
      Polynomial g = heuristicGcd(ea, eb);
      if (!g.isZero()) {
        Polynomial cand = reconstructFromXi(g, var, xi);
        if (!cand.isZero()) {
          cand = integerPrimitive(cand);
          if (tryDivExact(a, cand, nullptr) && tryDivExact(b, cand, nullptr)) return cand;
        }
      }
    }
    xi = xi * 2 + 1;
  }
  // PRS fallback: gcd = (integer content gcd) * (primitive-part gcd).
  mpz_class ic;
  mpz_gcd(ic.get_mpz_t(), integerContent(a).get_mpz_t(), integerContent(b).get_mpz_t());
  Polynomial g = integerPrimitive(prsGcd(integerPrimitive(a), integerPrimitive(b)));
  return g.scaled(Rational(mpq_class(ic)));
}

// Pseudo-remainder of a by b in the variable `var` (coefficients may pick up
// powers of lc(b); callers take primitive parts afterwards).
std::vector<Polynomial> pseudoRem(std::vector<Polynomial> a, const std::vector<Polynomial>& b) {
  auto deg = [](const std::vector<Polynomial>& p) -> int {
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
      if (!p[i].isZero()) return i;
    return -1;
  };
  int db = deg(b);
  const Polynomial& lb = b[db];
  int da = deg(a);
  while (da >= db && da >= 0) {
    Polynomial la = a[da];
    // a = lb*a - la*x^{da-db}*b
    std::vector<Polynomial> next(da, Polynomial());
    for (int i = 0; i < da; ++i) {
      Polynomial v = a[i] * lb;
      int j = i - (da - db);
      if (j >= 0 && j <= db) v -= la * b[j];
      next[i] = v;
    }
    a = std::move(next);
    da = deg(a);
  }
  a.resize(std::max(da + 1, 0));
  return a;
}

Polynomial contentOf(const std::vector<Polynomial>& coeffs) {
  Polynomial g;
  for (const auto& c : coeffs) {
    if (c.isZero()) continue;
    g = g.isZero() ? c : polyGcd(g, c);
    if (g.isConstant()) break;
  }
  return g.isZero() ? Polynomial() : g.monic();
}

// Primitive PRS gcd; correctness fallback for the heuristic path.
Polynomial prsGcd(const Polynomial& a, const Polynomial& b) {
  if (a.isZero()) return integerPrimitive(b);
  if (b.isZero()) return integerPrimitive(a);
  // Works at the primitive-part level: constants are units here.
  if (a.isConstant() || b.isConstant()) return Polynomial(Rational(1));

  int var = -1;
  for (int v = 2; v >= 0; --v) {
    if (a.degree(v) > 0 || b.degree(v) > 0) {
      var = v;
      break;
    }
  }
  if (a.degree(var) == 0) {
    std::vector<Polynomial> cb = b.toUnivariate(var);
    return integerPrimitive(prsGcd(a, contentOf(cb)));
  }
  if (b.degree(var) == 0) {
    std::vector<Polynomial> ca = a.toUnivariate(var);
    return integerPrimitive(prsGcd(contentOf(ca), b));
  }

  std::vector<Polynomial> ua = a.toUnivariate(var);
  std::vector<Polynomial> ub = b.toUnivariate(var);
  Polynomial ca = contentOf(ua);
  Polynomial cb = contentOf(ub);
  Polynomial cg = prsGcd(ca, cb);
  for (auto& c : ua) c = c.isZero() ? c : c.divExact(ca);
  for (auto& c : ub) c = c.isZero() ? c : c.divExact(cb);

  auto deg = [](const std::vector<Polynomial>& p) -> int {
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
      if (!p[i].isZero()) return i;
    return -1;
  };
  std::vector<Polynomial>*p = &ua, *q = &ub;
  if (deg(*p) < deg(*q)) std::swap(p, q);
  std::vector<Polynomial> P = *p, Q = *q;
  while (deg(Q) >= 0) {
    std::vector<Polynomial> R = pseudoRem(P, Q);
    P = std::move(Q);
    // primitive part
    Polynomial cr = contentOf(R);
    if (!cr.isZero())
      for (auto& c : R) c = c.isZero() ? c : c.divExact(cr);
    Q = std::move(R);
  }
  Polynomial prim = Polynomial::fromUnivariate(var, P);
  return integerPrimitive(prim * cg);
}

}  // namespace

Polynomial polyGcd(const Polynomial& a, const Polynomial& b) {
  if (a.isZero()) return b.monic();
  if (b.isZero()) return a.monic();
  if (a.isConstant() || b.isConstant()) return Polynomial(Rational(1));
  return heuristicGcd(integerPrimitive(a), integerPrimitive(b)).monic();
}

}  // namespace cohft
