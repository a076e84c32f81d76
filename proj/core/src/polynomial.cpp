#include "ternac/polynomial.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace ternac {

namespace {

Monomial padded(Monomial m, std::size_t n) {
  m.resize(std::max(m.size(), n), 0);
  return m;
}

bool divides(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Monomial quotient(const Monomial& b, const Monomial& a) {
  Monomial q(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) q[i] = b[i] - a[i];
  return q;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial l(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) l[i] = std::max(a[i], b[i]);
  return l;
}

bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) return false;
  return true;
}

// Full reduction of p modulo the set g.
Polynomial reduce(Polynomial p, const std::vector<Polynomial>& g) {
  Polynomial rest;
  while (!p.is_zero()) {
    const Monomial lm = p.leading_monomial();
    const Scalar lc = p.leading_coefficient();
    bool divided = false;
    for (const auto& h : g) {
      if (h.is_zero() || !divides(h.leading_monomial(), lm)) continue;
      p -= Polynomial::monomial(quotient(lm, h.leading_monomial()), lc / h.leading_coefficient()) * h;
      divided = true;
      break;
    }
    if (!divided) {
      Polynomial lt = Polynomial::monomial(lm, lc);
      rest += lt;
      p -= lt;
    }
  }
  return rest;
}

Polynomial s_polynomial(const Polynomial& a, const Polynomial& b) {
  const Monomial l = lcm(a.leading_monomial(), b.leading_monomial());
  return Polynomial::monomial(quotient(l, a.leading_monomial()), a.leading_coefficient().inverse()) * a -
         Polynomial::monomial(quotient(l, b.leading_monomial()), b.leading_coefficient().inverse()) * b;
}

// ---- univariate helpers over Z ------------------------------------------

using IntPoly = std::vector<mpz_class>;  // coefficient of x^k at index k

void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Integer primitive multiple of a rational polynomial.
IntPoly integral(const std::vector<mpq_class>& q) {
  mpz_class den = 1;
  for (const auto& c : q) den = lcm(den, mpz_class(c.get_den()));
  IntPoly out;
  mpz_class g = 0;
  for (const auto& c : q) {
    mpq_class scaled = c * den;
    out.push_back(scaled.get_num());
    g = gcd(g, scaled.get_num());
  }
  if (g != 0)
    for (auto& c : out) c /= g;
  trim(out);
  return out;
}

std::vector<mpz_class> positive_divisors(mpz_class n) {
  n = abs(n);
  std::vector<mpz_class> small, large;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d * d != n) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

// Exact division over Q; returns false if there is a remainder.
bool divide_exact(IntPoly& p, const IntPoly& d) {
  std::vector<mpq_class> r(p.begin(), p.end());
  std::vector<mpq_class> q(p.size() >= d.size() ? p.size() - d.size() + 1 : 0);
  for (std::size_t k = q.size(); k-- > 0;) {
    mpq_class c = r[k + d.size() - 1] / mpq_class(d.back());
    q[k] = c;
    for (std::size_t j = 0; j < d.size(); ++j) r[k + j] -= c * d[j];
  }
  for (const auto& c : r)
    if (c != 0) return false;
  p = integral(q);
  return true;
}

mpq_class eval(const IntPoly& p, const mpq_class& x) {
  mpq_class acc = 0;
  for (std::size_t k = p.size(); k-- > 0;) acc = acc * x + p[k];
  return acc;
}

// Rational and Gaussian roots of an integer polynomial (candidates only).
std::vector<Scalar> candidate_roots(IntPoly p, bool gaussian) {
  std::vector<Scalar> out;
  trim(p);
  if (p.size() <= 1) return out;
  if (p[0] == 0) {
    out.emplace_back(0);
    std::size_t k = 0;
    while (p[k] == 0) ++k;
    p.erase(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(k));
  }
  bool found = true;
  while (found && p.size() > 1) {
    found = false;
    for (const auto& a : positive_divisors(p.front())) {
      for (const auto& b : positive_divisors(p.back())) {
        for (int sign : {1, -1}) {
          mpq_class x(sign * a, b);
          x.canonicalize();
          if (eval(p, x) != 0) continue;
          out.emplace_back(x);
          divide_exact(p, IntPoly{-x.get_num(), x.get_den()});
          found = true;
          break;
        }
        if (found) break;
      }
      if (found) break;
    }
  }
  if (!gaussian) return out;
  // Remaining Gaussian roots r come in conjugate pairs; c(x - r)(x - r̄) =
  // c x^2 - s x + t is a primitive integer factor with c | lead, t | tail.
  found = true;
  while (found && p.size() > 2) {
    found = false;
    for (const auto& c : positive_divisors(p.back())) {
      for (const auto& t : positive_divisors(p.front())) {
        mpz_class bound = sqrt(mpz_class(4 * c * t)) + 1;
        for (mpz_class s = -bound; s <= bound && !found; ++s) {
          mpz_class disc = 4 * c * t - s * s;
          if (disc <= 0 || !mpz_perfect_square_p(disc.get_mpz_t())) continue;
          IntPoly quad{t, -s, c};
          IntPoly trial = p;
          if (!divide_exact(trial, quad)) continue;
          mpq_class re(s, 2 * c), im(sqrt(disc), 2 * c);
          re.canonicalize();
          im.canonicalize();
          out.emplace_back(re, im);
          out.emplace_back(re, -im);
          p = trial;
          found = true;
        }
        if (found) break;
      }
      if (found) break;
    }
  }
  return out;
}

bool scalar_less(const Scalar& a, const Scalar& b) { return compare(a, b) < 0; }

std::vector<std::vector<Scalar>> solve_rec(const std::vector<Polynomial>& polys, std::size_t k, Field field) {
  std::vector<Polynomial> g = groebner_basis(polys);
  for (const auto& p : g)
    if (p.is_constant()) return {};
  if (k == 0) return {{}};
  const std::size_t var = k - 1;
  const Polynomial* uni = nullptr;
  for (const auto& p : g)
    if (p.is_univariate_in(var)) uni = &p;
  if (uni == nullptr) throw PositiveDimensional("solution set is not finite");
  std::vector<std::vector<Scalar>> out;
  for (const auto& r : univariate_roots(*uni, var, field)) {
    std::vector<Polynomial> sub;
    for (const auto& p : g) sub.push_back(p.substitute(var, r));
    for (auto& rest : solve_rec(sub, var, field)) {
      rest.push_back(r);
      out.push_back(std::move(rest));
    }
  }
  return out;
}

}  // namespace

Polynomial::Polynomial(const Scalar& c) {
  if (!c.is_zero()) terms_.emplace(Monomial{}, c);
}

Polynomial Polynomial::variable(std::size_t index, std::size_t nvars) {
  Monomial m(std::max(nvars, index + 1), 0);
  m[index] = 1;
  return monomial(std::move(m), Scalar(1));
}

Polynomial Polynomial::monomial(Monomial m, Scalar c) {
  Polynomial p;
  p.nvars_ = m.size();
  if (!c.is_zero()) p.terms_.emplace(std::move(m), std::move(c));
  return p;
}

Polynomial Polynomial::widened(std::size_t nvars) const {
  if (nvars <= nvars_) return *this;
  Polynomial p;
  p.nvars_ = nvars;
  for (const auto& [m, c] : terms_) p.terms_.emplace(padded(m, nvars), c);
  return p;
}

bool Polynomial::is_constant() const {
  if (terms_.empty()) return false;
  if (terms_.size() > 1) return false;
  const Monomial& m = terms_.begin()->first;
  return std::all_of(m.begin(), m.end(), [](unsigned e) { return e == 0; });
}

int Polynomial::highest_variable() const {
  int hi = -1;
  for (const auto& [m, c] : terms_)
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i] != 0) hi = std::max(hi, static_cast<int>(i));
  return hi;
}

bool Polynomial::is_univariate_in(std::size_t index) const {
  if (is_zero()) return false;
  bool uses = false;
  for (const auto& [m, c] : terms_) {
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (i != index) return false;
      uses = true;
    }
  }
  return uses;
}

const Monomial& Polynomial::leading_monomial() const {
  if (terms_.empty()) throw std::logic_error("zero polynomial has no leading term");
  return terms_.begin()->first;
}

const Scalar& Polynomial::leading_coefficient() const {
  if (terms_.empty()) throw std::logic_error("zero polynomial has no leading term");
  return terms_.begin()->second;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return *this * Polynomial(leading_coefficient().inverse());
}

Polynomial Polynomial::substitute(std::size_t index, const Scalar& value) const {
  Polynomial out;
  out.nvars_ = nvars_;
  for (const auto& [m, c] : terms_) {
    Scalar coeff = c;
    Monomial rest = m;
    if (index < m.size()) {
      for (unsigned e = 0; e < m[index]; ++e) coeff *= value;
      rest[index] = 0;
    }
    out.add_term(rest, coeff);
  }
  return out;
}

Scalar Polynomial::evaluate(const std::vector<Scalar>& point) const {
  Scalar acc;
  for (const auto& [m, c] : terms_) {
    Scalar term = c;
    for (std::size_t i = 0; i < m.size(); ++i)
      for (unsigned e = 0; e < m[i]; ++e) term *= point.at(i);
    acc += term;
  }
  return acc;
}

Polynomial Polynomial::conj() const {
  Polynomial out = *this;
  for (auto& [m, c] : out.terms_) c = c.conj();
  return out;
}

void Polynomial::add_term(const Monomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  const std::size_t n = std::max(nvars_, o.nvars_);
  if (n > nvars_) *this = widened(n);
  for (const auto& [m, c] : o.terms_) add_term(padded(m, n), c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) { return *this += -o; }

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  const std::size_t n = std::max(nvars_, o.nvars_);
  Polynomial out;
  out.nvars_ = n;
  for (const auto& [a, x] : terms_) {
    const Monomial pa = padded(a, n);
    for (const auto& [b, y] : o.terms_) {
      Monomial m = pa;
      const Monomial pb = padded(b, n);
      for (std::size_t i = 0; i < n; ++i) m[i] += pb[i];
      out.add_term(m, x * y);
    }
  }
  *this = std::move(out);
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

std::string Polynomial::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::string mono;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += i < names.size() ? names[i] : "x" + std::to_string(i + 1);
      if (m[i] > 1) mono += "^" + std::to_string(m[i]);
    }
    const bool negative = c.is_real() && sgn(c.real()) < 0;
    const Scalar mag = negative ? -c : c;
    if (first) os << (negative ? "-" : "");
    else os << (negative ? " - " : " + ");
    first = false;
    const std::string coeff = mag.is_real() ? mag.str() : "(" + mag.str() + ")";
    if (mono.empty()) os << coeff;
    else if (mag.is_one()) os << mono;
    else os << coeff << "*" << mono;
  }
  return os.str();
}

std::vector<Polynomial> groebner_basis(std::vector<Polynomial> polys) {
  std::size_t n = 0;
  for (const auto& p : polys) n = std::max(n, p.nvars());
  std::vector<Polynomial> g;
  for (auto& p : polys)
    if (!p.is_zero()) g.push_back(p.widened(n).monic());
  std::set<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 0; j < g.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) pairs.emplace(i, j);
  while (!pairs.empty()) {
    auto [i, j] = *pairs.begin();
    pairs.erase(pairs.begin());
    if (coprime(g[i].leading_monomial(), g[j].leading_monomial())) continue;
    Polynomial r = reduce(s_polynomial(g[i], g[j]), g);
    if (r.is_zero()) continue;
    g.push_back(r.monic());
    if (g.back().is_constant()) return {Polynomial(1).widened(n)};
    for (std::size_t k = 0; k + 1 < g.size(); ++k) pairs.emplace(k, g.size() - 1);
  }
  // Minimal basis, then interreduce.
  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j || !divides(g[j].leading_monomial(), g[i].leading_monomial())) continue;
      redundant = g[j].leading_monomial() != g[i].leading_monomial() || j < i;
    }
    if (!redundant) minimal.push_back(g[i]);
  }
  std::vector<Polynomial> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    const Polynomial lt = Polynomial::monomial(minimal[i].leading_monomial(), Scalar(1));
    reduced.push_back(lt + reduce(minimal[i] - lt, others));
  }
  std::sort(reduced.begin(), reduced.end(), [](const Polynomial& a, const Polynomial& b) {
    return a.leading_monomial() > b.leading_monomial();
  });
  return reduced;
}

std::vector<Scalar> univariate_roots(const Polynomial& p, std::size_t index, Field field) {
  if (p.is_zero()) throw std::invalid_argument("every scalar is a root of the zero polynomial");
  if (!p.is_univariate_in(index) && !p.is_constant()) throw std::invalid_argument("polynomial is not univariate");
  const Polynomial q = p * p.conj();  // real coefficients, same roots
  std::vector<mpq_class> coeffs;
  for (const auto& [m, c] : q.terms()) {
    const unsigned e = index < m.size() ? m[index] : 0;
    if (coeffs.size() <= e) coeffs.resize(e + 1, 0);
    coeffs[e] = c.real();
  }
  std::vector<Scalar> out;
  for (const auto& r : candidate_roots(integral(coeffs), field == Field::Gaussian)) {
    std::vector<Scalar> point(std::max<std::size_t>(p.nvars(), index + 1));
    point[index] = r;
    if (r.belongs_to(field) && p.evaluate(point).is_zero()) out.push_back(r);
  }
  std::sort(out.begin(), out.end(), scalar_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::vector<Scalar>> solve_system(const std::vector<Polynomial>& polys, std::size_t nvars, Field field) {
  std::vector<Polynomial> widened;
  for (const auto& p : polys) widened.push_back(p.widened(nvars));
  auto out = solve_rec(widened, nvars, field);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), scalar_less);
  });
  return out;
}

}  // namespace ternac
