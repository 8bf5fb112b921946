#include "densitylab/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace densitylab {

namespace {

// Dense rational polynomial used internally for Sturm chains.
using RatPoly = std::vector<Rational>;

void trim(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

RatPoly rat_derivative(const RatPoly& p) {
  RatPoly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Rational(i));
  trim(d);
  return d;
}

Rational rat_eval(const RatPoly& p, const Rational& x) {
  Rational acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

// Remainder of a by b, b nonzero.
RatPoly rat_rem(RatPoly a, const RatPoly& b) {
  trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    Rational factor = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= factor * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

RatPoly rat_gcd(RatPoly a, RatPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    RatPoly r = rat_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    Rational lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

RatPoly rat_divide_exact(const RatPoly& a, const RatPoly& b) {
  RatPoly rem = a;
  trim(rem);
  RatPoly q(rem.size() >= b.size() ? rem.size() - b.size() + 1 : 0, Rational(0));
  while (rem.size() >= b.size() && !rem.empty()) {
    Rational factor = rem.back() / b.back();
    std::size_t shift = rem.size() - b.size();
    q[shift] = factor;
    for (std::size_t i = 0; i < b.size(); ++i) rem[i + shift] -= factor * b[i];
    rem.pop_back();
    trim(rem);
  }
  return q;
}

struct SturmChain {
  std::vector<RatPoly> seq;  // squarefree part first

  int variations(const Rational& x) const {
    int count = 0, prev = 0;
    for (const auto& p : seq) {
      Rational v = rat_eval(p, x);
      int s = v == 0 ? 0 : (v > 0 ? 1 : -1);
      if (s != 0) {
        if (prev != 0 && s != prev) ++count;
        prev = s;
      }
    }
    return count;
  }

  int count(const Rational& a, const Rational& b) const {
    return variations(a) - variations(b);
  }
};

RatPoly to_rat(const IntPolynomial& p) {
  RatPoly r;
  for (const auto& c : p.coefficients()) r.push_back(Rational(c));
  return r;
}

RatPoly squarefree_part(const RatPoly& p) {
  RatPoly d = rat_derivative(p);
  if (d.empty()) return p;  // degree 0
  RatPoly g = rat_gcd(p, d);
  if (g.size() <= 1) return p;
  return rat_divide_exact(p, g);
}

SturmChain build_sturm(const RatPoly& squarefree) {
  SturmChain chain;
  chain.seq.push_back(squarefree);
  RatPoly d = rat_derivative(squarefree);
  if (d.empty()) return chain;
  chain.seq.push_back(d);
  while (true) {
    const RatPoly& a = chain.seq[chain.seq.size() - 2];
    const RatPoly& b = chain.seq.back();
    RatPoly r = rat_rem(a, b);
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    chain.seq.push_back(std::move(r));
  }
  return chain;
}

// Cauchy bound: all real roots lie in (-B, B).
Rational cauchy_bound(const RatPoly& p) {
  Rational best = 0;
  for (std::size_t i = 0; i + 1 < p.size(); ++i)
    best = rat_max(best, rat_abs(p[i] / p.back()));
  return best + 1;
}

}  // namespace

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::from_ints(std::initializer_list<long long> coeffs) {
  std::vector<BigInt> v;
  for (long long c : coeffs) v.emplace_back(c);
  return IntPolynomial(std::move(v));
}

Rational IntPolynomial::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * x + Rational(*it);
  return acc;
}

int IntPolynomial::sign_at(const Rational& x) const {
  Rational v = eval(x);
  return v == 0 ? 0 : (v > 0 ? 1 : -1);
}

IntPolynomial IntPolynomial::derivative() const {
  std::vector<BigInt> d;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d.push_back(coeffs_[i] * i);
  return IntPolynomial(std::move(d));
}

std::string IntPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string s;
  for (int i = degree(); i >= 0; --i) {
    const BigInt& c = coeffs_[i];
    if (c == 0) continue;
    if (!s.empty()) s += c > 0 ? " + " : " - ";
    else if (c < 0) s += "-";
    BigInt a = boost::multiprecision::abs(c);
    if (a != 1 || i == 0) s += a.str();
    if (i > 0) s += i == 1 ? "x" : "x^" + std::to_string(i);
  }
  return s;
}

int count_roots(const IntPolynomial& p, const Rational& a, const Rational& b) {
  if (p.is_zero()) throw std::invalid_argument("count_roots: zero polynomial");
  SturmChain chain = build_sturm(squarefree_part(to_rat(p)));
  return chain.count(a, b);
}

std::vector<RootBracket> isolate_roots(const IntPolynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("isolate_roots: zero polynomial");
  if (p.degree() == 0) return {};

  RatPoly sf = squarefree_part(to_rat(p));
  SturmChain chain = build_sturm(sf);

  // Integer polynomial with the same roots, for the bracket contract.
  BigInt lcm = 1;
  for (const auto& c : sf) lcm = boost::multiprecision::lcm(lcm, den(c));
  std::vector<BigInt> sf_int;
  for (const auto& c : sf) sf_int.push_back(num(c) * (lcm / den(c)));
  IntPolynomial sf_poly(std::move(sf_int));

  // Picks a subdivision point in (lo, hi) that is not a root.
  auto split_point = [&](const Rational& lo, const Rational& hi) {
    Rational mid = (lo + hi) / 2;
    int k = 3;
    while (rat_eval(sf, mid) == 0) {
      mid = lo + (hi - lo) / k;
      k += 2;
    }
    return mid;
  };

  std::vector<RootBracket> out;
  Rational bound = cauchy_bound(sf);
  struct Range { Rational lo, hi; int roots; };
  std::vector<Range> stack;
  {
    Rational lo = -bound, hi = bound;
    int n = chain.count(lo, hi);
    if (n > 0) stack.push_back({lo, hi, n});
  }
  while (!stack.empty()) {
    Range r = stack.back();
    stack.pop_back();
    if (r.roots == 1 && rat_eval(sf, r.lo) != 0 && rat_eval(sf, r.hi) != 0 &&
        rat_eval(sf, r.lo) * rat_eval(sf, r.hi) < 0) {
      out.push_back({r.lo, r.hi, sf_poly});
      continue;
    }
    Rational mid = split_point(r.lo, r.hi);
    int left = chain.count(r.lo, mid);
    int right = r.roots - left;
    if (right > 0) stack.push_back({mid, r.hi, right});
    if (left > 0) stack.push_back({r.lo, mid, left});
  }
  std::sort(out.begin(), out.end(),
            [](const RootBracket& a, const RootBracket& b) { return a.low < b.low; });
  return out;
}

Rational refine_root(const RootBracket& bracket, const Rational& tol) {
  if (tol <= 0) throw std::invalid_argument("refine_root: tol must be positive");
  Rational lo = bracket.low, hi = bracket.high;
  const IntPolynomial& p = bracket.polynomial;
  if (p.degree() == 1) {
    Rational root = Rational(-p.coefficients()[0]) / Rational(p.coefficients()[1]);
    if (lo <= root && root <= hi) return root;
  }
  int slo = p.sign_at(lo);
  if (slo == 0) return lo;
  if (p.sign_at(hi) == 0) return hi;
  while (hi - lo > tol) {
    Rational mid = (lo + hi) / 2;
    int sm = p.sign_at(mid);
    if (sm == 0) return mid;
    if (sm == slo) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return (lo + hi) / 2;
}

}  // namespace densitylab
