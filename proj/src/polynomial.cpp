#include "bandzeta/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "bandzeta/errors.hpp"

namespace bandzeta {

namespace {

// Rational polynomials, constant term first, used for the internal
// gcd / Sturm machinery.  Kept trimmed.
using RPoly = std::vector<BigRational>;

void trim(RPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const RPoly& p) { return static_cast<int>(p.size()) - 1; }

RPoly to_rpoly(const IntegerPolynomial& p) {
  RPoly out;
  out.reserve(p.coefficients().size());
  for (const BigInt& c : p.coefficients()) out.emplace_back(c);
  return out;
}

BigRational eval(const RPoly& p, const BigRational& t) {
  BigRational acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * t + *it;
  return acc;
}

RPoly rational_derivative(const RPoly& p) {
  RPoly out;
  for (std::size_t k = 1; k < p.size(); ++k)
    out.push_back(p[k] * BigInt(k));
  trim(out);
  return out;
}

// Long division; returns {quotient, remainder}.
std::pair<RPoly, RPoly> divmod(RPoly a, const RPoly& b) {
  RPoly quotient(a.size(), BigRational(0));
  while (degree(a) >= degree(b)) {
    const int shift = degree(a) - degree(b);
    const BigRational factor = a.back() / b.back();
    quotient[shift] = factor;
    for (std::size_t k = 0; k < b.size(); ++k)
      a[shift + k] -= factor * b[k];
    a.pop_back();  // leading term cancelled exactly
    trim(a);
  }
  trim(quotient);
  return {quotient, a};
}

// Synthetic division by (t - root); requires root to be a root.
RPoly deflate(const RPoly& p, const BigRational& root) {
  RPoly out(p.size() - 1, BigRational(0));
  BigRational carry = 0;
  for (int k = degree(p); k >= 1; --k) {
    carry = p[k] + carry * root;
    out[k - 1] = carry;
  }
  if (p[0] + carry * root != 0)
    throw InternalConsistencyError("deflation point is not a root");
  trim(out);
  return out;
}

std::vector<RPoly> sturm_chain(const RPoly& p) {
  std::vector<RPoly> chain{p, rational_derivative(p)};
  while (degree(chain.back()) >= 0) {
    RPoly rem = divmod(chain[chain.size() - 2], chain.back()).second;
    if (rem.empty()) break;
    for (BigRational& c : rem) c = -c;
    chain.push_back(std::move(rem));
  }
  return chain;
}

int sign_of(const BigRational& v) {
  if (v == 0) return 0;
  return v > 0 ? 1 : -1;
}

int sign_changes_at(const std::vector<RPoly>& chain, const BigRational& t) {
  int changes = 0;
  int previous = 0;
  for (const RPoly& p : chain) {
    const int s = sign_of(eval(p, t));
    if (s == 0) continue;
    if (previous != 0 && s != previous) ++changes;
    previous = s;
  }
  return changes;
}

// Number of distinct roots in the open interval (a, b); requires that
// neither endpoint is a root of the chain's first polynomial.
int roots_in_open(const std::vector<RPoly>& chain, const BigRational& a,
                  const BigRational& b) {
  return sign_changes_at(chain, a) - sign_changes_at(chain, b);
}

IntegerPolynomial to_primitive_integer(const RPoly& p) {
  BigInt denominator_lcm = 1;
  for (const BigRational& c : p)
    denominator_lcm = lcm(denominator_lcm, denominator(c));
  std::vector<BigInt> scaled;
  scaled.reserve(p.size());
  BigInt content = 0;
  for (const BigRational& c : p) {
    BigInt v = numerator(c) * (denominator_lcm / denominator(c));
    content = gcd(content, v);
    scaled.push_back(std::move(v));
  }
  if (content == 0) return IntegerPolynomial();
  if (!scaled.empty() && scaled.front() < 0) content = -content;
  for (BigInt& v : scaled) v /= content;
  return IntegerPolynomial(std::move(scaled));
}

}  // namespace

IntegerPolynomial::IntegerPolynomial(std::vector<BigInt> coefficients)
    : coefficients_(std::move(coefficients)) {
  while (!coefficients_.empty() && coefficients_.back() == 0)
    coefficients_.pop_back();
}

IntegerPolynomial IntegerPolynomial::one() {
  return IntegerPolynomial({BigInt(1)});
}

BigInt IntegerPolynomial::coefficient(int k) const {
  if (k < 0 || k >= static_cast<int>(coefficients_.size())) return 0;
  return coefficients_[k];
}

IntegerPolynomial IntegerPolynomial::operator*(
    const IntegerPolynomial& other) const {
  if (is_zero() || other.is_zero()) return IntegerPolynomial();
  std::vector<BigInt> out(coefficients_.size() + other.coefficients_.size() - 1,
                          BigInt(0));
  for (std::size_t i = 0; i < coefficients_.size(); ++i)
    for (std::size_t j = 0; j < other.coefficients_.size(); ++j)
      out[i + j] += coefficients_[i] * other.coefficients_[j];
  return IntegerPolynomial(std::move(out));
}

BigRational IntegerPolynomial::evaluate(const BigRational& t) const {
  BigRational acc = 0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it)
    acc = acc * t + BigRational(*it);
  return acc;
}

double IntegerPolynomial::evaluate(double t) const {
  double acc = 0.0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it)
    acc = acc * t + it->convert_to<double>();
  return acc;
}

IntegerPolynomial IntegerPolynomial::derivative() const {
  std::vector<BigInt> out;
  for (std::size_t k = 1; k < coefficients_.size(); ++k)
    out.push_back(coefficients_[k] * BigInt(k));
  return IntegerPolynomial(std::move(out));
}

std::vector<BigInt> IntegerPolynomial::series_inverse(int terms) const {
  if (coefficient(0) != 1)
    throw PreconditionError("series inverse requires constant term 1");
  std::vector<BigInt> g(std::max(terms, 0), BigInt(0));
  if (terms <= 0) return g;
  g[0] = 1;
  for (int m = 1; m < terms; ++m) {
    BigInt acc = 0;
    const int top = std::min(m, degree());
    for (int k = 1; k <= top; ++k) acc += coefficients_[k] * g[m - k];
    g[m] = -acc;
  }
  return g;
}

std::string IntegerPolynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int k = 0; k <= degree(); ++k) {
    const BigInt& c = coefficients_[k];
    if (c == 0) continue;
    const BigInt magnitude = abs(c);
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (magnitude != 1 || k == 0) out << magnitude.str();
    if (k == 1)
      out << var;
    else if (k > 1)
      out << var << "^" << k;
  }
  return out.str();
}

IntegerPolynomial square_free_part(const IntegerPolynomial& p) {
  if (p.coefficient(0) == 0)
    throw PreconditionError("square_free_part requires a non-zero constant term");
  if (p.degree() <= 0) return IntegerPolynomial::one();

  RPoly a = to_rpoly(p);
  RPoly b = to_rpoly(p.derivative());
  while (!b.empty()) {
    RPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (degree(a) == 0) return to_primitive_integer(to_rpoly(p));

  auto [quotient, remainder] = divmod(to_rpoly(p), a);
  if (!remainder.empty())
    throw InternalConsistencyError("gcd does not divide its polynomial");
  return to_primitive_integer(quotient);
}

SpectralRadiusResult spectral_radius(const IntegerPolynomial& reciprocal) {
  if (reciprocal.coefficient(0) != 1)
    throw PreconditionError("spectral_radius expects constant term 1");
  if (reciprocal.degree() <= 0) return {0.0, 0.0, true};

  const auto exact_result = [](const BigRational& t) {
    const double value = BigRational(1 / t).convert_to<double>();
    return SpectralRadiusResult{value, 1e-15 * value, true};
  };

  RPoly q = to_rpoly(square_free_part(reciprocal));
  const bool root_at_one = (eval(q, 1) == 0);
  if (root_at_one) q = deflate(q, 1);

  std::vector<RPoly> chain = sturm_chain(q);
  if (roots_in_open(chain, 0, 1) == 0) {
    if (root_at_one) return exact_result(1);
    return {0.0, 0.0, true};
  }

  // Smallest root stays inside (lo, hi]; Sturm counts steer the
  // bisection, every sign decided in exact rational arithmetic.
  BigRational lo = 0, hi = 1;
  for (int iteration = 0; iteration < 300; ++iteration) {
    if (lo > 0 && BigRational(1 / lo - 1 / hi) <= BigRational(1, 1000000000000))
      break;
    const BigRational mid = (lo + hi) / 2;
    if (eval(q, mid) == 0) {
      RPoly reduced = deflate(q, mid);
      std::vector<RPoly> reduced_chain = sturm_chain(reduced);
      if (roots_in_open(reduced_chain, lo, mid) == 0) return exact_result(mid);
      q = std::move(reduced);
      chain = std::move(reduced_chain);
      hi = mid;
      continue;
    }
    if (roots_in_open(chain, lo, mid) >= 1)
      hi = mid;
    else
      lo = mid;
  }
  if (!(lo > 0))
    throw ConvergenceError("spectral radius bisection failed to separate 0");

  const BigRational upper = 1 / lo;
  const BigRational lower = 1 / hi;
  const double value = BigRational((upper + lower) / 2).convert_to<double>();
  const double certificate =
      BigRational((upper - lower) / 2).convert_to<double>() + 1e-15 * value;
  return {value, certificate, false};
}

}  // namespace bandzeta
