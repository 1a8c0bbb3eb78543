#pragma once

#include <string>
#include <vector>

#include "bandzeta/errors.hpp"
#include "bandzeta/numeric.hpp"

namespace bandzeta {

// Dense integer polynomial, constant term first, trailing zero
// coefficients trimmed.  The zero polynomial has an empty coefficient
// vector and degree -1.
class IntegerPolynomial {
 public:
  IntegerPolynomial() = default;
  explicit IntegerPolynomial(std::vector<BigInt> coefficients);
  static IntegerPolynomial one();

  const std::vector<BigInt>& coefficients() const { return coefficients_; }
  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
  BigInt coefficient(int k) const;  // zero beyond the degree
  bool is_zero() const { return coefficients_.empty(); }

  IntegerPolynomial operator*(const IntegerPolynomial& other) const;
  bool operator==(const IntegerPolynomial&) const = default;

  BigRational evaluate(const BigRational& t) const;
  double evaluate(double t) const;
  IntegerPolynomial derivative() const;

  // First `terms` coefficients of the power-series inverse; requires
  // constant term 1.
  std::vector<BigInt> series_inverse(int terms) const;

  // "1 - 2t^2 - 2t^3 + t^4 + 2t^5 + t^6"; "0" for the zero polynomial.
  std::string to_string(const std::string& var = "t") const;

 private:
  std::vector<BigInt> coefficients_;
};

// Product of the distinct irreducible factors, normalized primitive
// with positive constant term.  Requires a non-zero constant term.
IntegerPolynomial square_free_part(const IntegerPolynomial& p);

struct SpectralRadiusResult {
  double value = 0.0;
  double certificate = 0.0;  // |value - exact radius| <= certificate
  bool exact = false;        // the radius was hit as a rational number
};

// Largest eigenvalue modulus R of the non-negative integer matrix
// behind a reciprocal characteristic polynomial det(I - t A): the
// reciprocal of the smallest positive root, located by bisection with
// exact rational sign evaluations on the square-free part.  R = 0 for
// the constant polynomial 1 (nilpotent case).  Only meaningful for
// polynomials of this shape, where the smallest positive root, if any,
// lies in (0, 1].
SpectralRadiusResult spectral_radius(const IntegerPolynomial& reciprocal);

}  // namespace bandzeta
