#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <vector>

#include "bandzeta/state_graph.hpp"

namespace bandzeta {

// Sieved Möbius / Euler totient / divisor tables for 1..limit.
class ArithmeticTables {
 public:
  explicit ArithmeticTables(int limit);

  int limit() const { return limit_; }
  int mobius(int m) const;
  std::int64_t totient(int m) const;
  const std::vector<int>& divisors(int m) const;  // ascending

 private:
  int limit_ = 0;
  std::vector<int> mobius_;
  std::vector<std::int64_t> totient_;
  std::vector<std::vector<int>> divisors_;
};

// pi(m) = (1/m) sum_{d | m} mobius(m/d) N_d: the number of band
// rotation classes of length exactly m.  Divisibility and
// non-negativity of the sum are asserted (InternalConsistencyError).
BigInt band_count_pi(const BigIntSequence& n, int m,
                     const ArithmeticTables& tables);

// mu(m) = (1/2) sum_{d | m} pi(d), from precomputed pi values
// (pi[i] = pi(i+1), defined at least on the divisors of m).
BigInt mu_from_pi(const std::vector<BigInt>& pi, int m,
                  const ArithmeticTables& tables);

// mu(m) = (1/2m) sum_{d | m} totient(m/d) N_d; independent route.
BigInt mu_from_n(const BigIntSequence& n, int m,
                 const ArithmeticTables& tables);

struct CountingReport {
  BigIntSequence n;
  std::vector<BigInt> pi;  // pi[i] = pi(i+1)
  std::vector<BigInt> mu;  // mu[i] = mu(i+1)
};

// Derives pi and mu for 1..max_m, computing mu by both routes and
// insisting they agree.
CountingReport counting_report(const BigIntSequence& n, int max_m);

// Taylor coefficients of zeta(t) = 1 / det(I - t A) up to t^terms.
// Internally recomputes the series as exp(sum N_m t^m / m) with power
// sums read off the polynomial, and checks both routes agree and all
// coefficients are non-negative.
std::vector<BigInt> zeta_coefficients(const IntegerPolynomial& reciprocal,
                                      int terms);

// Same coefficients as the Euler product over band classes
// prod_b 1 / (1 - t^{|b|}), truncated at t^terms.  Exact when every
// band class of length <= terms is supplied.
std::vector<BigInt> euler_product_coefficients(
    const std::vector<BandClass>& bands, int terms);

struct EigenvalueEstimate {
  std::complex<double> value;
  double residual;  // |p(value)| relative to the coefficient scale
};

// All non-zero eigenvalues (roots of the reversed polynomial) via
// Durand-Kerner iteration; every estimate is residual-certified or a
// ConvergenceError is thrown.  Sorted by descending modulus, then
// descending real part, then ascending imaginary part.
std::vector<EigenvalueEstimate> char_poly_roots(
    const IntegerPolynomial& reciprocal);

struct PNTConstants {
  double radius = 0.0;   // R
  std::int64_t attaining_periods = 0;  // C: sum of periods of components
                                       // whose radius attains R
  std::int64_t period_lcm = 1;         // L: lcm of component periods
  bool applicable = false;             // R > 1
};

PNTConstants pnt_constants(const SCCDecomposition& scc);

struct PNTRow {
  int m = 0;            // multiple of L probed: pi at m * L
  BigInt pi_value;
  double ratio = 0.0;   // pi(mL) * mL / (C * R^{mL})
};

// Ratio table for m in [from, to]; pi[i] = pi(i+1) must cover to * L.
// Throws PreconditionError unless constants.applicable.
std::vector<PNTRow> pnt_ratio_table(const std::vector<BigInt>& pi,
                                    const PNTConstants& constants, int from,
                                    int to);

enum class Verdict { Domestic, NonDomestic };

struct MuSeriesTerm {
  int length = 0;          // band length
  std::int64_t pairs = 0;  // inverse pairs of that length
  bool operator==(const MuSeriesTerm&) const = default;
};

struct Classification {
  Verdict verdict = Verdict::Domestic;
  // NonDomestic evidence: a component with a branching vertex.
  std::optional<int> offending_component;
  // Domestic data: finitely many band classes, and the mu generating
  // series sum_j pairs_j t^{l_j} / (1 - t^{l_j}) as (l_j, pairs_j).
  std::optional<std::int64_t> band_class_count;  // nullopt = infinite
  std::vector<MuSeriesTerm> mu_series;
  bool mu_series_rational = false;
  bool exponential_band_growth = false;
};

// Tame growth dichotomy: the algebra is domestic exactly when every
// non-trivial strongly connected component is a simple cycle; then the
// component cycles are the bands.  `bands_up_to` supplies the band
// classes of length <= L and is consulted only in the domestic case to
// cross-check counts against the cycle structure.
Classification classify_growth(
    const SCCDecomposition& scc,
    const std::function<std::vector<BandClass>(int)>& bands_up_to);

}  // namespace bandzeta
