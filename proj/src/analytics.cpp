#include "bandzeta/analytics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

namespace bandzeta {

ArithmeticTables::ArithmeticTables(int limit) : limit_(limit) {
  if (limit < 1) throw PreconditionError("tables limit must be >= 1");
  std::vector<int> smallest_prime(limit + 1, 0);
  for (int i = 2; i <= limit; ++i)
    if (smallest_prime[i] == 0)
      for (int j = i; j <= limit; j += i)
        if (smallest_prime[j] == 0) smallest_prime[j] = i;

  mobius_.assign(limit + 1, 0);
  totient_.assign(limit + 1, 0);
  mobius_[1] = 1;
  totient_[1] = 1;
  for (int i = 2; i <= limit; ++i) {
    const int p = smallest_prime[i];
    const int rest = i / p;
    if (rest % p == 0) {
      mobius_[i] = 0;
      totient_[i] = totient_[rest] * p;
    } else {
      mobius_[i] = -mobius_[rest];
      totient_[i] = totient_[rest] * (p - 1);
    }
  }

  divisors_.assign(limit + 1, {});
  for (int d = 1; d <= limit; ++d)
    for (int m = d; m <= limit; m += d) divisors_[m].push_back(d);
}

int ArithmeticTables::mobius(int m) const {
  if (m < 1 || m > limit_) throw PreconditionError("mobius out of range");
  return mobius_[m];
}

std::int64_t ArithmeticTables::totient(int m) const {
  if (m < 1 || m > limit_) throw PreconditionError("totient out of range");
  return totient_[m];
}

const std::vector<int>& ArithmeticTables::divisors(int m) const {
  if (m < 1 || m > limit_) throw PreconditionError("divisors out of range");
  return divisors_[m];
}

BigInt band_count_pi(const BigIntSequence& n, int m,
                     const ArithmeticTables& tables) {
  if (m < 1 || m > n.limit())
    throw PreconditionError("pi index out of tabulated range");
  BigInt acc = 0;
  for (int d : tables.divisors(m)) acc += tables.mobius(m / d) * n.N(d);
  if (acc < 0)
    throw InternalConsistencyError("Mobius inversion produced a negative count");
  if (acc % m != 0)
    throw InternalConsistencyError("band count sum is not divisible by m");
  return acc / m;
}

BigInt mu_from_pi(const std::vector<BigInt>& pi, int m,
                  const ArithmeticTables& tables) {
  if (m < 1 || m > static_cast<int>(pi.size()))
    throw PreconditionError("mu index out of tabulated range");
  BigInt acc = 0;
  for (int d : tables.divisors(m)) acc += pi[d - 1];
  if (acc % 2 != 0)
    throw InternalConsistencyError("band classes of bounded length not paired");
  return acc / 2;
}

BigInt mu_from_n(const BigIntSequence& n, int m,
                 const ArithmeticTables& tables) {
  if (m < 1 || m > n.limit())
    throw PreconditionError("mu index out of tabulated range");
  BigInt acc = 0;
  for (int d : tables.divisors(m)) acc += tables.totient(m / d) * n.N(d);
  if (acc % (2 * m) != 0)
    throw InternalConsistencyError("totient sum is not divisible by 2m");
  return acc / (2 * m);
}

CountingReport counting_report(const BigIntSequence& n, int max_m) {
  if (max_m < 1 || max_m > n.limit())
    throw PreconditionError("counting range exceeds the trace table");
  const ArithmeticTables tables(max_m);
  CountingReport report;
  report.n = n;
  for (int m = 1; m <= max_m; ++m)
    report.pi.push_back(band_count_pi(n, m, tables));
  for (int m = 1; m <= max_m; ++m) {
    BigInt via_pi = mu_from_pi(report.pi, m, tables);
    const BigInt via_n = mu_from_n(n, m, tables);
    if (via_pi != via_n)
      throw InternalConsistencyError("mu routes disagree at m = " +
                                     std::to_string(m));
    report.mu.push_back(std::move(via_pi));
  }
  return report;
}

std::vector<BigInt> zeta_coefficients(const IntegerPolynomial& reciprocal,
                                      int terms) {
  if (terms < 0) throw PreconditionError("terms must be >= 0");
  if (reciprocal.coefficient(0) != 1)
    throw PreconditionError("zeta expects constant term 1");
  const std::vector<BigInt> series = reciprocal.series_inverse(terms + 1);
  for (const BigInt& c : series)
    if (c < 0)
      throw InternalConsistencyError("zeta coefficient is negative");

  // Independent route: power sums from the polynomial, then the
  // exponential of sum_m p_m t^m / m, in exact rationals.
  std::vector<BigInt> power_sum(terms + 1, BigInt(0));
  for (int m = 1; m <= terms; ++m) {
    BigInt acc = m * reciprocal.coefficient(m);
    for (int j = 1; j < m; ++j)
      acc += reciprocal.coefficient(j) * power_sum[m - j];
    power_sum[m] = -acc;
  }
  std::vector<BigRational> expo(terms + 1, BigRational(0));
  expo[0] = 1;
  for (int m = 1; m <= terms; ++m) {
    BigRational acc = 0;
    for (int k = 1; k <= m; ++k)
      acc += BigRational(power_sum[k]) * expo[m - k];
    expo[m] = acc / m;
  }
  for (int m = 0; m <= terms; ++m)
    if (expo[m] != BigRational(series[m]))
      throw InternalConsistencyError("series inverse and exp-log disagree");
  return series;
}

std::vector<BigInt> euler_product_coefficients(
    const std::vector<BandClass>& bands, int terms) {
  if (terms < 0) throw PreconditionError("terms must be >= 0");
  std::vector<BigInt> series(terms + 1, BigInt(0));
  series[0] = 1;
  for (const BandClass& band : bands) {
    const int length = band.length();
    if (length < 1) throw PreconditionError("band class of length < 1");
    for (int i = length; i <= terms; ++i) series[i] += series[i - length];
  }
  return series;
}

std::vector<EigenvalueEstimate> char_poly_roots(
    const IntegerPolynomial& reciprocal) {
  if (reciprocal.coefficient(0) != 1)
    throw PreconditionError("char_poly_roots expects constant term 1");
  const int d = reciprocal.degree();
  if (d <= 0) return {};

  // Non-zero eigenvalues are the roots of the reversed polynomial,
  // which is monic because the constant term is 1.
  std::vector<double> monic(d + 1);
  for (int k = 0; k <= d; ++k) {
    monic[k] = reciprocal.coefficient(d - k).convert_to<double>();
    if (!std::isfinite(monic[k]))
      throw ConvergenceError("coefficients exceed double range");
  }
  const auto value_at = [&](std::complex<double> z) {
    std::complex<double> acc = 0.0;
    for (int k = d; k >= 0; --k) acc = acc * z + monic[k];
    return acc;
  };

  std::vector<std::complex<double>> roots(d);
  const std::complex<double> seed(0.4, 0.9);
  std::complex<double> power = 1.0;
  for (int j = 0; j < d; ++j) {
    power *= seed;
    roots[j] = power;
  }
  for (int iteration = 0; iteration < 1000; ++iteration) {
    double worst = 0.0;
    for (int j = 0; j < d; ++j) {
      std::complex<double> denominator = 1.0;
      for (int k = 0; k < d; ++k)
        if (k != j) denominator *= roots[j] - roots[k];
      if (denominator == std::complex<double>(0.0)) {
        roots[j] += 1e-8 * (1.0 + std::abs(roots[j]));
        worst = 1.0;
        continue;
      }
      const std::complex<double> delta = value_at(roots[j]) / denominator;
      roots[j] -= delta;
      worst = std::max(worst,
                       std::abs(delta) / (1.0 + std::abs(roots[j])));
    }
    if (worst < 1e-14) break;
  }

  std::vector<EigenvalueEstimate> out;
  for (const std::complex<double>& z : roots) {
    double scale = 1.0;
    double zpow = 1.0;
    for (int k = 0; k <= d; ++k) {
      scale += std::abs(monic[k]) * zpow;
      zpow *= std::abs(z);
    }
    const double residual = std::abs(value_at(z)) / scale;
    if (!(residual <= 1e-9))
      throw ConvergenceError("eigenvalue estimate failed residual check");
    out.push_back({z, residual});
  }
  std::sort(out.begin(), out.end(),
            [](const EigenvalueEstimate& a, const EigenvalueEstimate& b) {
              const double ma = std::abs(a.value), mb = std::abs(b.value);
              if (ma != mb) return ma > mb;
              if (a.value.real() != b.value.real())
                return a.value.real() > b.value.real();
              return a.value.imag() < b.value.imag();
            });
  return out;
}

PNTConstants pnt_constants(const SCCDecomposition& scc) {
  PNTConstants constants;
  bool any = false;
  for (const SCCComponent& c : scc.components) {
    if (c.trivial) continue;
    any = true;
    constants.radius = std::max(constants.radius, c.spectral_radius);
  }
  if (!any) return constants;  // radius 0, C 0, L 1
  constants.period_lcm = 1;
  for (const SCCComponent& c : scc.components) {
    if (c.trivial) continue;
    constants.period_lcm =
        std::lcm(constants.period_lcm, static_cast<std::int64_t>(c.period));
    if (c.spectral_radius >= constants.radius - 1e-9)
      constants.attaining_periods += c.period;
  }
  constants.applicable = constants.radius > 1.0 + 1e-9;
  return constants;
}

std::vector<PNTRow> pnt_ratio_table(const std::vector<BigInt>& pi,
                                    const PNTConstants& constants, int from,
                                    int to) {
  if (!constants.applicable)
    throw PreconditionError(
        "growth asymptotics require spectral radius > 1");
  if (from < 1 || from > to)
    throw PreconditionError("ratio table needs 1 <= from <= to");
  const std::int64_t top = static_cast<std::int64_t>(to) * constants.period_lcm;
  if (top > static_cast<std::int64_t>(pi.size()))
    throw PreconditionError("pi table too short for the requested window");

  std::vector<PNTRow> rows;
  for (int m = from; m <= to; ++m) {
    const std::int64_t index = static_cast<std::int64_t>(m) * constants.period_lcm;
    PNTRow row;
    row.m = m;
    row.pi_value = pi[index - 1];
    row.ratio = row.pi_value.convert_to<double>() *
                static_cast<double>(index) /
                (static_cast<double>(constants.attaining_periods) *
                 std::pow(constants.radius, static_cast<double>(index)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Classification classify_growth(
    const SCCDecomposition& scc,
    const std::function<std::vector<BandClass>(int)>& bands_up_to) {
  Classification out;
  for (std::size_t position = 0; position < scc.components.size(); ++position) {
    const SCCComponent& c = scc.components[position];
    if (!c.trivial && !c.simple_cycle) {
      out.verdict = Verdict::NonDomestic;
      out.offending_component = static_cast<int>(position);
      out.band_class_count = std::nullopt;
      out.mu_series_rational = false;
      out.exponential_band_growth = true;
      return out;
    }
  }

  // Domestic: the cycles of the graph are exactly the band classes.
  std::map<int, std::int64_t> cycles_by_length;
  int longest = 0;
  for (const SCCComponent& c : scc.components)
    if (c.simple_cycle) {
      ++cycles_by_length[static_cast<int>(c.vertices.size())];
      longest = std::max(longest, static_cast<int>(c.vertices.size()));
    }
  const std::vector<BandClass> bands =
      longest > 0 ? bands_up_to(longest) : std::vector<BandClass>{};

  std::map<int, std::int64_t> bands_by_length;
  std::map<StringWord, int, DisplayOrder> pair_sizes;
  for (const BandClass& b : bands) {
    ++bands_by_length[b.length()];
    ++pair_sizes[b.pair_root];
  }
  if (bands_by_length != cycles_by_length)
    throw InternalConsistencyError(
        "band classes do not match the cycle structure");
  for (const auto& [root, size] : pair_sizes)
    if (size != 2)
      throw InternalConsistencyError("band classes are not paired by inversion");

  out.verdict = Verdict::Domestic;
  out.band_class_count = static_cast<std::int64_t>(bands.size());
  for (const auto& [length, count] : bands_by_length) {
    if (count % 2 != 0)
      throw InternalConsistencyError("odd number of band classes of one length");
    out.mu_series.push_back({length, count / 2});
  }
  out.mu_series_rational = true;
  out.exponential_band_growth = false;
  return out;
}

}  // namespace bandzeta
