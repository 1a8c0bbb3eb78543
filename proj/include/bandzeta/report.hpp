#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bandzeta/analytics.hpp"

namespace bandzeta {

struct AnalyticsOptions {
  int terms = 20;     // N, pi, mu and zeta are tabulated to this length
  int pnt_from = 40;  // ratio table window (multiples of L)
  int pnt_to = 60;
  Limits limits;
};

struct ComponentSummary {
  int size = 0;
  int period = 1;
  bool trivial = false;
  bool simple_cycle = false;
  double spectral_radius = 0.0;
  bool operator==(const ComponentSummary&) const = default;
};

// Everything the pipeline derives from one presentation, in exact form
// where the quantity is exact.  Serializes to JSON with big integers
// as decimal strings; the serialization round-trips byte-for-byte.
struct AnalyticsReport {
  int window = 0;
  int graph_vertices = 0;
  int graph_arrows = 0;
  std::vector<ComponentSummary> components;
  std::vector<BigInt> reciprocal_poly;  // constant term first
  std::vector<BigInt> n;                // n[i] = N_{i+1}
  std::vector<BigInt> pi;
  std::vector<BigInt> mu;
  std::vector<BigInt> zeta;  // zeta[i] = coefficient of t^i
  double spectral_radius = 0.0;
  double radius_certificate = 0.0;
  PNTConstants pnt;
  std::vector<PNTRow> pnt_table;
  Classification classification;
};

// Full pipeline: requires an admissible string-algebra presentation
// with binomials already replaced (PreconditionError otherwise).
AnalyticsReport analyze(const Presentation& p,
                        const AnalyticsOptions& options = {});

std::string report_to_json(const AnalyticsReport& report);
AnalyticsReport report_from_json(const std::string& text);

}  // namespace bandzeta
