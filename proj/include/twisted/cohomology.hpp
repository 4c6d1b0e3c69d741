#pragma once

// Cohomology of line bundles O(d) on P^m and the vanishing scans for the
// power-endomorphism sequence L_n = O(e_n).
//
// Right twists: M = O(t) gives M (x) B_n with degree t + e_n.
// Left twists: B_n (x) M pulls M back along sigma^n, and (sigma^n)^* O(t) =
// O(r^n t) for x_i -> x_i^r, so the degree is e_n + r^n t.

#include "twisted/integer.hpp"
#include "twisted/twisted_ring.hpp"

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace twisted {

struct LineBundle {
  std::int64_t m = 1;  // ambient P^m
  Integer d;           // O(d)
};

/// dim H^q(P^m, O(d)).
inline Integer h(std::int64_t m, const Integer& d, std::int64_t q) {
  if (m < 1) throw domain_error("projective space dimension must be positive");
  if (q < 0 || q > m) throw domain_error("cohomological degree out of range");
  const auto mm = static_cast<std::uint64_t>(m);
  if (q == 0) return d >= 0 ? binomial(d + m, mm) : Integer(0);
  if (q == m) return d <= -m - 1 ? binomial(-d - 1, mm) : Integer(0);
  return 0;
}

inline Integer h(const LineBundle& l, std::int64_t q) { return h(l.m, l.d, q); }

struct CohomologyRow {
  std::int64_t n = 0;
  Integer degree;
  std::int64_t q = 0;
  Integer value;
};

/// Rows of (n, degree, q, h^q). Only q in {0, m} can be nonzero on P^m.
struct CohomologyTable {
  std::int64_t m = 1;
  std::vector<CohomologyRow> rows;

  void write_csv(std::ostream& os) const {
    os << "n,degree,q,h\n";
    for (const auto& r : rows) os << r.n << ',' << r.degree << ',' << r.q << ',' << r.value << '\n';
  }
};

inline void append_all_degrees(CohomologyTable& table, std::int64_t n, const Integer& degree) {
  for (std::int64_t q = 0; q <= table.m; ++q) table.rows.push_back({n, degree, q, h(table.m, degree, q)});
}

inline bool higher_cohomology_vanishes(std::int64_t m, const Integer& degree) {
  for (std::int64_t q = 1; q <= m; ++q)
    if (h(m, degree, q) != 0) return false;
  return true;
}

struct RightScanResult {
  std::optional<std::int64_t> n0;  // empty if vanishing has not stabilised by N
  std::int64_t max_n = 0;
  CohomologyTable table;
};

/// Smallest n0 such that h^q(O(t + e_n)) = 0 for all q > 0 and n0 <= n <= N.
inline RightScanResult right_vanishing_scan(const PowerRingSpec& spec, const Integer& t,
                                            std::int64_t max_n) {
  spec.validate();
  if (spec.r < 2) throw domain_error("vanishing scans need r >= 2");
  if (max_n < 0) throw domain_error("scan window must be nonnegative");
  RightScanResult res;
  res.max_n = max_n;
  res.table.m = spec.m;
  std::optional<std::int64_t> start;
  for (std::int64_t n = 0; n <= max_n; ++n) {
    const Integer degree = t + twist_degree(spec.r, n);
    append_all_degrees(res.table, n, degree);
    if (higher_cohomology_vanishes(spec.m, degree)) {
      if (!start) start = n;
    } else {
      start.reset();
    }
  }
  res.n0 = start;
  return res;
}

enum class LeftScanVerdict { NonVanishing, Vanishing, Inconclusive };

inline const char* to_string(LeftScanVerdict v) {
  switch (v) {
    case LeftScanVerdict::NonVanishing: return "NonVanishing";
    case LeftScanVerdict::Vanishing: return "Vanishing";
    case LeftScanVerdict::Inconclusive: return "Inconclusive";
  }
  return "?";
}

struct LeftScanResult {
  LeftScanVerdict verdict = LeftScanVerdict::Inconclusive;
  Integer t;
  std::optional<std::int64_t> witness_q;  // q with h^q != 0 over the trailing window
  std::int64_t window_start = 0;
  std::int64_t max_n = 0;
  CohomologyTable table;
};

/// Scans h^q(O(e_n + r^n t)) for q > 0 and 0 <= n <= N. The trailing window
/// is the upper half [ceil(N/2), N].
inline LeftScanResult left_vanishing_scan(const PowerRingSpec& spec, const Integer& t,
                                          std::int64_t max_n) {
  spec.validate();
  if (spec.r < 2) throw domain_error("vanishing scans need r >= 2");
  if (max_n < 0) throw domain_error("scan window must be nonnegative");
  LeftScanResult res;
  res.t = t;
  res.max_n = max_n;
  res.window_start = (max_n + 1) / 2;
  res.table.m = spec.m;

  std::vector<bool> nonzero_everywhere(static_cast<std::size_t>(spec.m) + 1, true);
  bool all_vanish = true;
  for (std::int64_t n = 0; n <= max_n; ++n) {
    const Integer degree = twist_degree(spec.r, n) + ipow(Integer(spec.r), static_cast<std::uint64_t>(n)) * t;
    append_all_degrees(res.table, n, degree);
    if (n < res.window_start) continue;
    for (std::int64_t q = 1; q <= spec.m; ++q) {
      if (h(spec.m, degree, q) == 0) {
        nonzero_everywhere[static_cast<std::size_t>(q)] = false;
      } else {
        all_vanish = false;
      }
    }
  }
  for (std::int64_t q = 1; q <= spec.m; ++q) {
    if (nonzero_everywhere[static_cast<std::size_t>(q)]) {
      res.verdict = LeftScanVerdict::NonVanishing;
      res.witness_q = q;
      return res;
    }
  }
  res.verdict = all_vanish ? LeftScanVerdict::Vanishing : LeftScanVerdict::Inconclusive;
  return res;
}

}  // namespace twisted
