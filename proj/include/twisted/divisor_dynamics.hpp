#pragma once

// Divisor classes under a numerical action P on Num(X) = Z^l: orbit and
// partial-sum intersection sequences, growth fits, witnesses that
// Delta_m - (sigma^m)^* H is never ample, and the left/right ampleness
// classifier.
//
// Ampleness of a class is decided against the supplied curve list: D is
// treated as ample iff (D . C_i) > 0 for every listed curve. This is exact
// when the list describes the whole dual of the nef cone (e.g. toric input)
// and only an approximation otherwise.

#include "twisted/exact_linalg.hpp"
#include "twisted/integer.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace twisted {

/// Coordinates of a class in Num(X).
struct DivisorClass {
  std::vector<Integer> coords;

  std::size_t rank() const noexcept { return coords.size(); }
  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
};

/// Linear functional on Num(X) given by intersecting with a curve.
struct CurveFunctional {
  std::vector<Integer> coords;

  std::size_t rank() const noexcept { return coords.size(); }
  friend bool operator==(const CurveFunctional&, const CurveFunctional&) = default;
};

inline Integer pairing(std::span<const Integer> d, std::span<const Integer> c) {
  if (d.size() != c.size()) throw domain_error("dimension mismatch in intersection pairing");
  Integer s = 0;
  for (std::size_t i = 0; i < d.size(); ++i) s += d[i] * c[i];
  return s;
}

inline Integer pairing(const DivisorClass& d, const CurveFunctional& c) {
  return pairing(d.coords, c.coords);
}

struct NumericalActionSpec {
  IntMatrix action;
  std::vector<CurveFunctional> curves;
  std::int64_t dim_x = 1;
  std::optional<Integer> deg_sigma;
  /// Caller's assertion that L_n is ample for n >> 0 (automorphism branch).
  bool ample_flag = false;

  std::size_t rank() const noexcept { return action.dim(); }

  void validate() const {
    if (action.dim() == 0) throw domain_error("numerical action must be nonempty");
    if (curves.empty()) throw domain_error("at least one curve functional is required");
    for (const auto& c : curves)
      if (c.rank() != action.dim()) throw domain_error("curve functional has wrong length");
    if (dim_x < 1) throw domain_error("dimX must be positive");
    if (deg_sigma && *deg_sigma < 1) throw domain_error("degSigma must be positive");
    if (determinant(action) == 0) throw domain_error("numerical action must be invertible");
  }

  void check(const DivisorClass& d) const {
    if (d.rank() != rank()) throw domain_error("divisor class has wrong length");
  }
  void check(const CurveFunctional& c) const {
    if (c.rank() != rank()) throw domain_error("curve functional has wrong length");
  }

  DivisorClass apply(const DivisorClass& d) const { return {action.apply(d.coords)}; }

  /// Positive against every listed curve.
  bool is_ample(const DivisorClass& d) const {
    check(d);
    for (const auto& c : curves)
      if (pairing(d, c) <= 0) return false;
    return true;
  }
};

/// (P^m D . C) for m = 0..max_m.
inline std::vector<Integer> orbit_pairings(const NumericalActionSpec& spec, const DivisorClass& d,
                                           const CurveFunctional& c, std::size_t max_m) {
  spec.check(d);
  spec.check(c);
  std::vector<Integer> out;
  out.reserve(max_m + 1);
  DivisorClass cur = d;
  for (std::size_t m = 0; m <= max_m; ++m) {
    out.push_back(pairing(cur, c));
    if (m != max_m) cur = spec.apply(cur);
  }
  return out;
}

/// (Delta_m . C) for m = 1..max_m, where Delta_m = D + PD + ... + P^{m-1} D.
inline std::vector<Integer> delta_sequence(const NumericalActionSpec& spec, const DivisorClass& d,
                                           const CurveFunctional& c, std::size_t max_m) {
  auto orbit = orbit_pairings(spec, d, c, max_m == 0 ? 0 : max_m - 1);
  std::vector<Integer> out;
  out.reserve(max_m);
  Integer acc = 0;
  for (std::size_t m = 1; m <= max_m; ++m) {
    acc += orbit[m - 1];
    out.push_back(acc);
  }
  return out;
}

/// Result of fitting seq[m] <= c * m^j * r^m.
struct GrowthFit {
  bool bounded = true;
  /// Smallest c valid over the whole window.
  Rational constant;
  /// Same fit over the first half of the window; a stable ratio between the
  /// two is the evidence that the exponent j is large enough.
  Rational half_window_constant;
  /// Index (m) at which the maximum ratio was attained.
  std::int64_t argmax_m = 0;
};

/// Fits the growth constant of seq against m^j * r_hi^m. `first_m` is the
/// value of m carried by seq[0]; terms with m < 1 are ignored (m^j needs
/// m >= 1).
inline GrowthFit growth_bound_check(std::span<const Integer> seq, const RationalInterval& r,
                                    std::size_t j, std::int64_t first_m = 0) {
  if (seq.empty()) throw domain_error("growth fit needs a nonempty sequence");
  if (r.lo <= 0) throw domain_error("growth rate must be positive");

  GrowthFit fit;
  fit.constant = 0;
  fit.half_window_constant = 0;
  const std::int64_t last_m = first_m + static_cast<std::int64_t>(seq.size()) - 1;
  const std::int64_t half_m = first_m + (last_m - first_m) / 2;
  bool any = false;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    const std::int64_t m = first_m + static_cast<std::int64_t>(i);
    if (m < 1) continue;
    const Rational scale = Rational(ipow(Integer(m), j)) * rpow(r.hi, static_cast<std::uint64_t>(m));
    const Rational ratio = Rational(seq[i]) / scale;
    if (!any || ratio > fit.constant) {
      fit.constant = ratio;
      fit.argmax_m = m;
    }
    if (m <= half_m && (!any || ratio > fit.half_window_constant)) fit.half_window_constant = ratio;
    any = true;
  }
  if (!any) throw domain_error("growth fit needs at least one term with m >= 1");
  if (fit.constant < 0) fit.constant = 0;
  if (fit.half_window_constant < 0) fit.half_window_constant = 0;
  return fit;
}

struct WitnessConfig {
  std::uint64_t max_multiple = std::uint64_t{1} << 16;
  std::size_t window = 64;  // M_0
};

struct NonAmpleWitness {
  DivisorClass h;           // k times the supplied ample class
  CurveFunctional curve;
  std::size_t window = 0;   // verified for 1 <= m <= window
  Integer multiple;         // k
  Rational sum_constant;    // c_3 bound on (Delta_m . C)
  Rational orbit_constant;  // c_2 lower bound on (P^m H_0 . C)
};

/// Thrown when the witness search exhausts its bounds. Not a proof of
/// anything; the classifier reports Undetermined in that case.
class witness_not_found : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline std::size_t exponent_for_radius(const IntMatrix& p, const RationalInterval& r) {
  // Jordan data is only available for integer radii.
  if (r.is_point() && is_integral(r.lo)) return jordan_growth_exponent(p, numerator(r.lo));
  return 0;
}

inline bool verify_non_ample(const NumericalActionSpec& spec, const DivisorClass& d,
                             const DivisorClass& h, const CurveFunctional& c,
                             std::size_t window) {
  Integer delta = 0;
  DivisorClass pd = d;
  DivisorClass ph = spec.apply(h);
  for (std::size_t m = 1; m <= window; ++m) {
    delta += pairing(pd, c);  // Delta_m . C
    if (delta - pairing(ph, c) >= 0) return false;
    pd = spec.apply(pd);
    ph = spec.apply(ph);
  }
  return true;
}

}  // namespace detail

/// Finds H = k * ample and a curve C with (Delta_m - P^m H . C) < 0 for all
/// 1 <= m <= window. The starting multiple comes from comparing a lower
/// growth constant c_2 of (P^m ample . C) with an upper constant
/// c_3 = c_1 / (r - 1) for (Delta_m . C); it is then doubled until the exact
/// check passes or the bound is hit.
inline NonAmpleWitness non_left_ample_witness(const NumericalActionSpec& spec,
                                              const DivisorClass& d, const DivisorClass& ample,
                                              const WitnessConfig& cfg = {}) {
  spec.validate();
  spec.check(d);
  spec.check(ample);
  if (!spec.is_ample(ample)) throw domain_error("supplied class is not ample against the curves");
  const auto r = spectral_radius_interval(spec.action);
  if (r.lo <= 1) throw domain_error("witness requires a certified spectral radius above 1");

  const std::size_t j = detail::exponent_for_radius(spec.action, r);
  const std::size_t window = cfg.window == 0 ? 1 : cfg.window;

  for (const auto& c : spec.curves) {
    const auto orbit_d = orbit_pairings(spec, d, c, window);
    const auto orbit_h = orbit_pairings(spec, ample, c, window);

    // c_1 covers every term of the partial sums, including m = 0.
    Rational c1 = 0, c2;
    bool have_c2 = false;
    for (std::size_t m = 0; m <= window; ++m) {
      const Rational scale = Rational(ipow(Integer(m == 0 ? 1 : m), j)) * rpow(r.hi, m);
      const Rational ratio = Rational(orbit_d[m]) / scale;
      if (ratio > c1) c1 = ratio;
      if (m >= 1) {
        const Rational lower = Rational(orbit_h[m]) / scale;
        if (!have_c2 || lower < c2) c2 = lower;
        have_c2 = true;
      }
    }
    if (!have_c2 || c2 <= 0) continue;
    const Rational c3 = c1 / (r.hi - 1);

    Integer k = floor_of(c3 / c2) + 1;
    if (k < 1) k = 1;
    for (; k <= cfg.max_multiple; k *= 2) {
      DivisorClass h = ample;
      for (auto& x : h.coords) x *= k;
      if (detail::verify_non_ample(spec, d, h, c, window))
        return {std::move(h), c, window, k, c3, c2};
    }
  }
  throw witness_not_found("no non-ampleness witness within the configured search bounds");
}

enum class Verdict { Yes, No, Undetermined };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Yes: return "Yes";
    case Verdict::No: return "No";
    case Verdict::Undetermined: return "Undetermined";
  }
  return "?";
}

/// Identifiers of the results a verdict rests on.
namespace citation {
inline constexpr const char* kSpectralRadius = "spectral-radius-at-least-one";
inline constexpr const char* kNotLeftAmple = "not-left-ample-when-radius-exceeds-one";
inline constexpr const char* kAmpleEigenvector = "right-ample-from-ample-eigenvector";
inline constexpr const char* kAutomorphismCriterion = "automorphism-left-iff-right-ample";
inline constexpr const char* kFrobeniusGeneration = "frobenius-ring-generation";
inline constexpr const char* kExponentialGrowth = "exponential-growth-not-noetherian";
inline constexpr const char* kGradedAlgebra = "graded-algebra-structure";
inline constexpr const char* kCohomologyVanishing = "line-bundle-cohomology-on-projective-space";
}  // namespace citation

struct AmplenessReport {
  Verdict left = Verdict::Undetermined;
  Verdict right = Verdict::Undetermined;
  RationalInterval spectral_radius;
  bool quasi_unipotent = false;
  std::optional<DivisorClass> ample_eigenvector;
  std::optional<Integer> eigenvalue;
  std::vector<std::string> reasons;
  std::vector<std::string> citations;
};

/// Integer lambda with P D = lambda D, if D is a nonzero eigenvector.
inline std::optional<Integer> integer_eigenvalue(const NumericalActionSpec& spec,
                                                 const DivisorClass& d) {
  const auto pd = spec.apply(d);
  std::optional<Rational> lambda;
  for (std::size_t i = 0; i < d.rank(); ++i) {
    if (d.coords[i] == 0) {
      if (pd.coords[i] != 0) return std::nullopt;
      continue;
    }
    const Rational q = ratio(pd.coords[i], d.coords[i]);
    if (lambda && *lambda != q) return std::nullopt;
    lambda = q;
  }
  if (!lambda || !is_integral(*lambda)) return std::nullopt;
  return numerator(*lambda);
}

inline AmplenessReport classify_ampleness(const NumericalActionSpec& spec, const DivisorClass& d) {
  spec.validate();
  spec.check(d);

  AmplenessReport rep;
  rep.quasi_unipotent = is_quasi_unipotent(spec.action);
  rep.spectral_radius = spectral_radius_interval(spec.action);
  if (!rep.quasi_unipotent) {
    // Integer matrices with radius exactly 1 are quasi-unipotent, so the
    // enclosure separates from 1 after enough refinement.
    Rational w = default_radius_width();
    while (rep.spectral_radius.lo <= 1) {
      w /= 1024;
      rep.spectral_radius = spectral_radius_interval(spec.action, w);
    }
  }
  rep.citations.emplace_back(citation::kSpectralRadius);

  const bool ample = spec.is_ample(d);
  const auto lambda = integer_eigenvalue(spec, d);
  const bool radius_above_one = rep.spectral_radius.lo > 1;

  if (radius_above_one) {
    rep.left = Verdict::No;
    rep.reasons.push_back("spectral radius certified in [" + to_string(rep.spectral_radius.lo) +
                          ", " + to_string(rep.spectral_radius.hi) +
                          "] > 1, so B_n is not left ample");
    rep.citations.emplace_back(citation::kNotLeftAmple);
  }

  if (ample && lambda && *lambda >= 1) {
    rep.right = Verdict::Yes;
    rep.ample_eigenvector = d;
    rep.eigenvalue = *lambda;
    rep.reasons.push_back("D is ample and P D = " + lambda->str() +
                          " D, so B_n is right ample");
    rep.citations.emplace_back(citation::kAmpleEigenvector);
  }

  if (rep.quasi_unipotent) {
    // An ample eigenvector with eigenvalue 1 gives L_n = O(nD), ample for n >= 1.
    const bool ln_ample = spec.ample_flag || (ample && lambda && *lambda == 1);
    if (ln_ample) {
      rep.left = Verdict::Yes;
      rep.right = Verdict::Yes;
      rep.reasons.push_back(spec.ample_flag
                                ? "radius 1 and L_n asserted eventually ample: left and right ample"
                                : "radius 1 and L_n = O(nD) ample: left and right ample");
      rep.citations.emplace_back(citation::kAutomorphismCriterion);
    } else {
      rep.reasons.push_back(
          "radius 1 but ampleness of L_n is not established from numerical data");
    }
  } else if (rep.right == Verdict::Undetermined) {
    rep.reasons.push_back(
        "no ample eigenvector; right ampleness with radius > 1 is not decided here");
  }
  return rep;
}

/// Checks ((P^m D)^{dimX}) == degSigma^m (D^{dimX}) for m = 1..max_m on
/// rank-one Num(X), where (D^{dimX}) = d^{dimX} for D = (d).
inline bool degree_consistency(const NumericalActionSpec& spec, const DivisorClass& d,
                               std::size_t max_m = 5) {
  spec.check(d);
  if (!spec.deg_sigma) throw domain_error("degSigma is required for the degree check");
  if (spec.rank() != 1)
    throw domain_error("self-intersection is only supported for rank-one Num(X)");
  const auto dim = static_cast<std::uint64_t>(spec.dim_x);
  const Integer self = ipow(d.coords[0], dim);
  DivisorClass cur = d;
  for (std::size_t m = 1; m <= max_m; ++m) {
    cur = spec.apply(cur);
    if (ipow(cur.coords[0], dim) != ipow(*spec.deg_sigma, m) * self) return false;
  }
  return true;
}

}  // namespace twisted
