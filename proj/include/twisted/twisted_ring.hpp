#pragma once

// The twisted homogeneous coordinate ring F = (+)_n Gamma(O(e_n)) on P^m for
// the endomorphism x_i -> x_i^r, with e_n = 1 + r + ... + r^{n-1}.
//
// A product u . v with u in F_a multiplies u by the a-th pullback of v, which
// on monomials adds exponents: exps(u) + r^a exps(v). All twisted products of
// monomials are monomials with coefficient 1, so generation questions are
// monomial combinatorics.
//
// For r = p prime this is the relative Frobenius ring. Any r >= 2 is
// accepted since x_i -> x_i^r is finite over any field; r = 1 is the
// ordinary polynomial ring.

#include "twisted/integer.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace twisted {

struct PowerRingSpec {
  std::int64_t m = 1;  // P^m, m + 1 variables
  std::int64_t r = 2;  // x_i -> x_i^r

  std::size_t variables() const noexcept { return static_cast<std::size_t>(m) + 1; }

  void validate() const {
    if (m < 1) throw domain_error("m must be at least 1");
    if (r < 1) throw domain_error("r must be at least 1");
  }
};

/// e_n = (r^n - 1) / (r - 1), and e_n = n when r = 1.
inline Integer twist_degree(std::int64_t r, std::int64_t n) {
  if (n < 0) throw domain_error("grade must be nonnegative");
  if (r == 1) return Integer(n);
  Integer e = 0;
  for (std::int64_t i = 0; i < n; ++i) e = e * r + 1;
  return e;
}

struct Monomial {
  std::vector<Integer> exps;

  Integer degree() const {
    Integer s = 0;
    for (const auto& e : exps) s += e;
    return s;
  }

  static Monomial one(std::size_t variables) { return {std::vector<Integer>(variables)}; }

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial& a, const Monomial& b) { return a.exps <=> b.exps; }

  std::string str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < exps.size(); ++i) s += (i ? "," : "") + exps[i].str();
    return s + "]";
  }
};

namespace detail {

inline void check_monomial(const PowerRingSpec& spec, const Monomial& u, std::int64_t grade) {
  if (u.exps.size() != spec.variables())
    throw domain_error("monomial has " + std::to_string(u.exps.size()) + " exponents, expected " +
                       std::to_string(spec.variables()));
  for (const auto& e : u.exps)
    if (e < 0) throw domain_error("monomial exponents must be nonnegative");
  if (u.degree() != twist_degree(spec.r, grade))
    throw domain_error("monomial " + u.str() + " does not lie in grade " + std::to_string(grade));
}

}  // namespace detail

/// dim F_n = C(e_n + m, m).
inline Integer grade_dimension(const PowerRingSpec& spec, std::int64_t n) {
  spec.validate();
  return binomial(twist_degree(spec.r, n) + spec.m, static_cast<std::uint64_t>(spec.m));
}

/// u . v for u in F_a, v in F_b; lands in F_{a+b}.
inline Monomial twisted_product(const PowerRingSpec& spec, const Monomial& u, std::int64_t a,
                                const Monomial& v, std::int64_t b) {
  spec.validate();
  detail::check_monomial(spec, u, a);
  detail::check_monomial(spec, v, b);
  const Integer shift = ipow(Integer(spec.r), static_cast<std::uint64_t>(a));
  Monomial out = u;
  for (std::size_t i = 0; i < out.exps.size(); ++i) out.exps[i] += shift * v.exps[i];
  return out;
}

/// Calls fn(monomial) for every monomial of total degree `degree` in
/// `variables` variables, in lexicographically decreasing order of
/// exponents. Stops early when fn returns false.
template <class Fn>
bool for_each_monomial(std::size_t variables, const Integer& degree, Fn&& fn) {
  if (variables == 0) return true;
  std::vector<Integer> exps(variables);
  std::function<bool(std::size_t, Integer)> rec = [&](std::size_t i, Integer rest) -> bool {
    if (i + 1 == variables) {
      exps[i] = rest;
      return fn(std::as_const(exps));
    }
    for (Integer e = rest; e >= 0; --e) {
      exps[i] = e;
      if (!rec(i + 1, rest - e)) return false;
    }
    return true;
  };
  return rec(0, degree);
}

/// Split z = u . v with u in F_a, v in F_b, a + b = n, a, b >= 1.
struct DecompositionWitness {
  std::int64_t a = 0;
  std::int64_t b = 0;
  Monomial u;
  Monomial v;
};

/// Residue solver: for each a, exps(u) must agree with exps(z) modulo r^a,
/// and the smallest such choice sums to s_0 = sum (z_i mod r^a). A split
/// exists iff s_0 <= e_a; the remaining e_a - s_0 (a multiple of r^a) is
/// distributed greedily.
inline std::optional<DecompositionWitness> find_decomposition(const PowerRingSpec& spec,
                                                              const Monomial& z, std::int64_t n) {
  spec.validate();
  detail::check_monomial(spec, z, n);
  if (n < 2) return std::nullopt;
  for (std::int64_t a = 1; a < n; ++a) {
    const Integer modulus = ipow(Integer(spec.r), static_cast<std::uint64_t>(a));
    const Integer ea = twist_degree(spec.r, a);
    Monomial u{std::vector<Integer>(z.exps.size())};
    Integer base = 0;
    for (std::size_t i = 0; i < z.exps.size(); ++i) {
      u.exps[i] = z.exps[i] % modulus;
      base += u.exps[i];
    }
    if (base > ea) continue;
    Integer extra = (ea - base) / modulus;  // exact: e_a == e_n (mod r^a)
    for (std::size_t i = 0; i < z.exps.size() && extra > 0; ++i) {
      Integer room = (z.exps[i] - u.exps[i]) / modulus;
      Integer take = room < extra ? room : extra;
      u.exps[i] += take * modulus;
      extra -= take;
    }
    if (extra != 0) continue;  // unreachable: room totals (e_n - s_0) / r^a
    Monomial v{std::vector<Integer>(z.exps.size())};
    for (std::size_t i = 0; i < z.exps.size(); ++i) v.exps[i] = (z.exps[i] - u.exps[i]) / modulus;
    return DecompositionWitness{a, n - a, std::move(u), std::move(v)};
  }
  return std::nullopt;
}

/// Exhaustive search over every right factor v in F_b.
inline std::optional<DecompositionWitness> find_decomposition_brute_force(const PowerRingSpec& spec,
                                                                          const Monomial& z,
                                                                          std::int64_t n) {
  spec.validate();
  detail::check_monomial(spec, z, n);
  if (n < 2) return std::nullopt;
  for (std::int64_t a = 1; a < n; ++a) {
    const std::int64_t b = n - a;
    const Integer shift = ipow(Integer(spec.r), static_cast<std::uint64_t>(a));
    std::optional<DecompositionWitness> found;
    for_each_monomial(spec.variables(), twist_degree(spec.r, b), [&](const std::vector<Integer>& v) {
      Monomial u{z.exps};
      for (std::size_t i = 0; i < v.size(); ++i) {
        u.exps[i] -= shift * v[i];
        if (u.exps[i] < 0) return true;
      }
      found = DecompositionWitness{a, b, std::move(u), Monomial{v}};
      return false;
    });
    if (found) return found;
  }
  return std::nullopt;
}

inline bool is_decomposable(const PowerRingSpec& spec, const Monomial& z, std::int64_t n) {
  return find_decomposition(spec, z, n).has_value();
}

struct GeneratorCounts {
  /// counts[n] for n = 1..max_n: monomials of F_n with no decomposition.
  std::map<std::int64_t, Integer> counts;
  std::int64_t max_n = 0;

  /// True when no grade 2 <= n <= max_n needs a new generator.
  bool generated_in_degree_one() const {
    for (const auto& [n, c] : counts)
      if (n >= 2 && c != 0) return false;
    return true;
  }
};

struct EnumerationConfig {
  std::uint64_t budget = 1'000'000;  // monomials per grade
  unsigned workers = 1;
};

/// Counts indecomposable monomials of F_n by enumeration. Work is split by
/// the exponent of x_0 across workers; totals do not depend on the split.
inline Integer count_indecomposable(const PowerRingSpec& spec, std::int64_t n, unsigned workers) {
  const Integer degree = twist_degree(spec.r, n);
  const std::size_t vars = spec.variables();
  workers = std::max(1U, workers);

  auto count_slice = [&](unsigned worker) {
    Integer count = 0;
    Monomial z{std::vector<Integer>(vars)};
    unsigned slot = 0;
    for (Integer lead = degree; lead >= 0; --lead, ++slot) {
      if (slot % workers != worker) continue;
      z.exps[0] = lead;
      for_each_monomial(vars - 1, degree - lead, [&](const std::vector<Integer>& rest) {
        std::copy(rest.begin(), rest.end(), z.exps.begin() + 1);
        if (!find_decomposition(spec, z, n)) ++count;
        return true;
      });
    }
    return count;
  };

  if (workers == 1) return count_slice(0);
  std::vector<Integer> partial(workers);
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&, w] { partial[w] = count_slice(w); });
  }
  Integer total = 0;
  for (const auto& p : partial) total += p;
  return total;
}

/// First indecomposable monomial of F_n in enumeration order.
inline std::optional<Monomial> first_indecomposable(const PowerRingSpec& spec, std::int64_t n) {
  std::optional<Monomial> found;
  for_each_monomial(spec.variables(), twist_degree(spec.r, n), [&](const std::vector<Integer>& e) {
    Monomial z{e};
    if (find_decomposition(spec, z, n)) return true;
    found = std::move(z);
    return false;
  });
  return found;
}

/// Indecomposable counts for n = 1..max_n. Throws budget_exceeded, carrying
/// the last completed grade, once C(e_n + m, m) exceeds the budget.
inline GeneratorCounts generator_degrees(const PowerRingSpec& spec, std::int64_t max_n,
                                         const EnumerationConfig& cfg = {}) {
  spec.validate();
  if (max_n < 1) throw domain_error("max_n must be at least 1");
  GeneratorCounts out;
  for (std::int64_t n = 1; n <= max_n; ++n) {
    if (grade_dimension(spec, n) > cfg.budget)
      throw budget_exceeded("grade " + std::to_string(n) + " has more than " +
                                std::to_string(cfg.budget) + " monomials",
                            n - 1);
    out.counts[n] = count_indecomposable(spec, n, cfg.workers);
    out.max_n = n;
  }
  return out;
}

/// Uniform-ish random monomial of grade n: sorted cut points on [0, e_n].
template <class Rng>
Monomial random_monomial(const PowerRingSpec& spec, std::int64_t n, Rng& rng) {
  const Integer degree = twist_degree(spec.r, n);
  const auto total = static_cast<std::uint64_t>(degree);
  std::uniform_int_distribution<std::uint64_t> cut(0, total);
  std::vector<std::uint64_t> cuts(spec.variables() - 1);
  for (auto& c : cuts) c = cut(rng);
  std::sort(cuts.begin(), cuts.end());
  Monomial u{std::vector<Integer>(spec.variables())};
  std::uint64_t prev = 0;
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    u.exps[i] = cuts[i] - prev;
    prev = cuts[i];
  }
  u.exps.back() = total - prev;
  return u;
}

struct LawCheckResult {
  std::uint64_t trials = 0;
  std::uint64_t failures = 0;
  bool passed() const noexcept { return failures == 0; }
};

/// Samples triples (u, v, w) in random grades up to max_grade and checks
/// (u . v) . w == u . (v . w) together with the unit laws 1 . v = v = v . 1.
inline LawCheckResult associativity_check(const PowerRingSpec& spec, std::uint64_t trials,
                                          std::uint64_t seed, std::int64_t max_grade = 5) {
  spec.validate();
  if (trials < 1) throw domain_error("at least one trial is required");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> grade(0, max_grade);
  const Monomial unit = Monomial::one(spec.variables());

  LawCheckResult res;
  for (std::uint64_t t = 0; t < trials; ++t) {
    const std::int64_t a = grade(rng), b = grade(rng), c = grade(rng);
    const Monomial u = random_monomial(spec, a, rng);
    const Monomial v = random_monomial(spec, b, rng);
    const Monomial w = random_monomial(spec, c, rng);
    const Monomial left = twisted_product(spec, twisted_product(spec, u, a, v, b), a + b, w, c);
    const Monomial right = twisted_product(spec, u, a, twisted_product(spec, v, b, w, c), b + c);
    const bool unit_ok =
        twisted_product(spec, unit, 0, v, b) == v && twisted_product(spec, v, b, unit, 0) == v;
    ++res.trials;
    if (left != right || !unit_ok) ++res.failures;
  }
  return res;
}

enum class GrowthClass { PolynomialBounded, Exponential };

inline const char* to_string(GrowthClass g) {
  return g == GrowthClass::Exponential ? "Exponential" : "PolynomialBounded";
}

struct GrowthConfig {
  double threshold = 1.0 + 1.0 / 16.0;
};

/// Exponential iff the consecutive ratios over the last half of the window
/// all reach the threshold and their extrapolated limit does too.
///
/// The limit is estimated by fitting log(d_n / d_{n-1}) = A + B/n + C/n^2
/// through the last three ratios. Polynomial growth n^k has
/// log-ratio k/n + O(1/n^2), so A tends to 0; exponential growth c^n n^k
/// gives A ~ log c.
inline GrowthClass growth_class(const std::vector<Integer>& dims, const GrowthConfig& cfg = {}) {
  if (dims.size() < 4) throw domain_error("growth classification needs at least 4 terms");
  for (const auto& d : dims)
    if (d <= 0) throw domain_error("growth classification needs positive terms");

  const std::size_t terms = dims.size();
  std::vector<double> log_ratio(terms);  // log_ratio[i] = log(d_i / d_{i-1}), i >= 1
  for (std::size_t i = 1; i < terms; ++i)
    log_ratio[i] = std::log(static_cast<double>(ratio(dims[i], dims[i - 1])));

  const double log_threshold = std::log(cfg.threshold);
  for (std::size_t i = terms / 2; i < terms; ++i)
    if (i >= 1 && log_ratio[i] < log_threshold) return GrowthClass::PolynomialBounded;

  const double n3 = static_cast<double>(terms - 1), n2 = n3 - 1, n1 = n3 - 2;
  const double y1 = log_ratio[terms - 3], y2 = log_ratio[terms - 2], y3 = log_ratio[terms - 1];
  // Lagrange interpolation in x = 1/n, evaluated at x = 0.
  const double x1 = 1 / n1, x2 = 1 / n2, x3 = 1 / n3;
  const double limit = y1 * (x2 * x3) / ((x1 - x2) * (x1 - x3)) +
                       y2 * (x1 * x3) / ((x2 - x1) * (x2 - x3)) +
                       y3 * (x1 * x2) / ((x3 - x1) * (x3 - x2));
  return limit >= log_threshold ? GrowthClass::Exponential : GrowthClass::PolynomialBounded;
}

/// dim F_n for n = 0..max_n.
inline std::vector<Integer> grade_dimensions(const PowerRingSpec& spec, std::int64_t max_n) {
  std::vector<Integer> out;
  for (std::int64_t n = 0; n <= max_n; ++n) out.push_back(grade_dimension(spec, n));
  return out;
}

}  // namespace twisted
