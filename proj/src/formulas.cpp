#include "fracturan/formulas.hpp"

#include <algorithm>
#include <array>

#include "fracturan/error.hpp"

namespace fracturan {

namespace {

SignedCount C(std::int64_t a, std::int64_t b) { return binom_signed(a, b); }

void check_bound_range(int n, int s2, int delta) {
  require(s2 >= 4, "fractional matching number must satisfy 2s >= 4 (got 2s = " +
                       std::to_string(s2) + ")");
  require(n >= s2 + 1, "need n >= 2s + 1 (got n = " + std::to_string(n) +
                           ", 2s = " + std::to_string(s2) + ")");
  require(delta >= 1, "minimum degree must be at least 1");
  require(delta <= ExtremalParams::max_t(s2),
          "no graph with n >= 2s + 1, 2s = " + std::to_string(s2) + " has minimum degree " +
              std::to_string(delta) + " (largest feasible is " +
              std::to_string(ExtremalParams::max_t(s2)) + ")");
}

SignedCount biclique_core_term(int n, int s2, int t, int r1, int r2) {
  const int r = r1 + r2;
  SignedCount total = C(s2 - t, r) * C(r, r1);
  for (const int rj : std::array{r1, r2}) {
    total += C(t, rj) * (C(n - rj - 1, r - rj) - C(s2 - t - rj, r - rj));
  }
  return total;
}

}  // namespace

bool ExtremalParams::valid() const noexcept {
  return s2 >= 4 && n >= s2 + 1 && delta >= 1 && delta <= t && t <= max_t(s2);
}

void ExtremalParams::validate() const {
  require(s2 >= 4, "extremal parameters need 2s >= 4 (" + to_string() + ")");
  require(n >= s2 + 1, "extremal parameters need n >= 2s + 1 (" + to_string() + ")");
  require(delta >= 1, "extremal parameters need delta >= 1 (" + to_string() + ")");
  require(delta <= t, "extremal parameters need delta <= t (" + to_string() + ")");
  require(t <= max_t(s2), "extremal parameters need t <= " + std::to_string(max_t(s2)) +
                              " for 2s = " + std::to_string(s2) + " (" + to_string() + ")");
}

std::string ExtremalParams::to_string() const {
  return "n=" + std::to_string(n) + " 2s=" + std::to_string(s2) + " t=" + std::to_string(t) +
         " delta=" + std::to_string(delta);
}

Count clique_formula(const ExtremalParams& p, int order) {
  p.validate();
  require(order >= 2, "clique order must be at least 2");
  const SignedCount value = C(p.s2 - p.t, order) +
                            C(p.t, order - 1) * (p.n + p.t - p.s2 - 1) + C(p.delta, order - 1);
  return to_count(value, "clique formula");
}

Count biclique_formula(const ExtremalParams& p, int r1, int r2) {
  p.validate();
  require(r1 >= 1 && r2 >= 1, "biclique sides must be at least 1");
  const int r = r1 + r2;
  const int c = r1 == r2 ? 2 : 1;
  SignedCount total = biclique_core_term(p.n, p.s2, p.t, r1, r2);
  for (const int rj : std::array{r1, r2}) {
    total += C(p.delta, rj) * C(p.n - rj - 1, r - rj - 1);
  }
  if (total % c != 0) fail(ErrorCode::internal, "balanced biclique formula total is odd");
  return to_count(total / c, "biclique formula");
}

Count motif_formula(const ExtremalParams& p, const Motif& motif) {
  return motif.is_clique() ? clique_formula(p, motif.clique_order())
                           : biclique_formula(p, motif.r1(), motif.r2());
}

std::string_view to_string(DeltaMode mode) {
  return mode == DeltaMode::exact ? "exact" : "at-least";
}

DeltaMode parse_delta_mode(std::string_view text) {
  if (text == "exact") return DeltaMode::exact;
  if (text == "at-least") return DeltaMode::at_least;
  fail(ErrorCode::invalid_argument, "delta mode must be 'exact' or 'at-least'");
}

std::vector<ExtremalParams> bound_attaining_params(int n, int s2, int delta, const Motif& motif,
                                                   DeltaMode mode) {
  check_bound_range(n, s2, delta);
  const int top = ExtremalParams::max_t(s2);
  const int last_delta = mode == DeltaMode::exact ? delta : top;

  std::vector<ExtremalParams> candidates;
  for (int d = delta; d <= last_delta; ++d) {
    candidates.push_back({n, s2, d, d});
    if (top != d) candidates.push_back({n, s2, top, d});
  }
  Count best = 0;
  for (const auto& p : candidates) best = std::max(best, motif_formula(p, motif));
  std::erase_if(candidates, [&](const ExtremalParams& p) { return motif_formula(p, motif) != best; });
  return candidates;
}

Count motif_bound(int n, int s2, int delta, const Motif& motif, DeltaMode mode) {
  const auto attaining = bound_attaining_params(n, s2, delta, motif, mode);
  return motif_formula(attaining.front(), motif);
}

Count clique_bound(int n, int s2, int delta, int order, DeltaMode mode) {
  return motif_bound(n, s2, delta, Motif::clique(order), mode);
}

Count biclique_bound(int n, int s2, int delta, int r1, int r2, DeltaMode mode) {
  return motif_bound(n, s2, delta, Motif::biclique(r1, r2), mode);
}

Count formula_scan_max(int n, int s2, int delta, const Motif& motif) {
  check_bound_range(n, s2, delta);
  Count best = 0;
  for (int t = delta; t <= ExtremalParams::max_t(s2); ++t) {
    best = std::max(best, motif_formula({n, s2, t, delta}, motif));
  }
  return best;
}

Count edge_bound_min_degree_one(int n, int s2) {
  require(s2 >= 4 && n >= s2 + 1, "need n >= 2s + 1 >= 5 (got n = " + std::to_string(n) +
                                      ", 2s = " + std::to_string(s2) + ")");
  const SignedCount pendant_star = C(s2 - 2, 2) + (n - 1);
  SignedCount dense;
  if (s2 % 2 == 0) {
    const int s = s2 / 2;
    dense = C(s, 2) + SignedCount(s) * (n - s);
  } else {
    const int a = (s2 - 3) / 2;  // s - 3/2
    dense = C(a, 2) + 3 + SignedCount(a) * (n - a);
  }
  return to_count(std::max(pendant_star, dense), "minimum-degree-one edge bound");
}

Count edge_bound_matching_number(int n, int k) {
  require(k >= 1, "matching number must be at least 1");
  require(n >= 2 * k + 1, "need n >= 2k + 1 (got n = " + std::to_string(n) +
                              ", k = " + std::to_string(k) + ")");
  const SignedCount twice_star = SignedCount(k) * (2 * n - k - 1);
  return to_count(std::max(C(2 * k + 1, 2), twice_star / 2), "matching-number edge bound");
}

Count edge_bound_max_degree(int n, int s2, int d) {
  require(s2 >= 2, "need 2s >= 2");
  require(d >= 1, "maximum degree bound must be at least 1");
  require(n > s2, "need n > 2s (got n = " + std::to_string(n) + ", 2s = " + std::to_string(s2) + ")");

  const SignedCount full = C(s2, 2);
  std::vector<SignedCount> branches;
  if (s2 % 2 == 0) {
    const int s = s2 / 2;
    if (d >= s2 - 1 && n <= d + s) {
      branches.push_back(std::max(full, SignedCount(s) * (n + d - s) / 2));
    } else {
      branches.push_back(SignedCount(d) * s);
    }
  } else {
    const int a = (s2 - 3) / 2;  // s - 3/2
    if (d >= s2 - 1 && n <= d + a) {
      branches.push_back(std::max(full, SignedCount(a) * (n + d - a) / 2 + 3));
    }
    if (d >= s2 - 1 && n >= d + a) {
      branches.push_back(std::max(full, SignedCount(d) * a + 3));
    }
    if (d <= s2 - 1) {
      branches.push_back(SignedCount(d) * s2 / 2);
    }
  }
  for (const auto& value : branches) {
    if (value != branches.front()) {
      fail(ErrorCode::internal, "overlapping maximum-degree branches disagree at n=" +
                                    std::to_string(n) + " 2s=" + std::to_string(s2) +
                                    " d=" + std::to_string(d));
    }
  }
  return to_count(branches.front(), "maximum-degree edge bound");
}

// ---------------------------------------------------------------------------

std::string_view to_string(ConvexFamily family) {
  switch (family) {
    case ConvexFamily::core: return "core";
    case ConvexFamily::pendant: return "pendant";
    case ConvexFamily::biclique: return "biclique";
  }
  return "core";
}

ConvexFamily parse_convex_family(std::string_view text) {
  if (text == "core") return ConvexFamily::core;
  if (text == "pendant") return ConvexFamily::pendant;
  if (text == "biclique") return ConvexFamily::biclique;
  fail(ErrorCode::invalid_argument,
       "convexity family must be one of core, pendant, biclique (got '" + std::string(text) + "')");
}

SignedCount convex_term(ConvexFamily family, const ConvexityPoint& p) {
  switch (family) {
    case ConvexFamily::core:
      return C(p.s2 - p.t, p.order);
    case ConvexFamily::pendant:
      return C(p.t, p.order - 1) * (p.n + p.t - p.s2 - 1);
    case ConvexFamily::biclique:
      return biclique_core_term(p.n, p.s2, p.t, p.r1, p.r2);
  }
  return 0;
}

bool in_convexity_domain(ConvexFamily family, const ConvexityPoint& p) {
  if (p.t < 2 || p.s2 < 1) return false;
  switch (family) {
    case ConvexFamily::core:
      return p.order >= 1 && p.t + 1 <= p.s2;
    case ConvexFamily::pendant:
      return p.order >= 1 && p.n >= p.s2 + 1 && p.t + 1 <= p.s2;
    case ConvexFamily::biclique:
      return p.r1 >= 1 && p.r2 >= 1 && p.n >= p.s2 + 1 && p.t + 1 <= p.s2 / 2;
  }
  return false;
}

SignedCount second_difference(ConvexFamily family, const ConvexityPoint& p) {
  if (!in_convexity_domain(family, p)) {
    fail(ErrorCode::invalid_argument,
         "t = " + std::to_string(p.t) + " outside the " + std::string(to_string(family)) +
             " convexity domain (n=" + std::to_string(p.n) + " 2s=" + std::to_string(p.s2) + ")");
  }
  ConvexityPoint below = p, above = p;
  --below.t;
  ++above.t;
  return convex_term(family, above) + convex_term(family, below) - 2 * convex_term(family, p);
}

}  // namespace fracturan
