// Copyright 2026 The skewen Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "skewen/energy.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>

#include "skewen/errors.hpp"

namespace skewen {

std::vector<double> symmetric_eigenvalues(std::vector<double> a, int n) {
  if (n < 0 || a.size() != static_cast<size_t>(n) * static_cast<size_t>(n))
    throw std::invalid_argument("matrix storage does not match its order");
  auto at = [&](int i, int j) -> double& { return a[static_cast<size_t>(i) * static_cast<size_t>(n) + static_cast<size_t>(j)]; };

  constexpr int kMaxSweeps = 100;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off += at(p, q) * at(p, q);
    if (std::sqrt(2.0 * off) < 1e-12) break;

    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = at(p, q);
        if (apq == 0.0) continue;
        const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        at(p, p) -= t * apq;
        at(q, q) += t * apq;
        at(p, q) = at(q, p) = 0.0;
        for (int r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const double arp = at(r, p);
          const double arq = at(r, q);
          at(r, p) = at(p, r) = c * arp - s * arq;
          at(r, q) = at(q, r) = s * arp + c * arq;
        }
      }
    }
  }
  std::vector<double> eig(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) eig[static_cast<size_t>(i)] = at(i, i);
  return eig;
}

SpectrumMagnitudes spectrum(const OrientedGraph& og) {
  const int n = og.order();
  const SkewMatrix s = skew_matrix(og);
  // (S S^T)_{ij} = sum_k s_ik s_jk, a symmetric PSD integer matrix.
  std::vector<double> gram(static_cast<size_t>(n) * static_cast<size_t>(n), 0.0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int sum = 0;
      for (int k = 0; k < n; ++k) sum += s.at(i, k) * s.at(j, k);
      gram[static_cast<size_t>(i) * static_cast<size_t>(n) + static_cast<size_t>(j)] = sum;
    }
  std::vector<double> values = symmetric_eigenvalues(std::move(gram), n);
  for (auto& v : values) v = v < kEigenClampFloor ? 0.0 : std::sqrt(v);
  std::sort(values.begin(), values.end(), std::greater<>());
  return SpectrumMagnitudes{std::move(values)};
}

double energy_spectral(const OrientedGraph& og) {
  double sum = 0.0;
  for (double v : spectrum(og).values) sum += v;
  return sum;
}

namespace {

constexpr int kGaussPoints = 10;

struct GaussRule {
  std::array<double, kGaussPoints> nodes{};
  std::array<double, kGaussPoints> weights{};
};

// Legendre roots by Newton iteration from the Chebyshev guess.
GaussRule make_gauss_rule() {
  GaussRule rule;
  constexpr int n = kGaussPoints;
  for (int i = 0; i < n; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    rule.nodes[static_cast<size_t>(i)] = x;
    rule.weights[static_cast<size_t>(i)] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return rule;
}

const GaussRule& gauss_rule() {
  static const GaussRule rule = make_gauss_rule();
  return rule;
}

double gauss_panel(const std::function<double(double)>& f, double a, double b) {
  const GaussRule& rule = gauss_rule();
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  double sum = 0.0;
  for (int i = 0; i < kGaussPoints; ++i)
    sum += rule.weights[static_cast<size_t>(i)] * f(mid + half * rule.nodes[static_cast<size_t>(i)]);
  return half * sum;
}

double adaptive_panel(const std::function<double(double)>& f, double a, double b, double whole, double eps,
                      int depth) {
  const double mid = 0.5 * (a + b);
  const double left = gauss_panel(f, a, mid);
  const double right = gauss_panel(f, mid, b);
  if (std::abs(left + right - whole) < eps || depth >= 60) return left + right;
  return adaptive_panel(f, a, mid, left, 0.5 * eps, depth + 1) +
         adaptive_panel(f, mid, b, right, 0.5 * eps, depth + 1);
}

}  // namespace

double coulson_integral(const SkewCoeffs& c, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  int top = 0;
  for (int k = 1; k < static_cast<int>(c.coeffs.size()); ++k)
    if (c.at(k) != 0) top = k;
  if (top == 0) return 0.0;

  std::vector<double> b(static_cast<size_t>(top + 1));
  for (int k = 0; k <= top; ++k) b[static_cast<size_t>(k)] = static_cast<double>(c.at(k));

  // After t = tan(theta) the integrand is ln(P(t)) / sin^2(theta) with
  // P(t) = 1 + sum b_{2k} t^{2k}: bounded at 0, log-singular at pi/2.
  auto integrand = [&](double theta) {
    const double t = std::tan(theta);
    const double sin2 = std::sin(theta) * std::sin(theta);
    const double u = t * t;
    double log_p = 0.0;
    if (t <= 1.0) {
      double tail = 0.0;
      for (int k = top; k >= 1; --k) tail = (tail + b[static_cast<size_t>(k)]) * u;
      log_p = std::log1p(tail);
    } else {
      // ln P(t) = top * ln(u) + ln(sum_k b_{2k} u^(k-top))
      const double inv = 1.0 / u;
      double acc = 0.0;
      for (int k = 0; k <= top; ++k) acc = acc * inv + b[static_cast<size_t>(k)];
      log_p = top * std::log(u) + std::log(acc);
    }
    return log_p / sin2;
  };

  constexpr double kHalfPi = 0.5 * std::numbers::pi;
  constexpr int kStartPanels = 8;
  double coarse = 0.0;
  for (int i = 0; i < kStartPanels; ++i)
    coarse += gauss_panel(integrand, kHalfPi * i / kStartPanels, kHalfPi * (i + 1) / kStartPanels);
  const double scale = std::max(1.0, std::abs(2.0 / std::numbers::pi * coarse));
  // Target on the theta integral so the final energy meets tol/4 relative.
  const double eps = 0.25 * tol * scale * std::numbers::pi / 2.0;

  double total = 0.0;
  for (int i = 0; i < kStartPanels; ++i) {
    const double a = kHalfPi * i / kStartPanels;
    const double bnd = kHalfPi * (i + 1) / kStartPanels;
    total += adaptive_panel(integrand, a, bnd, gauss_panel(integrand, a, bnd), eps / kStartPanels, 0);
  }
  return 2.0 / std::numbers::pi * total;
}

double energy_coulson(const OrientedGraph& og, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  return coulson_integral(coeffs_exact(og), tol);
}

EnergyReport energy_report(const OrientedGraph& og, double tol) {
  EnergyReport r;
  r.spectral = energy_spectral(og);
  r.coulson = energy_coulson(og, tol);
  r.tolerance = tol;
  r.agreement = std::abs(r.spectral - r.coulson) <= tol * std::max(1.0, r.spectral);
  return r;
}

double quartic_energy(std::int64_t b2, std::int64_t b4) {
  if (b2 < 0 || b4 < 0) throw std::invalid_argument("quartic coefficients must be non-negative");
  if (static_cast<double>(b2) * static_cast<double>(b2) < 4.0 * static_cast<double>(b4))
    throw std::invalid_argument("quartic needs b2^2 >= 4 b4 for a real spectrum");
  return 2.0 * std::sqrt(static_cast<double>(b2) + 2.0 * std::sqrt(static_cast<double>(b4)));
}

OrderRelation quasi_compare(const SkewCoeffs& lhs, const SkewCoeffs& rhs) {
  if (lhs.order != rhs.order || lhs.coeffs.size() != rhs.coeffs.size())
    throw std::invalid_argument("quasi-order compares coefficient vectors of equal order");
  bool some_greater = false;
  bool some_less = false;
  for (size_t k = 0; k < lhs.coeffs.size(); ++k) {
    if (lhs.coeffs[k] > rhs.coeffs[k]) some_greater = true;
    if (lhs.coeffs[k] < rhs.coeffs[k]) some_less = true;
  }
  if (some_greater && some_less) return OrderRelation::incomparable;
  if (some_greater) return OrderRelation::greater;
  if (some_less) return OrderRelation::less;
  return OrderRelation::equal;
}

const char* to_string(OrderRelation r) noexcept {
  switch (r) {
    case OrderRelation::equal: return "equal";
    case OrderRelation::greater: return "greater";
    case OrderRelation::less: return "less";
    case OrderRelation::incomparable: return "incomparable";
  }
  return "?";
}

}  // namespace skewen
