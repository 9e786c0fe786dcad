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

#pragma once

#include <cstdint>
#include <vector>

#include "skewen/charpoly.hpp"
#include "skewen/orient.hpp"

namespace skewen {

/// |lambda_i| for the n eigenvalues of S, sorted descending. Nonzero values
/// come in equal pairs (+-i*lambda).
struct SpectrumMagnitudes {
  std::vector<double> values;
};

struct EnergyReport {
  double spectral = 0.0;
  double coulson = 0.0;
  double tolerance = 0.0;
  bool agreement = false;
};

/// Result of the entrywise comparison of two coefficient vectors.
enum class OrderRelation { equal, greater, less, incomparable };

inline constexpr double kDefaultCoulsonTolerance = 1e-8;
inline constexpr double kEigenClampFloor = 1e-12;

/// Eigenvalues of the symmetric n x n row-major matrix `a` by cyclic Jacobi
/// rotations, stopping once the off-diagonal Frobenius norm drops below
/// 1e-12. Unsorted.
std::vector<double> symmetric_eigenvalues(std::vector<double> a, int n);

/// Square roots of the eigenvalues of -S^2 = S S^T, clamped at zero below
/// kEigenClampFloor.
SpectrumMagnitudes spectrum(const OrientedGraph& og);

double energy_spectral(const OrientedGraph& og);

/// (1/pi) * integral over R of t^-2 ln(1 + sum_k b_{2k} t^{2k}), evaluated
/// with t = tan(theta) and adaptive Gauss-Legendre panels on (0, pi/2).
/// std::invalid_argument unless tol > 0.
double coulson_integral(const SkewCoeffs& c, double tol = kDefaultCoulsonTolerance);

/// coulson_integral() of the exact coefficients.
double energy_coulson(const OrientedGraph& og, double tol = kDefaultCoulsonTolerance);

/// Both routes; agreement iff |spectral - coulson| <= tol * max(1, spectral).
EnergyReport energy_report(const OrientedGraph& og, double tol = kDefaultCoulsonTolerance);

/// 2 sqrt(b2 + 2 sqrt(b4)): the energy when b_2 and b_4 are the only
/// nonzero coefficients past b_0. Requires b2, b4 >= 0 and b2^2 >= 4 b4.
double quartic_energy(std::int64_t b2, std::int64_t b4);

/// Entrywise order on equal-length coefficient vectors (std::invalid_argument
/// on mismatched order).
OrderRelation quasi_compare(const SkewCoeffs& lhs, const SkewCoeffs& rhs);

const char* to_string(OrderRelation r) noexcept;

}  // namespace skewen
