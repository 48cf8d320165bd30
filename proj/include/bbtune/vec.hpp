// Copyright 2026 The bbtune Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BBTUNE_VEC_HPP_
#define BBTUNE_VEC_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "bbtune/rng.hpp"

namespace bbtune {

// Flat parameter vector. All tuning parameters (prompts, adapter weights,
// optimizer moments) live in this representation.
using Vec = std::vector<double>;

// a + s * b. Dimensions must match.
Vec add_scaled(const Vec& a, const Vec& b, double s);
void add_scaled_inplace(Vec& a, const Vec& b, double s);

double dot(const Vec& a, const Vec& b);
double norm(const Vec& a);

bool all_finite(const Vec& a);
// Throws std::invalid_argument naming `what` if any entry is NaN/Inf.
void check_finite(const Vec& a, const std::string& what);
// Throws std::invalid_argument naming `what` on dimension mismatch.
void check_same_dim(const Vec& a, const Vec& b, const std::string& what);

// Returns v / ||v||. If ||v|| is below `tiny`, returns `fallback` and sets
// *degenerate when provided.
Vec normalized(const Vec& v, const Vec& fallback, bool* degenerate = nullptr,
               double tiny = 1e-12);
// Returns v / ||v||; throws if the norm is (near) zero.
Vec normalized(const Vec& v);

// Uniform draw from the unit sphere in `dim` dimensions, obtained by
// normalizing a standard Gaussian vector. Throws on dim == 0.
Vec sample_unit_sphere(int dim, RngStream& rng);

// Minimal row-major dense matrix. Just enough for the encoder, adapters and
// the CMA-ES covariance; not a linear-algebra library.
struct Mat {
  int rows = 0;
  int cols = 0;
  std::vector<double> a;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0.0) {}

  double& operator()(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
  double operator()(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }
};

// y = A x
Vec matvec(const Mat& m, const Vec& x);
// y = A^T x
Vec matvec_t(const Mat& m, const Vec& x);

}  // namespace bbtune

#endif  // BBTUNE_VEC_HPP_
