// Copyright 2026 The lattice-orbit Authors
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

#include "lattice_orbit/enumerate.hpp"

#include <gmpxx.h>

#include <algorithm>

namespace lattice_orbit {

bool is_definite(const Lattice& l) {
  const Signature s = signature(l);
  return s.zero == 0 && (s.positive == 0 || s.negative == 0);
}

namespace {

struct Ldl {
  // q(x) = sum_i d[i] * (x_i + sum_{j>i} u[i][j] x_j)^2
  std::vector<mpq_class> d;
  std::vector<std::vector<mpq_class>> u;
};

Ldl factor_positive(const IntMatrix& g, int sign) {
  const std::size_t n = g.rows();
  std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = static_cast<long>(sign * g(i, j));
  Ldl f{std::vector<mpq_class>(n), std::vector<std::vector<mpq_class>>(n, std::vector<mpq_class>(n))};
  for (std::size_t i = 0; i < n; ++i) {
    f.d[i] = a[i][i];
    for (std::size_t j = i + 1; j < n; ++j) f.u[i][j] = a[i][j] / a[i][i];
    for (std::size_t r = i + 1; r < n; ++r)
      for (std::size_t c = i + 1; c < n; ++c) a[r][c] -= a[r][i] * f.u[i][c];
  }
  return f;
}

class ShortVectorSearch {
 public:
  ShortVectorSearch(const Ldl& f, Int radius) : f_(f), n_(f.d.size()), radius_(radius), x_(n_, 0) {}

  std::vector<Coords> run() {
    descend(n_, 0);
    std::sort(out_.begin(), out_.end());
    return std::move(out_);
  }

 private:
  // Fix coordinates i-1, i-2, ..., 0 given x_i..x_{n-1} and their partial sum.
  void descend(std::size_t i, const mpq_class& partial) {
    if (i == 0) {
      if (std::any_of(x_.begin(), x_.end(), [](Int v) { return v != 0; })) out_.push_back(x_);
      return;
    }
    const std::size_t k = i - 1;
    mpq_class center = 0;
    for (std::size_t j = k + 1; j < n_; ++j) center -= f_.u[k][j] * x_[j];
    const mpq_class slack = mpq_class(radius_) - partial;
    auto term = [&](Int x) -> mpq_class {
      mpq_class t = x - center;
      return f_.d[k] * t * t;
    };
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), center.get_num_mpz_t(), center.get_den_mpz_t());
    const Int start = fl.get_si();
    for (Int x = start;; --x) {
      mpq_class t = term(x);
      if (t > slack) break;
      x_[k] = x;
      descend(k, partial + t);
    }
    for (Int x = start + 1;; ++x) {
      mpq_class t = term(x);
      if (t > slack) break;
      x_[k] = x;
      descend(k, partial + t);
    }
    x_[k] = 0;
  }

  const Ldl& f_;
  std::size_t n_;
  Int radius_;
  Coords x_;
  std::vector<Coords> out_;
};

}  // namespace

std::vector<Coords> short_vectors(const Lattice& l, Int max_abs_norm) {
  const Signature s = signature(l);
  if (s.zero != 0 || (s.positive != 0 && s.negative != 0))
    throw Error(ErrorCode::LatticeShapeMismatch, l.name() + " is not definite");
  const int sign = s.negative == 0 ? 1 : -1;
  const Ldl f = factor_positive(l.gram(), sign);
  return ShortVectorSearch(f, max_abs_norm).run();
}

}  // namespace lattice_orbit
