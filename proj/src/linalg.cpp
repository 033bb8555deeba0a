// Copyright 2026 The qnoise Authors
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

#include "qnoise/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "qnoise/errors.hpp"

namespace qnoise {

namespace {

constexpr double kHermitianTol = 1e-9;
constexpr double kPsdTol = 1e-9;
constexpr double kJacobiTol = 1e-12;

void require_same_dim(const ComplexMatrix &a, const ComplexMatrix &b, const char *op) {
  if (a.dim() != b.dim()) {
    throw DimMismatch(
        std::string(op) + ": " + std::to_string(a.dim()) + " vs " + std::to_string(b.dim()));
  }
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {
  if (dim == 0) throw std::invalid_argument("ComplexMatrix dimension must be positive");
}

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<Complex> entries)
    : dim_(dim), entries_(std::move(entries)) {
  if (dim == 0) throw std::invalid_argument("ComplexMatrix dimension must be positive");
  if (entries_.size() != dim * dim) {
    throw std::invalid_argument(
        "ComplexMatrix: expected " + std::to_string(dim * dim) + " entries, got " +
        std::to_string(entries_.size()));
  }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : dim_(rows.size()) {
  if (dim_ == 0) throw std::invalid_argument("ComplexMatrix dimension must be positive");
  entries_.reserve(dim_ * dim_);
  for (const auto &row : rows) {
    if (row.size() != dim_) throw std::invalid_argument("ComplexMatrix: rows must be square");
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t k = 0; k < dim; ++k) m(k, k) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> diag) {
  ComplexMatrix m(diag.size());
  for (std::size_t k = 0; k < diag.size(); ++k) m(k, k) = diag[k];
  return m;
}

ComplexMatrix &ComplexMatrix::operator+=(const ComplexMatrix &other) {
  require_same_dim(*this, other, "add");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += other.entries_[k];
  return *this;
}

ComplexMatrix &ComplexMatrix::operator-=(const ComplexMatrix &other) {
  require_same_dim(*this, other, "subtract");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= other.entries_[k];
  return *this;
}

ComplexMatrix &ComplexMatrix::operator*=(Complex scalar) {
  for (auto &e : entries_) e *= scalar;
  return *this;
}

std::string ComplexMatrix::str() const {
  std::ostringstream out;
  out.precision(6);
  for (std::size_t r = 0; r < dim_; ++r) {
    out << (r == 0 ? "[" : " ");
    for (std::size_t c = 0; c < dim_; ++c) {
      const Complex &e = (*this)(r, c);
      out << (c == 0 ? "" : ", ") << e.real() << (e.imag() < 0 ? "-" : "+")
          << std::abs(e.imag()) << "i";
    }
    out << (r + 1 == dim_ ? "]" : "\n");
  }
  return out.str();
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b) { return a -= b; }
ComplexMatrix operator*(ComplexMatrix a, Complex scalar) { return a *= scalar; }
ComplexMatrix operator*(Complex scalar, ComplexMatrix a) { return a *= scalar; }
ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b) { return matmul(a, b); }

ComplexMatrix matmul(const ComplexMatrix &a, const ComplexMatrix &b) {
  require_same_dim(a, b, "matmul");
  const std::size_t n = a.dim();
  ComplexMatrix out(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t k = 0; k < n; ++k) {
      const Complex f = a(r, k);
      if (f == Complex{}) continue;
      for (std::size_t c = 0; c < n; ++c) out(r, c) += f * b(k, c);
    }
  }
  return out;
}

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
  const std::size_t na = a.dim(), nb = b.dim();
  ComplexMatrix out(na * nb);
  for (std::size_t ra = 0; ra < na; ++ra)
    for (std::size_t ca = 0; ca < na; ++ca) {
      const Complex f = a(ra, ca);
      if (f == Complex{}) continue;
      for (std::size_t rb = 0; rb < nb; ++rb)
        for (std::size_t cb = 0; cb < nb; ++cb) out(ra * nb + rb, ca * nb + cb) = f * b(rb, cb);
    }
  return out;
}

ComplexMatrix adjoint(const ComplexMatrix &a) {
  const std::size_t n = a.dim();
  ComplexMatrix out(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) out(c, r) = std::conj(a(r, c));
  return out;
}

Complex trace(const ComplexMatrix &a) {
  Complex t{};
  for (std::size_t k = 0; k < a.dim(); ++k) t += a(k, k);
  return t;
}

double max_abs(const ComplexMatrix &a) {
  double m = 0;
  for (const auto &e : a.data()) m = std::max(m, std::abs(e));
  return m;
}

bool is_hermitian(const ComplexMatrix &a, double tol) {
  const std::size_t n = a.dim();
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = r; c < n; ++c)
      if (std::abs(a(r, c) - std::conj(a(c, r))) > tol) return false;
  return true;
}

bool is_unitary(const ComplexMatrix &a, double tol) {
  return max_abs(a * adjoint(a) - ComplexMatrix::identity(a.dim())) <= tol;
}

HermitianEigen hermitian_eigen(const ComplexMatrix &input) {
  if (!is_hermitian(input, kHermitianTol)) {
    throw NotHermitian("hermitian_eigen: input deviates from its adjoint by more than 1e-9");
  }
  const std::size_t n = input.dim();
  ComplexMatrix a = input;
  ComplexMatrix v = ComplexMatrix::identity(n);
  // Symmetrize so the rotations act on an exactly Hermitian matrix.
  for (std::size_t r = 0; r < n; ++r) {
    a(r, r) = a(r, r).real();
    for (std::size_t c = r + 1; c < n; ++c) {
      const Complex avg = 0.5 * (a(r, c) + std::conj(a(c, r)));
      a(r, c) = avg;
      a(c, r) = std::conj(avg);
    }
  }

  const double threshold = kJacobiTol * std::max(1.0, max_abs(a));
  const std::size_t max_sweeps = 100 * n * n;
  for (std::size_t sweep = 0; sweep < max_sweeps; ++sweep) {
    double off = 0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off = std::max(off, std::abs(a(p, q)));
    if (off < threshold) break;

    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double mag = std::abs(a(p, q));
        if (mag < threshold * 1e-3) continue;
        // Phase rotate so the (p, q) entry is real, then apply a real Jacobi rotation.
        const Complex phase = a(p, q) / mag;  // e^{i alpha}
        const double app = a(p, p).real(), aqq = a(q, q).real();
        const double tau = (aqq - app) / (2 * mag);
        const double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1 + tau * tau));
        const double c = 1 / std::sqrt(1 + t * t);
        const double s = t * c;
        const Complex gpp = c, gpq = s;
        const Complex gqp = -s * std::conj(phase), gqq = c * std::conj(phase);

        for (std::size_t k = 0; k < n; ++k) {
          const Complex akp = a(k, p), akq = a(k, q);
          a(k, p) = akp * gpp + akq * gqp;
          a(k, q) = akp * gpq + akq * gqq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const Complex apk = a(p, k), aqk = a(q, k);
          a(p, k) = std::conj(gpp) * apk + std::conj(gqp) * aqk;
          a(q, k) = std::conj(gpq) * apk + std::conj(gqq) * aqk;
        }
        a(p, q) = a(q, p) = 0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
        for (std::size_t k = 0; k < n; ++k) {
          const Complex vkp = v(k, p), vkq = v(k, q);
          v(k, p) = vkp * gpp + vkq * gqp;
          v(k, q) = vkp * gpq + vkq * gqq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t x, std::size_t y) { return a(x, x).real() < a(y, y).real(); });
  HermitianEigen out{std::vector<double>(n), ComplexMatrix(n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    for (std::size_t r = 0; r < n; ++r) out.vectors(r, k) = v(r, order[k]);
  }
  return out;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix &a) {
  return hermitian_eigen(a).values;
}

ComplexMatrix hermitian_sqrt(const ComplexMatrix &a) {
  HermitianEigen eig = hermitian_eigen(a);
  const std::size_t n = a.dim();
  std::vector<double> roots(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (eig.values[k] < -kPsdTol) {
      throw NotPSD("hermitian_sqrt: eigenvalue " + std::to_string(eig.values[k]));
    }
    roots[k] = std::sqrt(std::max(0.0, eig.values[k]));
  }
  ComplexMatrix out(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      Complex acc{};
      for (std::size_t k = 0; k < n; ++k)
        acc += eig.vectors(r, k) * roots[k] * std::conj(eig.vectors(c, k));
      out(r, c) = acc;
    }
  return out;
}

double distance_up_to_phase(const ComplexMatrix &a, const ComplexMatrix &b) {
  require_same_dim(a, b, "distance_up_to_phase");
  Complex overlap{};
  for (std::size_t k = 0; k < a.data().size(); ++k) overlap += std::conj(b.data()[k]) * a.data()[k];
  const Complex phase = std::abs(overlap) > 0 ? overlap / std::abs(overlap) : Complex{1.0};
  double m = 0;
  for (std::size_t k = 0; k < a.data().size(); ++k)
    m = std::max(m, std::abs(a.data()[k] - phase * b.data()[k]));
  return m;
}

bool equal_up_to_phase(const ComplexMatrix &a, const ComplexMatrix &b, double tol) {
  return distance_up_to_phase(a, b) <= tol;
}

}  // namespace qnoise
