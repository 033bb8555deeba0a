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

#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace qnoise {

using Complex = std::complex<double>;

/// Dense square complex matrix, row-major.
///
/// This is the common substrate for kets' outer products, gates, density
/// matrices and channel superoperators. Qubit 0 is the most significant bit of
/// a basis-state index everywhere in the library, so `kron(a, b)` places `a`
/// on the lower-numbered qubits.
class ComplexMatrix {
 public:
  explicit ComplexMatrix(std::size_t dim);
  ComplexMatrix(std::size_t dim, std::vector<Complex> entries);
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix diagonal(std::span<const Complex> diag);

  std::size_t dim() const { return dim_; }

  Complex &operator()(std::size_t row, std::size_t col) {
    return entries_[row * dim_ + col];
  }
  const Complex &operator()(std::size_t row, std::size_t col) const {
    return entries_[row * dim_ + col];
  }

  std::span<Complex> data() { return entries_; }
  std::span<const Complex> data() const { return entries_; }

  ComplexMatrix &operator+=(const ComplexMatrix &other);
  ComplexMatrix &operator-=(const ComplexMatrix &other);
  ComplexMatrix &operator*=(Complex scalar);

  std::string str() const;

 private:
  std::size_t dim_;
  std::vector<Complex> entries_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b);
ComplexMatrix operator*(ComplexMatrix a, Complex scalar);
ComplexMatrix operator*(Complex scalar, ComplexMatrix a);
ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b);

ComplexMatrix matmul(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexMatrix adjoint(const ComplexMatrix &a);
Complex trace(const ComplexMatrix &a);
/// Largest entrywise modulus.
double max_abs(const ComplexMatrix &a);

bool is_hermitian(const ComplexMatrix &a, double tol = 1e-9);
bool is_unitary(const ComplexMatrix &a, double tol = 1e-10);

/// Eigenpairs of a Hermitian matrix. `vectors` holds the eigenvectors as
/// columns, ordered like `values` (ascending).
struct HermitianEigen {
  std::vector<double> values;
  ComplexMatrix vectors;
};

/// Cyclic complex Jacobi iteration. Throws NotHermitian when
/// max|a - a^dagger| exceeds 1e-9.
HermitianEigen hermitian_eigen(const ComplexMatrix &a);
std::vector<double> hermitian_eigenvalues(const ComplexMatrix &a);

/// Principal square root of a Hermitian PSD matrix. Eigenvalues in
/// [-1e-9, 0) are clamped to zero; anything lower throws NotPSD.
ComplexMatrix hermitian_sqrt(const ComplexMatrix &a);

/// max|a - lambda b| with lambda the unit phase that best aligns b onto a
/// (lambda = tr(b^dagger a) / |tr(b^dagger a)|).
double distance_up_to_phase(const ComplexMatrix &a, const ComplexMatrix &b);
bool equal_up_to_phase(const ComplexMatrix &a, const ComplexMatrix &b, double tol);

}  // namespace qnoise
