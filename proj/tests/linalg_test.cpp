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


#include <gtest/gtest.h>

#include "qnoise/errors.hpp"
#include "qnoise/linalg.hpp"
#include "test_util.hpp"

namespace qnoise {
namespace {

using namespace testing;

ComplexMatrix naive_kron(const ComplexMatrix &a, const ComplexMatrix &b) {
  const std::size_t da = a.dim(), db = b.dim();
  ComplexMatrix out(da * db);
  for (std::size_t i = 0; i < da * db; ++i)
    for (std::size_t j = 0; j < da * db; ++j) out(i, j) = a(i / db, j / db) * b(i % db, j % db);
  return out;
}

TEST(Kron, IdentityTimesIdentity) {
  EXPECT_EQ(max_diff(kron(kI2, kI2), ComplexMatrix::identity(4)), 0.0);
}

TEST(Kron, XTensorIdentityIsBlockAntidiagonal) {
  ComplexMatrix k = kron(kX, kI2);
  ComplexMatrix expect{{0, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, 1, 0, 0}};
  EXPECT_EQ(max_diff(k, expect), 0.0);
}

TEST(Kron, Dimensions) {
  EXPECT_EQ(kron(kI2, ComplexMatrix::identity(8)).dim(), 16u);
}

TEST(Kron, MatchesEntrywiseDefinition) {
  std::mt19937_64 rng(7);
  ComplexMatrix a = random_matrix(2, rng), b = random_matrix(4, rng);
  EXPECT_LT(max_diff(kron(a, b), naive_kron(a, b)), 1e-14);
}

TEST(Kron, LeftFactorIsQubitZero) {
  // X on qubit 0 of two qubits maps |00> (index 0) to |10> (index 2).
  ComplexMatrix k = kron(kX, kI2);
  EXPECT_EQ(k(2, 0), C(1));
  EXPECT_LT(max_diff(k, embed1(kX, 0, 2)), 1e-15);
}

TEST(Kron, ProductOfUnitariesIsUnitary) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 20; ++t) {
    ComplexMatrix u = random_unitary(2, rng), v = random_unitary(4, rng);
    ComplexMatrix k = kron(u, v);
    EXPECT_LT(max_diff(naive_mul(k, naive_adjoint(k)), ComplexMatrix::identity(8)), 1e-9);
  }
}

TEST(Plumbing, MatmulAdjointTraceAgreeWithLoops) {
  std::mt19937_64 rng(3);
  ComplexMatrix a = random_matrix(5, rng), b = random_matrix(5, rng);
  EXPECT_LT(max_diff(matmul(a, b), naive_mul(a, b)), 1e-12);
  EXPECT_LT(max_diff(a * b, naive_mul(a, b)), 1e-12);
  EXPECT_LT(max_diff(adjoint(a), naive_adjoint(a)), 0.0 + 1e-300);
  C tr = 0;
  for (std::size_t i = 0; i < 5; ++i) tr += a(i, i);
  EXPECT_LT(std::abs(trace(a) - tr), 1e-14);
}

TEST(Plumbing, ScalarAndSum) {
  ComplexMatrix a{{1, 2}, {3, 4}};
  ComplexMatrix b = a * C(0, 1) + a;
  EXPECT_EQ(b(1, 0), C(3, 3));
  EXPECT_EQ((C(2) * a)(0, 1), C(4));
  EXPECT_EQ((b - a)(1, 1), C(0, 4));
  EXPECT_DOUBLE_EQ(max_abs(a), 4.0);
}

TEST(Plumbing, TraceOfGramIsNonNegative) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 50; ++t) {
    ComplexMatrix a = random_matrix(1 + t % 6, rng);
    C tr = trace(adjoint(a) * a);
    EXPECT_GE(tr.real(), 0.0);
    EXPECT_LT(std::abs(tr.imag()), 1e-12);
  }
}

TEST(Plumbing, Predicates) {
  EXPECT_TRUE(is_unitary(kH));
  EXPECT_FALSE(is_unitary(ComplexMatrix{{1, 1}, {0, 1}}));
  EXPECT_TRUE(is_hermitian(kY));
  EXPECT_FALSE(is_hermitian(kS));
}

TEST(HermitianEigen, DiagonalizesRandomHermitian) {
  std::mt19937_64 rng(9);
  for (std::size_t d : {1u, 2u, 3u, 8u, 16u}) {
    ComplexMatrix a = random_matrix(d, rng);
    ComplexMatrix h = a + naive_adjoint(a);
    HermitianEigen e = hermitian_eigen(h);
    ASSERT_EQ(e.values.size(), d);
    for (std::size_t i = 1; i < d; ++i) EXPECT_LE(e.values[i - 1], e.values[i]);
    // Reassemble V diag(w) V^dagger.
    ComplexMatrix w(d);
    for (std::size_t i = 0; i < d; ++i) w(i, i) = e.values[i];
    ComplexMatrix back = naive_mul(naive_mul(e.vectors, w), naive_adjoint(e.vectors));
    EXPECT_LT(max_diff(back, h), 1e-9) << "dim " << d;
    EXPECT_LT(max_diff(naive_mul(naive_adjoint(e.vectors), e.vectors), ComplexMatrix::identity(d)),
              1e-9);
  }
}

TEST(HermitianEigen, KnownSpectrum) {
  // Pauli Y has eigenvalues -1 and 1.
  std::vector<double> v = hermitian_eigenvalues(kY);
  EXPECT_NEAR(v[0], -1.0, 1e-12);
  EXPECT_NEAR(v[1], 1.0, 1e-12);
}

TEST(HermitianEigen, RejectsNonHermitian) {
  EXPECT_THROW(hermitian_eigen(kS), NotHermitian);
}

TEST(HermitianSqrt, Identity) {
  EXPECT_LT(max_diff(hermitian_sqrt(ComplexMatrix::identity(4)), ComplexMatrix::identity(4)), 1e-12);
}

TEST(HermitianSqrt, Diagonal) {
  ComplexMatrix r = hermitian_sqrt(ComplexMatrix{{4, 0}, {0, 9}});
  EXPECT_LT(max_diff(r, ComplexMatrix{{2, 0}, {0, 3}}), 1e-12);
}

TEST(HermitianSqrt, RankOneDensity) {
  ComplexMatrix rho{{0.8, 0.4}, {0.4, 0.2}};
  ComplexMatrix m = hermitian_sqrt(rho);
  EXPECT_LT(max_diff(naive_mul(m, m), rho), 1e-8);
  // A pure state is a projector, so its root is itself.
  EXPECT_LT(max_diff(m, rho), 1e-8);
}

TEST(HermitianSqrt, RandomGramMatrices) {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 25; ++t) {
    ComplexMatrix b = random_matrix(2 + t % 7, rng);
    ComplexMatrix a = naive_mul(naive_adjoint(b), b);
    ComplexMatrix m = hermitian_sqrt(a);
    EXPECT_LT(max_diff(naive_mul(m, m), a), 1e-8);
  }
}

TEST(HermitianSqrt, ClampsTinyNegativeEigenvalues) {
  ComplexMatrix a{{1, 0}, {0, -5e-10}};
  ComplexMatrix m = hermitian_sqrt(a);
  EXPECT_NEAR(m(1, 1).real(), 0.0, 1e-12);
}

TEST(HermitianSqrt, Errors) {
  EXPECT_THROW(hermitian_sqrt(ComplexMatrix{{1, 1}, {0, 1}}), NotHermitian);
  EXPECT_THROW(hermitian_sqrt(ComplexMatrix{{1, 0}, {0, -1e-6}}), NotPSD);
}

TEST(PhaseEquality, IgnoresGlobalPhase) {
  ComplexMatrix a = kH * std::polar(1.0, 0.3);
  EXPECT_TRUE(equal_up_to_phase(a, kH, 1e-12));
  EXPECT_LT(distance_up_to_phase(a, kH), 1e-12);
  EXPECT_FALSE(equal_up_to_phase(kX, kZ, 1e-3));
}

}  // namespace
}  // namespace qnoise
