#include <doctest.h>

#include "oracles.hpp"
#include "schur/matrix.hpp"

using schur::Rational;
using schur::RationalMatrix;

namespace {

RationalMatrix random_matrix(oracle::RationalSource& source, Eigen::Index n) {
  RationalMatrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = source.next(4, 4);
  return m;
}

}  // namespace

TEST_SUITE("matrix") {

TEST_CASE("determinant basics") {
  CHECK(schur::determinant(RationalMatrix::Identity(3, 3)) == Rational(1));

  RationalMatrix equal_rows(3, 3);
  equal_rows << Rational(1), Rational(2), Rational(3),
                Rational(1), Rational(2), Rational(3),
                Rational(0), Rational(5), Rational(7);
  CHECK(schur::determinant(equal_rows) == Rational(0));

  RationalMatrix m(2, 2);
  m << Rational(1), Rational(2), Rational(3), Rational(4);
  CHECK(schur::determinant(m) == oracle::cofactor_determinant(m));
  CHECK(schur::determinant(m) == Rational(-2));

  CHECK(schur::determinant(RationalMatrix(0, 0)) == Rational(1));

  RationalMatrix rect(2, 3);
  CHECK_THROWS_AS(schur::determinant(rect), std::invalid_argument);
}

TEST_CASE("determinant needs row swaps when a pivot vanishes") {
  RationalMatrix m(3, 3);
  m << Rational(0), Rational(1), Rational(2),
       Rational(1), Rational(0), Rational(3),
       Rational(4), Rational(5), Rational(0);
  CHECK(schur::determinant(m) == oracle::cofactor_determinant(m));
}

TEST_CASE("determinant agrees with cofactor expansion on random matrices") {
  oracle::RationalSource source(11);
  for (int rep = 0; rep < 30; ++rep) {
    for (Eigen::Index n = 1; n <= 4; ++n) {
      const RationalMatrix m = random_matrix(source, n);
      CHECK(schur::determinant(m) == oracle::cofactor_determinant(m));
    }
  }
}

TEST_CASE("determinant is alternating: a row swap negates it") {
  oracle::RationalSource source(13);
  for (int rep = 0; rep < 20; ++rep) {
    const Eigen::Index n = 3;
    RationalMatrix m = random_matrix(source, n);
    const Rational before = schur::determinant(m);
    m.row(0).swap(m.row(2));
    CHECK(schur::determinant(m) == -before);
  }
}

TEST_CASE("determinant is multiplicative") {
  oracle::RationalSource source(17);
  for (int rep = 0; rep < 20; ++rep) {
    for (Eigen::Index n = 2; n <= 3; ++n) {
      const RationalMatrix a = random_matrix(source, n);
      const RationalMatrix b = random_matrix(source, n);
      CHECK(schur::determinant(schur::mat_mul(a, b)) ==
            schur::determinant(a) * schur::determinant(b));
    }
  }
}

TEST_CASE("mat_mul basics") {
  RationalMatrix m(2, 2);
  m << Rational(1), Rational(1), Rational(0), Rational(1);

  CHECK(schur::mat_mul(RationalMatrix::Identity(2, 2), m) == m);
  CHECK(schur::mat_mul(m, RationalMatrix::Zero(2, 2)) == RationalMatrix::Zero(2, 2));

  RationalMatrix expected(2, 2);
  expected << Rational(1), Rational(2), Rational(0), Rational(1);
  CHECK(schur::mat_mul(m, m) == expected);

  RationalMatrix rect(3, 2);
  CHECK_THROWS_AS(schur::mat_mul(m, rect), std::invalid_argument);
}

TEST_CASE("unitriangular inverse by back substitution") {
  RationalMatrix k3(3, 3);
  k3 << Rational(1), Rational(1), Rational(1),
        Rational(0), Rational(1), Rational(2),
        Rational(0), Rational(0), Rational(1);
  const RationalMatrix inv = schur::inverse_upper_unitriangular(k3);
  RationalMatrix expected(3, 3);
  expected << Rational(1), Rational(-1), Rational(1),
              Rational(0), Rational(1), Rational(-2),
              Rational(0), Rational(0), Rational(1);
  CHECK(inv == expected);
  CHECK(schur::mat_mul(k3, inv) == RationalMatrix::Identity(3, 3));

  RationalMatrix bad(2, 2);
  bad << Rational(2), Rational(0), Rational(0), Rational(1);
  CHECK_THROWS_AS(schur::inverse_upper_unitriangular(bad), std::invalid_argument);

  RationalMatrix lower(2, 2);
  lower << Rational(1), Rational(0), Rational(3), Rational(1);
  CHECK_THROWS_AS(schur::inverse_upper_unitriangular(lower), std::invalid_argument);
}

TEST_CASE("unitriangular inverse stays integral on random integer matrices") {
  oracle::RationalSource source(19);
  for (int rep = 0; rep < 10; ++rep) {
    const Eigen::Index n = 5;
    RationalMatrix m = RationalMatrix::Identity(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = i + 1; j < n; ++j)
        m(i, j) = Rational(static_cast<long long>(source.raw() % 9));
    const RationalMatrix inv = schur::inverse_upper_unitriangular(m);
    CHECK(schur::mat_mul(m, inv) == RationalMatrix::Identity(n, n));
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j) CHECK(inv(i, j).is_integer());
  }
}

}  // TEST_SUITE
