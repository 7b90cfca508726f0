// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <random>
#include <sstream>

#include "ractor/zsmith.hpp"
#include "snf_oracle.hpp"

using namespace ractor::zsmith;

namespace {

std::vector<Integer> ints(std::initializer_list<long> xs) {
  std::vector<Integer> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

SparseIntMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int lo, int hi,
                              double density = 1.0) {
  std::uniform_int_distribution<int> val(lo, hi);
  std::bernoulli_distribution keep(density);
  std::vector<std::vector<long>> d(rows, std::vector<long>(cols, 0));
  for (auto& r : d)
    for (auto& x : r)
      if (keep(rng)) x = val(rng);
  return SparseIntMatrix::from_dense(d, cols);
}

oracle::Mat to_oracle(const SparseIntMatrix& m) {
  oracle::Mat out(m.rows(), std::vector<mpz_class>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (const auto& [c, v] : m.row(r)) out[r][c] = v;
  return out;
}

}  // namespace

TEST_CASE("oracle agrees with itself on fixed inputs") {
  oracle::Mat a{{2, 4}, {6, 8}};
  CHECK(oracle::determinantal(a) == ints({2, 4}));
  CHECK(oracle::elementary(a) == ints({2, 4}));
}

TEST_CASE("snf of diag(2, 3) is (1, 6)") {
  CHECK(snf(SparseIntMatrix::from_dense({{2, 0}, {0, 3}}, 2)).diagonal == ints({1, 6}));
}

TEST_CASE("snf of the zero matrix is empty") {
  CHECK(snf(SparseIntMatrix(3, 4)).diagonal.empty());
  CHECK(snf(SparseIntMatrix(0, 0)).diagonal.empty());
}

TEST_CASE("snf of [[2,4],[6,8]] is (2, 4)") {
  CHECK(snf(SparseIntMatrix::from_dense({{2, 4}, {6, 8}}, 2)).diagonal == ints({2, 4}));
}

TEST_CASE("random small matrices match the oracles") {
  std::mt19937 rng(20240601);
  std::uniform_int_distribution<std::size_t> dim(1, 6);
  for (int trial = 0; trial < 200; ++trial) {
    const auto m = random_matrix(rng, dim(rng), dim(rng), -5, 5, trial % 3 == 0 ? 0.4 : 1.0);
    const auto ref = oracle::determinantal(to_oracle(m));
    CAPTURE(trial);
    REQUIRE(oracle::elementary(to_oracle(m)) == ref);
    CHECK(snf(m).diagonal == ref);
  }
}

TEST_CASE("divisibility chain and transpose invariance") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const auto m = random_matrix(rng, 1 + trial % 9, 1 + (trial * 5) % 8, -9, 9, 0.5);
    const auto d = snf(m).diagonal;
    for (std::size_t i = 0; i + 1 < d.size(); ++i) CHECK(d[i + 1] % d[i] == 0);
    for (const auto& x : d) CHECK(x > 0);
    CHECK(snf(m.transpose()).diagonal == d);
  }
}

TEST_CASE("unimodular transforms certify the diagonal") {
  std::mt19937 rng(99);
  auto certify = [](const SparseIntMatrix& m) {
    SnfOptions opts;
    opts.track_transforms = true;
    const auto r = snf(m, opts);
    REQUIRE(r.left);
    REQUIRE(r.right);
    CHECK(abs(determinant(*r.left)) == 1);
    CHECK(abs(determinant(*r.right)) == 1);
    CHECK(*r.left * m.to_dense() * *r.right == diagonal_matrix(m.rows(), m.cols(), r.diagonal));
    CHECK(r.diagonal == snf(m).diagonal);
  };
  for (int trial = 0; trial < 50; ++trial) certify(random_matrix(rng, 1 + trial % 6, 1 + (trial / 6) % 6, -5, 5));
  certify(random_matrix(rng, 40, 30, -3, 3, 0.2));
  certify(random_matrix(rng, 500, 500, -1, 1, 0.004));
}

TEST_CASE("thread count never changes the diagonal") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 5; ++trial) {
    const auto m = random_matrix(rng, 120, 90, -4, 4, 0.08);
    SnfOptions many;
    many.threads = 8;
    CHECK(snf(m).diagonal == snf(m, many).diagonal);
  }
}

TEST_CASE("unit pivots reduce sparse matrices to a small core") {
  // Boundary of a long cycle plus one doubled row.
  const std::size_t n = 2000;
  SparseIntMatrix m(n + 1, n);
  for (std::size_t i = 0; i < n; ++i) {
    m.add(i, i, 1);
    m.add(i, (i + 1) % n, -1);
  }
  m.add(n, 0, 2);
  const auto r = snf(m);
  CHECK(r.diagonal.size() == n);
  CHECK(r.diagonal.back() == 2);
  CHECK(r.diagonal[n - 2] == 1);
  CHECK(r.core_rows * r.core_cols < 100);
}

TEST_CASE("torsion profiles") {
  auto t = torsion_profile(SparseIntMatrix::from_dense({{2, 0}}, 2), 2);
  CHECK(t.betti == 1);
  CHECK(t.invariant_factors == ints({2}));
  CHECK(t.to_string() == "Z + Z/2");

  t = torsion_profile(SparseIntMatrix(0, 3), 3);
  CHECK(t.betti == 3);
  CHECK(t.invariant_factors.empty());
  CHECK(t.to_string() == "Z^3");

  TorsionProfile f{0, ints({2, 4})};
  CHECK(two_rank(f) == 2);
  CHECK(f.torsion_order() == 8);
  CHECK(f.factors_string(';') == "2;4");
  CHECK(two_rank(TorsionProfile{0, ints({3})}) == 0);
  CHECK(two_rank(TorsionProfile{0, ints({2, 6})}) == 2);
  CHECK(f.log2_torsion_lower_bound() == 2);
}

TEST_CASE("matrix dump round trip") {
  SparseIntMatrix m(3, 4);
  m.add(0, 1, 5);
  m.add(2, 3, Integer("-123456789012345678901234567890"));
  std::stringstream ss;
  m.write_dump(ss);
  CHECK(ss.str().rfind("3 4 2\n", 0) == 0);
  const auto back = SparseIntMatrix::read_dump(ss);
  CHECK(back.to_dense() == m.to_dense());
}

TEST_CASE("sparse rows stay normalized") {
  SparseIntMatrix m(1, 3);
  m.set_row(0, {{2, 1}, {0, 3}, {2, -1}});
  CHECK(m.nnz() == 1);
  CHECK(m.at(0, 0) == 3);
  m.add(0, 0, -3);
  CHECK(m.nnz() == 0);
  CHECK_THROWS(m.add(0, 3, 1));
}
