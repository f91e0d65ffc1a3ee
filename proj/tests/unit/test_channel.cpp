// Copyright 2026 The qutrit-se Authors
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


#include <catch_amalgamated.hpp>

#include <cmath>
#include <random>
#include <stdexcept>

#include "qutrit/channel.hpp"
#include "qutrit/errors.hpp"
#include "test_support.hpp"

using Catch::Matchers::WithinAbs;
using namespace qutrit;
using namespace qutrit::testing;

namespace {

const double kSqrt3 = std::sqrt(3.0);

ComplexMatrix diag(std::vector<double> v) { return ComplexMatrix::diagonal(v); }

std::vector<double> log_grid(double lo, double hi, int n) {
  std::vector<double> out;
  for (int k = 0; k < n; ++k) out.push_back(lo * std::pow(hi / lo, k / double(n - 1)));
  return out;
}

KrausChannel se(std::size_t dim, const DecayRates& r, double t) {
  return dim == 3 ? se_qutrit_kraus(r, t) : se_qubit_kraus(r, t);
}

// Choi matrix of the qubit map b -> T b + t0, built through linearity on
// |j><k| = (1/2) sum_a tr(sigma_a |j><k|) sigma_a.
ComplexMatrix affine_choi_qubit(const RealMatrix& t, const std::vector<double>& t0) {
  const OperatorBasis& b = basis(2);
  auto map = [&](const ComplexMatrix& x) {
    ComplexMatrix out = b.elements[0] * Complex(0.5 * x.trace());
    for (std::size_t i = 0; i < 3; ++i) out += b.generator(i) * Complex(0.5 * x.trace() * t0[i]);
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) {
        out += b.generator(i) * Complex(0.5 * t(i, j) * (b.generator(j) * x).trace());
      }
    }
    return out;
  };
  ComplexMatrix choi(4, 4);
  for (std::size_t j = 0; j < 2; ++j) {
    for (std::size_t k = 0; k < 2; ++k) {
      ComplexMatrix jk(2, 2);
      jk(j, k) = 1.0;
      choi += tensor_product(map(jk), jk);
    }
  }
  return choi;
}

}  // namespace

TEST_CASE("KrausChannel validates operator shapes and count", "[channel]") {
  CHECK_THROWS_AS(KrausChannel(3, {}), DimensionMismatch);
  CHECK_THROWS_AS(KrausChannel(3, {ComplexMatrix::identity(2)}), DimensionMismatch);
  CHECK_THROWS_AS(KrausChannel(2, std::vector<ComplexMatrix>(5, ComplexMatrix::identity(2))),
                  DimensionMismatch);
  CHECK_NOTHROW(KrausChannel(2, std::vector<ComplexMatrix>(4, ComplexMatrix::identity(2))));
  CHECK(KrausChannel::identity(3).size() == 1);
}

TEST_CASE("se_qutrit_kraus examples", "[channel]") {
  const KrausChannel at0 = se_qutrit_kraus({1.0, 2.0, 0.0}, 0.0);
  REQUIRE(at0.size() == 3);
  CHECK(at0.operators()[0] == ComplexMatrix::identity(3));
  CHECK(at0.operators()[1] == ComplexMatrix(3, 3));
  CHECK(at0.operators()[2] == ComplexMatrix(3, 3));

  const KrausChannel k = se_qutrit_kraus({1.0, 2.0, 0.0}, std::log(2.0));
  CHECK(max_abs_diff(k.operators()[0], diag({1.0, 1.0 / std::sqrt(2.0), 0.5})) <= 1e-15);
  CHECK_THAT(k.operators()[1](0, 1).real(), WithinAbs(std::sqrt(0.5), 1e-15));
  CHECK_THAT(k.operators()[2](0, 2).real(), WithinAbs(kSqrt3 / 2.0, 1e-15));

  const KrausChannel late = se_qutrit_kraus({1.0, 1.0, 0.0}, 100.0);
  for (int trial = 0; trial < 20; ++trial) {
    CHECK(max_abs_diff(apply_channel(late, random_density(3)).matrix(), diag({1, 0, 0})) <= 1e-12);
  }

  CHECK_THROWS_WITH(se_qutrit_kraus({1.0, 1.0, 0.0}, -1.0),
                    Catch::Matchers::ContainsSubstring("time must be nonnegative"));
  CHECK_THROWS_WITH(se_qutrit_kraus({-1.0, 1.0, 0.0}, 1.0),
                    Catch::Matchers::ContainsSubstring("rates must be nonnegative"));
}

TEST_CASE("se_qubit_kraus examples", "[channel]") {
  const KrausChannel at0 = se_qubit_kraus({0.0, 0.0, 1.0}, 0.0);
  REQUIRE(at0.size() == 2);
  CHECK(at0.operators()[0] == ComplexMatrix::identity(2));
  CHECK(at0.operators()[1] == ComplexMatrix(2, 2));

  const KrausChannel k = se_qubit_kraus({0.0, 0.0, 2.0}, std::log(2.0));
  CHECK(max_abs_diff(k.operators()[0], diag({1.0, 0.5})) <= 1e-15);
  CHECK_THAT(k.operators()[1](0, 1).real(), WithinAbs(kSqrt3 / 2.0, 1e-15));

  const KrausChannel q = se_qubit_kraus({0.0, 0.0, 1.0}, std::log(4.0));
  const DensityMatrix out = apply_channel(q, DensityMatrix(diag({0.0, 1.0})));
  CHECK(max_abs_diff(out.matrix(), diag({0.75, 0.25})) <= 1e-15);

  CHECK_THROWS_AS(se_qubit_kraus({0.0, 0.0, 1.0}, -0.5), std::invalid_argument);
}

TEST_CASE("se_qutrit_affine examples", "[channel]") {
  const AffineBlochMap at0 = se_qutrit_affine({3.0, 5.0, 0.0}, 0.0);
  CHECK(at0.transfer == RealMatrix::identity(8));
  for (double x : at0.translation) CHECK(x == 0.0);

  const AffineBlochMap m = se_qutrit_affine({1.0, 2.0, 0.0}, 1.0);
  const double e1 = std::exp(-1.0);
  const double e2 = std::exp(-2.0);
  // Row 3, column 8 in 1-based labels.
  CHECK_THAT(m.transfer(2, 7), WithinAbs((e2 - e1) / kSqrt3, 1e-15));
  CHECK_THAT(m.transfer(2, 7), WithinAbs(-0.13425943218214875, 1e-15));
  CHECK_THAT(m.translation[2], WithinAbs((3.0 - e2 - 2.0 * e1) / (2.0 * kSqrt3), 1e-15));
  CHECK_THAT(m.translation[2], WithinAbs(0.614562178291021, 1e-14));
  CHECK_THAT(m.translation[7], WithinAbs((1.0 - e2) / 2.0, 1e-15));
  CHECK_THAT(m.translation[7], WithinAbs(0.43233235838169365, 1e-15));

  // Only T[3][8] is off the diagonal.
  for (std::size_t i = 0; i < 8; ++i) {
    for (std::size_t j = 0; j < 8; ++j) {
      if (i != j && !(i == 2 && j == 7)) CHECK(m.transfer(i, j) == 0.0);
    }
  }
  CHECK_THROWS_AS(se_qutrit_affine({1.0, 2.0, 0.0}, -1e-3), std::invalid_argument);
  CHECK_THROWS_AS(se_qubit_affine({0.0, 0.0, 1.0}, -1e-3), std::invalid_argument);
}

TEST_CASE("apply_channel examples", "[channel]") {
  for (int trial = 0; trial < 20; ++trial) {
    const DensityMatrix rho = random_density(3);
    CHECK(max_abs_diff(apply_channel(KrausChannel::identity(3), rho).matrix(), rho.matrix()) ==
          0.0);
  }

  const KrausChannel k = se_qutrit_kraus({1.0, 1.0, 0.0}, std::log(2.0));
  const DensityMatrix out = apply_channel(k, DensityMatrix(diag({0.0, 0.5, 0.5})));
  CHECK(max_abs_diff(out.matrix(), diag({0.5, 0.25, 0.25})) <= 1e-15);

  const DecayRates r{0.7, 1.9, 0.0};
  const double t = 0.8;
  const DensityMatrix rho = random_density(3);
  const DensityMatrix evolved = apply_channel(se_qutrit_kraus(r, t), rho);
  const double scale = std::exp(-(r.a1 + r.a2) * t / 2.0);
  CHECK(std::abs(evolved(2, 1) - rho(2, 1) * scale) <= 1e-15);
  CHECK(std::abs(evolved(1, 2) - rho(1, 2) * scale) <= 1e-15);

  CHECK_THROWS_AS(apply_channel(k, random_density(2)), DimensionMismatch);
}

TEST_CASE("the ground state is a fixed point of SE", "[channel][property]") {
  const ComplexMatrix g3 = diag({1, 0, 0});
  const ComplexMatrix g2 = diag({1, 0});
  for (double t : log_grid(1e-3, 1e2, 30)) {
    CHECK(apply_channel(se_qutrit_kraus({1.3, 0.4, 0.0}, t), DensityMatrix(g3)).matrix() == g3);
    CHECK(apply_channel(se_qubit_kraus({0.0, 0.0, 2.1}, t), DensityMatrix(g2)).matrix() == g2);
  }
}

TEST_CASE("completeness_defect examples", "[channel]") {
  std::mt19937_64 g(11);
  std::uniform_real_distribution<double> rate(0.0, 10.0);
  for (int trial = 0; trial < 200; ++trial) {
    const DecayRates r{rate(g), rate(g), rate(g)};
    const double t = std::exp(std::uniform_real_distribution<double>(-7.0, 5.0)(g));
    CHECK(completeness_defect(se_qutrit_kraus(r, t)) <= 1e-14);
    CHECK(completeness_defect(se_qubit_kraus(r, t)) <= 1e-14);
  }
  CHECK_THAT(completeness_defect(KrausChannel(2, {ComplexMatrix::identity(2) * Complex(0.5)})),
             WithinAbs(0.75, 1e-16));
}

TEST_CASE("choi_matrix examples", "[channel]") {
  const ComplexMatrix id = choi_matrix(KrausChannel::identity(3));
  const std::vector<double> ev = hermitian_eigenvalues(id);
  for (std::size_t k = 0; k < 8; ++k) CHECK_THAT(ev[k], WithinAbs(0.0, 1e-13));
  CHECK_THAT(ev[8], WithinAbs(3.0, 1e-13));
  ComplexMatrix expected(9, 9);
  for (std::size_t j = 0; j < 3; ++j) {
    for (std::size_t k = 0; k < 3; ++k) expected(j * 3 + j, k * 3 + k) = 1.0;
  }
  CHECK(max_abs_diff(id, expected) == 0.0);

  std::mt19937_64 g(5);
  std::uniform_real_distribution<double> rate(0.0, 10.0);
  for (int trial = 0; trial < 50; ++trial) {
    const DecayRates r{rate(g), rate(g), rate(g)};
    const double t = std::exp(std::uniform_real_distribution<double>(-5.0, 3.0)(g));
    CHECK(min_eigenvalue(choi_matrix(se_qutrit_kraus(r, t))) >= -1e-12);
  }

  const ComplexMatrix qb = choi_matrix(se_qubit_kraus({0.0, 0.0, 1.0}, 1.0));
  CHECK(hermiticity_defect(qb) == 0.0);
  CHECK_THAT(qb.trace().real(), WithinAbs(2.0, 1e-12));
  // Trace preservation: tracing the output factor leaves the identity.
  CHECK(max_abs_diff(partial_trace(qb, {2, 2}, Subsystem::A), ComplexMatrix::identity(2)) <=
        1e-15);
}

TEST_CASE("is_cptp examples", "[channel]") {
  for (double t : {0.0, 0.1, 1.0, 10.0}) {
    const CptpReport r = is_cptp(se_qutrit_kraus({2.0, 4.0, 0.0}, t), 1e-12);
    CHECK(r.cptp);
    CHECK(r.completeness_defect <= 1e-14);
    CHECK(r.choi_min_eigenvalue >= -1e-12);
  }
  const CptpReport bad = is_cptp(KrausChannel(3, {diag({1.0, 1.1, 1.0})}), 1e-12);
  CHECK_FALSE(bad.cptp);
  CHECK_THAT(bad.completeness_defect, WithinAbs(0.21, 1e-14));
  CHECK(bad.choi_min_eigenvalue >= -1e-14);

  CHECK_THROWS_AS(is_cptp(KrausChannel::identity(2), 0.0), std::invalid_argument);
}

TEST_CASE("the transpose map has a non-positive Choi matrix", "[channel]") {
  // Transposition flips the sign of the sigma_y component.
  RealMatrix t = RealMatrix::identity(3);
  t(1, 1) = -1.0;
  const ComplexMatrix choi = affine_choi_qubit(t, {0.0, 0.0, 0.0});
  CHECK(max_abs_diff(choi, swap_operator(2)) <= 1e-15);
  CHECK_THAT(min_eigenvalue(choi), WithinAbs(-1.0, 1e-13));

  // The same helper applied to SE reproduces the Kraus-built Choi matrix.
  const AffineBlochMap m = se_qubit_affine({0.0, 0.0, 1.7}, 0.6);
  CHECK(max_abs_diff(affine_choi_qubit(m.transfer, m.translation),
                     choi_matrix(se_qubit_kraus({0.0, 0.0, 1.7}, 0.6))) <= 1e-15);
}

TEST_CASE("affine_from_kraus examples", "[channel]") {
  for (std::size_t dim : {2u, 3u}) {
    const AffineBlochMap id = affine_from_kraus(KrausChannel::identity(dim));
    CHECK(max_abs_diff(id.transfer, RealMatrix::identity(bloch_length(dim))) <= 1e-15);
    for (double x : id.translation) CHECK(std::abs(x) <= 1e-16);
  }

  const DecayRates qb{0.0, 0.0, 1.3};
  const double t = 0.9;
  const AffineBlochMap m = affine_from_kraus(se_qubit_kraus(qb, t));
  RealMatrix expected(3, 3);
  expected(0, 0) = std::exp(-qb.a * t / 2.0);
  expected(1, 1) = std::exp(-qb.a * t / 2.0);
  expected(2, 2) = std::exp(-qb.a * t);
  CHECK(max_abs_diff(m.transfer, expected) <= 1e-15);
  CHECK(std::abs(m.translation[0]) <= 1e-16);
  CHECK(std::abs(m.translation[1]) <= 1e-16);
  CHECK_THAT(m.translation[2], WithinAbs(1.0 - std::exp(-qb.a * t), 1e-15));
}

TEST_CASE("Kraus and affine forms of SE agree on a log grid", "[channel][property]") {
  std::mt19937_64 g(23);
  std::uniform_real_distribution<double> rate(0.1, 10.0);
  for (int pair = 0; pair < 50; ++pair) {
    const DecayRates r{rate(g), rate(g), rate(g)};
    for (double t : log_grid(1e-3, 1e2, 20)) {
      const AffineBlochMap a = affine_from_kraus(se_qutrit_kraus(r, t));
      const AffineBlochMap b = se_qutrit_affine(r, t);
      CHECK(max_abs_diff(a.transfer, b.transfer) <= 1e-12);
      for (std::size_t i = 0; i < 8; ++i) {
        CHECK_THAT(a.translation[i], WithinAbs(b.translation[i], 1e-12));
      }
      const AffineBlochMap c = affine_from_kraus(se_qubit_kraus(r, t));
      const AffineBlochMap d = se_qubit_affine(r, t);
      CHECK(max_abs_diff(c.transfer, d.transfer) <= 1e-12);
      for (std::size_t i = 0; i < 3; ++i) {
        CHECK_THAT(c.translation[i], WithinAbs(d.translation[i], 1e-12));
      }
    }
  }
}

TEST_CASE("apply_affine examples", "[channel]") {
  AffineBlochMap id;
  id.dim = 3;
  id.transfer = RealMatrix::identity(8);
  id.translation.assign(8, 0.0);
  const CoherenceVector v = bloch_from_density(random_density(3));
  CHECK(apply_affine(id, v).components() == v.components());

  const AffineBlochMap m = se_qutrit_affine({1.0, 2.0, 0.0}, 1.0);
  CHECK(apply_affine(m, CoherenceVector::zero(3)).components() == m.translation);

  std::vector<double> top(8, 0.0);
  top[7] = -1.0;
  const CoherenceVector n = apply_affine(m, CoherenceVector(3, top));
  CHECK_THAT(n[7], WithinAbs(0.29699707514508095, 1e-15));
  const std::vector<double> e3 = {0.0, 0.0, 1.0};
  const CoherenceVector via_kraus = bloch_from_density(
      apply_channel(se_qutrit_kraus({1.0, 2.0, 0.0}, 1.0), DensityMatrix(diag(e3))));
  for (std::size_t k = 0; k < 8; ++k) CHECK_THAT(n[k], WithinAbs(via_kraus[k], 1e-15));

  CHECK_THROWS_AS(apply_affine(m, CoherenceVector::zero(2)), DimensionMismatch);
}

TEST_CASE("Kraus and affine evolution agree on random states", "[channel][property]") {
  std::mt19937_64 g(31);
  std::uniform_real_distribution<double> rate(0.0, 5.0);
  std::uniform_real_distribution<double> time(0.0, 3.0);
  for (std::size_t dim : {2u, 3u}) {
    for (int trial = 0; trial < 200; ++trial) {
      const DecayRates r{rate(g), rate(g), rate(g)};
      const double t = time(g);
      const DensityMatrix rho = random_density(dim);
      const AffineBlochMap m = dim == 3 ? se_qutrit_affine(r, t) : se_qubit_affine(r, t);
      const DensityMatrix via_affine = density_from_bloch(apply_affine(m, bloch_from_density(rho)));
      const DensityMatrix via_kraus = apply_channel(se(dim, r, t), rho);
      CHECK(max_abs_diff(via_affine.matrix(), via_kraus.matrix()) <= 1e-12);
      CHECK(via_kraus.purity() <= 1.0 + 1e-12);
    }
  }
}

TEST_CASE("compose examples", "[channel]") {
  const KrausChannel ch = se_qutrit_kraus({1.2, 0.5, 0.0}, 0.4);
  const KrausChannel c = compose(KrausChannel::identity(3), ch);
  for (int trial = 0; trial < 20; ++trial) {
    const DensityMatrix rho = random_density(3);
    CHECK(max_abs_diff(apply_channel(c, rho).matrix(), apply_channel(ch, rho).matrix()) <= 1e-15);
  }
  CHECK_THROWS_AS(compose(KrausChannel::identity(2), ch), DimensionMismatch);

  const KrausChannel two = compose(se_qutrit_kraus({2.0, 4.0, 0.0}, 0.3), ch);
  CHECK(two.size() == 9);
  CHECK(is_cptp(two, 1e-12).cptp);
}

TEST_CASE("SE channels form a semigroup", "[channel][property]") {
  std::mt19937_64 g(41);
  std::uniform_real_distribution<double> rate(0.0, 5.0);
  std::uniform_real_distribution<double> time(0.0, 2.0);
  for (std::size_t dim : {2u, 3u}) {
    const DecayRates r{rate(g), rate(g), rate(g)};
    const double t1 = time(g);
    const double t2 = time(g);
    const KrausChannel composed = compose(se(dim, r, t1), se(dim, r, t2));
    const KrausChannel direct = se(dim, r, t1 + t2);
    for (int trial = 0; trial < 100; ++trial) {
      const DensityMatrix rho = random_density(dim);
      CHECK(max_abs_diff(apply_channel(composed, rho).matrix(),
                         apply_channel(direct, rho).matrix()) <= 1e-12);
    }
  }
}

TEST_CASE("long SE chains stay within dim^2 operators and keep their action",
          "[channel][property]") {
  const DecayRates r{0.9, 2.3, 1.1};
  for (std::size_t dim : {2u, 3u}) {
    KrausChannel chain = se(dim, r, 0.1);
    for (int step = 1; step < 5; ++step) {
      chain = compose(se(dim, r, 0.1 * (step + 1)), chain);
      CHECK(chain.size() <= dim * dim);
    }
    // 0.1 + 0.2 + 0.3 + 0.4 + 0.5
    const KrausChannel direct = se(dim, r, 1.5);
    for (int trial = 0; trial < 50; ++trial) {
      const DensityMatrix rho = random_density(dim);
      CHECK(max_abs_diff(apply_channel(chain, rho).matrix(), apply_channel(direct, rho).matrix()) <=
            1e-12);
    }
    const CptpReport rep = is_cptp(chain, 1e-12);
    CHECK(rep.cptp);
  }
}

TEST_CASE("SE channels are CPTP across parameters", "[channel][property]") {
  std::mt19937_64 g(3);
  std::uniform_real_distribution<double> rate(0.0, 10.0);
  for (int trial = 0; trial < 100; ++trial) {
    const DecayRates r{rate(g), rate(g), rate(g)};
    const double t = std::exp(std::uniform_real_distribution<double>(-7.0, 5.0)(g));
    for (std::size_t dim : {2u, 3u}) {
      const CptpReport rep = is_cptp(se(dim, r, t), 1e-12);
      CHECK(rep.cptp);
      CHECK(rep.completeness_defect <= 1e-12);
      CHECK(rep.choi_min_eigenvalue >= -1e-12);
    }
  }
}
