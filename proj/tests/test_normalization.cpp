#include "doctest.h"
#include "support.hpp"
#include "ucb/ellipticity.hpp"
#include "ucb/errors.hpp"
#include "ucb/normalization.hpp"

using namespace ucb;
using testing_support::blaschke_direct;
using testing_support::mobius_direct;
using testing_support::Rng;

namespace {

cplx product_direct(const FiniteBlaschke& f, cplx z) {
  cplx acc = std::polar(1.0, f.theta);
  for (cplx a : f.zeros) acc *= (z - a) / (1.0 - std::conj(a) * z);
  return acc;
}

// C∘B∘C⁻¹ pointwise, with C⁻¹ written out by hand.
cplx conjugate_direct(int n, cplx w, const DiskMobius& c, cplx z) {
  const cplx u = std::polar(1.0, -c.theta()) * z;
  const cplx pre = (u + c.w()) / (1.0 + std::conj(c.w()) * u);
  return mobius_direct(c.theta(), c.w(), blaschke_direct(n, w, pre));
}

cplx random_sector_point(Rng& rng, int n) {
  return std::polar(rng.uniform(0.02, 0.95), rng.uniform(0.0, sector_angle(n)));
}

}  // namespace

TEST_CASE("eval_finite") {
  CHECK(std::abs(eval_finite({0.0, {0.0, 0.0}}, 0.3) - 0.09) < 1e-16);
  CHECK_THROWS_AS(eval_finite({0.0, {0.5}}, 2.0), DomainError);
  CHECK_THROWS_AS(eval_finite({0.0, {1.5}}, 0.1), PreconditionError);

  Rng rng(20);
  for (int k = 0; k < 200; ++k) {
    FiniteBlaschke f{rng.uniform(0, kTwoPi), {}};
    for (int j = rng.integer(1, 6); j > 0; --j) f.zeros.push_back(rng.disk(0.95));
    const double phi = rng.uniform(0, kTwoPi);
    CHECK(std::abs(std::abs(eval_finite(f, unit(phi))) - 1.0) < 1e-13);
    const cplx z = rng.disk(0.99);
    CHECK(std::abs(eval_finite(f, z) - product_direct(f, z)) < 1e-13);
  }
}

TEST_CASE("conjugate matches pointwise composition") {
  const FiniteBlaschke id = conjugate({3, 0.4}, DiskMobius());
  CHECK(id.theta == doctest::Approx(0.0));
  REQUIRE(id.zeros.size() == 3);
  for (cplx a : id.zeros) CHECK(std::abs(a - 0.4) < 1e-15);

  const DiskMobius c(0.0, cplx(0.0, 0.2));
  CHECK(std::abs(eval_finite(conjugate({3, 0.4}, c), 0.1) - conjugate_direct(3, 0.4, c, 0.1)) <
        1e-12);

  Rng rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = rng.integer(2, 6);
    const cplx w = rng.disk(0.9);
    const DiskMobius r(rng.uniform(0, kTwoPi), rng.disk(0.8));
    const FiniteBlaschke f = conjugate({n, w}, r);
    for (int k = 0; k < 100; ++k) {
      const cplx z = rng.disk(0.99);
      CHECK(std::abs(eval_finite(f, z) - conjugate_direct(n, w, r, z)) < 1e-11);
    }
  }
}

TEST_CASE("critical points") {
  auto cp = critical_points({0.0, {0.0, 0.0}});
  REQUIRE(cp.size() == 1);
  CHECK(std::abs(cp[0]) < 1e-15);

  const DiskMobius c(0.0, cplx(0.0, 0.2));
  const FiniteBlaschke f = conjugate({3, 0.4}, c);
  cp = critical_points(f);
  REQUIRE(cp.size() == 2);
  const cplx image = mobius_direct(0.0, c.w(), 0.4);
  for (cplx z : cp) CHECK(std::abs(z - image) < 1e-6);
  const CriticalCluster cl = critical_cluster(f);
  CHECK(cl.unicritical());
  const auto fprod = [&](cplx z) { return product_direct(f, z); };
  CHECK(std::abs(testing_support::holo_derivative(fprod, cl.centre, 1e-3)) < 1e-9);
}

TEST_CASE("non-unicritical input is rejected") {
  // Degree 2 always has a single critical point in the disk, so the
  // negative case needs degree 3. These zeros give two symmetric ones.
  const FiniteBlaschke f{0.0, {0.5, -0.5, 0.0}};
  const auto cp = critical_points(f);
  REQUIRE(cp.size() == 2);
  CHECK(std::abs(cp[0] - cp[1]) > 0.1);
  CHECK_FALSE(critical_cluster(f).unicritical());
  CHECK_THROWS_AS(normalize(f), PreconditionError);

  CHECK(critical_cluster({0.0, {0.5, -0.5}}).unicritical());
}

TEST_CASE("normalize examples") {
  NormalizationResult r = normalize(conjugate({3, 0.4}, DiskMobius()));
  CHECK(std::abs(r.w - 0.4) < 1e-10);
  CHECK(r.residual < 1e-10);

  r = normalize(conjugate({3, 0.4}, DiskMobius(1.1, std::polar(0.3, 0.7))));
  CHECK(std::abs(r.w - 0.4) < 1e-9);

  const cplx w4 = std::polar(0.35, sector_angle(4) * 0.99);
  r = normalize(conjugate({4, w4}, DiskMobius(0.4, cplx(-0.2, 0.1))));
  CHECK(std::abs(r.w - w4) < 1e-9);
}

TEST_CASE("the conjugacy map realizes the normal form") {
  Rng rng(22);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = rng.integer(2, 5);
    const cplx w = random_sector_point(rng, n);
    const FiniteBlaschke f = conjugate({n, w}, DiskMobius(rng.uniform(0, kTwoPi), rng.disk(0.7)));
    const NormalizationResult r = normalize(f);
    const DiskMobius h = conjugacy_map(r.conjugator);
    for (int k = 0; k < 10; ++k) {
      const cplx z = rng.disk(0.9);
      CHECK(std::abs(ucb::apply(h, eval_finite(f, z)) - blaschke_direct(n, r.w, ucb::apply(h, z))) < 1e-8);
    }
  }
}

TEST_CASE("round trip over random conjugates") {
  Rng rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = rng.integer(2, 6);
    const cplx w = random_sector_point(rng, n);
    const DiskMobius c(rng.uniform(0, kTwoPi), rng.disk(0.8));
    const NormalizationResult r = normalize(conjugate({n, w}, c));
    CHECK(std::abs(r.w - w) < 1e-8);
    CHECK(r.residual < kNormalizationResidualTol);
    CHECK(in_sector(n, r.w));
  }
}

TEST_CASE("rotation conjugates normalize identically") {
  Rng rng(24);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = rng.integer(3, 6);
    const cplx w = random_sector_point(rng, n);
    const cplx base = normalize(conjugate({n, w}, DiskMobius())).w;
    for (int j = 1; j < n - 1; ++j) {
      const cplx rot = normalize(conjugate({n, w}, DiskMobius::rotation(j * sector_angle(n)))).w;
      CHECK(std::abs(rot - base) < 1e-9);
    }
  }
}

TEST_CASE("distinct parameters stay distinct") {
  Rng rng(25);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = rng.integer(2, 5);
    const cplx w1 = random_sector_point(rng, n), w2 = random_sector_point(rng, n);
    if (std::abs(w1 - w2) <= 1e-4) continue;
    const cplx a = normalize(conjugate({n, w1}, DiskMobius(rng.uniform(0, 6), rng.disk(0.7)))).w;
    const cplx b = normalize(conjugate({n, w2}, DiskMobius(rng.uniform(0, 6), rng.disk(0.7)))).w;
    CHECK(std::abs(a - b) > 1e-6);
  }
}

TEST_CASE("preimages") {
  for (cplx z : preimages({3, cplx(0.1, 0.2)}, 0.0)) CHECK(std::abs(z - cplx(0.1, 0.2)) < 1e-15);
  auto pre = preimages({2, 0.0}, 0.25);
  REQUIRE(pre.size() == 2);
  CHECK(std::abs(pre[0] * pre[1] + 0.25) < 1e-15);
  CHECK(std::abs(std::abs(pre[0]) - 0.5) < 1e-15);

  Rng rng(26);
  for (int k = 0; k < 100; ++k) {
    const int n = rng.integer(2, 6);
    const cplx w = rng.disk(0.95), q = unit(rng.uniform(0, kTwoPi));
    pre = preimages({n, w}, q);
    REQUIRE(pre.size() == static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < pre.size(); ++i) {
      CHECK(std::abs(std::abs(pre[i]) - 1.0) < 1e-12);
      CHECK(std::abs(blaschke_direct(n, w, pre[i]) - q) < 1e-11);
      for (std::size_t j = 0; j < i; ++j) CHECK(std::abs(pre[i] - pre[j]) > 1e-6);
    }
  }
  CHECK_THROWS(preimages({2, 0.0}, 1.5));
}
