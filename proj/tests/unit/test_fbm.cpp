#include "doctest.h"

#include <cmath>

#include "fbm.hpp"
#include "stats_util.hpp"

using namespace fcir;

TEST_CASE("fbm_cov reference values") {
  CHECK(fbm_cov(1.0, 1.0, HurstIndex(0.7)) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(fbm_cov(2.0, 1.0, HurstIndex(0.5)) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(fbm_cov(2.0, 1.0, HurstIndex(0.75)) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
}

TEST_CASE("fbm_cov is symmetric with exact diagonal") {
  for (double h : {0.1, 0.3, 0.5, 0.7, 0.9})
    for (double t : {0.0, 0.25, 1.0, 3.5})
      for (double s : {0.0, 0.5, 2.0}) {
        CHECK(fbm_cov(t, s, HurstIndex(h)) == fbm_cov(s, t, HurstIndex(h)));
        CHECK(fbm_cov(t, t, HurstIndex(h)) == std::pow(t, 2.0 * h));
      }
}

TEST_CASE("HurstIndex rejects values outside (0,1)") {
  CHECK_THROWS_AS(HurstIndex(0.0), Error);
  CHECK_THROWS_AS(HurstIndex(1.0), Error);
  CHECK_THROWS_AS(HurstIndex(1.2), Error);
  CHECK_NOTHROW(HurstIndex(0.999));
}

TEST_CASE("cholesky factorization succeeds on n <= 512 for all H") {
  for (double h : {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9}) {
    CAPTURE(h);
    CHECK_NOTHROW(CholeskyFbm(TimeGrid(1.0, 512), HurstIndex(h)));
  }
}

TEST_CASE("cholesky generator refuses grids beyond its size limit") {
  CHECK_THROWS_AS(CholeskyFbm(TimeGrid(1.0, kCholeskyMaxSteps + 1), HurstIndex(0.5)), Error);
}

TEST_CASE("generated paths start at zero and are reproducible") {
  const TimeGrid grid(2.0, 64);
  for (Generator g : {Generator::Cholesky, Generator::Circulant}) {
    const FbmSampler sampler(g, grid, HurstIndex(0.35));
    GaussianStream n1(Seed{5, 1}), n2(Seed{5, 1});
    const SamplePath p1 = sampler.sample(n1);
    const SamplePath p2 = sampler.sample(n2);
    CHECK(p1.values[0] == 0.0);
    CHECK(p1.values == p2.values);
    CHECK(p1.values.size() == 65);
  }
  CHECK(cholesky_fbm(grid, HurstIndex(0.6), {3, 0}).values ==
        cholesky_fbm(grid, HurstIndex(0.6), {3, 0}).values);
  CHECK(circulant_fbm(grid, HurstIndex(0.6), {3, 0}).values ==
        circulant_fbm(grid, HurstIndex(0.6), {3, 0}).values);
}

TEST_CASE("cholesky single-step variance over 1e5 seeds") {
  const TimeGrid grid(1.7, 1);
  const CholeskyFbm sampler(grid, HurstIndex(0.3));
  std::vector<double> x(100'000);
  for (std::size_t i = 0; i < x.size(); ++i) {
    GaussianStream noise(Seed{77, i});
    x[i] = sampler.sample(noise).values[1];
  }
  const double want = std::pow(1.7, 0.6);
  CHECK(std::abs(test::moments(x).var - want) < 0.05 * want);
}

TEST_CASE("cholesky H=0.5 increments are uncorrelated") {
  const TimeGrid grid(1.0, 4);
  const CholeskyFbm sampler(grid, HurstIndex(0.5));
  const std::size_t n = 100'000;
  std::vector<double> d1(n), d2(n);
  for (std::size_t i = 0; i < n; ++i) {
    GaussianStream noise(Seed{78, 0}, static_cast<std::uint32_t>(i));
    const auto v = sampler.sample(noise).values;
    d1[i] = v[2] - v[1];
    d2[i] = v[3] - v[2];
  }
  const auto [cross, se] = test::mean_product(d1, d2);
  CHECK(std::abs(cross) < 4.0 * se);
}

TEST_CASE("circulant marginal variance at t=1, H=0.8") {
  const TimeGrid grid(1.0, 128);
  const CirculantFbm sampler(grid, HurstIndex(0.8));
  std::vector<double> x(20'000);
  for (std::size_t i = 0; i < x.size(); ++i) {
    GaussianStream noise(Seed{79, 0}, static_cast<std::uint32_t>(i));
    x[i] = sampler.sample(noise).values.back();
  }
  const auto m = test::moments(x);
  CHECK(std::abs(m.var - 1.0) < 4.0 * m.var_se);
  CHECK(std::abs(m.mean) < 4.0 * m.mean_se);
}

TEST_CASE("circulant and cholesky agree in moments (n=256, H=0.3)") {
  const TimeGrid grid(1.0, 256);
  const CirculantFbm circ(grid, HurstIndex(0.3));
  const CholeskyFbm chol(grid, HurstIndex(0.3));
  const std::size_t paths = 20'000;
  const std::size_t nodes[] = {1, 16, 64, 128, 200, 256};
  std::vector<std::vector<double>> a(std::size(nodes), std::vector<double>(paths));
  auto b = a;
  for (std::size_t i = 0; i < paths; ++i) {
    GaussianStream n1(Seed{80, 0}, static_cast<std::uint32_t>(i));
    GaussianStream n2(Seed{81, 0}, static_cast<std::uint32_t>(i));
    const auto pc = circ.sample(n1).values;
    const auto pk = chol.sample(n2).values;
    for (std::size_t j = 0; j < std::size(nodes); ++j) {
      a[j][i] = pc[nodes[j]];
      b[j][i] = pk[nodes[j]];
    }
  }
  for (std::size_t j = 0; j < std::size(nodes); ++j) {
    CAPTURE(nodes[j]);
    const auto ma = test::moments(a[j]);
    const auto mb = test::moments(b[j]);
    CHECK(std::abs(ma.mean - mb.mean) < 4.0 * std::hypot(ma.mean_se, mb.mean_se));
    CHECK(std::abs(ma.var - mb.var) < 4.0 * std::hypot(ma.var_se, mb.var_se));
  }
}

TEST_CASE("circulant empirical covariance matches fbm_cov") {
  const TimeGrid grid(2.0, 256);
  const std::pair<std::size_t, std::size_t> pairs[] = {{16, 16}, {16, 128}, {64, 64},  {64, 200},
                                                       {128, 256}, {200, 240}, {255, 256}, {256, 256}};
  for (double h : {0.25, 0.5, 0.75}) {
    CAPTURE(h);
    const CirculantFbm sampler(grid, HurstIndex(h));
    const std::size_t paths = 20'000;
    std::vector<std::vector<double>> x(std::size(pairs) * 2, std::vector<double>(paths));
    for (std::size_t i = 0; i < paths; ++i) {
      GaussianStream noise(Seed{82, static_cast<std::uint64_t>(h * 100)}, static_cast<std::uint32_t>(i));
      const auto v = sampler.sample(noise).values;
      for (std::size_t j = 0; j < std::size(pairs); ++j) {
        x[2 * j][i] = v[pairs[j].first];
        x[2 * j + 1][i] = v[pairs[j].second];
      }
    }
    for (std::size_t j = 0; j < std::size(pairs); ++j) {
      const auto [est, se] = test::mean_product(x[2 * j], x[2 * j + 1]);
      const double want =
          fbm_cov(grid.time(pairs[j].first), grid.time(pairs[j].second), HurstIndex(h));
      CAPTURE(j);
      CHECK(std::abs(est - want) < 4.0 * se);
    }
  }
}

TEST_CASE("embedding eigenvalue tolerance") {
  const std::vector<double> tiny_negative = {4.0, 1.0, -1e-13, 0.5};
  const auto scale = embedding_scale(tiny_negative, 6);
  CHECK(scale[2] == 0.0);
  CHECK(scale[0] == doctest::Approx(std::sqrt(4.0 / 6.0)));
  const std::vector<double> bad = {4.0, 1.0, -1e-9, 0.5};
  try {
    (void)embedding_scale(bad, 6);
    FAIL("expected EmbeddingNotNonnegative");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::EmbeddingNotNonnegative);
  }
}

TEST_CASE("fGn circulant embeddings are nonnegative across H and n") {
  for (double h : {0.05, 0.3, 0.5, 0.8, 0.95})
    for (std::size_t n : {1u, 7u, 100u, 1024u, 5000u}) {
      CAPTURE(h);
      CAPTURE(n);
      CHECK_NOTHROW(CirculantFbm(TimeGrid(3.0, n), HurstIndex(h)));
    }
}
