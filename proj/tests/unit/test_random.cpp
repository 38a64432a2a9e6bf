#include "doctest.h"

#include <cmath>
#include <set>

#include "random.hpp"
#include "stats_util.hpp"

using namespace fcir;

TEST_CASE("philox matches Random123 known-answer vectors") {
  using C = Philox4x32::Counter;
  CHECK(Philox4x32::apply(C{0, 0, 0, 0}, {0, 0}) ==
        C{0x6627e8d5u, 0xe169c58du, 0xbc57ac4cu, 0x9b00dbd8u});
  CHECK(Philox4x32::apply(C{0xffffffffu, 0xffffffffu, 0xffffffffu, 0xffffffffu},
                          {0xffffffffu, 0xffffffffu}) ==
        C{0x408f276du, 0x41c83b0eu, 0xa20bc7c6u, 0x6d5451fdu});
  CHECK(Philox4x32::apply(C{0x243f6a88u, 0x85a308d3u, 0x13198a2eu, 0x03707344u},
                          {0xa4093822u, 0x299f31d0u}) ==
        C{0xd16cfe09u, 0x94fdccebu, 0x5001e420u, 0x24126ea1u});
}

TEST_CASE("gaussian_stream is deterministic per seed") {
  const Seed seed{12345, 7};
  CHECK(gaussian_stream(seed, 1000) == gaussian_stream(seed, 1000));
  CHECK(gaussian_stream(seed, 0).empty());
  // Prefix property: a longer request extends the shorter one.
  const auto short_run = gaussian_stream(seed, 17);
  const auto long_run = gaussian_stream(seed, 100);
  CHECK(std::equal(short_run.begin(), short_run.end(), long_run.begin()));
}

TEST_CASE("distinct streams and substreams differ") {
  const auto a = gaussian_stream({1, 0}, 64);
  const auto b = gaussian_stream({1, 1}, 64);
  const auto c = gaussian_stream({2, 0}, 64);
  std::vector<double> d(64);
  GaussianStream(Seed{1, 0}, 1).fill(d);
  CHECK(a != b);
  CHECK(a != c);
  CHECK(a != d);
  std::set<double> seen(a.begin(), a.end());
  for (double x : b) CHECK(seen.count(x) == 0);
}

TEST_CASE("negated stream is the exact mirror") {
  std::vector<double> plain(257), mirrored(257);
  GaussianStream(Seed{9, 3}, 5, false).fill(plain);
  GaussianStream(Seed{9, 3}, 5, true).fill(mirrored);
  for (std::size_t i = 0; i < plain.size(); ++i) CHECK(mirrored[i] == -plain[i]);
}

TEST_CASE("sample moments of 1e6 variates") {
  const auto x = gaussian_stream({2024, 0}, 1'000'000);
  const auto m = test::moments(x);
  CHECK(std::abs(m.mean) < 4.0 / std::sqrt(1e6));
  CHECK(std::abs(m.var - 1.0) < 4.0 * m.var_se);
  // Tail frequency |z| > 2 is 0.0455.
  double tail = 0.0;
  for (double v : x) tail += std::abs(v) > 2.0;
  tail /= 1e6;
  CHECK(std::abs(tail - 0.04550026) < 4.0 * std::sqrt(0.0455 * 0.9545 / 1e6));
}
