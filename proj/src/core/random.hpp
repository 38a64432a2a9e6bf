#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "types.hpp"

namespace fcir {

/// Philox4x32-10 counter-based bijection (Salmon et al., Random123).
class Philox4x32 {
 public:
  using Counter = std::array<std::uint32_t, 4>;
  using Key = std::array<std::uint32_t, 2>;

  static Counter apply(Counter ctr, Key key) noexcept;
};

/// Deterministic stream of standard normal variates.
///
/// The Philox counter is laid out as (block, substream, stream_lo, stream_hi)
/// and keyed by the 64-bit master seed, so streams with distinct
/// (master, stream_index, substream) never share a counter value. Variates
/// come from the Marsaglia polar method. With `negate` set every variate is
/// sign-flipped, which yields the antithetic stream bit-exactly.
class GaussianStream {
 public:
  explicit GaussianStream(Seed seed, std::uint32_t substream = 0, bool negate = false);

  double next();
  void fill(std::span<double> out);

 private:
  std::uint64_t next_bits();
  double next_symmetric_uniform();

  Philox4x32::Key key_;
  Philox4x32::Counter base_;
  std::uint32_t block_ = 0;
  Philox4x32::Counter buffer_{};
  int buffered_words_ = 0;
  double cached_ = 0.0;
  bool has_cached_ = false;
  bool negate_;
};

/// `count` i.i.d. N(0,1) variates from substream 0 of `seed`.
std::vector<double> gaussian_stream(Seed seed, std::size_t count);

}  // namespace fcir
