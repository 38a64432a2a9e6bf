#include "random.hpp"

#include <cmath>

namespace fcir {
namespace {

constexpr std::uint32_t kMul0 = 0xD2511F53u;
constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& hi, std::uint32_t& lo) {
  const std::uint64_t p = static_cast<std::uint64_t>(a) * b;
  hi = static_cast<std::uint32_t>(p >> 32);
  lo = static_cast<std::uint32_t>(p);
}

}  // namespace

Philox4x32::Counter Philox4x32::apply(Counter ctr, Key key) noexcept {
  for (int round = 0; round < 10; ++round) {
    if (round > 0) {
      key[0] += kWeyl0;
      key[1] += kWeyl1;
    }
    std::uint32_t hi0, lo0, hi1, lo1;
    mulhilo(kMul0, ctr[0], hi0, lo0);
    mulhilo(kMul1, ctr[2], hi1, lo1);
    ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
  }
  return ctr;
}

GaussianStream::GaussianStream(Seed seed, std::uint32_t substream, bool negate)
    : key_{static_cast<std::uint32_t>(seed.master),
           static_cast<std::uint32_t>(seed.master >> 32)},
      base_{0u, substream, static_cast<std::uint32_t>(seed.stream_index),
            static_cast<std::uint32_t>(seed.stream_index >> 32)},
      negate_(negate) {}

std::uint64_t GaussianStream::next_bits() {
  if (buffered_words_ == 0) {
    // 2^32 blocks of 128 bits per substream; far beyond any path length here.
    require(block_ != UINT32_MAX, ErrorCode::InvalidArgument, "Gaussian substream exhausted");
    Philox4x32::Counter ctr = base_;
    ctr[0] = block_++;
    buffer_ = Philox4x32::apply(ctr, key_);
    buffered_words_ = 4;
  }
  const int i = 4 - buffered_words_;
  buffered_words_ -= 2;
  return (static_cast<std::uint64_t>(buffer_[i]) << 32) | buffer_[i + 1];
}

double GaussianStream::next_symmetric_uniform() {
  // 53-bit uniform on (-1, 1), never exactly +-1.
  const std::uint64_t bits = next_bits() >> 11;
  return (static_cast<double>(bits) + 0.5) * 0x1.0p-52 - 1.0;
}

double GaussianStream::next() {
  double z;
  if (has_cached_) {
    has_cached_ = false;
    z = cached_;
  } else {
    double u, v, s;
    do {
      u = next_symmetric_uniform();
      v = next_symmetric_uniform();
      s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double factor = std::sqrt(-2.0 * std::log(s) / s);
    cached_ = v * factor;
    has_cached_ = true;
    z = u * factor;
  }
  return negate_ ? -z : z;
}

void GaussianStream::fill(std::span<double> out) {
  for (double& x : out) x = next();
}

std::vector<double> gaussian_stream(Seed seed, std::size_t count) {
  std::vector<double> out(count);
  GaussianStream(seed).fill(out);
  return out;
}

}  // namespace fcir
