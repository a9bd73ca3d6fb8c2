#pragma once

#include <cstdint>
#include <random>

namespace qp {

namespace detail {
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}
}  // namespace detail

/// Reproducible random stream: identical (seed, stream_id) pairs give
/// identical draw sequences; distinct stream ids are independent streams.
class RngStream {
  public:
    explicit RngStream(std::uint64_t seed, std::uint64_t stream_id = 0)
        : seed_(seed), stream_id_(stream_id),
          eng_(detail::splitmix64(seed ^ detail::splitmix64(stream_id + 0x632be59bd9b4e019ULL))) {}

    /// Uniform double in [0, 1) with 53 random bits (platform independent).
    double next_double() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    std::uint64_t next_u64() { return eng_(); }

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream_id() const { return stream_id_; }

  private:
    std::uint64_t seed_, stream_id_;
    std::mt19937_64 eng_;
};

}  // namespace qp
