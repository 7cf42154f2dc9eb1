#include "core/rng.hpp"

#include "core/errors.hpp"

namespace pzg {

namespace {

std::uint64_t splitmix64(std::uint64_t& x) {
    x += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

}  // namespace

RngStream::RngStream(std::uint64_t master_seed, std::uint64_t job_index)
    : master_seed_(master_seed), job_index_(job_index) {
    std::uint64_t mix = master_seed ^ (0x9e3779b97f4a7c15ULL * (job_index + 1));
    for (auto& w : s_) w = splitmix64(mix);
}

std::uint64_t RngStream::nextU64() {
    // xoshiro256**
    std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    ++position_;
    return result;
}

std::uint64_t RngStream::below(std::uint64_t n) {
    if (n == 0) raise(ErrorClass::Sampling, "EmptyDomain", "uniform draw over empty range");
    // Rejection sampling to avoid modulo bias.
    std::uint64_t threshold = (0 - n) % n;
    for (;;) {
        std::uint64_t r = nextU64();
        if (r >= threshold) return r % n;
    }
}

std::int64_t RngStream::rangeInclusive(std::int64_t lo, std::int64_t hi) {
    if (lo > hi)
        raise(ErrorClass::Sampling, "EmptyDomain",
              "interval [" + std::to_string(lo) + ", " + std::to_string(hi) + "] is empty");
    std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
    if (span == 0) {  // full 64-bit range
        return static_cast<std::int64_t>(nextU64());
    }
    return lo + static_cast<std::int64_t>(below(span));
}

RngStream RngStream::child(std::uint64_t tag) const {
    std::uint64_t mix = master_seed_ ^ rotl(job_index_ + 0x632be59bd9b4e019ULL, 31) ^ tag;
    RngStream out;
    out.master_seed_ = master_seed_;
    out.job_index_ = job_index_;
    for (auto& w : out.s_) w = splitmix64(mix);
    return out;
}

}  // namespace pzg
