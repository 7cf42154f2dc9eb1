#ifndef PUZZLEGEN_CORE_RNG_HPP
#define PUZZLEGEN_CORE_RNG_HPP

#include <cstdint>
#include <vector>

namespace pzg {

// Deterministic, platform-independent random stream. Each generation job
// owns stream(master_seed, job_index); streams for distinct job indices are
// statistically independent and replay identically from construction.
class RngStream {
public:
    RngStream() : RngStream(0, 0) {}
    RngStream(std::uint64_t master_seed, std::uint64_t job_index);

    std::uint64_t masterSeed() const { return master_seed_; }
    std::uint64_t jobIndex() const { return job_index_; }
    std::uint64_t position() const { return position_; }

    std::uint64_t nextU64();

    // Uniform over [0, n); n must be positive.
    std::uint64_t below(std::uint64_t n);

    // Uniform over the inclusive range [lo, hi].
    std::int64_t rangeInclusive(std::int64_t lo, std::int64_t hi);

    bool coin() { return (nextU64() >> 63) != 0; }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

    // Derives an unrelated child stream; used for nested deterministic
    // shuffles (e.g. partition per seed/category).
    RngStream child(std::uint64_t tag) const;

private:
    std::uint64_t master_seed_;
    std::uint64_t job_index_;
    std::uint64_t position_ = 0;
    std::uint64_t s_[4];
};

}  // namespace pzg

#endif
