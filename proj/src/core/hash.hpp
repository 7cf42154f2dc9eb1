#ifndef PUZZLEGEN_CORE_HASH_HPP
#define PUZZLEGEN_CORE_HASH_HPP

#include <cstdint>
#include <string>
#include <string_view>

namespace pzg {

struct Digest128 {
    std::uint64_t hi = 0;
    std::uint64_t lo = 0;

    bool operator==(const Digest128&) const = default;
    bool operator<(const Digest128& o) const {
        return hi != o.hi ? hi < o.hi : lo < o.lo;
    }

    std::string hex() const;         // 32 hex chars
    std::string hexPrefix8() const;  // first 8 hex chars (instance ids)
};

// MurmurHash3 x64 128-bit. Non-cryptographic; collisions are re-checked by
// comparing canonical documents wherever digests are used for dedup.
Digest128 hash128(std::string_view data, std::uint64_t seed = 0);

}  // namespace pzg

#endif
