#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "pyrsteg/range_policy.hpp"
#include "pyrsteg/wav_io.hpp"

namespace pyrsteg {

// Payload framing: 4-byte magic + u32 little-endian secret length + secret
// bytes. The frame makes extraction self-terminating and costs 8 bytes of
// capacity.
inline constexpr std::array<uint8_t, 4> frame_magic = {'P', 'Y', 'R', '1'};
inline constexpr size_t frame_overhead_bytes = 8;

std::vector<uint8_t> frame_payload(std::span<const uint8_t> secret);

inline uint64_t frame_bits(size_t secret_len) {
    return (frame_overhead_bytes + static_cast<uint64_t>(secret_len)) * 8;
}

// Replaces the `depth` lowest bits of a cover byte with `bits`; the first
// bit taken from the stream lands at position depth-1. depth 0 returns the
// byte unchanged.
uint8_t embed_byte(uint8_t cover, uint32_t bits, int depth);

// Walks complete 21-byte blocks in pyramid order, consuming classify(byte)
// bits of the framed secret per visited byte. Bytes after the stream is
// exhausted, and the tail past the last block, stay untouched. Throws
// Error(CapacityExceeded) before modifying anything if the frame does not
// fit.
WavAudio embed(const WavAudio& cover, std::span<const uint8_t> secret, const RangeTable& table);

// Inverse walk with the same table. Throws Error(BadMagic) when the first
// 32 recovered bits are not "PYR1" (wrong table, wrong file, or no
// payload) and Error(Truncated) when the stream ends before the declared
// secret length is recovered.
std::vector<uint8_t> extract(const WavAudio& stego, const RangeTable& table);

// Classic 1-bit-per-byte LSB baseline: sequential order over every data
// byte, same frame format. Kept for side-by-side quality comparisons.
WavAudio embed_plain_lsb(const WavAudio& cover, std::span<const uint8_t> secret);
std::vector<uint8_t> extract_plain_lsb(const WavAudio& stego);

}  // namespace pyrsteg
