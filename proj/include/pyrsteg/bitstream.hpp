#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace pyrsteg {

// Reads bits from a byte buffer, most significant bit of each byte first.
class BitReader {
public:
    explicit BitReader(std::span<const uint8_t> bytes) : bytes_(bytes) {}

    size_t remaining() const { return bytes_.size() * 8 - cursor_; }
    bool empty() const { return remaining() == 0; }

    // Precondition: !empty().
    int next_bit() {
        const size_t byte = cursor_ / 8;
        const size_t bit = cursor_ % 8;
        ++cursor_;
        return (bytes_[byte] >> (7 - bit)) & 1;
    }

private:
    std::span<const uint8_t> bytes_;
    size_t cursor_ = 0;
};

// Collects bits most-significant-first into a growing byte buffer.
class BitWriter {
public:
    void push_bit(int bit) {
        if (count_ % 8 == 0) bytes_.push_back(0);
        if (bit) bytes_.back() |= static_cast<uint8_t>(0x80u >> (count_ % 8));
        ++count_;
    }

    size_t bit_count() const { return count_; }

    // The last byte is partial unless bit_count() is a multiple of 8.
    const std::vector<uint8_t>& bytes() const { return bytes_; }

private:
    std::vector<uint8_t> bytes_;
    size_t count_ = 0;
};

}  // namespace pyrsteg
