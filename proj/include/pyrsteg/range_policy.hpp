#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

namespace pyrsteg {

inline constexpr int max_replacement_depth = 4;

// One entry of a replacement-depth table: cover bytes whose value falls in
// [low, high] may have their `depth` lowest bits rewritten.
struct RangeEntry {
    int low = 0;
    int high = 0;
    int depth = 0;

    bool operator==(const RangeEntry&) const = default;
};

// Checks sortedness, exact coverage of [0,255], the depth bound, and the
// closure alignment: low and high+1 must be multiples of 2^depth, so that
// rewriting the permitted bits can never move a byte into another range.
// Returns one message per violation; empty means valid.
std::vector<std::string> validate_entries(std::span<const RangeEntry> entries);

// Immutable, validated partition of byte values [0,255] into depth ranges.
// The closure alignment guarantees embedder and extractor derive the same
// depth from a byte before and after replacement. The table is a shared
// parameter of the two sides, like a key: extraction needs the exact table
// used for embedding.
class RangeTable {
public:
    // [0,15]->0  [16,31]->1  [32,63]->3  [64,191]->1  [192,223]->4  [224,255]->2
    // Depth 0 near zero keeps silent-zone bytes untouched; the deep buckets
    // sit in the upper ranges. Average payload on typical byte distributions
    // lands around 17-21% of the cover size.
    static RangeTable default_table();

    // Throws Error(InvalidTable) listing every violation.
    static RangeTable from_entries(std::vector<RangeEntry> entries);

    // Text format: one `low high depth` triple per line, decimal; blank
    // lines and lines starting with '#' are ignored.
    static RangeTable load_file(const std::filesystem::path& path);

    int classify(uint8_t value) const { return depth_by_value_[value]; }
    const std::vector<RangeEntry>& entries() const { return entries_; }

    bool operator==(const RangeTable& other) const { return entries_ == other.entries_; }

private:
    explicit RangeTable(std::vector<RangeEntry> entries);

    std::vector<RangeEntry> entries_;
    std::array<uint8_t, 256> depth_by_value_{};
};

// Embeddable bits in a data region: the sum of classify(b) over every byte
// of each complete 21-byte pyramid block. The tail past the last full block
// is never written and counts zero.
uint64_t capacity_bits(std::span<const uint8_t> data, const RangeTable& table);

}  // namespace pyrsteg
