#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace pyrsteg {

// The data region is processed as consecutive 21-byte blocks laid out as a
// triangle with rows of 1,2,3,4,5,6 bytes; row r starts at the triangular
// number r(r+1)/2. Inside a block both codec sides visit the left edge
// first (row starts stepping by 1,2,3,4,5 - an arithmetic progression),
// then each successive diagonal. The permutation is part of the stego
// format and must not change.
inline constexpr size_t pyramid_block_bytes = 21;

inline constexpr std::array<uint8_t, pyramid_block_bytes> pyramid_traversal = {
    0, 1, 3, 6, 10, 15,  // left edge (triangular numbers)
    2, 4, 7, 11, 16,     // then one diagonal at a time
    5, 8, 12, 17,
    9, 13, 18,
    14, 19,
    20,
};

struct PyramidBlock {
    size_t base_offset = 0;  // multiple of pyramid_block_bytes
};

inline size_t block_count(size_t data_len) { return data_len / pyramid_block_bytes; }

// Complete blocks only; the trailing data_len % 21 bytes belong to no block.
inline std::vector<PyramidBlock> blocks(size_t data_len) {
    std::vector<PyramidBlock> out;
    out.reserve(block_count(data_len));
    for (size_t base = 0; base + pyramid_block_bytes <= data_len; base += pyramid_block_bytes)
        out.push_back(PyramidBlock{base});
    return out;
}

}  // namespace pyrsteg
