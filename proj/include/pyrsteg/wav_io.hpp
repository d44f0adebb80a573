#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

namespace pyrsteg {

enum class HeaderMode {
    Compat44,    // blind split after the first 44 bytes
    RiffChunks,  // chunk-accurate walk of the RIFF container
};

// A WAV file split into an immutable shell and the embeddable data region.
// serialize_wav(parse_wav(x)) is byte-identical to x, and no operation in
// this library ever rewrites prefix_bytes or suffix_bytes.
struct WavAudio {
    std::vector<uint8_t> prefix_bytes;  // everything before the data-chunk payload
    std::vector<uint8_t> data_bytes;    // the embeddable region
    std::vector<uint8_t> suffix_bytes;  // pad byte and trailing chunks, if any
    int bits_per_sample = 0;            // 8 or 16
    int num_channels = 0;
    int sample_rate = 0;

    size_t total_size() const {
        return prefix_bytes.size() + data_bytes.size() + suffix_bytes.size();
    }
};

// Compat44 splits after byte 44 like classic tools that assume a canonical
// header; RiffChunks walks RIFF/WAVE chunks and finds the real data payload,
// keeping LIST/fact/trailing chunks intact. Only PCM with 8 or 16 bits per
// sample is accepted.
WavAudio parse_wav(std::span<const uint8_t> bytes, HeaderMode mode);

std::vector<uint8_t> serialize_wav(const WavAudio& audio);

WavAudio load_wav(const std::filesystem::path& path, HeaderMode mode);
void save_wav(const std::filesystem::path& path, const WavAudio& audio);

}  // namespace pyrsteg
