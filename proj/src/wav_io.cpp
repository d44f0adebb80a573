#include "pyrsteg/wav_io.hpp"

#include <cstring>
#include <fstream>
#include <string>

#include "pyrsteg/errors.hpp"
#include "pyrsteg/file_util.hpp"

namespace pyrsteg {

namespace {

constexpr size_t canonical_header_len = 44;

uint16_t read_u16_le(std::span<const uint8_t> b, size_t pos) {
    return static_cast<uint16_t>(b[pos] | (b[pos + 1] << 8));
}

uint32_t read_u32_le(std::span<const uint8_t> b, size_t pos) {
    return static_cast<uint32_t>(b[pos]) | (static_cast<uint32_t>(b[pos + 1]) << 8) |
           (static_cast<uint32_t>(b[pos + 2]) << 16) | (static_cast<uint32_t>(b[pos + 3]) << 24);
}

bool tag_at(std::span<const uint8_t> b, size_t pos, const char* tag) {
    return pos + 4 <= b.size() && std::memcmp(b.data() + pos, tag, 4) == 0;
}

void check_format(uint16_t format_tag, int bits, int channels, long rate) {
    if (format_tag != 1)
        throw Error(Errc::UnsupportedFormat,
                    "audio format tag " + std::to_string(format_tag) + " is not PCM");
    if (bits != 8 && bits != 16)
        throw Error(Errc::UnsupportedFormat,
                    std::to_string(bits) + " bits per sample (only 8 and 16 supported)");
    if (channels < 1 || rate < 1)
        throw Error(Errc::UnsupportedFormat, "fmt chunk has zero channels or sample rate");
}

WavAudio parse_compat44(std::span<const uint8_t> bytes) {
    if (bytes.size() < canonical_header_len + 1)
        throw Error(Errc::TooShort, "need at least 45 bytes, got " + std::to_string(bytes.size()));

    WavAudio out;
    out.prefix_bytes.assign(bytes.begin(), bytes.begin() + canonical_header_len);
    out.data_bytes.assign(bytes.begin() + canonical_header_len, bytes.end());

    // fmt fields sit at fixed offsets in a canonical 44-byte header
    const uint16_t format_tag = read_u16_le(bytes, 20);
    out.num_channels = read_u16_le(bytes, 22);
    out.sample_rate = static_cast<int>(read_u32_le(bytes, 24));
    out.bits_per_sample = read_u16_le(bytes, 34);
    check_format(format_tag, out.bits_per_sample, out.num_channels, out.sample_rate);
    return out;
}

WavAudio parse_riff(std::span<const uint8_t> bytes) {
    if (!tag_at(bytes, 0, "RIFF") || !tag_at(bytes, 8, "WAVE"))
        throw Error(Errc::NotRiff, "missing RIFF/WAVE magic");

    WavAudio out;
    bool have_fmt = false;
    size_t pos = 12;
    while (pos + 8 <= bytes.size()) {
        const size_t payload_start = pos + 8;
        const uint32_t chunk_size = read_u32_le(bytes, pos + 4);

        if (tag_at(bytes, pos, "fmt ")) {
            if (chunk_size < 16 || payload_start + chunk_size > bytes.size())
                throw Error(Errc::UnsupportedFormat, "fmt chunk truncated");
            const uint16_t format_tag = read_u16_le(bytes, payload_start);
            out.num_channels = read_u16_le(bytes, payload_start + 2);
            out.sample_rate = static_cast<int>(read_u32_le(bytes, payload_start + 4));
            out.bits_per_sample = read_u16_le(bytes, payload_start + 14);
            check_format(format_tag, out.bits_per_sample, out.num_channels, out.sample_rate);
            have_fmt = true;
        } else if (tag_at(bytes, pos, "data")) {
            if (!have_fmt)
                throw Error(Errc::UnsupportedFormat, "no fmt chunk before data");
            if (payload_start + chunk_size > bytes.size())
                throw Error(Errc::NoDataChunk, "data chunk payload truncated");
            out.prefix_bytes.assign(bytes.begin(), bytes.begin() + payload_start);
            out.data_bytes.assign(bytes.begin() + payload_start,
                                  bytes.begin() + payload_start + chunk_size);
            out.suffix_bytes.assign(bytes.begin() + payload_start + chunk_size, bytes.end());
            return out;
        }
        // chunks are word-aligned: odd sizes carry a pad byte
        pos = payload_start + chunk_size + (chunk_size & 1);
    }
    throw Error(Errc::NoDataChunk, "no data chunk found");
}

}  // namespace

WavAudio parse_wav(std::span<const uint8_t> bytes, HeaderMode mode) {
    return mode == HeaderMode::Compat44 ? parse_compat44(bytes) : parse_riff(bytes);
}

std::vector<uint8_t> serialize_wav(const WavAudio& audio) {
    std::vector<uint8_t> out;
    out.reserve(audio.total_size());
    out.insert(out.end(), audio.prefix_bytes.begin(), audio.prefix_bytes.end());
    out.insert(out.end(), audio.data_bytes.begin(), audio.data_bytes.end());
    out.insert(out.end(), audio.suffix_bytes.begin(), audio.suffix_bytes.end());
    return out;
}

WavAudio load_wav(const std::filesystem::path& path, HeaderMode mode) {
    return parse_wav(read_binary_file(path), mode);
}

void save_wav(const std::filesystem::path& path, const WavAudio& audio) {
    write_binary_file(path, serialize_wav(audio));
}

}  // namespace pyrsteg
