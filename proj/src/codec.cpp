#include "pyrsteg/codec.hpp"

#include <limits>
#include <optional>
#include <string>

#include "pyrsteg/bitstream.hpp"
#include "pyrsteg/errors.hpp"
#include "pyrsteg/pyramid.hpp"

namespace pyrsteg {

namespace {

// Visits data indices block by block, pyramid order inside each block.
struct PyramidWalk {
    size_t blocks;
    size_t block = 0;
    size_t step = 0;

    explicit PyramidWalk(size_t data_len) : blocks(block_count(data_len)) {}

    std::optional<size_t> next() {
        if (block == blocks) return std::nullopt;
        const size_t idx = block * pyramid_block_bytes + pyramid_traversal[step];
        if (++step == pyramid_block_bytes) {
            step = 0;
            ++block;
        }
        return idx;
    }
};

struct SequentialWalk {
    size_t len;
    size_t pos = 0;

    std::optional<size_t> next() {
        if (pos == len) return std::nullopt;
        return pos++;
    }
};

template <typename Walk, typename DepthFn>
void embed_stream(std::vector<uint8_t>& data, Walk walk, DepthFn depth_of, BitReader& source) {
    while (!source.empty()) {
        const auto idx = walk.next();
        if (!idx) break;  // caller verified capacity; only hit on exact fits
        const uint8_t b = data[*idx];
        const int k = depth_of(b);
        if (k == 0) continue;

        int got = 0;
        uint32_t field = 0;
        while (got < k && !source.empty()) {
            field = (field << 1) | static_cast<uint32_t>(source.next_bit());
            ++got;
        }
        if (got < k) {
            // stream ran out mid-byte: keep the original bits below the fill
            const uint32_t keep = static_cast<uint32_t>(b) & ((1u << (k - got)) - 1u);
            field = (field << (k - got)) | keep;
        }
        data[*idx] = embed_byte(b, field, k);
    }
}

uint32_t read_frame_length(const std::vector<uint8_t>& raw) {
    return static_cast<uint32_t>(raw[4]) | (static_cast<uint32_t>(raw[5]) << 8) |
           (static_cast<uint32_t>(raw[6]) << 16) | (static_cast<uint32_t>(raw[7]) << 24);
}

template <typename Walk, typename DepthFn>
std::vector<uint8_t> extract_stream(const std::vector<uint8_t>& data, Walk walk,
                                    DepthFn depth_of, uint64_t available_bits) {
    constexpr uint64_t header_bits = frame_overhead_bytes * 8;
    BitWriter sink;
    uint64_t need = header_bits;
    std::optional<uint64_t> secret_len;

    while (sink.bit_count() < need) {
        const auto idx = walk.next();
        if (!idx) {
            if (!secret_len)
                throw Error(Errc::BadMagic, "no payload frame found (stream ends inside the "
                                            "8-byte header)");
            throw Error(Errc::Truncated,
                        "stream ended after " + std::to_string(sink.bit_count()) + " of " +
                            std::to_string(need) + " frame bits");
        }
        const uint8_t b = data[*idx];
        for (int i = depth_of(b) - 1; i >= 0; --i) sink.push_bit((b >> i) & 1);

        if (!secret_len && sink.bit_count() >= header_bits) {
            const auto& raw = sink.bytes();
            if (!std::equal(frame_magic.begin(), frame_magic.end(), raw.begin()))
                throw Error(Errc::BadMagic,
                            "payload magic mismatch (wrong range table, wrong file, or no "
                            "payload)");
            secret_len = read_frame_length(raw);
            need = header_bits + *secret_len * 8;
            if (need > available_bits)
                throw Error(Errc::Truncated,
                            "frame declares " + std::to_string(*secret_len) +
                                " secret bytes but only " + std::to_string(available_bits) +
                                " bits are recoverable");
        }
    }

    const auto& raw = sink.bytes();
    return {raw.begin() + frame_overhead_bytes,
            raw.begin() + frame_overhead_bytes + static_cast<ptrdiff_t>(*secret_len)};
}

}  // namespace

std::vector<uint8_t> frame_payload(std::span<const uint8_t> secret) {
    std::vector<uint8_t> frame;
    frame.reserve(frame_overhead_bytes + secret.size());
    frame.insert(frame.end(), frame_magic.begin(), frame_magic.end());
    const auto len = static_cast<uint32_t>(secret.size());
    frame.push_back(static_cast<uint8_t>(len & 0xFF));
    frame.push_back(static_cast<uint8_t>((len >> 8) & 0xFF));
    frame.push_back(static_cast<uint8_t>((len >> 16) & 0xFF));
    frame.push_back(static_cast<uint8_t>((len >> 24) & 0xFF));
    frame.insert(frame.end(), secret.begin(), secret.end());
    return frame;
}

uint8_t embed_byte(uint8_t cover, uint32_t bits, int depth) {
    if (depth == 0) return cover;
    const uint32_t mask = (1u << depth) - 1u;
    return static_cast<uint8_t>((cover & ~mask) | (bits & mask));
}

WavAudio embed(const WavAudio& cover, std::span<const uint8_t> secret, const RangeTable& table) {
    if (secret.size() > std::numeric_limits<uint32_t>::max())
        throw Error(Errc::CapacityExceeded, "secret exceeds the 2^32-1 byte frame limit");

    const uint64_t available = capacity_bits(cover.data_bytes, table);
    const uint64_t required = frame_bits(secret.size());
    if (required > available)
        throw Error(Errc::CapacityExceeded, "required " + std::to_string(required) +
                                                " bits, available " + std::to_string(available) +
                                                " bits");

    WavAudio stego = cover;
    const auto frame = frame_payload(secret);
    BitReader source(frame);
    embed_stream(stego.data_bytes, PyramidWalk(stego.data_bytes.size()),
                 [&table](uint8_t b) { return table.classify(b); }, source);
    return stego;
}

std::vector<uint8_t> extract(const WavAudio& stego, const RangeTable& table) {
    return extract_stream(stego.data_bytes, PyramidWalk(stego.data_bytes.size()),
                          [&table](uint8_t b) { return table.classify(b); },
                          capacity_bits(stego.data_bytes, table));
}

WavAudio embed_plain_lsb(const WavAudio& cover, std::span<const uint8_t> secret) {
    if (secret.size() > std::numeric_limits<uint32_t>::max())
        throw Error(Errc::CapacityExceeded, "secret exceeds the 2^32-1 byte frame limit");

    const uint64_t available = cover.data_bytes.size();
    const uint64_t required = frame_bits(secret.size());
    if (required > available)
        throw Error(Errc::CapacityExceeded, "required " + std::to_string(required) +
                                                " bits, available " + std::to_string(available) +
                                                " bits");

    WavAudio stego = cover;
    const auto frame = frame_payload(secret);
    BitReader source(frame);
    embed_stream(stego.data_bytes, SequentialWalk{stego.data_bytes.size()},
                 [](uint8_t) { return 1; }, source);
    return stego;
}

std::vector<uint8_t> extract_plain_lsb(const WavAudio& stego) {
    return extract_stream(stego.data_bytes, SequentialWalk{stego.data_bytes.size()},
                          [](uint8_t) { return 1; }, stego.data_bytes.size());
}

}  // namespace pyrsteg
