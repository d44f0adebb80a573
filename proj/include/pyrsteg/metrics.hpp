#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "pyrsteg/wav_io.hpp"

namespace pyrsteg {

inline constexpr size_t default_zcr_frame_len = 256;

// Sample decoding. 8-bit data is unsigned bytes; 16-bit data is signed
// little-endian pairs (a trailing odd byte is ignored).
//   normalized: amplitude mapped to [0,1] by offsetting signed samples by
//               2^(bits-1) and dividing by 2^bits - 1.
//   centered:   signed amplitude around zero (8-bit samples offset by -128).
std::vector<double> decode_normalized(std::span<const uint8_t> bytes, int bits_per_sample);
std::vector<double> decode_centered(std::span<const uint8_t> bytes, int bits_per_sample);

// Mean squared error, (1/N) * sum((x_i - y_i)^2).
double mse(std::span<const double> x, std::span<const double> y);

// 10*log10(255/mse), the form the quality tables in this domain print.
// psnr_standard_db is the conventional 10*log10(255^2/mse) alongside it.
// Both throw Error(ZeroMse) for mse <= 0; identical signals are reported
// through QualityReport::identical instead.
double psnr_eq2_db(double mse_value);
double psnr_standard_db(double mse_value);

// Per-frame zero-crossing rate: sum |sgn x(n) - sgn x(n-1)| / (2N) over a
// frame of N samples, with sgn(0) = +1. The trailing partial frame is
// dropped. Expects centered samples.
std::vector<double> zcr(std::span<const double> samples, size_t frame_len);

std::array<uint64_t, 256> amplitude_histogram(std::span<const uint8_t> bytes);

// 100 * secret_bytes / cover_bytes, the payload accounting used for whole
// files (cover_bytes is the full file size, not just the data region).
double payload_percent(uint64_t secret_bytes, uint64_t cover_bytes);

struct QualityReport {
    double mse = 0.0;
    bool identical = false;        // mse == 0; PSNR fields are +infinity
    double psnr_eq2 = 0.0;
    double psnr_standard = 0.0;
    double payload = 0.0;          // percent of cover file size
    size_t zcr_frame_len = default_zcr_frame_len;
    std::vector<double> zcr_frames;               // stego signal
    std::array<uint64_t, 256> histogram{};        // stego data bytes
};

// Cover/stego comparison: MSE and PSNR between the decoded data regions,
// payload percentage from the recovered secret size, ZCR series and
// amplitude histogram of the stego. Throws Error(LengthMismatch) when the
// data regions differ in size.
QualityReport analyze(const WavAudio& cover, const WavAudio& stego, uint64_t secret_bytes,
                      size_t zcr_frame_len = default_zcr_frame_len);

std::string report_to_json(const QualityReport& report);

}  // namespace pyrsteg
