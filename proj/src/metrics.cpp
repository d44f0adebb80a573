#include "pyrsteg/metrics.hpp"

#include <cmath>
#include <limits>

#include <json.hpp>

#include "pyrsteg/errors.hpp"

namespace pyrsteg {

namespace {

int16_t sample_i16(std::span<const uint8_t> bytes, size_t pos) {
    return static_cast<int16_t>(static_cast<uint16_t>(bytes[pos]) |
                                (static_cast<uint16_t>(bytes[pos + 1]) << 8));
}

void check_bits(int bits_per_sample) {
    if (bits_per_sample != 8 && bits_per_sample != 16)
        throw Error(Errc::UnsupportedFormat,
                    "cannot decode " + std::to_string(bits_per_sample) + " bits per sample");
}

int sgn(double v) { return v >= 0.0 ? 1 : -1; }  // sgn(0) = +1

}  // namespace

std::vector<double> decode_normalized(std::span<const uint8_t> bytes, int bits_per_sample) {
    check_bits(bits_per_sample);
    std::vector<double> out;
    if (bits_per_sample == 8) {
        out.reserve(bytes.size());
        for (uint8_t b : bytes) out.push_back(b / 255.0);
    } else {
        out.reserve(bytes.size() / 2);
        for (size_t i = 0; i + 1 < bytes.size(); i += 2)
            out.push_back((sample_i16(bytes, i) + 32768.0) / 65535.0);
    }
    return out;
}

std::vector<double> decode_centered(std::span<const uint8_t> bytes, int bits_per_sample) {
    check_bits(bits_per_sample);
    std::vector<double> out;
    if (bits_per_sample == 8) {
        out.reserve(bytes.size());
        for (uint8_t b : bytes) out.push_back(static_cast<double>(b) - 128.0);
    } else {
        out.reserve(bytes.size() / 2);
        for (size_t i = 0; i + 1 < bytes.size(); i += 2)
            out.push_back(static_cast<double>(sample_i16(bytes, i)));
    }
    return out;
}

double mse(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size())
        throw Error(Errc::LengthMismatch, "signal lengths differ: " + std::to_string(x.size()) +
                                              " vs " + std::to_string(y.size()));
    if (x.empty())
        throw Error(Errc::EmptySignal, "mse of empty signals is undefined");

    double acc = 0.0;
    for (size_t i = 0; i < x.size(); ++i) {
        const double d = x[i] - y[i];
        acc += d * d;
    }
    return acc / static_cast<double>(x.size());
}

double psnr_eq2_db(double mse_value) {
    if (mse_value <= 0.0)
        throw Error(Errc::ZeroMse, "psnr undefined for mse <= 0 (identical signals)");
    return 10.0 * std::log10(255.0 / mse_value);
}

double psnr_standard_db(double mse_value) {
    if (mse_value <= 0.0)
        throw Error(Errc::ZeroMse, "psnr undefined for mse <= 0 (identical signals)");
    return 10.0 * std::log10(255.0 * 255.0 / mse_value);
}

std::vector<double> zcr(std::span<const double> samples, size_t frame_len) {
    if (frame_len < 2)
        throw Error(Errc::FrameTooShort, "zcr frame length must be at least 2");

    std::vector<double> rates;
    const size_t frames = samples.size() / frame_len;
    rates.reserve(frames);
    for (size_t f = 0; f < frames; ++f) {
        const size_t base = f * frame_len;
        int crossings2 = 0;  // sum of |sgn(x_n) - sgn(x_{n-1})|, each crossing adds 2
        for (size_t n = 1; n < frame_len; ++n)
            crossings2 += std::abs(sgn(samples[base + n]) - sgn(samples[base + n - 1]));
        rates.push_back(static_cast<double>(crossings2) / (2.0 * static_cast<double>(frame_len)));
    }
    return rates;
}

std::array<uint64_t, 256> amplitude_histogram(std::span<const uint8_t> bytes) {
    std::array<uint64_t, 256> bins{};
    for (uint8_t b : bytes) ++bins[b];
    return bins;
}

double payload_percent(uint64_t secret_bytes, uint64_t cover_bytes) {
    if (cover_bytes == 0)
        throw Error(Errc::ZeroCover, "payload percentage undefined for an empty cover");
    return 100.0 * static_cast<double>(secret_bytes) / static_cast<double>(cover_bytes);
}

QualityReport analyze(const WavAudio& cover, const WavAudio& stego, uint64_t secret_bytes,
                      size_t zcr_frame_len) {
    const auto x = decode_normalized(cover.data_bytes, cover.bits_per_sample);
    const auto y = decode_normalized(stego.data_bytes, cover.bits_per_sample);

    QualityReport report;
    report.mse = mse(x, y);
    report.identical = report.mse == 0.0;
    if (report.identical) {
        report.psnr_eq2 = std::numeric_limits<double>::infinity();
        report.psnr_standard = std::numeric_limits<double>::infinity();
    } else {
        report.psnr_eq2 = psnr_eq2_db(report.mse);
        report.psnr_standard = psnr_standard_db(report.mse);
    }
    report.payload = payload_percent(secret_bytes, cover.total_size());
    report.zcr_frame_len = zcr_frame_len;
    report.zcr_frames = zcr(decode_centered(stego.data_bytes, cover.bits_per_sample),
                            zcr_frame_len);
    report.histogram = amplitude_histogram(stego.data_bytes);
    return report;
}

std::string report_to_json(const QualityReport& report) {
    nlohmann::json j;
    j["mse"] = report.mse;
    j["identical"] = report.identical;
    // JSON has no infinity; identical signals carry null PSNR fields
    if (report.identical) {
        j["psnr_eq2_db"] = nullptr;
        j["psnr_standard_db"] = nullptr;
    } else {
        j["psnr_eq2_db"] = report.psnr_eq2;
        j["psnr_standard_db"] = report.psnr_standard;
    }
    j["payload_percent"] = report.payload;
    j["zcr_frame_len"] = report.zcr_frame_len;
    j["zcr_frames"] = report.zcr_frames;
    j["amplitude_histogram"] = report.histogram;
    return j.dump(2) + "\n";
}

}  // namespace pyrsteg
