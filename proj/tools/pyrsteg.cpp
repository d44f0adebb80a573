// Command-line front end: embed/extract secrets in WAV covers, report
// capacity, and run the MSE/PSNR/ZCR quality suite.

#include <cinttypes>
#include <cstdio>
#include <string>

#include <CLI11.hpp>

#include "pyrsteg/codec.hpp"
#include "pyrsteg/errors.hpp"
#include "pyrsteg/file_util.hpp"
#include "pyrsteg/metrics.hpp"
#include "pyrsteg/range_policy.hpp"
#include "pyrsteg/wav_io.hpp"

using namespace pyrsteg;

namespace {

struct Options {
    std::string input;
    std::string input2;
    std::string output;
    std::string table_path;
    bool compat44 = false;
    bool plain_lsb = false;
    bool zcr_csv = false;
    size_t zcr_frame = default_zcr_frame_len;
};

HeaderMode header_mode(const Options& opt) {
    return opt.compat44 ? HeaderMode::Compat44 : HeaderMode::RiffChunks;
}

RangeTable load_table(const Options& opt) {
    return opt.table_path.empty() ? RangeTable::default_table()
                                  : RangeTable::load_file(opt.table_path);
}

uint64_t gross_capacity(const WavAudio& cover, const Options& opt, const RangeTable& table) {
    return opt.plain_lsb ? cover.data_bytes.size() : capacity_bits(cover.data_bytes, table);
}

WavAudio parse_cover(const Options& opt, const std::string& path) {
    return parse_wav(read_binary_file(path), header_mode(opt));
}

int cmd_embed(const Options& opt) {
    const auto table = load_table(opt);
    const auto cover = parse_cover(opt, opt.input);
    const auto secret = read_binary_file(opt.input2);

    const uint64_t available = gross_capacity(cover, opt, table);
    const auto stego = opt.plain_lsb ? embed_plain_lsb(cover, secret)
                                     : embed(cover, secret, table);
    write_file_atomic(opt.output, serialize_wav(stego));

    const uint64_t used = frame_bits(secret.size());
    std::printf("payload: %" PRIu64 " bits used of %" PRIu64 " available (%.2f%%)\n", used,
                available, 100.0 * static_cast<double>(used) / static_cast<double>(available));
    std::printf("wrote %s\n", opt.output.c_str());
    return 0;
}

int cmd_extract(const Options& opt) {
    const auto table = load_table(opt);
    const auto stego = parse_cover(opt, opt.input);
    const auto secret = opt.plain_lsb ? extract_plain_lsb(stego) : extract(stego, table);
    write_file_atomic(opt.output, secret);
    std::printf("recovered %zu bytes\n", secret.size());
    std::printf("wrote %s\n", opt.output.c_str());
    return 0;
}

int cmd_capacity(const Options& opt) {
    const auto table = load_table(opt);
    const auto cover = parse_cover(opt, opt.input);

    const uint64_t gross = gross_capacity(cover, opt, table);
    const uint64_t gross_bytes = gross / 8;
    const uint64_t net_bytes =
        gross_bytes > frame_overhead_bytes ? gross_bytes - frame_overhead_bytes : 0;

    std::printf("data region:    %zu bytes (%zu blocks of %zu)\n", cover.data_bytes.size(),
                cover.data_bytes.size() / 21, static_cast<size_t>(21));
    std::printf("gross capacity: %" PRIu64 " bits (%" PRIu64 " bytes)\n", gross, gross_bytes);
    std::printf("net capacity:   %" PRIu64 " bytes after %zu-byte frame header\n", net_bytes,
                frame_overhead_bytes);
    std::printf("net payload:    %.2f%% of cover file size\n",
                payload_percent(net_bytes, cover.total_size()));
    return 0;
}

int cmd_analyze(const Options& opt) {
    const auto table = load_table(opt);
    const auto cover = parse_cover(opt, opt.input);
    const auto stego = parse_cover(opt, opt.input2);

    uint64_t secret_bytes = 0;
    try {
        secret_bytes = opt.plain_lsb ? extract_plain_lsb(stego).size()
                                     : extract(stego, table).size();
    } catch (const Error&) {
        std::fprintf(stderr, "note: no recoverable payload in %s; payload reported as 0\n",
                     opt.input2.c_str());
    }

    const auto report = analyze(cover, stego, secret_bytes, opt.zcr_frame);
    write_file_atomic(opt.output, report_to_json(report));

    if (report.identical) {
        std::printf("mse:            0 (identical signals)\n");
        std::printf("psnr:           identical marker (infinite)\n");
    } else {
        std::printf("mse:            %.6e\n", report.mse);
        std::printf("psnr (255/mse):   %.3f dB\n", report.psnr_eq2);
        std::printf("psnr (255^2/mse): %.3f dB\n", report.psnr_standard);
    }
    std::printf("payload:        %.2f%%\n", report.payload);
    std::printf("wrote %s\n", opt.output.c_str());
    return 0;
}

int cmd_histogram(const Options& opt) {
    std::string csv;
    if (opt.zcr_csv) {
        const auto wav = parse_cover(opt, opt.input);
        const auto rates = zcr(decode_centered(wav.data_bytes, wav.bits_per_sample),
                               opt.zcr_frame);
        csv = "frame_index,zcr\n";
        for (size_t i = 0; i < rates.size(); ++i)
            csv += std::to_string(i) + "," + std::to_string(rates[i]) + "\n";
        write_file_atomic(opt.output, csv);
        std::printf("wrote %zu zcr frames to %s\n", rates.size(), opt.output.c_str());
        return 0;
    }

    const auto raw = read_binary_file(opt.input);
    std::array<uint64_t, 256> bins{};
    try {
        bins = amplitude_histogram(parse_wav(raw, header_mode(opt)).data_bytes);
    } catch (const Error&) {
        std::fprintf(stderr, "note: %s is not a parseable WAV; histogramming raw bytes\n",
                     opt.input.c_str());
        bins = amplitude_histogram(raw);
    }
    csv = "value,count\n";
    for (size_t v = 0; v < 256; ++v)
        csv += std::to_string(v) + "," + std::to_string(bins[v]) + "\n";
    write_file_atomic(opt.output, csv);
    std::printf("wrote histogram to %s\n", opt.output.c_str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hide files inside uncompressed PCM WAV audio using range-driven "
                 "variable-depth LSB replacement over 21-byte pyramid blocks, and measure "
                 "the result (MSE, PSNR, ZCR, histograms)."};
    app.require_subcommand(1);

    Options opt;
    auto add_common = [&opt](CLI::App* cmd, bool with_baseline) {
        cmd->add_option("--table", opt.table_path,
                        "range table file (`low high depth` per line); embed and extract "
                        "must use the same table");
        cmd->add_flag("--compat-44", opt.compat44,
                      "treat the first 44 bytes as the header instead of walking RIFF chunks");
        if (with_baseline)
            cmd->add_flag("--plain-lsb", opt.plain_lsb,
                          "classic 1-bit-per-byte LSB baseline instead of the pyramid codec");
    };

    auto* embed_cmd = app.add_subcommand("embed", "embed a secret file into a WAV cover");
    embed_cmd->add_option("cover", opt.input, "cover WAV")->required();
    embed_cmd->add_option("secret", opt.input2, "secret file")->required();
    embed_cmd->add_option("output", opt.output, "stego WAV to write")->required();
    add_common(embed_cmd, true);

    auto* extract_cmd = app.add_subcommand("extract", "recover the secret from a stego WAV");
    extract_cmd->add_option("stego", opt.input, "stego WAV")->required();
    extract_cmd->add_option("output", opt.output, "secret file to write")->required();
    add_common(extract_cmd, true);

    auto* capacity_cmd = app.add_subcommand("capacity", "report how much a cover can hold");
    capacity_cmd->add_option("cover", opt.input, "cover WAV")->required();
    add_common(capacity_cmd, true);

    auto* analyze_cmd =
        app.add_subcommand("analyze", "compare cover and stego, write a quality report");
    analyze_cmd->add_option("cover", opt.input, "cover WAV")->required();
    analyze_cmd->add_option("stego", opt.input2, "stego WAV")->required();
    analyze_cmd->add_option("report", opt.output, "JSON report to write")->required();
    analyze_cmd->add_option("--zcr-frame", opt.zcr_frame, "samples per ZCR frame")
        ->default_val(default_zcr_frame_len);
    add_common(analyze_cmd, true);

    auto* histogram_cmd =
        app.add_subcommand("histogram", "write an amplitude-histogram or ZCR CSV");
    histogram_cmd->add_option("input", opt.input, "WAV (or raw byte file)")->required();
    histogram_cmd->add_option("output", opt.output, "CSV to write")->required();
    histogram_cmd->add_flag("--zcr", opt.zcr_csv, "emit per-frame ZCR instead of a histogram");
    histogram_cmd->add_option("--zcr-frame", opt.zcr_frame, "samples per ZCR frame")
        ->default_val(default_zcr_frame_len);
    add_common(histogram_cmd, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;  // usage errors exit 1, --help exits 0
    }

    try {
        if (*embed_cmd) return cmd_embed(opt);
        if (*extract_cmd) return cmd_extract(opt);
        if (*capacity_cmd) return cmd_capacity(opt);
        if (*analyze_cmd) return cmd_analyze(opt);
        if (*histogram_cmd) return cmd_histogram(opt);
    } catch (const Error& e) {
        std::fprintf(stderr, "error (%s): %s\n", errc_name(e.code()), e.what());
        return e.code() == Errc::IoFailure ? 1 : 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 1;
}
