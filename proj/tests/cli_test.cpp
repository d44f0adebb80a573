#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>

#include <json.hpp>

#include "pyrsteg/file_util.hpp"
#include "test_util.hpp"

// PYRSTEG_CLI is injected by CMake as the built binary's path.

namespace fs = std::filesystem;

namespace {

struct Workspace {
    fs::path dir;
    Workspace() {
        dir = fs::temp_directory_path() / ("pyrsteg_cli_" + std::to_string(std::random_device{}()));
        fs::create_directories(dir);
    }
    ~Workspace() {
        std::error_code ec;
        fs::remove_all(dir, ec);
    }
    fs::path operator/(const std::string& name) const { return dir / name; }
};

int run(const std::string& args) {
    const std::string cmd = std::string(PYRSTEG_CLI) + " " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string run_capture(const std::string& args, const fs::path& tmp) {
    const std::string cmd =
        std::string(PYRSTEG_CLI) + " " + args + " >" + tmp.string() + " 2>/dev/null";
    const int status = std::system(cmd.c_str());
    REQUIRE(WIFEXITED(status));
    std::ifstream in(tmp);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write(const fs::path& p, const std::vector<uint8_t>& bytes) {
    pyrsteg::write_binary_file(p, bytes);
}

std::vector<uint8_t> slurp(const fs::path& p) { return pyrsteg::read_binary_file(p); }

}  // namespace

TEST_CASE("cli embed/extract round trip") {
    Workspace ws;
    std::mt19937_64 rng(1);
    const auto cover_file = testutil::make_canonical_wav(16, 2, 44100,
                                                         testutil::random_bytes(rng, 60000));
    const auto secret = testutil::random_bytes(rng, 4000);
    write(ws / "cover.wav", cover_file);
    write(ws / "secret.bin", secret);

    CHECK(run("embed " + (ws / "cover.wav").string() + " " + (ws / "secret.bin").string() + " " +
              (ws / "stego.wav").string()) == 0);
    REQUIRE(fs::exists(ws / "stego.wav"));
    CHECK(slurp(ws / "stego.wav").size() == cover_file.size());

    CHECK(run("extract " + (ws / "stego.wav").string() + " " + (ws / "out.bin").string()) == 0);
    CHECK(slurp(ws / "out.bin") == secret);

    SUBCASE("plain-lsb variant") {
        CHECK(run("embed --plain-lsb " + (ws / "cover.wav").string() + " " +
                  (ws / "secret.bin").string() + " " + (ws / "stego2.wav").string()) == 0);
        CHECK(run("extract --plain-lsb " + (ws / "stego2.wav").string() + " " +
                  (ws / "out2.bin").string()) == 0);
        CHECK(slurp(ws / "out2.bin") == secret);
    }

    SUBCASE("compat-44 agrees with riff mode on canonical covers") {
        CHECK(run("embed --compat-44 " + (ws / "cover.wav").string() + " " +
                  (ws / "secret.bin").string() + " " + (ws / "stego44.wav").string()) == 0);
        CHECK(slurp(ws / "stego44.wav") == slurp(ws / "stego.wav"));
    }
}

TEST_CASE("cli failure modes honor the exit-code contract") {
    Workspace ws;
    std::mt19937_64 rng(2);
    const auto cover_file =
        testutil::make_canonical_wav(8, 1, 8000, testutil::random_bytes(rng, 2100));
    write(ws / "cover.wav", cover_file);

    SUBCASE("missing cover is an IO error") {
        write(ws / "s.bin", {1, 2, 3});
        CHECK(run("embed " + (ws / "nope.wav").string() + " " + (ws / "s.bin").string() + " " +
                  (ws / "o.wav").string()) == 1);
        CHECK(!fs::exists(ws / "o.wav"));
    }

    SUBCASE("oversized secret is a domain error and writes nothing") {
        write(ws / "big.bin", testutil::random_bytes(rng, 5000));
        CHECK(run("embed " + (ws / "cover.wav").string() + " " + (ws / "big.bin").string() + " " +
                  (ws / "o.wav").string()) == 2);
        CHECK(!fs::exists(ws / "o.wav"));
        // no orphaned temp files either
        size_t entries = 0;
        for (auto const& e : fs::directory_iterator(ws.dir)) {
            (void)e;
            ++entries;
        }
        CHECK(entries == 2);
    }

    SUBCASE("extracting from a pristine cover is a domain error") {
        CHECK(run("extract " + (ws / "cover.wav").string() + " " + (ws / "o.bin").string()) == 2);
        CHECK(!fs::exists(ws / "o.bin"));
    }

    SUBCASE("mismatched table fails extraction") {
        write(ws / "secret.bin", {9, 9, 9, 9});
        {
            std::ofstream t(ws / "other.tbl");
            t << "0 255 1\n";
        }
        CHECK(run("embed " + (ws / "cover.wav").string() + " " + (ws / "secret.bin").string() +
                  " " + (ws / "stego.wav").string()) == 0);
        CHECK(run("extract --table " + (ws / "other.tbl").string() + " " +
                  (ws / "stego.wav").string() + " " + (ws / "o.bin").string()) == 2);
        CHECK(!fs::exists(ws / "o.bin"));
    }

    SUBCASE("invalid table file is rejected before any output") {
        write(ws / "secret.bin", {1});
        {
            std::ofstream t(ws / "bad.tbl");
            t << "10 40 2\n";
        }
        CHECK(run("embed --table " + (ws / "bad.tbl").string() + " " +
                  (ws / "cover.wav").string() + " " + (ws / "secret.bin").string() + " " +
                  (ws / "o.wav").string()) == 2);
        CHECK(!fs::exists(ws / "o.wav"));
    }

    SUBCASE("usage errors exit 1") {
        CHECK(run("embed") == 1);
        CHECK(run("frobnicate x") == 1);
    }
}

TEST_CASE("cli capacity output") {
    Workspace ws;
    // 21 bytes of value 63 -> 63 gross bits, 0 net bytes
    write(ws / "tiny.wav",
          testutil::make_canonical_wav(8, 1, 8000, std::vector<uint8_t>(21, 63)));
    const auto out = run_capture("capacity " + (ws / "tiny.wav").string(), ws / "cap.txt");
    CHECK(out.find("gross capacity: 63 bits") != std::string::npos);
    CHECK(out.find("net capacity:   0 bytes") != std::string::npos);

    // all-zero data region: nothing usable
    write(ws / "zero.wav",
          testutil::make_canonical_wav(8, 1, 8000, std::vector<uint8_t>(2100, 0)));
    const auto zero_out = run_capture("capacity " + (ws / "zero.wav").string(), ws / "cap0.txt");
    CHECK(zero_out.find("gross capacity: 0 bits") != std::string::npos);

    // uniform random cover: printed percentage tracks the analytic
    // expectation, mean depth / 8 of the byte distribution (~21.1% for the
    // default table)
    std::mt19937_64 rng(6);
    write(ws / "uniform.wav",
          testutil::make_canonical_wav(8, 1, 44100, testutil::random_bytes(rng, 200000)));
    const auto uni = run_capture("capacity " + (ws / "uniform.wav").string(), ws / "capu.txt");
    const auto pos = uni.find("net payload:    ");
    REQUIRE(pos != std::string::npos);
    const double pct = std::stod(uni.substr(pos + 16));
    CHECK(pct == doctest::Approx(21.09).epsilon(0.02));
}

TEST_CASE("cli analyze") {
    Workspace ws;
    std::mt19937_64 rng(3);
    const auto cover_file =
        testutil::make_canonical_wav(16, 1, 44100, testutil::random_bytes(rng, 40000));
    write(ws / "cover.wav", cover_file);
    write(ws / "secret.bin", testutil::random_bytes(rng, 1000));

    SUBCASE("identical files report the identical marker") {
        CHECK(run("analyze " + (ws / "cover.wav").string() + " " + (ws / "cover.wav").string() +
                  " " + (ws / "report.json").string()) == 0);
        std::ifstream in(ws / "report.json");
        const auto j = nlohmann::json::parse(in);
        CHECK(j["identical"] == true);
        CHECK(j["mse"] == 0.0);
        CHECK(j["psnr_eq2_db"].is_null());
    }

    SUBCASE("embed-then-analyze reports the payload percentage") {
        REQUIRE(run("embed " + (ws / "cover.wav").string() + " " + (ws / "secret.bin").string() +
                    " " + (ws / "stego.wav").string()) == 0);
        CHECK(run("analyze " + (ws / "cover.wav").string() + " " + (ws / "stego.wav").string() +
                  " " + (ws / "report.json").string()) == 0);
        std::ifstream in(ws / "report.json");
        const auto j = nlohmann::json::parse(in);
        CHECK(j["identical"] == false);
        const double expected_payload = 100.0 * 1000.0 / static_cast<double>(cover_file.size());
        CHECK(j["payload_percent"].get<double>() == doctest::Approx(expected_payload));
        CHECK(j["mse"].get<double>() > 0.0);
        CHECK(j["amplitude_histogram"].size() == 256);
    }

    SUBCASE("length mismatch exits 2") {
        const auto shorter =
            testutil::make_canonical_wav(16, 1, 44100, testutil::random_bytes(rng, 30000));
        write(ws / "short.wav", shorter);
        CHECK(run("analyze " + (ws / "cover.wav").string() + " " + (ws / "short.wav").string() +
                  " " + (ws / "report.json").string()) == 2);
        CHECK(!fs::exists(ws / "report.json"));
    }
}

TEST_CASE("cli histogram and zcr csv") {
    Workspace ws;

    SUBCASE("raw byte file fallback") {
        write(ws / "bytes.bin", {5, 5, 5});
        CHECK(run("histogram " + (ws / "bytes.bin").string() + " " + (ws / "h.csv").string()) ==
              0);
        std::ifstream in(ws / "h.csv");
        std::string line;
        std::getline(in, line);
        CHECK(line == "value,count");
        bool found = false;
        while (std::getline(in, line)) found |= line == "5,3";
        CHECK(found);
    }

    SUBCASE("cover and stego histograms have equal totals") {
        std::mt19937_64 rng(4);
        write(ws / "cover.wav",
              testutil::make_canonical_wav(8, 1, 8000, testutil::random_bytes(rng, 10000)));
        write(ws / "secret.bin", testutil::random_bytes(rng, 200));
        REQUIRE(run("embed " + (ws / "cover.wav").string() + " " + (ws / "secret.bin").string() +
                    " " + (ws / "stego.wav").string()) == 0);
        REQUIRE(run("histogram " + (ws / "cover.wav").string() + " " + (ws / "hc.csv").string()) ==
                0);
        REQUIRE(run("histogram " + (ws / "stego.wav").string() + " " + (ws / "hs.csv").string()) ==
                0);

        auto total = [](const fs::path& p) {
            std::ifstream in(p);
            std::string line;
            std::getline(in, line);  // header
            uint64_t sum = 0;
            while (std::getline(in, line))
                sum += std::stoull(line.substr(line.find(',') + 1));
            return sum;
        };
        CHECK(total(ws / "hc.csv") == total(ws / "hs.csv"));
    }

    SUBCASE("zcr of an alternating-sign fixture is close to 1") {
        // 16-bit samples +1000, -1000, ...
        std::vector<uint8_t> data;
        for (int i = 0; i < 2048; ++i) {
            const int16_t v = (i % 2) ? -1000 : 1000;
            data.push_back(static_cast<uint8_t>(v & 0xFF));
            data.push_back(static_cast<uint8_t>((v >> 8) & 0xFF));
        }
        write(ws / "alt.wav", testutil::make_canonical_wav(16, 1, 8000, data));
        CHECK(run("histogram --zcr " + (ws / "alt.wav").string() + " " + (ws / "z.csv").string()) ==
              0);
        std::ifstream in(ws / "z.csv");
        std::string line;
        std::getline(in, line);
        CHECK(line == "frame_index,zcr");
        size_t rows = 0;
        while (std::getline(in, line)) {
            const double v = std::stod(line.substr(line.find(',') + 1));
            CHECK(v == doctest::Approx(1.0).epsilon(0.01));
            ++rows;
        }
        CHECK(rows == 2048 / 256);
    }

    SUBCASE("zcr on a non-wav input is a domain error") {
        write(ws / "bytes.bin", {1, 2, 3});
        CHECK(run("histogram --zcr " + (ws / "bytes.bin").string() + " " +
                  (ws / "z.csv").string()) == 2);
    }
}
