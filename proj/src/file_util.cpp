#include "pyrsteg/file_util.hpp"

#include <fstream>
#include <system_error>

#include "pyrsteg/errors.hpp"

namespace pyrsteg {

std::vector<uint8_t> read_binary_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(Errc::IoFailure, "cannot open " + path.string() + " for reading");
    std::vector<uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                               std::istreambuf_iterator<char>());
    if (in.bad())
        throw Error(Errc::IoFailure, "read failed on " + path.string());
    return bytes;
}

void write_binary_file(const std::filesystem::path& path, std::span<const uint8_t> bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw Error(Errc::IoFailure, "cannot open " + path.string() + " for writing");
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    out.flush();
    if (!out)
        throw Error(Errc::IoFailure, "write failed on " + path.string());
}

void write_file_atomic(const std::filesystem::path& path, std::span<const uint8_t> bytes) {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    try {
        write_binary_file(tmp, bytes);
        std::filesystem::rename(tmp, path);
    } catch (...) {
        std::error_code ec;
        std::filesystem::remove(tmp, ec);
        throw;
    }
}

void write_file_atomic(const std::filesystem::path& path, const std::string& text) {
    write_file_atomic(path, std::span<const uint8_t>(
                                reinterpret_cast<const uint8_t*>(text.data()), text.size()));
}

}  // namespace pyrsteg
