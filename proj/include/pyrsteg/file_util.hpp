#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

namespace pyrsteg {

std::vector<uint8_t> read_binary_file(const std::filesystem::path& path);

void write_binary_file(const std::filesystem::path& path, std::span<const uint8_t> bytes);

// Writes to a sibling temp file and renames it over the target, so a failed
// command never leaves a partial output behind.
void write_file_atomic(const std::filesystem::path& path, std::span<const uint8_t> bytes);
void write_file_atomic(const std::filesystem::path& path, const std::string& text);

}  // namespace pyrsteg
