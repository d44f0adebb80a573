#include "pyrsteg/range_policy.hpp"

#include <fstream>
#include <sstream>

#include "pyrsteg/errors.hpp"
#include "pyrsteg/pyramid.hpp"

namespace pyrsteg {

std::vector<std::string> validate_entries(std::span<const RangeEntry> entries) {
    std::vector<std::string> violations;
    auto describe = [](const RangeEntry& e) {
        std::ostringstream os;
        os << "[" << e.low << "," << e.high << "]->" << e.depth;
        return os.str();
    };

    if (entries.empty()) {
        violations.push_back("table is empty");
        return violations;
    }

    int expected_low = 0;
    for (size_t i = 0; i < entries.size(); ++i) {
        const RangeEntry& e = entries[i];
        const std::string tag = "entry " + std::to_string(i) + " " + describe(e);

        if (e.low < 0 || e.high > 255 || e.low > e.high)
            violations.push_back(tag + ": bounds must satisfy 0 <= low <= high <= 255");
        if (e.depth < 0 || e.depth > max_replacement_depth)
            violations.push_back(tag + ": depth outside 0.." +
                                 std::to_string(max_replacement_depth));
        if (e.low != expected_low)
            violations.push_back(tag + ": expected low " + std::to_string(expected_low) +
                                 " (entries must be sorted, disjoint and cover 0..255)");

        if (e.depth >= 0 && e.depth <= max_replacement_depth) {
            const int step = 1 << e.depth;
            if (e.low % step != 0)
                violations.push_back(tag + ": low " + std::to_string(e.low) +
                                     " is not a multiple of " + std::to_string(step));
            if ((e.high + 1) % step != 0)
                violations.push_back(tag + ": high+1 " + std::to_string(e.high + 1) +
                                     " is not a multiple of " + std::to_string(step));
        }
        expected_low = e.high + 1;
    }
    if (expected_low != 256)
        violations.push_back("entries end at " + std::to_string(expected_low - 1) +
                             ", not 255 (incomplete coverage)");
    return violations;
}

RangeTable::RangeTable(std::vector<RangeEntry> entries) : entries_(std::move(entries)) {
    for (const RangeEntry& e : entries_)
        for (int b = e.low; b <= e.high; ++b)
            depth_by_value_[static_cast<size_t>(b)] = static_cast<uint8_t>(e.depth);
}

RangeTable RangeTable::default_table() {
    return RangeTable({{0, 15, 0},
                       {16, 31, 1},
                       {32, 63, 3},
                       {64, 191, 1},
                       {192, 223, 4},
                       {224, 255, 2}});
}

RangeTable RangeTable::from_entries(std::vector<RangeEntry> entries) {
    const auto violations = validate_entries(entries);
    if (!violations.empty()) {
        std::string msg = "invalid range table:";
        for (const auto& v : violations) msg += "\n  " + v;
        throw Error(Errc::InvalidTable, msg);
    }
    return RangeTable(std::move(entries));
}

RangeTable RangeTable::load_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw Error(Errc::IoFailure, "cannot open range table " + path.string());

    std::vector<RangeEntry> entries;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;

        std::istringstream fields(line);
        RangeEntry e;
        if (!(fields >> e.low >> e.high >> e.depth))
            throw Error(Errc::InvalidTable, path.string() + ":" + std::to_string(line_no) +
                                                ": expected `low high depth`, got \"" + line +
                                                "\"");
        std::string extra;
        if (fields >> extra)
            throw Error(Errc::InvalidTable, path.string() + ":" + std::to_string(line_no) +
                                                ": trailing token \"" + extra + "\"");
        entries.push_back(e);
    }
    return from_entries(std::move(entries));
}

uint64_t capacity_bits(std::span<const uint8_t> data, const RangeTable& table) {
    const size_t usable = block_count(data.size()) * pyramid_block_bytes;
    uint64_t bits = 0;
    for (size_t i = 0; i < usable; ++i)
        bits += static_cast<uint64_t>(table.classify(data[i]));
    return bits;
}

}  // namespace pyrsteg
