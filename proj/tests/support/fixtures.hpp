#pragma once

#include <string>
#include <vector>

#include "oracles.hpp"

namespace fixtures {

// Reference orthogonal partial pair of order 4.
inline const std::vector<std::string> kFigure1P = {"0 1 2 .", "2 0 1 3", "3 . 0 .", ". 2 . 1"};
inline const std::vector<std::string> kFigure1Q = {"0 2 1 .", "3 1 0 2", "1 . 2 .", ". 0 . 3"};

inline std::vector<oracle::Entry> from_rows(const std::vector<std::string>& rows) {
    std::vector<oracle::Entry> out;
    for (std::uint32_t r = 0; r < rows.size(); ++r) {
        std::uint32_t c = 0;
        for (std::size_t i = 0; i < rows[r].size(); ++i) {
            const char ch = rows[r][i];
            if (ch == ' ') {
                continue;
            }
            if (ch != '.') {
                out.emplace_back(r, c, static_cast<std::uint32_t>(ch - '0'));
            }
            ++c;
        }
    }
    return out;
}

inline std::string text(const std::vector<std::string>& rows) {
    std::string out;
    for (const auto& r : rows) {
        out += r + "\n";
    }
    return out;
}

inline std::string path(const std::string& name) { return std::string(OLSEMBED_FIXTURE_DIR) + "/" + name; }

} // namespace fixtures
