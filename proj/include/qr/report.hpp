#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

namespace qr::report {

inline constexpr const char* tool_version = "0.1.0";

// conventions stamped into every output so numbers are interpretable
// without the source at hand
inline const std::vector<std::string>& convention_lines() {
    static const std::vector<std::string> lines = {
        "convention: packet size = 2 * position std of |psi|^2",
        "convention: branch force = sign * moment * field gradient",
        "convention: hbar = h / (2 pi), h = 6.62607015e-34 J s",
    };
    return lines;
}

// shortest decimal string that round-trips the double
std::string double_repr(double v);

std::string hash_hex(std::uint64_t h);

// No timestamps and no thread counts here: identical config + seed must
// produce byte-identical files regardless of when and how they were run.
struct Provenance {
    std::string version = tool_version;
    std::uint64_t config_hash = 0;
    std::uint64_t seed = 0;
};

// '#'-prefixed provenance + conventions header block for CSV files
void write_csv_header(std::ostream& os, const Provenance& p);

// one CSV table: column names, then rows; minimal RFC quoting
void write_csv(std::ostream& os, const Provenance& p,
               const std::vector<std::string>& columns,
               const std::vector<std::vector<std::string>>& rows);

nlohmann::ordered_json provenance_json(const Provenance& p);

} // namespace qr::report
