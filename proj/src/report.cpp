#include "qr/report.hpp"

#include <charconv>
#include <cmath>

namespace qr::report {

std::string double_repr(double v) {
    char buf[40];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

std::string hash_hex(std::uint64_t h) {
    char buf[17];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, h, 16);
    std::string s(buf, ptr);
    return std::string(16 - s.size(), '0') + s;
}

namespace {

std::string csv_quote(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos)
        return field;
    std::string out = "\"";
    for (char c : field) {
        out += c;
        if (c == '"')
            out += '"';
    }
    out += '"';
    return out;
}

} // namespace

void write_csv_header(std::ostream& os, const Provenance& p) {
    os << "# tool version " << p.version << "\n";
    os << "# config hash " << hash_hex(p.config_hash) << "\n";
    os << "# seed " << p.seed << "\n";
    for (const auto& line : convention_lines())
        os << "# " << line << "\n";
}

void write_csv(std::ostream& os, const Provenance& p,
               const std::vector<std::string>& columns,
               const std::vector<std::vector<std::string>>& rows) {
    write_csv_header(os, p);
    for (std::size_t i = 0; i < columns.size(); ++i)
        os << (i ? "," : "") << csv_quote(columns[i]);
    os << "\n";
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
            os << (i ? "," : "") << csv_quote(row[i]);
        os << "\n";
    }
}

nlohmann::ordered_json provenance_json(const Provenance& p) {
    nlohmann::ordered_json j;
    j["tool_version"] = p.version;
    j["config_hash"] = hash_hex(p.config_hash);
    j["seed"] = p.seed;
    j["conventions"] = convention_lines();
    return j;
}

} // namespace qr::report
