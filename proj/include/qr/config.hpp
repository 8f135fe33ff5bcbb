#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qr {

// Flat INI-style text:
//   # comment (also ;)
//   [section]
//   key = value        value runs to end of line, surrounding blanks trimmed
//
// Order is preserved; duplicate keys within a section overwrite (last wins)
// but keep their first position, so parse -> dump -> parse is a fixed point
// and dump output is canonical.
class Config {
public:
    struct Entry {
        std::string key;
        std::string value;
    };
    struct Section {
        std::string name;
        std::vector<Entry> entries;
    };

    static Config parse(const std::string& text);
    static Config load(const std::string& path);

    std::string dump() const;
    std::uint64_t hash() const; // FNV-1a over dump()

    bool has(const std::string& section, const std::string& key) const;
    std::optional<std::string> find(const std::string& section, const std::string& key) const;
    std::string get(const std::string& section, const std::string& key) const;
    std::string get_or(const std::string& section, const std::string& key,
                       const std::string& fallback) const;
    double get_double(const std::string& section, const std::string& key) const;

    // set/overwrite, creating the section at the end if absent
    void set(const std::string& section, const std::string& key, const std::string& value);

    // "section.key=value" (CLI override syntax)
    void apply_override(const std::string& spec);

    const std::vector<Section>& sections() const { return sections_; }
    std::vector<std::string> keys(const std::string& section) const;

private:
    std::vector<Section> sections_;
};

} // namespace qr
