#include "qr/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "qr/errors.hpp"

namespace qr {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos)
        return {};
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

} // namespace

Config Config::parse(const std::string& text) {
    Config cfg;
    std::istringstream in(text);
    std::string line;
    std::string current;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#' || t[0] == ';')
            continue;
        if (t.front() == '[') {
            if (t.back() != ']')
                throw config_error("line " + std::to_string(lineno) + ": unterminated section header");
            current = trim(t.substr(1, t.size() - 2));
            if (current.empty())
                throw config_error("line " + std::to_string(lineno) + ": empty section name");
            // materialize the section even if it stays empty
            cfg.set(current, "", "");
            continue;
        }
        std::size_t eq = t.find('=');
        if (eq == std::string::npos)
            throw config_error("line " + std::to_string(lineno) + ": expected key = value");
        std::string key = trim(t.substr(0, eq));
        std::string value = trim(t.substr(eq + 1));
        if (key.empty())
            throw config_error("line " + std::to_string(lineno) + ": empty key");
        cfg.set(current, key, value);
    }
    return cfg;
}

Config Config::load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw config_error("cannot open config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
}

std::string Config::dump() const {
    std::string out;
    bool first = true;
    for (const auto& sec : sections_) {
        if (!first)
            out += '\n';
        first = false;
        if (!sec.name.empty()) {
            out += '[';
            out += sec.name;
            out += "]\n";
        }
        for (const auto& e : sec.entries) {
            out += e.key;
            out += " = ";
            out += e.value;
            out += '\n';
        }
    }
    return out;
}

std::uint64_t Config::hash() const {
    std::string text = dump();
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

bool Config::has(const std::string& section, const std::string& key) const {
    return find(section, key).has_value();
}

std::optional<std::string> Config::find(const std::string& section, const std::string& key) const {
    for (const auto& sec : sections_) {
        if (sec.name != section)
            continue;
        for (const auto& e : sec.entries)
            if (e.key == key)
                return e.value;
    }
    return std::nullopt;
}

std::string Config::get(const std::string& section, const std::string& key) const {
    auto v = find(section, key);
    if (!v)
        throw config_error("missing config key [" + section + "] " + key);
    return *v;
}

std::string Config::get_or(const std::string& section, const std::string& key,
                           const std::string& fallback) const {
    auto v = find(section, key);
    return v ? *v : fallback;
}

double Config::get_double(const std::string& section, const std::string& key) const {
    std::string v = get(section, key);
    const char* b = v.c_str();
    char* e = nullptr;
    double x = std::strtod(b, &e);
    if (e == b || trim(std::string(e)).size() > 0)
        throw config_error("config key [" + section + "] " + key + " is not a plain number: '" + v + "'");
    return x;
}

void Config::set(const std::string& section, const std::string& key, const std::string& value) {
    Section* target = nullptr;
    for (auto& sec : sections_)
        if (sec.name == section) {
            target = &sec;
            break;
        }
    if (!target) {
        sections_.push_back({section, {}});
        target = &sections_.back();
    }
    if (key.empty())
        return; // section materialization only
    for (auto& e : target->entries)
        if (e.key == key) {
            e.value = value;
            return;
        }
    target->entries.push_back({key, value});
}

void Config::apply_override(const std::string& spec) {
    std::size_t eq = spec.find('=');
    if (eq == std::string::npos)
        throw config_error("override must look like section.key=value: '" + spec + "'");
    std::string path = trim(spec.substr(0, eq));
    std::string value = trim(spec.substr(eq + 1));
    std::size_t dot = path.find('.');
    std::string section = dot == std::string::npos ? std::string() : path.substr(0, dot);
    std::string key = dot == std::string::npos ? path : path.substr(dot + 1);
    if (key.empty())
        throw config_error("override has empty key: '" + spec + "'");
    set(section, key, value);
}

std::vector<std::string> Config::keys(const std::string& section) const {
    std::vector<std::string> out;
    for (const auto& sec : sections_)
        if (sec.name == section)
            for (const auto& e : sec.entries)
                out.push_back(e.key);
    return out;
}

} // namespace qr
