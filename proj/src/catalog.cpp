#include "qr/particle.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "qr/config.hpp"
#include "qr/errors.hpp"
#include "qr/units.hpp"
#include "qr_embedded_data.hpp"

namespace qr {

namespace {

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    return s;
}

} // namespace

void Particle::validate() const {
    if (name.empty())
        throw domain_error("particle needs a name");
    if (!(mass > 0.0) || !std::isfinite(mass))
        throw domain_error("particle '" + name + "' needs mass > 0");
    if (!(size >= 0.0) || !std::isfinite(size))
        throw domain_error("particle '" + name + "' needs size >= 0");
    if (moment && !std::isfinite(*moment))
        throw domain_error("particle '" + name + "' has non-finite moment");
}

Catalog Catalog::parse(const std::string& text) {
    Config cfg = Config::parse(text);
    Catalog cat;
    for (const auto& sec : cfg.sections()) {
        if (sec.name.empty())
            throw config_error("catalog entries must live in a [name] section");
        Particle p;
        p.name = sec.name;
        p.mass = units::parse_mass(cfg.get(sec.name, "mass"));
        p.size = units::parse_length(cfg.get(sec.name, "size"));
        if (auto m = cfg.find(sec.name, "moment"))
            p.moment = units::parse_moment(*m);
        if (auto s = cfg.find(sec.name, "spin"))
            p.spin = std::strtod(s->c_str(), nullptr);
        p.note = cfg.get_or(sec.name, "note", "");
        p.validate();
        cat.particles_.push_back(std::move(p));
    }
    if (cat.particles_.empty())
        throw config_error("catalog contains no particles");
    return cat;
}

Catalog Catalog::builtin() {
    return parse(detail::particles_cfg);
}

Catalog Catalog::load(const std::string& path) {
    return parse(Config::load(path).dump());
}

const Particle& Catalog::find(const std::string& name) const {
    std::string want = lower(name);
    for (const auto& p : particles_)
        if (lower(p.name) == want)
            return p;
    throw config_error("unknown particle '" + name + "'");
}

bool Catalog::has(const std::string& name) const {
    std::string want = lower(name);
    return std::any_of(particles_.begin(), particles_.end(),
                       [&](const Particle& p) { return lower(p.name) == want; });
}

std::vector<ExperimentPreset> parse_experiments(const std::string& text) {
    Config cfg = Config::parse(text);
    std::vector<ExperimentPreset> out;
    for (const auto& sec : cfg.sections()) {
        if (sec.name.empty())
            throw config_error("experiment presets must live in a [name] section");
        ExperimentPreset e;
        e.name = sec.name;
        e.particle = cfg.get_or(sec.name, "particle", "");
        e.r_q = units::parse_length(cfg.get(sec.name, "r_q"));
        e.l0 = units::parse_length(cfg.get(sec.name, "l0"));
        e.expected_log10_q = cfg.get_double(sec.name, "expected_log10_q");
        e.kind = cfg.get_or(sec.name, "kind", "");
        e.note = cfg.get_or(sec.name, "note", "");
        if (!(e.r_q > 0.0) || !(e.l0 > 0.0))
            throw config_error("experiment '" + e.name + "' needs r_q > 0 and l0 > 0");
        out.push_back(std::move(e));
    }
    return out;
}

std::vector<ExperimentPreset> builtin_experiments() {
    return parse_experiments(detail::experiments_cfg);
}

const ExperimentPreset& find_experiment(const std::vector<ExperimentPreset>& list,
                                        const std::string& name) {
    std::string want = lower(name);
    for (const auto& e : list)
        if (lower(e.name) == want)
            return e;
    throw config_error("unknown experiment preset '" + name + "'");
}

} // namespace qr
