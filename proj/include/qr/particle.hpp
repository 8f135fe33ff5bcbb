#pragma once

#include <optional>
#include <string>
#include <vector>

namespace qr {

struct Particle {
    std::string name;
    double mass = 0.0;   // kg
    double size = 0.0;   // m, characteristic body size L0; 0 = structureless
    std::optional<double> moment; // J/T
    std::optional<double> spin;
    std::string note;

    void validate() const; // mass > 0, size >= 0, finite
};

// Experiment presets: coherent extent + body size + expected order of Q.
struct ExperimentPreset {
    std::string name;
    std::string particle;
    double r_q = 0.0;   // m
    double l0 = 0.0;    // m
    double expected_log10_q = 0.0;
    std::string kind;
    std::string note;
};

class Catalog {
public:
    static Catalog builtin();                     // compiled-in copy of data/particles.cfg
    static Catalog parse(const std::string& text);
    static Catalog load(const std::string& path); // throws config_error

    const Particle& find(const std::string& name) const; // case-insensitive, throws config_error
    bool has(const std::string& name) const;
    const std::vector<Particle>& particles() const { return particles_; }

private:
    std::vector<Particle> particles_;
};

std::vector<ExperimentPreset> builtin_experiments();
std::vector<ExperimentPreset> parse_experiments(const std::string& text);
const ExperimentPreset& find_experiment(const std::vector<ExperimentPreset>& list,
                                        const std::string& name);

} // namespace qr
