#include "qr/units.hpp"

#include <cctype>
#include <cstdlib>
#include <map>
#include <numbers>

#include "qr/constants.hpp"
#include "qr/errors.hpp"

namespace qr::units {

namespace {

struct Split {
    double value;
    std::string unit;
};

Split split_number(const std::string& text) {
    const char* begin = text.c_str();
    char* end = nullptr;
    double v = std::strtod(begin, &end);
    if (end == begin)
        throw config_error("not a number: '" + text + "'");
    std::string unit(end);
    std::size_t a = unit.find_first_not_of(" \t");
    std::size_t b = unit.find_last_not_of(" \t");
    unit = (a == std::string::npos) ? std::string() : unit.substr(a, b - a + 1);
    return {v, unit};
}

double lookup(const Split& s, const std::map<std::string, double>& table,
              const char* dimension) {
    if (s.unit.empty())
        return s.value;
    auto it = table.find(s.unit);
    if (it == table.end())
        throw config_error(std::string("unknown ") + dimension + " unit '" + s.unit + "'");
    return s.value * it->second;
}

const std::map<std::string, double> length_units = {
    {"m", 1.0},        {"cm", 1e-2},      {"mm", 1e-3},
    {"um", 1e-6},      {"nm", 1e-9},      {"pm", 1e-12},
    {"fm", 1e-15},     {"angstrom", 1e-10}, {"A", 1e-10},
    {"km", 1e3},
};

const double mev_mass = 1e6 * electron_volt / (light_speed * light_speed);

const std::map<std::string, double> mass_units = {
    {"kg", 1.0},
    {"g", 1e-3},
    {"mg", 1e-6},
    {"amu", atomic_mass_unit},
    {"u", atomic_mass_unit},
    {"eV", mev_mass * 1e-6},
    {"keV", mev_mass * 1e-3},
    {"MeV", mev_mass},
    {"GeV", mev_mass * 1e3},
    {"m_e", electron_mass},
};

const std::map<std::string, double> time_units = {
    {"s", 1.0}, {"ms", 1e-3}, {"us", 1e-6}, {"ns", 1e-9}, {"ps", 1e-12},
    {"fs", 1e-15}, {"min", 60.0}, {"h", 3600.0},
};

const std::map<std::string, double> speed_units = {
    {"m/s", 1.0}, {"km/s", 1e3}, {"cm/s", 1e-2}, {"mm/s", 1e-3},
};

const std::map<std::string, double> energy_units = {
    {"J", 1.0},
    {"eV", electron_volt},
    {"meV", 1e-3 * electron_volt},
    {"keV", 1e3 * electron_volt},
    {"MeV", 1e6 * electron_volt},
};

const std::map<std::string, double> moment_units = {
    {"J/T", 1.0}, {"mu_B", bohr_magneton}, {"bohr_magneton", bohr_magneton},
};

const std::map<std::string, double> gradient_units = {
    {"T/m", 1.0}, {"T/cm", 1e2}, {"T/mm", 1e3}, {"G/cm", 1e-4 * 1e2},
};

const std::map<std::string, double> field_units = {
    {"T", 1.0}, {"mT", 1e-3}, {"G", 1e-4}, {"gauss", 1e-4},
};

} // namespace

double parse_length(const std::string& text) {
    return lookup(split_number(text), length_units, "length");
}

double parse_mass(const std::string& text) {
    return lookup(split_number(text), mass_units, "mass");
}

double parse_time(const std::string& text) {
    return lookup(split_number(text), time_units, "time");
}

double parse_speed(const std::string& text) {
    return lookup(split_number(text), speed_units, "speed");
}

double parse_energy(const std::string& text) {
    return lookup(split_number(text), energy_units, "energy");
}

double parse_moment(const std::string& text) {
    return lookup(split_number(text), moment_units, "magnetic moment");
}

double parse_gradient(const std::string& text) {
    return lookup(split_number(text), gradient_units, "field gradient");
}

double parse_field(const std::string& text) {
    return lookup(split_number(text), field_units, "field");
}

double parse_frequency(const std::string& text) {
    Split s = split_number(text);
    if (s.unit.empty() || s.unit == "rad/s")
        return s.value;
    if (s.unit == "Hz")
        return s.value * 2.0 * std::numbers::pi;
    if (s.unit == "kHz")
        return s.value * 2.0 * std::numbers::pi * 1e3;
    if (s.unit == "MHz")
        return s.value * 2.0 * std::numbers::pi * 1e6;
    throw config_error("unknown frequency unit '" + s.unit + "'");
}

} // namespace qr::units
