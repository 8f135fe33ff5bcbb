#pragma once

#include <string>

namespace qr::units {

// Parse "0.2 mm", "1.44 angstrom", "105.66 MeV", ... A bare number is taken
// as the SI base unit of the dimension. Throws config_error on anything else.
double parse_length(const std::string& text);  // -> m
double parse_mass(const std::string& text);    // -> kg (energy units divided by c^2)
double parse_time(const std::string& text);    // -> s
double parse_speed(const std::string& text);   // -> m/s
double parse_energy(const std::string& text);  // -> J
double parse_moment(const std::string& text);  // -> J/T
double parse_gradient(const std::string& text); // -> T/m
double parse_field(const std::string& text);   // -> T
double parse_frequency(const std::string& text); // -> rad/s for plain, Hz scaled by 2 pi

} // namespace qr::units
