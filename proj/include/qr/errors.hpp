#pragma once

#include <stdexcept>
#include <string>

namespace qr {

// bad physical input (nonpositive mass, negative time, ...)
struct domain_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// malformed config / catalog text, unknown units, bad CLI values
struct config_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// a validity inequality of the modelled regime is violated
struct regime_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ODE / quadrature failure (non-finite state, no convergence)
struct integration_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace qr
