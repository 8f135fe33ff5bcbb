#pragma once

namespace qr::cli {

// full command-line front end; returns the process exit code
// (0 ok, 1 configuration error, 2 numerical or regime failure)
int run(int argc, const char* const* argv);

} // namespace qr::cli
