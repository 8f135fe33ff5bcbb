#include "cli.hpp"

int main(int argc, char** argv) {
    return qr::cli::run(argc, argv);
}
