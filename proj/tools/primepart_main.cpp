#include "primepart/cli.hpp"

int main(int argc, char** argv) {
    return primepart::run_cli(argc, argv);
}
