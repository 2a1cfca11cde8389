#include "meshforge/cli.hpp"

int main(int argc, char** argv) {
    return meshforge::run_command(argc, argv);
}
