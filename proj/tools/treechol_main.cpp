#include "treechol/cli.hpp"

int main(int argc, char** argv) {
    return treechol::run_cli(argc, argv);
}
