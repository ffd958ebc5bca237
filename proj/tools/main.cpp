#include "bisect/cli.hpp"

int main(int argc, char** argv) {
    return bisect::cli::run(argc, argv);
}
