#include "sprsynth/cli.hpp"

int main(int argc, char** argv) { return sprsynth::cli::main(argc, argv); }
