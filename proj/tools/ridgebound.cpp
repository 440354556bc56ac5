#include "ridgebound/cli.hpp"

int main(int argc, char** argv) { return ridgebound::cli::dispatch(argc, argv); }
