#include "cli.hpp"

int main(int argc, char** argv) { return distrecon::cli::dispatch(argc, argv); }
