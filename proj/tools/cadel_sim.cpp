#include "cadel/harness.hpp"

int main(int argc, char** argv) { return cadel::cli_main(argc, argv); }
