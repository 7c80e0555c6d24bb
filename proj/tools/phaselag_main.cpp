#include "phaselag/cli.hpp"

int main(int argc, char** argv) { return phaselag::run(argc, argv); }
