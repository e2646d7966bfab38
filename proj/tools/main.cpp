#include <iostream>

#include "basicfn/cli.hpp"

int main(int argc, char** argv) { return basicfn::dispatch(argc, argv, std::cout, std::cerr); }
