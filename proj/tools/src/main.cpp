#include <iostream>

#include "rabi/cli/app.hpp"

int main(int argc, char** argv) { return rabi::cli::run_app(argc, argv, std::cout, std::cerr); }
