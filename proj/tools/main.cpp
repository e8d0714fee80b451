#include <paraqt/cli.hpp>

#include <iostream>

int main(int argc, char** argv) { return paraqt::cli::run(argc, argv, std::cout, std::cerr); }
