#include "svcoh/report.hpp"

#include <iostream>

int main(int argc, char** argv) { return svcoh::run_cli(argc, argv, std::cout, std::cerr); }
