#include "arp/cli.hpp"

#include <iostream>

int main(int argc, char **argv) { return arp::cli::run(argc, argv, std::cout, std::cerr); }
