#include <iostream>

#include "grovernoise/app/commands.hpp"

int main(int argc, char** argv) {
  return grovernoise::app::run_cli(argc, argv, std::cout, std::cerr);
}
