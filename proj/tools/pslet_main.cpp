#include <iostream>
#include <string>
#include <vector>

#include "pslet/app.hpp"
#include "pslet/real.hpp"

int main(int argc, char** argv) {
  pslet::set_working_precision(pslet::kDefaultPrecisionDigits);
  std::vector<std::string> args(argv + 1, argv + argc);
  return pslet::app::run(args, std::cout, std::cerr);
}
