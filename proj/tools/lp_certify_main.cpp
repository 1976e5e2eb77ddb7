// Entry point for the lp-certify command-line tool.  All behaviour lives in
// lpcert::run() so the tests can drive the front end in-process.

#include <iostream>

#include "lpcert/cli.hpp"

int main(int argc, char** argv) {
  return lpcert::run(argc, argv, std::cout, std::cerr);
}
