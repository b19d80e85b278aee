#include "trislit/cli.hpp"

int main(int argc, char** argv) {
  return trislit::cli::run(argc, argv);
}
