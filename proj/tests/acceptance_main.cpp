#include <iostream>

#include "pcinv/verify/acceptance.hpp"

int main() {
  pcinv::verify::AcceptanceOptions o;
  o.progress = &std::cerr;
  pcinv::verify::AcceptanceResult r = pcinv::verify::run_acceptance(o);
  pcinv::verify::print(std::cout, r);
  return r.all_pass() ? 0 : 1;
}
