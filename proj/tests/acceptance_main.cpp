#include <iostream>

#include "normalis/verify.hpp"

int main() {
    const bool ok = normalis::run_acceptance_suite(std::cout);
    return ok ? 0 : 1;
}
