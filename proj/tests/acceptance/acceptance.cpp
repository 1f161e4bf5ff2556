#include <iostream>

#include "cellgeom/acceptance.hpp"

int main() {
    const auto results = cellgeom::acceptance::run();
    return cellgeom::acceptance::report(results, std::cout) == 0 ? 0 : 1;
}
