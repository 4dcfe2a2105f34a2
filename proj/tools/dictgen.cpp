// Maintenance tool: regenerates data/dictionary.txt from the built-in demo
// dictionary. Run from the repo root:  build/tools/smclab_dictgen > data/dictionary.txt

#include <iostream>

#include "smclab/fixtures.hpp"

int main() {
    for (const auto& entry : smclab::fixtures::demo_dictionary()) {
        std::cout << entry << '\n';
    }
    return 0;
}
