// Regenerates the committed corpus: fixture files plus manifest.json with
// expectations recomputed by the exhaustive checkers.
#include <iostream>

#include "sset/fixtures.hpp"

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: corpus-gen <output-dir>\n";
        return 2;
    }
    try {
        sset::write_corpus(argv[1]);
    } catch (const std::exception& e) {
        std::cerr << "corpus generation failed: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
