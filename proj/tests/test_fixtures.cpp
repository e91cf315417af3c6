#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "sset/errors.hpp"
#include "sset/fixtures.hpp"
#include "sset/json_io.hpp"
#include "sset/lem.hpp"
#include "sset/lifting.hpp"

using namespace sset;

namespace {

std::string corpus_dir() {
    const char* env = std::getenv("SSET_CORPUS_DIR");
    REQUIRE(env != nullptr);
    return env;
}

}  // namespace

TEST_CASE("corpus size and coverage") {
    std::vector<Fixture> all = corpus();
    CHECK(all.size() >= 20);

    int prop = 0, nonprop = 0, complemented = 0, notcomp = 0, g1_empty = 0, g1_nonempty = 0;
    for (const Fixture& fx : all) {
        FixtureExpectation e = compute_expectation(fx, kCorpusHomotopyCap);
        (e.propositional ? prop : nonprop)++;
        (e.complemented ? complemented : notcomp)++;
        if (e.complemented) (e.gamma1_empty ? g1_empty : g1_nonempty)++;
        if (fx.non_fibration) {
            CHECK_FALSE(horn_rlp(fx.map, fx.bound + 1).holds);
        }
    }
    CHECK(prop >= 6);
    CHECK(nonprop >= 6);
    CHECK(complemented > 0);
    CHECK(notcomp > 0);
    CHECK(g1_empty > 0);
    CHECK(g1_nonempty > 0);
}

TEST_CASE("fixtures are deterministic") {
    std::vector<Fixture> a = corpus();
    std::vector<Fixture> b = corpus();
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].name == b[i].name);
        CHECK(a[i].map == b[i].map);
        CHECK(a[i].bound == b[i].bound);
    }
    // seeded randomness reproduces
    CHECK(random_subcomplex_inclusion(7, 4, 5, 3) == random_subcomplex_inclusion(7, 4, 5, 3));
}

TEST_CASE("random subcomplex edge parameters") {
    SimplicialMap none = random_subcomplex_inclusion(3, 3, 4, 0);
    CHECK(none.domain()->empty());
    SimplicialMap all = random_subcomplex_inclusion(3, 3, 4, 100);
    CHECK(all.domain()->size() == all.codomain()->size());
}

TEST_CASE("every fixture map is valid") {
    for (const Fixture& fx : corpus()) {
        CHECK(fx.map.domain()->validate().ok);
        CHECK(fx.map.codomain()->validate().ok);
        CHECK(fx.map.validate().ok);
        CHECK(fx.bound == std::max(fx.map.domain()->dim() + 2, 1));
    }
}

TEST_CASE("committed corpus files are not stale") {
    std::string dir = corpus_dir();
    REQUIRE(std::filesystem::exists(dir + "/manifest.json"));
    Json manifest = load_json(dir + "/manifest.json");
    CHECK(manifest == manifest_json(kCorpusHomotopyCap));

    // byte-identical regeneration of every shipped file
    std::string tmp = (std::filesystem::temp_directory_path() / "sset_corpus_check").string();
    std::filesystem::remove_all(tmp);
    write_corpus(tmp);
    for (const auto& entry : std::filesystem::directory_iterator(tmp)) {
        std::string fname = entry.path().filename().string();
        std::ifstream fresh(entry.path(), std::ios::binary);
        std::ifstream committed(dir + "/" + fname, std::ios::binary);
        REQUIRE(committed.good());
        std::string a((std::istreambuf_iterator<char>(fresh)), std::istreambuf_iterator<char>());
        std::string b((std::istreambuf_iterator<char>(committed)),
                      std::istreambuf_iterator<char>());
        CHECK(a == b);
    }
    std::filesystem::remove_all(tmp);
}

TEST_CASE("manifest expectations reproduce under the checkers") {
    Json manifest = load_json(corpus_dir() + "/manifest.json");
    std::vector<Fixture> all = corpus();
    REQUIRE(manifest["fixtures"].size() == all.size());
    for (std::size_t i = 0; i < all.size(); ++i) {
        const Json& row = manifest["fixtures"][i];
        CHECK(row["name"] == all[i].name);
        FixtureExpectation e = compute_expectation(all[i], kCorpusHomotopyCap);
        CHECK(row["expected"] == expectation_to_json(e));
    }
}

TEST_CASE("the complement dichotomy holds across the corpus") {
    for (const Fixture& fx : corpus()) {
        FixtureExpectation e = compute_expectation(fx, kCorpusHomotopyCap);
        if (e.kan) {
            Subcomplex comp = image_complement(fx.map);
            CHECK(comp.members == vertex_complement(fx.map).members);
        }
        if (fx.non_fibration) {
            bool not_complemented = false;
            try {
                image_complement(fx.map);
            } catch (const NotComplementedError&) {
                not_complemented = true;
            }
            // some non-fibrations are still complemented (edge -> point);
            // the designated NotComplemented ones carry a face witness
            if (fx.name.find("vertex_incl") != std::string::npos ||
                fx.name.find("horn21") != std::string::npos)
                CHECK(not_complemented);
        }
    }
}
