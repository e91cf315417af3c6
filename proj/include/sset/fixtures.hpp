#ifndef SSET_FIXTURES_HPP
#define SSET_FIXTURES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "sset/build.hpp"
#include "sset/map.hpp"

namespace sset {

// [f, g] out of a binary coproduct.
SimplicialMap copair(const CoproductResult& cp, const SimplicialMap& f, const SimplicialMap& g);

// Inclusion of the selected summands into the coproduct of all parts.
// Empty selection gives the empty total space.
SimplicialMap component_inclusion(const std::vector<SSetPtr>& parts,
                                  const std::vector<int>& selected, const std::string& full_name,
                                  const std::string& sub_name);

// Projection X × (k discrete points) -> X.
SimplicialMap discrete_cover(const SSetPtr& X, int k);

// Maps that fail the Kan-fibration hypothesis in recorded ways.
std::vector<SimplicialMap> non_fibration_counterexamples();

// Reproducible full-subcomplex inclusion: a random subcomplex of Delta(d),
// restricted to a random vertex subset.  Same seed, same fixture.
SimplicialMap random_subcomplex_inclusion(std::uint64_t seed, int ambient_dim, int seed_cells,
                                          int keep_vertices);

// Same map between renamed endpoints (presentations unchanged).
SimplicialMap rename_endpoints(const SimplicialMap& f, const std::string& dom_name,
                               const std::string& cod_name);

struct Fixture {
    std::string name;
    SimplicialMap map;
    int bound = 1;               // dim(total)+2, at least 1
    bool non_fibration = false;  // listed counterexample to the fibration hypothesis
};

// The deterministic corpus used by every suite.
std::vector<Fixture> corpus();

// Properties recomputed from the checkers; the manifest freezes these.
struct FixtureExpectation {
    bool kan = false;            // horn family up to bound+1
    bool propositional = false;  // boundary family on [1, bound]
    bool complemented = false;   // image_complement succeeds
    bool gamma1_empty = false;   // meaningful when complemented
    bool trivial = false;        // boundary family on [0, bound]
    std::optional<bool> homotopy_prop;  // absent when over the homotopy cap
};

// Homotopy-oracle cap used for corpus expectations and the acceptance suite
// (the API default of 30 excludes several corpus fixtures; see README).
inline constexpr std::size_t kCorpusHomotopyCap = 200;

FixtureExpectation compute_expectation(const Fixture& fx, std::size_t homotopy_cap);

nlohmann::json expectation_to_json(const FixtureExpectation& e);
nlohmann::json manifest_json(std::size_t homotopy_cap);

// Writes <name>_total.json, <name>_base.json, <name>.map.json per fixture
// plus manifest.json, all in canonical bytes.
void write_corpus(const std::string& dir);

}  // namespace sset

#endif
