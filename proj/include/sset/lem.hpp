#ifndef SSET_LEM_HPP
#define SSET_LEM_HPP

#include <map>
#include <optional>
#include <string>

#include <json.hpp>

#include "sset/lifting.hpp"
#include "sset/map.hpp"

namespace sset {

// Nondegenerate base simplices outside the image of p, as a subcomplex.
// Throws NotComplementedError when that set is not face-closed.
Subcomplex image_complement(const SimplicialMap& p);

// Nondegenerate base simplices all of whose vertices miss the image in
// dimension 0.  Always a well-defined set; agrees with image_complement
// exactly when the latter succeeds.
Subcomplex vertex_complement(const SimplicialMap& p);

struct Decomposition {
    SSetPtr base;
    Subcomplex gamma0;  // image of p
    Subcomplex gamma1;  // its complement
};

// gamma0 = image(p), gamma1 = image_complement(p); partition and
// face-closure verified, and the vertex criterion cross-checked.
Decomposition decompose_base(const SimplicialMap& p);

struct PropositionalityReport {
    bool propositional = false;
    int bound = 0;
    RLPReport via_rlp;     // boundary family, n in [1, bound]
    RLPReport kan_check;   // horn family, n in [1, bound+1]
    std::optional<bool> via_homotopy;
};

PropositionalityReport is_propositional_rlp(const SimplicialMap& p, int bound);

inline constexpr std::size_t kHomotopySizeGuard = 30;

// Searches exhaustively for a one-step fiberwise homotopy between the two
// projections of p ×_base p.  Throws SizeGuardError when P×Δ¹ exceeds the
// guard.  Intended for Kan p; non-Kan inputs are a caller error.
bool is_propositional_homotopy(const SimplicialMap& p,
                               std::size_t size_guard = kHomotopySizeGuard);

// Section of a trivial fibration by skeletal induction, canonically least
// filler at each base simplex.  Runs the boundary RLP precheck on [0, bound]
// first; throws NoFillerError when that fails or a filler is missing.
SimplicialMap trivial_fibration_section(const SimplicialMap& p, int bound);

// Representation-level certificate; mirrors the interchange JSON exactly.
// The fibration it certifies travels alongside (verify takes cert + map).
struct LEMCertificate {
    int bound = 0;
    std::vector<std::string> gamma0;  // ids in canonical order
    std::vector<std::string> gamma1;
    nlohmann::json section0;          // map-file object: extract(gamma0) -> total space
    std::map<std::string, std::string> emptiness1;  // id -> "no-preimage-vertex"
};

// The full pipeline: check propositionality, decompose the base, restrict p
// over the image part, synthesize its section, certify emptiness over the
// complement, self-verify.  Throws PreconditionError when p is not a
// propositional Kan fibration up to the bound.
LEMCertificate lem_section(const SimplicialMap& p, int bound);

struct VerifyResult {
    bool ok = true;
    std::string diagnostic;
};

// Independent re-check using only core primitives (no search): partition,
// face-closure, section equations, emptiness over gamma1.  Never throws on
// a structurally well-formed certificate; returns the first failure.
VerifyResult verify_certificate(const LEMCertificate& cert, const SimplicialMap& p);

nlohmann::json cert_to_json(const LEMCertificate& cert);
LEMCertificate cert_from_json(const nlohmann::json& j);

nlohmann::json decomposition_to_json(const Decomposition& d);
nlohmann::json propositionality_to_json(const PropositionalityReport& r);

// Deterministic name for the standalone presentation of a base part.
std::string part_name(const SimplicialSet& base, const std::string& part);

}  // namespace sset

#endif
