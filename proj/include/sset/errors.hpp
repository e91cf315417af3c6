#ifndef SSET_ERRORS_HPP
#define SSET_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sset {

// Malformed presentation data: bad ids, dangling face references,
// out-of-range collapse sets, dimension mismatches.
struct MalformedError : std::runtime_error {
    explicit MalformedError(const std::string& what) : std::runtime_error(what) {}
};

// Interchange-format parse failures (names the offending field).
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// A caller-stated precondition does not hold (non-mono left leg,
// codomain mismatch, non-propositional input to lem_section, ...).
struct PreconditionError : std::runtime_error {
    explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

// The image of the map is not a subcomplex of the base: some simplex
// outside the image has a face inside it.  Signals that the map fails
// the fibration hypothesis of the complemented-image decomposition.
struct NotComplementedError : std::runtime_error {
    NotComplementedError(std::string simplex, std::string face, int face_index)
        : std::runtime_error("image complement is not face-closed: simplex '" + simplex +
                             "' is outside the image but its face d" + std::to_string(face_index) +
                             " has base '" + face + "' inside it"),
          simplex_id(std::move(simplex)),
          face_id(std::move(face)),
          index(face_index) {}
    std::string simplex_id;
    std::string face_id;
    int index;
};

// Section synthesis found no filler; the map is not a trivial fibration
// up to the requested bound.
struct NoFillerError : std::runtime_error {
    NoFillerError(int dim, std::string where)
        : std::runtime_error("no filler at dimension " + std::to_string(dim) +
                             (where.empty() ? "" : " (" + where + ")")),
          dimension(dim),
          at(std::move(where)) {}
    int dimension;
    std::string at;
};

// Exhaustive-search size guard tripped; reported, never silently skipped.
struct SizeGuardError : std::runtime_error {
    SizeGuardError(std::size_t size, std::size_t cap)
        : std::runtime_error("search space of " + std::to_string(size) +
                             " nondegenerate simplices exceeds the size guard " + std::to_string(cap)),
          actual(size),
          guard(cap) {}
    std::size_t actual;
    std::size_t guard;
};

// "Should be impossible" states; a hard failure, not a user error.
struct InternalError : std::logic_error {
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace sset

#endif
