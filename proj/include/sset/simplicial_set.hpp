#ifndef SSET_SIMPLICIAL_SET_HPP
#define SSET_SIMPLICIAL_SET_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "sset/ordinal.hpp"

namespace sset {

// Canonical expression of a (possibly degenerate) simplex: a monotone
// surjection applied to a nondegenerate base.  `base` indexes into the
// simplex list of the set the expression lives over; expressions are only
// meaningful relative to that set.
struct SimplexExpr {
    int base = -1;
    OrdinalSurjection surj;

    int dim() const { return surj.source_dim; }
    bool is_nondegenerate() const { return surj.is_identity(); }
    bool operator==(const SimplexExpr&) const = default;
};

// Canonical order: base first (simplex indices are already sorted by
// (dim, id)), then collapse in ascending-vector lex order.
inline bool expr_less(const SimplexExpr& a, const SimplexExpr& b) {
    if (a.base != b.base) return a.base < b.base;
    return collapse_less(a.surj.collapse, b.surj.collapse);
}

// Id-based expression, the construction/interchange form.
struct ExprSpec {
    std::vector<int> collapse;
    std::string target;
};

struct SimplexSpec {
    std::string id;
    int dim = 0;
    std::vector<ExprSpec> faces;  // d_0 ... d_dim; empty for vertices
};

struct Simplex {
    std::string id;
    int dim = 0;
    std::vector<SimplexExpr> faces;
};

struct ValidationReport {
    bool ok = true;
    std::string error;  // first violation, empty when ok
};

class SimplicialSet {
  public:
    // Accepts simplices in any order; stores them sorted by (dim, id) and
    // resolves face targets to indices.  Throws MalformedError on dangling
    // references, duplicate ids, or dimension mismatches.  Simplicial
    // identities are checked separately by validate().
    SimplicialSet(std::string name, std::vector<SimplexSpec> simplices);

    const std::string& name() const { return name_; }
    int size() const { return static_cast<int>(simplices_.size()); }
    bool empty() const { return simplices_.empty(); }
    const Simplex& simplex(int idx) const { return simplices_[static_cast<std::size_t>(idx)]; }
    const std::vector<Simplex>& simplices() const { return simplices_; }

    // -1 for the empty simplicial set.
    int dim() const { return simplices_.empty() ? -1 : simplices_.back().dim; }

    std::optional<int> index_of(const std::string& id) const;
    int require_index(const std::string& id) const;

    int count_nondegenerate(int dim) const;

    // --- EZ normalization engine ---------------------------------------
    // X(alpha)(e) for an arbitrary monotone alpha : [k] -> [e.dim()], given
    // by its image vector of length k+1.  Substitutes stored faces whenever
    // the composite misses a value, always at the largest missed value.
    SimplexExpr apply_monotone(std::span<const int> alpha, SimplexExpr e) const;

    SimplexExpr face(const SimplexExpr& e, int i) const;
    SimplexExpr degeneracy(const SimplexExpr& e, int i) const;

    // The j-th vertex of expression e, as a simplex index (0 <= j <= e.dim()).
    int vertex_base(const SimplexExpr& e, int j) const;

    // Shape validity of an expression over this set.
    bool expr_valid(const SimplexExpr& e) const;
    void require_expr(const SimplexExpr& e) const;

    SimplexExpr expr_from_spec(const ExprSpec& spec, int expected_dim) const;
    ExprSpec expr_to_spec(const SimplexExpr& e) const;

    // Simplicial identities d_i d_j = d_{j-1} d_i for all simplices, i < j.
    ValidationReport validate() const;

    // Structural equality of presentations (ids, dims, faces); names ignored.
    bool same_presentation(const SimplicialSet& other) const;

  private:
    std::string name_;
    std::vector<Simplex> simplices_;
    std::unordered_map<std::string, int> index_;
};

using SSetPtr = std::shared_ptr<const SimplicialSet>;

inline SSetPtr make_sset(std::string name, std::vector<SimplexSpec> simplices) {
    return std::make_shared<SimplicialSet>(std::move(name), std::move(simplices));
}

// Same presentation under a different name (values are immutable; this is a copy).
SSetPtr renamed(const SSetPtr& X, std::string name);

// A set of nondegenerate simplices of an ambient set, closed under taking
// bases of faces.  Members are kept sorted (canonical index order).
struct Subcomplex {
    SSetPtr ambient;
    std::vector<int> members;

    bool contains(int idx) const;
    std::vector<std::string> member_ids() const;
    bool operator==(const Subcomplex&) const;
};

// Least face-closed superset of the seed; idempotent.
Subcomplex subcomplex_closure(const SSetPtr& X, const std::vector<int>& seed);
Subcomplex subcomplex_closure_ids(const SSetPtr& X, const std::vector<std::string>& seed_ids);

bool is_face_closed(const SimplicialSet& X, const std::vector<int>& members);

}  // namespace sset

#endif
