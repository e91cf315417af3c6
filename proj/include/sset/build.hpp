#ifndef SSET_BUILD_HPP
#define SSET_BUILD_HPP

#include <string>
#include <vector>

#include "sset/map.hpp"
#include "sset/simplicial_set.hpp"

namespace sset {

struct InclusionResult {
    SSetPtr object;
    SSetPtr ambient;
    SimplicialMap inclusion;  // object -> ambient
};

struct SpanResult {
    SSetPtr object;
    SimplicialMap proj1;
    SimplicialMap proj2;
};

struct CoproductResult {
    SSetPtr object;
    SimplicialMap inj1;
    SimplicialMap inj2;
};

SSetPtr empty_sset(std::string name = "Empty");

// Delta(n): nondegenerate d-simplices are the (d+1)-subsets of {0..n},
// C(n+1, d+1) of them.
SSetPtr std_simplex(int n);

// dDelta(n) = Delta(n) minus the top cell, with its inclusion i_n.
InclusionResult boundary(int n);

// Horn(n,k) = dDelta(n) minus the d_k face as well; n >= 1.
InclusionResult horn(int n, int k);

// Nondegenerate n-simplices of X x Y are jointly nondegenerate pairs of
// n-dimensional expressions (disjoint collapse sets); faces are computed
// componentwise and renormalized by stripping the common collapse.
SpanResult product(const SSetPtr& X, const SSetPtr& Y);

// Sub-simplicial-set of X x Y on pairs with equal images under f and g.
SpanResult pullback(const SimplicialMap& f, const SimplicialMap& g);

CoproductResult coproduct(const SSetPtr& X, const SSetPtr& Y);

// N-ary disjoint union; ids are relabeled "c<label>:<id>".
struct NaryCoproductResult {
    SSetPtr object;
    std::vector<SimplicialMap> injections;
};
NaryCoproductResult coproduct_n(const std::vector<SSetPtr>& parts, const std::vector<int>& labels,
                                std::string name);

// Standalone presentation of a face-closed member set, ids preserved,
// plus its inclusion into the ambient set.
InclusionResult extract(const Subcomplex& sub, std::string name);

// Rendering used for product simplex ids: "(<expr>)x(<expr>)" with
// "<base-id>" or "<base-id>!<c0>,<c1>,..." per component.
std::string render_expr(const SimplicialSet& X, const SimplexExpr& e);

// Vertex list of a std_simplex/boundary/horn cell id ("024" or "9.10.12").
std::vector<int> parse_vertex_id(const std::string& id);

}  // namespace sset

#endif
