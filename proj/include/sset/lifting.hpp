#ifndef SSET_LIFTING_HPP
#define SSET_LIFTING_HPP

#include <optional>
#include <string>

#include <json.hpp>

#include "sset/build.hpp"
#include "sset/expr_table.hpp"
#include "sset/map.hpp"

namespace sset {

// A commuting square: p ∘ top = bottom ∘ left, with left a mono.
struct LiftingProblem {
    SimplicialMap left;    // i : A -> B
    SimplicialMap right;   // p : Y -> X
    SimplicialMap top;     // u : A -> Y
    SimplicialMap bottom;  // v : B -> X
};

// Checks endpoints, monomorphy of the left leg, and commutativity.
LiftingProblem make_lifting_problem(SimplicialMap left, SimplicialMap right, SimplicialMap top,
                                    SimplicialMap bottom);

// Canonically least diagonal h : B -> Y with h∘i = u and p∘h = v, found by
// exhaustive backtracking with fiber pruning; absent after full search.
std::optional<SimplicialMap> solve_lift(const LiftingProblem& prob, bool reversed = false);

enum class Family { boundary, horn, prism, single };
std::string family_name(Family f);

struct Counterexample {
    int n = -1;       // dimension of the family member
    int k = -1;       // horn index, -1 otherwise
    LiftingProblem square;
};

struct RLPReport {
    bool holds = true;
    Family family = Family::single;
    int dim_min = 0;
    int dim_max = 0;
    std::optional<Counterexample> counterexample;
    std::string note;
};

// Exhaustive RLP of p against one mono: every bottom map, every compatible
// top map, a lift required for each.  First failing square in canonical
// (bottom, top) enumeration order is reported.
RLPReport rlp(const SimplicialMap& i, const SimplicialMap& p, bool reversed = false);

// Family checkers; scanning is in canonical order (n ascending, then horn
// index k ascending) and stops at the first counterexample.
RLPReport boundary_rlp(const SimplicialMap& p, int n_min, int n_max, bool reversed = false);
RLPReport horn_rlp(const SimplicialMap& p, int n_max, bool reversed = false);
RLPReport prism_rlp(const SimplicialMap& p, int n_max, bool reversed = false);

// (A×D ∪_{A×C} B×C) ↪ B×D for monos i : A↪B, j : C↪D.
struct PushoutProductResult {
    SpanResult prod;       // B×D with projections
    InclusionResult part;  // the pushout-product domain inside B×D
};
PushoutProductResult pushout_product_full(const SimplicialMap& i, const SimplicialMap& j);
SimplicialMap pushout_product(const SimplicialMap& i, const SimplicialMap& j);

// Constructive lift for a prism square (left = pushout_product(i1, i_n)):
// fills the n+1 shuffles of Δ¹×Δⁿ in ascending collapse order, each step a
// single horn- (steps 0..n-1) or boundary- (step n) filling subproblem
// against p.  The result is verified by composition before return.
struct PrismFillResult {
    std::optional<SimplicialMap> lift;
    int failed_step = -1;
    std::string note;
};
PrismFillResult prism_filler(const SimplicialMap& p, const LiftingProblem& prob);

// For a Kan fibration the prism family (n >= 0) and the boundary family
// (n >= 1) hold or fail together; this runs both and compares.  A map not
// certified Kan up to n_max+1 is inapplicable, not failed.
struct EquivalenceVerdict {
    bool applicable = false;     // certified Kan up to n_max+1
    bool prism_holds = false;    // pushout-products of i_1 with i_n, n in [0, n_max]
    bool boundary_holds = false; // i_n for n in [1, n_max]
    bool agree = false;
};
EquivalenceVerdict prism_boundary_equivalence(const SimplicialMap& p, int n_max);

// Best-effort search for i as a retract of j in the arrow category.
struct RetractDiagram {
    SimplicialMap a;  // A -> C
    SimplicialMap b;  // B -> D
    SimplicialMap r;  // C -> A
    SimplicialMap s;  // D -> B
};
struct RetractSearchResult {
    enum class Status { found, absent, budget_exhausted };
    Status status = Status::absent;
    std::optional<RetractDiagram> diagram;
};
RetractSearchResult retract_search(const SimplicialMap& i, const SimplicialMap& j,
                                   std::uint64_t budget);

// Every commuting square (bottom, top) of the mono i against p, visited in
// canonical (bottom, then top) order; the visitor returns false to stop.
void for_each_square(const SimplicialMap& i, const SimplicialMap& p,
                     const std::function<bool(const SimplicialMap&, const SimplicialMap&)>& visit);

// Every map B -> X extending the constraints, in deterministic canonical order.
void for_each_map(const SSetPtr& B, const SSetPtr& X,
                  const std::map<std::string, ExprSpec>& constraints,
                  const std::function<bool(const SimplicialMap&)>& visit);
std::vector<SimplicialMap> enumerate_maps(const SSetPtr& B, const SSetPtr& X,
                                          const std::map<std::string, ExprSpec>& constraints = {});

nlohmann::json rlp_report_to_json(const RLPReport& report);

// Default search bound: dim(total space) + 2, at least 1.
int default_bound(const SimplicialMap& p);

}  // namespace sset

#endif
