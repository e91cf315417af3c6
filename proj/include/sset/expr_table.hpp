#ifndef SSET_EXPR_TABLE_HPP
#define SSET_EXPR_TABLE_HPP

#include <cstdint>
#include <functional>
#include <unordered_map>
#include <vector>

#include "sset/map.hpp"
#include "sset/simplicial_set.hpp"

namespace sset {

// All expressions of a set, tabulated per dimension in canonical order
// (base index, then collapse), with face actions resolved to level-local
// indices.  Rebuilt per operation; holds no shared mutable state.
class ExprTable {
  public:
    ExprTable(SSetPtr X, int max_dim);

    const SSetPtr& set() const { return X_; }
    int max_dim() const { return static_cast<int>(levels_.size()) - 1; }
    const std::vector<SimplexExpr>& level(int d) const {
        return levels_[static_cast<std::size_t>(d)];
    }
    // Local index of a canonical expression within its level; throws on miss.
    int index_of(const SimplexExpr& e) const;
    // Local index into level d-1 of the k-th face of level-d expression `local`.
    int face_index(int d, int local, int k) const {
        return faces_[static_cast<std::size_t>(d)]
                     [static_cast<std::size_t>(local) * static_cast<std::size_t>(d + 1) +
                      static_cast<std::size_t>(k)];
    }

  private:
    SSetPtr X_;
    std::vector<std::vector<SimplexExpr>> levels_;
    std::vector<std::unordered_map<std::uint64_t, int>> lookup_;
    std::vector<std::vector<int>> faces_;
};

// fibers[d][x_local] lists, ascending, the level-d expressions of p's domain
// whose p-value is the given expression of p's codomain.
struct FiberIndex {
    std::vector<std::vector<std::vector<int>>> fibers;
    std::vector<std::vector<int>> p_val;  // p_val[d][y_local] = x_local
};
FiberIndex make_fiber_index(const ExprTable& ytab, const ExprTable& xtab, const SimplicialMap& p);

enum class SearchOutcome { completed, stopped, out_of_budget };

// Backtracking enumeration of simplicial maps domain -> table.set():
// nondegenerate domain simplices are assigned in canonical order from the
// per-simplex candidate lists, pruning on face-commutation against values
// already assigned.  The visitor returns false to stop the search.  When
// `budget` is given, each candidate considered costs one unit.
SearchOutcome search_maps(const SSetPtr& domain, const ExprTable& table,
                          const std::vector<std::vector<int>>& candidates, bool reversed,
                          std::uint64_t* budget,
                          const std::function<bool(const std::vector<int>&)>& visit);

SimplicialMap materialize_map(const SSetPtr& domain, const ExprTable& table,
                              const std::vector<int>& local_assignment);

}  // namespace sset

#endif
