#ifndef SSET_MAP_HPP
#define SSET_MAP_HPP

#include <map>
#include <string>
#include <vector>

#include "sset/simplicial_set.hpp"

namespace sset {

// A simplicial map, given by a codomain expression for each nondegenerate
// domain simplex; the action on degenerate simplices is forced.
class SimplicialMap {
  public:
    SimplicialMap() = default;
    SimplicialMap(SSetPtr domain, SSetPtr codomain, std::vector<SimplexExpr> assignments);
    SimplicialMap(SSetPtr domain, SSetPtr codomain, const std::map<std::string, ExprSpec>& assignments);

    bool valid() const { return dom_ != nullptr; }
    const SSetPtr& domain() const { return dom_; }
    const SSetPtr& codomain() const { return cod_; }
    const SimplexExpr& assignment(int domain_idx) const {
        return assign_[static_cast<std::size_t>(domain_idx)];
    }
    const std::vector<SimplexExpr>& assignments() const { return assign_; }

    // Value on an arbitrary expression of the domain, by whiskering the
    // degeneracy word through: value((eta, b)) = eta ∘ value(b).
    SimplexExpr value(const SimplexExpr& e) const;

    // Face-commutation on every nondegenerate domain simplex; names the
    // first violating simplex and face index.
    ValidationReport validate() const;

    // Injective on (equivalently: nondegenerate-and-injective over)
    // nondegenerate simplices.
    bool is_mono() const;

    bool operator==(const SimplicialMap& other) const;

  private:
    SSetPtr dom_;
    SSetPtr cod_;
    std::vector<SimplexExpr> assign_;
};

SimplicialMap identity(const SSetPtr& X);

// Pipeline order: compose(f, g) = g ∘ f, requires codomain(f) = domain(g).
SimplicialMap compose(const SimplicialMap& f, const SimplicialMap& g);

// Members are { base(f(a)) : a nondegenerate }, asserted face-closed.
Subcomplex image(const SimplicialMap& f);

// Two sets are interchangeable as map endpoints when they are the same
// object or structurally identical presentations.
bool compatible(const SSetPtr& a, const SSetPtr& b);
void require_compatible(const SSetPtr& a, const SSetPtr& b, const std::string& what);

}  // namespace sset

#endif
