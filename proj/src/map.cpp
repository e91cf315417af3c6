#include "sset/map.hpp"

#include <algorithm>

#include "sset/errors.hpp"

namespace sset {

SimplicialMap::SimplicialMap(SSetPtr domain, SSetPtr codomain, std::vector<SimplexExpr> assignments)
    : dom_(std::move(domain)), cod_(std::move(codomain)), assign_(std::move(assignments)) {
    if (!dom_ || !cod_) throw MalformedError("map endpoints must be non-null");
    if (static_cast<int>(assign_.size()) != dom_->size())
        throw MalformedError("map must assign every nondegenerate domain simplex");
    for (int i = 0; i < dom_->size(); ++i) {
        const SimplexExpr& e = assign_[static_cast<std::size_t>(i)];
        cod_->require_expr(e);
        if (e.dim() != dom_->simplex(i).dim)
            throw MalformedError("assignment of '" + dom_->simplex(i).id +
                                 "' does not preserve dimension");
    }
}

SimplicialMap::SimplicialMap(SSetPtr domain, SSetPtr codomain,
                             const std::map<std::string, ExprSpec>& assignments)
    : dom_(std::move(domain)), cod_(std::move(codomain)) {
    if (!dom_ || !cod_) throw MalformedError("map endpoints must be non-null");
    if (static_cast<int>(assignments.size()) != dom_->size())
        throw MalformedError("map must assign every nondegenerate domain simplex exactly once");
    assign_.resize(static_cast<std::size_t>(dom_->size()));
    for (const auto& [id, spec] : assignments) {
        int idx = dom_->require_index(id);
        assign_[static_cast<std::size_t>(idx)] = cod_->expr_from_spec(spec, dom_->simplex(idx).dim);
    }
}

SimplexExpr SimplicialMap::value(const SimplexExpr& e) const {
    dom_->require_expr(e);
    const SimplexExpr& v = assign_[static_cast<std::size_t>(e.base)];
    return SimplexExpr{v.base, compose(v.surj, e.surj)};
}

ValidationReport SimplicialMap::validate() const {
    for (int i = 0; i < dom_->size(); ++i) {
        const Simplex& s = dom_->simplex(i);
        SimplexExpr top{i, OrdinalSurjection{s.dim, 0}};
        const SimplexExpr& v = assign_[static_cast<std::size_t>(i)];
        for (int k = 0; k <= s.dim && s.dim > 0; ++k) {
            SimplexExpr lhs = value(dom_->face(top, k));
            SimplexExpr rhs = cod_->face(v, k);
            if (!(lhs == rhs))
                return ValidationReport{false, "map does not commute with d" + std::to_string(k) +
                                                   " at simplex '" + s.id + "'"};
        }
    }
    return ValidationReport{};
}

bool SimplicialMap::is_mono() const {
    std::vector<char> hit(static_cast<std::size_t>(cod_->size()), 0);
    for (const auto& e : assign_) {
        if (!e.is_nondegenerate()) return false;
        if (hit[static_cast<std::size_t>(e.base)]) return false;
        hit[static_cast<std::size_t>(e.base)] = 1;
    }
    return true;
}

bool SimplicialMap::operator==(const SimplicialMap& other) const {
    if (!valid() || !other.valid()) return valid() == other.valid();
    return dom_->same_presentation(*other.dom_) && cod_->same_presentation(*other.cod_) &&
           assign_ == other.assign_;
}

SimplicialMap identity(const SSetPtr& X) {
    std::vector<SimplexExpr> assign;
    assign.reserve(static_cast<std::size_t>(X->size()));
    for (int i = 0; i < X->size(); ++i)
        assign.push_back(SimplexExpr{i, OrdinalSurjection{X->simplex(i).dim, 0}});
    return SimplicialMap{X, X, std::move(assign)};
}

SimplicialMap compose(const SimplicialMap& f, const SimplicialMap& g) {
    require_compatible(f.codomain(), g.domain(), "compose");
    std::vector<SimplexExpr> assign;
    assign.reserve(f.assignments().size());
    for (const auto& e : f.assignments()) assign.push_back(g.value(e));
    return SimplicialMap{f.domain(), g.codomain(), std::move(assign)};
}

Subcomplex image(const SimplicialMap& f) {
    const SSetPtr& X = f.codomain();
    std::vector<char> in(static_cast<std::size_t>(X->size()), 0);
    for (const auto& e : f.assignments()) in[static_cast<std::size_t>(e.base)] = 1;
    Subcomplex out{X, {}};
    for (int i = 0; i < X->size(); ++i)
        if (in[static_cast<std::size_t>(i)]) out.members.push_back(i);
    if (!is_face_closed(*X, out.members))
        throw InternalError("image of a valid map must be face-closed");
    return out;
}

bool compatible(const SSetPtr& a, const SSetPtr& b) {
    return a == b || a->same_presentation(*b);
}

void require_compatible(const SSetPtr& a, const SSetPtr& b, const std::string& what) {
    if (!compatible(a, b))
        throw PreconditionError(what + ": incompatible sets '" + a->name() + "' and '" + b->name() +
                                "'");
}

}  // namespace sset
