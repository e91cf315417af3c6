#include "sset/simplicial_set.hpp"

#include <algorithm>

#include "sset/errors.hpp"

namespace sset {

namespace {

bool canonical_simplex_less(const Simplex& a, const Simplex& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.id < b.id;
}

}  // namespace

SimplicialSet::SimplicialSet(std::string name, std::vector<SimplexSpec> spec) : name_(std::move(name)) {
    std::vector<Simplex> raw;
    raw.reserve(spec.size());
    for (auto& s : spec) {
        if (s.dim < 0 || s.dim > kMaxDim)
            throw MalformedError("simplex '" + s.id + "' has dimension out of range");
        if (static_cast<int>(s.faces.size()) != (s.dim == 0 ? 0 : s.dim + 1))
            throw MalformedError("simplex '" + s.id + "' of dimension " + std::to_string(s.dim) +
                                 " must list " + std::to_string(s.dim == 0 ? 0 : s.dim + 1) + " faces");
        raw.push_back(Simplex{s.id, s.dim, {}});
    }
    std::stable_sort(raw.begin(), raw.end(), canonical_simplex_less);
    for (int i = 0; i < static_cast<int>(raw.size()); ++i) {
        if (!index_.emplace(raw[i].id, i).second)
            throw MalformedError("duplicate simplex id '" + raw[i].id + "'");
    }
    simplices_ = std::move(raw);
    // Second pass: resolve faces against the final index.
    for (auto& s : spec) {
        Simplex& dst = simplices_[static_cast<std::size_t>(index_.at(s.id))];
        dst.faces.reserve(s.faces.size());
        for (int k = 0; k < static_cast<int>(s.faces.size()); ++k) {
            SimplexExpr e;
            try {
                e = expr_from_spec(s.faces[static_cast<std::size_t>(k)], s.dim - 1);
            } catch (const MalformedError& err) {
                throw MalformedError("face d" + std::to_string(k) + " of simplex '" + s.id +
                                     "': " + err.what());
            }
            dst.faces.push_back(e);
        }
    }
}

std::optional<int> SimplicialSet::index_of(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

int SimplicialSet::require_index(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end())
        throw MalformedError("unknown simplex id '" + id + "' in '" + name_ + "'");
    return it->second;
}

int SimplicialSet::count_nondegenerate(int dim) const {
    int n = 0;
    for (const auto& s : simplices_)
        if (s.dim == dim) ++n;
    return n;
}

SimplexExpr SimplicialSet::apply_monotone(std::span<const int> alpha, SimplexExpr e) const {
    require_expr(e);
    const int k = static_cast<int>(alpha.size()) - 1;
    if (k < 0) throw MalformedError("empty ordinal map");
    for (int i = 0; i <= k; ++i) {
        if (alpha[static_cast<std::size_t>(i)] < 0 || alpha[static_cast<std::size_t>(i)] > e.dim())
            throw MalformedError("ordinal map value out of range");
        if (i > 0 && alpha[static_cast<std::size_t>(i)] < alpha[static_cast<std::size_t>(i - 1)])
            throw MalformedError("ordinal map not monotone");
    }

    // beta = e.surj ∘ alpha : [k] -> [dim base]
    std::vector<int> beta(static_cast<std::size_t>(k) + 1);
    for (int i = 0; i <= k; ++i) beta[static_cast<std::size_t>(i)] = e.surj(alpha[static_cast<std::size_t>(i)]);

    int base = e.base;
    for (;;) {
        const Simplex& bs = simplices_[static_cast<std::size_t>(base)];
        const int m = bs.dim;
        // Largest value of [m] missed by beta (beta is monotone).
        int missed = -1;
        {
            int expect = m;
            std::size_t pos = beta.size();
            while (expect >= 0) {
                if (pos > 0 && beta[pos - 1] == expect) {
                    while (pos > 0 && beta[pos - 1] == expect) --pos;
                    --expect;
                } else {
                    missed = expect;
                    break;
                }
            }
        }
        if (missed < 0) {
            // beta surjective: canonical form reached.
            OrdinalSurjection s;
            s.source_dim = k;
            for (int i = 0; i < k; ++i)
                if (beta[static_cast<std::size_t>(i)] == beta[static_cast<std::size_t>(i + 1)])
                    s.collapse |= CollapseMask{1} << i;
            return SimplexExpr{base, s};
        }
        // beta factors through delta_missed; substitute the stored face and
        // continue with theta ∘ gamma where gamma drops the missed value.
        const SimplexExpr& f = bs.faces[static_cast<std::size_t>(missed)];
        for (auto& v : beta) {
            if (v > missed) --v;
            v = f.surj(v);
        }
        base = f.base;
    }
}

SimplexExpr SimplicialSet::face(const SimplexExpr& e, int i) const {
    const int n = e.dim();
    if (n <= 0 || i < 0 || i > n)
        throw MalformedError("face index " + std::to_string(i) + " out of range for dimension " +
                             std::to_string(n));
    std::vector<int> alpha;
    alpha.reserve(static_cast<std::size_t>(n));
    for (int j = 0; j <= n; ++j)
        if (j != i) alpha.push_back(j);
    return apply_monotone(alpha, e);
}

SimplexExpr SimplicialSet::degeneracy(const SimplexExpr& e, int i) const {
    require_expr(e);
    const int n = e.dim();
    if (i < 0 || i > n)
        throw MalformedError("degeneracy index " + std::to_string(i) + " out of range for dimension " +
                             std::to_string(n));
    if (n + 1 > kMaxDim) throw MalformedError("degeneracy exceeds supported dimension");
    return SimplexExpr{e.base, precompose_degeneracy(e.surj, i)};
}

int SimplicialSet::vertex_base(const SimplexExpr& e, int j) const {
    if (j < 0 || j > e.dim()) throw MalformedError("vertex index out of range");
    std::vector<int> alpha{j};
    return apply_monotone(alpha, e).base;
}

bool SimplicialSet::expr_valid(const SimplexExpr& e) const {
    if (e.base < 0 || e.base >= size()) return false;
    if (e.surj.source_dim < 0 || e.surj.source_dim > kMaxDim) return false;
    if ((e.surj.collapse & ~low_bits(e.surj.source_dim)) != 0) return false;
    return e.surj.target_dim() == simplices_[static_cast<std::size_t>(e.base)].dim;
}

void SimplicialSet::require_expr(const SimplexExpr& e) const {
    if (!expr_valid(e)) throw MalformedError("malformed simplex expression over '" + name_ + "'");
}

SimplexExpr SimplicialSet::expr_from_spec(const ExprSpec& spec, int expected_dim) const {
    SimplexExpr e;
    e.base = require_index(spec.target);
    const int target_dim = simplices_[static_cast<std::size_t>(e.base)].dim;
    e.surj.source_dim = target_dim + static_cast<int>(spec.collapse.size());
    if (e.surj.source_dim > kMaxDim)
        throw MalformedError("expression dimension out of range");
    e.surj.collapse = collapse_from_list(spec.collapse, e.surj.source_dim);
    if (expected_dim >= 0 && e.dim() != expected_dim)
        throw MalformedError("expression has dimension " + std::to_string(e.dim()) + ", expected " +
                             std::to_string(expected_dim));
    return e;
}

ExprSpec SimplicialSet::expr_to_spec(const SimplexExpr& e) const {
    require_expr(e);
    return ExprSpec{collapse_to_list(e.surj.collapse), simplices_[static_cast<std::size_t>(e.base)].id};
}

ValidationReport SimplicialSet::validate() const {
    for (int idx = 0; idx < size(); ++idx) {
        const Simplex& s = simplices_[static_cast<std::size_t>(idx)];
        const int d = s.dim;
        if (d < 2) continue;  // no composable face pairs below dim 2
        SimplexExpr top{idx, OrdinalSurjection{d, 0}};
        for (int j = 1; j <= d; ++j) {
            for (int i = 0; i < j; ++i) {
                SimplexExpr lhs = face(face(top, j), i);
                SimplexExpr rhs = face(face(top, i), j - 1);
                if (!(lhs == rhs)) {
                    return ValidationReport{
                        false, "simplex '" + s.id + "' violates d" + std::to_string(i) + " d" +
                                   std::to_string(j) + " = d" + std::to_string(j - 1) + " d" +
                                   std::to_string(i)};
                }
            }
        }
    }
    return ValidationReport{};
}

bool SimplicialSet::same_presentation(const SimplicialSet& other) const {
    if (size() != other.size()) return false;
    for (int i = 0; i < size(); ++i) {
        const Simplex& a = simplices_[static_cast<std::size_t>(i)];
        const Simplex& b = other.simplices_[static_cast<std::size_t>(i)];
        if (a.id != b.id || a.dim != b.dim || a.faces.size() != b.faces.size()) return false;
        for (std::size_t k = 0; k < a.faces.size(); ++k)
            if (!(a.faces[k] == b.faces[k])) return false;
    }
    return true;
}

SSetPtr renamed(const SSetPtr& X, std::string name) {
    std::vector<SimplexSpec> spec;
    spec.reserve(static_cast<std::size_t>(X->size()));
    for (const auto& s : X->simplices()) {
        SimplexSpec out{s.id, s.dim, {}};
        for (const auto& f : s.faces) out.faces.push_back(X->expr_to_spec(f));
        spec.push_back(std::move(out));
    }
    return make_sset(std::move(name), std::move(spec));
}

bool Subcomplex::contains(int idx) const {
    return std::binary_search(members.begin(), members.end(), idx);
}

std::vector<std::string> Subcomplex::member_ids() const {
    std::vector<std::string> out;
    out.reserve(members.size());
    for (int m : members) out.push_back(ambient->simplex(m).id);
    return out;
}

bool Subcomplex::operator==(const Subcomplex& other) const {
    return ambient->same_presentation(*other.ambient) && members == other.members;
}

Subcomplex subcomplex_closure(const SSetPtr& X, const std::vector<int>& seed) {
    std::vector<char> in(static_cast<std::size_t>(X->size()), 0);
    std::vector<int> stack;
    for (int s : seed) {
        if (s < 0 || s >= X->size()) throw MalformedError("unknown simplex index in closure seed");
        if (!in[static_cast<std::size_t>(s)]) {
            in[static_cast<std::size_t>(s)] = 1;
            stack.push_back(s);
        }
    }
    while (!stack.empty()) {
        int cur = stack.back();
        stack.pop_back();
        for (const auto& f : X->simplex(cur).faces) {
            if (!in[static_cast<std::size_t>(f.base)]) {
                in[static_cast<std::size_t>(f.base)] = 1;
                stack.push_back(f.base);
            }
        }
    }
    Subcomplex out{X, {}};
    for (int i = 0; i < X->size(); ++i)
        if (in[static_cast<std::size_t>(i)]) out.members.push_back(i);
    return out;
}

Subcomplex subcomplex_closure_ids(const SSetPtr& X, const std::vector<std::string>& seed_ids) {
    std::vector<int> seed;
    seed.reserve(seed_ids.size());
    for (const auto& id : seed_ids) seed.push_back(X->require_index(id));
    return subcomplex_closure(X, seed);
}

bool is_face_closed(const SimplicialSet& X, const std::vector<int>& members) {
    std::vector<char> in(static_cast<std::size_t>(X.size()), 0);
    for (int m : members) in[static_cast<std::size_t>(m)] = 1;
    for (int m : members)
        for (const auto& f : X.simplex(m).faces)
            if (!in[static_cast<std::size_t>(f.base)]) return false;
    return true;
}

}  // namespace sset
