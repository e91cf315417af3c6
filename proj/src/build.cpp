#include "sset/build.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "sset/errors.hpp"

namespace sset {

namespace {

std::string vertex_set_id(const std::vector<int>& vertices) {
    bool small = true;
    for (int v : vertices)
        if (v > 9) small = false;
    std::string id;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (i > 0 && !small) id += ".";
        id += std::to_string(vertices[static_cast<std::size_t>(i)]);
    }
    return id;
}

std::vector<SimplexSpec> simplex_subsets(int n, bool include_top, int omit_vertex) {
    std::vector<SimplexSpec> spec;
    for (std::uint32_t bits = 1; bits < (1u << (n + 1)); ++bits) {
        std::vector<int> verts;
        for (int v = 0; v <= n; ++v)
            if (bits & (1u << v)) verts.push_back(v);
        const int d = static_cast<int>(verts.size()) - 1;
        if (!include_top && d == n) continue;
        if (omit_vertex >= 0 && d == n - 1) {
            // When building a horn, the omitted face is the one missing
            // exactly the distinguished vertex.
            if (!(bits & (1u << omit_vertex))) continue;
        }
        SimplexSpec s{vertex_set_id(verts), d, {}};
        for (int k = 0; k <= d && d > 0; ++k) {
            std::vector<int> fv = verts;
            fv.erase(fv.begin() + k);
            s.faces.push_back(ExprSpec{{}, vertex_set_id(fv)});
        }
        spec.push_back(std::move(s));
    }
    return spec;
}

SimplicialMap inclusion_by_id(const SSetPtr& object, const SSetPtr& ambient) {
    std::vector<SimplexExpr> assign;
    assign.reserve(static_cast<std::size_t>(object->size()));
    for (const auto& s : object->simplices()) {
        int idx = ambient->require_index(s.id);
        assign.push_back(SimplexExpr{idx, OrdinalSurjection{s.dim, 0}});
    }
    return SimplicialMap{object, ambient, std::move(assign)};
}

// eta = eta' ∘ rho_C for C ⊆ collapse(eta); returns eta'.
OrdinalSurjection strip_collapse(const OrdinalSurjection& eta, CollapseMask c) {
    OrdinalSurjection out;
    out.source_dim = eta.source_dim - std::popcount(c);
    CollapseMask rest = eta.collapse & ~c;
    while (rest) {
        int j = std::countr_zero(rest);
        rest &= rest - 1;
        out.collapse |= CollapseMask{1} << (j - std::popcount(c & low_bits(j)));
    }
    return out;
}

struct PairKey {
    int base1;
    CollapseMask c1;
    int base2;
    CollapseMask c2;
    auto operator<=>(const PairKey&) const = default;
};

}  // namespace

std::string render_expr(const SimplicialSet& X, const SimplexExpr& e) {
    std::string s = X.simplex(e.base).id;
    if (e.surj.collapse != 0) s += "!" + collapse_to_string(e.surj.collapse);
    return s;
}

std::vector<int> parse_vertex_id(const std::string& id) {
    std::vector<int> out;
    if (id.find('.') == std::string::npos) {
        for (char ch : id) out.push_back(ch - '0');
    } else {
        std::size_t pos = 0;
        while (pos < id.size()) {
            std::size_t dot = id.find('.', pos);
            if (dot == std::string::npos) dot = id.size();
            out.push_back(std::stoi(id.substr(pos, dot - pos)));
            pos = dot + 1;
        }
    }
    return out;
}

SSetPtr empty_sset(std::string name) { return make_sset(std::move(name), {}); }

SSetPtr std_simplex(int n) {
    if (n < 0) throw PreconditionError("std_simplex requires n >= 0");
    if (n > kMaxDim) throw PreconditionError("std_simplex dimension out of range");
    return make_sset("Delta(" + std::to_string(n) + ")", simplex_subsets(n, true, -1));
}

InclusionResult boundary(int n) {
    if (n < 0) throw PreconditionError("boundary requires n >= 0");
    if (n > kMaxDim) throw PreconditionError("boundary dimension out of range");
    SSetPtr ambient = std_simplex(n);
    SSetPtr object = make_sset("dDelta(" + std::to_string(n) + ")", simplex_subsets(n, false, -1));
    return InclusionResult{object, ambient, inclusion_by_id(object, ambient)};
}

InclusionResult horn(int n, int k) {
    if (n < 1) throw PreconditionError("horn requires n >= 1");
    if (n > kMaxDim) throw PreconditionError("horn dimension out of range");
    if (k < 0 || k > n) throw PreconditionError("horn index k out of range");
    SSetPtr ambient = std_simplex(n);
    SSetPtr object = make_sset("Horn(" + std::to_string(n) + "," + std::to_string(k) + ")",
                               simplex_subsets(n, false, k));
    return InclusionResult{object, ambient, inclusion_by_id(object, ambient)};
}

SpanResult product(const SSetPtr& X, const SSetPtr& Y) {
    // Enumerate jointly nondegenerate component pairs.
    std::map<PairKey, std::string> ids;
    struct Entry {
        SimplexExpr e1;
        SimplexExpr e2;
        std::string id;
    };
    std::vector<Entry> entries;
    for (int yi = 0; yi < X->size(); ++yi) {
        const int p = X->simplex(yi).dim;
        for (int zi = 0; zi < Y->size(); ++zi) {
            const int q = Y->simplex(zi).dim;
            if (p + q > kMaxDim)
                throw PreconditionError("product dimension exceeds supported range");
            for (int n = std::max(p, q); n <= p + q; ++n) {
                for (CollapseMask a : collapse_sets(n, n - p)) {
                    for (CollapseMask b : collapse_sets(n, n - q)) {
                        if (a & b) continue;
                        SimplexExpr e1{yi, OrdinalSurjection{n, a}};
                        SimplexExpr e2{zi, OrdinalSurjection{n, b}};
                        std::string id =
                            "(" + render_expr(*X, e1) + ")x(" + render_expr(*Y, e2) + ")";
                        ids.emplace(PairKey{yi, a, zi, b}, id);
                        entries.push_back(Entry{e1, e2, std::move(id)});
                    }
                }
            }
        }
    }

    std::vector<SimplexSpec> spec;
    spec.reserve(entries.size());
    for (const auto& en : entries) {
        const int n = en.e1.dim();
        SimplexSpec s{en.id, n, {}};
        for (int i = 0; i <= n && n > 0; ++i) {
            SimplexExpr a = X->face(en.e1, i);
            SimplexExpr b = Y->face(en.e2, i);
            CollapseMask common = a.surj.collapse & b.surj.collapse;
            OrdinalSurjection a1 = strip_collapse(a.surj, common);
            OrdinalSurjection b1 = strip_collapse(b.surj, common);
            auto it = ids.find(PairKey{a.base, a1.collapse, b.base, b1.collapse});
            if (it == ids.end()) throw InternalError("product face missing from enumeration");
            s.faces.push_back(ExprSpec{collapse_to_list(common), it->second});
        }
        spec.push_back(std::move(s));
    }
    SSetPtr object = make_sset("(" + X->name() + "x" + Y->name() + ")", std::move(spec));

    std::vector<SimplexExpr> p1(static_cast<std::size_t>(object->size()));
    std::vector<SimplexExpr> p2(static_cast<std::size_t>(object->size()));
    for (const auto& en : entries) {
        int idx = object->require_index(en.id);
        p1[static_cast<std::size_t>(idx)] = en.e1;
        p2[static_cast<std::size_t>(idx)] = en.e2;
    }
    return SpanResult{object, SimplicialMap{object, X, std::move(p1)},
                      SimplicialMap{object, Y, std::move(p2)}};
}

SpanResult pullback(const SimplicialMap& f, const SimplicialMap& g) {
    require_compatible(f.codomain(), g.codomain(), "pullback");
    SpanResult prod = product(f.domain(), g.domain());
    std::vector<int> members;
    for (int i = 0; i < prod.object->size(); ++i) {
        SimplexExpr e1 = prod.proj1.assignment(i);
        SimplexExpr e2 = prod.proj2.assignment(i);
        if (f.value(e1) == g.value(e2)) members.push_back(i);
    }
    if (!is_face_closed(*prod.object, members))
        throw InternalError("pullback members must be face-closed");
    Subcomplex sub{prod.object, std::move(members)};
    InclusionResult ext = extract(
        sub, "pb(" + f.domain()->name() + "," + g.domain()->name() + ";" + f.codomain()->name() + ")");
    return SpanResult{ext.object, compose(ext.inclusion, prod.proj1),
                      compose(ext.inclusion, prod.proj2)};
}

namespace {

std::vector<SimplexSpec> relabeled_specs(const SimplicialSet& X, const std::string& prefix) {
    std::vector<SimplexSpec> spec;
    spec.reserve(static_cast<std::size_t>(X.size()));
    for (const auto& s : X.simplices()) {
        SimplexSpec out{prefix + s.id, s.dim, {}};
        for (const auto& fe : s.faces) {
            ExprSpec fs = X.expr_to_spec(fe);
            fs.target = prefix + fs.target;
            out.faces.push_back(std::move(fs));
        }
        spec.push_back(std::move(out));
    }
    return spec;
}

SimplicialMap injection_with_prefix(const SSetPtr& part, const SSetPtr& whole,
                                    const std::string& prefix) {
    std::vector<SimplexExpr> assign;
    assign.reserve(static_cast<std::size_t>(part->size()));
    for (const auto& s : part->simplices()) {
        int idx = whole->require_index(prefix + s.id);
        assign.push_back(SimplexExpr{idx, OrdinalSurjection{s.dim, 0}});
    }
    return SimplicialMap{part, whole, std::move(assign)};
}

}  // namespace

CoproductResult coproduct(const SSetPtr& X, const SSetPtr& Y) {
    std::vector<SimplexSpec> spec = relabeled_specs(*X, "l:");
    std::vector<SimplexSpec> right = relabeled_specs(*Y, "r:");
    spec.insert(spec.end(), std::make_move_iterator(right.begin()),
                std::make_move_iterator(right.end()));
    SSetPtr object = make_sset("(" + X->name() + "+" + Y->name() + ")", std::move(spec));
    return CoproductResult{object, injection_with_prefix(X, object, "l:"),
                           injection_with_prefix(Y, object, "r:")};
}

NaryCoproductResult coproduct_n(const std::vector<SSetPtr>& parts, const std::vector<int>& labels,
                                std::string name) {
    if (parts.size() != labels.size())
        throw PreconditionError("coproduct_n: one label per part required");
    std::vector<SimplexSpec> spec;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        auto part = relabeled_specs(*parts[i], "c" + std::to_string(labels[i]) + ":");
        spec.insert(spec.end(), std::make_move_iterator(part.begin()),
                    std::make_move_iterator(part.end()));
    }
    SSetPtr object = make_sset(std::move(name), std::move(spec));
    NaryCoproductResult out{object, {}};
    for (std::size_t i = 0; i < parts.size(); ++i)
        out.injections.push_back(
            injection_with_prefix(parts[i], object, "c" + std::to_string(labels[i]) + ":"));
    return out;
}

InclusionResult extract(const Subcomplex& sub, std::string name) {
    const SimplicialSet& X = *sub.ambient;
    if (!is_face_closed(X, sub.members))
        throw PreconditionError("extract requires a face-closed member set");
    std::vector<SimplexSpec> spec;
    spec.reserve(sub.members.size());
    for (int m : sub.members) {
        const Simplex& s = X.simplex(m);
        SimplexSpec out{s.id, s.dim, {}};
        for (const auto& fe : s.faces) out.faces.push_back(X.expr_to_spec(fe));
        spec.push_back(std::move(out));
    }
    SSetPtr object = make_sset(std::move(name), std::move(spec));
    return InclusionResult{object, sub.ambient, inclusion_by_id(object, sub.ambient)};
}

}  // namespace sset
