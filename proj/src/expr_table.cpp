#include "sset/expr_table.hpp"

#include "sset/errors.hpp"

namespace sset {

namespace {

inline std::uint64_t key_of(const SimplexExpr& e) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(e.base)) << 32) | e.surj.collapse;
}

}  // namespace

ExprTable::ExprTable(SSetPtr X, int max_dim) : X_(std::move(X)) {
    if (max_dim < 0) max_dim = 0;
    levels_.resize(static_cast<std::size_t>(max_dim) + 1);
    lookup_.resize(static_cast<std::size_t>(max_dim) + 1);
    faces_.resize(static_cast<std::size_t>(max_dim) + 1);
    for (int d = 0; d <= max_dim; ++d) {
        auto& lvl = levels_[static_cast<std::size_t>(d)];
        for (int b = 0; b < X_->size(); ++b) {
            const int m = X_->simplex(b).dim;
            if (m > d) break;  // simplices are sorted by dimension
            for (CollapseMask mask : collapse_sets(d, d - m))
                lvl.push_back(SimplexExpr{b, OrdinalSurjection{d, mask}});
        }
        auto& look = lookup_[static_cast<std::size_t>(d)];
        look.reserve(lvl.size() * 2);
        for (int i = 0; i < static_cast<int>(lvl.size()); ++i)
            look.emplace(key_of(lvl[static_cast<std::size_t>(i)]), i);
    }
    for (int d = 1; d <= max_dim; ++d) {
        const auto& lvl = levels_[static_cast<std::size_t>(d)];
        auto& fc = faces_[static_cast<std::size_t>(d)];
        fc.resize(lvl.size() * static_cast<std::size_t>(d + 1));
        for (std::size_t i = 0; i < lvl.size(); ++i)
            for (int k = 0; k <= d; ++k)
                fc[i * static_cast<std::size_t>(d + 1) + static_cast<std::size_t>(k)] =
                    index_of(X_->face(lvl[i], k));
    }
}

int ExprTable::index_of(const SimplexExpr& e) const {
    const auto& look = lookup_[static_cast<std::size_t>(e.dim())];
    auto it = look.find(key_of(e));
    if (it == look.end()) throw InternalError("expression missing from table");
    return it->second;
}

FiberIndex make_fiber_index(const ExprTable& ytab, const ExprTable& xtab, const SimplicialMap& p) {
    FiberIndex out;
    const int top = std::min(ytab.max_dim(), xtab.max_dim());
    out.fibers.resize(static_cast<std::size_t>(top) + 1);
    out.p_val.resize(static_cast<std::size_t>(top) + 1);
    for (int d = 0; d <= top; ++d) {
        out.fibers[static_cast<std::size_t>(d)].resize(xtab.level(d).size());
        auto& pv = out.p_val[static_cast<std::size_t>(d)];
        pv.resize(ytab.level(d).size());
        for (int i = 0; i < static_cast<int>(ytab.level(d).size()); ++i) {
            int x = xtab.index_of(p.value(ytab.level(d)[static_cast<std::size_t>(i)]));
            pv[static_cast<std::size_t>(i)] = x;
            out.fibers[static_cast<std::size_t>(d)][static_cast<std::size_t>(x)].push_back(i);
        }
    }
    return out;
}

SearchOutcome search_maps(const SSetPtr& domain, const ExprTable& table,
                          const std::vector<std::vector<int>>& candidates, bool reversed,
                          std::uint64_t* budget,
                          const std::function<bool(const std::vector<int>&)>& visit) {
    const int n = domain->size();
    std::vector<int> assign(static_cast<std::size_t>(n), -1);
    std::vector<int> expected_buf;

    auto rec = [&](auto&& self, int s) -> SearchOutcome {
        if (s == n) return visit(assign) ? SearchOutcome::completed : SearchOutcome::stopped;
        const Simplex& sx = domain->simplex(s);
        const int d = sx.dim;
        // Face values are forced by earlier assignments; resolve them once,
        // so the candidate loop only compares precomputed indices.
        const std::size_t base = expected_buf.size();
        for (int k = 0; k <= d && d > 0; ++k) {
            const SimplexExpr& fe = sx.faces[static_cast<std::size_t>(k)];
            const SimplexExpr& av =
                table.level(fe.surj.target_dim())[static_cast<std::size_t>(
                    assign[static_cast<std::size_t>(fe.base)])];
            expected_buf.push_back(table.index_of(SimplexExpr{av.base, compose(av.surj, fe.surj)}));
        }
        const int* expected = expected_buf.data() + base;
        const auto& cands = candidates[static_cast<std::size_t>(s)];
        const int sz = static_cast<int>(cands.size());
        for (int t = 0; t < sz; ++t) {
            int cand = cands[static_cast<std::size_t>(reversed ? sz - 1 - t : t)];
            if (budget) {
                if (*budget == 0) {
                    expected_buf.resize(base);
                    return SearchOutcome::out_of_budget;
                }
                --*budget;
            }
            bool ok = true;
            for (int k = 0; k <= d && d > 0; ++k)
                ok = ok && table.face_index(d, cand, k) == expected[k];
            if (!ok) continue;
            assign[static_cast<std::size_t>(s)] = cand;
            SearchOutcome r = self(self, s + 1);
            expected = expected_buf.data() + base;  // visitor recursion may reallocate
            if (r != SearchOutcome::completed) {
                expected_buf.resize(base);
                return r;
            }
        }
        assign[static_cast<std::size_t>(s)] = -1;
        expected_buf.resize(base);
        return SearchOutcome::completed;
    };
    return rec(rec, 0);
}

SimplicialMap materialize_map(const SSetPtr& domain, const ExprTable& table,
                              const std::vector<int>& local_assignment) {
    std::vector<SimplexExpr> assign;
    assign.reserve(local_assignment.size());
    for (int i = 0; i < domain->size(); ++i)
        assign.push_back(table.level(domain->simplex(i).dim)[static_cast<std::size_t>(
            local_assignment[static_cast<std::size_t>(i)])]);
    return SimplicialMap{domain, table.set(), std::move(assign)};
}

}  // namespace sset
