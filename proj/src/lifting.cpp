#include "sset/lifting.hpp"

#include <algorithm>
#include <numeric>

#include "sset/errors.hpp"
#include "sset/json_io.hpp"

namespace sset {

namespace {

std::vector<int> all_candidates(const ExprTable& tab, int dim) {
    std::vector<int> out(tab.level(dim).size());
    std::iota(out.begin(), out.end(), 0);
    return out;
}

// Shared scaffolding for lift searches against p over a fixed square bottom.
struct LiftContext {
    SSetPtr B;
    SSetPtr Y;
    ExprTable tabY;
    const FiberIndex* fib;

    std::vector<std::vector<int>> lift_candidates(const std::vector<int>& bottom_local,
                                                  const std::vector<int>& pins) const {
        std::vector<std::vector<int>> cands(static_cast<std::size_t>(B->size()));
        for (int b = 0; b < B->size(); ++b) {
            const int d = B->simplex(b).dim;
            if (pins[static_cast<std::size_t>(b)] >= 0)
                cands[static_cast<std::size_t>(b)] = {pins[static_cast<std::size_t>(b)]};
            else
                cands[static_cast<std::size_t>(b)] =
                    fib->fibers[static_cast<std::size_t>(d)][static_cast<std::size_t>(
                        bottom_local[static_cast<std::size_t>(b)])];
        }
        return cands;
    }
};

}  // namespace

std::string family_name(Family f) {
    switch (f) {
        case Family::boundary: return "boundary";
        case Family::horn: return "horn";
        case Family::prism: return "prism";
        case Family::single: return "single";
    }
    return "single";
}

int default_bound(const SimplicialMap& p) { return std::max(p.domain()->dim() + 2, 1); }

LiftingProblem make_lifting_problem(SimplicialMap left, SimplicialMap right, SimplicialMap top,
                                    SimplicialMap bottom) {
    require_compatible(left.domain(), top.domain(), "lifting problem (left/top)");
    require_compatible(left.codomain(), bottom.domain(), "lifting problem (left/bottom)");
    require_compatible(top.codomain(), right.domain(), "lifting problem (top/right)");
    require_compatible(bottom.codomain(), right.codomain(), "lifting problem (bottom/right)");
    if (!left.is_mono()) throw PreconditionError("lifting problem requires a mono left leg");
    if (!(compose(left, bottom) == compose(top, right)))
        throw PreconditionError("lifting problem square does not commute");
    return LiftingProblem{std::move(left), std::move(right), std::move(top), std::move(bottom)};
}

std::optional<SimplicialMap> solve_lift(const LiftingProblem& prob, bool reversed) {
    const SSetPtr& B = prob.left.codomain();
    const SSetPtr& Y = prob.right.domain();
    const SSetPtr& X = prob.right.codomain();
    const int D = std::max(B->dim(), 0);
    ExprTable tabX(X, D);
    ExprTable tabY(Y, D);
    FiberIndex fib = make_fiber_index(tabY, tabX, prob.right);

    std::vector<int> bottom_local(static_cast<std::size_t>(B->size()));
    for (int b = 0; b < B->size(); ++b)
        bottom_local[static_cast<std::size_t>(b)] = tabX.index_of(prob.bottom.assignment(b));
    std::vector<int> pins(static_cast<std::size_t>(B->size()), -1);
    for (int a = 0; a < prob.left.domain()->size(); ++a)
        pins[static_cast<std::size_t>(prob.left.assignment(a).base)] =
            tabY.index_of(prob.top.assignment(a));

    LiftContext ctx{B, Y, std::move(tabY), &fib};
    auto cands = ctx.lift_candidates(bottom_local, pins);

    std::optional<SimplicialMap> found;
    search_maps(B, ctx.tabY, cands, reversed, nullptr, [&](const std::vector<int>& assign) {
        found = materialize_map(B, ctx.tabY, assign);
        return false;
    });
    if (found) {
        if (!(compose(prob.left, *found) == prob.top) || !(compose(*found, prob.right) == prob.bottom))
            throw InternalError("lift fails its composition equations");
    }
    return found;
}

namespace {

// First square (canonical bottom-then-top order) against the given mono that
// admits no lift; nullopt when every square lifts.
std::optional<LiftingProblem> find_failing_square(const SimplicialMap& left, const SimplicialMap& p,
                                                  bool reversed) {
    if (!left.is_mono()) throw PreconditionError("rlp requires a mono left leg");
    const SSetPtr& A = left.domain();
    const SSetPtr& B = left.codomain();
    const SSetPtr& Y = p.domain();
    const SSetPtr& X = p.codomain();
    const int D = std::max(B->dim(), 0);
    ExprTable tabX(X, D);
    ExprTable tabY(Y, D);
    FiberIndex fib = make_fiber_index(tabY, tabX, p);

    std::vector<int> i_base(static_cast<std::size_t>(A->size()));
    for (int a = 0; a < A->size(); ++a)
        i_base[static_cast<std::size_t>(a)] = left.assignment(a).base;

    std::vector<std::vector<int>> bottom_cands(static_cast<std::size_t>(B->size()));
    for (int b = 0; b < B->size(); ++b)
        bottom_cands[static_cast<std::size_t>(b)] = all_candidates(tabX, B->simplex(b).dim);

    std::optional<LiftingProblem> failure;
    search_maps(B, tabX, bottom_cands, reversed, nullptr, [&](const std::vector<int>& vb) {
        // Compatible tops: u with p∘u = v∘i, i.e. u(a) in the fiber over v(i(a)).
        std::vector<std::vector<int>> top_cands(static_cast<std::size_t>(A->size()));
        for (int a = 0; a < A->size(); ++a) {
            const int d = A->simplex(a).dim;
            top_cands[static_cast<std::size_t>(a)] =
                fib.fibers[static_cast<std::size_t>(d)][static_cast<std::size_t>(
                    vb[static_cast<std::size_t>(i_base[static_cast<std::size_t>(a)])])];
        }
        bool abort = false;
        search_maps(A, tabY, top_cands, reversed, nullptr, [&](const std::vector<int>& ua) {
            std::vector<int> pins(static_cast<std::size_t>(B->size()), -1);
            for (int a = 0; a < A->size(); ++a)
                pins[static_cast<std::size_t>(i_base[static_cast<std::size_t>(a)])] =
                    ua[static_cast<std::size_t>(a)];
            std::vector<std::vector<int>> lift_cands(static_cast<std::size_t>(B->size()));
            for (int b = 0; b < B->size(); ++b) {
                if (pins[static_cast<std::size_t>(b)] >= 0)
                    lift_cands[static_cast<std::size_t>(b)] = {pins[static_cast<std::size_t>(b)]};
                else
                    lift_cands[static_cast<std::size_t>(b)] =
                        fib.fibers[static_cast<std::size_t>(B->simplex(b).dim)]
                                  [static_cast<std::size_t>(vb[static_cast<std::size_t>(b)])];
            }
            bool lifted = false;
            search_maps(B, tabY, lift_cands, reversed, nullptr, [&](const std::vector<int>&) {
                lifted = true;
                return false;
            });
            if (!lifted) {
                failure = make_lifting_problem(left, p, materialize_map(A, tabY, ua),
                                               materialize_map(B, tabX, vb));
                abort = true;
                return false;
            }
            return true;
        });
        return !abort;
    });
    return failure;
}

std::string range_note(Family fam, int lo, int hi) {
    return "exhaustive " + family_name(fam) + " check over n in [" + std::to_string(lo) + "," +
           std::to_string(hi) + "]";
}

}  // namespace

RLPReport rlp(const SimplicialMap& i, const SimplicialMap& p, bool reversed) {
    RLPReport rep;
    rep.family = Family::single;
    rep.dim_min = rep.dim_max = i.codomain()->dim();
    rep.note = "exhaustive check of one mono";
    if (auto fail = find_failing_square(i, p, reversed)) {
        rep.holds = false;
        rep.counterexample = Counterexample{i.codomain()->dim(), -1, std::move(*fail)};
    }
    return rep;
}

RLPReport boundary_rlp(const SimplicialMap& p, int n_min, int n_max, bool reversed) {
    if (n_min < 0) throw PreconditionError("boundary_rlp requires n_min >= 0");
    RLPReport rep;
    rep.family = Family::boundary;
    rep.dim_min = n_min;
    rep.dim_max = n_max;
    rep.note = range_note(Family::boundary, n_min, n_max);
    for (int n = n_min; n <= n_max; ++n) {
        InclusionResult inc = boundary(n);
        if (auto fail = find_failing_square(inc.inclusion, p, reversed)) {
            rep.holds = false;
            rep.counterexample = Counterexample{n, -1, std::move(*fail)};
            return rep;
        }
    }
    return rep;
}

RLPReport horn_rlp(const SimplicialMap& p, int n_max, bool reversed) {
    RLPReport rep;
    rep.family = Family::horn;
    rep.dim_min = 1;
    rep.dim_max = n_max;
    rep.note = range_note(Family::horn, 1, n_max);
    for (int n = 1; n <= n_max; ++n) {
        for (int k = 0; k <= n; ++k) {
            InclusionResult inc = horn(n, k);
            if (auto fail = find_failing_square(inc.inclusion, p, reversed)) {
                rep.holds = false;
                rep.counterexample = Counterexample{n, k, std::move(*fail)};
                return rep;
            }
        }
    }
    return rep;
}

RLPReport prism_rlp(const SimplicialMap& p, int n_max, bool reversed) {
    RLPReport rep;
    rep.family = Family::prism;
    rep.dim_min = 0;
    rep.dim_max = n_max;
    rep.note = range_note(Family::prism, 0, n_max);
    for (int n = 0; n <= n_max; ++n) {
        SimplicialMap left = pushout_product(boundary(1).inclusion, boundary(n).inclusion);
        if (auto fail = find_failing_square(left, p, reversed)) {
            rep.holds = false;
            rep.counterexample = Counterexample{n, -1, std::move(*fail)};
            return rep;
        }
    }
    return rep;
}

PushoutProductResult pushout_product_full(const SimplicialMap& i, const SimplicialMap& j) {
    if (!i.is_mono() || !j.is_mono())
        throw PreconditionError("pushout_product requires mono inputs");
    SpanResult prod = product(i.codomain(), j.codomain());
    Subcomplex imi = image(i);
    Subcomplex imj = image(j);
    std::vector<char> in1(static_cast<std::size_t>(i.codomain()->size()), 0);
    for (int m : imi.members) in1[static_cast<std::size_t>(m)] = 1;
    std::vector<char> in2(static_cast<std::size_t>(j.codomain()->size()), 0);
    for (int m : imj.members) in2[static_cast<std::size_t>(m)] = 1;

    std::vector<int> members;
    for (int w = 0; w < prod.object->size(); ++w) {
        if (in1[static_cast<std::size_t>(prod.proj1.assignment(w).base)] ||
            in2[static_cast<std::size_t>(prod.proj2.assignment(w).base)])
            members.push_back(w);
    }
    Subcomplex sub{prod.object, std::move(members)};
    InclusionResult part =
        extract(sub, "pp(" + i.codomain()->name() + "," + j.codomain()->name() + ")");
    return PushoutProductResult{std::move(prod), std::move(part)};
}

SimplicialMap pushout_product(const SimplicialMap& i, const SimplicialMap& j) {
    return pushout_product_full(i, j).part.inclusion;
}

PrismFillResult prism_filler(const SimplicialMap& p, const LiftingProblem& prob) {
    if (!(p == prob.right))
        throw PreconditionError("prism_filler: p is not the right leg of the square");
    const int n = prob.left.codomain()->dim() - 1;
    if (n < 0) return PrismFillResult{std::nullopt, -1, "left leg is not a prism inclusion"};
    PushoutProductResult pp =
        pushout_product_full(boundary(1).inclusion, boundary(n).inclusion);
    if (!prob.left.codomain()->same_presentation(*pp.prod.object) ||
        !prob.left.domain()->same_presentation(*pp.part.object))
        throw PreconditionError(
            "prism_filler: left leg is not the canonical pushout_product(i1, i_n) presentation");

    const SSetPtr& PR = prob.left.codomain();
    const SSetPtr& Y = prob.right.domain();

    // Partial lift, seeded with the top map over the pushout-product part.
    std::vector<std::optional<SimplexExpr>> h(static_cast<std::size_t>(PR->size()));
    for (int t = 0; t < pp.part.object->size(); ++t)
        h[static_cast<std::size_t>(pp.part.inclusion.assignment(t).base)] = prob.top.assignment(t);

    // Shuffle simplices, ordered by the collapse position of their base
    // component: shuffle k jumps between the levels of the prism after its
    // k-th vertex.
    std::vector<int> shuffle(static_cast<std::size_t>(n) + 1, -1);
    for (int w = 0; w < PR->size(); ++w) {
        if (PR->simplex(w).dim != n + 1) continue;
        CollapseMask c = pp.prod.proj2.assignment(w).surj.collapse;
        shuffle[static_cast<std::size_t>(std::countr_zero(c))] = w;
    }

    SSetPtr Delta = std_simplex(n + 1);
    for (int k = 0; k <= n; ++k) {
        const int sidx = shuffle[static_cast<std::size_t>(k)];
        // Classifying map of shuffle k: each cell of Delta(n+1) is carried to
        // the corresponding iterated face of the shuffle.
        std::vector<SimplexExpr> chi(static_cast<std::size_t>(Delta->size()));
        for (int f = 0; f < Delta->size(); ++f) {
            std::vector<int> alpha = parse_vertex_id(Delta->simplex(f).id);
            chi[static_cast<std::size_t>(f)] =
                PR->apply_monotone(alpha, SimplexExpr{sidx, OrdinalSurjection{n + 1, 0}});
        }

        InclusionResult inc = (k < n) ? horn(n + 1, k + 1) : boundary(n + 1);
        std::vector<SimplexExpr> top_assign;
        top_assign.reserve(static_cast<std::size_t>(inc.object->size()));
        bool seed_ok = true;
        for (int t = 0; t < inc.object->size() && seed_ok; ++t) {
            int f = Delta->require_index(inc.object->simplex(t).id);
            const SimplexExpr& ce = chi[static_cast<std::size_t>(f)];
            const auto& hv = h[static_cast<std::size_t>(ce.base)];
            if (!hv) {
                seed_ok = false;
                break;
            }
            top_assign.push_back(SimplexExpr{hv->base, compose(hv->surj, ce.surj)});
        }
        if (!seed_ok)
            return PrismFillResult{std::nullopt, k, "shuffle step " + std::to_string(k) +
                                                        ": boundary values incomplete"};
        std::vector<SimplexExpr> bottom_assign;
        bottom_assign.reserve(static_cast<std::size_t>(Delta->size()));
        for (int f = 0; f < Delta->size(); ++f)
            bottom_assign.push_back(prob.bottom.value(chi[static_cast<std::size_t>(f)]));

        LiftingProblem sub = make_lifting_problem(
            inc.inclusion, prob.right, SimplicialMap{inc.object, Y, std::move(top_assign)},
            SimplicialMap{Delta, prob.bottom.codomain(), std::move(bottom_assign)});
        std::optional<SimplicialMap> fill = solve_lift(sub);
        if (!fill)
            return PrismFillResult{std::nullopt, k,
                                   "no filler for shuffle step " + std::to_string(k) + " (" +
                                       ((k < n) ? "horn" : "boundary") + " subproblem)"};
        for (int f = 0; f < Delta->size(); ++f) {
            const SimplexExpr& ce = chi[static_cast<std::size_t>(f)];
            if (ce.surj.is_identity() && !h[static_cast<std::size_t>(ce.base)])
                h[static_cast<std::size_t>(ce.base)] = fill->assignment(f);
        }
    }

    std::vector<SimplexExpr> assign;
    assign.reserve(h.size());
    for (std::size_t w = 0; w < h.size(); ++w) {
        if (!h[w]) throw InternalError("prism fill left a simplex unassigned");
        assign.push_back(*h[w]);
    }
    SimplicialMap lift{PR, Y, std::move(assign)};
    if (!lift.validate().ok) throw InternalError("prism fill is not a simplicial map");
    if (!(compose(prob.left, lift) == prob.top) || !(compose(lift, prob.right) == prob.bottom))
        throw InternalError("prism fill fails its composition equations");
    return PrismFillResult{std::move(lift), -1, ""};
}

EquivalenceVerdict prism_boundary_equivalence(const SimplicialMap& p, int n_max) {
    EquivalenceVerdict v;
    v.applicable = horn_rlp(p, n_max + 1).holds;
    if (!v.applicable) return v;
    v.prism_holds = prism_rlp(p, n_max).holds;
    v.boundary_holds = boundary_rlp(p, 1, n_max).holds;
    v.agree = (v.prism_holds == v.boundary_holds);
    return v;
}

RetractSearchResult retract_search(const SimplicialMap& i, const SimplicialMap& j,
                                   std::uint64_t budget) {
    if (!i.is_mono() || !j.is_mono())
        throw PreconditionError("retract_search requires mono inputs");
    const SSetPtr& A = i.domain();
    const SSetPtr& B = i.codomain();
    const SSetPtr& C = j.domain();
    const SSetPtr& D = j.codomain();

    ExprTable tabD(D, std::max(B->dim(), 0));
    ExprTable tabA(A, std::max(C->dim(), 0));
    ExprTable tabB(B, std::max(D->dim(), 0));

    std::vector<int> jinv(static_cast<std::size_t>(D->size()), -1);
    for (int c = 0; c < C->size(); ++c)
        jinv[static_cast<std::size_t>(j.assignment(c).base)] = c;

    std::vector<std::vector<int>> b_cands(static_cast<std::size_t>(B->size()));
    for (int y = 0; y < B->size(); ++y) b_cands[static_cast<std::size_t>(y)] =
        all_candidates(tabD, B->simplex(y).dim);

    RetractSearchResult result;
    std::uint64_t left_budget = budget;
    SearchOutcome oc =
        search_maps(B, tabD, b_cands, false, &left_budget, [&](const std::vector<int>& vb) {
            // s∘b = id forces b to be a split mono: nondegenerate, injective values.
            std::vector<char> hitD(static_cast<std::size_t>(D->size()), 0);
            for (int y = 0; y < B->size(); ++y) {
                const SimplexExpr& e =
                    tabD.level(B->simplex(y).dim)[static_cast<std::size_t>(
                        vb[static_cast<std::size_t>(y)])];
                if (!e.is_nondegenerate() || hitD[static_cast<std::size_t>(e.base)]) return true;
                hitD[static_cast<std::size_t>(e.base)] = 1;
            }
            // a is forced by j∘a = b∘i; it must land in the image of j.
            std::vector<SimplexExpr> a_assign(static_cast<std::size_t>(A->size()));
            std::vector<char> hitC(static_cast<std::size_t>(C->size()), 0);
            for (int x = 0; x < A->size(); ++x) {
                const SimplexExpr& via =
                    tabD.level(A->simplex(x).dim)[static_cast<std::size_t>(
                        vb[static_cast<std::size_t>(i.assignment(x).base)])];
                int c = jinv[static_cast<std::size_t>(via.base)];
                if (c < 0) return true;
                // r∘a = id also forces a to be a split mono.
                if (!via.surj.is_identity() || hitC[static_cast<std::size_t>(c)]) return true;
                hitC[static_cast<std::size_t>(c)] = 1;
                a_assign[static_cast<std::size_t>(x)] = SimplexExpr{c, via.surj};
            }

            // Pins on s from s∘b = id_B.
            std::vector<int> s_pins_base(static_cast<std::size_t>(D->size()), -1);
            for (int y = 0; y < B->size(); ++y) {
                const SimplexExpr& e =
                    tabD.level(B->simplex(y).dim)[static_cast<std::size_t>(
                        vb[static_cast<std::size_t>(y)])];
                s_pins_base[static_cast<std::size_t>(e.base)] =
                    tabB.index_of(SimplexExpr{y, OrdinalSurjection{B->simplex(y).dim, 0}});
            }

            std::vector<std::vector<int>> r_cands(static_cast<std::size_t>(C->size()));
            for (int c = 0; c < C->size(); ++c)
                r_cands[static_cast<std::size_t>(c)] = all_candidates(tabA, C->simplex(c).dim);
            for (int x = 0; x < A->size(); ++x)
                r_cands[static_cast<std::size_t>(a_assign[static_cast<std::size_t>(x)].base)] = {
                    tabA.index_of(SimplexExpr{x, OrdinalSurjection{A->simplex(x).dim, 0}})};

            bool abort = false;
            search_maps(C, tabA, r_cands, false, &left_budget, [&](const std::vector<int>& vr) {
                // Pins on s from s∘j = i∘r, merged with the s∘b = id pins.
                std::vector<int> s_pins = s_pins_base;
                for (int c = 0; c < C->size(); ++c) {
                    const SimplexExpr& rv =
                        tabA.level(C->simplex(c).dim)[static_cast<std::size_t>(
                            vr[static_cast<std::size_t>(c)])];
                    int pin = tabB.index_of(i.value(rv));
                    int& slot = s_pins[static_cast<std::size_t>(j.assignment(c).base)];
                    if (slot >= 0 && slot != pin) return true;
                    slot = pin;
                }
                std::vector<std::vector<int>> s_cands(static_cast<std::size_t>(D->size()));
                for (int d = 0; d < D->size(); ++d) {
                    if (s_pins[static_cast<std::size_t>(d)] >= 0)
                        s_cands[static_cast<std::size_t>(d)] = {s_pins[static_cast<std::size_t>(d)]};
                    else
                        s_cands[static_cast<std::size_t>(d)] =
                            all_candidates(tabB, D->simplex(d).dim);
                }
                search_maps(D, tabB, s_cands, false, &left_budget,
                            [&](const std::vector<int>& vs) {
                                RetractDiagram diag{
                                    SimplicialMap{A, C, a_assign},
                                    materialize_map(B, tabD, vb),
                                    materialize_map(C, tabA, vr),
                                    materialize_map(D, tabB, vs)};
                                if (!(compose(diag.a, j) == compose(i, diag.b)) ||
                                    !(compose(diag.r, i) == compose(j, diag.s)) ||
                                    !(compose(diag.a, diag.r) == identity(A)) ||
                                    !(compose(diag.b, diag.s) == identity(B)))
                                    throw InternalError("retract diagram fails verification");
                                result.status = RetractSearchResult::Status::found;
                                result.diagram = std::move(diag);
                                abort = true;
                                return false;
                            });
                return !abort;
            });
            return !abort;
        });
    if (result.status != RetractSearchResult::Status::found &&
        oc == SearchOutcome::out_of_budget)
        result.status = RetractSearchResult::Status::budget_exhausted;
    return result;
}

void for_each_square(const SimplicialMap& i, const SimplicialMap& p,
                     const std::function<bool(const SimplicialMap&, const SimplicialMap&)>& visit) {
    if (!i.is_mono()) throw PreconditionError("for_each_square requires a mono left leg");
    const SSetPtr& A = i.domain();
    const SSetPtr& B = i.codomain();
    const SSetPtr& Y = p.domain();
    const SSetPtr& X = p.codomain();
    const int D = std::max(B->dim(), 0);
    ExprTable tabX(X, D);
    ExprTable tabY(Y, D);
    FiberIndex fib = make_fiber_index(tabY, tabX, p);

    std::vector<std::vector<int>> bottom_cands(static_cast<std::size_t>(B->size()));
    for (int b = 0; b < B->size(); ++b)
        bottom_cands[static_cast<std::size_t>(b)] = all_candidates(tabX, B->simplex(b).dim);

    search_maps(B, tabX, bottom_cands, false, nullptr, [&](const std::vector<int>& vb) {
        std::vector<std::vector<int>> top_cands(static_cast<std::size_t>(A->size()));
        for (int a = 0; a < A->size(); ++a) {
            const int d = A->simplex(a).dim;
            top_cands[static_cast<std::size_t>(a)] =
                fib.fibers[static_cast<std::size_t>(d)][static_cast<std::size_t>(
                    vb[static_cast<std::size_t>(i.assignment(a).base)])];
        }
        bool keep_going = true;
        search_maps(A, tabY, top_cands, false, nullptr, [&](const std::vector<int>& ua) {
            keep_going = visit(materialize_map(B, tabX, vb), materialize_map(A, tabY, ua));
            return keep_going;
        });
        return keep_going;
    });
}

void for_each_map(const SSetPtr& B, const SSetPtr& X,
                  const std::map<std::string, ExprSpec>& constraints,
                  const std::function<bool(const SimplicialMap&)>& visit) {
    ExprTable tab(X, std::max(B->dim(), 0));
    std::vector<std::vector<int>> cands(static_cast<std::size_t>(B->size()));
    for (int b = 0; b < B->size(); ++b)
        cands[static_cast<std::size_t>(b)] = all_candidates(tab, B->simplex(b).dim);
    for (const auto& [id, spec] : constraints) {
        int idx = B->require_index(id);
        cands[static_cast<std::size_t>(idx)] = {
            tab.index_of(X->expr_from_spec(spec, B->simplex(idx).dim))};
    }
    search_maps(B, tab, cands, false, nullptr, [&](const std::vector<int>& assign) {
        return visit(materialize_map(B, tab, assign));
    });
}

std::vector<SimplicialMap> enumerate_maps(const SSetPtr& B, const SSetPtr& X,
                                          const std::map<std::string, ExprSpec>& constraints) {
    std::vector<SimplicialMap> out;
    for_each_map(B, X, constraints, [&](const SimplicialMap& f) {
        out.push_back(f);
        return true;
    });
    return out;
}

nlohmann::json rlp_report_to_json(const RLPReport& report) {
    nlohmann::json j{{"holds", report.holds},
                     {"family", family_name(report.family)},
                     {"dims", {report.dim_min, report.dim_max}},
                     {"note", report.note}};
    if (report.counterexample) {
        nlohmann::json ce{{"n", report.counterexample->n},
                          {"bottom", map_to_json(report.counterexample->square.bottom)},
                          {"top", map_to_json(report.counterexample->square.top)}};
        if (report.counterexample->k >= 0) ce["k"] = report.counterexample->k;
        j["counterexample"] = ce;
    }
    return j;
}

}  // namespace sset
