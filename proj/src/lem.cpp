#include "sset/lem.hpp"

#include <algorithm>

#include "sset/build.hpp"
#include "sset/errors.hpp"
#include "sset/json_io.hpp"

namespace sset {

namespace {

constexpr const char* kNoPreimage = "no-preimage-vertex";

std::vector<char> image_bitmap(const SimplicialMap& p) {
    std::vector<char> in(static_cast<std::size_t>(p.codomain()->size()), 0);
    for (const auto& e : p.assignments()) in[static_cast<std::size_t>(e.base)] = 1;
    return in;
}

// Vertices of the base hit by p in dimension 0.
std::vector<char> image_vertices(const SimplicialMap& p) {
    std::vector<char> v(static_cast<std::size_t>(p.codomain()->size()), 0);
    const SimplicialSet& Y = *p.domain();
    for (int i = 0; i < Y.size(); ++i)
        if (Y.simplex(i).dim == 0) v[static_cast<std::size_t>(p.assignment(i).base)] = 1;
    return v;
}

}  // namespace

std::string part_name(const SimplicialSet& base, const std::string& part) {
    return base.name() + "." + part;
}

Subcomplex image_complement(const SimplicialMap& p) {
    const SSetPtr& X = p.codomain();
    std::vector<char> in = image_bitmap(p);
    Subcomplex out{X, {}};
    for (int i = 0; i < X->size(); ++i)
        if (!in[static_cast<std::size_t>(i)]) out.members.push_back(i);
    for (int m : out.members) {
        const Simplex& s = X->simplex(m);
        for (int k = 0; k < static_cast<int>(s.faces.size()); ++k) {
            int fb = s.faces[static_cast<std::size_t>(k)].base;
            if (in[static_cast<std::size_t>(fb)])
                throw NotComplementedError(s.id, X->simplex(fb).id, k);
        }
    }
    return out;
}

Subcomplex vertex_complement(const SimplicialMap& p) {
    const SSetPtr& X = p.codomain();
    std::vector<char> hit = image_vertices(p);
    Subcomplex out{X, {}};
    for (int i = 0; i < X->size(); ++i) {
        const Simplex& s = X->simplex(i);
        SimplexExpr top{i, OrdinalSurjection{s.dim, 0}};
        bool outside = true;
        for (int j = 0; j <= s.dim && outside; ++j)
            if (hit[static_cast<std::size_t>(X->vertex_base(top, j))]) outside = false;
        if (outside) out.members.push_back(i);
    }
    return out;
}

Decomposition decompose_base(const SimplicialMap& p) {
    Decomposition d{p.codomain(), image(p), image_complement(p)};
    if (static_cast<int>(d.gamma0.members.size() + d.gamma1.members.size()) != d.base->size())
        throw InternalError("decomposition does not partition the base");
    if (!is_face_closed(*d.base, d.gamma0.members) || !is_face_closed(*d.base, d.gamma1.members))
        throw InternalError("decomposition parts are not face-closed");
    if (!(vertex_complement(p).members == d.gamma1.members))
        throw InternalError("vertex criterion disagrees with the direct complement");
    return d;
}

PropositionalityReport is_propositional_rlp(const SimplicialMap& p, int bound) {
    PropositionalityReport rep;
    rep.bound = bound;
    rep.kan_check = horn_rlp(p, bound + 1);
    rep.via_rlp = boundary_rlp(p, 1, bound);
    rep.propositional = rep.via_rlp.holds;
    return rep;
}

bool is_propositional_homotopy(const SimplicialMap& p, std::size_t size_guard) {
    SpanResult P = pullback(p, p);
    const SSetPtr& Y = p.domain();
    SSetPtr interval = std_simplex(1);
    SpanResult prd = product(P.object, interval);
    if (static_cast<std::size_t>(prd.object->size()) > size_guard)
        throw SizeGuardError(static_cast<std::size_t>(prd.object->size()), size_guard);

    // The two ends P ⊔ P -> P×Δ¹ (cylinder end inclusions).
    CoproductResult ends = coproduct(P.object, P.object);
    std::vector<SimplexExpr> left_assign(static_cast<std::size_t>(ends.object->size()));
    std::vector<SimplexExpr> top_assign(static_cast<std::size_t>(ends.object->size()));
    for (int m = 0; m < P.object->size(); ++m) {
        const Simplex& s = P.object->simplex(m);
        for (int end = 0; end < 2; ++end) {
            SimplexExpr vx{interval->require_index(std::to_string(end)),
                           OrdinalSurjection{s.dim, low_bits(s.dim)}};
            std::string pid = "(" + render_expr(*P.object, SimplexExpr{m, OrdinalSurjection{s.dim, 0}}) +
                              ")x(" + render_expr(*interval, vx) + ")";
            int at = ends.object->require_index((end == 0 ? "l:" : "r:") + s.id);
            left_assign[static_cast<std::size_t>(at)] =
                SimplexExpr{prd.object->require_index(pid), OrdinalSurjection{s.dim, 0}};
            top_assign[static_cast<std::size_t>(at)] =
                (end == 0 ? P.proj1 : P.proj2).assignment(m);
        }
    }
    SimplicialMap left{ends.object, prd.object, std::move(left_assign)};
    SimplicialMap top{ends.object, Y, std::move(top_assign)};

    // Fiberwise over the base: p∘H = p∘π₁∘pr_P.
    SimplicialMap base_leg = compose(P.proj1, p);
    std::vector<SimplexExpr> bottom_assign;
    bottom_assign.reserve(static_cast<std::size_t>(prd.object->size()));
    for (int w = 0; w < prd.object->size(); ++w)
        bottom_assign.push_back(base_leg.value(prd.proj1.assignment(w)));
    SimplicialMap bottom{prd.object, p.codomain(), std::move(bottom_assign)};

    LiftingProblem prob = make_lifting_problem(std::move(left), p, std::move(top), std::move(bottom));
    return solve_lift(prob).has_value();
}

SimplicialMap trivial_fibration_section(const SimplicialMap& p, int bound) {
    RLPReport pre = boundary_rlp(p, 0, bound);
    if (!pre.holds)
        throw NoFillerError(pre.counterexample->n,
                            "boundary RLP fails at i_" + std::to_string(pre.counterexample->n));

    const SSetPtr& X = p.codomain();
    const SSetPtr& Y = p.domain();
    const int D = std::max(X->dim(), 0);
    ExprTable tabX(X, D);
    ExprTable tabY(Y, D);
    FiberIndex fib = make_fiber_index(tabY, tabX, p);

    std::vector<int> chosen(static_cast<std::size_t>(X->size()), -1);
    for (int x = 0; x < X->size(); ++x) {
        const Simplex& s = X->simplex(x);
        const int d = s.dim;
        int x_local = tabX.index_of(SimplexExpr{x, OrdinalSurjection{d, 0}});
        int pick = -1;
        for (int cand : fib.fibers[static_cast<std::size_t>(d)][static_cast<std::size_t>(x_local)]) {
            bool ok = true;
            for (int k = 0; k <= d && d > 0 && ok; ++k) {
                const SimplexExpr& fe = s.faces[static_cast<std::size_t>(k)];
                const SimplexExpr& fv =
                    tabY.level(fe.surj.target_dim())[static_cast<std::size_t>(
                        chosen[static_cast<std::size_t>(fe.base)])];
                SimplexExpr expected{fv.base, compose(fv.surj, fe.surj)};
                ok = tabY.index_of(expected) == tabY.face_index(d, cand, k);
            }
            if (ok) {
                pick = cand;
                break;
            }
        }
        if (pick < 0) throw NoFillerError(d, "simplex '" + s.id + "'");
        chosen[static_cast<std::size_t>(x)] = pick;
    }
    SimplicialMap sec = materialize_map(X, tabY, chosen);
    if (!(compose(sec, p) == identity(X)))
        throw InternalError("section fails p ∘ s = id");
    return sec;
}

LEMCertificate lem_section(const SimplicialMap& p, int bound) {
    PropositionalityReport prop = is_propositional_rlp(p, bound);
    if (!prop.kan_check.holds)
        throw PreconditionError("lem_section: p is not Kan up to bound+1 (horn failure at n=" +
                                std::to_string(prop.kan_check.counterexample->n) + ")");
    if (!prop.propositional)
        throw PreconditionError("lem_section: p is not propositional up to the bound (i_" +
                                std::to_string(prop.via_rlp.counterexample->n) + " failure)");

    Decomposition decomp = decompose_base(p);
    const SSetPtr& base = decomp.base;

    InclusionResult g0 = extract(decomp.gamma0, part_name(*base, "gamma0"));
    SpanResult pb0 = pullback(g0.inclusion, p);
    // Orthogonality to i_0 holds by construction of gamma0; asserted.
    if (!boundary_rlp(pb0.proj1, 0, 0).holds)
        throw InternalError("restriction over gamma0 is not vertex-surjective");
    SimplicialMap s0 = trivial_fibration_section(pb0.proj1, bound);
    SimplicialMap section0 = compose(s0, pb0.proj2);  // gamma0 part -> total space
    if (!(compose(section0, p) == g0.inclusion))
        throw InternalError("section over gamma0 does not restrict p to the inclusion");

    InclusionResult g1 = extract(decomp.gamma1, part_name(*base, "gamma1"));
    SpanResult pb1 = pullback(g1.inclusion, p);
    if (!pb1.object->empty())
        throw InternalError("NonEmptyFiber: pullback over gamma1 is not empty");

    std::vector<char> hit = image_vertices(p);
    LEMCertificate cert;
    cert.bound = bound;
    cert.gamma0 = decomp.gamma0.member_ids();
    cert.gamma1 = decomp.gamma1.member_ids();
    cert.section0 = map_to_json(section0);
    for (int m : decomp.gamma1.members) {
        const Simplex& s = base->simplex(m);
        SimplexExpr top{m, OrdinalSurjection{s.dim, 0}};
        for (int j = 0; j <= s.dim; ++j)
            if (hit[static_cast<std::size_t>(base->vertex_base(top, j))])
                throw InternalError("gamma1 simplex has a preimage vertex");
        cert.emptiness1[s.id] = kNoPreimage;
    }

    VerifyResult self = verify_certificate(cert, p);
    if (!self.ok) throw InternalError("freshly built certificate fails verification: " + self.diagnostic);
    return cert;
}

VerifyResult verify_certificate(const LEMCertificate& cert, const SimplicialMap& p) {
    auto fail = [](std::string why) { return VerifyResult{false, std::move(why)}; };
    const SSetPtr& base = p.codomain();
    const SSetPtr& Y = p.domain();

    if (cert.bound < 0) return fail("bound must be a natural number");

    // Partition of the nondegenerate base simplices.
    std::vector<char> seen(static_cast<std::size_t>(base->size()), 0);
    std::vector<int> m0, m1;
    for (const auto& id : cert.gamma0) {
        auto idx = base->index_of(id);
        if (!idx) return fail("gamma0 id '" + id + "' is not a base simplex");
        if (seen[static_cast<std::size_t>(*idx)]) return fail("duplicate id '" + id + "'");
        seen[static_cast<std::size_t>(*idx)] = 1;
        m0.push_back(*idx);
    }
    for (const auto& id : cert.gamma1) {
        auto idx = base->index_of(id);
        if (!idx) return fail("gamma1 id '" + id + "' is not a base simplex");
        if (seen[static_cast<std::size_t>(*idx)]) return fail("duplicate id '" + id + "'");
        seen[static_cast<std::size_t>(*idx)] = 1;
        m1.push_back(*idx);
    }
    if (static_cast<int>(m0.size() + m1.size()) != base->size())
        return fail("gamma0 and gamma1 do not cover the base");
    std::sort(m0.begin(), m0.end());
    std::sort(m1.begin(), m1.end());
    if (!is_face_closed(*base, m0)) return fail("gamma0 is not face-closed");
    if (!is_face_closed(*base, m1)) return fail("gamma1 is not face-closed");

    // Section over gamma0.
    SimplicialMap section0;
    InclusionResult g0 = extract(Subcomplex{base, m0}, part_name(*base, "gamma0"));
    try {
        section0 = map_from_json(cert.section0, g0.object, Y);
    } catch (const std::exception& e) {
        return fail(std::string("section0 is not a map file over gamma0: ") + e.what());
    }
    ValidationReport vr = section0.validate();
    if (!vr.ok) return fail("section0: " + vr.error);
    if (!(compose(section0, p) == g0.inclusion))
        return fail("p ∘ section0 is not the inclusion of gamma0");

    // Emptiness over gamma1: recorded witnesses match gamma1 exactly, the
    // vertex criterion holds, and no total-space simplex sits over gamma1.
    if (cert.emptiness1.size() != m1.size())
        return fail("emptiness1 does not list exactly the gamma1 simplices");
    std::vector<char> hit = image_vertices(p);
    for (int m : m1) {
        const Simplex& s = base->simplex(m);
        auto it = cert.emptiness1.find(s.id);
        if (it == cert.emptiness1.end()) return fail("emptiness1 misses '" + s.id + "'");
        if (it->second != kNoPreimage)
            return fail("emptiness1['" + s.id + "'] must be \"" + kNoPreimage + "\"");
        SimplexExpr top{m, OrdinalSurjection{s.dim, 0}};
        for (int j = 0; j <= s.dim; ++j)
            if (hit[static_cast<std::size_t>(base->vertex_base(top, j))])
                return fail("gamma1 simplex '" + s.id + "' has a preimage vertex");
    }
    std::vector<char> in1(static_cast<std::size_t>(base->size()), 0);
    for (int m : m1) in1[static_cast<std::size_t>(m)] = 1;
    for (const auto& e : p.assignments())
        if (in1[static_cast<std::size_t>(e.base)])
            return fail("total space has a simplex over gamma1");
    return VerifyResult{};
}

nlohmann::json cert_to_json(const LEMCertificate& cert) {
    nlohmann::json e = nlohmann::json::object();
    for (const auto& [id, v] : cert.emptiness1) e[id] = v;
    return nlohmann::json{{"bound", cert.bound},
                          {"gamma0", cert.gamma0},
                          {"gamma1", cert.gamma1},
                          {"section0", cert.section0},
                          {"emptiness1", e}};
}

LEMCertificate cert_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("bound") || !j.contains("gamma0") || !j.contains("gamma1") ||
        !j.contains("section0") || !j.contains("emptiness1"))
        throw ParseError(
            "certificate must be {\"bound\", \"gamma0\", \"gamma1\", \"section0\", \"emptiness1\"}");
    LEMCertificate cert;
    if (!j["bound"].is_number_integer()) throw ParseError("\"bound\" must be an integer");
    cert.bound = j["bound"].get<int>();
    for (const char* key : {"gamma0", "gamma1"}) {
        if (!j[key].is_array()) throw ParseError(std::string("\"") + key + "\" must be an array");
        for (const auto& id : j[key]) {
            if (!id.is_string()) throw ParseError(std::string(key) + " entries must be strings");
            (key[5] == '0' ? cert.gamma0 : cert.gamma1).push_back(id.get<std::string>());
        }
    }
    cert.section0 = j["section0"];
    if (!j["emptiness1"].is_object()) throw ParseError("\"emptiness1\" must be an object");
    for (const auto& [id, v] : j["emptiness1"].items()) {
        if (!v.is_string()) throw ParseError("emptiness1 values must be strings");
        cert.emptiness1[id] = v.get<std::string>();
    }
    return cert;
}

nlohmann::json decomposition_to_json(const Decomposition& d) {
    return nlohmann::json{{"base", d.base->name()},
                          {"gamma0", d.gamma0.member_ids()},
                          {"gamma1", d.gamma1.member_ids()}};
}

nlohmann::json propositionality_to_json(const PropositionalityReport& r) {
    nlohmann::json j{{"propositional", r.propositional},
                     {"bound", r.bound},
                     {"via_rlp", rlp_report_to_json(r.via_rlp)},
                     {"kan_check", rlp_report_to_json(r.kan_check)}};
    if (r.via_homotopy) j["via_homotopy"] = *r.via_homotopy;
    return j;
}

}  // namespace sset
