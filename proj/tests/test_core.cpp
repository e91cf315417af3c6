#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "sset/build.hpp"
#include "sset/errors.hpp"
#include "support/oracle.hpp"

using namespace sset;

namespace {

SimplexExpr nondeg(const SSetPtr& X, const std::string& id) {
    int i = X->require_index(id);
    return SimplexExpr{i, OrdinalSurjection{X->simplex(i).dim, 0}};
}

}  // namespace

TEST_CASE("standard simplices have binomial cell counts") {
    for (int n = 0; n <= 5; ++n) {
        SSetPtr d = std_simplex(n);
        CHECK(d->validate().ok);
        long long total = 0;
        for (int k = 0; k <= n; ++k) {
            // C(n+1, k+1)
            long long binom = 1;
            for (int t = 0; t <= k; ++t) binom = binom * (n + 1 - t) / (t + 1);
            CHECK(d->count_nondegenerate(k) == binom);
            total += binom;
        }
        CHECK(d->size() == total);
    }
    CHECK(std_simplex(2)->size() == 7);
}

TEST_CASE("boundary and horn cell counts") {
    CHECK(boundary(2).object->size() == 6);
    CHECK(boundary(0).object->size() == 0);  // the empty set, domain of i_0
    CHECK(horn(2, 1).object->size() == 5);
    CHECK(horn(1, 0).object->size() == 1);
    CHECK_THROWS_AS(horn(0, 0), PreconditionError);
    CHECK_THROWS_AS(horn(2, 3), PreconditionError);
    for (int n = 1; n <= 4; ++n)
        for (int k = 0; k <= n; ++k) {
            InclusionResult h = horn(n, k);
            CHECK(h.object->validate().ok);
            CHECK(h.inclusion.validate().ok);
            CHECK(h.object->size() == std_simplex(n)->size() - 2);
        }
}

TEST_CASE("face of the top cell is the stored face") {
    SSetPtr d2 = std_simplex(2);
    SimplexExpr top = nondeg(d2, "012");
    CHECK(d2->face(top, 0) == nondeg(d2, "12"));
    CHECK(d2->face(top, 1) == nondeg(d2, "02"));
    CHECK(d2->face(top, 2) == nondeg(d2, "01"));
}

TEST_CASE("simplicial identities drive degenerate faces") {
    SSetPtr d1 = std_simplex(1);
    SimplexExpr edge = nondeg(d1, "01");
    SimplexExpr s0edge = d1->degeneracy(edge, 0);
    CHECK(s0edge.surj.collapse == collapse_from_list({0}, 2));
    // d0 s0 = id
    CHECK(d1->face(s0edge, 0) == edge);
    // d1 s0 = id
    CHECK(d1->face(s0edge, 1) == edge);
    // d2 s0 = s0 d1, substituting the stored d1 face (the vertex 0)
    SimplexExpr got = d1->face(s0edge, 2);
    CHECK(got.base == d1->require_index("0"));
    CHECK(got.surj.collapse == collapse_from_list({0}, 1));
}

TEST_CASE("applying the identity map is the identity") {
    SSetPtr d2 = std_simplex(2);
    SimplexExpr e = d2->degeneracy(d2->degeneracy(nondeg(d2, "02"), 1), 0);
    std::vector<int> id{0, 1, 2, 3};
    CHECK(d2->apply_monotone(id, e) == e);
}

TEST_CASE("validate reports the violating identity pair") {
    // Faces chosen so (0,1) holds but d0 d2 = d1 d0 fails.
    std::vector<SimplexSpec> spec;
    spec.push_back({"u", 0, {}});
    spec.push_back({"v", 0, {}});
    spec.push_back({"w", 0, {}});
    spec.push_back({"a", 1, {{{}, "u"}, {{}, "v"}}});
    spec.push_back({"b", 1, {{{}, "u"}, {{}, "w"}}});
    spec.push_back({"c", 1, {{{}, "u"}, {{}, "w"}}});
    spec.push_back({"t", 2, {{{}, "a"}, {{}, "b"}, {{}, "c"}}});
    SSetPtr bad = make_sset("bad", std::move(spec));
    ValidationReport rep = bad->validate();
    CHECK_FALSE(rep.ok);
    CHECK(rep.error.find("d0 d2 = d1 d0") != std::string::npos);
    CHECK(rep.error.find("'t'") != std::string::npos);
}

TEST_CASE("construction rejects malformed presentations") {
    CHECK_THROWS_AS(make_sset("dup", {{"x", 0, {}}, {"x", 0, {}}}), MalformedError);
    CHECK_THROWS_AS(make_sset("dangling", {{"e", 1, {{{}, "u"}, {{}, "v"}}}}), MalformedError);
    // wrong face count
    CHECK_THROWS_AS(make_sset("short", {{"u", 0, {}}, {"e", 1, {{{}, "u"}}}}), MalformedError);
    // face dimension mismatch: an edge whose face is an edge
    CHECK_THROWS_AS(
        make_sset("dim", {{"u", 0, {}}, {"v", 0, {}}, {"e", 1, {{{}, "u"}, {{}, "v"}}},
                          {"f", 1, {{{}, "e"}, {{}, "u"}}}}),
        MalformedError);
}

TEST_CASE("subcomplex closure") {
    SSetPtr d2 = std_simplex(2);
    Subcomplex all = subcomplex_closure_ids(d2, {"012"});
    CHECK(static_cast<int>(all.members.size()) == d2->size());
    CHECK(subcomplex_closure(d2, {}).members.empty());
    // closure is idempotent
    Subcomplex again = subcomplex_closure(d2, all.members);
    CHECK(again.members == all.members);

    SpanResult sq = product(std_simplex(1), std_simplex(1));
    Subcomplex diag = subcomplex_closure_ids(sq.object, {"(01)x(01)"});
    CHECK(diag.members.size() == 3);  // the diagonal edge and its endpoints
    CHECK(is_face_closed(*sq.object, diag.members));
    CHECK_THROWS_AS(subcomplex_closure_ids(d2, {"nope"}), MalformedError);
}

TEST_CASE("vertex extraction") {
    SSetPtr d2 = std_simplex(2);
    SimplexExpr top = nondeg(d2, "012");
    CHECK(d2->simplex(d2->vertex_base(top, 0)).id == "0");
    CHECK(d2->simplex(d2->vertex_base(top, 2)).id == "2");
    SimplexExpr degen = d2->degeneracy(nondeg(d2, "02"), 0);
    CHECK(d2->simplex(d2->vertex_base(degen, 1)).id == "0");
    CHECK(d2->simplex(d2->vertex_base(degen, 2)).id == "2");
}

TEST_CASE("random words agree with the tabulation oracle") {
    std::mt19937_64 rng(20260809);
    std::vector<SSetPtr> sets{std_simplex(2), std_simplex(3), horn(3, 1).object,
                              product(std_simplex(1), std_simplex(1)).object};
    for (const auto& X : sets) {
        for (int trial = 0; trial < 400; ++trial) {
            int b = static_cast<int>(rng() % static_cast<std::uint64_t>(X->size()));
            SimplexExpr e{b, OrdinalSurjection{X->simplex(b).dim, 0}};
            oracle::OSimplex o = oracle::from_expr(*X, e);
            // a short random degeneracy word, then a random face or degeneracy
            int wlen = static_cast<int>(rng() % 4);
            for (int w = 0; w < wlen; ++w) {
                int i = static_cast<int>(rng() % static_cast<std::uint64_t>(e.dim() + 1));
                e = X->degeneracy(e, i);
                o = oracle::degeneracy(o, i);
            }
            if (e.dim() > 0 && rng() % 2 == 0) {
                int i = static_cast<int>(rng() % static_cast<std::uint64_t>(e.dim() + 1));
                e = X->face(e, i);
                o = oracle::face(*X, o, i);
            } else {
                int i = static_cast<int>(rng() % static_cast<std::uint64_t>(e.dim() + 1));
                e = X->degeneracy(e, i);
                o = oracle::degeneracy(o, i);
            }
            CHECK(oracle::from_expr(*X, e) == o);
        }
    }
}

TEST_CASE("empty simplicial set is first class") {
    SSetPtr e = empty_sset();
    CHECK(e->empty());
    CHECK(e->dim() == -1);
    CHECK(e->validate().ok);
}
