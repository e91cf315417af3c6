#include "sset/fixtures.hpp"

#include <algorithm>
#include <filesystem>
#include <random>

#include "sset/errors.hpp"
#include "sset/json_io.hpp"
#include "sset/lem.hpp"
#include "sset/lifting.hpp"

namespace sset {

namespace {

// Explicit modulo sampling; distribution classes are not portable across
// standard libraries and these fixtures are frozen as goldens.
std::uint64_t rand_below(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

SSetPtr discrete_points(int k) {
    std::vector<SimplexSpec> spec;
    for (int i = 0; i < k; ++i) spec.push_back(SimplexSpec{"p" + std::to_string(i), 0, {}});
    return make_sset("Disc(" + std::to_string(k) + ")", std::move(spec));
}

SimplicialMap fold(const SSetPtr& X) {
    CoproductResult cp = coproduct(X, X);
    return copair(cp, identity(X), identity(X));
}

SimplicialMap vertex_inclusion(int n) {
    SSetPtr pt = std_simplex(0);
    SSetPtr target = std_simplex(n);
    std::vector<SimplexExpr> assign{SimplexExpr{target->require_index("0"), OrdinalSurjection{0, 0}}};
    return SimplicialMap{pt, target, std::move(assign)};
}

SimplicialMap edge_to_point() {
    SSetPtr edge = std_simplex(1);
    SSetPtr pt = std_simplex(0);
    std::vector<SimplexExpr> assign(static_cast<std::size_t>(edge->size()));
    for (int i = 0; i < edge->size(); ++i)
        assign[static_cast<std::size_t>(i)] = SimplexExpr{
            0, OrdinalSurjection{edge->simplex(i).dim, low_bits(edge->simplex(i).dim)}};
    return SimplicialMap{edge, pt, std::move(assign)};
}

}  // namespace

SimplicialMap copair(const CoproductResult& cp, const SimplicialMap& f, const SimplicialMap& g) {
    require_compatible(f.codomain(), g.codomain(), "copair");
    const SSetPtr& obj = cp.object;
    std::vector<SimplexExpr> assign(static_cast<std::size_t>(obj->size()));
    for (int i = 0; i < f.domain()->size(); ++i)
        assign[static_cast<std::size_t>(cp.inj1.assignment(i).base)] = f.assignment(i);
    for (int i = 0; i < g.domain()->size(); ++i)
        assign[static_cast<std::size_t>(cp.inj2.assignment(i).base)] = g.assignment(i);
    return SimplicialMap{obj, f.codomain(), std::move(assign)};
}

SimplicialMap component_inclusion(const std::vector<SSetPtr>& parts,
                                  const std::vector<int>& selected, const std::string& full_name,
                                  const std::string& sub_name) {
    if (parts.empty()) throw PreconditionError("component_inclusion requires nonempty parts");
    std::vector<int> labels(parts.size());
    for (std::size_t i = 0; i < parts.size(); ++i) labels[i] = static_cast<int>(i);
    NaryCoproductResult full = coproduct_n(parts, labels, full_name);

    std::vector<SSetPtr> sel_parts;
    std::vector<int> sel_labels;
    for (int s : selected) {
        if (s < 0 || s >= static_cast<int>(parts.size()))
            throw PreconditionError("component_inclusion: selected index out of range");
        sel_parts.push_back(parts[static_cast<std::size_t>(s)]);
        sel_labels.push_back(s);
    }
    NaryCoproductResult sub = coproduct_n(sel_parts, sel_labels, sub_name);

    // Same labels on both sides, so inclusion is id-by-id.
    std::vector<SimplexExpr> assign;
    assign.reserve(static_cast<std::size_t>(sub.object->size()));
    for (const auto& s : sub.object->simplices())
        assign.push_back(
            SimplexExpr{full.object->require_index(s.id), OrdinalSurjection{s.dim, 0}});
    return SimplicialMap{sub.object, full.object, std::move(assign)};
}

SimplicialMap discrete_cover(const SSetPtr& X, int k) {
    if (k < 0) throw PreconditionError("discrete_cover requires k >= 0");
    SpanResult prod = product(X, discrete_points(k));
    return prod.proj1;
}

std::vector<SimplicialMap> non_fibration_counterexamples() {
    std::vector<SimplicialMap> out;
    out.push_back(vertex_inclusion(1));
    out.push_back(edge_to_point());
    out.push_back(vertex_inclusion(2));
    InclusionResult h = horn(2, 1);
    out.push_back(h.inclusion);
    return out;
}

SimplicialMap random_subcomplex_inclusion(std::uint64_t seed, int ambient_dim, int seed_cells,
                                          int keep_vertices) {
    std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ull + 1);
    SSetPtr delta = std_simplex(ambient_dim);
    std::vector<int> seeds;
    for (int i = 0; i < seed_cells; ++i)
        seeds.push_back(static_cast<int>(rand_below(rng, static_cast<std::uint64_t>(delta->size()))));
    Subcomplex closed = subcomplex_closure(delta, seeds);
    InclusionResult ambient = extract(closed, "Rand(" + std::to_string(seed) + ")");

    std::vector<int> vertices;
    for (int i = 0; i < ambient.object->size(); ++i)
        if (ambient.object->simplex(i).dim == 0) vertices.push_back(i);
    // Fisher-Yates, then keep a prefix.
    for (std::size_t i = vertices.size(); i > 1; --i)
        std::swap(vertices[i - 1], vertices[static_cast<std::size_t>(rand_below(rng, i))]);
    int keep = std::min<int>(keep_vertices, static_cast<int>(vertices.size()));
    std::vector<char> kept(static_cast<std::size_t>(ambient.object->size()), 0);
    for (int i = 0; i < keep; ++i) kept[static_cast<std::size_t>(vertices[static_cast<std::size_t>(i)])] = 1;

    std::vector<int> members;
    for (int i = 0; i < ambient.object->size(); ++i) {
        const Simplex& s = ambient.object->simplex(i);
        SimplexExpr top{i, OrdinalSurjection{s.dim, 0}};
        bool all_in = true;
        for (int j = 0; j <= s.dim && all_in; ++j)
            all_in = kept[static_cast<std::size_t>(ambient.object->vertex_base(top, j))] != 0;
        if (all_in) members.push_back(i);
    }
    InclusionResult sub = extract(Subcomplex{ambient.object, std::move(members)},
                                  "RandFull(" + std::to_string(seed) + ")");
    return sub.inclusion;
}

SimplicialMap rename_endpoints(const SimplicialMap& f, const std::string& dom_name,
                               const std::string& cod_name) {
    SSetPtr dom = renamed(f.domain(), dom_name);
    SSetPtr cod = renamed(f.codomain(), cod_name);
    return SimplicialMap{dom, cod, f.assignments()};
}

std::vector<Fixture> corpus() {
    std::vector<Fixture> out;
    auto add = [&out](const std::string& name, SimplicialMap map, bool non_fibration = false) {
        SimplicialMap named = rename_endpoints(map, name + "_total", name + "_base");
        int bound = default_bound(named);
        out.push_back(Fixture{name, std::move(named), bound, non_fibration});
    };

    SSetPtr d0 = std_simplex(0);
    SSetPtr d1 = std_simplex(1);
    SSetPtr d2 = std_simplex(2);

    add("id_delta0", identity(d0));
    add("id_delta1", identity(d1));
    add("id_delta2", identity(d2));

    add("incl_d2_in_d2_plus_d1", component_inclusion({d2, d1}, {0}, "full", "sub"));
    add("incl_d1_in_d1_plus_d0", component_inclusion({d1, d0}, {0}, "full", "sub"));
    add("incl_d0_in_d0_plus_d0", component_inclusion({d0, d0}, {0}, "full", "sub"));
    add("incl_two_of_three", component_inclusion({d0, d0, d2}, {0, 1}, "full", "sub"));

    add("empty_into_d1", component_inclusion({d1}, {}, "full", "sub"));
    add("empty_into_d0", component_inclusion({d0}, {}, "full", "sub"));
    add("empty_into_empty", SimplicialMap{empty_sset(), empty_sset(), std::vector<SimplexExpr>{}});

    add("cover_point_2", discrete_cover(d0, 2));
    add("cover_point_3", discrete_cover(d0, 3));
    add("cover_edge_2", discrete_cover(d1, 2));
    add("cover_triangle_2", discrete_cover(d2, 2));
    add("cover_two_points_2", discrete_cover(coproduct(d0, d0).object, 2));
    add("cover_edge_1", discrete_cover(d1, 1));

    add("fold_edge", fold(d1));
    add("fold_triangle", fold(d2));

    std::vector<SimplicialMap> bad = non_fibration_counterexamples();
    add("vertex_incl_d0_in_d1", bad[0], true);
    add("edge_to_point", bad[1], true);
    add("vertex_incl_d0_in_d2", bad[2], true);
    add("horn21_incl", bad[3], true);

    add("random_full_sub_s0", random_subcomplex_inclusion(0, 3, 4, 3));
    add("random_full_sub_s1", random_subcomplex_inclusion(1, 3, 4, 2));
    add("random_full_sub_s7", random_subcomplex_inclusion(7, 4, 5, 3));

    return out;
}

FixtureExpectation compute_expectation(const Fixture& fx, std::size_t homotopy_cap) {
    FixtureExpectation e;
    const SimplicialMap& p = fx.map;
    e.kan = horn_rlp(p, fx.bound + 1).holds;
    e.propositional = boundary_rlp(p, 1, fx.bound).holds;
    e.trivial = boundary_rlp(p, 0, fx.bound).holds;
    try {
        Subcomplex comp = image_complement(p);
        e.complemented = true;
        e.gamma1_empty = comp.members.empty();
    } catch (const NotComplementedError&) {
        e.complemented = false;
        e.gamma1_empty = false;
    }
    try {
        e.homotopy_prop = is_propositional_homotopy(p, homotopy_cap);
    } catch (const SizeGuardError&) {
        e.homotopy_prop = std::nullopt;
    }
    return e;
}

nlohmann::json expectation_to_json(const FixtureExpectation& e) {
    nlohmann::json j{{"kan", e.kan},
                     {"propositional", e.propositional},
                     {"complemented", e.complemented},
                     {"gamma1_empty", e.gamma1_empty},
                     {"trivial", e.trivial}};
    j["homotopy_prop"] = e.homotopy_prop ? nlohmann::json(*e.homotopy_prop) : nlohmann::json();
    return j;
}

nlohmann::json manifest_json(std::size_t homotopy_cap) {
    nlohmann::json fixtures = nlohmann::json::array();
    for (const Fixture& fx : corpus()) {
        FixtureExpectation e = compute_expectation(fx, homotopy_cap);
        fixtures.push_back(nlohmann::json{{"name", fx.name},
                                          {"map", fx.name + ".map.json"},
                                          {"domain", fx.map.domain()->name()},
                                          {"codomain", fx.map.codomain()->name()},
                                          {"bound", fx.bound},
                                          {"non_fibration", fx.non_fibration},
                                          {"expected", expectation_to_json(e)}});
    }
    return nlohmann::json{
        {"fixtures", fixtures},
        {"homotopy_cap", homotopy_cap},
        {"notes",
         nlohmann::json{{"non_mono_propositional_slot", "empty-until-found"}}}};
}

void write_corpus(const std::string& dir) {
    std::filesystem::create_directories(dir);
    for (const Fixture& fx : corpus()) {
        save_json(dir + "/" + fx.map.domain()->name() + ".json", sset_to_json(*fx.map.domain()));
        save_json(dir + "/" + fx.map.codomain()->name() + ".json",
                  sset_to_json(*fx.map.codomain()));
        save_json(dir + "/" + fx.name + ".map.json", map_to_json(fx.map));
    }
    save_json(dir + "/manifest.json", manifest_json(kCorpusHomotopyCap));
}

}  // namespace sset
