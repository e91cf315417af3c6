#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "sset/build.hpp"
#include "sset/errors.hpp"
#include "sset/fixtures.hpp"
#include "sset/json_io.hpp"
#include "sset/lem.hpp"
#include "sset/lifting.hpp"

namespace {

using sset::Json;

constexpr int kExitHolds = 0;
constexpr int kExitFails = 1;
constexpr int kExitInvalidInput = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitInternal = 4;

// Upper bound on worker threads; the current engine evaluates squares
// sequentially in canonical order, so any cap is honored and output bytes
// never depend on it.
unsigned thread_cap() {
    const char* env = std::getenv("WORKBENCH_THREADS");
    if (!env || !*env) return 0;
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end && *end == '\0') return static_cast<unsigned>(v);
    return 0;
}

void emit(const Json& j, const std::string& out_path) {
    std::string text = sset::canonical_dump(j);
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw sset::ParseError("cannot open '" + out_path + "' for writing");
        out << text;
    }
}

struct LoadedMap {
    sset::SSetPtr domain;
    sset::SSetPtr codomain;
    sset::SimplicialMap map;
};

// Map files reference their endpoints by set name; resolve those as
// sibling files "<name>.json" unless explicit paths are given.
LoadedMap load_map_file(const std::string& path, const std::string& dom_path,
                        const std::string& cod_path) {
    Json j = sset::load_json(path);
    if (!j.is_object() || !j.contains("domain") || !j.contains("codomain"))
        throw sset::ParseError("map file must carry \"domain\" and \"codomain\" names");
    std::filesystem::path dir = std::filesystem::path(path).parent_path();
    auto resolve = [&dir](const Json& name_field, const std::string& override_path) {
        if (!override_path.empty()) return override_path;
        if (!name_field.is_string()) throw sset::ParseError("endpoint name must be a string");
        return (dir / (name_field.get<std::string>() + ".json")).string();
    };
    LoadedMap out;
    out.domain = sset::load_sset(resolve(j["domain"], dom_path));
    out.codomain = sset::load_sset(resolve(j["codomain"], cod_path));
    out.map = sset::map_from_json(j, out.domain, out.codomain);
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    (void)thread_cap();

    CLI::App app{"workbench for finitely presented simplicial sets"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string out_path;
    app.add_option("--out", out_path, "write the report here instead of standard output");

    std::string sset_path, map_path, dom_path, cod_path, cert_path, family;
    std::string left_path, right_path, i_path, j_path;
    int bound = -1, min_dim = -1, max_dim = -1, n = -1, k = -1;
    bool homotopy = false;

    CLI::App* validate = app.add_subcommand("validate", "check a simplicial set file");
    validate->add_option("sset", sset_path, "simplicial set file")->required();

    CLI::App* check = app.add_subcommand("check", "right lifting property of a family");
    check->add_option("--map", map_path, "map file (p)")->required();
    check->add_option("--family", family, "boundary|horn|prism")->required();
    check->add_option("--min", min_dim, "least dimension (boundary family only)");
    check->add_option("--max", max_dim, "largest dimension (default dim(total)+2)");
    check->add_option("--domain", dom_path, "domain set file override");
    check->add_option("--codomain", cod_path, "codomain set file override");

    CLI::App* decompose = app.add_subcommand("decompose", "complemented-image decomposition");
    decompose->add_option("--map", map_path, "map file (p)")->required();
    decompose->add_option("--domain", dom_path, "domain set file override");
    decompose->add_option("--codomain", cod_path, "codomain set file override");

    CLI::App* prop = app.add_subcommand("prop", "propositionality report");
    prop->add_option("--map", map_path, "map file (p)")->required();
    prop->add_option("--bound", bound, "search bound (default dim(total)+2)");
    prop->add_flag("--homotopy", homotopy, "also run the homotopy oracle");
    prop->add_option("--domain", dom_path, "domain set file override");
    prop->add_option("--codomain", cod_path, "codomain set file override");

    CLI::App* lem = app.add_subcommand("lem", "excluded-middle section certificate");
    lem->add_option("--map", map_path, "map file (p)")->required();
    lem->add_option("--bound", bound, "search bound (default dim(total)+2)");
    lem->add_option("--domain", dom_path, "domain set file override");
    lem->add_option("--codomain", cod_path, "codomain set file override");

    CLI::App* verify = app.add_subcommand("verify", "re-check a certificate");
    verify->add_option("--cert", cert_path, "certificate file")->required();
    verify->add_option("--map", map_path, "map file (p)")->required();
    verify->add_option("--domain", dom_path, "domain set file override");
    verify->add_option("--codomain", cod_path, "codomain set file override");

    CLI::App* build = app.add_subcommand("build", "construct standard objects");
    build->require_subcommand(1);
    CLI::App* b_boundary = build->add_subcommand("boundary", "dDelta(n) with its inclusion");
    b_boundary->add_option("--n", n, "dimension")->required();
    CLI::App* b_horn = build->add_subcommand("horn", "Horn(n,k) with its inclusion");
    b_horn->add_option("--n", n, "dimension")->required();
    b_horn->add_option("--k", k, "omitted face")->required();
    CLI::App* b_product = build->add_subcommand("product", "binary product with projections");
    b_product->add_option("--left", left_path, "left set file")->required();
    b_product->add_option("--right", right_path, "right set file")->required();
    CLI::App* b_pp = build->add_subcommand("pushout-product", "pushout-product of two monos");
    b_pp->add_option("--i", i_path, "first mono (map file)")->required();
    b_pp->add_option("--j", j_path, "second mono (map file)")->required();

    for (CLI::App* sub : {validate, check, decompose, prop, lem, verify, build, b_boundary,
                          b_horn, b_product, b_pp})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitInvalidInput;
    }

    try {
        if (*validate) {
            sset::SSetPtr X;
            try {
                X = sset::load_sset(sset_path);
            } catch (const std::exception& e) {
                emit(Json{{"valid", false}, {"error", e.what()}}, out_path);
                return kExitInvalidInput;
            }
            sset::ValidationReport rep = X->validate();
            Json j{{"valid", rep.ok}};
            if (!rep.ok) j["error"] = rep.error;
            emit(j, out_path);
            return rep.ok ? kExitHolds : kExitFails;
        }

        if (*check) {
            LoadedMap lm = load_map_file(map_path, dom_path, cod_path);
            int max = max_dim >= 0 ? max_dim : sset::default_bound(lm.map);
            sset::RLPReport rep;
            if (family == "boundary")
                rep = sset::boundary_rlp(lm.map, min_dim >= 0 ? min_dim : 1, max);
            else if (family == "horn")
                rep = sset::horn_rlp(lm.map, max);
            else if (family == "prism")
                rep = sset::prism_rlp(lm.map, max);
            else
                throw sset::ParseError("unknown family '" + family + "'");
            emit(sset::rlp_report_to_json(rep), out_path);
            return rep.holds ? kExitHolds : kExitFails;
        }

        if (*decompose) {
            LoadedMap lm = load_map_file(map_path, dom_path, cod_path);
            sset::Decomposition d = sset::decompose_base(lm.map);
            emit(sset::decomposition_to_json(d), out_path);
            return kExitHolds;
        }

        if (*prop) {
            LoadedMap lm = load_map_file(map_path, dom_path, cod_path);
            int b = bound >= 0 ? bound : sset::default_bound(lm.map);
            sset::PropositionalityReport rep = sset::is_propositional_rlp(lm.map, b);
            if (homotopy) rep.via_homotopy = sset::is_propositional_homotopy(lm.map);
            emit(sset::propositionality_to_json(rep), out_path);
            return rep.propositional ? kExitHolds : kExitFails;
        }

        if (*lem) {
            LoadedMap lm = load_map_file(map_path, dom_path, cod_path);
            int b = bound >= 0 ? bound : sset::default_bound(lm.map);
            sset::LEMCertificate cert = sset::lem_section(lm.map, b);
            emit(sset::cert_to_json(cert), out_path);
            return kExitHolds;
        }

        if (*verify) {
            LoadedMap lm = load_map_file(map_path, dom_path, cod_path);
            sset::LEMCertificate cert = sset::cert_from_json(sset::load_json(cert_path));
            sset::VerifyResult res = sset::verify_certificate(cert, lm.map);
            Json j{{"ok", res.ok}};
            if (!res.ok) j["diagnostic"] = res.diagnostic;
            emit(j, out_path);
            return res.ok ? kExitHolds : kExitFails;
        }

        if (*build) {
            if (*b_boundary) {
                sset::InclusionResult r = sset::boundary(n);
                emit(Json{{"object", sset::sset_to_json(*r.object)},
                          {"ambient", sset::sset_to_json(*r.ambient)},
                          {"inclusion", sset::map_to_json(r.inclusion)}},
                     out_path);
            } else if (*b_horn) {
                sset::InclusionResult r = sset::horn(n, k);
                emit(Json{{"object", sset::sset_to_json(*r.object)},
                          {"ambient", sset::sset_to_json(*r.ambient)},
                          {"inclusion", sset::map_to_json(r.inclusion)}},
                     out_path);
            } else if (*b_product) {
                sset::SpanResult r =
                    sset::product(sset::load_sset(left_path), sset::load_sset(right_path));
                emit(Json{{"object", sset::sset_to_json(*r.object)},
                          {"proj1", sset::map_to_json(r.proj1)},
                          {"proj2", sset::map_to_json(r.proj2)}},
                     out_path);
            } else if (*b_pp) {
                LoadedMap im = load_map_file(i_path, "", "");
                LoadedMap jm = load_map_file(j_path, "", "");
                sset::PushoutProductResult r = sset::pushout_product_full(im.map, jm.map);
                emit(Json{{"object", sset::sset_to_json(*r.part.object)},
                          {"ambient", sset::sset_to_json(*r.prod.object)},
                          {"inclusion", sset::map_to_json(r.part.inclusion)}},
                     out_path);
            }
            return kExitHolds;
        }
    } catch (const sset::NotComplementedError& e) {
        emit(Json{{"error", e.what()}, {"kind", "not-complemented"}}, out_path);
        return kExitPrecondition;
    } catch (const sset::NoFillerError& e) {
        emit(Json{{"error", e.what()}, {"kind", "no-filler"}}, out_path);
        return kExitPrecondition;
    } catch (const sset::SizeGuardError& e) {
        emit(Json{{"error", e.what()}, {"kind", "size-guard"}}, out_path);
        return kExitPrecondition;
    } catch (const sset::PreconditionError& e) {
        emit(Json{{"error", e.what()}, {"kind", "precondition"}}, out_path);
        return kExitPrecondition;
    } catch (const sset::InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const std::exception& e) {
        emit(Json{{"error", e.what()}, {"kind", "invalid-input"}}, out_path);
        return kExitInvalidInput;
    }
    return kExitInvalidInput;
}
