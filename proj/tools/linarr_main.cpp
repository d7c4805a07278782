#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "linarr/catalog.hpp"
#include "linarr/construct.hpp"
#include "linarr/error.hpp"
#include "linarr/report.hpp"

namespace {

using namespace linarr;

std::string read_input_text(const std::string& arg) {
    if (arg == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    if (arg.rfind("catalog:", 0) == 0) return arg + "\n";
    std::ifstream in(arg);
    if (!in) throw ParseError("cannot open input file \"" + arg + "\"");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

ResolvedInput load(const std::string& arg) {
    return resolve_input(parse_document(read_input_text(arg)));
}

Format parse_format(const std::string& f) {
    if (f == "json") return Format::json;
    if (f == "table") return Format::table;
    throw ParseError("unknown format \"" + f + "\" (expected json or table)");
}

int run(int argc, char** argv) {
    CLI::App app{"line arrangement analyzer: Jacobian syzygies, intersection lattices and "
                 "unexpected curves over exact cyclotomic arithmetic"};
    app.require_subcommand(1);

    std::string format = "table";
    std::uint64_t seed = 0;
    unsigned oracle_budget = 9;
    app.add_option("--format", format, "output format: json or table")->capture_default_str();
    app.add_option("--seed", seed, "seed for generic-point and generic-line sampling")
        ->capture_default_str();
    app.add_option("--oracle-budget", oracle_budget,
                   "largest curve degree the interpolation oracle will attempt")
        ->capture_default_str();

    std::string input;
    bool with_oracle = false;
    bool with_deletions = false;
    auto* analyze = app.add_subcommand("analyze", "full report for an input or catalog spec");
    analyze->fallthrough(); // global flags may follow the subcommand
    analyze->add_option("input", input, "file, '-' for stdin, or inline \"catalog: ...\"")
        ->required();
    analyze->add_flag("--oracle", with_oracle, "append the interpolation-oracle cross-check");
    analyze->add_flag("--deletions", with_deletions,
                      "compute per-deletion mdr values even on a negative verdict");

    auto* mdr_cmd = app.add_subcommand("mdr", "minimal degree of a Jacobian relation, with witness");
    mdr_cmd->fallthrough();
    mdr_cmd->add_option("input", input)->required();

    auto* unexp = app.add_subcommand("unexpected", "unexpected-curve verdict");
    unexp->fallthrough();
    unexp->add_option("input", input)->required();

    unsigned curve_degree = 0;
    auto* curve = app.add_subcommand("curve", "extract the minimal-degree unexpected curve");
    curve->fallthrough();
    curve->add_option("input", input)->required();
    curve->add_option("--degree", curve_degree, "curve degree (default: the minimal degree)");

    unsigned oracle_max_degree = 0;
    auto* oracle = app.add_subcommand("oracle", "interpolation oracle, degree by degree");
    oracle->fallthrough();
    oracle->add_option("input", input)->required();
    oracle->add_option("--max-degree", oracle_max_degree, "stop at this degree");

    auto* catalog = app.add_subcommand("catalog", "named arrangements");
    catalog->fallthrough();
    auto* cat_list = catalog->add_subcommand("list", "list catalog names");
    std::string cat_name;
    std::vector<std::string> cat_params;
    auto* cat_show = catalog->add_subcommand("show", "print a catalog arrangement as a document");
    cat_show->add_option("name", cat_name)->required();
    cat_show->add_option("params", cat_params, "key=value parameters");

    bool ext_generic = false, ext_on_max = false;
    auto* extend = app.add_subcommand("extend", "add a certified generic line");
    extend->fallthrough();
    extend->add_option("input", input)->required();
    extend->add_flag("--generic", ext_generic, "generic in the whole plane");
    extend->add_flag("--on-max-line", ext_on_max,
                     "generic in the pencil through a point of maximal multiplicity");

    app.parse(argc, argv);
    const Format fmt = parse_format(format);
    ReportOptions ropt;
    ropt.seed = seed;
    ropt.budget.max_degree = oracle_budget;

    if (*analyze) {
        ropt.with_oracle = with_oracle;
        ropt.force_deletions = with_deletions;
        std::cout << emit_report(build_report(load(input), ropt), fmt);
        return 0;
    }

    if (*mdr_cmd) {
        const ResolvedInput in = load(input);
        IntersectionLattice lat(in.arrangement);
        auto [r, w] = mdr_with_witness(in.arrangement, lat);
        if (fmt == Format::json) {
            std::cout << "{\n  \"label\": \"" << in.label << "\",\n  \"d\": "
                      << in.arrangement.size() << ",\n  \"mdr\": " << r
                      << ",\n  \"witness\": {\n    \"a\": \"" << w.a.to_string()
                      << "\",\n    \"b\": \"" << w.b.to_string() << "\",\n    \"c\": \""
                      << w.c.to_string() << "\"\n  }\n}\n";
        } else {
            std::cout << "mdr(" << in.label << ") = " << r << "\n";
            std::cout << "witness: a = " << w.a.to_string() << "\n         b = " << w.b.to_string()
                      << "\n         c = " << w.c.to_string() << "\n";
        }
        return 0;
    }

    if (*unexp) {
        const ResolvedInput in = load(input);
        ReportDocument rep = build_report(in, ropt);
        if (fmt == Format::json) {
            std::cout << emit_report(rep, fmt);
        } else {
            const auto& u = rep.unexpected;
            std::cout << in.label << ": ";
            if (!u.admits) {
                std::cout << "no unexpected curves (d = " << u.d << ", m = " << u.m
                          << ", mdr = " << u.r << ")\n";
            } else {
                std::cout << "unexpected curves of degree " << u.range.lo_excl + 1 << ".."
                          << u.range.hi_incl << "; minimal degree " << *u.minimal_degree
                          << (u.minimal_irreducible && *u.minimal_irreducible
                                  ? ", irreducible"
                                  : ", not irreducible")
                          << "\n";
            }
        }
        return 0;
    }

    if (*curve) {
        const ResolvedInput in = load(input);
        TheoremOptions topt;
        topt.compute_deletions = false;
        const UnexpectedReport rep = theorem_report(in.points, topt);
        if (!rep.admits) throw ComputationError("the input admits no unexpected curves");
        const unsigned j = curve_degree ? curve_degree : *rep.minimal_degree;
        if (j != *rep.minimal_degree)
            throw ComputationError("curve extraction is implemented for the minimal degree " +
                                   std::to_string(*rep.minimal_degree) + " only");
        Rng rng(Rng::mix({seed, 0x6375727665ULL}));
        const ProjPoint q = sample_generic_point(in.points, rng);
        const HomPoly cq = extract_curve(in.points, j, q);
        if (fmt == Format::json) {
            std::cout << "{\n  \"label\": \"" << in.label << "\",\n  \"degree\": " << j
                      << ",\n  \"q\": [\"" << q.coords()[0].to_string() << "\", \""
                      << q.coords()[1].to_string() << "\", \"" << q.coords()[2].to_string()
                      << "\"],\n  \"curve\": \"" << cq.to_string() << "\"\n}\n";
        } else {
            std::cout << "unexpected curve of degree " << j << " for " << in.label << "\n";
            std::cout << "q = " << q.to_string() << "\n";
            std::cout << "C_q: " << cq.to_string() << " = 0\n";
        }
        return 0;
    }

    if (*oracle) {
        const ResolvedInput in = load(input);
        OracleBudget budget;
        budget.max_degree = oracle_max_degree ? oracle_max_degree : oracle_budget;
        const CrossValidation cv = cross_validate(in.points, seed, budget);
        if (fmt == Format::json) {
            std::ostringstream out;
            out << "{\n  \"label\": \"" << in.label << "\",\n  \"agreed\": "
                << (cv.agreed ? "true" : "false") << ",\n  \"outcomes\": [";
            for (std::size_t i = 0; i < cv.outcomes.size(); ++i) {
                const auto& o = cv.outcomes[i];
                out << (i ? "," : "") << "\n    {\"degree\": " << o.degree
                    << ", \"direct\": " << (o.direct ? "true" : "false")
                    << ", \"theorem\": " << (o.theorem ? "true" : "false") << "}";
            }
            out << "\n  ]\n}\n";
            std::cout << out.str();
        } else {
            for (const auto& o : cv.outcomes)
                std::cout << "degree " << o.degree << ": oracle "
                          << (o.direct ? "unexpected" : "plain") << ", verdict "
                          << (o.theorem ? "unexpected" : "plain") << "\n";
            std::cout << (cv.agreed ? "all degrees agree\n" : "DISAGREEMENT: " + cv.disagreement + "\n");
        }
        return cv.agreed ? 0 : 2;
    }

    if (*catalog) {
        if (*cat_list) {
            for (const CatalogEntry& e : catalog_entries())
                std::cout << e.name << (e.params.empty() ? "" : " " + e.params) << "\n    "
                          << e.description << "\n";
            return 0;
        }
        if (*cat_show) {
            std::map<std::string, std::string> params;
            for (const std::string& kv : cat_params) {
                auto eq = kv.find('=');
                if (eq == std::string::npos || eq == 0)
                    throw ParseError("catalog parameter \"" + kv + "\" is not key=value");
                params[kv.substr(0, eq)] = kv.substr(eq + 1);
            }
            std::cout << emit_arrangement_document(catalog_build(cat_name, params));
            return 0;
        }
        throw ParseError("catalog needs a subcommand: list or show");
    }

    if (*extend) {
        if (ext_generic == ext_on_max)
            throw ParseError("extend needs exactly one of --generic or --on-max-line");
        const ResolvedInput in = load(input);
        Arrangement out = [&] {
            if (ext_generic) return add_generic_line(in.arrangement, seed);
            IntersectionLattice lat(in.arrangement);
            for (const LatticePoint& lp : lat.points())
                if (lp.multiplicity() == lat.max_multiplicity())
                    return add_generic_line_through(in.arrangement, lp.p, seed);
            throw InternalError("no lattice point of maximal multiplicity");
        }();
        std::vector<std::string> comments{
            "extended from " + in.label + " (seed " + std::to_string(seed) + ")",
            ext_generic ? "new line is generic" : "new line is generic through a maximal point"};
        std::cout << emit_arrangement_document(out, comments);
        return 0;
    }

    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return 0; // --help
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const linarr::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const linarr::InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    } catch (const linarr::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
