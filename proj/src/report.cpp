#include "linarr/report.hpp"

#include <json.hpp>

#include <sstream>

#include "linarr/catalog.hpp"
#include "linarr/error.hpp"

namespace linarr {

namespace {

using ordered_json = nlohmann::ordered_json;

std::array<std::string, 3> triple_strings(const std::array<Scalar, 3>& c) {
    return {c[0].to_string(), c[1].to_string(), c[2].to_string()};
}

std::string kind_name(InputKind k) {
    switch (k) {
        case InputKind::points: return "points";
        case InputKind::lines: return "lines";
        case InputKind::catalog: return "catalog";
    }
    return "?";
}

ordered_json triple_json(const std::array<std::string, 3>& t) {
    return ordered_json::array({t[0], t[1], t[2]});
}

} // namespace

ResolvedInput resolve_input(const InputDocument& doc) {
    try {
        if (doc.kind == InputKind::catalog) {
            Arrangement a = catalog_build(doc.catalog_name, doc.catalog_params);
            PointSet z = dualize_inv(a);
            return ResolvedInput{std::move(a), std::move(z), doc.kind, doc.label};
        }
        if (doc.kind == InputKind::points) {
            std::vector<ProjPoint> pts;
            pts.reserve(doc.entries.size());
            for (const auto& e : doc.entries) pts.emplace_back(e[0], e[1], e[2]);
            PointSet z(std::move(pts), doc.label);
            Arrangement a = dualize(z);
            return ResolvedInput{std::move(a), std::move(z), doc.kind, doc.label};
        }
        std::vector<ProjLine> lines;
        lines.reserve(doc.entries.size());
        for (const auto& e : doc.entries) lines.emplace_back(e[0], e[1], e[2]);
        Arrangement a(std::move(lines), doc.label);
        PointSet z = dualize_inv(a);
        return ResolvedInput{std::move(a), std::move(z), doc.kind, doc.label};
    } catch (const MathError& e) {
        throw ParseError(e.what());
    }
}

ReportDocument build_report(const ResolvedInput& input, const ReportOptions& opt) {
    const Arrangement& a = input.arrangement;
    ReportDocument rep;
    rep.label = input.label;
    rep.kind = input.kind;
    rep.d = static_cast<unsigned>(a.size());
    if (input.kind == InputKind::points) {
        for (const ProjPoint& p : input.points.points()) rep.entries.push_back(triple_strings(p.coords()));
    } else {
        for (const ProjLine& l : a.lines()) rep.entries.push_back(triple_strings(l.coeffs()));
    }

    IntersectionLattice lat(a);
    rep.m = lat.max_multiplicity();
    rep.nk = lat.multiplicity_counts();
    rep.lattice_point_count = lat.points().size();
    rep.arnold_exponent_min = rat_to_string(lat.arnold_exponent_min());
    for (const ProjPoint& p : modular_points(a, lat)) rep.modular_pts.push_back(triple_strings(p.coords()));
    rep.supersolvable = is_supersolvable(a, lat);

    auto [r, witness] = mdr_with_witness(a, lat);
    rep.witness = std::move(witness);
    rep.invariants = numeric_invariants(a, lat, r);
    if (rep.invariants.is_free)
        rep.supersolvable_numeric = supersolvable_numeric_check(rep.invariants, lat);

    TheoremOptions topt;
    topt.force_deletions = opt.force_deletions;
    rep.unexpected = theorem_report(a, lat, topt);

    if (!rep.unexpected.splitting.determined)
        rep.warnings.push_back("splitting type undetermined: mdr+1 >= d/2, only the bound a <= " +
                               std::to_string(rep.unexpected.splitting.a_upper) + " is known");
    if (rep.d == 11 && rep.m == 4 && !rep.invariants.is_free)
        rep.warnings.push_back("11 lines with maximal multiplicity 4, not free: no classification "
                               "shortcut applies to this family, the verdict is instance-specific");

    if (opt.with_oracle) {
        const unsigned d = static_cast<unsigned>(input.points.size());
        if (d > opt.budget.max_points) {
            rep.warnings.push_back("oracle skipped: |Z| = " + std::to_string(d) + " exceeds budget " +
                                   std::to_string(opt.budget.max_points));
        } else {
            rep.oracle = cross_validate(input.points, opt.seed, opt.budget);
        }
    }
    return rep;
}

namespace {

ordered_json splitting_json(const SplittingType& s) {
    ordered_json j;
    j["determined"] = s.determined;
    if (s.determined) {
        j["a"] = s.a;
        j["b"] = s.b;
    } else {
        j["a"] = nullptr;
        j["b"] = nullptr;
    }
    j["a_upper"] = s.a_upper;
    return j;
}

ordered_json report_json(const ReportDocument& rep) {
    ordered_json j;
    j["schema_version"] = 1;
    j["label"] = rep.label;

    ordered_json input;
    input["kind"] = kind_name(rep.kind);
    input["d"] = rep.d;
    input["entries"] = ordered_json::array();
    for (const auto& e : rep.entries) input["entries"].push_back(triple_json(e));
    j["input"] = std::move(input);

    ordered_json lat;
    lat["d"] = rep.d;
    lat["m"] = rep.m;
    ordered_json nk;
    for (const auto& [k, v] : rep.nk) nk[std::to_string(k)] = v;
    lat["n_k"] = std::move(nk);
    lat["point_count"] = rep.lattice_point_count;
    lat["arnold_exponent_min"] = rep.arnold_exponent_min;
    lat["modular_points"] = ordered_json::array();
    for (const auto& p : rep.modular_pts) lat["modular_points"].push_back(triple_json(p));
    lat["supersolvable"] = rep.supersolvable;
    j["lattice"] = std::move(lat);

    ordered_json syz;
    syz["mdr"] = rep.invariants.r;
    ordered_json wit;
    wit["degree"] = rep.witness.degree;
    wit["a"] = rep.witness.a.to_string();
    wit["b"] = rep.witness.b.to_string();
    wit["c"] = rep.witness.c.to_string();
    syz["witness"] = std::move(wit);
    syz["tau"] = rep.invariants.tau;
    syz["dpw_bound"] = rep.invariants.dpw_bound;
    if (rep.invariants.dpw_bound_strong)
        syz["dpw_bound_strong"] = *rep.invariants.dpw_bound_strong;
    else
        syz["dpw_bound_strong"] = nullptr;
    syz["is_free"] = rep.invariants.is_free;
    if (rep.invariants.exponents)
        syz["exponents"] = ordered_json::array(
            {rep.invariants.exponents->first, rep.invariants.exponents->second});
    else
        syz["exponents"] = nullptr;
    if (rep.invariants.betti)
        syz["betti"] = ordered_json::array(
            {(*rep.invariants.betti)[0], (*rep.invariants.betti)[1], (*rep.invariants.betti)[2]});
    else
        syz["betti"] = nullptr;
    syz["splitting_type"] = splitting_json(rep.invariants.splitting);
    syz["supersolvable_combinatorial"] = rep.supersolvable;
    if (rep.supersolvable_numeric)
        syz["supersolvable_numeric"] = *rep.supersolvable_numeric;
    else
        syz["supersolvable_numeric"] = nullptr;
    j["syzygy"] = std::move(syz);

    ordered_json un;
    un["admits_unexpected"] = rep.unexpected.admits;
    if (rep.unexpected.admits)
        un["degree_range"] = ordered_json::array(
            {rep.unexpected.range.lo_excl + 1, rep.unexpected.range.hi_incl});
    else
        un["degree_range"] = nullptr;
    if (rep.unexpected.minimal_degree)
        un["minimal_degree"] = *rep.unexpected.minimal_degree;
    else
        un["minimal_degree"] = nullptr;
    if (rep.unexpected.minimal_irreducible)
        un["irreducible"] = *rep.unexpected.minimal_irreducible;
    else
        un["irreducible"] = nullptr;
    un["deletion_mdrs"] = ordered_json(rep.unexpected.deletion_mdrs);
    j["unexpected"] = std::move(un);

    if (rep.oracle) {
        ordered_json orc;
        orc["agreed"] = rep.oracle->agreed;
        orc["outcomes"] = ordered_json::array();
        for (const auto& o : rep.oracle->outcomes) {
            ordered_json e;
            e["degree"] = o.degree;
            e["direct"] = o.direct;
            e["theorem"] = o.theorem;
            orc["outcomes"].push_back(std::move(e));
        }
        orc["disagreement"] = rep.oracle->disagreement;
        j["oracle"] = std::move(orc);
    } else {
        j["oracle"] = nullptr;
    }

    j["warnings"] = ordered_json(rep.warnings);
    return j;
}

std::string entries_line(const std::array<std::string, 3>& t) {
    return "[" + t[0] + ", " + t[1] + ", " + t[2] + "]";
}

std::string report_table(const ReportDocument& rep) {
    std::ostringstream out;
    out << "== input ==\n";
    out << "label:  " << rep.label << "\n";
    out << "kind:   " << kind_name(rep.kind) << "\n";
    out << "d:      " << rep.d << "\n";

    out << "\n== lattice ==\n";
    out << "m(A):   " << rep.m << "\n";
    out << "n_k:    ";
    bool first = true;
    for (const auto& [k, v] : rep.nk) {
        if (!first) out << "  ";
        out << "n_" << k << "=" << v;
        first = false;
    }
    out << "\n";
    out << "points: " << rep.lattice_point_count << "\n";
    out << "min arnold exponent: " << rep.arnold_exponent_min << "\n";
    out << "modular points ( " << rep.modular_pts.size() << " ):";
    for (const auto& p : rep.modular_pts) out << " (" << p[0] << ":" << p[1] << ":" << p[2] << ")";
    out << "\n";
    out << "supersolvable: " << (rep.supersolvable ? "yes" : "no") << "\n";

    out << "\n== syzygy ==\n";
    out << "mdr:    " << rep.invariants.r << "\n";
    out << "witness degree " << rep.witness.degree << ":\n";
    out << "  a = " << rep.witness.a.to_string() << "\n";
    out << "  b = " << rep.witness.b.to_string() << "\n";
    out << "  c = " << rep.witness.c.to_string() << "\n";
    out << "tau:    " << rep.invariants.tau << "\n";
    out << "bound:  " << rep.invariants.dpw_bound;
    if (rep.invariants.dpw_bound_strong) out << "  (refined " << *rep.invariants.dpw_bound_strong << ")";
    out << "\n";
    out << "free:   " << (rep.invariants.is_free ? "yes" : "no") << "\n";
    if (rep.invariants.exponents)
        out << "exponents: (" << rep.invariants.exponents->first << ","
            << rep.invariants.exponents->second << ")\n";
    if (rep.invariants.betti)
        out << "betti:  1 + " << (*rep.invariants.betti)[1] << "t + " << (*rep.invariants.betti)[2]
            << "t^2\n";
    const auto& sp = rep.invariants.splitting;
    if (sp.determined)
        out << "splitting type: (" << sp.a << "," << sp.b << ")\n";
    else
        out << "splitting type: undetermined, a <= " << sp.a_upper << "\n";
    if (rep.supersolvable_numeric)
        out << "supersolvable (numeric): " << (*rep.supersolvable_numeric ? "yes" : "no") << "\n";

    out << "\n== unexpected curves ==\n";
    out << "admits: " << (rep.unexpected.admits ? "yes" : "no") << "\n";
    if (rep.unexpected.admits) {
        out << "degree range: " << rep.unexpected.range.lo_excl + 1 << ".."
            << rep.unexpected.range.hi_incl << "\n";
        out << "minimal degree: " << *rep.unexpected.minimal_degree << "\n";
        if (rep.unexpected.minimal_irreducible)
            out << "minimal curve irreducible: " << (*rep.unexpected.minimal_irreducible ? "yes" : "no")
                << "\n";
    }
    if (!rep.unexpected.deletion_mdrs.empty()) {
        out << "deletion mdrs:";
        for (unsigned v : rep.unexpected.deletion_mdrs) out << " " << v;
        out << "\n";
    }

    if (rep.oracle) {
        out << "\n== oracle ==\n";
        out << "agreed: " << (rep.oracle->agreed ? "yes" : "no") << "\n";
        for (const auto& o : rep.oracle->outcomes)
            out << "degree " << o.degree << ": oracle " << (o.direct ? "unexpected" : "plain")
                << ", verdict " << (o.theorem ? "unexpected" : "plain") << "\n";
        if (!rep.oracle->agreed) out << "disagreement: " << rep.oracle->disagreement << "\n";
    }

    if (!rep.warnings.empty()) {
        out << "\n== warnings ==\n";
        for (const auto& w : rep.warnings) out << "- " << w << "\n";
    }
    return out.str();
}

} // namespace

std::string emit_report(const ReportDocument& rep, Format format) {
    if (format == Format::json) return report_json(rep).dump(2) + "\n";
    return report_table(rep);
}

std::string emit_arrangement_document(const Arrangement& a,
                                      const std::vector<std::string>& comments) {
    std::ostringstream out;
    for (const std::string& c : comments) out << "# " << c << "\n";
    out << "lines: " << a.label() << "\n";
    for (const ProjLine& l : a.lines())
        out << entries_line(triple_strings(l.coeffs())) << "\n";
    return out.str();
}

} // namespace linarr
