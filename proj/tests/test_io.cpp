#include <doctest.h>

#include <json.hpp>

#include "linarr/catalog.hpp"
#include "linarr/error.hpp"
#include "linarr/parse.hpp"
#include "linarr/report.hpp"
#include "linarr/rng.hpp"

using namespace linarr;

TEST_CASE("scalar expression grammar") {
    CHECK(parse_scalar("3/2") == Scalar(rat(3, 2)));
    CHECK(parse_scalar("z(3)^2") == Scalar::zeta(3, 2));
    CHECK(parse_scalar("z(3)^2") == Scalar(-1) - Scalar::zeta(3));
    CHECK(parse_scalar("1 + z(4)*z(4)").is_zero());
    CHECK(parse_scalar("-7") == Scalar(-7));
    CHECK(parse_scalar("2*(1 - 1/4)") == Scalar(rat(3, 2)));
    CHECK(parse_scalar("(1+z(5))^2") == (Scalar(1) + Scalar::zeta(5)) * (Scalar(1) + Scalar::zeta(5)));
    CHECK(parse_scalar(" - ( 2 - 2 ) ").is_zero());
}

TEST_CASE("scalar expression errors carry positions") {
    CHECK_THROWS_AS(parse_scalar("1/0"), ParseError);
    CHECK_THROWS_AS(parse_scalar("z(0)"), ParseError);
    CHECK_THROWS_AS(parse_scalar("1 +"), ParseError);
    CHECK_THROWS_AS(parse_scalar("(1"), ParseError);
    CHECK_THROWS_AS(parse_scalar("w(3)"), ParseError);
    CHECK_THROWS_AS(parse_scalar("1 2"), ParseError);
    try {
        parse_scalar("1 + $");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.column == 5);
    }
}

TEST_CASE("scalar printing is re-parseable") {
    Rng rng(0x10aded);
    for (unsigned n : {1u, 3u, 4u, 5u, 12u}) {
        for (int t = 0; t < 8; ++t) {
            Scalar s(rat(rng.int_in(-20, 20), rng.int_in(1, 9)));
            for (unsigned i = 1; i < euler_phi(n); ++i)
                s += Scalar::zeta(n, i) * Scalar(rat(rng.int_in(-20, 20), rng.int_in(1, 9)));
            CHECK(parse_scalar(s.to_string()) == s);
        }
    }
}

TEST_CASE("point document") {
    InputDocument doc = parse_document("points:\n[1,0,0]\n[0,1,0]\n[0,0,1]\n");
    CHECK(doc.kind == InputKind::points);
    CHECK(doc.entries.size() == 3);
    ResolvedInput in = resolve_input(doc);
    CHECK(in.points.size() == 3);
    CHECK(in.arrangement.size() == 3);
}

TEST_CASE("catalog document") {
    InputDocument doc = parse_document("catalog: fermat m=5\n");
    CHECK(doc.kind == InputKind::catalog);
    ResolvedInput in = resolve_input(doc);
    CHECK(in.arrangement.size() == 15);

    InputDocument mk = parse_document("catalog: monomial_sub m=5 k=2 w=z(3),z(3)^2\n");
    CHECK(resolve_input(mk).arrangement.size() == 11);
}

TEST_CASE("document errors") {
    CHECK_THROWS_AS(parse_document(""), ParseError);
    CHECK_THROWS_AS(parse_document("points:\n"), ParseError);
    CHECK_THROWS_AS(parse_document("nonsense:\n[1,1,1]\n"), ParseError);
    CHECK_THROWS_AS(parse_document("points:\n[1,0]\n"), ParseError);
    CHECK_THROWS_AS(parse_document("points:\n[0,0,0]\n"), ParseError);
    CHECK_THROWS_AS(parse_document("points:\n(1,0,0)\n"), ParseError);
    // bad parameter values and duplicates are rejected at resolution
    CHECK_THROWS_AS(resolve_input(parse_document("catalog: fermat m=x\n")), ParseError);
    CHECK_THROWS_AS(resolve_input(parse_document("lines:\n[1,0,0]\n[1,0,0]\n")), ParseError);
    CHECK_THROWS_AS(resolve_input(parse_document("lines:\n[1,0,0]\n[2,0,0]\n")), ParseError);
    CHECK_THROWS_AS(resolve_input(parse_document("catalog: no_such_thing\n")), ParseError);
    // line numbers are reported
    try {
        parse_document("points:\n[1,0,0]\n# fine\n[broken\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line == 4);
    }
}

TEST_CASE("comments and labels") {
    InputDocument doc = parse_document("# heading comment\npoints: my config\n[1,2,3]\n# tail\n[3,2,1]\n");
    CHECK(doc.label == "my config");
    CHECK(doc.entries.size() == 2);
}

TEST_CASE("arrangement documents round-trip") {
    for (const Arrangement& a :
         {b3_arrangement(), fermat_arrangement(3), monomial_sub(5, 1, {Scalar::zeta(3)})}) {
        std::string text = emit_arrangement_document(a);
        ResolvedInput in = resolve_input(parse_document(text));
        REQUIRE(in.arrangement.size() == a.size());
        for (std::size_t i = 0; i < a.size(); ++i)
            CHECK(in.arrangement.lines()[i] == a.lines()[i]);
        // parse(emit(parse(x))) is stable
        CHECK(emit_arrangement_document(in.arrangement) ==
              emit_arrangement_document(resolve_input(parse_document(
                                            emit_arrangement_document(in.arrangement)))
                                            .arrangement));
    }
}

TEST_CASE("B3 report carries the expected facts") {
    ResolvedInput in = resolve_input(parse_document("catalog: B3\n"));
    ReportDocument rep = build_report(in);
    const std::string json = emit_report(rep, Format::json);

    auto parsed = nlohmann::json::parse(json); // valid JSON
    CHECK(parsed["schema_version"] == 1);
    CHECK(parsed["syzygy"]["mdr"] == 3);
    CHECK(parsed["syzygy"]["tau"] == 49);
    CHECK(parsed["syzygy"]["is_free"] == true);
    CHECK(parsed["unexpected"]["admits_unexpected"] == true);
    CHECK(parsed["unexpected"]["minimal_degree"] == 4);
    CHECK(parsed["unexpected"]["irreducible"] == true);
    CHECK(parsed["lattice"]["n_k"]["4"] == 3);

    const std::string table = emit_report(rep, Format::table);
    CHECK(table.find("mdr:    3") != std::string::npos);
    CHECK(table.find("exponents: (3,5)") != std::string::npos);
}

TEST_CASE("Hessian table shows exponents and the degree range") {
    ResolvedInput in = resolve_input(parse_document("catalog: hessian\n"));
    ReportDocument rep = build_report(in);
    const std::string table = emit_report(rep, Format::table);
    CHECK(table.find("exponents: (4,7)") != std::string::npos);
    CHECK(table.find("degree range: 5..6") != std::string::npos);
}

TEST_CASE("reports are deterministic") {
    ReportOptions opt;
    opt.with_oracle = true;
    opt.seed = 42;
    auto run = [&] {
        ResolvedInput in = resolve_input(parse_document("catalog: B3\n"));
        return emit_report(build_report(in, opt), Format::json);
    };
    const std::string first = run();
    CHECK(first == run());
    CHECK(first.find("\"agreed\": true") != std::string::npos);
}

TEST_CASE("oracle skip warning beyond the budget") {
    ResolvedInput in = resolve_input(parse_document("catalog: fermat m=6\n"));
    ReportOptions opt;
    opt.with_oracle = true;
    ReportDocument rep = build_report(in, opt);
    CHECK(!rep.oracle.has_value());
    bool warned = false;
    for (const auto& w : rep.warnings) warned = warned || w.find("oracle skipped") == 0;
    CHECK(warned);
}
