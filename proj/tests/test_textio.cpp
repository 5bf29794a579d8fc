#include <doctest.h>

#include <fstream>
#include <sstream>

#include "equicoh/render.hpp"
#include "equicoh/textio.hpp"

using namespace equicoh;

namespace {

std::string slurp(const std::string& name) {
    const std::string path = std::string(EQUICOH_TEST_DATA_DIR) + "/" + name;
    std::ifstream in(path, std::ios::binary);
    REQUIRE_MESSAGE(in.good(), "missing golden file ", path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

const char* kRp3Doc =
    "# twisted projective 3-space\n"
    "complex rp3tw {\n"
    "  cell c0 (0,0)\n"
    "  cell c1 (1,1)\n"
    "  cell c2 (2,1)\n"
    "  cell c3 (3,2)\n"
    "}\n";

}  // namespace

TEST_CASE("ring element printing is canonical") {
    CHECK(print_basis(ConeBasisElement::one()) == "1");
    CHECK(print_basis(ConeBasisElement::top(2, 1)) == "rho^2 tau");
    CHECK(print_basis(ConeBasisElement::theta()) == "theta");
    CHECK(print_basis(ConeBasisElement::bot(1, 0)) == "theta/(rho)");
    CHECK(print_basis(ConeBasisElement::bot(0, 2)) == "theta/(tau^2)");
    CHECK(print_basis(ConeBasisElement::bot(3, 1)) == "theta/(rho^3 tau)");

    CHECK(print_ring(RingElement::zero()) == "0");
    const RingElement sum = RingElement(ConeBasisElement::rho()) + RingElement(ConeBasisElement::theta());
    CHECK(print_ring(sum) == "rho + theta");
}

TEST_CASE("ring element parsing") {
    CHECK(parse_ring("0").is_zero());
    CHECK(parse_ring("1") == RingElement::unit());
    CHECK(parse_ring("tau^2") == RingElement(ConeBasisElement::top(0, 2)));
    CHECK(parse_ring("rho tau") == RingElement(ConeBasisElement::top(1, 1)));
    CHECK(parse_ring("theta/(rho^1 tau^0)") == RingElement(ConeBasisElement::bot(1, 0)));
    CHECK(parse_ring("theta") == RingElement(ConeBasisElement::theta()));
    CHECK(parse_ring("rho + rho").is_zero());

    // products inside a term collapse through the divided tower
    CHECK(parse_ring("rho theta/(rho)") == RingElement(ConeBasisElement::theta()));
    CHECK(parse_ring("tau theta").is_zero());
    CHECK(parse_ring("theta theta").is_zero());

    CHECK_THROWS_AS(parse_ring("a"), ParseError);
    CHECK_THROWS_AS(parse_ring("rho^"), ParseError);
    CHECK_THROWS_AS(parse_ring("rho +"), ParseError);
    CHECK_THROWS_AS(parse_ring("theta/(sigma)"), ParseError);
}

TEST_CASE("parse and print round-trip on canonical strings") {
    for (const char* text : {"0", "1", "rho", "tau^3", "rho^2 tau", "theta", "theta/(rho^2 tau)",
                             "tau + rho", "1 + theta/(tau^4)"}) {
        const RingElement x = parse_ring(text);
        CHECK(print_ring(x) == text);
        CHECK(parse_ring(print_ring(x)) == x);
    }
    for (const char* text : {"a", "b^2", "a b", "rho a + tau b", "tau c", "theta/(rho) b"}) {
        const ProjRingElement x = parse_proj(SpaceId::p41(), text);
        CHECK(print_proj(x) == text);
        CHECK(parse_proj(SpaceId::p41(), print_proj(x)) == x);
    }
}

TEST_CASE("complex documents parse, validate, and round-trip") {
    const ComplexDocument doc = parse_complex(kRp3Doc);
    CHECK(doc.name == "rp3tw");
    REQUIRE(doc.cells.size() == 4);
    CHECK(doc.cells[3].degree == Bidegree{3, 2});

    // canonical print is a fixed point
    const std::string printed = print_complex(doc);
    CHECK(print_complex(parse_complex(printed)) == printed);

    const auto res = run_filtration(doc.to_spec(), Window(-3, 6, -8, 6));
    CHECK(res.cohomology.degree_multiset() == std::vector<Bidegree>{{0, 0}, {1, 1}, {2, 1}, {3, 2}});
}

TEST_CASE("documents with differentials round-trip") {
    const char* text =
        "complex g2r42phi2 {\n"
        "  cell c0 (0,0)\n"
        "  cell c1 (1,1)\n"
        "  cell c2 (2,1)\n"
        "  cell c3 (2,1)\n"
        "  cell c4 (3,3)\n"
        "  cell c5 (4,2)\n"
        "  d c4 : c3 = theta\n"
        "}\n";
    const ComplexDocument doc = parse_complex(text);
    REQUIRE(doc.differentials.size() == 1);
    CHECK(doc.differentials[0].expr == RingElement(ConeBasisElement::theta()));
    CHECK(print_complex(doc) == text);

    const auto res = run_filtration(doc.to_spec(), Window(-3, 7, -8, 8));
    CHECK(res.cohomology.degree_multiset() ==
          std::vector<Bidegree>{{0, 0}, {1, 1}, {2, 1}, {2, 2}, {3, 2}, {4, 2}});
}

TEST_CASE("parser diagnostics carry positions and codes") {
    auto diag_of = [](const char* text) {
        try {
            parse_complex(text);
        } catch (const ParseError& e) {
            return e.diag();
        }
        FAIL("expected a parse error");
        return Diagnostic{};
    };

    SUBCASE("empty body") {
        const auto d = diag_of("complex x {\n}\n");
        CHECK(d.code == DiagCode::NoCells);
    }
    SUBCASE("duplicate label") {
        const auto d = diag_of("complex x {\n  cell c0 (0,0)\n  cell c0 (1,1)\n}\n");
        CHECK(d.code == DiagCode::DuplicateLabel);
        CHECK(d.line == 3);
    }
    SUBCASE("ordering violation") {
        const auto d = diag_of("complex x {\n  cell c0 (0,0)\n  cell c1 (2,2)\n  cell c2 (1,1)\n}\n");
        CHECK(d.code == DiagCode::OrderingViolation);
        CHECK(d.line == 4);
    }
    SUBCASE("base point required") {
        const auto d = diag_of("complex x {\n  cell c0 (1,1)\n}\n");
        CHECK(d.code == DiagCode::OrderingViolation);
    }
    SUBCASE("unknown generator in a d-line") {
        const auto d =
            diag_of("complex x {\n  cell c0 (0,0)\n  cell c1 (2,2)\n  d c1 : ghost = theta\n}\n");
        CHECK(d.code == DiagCode::UnresolvedReference);
        CHECK(d.message.find("ghost") != std::string::npos);
    }
    SUBCASE("syntax error") {
        const auto d = diag_of("complex x {\n  cell c0 0,0\n}\n");
        CHECK(d.code == DiagCode::Syntax);
        CHECK(d.line == 2);
    }
    SUBCASE("trailing content after a cell line") {
        const auto d = diag_of("complex x {\n  cell c0 (0,0) junk\n}\n");
        CHECK(d.code == DiagCode::Syntax);
        CHECK(d.message.find("junk") != std::string::npos);
    }
    SUBCASE("content after the closing brace") {
        const auto d = diag_of("complex x {\n  cell c0 (0,0)\n}\ncell c1 (1,1)\n");
        CHECK(d.code == DiagCode::Syntax);
        CHECK(d.line == 4);
    }
    SUBCASE("missing closing brace") {
        const auto d = diag_of("complex x {\n  cell c0 (0,0)\n");
        CHECK(d.code == DiagCode::Syntax);
    }
    SUBCASE("repeated differentials on one generator") {
        const auto d = diag_of(
            "complex x {\n  cell c0 (0,0)\n  cell c1 (3,2)\n"
            "  d c1 : c0 = theta\n  d c1 : c0 = 0\n}\n");
        CHECK(d.code == DiagCode::DuplicateLabel);
        CHECK(d.line == 5);
    }
    SUBCASE("comments and blank lines are fine anywhere") {
        const ComplexDocument doc =
            parse_complex("# heading\n\ncomplex x { # trailing\n  cell c0 (0,0) # base\n}\n");
        CHECK(doc.cells.size() == 1);
    }
}

TEST_CASE("ascii render of the point ring matches the golden two-cone picture") {
    FreeModule pt;
    pt.add({"1", {0, 0}});
    RenderSpec spec;
    spec.window = Window(-3, 3, -5, 5);
    spec.format = RenderFormat::Ascii;
    const std::string got = render_module(pt, spec);
    CHECK(got == slurp("point_ring_fig.txt"));

    // support check independent of layout: digits exactly where the cones are
    for (int p = -3; p <= 3; ++p)
        for (int q = -5; q <= 5; ++q) {
            const bool top = p >= 0 && q >= p;
            const bool bot = p <= 0 && q <= p - 2;
            CHECK(dimension_table(pt, spec.window).at(p, q) == ((top || bot) ? 1 : 0));
        }
}

TEST_CASE("overlay render of the flagship module matches its golden file") {
    FreeModule M;
    int i = 0;
    for (const Bidegree d : {Bidegree{0, 0}, {1, 1}, {2, 1}, {2, 2}, {3, 2}, {4, 2}})
        M.add({"g" + std::to_string(i++), d});
    RenderSpec spec;
    spec.window = Window(-2, 5, -4, 5);
    spec.format = RenderFormat::Ascii;
    spec.overlay = true;
    CHECK(render_module(M, spec) == slurp("g2r42_overlay.txt"));
}

TEST_CASE("stage logs serialize stage, cell, case and generator deltas") {
    const char* text =
        "complex x {\n"
        "  cell c0 (0,0)\n"
        "  cell c1 (1,-1)\n"
        "  cell c2 (3,2)\n"
        "  d c2 : c1 = theta/(rho)\n"
        "}\n";
    const auto res = run_filtration(parse_complex(text).to_spec(), Window(-3, 6, -9, 6));
    const std::string js = log_to_json(res.log);
    CHECK(js == log_to_json(res.log));
    CHECK(js.find("\"case\": \"BottomShift\"") != std::string::npos);
    CHECK(js.find("\"stage\": 2") != std::string::npos);
    CHECK(js.find("\"removed\"") != std::string::npos);
    CHECK(js.find("\"added\"") != std::string::npos);
}

TEST_CASE("csv and json renders are deterministic") {
    FreeModule M;
    M.add({"x", {0, 0}});
    M.add({"y", {1, 1}});
    RenderSpec spec;
    spec.window = Window(-1, 2, -3, 2);
    spec.format = RenderFormat::Csv;
    const std::string csv = render_module(M, spec);
    CHECK(csv == render_module(M, spec));
    CHECK(csv.rfind("q\\p,-1,0,1,2\n", 0) == 0);

    spec.format = RenderFormat::Json;
    const std::string js = render_module(M, spec);
    CHECK(js == render_module(M, spec));
    CHECK(js.find("\"schemaVersion\"") != std::string::npos);

    CHECK(module_to_json(M) == module_to_json(M));
}
