#include <doctest.h>

#include "aomoto/curve.hpp"
#include "aomoto/fixtures.hpp"
#include "aomoto/report.hpp"

using namespace aomoto;

namespace {

struct Loaded {
    WeakCombinatorics w;
    std::vector<QuasiFiberStructure> pencils;
};

Loaded load(const std::string& name, bool with_pencil = true) {
    const auto& f = fixtures::load(name);
    Loaded out;
    out.w = parse_curve(f.curve);
    if (with_pencil)
        out.pencils.push_back(
            parse_pencil(out.w, f.pencils.at(name + "-pencil")));
    return out;
}

const MultiplicityBound& row(const Report& rep, std::int64_t order) {
    for (const MultiplicityBound& b : rep.bounds)
        if (b.order == order) return b;
    throw std::out_of_range("no row for order " + std::to_string(order));
}

} // namespace

TEST_CASE("candidate orders") {
    Loaded ha = load("hesse-A", false);
    CHECK(candidate_orders(ha.w, classical_twist(ha.w)) ==
          std::vector<std::int64_t>{3, 7, 21});

    Loaded ico = load("icosidodecahedron", false);
    CHECK(candidate_orders(ico.w, classical_twist(ico.w)) ==
          std::vector<std::int64_t>{2, 4, 8, 16});

    WeakCombinatorics line = parse_curve(nlohmann::json::parse(
        R"({"components": [{"id": "L", "degree": 1}], "points": []})"));
    CHECK(candidate_orders(line, classical_twist(line)).empty());

    TwistSpecification bad;
    bad.weights = {2, 2};
    WeakCombinatorics lines =
        parse_curve(fixtures::load("two-lines").curve);
    CHECK_THROWS_AS(candidate_orders(lines, bad), std::invalid_argument);
}

TEST_CASE("upper bounds per order") {
    Loaded ha = load("hesse-A", false);
    CHECK(upper_bound(ha.w, classical_twist(ha.w), 7) == 2);
    CHECK(upper_bound(ha.w, classical_twist(ha.w), 3) == 0);
    CHECK_FALSE(upper_bound(ha.w, classical_twist(ha.w), 21).has_value());

    Loaded hb = load("hesse-B", false);
    CHECK(upper_bound(hb.w, classical_twist(hb.w), 2) == 2);
    CHECK(upper_bound(hb.w, classical_twist(hb.w), 3) == 1);
    CHECK(upper_bound(hb.w, classical_twist(hb.w), 9) == 1);

    Loaded hc = load("hesse-conics", false);
    for (std::int64_t n : {2, 4, 8})
        CHECK(upper_bound(hc.w, classical_twist(hc.w), n) == 3);
    CHECK(upper_bound(hc.w, classical_twist(hc.w), 3) == 0);
}

TEST_CASE("prime power independence of the upper bound") {
    for (const std::string& name : {"hesse-B", "hesse-conics"}) {
        Loaded fx = load(name, false);
        TwistSpecification t = classical_twist(fx.w);
        for (std::int64_t p : {2, 3}) {
            auto u1 = upper_bound(fx.w, t, p);
            auto u2 = upper_bound(fx.w, t, p * p);
            auto u3 = upper_bound(fx.w, t, p * p * p);
            CHECK(u1 == u2);
            CHECK(u1 == u3);
        }
    }
}

TEST_CASE("hesse-A report") {
    Loaded ha = load("hesse-A");
    Report rep = assemble_report(ha.w, classical_twist(ha.w), ha.pencils);
    CHECK(rep.eigenvalue_one_multiplicity == 11);

    const auto& b3 = row(rep, 3);
    CHECK(b3.exact);
    CHECK(b3.lower == 0);
    CHECK(b3.upper == 0);

    const auto& b7 = row(rep, 7);
    CHECK(b7.exact);
    CHECK(b7.lower == 2);
    CHECK(b7.upper == 2);
    bool cert_mentioned = false;
    for (const std::string& s : b7.provenance)
        if (s.find("multiple-fiber") != std::string::npos) cert_mentioned = true;
    CHECK(cert_mentioned);

    const auto& b21 = row(rep, 21);
    CHECK_FALSE(b21.upper.has_value());
    CHECK(b21.lower == 0);
    CHECK_FALSE(b21.exact);
}

TEST_CASE("hesse-B report marks b3 exact") {
    Loaded hb = load("hesse-B");
    Report rep = assemble_report(hb.w, classical_twist(hb.w), hb.pencils);
    const auto& b3 = row(rep, 3);
    CHECK(b3.exact);
    CHECK(b3.lower == 1);
    CHECK(b3.upper == 1);
    const auto& b2 = row(rep, 2);
    CHECK(b2.lower == 2);
    CHECK(b2.upper == 2);
    const auto& b9 = row(rep, 9);
    CHECK(b9.upper == 1);
}

TEST_CASE("hesse-conics report") {
    Loaded hc = load("hesse-conics");
    Report rep = assemble_report(hc.w, classical_twist(hc.w), hc.pencils);
    const auto& b2 = row(rep, 2);
    CHECK(b2.lower == 2);
    CHECK(b2.upper == 3);
    CHECK_FALSE(b2.exact);
    REQUIRE(b2.external.has_value());
    CHECK(*b2.external == 2);
    CHECK(b2.lower <= *b2.external);
    CHECK(*b2.external <= *b2.upper);

    const auto& b4 = row(rep, 4);
    CHECK(b4.lower == 2);
    CHECK(b4.upper == 3);

    const auto& b8 = row(rep, 8);
    CHECK(b8.exact);
    CHECK(b8.lower == 3);
    CHECK(b8.upper == 3);

    const auto& b3 = row(rep, 3);
    CHECK(b3.exact);
    CHECK(b3.upper == 0);
}

TEST_CASE("icosidodecahedron report") {
    Loaded ico = load("icosidodecahedron");
    Report rep = assemble_report(ico.w, classical_twist(ico.w), ico.pencils);
    for (std::int64_t n : {2, 4, 8, 16}) {
        const auto& b = row(rep, n);
        REQUIRE(b.upper.has_value());
        CHECK(*b.upper == 1);
        CHECK(b.lower == 0);
    }
    const auto& b2 = row(rep, 2);
    REQUIRE(b2.external.has_value());
    CHECK(*b2.external == 0);
}

TEST_CASE("reports are deterministic and reserialization stable") {
    Loaded ha = load("hesse-A");
    Report r1 = assemble_report(ha.w, classical_twist(ha.w), ha.pencils);
    // reserialize the curve and pencil, then recompute
    WeakCombinatorics w2 = parse_curve(serialize_curve(ha.w));
    QuasiFiberStructure q2 =
        parse_pencil(w2, serialize_pencil(ha.w, ha.pencils[0]));
    Report r2 = assemble_report(w2, classical_twist(w2), {q2});
    CHECK(render_structured(ha.w, r1) == render_structured(w2, r2));
    // invariants: lower <= upper whenever both present
    for (const MultiplicityBound& b : r1.bounds)
        if (b.upper) CHECK(b.lower <= *b.upper);
}

TEST_CASE("structured output round trips") {
    Loaded hb = load("hesse-B");
    Report rep = assemble_report(hb.w, classical_twist(hb.w), hb.pencils);
    nlohmann::json doc = render_structured(hb.w, rep);
    nlohmann::json reparsed = nlohmann::json::parse(doc.dump());
    CHECK(reparsed == doc);
    CHECK(reparsed["bounds"].size() == rep.bounds.size());
    std::string text = render_text(hb.w, rep);
    CHECK(text.find("order | lower | upper | exact") != std::string::npos);
}

TEST_CASE("twisted report for the tcquartic2 pencil weights") {
    Loaded tc = load("tcquartic2");
    TwistSpecification twist;
    twist.weights = {2, 1, 2}; // components C1, C4, C3
    Report rep = assemble_report(tc.w, twist, tc.pencils);
    // total degree 2*1 + 1*4 + 2*3 = 12
    const auto& b3 = row(rep, 3);
    CHECK(b3.exact);
    CHECK(b3.lower == 1);
    CHECK(b3.upper == 1);
    const auto& b2 = row(rep, 2);
    CHECK(b2.exact);
    CHECK(b2.upper == 0);
    const auto& b6 = row(rep, 6);
    CHECK(b6.lower == 1);
    CHECK_FALSE(b6.upper.has_value());
}
