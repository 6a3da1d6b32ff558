#include <doctest.h>

#include <set>

#include "aomoto/aomoto_complex.hpp"
#include "aomoto/curve.hpp"
#include "aomoto/fixtures.hpp"
#include "aomoto/pencil.hpp"

using namespace aomoto;

TEST_CASE("fixture catalogue") {
    auto names = fixtures::list();
    CHECK(names.size() == 15);
    CHECK(fixtures::has("two-conics-tangent"));
    CHECK(fixtures::has("degenerate-hesse-A"));
    CHECK(fixtures::has("icosidodecahedron"));
    CHECK_FALSE(fixtures::has("nope"));
    CHECK_THROWS_AS(fixtures::load("nope"), std::out_of_range);
    CHECK_THROWS_AS(fixtures::dump("nope"), std::out_of_range);
    CHECK(fixtures::dump("hesse-B-pencil").contains("fibers"));
}

TEST_CASE("fixture component and point counts") {
    struct Row {
        const char* name;
        std::size_t components;
        std::size_t points;
    };
    for (const Row& r : {Row{"two-conics-tangent", 2, 1},
                         Row{"tcquartic1", 2, 4},
                         Row{"tcquartic2", 3, 5},
                         Row{"hesse-A", 12, 21},
                         Row{"hesse-B", 9, 18},
                         Row{"degenerate-hesse-A", 12, 12},
                         Row{"degenerate-hesse-B", 9, 12},
                         Row{"hesse-conics", 12, 21},
                         Row{"icosidodecahedron", 16, 45}}) {
        WeakCombinatorics w = parse_curve(fixtures::load(r.name).curve);
        CHECK_MESSAGE(w.components.size() == r.components, r.name);
        CHECK_MESSAGE(w.points.size() == r.points, r.name);
    }
}

TEST_CASE("pinned expected values hold") {
    for (const std::string& name : fixtures::list()) {
        const auto& f = fixtures::load(name);
        WeakCombinatorics w = parse_curve(f.curve);
        REQUIRE(validate_curve(w).ok()); // hard gate before any expectation
        for (const auto& e : f.expected) {
            OneForm omega = e.omega.empty()
                                ? make_one_form(e.p, std::vector<std::int64_t>(
                                                         w.components.size(), 1))
                                : make_one_form(e.p, e.omega);
            if (e.op == "h1") {
                CHECK_MESSAGE(h1(w, e.p, omega) ==
                                  static_cast<std::size_t>(e.value),
                              (name + " h1 over GF(" + std::to_string(e.p) + ")"));
            } else if (e.op == "dim2") {
                CHECK_MESSAGE(AomotoBasis(w, e.p).dim2() ==
                                  static_cast<std::size_t>(e.value),
                              (name + " dim2 over GF(" + std::to_string(e.p) + ")"));
            } else {
                FAIL("unknown expectation op");
            }
        }
    }
}

TEST_CASE("every shipped pencil validates against its curve") {
    for (const std::string& name : fixtures::list()) {
        const auto& f = fixtures::load(name);
        WeakCombinatorics w = parse_curve(f.curve);
        for (const auto& [pname, doc] : f.pencils) {
            QuasiFiberStructure q = parse_pencil(w, doc);
            StructureReport rep = validate_structure(w, q);
            CHECK_MESSAGE(rep.ok(), pname);
        }
    }
}

TEST_CASE("degenerate hesse tangency data is the symbolic one") {
    WeakCombinatorics w = parse_curve(fixtures::load("degenerate-hesse-B").curve);
    auto mu2_pairs = [&](const std::string& point) {
        std::set<std::pair<std::string, std::string>> out;
        const SingularPoint& pt = w.points[w.point_index(point)];
        for (const auto& [key, m] : pt.mu)
            if (m == 2) {
                std::string a = pt.branches[key.first].id;
                std::string b = pt.branches[key.second].id;
                out.insert({std::min(a, b), std::max(a, b)});
            }
        return out;
    };
    using P = std::pair<std::string, std::string>;
    CHECK(mu2_pairs("P") ==
          std::set<P>{{"C10", "C4"}, {"C10", "C12"}, {"C12", "C4"},
                      {"C11", "C5"}, {"C11", "C8"}, {"C5", "C8"},
                      {"C6", "C7"}, {"C6", "C9"}, {"C7", "C9"}});
    CHECK(mu2_pairs("Q").size() == 9);
    CHECK(mu2_pairs("R").size() == 9);
    // the three points partition the 27 cross-triple pairs
    std::set<P> all;
    for (const char* pt : {"P", "Q", "R"})
        for (const auto& pr : mu2_pairs(pt)) all.insert(pr);
    CHECK(all.size() == 27);
}
