#include "aomoto/fixtures.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace aomoto::fixtures {

using nlohmann::json;

namespace {

// Small builder for curve documents.
struct CurveBuilder {
    json doc;
    CurveBuilder(const std::string& name, const std::string& notes) {
        doc["meta"] = {{"name", name}, {"notes", notes}};
        doc["components"] = json::array();
        doc["points"] = json::array();
    }
    void component(const std::string& id, std::int64_t degree) {
        doc["components"].push_back({{"id", id}, {"degree", degree}});
    }
    // branches: (branch id, component id); mu: (branchA, branchB, value)
    void point(const std::string& id,
               const std::vector<std::pair<std::string, std::string>>& branches,
               const std::vector<std::tuple<std::string, std::string, std::int64_t>>&
                   mu) {
        json pj;
        pj["id"] = id;
        pj["branches"] = json::array();
        for (const auto& [bid, cid] : branches)
            pj["branches"].push_back({{"id", bid}, {"component", cid}});
        pj["mu"] = json::array();
        for (const auto& [a, b, m] : mu) pj["mu"].push_back({a, b, m});
        doc["points"].push_back(std::move(pj));
    }
    // all listed branches pairwise transversal (cross-component mu = 1)
    void ordinary_point(
        const std::string& id,
        const std::vector<std::pair<std::string, std::string>>& branches) {
        std::vector<std::tuple<std::string, std::string, std::int64_t>> mu;
        for (std::size_t i = 0; i < branches.size(); ++i)
            for (std::size_t j = i + 1; j < branches.size(); ++j)
                if (branches[i].second != branches[j].second)
                    mu.push_back({branches[i].first, branches[j].first, 1});
        point(id, branches, mu);
    }
};

json pencil_doc(std::int64_t degree, std::int64_t index,
                const std::vector<std::vector<std::pair<std::string, std::int64_t>>>&
                    fibers,
                const std::vector<std::pair<std::int64_t, std::int64_t>>& residuals,
                const std::vector<std::string>& base_points,
                const std::map<std::string, std::int64_t>& twists = {}) {
    json doc;
    doc["degree"] = degree;
    doc["index"] = index;
    doc["fibers"] = json::array();
    for (std::size_t i = 0; i < fibers.size(); ++i) {
        json fj;
        fj["components"] = json::array();
        for (const auto& [id, m] : fibers[i])
            fj["components"].push_back({{"id", id}, {"m", m}});
        fj["residual"] = {{"m", residuals[i].first},
                          {"degree", residuals[i].second}};
        doc["fibers"].push_back(std::move(fj));
    }
    doc["base_points"] = base_points;
    if (!twists.empty()) {
        json tw = json::object();
        for (const auto& [id, v] : twists) tw[id] = v;
        doc["twists"] = tw;
    }
    return doc;
}

Fixture make_two_lines() {
    CurveBuilder b("two-lines", "two lines meeting at a node");
    b.component("L1", 1);
    b.component("L2", 1);
    b.ordinary_point("P", {{"a", "L1"}, {"b", "L2"}});
    Fixture f;
    f.name = "two-lines";
    f.curve = b.doc;
    f.expected = {{"h1", 2, {1, 1}, 0, "derived"},
                  {"h1", 5, {1, 1}, 0, "derived"}};
    return f;
}

Fixture make_triangle() {
    CurveBuilder b("triangle", "three lines in general position");
    for (int i = 1; i <= 3; ++i) b.component("L" + std::to_string(i), 1);
    b.ordinary_point("P12", {{"a", "L1"}, {"b", "L2"}});
    b.ordinary_point("P13", {{"a", "L1"}, {"b", "L3"}});
    b.ordinary_point("P23", {{"a", "L2"}, {"b", "L3"}});
    Fixture f;
    f.name = "triangle";
    f.curve = b.doc;
    f.expected = {{"h1", 2, {1, 1, 1}, 0, "derived"},
                  {"h1", 3, {1, 1, 1}, 0, "derived"}};
    return f;
}

json maximal_contact_doc(std::int64_t d) {
    CurveBuilder b("maximal-contact-d" + std::to_string(d),
                   "two degree-" + std::to_string(d) +
                       " curves with a single common point of maximal contact");
    b.component("C1", d);
    b.component("C2", d);
    b.point("P", {{"a", "C1"}, {"b", "C2"}}, {{"a", "b", d * d}});
    return b.doc;
}

Fixture make_two_conics_tangent() {
    Fixture f;
    f.name = "two-conics-tangent";
    f.curve = maximal_contact_doc(2);
    f.curve["meta"] = {
        {"name", "two-conics-tangent"},
        {"notes", "two smooth conics with maximal contact at one point; "
                  "members of a degree-2 pencil whose third member is a "
                  "double line"}};
    f.pencils["two-conics-tangent-pencil"] = pencil_doc(
        2, 2, {{{"C1", 1}}, {{"C2", 1}}}, {{0, 0}, {0, 0}}, {"P"});
    f.expected = {{"h1", 2, {1, 1}, 1, "printed"},
                  {"h1", 3, {1, 1}, 0, "printed"},
                  {"h1", 5, {1, 1}, 0, "printed"},
                  {"dim2", 2, {}, 3, "printed"},
                  {"dim2", 3, {}, 1, "printed"}};
    return f;
}

Fixture make_two_conics_transversal() {
    CurveBuilder b("two-conics-transversal",
                   "two smooth conics meeting transversally in four nodes");
    b.component("C1", 2);
    b.component("C2", 2);
    for (int i = 1; i <= 4; ++i)
        b.ordinary_point("P" + std::to_string(i), {{"a", "C1"}, {"b", "C2"}});
    Fixture f;
    f.name = "two-conics-transversal";
    f.curve = b.doc;
    f.expected = {{"h1", 2, {1, 1}, 0, "derived"},
                  {"h1", 3, {1, 1}, 0, "derived"}};
    return f;
}

Fixture make_tcquartic1() {
    CurveBuilder b("tcquartic1",
                   "tricuspidal quartic with the conic through its three "
                   "cusps, tangent at one smooth point");
    b.component("C2", 2);
    b.component("C4", 4);
    b.point("P", {{"b2", "C2"}, {"b4", "C4"}}, {{"b2", "b4", 2}});
    for (int i = 1; i <= 3; ++i)
        b.point("R" + std::to_string(i), {{"b2", "C2"}, {"b4", "C4"}},
                {{"b2", "b4", 2}});
    Fixture f;
    f.name = "tcquartic1";
    f.curve = b.doc;
    f.expected = {{"h1", 2, {1, 1}, 1, "printed"},
                  {"h1", 3, {1, 1}, 0, "printed"},
                  {"h1", 5, {1, 1}, 0, "printed"}};
    return f;
}

Fixture make_tcquartic2() {
    CurveBuilder b(
        "tcquartic2",
        "tricuspidal quartic, its bitangent line, and the nodal cubic "
        "through the cusps; the cubic has a node at the bitangency point "
        "with one branch tangent to both the line and the quartic");
    b.component("C1", 1);
    b.component("C4", 4);
    b.component("C3", 3);
    // at P: line, quartic, and the two cubic branches (b3a transversal,
    // b3b tangent to the common tangent of C1 and C4)
    b.point("P",
            {{"b1", "C1"}, {"b4", "C4"}, {"b3a", "C3"}, {"b3b", "C3"}},
            {{"b1", "b4", 2},
             {"b1", "b3a", 1},
             {"b1", "b3b", 2},
             {"b4", "b3a", 1},
             {"b4", "b3b", 2}});
    b.point("Q", {{"b1", "C1"}, {"b4", "C4"}}, {{"b1", "b4", 2}});
    for (int i = 1; i <= 3; ++i)
        b.point("R" + std::to_string(i), {{"b4", "C4"}, {"b3", "C3"}},
                {{"b4", "b3", 3}});
    Fixture f;
    f.name = "tcquartic2";
    f.curve = b.doc;
    f.pencils["tcquartic2-pencil"] = pencil_doc(
        6, 3, {{{"C1", 2}, {"C4", 1}}, {{"C3", 2}}}, {{0, 0}, {0, 0}},
        {"P", "R1", "R2", "R3"}, {{"C1", 2}, {"C4", 1}, {"C3", 2}});
    f.expected = {{"h1", 3, {2, 1, 2}, 1, "printed"},
                  {"h1", 2, {2, 1, 2}, 0, "printed"},
                  {"h1", 5, {2, 1, 2}, 0, "printed"},
                  {"dim2", 2, {}, 8, "printed"},
                  {"dim2", 3, {}, 8, "printed"},
                  {"dim2", 5, {}, 7, "printed"}};
    return f;
}

// Hesse-type sextic pencils, coordinatized over the nine points of the
// affine plane over GF(3). A member triple corresponds to a direction of
// affine lines; a conic of that member is absent from the three base
// points of one line in its direction and passes through the other six.
// Distinct directions meet in one point, which yields all Bezout counts.
int dir_value(int which, int u, int v) {
    switch (which) {
        case 0: return u;
        case 1: return v;
        case 2: return (u + v) % 3;
        default: return (u + 2 * v) % 3;
    }
}

Fixture make_hesse(bool with_lines) {
    const std::string name = with_lines ? "hesse-A" : "hesse-B";
    CurveBuilder b(name,
                   with_lines
                       ? "three conic triples and one double line triple, the "
                         "reduced members of a sextic pencil; nine ordinary "
                         "base points of multiplicity 7 and 12 nodes"
                       : "three conic triples from a sextic pencil whose "
                         "fourth member is a double line triple; nine "
                         "ordinary base points of multiplicity 6 and 9 nodes");
    if (with_lines)
        for (int i = 1; i <= 3; ++i) b.component("L" + std::to_string(i), 1);
    // member triples follow the labels C4 C5 C6 | C7 C9 C11 | C8 C10 C12
    const std::vector<std::vector<std::string>> members = {
        {"C4", "C5", "C6"}, {"C7", "C9", "C11"}, {"C8", "C10", "C12"}};
    for (const auto& m : members)
        for (const auto& id : m) b.component(id, 2);

    for (int u = 0; u < 3; ++u)
        for (int v = 0; v < 3; ++v) {
            std::vector<std::pair<std::string, std::string>> branches;
            if (with_lines) {
                std::string line = "L" + std::to_string(dir_value(3, u, v) + 1);
                branches.push_back({line, line});
            }
            for (int m = 0; m < 3; ++m)
                for (int c = 0; c < 3; ++c)
                    if (dir_value(m, u, v) != c)
                        branches.push_back({members[m][c], members[m][c]});
            b.ordinary_point("B" + std::to_string(u) + std::to_string(v),
                             branches);
        }
    for (const auto& m : members) {
        b.ordinary_point("N_" + m[0] + m[1], {{m[0], m[0]}, {m[1], m[1]}});
        b.ordinary_point("N_" + m[0] + m[2], {{m[0], m[0]}, {m[2], m[2]}});
        b.ordinary_point("N_" + m[1] + m[2], {{m[1], m[1]}, {m[2], m[2]}});
    }
    if (with_lines) {
        b.ordinary_point("N_L1L2", {{"L1", "L1"}, {"L2", "L2"}});
        b.ordinary_point("N_L1L3", {{"L1", "L1"}, {"L3", "L3"}});
        b.ordinary_point("N_L2L3", {{"L2", "L2"}, {"L3", "L3"}});
    }

    std::vector<std::string> base;
    for (int u = 0; u < 3; ++u)
        for (int v = 0; v < 3; ++v)
            base.push_back("B" + std::to_string(u) + std::to_string(v));

    Fixture f;
    f.name = name;
    f.curve = b.doc;
    if (with_lines) {
        f.pencils["hesse-A-pencil"] = pencil_doc(
            6, 1,
            {{{"L1", 2}, {"L2", 2}, {"L3", 2}},
             {{"C4", 1}, {"C5", 1}, {"C6", 1}},
             {{"C7", 1}, {"C9", 1}, {"C11", 1}},
             {{"C8", 1}, {"C10", 1}, {"C12", 1}}},
            {{0, 0}, {0, 0}, {0, 0}, {0, 0}}, base);
        f.expected = {{"h1", 3, {}, 0, "printed"},
                      {"h1", 7, {}, 2, "printed"},
                      {"dim2", 2, {}, 75, "derived"},
                      {"dim2", 7, {}, 66, "derived"}};
    } else {
        f.pencils["hesse-B-pencil"] = pencil_doc(
            6, 2,
            {{{"C4", 1}, {"C5", 1}, {"C6", 1}},
             {{"C7", 1}, {"C9", 1}, {"C11", 1}},
             {{"C8", 1}, {"C10", 1}, {"C12", 1}}},
            {{0, 0}, {0, 0}, {0, 0}}, base);
        f.expected = {{"h1", 2, {}, 2, "printed"},
                      {"h1", 3, {}, 1, "printed"},
                      {"dim2", 2, {}, 63, "derived"},
                      {"dim2", 3, {}, 54, "derived"}};
    }
    return f;
}

// Degenerate Hesse arrangements: the conics pass through all three base
// points and come in tangency triples there. The tangency data below is
// recovered from the defining equations: at each base point the nine
// tangent directions collapse into three groups of three, one conic per
// member triple in each group. The printed pair list for the first base
// point has one misprint ({5,9} in place of {5,11}): as printed it
// violates both transitivity of tangency and the pairwise Bezout count,
// and the gradients of the stated equations give the groups used here.
Fixture make_degenerate_hesse(bool with_lines) {
    const std::string name =
        with_lines ? "degenerate-hesse-A" : "degenerate-hesse-B";
    CurveBuilder b(name,
                   "conic triples of a sextic pencil meeting in three base "
                   "points of high multiplicity; tangency triples at each "
                   "base point derived from the defining equations");
    if (with_lines)
        for (int i = 1; i <= 3; ++i) b.component("L" + std::to_string(i), 1);
    const std::vector<std::vector<std::string>> members = {
        {"C4", "C5", "C6"}, {"C7", "C10", "C11"}, {"C8", "C9", "C12"}};
    for (int i = 4; i <= 12; ++i) b.component("C" + std::to_string(i), 2);

    // tangency triples (mu = 2 inside a triple) per base point
    const std::vector<std::vector<std::vector<int>>> cliques = {
        {{4, 10, 12}, {5, 8, 11}, {6, 7, 9}},  // at P
        {{4, 9, 11}, {5, 7, 12}, {6, 8, 10}},  // at Q
        {{4, 7, 8}, {5, 9, 10}, {6, 11, 12}},  // at R
    };
    // lines through each base point: P = L1 L2, Q = L1 L3, R = L2 L3
    const std::vector<std::vector<std::string>> lines_at = {
        {"L1", "L2"}, {"L1", "L3"}, {"L2", "L3"}};
    const std::vector<std::string> base_names = {"P", "Q", "R"};

    for (int pt = 0; pt < 3; ++pt) {
        std::vector<std::pair<std::string, std::string>> branches;
        if (with_lines)
            for (const std::string& l : lines_at[pt]) branches.push_back({l, l});
        for (int i = 4; i <= 12; ++i) {
            std::string id = "C" + std::to_string(i);
            branches.push_back({id, id});
        }
        auto same_clique = [&](int i, int j) {
            for (const auto& cl : cliques[pt])
                if (std::find(cl.begin(), cl.end(), i) != cl.end() &&
                    std::find(cl.begin(), cl.end(), j) != cl.end())
                    return true;
            return false;
        };
        std::vector<std::tuple<std::string, std::string, std::int64_t>> mu;
        for (std::size_t a = 0; a < branches.size(); ++a)
            for (std::size_t bb = a + 1; bb < branches.size(); ++bb) {
                const std::string& ida = branches[a].first;
                const std::string& idb = branches[bb].first;
                std::int64_t m = 1;
                if (ida[0] == 'C' && idb[0] == 'C') {
                    int i = std::stoi(ida.substr(1));
                    int j = std::stoi(idb.substr(1));
                    if (same_clique(i, j)) m = 2;
                }
                mu.push_back({ida, idb, m});
            }
        b.point(base_names[pt], branches, mu);
    }
    for (const auto& m : members) {
        b.ordinary_point("N_" + m[0] + m[1], {{m[0], m[0]}, {m[1], m[1]}});
        b.ordinary_point("N_" + m[0] + m[2], {{m[0], m[0]}, {m[2], m[2]}});
        b.ordinary_point("N_" + m[1] + m[2], {{m[1], m[1]}, {m[2], m[2]}});
    }

    Fixture f;
    f.name = name;
    f.curve = b.doc;
    std::vector<std::string> base = {"P", "Q", "R"};
    if (with_lines) {
        f.pencils["degenerate-hesse-A-pencil"] = pencil_doc(
            6, 1,
            {{{"L1", 2}, {"L2", 2}, {"L3", 2}},
             {{"C4", 1}, {"C5", 1}, {"C6", 1}},
             {{"C7", 1}, {"C10", 1}, {"C11", 1}},
             {{"C8", 1}, {"C9", 1}, {"C12", 1}}},
            {{0, 0}, {0, 0}, {0, 0}, {0, 0}}, base);
        f.expected = {{"h1", 3, {}, 0, "printed"},
                      {"h1", 7, {}, 2, "printed"},
                      {"dim2", 2, {}, 48, "derived"},
                      {"dim2", 7, {}, 39, "derived"}};
    } else {
        f.pencils["degenerate-hesse-B-pencil"] = pencil_doc(
            6, 2,
            {{{"C4", 1}, {"C5", 1}, {"C6", 1}},
             {{"C7", 1}, {"C10", 1}, {"C11", 1}},
             {{"C8", 1}, {"C9", 1}, {"C12", 1}}},
            {{0, 0}, {0, 0}, {0, 0}}, base);
        f.expected = {{"h1", 2, {}, 2, "printed"},
                      {"h1", 3, {}, 1, "printed"},
                      {"dim2", 2, {}, 42, "derived"},
                      {"dim2", 3, {}, 33, "derived"}};
    }
    return f;
}

Fixture make_hesse_conics() {
    CurveBuilder b("hesse-conics",
                   "twelve smooth conics in four reduced members of a sextic "
                   "pencil of index 2; nine ordinary base points of "
                   "multiplicity 8 and 12 nodes");
    std::vector<std::vector<std::string>> members(4);
    for (int m = 0; m < 4; ++m)
        for (int c = 0; c < 3; ++c) {
            std::string id = "C" + std::to_string(m * 3 + c + 1);
            members[m].push_back(id);
            b.component(id, 2);
        }
    for (int u = 0; u < 3; ++u)
        for (int v = 0; v < 3; ++v) {
            std::vector<std::pair<std::string, std::string>> branches;
            for (int m = 0; m < 4; ++m)
                for (int c = 0; c < 3; ++c)
                    if (dir_value(m, u, v) != c)
                        branches.push_back({members[m][c], members[m][c]});
            b.ordinary_point("B" + std::to_string(u) + std::to_string(v),
                             branches);
        }
    for (const auto& m : members) {
        b.ordinary_point("N_" + m[0] + m[1], {{m[0], m[0]}, {m[1], m[1]}});
        b.ordinary_point("N_" + m[0] + m[2], {{m[0], m[0]}, {m[2], m[2]}});
        b.ordinary_point("N_" + m[1] + m[2], {{m[1], m[1]}, {m[2], m[2]}});
    }
    b.doc["meta"]["external"] = json::array(
        {{{"order", 2}, {"value", 2}, {"note", "known multiplicity"}},
         {{"order", 4}, {"value", 2}, {"note", "known multiplicity"}}});

    std::vector<std::string> base;
    for (int u = 0; u < 3; ++u)
        for (int v = 0; v < 3; ++v)
            base.push_back("B" + std::to_string(u) + std::to_string(v));

    Fixture f;
    f.name = "hesse-conics";
    f.curve = b.doc;
    std::vector<std::vector<std::pair<std::string, std::int64_t>>> fibers;
    for (const auto& m : members) {
        std::vector<std::pair<std::string, std::int64_t>> fib;
        for (const auto& id : m) fib.push_back({id, 1});
        fibers.push_back(fib);
    }
    f.pencils["hesse-conics-pencil"] =
        pencil_doc(6, 2, fibers, {{0, 0}, {0, 0}, {0, 0}, {0, 0}}, base);
    f.expected = {{"h1", 3, {}, 0, "printed"},
                  {"h1", 2, {}, 3, "printed"},
                  {"dim2", 2, {}, 87, "derived"},
                  {"dim2", 3, {}, 75, "derived"}};
    return f;
}

// The sixteen-line arrangement with t4 = 15 and t2 = 30. Its combinatorics
// is captured by the complete graph on the six special lines: the fifteen
// quadruple points correspond to the pairs {a, b}, and each of the ten
// remaining lines meets the six special lines along a perfect matching.
// The ten matchings are the fifteen perfect matchings of K6 minus a
// one-factorization, which covers every edge exactly twice.
Fixture make_icosidodecahedron() {
    // perfect matchings of K6 on vertices 0..5, lexicographic
    std::vector<std::vector<std::pair<int, int>>> all;
    std::vector<std::pair<int, int>> current;
    std::vector<bool> used(6, false);
    auto rec = [&](auto&& self) -> void {
        int first = -1;
        for (int i = 0; i < 6; ++i)
            if (!used[i]) { first = i; break; }
        if (first < 0) {
            all.push_back(current);
            return;
        }
        used[first] = true;
        for (int j = first + 1; j < 6; ++j) {
            if (used[j]) continue;
            used[j] = true;
            current.push_back({first, j});
            self(self);
            current.pop_back();
            used[j] = false;
        }
        used[first] = false;
    };
    rec(rec);

    // round-robin one-factorization to remove
    std::set<std::vector<std::pair<int, int>>> removed;
    for (int round = 0; round < 5; ++round) {
        std::vector<std::pair<int, int>> m;
        auto norm = [](int a, int b) {
            return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
        };
        m.push_back(norm(5, round));
        for (int j = 1; j <= 2; ++j)
            m.push_back(norm((round + j) % 5, (round - j + 5) % 5));
        std::sort(m.begin(), m.end());
        removed.insert(m);
    }
    std::vector<std::vector<std::pair<int, int>>> kept;
    for (auto& m : all) {
        std::sort(m.begin(), m.end());
        if (!removed.count(m)) kept.push_back(m);
    }

    CurveBuilder b("icosidodecahedron",
                   "sixteen lines with fifteen quadruple points and thirty "
                   "nodes; six lines carry five quadruple points each, the "
                   "other ten carry three quadruple points and six nodes");
    auto ten_id = [](int i) { return "L" + std::to_string(i + 1); };
    auto six_id = [](int a) { return "L" + std::to_string(11 + a); };
    for (std::size_t i = 0; i < kept.size(); ++i) b.component(ten_id(i), 1);
    for (int a = 0; a < 6; ++a) b.component(six_id(a), 1);

    std::vector<std::string> base;
    for (int a = 0; a < 6; ++a)
        for (int c = a + 1; c < 6; ++c) {
            std::string id = "Q_" + std::to_string(11 + a) + "_" +
                             std::to_string(11 + c);
            std::vector<std::pair<std::string, std::string>> branches;
            branches.push_back({six_id(a), six_id(a)});
            branches.push_back({six_id(c), six_id(c)});
            for (std::size_t i = 0; i < kept.size(); ++i)
                if (std::find(kept[i].begin(), kept[i].end(),
                              std::make_pair(a, c)) != kept[i].end())
                    branches.push_back({ten_id(i), ten_id(i)});
            b.ordinary_point(id, branches);
            base.push_back(id);
        }
    for (std::size_t i = 0; i < kept.size(); ++i)
        for (std::size_t j = i + 1; j < kept.size(); ++j) {
            bool share = false;
            for (const auto& e : kept[i])
                if (std::find(kept[j].begin(), kept[j].end(), e) != kept[j].end())
                    share = true;
            if (share) continue;
            b.ordinary_point("D_" + std::to_string(i + 1) + "_" +
                                 std::to_string(j + 1),
                             {{ten_id(i), ten_id(i)}, {ten_id(j), ten_id(j)}});
        }
    b.doc["meta"]["external"] = json::array(
        {{{"order", 2}, {"value", 0}, {"note", "known multiplicity"}}});

    Fixture f;
    f.name = "icosidodecahedron";
    f.curve = b.doc;
    std::vector<std::pair<std::string, std::int64_t>> fiber1, fiber2;
    for (std::size_t i = 0; i < kept.size(); ++i) fiber1.push_back({ten_id(i), 1});
    for (int a = 0; a < 6; ++a) fiber2.push_back({six_id(a), 1});
    f.pencils["icosidodecahedron-pencil"] =
        pencil_doc(10, 2, {fiber1, fiber2}, {{0, 0}, {2, 2}}, base);
    f.expected = {{"h1", 2, {}, 1, "printed"},
                  {"dim2", 2, {}, 75, "derived"}};
    return f;
}

const std::vector<Fixture>& all_fixtures() {
    static const std::vector<Fixture> fixtures = [] {
        std::vector<Fixture> fs;
        fs.push_back(make_two_lines());
        fs.push_back(make_triangle());
        fs.push_back(make_two_conics_tangent());
        fs.push_back(make_two_conics_transversal());
        for (std::int64_t d : {3, 4, 6}) {
            Fixture f;
            f.name = "maximal-contact-d" + std::to_string(d);
            f.curve = maximal_contact_doc(d);
            fs.push_back(std::move(f));
        }
        fs.push_back(make_tcquartic1());
        fs.push_back(make_tcquartic2());
        fs.push_back(make_hesse(true));
        fs.push_back(make_hesse(false));
        fs.push_back(make_degenerate_hesse(true));
        fs.push_back(make_degenerate_hesse(false));
        fs.push_back(make_hesse_conics());
        fs.push_back(make_icosidodecahedron());
        return fs;
    }();
    return fixtures;
}

} // namespace

std::vector<std::string> list() {
    std::vector<std::string> names;
    for (const Fixture& f : all_fixtures()) names.push_back(f.name);
    return names;
}

bool has(const std::string& name) {
    for (const Fixture& f : all_fixtures())
        if (f.name == name) return true;
    return false;
}

const Fixture& load(const std::string& name) {
    for (const Fixture& f : all_fixtures())
        if (f.name == name) return f;
    throw std::out_of_range("unknown fixture '" + name + "'");
}

nlohmann::json dump(const std::string& name) {
    for (const Fixture& f : all_fixtures()) {
        if (f.name == name) return f.curve;
        auto it = f.pencils.find(name);
        if (it != f.pencils.end()) return it->second;
    }
    throw std::out_of_range("unknown fixture document '" + name + "'");
}

nlohmann::json maximal_contact_pair(std::int64_t d) {
    return maximal_contact_doc(d);
}

} // namespace aomoto::fixtures
