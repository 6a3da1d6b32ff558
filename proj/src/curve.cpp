#include "aomoto/curve.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace aomoto {

using nlohmann::json;

std::vector<int> SingularPoint::incident_components() const {
    std::vector<int> out;
    for (const Branch& b : branches)
        if (std::find(out.begin(), out.end(), b.component) == out.end())
            out.push_back(b.component);
    return out;
}

std::int64_t SingularPoint::branch_to_component(int b, int comp) const {
    std::int64_t s = 0;
    for (int j = 0; j < static_cast<int>(branches.size()); ++j)
        if (branches[j].component == comp) s += mu_at(b, j);
    return s;
}

int WeakCombinatorics::component_index(const std::string& id) const {
    for (std::size_t i = 0; i < components.size(); ++i)
        if (components[i].id == id) return static_cast<int>(i);
    return -1;
}

int WeakCombinatorics::point_index(const std::string& id) const {
    for (std::size_t i = 0; i < points.size(); ++i)
        if (points[i].id == id) return static_cast<int>(i);
    return -1;
}

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw ParseError(where + ": " + what);
}

void check_keys(const json& obj, const std::string& where,
                std::initializer_list<const char*> allowed) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool known = false;
        for (const char* k : allowed)
            if (it.key() == k) { known = true; break; }
        if (!known) fail(where, "unknown key '" + it.key() + "'");
    }
}

} // namespace

WeakCombinatorics parse_curve(const json& doc) {
    if (!doc.is_object()) fail("document", "expected a top-level object");
    check_keys(doc, "document", {"meta", "components", "points"});
    if (!doc.contains("components") || !doc["components"].is_array())
        fail("document", "missing 'components' list");
    if (!doc.contains("points") || !doc["points"].is_array())
        fail("document", "missing 'points' list");

    WeakCombinatorics w;
    if (doc.contains("meta")) w.meta = doc["meta"];

    std::set<std::string> comp_ids;
    for (const json& c : doc["components"]) {
        check_keys(c, "component", {"id", "degree"});
        if (!c.contains("id") || !c["id"].is_string())
            fail("component", "missing string 'id'");
        Component comp;
        comp.id = c["id"].get<std::string>();
        if (!c.contains("degree") || !c["degree"].is_number_integer())
            fail("component '" + comp.id + "'", "missing integer 'degree'");
        comp.degree = c["degree"].get<std::int64_t>();
        if (comp.degree <= 0)
            fail("component '" + comp.id + "'", "degree must be positive");
        if (!comp_ids.insert(comp.id).second)
            fail("component '" + comp.id + "'", "duplicate id");
        w.components.push_back(comp);
    }

    std::set<std::string> point_ids;
    for (const json& pj : doc["points"]) {
        check_keys(pj, "point", {"id", "branches", "mu"});
        if (!pj.contains("id") || !pj["id"].is_string())
            fail("point", "missing string 'id'");
        SingularPoint pt;
        pt.id = pj["id"].get<std::string>();
        const std::string where = "point '" + pt.id + "'";
        if (!point_ids.insert(pt.id).second) fail(where, "duplicate id");
        if (!pj.contains("branches") || !pj["branches"].is_array())
            fail(where, "missing 'branches' list");

        std::set<std::string> branch_ids;
        for (const json& bj : pj["branches"]) {
            check_keys(bj, where + " branch", {"id", "component"});
            Branch b;
            if (!bj.contains("id") || !bj["id"].is_string())
                fail(where, "branch missing string 'id'");
            b.id = bj["id"].get<std::string>();
            if (!branch_ids.insert(b.id).second)
                fail(where, "duplicate branch id '" + b.id + "'");
            if (!bj.contains("component") || !bj["component"].is_string())
                fail(where, "branch '" + b.id + "' missing 'component'");
            std::string cid = bj["component"].get<std::string>();
            b.component = -1;
            for (std::size_t i = 0; i < w.components.size(); ++i)
                if (w.components[i].id == cid) b.component = static_cast<int>(i);
            if (b.component < 0)
                fail(where, "branch '" + b.id + "' references unknown component '" +
                                cid + "'");
            pt.branches.push_back(b);
        }

        auto branch_index = [&](const std::string& id) {
            for (std::size_t i = 0; i < pt.branches.size(); ++i)
                if (pt.branches[i].id == id) return static_cast<int>(i);
            fail(where, "mu entry references unknown branch '" + id + "'");
        };

        if (!pj.contains("mu") || !pj["mu"].is_array())
            fail(where, "missing 'mu' list");
        for (const json& mj : pj["mu"]) {
            if (!mj.is_array() || mj.size() != 3 || !mj[0].is_string() ||
                !mj[1].is_string() || !mj[2].is_number_integer())
                fail(where, "mu entries must be [branchA, branchB, multiplicity]");
            int b1 = branch_index(mj[0].get<std::string>());
            int b2 = branch_index(mj[1].get<std::string>());
            std::int64_t m = mj[2].get<std::int64_t>();
            if (b1 == b2) fail(where, "mu entry on a single branch");
            if (pt.branches[b1].component == pt.branches[b2].component)
                fail(where, "mu entry on two branches of component '" +
                                w.components[pt.branches[b1].component].id + "'");
            if (m <= 0) fail(where, "mu must be positive");
            if (b1 > b2) std::swap(b1, b2);
            if (!pt.mu.emplace(std::make_pair(b1, b2), m).second)
                fail(where, "duplicate mu entry for branches '" +
                                pt.branches[b1].id + "', '" + pt.branches[b2].id + "'");
        }
        // mu must cover every cross-component branch pair: all branches pass
        // through the point, so every such pair meets with multiplicity >= 1.
        for (std::size_t i = 0; i < pt.branches.size(); ++i)
            for (std::size_t j = i + 1; j < pt.branches.size(); ++j) {
                if (pt.branches[i].component == pt.branches[j].component) continue;
                if (pt.mu.find({static_cast<int>(i), static_cast<int>(j)}) ==
                    pt.mu.end())
                    fail(where, "missing mu entry for branches '" +
                                    pt.branches[i].id + "', '" + pt.branches[j].id +
                                    "'");
            }
        w.points.push_back(std::move(pt));
    }
    return w;
}

WeakCombinatorics parse_curve_text(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed document: ") + e.what());
    }
    return parse_curve(doc);
}

json serialize_curve(const WeakCombinatorics& w) {
    json doc = json::object();
    if (!w.meta.is_null()) doc["meta"] = w.meta;
    doc["components"] = json::array();
    for (const Component& c : w.components)
        doc["components"].push_back({{"id", c.id}, {"degree", c.degree}});
    doc["points"] = json::array();
    for (const SingularPoint& pt : w.points) {
        json pj;
        pj["id"] = pt.id;
        pj["branches"] = json::array();
        for (const Branch& b : pt.branches)
            pj["branches"].push_back(
                {{"id", b.id}, {"component", w.components[b.component].id}});
        pj["mu"] = json::array();
        for (const auto& [key, m] : pt.mu)
            pj["mu"].push_back(
                {pt.branches[key.first].id, pt.branches[key.second].id, m});
        doc["points"].push_back(std::move(pj));
    }
    return doc;
}

std::int64_t pairwise_degree(const WeakCombinatorics& w, int i, int j) {
    std::int64_t total = 0;
    for (const SingularPoint& pt : w.points)
        for (const auto& [key, m] : pt.mu) {
            int c1 = pt.branches[key.first].component;
            int c2 = pt.branches[key.second].component;
            if ((c1 == i && c2 == j) || (c1 == j && c2 == i)) total += m;
        }
    return total;
}

std::int64_t branch_to_component_multiplicity(const WeakCombinatorics& w,
                                              int point, int branch, int comp) {
    return w.points[point].branch_to_component(branch, comp);
}

bool is_ordinary(const SingularPoint& pt) {
    std::set<int> seen;
    for (const Branch& b : pt.branches)
        if (!seen.insert(b.component).second) return false;
    for (const auto& [key, m] : pt.mu)
        if (m != 1) return false;
    return true;
}

ValidationReport validate_curve(const WeakCombinatorics& w) {
    ValidationReport rep;
    const int r = static_cast<int>(w.components.size());
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j) {
            std::int64_t got = pairwise_degree(w, i, j);
            std::int64_t want = w.components[i].degree * w.components[j].degree;
            if (got != want) {
                std::ostringstream os;
                os << "Bezout violation for (" << w.components[i].id << ", "
                   << w.components[j].id << "): local intersections sum to " << got
                   << ", degrees give " << want;
                rep.errors.push_back(os.str());
            }
        }
    std::int64_t g = 0;
    for (const Component& c : w.components) g = std::gcd(g, c.degree);
    if (r > 0 && g != 1) {
        std::ostringstream os;
        os << "gcd of degrees is " << g
           << " (complement homology has torsion; bounds may be off for "
              "characteristics dividing it)";
        rep.warnings.push_back(os.str());
    }
    return rep;
}

DegreeRecovery recover_degrees(const WeakCombinatorics& w) {
    DegreeRecovery out;
    const int r = static_cast<int>(w.components.size());
    if (r < 3) {
        out.errors.push_back("degree recovery needs at least 3 components");
        return out;
    }
    std::vector<std::vector<std::int64_t>> d(r, std::vector<std::int64_t>(r, 0));
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j) {
            d[i][j] = d[j][i] = pairwise_degree(w, i, j);
            if (d[i][j] <= 0) {
                out.errors.push_back("components '" + w.components[i].id + "' and '" +
                                     w.components[j].id + "' never meet");
                return out;
            }
        }
    out.degrees.assign(r, 0);
    for (int i = 0; i < r; ++i) {
        std::int64_t value = -1;
        for (int j = 0; j < r && out.ok(); ++j) {
            if (j == i) continue;
            for (int k = j + 1; k < r; ++k) {
                if (k == i) continue;
                std::int64_t num = d[i][j] * d[i][k];
                if (num % d[j][k] != 0) {
                    out.errors.push_back("non-realizable intersection data at triple (" +
                                         w.components[i].id + ", " + w.components[j].id +
                                         ", " + w.components[k].id + ")");
                    return out;
                }
                std::int64_t sq = num / d[j][k];
                auto root = static_cast<std::int64_t>(std::llround(std::sqrt(
                    static_cast<double>(sq))));
                while (root * root > sq) --root;
                while ((root + 1) * (root + 1) <= sq) ++root;
                if (root * root != sq) {
                    out.errors.push_back("non-integral degree for component '" +
                                         w.components[i].id + "'");
                    return out;
                }
                if (value == -1) value = root;
                else if (value != root) {
                    out.errors.push_back("inconsistent triples for component '" +
                                         w.components[i].id + "'");
                    return out;
                }
            }
        }
        out.degrees[i] = value;
    }
    return out;
}

WeakCombinatorics restrict_curve(const WeakCombinatorics& w,
                                 const std::vector<int>& keep) {
    WeakCombinatorics out;
    out.meta = w.meta;
    std::vector<int> remap(w.components.size(), -1);
    for (int idx : keep) {
        remap[idx] = static_cast<int>(out.components.size());
        out.components.push_back(w.components[idx]);
    }
    for (const SingularPoint& pt : w.points) {
        SingularPoint np;
        np.id = pt.id;
        std::vector<int> bmap(pt.branches.size(), -1);
        for (std::size_t b = 0; b < pt.branches.size(); ++b) {
            int nc = remap[pt.branches[b].component];
            if (nc < 0) continue;
            bmap[b] = static_cast<int>(np.branches.size());
            np.branches.push_back({pt.branches[b].id, nc});
        }
        if (np.branches.empty()) continue;
        for (const auto& [key, m] : pt.mu) {
            int b1 = bmap[key.first], b2 = bmap[key.second];
            if (b1 < 0 || b2 < 0) continue;
            if (b1 > b2) std::swap(b1, b2);
            np.mu.emplace(std::make_pair(b1, b2), m);
        }
        out.points.push_back(std::move(np));
    }
    return out;
}

} // namespace aomoto
