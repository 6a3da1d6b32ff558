#ifndef AOMOTO_CURVE_HPP
#define AOMOTO_CURVE_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace aomoto {

/// A local branch at a singular point, tagged with the component it
/// belongs to (index into WeakCombinatorics::components).
struct Branch {
    std::string id;
    int component = -1;
};

/// A singular point of the curve: its local branches and the pairwise
/// local intersection numbers. mu is defined exactly on pairs of branches
/// belonging to distinct components, stored on unordered index pairs
/// (first < second, indices into `branches`).
struct SingularPoint {
    std::string id;
    std::vector<Branch> branches;
    std::map<std::pair<int, int>, std::int64_t> mu;

    std::int64_t mu_at(int b1, int b2) const {
        if (b1 > b2) std::swap(b1, b2);
        auto it = mu.find({b1, b2});
        return it == mu.end() ? 0 : it->second;
    }

    /// Distinct components incident to this point, in first-appearance order.
    std::vector<int> incident_components() const;

    /// Sum of mu over the branches of component `comp` against branch `b`.
    std::int64_t branch_to_component(int b, int comp) const;
};

struct Component {
    std::string id;
    std::int64_t degree = 0;
};

/// The weak combinatorial type of a plane projective curve: components
/// with degrees, and for each singular point its branches and local
/// intersection numbers. No coordinate data.
struct WeakCombinatorics {
    std::vector<Component> components;
    std::vector<SingularPoint> points;
    nlohmann::json meta; // preserved verbatim; may be null

    int component_index(const std::string& id) const;
    int point_index(const std::string& id) const;
    std::size_t size() const { return components.size(); }
};

struct ValidationReport {
    std::vector<std::string> errors;
    std::vector<std::string> warnings;
    bool ok() const { return errors.empty(); }
};

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Parse a curve document. Structural problems (duplicate ids, unknown
/// component references, mu on a same-component pair, missing mu entries,
/// unknown keys) throw ParseError with a located diagnostic.
WeakCombinatorics parse_curve(const nlohmann::json& doc);
WeakCombinatorics parse_curve_text(const std::string& text);

/// Canonical serialization; parse(serialize(W)) == W.
nlohmann::json serialize_curve(const WeakCombinatorics& w);

/// Bezout consistency per component pair, plus a warning when
/// gcd(degrees) != 1 (the complement then has torsion).
ValidationReport validate_curve(const WeakCombinatorics& w);

/// Total intersection number of components i and j summed over all points
/// and cross branch pairs. Equals d_i * d_j on a consistent curve.
std::int64_t pairwise_degree(const WeakCombinatorics& w, int i, int j);

/// mu_P(delta, C_j): sum of mu over branches of component j at the point.
std::int64_t branch_to_component_multiplicity(const WeakCombinatorics& w,
                                              int point, int branch, int comp);

/// Ordinary point: every cross-component mu equals 1 and each component
/// contributes at most one branch.
bool is_ordinary(const SingularPoint& pt);

/// Recover degrees from pairwise intersection numbers alone (needs >= 3
/// components). Errors are reported as strings; on success returns degrees.
struct DegreeRecovery {
    std::vector<std::int64_t> degrees;
    std::vector<std::string> errors;
    bool ok() const { return errors.empty(); }
};
DegreeRecovery recover_degrees(const WeakCombinatorics& w);

/// The subcurve on a subset of components: branches of dropped components
/// disappear, mu restricts, points with no remaining branches are dropped.
WeakCombinatorics restrict_curve(const WeakCombinatorics& w,
                                 const std::vector<int>& keep);

} // namespace aomoto

#endif
