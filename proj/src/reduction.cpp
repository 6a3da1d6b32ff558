#include "aomoto/reduction.hpp"

#include <algorithm>
#include <set>

namespace aomoto {

std::vector<int> Partition::canonical() const {
    std::vector<int> label(parent_.size(), -1);
    std::vector<int> out(parent_.size());
    int next = 0;
    for (std::size_t i = 0; i < parent_.size(); ++i) {
        int root = find(static_cast<int>(i));
        if (label[root] < 0) label[root] = next++;
        out[i] = label[root];
    }
    return out;
}

std::vector<Witness> p_transversal_points(const WeakCombinatorics& w,
                                          std::int64_t p) {
    std::vector<Witness> out;
    for (std::size_t pi = 0; pi < w.points.size(); ++pi) {
        const SingularPoint& pt = w.points[pi];
        std::vector<int> comps = pt.incident_components();
        if (comps.size() != 2) continue;
        for (std::size_t b = 0; b < pt.branches.size(); ++b) {
            int i = pt.branches[b].component;
            int j = comps[0] == i ? comps[1] : comps[0];
            if (pt.branch_to_component(static_cast<int>(b), j) % p != 0)
                out.push_back({static_cast<int>(pi), i, j, static_cast<int>(b)});
        }
    }
    return out;
}

bool TransversalityGraph::has_edge(int i, int j) const {
    if (i > j) std::swap(i, j);
    for (const auto& e : edges)
        if (e.first == std::make_pair(i, j)) return true;
    return false;
}

bool TransversalityGraph::is_complete() const {
    std::size_t want = vertices * (vertices - 1) / 2;
    return edges.size() == want;
}

bool TransversalityGraph::is_connected() const {
    if (vertices == 0) return true;
    std::vector<int> seen(vertices, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (const auto& e : edges) {
            int other = -1;
            if (e.first.first == v) other = e.first.second;
            else if (e.first.second == v) other = e.first.first;
            if (other >= 0 && !seen[other]) {
                seen[other] = 1;
                stack.push_back(other);
            }
        }
    }
    return std::all_of(seen.begin(), seen.end(), [](int s) { return s == 1; });
}

TransversalityGraph transversality_graph(const WeakCombinatorics& w,
                                         std::int64_t p) {
    TransversalityGraph g;
    g.vertices = w.components.size();
    std::map<std::pair<int, int>, std::vector<int>> acc;
    for (const Witness& wit : p_transversal_points(w, p)) {
        int i = wit.comp_i, j = wit.comp_j;
        if (i > j) std::swap(i, j);
        auto& pts = acc[{i, j}];
        if (pts.empty() || pts.back() != wit.point) pts.push_back(wit.point);
    }
    for (auto& [edge, pts] : acc) g.edges.push_back({edge, std::move(pts)});
    return g;
}

std::vector<MergeStep> reduction_step(const WeakCombinatorics& w,
                                      const OneForm& alpha,
                                      const Partition& pi) {
    const std::int64_t p = alpha.p;
    std::vector<MergeStep> out;
    for (std::size_t pt_ix = 0; pt_ix < w.points.size(); ++pt_ix) {
        const SingularPoint& pt = w.points[pt_ix];
        std::set<int> classes;
        for (const Branch& b : pt.branches) classes.insert(pi.find(b.component));
        if (classes.size() != 2) continue;
        auto it = classes.begin();
        int c1 = *it++;
        int c2 = *it;
        for (std::size_t b = 0; b < pt.branches.size(); ++b) {
            int side = pi.find(pt.branches[b].component);
            int other = side == c1 ? c2 : c1;
            // weighted multiplicity of the branch against the other class
            std::int64_t sum = 0;
            for (std::size_t k = 0; k < w.components.size(); ++k) {
                if (pi.find(static_cast<int>(k)) != other) continue;
                sum = mod_reduce(sum + pt.branch_to_component(
                                           static_cast<int>(b),
                                           static_cast<int>(k)) *
                                           alpha.coeffs[k],
                                 p);
            }
            if (sum != 0)
                out.push_back({static_cast<int>(pt_ix), side, other,
                               static_cast<int>(b), sum});
        }
    }
    return out;
}

namespace {

bool exhaustive_search(const WeakCombinatorics& w, const OneForm& alpha,
                       Partition pi, std::set<std::vector<int>>& visited,
                       std::vector<MergeStep>& trace,
                       std::size_t& best_classes) {
    best_classes = std::min(best_classes, pi.class_count());
    if (pi.class_count() == 1) return true;
    if (!visited.insert(pi.canonical()).second) return false;
    for (const MergeStep& step : reduction_step(w, alpha, pi)) {
        Partition next = pi;
        next.merge(step.class_a, step.class_b);
        trace.push_back(step);
        if (exhaustive_search(w, alpha, next, visited, trace, best_classes))
            return true;
        trace.pop_back();
    }
    return false;
}

} // namespace

ReductionResult completely_p_reductive(const WeakCombinatorics& w,
                                       const OneForm& alpha,
                                       ReductionStrategy strategy) {
    ReductionResult res;
    res.strategy = strategy;
    Partition pi(w.components.size());
    if (strategy == ReductionStrategy::Greedy) {
        for (;;) {
            auto steps = reduction_step(w, alpha, pi);
            if (steps.empty()) break;
            pi.merge(steps.front().class_a, steps.front().class_b);
            res.trace.push_back(steps.front());
        }
        res.classes_remaining = pi.class_count();
        res.reduced = res.classes_remaining == 1;
        return res;
    }
    std::set<std::vector<int>> visited;
    std::size_t best = pi.class_count();
    res.reduced = exhaustive_search(w, alpha, pi, visited, res.trace, best);
    res.classes_remaining = res.reduced ? 1 : best;
    if (!res.reduced) res.trace.clear();
    return res;
}

Elimination coordinate_elimination(const WeakCombinatorics& w,
                                   const OneForm& alpha) {
    const std::int64_t p = alpha.p;
    Elimination out;
    if (alpha.is_zero()) {
        out.curve = w;
        out.alpha = alpha;
        out.zero_form_warning = true;
        for (std::size_t i = 0; i < w.components.size(); ++i)
            out.kept.push_back(static_cast<int>(i));
        return out;
    }

    std::int64_t degree_sum = 0;
    for (std::size_t k = 0; k < w.components.size(); ++k)
        degree_sum = mod_reduce(
            degree_sum + w.components[k].degree * alpha.coeffs[k], p);

    std::vector<bool> removed(w.components.size(), false);
    for (std::size_t i = 0; i < w.components.size(); ++i) {
        if (alpha.coeffs[i] != 0) continue;
        bool justified = degree_sum != 0;
        if (!justified) {
            // some branch of component i with a unit weighted multiplicity
            for (const SingularPoint& pt : w.points) {
                for (std::size_t b = 0; b < pt.branches.size() && !justified; ++b) {
                    if (pt.branches[b].component != static_cast<int>(i)) continue;
                    std::int64_t sum = 0;
                    for (std::size_t k = 0; k < w.components.size(); ++k)
                        sum = mod_reduce(
                            sum + pt.branch_to_component(static_cast<int>(b),
                                                         static_cast<int>(k)) *
                                      alpha.coeffs[k],
                            p);
                    if (sum != 0) justified = true;
                }
                if (justified) break;
            }
        }
        if (justified) removed[i] = true;
    }

    for (std::size_t i = 0; i < w.components.size(); ++i)
        (removed[i] ? out.removed : out.kept).push_back(static_cast<int>(i));
    out.curve = restrict_curve(w, out.kept);
    out.alpha.p = p;
    for (int i : out.kept) out.alpha.coeffs.push_back(alpha.coeffs[i]);
    return out;
}

nlohmann::json serialize_trace(const WeakCombinatorics& w,
                               const std::vector<MergeStep>& trace) {
    nlohmann::json arr = nlohmann::json::array();
    for (const MergeStep& s : trace) {
        const SingularPoint& pt = w.points[s.point];
        arr.push_back({{"point", pt.id},
                       {"classes", {w.components[s.class_a].id,
                                    w.components[s.class_b].id}},
                       {"witness_branch", pt.branches[s.witness_branch].id},
                       {"weighted_sum", s.weighted_sum}});
    }
    return arr;
}

std::optional<TrivialityCertificate> triviality_certificate(
    const WeakCombinatorics& w, const OneForm& alpha,
    ReductionStrategy strategy) {
    if (alpha.is_zero()) return std::nullopt;
    Elimination elim = coordinate_elimination(w, alpha);
    if (!elim.alpha.is_coordinate_free()) return std::nullopt;
    ReductionResult red = completely_p_reductive(elim.curve, elim.alpha, strategy);
    if (!red.reduced) return std::nullopt;

    TrivialityCertificate cert;
    cert.removed_components = elim.removed;
    cert.reduction = red;
    nlohmann::json doc;
    doc["p"] = alpha.p;
    doc["removed_components"] = nlohmann::json::array();
    for (int i : elim.removed)
        doc["removed_components"].push_back(w.components[i].id);
    doc["trace"] = serialize_trace(elim.curve, red.trace);
    doc["conclusion"] =
        "h1 = 0; multiplicity 0 for every cyclotomic order p^s";
    cert.document = std::move(doc);
    return cert;
}

} // namespace aomoto
