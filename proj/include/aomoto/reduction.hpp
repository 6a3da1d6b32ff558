#ifndef AOMOTO_REDUCTION_HPP
#define AOMOTO_REDUCTION_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "aomoto/aomoto_complex.hpp"
#include "aomoto/curve.hpp"

namespace aomoto {

/// Union-find partition of the component set, with a replayable trace of
/// the merges that produced it.
class Partition {
public:
    explicit Partition(std::size_t n) : parent_(n) {
        for (std::size_t i = 0; i < n; ++i) parent_[i] = static_cast<int>(i);
    }
    int find(int i) const {
        while (parent_[i] != i) i = parent_[i];
        return i;
    }
    void merge(int i, int j) { parent_[find(i)] = find(j); }
    std::size_t class_count() const {
        std::size_t n = 0;
        for (std::size_t i = 0; i < parent_.size(); ++i)
            if (find(static_cast<int>(i)) == static_cast<int>(i)) ++n;
        return n;
    }
    std::size_t size() const { return parent_.size(); }
    /// Canonical key: class labels in order of first appearance.
    std::vector<int> canonical() const;

private:
    std::vector<int> parent_;
};

struct MergeStep {
    int point;           // index into W.points
    int class_a;         // component indices representing the merged classes
    int class_b;
    int witness_branch;  // branch index at the point
    std::int64_t weighted_sum; // the unit value that enabled the merge
};

struct Witness {
    int point;
    int comp_i;
    int comp_j;
    int branch; // branch on the i side with mu(branch, C_j) a unit
};

/// All p-transversal points: exactly two incident components and some
/// branch-to-component multiplicity a unit mod p (both orientations).
std::vector<Witness> p_transversal_points(const WeakCombinatorics& w,
                                          std::int64_t p);

struct TransversalityGraph {
    std::size_t vertices = 0;
    // edge (i, j) with the points witnessing it
    std::vector<std::pair<std::pair<int, int>, std::vector<int>>> edges;
    bool has_edge(int i, int j) const;
    bool is_complete() const;
    bool is_connected() const;
};

TransversalityGraph transversality_graph(const WeakCombinatorics& w,
                                         std::int64_t p);

/// Merges currently enabled at partition pi for the form alpha: points
/// whose incident components fall in exactly two classes, with the
/// class-weighted multiplicity sum a unit for some branch on either side.
std::vector<MergeStep> reduction_step(const WeakCombinatorics& w,
                                      const OneForm& alpha,
                                      const Partition& pi);

enum class ReductionStrategy { Greedy, Exhaustive };

struct ReductionResult {
    bool reduced = false;
    std::vector<MergeStep> trace;      // successful merge order when reduced
    std::size_t classes_remaining = 0; // on failure, best (fewest) reached
    ReductionStrategy strategy = ReductionStrategy::Exhaustive;
};

/// Drives reduction_step to a fixpoint. Greedy applies the first enabled
/// merge each round; exhaustive backtracks over merge orders with
/// visited-partition memoization, succeeding iff some order reaches one
/// class. Merge order confluence is not established, so exhaustive is the
/// default everywhere correctness matters.
ReductionResult completely_p_reductive(
    const WeakCombinatorics& w, const OneForm& alpha,
    ReductionStrategy strategy = ReductionStrategy::Exhaustive);

struct Elimination {
    WeakCombinatorics curve;
    OneForm alpha;
    std::vector<int> removed;       // original component indices
    std::vector<int> kept;          // original component indices
    bool zero_form_warning = false; // alpha == 0: nothing can be removed
};

/// Removes components with zero coefficient when a side condition forces
/// every kernel partner to vanish there: either sum_k d_k alpha_k is a
/// unit, or some branch of the component has sum_k mu_P(delta,C_k) alpha_k
/// a unit. h^1 is unchanged by each removal.
Elimination coordinate_elimination(const WeakCombinatorics& w,
                                   const OneForm& alpha);

struct TrivialityCertificate {
    std::vector<int> removed_components; // dropped by coordinate elimination
    ReductionResult reduction;           // the successful merge trace
    nlohmann::json document;             // serialized, human-readable
};

/// If the curve (after coordinate elimination) is completely p-reductive
/// w.r.t. alpha, certifies h^1 = 0, hence vanishing multiplicity for every
/// prime-power order p^s. Absence of a certificate proves nothing.
std::optional<TrivialityCertificate> triviality_certificate(
    const WeakCombinatorics& w, const OneForm& alpha,
    ReductionStrategy strategy = ReductionStrategy::Exhaustive);

nlohmann::json serialize_trace(const WeakCombinatorics& w,
                               const std::vector<MergeStep>& trace);

} // namespace aomoto

#endif
