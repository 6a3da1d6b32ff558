#ifndef AOMOTO_PENCIL_HPP
#define AOMOTO_PENCIL_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "aomoto/aomoto_complex.hpp"
#include "aomoto/curve.hpp"
#include "aomoto/reduction.hpp"

namespace aomoto {

/// One member of the pencil as it meets the curve: curve components with
/// multiplicities, plus a residual factor (multiplicity m, degree) that is
/// not part of the curve. m == 0 iff the residual is constant.
struct Fiber {
    std::vector<std::pair<int, std::int64_t>> components; // (component, m_ij)
    std::int64_t residual_m = 0;
    std::int64_t residual_degree = 0;
};

/// Quasi fiber-type structure: the curve's components partitioned into r
/// aligned degree-d members of a primitive pencil, with index k when the
/// pencil has an extra k-fold member outside the chosen fibers.
struct QuasiFiberStructure {
    std::int64_t degree = 0; // common degree d of the members
    std::int64_t index = 1;  // k = m_0
    std::vector<Fiber> fibers;
    std::vector<int> base_points;            // indices into W.points
    std::map<int, std::int64_t> twists;      // component -> nu (optional)
    nlohmann::json meta;

    int fiber_of_component(int comp) const;
    std::size_t fiber_count() const { return fibers.size(); }
};

QuasiFiberStructure parse_pencil(const WeakCombinatorics& w,
                                 const nlohmann::json& doc);
QuasiFiberStructure parse_pencil_text(const WeakCombinatorics& w,
                                      const std::string& text);
nlohmann::json serialize_pencil(const WeakCombinatorics& w,
                                const QuasiFiberStructure& q);

/// mu_delta per (base point, branch): the common intersection multiplicity
/// of the branch with every other member. Computed combinatorially, with
/// residual factors absorbing slack in multiples of their multiplicity.
struct BasePointProfile {
    std::map<std::pair<int, int>, std::int64_t> mu_delta; // (point, branch)
};

struct StructureReport {
    ValidationReport validation;
    BasePointProfile profile;
    bool ok() const { return validation.ok(); }
};

/// Checks fibers partition the components, per-fiber degree bookkeeping,
/// the index divisibility rule, base/non-base classification against the
/// declared list, and the constancy of mu_delta at base points.
StructureReport validate_structure(const WeakCombinatorics& w,
                                   const QuasiFiberStructure& q);

/// The one-form sum_{i,j} m_ij alpha_i sigma_ij for per-fiber coefficients
/// alpha. alpha = all ones gives the canonical form of the structure.
OneForm associated_one_form(const WeakCombinatorics& w,
                            const QuasiFiberStructure& q,
                            const std::vector<std::int64_t>& alpha,
                            std::int64_t p);

struct FiberedBound {
    std::size_t bound = 0;       // 0 means no information
    std::string reason;          // which clause fired, or why none applies
    bool hypothesis_failed = false;
};

/// Resonance depth from the fibered structure: r-1 when p divides the
/// index, else r-2 when the alpha coefficients sum to zero. Requires every
/// residual multiplicity to vanish mod p.
FiberedBound fibered_lower_bound(const WeakCombinatorics& w,
                                 const QuasiFiberStructure& q,
                                 const std::vector<std::int64_t>& alpha,
                                 std::int64_t p);

struct ExactH1 {
    std::optional<std::size_t> value;
    std::string case_tag;
};

/// Exact h^1 for index-p structures: for associated forms with coefficient
/// sum zero the value is r-1 or r-2 according to whether every mu_delta
/// vanishes mod p; for the canonical form of an index-p structure the
/// kernel is exactly the associated family and h^1 = r-1. Every hypothesis
/// (residuals zero mod p, fibers completely p-reductive w.r.t. their
/// restricted forms) is verified; any failure yields no claim.
ExactH1 exact_h1_index_p(const WeakCombinatorics& w,
                         const QuasiFiberStructure& q,
                         const std::vector<std::int64_t>& alpha,
                         std::int64_t p);

struct RootsBound {
    std::int64_t order = 0; // N
    std::size_t bound = 0;  // lower bound for b_N, clamped at 0
};

struct RootsResult {
    std::vector<RootsBound> bounds; // ascending order, N > 1 only
    std::vector<std::string> errors;
    bool ok() const { return errors.empty(); }
};

/// Lower bounds for twisted Alexander multiplicities from the pencil: for
/// every N > 1 dividing gcd_i(q (p_i/q_i) m_i), emits b_N >= l_N + r_0 - 2
/// where l_N counts fibers with residual whose scaled ratio is nonzero mod
/// N and r_0 counts residual-free members. nu is given per component.
RootsResult roots_lower_bounds(const WeakCombinatorics& w,
                               const QuasiFiberStructure& q,
                               const std::map<int, std::int64_t>& nu);

struct MultiplicityCertificate {
    std::int64_t p = 0;
    std::size_t value = 0;
    std::vector<std::int64_t> twist; // per component
    std::string route;               // which argument certified it
};

/// Exact b_p = r-2 for reduced-index fiber-type curves with p | r, twist
/// equal to the fiber multiplicities. All hypotheses verified.
std::optional<MultiplicityCertificate> exact_multiplicity_reduced(
    const WeakCombinatorics& w, const QuasiFiberStructure& q, std::int64_t p);

/// Exact b_p = r-1 when one fiber is a k-fold multiple member and
/// p | 1 + k r, twist nu scaling that fiber down by k.
std::optional<MultiplicityCertificate> exact_multiplicity_nonreduced(
    const WeakCombinatorics& w, const QuasiFiberStructure& q, std::int64_t p);

} // namespace aomoto

#endif
