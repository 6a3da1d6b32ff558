#ifndef AOMOTO_REPORT_HPP
#define AOMOTO_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "aomoto/curve.hpp"
#include "aomoto/pencil.hpp"

namespace aomoto {

/// Twist weights per component; all ones is the classical case. The total
/// degree sum d_i m_i determines which cyclotomic orders can occur.
struct TwistSpecification {
    std::vector<std::int64_t> weights;
    std::int64_t total_degree(const WeakCombinatorics& w) const;
};

TwistSpecification classical_twist(const WeakCombinatorics& w);

/// Per-order multiplicity bound. upper is present only for prime-power
/// orders (that is where the modular inequality applies).
struct MultiplicityBound {
    std::int64_t order = 0;
    std::size_t lower = 0;
    std::optional<std::size_t> upper;
    bool exact = false;
    std::vector<std::string> provenance;
    std::optional<std::int64_t> external; // annotated known value, never used
};

/// All divisors N > 1 of the twisted total degree.
std::vector<std::int64_t> candidate_orders(const WeakCombinatorics& w,
                                           const TwistSpecification& twist);

/// h^1 of the complex at the twist form reduced mod p, for N = p^s. The
/// value depends only on p. Returns nothing for non-prime-power orders.
std::optional<std::size_t> upper_bound(const WeakCombinatorics& w,
                                       const TwistSpecification& twist,
                                       std::int64_t order);

struct Report {
    std::vector<MultiplicityBound> bounds;
    std::size_t eigenvalue_one_multiplicity = 0; // background (t-1) exponent
    std::vector<std::string> notes;
};

/// Assembles upper bounds (modular inequality), lower bounds (best pencil
/// route per order), exactness flags, and certificates into one table.
Report assemble_report(const WeakCombinatorics& w,
                       const TwistSpecification& twist,
                       const std::vector<QuasiFiberStructure>& pencils);

std::string render_text(const WeakCombinatorics& w, const Report& report);
nlohmann::json render_structured(const WeakCombinatorics& w,
                                 const Report& report);

} // namespace aomoto

#endif
