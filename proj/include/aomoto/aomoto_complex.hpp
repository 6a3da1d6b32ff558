#ifndef AOMOTO_AOMOTO_COMPLEX_HPP
#define AOMOTO_AOMOTO_COMPLEX_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "aomoto/curve.hpp"
#include "aomoto/fp_matrix.hpp"

namespace aomoto {

/// A degree-one element, written on the component basis: coefficients in
/// GF(p), one per component.
struct OneForm {
    std::int64_t p = 0;
    std::vector<std::int64_t> coeffs; // residues in [0, p)

    bool is_zero() const {
        for (auto c : coeffs) if (c != 0) return false;
        return true;
    }
    bool is_coordinate_free() const { // nonzero in every coordinate
        for (auto c : coeffs) if (c == 0) return false;
        return true;
    }
};

OneForm make_one_form(std::int64_t p, const std::vector<std::int64_t>& ints);

/// Ordered basis of the degree-two part over GF(p).
///
/// Point rows: for every singular point incident to at least two distinct
/// components, one row per non-preferred branch (the preferred branch's
/// form is zero by convention). Points with all branches on one component
/// contribute nothing. Infinity rows: one per component whose degree is
/// divisible by p, in component order.
///
/// Row order: points in input order, branches in input order, then the
/// infinity rows. This ordering is part of the matrix dump format.
class AomotoBasis {
public:
    struct PointRow {
        int point;
        int branch;
        int component; // component of the branch
    };

    AomotoBasis(const WeakCombinatorics& w, std::int64_t p,
                const std::map<int, int>& preferred_override = {});

    const WeakCombinatorics& curve() const { return *w_; }
    std::int64_t p() const { return p_; }
    std::size_t dim1() const { return w_->components.size(); }
    std::size_t dim2() const { return point_rows_.size() + infinity_rows_.size(); }
    const std::vector<PointRow>& point_rows() const { return point_rows_; }
    const std::vector<int>& infinity_rows() const { return infinity_rows_; }
    int preferred_branch(int point) const { return preferred_[point]; }

    /// mu_P(delta, C_k) for the row's branch against every component.
    const std::vector<std::int64_t>& branch_profile(std::size_t row) const {
        return profiles_[row];
    }

    std::vector<std::string> row_labels() const;

private:
    const WeakCombinatorics* w_;
    std::int64_t p_;
    std::vector<PointRow> point_rows_;
    std::vector<int> infinity_rows_;
    std::vector<int> preferred_;
    std::vector<std::vector<std::int64_t>> profiles_;
};

/// TwoForm: coefficients over an AomotoBasis, point part then infinity part.
struct TwoForm {
    std::vector<std::int64_t> coeffs;
    bool is_zero() const {
        for (auto c : coeffs) if (c != 0) return false;
        return true;
    }
};

/// Wedge product of two degree-one elements, written on the basis. The
/// coefficient on a point row with branch delta of component i is
///   sum_k mu_P(delta, C_k) (a_k b_i - a_i b_k),
/// and on the infinity row of component m it is
///   a_m (sum_k d_k b_k) - b_m (sum_k d_k a_k),
/// the bilinear extension of the product on generators.
TwoForm wedge(const AomotoBasis& basis, const OneForm& a, const OneForm& b);

/// Matrix of the complex differential determined by omega: column j is
/// wedge(omega, sigma_j). Rank and kernel are what downstream consumers
/// use; the explicit entries are pinned by the dump format.
FpMatrix wedge_matrix(const AomotoBasis& basis, const OneForm& omega);

/// dim H^1 of the complex at omega: nullity of the differential minus the
/// image of degree zero (1 when omega != 0). For omega == 0 this is r.
std::size_t h1(const AomotoBasis& basis, const OneForm& omega);

/// Convenience entry points that build the basis on the fly.
std::size_t h1(const WeakCombinatorics& w, std::int64_t p, const OneForm& omega);
bool resonance_membership(const WeakCombinatorics& w, std::int64_t p,
                          const OneForm& omega, std::size_t k);

/// Text dump of a wedge matrix: header lines with basis labels, then one
/// row per line with residues. Bit-exact across platforms.
std::string dump_matrix(const AomotoBasis& basis, const OneForm& omega);

/// Stratification of projective classes of nonzero one-forms by h^1.
struct ScanResult {
    std::map<std::size_t, std::uint64_t> counts; // h1 value -> #classes
    // Representatives per h1 value; strata with h1 >= 1 are kept in full,
    // the h1 == 0 stratum keeps at most a handful.
    std::map<std::size_t, std::vector<std::vector<std::int64_t>>> representatives;
};

/// Enumerates all omega in GF(p)^r up to nonzero scalar (first nonzero
/// coordinate normalized to 1) and computes h^1 for each. The raw count
/// p^r must stay within `budget` (default 2^20, CLI overrides via
/// AOMOTO_SCAN_BUDGET).
ScanResult resonance_scan(const WeakCombinatorics& w, std::int64_t p,
                          std::uint64_t budget = (1u << 20));

enum class OrdinaryCase { CoefficientsEqual, CoefficientsSumZero };

struct OrdinaryConditions {
    OrdinaryCase kind;
    std::int64_t multiplicity; // number of branches s
};

/// For an ordinary point and the all-ones form: kernel coefficients at the
/// point are all equal when s is a unit mod p, and sum to zero when p | s.
OrdinaryConditions ordinary_point_conditions(const WeakCombinatorics& w,
                                             std::int64_t p, int point);

} // namespace aomoto

#endif
