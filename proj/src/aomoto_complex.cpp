#include "aomoto/aomoto_complex.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include "aomoto/numtheory.hpp"

namespace aomoto {

OneForm make_one_form(std::int64_t p, const std::vector<std::int64_t>& ints) {
    OneForm f;
    f.p = p;
    f.coeffs.reserve(ints.size());
    for (std::int64_t x : ints) f.coeffs.push_back(mod_reduce(x, p));
    return f;
}

AomotoBasis::AomotoBasis(const WeakCombinatorics& w, std::int64_t p,
                         const std::map<int, int>& preferred_override)
    : w_(&w), p_(p) {
    if (!is_prime(static_cast<std::uint64_t>(p)))
        throw std::invalid_argument("AomotoBasis: modulus must be prime");
    preferred_.assign(w.points.size(), 0);
    for (auto [pt, br] : preferred_override) {
        if (pt < 0 || pt >= static_cast<int>(w.points.size()) || br < 0 ||
            br >= static_cast<int>(w.points[pt].branches.size()))
            throw std::invalid_argument(
                "AomotoBasis: preferred branch override out of range");
        preferred_[pt] = br;
    }

    for (std::size_t pi = 0; pi < w.points.size(); ++pi) {
        const SingularPoint& pt = w.points[pi];
        if (pt.incident_components().size() < 2) continue;
        int pref = preferred_[pi];
        for (std::size_t b = 0; b < pt.branches.size(); ++b) {
            if (static_cast<int>(b) == pref) continue;
            point_rows_.push_back({static_cast<int>(pi), static_cast<int>(b),
                                   pt.branches[b].component});
        }
    }
    for (std::size_t i = 0; i < w.components.size(); ++i)
        if (w.components[i].degree % p == 0)
            infinity_rows_.push_back(static_cast<int>(i));

    profiles_.reserve(point_rows_.size());
    for (const PointRow& row : point_rows_) {
        std::vector<std::int64_t> prof(w.components.size(), 0);
        for (std::size_t k = 0; k < w.components.size(); ++k)
            prof[k] = w.points[row.point].branch_to_component(
                row.branch, static_cast<int>(k));
        profiles_.push_back(std::move(prof));
    }
}

std::vector<std::string> AomotoBasis::row_labels() const {
    std::vector<std::string> labels;
    labels.reserve(dim2());
    for (const PointRow& row : point_rows_)
        labels.push_back(w_->points[row.point].id + ":" +
                         w_->points[row.point].branches[row.branch].id);
    for (int comp : infinity_rows_)
        labels.push_back("inf:" + w_->components[comp].id);
    return labels;
}

TwoForm wedge(const AomotoBasis& basis, const OneForm& a, const OneForm& b) {
    const WeakCombinatorics& w = basis.curve();
    const std::int64_t p = basis.p();
    if (a.coeffs.size() != w.components.size() ||
        b.coeffs.size() != w.components.size() || a.p != p || b.p != p)
        throw std::invalid_argument("wedge: dimension or modulus mismatch");

    TwoForm out;
    out.coeffs.reserve(basis.dim2());
    const auto& rows = basis.point_rows();
    for (std::size_t rix = 0; rix < rows.size(); ++rix) {
        const auto& prof = basis.branch_profile(rix);
        const int i = rows[rix].component;
        std::int64_t acc = 0;
        for (std::size_t k = 0; k < prof.size(); ++k) {
            if (prof[k] == 0) continue;
            acc = mod_reduce(
                acc + prof[k] * mod_reduce(a.coeffs[k] * b.coeffs[i] -
                                               a.coeffs[i] * b.coeffs[k], p),
                p);
        }
        out.coeffs.push_back(acc);
    }
    if (!basis.infinity_rows().empty()) {
        std::int64_t da = 0, db = 0;
        for (std::size_t k = 0; k < w.components.size(); ++k) {
            da = mod_reduce(da + w.components[k].degree * a.coeffs[k], p);
            db = mod_reduce(db + w.components[k].degree * b.coeffs[k], p);
        }
        for (int m : basis.infinity_rows())
            out.coeffs.push_back(
                mod_reduce(a.coeffs[m] * db - b.coeffs[m] * da, p));
    }
    return out;
}

FpMatrix wedge_matrix(const AomotoBasis& basis, const OneForm& omega) {
    const std::size_t r = basis.dim1();
    FpMatrix m(basis.dim2(), r, basis.p());
    for (std::size_t j = 0; j < r; ++j) {
        OneForm ej;
        ej.p = basis.p();
        ej.coeffs.assign(r, 0);
        ej.coeffs[j] = 1;
        TwoForm col = wedge(basis, omega, ej);
        for (std::size_t i = 0; i < col.coeffs.size(); ++i)
            m.set(i, j, col.coeffs[i]);
    }
    return m;
}

std::size_t h1(const AomotoBasis& basis, const OneForm& omega) {
    if (omega.is_zero()) return basis.dim1();
    return nullity(wedge_matrix(basis, omega)) - 1;
}

std::size_t h1(const WeakCombinatorics& w, std::int64_t p, const OneForm& omega) {
    return h1(AomotoBasis(w, p), omega);
}

bool resonance_membership(const WeakCombinatorics& w, std::int64_t p,
                          const OneForm& omega, std::size_t k) {
    return h1(w, p, omega) >= k;
}

std::string dump_matrix(const AomotoBasis& basis, const OneForm& omega) {
    std::ostringstream os;
    os << "# wedge matrix  p=" << basis.p() << "  omega=";
    for (std::size_t i = 0; i < omega.coeffs.size(); ++i)
        os << (i ? "," : "") << omega.coeffs[i];
    os << "\n# columns:";
    for (const Component& c : basis.curve().components) os << " s_" << c.id;
    os << "\n# rows:";
    for (const std::string& label : basis.row_labels()) os << " " << label;
    os << "\n";
    FpMatrix m = wedge_matrix(basis, omega);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c)
            os << (c ? " " : "") << m.at(r, c);
        os << "\n";
    }
    return os.str();
}

namespace {

// Rank over GF(2) with rows packed into 64-bit words; the scan calls this
// tens of thousands of times.
std::size_t rank_mod2_packed(const std::vector<std::uint64_t>& rows_in) {
    std::vector<std::uint64_t> rows = rows_in;
    std::size_t rank = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        std::uint64_t row = rows[i];
        if (row == 0) continue;
        ++rank;
        const std::uint64_t low = row & (~row + 1);
        for (std::size_t j = i + 1; j < rows.size(); ++j)
            if (rows[j] & low) rows[j] ^= row;
    }
    return rank;
}

} // namespace

ScanResult resonance_scan(const WeakCombinatorics& w, std::int64_t p,
                          std::uint64_t budget) {
    const std::size_t r = w.components.size();
    long double raw = 1;
    for (std::size_t i = 0; i < r; ++i) raw *= static_cast<long double>(p);
    if (raw > static_cast<long double>(budget))
        throw std::runtime_error("resonance_scan: p^r exceeds the scan budget");

    AomotoBasis basis(w, p);
    // wedge is bilinear: precompute wedge(sigma_t, sigma_j) once and build
    // each column of the matrix as a linear combination.
    std::vector<std::vector<TwoForm>> gen(r, std::vector<TwoForm>(r));
    for (std::size_t t = 0; t < r; ++t)
        for (std::size_t j = 0; j < r; ++j) {
            OneForm et; et.p = p; et.coeffs.assign(r, 0); et.coeffs[t] = 1;
            OneForm ej; ej.p = p; ej.coeffs.assign(r, 0); ej.coeffs[j] = 1;
            gen[t][j] = wedge(basis, et, ej);
        }

    const std::size_t n2 = basis.dim2();
    ScanResult result;
    constexpr std::size_t kZeroStratumReps = 3;

    // packed fast path: row i of the differential at omega is the xor over
    // the support of omega of precomputed per-generator bit rows
    std::vector<std::vector<std::uint64_t>> packed;
    if (p == 2 && r <= 64) {
        packed.assign(r, std::vector<std::uint64_t>(n2, 0));
        for (std::size_t t = 0; t < r; ++t)
            for (std::size_t j = 0; j < r; ++j) {
                const TwoForm& g = gen[t][j];
                for (std::size_t i = 0; i < n2; ++i)
                    if (g.coeffs[i]) packed[t][i] |= (1ull << j);
            }
    }

    std::vector<std::int64_t> omega(r, 0);
    // Canonical projective representatives: first nonzero coordinate is 1.
    for (std::size_t lead = 0; lead < r; ++lead) {
        std::vector<std::int64_t> tail(r - lead - 1, 0);
        bool done_tail = false;
        while (!done_tail) {
            std::fill(omega.begin(), omega.end(), 0);
            omega[lead] = 1;
            for (std::size_t i = 0; i < tail.size(); ++i)
                omega[lead + 1 + i] = tail[i];

            std::size_t h;
            if (p == 2 && r <= 64) {
                std::vector<std::uint64_t> rows(n2, 0);
                for (std::size_t t = 0; t < r; ++t) {
                    if (omega[t] == 0) continue;
                    const std::vector<std::uint64_t>& src = packed[t];
                    for (std::size_t i = 0; i < n2; ++i) rows[i] ^= src[i];
                }
                h = r - rank_mod2_packed(rows) - 1;
            } else {
                FpMatrix m(n2, r, p);
                for (std::size_t t = 0; t < r; ++t) {
                    if (omega[t] == 0) continue;
                    for (std::size_t j = 0; j < r; ++j) {
                        const TwoForm& g = gen[t][j];
                        for (std::size_t i = 0; i < n2; ++i)
                            if (g.coeffs[i])
                                m.set(i, j, m.at(i, j) + omega[t] * g.coeffs[i]);
                    }
                }
                h = r - matrix_rank(m) - 1;
            }

            ++result.counts[h];
            auto& reps = result.representatives[h];
            if (h > 0 || reps.size() < kZeroStratumReps) reps.push_back(omega);

            done_tail = true;
            for (std::size_t i = tail.size(); i-- > 0;) {
                if (++tail[i] < p) { done_tail = false; break; }
                tail[i] = 0;
            }
            if (tail.empty()) done_tail = true;
        }
    }
    return result;
}

OrdinaryConditions ordinary_point_conditions(const WeakCombinatorics& w,
                                             std::int64_t p, int point) {
    const SingularPoint& pt = w.points[point];
    if (!is_ordinary(pt))
        throw std::invalid_argument("ordinary_point_conditions: point '" +
                                    pt.id + "' is not ordinary");
    auto s = static_cast<std::int64_t>(pt.branches.size());
    return {s % p == 0 ? OrdinaryCase::CoefficientsSumZero
                       : OrdinaryCase::CoefficientsEqual,
            s};
}

} // namespace aomoto
