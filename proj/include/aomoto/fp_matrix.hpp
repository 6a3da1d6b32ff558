#ifndef AOMOTO_FP_MATRIX_HPP
#define AOMOTO_FP_MATRIX_HPP

#include <cassert>
#include <cstdint>
#include <vector>

#include "aomoto/fp.hpp"

namespace aomoto {

/// Dense row-major matrix over GF(p). Entries are stored as residues in
/// [0, p). Elimination is deterministic (first nonzero pivot, no pivoting
/// heuristics) so nullspace bases are reproducible.
class FpMatrix {
public:
    FpMatrix(std::size_t rows, std::size_t cols, std::int64_t p)
        : rows_(rows), cols_(cols), p_(p), a_(rows * cols, 0) {
        assert(p >= 2);
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::int64_t modulus() const { return p_; }

    std::int64_t& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    std::int64_t at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    void set(std::size_t r, std::size_t c, std::int64_t v) {
        at(r, c) = mod_reduce(v, p_);
    }
    void set(std::size_t r, std::size_t c, Fp v) {
        assert(v.modulus() == p_ && "mixed moduli");
        at(r, c) = v.value();
    }

    bool operator==(const FpMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && p_ == o.p_ && a_ == o.a_;
    }

    /// Reduced row echelon form; returns pivot column per pivot row.
    std::vector<std::size_t> rref() {
        std::vector<std::size_t> pivots;
        std::size_t row = 0;
        for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
            std::size_t sel = row;
            while (sel < rows_ && at(sel, col) == 0) ++sel;
            if (sel == rows_) continue;
            if (sel != row)
                for (std::size_t c = 0; c < cols_; ++c)
                    std::swap(at(sel, c), at(row, c));
            std::int64_t inv = Fp(at(row, col), p_).inverse().value();
            for (std::size_t c = col; c < cols_; ++c)
                at(row, c) = mod_reduce(at(row, c) * inv, p_);
            for (std::size_t r = 0; r < rows_; ++r) {
                if (r == row || at(r, col) == 0) continue;
                std::int64_t f = at(r, col);
                for (std::size_t c = col; c < cols_; ++c)
                    at(r, c) = mod_reduce(at(r, c) - f * at(row, c), p_);
            }
            pivots.push_back(col);
            ++row;
        }
        return pivots;
    }

private:
    std::size_t rows_, cols_;
    std::int64_t p_;
    std::vector<std::int64_t> a_;
};

inline std::size_t matrix_rank(FpMatrix m) { return m.rref().size(); }

inline std::size_t nullity(const FpMatrix& m) {
    return m.cols() - matrix_rank(m);
}

/// Echelonized kernel basis of {v : M v = 0}, one vector per free column,
/// ordered by free-column position.
inline std::vector<std::vector<std::int64_t>> nullspace_basis(FpMatrix m) {
    const std::int64_t p = m.modulus();
    const std::size_t n = m.cols();
    std::vector<std::size_t> pivots = m.rref();
    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : pivots) is_pivot[c] = true;

    std::vector<std::vector<std::int64_t>> basis;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        std::vector<std::int64_t> v(n, 0);
        v[f] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = mod_reduce(-m.at(r, f), p);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// M v mod p.
inline std::vector<std::int64_t> mat_vec(const FpMatrix& m,
                                       const std::vector<std::int64_t>& v) {
    assert(v.size() == m.cols());
    std::vector<std::int64_t> out(m.rows(), 0);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        std::int64_t s = 0;
        for (std::size_t c = 0; c < m.cols(); ++c)
            s = mod_reduce(s + m.at(r, c) * v[c], m.modulus());
        out[r] = s;
    }
    return out;
}

} // namespace aomoto

#endif
