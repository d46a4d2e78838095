// Test-only oracles, kept independent of the implementation paths they check:
// rank by minor enumeration, strand bases by exhaustive search, Hilbert
// functions by direct counting.
#pragma once

#include <random>

#include "multigrad/koszul.hpp"

namespace multigrad::oracle {

// Determinant by cofactor expansion; only for tiny matrices.
inline Scalar naive_det(const DenseMatrix& a) {
    const Field& f = a.field();
    if (a.rows() != a.cols()) throw std::invalid_argument("naive_det: square only");
    const std::size_t n = a.rows();
    if (n == 0) return f.one();
    if (n == 1) return a.at(0, 0);
    Scalar det = f.zero();
    for (std::size_t c = 0; c < n; ++c) {
        DenseMatrix minor(f, n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            std::size_t cc = 0;
            for (std::size_t k = 0; k < n; ++k) {
                if (k == c) continue;
                minor.at(r - 1, cc++) = a.at(r, k);
            }
        }
        Scalar term = f.mul(a.at(0, c), naive_det(minor));
        det = c % 2 ? f.sub(det, term) : f.add(det, term);
    }
    return det;
}

// rank = size of the largest square submatrix with nonzero determinant
inline std::size_t naive_rank(const DenseMatrix& a) {
    const Field& f = a.field();
    const std::size_t m = a.rows(), n = a.cols();
    for (std::size_t k = std::min(m, n); k >= 1; --k) {
        for (std::uint32_t rs = 0; rs < (1u << m); ++rs) {
            if (static_cast<std::size_t>(__builtin_popcount(rs)) != k) continue;
            for (std::uint32_t cs = 0; cs < (1u << n); ++cs) {
                if (static_cast<std::size_t>(__builtin_popcount(cs)) != k) continue;
                DenseMatrix sub(f, k, k);
                std::size_t ri = 0;
                for (std::size_t r = 0; r < m; ++r) {
                    if (!((rs >> r) & 1)) continue;
                    std::size_t ci = 0;
                    for (std::size_t c = 0; c < n; ++c) {
                        if (!((cs >> c) & 1)) continue;
                        sub.at(ri, ci++) = a.at(r, c);
                    }
                    ++ri;
                }
                if (!f.is_zero(naive_det(sub))) return k;
            }
        }
    }
    return 0;
}

// Strand basis by exhaustive enumeration: every (G, j, m) with G inside F,
// epsilon_G + a_j + deg(m) = a, m outside I_j.
inline std::vector<std::tuple<std::uint32_t, std::size_t, Multidegree>> brute_strand_basis(
    const ModulePresentation& mod, VarSet f, const Multidegree& a, int i) {
    std::vector<std::tuple<std::uint32_t, std::size_t, Multidegree>> out;
    for (std::uint32_t g = 0; g < (1u << mod.vars()); ++g) {
        VarSet gs(g);
        if ((g & ~f.mask()) != 0 || static_cast<int>(gs.size()) != i) continue;
        for (std::size_t j = 0; j < mod.summands().size(); ++j) {
            Multidegree m = a - mod.summands()[j].shift;
            for (std::size_t v : gs.elements()) m[v] -= 1;
            if (!m.is_nonnegative()) continue;
            if (mod.summands()[j].ideal.contains(Monomial(m))) continue;
            out.emplace_back(g, j, m);
        }
    }
    return out;
}

inline DenseMatrix random_matrix(std::mt19937_64& eng, const Field& f, std::size_t rows,
                                 std::size_t cols, int span = 5) {
    DenseMatrix a(f, rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            a.at(r, c) = f.from_int(static_cast<long long>(eng() % (2 * span + 1)) - span);
    return a;
}

inline MonomialIdeal random_ideal(std::mt19937_64& eng, std::size_t n, int max_gens,
                                  int max_exp) {
    const std::size_t g = 1 + eng() % static_cast<std::size_t>(max_gens);
    std::vector<Monomial> gens;
    while (gens.size() < g) {
        Multidegree e(n);
        bool nonzero = false;
        for (std::size_t k = 0; k < n; ++k) {
            e[k] = static_cast<int>(eng() % static_cast<std::size_t>(max_exp + 1));
            nonzero = nonzero || e[k] != 0;
        }
        if (nonzero) gens.push_back(Monomial(e));
    }
    return MonomialIdeal::minimalize(n, std::move(gens));
}

inline Multidegree random_degree(std::mt19937_64& eng, std::size_t n, int hi) {
    Multidegree a(n);
    for (std::size_t k = 0; k < n; ++k)
        a[k] = static_cast<int>(eng() % static_cast<std::size_t>(hi + 1));
    return a;
}

}  // namespace multigrad::oracle
