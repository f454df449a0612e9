#include "poly_matrix.hpp"

#include <algorithm>

#include "errors.hpp"

namespace qpair {

namespace {

void row_sub(PolyMatrix& m, std::size_t dst, std::size_t src, const Poly& f, std::size_t from) {
    for (std::size_t c = from; c < m.cols; ++c)
        m.at(dst, c) = m.at(dst, c) - f * m.at(src, c);
}

void col_sub(PolyMatrix& m, std::size_t dst, std::size_t src, const Poly& f, std::size_t from) {
    for (std::size_t r = from; r < m.rows; ++r)
        m.at(r, dst) = m.at(r, dst) - f * m.at(r, src);
}

void swap_rows(PolyMatrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < m.cols; ++c) std::swap(m.at(a, c), m.at(b, c));
}

void swap_cols(PolyMatrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < m.rows; ++r) std::swap(m.at(r, a), m.at(r, b));
}

// Smallest-degree nonzero entry of the trailing submatrix, if any.
bool find_pivot(const PolyMatrix& m, std::size_t pos, std::size_t& pr, std::size_t& pc) {
    long best = -1;
    for (std::size_t r = pos; r < m.rows; ++r)
        for (std::size_t c = pos; c < m.cols; ++c) {
            const Poly& p = m.at(r, c);
            if (p.is_zero()) continue;
            if (best < 0 || p.degree() < best) {
                best = p.degree();
                pr = r;
                pc = c;
            }
        }
    return best >= 0;
}

}  // namespace

std::vector<Poly> smith_form(const PolyMatrix& input) {
    PolyMatrix m = input;
    std::vector<Poly> factors;
    std::size_t pos = 0;
    while (pos < m.rows && pos < m.cols) {
        std::size_t pr = 0, pc = 0;
        if (!find_pivot(m, pos, pr, pc)) break;
        swap_rows(m, pos, pr);
        swap_cols(m, pos, pc);
        for (;;) {
            // Clear the pivot column; a nonzero remainder becomes a smaller pivot.
            bool restarted = false;
            for (std::size_t r = pos + 1; r < m.rows && !restarted; ++r) {
                if (m.at(r, pos).is_zero()) continue;
                auto [q, rem] = m.at(r, pos).divmod(m.at(pos, pos));
                row_sub(m, r, pos, q, pos);
                if (!rem.is_zero()) {
                    swap_rows(m, pos, r);
                    restarted = true;
                }
            }
            if (restarted) continue;
            for (std::size_t c = pos + 1; c < m.cols && !restarted; ++c) {
                if (m.at(pos, c).is_zero()) continue;
                auto [q, rem] = m.at(pos, c).divmod(m.at(pos, pos));
                col_sub(m, c, pos, q, pos);
                if (!rem.is_zero()) {
                    swap_cols(m, pos, c);
                    restarted = true;
                }
            }
            if (restarted) continue;
            // Pivot must divide every remaining entry for the chain f_i | f_{i+1}.
            bool divides_all = true;
            for (std::size_t r = pos + 1; r < m.rows && divides_all; ++r)
                for (std::size_t c = pos + 1; c < m.cols && divides_all; ++c)
                    if (!m.at(r, c).is_zero() && !m.at(r, c).divisible_by(m.at(pos, pos))) {
                        for (std::size_t cc = pos; cc < m.cols; ++cc)
                            m.at(pos, cc) = m.at(pos, cc) + m.at(r, cc);
                        divides_all = false;
                    }
            if (divides_all) break;
        }
        factors.push_back(m.at(pos, pos).monic());
        ++pos;
    }
    return factors;
}

namespace {

Poly minor_det(const PolyMatrix& m, const std::vector<std::size_t>& rows,
               const std::vector<std::size_t>& cols) {
    // Laplace expansion; fine for the <= 4x4 oracle use.
    std::size_t n = rows.size();
    if (n == 0) return Poly::one();
    if (n == 1) return m.at(rows[0], cols[0]);
    Poly det;
    for (std::size_t t = 0; t < n; ++t) {
        const Poly& e = m.at(rows[0], cols[t]);
        if (e.is_zero()) continue;
        std::vector<std::size_t> subrows(rows.begin() + 1, rows.end());
        std::vector<std::size_t> subcols;
        for (std::size_t s = 0; s < n; ++s)
            if (s != t) subcols.push_back(cols[s]);
        Poly term = e * minor_det(m, subrows, subcols);
        det = (t % 2 == 0) ? det + term : det - term;
    }
    return det;
}

void choose(std::size_t n, std::size_t k, std::vector<std::vector<std::size_t>>& out) {
    if (k > n || k == 0) return;
    std::vector<std::size_t> idx(k);
    for (std::size_t t = 0; t < k; ++t) idx[t] = t;
    for (;;) {
        out.push_back(idx);
        std::size_t t = k;
        while (t-- > 0) {
            if (idx[t] != t + n - k) {
                ++idx[t];
                for (std::size_t s = t + 1; s < k; ++s) idx[s] = idx[s - 1] + 1;
                break;
            }
            if (t == 0) return;
        }
    }
}

}  // namespace

Poly minor_gcd(const PolyMatrix& m, std::size_t r) {
    if (r == 0) return Poly::one();
    std::vector<std::vector<std::size_t>> row_sets, col_sets;
    choose(m.rows, r, row_sets);
    choose(m.cols, r, col_sets);
    Poly g;
    for (const auto& rs : row_sets)
        for (const auto& cs : col_sets) {
            Poly d = minor_det(m, rs, cs);
            if (!d.is_zero()) g = poly_gcd(g, d);
        }
    return g;
}

}  // namespace qpair
