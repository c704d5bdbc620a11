#include "twobridge/seifert.hpp"

namespace tb {

SeifertMatrix seifert_matrix(const ConwayForm& k) {
    const int g = k.genus();
    const int n = 2 * g;
    SeifertMatrix m;
    m.n = n;
    m.entries.assign(static_cast<std::size_t>(n), std::vector<Int>(static_cast<std::size_t>(n), Int(0)));
    for (int i = 0; i < g; ++i) {
        m.entries[2 * i][2 * i] = Int(-k.c(i + 1));
        m.entries[2 * i + 1][2 * i + 1] = Int(k.b(i + 1));
    }
    for (int i = 0; i + 1 < n; ++i) m.entries[i][i + 1] = Int(1);
    return m;
}

Laurent conway_polynomial(const ConwayForm& k) {
    const int g = k.genus();
    std::vector<Int> a;
    a.reserve(static_cast<std::size_t>(2 * g));
    for (int i = 1; i <= g; ++i) {
        a.emplace_back(-k.c(i));
        a.emplace_back(k.b(i));
    }
    Laurent prev(Int(1));               // D_0
    Laurent cur(a[0], 1);               // D_1 = a_1 z
    for (int m = 2; m <= 2 * g; ++m) {
        Laurent next = cur.shifted(a[static_cast<std::size_t>(m - 1)], 1) + prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

Int a2(const ConwayForm& k) { return conway_polynomial(k).coeff(2); }
Int a4(const ConwayForm& k) { return conway_polynomial(k).coeff(4); }

namespace {

/// Fraction-free Bareiss determinant over an integral domain with exact division.
Laurent bareiss_laurent(std::vector<std::vector<Laurent>> m) {
    const std::size_t n = m.size();
    if (n == 0) return Laurent(Int(1));
    Laurent prev_pivot(Int(1));
    int sign = 1;
    for (std::size_t r = 0; r + 1 < n; ++r) {
        if (m[r][r].is_zero()) {
            std::size_t swap_row = r + 1;
            while (swap_row < n && m[swap_row][r].is_zero()) ++swap_row;
            if (swap_row == n) return Laurent();  // singular
            std::swap(m[r], m[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = r + 1; i < n; ++i) {
            for (std::size_t j = r + 1; j < n; ++j) {
                Laurent num = m[i][j] * m[r][r] - m[i][r] * m[r][j];
                m[i][j] = num.divide_exact(prev_pivot);
            }
            m[i][r] = Laurent();
        }
        prev_pivot = m[r][r];
    }
    Laurent det = m[n - 1][n - 1];
    if (sign < 0) det = -det;
    return det;
}

}  // namespace

Laurent conway_polynomial_bareiss_u(const ConwayForm& k) {
    const SeifertMatrix v = seifert_matrix(k);
    const int n = v.n;
    std::vector<std::vector<Laurent>> m(static_cast<std::size_t>(n),
                                        std::vector<Laurent>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Laurent e;
            e += Laurent(v.at(i, j), 1);       // u * V_ij
            e -= Laurent(v.at(j, i), -1);      // u^{-1} * V_ji
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = std::move(e);
        }
    return bareiss_laurent(std::move(m));
}

Laurent alexander_t(const ConwayForm& k) {
    const Laurent nabla = conway_polynomial(k);
    const int g = k.genus();
    // z^2 = t - 2 + t^{-1}
    Laurent zz;
    zz += Laurent(Int(1), 1);
    zz += Laurent(Int(-2), 0);
    zz += Laurent(Int(1), -1);
    Laurent out;
    for (const auto& [e, co] : nabla.terms()) {
        if (e % 2 != 0) throw std::logic_error("nabla of a knot must be even");
        out += zz.pow(static_cast<unsigned long>(e / 2)).shifted(co, 0);
    }
    return out.shifted(Int(1), g);
}

Int integer_determinant(std::vector<std::vector<Int>> m) {
    const std::size_t n = m.size();
    if (n == 0) return Int(1);
    Int prev_pivot(1);
    int sign = 1;
    for (std::size_t r = 0; r + 1 < n; ++r) {
        if (m[r][r] == 0) {
            std::size_t swap_row = r + 1;
            while (swap_row < n && m[swap_row][r] == 0) ++swap_row;
            if (swap_row == n) return Int(0);
            std::swap(m[r], m[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = r + 1; i < n; ++i) {
            for (std::size_t j = r + 1; j < n; ++j) {
                Int num = m[i][j] * m[r][r] - m[i][r] * m[r][j];
                Int q, rem;
                mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), prev_pivot.get_mpz_t());
                if (rem != 0) throw std::logic_error("Bareiss division must be exact");
                m[i][j] = std::move(q);
            }
            m[i][r] = 0;
        }
        prev_pivot = m[r][r];
    }
    Int det = m[n - 1][n - 1];
    if (sign < 0) det = -det;
    return det;
}

Int det_v_plus_vt(const ConwayForm& k) {
    const SeifertMatrix v = seifert_matrix(k);
    const int n = v.n;
    std::vector<std::vector<Int>> m(static_cast<std::size_t>(n),
                                    std::vector<Int>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v.at(i, j) + v.at(j, i);
    Int d = integer_determinant(std::move(m));
    return abs(d);
}

}  // namespace tb
