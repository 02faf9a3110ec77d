#include "skeinlab/oracle.hpp"

#include <numeric>

namespace skeinlab {

namespace {

using Matrix = std::vector<std::vector<LaurentPoly>>;

Matrix identity_matrix(int m) {
    Matrix out(m, std::vector<LaurentPoly>(m, LaurentPoly("s")));
    for (int i = 0; i < m; ++i) out[i][i] = LaurentPoly::one("s");
    return out;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
    const int m = static_cast<int>(a.size());
    Matrix out(m, std::vector<LaurentPoly>(m, LaurentPoly("s")));
    for (int i = 0; i < m; ++i)
        for (int k = 0; k < m; ++k) {
            if (!a[i][k].max_exp()) continue;
            for (int j = 0; j < m; ++j)
                out[i][j] = out[i][j] + a[i][k] * b[k][j];
        }
    return out;
}

// Reduced Burau image of a single generator sigma_i^{+-1} in B_n, acting on
// the quotient of the unreduced representation by the invariant vector
// e_1 + ... + e_n.  Entries Laurent in s with t = s^2.
Matrix burau_generator(int n, int i, bool inverse) {
    const int m = n - 1;
    Matrix g = identity_matrix(m);
    const LaurentPoly t = LaurentPoly::monomial(1, 2, "s");
    const LaurentPoly tinv = LaurentPoly::monomial(1, -2, "s");
    const LaurentPoly one = LaurentPoly::one("s");
    // Columns hold images of basis vectors; 0-indexed row/col r = e_{r+1}.
    if (!inverse) {
        if (i < n - 1) {
            // e_i -> (1-t) e_i + e_{i+1},  e_{i+1} -> t e_i
            g[i - 1][i - 1] = one - t;
            g[i][i - 1] = one;
            g[i - 1][i] = t;
            g[i][i] = LaurentPoly("s");
        } else {
            // e_{n-1} -> (1-t) e_{n-1} + e_n with e_n = -(e_1 + ... + e_{n-1})
            for (int r = 0; r < m - 1; ++r) g[r][m - 1] = -one;
            g[m - 1][m - 1] = -t;
        }
    } else {
        if (i < n - 1) {
            // e_i -> t^{-1} e_{i+1},  e_{i+1} -> e_i + (1 - t^{-1}) e_{i+1}
            g[i - 1][i - 1] = LaurentPoly("s");
            g[i][i - 1] = tinv;
            g[i - 1][i] = one;
            g[i][i] = one - tinv;
        } else {
            // e_{n-1} -> t^{-1} e_n = -t^{-1}(e_1 + ... + e_{n-1})
            for (int r = 0; r < m; ++r) g[r][m - 1] = -tinv;
        }
    }
    return g;
}

// Determinant by cofactor expansion along the first remaining row; matrix
// sizes here stay small (n - 1 for the oracle corpus), so this is cheap and
// needs no division.
LaurentPoly det_recursive(const Matrix& a, std::vector<int>& cols, int row) {
    const int m = static_cast<int>(a.size());
    if (row == m) return LaurentPoly::one("s");
    LaurentPoly acc("s");
    for (std::size_t c = 0; c < cols.size(); ++c) {
        const int col = cols[c];
        if (!a[row][col].max_exp()) continue;
        std::vector<int> rest;
        rest.reserve(cols.size() - 1);
        for (std::size_t k = 0; k < cols.size(); ++k)
            if (k != c) rest.push_back(cols[k]);
        LaurentPoly sub = det_recursive(a, rest, row + 1);
        LaurentPoly term = a[row][col] * sub;
        if (c % 2 == 1) term = -term;
        acc = acc + term;
    }
    return acc;
}

LaurentPoly determinant(const Matrix& a) {
    std::vector<int> cols(a.size());
    std::iota(cols.begin(), cols.end(), 0);
    return det_recursive(a, cols, 0);
}

} // namespace

std::vector<std::vector<LaurentPoly>> burau_reduced(const BraidWord& b) {
    Matrix acc = identity_matrix(b.n - 1);
    for (int letter : b.letters)
        acc = mat_mul(acc, burau_generator(b.n, std::abs(letter), letter < 0));
    return acc;
}

LaurentPoly alexander_burau(const BraidWord& b) {
    const int n = b.n;
    if (n == 1) return LaurentPoly::one("s");
    Matrix m = burau_reduced(b);
    for (int i = 0; i < n - 1; ++i)
        for (int j = 0; j < n - 1; ++j) {
            m[i][j] = -m[i][j];
            if (i == j) m[i][j] = m[i][j] + LaurentPoly::one("s");
        }
    LaurentPoly d = determinant(m);
    if (!d.max_exp()) return d;
    // (1 - t)/(1 - t^n) = 1/(1 + t + ... + t^{n-1}); division is exact here.
    LaurentPoly cyc("s");
    for (int k = 0; k < n; ++k) cyc.add_term(2 * k, 1);
    return exact_div(d, cyc);
}

LaurentPoly jones_kauffman(const BraidWord& b) {
    const int c = static_cast<int>(b.letters.size());
    if (c > kBracketCrossingCap)
        throw StateSumBound("state sum limited to " +
                            std::to_string(kBracketCrossingCap) + " crossings");
    const int n = b.n;
    const long w = writhe(b);

    // Union-find over strand arcs; loops = arcs created - merging unions.
    std::vector<int> parent;
    auto find = [&](int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };

    LaurentPoly bracket("A");
    const std::uint32_t states = 1u << c;
    for (std::uint32_t state = 0; state < states; ++state) {
        parent.assign(n, 0);
        std::iota(parent.begin(), parent.end(), 0);
        std::vector<int> cur(parent);
        int merges = 0;
        int arcs = n;
        long a_exp = 0;
        auto unite = [&](int x, int y) {
            x = find(x);
            y = find(y);
            if (x == y) return;
            parent[x] = y;
            ++merges;
        };
        for (int k = 0; k < c; ++k) {
            const int pos = std::abs(b.letters[k]) - 1;
            const bool positive = b.letters[k] > 0;
            // A-smoothing of a positive crossing is the identity smoothing;
            // for a negative crossing the roles swap.
            const bool pick_a = ((state >> k) & 1u) == 0;
            a_exp += pick_a ? 1 : -1;
            const bool cupcap = (pick_a != positive);
            if (cupcap) {
                unite(cur[pos], cur[pos + 1]);
                parent.push_back(static_cast<int>(parent.size()));
                cur[pos] = cur[pos + 1] = static_cast<int>(parent.size()) - 1;
                ++arcs;
            }
        }
        for (int j = 0; j < n; ++j) unite(cur[j], j);
        const int loops = arcs - merges;
        // d^{loops-1} with d = -A^2 - A^{-2}
        LaurentPoly term = LaurentPoly::monomial(1, a_exp, "A");
        for (int l = 1; l < loops; ++l) {
            LaurentPoly d("A");
            d.add_term(2, -1);
            d.add_term(-2, -1);
            term = term * d;
        }
        bracket = bracket + term;
    }

    // V = (-A)^{-3w} <D>, then A^e -> s^{-e/2}.
    LaurentPoly v_in_a = bracket.shifted(-3 * w);
    if (w % 2 != 0) v_in_a = -v_in_a;
    LaurentPoly out("s");
    for (const auto& [e, coef] : v_in_a.terms()) {
        if (e % 2 != 0)
            throw std::logic_error("bracket produced an odd A-exponent");
        out.add_term(-e / 2, coef);
    }
    return out;
}

bool unit_equal(const LaurentPoly& a, const LaurentPoly& b) {
    const bool az = !a.max_exp();
    const bool bz = !b.max_exp();
    if (az || bz) return az == bz;
    LaurentPoly shifted = b.shifted(*a.min_exp() - *b.min_exp());
    return a == shifted || a == -shifted;
}

bool alexander_symmetric(const LaurentPoly& delta, int mu) {
    if (!delta.max_exp()) return true;
    LaurentPoly reflected = delta.reciprocal_variable();
    reflected = reflected.shifted(*delta.min_exp() + *delta.max_exp());
    if ((mu - 1) % 2 != 0) reflected = -reflected;
    return reflected == delta;
}

} // namespace skeinlab
