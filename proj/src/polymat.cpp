#include "satake/polymat.hpp"

#include "satake/error.hpp"

namespace satake {

namespace {

void check_rect(int rows, int cols, size_t have) {
    if (rows < 0 || cols < 0 || have != static_cast<size_t>(rows) * cols)
        throw Error(errc::bad_input, "matrix storage does not match its shape");
}

const MonoOrder kOrder{};  // degrevlex, used for the exact divisions below

}  // namespace

PolyMatrix poly_identity(int n, const PolyRingPtr& ring) {
    PolyMatrix m(n, n, ring);
    for (int i = 0; i < n; ++i) m.at(i, i) = MPoly(ring, Rat(1));
    return m;
}

PolyMatrix poly_mat_mul(const PolyMatrix& a, const PolyMatrix& b) {
    check_rect(a.rows, a.cols, a.entries.size());
    check_rect(b.rows, b.cols, b.entries.size());
    if (a.cols != b.rows)
        throw Error(errc::bad_input, "matrix product shape mismatch");
    PolyRingPtr ring = a.entries.empty() ? (b.entries.empty() ? nullptr : b.entries[0].ring())
                                         : a.entries[0].ring();
    PolyMatrix out(a.rows, b.cols, ring);
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k) {
            const MPoly& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < b.cols; ++j) out.at(i, j) += aik * b.at(k, j);
        }
    return out;
}

PolyMatrix poly_mat_scale(const PolyMatrix& a, const MPoly& c) {
    PolyMatrix out = a;
    for (MPoly& e : out.entries) e = e * c;
    return out;
}

MPoly poly_mat_det(const PolyMatrix& a) {
    check_rect(a.rows, a.cols, a.entries.size());
    if (a.rows != a.cols) throw Error(errc::bad_input, "determinant of a non-square matrix");
    const int n = a.rows;
    if (n == 0) throw Error(errc::bad_input, "determinant of an empty matrix");
    PolyRingPtr ring = a.entries[0].ring();
    PolyMatrix w = a;
    MPoly prev(ring, Rat(1));
    bool negate = false;
    // Bareiss one-step elimination: every division below is exact.
    for (int k = 0; k + 1 < n; ++k) {
        if (w.at(k, k).is_zero()) {
            int r = k + 1;
            while (r < n && w.at(r, k).is_zero()) ++r;
            if (r == n) return MPoly(ring);  // zero column, zero determinant
            for (int j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(r, j));
            negate = !negate;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                MPoly t = w.at(k, k) * w.at(i, j) - w.at(i, k) * w.at(k, j);
                auto q = divide_exact(t, prev, kOrder);
                if (!q)
                    throw Error(errc::internal, "fraction-free elimination left a remainder");
                w.at(i, j) = std::move(*q);
            }
        prev = w.at(k, k);
    }
    MPoly det = w.at(n - 1, n - 1);
    return negate ? -det : det;
}

RatMatrix rat_mat_from_poly(const PolyMatrix& a) {
    RatMatrix out(a.rows, a.cols);
    for (size_t i = 0; i < a.entries.size(); ++i) out.entries[i] = RatFunc(a.entries[i]);
    return out;
}

RatMatrix rat_mat_mul(const RatMatrix& a, const RatMatrix& b) {
    check_rect(a.rows, a.cols, a.entries.size());
    check_rect(b.rows, b.cols, b.entries.size());
    if (a.cols != b.rows)
        throw Error(errc::bad_input, "matrix product shape mismatch");
    RatMatrix out(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k) {
            const RatFunc& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < b.cols; ++j)
                out.at(i, j) = out.at(i, j) + aik * b.at(k, j);
        }
    return out;
}

RatFunc rat_mat_det(const RatMatrix& a) {
    check_rect(a.rows, a.cols, a.entries.size());
    if (a.rows != a.cols) throw Error(errc::bad_input, "determinant of a non-square matrix");
    const int n = a.rows;
    if (n == 0) throw Error(errc::bad_input, "determinant of an empty matrix");
    RatMatrix w = a;
    RatFunc det;
    bool have_ring = false;
    bool negate = false;
    for (int k = 0; k < n; ++k) {
        int r = k;
        while (r < n && w.at(r, k).is_zero()) ++r;
        if (r == n) {
            // Express zero in the ring of some entry when one is available.
            for (const RatFunc& e : a.entries)
                if (!e.is_zero()) return e - e;
            return RatFunc();
        }
        if (r != k) {
            for (int j = k; j < n; ++j) std::swap(w.at(k, j), w.at(r, j));
            negate = !negate;
        }
        const RatFunc pivot = w.at(k, k);
        det = have_ring ? det * pivot : pivot;
        have_ring = true;
        RatFunc inv = pivot.reciprocal();
        for (int i = k + 1; i < n; ++i) {
            if (w.at(i, k).is_zero()) continue;
            RatFunc factor = w.at(i, k) * inv;
            for (int j = k; j < n; ++j)
                w.at(i, j) = w.at(i, j) - factor * w.at(k, j);
        }
    }
    return negate ? -det : det;
}

RatMatrix rat_mat_inverse(const RatMatrix& a) {
    check_rect(a.rows, a.cols, a.entries.size());
    if (a.rows != a.cols) throw Error(errc::bad_input, "inverse of a non-square matrix");
    const int n = a.rows;
    RatMatrix w = a;
    PolyRingPtr ring;
    for (const RatFunc& e : a.entries)
        if (e.num().ring()) { ring = e.num().ring(); break; }
    if (!ring) throw Error(errc::singular_matrix, "matrix has no nonzero entry");
    const RatFunc one{MPoly(ring, Rat(1))};
    RatMatrix inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv.at(i, j) = (i == j) ? one : one - one;
    for (int k = 0; k < n; ++k) {
        int r = k;
        while (r < n && w.at(r, k).is_zero()) ++r;
        if (r == n) throw Error(errc::singular_matrix, "matrix is singular");
        if (r != k)
            for (int j = 0; j < n; ++j) {
                std::swap(w.at(k, j), w.at(r, j));
                std::swap(inv.at(k, j), inv.at(r, j));
            }
        RatFunc scale = w.at(k, k).reciprocal();
        for (int j = 0; j < n; ++j) {
            w.at(k, j) = w.at(k, j) * scale;
            inv.at(k, j) = inv.at(k, j) * scale;
        }
        for (int i = 0; i < n; ++i) {
            if (i == k || w.at(i, k).is_zero()) continue;
            RatFunc factor = w.at(i, k);
            for (int j = 0; j < n; ++j) {
                w.at(i, j) = w.at(i, j) - factor * w.at(k, j);
                inv.at(i, j) = inv.at(i, j) - factor * inv.at(k, j);
            }
        }
    }
    return inv;
}

bool rat_mat_is_polynomial(const RatMatrix& a) {
    for (const RatFunc& e : a.entries)
        if (!e.is_polynomial()) return false;
    return true;
}

PolyMatrix rat_mat_to_poly(const RatMatrix& a, const PolyRingPtr& ring) {
    PolyMatrix out(a.rows, a.cols, ring);
    for (size_t i = 0; i < a.entries.size(); ++i) {
        const RatFunc& e = a.entries[i];
        if (!e.is_polynomial())
            throw Error(errc::bad_input, "matrix entry is not a polynomial");
        out.entries[i] = e.is_zero() ? MPoly(ring) : e.num();
    }
    return out;
}

LinSolveResult linsolve_ratfunc(const RatMatrix& a, const std::vector<RatFunc>& b) {
    check_rect(a.rows, a.cols, a.entries.size());
    if (static_cast<int>(b.size()) != a.rows)
        throw Error(errc::bad_input, "right-hand side length does not match row count");
    const int m = a.rows, n = a.cols;
    PolyRingPtr ring;
    for (const RatFunc& e : a.entries)
        if (e.num().ring()) { ring = e.num().ring(); break; }
    if (!ring)
        for (const RatFunc& e : b)
            if (e.num().ring()) { ring = e.num().ring(); break; }
    if (!ring) throw Error(errc::bad_input, "system has no entries over a known ring");
    const RatFunc one{MPoly(ring, Rat(1))};
    const RatFunc zero = one - one;

    // Augmented reduced row echelon form.
    RatMatrix w(m, n + 1);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) w.at(i, j) = a.at(i, j);
        w.at(i, n) = b[static_cast<size_t>(i)];
    }
    std::vector<int> pivot_col;  // pivot column of each used row
    std::vector<int> row_origin(m);
    for (int i = 0; i < m; ++i) row_origin[i] = i;
    int rank = 0;
    for (int col = 0; col < n && rank < m; ++col) {
        int r = rank;
        while (r < m && w.at(r, col).is_zero()) ++r;
        if (r == m) continue;
        if (r != rank) {
            for (int j = 0; j <= n; ++j) std::swap(w.at(rank, j), w.at(r, j));
            std::swap(row_origin[rank], row_origin[r]);
        }
        RatFunc scale = w.at(rank, col).reciprocal();
        for (int j = col; j <= n; ++j) w.at(rank, j) = w.at(rank, j) * scale;
        for (int i = 0; i < m; ++i) {
            if (i == rank || w.at(i, col).is_zero()) continue;
            RatFunc factor = w.at(i, col);
            for (int j = col; j <= n; ++j)
                w.at(i, j) = w.at(i, j) - factor * w.at(rank, j);
        }
        pivot_col.push_back(col);
        ++rank;
    }
    for (int i = rank; i < m; ++i)
        if (!w.at(i, n).is_zero())
            throw Error(errc::inconsistent_system,
                        "no solution: row " + std::to_string(row_origin[i]) +
                            " reduces to 0 = nonzero");

    LinSolveResult out;
    out.particular.assign(static_cast<size_t>(n), zero);
    for (int i = 0; i < rank; ++i)
        out.particular[static_cast<size_t>(pivot_col[static_cast<size_t>(i)])] = w.at(i, n);

    std::vector<bool> is_pivot(static_cast<size_t>(n), false);
    for (int c : pivot_col) is_pivot[static_cast<size_t>(c)] = true;
    for (int freec = 0; freec < n; ++freec) {
        if (is_pivot[static_cast<size_t>(freec)]) continue;
        std::vector<RatFunc> v(static_cast<size_t>(n), zero);
        v[static_cast<size_t>(freec)] = one;
        for (int i = 0; i < rank; ++i)
            v[static_cast<size_t>(pivot_col[static_cast<size_t>(i)])] =
                zero - w.at(i, freec);
        out.kernel.push_back(std::move(v));
    }
    return out;
}

}  // namespace satake
