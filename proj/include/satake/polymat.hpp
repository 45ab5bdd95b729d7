#ifndef SATAKE_POLYMAT_HPP
#define SATAKE_POLYMAT_HPP

#include <vector>

#include "satake/ratfunc.hpp"

namespace satake {

// Dense rectangular matrix with polynomial entries.
struct PolyMatrix {
    int rows = 0, cols = 0;
    std::vector<MPoly> entries;  // row-major

    PolyMatrix() = default;
    PolyMatrix(int r, int c, const PolyRingPtr& ring)
        : rows(r), cols(c), entries(static_cast<size_t>(r) * c, MPoly(ring)) {}

    MPoly& at(int r, int c) { return entries.at(static_cast<size_t>(r) * cols + c); }
    const MPoly& at(int r, int c) const {
        return entries.at(static_cast<size_t>(r) * cols + c);
    }
};

PolyMatrix poly_identity(int n, const PolyRingPtr& ring);
PolyMatrix poly_mat_mul(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix poly_mat_scale(const PolyMatrix& a, const MPoly& c);

// Fraction-free determinant (exact divisions only).
MPoly poly_mat_det(const PolyMatrix& a);

// Dense matrix over the rational-function field.
struct RatMatrix {
    int rows = 0, cols = 0;
    std::vector<RatFunc> entries;

    RatMatrix() = default;
    RatMatrix(int r, int c) : rows(r), cols(c), entries(static_cast<size_t>(r) * c) {}

    RatFunc& at(int r, int c) { return entries.at(static_cast<size_t>(r) * cols + c); }
    const RatFunc& at(int r, int c) const {
        return entries.at(static_cast<size_t>(r) * cols + c);
    }
};

RatMatrix rat_mat_from_poly(const PolyMatrix& a);
RatMatrix rat_mat_mul(const RatMatrix& a, const RatMatrix& b);
RatFunc rat_mat_det(const RatMatrix& a);

// Gauss-Jordan inverse; throws singular_matrix.
RatMatrix rat_mat_inverse(const RatMatrix& a);

bool rat_mat_is_polynomial(const RatMatrix& a);
// Conversion when every entry is denominator-free; throws bad_input otherwise.
PolyMatrix rat_mat_to_poly(const RatMatrix& a, const PolyRingPtr& ring);

// Exact solution of A x = b: one particular solution with free coordinates
// set to zero plus a kernel basis.  Throws inconsistent_system with the
// offending row in the message.
struct LinSolveResult {
    std::vector<RatFunc> particular;
    std::vector<std::vector<RatFunc>> kernel;
};
LinSolveResult linsolve_ratfunc(const RatMatrix& a, const std::vector<RatFunc>& b);

}  // namespace satake

#endif
