#ifndef SATAKE_RATFUNC_HPP
#define SATAKE_RATFUNC_HPP

#include <string>

#include "satake/poly.hpp"

namespace satake {

// Reduced fraction of polynomials: gcd-free, denominator monic under
// degrevlex and never zero.  The reduced form is unique, so == is
// memberwise.
class RatFunc {
public:
    RatFunc() = default;  // zero over an unspecified ring
    RatFunc(MPoly num);   // NOLINT(google-explicit-constructor): natural embedding
    RatFunc(MPoly num, MPoly den);

    const MPoly& num() const { return num_; }
    const MPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const;

    RatFunc operator-() const;
    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;  // bad_input on zero divisor
    bool operator==(const RatFunc& o) const;

    RatFunc reciprocal() const;

    std::string to_string() const;

private:
    MPoly num_;
    MPoly den_;  // default-constructed only together with num_

    void reduce();
};

// Evaluate a polynomial at rational-function images, one per ring variable.
RatFunc eval_ratfunc(const MPoly& f, const std::vector<RatFunc>& images);

}  // namespace satake

#endif
