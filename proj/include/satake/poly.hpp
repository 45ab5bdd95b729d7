#ifndef SATAKE_POLY_HPP
#define SATAKE_POLY_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "satake/rational.hpp"

namespace satake {

// Fixed, ordered variable list shared by all polynomials of one ring.
struct PolyRing {
    std::vector<std::string> vars;
    int index_of(const std::string& name) const;
};

using PolyRingPtr = std::shared_ptr<const PolyRing>;
PolyRingPtr make_ring(std::vector<std::string> vars);

// Exponent vector, one entry per ring variable.
using Monomial = std::vector<int>;

// Monomial order: an optional elimination block of the first `elim`
// variables (compared degree-first, ties broken reverse-lex inside the
// block), then the base order on the rest.
struct MonoOrder {
    enum Kind { degrevlex, lex } kind = degrevlex;
    int elim = 0;
    auto operator<=>(const MonoOrder&) const = default;
};

// Negative / zero / positive as a is below / equal to / above b.
int mono_cmp(const Monomial& a, const Monomial& b, const MonoOrder& order);

// Sparse multivariate polynomial over the rationals.
class MPoly {
public:
    MPoly() = default;
    explicit MPoly(PolyRingPtr ring) : ring_(std::move(ring)) {}
    MPoly(PolyRingPtr ring, const Rat& c);  // constant

    static MPoly variable(PolyRingPtr ring, int index);
    static MPoly parse(PolyRingPtr ring, const std::string& text);

    const PolyRingPtr& ring() const { return ring_; }
    const std::map<Monomial, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Total degree; -1 for the zero polynomial.
    long total_degree() const;
    long degree_in(int var) const;

    const Monomial& leading_monomial(const MonoOrder& order) const;
    const Rat& leading_coeff(const MonoOrder& order) const;

    MPoly operator-() const;
    MPoly operator+(const MPoly& o) const;
    MPoly operator-(const MPoly& o) const;
    MPoly operator*(const MPoly& o) const;
    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    bool operator==(const MPoly& o) const;

    MPoly scaled(const Rat& c) const;
    MPoly times_monomial(const Monomial& m, const Rat& c) const;
    MPoly pow(long e) const;

    // Substitute polynomials for every variable (images in any ring).
    MPoly substituted(const PolyRingPtr& target, const std::vector<MPoly>& images) const;

    void set_coeff(const Monomial& m, const Rat& c);
    const Rat& coeff(const Monomial& m) const;

    std::string to_string() const;

private:
    PolyRingPtr ring_;
    std::map<Monomial, Rat> terms_;

    void check_same_ring(const MPoly& o) const;
};

// Quotient and success flag of exact division; nullopt when the division
// leaves a remainder.
std::optional<MPoly> divide_exact(const MPoly& f, const MPoly& g, const MonoOrder& order);

// Greatest common divisor, monic w.r.t. degrevlex (primitive PRS).
MPoly poly_gcd(const MPoly& f, const MPoly& g);

}  // namespace satake

#endif
