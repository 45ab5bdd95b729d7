#ifndef SATAKE_GROEBNER_HPP
#define SATAKE_GROEBNER_HPP

#include <vector>

#include "satake/poly.hpp"

namespace satake {

// Plain generator list; basis computations go through the free functions
// below, which share an internally synchronized memo keyed by (ring,
// generators, order).
struct Ideal {
    std::vector<MPoly> gens;
};

// Reduced, monic, auto-verified basis, sorted by descending leading
// monomial.  The pair-processing budget comes from SATAKE_GB_BUDGET
// (default 200000); exhaustion throws budget_exceeded.
std::vector<MPoly> groebner(const PolyRingPtr& ring, const Ideal& id, const MonoOrder& order);

// Full multivariate division remainder; membership test is nf == 0.
MPoly normal_form(const MPoly& f, const std::vector<MPoly>& basis, const MonoOrder& order);

bool ideal_member(const PolyRingPtr& ring, const MPoly& f, const Ideal& id);

// Contains every generator of `inner` in `outer`.
bool ideal_contains(const PolyRingPtr& ring, const Ideal& outer, const Ideal& inner);

// (I : f) = {g : g*f in I}, via a one-variable elimination.
Ideal ideal_quotient(const PolyRingPtr& ring, const Ideal& id, const MPoly& f);

// Sum and product of ideals (generator-level).
Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ideal& a, const Ideal& b);

enum class LocalGeneration { generates, does_not_generate };

// Whether f cuts out the maximal ideal of the localization at p of the
// quotient by q: for every generator g of p, ((q + (f) + p^2) : g) must
// contain an element outside p.  Throws not_subideal unless q is inside p,
// bad_input unless f lies in p.
LocalGeneration local_generation_test(const PolyRingPtr& ring, const Ideal& p, const Ideal& q,
                                      const MPoly& f);

size_t gb_budget_default();

}  // namespace satake

#endif
