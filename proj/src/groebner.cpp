#include "satake/groebner.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <mutex>
#include <sstream>

#include "satake/error.hpp"

namespace satake {

size_t gb_budget_default() {
    if (const char* env = std::getenv("SATAKE_GB_BUDGET")) {
        char* end = nullptr;
        unsigned long v = std::strtoul(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return 200000;
}

namespace {

bool divides(const Monomial& a, const Monomial& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
    Monomial m(a.size());
    for (size_t i = 0; i < a.size(); ++i) m[i] = std::max(a[i], b[i]);
    return m;
}

bool coprime(const Monomial& a, const Monomial& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > 0 && b[i] > 0) return false;
    return true;
}

MPoly spoly(const MPoly& f, const MPoly& g, const MonoOrder& order) {
    const Monomial& lf = f.leading_monomial(order);
    const Monomial& lg = g.leading_monomial(order);
    Monomial l = mono_lcm(lf, lg);
    Monomial mf(l.size()), mg(l.size());
    for (size_t i = 0; i < l.size(); ++i) {
        mf[i] = l[i] - lf[i];
        mg[i] = l[i] - lg[i];
    }
    return f.times_monomial(mf, 1 / f.leading_coeff(order)) -
           g.times_monomial(mg, 1 / g.leading_coeff(order));
}

struct MemoKey {
    std::string text;
    bool operator<(const MemoKey& o) const { return text < o.text; }
};

MemoKey memo_key(const PolyRingPtr& ring, const std::vector<MPoly>& gens,
                 const MonoOrder& order) {
    std::ostringstream os;
    for (const auto& v : ring->vars) os << v << ",";
    os << "|" << static_cast<int>(order.kind) << ":" << order.elim << "|";
    std::vector<std::string> parts;
    for (const MPoly& g : gens) parts.push_back(g.to_string());
    std::sort(parts.begin(), parts.end());
    for (const auto& p : parts) os << p << ";";
    return {os.str()};
}

std::mutex memo_mutex;
std::map<MemoKey, std::vector<MPoly>> memo;

std::vector<MPoly> buchberger(const PolyRingPtr& ring, std::vector<MPoly> basis,
                              const MonoOrder& order) {
    basis.erase(std::remove_if(basis.begin(), basis.end(),
                               [](const MPoly& p) { return p.is_zero(); }),
                basis.end());
    const size_t budget = gb_budget_default();
    size_t steps = 0;

    std::vector<std::pair<size_t, size_t>> pairs;
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = i + 1; j < basis.size(); ++j) pairs.push_back({i, j});

    while (!pairs.empty()) {
        auto [i, j] = pairs.back();
        pairs.pop_back();
        if (++steps > budget)
            throw Error(errc::budget_exceeded, "basis computation ran out of budget");
        if (coprime(basis[i].leading_monomial(order), basis[j].leading_monomial(order)))
            continue;
        MPoly r = normal_form(spoly(basis[i], basis[j], order), basis, order);
        if (r.is_zero()) continue;
        size_t k = basis.size();
        basis.push_back(std::move(r));
        for (size_t t = 0; t < k; ++t) pairs.push_back({t, k});
    }

    // Minimalize: drop elements whose leading monomial another one divides.
    std::vector<MPoly> minimal;
    for (size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            const Monomial& li = basis[i].leading_monomial(order);
            const Monomial& lj = basis[j].leading_monomial(order);
            if (divides(lj, li) && (mono_cmp(li, lj, order) != 0 || j < i)) redundant = true;
        }
        if (!redundant) minimal.push_back(basis[i]);
    }

    // Reduce each element against the others and make it monic.
    std::vector<MPoly> reduced;
    for (size_t i = 0; i < minimal.size(); ++i) {
        std::vector<MPoly> others;
        for (size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        MPoly r = normal_form(minimal[i], others, order);
        if (!r.is_zero()) reduced.push_back(r.scaled(1 / r.leading_coeff(order)));
    }
    std::sort(reduced.begin(), reduced.end(), [&](const MPoly& a, const MPoly& b) {
        return mono_cmp(a.leading_monomial(order), b.leading_monomial(order), order) > 0;
    });

    // Self-check: a reduced basis must send every S-polynomial to zero.
    for (size_t i = 0; i < reduced.size(); ++i)
        for (size_t j = i + 1; j < reduced.size(); ++j)
            if (!normal_form(spoly(reduced[i], reduced[j], order), reduced, order).is_zero())
                throw Error(errc::internal, "basis self-check failed");
    (void)ring;
    return reduced;
}

}  // namespace

MPoly normal_form(const MPoly& f, const std::vector<MPoly>& basis, const MonoOrder& order) {
    MPoly rem = f;
    MPoly out(f.ring());
    while (!rem.is_zero()) {
        Monomial lm = rem.leading_monomial(order);
        bool reduced = false;
        for (const MPoly& g : basis) {
            if (g.is_zero()) continue;
            const Monomial& lg = g.leading_monomial(order);
            if (!divides(lg, lm)) continue;
            Monomial q(lm.size());
            for (size_t t = 0; t < lm.size(); ++t) q[t] = lm[t] - lg[t];
            Rat c = rem.terms().at(lm) / g.leading_coeff(order);
            rem -= g.times_monomial(q, c);
            reduced = true;
            break;
        }
        if (!reduced) {
            Rat c = rem.terms().at(lm);
            out.set_coeff(lm, c);
            rem.set_coeff(lm, Rat(0));
        }
    }
    return out;
}

std::vector<MPoly> groebner(const PolyRingPtr& ring, const Ideal& id, const MonoOrder& order) {
    MemoKey key = memo_key(ring, id.gens, order);
    {
        std::lock_guard<std::mutex> lock(memo_mutex);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
    }
    std::vector<MPoly> gb = buchberger(ring, id.gens, order);
    std::lock_guard<std::mutex> lock(memo_mutex);
    return memo.emplace(key, std::move(gb)).first->second;
}

bool ideal_member(const PolyRingPtr& ring, const MPoly& f, const Ideal& id) {
    MonoOrder order;
    return normal_form(f, groebner(ring, id, order), order).is_zero();
}

bool ideal_contains(const PolyRingPtr& ring, const Ideal& outer, const Ideal& inner) {
    for (const MPoly& g : inner.gens)
        if (!ideal_member(ring, g, outer)) return false;
    return true;
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
    Ideal out = a;
    out.gens.insert(out.gens.end(), b.gens.begin(), b.gens.end());
    return out;
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
    Ideal out;
    for (const MPoly& f : a.gens)
        for (const MPoly& g : b.gens) out.gens.push_back(f * g);
    return out;
}

Ideal ideal_quotient(const PolyRingPtr& ring, const Ideal& id, const MPoly& f) {
    if (f.is_zero()) throw Error(errc::bad_input, "quotient by the zero polynomial");

    // Extended ring with a fresh elimination variable in front.
    std::vector<std::string> vars;
    vars.push_back("#t");
    vars.insert(vars.end(), ring->vars.begin(), ring->vars.end());
    PolyRingPtr ext = make_ring(vars);

    auto lift = [&](const MPoly& p) {
        MPoly out(ext);
        for (const auto& [m, c] : p.terms()) {
            Monomial mm(m.size() + 1, 0);
            std::copy(m.begin(), m.end(), mm.begin() + 1);
            out.set_coeff(mm, c);
        }
        return out;
    };

    MPoly t = MPoly::variable(ext, 0);
    MPoly one(ext, Rat(1));
    Ideal work;
    for (const MPoly& g : id.gens) work.gens.push_back(t * lift(g));
    work.gens.push_back((one - t) * lift(f));

    MonoOrder elim;
    elim.elim = 1;
    std::vector<MPoly> gb = groebner(ext, work, elim);

    MonoOrder base;
    Ideal out;
    for (const MPoly& g : gb) {
        bool has_t = false;
        for (const auto& [m, c] : g.terms())
            if (m[0] > 0) {
                has_t = true;
                break;
            }
        if (has_t) continue;
        // Drop back to the original ring and divide by f.
        MPoly low(ring);
        for (const auto& [m, c] : g.terms())
            low.set_coeff(Monomial(m.begin() + 1, m.end()), c);
        auto q = divide_exact(low, f, base);
        if (!q) throw Error(errc::internal, "intersection element not divisible");
        out.gens.push_back(*q);
    }
    if (out.gens.empty()) out.gens.push_back(MPoly(ring));
    return out;
}

LocalGeneration local_generation_test(const PolyRingPtr& ring, const Ideal& p, const Ideal& q,
                                      const MPoly& f) {
    if (!ideal_contains(ring, p, q))
        throw Error(errc::not_subideal, "second ideal is not inside the first");
    if (!ideal_member(ring, f, p))
        throw Error(errc::bad_input, "element must lie in the prime");

    Ideal fq;
    fq.gens.push_back(f);
    Ideal target = ideal_sum(ideal_sum(q, fq), ideal_product(p, p));

    MonoOrder order;
    std::vector<MPoly> gbp = groebner(ring, p, order);
    for (const MPoly& g : p.gens) {
        if (g.is_zero()) continue;
        Ideal quot = ideal_quotient(ring, target, g);
        bool escapes = false;
        for (const MPoly& h : quot.gens)
            if (!normal_form(h, gbp, order).is_zero()) {
                escapes = true;
                break;
            }
        if (!escapes) return LocalGeneration::does_not_generate;
    }
    return LocalGeneration::generates;
}

}  // namespace satake
