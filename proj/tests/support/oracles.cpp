#include "support/oracles.hpp"

#include <algorithm>

#include "satake/error.hpp"

namespace oracles {

using namespace satake;

long weyl_dim(const RootTables& tables, const Weight& lam) {
    Weight rho(tables.rank(), Rat(1));
    Rat dim(1);
    for (int k = 0; k < tables.num_positive(); ++k) {
        const IVec& co = tables.positive_coroots[k];
        dim *= ivec_pair(co, qvec_add(lam, rho)) / ivec_pair(co, rho);
    }
    if (!is_integer(dim) || dim < 1)
        throw Error(errc::internal, "dimension product is not a positive integer");
    return to_long(dim);
}

namespace {

// One Demazure operator applied to a formal character.
CharMap demazure_op(const RootTables& tables, int i, const CharMap& ch) {
    CharMap out;
    const Weight alpha = tables.simple_root(i);
    for (const auto& [mu, m] : ch) {
        long k = to_long(mu.at(static_cast<size_t>(i)));
        if (k >= 0) {
            Weight w = mu;
            for (long j = 0; j <= k; ++j) {
                out[w] += m;
                w = qvec_sub(w, alpha);
            }
        } else {
            Weight w = qvec_add(mu, alpha);
            for (long j = 1; j <= -k - 1; ++j) {
                out[w] -= m;
                w = qvec_add(w, alpha);
            }
        }
    }
    for (auto it = out.begin(); it != out.end();)
        it = (it->second == 0) ? out.erase(it) : std::next(it);
    return out;
}

// 2*rho applied to mu: sum of all positive-coroot pairings.
Rat two_rho(const RootTables& tables, const Weight& mu) {
    Rat s(0);
    for (int k = 0; k < tables.num_positive(); ++k)
        s += ivec_pair(tables.positive_coroots[k], mu);
    return s;
}

}  // namespace

CharMap irreducible_character(const RootTables& tables, const Weight& lam) {
    if (!is_dominant(lam) || !is_integral_weight(lam))
        throw Error(errc::bad_input, "character oracle needs a dominant integral weight");
    CharMap ch;
    ch[lam] = 1;
    WeylWord w0 = longest_word(tables);
    for (auto it = w0.rbegin(); it != w0.rend(); ++it) ch = demazure_op(tables, *it, ch);
    return ch;
}

CharMap char_product(const CharMap& a, const CharMap& b) {
    CharMap out;
    for (const auto& [mu, m] : a)
        for (const auto& [nu, n] : b) out[qvec_add(mu, nu)] += m * n;
    for (auto it = out.begin(); it != out.end();)
        it = (it->second == 0) ? out.erase(it) : std::next(it);
    return out;
}

std::map<Weight, long, WeightLess> peel_decompose(const RootTables& tables, CharMap ch) {
    std::map<Weight, long, WeightLess> result;
    while (!ch.empty()) {
        auto best = ch.begin();
        Rat best_ht = two_rho(tables, best->first);
        for (auto it = std::next(ch.begin()); it != ch.end(); ++it) {
            Rat ht = two_rho(tables, it->first);
            if (ht > best_ht) {
                best = it;
                best_ht = ht;
            }
        }
        Weight top = best->first;
        long mult = best->second;
        if (!is_dominant(top) || mult <= 0)
            throw Error(errc::internal, "input is not a nonnegative sum of characters");
        for (const auto& [mu, m] : irreducible_character(tables, top)) {
            auto it = ch.find(mu);
            long v = (it == ch.end() ? 0 : it->second) - mult * m;
            if (v == 0) {
                if (it != ch.end()) ch.erase(it);
            } else {
                ch[mu] = v;
            }
        }
        result[top] += mult;
    }
    return result;
}

Weight random_dominant(const RootTables& tables, std::mt19937_64& rng, long dim_cap,
                       long coord_cap) {
    std::uniform_int_distribution<long> coord(0, coord_cap);
    for (int attempt = 0; attempt < 10000; ++attempt) {
        Weight lam(tables.rank());
        for (int i = 0; i < tables.rank(); ++i) lam[static_cast<size_t>(i)] = Rat(coord(rng));
        if (weyl_dim(tables, lam) <= dim_cap) return lam;
    }
    return Weight(tables.rank(), Rat(0));
}

Path random_orbit_path(const RootTables& tables, std::mt19937_64& rng, long dim_cap,
                       int walk_len) {
    Weight lam = random_dominant(tables, rng, dim_cap, 2);
    Path p = straight_path(lam);
    std::uniform_int_distribution<int> color(0, tables.rank() - 1);
    std::uniform_int_distribution<int> coin(0, 1);
    for (int s = 0; s < walk_len; ++s) {
        int i = color(rng);
        auto q = coin(rng) ? f_op(p, i, tables) : e_op(p, i, tables);
        if (q) p = *q;
    }
    return p;
}

Path random_concat_path(const RootTables& tables, std::mt19937_64& rng, int pieces,
                        long coord_cap) {
    std::uniform_int_distribution<long> coord(-coord_cap, coord_cap);
    Path p;
    for (int s = 0; s < pieces; ++s) {
        Weight nu(tables.rank());
        for (int i = 0; i < tables.rank(); ++i) nu[static_cast<size_t>(i)] = Rat(coord(rng));
        p = concatenate(p, straight_path(nu));
    }
    return p;
}

}  // namespace oracles
