#include "satake/cones.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace satake {

namespace {

// One affine row: sum(coeffs[v] * var[v]) + constant >= 0.
struct Row {
    QVec coeffs;
    Rat constant;

    bool operator<(const Row& o) const {
        int c = qvec_cmp(coeffs, o.coeffs);
        if (c != 0) return c < 0;
        return constant < o.constant;
    }
};

Row normalize(Row r) {
    for (const Rat& c : r.coeffs) {
        if (c != 0) {
            Rat scale = 1 / abs(c);
            for (Rat& x : r.coeffs) x *= scale;
            r.constant *= scale;
            return r;
        }
    }
    if (r.constant != 0) {
        Rat scale = 1 / abs(r.constant);
        r.constant *= scale;
    }
    return r;
}

// Nonnegative combination of a lower row (coeff > 0 at v) and an upper row
// (coeff < 0 at v) that cancels variable v.
Row combine(const Row& lower, const Row& upper, size_t v) {
    Rat a = lower.coeffs[v];   // > 0
    Rat b = -upper.coeffs[v];  // > 0
    Row r;
    r.coeffs.resize(lower.coeffs.size());
    for (size_t j = 0; j < r.coeffs.size(); ++j)
        r.coeffs[j] = b * lower.coeffs[j] + a * upper.coeffs[j];
    r.constant = b * lower.constant + a * upper.constant;
    r.coeffs[v] = 0;  // exact by construction; keep it clean
    return r;
}

struct EliminationStep {
    size_t var;
    std::vector<Row> lowers;  // rows with coeffs[var] > 0
    std::vector<Row> uppers;  // rows with coeffs[var] < 0
};

// Matrices of the prefix products w_k = s_{i_1}...s_{i_k} acting on the
// simple roots, written in simple-root coordinates: column j of the k-th
// matrix expands w_k(alpha_j).
std::vector<std::vector<IVec>> prefix_root_matrices(const RootTables& tables,
                                                    const WeylWord& word) {
    std::vector<std::vector<IVec>> mats;
    const int r = tables.rank();
    for (size_t k = 1; k <= word.size(); ++k) {
        WeylWord prefix(word.begin(), word.begin() + k);
        std::vector<IVec> cols;
        for (int j = 0; j < r; ++j) {
            Weight img = weyl_act(tables, prefix, tables.simple_root(j));
            auto c = tables.root_coordinates(img);
            if (!c) throw Error(errc::internal, "reflected simple root left the root lattice");
            cols.push_back(*c);
        }
        mats.push_back(std::move(cols));
    }
    return mats;
}

}  // namespace

ChamberChainResult condition_A_check(const RootTables& tables, const WeylWord& word) {
    if (!is_reduced(tables, word))
        throw Error(errc::non_reduced_word, "chamber-chain test requires a reduced word");
    const int r = tables.rank();
    const size_t l = word.size();
    const size_t nvars = l * r;       // x_k coordinate j at k*r + j
    const size_t slack = nvars;       // uniform margin variable, kept last

    ChamberChainResult res;
    if (l == 0) {
        res.feasible = true;
        res.slack = 1;
        return res;
    }

    std::set<Row> rows;
    auto add_row = [&](Row row) { rows.insert(normalize(std::move(row))); };

    auto mats = prefix_root_matrices(tables, word);
    for (size_t k = 0; k < l; ++k) {
        for (int i = 0; i < r; ++i) {
            // <x_k, w_k(alpha_i)> >= slack
            Row row;
            row.coeffs.assign(nvars + 1, Rat(0));
            for (int m = 0; m < r; ++m) row.coeffs[k * r + m] = mats[k][i][m];
            row.coeffs[slack] = -1;
            row.constant = 0;
            add_row(std::move(row));
        }
    }
    for (size_t k = 0; k + 1 < l; ++k) {
        for (int j = 0; j < r; ++j) {
            // x_k[j] - x_{k+1}[j] >= slack
            Row row;
            row.coeffs.assign(nvars + 1, Rat(0));
            row.coeffs[k * r + j] = 1;
            row.coeffs[(k + 1) * r + j] = -1;
            row.coeffs[slack] = -1;
            row.constant = 0;
            add_row(std::move(row));
        }
    }
    {
        Row cap;  // slack <= 1 keeps the final interval bounded
        cap.coeffs.assign(nvars + 1, Rat(0));
        cap.coeffs[slack] = -1;
        cap.constant = 1;
        add_row(std::move(cap));
    }

    // Eliminate the point coordinates back to front; the chain structure of
    // the difference rows keeps the fill-in local to neighbouring points.
    std::vector<EliminationStep> steps;
    for (size_t v = nvars; v-- > 0;) {
        EliminationStep step;
        step.var = v;
        std::set<Row> next;
        for (const Row& row : rows) {
            if (row.coeffs[v] > 0)
                step.lowers.push_back(row);
            else if (row.coeffs[v] < 0)
                step.uppers.push_back(row);
            else
                next.insert(row);
        }
        for (const Row& lo : step.lowers)
            for (const Row& up : step.uppers)
                next.insert(normalize(combine(lo, up, v)));
        rows = std::move(next);
        steps.push_back(std::move(step));
    }

    // Remaining rows involve only the slack, with negative coefficient.
    Rat best = 1;
    for (const Row& row : rows) {
        const Rat& c = row.coeffs[slack];
        if (c == 0) {
            if (row.constant < 0) return res;  // contradiction without slack
            continue;
        }
        if (c > 0) throw Error(errc::internal, "slack acquired a lower bound");
        Rat bound = row.constant / -c;
        best = std::min(best, bound);
    }
    if (best <= 0) return res;

    res.feasible = true;
    res.slack = best;

    // Back-substitution in reverse elimination order.
    QVec assign(nvars + 1, Rat(0));
    assign[slack] = best;
    for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
        auto evaluate = [&](const Row& row) {
            Rat v = row.constant;
            for (size_t j = 0; j < row.coeffs.size(); ++j)
                if (j != it->var && row.coeffs[j] != 0) v += row.coeffs[j] * assign[j];
            return v;
        };
        bool has_lo = false, has_hi = false;
        Rat lo = 0, hi = 0;
        for (const Row& row : it->lowers) {
            Rat b = -evaluate(row) / row.coeffs[it->var];
            if (!has_lo || b > lo) lo = b, has_lo = true;
        }
        for (const Row& row : it->uppers) {
            Rat b = evaluate(row) / -row.coeffs[it->var];
            if (!has_hi || b < hi) hi = b, has_hi = true;
        }
        Rat value;
        if (has_lo && has_hi) {
            if (lo > hi) throw Error(errc::internal, "elimination produced an empty interval");
            value = (lo + hi) / 2;
        } else if (has_lo) {
            value = lo + 1;
        } else if (has_hi) {
            value = hi - 1;
        } else {
            value = 0;
        }
        assign[it->var] = value;
    }

    for (size_t k = 0; k < l; ++k)
        res.witnesses.emplace_back(assign.begin() + k * r, assign.begin() + (k + 1) * r);

    // Safety: the witnesses must satisfy every original constraint strictly.
    for (size_t k = 0; k < l; ++k)
        for (int i = 0; i < r; ++i) {
            Rat v = 0;
            for (int m = 0; m < r; ++m) v += Rat(mats[k][i][m]) * res.witnesses[k][m];
            if (v <= 0) throw Error(errc::internal, "witness escaped its chamber");
        }
    for (size_t k = 0; k + 1 < l; ++k)
        for (int j = 0; j < r; ++j)
            if (res.witnesses[k][j] <= res.witnesses[k + 1][j])
                throw Error(errc::internal, "witness differences left the dominant cone");
    return res;
}

LineWordResult chamber_word_from_line(const RootTables& tables, const QVec& x, const QVec& y) {
    const int r = tables.rank();
    if (static_cast<int>(x.size()) != r || static_cast<int>(y.size()) != r)
        throw Error(errc::bad_input, "line endpoints have the wrong dimension");
    for (int j = 0; j < r; ++j)
        if (x[j] <= 0 || y[j] <= 0)
            throw Error(errc::bad_input, "line endpoints must be strictly dominant");

    // Crossing time of the wall of beta along t -> (1-t)x - t y.
    std::map<Rat, int> crossings;  // time -> positive-root index
    for (int b = 0; b < tables.num_positive(); ++b) {
        const IVec& c = tables.positive_root_coeffs[b];
        Rat a = 0, bb = 0;
        for (int m = 0; m < r; ++m) {
            a += Rat(c[m]) * x[m];
            bb += Rat(c[m]) * y[m];
        }
        Rat t = a / (a + bb);
        if (!crossings.emplace(t, b).second)
            throw Error(errc::degenerate_line,
                        "two walls are crossed at the same instant; perturb the endpoints");
    }

    LineWordResult res;
    std::vector<Rat> times;
    for (auto& [t, b] : crossings) {
        WeylWord inv(res.word.rbegin(), res.word.rend());
        Weight gamma = weyl_act(tables, inv, tables.positive_roots[b]);
        int color = -1;
        for (int i = 0; i < r; ++i)
            if (qvec_cmp(gamma, tables.simple_root(i)) == 0) { color = i; break; }
        if (color < 0)
            throw Error(errc::internal, "wall crossing did not match a simple reflection");
        res.word.push_back(color);
        times.push_back(t);
    }

    for (size_t k = 0; k < times.size(); ++k) {
        Rat next = (k + 1 < times.size()) ? times[k + 1] : Rat(1);
        Rat t = (times[k] + next) / 2;
        QVec point(r);
        for (int j = 0; j < r; ++j) point[j] = (1 - t) * x[j] - t * y[j];
        res.witnesses.push_back(std::move(point));
    }
    return res;
}

std::vector<std::vector<Weight>> lemma_condA_witness_scan(const RootTables& tables,
                                                          const WeylWord& word,
                                                          long bound) {
    if (!is_reduced(tables, word))
        throw Error(errc::non_reduced_word, "witness scan requires a reduced word");
    if (bound < 0) throw Error(errc::bad_input, "bound must be nonnegative");
    const int r = tables.rank();
    const size_t l = word.size();
    auto mats = prefix_root_matrices(tables, word);

    // Per-level maximal decrease of each partial-sum coordinate, used to
    // prune partial sums that can no longer return to zero.
    std::vector<IVec> max_drop(l, IVec(r, 0));
    for (size_t k = 0; k < l; ++k)
        for (int m = 0; m < r; ++m) {
            long d = 0;
            for (int j = 0; j < r; ++j) d += std::max(0L, mats[k][j][m]) * bound;
            max_drop[k][m] = d;
        }
    std::vector<IVec> future_drop(l + 1, IVec(r, 0));
    for (size_t k = l; k-- > 0;)
        for (int m = 0; m < r; ++m) future_drop[k][m] = future_drop[k + 1][m] + max_drop[k][m];


    std::vector<std::vector<Weight>> found;
    std::vector<IVec> tuple_rc(l);
    IVec mu(r, 0);

    // Memoize states whose subtree is known to contain no completion.
    std::set<std::pair<size_t, IVec>> dead;

    auto to_weight = [&](const IVec& rc) {
        Weight w(r, Rat(0));
        for (int m = 0; m < r; ++m)
            if (rc[m] != 0) w = qvec_add(w, qvec_scale(Rat(rc[m]), tables.simple_root(m)));
        return w;
    };

    std::function<bool(size_t)> dfs = [&](size_t k) -> bool {
        if (k == l) {
            if (std::all_of(mu.begin(), mu.end(), [](long v) { return v == 0; })) {
                std::vector<Weight> tup;
                for (const IVec& rc : tuple_rc) tup.push_back(to_weight(rc));
                found.push_back(std::move(tup));
                return true;
            }
            return false;
        }
        if (dead.count({k, mu})) return false;
        for (int m = 0; m < r; ++m)
            if (mu[m] > future_drop[k][m]) {
                dead.insert({k, mu});
                return false;
            }
        bool any = false;
        IVec c(r, 0);
        while (true) {
            // nu_k = -W_k c in root coordinates
            IVec nu(r, 0);
            for (int m = 0; m < r; ++m) {
                long v = 0;
                for (int j = 0; j < r; ++j) v -= mats[k][j][m] * c[j];
                nu[m] = v;
            }
            IVec mu_next(r);
            bool ok = true;
            for (int m = 0; m < r; ++m) {
                mu_next[m] = mu[m] + nu[m];
                if (mu_next[m] < 0) { ok = false; break; }
            }
            if (ok) {
                IVec saved = mu;
                mu = mu_next;
                tuple_rc[k] = nu;
                if (dfs(k + 1)) any = true;
                mu = saved;
            }
            // odometer over c in {0..bound}^r
            int pos = 0;
            while (pos < r && c[pos] == bound) c[pos++] = 0;
            if (pos == r) break;
            ++c[pos];
        }
        if (!any) dead.insert({k, mu});
        return any;
    };
    dfs(0);
    return found;
}

}  // namespace satake
