#include "satake/roots.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace satake {

// ---------------------------------------------------------------- rationals

int qvec_cmp(const QVec& a, const QVec& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = 0; i < a.size(); ++i) {
        int c = cmp(a[i], b[i]);
        if (c != 0) return c;
    }
    return 0;
}

QVec qvec_add(const QVec& a, const QVec& b) {
    QVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

QVec qvec_sub(const QVec& a, const QVec& b) {
    QVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

QVec qvec_scale(const Rat& c, const QVec& a) {
    QVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

bool qvec_is_zero(const QVec& a) {
    return std::all_of(a.begin(), a.end(), [](const Rat& x) { return x == 0; });
}

Rat ivec_pair(const IVec& f, const QVec& v) {
    if (f.size() != v.size()) throw Error(errc::bad_input, "pairing length mismatch");
    Rat s = 0;
    for (size_t i = 0; i < f.size(); ++i)
        if (f[i] != 0) s += Rat(f[i]) * v[i];
    return s;
}

// ------------------------------------------------------------- CartanDatum

void CartanDatum::validate() const {
    if (rank <= 0) throw Error(errc::bad_input, "rank must be positive");
    if (static_cast<int>(cartan.size()) != rank)
        throw Error(errc::bad_input, "Cartan matrix has wrong row count");
    for (int i = 0; i < rank; ++i) {
        if (static_cast<int>(cartan[i].size()) != rank)
            throw Error(errc::bad_input, "Cartan matrix is not square");
        if (cartan[i][i] != 2)
            throw Error(errc::bad_input, "Cartan diagonal entry is not 2");
        for (int j = 0; j < rank; ++j) {
            if (i != j && cartan[i][j] > 0)
                throw Error(errc::bad_input, "positive off-diagonal Cartan entry");
            if (i != j && ((cartan[i][j] == 0) != (cartan[j][i] == 0)))
                throw Error(errc::bad_input, "Cartan zero pattern is not symmetric");
        }
    }
}

CartanDatum named_cartan(const std::string& name) {
    CartanDatum d;
    auto chain = [](int n) {  // type A_n
        std::vector<std::vector<long>> c(n, std::vector<long>(n, 0));
        for (int i = 0; i < n; ++i) {
            c[i][i] = 2;
            if (i + 1 < n) c[i][i + 1] = -1, c[i + 1][i] = -1;
        }
        return c;
    };
    if (name == "A1") {
        d.rank = 1;
        d.cartan = chain(1);
    } else if (name == "A2") {
        d.rank = 2;
        d.cartan = chain(2);
    } else if (name == "A3") {
        d.rank = 3;
        d.cartan = chain(3);
    } else if (name == "D4") {
        // Node 2 (1-based) is the trivalent one.
        d.rank = 4;
        d.cartan = {{2, -1, 0, 0}, {-1, 2, -1, -1}, {0, -1, 2, 0}, {0, -1, 0, 2}};
    } else {
        throw Error(errc::bad_input, "unknown named type: " + name);
    }
    for (int i = 1; i <= d.rank; ++i) d.labels.push_back(std::to_string(i));
    d.validate();
    return d;
}

// -------------------------------------------------------------- RootTables

Weight RootTables::simple_root(int i) const {
    Weight w(rank());
    for (int j = 0; j < rank(); ++j) w[j] = datum.cartan[j][i];
    return w;
}

Weight RootTables::fundamental_weight(int i) const {
    Weight w(rank(), Rat(0));
    w[i] = 1;
    return w;
}

Rat RootTables::pairing(int coroot_index, const Weight& mu) const {
    return ivec_pair(positive_coroots.at(coroot_index), mu);
}

Weight RootTables::reflect(int i, const Weight& mu) const {
    Rat c = mu[i];
    if (c == 0) return mu;
    Weight r = mu;
    for (int j = 0; j < rank(); ++j) r[j] -= c * Rat(datum.cartan[j][i]);
    return r;
}

std::optional<IVec> RootTables::root_coordinates(const Weight& mu) const {
    // Solve C * c = mu over the rationals (C = Cartan matrix, columns =
    // simple roots in fw coordinates), then demand integrality.
    int n = rank();
    std::vector<QVec> m(n, QVec(n + 1));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m[i][j] = datum.cartan[i][j];
        m[i][n] = mu[i];
    }
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (m[r][col] != 0) { piv = r; break; }
        if (piv < 0) return std::nullopt;  // cannot happen: C invertible
        std::swap(m[col], m[piv]);
        Rat inv = 1 / m[col][col];
        for (int j = col; j <= n; ++j) m[col][j] *= inv;
        for (int r = 0; r < n; ++r) {
            if (r == col || m[r][col] == 0) continue;
            Rat f = m[r][col];
            for (int j = col; j <= n; ++j) m[r][j] -= f * m[col][j];
        }
    }
    IVec c(n);
    for (int i = 0; i < n; ++i) {
        if (!is_integer(m[i][n])) return std::nullopt;
        c[i] = to_long(m[i][n]);
    }
    return c;
}

int RootTables::positive_root_index(const Weight& beta) const {
    if (root_index_.empty()) {
        for (int k = 0; k < num_positive(); ++k) root_index_[positive_roots[k]] = k;
    }
    auto it = root_index_.find(beta);
    return it == root_index_.end() ? -1 : it->second;
}

RootTables build_root_system(const CartanDatum& datum) {
    datum.validate();
    const int n = datum.rank;
    constexpr size_t kClosureBound = 4096;  // |Phi+| of E8 is 120; anything near this is not finite type

    RootTables t;
    t.datum = datum;

    // Closure of the simple (root, coroot) pairs under all simple reflections.
    // Roots in fw coordinates, coroots as pairing functionals.
    struct Entry { Weight root; IVec coroot; };
    std::map<Weight, IVec> seen;
    std::vector<Entry> queue;
    for (int i = 0; i < n; ++i) {
        Weight a(n);
        for (int j = 0; j < n; ++j) a[j] = datum.cartan[j][i];
        IVec av(n, 0);
        av[i] = 1;
        seen[a] = av;
        queue.push_back({a, av});
    }
    for (size_t head = 0; head < queue.size(); ++head) {
        Entry e = queue[head];
        for (int i = 0; i < n; ++i) {
            // s_i on the root (fw coords) and on the coroot (functional).
            Rat ci = e.root[i];
            Weight r = e.root;
            for (int j = 0; j < n; ++j) r[j] -= ci * Rat(datum.cartan[j][i]);
            long pair_with_alpha_i = 0;
            for (int j = 0; j < n; ++j) pair_with_alpha_i += e.coroot[j] * datum.cartan[j][i];
            IVec cv = e.coroot;
            cv[i] -= pair_with_alpha_i;
            if (!seen.count(r)) {
                seen[r] = cv;
                queue.push_back({r, cv});
                if (seen.size() > kClosureBound)
                    throw Error(errc::not_finite_type,
                                "reflection closure exceeded bound; Cartan matrix is not of finite type");
            }
        }
    }

    // Keep the positive half, ordered by height then lex on root coordinates.
    struct Pos { IVec coeffs; Weight root; IVec coroot; };
    std::vector<Pos> pos;
    for (auto& [root, coroot] : seen) {
        // root coordinates over simple roots
        RootTables probe;
        probe.datum = datum;
        auto c = probe.root_coordinates(root);
        if (!c) throw Error(errc::internal, "root with non-integer simple-root coordinates");
        bool nonneg = std::all_of(c->begin(), c->end(), [](long x) { return x >= 0; });
        bool nonpos = std::all_of(c->begin(), c->end(), [](long x) { return x <= 0; });
        if (!nonneg && !nonpos)
            throw Error(errc::internal, "root neither positive nor negative");
        if (nonneg) pos.push_back({*c, root, coroot});
    }
    std::sort(pos.begin(), pos.end(), [](const Pos& a, const Pos& b) {
        long ha = std::accumulate(a.coeffs.begin(), a.coeffs.end(), 0L);
        long hb = std::accumulate(b.coeffs.begin(), b.coeffs.end(), 0L);
        if (ha != hb) return ha < hb;
        return a.coeffs < b.coeffs;
    });
    for (auto& p : pos) {
        t.positive_roots.push_back(p.root);
        t.positive_coroots.push_back(p.coroot);
        t.positive_root_coeffs.push_back(p.coeffs);
    }
    return t;
}

Rat rho_eval(const RootTables& tables, const Weight& mu, const std::vector<int>& J) {
    std::vector<bool> in_J(tables.rank(), false);
    for (int j : J) in_J.at(j) = true;
    Rat sum = 0;
    for (int k = 0; k < tables.num_positive(); ++k) {
        const IVec& cv = tables.positive_coroots[k];
        bool supported = true;
        for (int j = 0; j < tables.rank(); ++j)
            if (cv[j] != 0 && !in_J[j]) { supported = false; break; }
        if (supported) sum += ivec_pair(cv, mu);
    }
    return sum / 2;
}

bool dominance_leq(const RootTables& tables, const Weight& mu, const Weight& lam,
                   const std::vector<int>& J) {
    auto c = tables.root_coordinates(qvec_sub(lam, mu));
    if (!c) return false;
    std::vector<bool> in_J(tables.rank(), false);
    for (int j : J) in_J.at(j) = true;
    for (int j = 0; j < tables.rank(); ++j) {
        if ((*c)[j] < 0) return false;
        if ((*c)[j] > 0 && !in_J[j]) return false;
    }
    return true;
}

Weight weyl_act(const RootTables& tables, const WeylWord& word, const Weight& mu) {
    Weight r = mu;
    for (auto it = word.rbegin(); it != word.rend(); ++it) r = tables.reflect(*it, r);
    return r;
}

int weyl_length(const RootTables& tables, const WeylWord& word) {
    // Number of positive roots sent to negative roots by the product.
    int count = 0;
    for (int k = 0; k < tables.num_positive(); ++k) {
        Weight b = weyl_act(tables, word, tables.positive_roots[k]);
        if (tables.positive_root_index(b) < 0) ++count;
    }
    return count;
}

bool is_reduced(const RootTables& tables, const WeylWord& word) {
    for (int i : word)
        if (i < 0 || i >= tables.rank()) throw Error(errc::bad_input, "word index out of range");
    return weyl_length(tables, word) == static_cast<int>(word.size());
}

WeylWord lexmin_reduced_word(const RootTables& tables, const WeylWord& word) {
    // Greedy smallest left descent: i is a left descent of w iff
    // w^{-1}(alpha_i) is negative.
    WeylWord inv(word.rbegin(), word.rend());  // word for w^{-1}
    WeylWord out;
    WeylWord current_inv = inv;
    int guard = tables.num_positive() + 1;
    while (static_cast<int>(out.size()) <= guard) {
        int descent = -1;
        for (int i = 0; i < tables.rank(); ++i) {
            Weight b = weyl_act(tables, current_inv, tables.simple_root(i));
            if (tables.positive_root_index(b) < 0) { descent = i; break; }
        }
        if (descent < 0) break;  // reached the identity
        out.push_back(descent);
        // w <- s_i w, hence w^{-1} <- w^{-1} s_i.
        current_inv.push_back(descent);
    }
    if (static_cast<int>(out.size()) > guard)
        throw Error(errc::internal, "descent search failed to terminate");
    return out;
}

WeylWord longest_word(const RootTables& tables) {
    // Build any reduced word for w0 by repeatedly reflecting a strictly
    // dominant weight down to its antidominant image, then normalize.
    Weight mu(tables.rank(), Rat(1));  // rho in fw coordinates
    WeylWord w;
    bool moved = true;
    while (moved) {
        moved = false;
        for (int i = 0; i < tables.rank(); ++i) {
            if (mu[i] > 0) {
                mu = tables.reflect(i, mu);
                w.push_back(i);
                moved = true;
                break;
            }
        }
    }
    // w (read left to right) satisfies s_{i_k}...s_{i_1} rho = antidominant;
    // the product in our convention is read in reverse.
    std::reverse(w.begin(), w.end());
    return lexmin_reduced_word(tables, w);
}

bool is_dominant(const Weight& mu) {
    return std::all_of(mu.begin(), mu.end(), [](const Rat& c) { return c >= 0; });
}

bool is_integral_weight(const Weight& mu) {
    return std::all_of(mu.begin(), mu.end(), [](const Rat& c) { return is_integer(c); });
}

Weight dual_highest_weight(const RootTables& tables, const Weight& mu) {
    Weight w0mu = weyl_act(tables, longest_word(tables), mu);
    return qvec_scale(Rat(-1), w0mu);
}

// ------------------------------------------------------ weight text format

Weight weight_from_string(const std::string& s, int rank) {
    // Accepts sums of terms "c*wK", "wK", "-wK", plus "0".
    Weight w(rank, Rat(0));
    std::string compact;
    for (char ch : s)
        if (!isspace(static_cast<unsigned char>(ch))) compact.push_back(ch);
    if (compact.empty()) throw Error(errc::parse_error, "empty weight");
    if (compact == "0") return w;
    size_t pos = 0;
    while (pos < compact.size()) {
        int sign = 1;
        if (compact[pos] == '+') ++pos;
        else if (compact[pos] == '-') { sign = -1; ++pos; }
        // optional coefficient
        size_t start = pos;
        while (pos < compact.size() && (isdigit(static_cast<unsigned char>(compact[pos])) || compact[pos] == '/'))
            ++pos;
        Rat coeff = 1;
        if (pos > start) coeff = rat_from_string(compact.substr(start, pos - start));
        if (pos < compact.size() && compact[pos] == '*') ++pos;
        if (pos >= compact.size() || compact[pos] != 'w')
            throw Error(errc::parse_error, "expected 'w<k>' in weight: " + s);
        ++pos;
        start = pos;
        while (pos < compact.size() && isdigit(static_cast<unsigned char>(compact[pos]))) ++pos;
        if (pos == start) throw Error(errc::parse_error, "missing index after 'w' in: " + s);
        int idx = std::stoi(compact.substr(start, pos - start));
        if (idx < 1 || idx > rank)
            throw Error(errc::parse_error, "fundamental-weight index out of range in: " + s);
        w[idx - 1] += Rat(sign) * coeff;
    }
    return w;
}

std::string weight_to_string(const Weight& mu) {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < mu.size(); ++i) {
        if (mu[i] == 0) continue;
        Rat c = mu[i];
        if (first) {
            if (c < 0) { os << "-"; c = -c; }
        } else {
            os << (c < 0 ? "-" : "+");
            if (c < 0) c = -c;
        }
        if (c != 1) os << rat_to_string(c) << "*";
        os << "w" << (i + 1);
        first = false;
    }
    if (first) return "0";
    return os.str();
}

}  // namespace satake
