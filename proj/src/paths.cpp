#include "satake/paths.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>

namespace satake {

namespace {

// Is b a positive multiple of a?  Both nonzero.
bool positively_proportional(const QVec& a, const QVec& b) {
    size_t n = a.size();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (a[i] * b[j] != a[j] * b[i]) return false;
    for (size_t i = 0; i < n; ++i)
        if (a[i] != 0) return sgn(a[i]) == sgn(b[i]);
    return false;  // a == 0, caller excludes this
}

std::vector<QVec> canonical_displacements(std::vector<QVec> in) {
    std::vector<QVec> out;
    for (auto& d : in) {
        if (qvec_is_zero(d)) continue;
        if (!out.empty() && positively_proportional(out.back(), d))
            out.back() = qvec_add(out.back(), d);
        else
            out.push_back(std::move(d));
    }
    return out;
}

}  // namespace

Path Path::from_segments(const std::vector<std::pair<QVec, Rat>>& segments) {
    std::vector<QVec> disp;
    size_t dim = 0;
    for (const auto& [dir, dur] : segments) {
        if (dur <= 0) throw Error(errc::bad_input, "segment duration must be positive");
        if (dim == 0) dim = dir.size();
        if (dir.size() != dim || dim == 0)
            throw Error(errc::bad_input, "segment directions must share a positive dimension");
        disp.push_back(qvec_scale(dur, dir));
    }
    return from_displacements(std::move(disp));
}

Path Path::from_displacements(std::vector<QVec> displacements) {
    Path p;
    p.disp_ = canonical_displacements(std::move(displacements));
    return p;
}

std::vector<std::pair<QVec, Rat>> Path::segments() const {
    std::vector<std::pair<QVec, Rat>> out;
    int m = num_segments();
    for (const auto& d : disp_)
        out.emplace_back(qvec_scale(Rat(m), d), Rat(1, m));
    return out;
}

Weight Path::endpoint() const {
    return point_at_breakpoint(num_segments());
}

QVec Path::point_at_breakpoint(int k) const {
    if (disp_.empty()) return QVec{};
    QVec p(disp_[0].size(), Rat(0));
    for (int j = 0; j < k; ++j) p = qvec_add(p, disp_[j]);
    return p;
}

bool Path::operator==(const Path& o) const {
    if (disp_.size() != o.disp_.size()) return false;
    for (size_t k = 0; k < disp_.size(); ++k)
        if (qvec_cmp(disp_[k], o.disp_[k]) != 0) return false;
    return true;
}

bool Path::operator<(const Path& o) const {
    if (disp_.size() != o.disp_.size()) return disp_.size() < o.disp_.size();
    for (size_t k = 0; k < disp_.size(); ++k) {
        int c = qvec_cmp(disp_[k], o.disp_[k]);
        if (c != 0) return c < 0;
    }
    return false;
}

Path straight_path(const Weight& lam) {
    return Path::from_displacements({lam});
}

Path concatenate(const Path& p1, const Path& p2) {
    std::vector<QVec> disp = p1.displacements();
    if (!p1.displacements().empty() && !p2.displacements().empty() &&
        p1.displacements()[0].size() != p2.displacements()[0].size())
        throw Error(errc::bad_input, "concatenating paths of different ranks");
    for (const auto& d : p2.displacements()) disp.push_back(d);
    return Path::from_displacements(std::move(disp));
}

namespace {

void validate_color(const Path& p, int i, const RootTables& tables) {
    if (i < 0 || i >= tables.rank()) throw Error(errc::bad_input, "color index out of range");
    if (p.num_segments() > 0 &&
        static_cast<int>(p.displacements()[0].size()) != tables.rank())
        throw Error(errc::bad_input, "path rank does not match root datum");
}

// Breakpoint values of t |-> <alpha_i^vee, p(t)>: b[0..m], b[0] = 0.
// Pairing a fundamental-weight coordinate vector with alpha_i^vee reads off
// coordinate i.
QVec breakpoint_values(const Path& p, int i) {
    QVec b;
    b.push_back(Rat(0));
    Rat acc = 0;
    for (const auto& d : p.displacements()) {
        acc += d[i];
        b.push_back(acc);
    }
    return b;
}

// Values of the plateaux of a piecewise-linear function given by breakpoint
// values, keeping only local absolute minima (endpoints included).
std::vector<Rat> local_absolute_minima(const QVec& b) {
    QVec v;  // collapse consecutive equal values
    for (const auto& x : b)
        if (v.empty() || v.back() != x) v.push_back(x);
    std::vector<Rat> mins;
    for (size_t k = 0; k < v.size(); ++k) {
        bool left_ok = (k == 0) || v[k - 1] > v[k];
        bool right_ok = (k + 1 == v.size()) || v[k + 1] > v[k];
        if (left_ok && right_ok) mins.push_back(v[k]);
    }
    return mins;
}

struct Cut {
    Rat a;  // start of the reflected stretch
    Rat b;  // end of the reflected stretch
};

// Rebuild the path with displacements reflected by s_i on (cut.a, cut.b).
// The final stretch keeps its displacements; the caller fixes the endpoint
// shift implicitly (reflection accounts for it).
Path apply_cut(const Path& p, int i, const Cut& cut, const RootTables& tables) {
    const int m = p.num_segments();
    const Weight alpha = tables.simple_root(i);
    std::vector<QVec> out;
    for (int k = 0; k < m; ++k) {
        Rat t0(k, m), t1(k + 1, m);
        // overlap of [t0,t1] with the three zones
        auto piece = [&](const Rat& lo, const Rat& hi, bool reflected) {
            if (hi <= lo) return;
            QVec d = qvec_scale((hi - lo) / (t1 - t0), p.displacements()[k]);
            if (reflected) d = qvec_sub(d, qvec_scale(d[i], alpha));
            out.push_back(std::move(d));
        };
        piece(t0, std::min(t1, cut.a), false);
        piece(std::max(t0, cut.a), std::min(t1, cut.b), true);
        piece(std::max(t0, cut.b), t1, false);
    }
    return Path::from_displacements(std::move(out));
}

}  // namespace

StringStats path_stats(const Path& p, int i, const RootTables& tables) {
    validate_color(p, i, tables);
    QVec b = breakpoint_values(p, i);
    const int m = p.num_segments();
    StringStats st;
    st.min_value = *std::min_element(b.begin(), b.end());
    st.endpoint_value = b.back();
    int first = -1, last = -1;
    for (int k = 0; k <= m; ++k) {
        if (b[k] == st.min_value) {
            if (first < 0) first = k;
            last = k;
        }
    }
    st.first_min_time = m == 0 ? Rat(0) : Rat(first, m);
    st.last_min_time = m == 0 ? Rat(0) : Rat(last, m);
    st.integral_min = is_integer(st.min_value) && is_integer(st.endpoint_value);
    if (st.integral_min) {
        st.epsilon = -to_long(st.min_value);
        st.phi = to_long(st.endpoint_value - st.min_value);
    }
    return st;
}

std::optional<Path> e_op(const Path& p, int i, const RootTables& tables) {
    validate_color(p, i, tables);
    QVec b = breakpoint_values(p, i);
    const int m = p.num_segments();
    Rat minv = *std::min_element(b.begin(), b.end());
    if (!is_integer(minv))
        throw Error(errc::non_integral_path,
                    "raising operator hit a non-integer minimum: " + rat_to_string(minv));
    if (minv >= 0) return std::nullopt;  // epsilon = 0
    const Rat target = minv + 1;

    // First maximal stretch at the minimum: breakpoints [u, v].
    int u = 0;
    while (b[u] != minv) ++u;
    int v = u;
    while (v < m && b[v + 1] == minv) ++v;

    // Last time <= u/m at which the value is minv+1.
    int j = u - 1;
    while (b[j] < target) --j;  // b[0] = 0 >= target, so this terminates
    Cut cut;
    cut.b = Rat(v, m);
    cut.a = (Rat(j) + (b[j] - target) / (b[j] - b[j + 1])) / m;

    Path res = apply_cut(p, i, cut, tables);
    if (qvec_cmp(res.endpoint(), qvec_add(p.endpoint(), tables.simple_root(i))) != 0)
        throw Error(errc::internal, "raising operator produced a wrong weight shift");
    return res;
}

std::optional<Path> f_op(const Path& p, int i, const RootTables& tables) {
    validate_color(p, i, tables);
    QVec b = breakpoint_values(p, i);
    const int m = p.num_segments();
    Rat minv = *std::min_element(b.begin(), b.end());
    if (!is_integer(minv))
        throw Error(errc::non_integral_path,
                    "lowering operator hit a non-integer minimum: " + rat_to_string(minv));
    if (b[m] - minv < 1) return std::nullopt;  // phi = 0
    const Rat target = minv + 1;

    // Last maximal stretch at the minimum: breakpoints [u, v].
    int v = m;
    while (b[v] != minv) --v;
    int u = v;
    while (u > 0 && b[u - 1] == minv) --u;

    // First time >= v/m at which the value is minv+1.
    int j = v;
    while (b[j + 1] < target) ++j;  // b[m] >= target, so this terminates
    Cut cut;
    cut.a = Rat(u, m);
    cut.b = (Rat(j) + (target - b[j]) / (b[j + 1] - b[j])) / m;

    Path res = apply_cut(p, i, cut, tables);
    if (qvec_cmp(res.endpoint(), qvec_sub(p.endpoint(), tables.simple_root(i))) != 0)
        throw Error(errc::internal, "lowering operator produced a wrong weight shift");
    return res;
}

namespace {

bool all_minima_integral(const Path& p, const RootTables& tables) {
    for (int i = 0; i < tables.rank(); ++i) {
        QVec b = breakpoint_values(p, i);
        for (const Rat& v : local_absolute_minima(b))
            if (!is_integer(v)) return false;
    }
    return true;
}

// Monotone sufficient condition: every coroot pairing of every displacement
// is nonnegative, so each value function is weakly increasing from 0.
bool monotone_dominant(const Path& p, const RootTables& tables) {
    for (const auto& d : p.displacements())
        for (int i = 0; i < tables.rank(); ++i)
            if (d[i] < 0) return false;
    return true;
}

// Does { (n - c) / d : n in Z } have a common point across coordinates,
// i.e. does the affine line { base + t * dir } meet the lattice?
bool line_meets_lattice(const QVec& base, const QVec& dir) {
    // Maintain the intersection as an arithmetic progression offset + step*Z
    // (step > 0), or a single point, over exact rationals.
    bool any_constraint = false;
    Rat offset = 0, step = 0;  // step 0 until the first constrained coordinate
    for (size_t j = 0; j < base.size(); ++j) {
        if (dir[j] == 0) {
            if (!is_integer(base[j])) return false;
            continue;
        }
        Rat a = -base[j] / dir[j];            // one solution for coordinate j
        Rat q = 1 / abs(Rat(dir[j]));         // its progression step
        if (!any_constraint) {
            offset = a;
            step = q;
            any_constraint = true;
            continue;
        }
        // Intersect offset + step*Z with a + q*Z: clear denominators.
        Int v = step.get_den() * q.get_den();
        Rat diff = a - offset;
        Int P = step.get_num() * q.get_den();
        Int Q = q.get_num() * step.get_den();
        Rat scaled = diff * Rat(v);
        if (!is_integer(scaled)) {
            // offsets differ by a non-multiple of 1/v: solvable only if
            // gcd-lattice catches it, and that lattice is (g/v)Z with g integral,
            // so a non-integer scaled difference is unreachable.
            return false;
        }
        Int B = scaled.get_num();
        Int g, s, tt;
        mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), tt.get_mpz_t(), P.get_mpz_t(), Q.get_mpz_t());
        if (!mpz_divisible_p(B.get_mpz_t(), g.get_mpz_t())) return false;
        // offset' = offset + step * s * (B/g); step' = lcm(P,Q)/v
        Int factor = B / g;
        offset = offset + step * Rat(s * factor);
        Int l = P / g * Q;
        if (l < 0) l = -l;
        step = Rat(l) / Rat(v);
    }
    return true;
}

// Condition on dominant rational concatenations: every segment's affine line
// meets the coweight lattice (hence, being rational, infinitely many points).
bool dominant_with_lattice_lines(const Path& p) {
    const int m = p.num_segments();
    if (m == 0) return true;
    // dominance at every breakpoint suffices for piecewise-linear paths
    for (int k = 0; k <= m; ++k)
        if (!is_dominant(p.point_at_breakpoint(k))) return false;
    for (int k = 0; k < m; ++k)
        if (!line_meets_lattice(p.point_at_breakpoint(k), p.displacements()[k])) return false;
    return true;
}

}  // namespace

size_t orbit_budget_default() {
    if (const char* env = std::getenv("SATAKE_ORBIT_BUDGET")) {
        char* end = nullptr;
        unsigned long v = std::strtoul(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return 200000;
}

Integrality is_integral(const Path& p, const RootTables& tables, size_t budget) {
    if (p.num_segments() == 0) return Integrality::yes;
    if (!is_integral_weight(p.endpoint())) return Integrality::no;
    if (monotone_dominant(p, tables)) return Integrality::yes;
    if (dominant_with_lattice_lines(p)) return Integrality::yes;

    // Orbit exploration.  A member is expanded only after its own minima all
    // check out, which keeps the three-part-cut operators faithful on it.
    std::set<Path> seen{p};
    std::deque<Path> queue{p};
    while (!queue.empty()) {
        Path cur = queue.front();
        queue.pop_front();
        if (!all_minima_integral(cur, tables)) return Integrality::no;
        for (int i = 0; i < tables.rank(); ++i) {
            for (int dir = 0; dir < 2; ++dir) {
                std::optional<Path> next =
                    dir == 0 ? e_op(cur, i, tables) : f_op(cur, i, tables);
                if (next && seen.insert(*next).second) {
                    if (seen.size() > budget) return Integrality::budget_exceeded;
                    queue.push_back(std::move(*next));
                }
            }
        }
    }
    return Integrality::yes;
}

std::set<Path> crystal_closure(const Path& p, const RootTables& tables, size_t budget) {
    std::set<Path> seen{p};
    std::deque<Path> queue{p};
    while (!queue.empty()) {
        Path cur = queue.front();
        queue.pop_front();
        for (int i = 0; i < tables.rank(); ++i) {
            for (int dir = 0; dir < 2; ++dir) {
                std::optional<Path> next =
                    dir == 0 ? e_op(cur, i, tables) : f_op(cur, i, tables);
                if (next && seen.insert(*next).second) {
                    if (seen.size() > budget)
                        throw Error(errc::budget_exceeded, "operator closure exceeded the path budget");
                    queue.push_back(std::move(*next));
                }
            }
        }
    }
    return seen;
}

Path dominant_in_orbit(const Path& p, const RootTables& tables) {
    Path cur = p;
    size_t guard = orbit_budget_default();
    for (size_t steps = 0; steps <= guard; ++steps) {
        int raised = -1;
        for (int i = 0; i < tables.rank(); ++i) {
            if (auto up = e_op(cur, i, tables)) {
                cur = std::move(*up);
                raised = i;
                break;
            }
        }
        if (raised < 0) return cur;
    }
    throw Error(errc::budget_exceeded, "raising to the dominant path did not terminate");
}

}  // namespace satake
