#include "satake/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "satake/error.hpp"

namespace satake {

int PolyRing::index_of(const std::string& name) const {
    for (size_t i = 0; i < vars.size(); ++i)
        if (vars[i] == name) return static_cast<int>(i);
    return -1;
}

PolyRingPtr make_ring(std::vector<std::string> vars) {
    for (size_t i = 0; i < vars.size(); ++i)
        for (size_t j = i + 1; j < vars.size(); ++j)
            if (vars[i] == vars[j]) throw Error(errc::bad_input, "duplicate ring variable");
    auto r = std::make_shared<PolyRing>();
    r->vars = std::move(vars);
    return r;
}

int mono_cmp(const Monomial& a, const Monomial& b, const MonoOrder& order) {
    if (a.size() != b.size()) throw Error(errc::mismatched_data, "monomials of different rings");
    const int n = static_cast<int>(a.size());
    int lo = 0;
    if (order.elim > 0) {
        long da = 0, db = 0;
        for (int i = 0; i < order.elim; ++i) {
            da += a[i];
            db += b[i];
        }
        if (da != db) return da < db ? -1 : 1;
        for (int i = order.elim - 1; i >= 0; --i)
            if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
        lo = order.elim;
    }
    if (order.kind == MonoOrder::lex) {
        for (int i = lo; i < n; ++i)
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        return 0;
    }
    long da = 0, db = 0;
    for (int i = lo; i < n; ++i) {
        da += a[i];
        db += b[i];
    }
    if (da != db) return da < db ? -1 : 1;
    for (int i = n - 1; i >= lo; --i)
        if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    return 0;
}

MPoly::MPoly(PolyRingPtr ring, const Rat& c) : ring_(std::move(ring)) {
    if (c != 0) terms_[Monomial(ring_->vars.size(), 0)] = c;
}

MPoly MPoly::variable(PolyRingPtr ring, int index) {
    if (index < 0 || index >= static_cast<int>(ring->vars.size()))
        throw Error(errc::bad_input, "variable index out of range");
    MPoly p(ring);
    Monomial m(ring->vars.size(), 0);
    m[index] = 1;
    p.terms_[m] = 1;
    return p;
}

bool MPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() != 1) return false;
    const Monomial& m = terms_.begin()->first;
    return std::all_of(m.begin(), m.end(), [](int e) { return e == 0; });
}

long MPoly::total_degree() const {
    long best = -1;
    for (const auto& [m, c] : terms_) {
        long d = 0;
        for (int e : m) d += e;
        best = std::max(best, d);
    }
    return best;
}

long MPoly::degree_in(int var) const {
    long best = 0;
    for (const auto& [m, c] : terms_) best = std::max(best, static_cast<long>(m.at(var)));
    return best;
}

void MPoly::check_same_ring(const MPoly& o) const {
    if (ring_ == o.ring_) return;
    if (!ring_ || !o.ring_ || ring_->vars != o.ring_->vars)
        throw Error(errc::mismatched_data, "polynomials of different rings");
}

const Monomial& MPoly::leading_monomial(const MonoOrder& order) const {
    if (terms_.empty()) throw Error(errc::bad_input, "zero polynomial has no leading term");
    const Monomial* best = nullptr;
    for (const auto& [m, c] : terms_)
        if (!best || mono_cmp(m, *best, order) > 0) best = &m;
    return *best;
}

const Rat& MPoly::leading_coeff(const MonoOrder& order) const {
    return terms_.at(leading_monomial(order));
}

MPoly MPoly::operator-() const { return scaled(Rat(-1)); }

MPoly& MPoly::operator+=(const MPoly& o) {
    check_same_ring(o);
    for (const auto& [m, c] : o.terms_) {
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_[m] = c;
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
    check_same_ring(o);
    for (const auto& [m, c] : o.terms_) {
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_[m] = -c;
        } else {
            it->second -= c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

MPoly MPoly::operator+(const MPoly& o) const {
    MPoly r = *this;
    r += o;
    return r;
}

MPoly MPoly::operator-(const MPoly& o) const {
    MPoly r = *this;
    r -= o;
    return r;
}

MPoly MPoly::operator*(const MPoly& o) const {
    check_same_ring(o);
    MPoly r(ring_);
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) {
            Monomial m = m1;
            for (size_t i = 0; i < m.size(); ++i) m[i] += m2[i];
            Rat& slot = r.terms_[m];
            slot += c1 * c2;
            if (slot == 0) r.terms_.erase(m);
        }
    return r;
}

bool MPoly::operator==(const MPoly& o) const {
    check_same_ring(o);
    return terms_ == o.terms_;
}

MPoly MPoly::scaled(const Rat& c) const {
    MPoly r(ring_);
    if (c == 0) return r;
    for (const auto& [m, v] : terms_) r.terms_[m] = v * c;
    return r;
}

MPoly MPoly::times_monomial(const Monomial& m, const Rat& c) const {
    MPoly r(ring_);
    if (c == 0) return r;
    for (const auto& [m1, v] : terms_) {
        Monomial mm = m1;
        for (size_t i = 0; i < mm.size(); ++i) mm[i] += m[i];
        r.terms_[mm] = v * c;
    }
    return r;
}

MPoly MPoly::pow(long e) const {
    if (e < 0) throw Error(errc::bad_input, "negative power");
    MPoly r(ring_, Rat(1));
    MPoly base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

MPoly MPoly::substituted(const PolyRingPtr& target, const std::vector<MPoly>& images) const {
    if (images.size() != ring_->vars.size())
        throw Error(errc::bad_input, "one image per variable required");
    MPoly out(target);
    for (const auto& [m, c] : terms_) {
        MPoly term(target, c);
        for (size_t i = 0; i < m.size(); ++i)
            for (int e = 0; e < m[i]; ++e) term = term * images[i];
        out += term;
    }
    return out;
}

void MPoly::set_coeff(const Monomial& m, const Rat& c) {
    if (m.size() != ring_->vars.size()) throw Error(errc::bad_input, "monomial length mismatch");
    if (c == 0)
        terms_.erase(m);
    else
        terms_[m] = c;
}

const Rat& MPoly::coeff(const Monomial& m) const {
    static const Rat zero(0);
    auto it = terms_.find(m);
    return it == terms_.end() ? zero : it->second;
}

std::string MPoly::to_string() const {
    if (terms_.empty()) return "0";
    // Display monomials descending by degrevlex for stable output.
    std::vector<const std::pair<const Monomial, Rat>*> order;
    for (const auto& t : terms_) order.push_back(&t);
    MonoOrder o;
    std::sort(order.begin(), order.end(),
              [&](auto* a, auto* b) { return mono_cmp(a->first, b->first, o) > 0; });
    std::ostringstream os;
    bool first = true;
    for (auto* t : order) {
        Rat c = t->second;
        if (!first) os << (c < 0 ? "-" : "+");
        else if (c < 0) os << "-";
        first = false;
        Rat ac = abs(c);
        bool mono_empty = true;
        for (int e : t->first)
            if (e > 0) mono_empty = false;
        if (ac != 1 || mono_empty) os << rat_to_string(ac);
        bool star = ac != 1 || mono_empty;
        for (size_t i = 0; i < t->first.size(); ++i) {
            int e = t->first[i];
            if (e == 0) continue;
            if (star) os << "*";
            os << ring_->vars[i];
            if (e > 1) os << "^" << e;
            star = true;
        }
    }
    return os.str();
}

namespace {

struct Parser {
    PolyRingPtr ring;
    const std::string& s;
    size_t pos = 0;

    void skip() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& why) {
        throw Error(errc::parse_error, why + " at offset " + std::to_string(pos));
    }

    MPoly expr() {
        MPoly acc = term();
        while (true) {
            skip();
            if (eat('+'))
                acc += term();
            else if (eat('-'))
                acc -= term();
            else
                return acc;
        }
    }

    MPoly term() {
        MPoly acc = factor();
        while (true) {
            skip();
            if (eat('*'))
                acc = acc * factor();
            else
                return acc;
        }
    }

    MPoly factor() {
        skip();
        if (eat('-')) return -factor();
        if (eat('+')) return factor();
        MPoly base = atom();
        skip();
        if (eat('^')) {
            skip();
            size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            if (start == pos) fail("exponent expected");
            return base.pow(std::stol(s.substr(start, pos - start)));
        }
        return base;
    }

    MPoly atom() {
        skip();
        if (eat('(')) {
            MPoly inner = expr();
            if (!eat(')')) fail("missing closing parenthesis");
            return inner;
        }
        if (pos >= s.size()) fail("unexpected end of input");
        char c = s[pos];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos;
            while (pos < s.size() &&
                   (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '/'))
                ++pos;
            return MPoly(ring, rat_from_string(s.substr(start, pos - start)));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos;
            while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) ||
                                      s[pos] == '_'))
                ++pos;
            std::string name = s.substr(start, pos - start);
            int idx = ring->index_of(name);
            if (idx < 0) fail("unknown variable '" + name + "'");
            return MPoly::variable(ring, idx);
        }
        fail(std::string("unexpected character '") + c + "'");
    }
};

}  // namespace

MPoly MPoly::parse(PolyRingPtr ring, const std::string& text) {
    Parser p{ring, text};
    MPoly out = p.expr();
    p.skip();
    if (p.pos != text.size()) p.fail("trailing input");
    return out;
}

std::optional<MPoly> divide_exact(const MPoly& f, const MPoly& g, const MonoOrder& order) {
    if (g.is_zero()) throw Error(errc::bad_input, "division by the zero polynomial");
    MPoly q(f.ring());
    MPoly rem = f;
    const Monomial& gl = g.leading_monomial(order);
    const Rat& gc = g.leading_coeff(order);
    const size_t n = gl.size();
    while (!rem.is_zero()) {
        const Monomial& rl = rem.leading_monomial(order);
        Monomial diff(n);
        for (size_t i = 0; i < n; ++i) {
            diff[i] = rl[i] - gl[i];
            if (diff[i] < 0) return std::nullopt;
        }
        Rat c = rem.terms().at(rl) / gc;
        q.set_coeff(diff, c);
        rem -= g.times_monomial(diff, c);
    }
    return q;
}

namespace {

// View of f as a univariate polynomial in variable v: coefficient of v^d.
std::map<int, MPoly> univariate_view(const MPoly& f, int v) {
    std::map<int, MPoly> out;
    for (const auto& [m, c] : f.terms()) {
        Monomial stripped = m;
        int d = stripped[v];
        stripped[v] = 0;
        auto it = out.find(d);
        if (it == out.end()) it = out.emplace(d, MPoly(f.ring())).first;
        it->second.set_coeff(stripped, it->second.coeff(stripped) + c);
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

MPoly make_monic(const MPoly& f) {
    if (f.is_zero()) return f;
    MonoOrder o;
    return f.scaled(1 / f.leading_coeff(o));
}

MPoly content_in(const MPoly& f, int v);
MPoly gcd_rec(MPoly f, MPoly g);

// Divide out the componentwise-minimum exponent vector and return it.
Monomial strip_monomial_content(MPoly& f) {
    const size_t nv = f.ring()->vars.size();
    Monomial mins(nv, 0);
    bool first = true;
    for (const auto& [m, c] : f.terms()) {
        if (first) { mins = m; first = false; continue; }
        for (size_t k = 0; k < nv; ++k) mins[k] = std::min(mins[k], m[k]);
    }
    bool trivial = true;
    for (size_t k = 0; k < nv; ++k)
        if (mins[k] != 0) trivial = false;
    if (trivial) return mins;
    MPoly out(f.ring());
    for (const auto& [m, c] : f.terms()) {
        Monomial shifted = m;
        for (size_t k = 0; k < nv; ++k) shifted[k] -= mins[k];
        out.set_coeff(shifted, c);
    }
    f = std::move(out);
    return mins;
}

// GCD of two nonzero polynomials with trivial monomial content, by a
// primitive pseudo-remainder sequence in one shared variable.
MPoly gcd_primitive(MPoly f, MPoly g) {
    if (f.is_constant() || g.is_constant()) return MPoly(f.ring(), Rat(1));

    // A nonconstant common divisor needs a variable present in both; pick
    // the one that keeps the remainder sequence shortest.
    const int nv = static_cast<int>(f.ring()->vars.size());
    int v = -1;
    long best = 0;
    for (int k = 0; k < nv; ++k) {
        long df = f.degree_in(k), dg = g.degree_in(k);
        if (df == 0 || dg == 0) continue;
        long m = std::min(df, dg);
        if (v < 0 || m < best) { v = k; best = m; }
    }
    if (v < 0) return MPoly(f.ring(), Rat(1));

    MPoly cf = content_in(f, v), cg = content_in(g, v);
    MonoOrder o;
    MPoly cont = gcd_rec(cf, cg);
    auto fp = divide_exact(f, cf, o), gp = divide_exact(g, cg, o);
    if (!fp || !gp) throw Error(errc::internal, "content does not divide its polynomial");
    MPoly a = *fp, b = *gp;

    while (!b.is_zero()) {
        if (b.is_constant()) return make_monic(cont);
        long da = a.degree_in(v), db = b.degree_in(v);
        if (da < db) {
            std::swap(a, b);
            continue;
        }
        // Pseudo-remainder: lc(b)^(da-db+1) * a reduced by b in variable v.
        auto bu = univariate_view(b, v);
        MPoly lb = bu.rbegin()->second;
        MPoly r = a * lb.pow(da - db + 1);
        while (!r.is_zero() && r.degree_in(v) >= db) {
            auto ru = univariate_view(r, v);
            long dr = ru.rbegin()->first;
            MPoly lr = ru.rbegin()->second;
            auto q = divide_exact(lr, lb, o);
            if (!q) throw Error(errc::internal, "pseudo-division step failed");
            Monomial shift(a.ring()->vars.size(), 0);
            shift[v] = static_cast<int>(dr - db);
            r -= (b * *q).times_monomial(shift, Rat(1));
        }
        a = b;
        b = r;
        if (!b.is_zero()) {
            strip_monomial_content(b);
            MPoly cb = content_in(b, v);
            auto pp = divide_exact(b, cb, o);
            if (!pp) throw Error(errc::internal, "primitive part failed");
            b = *pp;
        }
    }
    return make_monic(cont * a);
}

MPoly gcd_rec(MPoly f, MPoly g) {
    if (f.is_zero()) return make_monic(g);
    if (g.is_zero()) return make_monic(f);
    Monomial mf = strip_monomial_content(f);
    Monomial mg = strip_monomial_content(g);
    const size_t nv = f.ring()->vars.size();
    Monomial shared(nv, 0);
    for (size_t k = 0; k < nv; ++k) shared[k] = std::min(mf[k], mg[k]);
    return gcd_primitive(std::move(f), std::move(g)).times_monomial(shared, Rat(1));
}

MPoly content_in(const MPoly& f, int v) {
    auto coeffs = univariate_view(f, v);
    MPoly acc(f.ring());
    for (const auto& [d, c] : coeffs) {
        acc = gcd_rec(acc, c);
        if (acc.is_constant() && !acc.is_zero()) break;  // content cannot shrink further
    }
    return acc;
}

}  // namespace

MPoly poly_gcd(const MPoly& f, const MPoly& g) {
    if (f.is_zero() && g.is_zero()) return f;
    if (!f.is_zero() && !g.is_zero() && f.ring()->vars != g.ring()->vars)
        throw Error(errc::mismatched_data, "gcd of polynomials from different rings");
    return gcd_rec(f, g);
}

}  // namespace satake
