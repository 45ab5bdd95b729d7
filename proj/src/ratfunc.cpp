#include "satake/ratfunc.hpp"

#include "satake/error.hpp"

namespace satake {

RatFunc::RatFunc(MPoly num) : num_(std::move(num)) {
    if (num_.ring()) den_ = MPoly(num_.ring(), Rat(1));
}

RatFunc::RatFunc(MPoly num, MPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw Error(errc::bad_input, "zero denominator");
    reduce();
}

void RatFunc::reduce() {
    MonoOrder o;
    if (num_.is_zero()) {
        den_ = MPoly(den_.ring(), Rat(1));
        return;
    }
    MPoly g = poly_gcd(num_, den_);
    if (!g.is_constant()) {
        auto qn = divide_exact(num_, g, o);
        auto qd = divide_exact(den_, g, o);
        if (!qn || !qd) throw Error(errc::internal, "gcd does not divide its arguments");
        num_ = *qn;
        den_ = *qd;
    }
    Rat lead = den_.leading_coeff(o);
    if (lead != 1) {
        num_ = num_.scaled(1 / lead);
        den_ = den_.scaled(1 / lead);
    }
}

bool RatFunc::is_polynomial() const {
    return num_.is_zero() || den_ == MPoly(den_.ring(), Rat(1));
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
    if (is_zero()) return *this;
    if (o.is_zero()) return o;
    return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const { return *this * o.reciprocal(); }

RatFunc RatFunc::reciprocal() const {
    if (is_zero()) throw Error(errc::bad_input, "reciprocal of zero");
    return RatFunc(den_, num_);
}

bool RatFunc::operator==(const RatFunc& o) const {
    if (is_zero() || o.is_zero()) return is_zero() == o.is_zero();
    return num_ == o.num_ && den_ == o.den_;
}

std::string RatFunc::to_string() const {
    if (is_polynomial()) return num_.to_string();
    std::string n = num_.to_string();
    std::string d = den_.to_string();
    if (num_.terms().size() > 1) n = "(" + n + ")";
    // The denominator binds the whole fraction: parenthesize anything that
    // is not a bare variable or constant.
    if (d.find_first_of("*+-^") != std::string::npos) d = "(" + d + ")";
    return n + "/" + d;
}

RatFunc eval_ratfunc(const MPoly& f, const std::vector<RatFunc>& images) {
    if (!f.ring()) throw Error(errc::bad_input, "cannot evaluate a ringless polynomial");
    if (images.size() != f.ring()->vars.size())
        throw Error(errc::bad_input, "one image per ring variable required");
    RatFunc out;
    for (const auto& [mono, coeff] : f.terms()) {
        RatFunc term;
        bool have = false;
        for (size_t v = 0; v < mono.size(); ++v)
            for (int e = 0; e < mono[v]; ++e) {
                term = have ? term * images[v] : images[v];
                have = true;
            }
        if (have) {
            MPoly c(term.num().ring(), coeff);
            term = term * RatFunc(c);
        } else {
            // Constant term: express it over the ring of any image.
            PolyRingPtr ring;
            for (const RatFunc& im : images)
                if (im.num().ring()) { ring = im.num().ring(); break; }
            if (!ring) throw Error(errc::bad_input, "no image carries a ring");
            term = RatFunc(MPoly(ring, coeff));
        }
        out = out + term;
    }
    return out;
}

}  // namespace satake
