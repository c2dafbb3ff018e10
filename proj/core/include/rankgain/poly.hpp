#ifndef RANKGAIN_POLY_HPP
#define RANKGAIN_POLY_HPP

#include <string>
#include <utility>
#include <vector>

#include "rankgain/errors.hpp"
#include "rankgain/rational.hpp"

namespace rankgain {

/// Univariate polynomial over a coefficient field F, coefficients stored
/// lowest degree first, trailing zeros trimmed. The zero polynomial has an
/// empty coefficient vector and degree -1.
///
/// F must provide +, -, unary -, *, inverse(), is_zero(), ==, and the free
/// functions zero_like/one_like.
template <class F>
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly zero() { return Poly(); }
    static Poly constant(const F& v) { return Poly(std::vector<F>{v}); }
    /// The monomial x, with coefficients derived from the sample element.
    static Poly x(const F& sample) {
        return Poly(std::vector<F>{zero_like(sample), one_like(sample)});
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<F>& coeffs() const { return c_; }

    /// Coefficient of x^i (i may exceed the degree; a zero is synthesized
    /// from existing coefficients, so the polynomial must be non-zero).
    F coeff(size_t i) const {
        if (i < c_.size()) return c_[i];
        if (c_.empty()) throw invalid_input("coeff of zero polynomial");
        return zero_like(c_[0]);
    }

    const F& leading() const {
        if (c_.empty()) throw invalid_input("leading coeff of zero polynomial");
        return c_.back();
    }

    bool is_monic() const { return !c_.empty() && is_one_elem(c_.back()); }

    F eval(const F& x) const {
        F acc = zero_like(x);
        for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    Poly operator-() const {
        std::vector<F> r;
        r.reserve(c_.size());
        for (const F& v : c_) r.push_back(-v);
        return Poly(std::move(r));
    }

    Poly operator+(const Poly& o) const {
        std::vector<F> r;
        const size_t n = std::max(c_.size(), o.c_.size());
        r.reserve(n);
        for (size_t i = 0; i < n; ++i) {
            if (i < c_.size() && i < o.c_.size())
                r.push_back(c_[i] + o.c_[i]);
            else if (i < c_.size())
                r.push_back(c_[i]);
            else
                r.push_back(o.c_[i]);
        }
        return Poly(std::move(r));
    }

    Poly operator-(const Poly& o) const { return *this + (-o); }

    Poly operator*(const Poly& o) const {
        if (is_zero() || o.is_zero()) return Poly();
        std::vector<F> r(c_.size() + o.c_.size() - 1, zero_like(c_[0]));
        for (size_t i = 0; i < c_.size(); ++i)
            for (size_t j = 0; j < o.c_.size(); ++j)
                r[i + j] = r[i + j] + c_[i] * o.c_[j];
        return Poly(std::move(r));
    }

    Poly scaled(const F& s) const {
        std::vector<F> r;
        r.reserve(c_.size());
        for (const F& v : c_) r.push_back(v * s);
        return Poly(std::move(r));
    }

    /// Multiplies x^k onto the polynomial.
    Poly shifted_up(size_t k) const {
        if (is_zero()) return Poly();
        std::vector<F> r(c_.size() + k, zero_like(c_[0]));
        for (size_t i = 0; i < c_.size(); ++i) r[i + k] = c_[i];
        return Poly(std::move(r));
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<F> r;
        r.reserve(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i)
            r.push_back(mul_small(c_[i], static_cast<long>(i)));
        return Poly(std::move(r));
    }

    Poly monic() const {
        if (is_zero()) throw invalid_input("monic of zero polynomial");
        return scaled(leading().inverse());
    }

    bool operator==(const Poly& o) const {
        if (c_.size() != o.c_.size()) return false;
        for (size_t i = 0; i < c_.size(); ++i)
            if (!(c_[i] == o.c_[i])) return false;
        return true;
    }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    /// n-fold multiple of a coefficient via binary doubling.
    static F mul_small(const F& v, long n) {
        if (n < 0) return -mul_small(v, -n);
        F acc = zero_like(v);
        F base = v;
        long k = n;
        while (k > 0) {
            if (k & 1) acc = acc + base;
            base = base + base;
            k >>= 1;
        }
        return acc;
    }

    std::string to_string(const std::string& var = "x") const {
        if (is_zero()) return "0";
        std::string out;
        for (size_t i = c_.size(); i-- > 0;) {
            if (c_[i].is_zero()) continue;
            if (!out.empty()) out += " + ";
            out += "(" + c_[i].to_string() + ")";
            if (i >= 1) out += "*" + var;
            if (i >= 2) out += "^" + std::to_string(i);
        }
        return out.empty() ? "0" : out;
    }

private:
    template <class G>
    static bool is_one_elem(const G& g) {
        return g == one_like(g);
    }

    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<F> c_;
};

/// Quotient and remainder of f by non-zero g over a field.
template <class F>
std::pair<Poly<F>, Poly<F>> poly_divmod(const Poly<F>& f, const Poly<F>& g) {
    if (g.is_zero()) throw invalid_input("polynomial division by zero");
    if (f.degree() < g.degree()) return {Poly<F>(), f};
    const F lc_inv = g.leading().inverse();
    std::vector<F> rem(f.coeffs());
    std::vector<F> quo(static_cast<size_t>(f.degree() - g.degree() + 1),
                       zero_like(g.leading()));
    for (int k = f.degree() - g.degree(); k >= 0; --k) {
        F q = rem[static_cast<size_t>(k + g.degree())] * lc_inv;
        quo[static_cast<size_t>(k)] = q;
        if (q.is_zero()) continue;
        for (int i = 0; i <= g.degree(); ++i)
            rem[static_cast<size_t>(k + i)] =
                rem[static_cast<size_t>(k + i)] - q * g.coeff(static_cast<size_t>(i));
    }
    return {Poly<F>(std::move(quo)), Poly<F>(std::move(rem))};
}

template <class F>
Poly<F> poly_mod(const Poly<F>& f, const Poly<F>& g) {
    return poly_divmod(f, g).second;
}

/// Monic gcd over a field (the zero polynomial if both inputs are zero).
template <class F>
Poly<F> poly_gcd(Poly<F> a, Poly<F> b) {
    while (!b.is_zero()) {
        Poly<F> r = poly_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.monic();
}

/// Extended gcd: returns (g, s, t) with s*a + t*b = g, g monic.
template <class F>
std::tuple<Poly<F>, Poly<F>, Poly<F>> poly_ext_gcd(const Poly<F>& a,
                                                   const Poly<F>& b) {
    Poly<F> r0 = a, r1 = b;
    Poly<F> s0, t0, s1, t1;
    if (!a.is_zero()) {
        s0 = Poly<F>::constant(one_like(a.leading()));
        t1 = Poly<F>::constant(one_like(a.leading()));
    } else if (!b.is_zero()) {
        s0 = Poly<F>();
        t1 = Poly<F>::constant(one_like(b.leading()));
        s1 = Poly<F>();
        t0 = Poly<F>();
    }
    while (!r1.is_zero()) {
        auto [q, r] = poly_divmod(r0, r1);
        Poly<F> s2 = s0 - q * s1;
        Poly<F> t2 = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    F lead_inv = r0.leading().inverse();
    return {r0.scaled(lead_inv), s0.scaled(lead_inv), t0.scaled(lead_inv)};
}

/// f(x + c) by synthetic substitution.
template <class F>
Poly<F> poly_shift_var(const Poly<F>& f, const F& c) {
    if (f.is_zero()) return f;
    Poly<F> result;
    Poly<F> lin(std::vector<F>{c, one_like(c)});
    for (int i = f.degree(); i >= 0; --i) {
        result = result * lin +
                 Poly<F>::constant(f.coeff(static_cast<size_t>(i)));
    }
    return result;
}

/// base^e modulo m, for a non-negative integer exponent.
template <class F>
Poly<F> poly_pow_mod(Poly<F> base, Integer e, const Poly<F>& m) {
    if (e < 0) throw invalid_input("poly_pow_mod: negative exponent");
    base = poly_mod(base, m);
    Poly<F> r = Poly<F>::constant(one_like(m.leading()));
    r = poly_mod(r, m);
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) r = poly_mod(r * base, m);
        base = poly_mod(base * base, m);
        e >>= 1;
    }
    return r;
}

/// Resultant of f and g over a field, by the Euclidean algorithm.
template <class F>
F poly_resultant(const Poly<F>& f, const Poly<F>& g) {
    if (f.is_zero() || g.is_zero()) {
        const Poly<F>& nz = f.is_zero() ? g : f;
        if (nz.is_zero()) throw invalid_input("resultant of zero polynomials");
        return zero_like(nz.leading());
    }
    Poly<F> a = f, b = g;
    F acc = one_like(f.leading());
    bool negate = false;
    while (true) {
        if (b.degree() == 0) {
            // res(a, const) = const^deg(a)
            F c = b.leading();
            F pw = one_like(c);
            for (int i = 0; i < a.degree(); ++i) pw = pw * c;
            acc = acc * pw;
            break;
        }
        Poly<F> r = poly_mod(a, b);
        if (r.is_zero()) return zero_like(f.leading());
        // res(a,b) = (-1)^(deg a * deg b) * lc(b)^(deg a - deg r) * res(b, r)
        if ((a.degree() % 2) && (b.degree() % 2)) negate = !negate;
        F lc = b.leading();
        F pw = one_like(lc);
        for (int i = 0; i < a.degree() - r.degree(); ++i) pw = pw * lc;
        acc = acc * pw;
        a = std::move(b);
        b = std::move(r);
    }
    return negate ? -acc : acc;
}

/// Discriminant for degrees 2 through 4:
/// disc(f) = (-1)^(n(n-1)/2) res(f, f') / lc(f). Matches b^2 - 4ac for
/// degree 2 and the classical cubic formula for monic cubics.
template <class F>
F discriminant(const Poly<F>& f) {
    const int n = f.degree();
    if (n < 2 || n > 4)
        throw invalid_input("discriminant implemented for degrees 2..4");
    F res = poly_resultant(f, f.derivative());
    F d = res * f.leading().inverse();
    const int sign_exp = (n * (n - 1) / 2) % 2;
    return sign_exp ? -d : d;
}

} // namespace rankgain

#endif
