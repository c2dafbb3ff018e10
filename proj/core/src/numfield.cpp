#include "rankgain/numfield.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>

namespace rankgain {

// ---------------------------------------------------------------------------
// Rational helpers
// ---------------------------------------------------------------------------

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw invalid_input("empty rational literal");
    for (char ch : text) {
        if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '-' ||
              ch == '+' || ch == '/'))
            throw invalid_input("bad rational literal: " + text);
    }
    mpq_class q;
    if (q.set_str(text, 10) != 0)
        throw invalid_input("bad rational literal: " + text);
    if (q.get_den() == 0) throw invalid_input("zero denominator: " + text);
    q.canonicalize();
    return q;
}

std::string rational_to_string(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Integer integer_isqrt(const Integer& n) {
    if (n < 0) throw invalid_input("integer_isqrt of negative value");
    Integer r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

std::optional<Rational> rational_sqrt(const Rational& q) {
    if (q < 0) return std::nullopt;
    const Integer& num = q.get_num();
    const Integer& den = q.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) ||
        !mpz_perfect_square_p(den.get_mpz_t()))
        return std::nullopt;
    return make_rational(integer_isqrt(num), integer_isqrt(den));
}

// ---------------------------------------------------------------------------
// Field descriptor
// ---------------------------------------------------------------------------

void validate_field(const QuadFieldDesc& field) {
    long d = field.d;
    if (d == 0) throw invalid_input("field discriminant d must be non-zero");
    if (d == 1) return; // rational sentinel
    long ad = d < 0 ? -d : d;
    for (long f = 2; f * f <= ad; ++f) {
        if (ad % (f * f) == 0)
            throw invalid_input("field discriminant d must be squarefree");
    }
}

// ---------------------------------------------------------------------------
// QuadElem
// ---------------------------------------------------------------------------

QuadElem::QuadElem(Rational a, Rational b, QuadFieldDesc field)
    : a_(std::move(a)), b_(std::move(b)), field_(field) {
    if (field_.is_rationals() && b_ != 0) {
        // sqrt(1) = 1: fold the b-part away so Q stays one-dimensional.
        a_ += b_;
        b_ = 0;
    }
}

void QuadElem::check_same_field(const QuadElem& o) const {
    if (!(field_ == o.field_))
        throw invalid_input("mixed quadratic fields in arithmetic");
}

Rational QuadElem::norm() const { return a_ * a_ - field_.d * b_ * b_; }

QuadElem QuadElem::operator+(const QuadElem& o) const {
    check_same_field(o);
    return QuadElem(a_ + o.a_, b_ + o.b_, field_);
}

QuadElem QuadElem::operator-(const QuadElem& o) const {
    check_same_field(o);
    return QuadElem(a_ - o.a_, b_ - o.b_, field_);
}

QuadElem QuadElem::operator*(const QuadElem& o) const {
    check_same_field(o);
    return QuadElem(a_ * o.a_ + field_.d * b_ * o.b_, a_ * o.b_ + b_ * o.a_,
                    field_);
}

QuadElem QuadElem::inverse() const {
    if (is_zero()) throw invalid_input("inverse of zero");
    Rational n = norm();
    // In an imaginary quadratic field the norm of a non-zero element is
    // non-zero; for the rational sentinel b_ = 0 and n = a_^2.
    return QuadElem(a_ / n, -b_ / n, field_);
}

QuadElem QuadElem::operator/(const QuadElem& o) const {
    return *this * o.inverse();
}

std::string QuadElem::to_string() const {
    std::ostringstream os;
    if (b_ == 0) {
        os << a_;
    } else {
        os << a_ << (b_ < 0 ? "-" : "+");
        Rational ab = abs(b_);
        if (ab != 1) os << ab << "*";
        os << "sqrt(" << field_.d << ")";
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const QuadElem& x) {
    return os << x.to_string();
}

std::optional<QuadElem> sqrt_in_K(const QuadElem& x) {
    const QuadFieldDesc field = x.field();
    if (x.is_zero()) return QuadElem::zero(field);
    const long d = field.d;
    if (x.b() == 0) {
        // z = u or z = v*sqrt(d).
        if (auto u = rational_sqrt(x.a()))
            return QuadElem(*u, Rational(0), field);
        if (auto v = rational_sqrt(x.a() / d))
            return QuadElem(Rational(0), *v, field);
        return std::nullopt;
    }
    // z = u + v*sqrt(d) with u, v != 0: u^2 + d v^2 = a and 2uv = b force
    // u^2 = (a +- s)/2 where s^2 = norm(x).
    auto s = rational_sqrt(x.norm());
    if (!s) return std::nullopt;
    for (int sign : {+1, -1}) {
        Rational usq = (x.a() + sign * *s) / 2;
        auto u = rational_sqrt(usq);
        if (!u || *u == 0) continue;
        Rational v = x.b() / (2 * *u);
        QuadElem z(*u, v, field);
        if (z * z == x) return z;
    }
    return std::nullopt;
}

QuadElem parse_quad_elem(const std::string& text, QuadFieldDesc field) {
    if (text.empty()) throw invalid_input("empty field-element literal");
    // Split into at most two signed terms; a term is "r" or "r*sqrt" or "sqrt".
    std::vector<std::string> terms;
    std::string cur;
    for (size_t i = 0; i < text.size(); ++i) {
        char ch = text[i];
        if ((ch == '+' || ch == '-') && i > 0 && text[i - 1] != '/' &&
            !cur.empty()) {
            terms.push_back(cur);
            cur.clear();
        }
        cur.push_back(ch);
    }
    if (!cur.empty()) terms.push_back(cur);
    if (terms.empty() || terms.size() > 2)
        throw invalid_input("bad field-element literal: " + text);

    Rational a(0), b(0);
    bool seen_sqrt = false;
    for (std::string term : terms) {
        bool neg = false;
        if (!term.empty() && (term[0] == '+' || term[0] == '-')) {
            neg = term[0] == '-';
            term = term.substr(1);
        }
        Rational coeff;
        bool is_sqrt_term = false;
        if (auto star = term.find("*sqrt"); star != std::string::npos) {
            if (star + 5 != term.size())
                throw invalid_input("bad field-element literal: " + text);
            coeff = parse_rational(term.substr(0, star));
            is_sqrt_term = true;
        } else if (term == "sqrt") {
            coeff = 1;
            is_sqrt_term = true;
        } else {
            coeff = parse_rational(term);
        }
        if (neg) coeff = -coeff;
        if (is_sqrt_term) {
            if (seen_sqrt)
                throw invalid_input("bad field-element literal: " + text);
            seen_sqrt = true;
            b = coeff;
        } else {
            a += coeff;
        }
    }
    return QuadElem(a, b, field);
}

// ---------------------------------------------------------------------------
// Modular utilities
// ---------------------------------------------------------------------------

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

std::uint64_t invmod_u64(std::uint64_t a, std::uint64_t m) {
    std::int64_t t = 0, newt = 1;
    std::int64_t r = static_cast<std::int64_t>(m),
                 newr = static_cast<std::int64_t>(a % m);
    while (newr != 0) {
        std::int64_t qq = r / newr;
        std::swap(t -= qq * newt, newt);
        std::swap(r -= qq * newr, newr);
    }
    if (r != 1) throw invalid_input("non-invertible residue");
    return static_cast<std::uint64_t>(t < 0 ? t + static_cast<std::int64_t>(m)
                                            : t);
}

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull,
                            19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    // Deterministic Miller-Rabin for 64-bit inputs.
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull,
                            19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod_u64(a % n, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 0; i < s - 1; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

int legendre_symbol(std::int64_t a, std::uint64_t p) {
    if (p == 2 || !is_prime_u64(p))
        throw invalid_input("legendre_symbol needs an odd prime");
    std::int64_t pp = static_cast<std::int64_t>(p);
    std::int64_t r = a % pp;
    if (r < 0) r += pp;
    if (r == 0) return 0;
    std::uint64_t e = powmod_u64(static_cast<std::uint64_t>(r), (p - 1) / 2, p);
    return e == 1 ? 1 : -1;
}

std::uint64_t sqrt_mod_p(std::uint64_t a, std::uint64_t p) {
    a %= p;
    if (a == 0) return 0;
    if (p == 2) return a;
    if (powmod_u64(a, (p - 1) / 2, p) != 1)
        throw invalid_input("sqrt_mod_p of a non-residue");
    if (p % 4 == 3) return powmod_u64(a, (p + 1) / 4, p);
    // Tonelli-Shanks.
    std::uint64_t q = p - 1;
    int s = 0;
    while ((q & 1) == 0) {
        q >>= 1;
        ++s;
    }
    std::uint64_t z = 2;
    while (powmod_u64(z, (p - 1) / 2, p) != p - 1) ++z;
    std::uint64_t m = s;
    std::uint64_t c = powmod_u64(z, q, p);
    std::uint64_t t = powmod_u64(a, q, p);
    std::uint64_t r = powmod_u64(a, (q + 1) / 2, p);
    while (t != 1) {
        std::uint64_t i = 0, tt = t;
        while (tt != 1) {
            tt = mulmod_u64(tt, tt, p);
            ++i;
        }
        std::uint64_t b = c;
        for (std::uint64_t j = 0; j + i + 1 < m; ++j) b = mulmod_u64(b, b, p);
        m = i;
        c = mulmod_u64(b, b, p);
        t = mulmod_u64(t, c, p);
        r = mulmod_u64(r, b, p);
    }
    return r;
}

// ---------------------------------------------------------------------------
// Primes of O_K
// ---------------------------------------------------------------------------

std::vector<PrimeIdeal> primes_above(QuadFieldDesc field, std::uint64_t p) {
    validate_field(field);
    if (!is_prime_u64(p)) throw invalid_input("primes_above: p is not prime");
    const long d = field.d;

    if (field.is_rationals())
        return {PrimeIdeal{p, PrimeKind::split, 1 % p, field}};

    if (p == 2) {
        long dm8 = ((d % 8) + 8) % 8;
        if (dm8 == 1) {
            return {PrimeIdeal{2, PrimeKind::split, 1, field}};
        }
        if (dm8 == 5) return {PrimeIdeal{2, PrimeKind::inert, 0, field}};
        return {PrimeIdeal{2, PrimeKind::ramified, d % 2 == 0 ? 0u : 1u, field}};
    }

    int chi = legendre_symbol(d, p);
    if (chi == 0) {
        std::uint64_t r =
            static_cast<std::uint64_t>(((d % static_cast<long>(p)) + p) % p);
        // d = 0 mod p, so the root of x^2 - d is 0.
        (void)r;
        return {PrimeIdeal{p, PrimeKind::ramified, 0, field}};
    }
    if (chi == -1) return {PrimeIdeal{p, PrimeKind::inert, 0, field}};

    std::uint64_t dmod =
        static_cast<std::uint64_t>(((d % static_cast<long>(p)) + p) % p);
    std::uint64_t r = sqrt_mod_p(dmod, p);
    std::uint64_t r2 = p - r;
    if (r > r2) std::swap(r, r2);
    return {PrimeIdeal{p, PrimeKind::split, r, field},
            PrimeIdeal{p, PrimeKind::split, r2, field}};
}

std::ostream& operator<<(std::ostream& os, const PrimeIdeal& P) {
    os << "(" << P.p;
    switch (P.kind) {
        case PrimeKind::split:
            os << ", sqrt(" << P.field.d << ")-" << P.root;
            break;
        case PrimeKind::inert:
            os << ", inert";
            break;
        case PrimeKind::ramified:
            os << ", ramified";
            break;
    }
    return os << ")";
}

// ---------------------------------------------------------------------------
// ResidueElem
// ---------------------------------------------------------------------------

ResidueElem::ResidueElem(std::uint64_t x, std::uint64_t y, PrimeIdeal mod)
    : x_(x % mod.p), y_(y % mod.p), mod_(mod) {
    if (mod_.kind != PrimeKind::inert && y_ != 0)
        throw invalid_input("s-component in a degree-one residue field");
}

ResidueElem ResidueElem::from_int(std::int64_t v, const PrimeIdeal& P) {
    std::int64_t pp = static_cast<std::int64_t>(P.p);
    std::int64_t r = v % pp;
    if (r < 0) r += pp;
    return ResidueElem(static_cast<std::uint64_t>(r), 0, P);
}

ResidueElem ResidueElem::gen_s(const PrimeIdeal& P) {
    if (P.kind != PrimeKind::inert)
        throw invalid_input("gen_s only exists for inert primes");
    return ResidueElem(0, 1, P);
}

void ResidueElem::check_same_modulus(const ResidueElem& o) const {
    if (!(mod_ == o.mod_))
        throw invalid_input("mixed residue fields in arithmetic");
}

ResidueElem ResidueElem::operator-() const {
    return ResidueElem(x_ ? mod_.p - x_ : 0, y_ ? mod_.p - y_ : 0, mod_);
}

ResidueElem ResidueElem::operator+(const ResidueElem& o) const {
    check_same_modulus(o);
    return ResidueElem((x_ + o.x_) % mod_.p, (y_ + o.y_) % mod_.p, mod_);
}

ResidueElem ResidueElem::operator-(const ResidueElem& o) const {
    return *this + (-o);
}

ResidueElem ResidueElem::operator*(const ResidueElem& o) const {
    check_same_modulus(o);
    const std::uint64_t p = mod_.p;
    if (mod_.kind != PrimeKind::inert)
        return ResidueElem(mulmod_u64(x_, o.x_, p), 0, mod_);
    // (x + y s)(x' + y' s) with s^2 = d.
    std::uint64_t dmod = static_cast<std::uint64_t>(
        ((mod_.field.d % static_cast<long>(p)) + p) % p);
    std::uint64_t cross = mulmod_u64(y_, o.y_, p);
    std::uint64_t nx = (mulmod_u64(x_, o.x_, p) + mulmod_u64(dmod, cross, p)) % p;
    std::uint64_t ny = (mulmod_u64(x_, o.y_, p) + mulmod_u64(y_, o.x_, p)) % p;
    return ResidueElem(nx, ny, mod_);
}

ResidueElem ResidueElem::inverse() const {
    if (is_zero()) throw invalid_input("inverse of zero residue");
    const std::uint64_t p = mod_.p;
    if (mod_.kind != PrimeKind::inert)
        return ResidueElem(invmod_u64(x_, p), 0, mod_);
    // (x + y s)^-1 = (x - y s) / (x^2 - d y^2).
    std::uint64_t dmod =
        static_cast<std::uint64_t>(((mod_.field.d % static_cast<long>(p)) + p) % p);
    std::uint64_t n =
        (mulmod_u64(x_, x_, p) + p * p - mulmod_u64(dmod, mulmod_u64(y_, y_, p), p)) %
        p;
    std::uint64_t ninv = invmod_u64(n, p);
    return ResidueElem(mulmod_u64(x_, ninv, p),
                       mulmod_u64(y_ ? p - y_ : 0, ninv, p), mod_);
}

ResidueElem ResidueElem::operator/(const ResidueElem& o) const {
    return *this * o.inverse();
}

ResidueElem ResidueElem::pow(const Integer& e) const {
    if (e < 0) return inverse().pow(-e);
    ResidueElem base = *this;
    ResidueElem r = ResidueElem::one(mod_);
    Integer k = e;
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) r = r * base;
        base = base * base;
        k >>= 1;
    }
    return r;
}

ResidueElem ResidueElem::from_index(std::uint64_t i, const PrimeIdeal& P) {
    return ResidueElem(i % P.p, i / P.p, P);
}

std::string ResidueElem::to_string() const {
    std::ostringstream os;
    if (mod_.kind == PrimeKind::inert && y_ != 0)
        os << x_ << "+" << y_ << "*s";
    else
        os << x_;
    os << " (mod " << mod_.p << (mod_.kind == PrimeKind::inert ? "^2" : "")
       << ")";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const ResidueElem& x) {
    return os << x.to_string();
}

namespace {

std::uint64_t reduce_rational_mod_p(const Rational& x, std::uint64_t p) {
    Integer num = x.get_num(), den = x.get_den();
    Integer P(static_cast<unsigned long>(p));
    if (mpz_divisible_p(den.get_mpz_t(), P.get_mpz_t()))
        throw bad_reduction("denominator divisible by " + P.get_str());
    Integer nr = num % P;
    if (nr < 0) nr += P;
    Integer dr = den % P;
    std::uint64_t n = nr.get_ui();
    std::uint64_t d = dr.get_ui();
    return mulmod_u64(n, invmod_u64(d, p), p);
}

} // namespace

ResidueElem reduce(const Rational& x, const PrimeIdeal& P) {
    return ResidueElem(reduce_rational_mod_p(x, P.p), 0, P);
}

ResidueElem reduce(const QuadElem& x, const PrimeIdeal& P) {
    if (!(x.field() == P.field))
        throw invalid_input("reduce: element and prime from different fields");
    std::uint64_t a = reduce_rational_mod_p(x.a(), P.p);
    if (x.b() == 0) return ResidueElem(a, 0, P);
    std::uint64_t b = reduce_rational_mod_p(x.b(), P.p);
    if (P.kind == PrimeKind::inert) return ResidueElem(a, b, P);
    // split/ramified: sqrt(d) |-> root.
    return ResidueElem((a + mulmod_u64(b, P.root, P.p)) % P.p, 0, P);
}

bool is_nth_power_residue(const ResidueElem& x, unsigned n) {
    if (n == 0) throw invalid_input("0th power residue is undefined");
    if (x.is_zero()) return true;
    std::uint64_t q = x.q();
    std::uint64_t g = std::gcd<std::uint64_t>(n, q - 1);
    if (g == 1) return true;
    return x.pow(Integer(static_cast<unsigned long>((q - 1) / g))).is_one();
}

// ---------------------------------------------------------------------------
// CRT
// ---------------------------------------------------------------------------

Integer crt(const std::vector<std::pair<Integer, Integer>>& congruences) {
    if (congruences.empty()) throw invalid_input("crt: empty system");
    for (const auto& [r, m] : congruences)
        if (m < 1) throw invalid_input("crt: modulus must be positive");
    for (size_t i = 0; i < congruences.size(); ++i)
        for (size_t j = i + 1; j < congruences.size(); ++j) {
            Integer g;
            mpz_gcd(g.get_mpz_t(), congruences[i].second.get_mpz_t(),
                    congruences[j].second.get_mpz_t());
            if (g != 1) throw invalid_input("crt: moduli are not coprime");
        }

    Integer r = congruences[0].first % congruences[0].second;
    if (r < 0) r += congruences[0].second;
    Integer m = congruences[0].second;
    for (size_t i = 1; i < congruences.size(); ++i) {
        const Integer& ri = congruences[i].first;
        const Integer& mi = congruences[i].second;
        // x = r (mod m), x = ri (mod mi): x = r + m * t with
        // t = (ri - r) / m (mod mi).
        Integer minv;
        if (mpz_invert(minv.get_mpz_t(), m.get_mpz_t(), mi.get_mpz_t()) == 0)
            throw internal_error("crt: lost invertibility");
        Integer t = ((ri - r) * minv) % mi;
        if (t < 0) t += mi;
        r += m * t;
        m *= mi;
    }
    r %= m;
    if (r < 0) r += m;
    return r;
}

} // namespace rankgain
