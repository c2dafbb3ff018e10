#ifndef RANKGAIN_NUMFIELD_HPP
#define RANKGAIN_NUMFIELD_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rankgain/errors.hpp"
#include "rankgain/rational.hpp"

namespace rankgain {

// ---------------------------------------------------------------------------
// Quadratic fields K = Q(sqrt(d))
// ---------------------------------------------------------------------------

/// Description of the base field. d must be squarefree and non-zero.
/// The sentinel d = 1 denotes Q itself: elements of Q(sqrt(1)) fold the
/// sqrt-part into the rational part, so the arithmetic degenerates to plain
/// rational arithmetic and every odd prime has residue field F_p.
struct QuadFieldDesc {
    long d = 1;

    static QuadFieldDesc rationals() { return QuadFieldDesc{1}; }
    static QuadFieldDesc gaussian() { return QuadFieldDesc{-1}; }
    static QuadFieldDesc eisenstein() { return QuadFieldDesc{-3}; }

    bool is_rationals() const { return d == 1; }
    bool operator==(const QuadFieldDesc&) const = default;
};

/// Throws invalid_input unless d is squarefree and d != 0 (d = 1 is the
/// rational sentinel and is accepted).
void validate_field(const QuadFieldDesc& field);

/// Element a + b*sqrt(d) of K = Q(sqrt(d)), with exact rational a and b.
class QuadElem {
public:
    QuadElem() : a_(0), b_(0), field_{1} {}
    QuadElem(Rational a, Rational b, QuadFieldDesc field);

    static QuadElem from_rational(const Rational& a, QuadFieldDesc field) {
        return QuadElem(a, Rational(0), field);
    }
    static QuadElem from_int(long a, QuadFieldDesc field) {
        return QuadElem(Rational(a), Rational(0), field);
    }
    static QuadElem zero(QuadFieldDesc field) { return from_int(0, field); }
    static QuadElem one(QuadFieldDesc field) { return from_int(1, field); }
    /// The generator sqrt(d) itself.
    static QuadElem sqrt_d(QuadFieldDesc field) {
        return QuadElem(Rational(0), Rational(1), field);
    }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    const QuadFieldDesc& field() const { return field_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_one() const { return a_ == 1 && b_ == 0; }
    bool is_rational() const { return b_ == 0; }

    QuadElem conj() const { return QuadElem(a_, -b_, field_); }
    /// Field norm a^2 - d b^2 (a rational).
    Rational norm() const;
    Rational trace() const { return 2 * a_; }

    QuadElem operator-() const { return QuadElem(-a_, -b_, field_); }
    QuadElem operator+(const QuadElem& o) const;
    QuadElem operator-(const QuadElem& o) const;
    QuadElem operator*(const QuadElem& o) const;
    QuadElem operator/(const QuadElem& o) const;
    QuadElem inverse() const;

    QuadElem& operator+=(const QuadElem& o) { return *this = *this + o; }
    QuadElem& operator-=(const QuadElem& o) { return *this = *this - o; }
    QuadElem& operator*=(const QuadElem& o) { return *this = *this * o; }
    QuadElem& operator/=(const QuadElem& o) { return *this = *this / o; }

    bool operator==(const QuadElem& o) const {
        return field_ == o.field_ && a_ == o.a_ && b_ == o.b_;
    }
    bool operator!=(const QuadElem& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    void check_same_field(const QuadElem& o) const;

    Rational a_, b_;
    QuadFieldDesc field_;
};

std::ostream& operator<<(std::ostream& os, const QuadElem& x);

inline QuadElem zero_like(const QuadElem& x) { return QuadElem::zero(x.field()); }
inline QuadElem one_like(const QuadElem& x) { return QuadElem::one(x.field()); }

/// Exact square root in K: decides whether x is a square of an element of K
/// and produces a root. Solves the two-rational-squares system
/// u^2 + d v^2 = a, 2uv = b by way of the norm equation.
std::optional<QuadElem> sqrt_in_K(const QuadElem& x);

inline bool is_square_in_K(const QuadElem& x) { return sqrt_in_K(x).has_value(); }

/// Parses "a", "b*sqrt", or "a+b*sqrt" (also with '-') where a, b are
/// rationals as in parse_rational. "sqrt" denotes sqrt(d) of the field.
QuadElem parse_quad_elem(const std::string& text, QuadFieldDesc field);

// ---------------------------------------------------------------------------
// Primes and residue fields
// ---------------------------------------------------------------------------

enum class PrimeKind { split, inert, ramified };

/// A prime of O_K above the rational prime p, together with the data needed
/// to reduce into its residue field k_P:
///  - split/ramified: k_P = F_p and sqrt(d) |-> root (root^2 = d mod p);
///  - inert: k_P = F_{p^2} realized as F_p[s]/(s^2 - d).
struct PrimeIdeal {
    std::uint64_t p = 0;
    PrimeKind kind = PrimeKind::split;
    std::uint64_t root = 0; // meaningful for split/ramified only
    QuadFieldDesc field;

    std::uint64_t residue_order() const {
        return kind == PrimeKind::inert ? p * p : p;
    }
    bool operator==(const PrimeIdeal&) const = default;
};

std::ostream& operator<<(std::ostream& os, const PrimeIdeal& P);

/// All primes of O_K above p: two split primes (sorted by root), or one
/// inert, or one ramified prime, according to the Legendre symbol (d|p).
/// Throws invalid_input if p is not prime.
std::vector<PrimeIdeal> primes_above(QuadFieldDesc field, std::uint64_t p);

/// Element of the residue field k_P, stored as x + y*s with s^2 = d
/// (y = 0 identically when k_P = F_p).
class ResidueElem {
public:
    ResidueElem() = default;
    ResidueElem(std::uint64_t x, std::uint64_t y, PrimeIdeal mod);

    static ResidueElem zero(const PrimeIdeal& P) { return ResidueElem(0, 0, P); }
    static ResidueElem one(const PrimeIdeal& P) { return ResidueElem(1, 0, P); }
    static ResidueElem from_uint(std::uint64_t v, const PrimeIdeal& P) {
        return ResidueElem(v % P.p, 0, P);
    }
    static ResidueElem from_int(std::int64_t v, const PrimeIdeal& P);
    /// Generator s of F_{p^2} over F_p (inert primes only).
    static ResidueElem gen_s(const PrimeIdeal& P);

    std::uint64_t x() const { return x_; }
    std::uint64_t y() const { return y_; }
    const PrimeIdeal& modulus() const { return mod_; }
    std::uint64_t q() const { return mod_.residue_order(); }

    bool is_zero() const { return x_ == 0 && y_ == 0; }
    bool is_one() const { return x_ == 1 && y_ == 0; }

    ResidueElem operator-() const;
    ResidueElem operator+(const ResidueElem& o) const;
    ResidueElem operator-(const ResidueElem& o) const;
    ResidueElem operator*(const ResidueElem& o) const;
    ResidueElem operator/(const ResidueElem& o) const;
    ResidueElem inverse() const;
    ResidueElem pow(const Integer& e) const;

    bool operator==(const ResidueElem& o) const {
        return mod_ == o.mod_ && x_ == o.x_ && y_ == o.y_;
    }
    bool operator!=(const ResidueElem& o) const { return !(*this == o); }

    /// Index in [0, q): x + y*p. Used for enumeration tables.
    std::uint64_t index() const { return y_ * mod_.p + x_; }
    static ResidueElem from_index(std::uint64_t i, const PrimeIdeal& P);

    std::string to_string() const;

private:
    void check_same_modulus(const ResidueElem& o) const;

    std::uint64_t x_ = 0, y_ = 0;
    PrimeIdeal mod_;
};

std::ostream& operator<<(std::ostream& os, const ResidueElem& x);

inline ResidueElem zero_like(const ResidueElem& x) {
    return ResidueElem::zero(x.modulus());
}
inline ResidueElem one_like(const ResidueElem& x) {
    return ResidueElem::one(x.modulus());
}

/// Reduction O_{K,(P)} -> k_P. Throws bad_reduction if a denominator of x
/// is divisible by p.
ResidueElem reduce(const QuadElem& x, const PrimeIdeal& P);
ResidueElem reduce(const Rational& x, const PrimeIdeal& P);

/// True iff x = y^n for some y in k_P (0 counts as an n-th power).
/// Uses the exponent test x^((q-1)/gcd(n, q-1)) = 1 for x != 0.
bool is_nth_power_residue(const ResidueElem& x, unsigned n);

// ---------------------------------------------------------------------------
// CRT over the rational integers
// ---------------------------------------------------------------------------

/// Smallest non-negative solution of x = r_i (mod m_i). Moduli must be
/// pairwise coprime (invalid_input otherwise, even when the system happens
/// to be consistent).
Integer crt(const std::vector<std::pair<Integer, Integer>>& congruences);

// ---------------------------------------------------------------------------
// Small modular/number-theoretic utilities
// ---------------------------------------------------------------------------

bool is_prime_u64(std::uint64_t n);
std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m);
std::uint64_t invmod_u64(std::uint64_t a, std::uint64_t m);
/// Legendre symbol (a|p) for odd prime p: returns -1, 0, or 1.
int legendre_symbol(std::int64_t a, std::uint64_t p);
/// A square root of a modulo an odd prime p with (a|p) = 1 (Tonelli-Shanks).
std::uint64_t sqrt_mod_p(std::uint64_t a, std::uint64_t p);

} // namespace rankgain

#endif
