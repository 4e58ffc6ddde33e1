#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "unorm/errors.hpp"

namespace unorm {

// An integer of o_E modulo p^k, written a0 + a1*w against the fixed basis
// {1, w} of the unramified quadratic extension. Residues live in [0, p^k).
struct OEElement {
    std::uint64_t a0 = 0;
    std::uint64_t a1 = 0;
    bool operator==(const OEElement&) const = default;
};

// Valuation of a truncated value. When the element vanishes at the working
// precision only a lower bound is knowable.
struct Valuation {
    bool finite = true;
    long v = 0;           // exact valuation when finite
    long lower_bound = 0; // "v >= lower_bound" when not finite
};

class EElement;

// The ambient arithmetic world: F = Q_p (so o_F = Z_p, q = p and the
// uniformizer is the rational prime), and o_E = (Z/p^k)[w]/(g) for a monic
// quadratic g irreducible mod p. Immutable after construction; freely shared.
class RingContext {
public:
    // g defaults to w^2+1 when p = 3 mod 4, else w^2 - r for the smallest
    // quadratic non-residue r mod p. floor_digits is the precision floor:
    // any operation whose result would carry fewer trusted digits throws
    // PrecisionExhausted instead of degrading silently.
    RingContext(std::uint64_t p, int k, int floor_digits = 2);

    // Explicit defining quadratic w^2 + c1*w + c0 (c0, c1 given mod p^k).
    RingContext(std::uint64_t p, int k, std::uint64_t c0, std::uint64_t c1,
                int floor_digits);

    std::uint64_t p() const { return p_; }
    int k() const { return k_; }
    std::uint64_t pk() const { return pk_; }
    std::uint64_t q() const { return p_; } // residue field size of F
    int floor_digits() const { return floor_; }
    std::uint64_t g_c0() const { return c0_; }
    std::uint64_t g_c1() const { return c1_; }

    // The second root of g: wbar = -c1 - w, so g(wbar) = 0 holds exactly
    // at full precision and wbar != w mod p (g separable mod p).
    OEElement wbar() const { return wbar_; }

    // eps = w - wbar, a unit with conj(eps) = -eps.
    EElement eps() const;

    std::uint64_t p_pow(int e) const; // p^e for 0 <= e <= k

    // --- scalar helpers mod p^k -------------------------------------
    std::uint64_t mod(std::uint64_t x) const { return x % pk_; }
    std::uint64_t add(std::uint64_t x, std::uint64_t y) const;
    std::uint64_t sub(std::uint64_t x, std::uint64_t y) const;
    std::uint64_t mul(std::uint64_t x, std::uint64_t y) const;
    std::uint64_t neg(std::uint64_t x) const { return sub(0, x); }
    // Inverse of a unit scalar mod p^k (residue inverse + Newton doubling).
    std::uint64_t inv_scalar(std::uint64_t x) const;

    // --- OE-level arithmetic (exact mod p^k) ------------------------
    OEElement oe_add(OEElement x, OEElement y) const;
    OEElement oe_sub(OEElement x, OEElement y) const;
    OEElement oe_mul(OEElement x, OEElement y) const; // reduces w^2 by g
    OEElement oe_neg(OEElement x) const;
    OEElement oe_conj(OEElement x) const; // a0 + a1*wbar, reduced
    OEElement oe_inv(OEElement x) const;  // unit required
    bool oe_is_zero_mod(OEElement x, int j) const;
    int oe_val(OEElement x, int cap) const; // min(v_p(a0), v_p(a1)), capped
    OEElement oe_div_p(OEElement x, int j) const; // exact division by p^j

    // --- element factories ------------------------------------------
    EElement zero() const;
    EElement one() const;
    EElement from_int(long long v) const;
    EElement from_parts(std::uint64_t a0, std::uint64_t a1, int d = 0) const;
    EElement from_oe(OEElement u, int d = 0) const;
    EElement w() const;

    // Teichmuller lift of a nonzero residue (r0, r1): the unique unit with
    // x^(q^2-1) = 1 mod p^k reducing to the residue. Iterates x -> x^(q^2).
    EElement teichmuller(std::uint64_t r0, std::uint64_t r1) const;

    // All q^2-1 Teichmuller representatives, residue-lex order. Cached.
    const std::vector<EElement>& teichmuller_units() const;

private:
    void init();
    std::uint64_t p_;
    int k_;
    int floor_;
    std::uint64_t pk_;
    std::uint64_t c0_, c1_;
    OEElement wbar_;
    std::vector<std::uint64_t> ppow_;
    mutable std::vector<EElement> teich_cache_;
};

// An element of E at finite precision: the value p^(-d) * u with u in o_E
// stored mod p^k and prec trusted base-p digits of the value (it is known
// modulo p^prec). Invariant: prec + d <= k. Values are immutable; all
// operations are pure and propagate precision conservatively.
class EElement {
public:
    EElement() = default;
    EElement(const RingContext* ctx, int d, OEElement u, int prec);

    const RingContext& ctx() const { return *ctx_; }
    int den_exp() const { return d_; }
    const OEElement& mantissa() const { return u_; }
    int prec() const { return prec_; }

    EElement operator+(const EElement& o) const;
    EElement operator-(const EElement& o) const;
    EElement operator*(const EElement& o) const;
    EElement operator-() const;
    EElement conj() const;
    EElement invert() const;
    EElement operator/(const EElement& o) const;
    EElement pow(long long e) const; // negative exponents invert first

    EElement norm_to_F() const { return *this * conj(); }
    EElement trace_to_F() const { return *this + conj(); }

    Valuation valuation() const;
    bool is_unit() const;             // valuation exactly 0
    bool is_zero_at_prec() const;     // congruent to 0 mod p^prec
    // x = 0 mod p^j; PrecisionExhausted if j > prec.
    bool congruent_zero_mod(int j) const;
    // conj-fixed at the working precision (lands in F).
    bool is_f_rational() const;

    // Integral value reduced mod p^j as an OE pair. Requires valuation >= 0
    // and j <= prec.
    OEElement integral_residue(int j) const;

    // Rescale by p^e (e may be negative; exact, adjusts d / mantissa).
    EElement scale_by_p(int e) const;

    std::string to_string() const;        // "p^-d*(a0+a1*w mod p^k)@prec"
    std::string mantissa_string() const;  // "a0+a1*w mod p^k"

    friend bool equal_at_precision(const EElement& a, const EElement& b);
    friend int joint_precision(const EElement& a, const EElement& b);

private:
    void normalize();
    const RingContext* ctx_ = nullptr;
    int d_ = 0;
    OEElement u_;
    int prec_ = 0;
};

// Equality as congruence at the minimum of the two precisions; throws
// PrecisionExhausted below the configured floor.
bool equal_at_precision(const EElement& a, const EElement& b);
int joint_precision(const EElement& a, const EElement& b);

// Solve z * conj(z) = target with z = 1 mod p^j, for target in 1 + p_F^j.
// Digit-by-digit: each level is a residue trace equation, surjective since
// E/F is unramified.
EElement solve_unit_norm(const EElement& target, int j);

} // namespace unorm
