#include "unorm/ring.hpp"

#include <algorithm>
#include <sstream>

namespace unorm {

namespace {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    base %= m;
    while (e) {
        if (e & 1) r = (base * r) % m;
        base = (base * base) % m;
        e >>= 1;
    }
    return r;
}

bool is_qr_mod_p(std::uint64_t a, std::uint64_t p) {
    a %= p;
    if (a == 0) return true;
    return pow_mod(a, (p - 1) / 2, p) == 1;
}

} // namespace

RingContext::RingContext(std::uint64_t p, int k, int floor_digits)
    : p_(p), k_(k), floor_(floor_digits) {
    init();
    if (p_ % 4 == 3) {
        c0_ = 1; // w^2 + 1; -1 is a non-residue
        c1_ = 0;
    } else {
        std::uint64_t r = 2;
        while (is_qr_mod_p(r, p_)) ++r;
        c0_ = sub(0, r); // w^2 - r, r the smallest non-residue
        c1_ = 0;
    }
    wbar_ = OEElement{sub(0, c1_), sub(0, 1)};
    teichmuller_units();
}

RingContext::RingContext(std::uint64_t p, int k, std::uint64_t c0,
                         std::uint64_t c1, int floor_digits)
    : p_(p), k_(k), floor_(floor_digits) {
    init();
    c0_ = c0 % pk_;
    c1_ = c1 % pk_;
    wbar_ = OEElement{sub(0, c1_), sub(0, 1)};
    std::uint64_t disc = (c1_ % p_ * (c1_ % p_) + 4 * p_ - 4 * (c0_ % p_)) % p_;
    if (disc == 0 || is_qr_mod_p(disc, p_))
        throw ConfigInvalid("defining quadratic is not irreducible mod p");
    teichmuller_units();
}

void RingContext::init() {
    if (!is_prime(p_) || p_ == 2)
        throw ConfigInvalid("p must be an odd prime, got " + std::to_string(p_));
    if (k_ < 2)
        throw ConfigInvalid("precision k must be at least 2 (got " +
                            std::to_string(k_) + ")");
    if (floor_ < 1 || floor_ > k_)
        throw ConfigInvalid("precision floor must lie in [1, k]");
    ppow_.assign(static_cast<std::size_t>(k_) + 1, 1);
    for (int i = 1; i <= k_; ++i) {
        ppow_[i] = ppow_[i - 1] * p_;
        if (ppow_[i] > (1ULL << 31))
            throw ConfigInvalid("p^k exceeds the supported 2^31 bound");
    }
    pk_ = ppow_[static_cast<std::size_t>(k_)];
    c0_ = c1_ = 0;
}

std::uint64_t RingContext::p_pow(int e) const {
    return ppow_[static_cast<std::size_t>(e)];
}

std::uint64_t RingContext::add(std::uint64_t x, std::uint64_t y) const {
    return (x % pk_ + y % pk_) % pk_;
}

std::uint64_t RingContext::sub(std::uint64_t x, std::uint64_t y) const {
    return (x % pk_ + pk_ - y % pk_) % pk_;
}

std::uint64_t RingContext::mul(std::uint64_t x, std::uint64_t y) const {
    return (x % pk_) * (y % pk_) % pk_;
}

std::uint64_t RingContext::inv_scalar(std::uint64_t x) const {
    x %= pk_;
    if (x % p_ == 0) throw NonUnit("scalar is divisible by p");
    // residue inverse, then Newton doubling z <- z(2 - xz)
    std::uint64_t z = pow_mod(x % p_, p_ - 2, p_);
    for (int digits = 1; digits < k_; digits *= 2)
        z = z * ((2 + pk_ - (x * z) % pk_) % pk_) % pk_;
    return z % pk_;
}

OEElement RingContext::oe_add(OEElement x, OEElement y) const {
    return {add(x.a0, y.a0), add(x.a1, y.a1)};
}

OEElement RingContext::oe_sub(OEElement x, OEElement y) const {
    return {sub(x.a0, y.a0), sub(x.a1, y.a1)};
}

OEElement RingContext::oe_neg(OEElement x) const {
    return {sub(0, x.a0), sub(0, x.a1)};
}

OEElement RingContext::oe_mul(OEElement x, OEElement y) const {
    // (x0 + x1 w)(y0 + y1 w) with w^2 = -c1 w - c0
    std::uint64_t t0 = mul(x.a0, y.a0);
    std::uint64_t t1 = add(mul(x.a0, y.a1), mul(x.a1, y.a0));
    std::uint64_t t2 = mul(x.a1, y.a1);
    return {sub(t0, mul(t2, c0_)), sub(t1, mul(t2, c1_))};
}

OEElement RingContext::oe_conj(OEElement x) const {
    // a0 + a1*wbar = (a0 - a1 c1) - a1 w
    return {sub(x.a0, mul(x.a1, c1_)), sub(0, x.a1)};
}

OEElement RingContext::oe_inv(OEElement x) const {
    if (x.a0 % p_ == 0 && x.a1 % p_ == 0)
        throw NonUnit("o_E element vanishes mod p");
    // residue inverse via conj/norm, then Newton doubling over o_E
    OEElement xb = oe_conj(x);
    OEElement nrm = oe_mul(x, xb); // scalar: the residue norm is anisotropic
    std::uint64_t ninv = pow_mod(nrm.a0 % p_, p_ - 2, p_);
    OEElement z{mul(xb.a0 % p_, ninv), mul(xb.a1 % p_, ninv)};
    for (int digits = 1; digits < k_; digits *= 2) {
        OEElement xz = oe_mul(x, z);
        OEElement two_minus{sub(2, xz.a0), sub(0, xz.a1)};
        z = oe_mul(z, two_minus);
    }
    return z;
}

bool RingContext::oe_is_zero_mod(OEElement x, int j) const {
    std::uint64_t pj = p_pow(std::min(j, k_));
    return x.a0 % pj == 0 && x.a1 % pj == 0;
}

int RingContext::oe_val(OEElement x, int cap) const {
    for (int v = 0; v < cap; ++v) {
        if (x.a0 % p_ != 0 || x.a1 % p_ != 0) return v;
        x.a0 /= p_;
        x.a1 /= p_;
    }
    return cap;
}

OEElement RingContext::oe_div_p(OEElement x, int j) const {
    std::uint64_t pj = p_pow(j);
    return {x.a0 / pj, x.a1 / pj};
}

EElement RingContext::zero() const { return EElement(this, 0, {0, 0}, k_); }
EElement RingContext::one() const { return EElement(this, 0, {1, 0}, k_); }

EElement RingContext::from_int(long long v) const {
    std::uint64_t r = v >= 0 ? static_cast<std::uint64_t>(v) % pk_
                             : sub(0, static_cast<std::uint64_t>(-v) % pk_);
    return EElement(this, 0, {r, 0}, k_);
}

EElement RingContext::from_parts(std::uint64_t a0, std::uint64_t a1, int d) const {
    return EElement(this, d, {a0 % pk_, a1 % pk_}, k_ - d);
}

EElement RingContext::from_oe(OEElement u, int d) const {
    return EElement(this, d, {u.a0 % pk_, u.a1 % pk_}, k_ - d);
}

EElement RingContext::w() const { return EElement(this, 0, {0, 1}, k_); }

EElement RingContext::eps() const {
    // w - wbar = 2w + c1
    return EElement(this, 0, {c1_, 2 % pk_}, k_);
}

EElement RingContext::teichmuller(std::uint64_t r0, std::uint64_t r1) const {
    r0 %= p_;
    r1 %= p_;
    if (r0 == 0 && r1 == 0) throw NonUnit("Teichmuller lift of 0");
    EElement x = from_parts(r0, r1);
    long long q2 = static_cast<long long>(p_ * p_);
    for (int i = 0; i < k_; ++i) x = x.pow(q2);
    return x;
}

const std::vector<EElement>& RingContext::teichmuller_units() const {
    if (teich_cache_.empty()) {
        teich_cache_.reserve(p_ * p_ - 1);
        for (std::uint64_t r0 = 0; r0 < p_; ++r0)
            for (std::uint64_t r1 = 0; r1 < p_; ++r1) {
                if (r0 == 0 && r1 == 0) continue;
                teich_cache_.push_back(teichmuller(r0, r1));
            }
    }
    return teich_cache_;
}

// ---------------------------------------------------------------------
// EElement

EElement::EElement(const RingContext* ctx, int d, OEElement u, int prec)
    : ctx_(ctx), d_(d), u_(u), prec_(prec) {
    if (d_ < 0) throw Error("negative denominator exponent");
    if (prec_ + d_ > ctx_->k()) prec_ = ctx_->k() - d_;
    if (prec_ < ctx_->floor_digits())
        throw PrecisionExhausted("element would carry only " +
                                 std::to_string(prec_) + " trusted digits");
    normalize();
}

void EElement::normalize() {
    // (d+1, p*u) and (d, u) denote the same value; keep d minimal. The
    // stripped digit is trusted because prec + d >= 1.
    const std::uint64_t p = ctx_->p();
    while (d_ > 0 && u_.a0 % p == 0 && u_.a1 % p == 0) {
        u_.a0 /= p;
        u_.a1 /= p;
        --d_;
    }
}

EElement EElement::operator+(const EElement& o) const {
    const RingContext& R = *ctx_;
    int D = std::max(d_, o.d_);
    std::uint64_t sx = R.p_pow(D - d_), sy = R.p_pow(D - o.d_);
    OEElement ux{R.mul(u_.a0, sx), R.mul(u_.a1, sx)};
    OEElement uy{R.mul(o.u_.a0, sy), R.mul(o.u_.a1, sy)};
    return EElement(ctx_, D, R.oe_add(ux, uy), std::min(prec_, o.prec_));
}

EElement EElement::operator-(const EElement& o) const { return *this + (-o); }

EElement EElement::operator-() const {
    return EElement(ctx_, d_, ctx_->oe_neg(u_), prec_);
}

EElement EElement::operator*(const EElement& o) const {
    int prec = std::min(prec_ - o.d_, o.prec_ - d_);
    return EElement(ctx_, d_ + o.d_, ctx_->oe_mul(u_, o.u_), prec);
}

EElement EElement::conj() const {
    return EElement(ctx_, d_, ctx_->oe_conj(u_), prec_);
}

EElement EElement::invert() const {
    const RingContext& R = *ctx_;
    int trusted = prec_ + d_;
    int v = R.oe_val(u_, trusted);
    if (v >= trusted)
        throw NonUnit("cannot invert: zero at working precision");
    OEElement unit_part = R.oe_div_p(u_, v);
    OEElement winv = R.oe_inv(unit_part);
    int nu = v - d_; // valuation of the value
    int dprime = std::max(nu, 0);
    if (nu < 0) {
        std::uint64_t s = R.p_pow(-nu);
        winv = {R.mul(winv.a0, s), R.mul(winv.a1, s)};
    }
    int prec = std::min(prec_ - 2 * nu, R.k() - dprime);
    return EElement(ctx_, dprime, winv, prec);
}

EElement EElement::operator/(const EElement& o) const {
    return *this * o.invert();
}

EElement EElement::pow(long long e) const {
    if (e < 0) return invert().pow(-e);
    EElement r = ctx_->one();
    EElement b = *this;
    unsigned long long m = static_cast<unsigned long long>(e);
    while (m) {
        if (m & 1) r = r * b;
        b = b * b;
        m >>= 1;
    }
    return r;
}

Valuation EElement::valuation() const {
    int trusted = prec_ + d_;
    int v = ctx_->oe_val(u_, trusted);
    if (v >= trusted) return {false, 0, prec_};
    return {true, v - d_, v - d_};
}

bool EElement::is_unit() const {
    Valuation v = valuation();
    return v.finite && v.v == 0;
}

bool EElement::is_zero_at_prec() const {
    return ctx_->oe_is_zero_mod(u_, prec_ + d_);
}

bool EElement::congruent_zero_mod(int j) const {
    if (j > prec_)
        throw PrecisionExhausted("congruence mod p^" + std::to_string(j) +
                                 " undecidable at precision " +
                                 std::to_string(prec_));
    return ctx_->oe_is_zero_mod(u_, j + d_);
}

bool EElement::is_f_rational() const {
    return equal_at_precision(*this, conj());
}

OEElement EElement::integral_residue(int j) const {
    if (j > prec_)
        throw PrecisionExhausted("residue mod p^" + std::to_string(j) +
                                 " beyond precision " + std::to_string(prec_));
    if (d_ > 0) throw NonUnit("value is not integral");
    std::uint64_t pj = ctx_->p_pow(j);
    return {u_.a0 % pj, u_.a1 % pj};
}

EElement EElement::scale_by_p(int e) const {
    if (e == 0) return *this;
    if (e > 0) {
        int drop = std::min(d_, e);
        int extra = e - drop;
        OEElement u = u_;
        if (extra > 0) {
            std::uint64_t s = ctx_->p_pow(std::min(extra, ctx_->k()));
            u = {ctx_->mul(u.a0, s), ctx_->mul(u.a1, s)};
        }
        int nd = d_ - drop;
        return EElement(ctx_, nd, u, std::min(prec_ + e, ctx_->k() - nd));
    }
    return EElement(ctx_, d_ - e, u_, prec_ + e);
}

std::string EElement::mantissa_string() const {
    std::ostringstream os;
    os << u_.a0 << "+" << u_.a1 << "*w mod " << ctx_->pk();
    return os.str();
}

std::string EElement::to_string() const {
    std::ostringstream os;
    os << "p^-" << d_ << "*(" << mantissa_string() << ")@" << prec_;
    return os.str();
}

int joint_precision(const EElement& a, const EElement& b) {
    int m = std::min(a.prec_, b.prec_);
    if (m < a.ctx_->floor_digits())
        throw PrecisionExhausted("comparison at " + std::to_string(m) +
                                 " digits is below the floor");
    return m;
}

bool equal_at_precision(const EElement& a, const EElement& b) {
    int m = joint_precision(a, b);
    EElement diff = a - b;
    return diff.ctx().oe_is_zero_mod(diff.mantissa(), m + diff.den_exp());
}

EElement solve_unit_norm(const EElement& target, int j) {
    const RingContext& R = target.ctx();
    if (j < 1) throw NotPrincipalUnit("level j must be >= 1");
    if (!target.is_f_rational())
        throw NotPrincipalUnit("target is not conj-fixed at precision");
    EElement dev = target - R.one();
    if (!dev.congruent_zero_mod(std::min(j, dev.prec())))
        throw NotPrincipalUnit("target is not in 1 + p^j");

    // Lift digit by digit: if z zbar = target mod p^l, correcting z by
    // 1 + p^l y changes the norm by 1 + p^l Tr(y) mod p^(l+1); y = c/2
    // solves the trace equation within F.
    int goal = target.prec();
    EElement z = R.one();
    std::uint64_t half = R.inv_scalar(2);
    for (int l = j; l < goal; ++l) {
        EElement ratio = target * (z * z.conj()).invert();
        EElement delta = ratio - R.one();
        if (delta.is_zero_at_prec()) break;
        if (!delta.congruent_zero_mod(std::min(l, delta.prec())))
            throw NotPrincipalUnit("norm lifting lost a digit");
        OEElement res = delta.integral_residue(std::min(l + 1, delta.prec()));
        std::uint64_t c = (res.a0 / R.p_pow(l)) % R.p();
        if (c == 0) continue;
        std::uint64_t y = R.mul(c, half);
        z = z * R.from_parts(R.add(1, R.mul(y, R.p_pow(l))), 0);
    }
    return z;
}

} // namespace unorm
