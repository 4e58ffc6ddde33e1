#include "unorm/residue.hpp"

namespace unorm {

ResidueField::ResidueField(const RingContext& ctx)
    : ResidueField(ctx.p(), ctx.g_c0(), ctx.g_c1()) {}

ResidueField::ResidueField(std::uint64_t p, std::uint64_t c0, std::uint64_t c1)
    : p_(p), c0_(static_cast<std::uint32_t>(c0 % p)),
      c1_(static_cast<std::uint32_t>(c1 % p)) {}

Fq2 ResidueField::add(Fq2 x, Fq2 y) const {
    return {static_cast<std::uint32_t>((x.a0 + y.a0) % p_),
            static_cast<std::uint32_t>((x.a1 + y.a1) % p_)};
}

Fq2 ResidueField::sub(Fq2 x, Fq2 y) const {
    return {static_cast<std::uint32_t>((x.a0 + p_ - y.a0) % p_),
            static_cast<std::uint32_t>((x.a1 + p_ - y.a1) % p_)};
}

Fq2 ResidueField::neg(Fq2 x) const { return sub(zero(), x); }

Fq2 ResidueField::mul(Fq2 x, Fq2 y) const {
    std::uint64_t t0 = static_cast<std::uint64_t>(x.a0) * y.a0 % p_;
    std::uint64_t t1 = (static_cast<std::uint64_t>(x.a0) * y.a1 +
                        static_cast<std::uint64_t>(x.a1) * y.a0) % p_;
    std::uint64_t t2 = static_cast<std::uint64_t>(x.a1) * y.a1 % p_;
    std::uint64_t r0 = (t0 + p_ * p_ - t2 * c0_ % p_ * 1) % p_;
    std::uint64_t r1 = (t1 + p_ * p_ - t2 * c1_ % p_ * 1) % p_;
    return {static_cast<std::uint32_t>(r0 % p_), static_cast<std::uint32_t>(r1 % p_)};
}

Fq2 ResidueField::frob(Fq2 x) const { return pow(x, p_); }

Fq2 ResidueField::pow(Fq2 x, std::uint64_t e) const {
    Fq2 r = one();
    while (e) {
        if (e & 1) r = mul(r, x);
        x = mul(x, x);
        e >>= 1;
    }
    return r;
}

Fq2 ResidueField::inv(Fq2 x) const {
    if (is_zero(x)) throw NonUnit("inverse of 0 in the residue field");
    return pow(x, q2() - 2);
}

FqMatrix::FqMatrix(const ResidueField* F, int n)
    : F_(F), n_(n), a_(static_cast<std::size_t>(n) * n, Fq2{0, 0}) {}

FqMatrix FqMatrix::identity(const ResidueField& F, int n) {
    FqMatrix m(&F, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = F.one();
    return m;
}

FqMatrix FqMatrix::mul(const FqMatrix& o) const {
    FqMatrix r(F_, n_);
    for (int i = 0; i < n_; ++i)
        for (int l = 0; l < n_; ++l) {
            Fq2 x = at(i, l);
            if (F_->is_zero(x)) continue;
            for (int j = 0; j < n_; ++j)
                r.at(i, j) = F_->add(r.at(i, j), F_->mul(x, o.at(l, j)));
        }
    return r;
}

FqMatrix FqMatrix::pow(std::uint64_t e) const {
    FqMatrix r = identity(*F_, n_);
    FqMatrix b = *this;
    while (e) {
        if (e & 1) r = r.mul(b);
        b = b.mul(b);
        e >>= 1;
    }
    return r;
}

bool FqMatrix::is_identity() const {
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            const Fq2& x = at(i, j);
            if (i == j ? !(x == F_->one()) : !F_->is_zero(x)) return false;
        }
    return true;
}

Fq2 FqMatrix::det() const {
    FqMatrix m = *this;
    Fq2 d = F_->one();
    for (int c = 0; c < n_; ++c) {
        int piv = -1;
        for (int r = c; r < n_; ++r)
            if (!F_->is_zero(m.at(r, c))) {
                piv = r;
                break;
            }
        if (piv < 0) return F_->zero();
        if (piv != c) {
            for (int j = 0; j < n_; ++j) std::swap(m.at(piv, j), m.at(c, j));
            d = F_->neg(d);
        }
        d = F_->mul(d, m.at(c, c));
        Fq2 inv = F_->inv(m.at(c, c));
        for (int r = c + 1; r < n_; ++r) {
            Fq2 f = F_->mul(m.at(r, c), inv);
            if (F_->is_zero(f)) continue;
            for (int j = c; j < n_; ++j)
                m.at(r, j) = F_->sub(m.at(r, j), F_->mul(f, m.at(c, j)));
        }
    }
    return d;
}

FqMatrix FqMatrix::inverse() const {
    FqMatrix m = *this;
    FqMatrix inv = identity(*F_, n_);
    for (int c = 0; c < n_; ++c) {
        int piv = -1;
        for (int r = c; r < n_; ++r)
            if (!F_->is_zero(m.at(r, c))) {
                piv = r;
                break;
            }
        if (piv < 0) throw NonUnitDeterminant("residue matrix is singular");
        if (piv != c)
            for (int j = 0; j < n_; ++j) {
                std::swap(m.at(piv, j), m.at(c, j));
                std::swap(inv.at(piv, j), inv.at(c, j));
            }
        Fq2 pin = F_->inv(m.at(c, c));
        for (int j = 0; j < n_; ++j) {
            m.at(c, j) = F_->mul(m.at(c, j), pin);
            inv.at(c, j) = F_->mul(inv.at(c, j), pin);
        }
        for (int r = 0; r < n_; ++r) {
            if (r == c) continue;
            Fq2 f = m.at(r, c);
            if (F_->is_zero(f)) continue;
            for (int j = 0; j < n_; ++j) {
                m.at(r, j) = F_->sub(m.at(r, j), F_->mul(f, m.at(c, j)));
                inv.at(r, j) = F_->sub(inv.at(r, j), F_->mul(f, inv.at(c, j)));
            }
        }
    }
    return inv;
}

FqMatrix FqMatrix::frob() const {
    FqMatrix r(F_, n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) r.at(i, j) = F_->frob(at(i, j));
    return r;
}

std::uint64_t FqMatrix::order(std::uint64_t cap) const {
    if (!invertible()) throw NonUnitDeterminant("order of a singular matrix");
    FqMatrix x = *this;
    for (std::uint64_t r = 1; r <= cap; ++r) {
        if (x.is_identity()) return r;
        x = x.mul(*this);
    }
    throw OrderOverflow("residue order exceeds cap " + std::to_string(cap));
}

std::vector<Fq2> FqMatrix::charpoly() const {
    // Berkowitz: division-free, via iterated Toeplitz products.
    const ResidueField& F = *F_;
    std::vector<Fq2> poly{F.one()}; // charpoly of the empty matrix
    for (int r = 1; r <= n_; ++r) {
        // principal r x r block; S = column (a_{0..r-2, r-1}), R = row
        std::vector<Fq2> C(static_cast<std::size_t>(r) + 1);
        C[0] = F.one();
        C[1] = F.neg(at(r - 1, r - 1));
        if (r >= 2) {
            std::vector<Fq2> S(static_cast<std::size_t>(r) - 1);
            std::vector<Fq2> Rrow(static_cast<std::size_t>(r) - 1);
            for (int i = 0; i < r - 1; ++i) {
                S[static_cast<std::size_t>(i)] = at(i, r - 1);
                Rrow[static_cast<std::size_t>(i)] = at(r - 1, i);
            }
            std::vector<Fq2> cur = S;
            for (int j = 2; j <= r; ++j) {
                Fq2 acc = F.zero();
                for (int i = 0; i < r - 1; ++i)
                    acc = F.add(acc, F.mul(Rrow[static_cast<std::size_t>(i)],
                                           cur[static_cast<std::size_t>(i)]));
                C[static_cast<std::size_t>(j)] = F.neg(acc);
                if (j < r) {
                    std::vector<Fq2> nxt(static_cast<std::size_t>(r) - 1,
                                         F.zero());
                    for (int i = 0; i < r - 1; ++i) {
                        Fq2 s = F.zero();
                        for (int l = 0; l < r - 1; ++l)
                            s = F.add(s, F.mul(at(i, l),
                                               cur[static_cast<std::size_t>(l)]));
                        nxt[static_cast<std::size_t>(i)] = s;
                    }
                    cur = nxt;
                }
            }
        }
        // poly <- C * poly (polynomial product, degree r)
        std::vector<Fq2> next(static_cast<std::size_t>(r) + 1, F.zero());
        for (std::size_t i = 0; i < C.size(); ++i)
            for (std::size_t j = 0; j < poly.size(); ++j) {
                if (i + j > static_cast<std::size_t>(r)) continue;
                next[i + j] = F.add(next[i + j], F.mul(C[i], poly[j]));
            }
        poly = next;
    }
    // poly holds coefficients high-to-low in lambda; reverse to low-to-high
    std::vector<Fq2> out(poly.rbegin(), poly.rend());
    return out;
}

std::uint64_t FqMatrix::hash_key() const {
    std::uint64_t h = 1469598103934665603ULL;
    for (const Fq2& x : a_) {
        h = (h ^ F_->index(x)) * 1099511628211ULL;
    }
    return h;
}

OrderSplit split_order(std::uint64_t r, std::uint64_t p) {
    OrderSplit s;
    s.rprime = r;
    while (s.rprime % p == 0) {
        s.rprime /= p;
        ++s.a;
    }
    return s;
}

} // namespace unorm
