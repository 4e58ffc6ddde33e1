#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "unorm/errors.hpp"
#include "unorm/ring.hpp"

namespace unorm {

// F_{q^2} = F_p[w]/(g mod p), the residue field of o_E. Used for residue
// images, order computations and the finite-group enumerations; independent
// of the truncated-precision layer so it can serve as an oracle for it.
struct Fq2 {
    std::uint32_t a0 = 0;
    std::uint32_t a1 = 0;
    bool operator==(const Fq2&) const = default;
};

class ResidueField {
public:
    explicit ResidueField(const RingContext& ctx);
    ResidueField(std::uint64_t p, std::uint64_t c0, std::uint64_t c1);

    std::uint64_t p() const { return p_; }
    std::uint64_t q2() const { return p_ * p_; }

    Fq2 zero() const { return {0, 0}; }
    Fq2 one() const { return {1, 0}; }
    Fq2 from(std::uint64_t a0, std::uint64_t a1 = 0) const {
        return {static_cast<std::uint32_t>(a0 % p_),
                static_cast<std::uint32_t>(a1 % p_)};
    }

    Fq2 add(Fq2 x, Fq2 y) const;
    Fq2 sub(Fq2 x, Fq2 y) const;
    Fq2 neg(Fq2 x) const;
    Fq2 mul(Fq2 x, Fq2 y) const;
    Fq2 inv(Fq2 x) const;
    Fq2 pow(Fq2 x, std::uint64_t e) const;
    Fq2 frob(Fq2 x) const; // x -> x^q, the residue of conjugation
    bool is_zero(Fq2 x) const { return x.a0 == 0 && x.a1 == 0; }

    // index <-> element, for dense enumeration (index in [0, q^2))
    Fq2 from_index(std::uint64_t i) const { return from(i % p_, i / p_); }
    std::uint64_t index(Fq2 x) const { return x.a0 + p_ * x.a1; }

private:
    std::uint64_t p_;
    std::uint32_t c0_, c1_;
};

// Dense matrix over F_{q^2}.
class FqMatrix {
public:
    FqMatrix() = default;
    FqMatrix(const ResidueField* F, int n);

    static FqMatrix identity(const ResidueField& F, int n);

    int size() const { return n_; }
    const ResidueField& field() const { return *F_; }
    Fq2& at(int i, int j) { return a_[static_cast<std::size_t>(i * n_ + j)]; }
    const Fq2& at(int i, int j) const {
        return a_[static_cast<std::size_t>(i * n_ + j)];
    }

    FqMatrix mul(const FqMatrix& o) const;
    FqMatrix pow(std::uint64_t e) const;
    bool is_identity() const;
    bool operator==(const FqMatrix& o) const { return a_ == o.a_; }

    Fq2 det() const;
    bool invertible() const { return !F_->is_zero(det()); }
    FqMatrix inverse() const;
    FqMatrix frob() const; // entrywise x -> x^q

    // order of the matrix in GL_n(F_{q^2}); throws OrderOverflow past cap
    std::uint64_t order(std::uint64_t cap = 1000000) const;

    // characteristic polynomial, monic, coefficients low-to-high (division
    // free expansion)
    std::vector<Fq2> charpoly() const;

    std::uint64_t hash_key() const;

private:
    const ResidueField* F_ = nullptr;
    int n_ = 0;
    std::vector<Fq2> a_;
};

// order = r' * p^a with gcd(r', p) = 1
struct OrderSplit {
    std::uint64_t rprime = 1;
    int a = 0;
};
OrderSplit split_order(std::uint64_t r, std::uint64_t p);

} // namespace unorm
