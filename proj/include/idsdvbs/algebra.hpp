#pragma once

// Modular arithmetic for the base field F_p, its quadratic extension
// F_p[i]/(i^2 + 1), and the scalar field Z_q. Values are immutable and carry
// a shared reference to their modulus; mixing moduli is a ParamMismatch.

#include "idsdvbs/bigint.hpp"
#include "idsdvbs/errors.hpp"
#include "idsdvbs/random.hpp"

#include <memory>
#include <optional>
#include <ostream>

namespace idsdvbs {

class Modulus {
public:
    explicit Modulus(BigInt value);

    const BigInt& value() const noexcept { return value_; }
    std::size_t bits() const noexcept { return bits_; }
    std::size_t width() const noexcept { return width_; }

private:
    BigInt value_;
    std::size_t bits_;
    std::size_t width_;
};

using ModulusRef = std::shared_ptr<const Modulus>;

ModulusRef make_modulus(const BigInt& value);

namespace detail {
inline void require_same(const ModulusRef& a, const ModulusRef& b)
{
    if (!a || !b)
        throw Error(ErrorCode::ParamMismatch, "operand has no modulus");
    if (a != b && a->value() != b->value())
        throw Error(ErrorCode::ParamMismatch, "operands live in different moduli");
}
}  // namespace detail

// Residue class modulo a shared Modulus. The tag keeps base-field elements and
// scalars from being mixed up at compile time.
template <class Tag>
class Residue {
public:
    Residue() = default;

    Residue(ModulusRef m, const BigInt& v) : m_(std::move(m))
    {
        if (!m_)
            throw Error(ErrorCode::ParamMismatch, "null modulus");
        value_ = mod(v, m_->value());
    }

    Residue(ModulusRef m, long v) : Residue(std::move(m), BigInt(v)) {}

    static Residue zero(ModulusRef m) { return Residue(std::move(m), 0L); }
    static Residue one(ModulusRef m) { return Residue(std::move(m), 1L); }

    const BigInt& value() const noexcept { return value_; }
    const ModulusRef& modulus() const noexcept { return m_; }
    bool is_zero() const noexcept { return value_ == 0; }
    bool is_one() const noexcept { return value_ == 1; }

    friend Residue operator+(const Residue& a, const Residue& b)
    {
        detail::require_same(a.m_, b.m_);
        BigInt r = a.value_ + b.value_;
        if (r >= a.m_->value())
            r -= a.m_->value();
        return Residue(a.m_, std::move(r), Raw{});
    }

    friend Residue operator-(const Residue& a, const Residue& b)
    {
        detail::require_same(a.m_, b.m_);
        BigInt r = a.value_ - b.value_;
        if (r < 0)
            r += a.m_->value();
        return Residue(a.m_, std::move(r), Raw{});
    }

    friend Residue operator*(const Residue& a, const Residue& b)
    {
        detail::require_same(a.m_, b.m_);
        BigInt r = a.value_ * b.value_;
        mpz_mod(r.get_mpz_t(), r.get_mpz_t(), a.m_->value().get_mpz_t());
        return Residue(a.m_, std::move(r), Raw{});
    }

    Residue operator-() const
    {
        if (value_ == 0)
            return *this;
        return Residue(m_, m_->value() - value_, Raw{});
    }

    Residue& operator+=(const Residue& o) { return *this = *this + o; }
    Residue& operator-=(const Residue& o) { return *this = *this - o; }
    Residue& operator*=(const Residue& o) { return *this = *this * o; }

    Residue inverse() const
    {
        if (!m_)
            throw Error(ErrorCode::ParamMismatch, "null modulus");
        BigInt r;
        if (value_ == 0 || mpz_invert(r.get_mpz_t(), value_.get_mpz_t(), m_->value().get_mpz_t()) == 0)
            throw Error(ErrorCode::InversionOfZero, "element has no inverse");
        return Residue(m_, std::move(r), Raw{});
    }

    Residue pow(const BigInt& e) const
    {
        if (!m_)
            throw Error(ErrorCode::ParamMismatch, "null modulus");
        if (e < 0)
            return inverse().pow(-e);
        BigInt r;
        mpz_powm(r.get_mpz_t(), value_.get_mpz_t(), e.get_mpz_t(), m_->value().get_mpz_t());
        return Residue(m_, std::move(r), Raw{});
    }

    /// Fixed-width big-endian encoding (width of the modulus).
    Bytes to_bytes() const { return i2osp(value_, m_->width()); }

    /// Rejects wrong lengths and non-reduced values.
    static Residue from_bytes(ModulusRef m, ByteView data, std::size_t base_offset = 0)
    {
        if (data.size() != m->width())
            throw DecodeError(base_offset, "field element has wrong width");
        BigInt v = os2ip(data);
        if (v >= m->value())
            throw DecodeError(base_offset, "field element not reduced");
        return Residue(std::move(m), std::move(v), Raw{});
    }

    friend bool operator==(const Residue& a, const Residue& b)
    {
        if (a.m_ != b.m_ && (!a.m_ || !b.m_ || a.m_->value() != b.m_->value()))
            return false;
        return a.value_ == b.value_;
    }

    friend std::ostream& operator<<(std::ostream& os, const Residue& a) { return os << a.value_; }

private:
    struct Raw {};
    Residue(ModulusRef m, BigInt v, Raw) : m_(std::move(m)), value_(std::move(v)) {}

    ModulusRef m_;
    BigInt value_;
};

struct BaseFieldTag;
struct ScalarFieldTag;

using FpElement = Residue<BaseFieldTag>;
using Scalar = Residue<ScalarFieldTag>;

template <class Tag>
Residue<Tag> fp_inv(const Residue<Tag>& a)
{
    return a.inverse();
}

/// Square root for moduli p = 3 (mod 4), computed as a^((p+1)/4). Of the two
/// roots the numerically smaller is returned. nullopt for non-residues.
/// Throws DomainError when p != 3 (mod 4).
std::optional<FpElement> fp_sqrt(const FpElement& a);

/// Legendre-style test via Euler's criterion; zero counts as a square.
bool is_square(const FpElement& a);

// a + b*i with i^2 = -1.
class Fp2Element {
public:
    Fp2Element() = default;
    Fp2Element(FpElement a, FpElement b);

    static Fp2Element zero(const ModulusRef& m);
    static Fp2Element one(const ModulusRef& m);
    static Fp2Element from_base(const FpElement& a);

    const FpElement& real() const noexcept { return a_; }
    const FpElement& imag() const noexcept { return b_; }
    const ModulusRef& modulus() const noexcept { return a_.modulus(); }

    bool is_zero() const noexcept { return a_.is_zero() && b_.is_zero(); }
    bool is_one() const noexcept { return a_.is_one() && b_.is_zero(); }

    friend Fp2Element operator+(const Fp2Element& x, const Fp2Element& y);
    friend Fp2Element operator-(const Fp2Element& x, const Fp2Element& y);
    friend Fp2Element operator*(const Fp2Element& x, const Fp2Element& y);
    Fp2Element operator-() const;

    Fp2Element square() const;
    /// Frobenius x -> x^p, which for i^2 = -1 is complex conjugation.
    Fp2Element conjugate() const;
    Fp2Element inverse() const;
    Fp2Element pow(const BigInt& e) const;

    friend bool operator==(const Fp2Element& x, const Fp2Element& y)
    {
        return x.a_ == y.a_ && x.b_ == y.b_;
    }

    Bytes to_bytes() const;
    static Fp2Element from_bytes(const ModulusRef& m, ByteView data, std::size_t base_offset = 0);

private:
    FpElement a_, b_;
};

Fp2Element fp2_mul(const Fp2Element& x, const Fp2Element& y);

/// Uniform over [1, q-1]. Requires q > 2.
Scalar zq_sample_unit(RandomSource& rng, const ModulusRef& q);

}  // namespace idsdvbs
