#include "idsdvbs/algebra.hpp"

namespace idsdvbs {

std::size_t bit_length(const BigInt& v)
{
    if (v == 0)
        return 0;
    return mpz_sizeinbase(v.get_mpz_t(), 2);
}

std::size_t byte_width(const BigInt& modulus)
{
    BigInt max = modulus - 1;
    auto bits = bit_length(max);
    return bits == 0 ? 1 : (bits + 7) / 8;
}

Bytes i2osp(const BigInt& v, std::size_t width)
{
    if (v < 0)
        throw Error(ErrorCode::DomainError, "cannot encode a negative integer");
    std::size_t needed = (bit_length(v) + 7) / 8;
    if (needed > width)
        throw Error(ErrorCode::DomainError, "integer does not fit in " + std::to_string(width) + " bytes");
    Bytes out(width, 0);
    std::size_t count = 0;
    mpz_export(out.data() + (width - needed), &count, 1, 1, 1, 0, v.get_mpz_t());
    return out;
}

BigInt os2ip(ByteView data)
{
    BigInt v;
    if (!data.empty())
        mpz_import(v.get_mpz_t(), data.size(), 1, 1, 1, 0, data.data());
    return v;
}

bool is_probable_prime(const BigInt& n)
{
    return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

BigInt mod(const BigInt& v, const BigInt& m)
{
    BigInt r;
    mpz_mod(r.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
    return r;
}

BigInt parse_decimal(const std::string& text)
{
    if (text.empty())
        throw DecodeError(0, "empty integer");
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] < '0' || text[i] > '9')
            throw DecodeError(i, "invalid decimal digit in '" + text + "'");
    }
    return BigInt(text, 10);
}

Modulus::Modulus(BigInt value) : value_(std::move(value))
{
    if (value_ < 2)
        throw Error(ErrorCode::DomainError, "modulus must be at least 2");
    bits_ = bit_length(value_);
    width_ = byte_width(value_);
}

ModulusRef make_modulus(const BigInt& value)
{
    return std::make_shared<const Modulus>(value);
}

std::optional<FpElement> fp_sqrt(const FpElement& a)
{
    const BigInt& p = a.modulus()->value();
    if (mod(p, 4) != 3)
        throw Error(ErrorCode::DomainError, "square root requires p = 3 (mod 4)");
    if (a.is_zero())
        return a;
    FpElement root = a.pow((p + 1) / 4);
    if (root * root != a)
        return std::nullopt;
    FpElement other = -root;
    return other.value() < root.value() ? other : root;
}

bool is_square(const FpElement& a)
{
    if (a.is_zero())
        return true;
    const BigInt& p = a.modulus()->value();
    return a.pow((p - 1) / 2).is_one();
}

Fp2Element::Fp2Element(FpElement a, FpElement b) : a_(std::move(a)), b_(std::move(b))
{
    detail::require_same(a_.modulus(), b_.modulus());
}

Fp2Element Fp2Element::zero(const ModulusRef& m)
{
    return {FpElement::zero(m), FpElement::zero(m)};
}

Fp2Element Fp2Element::one(const ModulusRef& m)
{
    return {FpElement::one(m), FpElement::zero(m)};
}

Fp2Element Fp2Element::from_base(const FpElement& a)
{
    return {a, FpElement::zero(a.modulus())};
}

Fp2Element operator+(const Fp2Element& x, const Fp2Element& y)
{
    return {x.a_ + y.a_, x.b_ + y.b_};
}

Fp2Element operator-(const Fp2Element& x, const Fp2Element& y)
{
    return {x.a_ - y.a_, x.b_ - y.b_};
}

Fp2Element operator*(const Fp2Element& x, const Fp2Element& y)
{
    // Karatsuba: (a+bi)(c+di) = (ac - bd) + ((a+b)(c+d) - ac - bd) i
    FpElement ac = x.a_ * y.a_;
    FpElement bd = x.b_ * y.b_;
    FpElement cross = (x.a_ + x.b_) * (y.a_ + y.b_);
    return {ac - bd, cross - ac - bd};
}

Fp2Element Fp2Element::operator-() const
{
    return {-a_, -b_};
}

Fp2Element Fp2Element::square() const
{
    // (a+bi)^2 = (a+b)(a-b) + 2ab i
    FpElement ab = a_ * b_;
    return {(a_ + b_) * (a_ - b_), ab + ab};
}

Fp2Element Fp2Element::conjugate() const
{
    return {a_, -b_};
}

Fp2Element Fp2Element::inverse() const
{
    FpElement norm = a_ * a_ + b_ * b_;
    if (norm.is_zero())
        throw Error(ErrorCode::InversionOfZero, "Fp2 element has no inverse");
    FpElement inv = norm.inverse();
    return {a_ * inv, -(b_ * inv)};
}

Fp2Element Fp2Element::pow(const BigInt& e) const
{
    if (e < 0)
        return inverse().pow(-e);
    Fp2Element result = one(modulus());
    for (auto i = bit_length(e); i-- > 0;) {
        result = result.square();
        if (mpz_tstbit(e.get_mpz_t(), i))
            result = result * *this;
    }
    return result;
}

Bytes Fp2Element::to_bytes() const
{
    Bytes out = a_.to_bytes();
    append(out, b_.to_bytes());
    return out;
}

Fp2Element Fp2Element::from_bytes(const ModulusRef& m, ByteView data, std::size_t base_offset)
{
    if (data.size() != 2 * m->width())
        throw DecodeError(base_offset, "Fp2 element has wrong width");
    auto half = m->width();
    return {FpElement::from_bytes(m, data.first(half), base_offset),
            FpElement::from_bytes(m, data.subspan(half), base_offset + half)};
}

Fp2Element fp2_mul(const Fp2Element& x, const Fp2Element& y)
{
    return x * y;
}

Scalar zq_sample_unit(RandomSource& rng, const ModulusRef& q)
{
    if (!q || q->value() <= 2)
        throw Error(ErrorCode::DomainError, "sampling a unit requires q > 2");
    return Scalar(q, rng.below(q->value() - 1) + 1);
}

}  // namespace idsdvbs
