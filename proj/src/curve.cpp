#include "idsdvbs/curve.hpp"

#include "idsdvbs/hash.hpp"
#include "idsdvbs/instrumentation.hpp"

namespace idsdvbs {

std::ostream& operator<<(std::ostream& os, const G1Point& pt)
{
    if (pt.is_identity())
        return os << "O";
    return os << "(" << pt.x() << ", " << pt.y() << ")";
}

namespace detail {

bool on_curve(const ModulusRef& fp, const G1Point& pt)
{
    if (pt.is_identity())
        return true;
    if (pt.x().modulus() != fp && (!pt.x().modulus() || pt.x().modulus()->value() != fp->value()))
        return false;
    const auto& x = pt.x();
    const auto& y = pt.y();
    return y * y == x * x * x + x;
}

G1Point dbl(const ModulusRef& fp, const G1Point& a)
{
    if (a.is_identity() || a.y().is_zero())
        return G1Point::identity();
    const FpElement& x = a.x();
    const FpElement& y = a.y();
    FpElement three(fp, 3L);
    FpElement lambda = (three * x * x + FpElement::one(fp)) * (y + y).inverse();
    FpElement x3 = lambda * lambda - x - x;
    FpElement y3 = lambda * (x - x3) - y;
    return {x3, y3};
}

G1Point add(const ModulusRef& fp, const G1Point& a, const G1Point& b)
{
    if (a.is_identity())
        return b;
    if (b.is_identity())
        return a;
    if (a.x() == b.x()) {
        if ((a.y() + b.y()).is_zero())
            return G1Point::identity();
        return dbl(fp, a);
    }
    FpElement lambda = (b.y() - a.y()) * (b.x() - a.x()).inverse();
    FpElement x3 = lambda * lambda - a.x() - b.x();
    FpElement y3 = lambda * (a.x() - x3) - a.y();
    return {x3, y3};
}

G1Point mul(const ModulusRef& fp, const BigInt& k, const G1Point& a)
{
    if (k == 0 || a.is_identity())
        return G1Point::identity();
    G1Point base = a;
    BigInt e = k;
    if (e < 0) {
        e = -e;
        base = G1Point(base.x(), -base.y());
    }
    G1Point acc;
    for (auto i = bit_length(e); i-- > 0;) {
        acc = dbl(fp, acc);
        if (mpz_tstbit(e.get_mpz_t(), i))
            acc = add(fp, acc, base);
    }
    return acc;
}

G1Point map_to_subgroup(const ModulusRef& fp, const BigInt& cofactor, ByteView data)
{
    constexpr std::uint32_t max_counter = 1u << 16;
    for (std::uint32_t ctr = 0; ctr < max_counter; ++ctr) {
        Bytes ctr_bytes;
        append_u32_be(ctr_bytes, ctr);
        Digest d = Sha256().update(data).update(ctr_bytes).finish();
        FpElement x(fp, os2ip(d));
        auto y = fp_sqrt(x * x * x + x);
        if (!y)
            continue;
        G1Point pt = mul(fp, cofactor, G1Point(x, *y));
        if (!pt.is_identity())
            return pt;
    }
    throw Error(ErrorCode::HashToPointFailed, "no curve point found within 2^16 counters");
}

}  // namespace detail

CurveParams CurveParams::create(const BigInt& p, const BigInt& q, const BigInt& gx, const BigInt& gy,
                                std::string security_label)
{
    if (!is_probable_prime(p))
        throw Error(ErrorCode::DomainError, "p is not prime");
    if (!is_probable_prime(q))
        throw Error(ErrorCode::DomainError, "q is not prime");
    if (mod(p, 4) != 3)
        throw Error(ErrorCode::DomainError, "p is not 3 mod 4");
    if (mod(p + 1, q) != 0)
        throw Error(ErrorCode::DomainError, "q does not divide p + 1");
    BigInt cofactor = (p + 1) / q;
    if (mod(cofactor, q) == 0)
        throw Error(ErrorCode::DomainError, "q divides the cofactor");

    CurveParams params;
    params.fp_ = make_modulus(p);
    params.fq_ = make_modulus(q);
    params.cofactor_ = cofactor;
    params.label_ = std::move(security_label);
    if (gx >= p || gy >= p || gx < 0 || gy < 0)
        throw Error(ErrorCode::InvalidPoint, "generator coordinates out of range");
    params.generator_ = G1Point(FpElement(params.fp_, gx), FpElement(params.fp_, gy));
    if (!detail::on_curve(params.fp_, params.generator_))
        throw Error(ErrorCode::InvalidPoint, "generator is not on the curve");
    if (!in_subgroup(params, params.generator_))
        throw Error(ErrorCode::InvalidPoint, "generator does not have order q");
    return params;
}

bool is_on_curve(const CurveParams& params, const G1Point& pt)
{
    return detail::on_curve(params.fp(), pt);
}

bool in_subgroup(const CurveParams& params, const G1Point& pt)
{
    return detail::on_curve(params.fp(), pt) && detail::mul(params.fp(), params.q(), pt).is_identity();
}

void require_on_curve(const CurveParams& params, const G1Point& pt)
{
    if (!is_on_curve(params, pt))
        throw Error(ErrorCode::InvalidPoint, "point is not on y^2 = x^3 + x");
}

G1Point point_neg(const CurveParams& params, const G1Point& a)
{
    require_on_curve(params, a);
    if (a.is_identity())
        return a;
    return {a.x(), -a.y()};
}

G1Point point_add(const CurveParams& params, const G1Point& a, const G1Point& b)
{
    require_on_curve(params, a);
    require_on_curve(params, b);
    record_op(OpKind::G1Add);
    return detail::add(params.fp(), a, b);
}

G1Point scalar_mul(const CurveParams& params, const BigInt& k, const G1Point& a)
{
    require_on_curve(params, a);
    record_op(OpKind::G1ScalarMul);
    return detail::mul(params.fp(), k, a);
}

G1Point scalar_mul(const CurveParams& params, const Scalar& k, const G1Point& a)
{
    return scalar_mul(params, k.value(), a);
}

G1Point hash_to_point(const CurveParams& params, ByteView data)
{
    record_op(OpKind::MapToPoint);
    return detail::map_to_subgroup(params.fp(), params.cofactor(), data);
}

Bytes encode_point(const CurveParams& params, const G1Point& pt)
{
    const auto w = params.fp()->width();
    Bytes out;
    out.reserve(1 + 2 * w);
    if (pt.is_identity()) {
        out.assign(1 + 2 * w, 0);
        return out;
    }
    out.push_back(0x04);
    append(out, pt.x().to_bytes());
    append(out, pt.y().to_bytes());
    return out;
}

G1Point decode_point(const CurveParams& params, ByteView data, std::size_t base_offset)
{
    const auto w = params.fp()->width();
    if (data.size() != 1 + 2 * w)
        throw DecodeError(base_offset, "point encoding must be " + std::to_string(1 + 2 * w) + " bytes");
    const std::uint8_t tag = data[0];
    if (tag == 0x00) {
        for (std::size_t i = 1; i < data.size(); ++i) {
            if (data[i] != 0)
                throw DecodeError(base_offset + i, "identity encoding has nonzero coordinates");
        }
        return G1Point::identity();
    }
    if (tag != 0x04)
        throw DecodeError(base_offset, "unknown point tag");
    auto x = FpElement::from_bytes(params.fp(), data.subspan(1, w), base_offset + 1);
    auto y = FpElement::from_bytes(params.fp(), data.subspan(1 + w, w), base_offset + 1 + w);
    G1Point pt(std::move(x), std::move(y));
    if (!is_on_curve(params, pt))
        throw DecodeError(base_offset, "point is not on the curve");
    if (!detail::mul(params.fp(), params.q(), pt).is_identity())
        throw DecodeError(base_offset, "point is not in the order-q subgroup");
    return pt;
}

Bytes encode_gt(const CurveParams&, const GTElement& g)
{
    return g.value().to_bytes();
}

GTElement decode_gt(const CurveParams& params, ByteView data, std::size_t base_offset)
{
    GTElement g(Fp2Element::from_bytes(params.fp(), data, base_offset));
    if (!in_gt(params, g))
        throw DecodeError(base_offset, "value is not in the order-q subgroup of F_p^2");
    return g;
}

Bytes encode_scalar(const CurveParams& params, const Scalar& s)
{
    return i2osp(s.value(), params.scalar_size());
}

Scalar decode_scalar(const CurveParams& params, ByteView data, std::size_t base_offset)
{
    return Scalar::from_bytes(params.fq(), data, base_offset);
}

}  // namespace idsdvbs
