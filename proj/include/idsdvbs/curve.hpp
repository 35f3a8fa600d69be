#pragma once

// The supersingular curve E: y^2 = x^3 + x over F_p (p = 3 mod 4), its
// order-q subgroup G1, the distortion map into E(F_p^2), the reduced Tate
// pairing into the order-q subgroup of F_p^2*, and the try-and-increment
// hash onto G1.

#include "idsdvbs/algebra.hpp"

#include <string>

namespace idsdvbs {

class G1Point {
public:
    /// The point at infinity.
    G1Point() = default;
    G1Point(FpElement x, FpElement y) : infinity_(false), x_(std::move(x)), y_(std::move(y)) {}

    static G1Point identity() { return {}; }

    bool is_identity() const noexcept { return infinity_; }
    const FpElement& x() const noexcept { return x_; }
    const FpElement& y() const noexcept { return y_; }

    friend bool operator==(const G1Point& a, const G1Point& b)
    {
        if (a.infinity_ || b.infinity_)
            return a.infinity_ == b.infinity_;
        return a.x_ == b.x_ && a.y_ == b.y_;
    }

    friend std::ostream& operator<<(std::ostream& os, const G1Point& pt);

private:
    bool infinity_ = true;
    FpElement x_, y_;
};

class CurveParams {
public:
    /// Validates every invariant and throws DomainError / InvalidPoint on the
    /// first violation: p, q prime; p = 3 (mod 4); q * cofactor = p + 1;
    /// q does not divide the cofactor; the generator lies on the curve, is not
    /// the identity and has order q.
    static CurveParams create(const BigInt& p, const BigInt& q, const BigInt& gx, const BigInt& gy,
                              std::string security_label);

    const BigInt& p() const noexcept { return fp_->value(); }
    const BigInt& q() const noexcept { return fq_->value(); }
    const BigInt& cofactor() const noexcept { return cofactor_; }
    const ModulusRef& fp() const noexcept { return fp_; }
    const ModulusRef& fq() const noexcept { return fq_; }
    const G1Point& generator() const noexcept { return generator_; }
    const std::string& security_label() const noexcept { return label_; }

    Scalar scalar(const BigInt& v) const { return Scalar(fq_, v); }
    FpElement fp_element(const BigInt& v) const { return FpElement(fp_, v); }

    /// Encoded size of a G1 point / GT element / scalar.
    std::size_t point_size() const noexcept { return 1 + 2 * fp_->width(); }
    std::size_t gt_size() const noexcept { return 2 * fp_->width(); }
    std::size_t scalar_size() const noexcept { return fq_->width(); }

    friend bool operator==(const CurveParams& a, const CurveParams& b)
    {
        return a.p() == b.p() && a.q() == b.q() && a.generator_ == b.generator_;
    }

private:
    CurveParams() = default;

    ModulusRef fp_, fq_;
    BigInt cofactor_;
    G1Point generator_;
    std::string label_;
};

bool is_on_curve(const CurveParams& params, const G1Point& pt);

/// q * pt == identity (uncounted).
bool in_subgroup(const CurveParams& params, const G1Point& pt);

/// Throws InvalidPoint unless pt is on the curve (identity passes).
void require_on_curve(const CurveParams& params, const G1Point& pt);

G1Point point_neg(const CurveParams& params, const G1Point& a);

/// Chord-tangent addition. Counted as one G1 group operation.
G1Point point_add(const CurveParams& params, const G1Point& a, const G1Point& b);

/// Double-and-add. k may be any integer (reduced mod q only when the caller
/// passes a Scalar). Counted as one G1 scalar multiplication.
G1Point scalar_mul(const CurveParams& params, const BigInt& k, const G1Point& a);
G1Point scalar_mul(const CurveParams& params, const Scalar& k, const G1Point& a);

// A point of E(F_p^2); only produced as the image of the distortion map.
struct Fp2Point {
    bool infinity = true;
    Fp2Element x, y;
};

/// (x, y) -> (-x, i*y).
Fp2Point distortion_map(const CurveParams& params, const G1Point& a);

bool is_on_curve(const Fp2Point& pt);

// Element of the order-q subgroup of F_p^2*.
class GTElement {
public:
    GTElement() = default;
    explicit GTElement(Fp2Element value) : value_(std::move(value)) {}

    static GTElement one(const CurveParams& params) { return GTElement(Fp2Element::one(params.fp())); }

    const Fp2Element& value() const noexcept { return value_; }
    bool is_one() const noexcept { return value_.is_one(); }

    friend bool operator==(const GTElement& a, const GTElement& b) { return a.value_ == b.value_; }
    friend std::ostream& operator<<(std::ostream& os, const GTElement& g);

private:
    Fp2Element value_;
};

/// Counted as one G2 group operation.
GTElement gt_mul(const GTElement& a, const GTElement& b);

/// Counted as one G2 exponentiation.
GTElement gt_pow(const GTElement& a, const BigInt& k);

/// value^q == 1 and value != 0.
bool in_gt(const CurveParams& params, const GTElement& g);

/// Symmetric pairing e(A, B) = t(A, phi(B))^((p^2 - 1) / q), the reduced Tate
/// pairing evaluated at the distortion image of B. Counted as one pairing.
/// Identity in either slot gives 1; off-curve input throws InvalidPoint.
GTElement tate_pairing(const CurveParams& params, const G1Point& a, const G1Point& b);

/// Try-and-increment map onto G1: x = SHA-256(data || ctr_be32) mod p, the
/// first x with x^3 + x square gives (x, smaller root), multiplied by the
/// cofactor; the first non-identity result wins. Counted as one map-to-point.
/// Throws HashToPointFailed after 2^16 counters.
G1Point hash_to_point(const CurveParams& params, ByteView data);

/// 0x00 || zeros for the identity, 0x04 || x || y otherwise; fixed width.
Bytes encode_point(const CurveParams& params, const G1Point& pt);

/// Rejects bad tags, wrong lengths, unreduced or off-curve coordinates and
/// points outside the order-q subgroup, all as DecodeError.
G1Point decode_point(const CurveParams& params, ByteView data, std::size_t base_offset = 0);

Bytes encode_gt(const CurveParams& params, const GTElement& g);
GTElement decode_gt(const CurveParams& params, ByteView data, std::size_t base_offset = 0);

Bytes encode_scalar(const CurveParams& params, const Scalar& s);
Scalar decode_scalar(const CurveParams& params, ByteView data, std::size_t base_offset = 0);

namespace detail {
// Uncounted group law over an explicit base field.
G1Point add(const ModulusRef& fp, const G1Point& a, const G1Point& b);
G1Point dbl(const ModulusRef& fp, const G1Point& a);
G1Point mul(const ModulusRef& fp, const BigInt& k, const G1Point& a);
bool on_curve(const ModulusRef& fp, const G1Point& pt);

/// Try-and-increment core shared by hash_to_point and generator derivation.
G1Point map_to_subgroup(const ModulusRef& fp, const BigInt& cofactor, ByteView data);
}  // namespace detail

}  // namespace idsdvbs
