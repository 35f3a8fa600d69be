#include "idsdvbs/curve.hpp"
#include "idsdvbs/instrumentation.hpp"

namespace idsdvbs {

std::ostream& operator<<(std::ostream& os, const GTElement& g)
{
    return os << "(" << g.value().real() << " + " << g.value().imag() << "i)";
}

Fp2Point distortion_map(const CurveParams& params, const G1Point& a)
{
    require_on_curve(params, a);
    if (a.is_identity())
        return {};
    const auto zero = FpElement::zero(params.fp());
    return {false, Fp2Element(-a.x(), zero), Fp2Element(zero, a.y())};
}

bool is_on_curve(const Fp2Point& pt)
{
    if (pt.infinity)
        return true;
    return pt.y.square() == pt.x.square() * pt.x + pt.x;
}

GTElement gt_mul(const GTElement& a, const GTElement& b)
{
    record_op(OpKind::G2Mul);
    return GTElement(a.value() * b.value());
}

GTElement gt_pow(const GTElement& a, const BigInt& k)
{
    record_op(OpKind::G2Exp);
    return GTElement(a.value().pow(k));
}

bool in_gt(const CurveParams& params, const GTElement& g)
{
    if (!g.value().modulus() || g.value().is_zero())
        return false;
    return g.value().pow(params.q()).is_one();
}

namespace {

// Value at the distortion image (-xb, i*yb) of the line with slope `lambda`
// through T: i*yb - yT - lambda * (-xb - xT).
Fp2Element line_value(const FpElement& lambda, const G1Point& t, const FpElement& xb, const FpElement& yb)
{
    FpElement real = lambda * (xb + t.x()) - t.y();
    return Fp2Element(real, yb);
}

// Miller loop for f_{q,A} evaluated at phi(B). Vertical lines evaluate to
// elements of F_p and vanish under the final exponentiation, so they are
// skipped.
Fp2Element miller_loop(const CurveParams& params, const G1Point& a, const G1Point& b)
{
    const auto& fp = params.fp();
    const BigInt& q = params.q();
    const FpElement& xb = b.x();
    const FpElement& yb = b.y();
    const FpElement three(fp, 3L);
    const FpElement one = FpElement::one(fp);

    Fp2Element f = Fp2Element::one(fp);
    G1Point t = a;
    for (auto i = bit_length(q) - 1; i-- > 0;) {
        f = f.square();
        if (!t.is_identity() && !t.y().is_zero()) {
            FpElement lambda = (three * t.x() * t.x() + one) * (t.y() + t.y()).inverse();
            f = f * line_value(lambda, t, xb, yb);
        }
        t = detail::dbl(fp, t);

        if (mpz_tstbit(q.get_mpz_t(), i)) {
            if (t.is_identity()) {
                t = a;
            } else if (t.x() == a.x()) {
                if (!(t.y() + a.y()).is_zero()) {
                    FpElement lambda = (three * t.x() * t.x() + one) * (t.y() + t.y()).inverse();
                    f = f * line_value(lambda, t, xb, yb);
                }
                t = detail::add(fp, t, a);
            } else {
                FpElement lambda = (a.y() - t.y()) * (a.x() - t.x()).inverse();
                f = f * line_value(lambda, t, xb, yb);
                t = detail::add(fp, t, a);
            }
        }
    }
    return f;
}

}  // namespace

GTElement tate_pairing(const CurveParams& params, const G1Point& a, const G1Point& b)
{
    require_on_curve(params, a);
    require_on_curve(params, b);
    record_op(OpKind::Pairing);
    if (a.is_identity() || b.is_identity())
        return GTElement::one(params);

    Fp2Element f = miller_loop(params, a, b);
    // (p^2 - 1)/q = (p - 1) * (p + 1)/q; f^(p-1) = conj(f) / f.
    f = f.conjugate() * f.inverse();
    return GTElement(f.pow(params.cofactor()));
}

}  // namespace idsdvbs
