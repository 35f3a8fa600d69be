#include "idsdvbs/analysis.hpp"

namespace idsdvbs {

std::optional<BigInt> dlog_bruteforce(const CurveParams& curve, const G1Point& base, const G1Point& target)
{
    BigInt guard;
    mpz_ui_pow_ui(guard.get_mpz_t(), 2, 20);
    if (curve.q() > guard)
        throw Error(ErrorCode::RefusedTooLarge, "brute-force discrete log refused for q > 2^20");
    require_on_curve(curve, base);
    require_on_curve(curve, target);
    G1Point acc = G1Point::identity();
    for (BigInt k = 0; k < curve.q(); ++k) {
        if (acc == target)
            return k;
        acc = detail::add(curve.fp(), acc, base);
    }
    return std::nullopt;
}

std::optional<BlindingWitness> extract_blinding_witness(const SystemParams& params, const Transcript& transcript,
                                                        const Signature& sig, ByteView message,
                                                        const G1Point& signer_public,
                                                        const G1Point& verifier_public,
                                                        const G1Point& verifier_private)
{
    const auto& curve = params.curve;
    const auto& fp = curve.fp();
    const Scalar h = h2(params, message, sig.u_prime);

    const G1Point base = detail::add(fp, transcript.u, detail::mul(fp, transcript.h1.value(), signer_public));
    if (base.is_identity())
        throw Error(ErrorCode::Degenerate, "U + h1 Q_S is the identity");
    const G1Point target = detail::add(fp, sig.u_prime, detail::mul(fp, h.value(), signer_public));

    auto k_base = dlog_bruteforce(curve, signer_public, base);
    auto k_target = dlog_bruteforce(curve, signer_public, target);
    if (!k_base || !k_target || *k_base == 0 || *k_target == 0)
        return std::nullopt;

    Scalar x = curve.scalar(*k_target) * curve.scalar(*k_base).inverse();
    Scalar y = transcript.h1 - x.inverse() * h;

    const G1Point expected_u_prime =
        detail::add(fp, detail::mul(fp, x.value(), transcript.u), detail::mul(fp, (x * y).value(), signer_public));
    if (expected_u_prime != sig.u_prime)
        return std::nullopt;
    if (tate_pairing(curve, detail::mul(fp, x.value(), transcript.v), verifier_public) != sig.sigma)
        return std::nullopt;
    if (tate_pairing(curve, target, verifier_private) != sig.sigma)
        return std::nullopt;
    return BlindingWitness{std::move(x), std::move(y)};
}

BlindnessGameResult play_blindness_game(const SystemParams& params, const KeyPair& signer, const KeyPair& verifier,
                                        ByteView m0, ByteView m1, RandomSource& rng)
{
    BlindnessGameResult result;
    result.coin = (rng.bytes(1)[0] & 1) != 0;
    const std::array<ByteView, 2> messages = {m0, m1};

    SessionPolicy policy;
    std::int64_t tick = 0;
    policy.clock = [&tick] { return tick++; };
    for (int slot = 0; slot < 2; ++slot) {
        const int which = result.coin ? 1 - slot : slot;
        auto outcome = run_local_session(params, signer, messages[which], verifier.public_key, policy, rng);
        if (!outcome.ok())
            throw Error(ErrorCode::Degenerate, "blindness game session aborted");
        result.transcripts[slot] = outcome.transcript;
        result.signatures[which] = outcome.signature();
    }

    for (int b = 0; b < 2; ++b) {
        bool ok = true;
        for (int k = 0; k < 2 && ok; ++k) {
            auto w = extract_blinding_witness(params, result.transcripts[k ^ b], result.signatures[k], messages[k],
                                              signer.public_key, verifier.public_key, verifier.private_key);
            ok = w.has_value();
        }
        result.consistent[b] = ok;
    }
    return result;
}

}  // namespace idsdvbs
