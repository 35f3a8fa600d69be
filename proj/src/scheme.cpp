#include "idsdvbs/scheme.hpp"

#include "idsdvbs/hash.hpp"
#include "idsdvbs/kv.hpp"

namespace idsdvbs {

namespace {
void require_unit(const Scalar& k, const char* what)
{
    if (k.is_zero())
        throw Error(ErrorCode::DomainError, std::string(what) + " must be a unit of Z_q");
}

void require_subgroup_point(const CurveParams& curve, const G1Point& pt, const char* what)
{
    if (!in_subgroup(curve, pt))
        throw Error(ErrorCode::InvalidPoint, std::string(what) + " is not in the order-q subgroup");
}
}  // namespace

std::pair<SystemParams, MasterSecret> setup(const CurveParams& curve, RandomSource& rng)
{
    Scalar s = zq_sample_unit(rng, curve.fq());
    SystemParams params{curve, scalar_mul(curve, s, curve.generator())};
    return {std::move(params), MasterSecret{std::move(s)}};
}

G1Point identity_public_key(const SystemParams& params, ByteView identity)
{
    return hash_to_point(params.curve, identity);
}

KeyPair keygen(const SystemParams& params, const MasterSecret& msk, ByteView identity)
{
    G1Point q = identity_public_key(params, identity);
    G1Point s = scalar_mul(params.curve, msk.s, q);
    return {Bytes(identity.begin(), identity.end()), std::move(q), std::move(s)};
}

bool key_is_consistent(const SystemParams& params, const KeyPair& key)
{
    const auto& curve = params.curve;
    return tate_pairing(curve, key.private_key, curve.generator()) ==
           tate_pairing(curve, key.public_key, params.p_pub);
}

Scalar h2(const SystemParams& params, ByteView message, const G1Point& u_prime)
{
    const auto& curve = params.curve;
    Digest d = Sha256().update(message).update(encode_point(curve, u_prime)).finish();
    BigInt h = mod(os2ip(d), curve.q() - 1) + 1;
    return curve.scalar(h);
}

std::pair<SignerState, Commitment> sign_commit(const SystemParams& params, const KeyPair& signer, RandomSource& rng)
{
    return sign_commit_with(params, signer, zq_sample_unit(rng, params.curve.fq()));
}

std::pair<SignerState, Commitment> sign_commit_with(const SystemParams& params, const KeyPair& signer, const Scalar& r)
{
    require_unit(r, "r");
    G1Point u = scalar_mul(params.curve, r, signer.public_key);
    return {SignerState{r, signer.public_key, signer.private_key}, Commitment{std::move(u)}};
}

std::pair<BlindState, BlindedChallenge> blind(const SystemParams& params, ByteView message, const Commitment& commitment,
                                              const G1Point& signer_public, RandomSource& rng)
{
    Scalar x = zq_sample_unit(rng, params.curve.fq());
    Scalar y = zq_sample_unit(rng, params.curve.fq());
    return blind_with(params, message, commitment, signer_public, x, y);
}

std::pair<BlindState, BlindedChallenge> blind_with(const SystemParams& params, ByteView message,
                                                   const Commitment& commitment, const G1Point& signer_public,
                                                   const Scalar& x, const Scalar& y)
{
    const auto& curve = params.curve;
    require_unit(x, "x");
    require_unit(y, "y");
    require_subgroup_point(curve, commitment.u, "commitment U");

    // U' = xU + (xy) Q_S
    G1Point u_prime = point_add(curve, scalar_mul(curve, x, commitment.u), scalar_mul(curve, x * y, signer_public));
    Scalar h = h2(params, message, u_prime);
    Scalar h1 = x.inverse() * h + y;
    BlindState state{x, y, std::move(u_prime), std::move(h), Bytes(message.begin(), message.end())};
    return {std::move(state), BlindedChallenge{std::move(h1)}};
}

Response sign_respond(const SystemParams& params, const SignerState& state, const BlindedChallenge& challenge)
{
    Scalar k = state.r + challenge.h1;
    G1Point v = scalar_mul(params.curve, k, state.signer_private);
    return {std::move(v), k.is_zero()};
}

Signature unblind(const SystemParams& params, const BlindState& state, const Response& response,
                  const G1Point& verifier_public)
{
    const auto& curve = params.curve;
    require_on_curve(curve, response.v);
    G1Point v_prime = scalar_mul(curve, state.x, response.v);
    return {state.u_prime, tate_pairing(curve, v_prime, verifier_public)};
}

bool verify(const SystemParams& params, const G1Point& verifier_private, const G1Point& signer_public,
            ByteView message, const Signature& sig)
{
    const auto& curve = params.curve;
    Scalar h = h2(params, message, sig.u_prime);
    G1Point lhs = point_add(curve, sig.u_prime, scalar_mul(curve, h, signer_public));
    return tate_pairing(curve, lhs, verifier_private) == sig.sigma;
}

bool verify_identity(const SystemParams& params, const G1Point& verifier_private, ByteView signer_identity,
                     ByteView message, const Signature& sig)
{
    return verify(params, verifier_private, identity_public_key(params, signer_identity), message, sig);
}

Signature simulate(const SystemParams& params, const G1Point& signer_public, const G1Point& verifier_private,
                   ByteView message, RandomSource& rng)
{
    const auto& fq = params.curve.fq();
    Scalar r = zq_sample_unit(rng, fq);
    Scalar x = zq_sample_unit(rng, fq);
    Scalar y = zq_sample_unit(rng, fq);
    return simulate_with(params, signer_public, verifier_private, message, r, x, y);
}

Signature simulate_with(const SystemParams& params, const G1Point& signer_public, const G1Point& verifier_private,
                        ByteView message, const Scalar& r, const Scalar& x, const Scalar& y)
{
    const auto& curve = params.curve;
    require_unit(r, "r");
    require_unit(x, "x");
    require_unit(y, "y");
    G1Point u = scalar_mul(curve, r, signer_public);
    G1Point u_prime = point_add(curve, scalar_mul(curve, x, u), scalar_mul(curve, x * y, signer_public));
    Scalar h = h2(params, message, u_prime);
    Scalar h1 = x.inverse() * h + y;
    G1Point v = scalar_mul(curve, r + h1, signer_public);
    G1Point v_prime = scalar_mul(curve, x, v);
    return {std::move(u_prime), tate_pairing(curve, v_prime, verifier_private)};
}

Bytes encode_signature(const CurveParams& curve, const Signature& sig)
{
    Bytes out = encode_point(curve, sig.u_prime);
    append(out, encode_gt(curve, sig.sigma));
    return out;
}

Signature decode_signature(const CurveParams& curve, ByteView data)
{
    const auto point_len = curve.point_size();
    const auto expected = point_len + curve.gt_size();
    if (data.size() != expected) {
        throw DecodeError(std::min(data.size(), expected),
                          "signature must be " + std::to_string(expected) + " bytes, got " +
                              std::to_string(data.size()));
    }
    G1Point u_prime = decode_point(curve, data.first(point_len), 0);
    GTElement sigma = decode_gt(curve, data.subspan(point_len), point_len);
    return {std::move(u_prime), std::move(sigma)};
}

std::string encode_signature_text(const CurveParams& curve, const Signature& sig)
{
    KeyValues kv;
    kv.set("format", "idsdvbs-signature-v1");
    kv.set("u_prime", to_hex(encode_point(curve, sig.u_prime)));
    kv.set("sigma", to_hex(encode_gt(curve, sig.sigma)));
    return kv.to_text();
}

Signature decode_signature_any(const CurveParams& curve, ByteView data)
{
    static constexpr std::string_view marker = "format=idsdvbs-signature-v1";
    std::string_view text(reinterpret_cast<const char*>(data.data()), data.size());
    if (text.starts_with(marker)) {
        auto kv = KeyValues::parse(text);
        Bytes bin = from_hex(kv.get("u_prime"));
        append(bin, from_hex(kv.get("sigma")));
        return decode_signature(curve, bin);
    }
    return decode_signature(curve, data);
}

}  // namespace idsdvbs
