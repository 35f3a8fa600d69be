#pragma once

// Identity-based strong designated verifier blind signatures.
//
// Signing is a four-step exchange between the signer S and a user:
//
//   signer: r <- Z_q*,  U = r Q_S                       (commit)
//   user:   x, y <- Z_q*, U' = xU + xy Q_S,
//           h = H2(m, U'),  h1 = x^-1 h + y             (blind)
//   signer: V = (r + h1) S_S                            (respond)
//   user:   sigma = e(xV, Q_V)  ->  signature (U', sigma) (unblind)
//
// The designated verifier V accepts iff sigma = e(U' + h Q_S, S_V), and can
// produce identically distributed signatures itself with simulate().

#include "idsdvbs/curve.hpp"
#include "idsdvbs/random.hpp"

#include <string>
#include <utility>

namespace idsdvbs {

struct SystemParams {
    CurveParams curve;
    G1Point p_pub;
    std::string h1_id = "sha256-try-and-increment";
    std::string h2_id = "sha256-mod-q-1-plus-1";
};

struct MasterSecret {
    Scalar s;
};

struct KeyPair {
    Bytes identity;
    G1Point public_key;   // Q_ID = H1(ID)
    G1Point private_key;  // S_ID = s Q_ID
};

struct Commitment {
    G1Point u;
};

// Signer's per-session secret. One response per state: answering two
// different challenges with the same r reveals the private key.
struct SignerState {
    Scalar r;
    G1Point signer_public;
    G1Point signer_private;
};

struct BlindState {
    Scalar x;
    Scalar y;
    G1Point u_prime;
    Scalar h;
    Bytes message;
};

struct BlindedChallenge {
    Scalar h1;
};

struct Response {
    G1Point v;
    /// r + h1 = 0 (mod q): V is the identity and the session must be redone.
    bool degenerate = false;
};

struct Signature {
    G1Point u_prime;
    GTElement sigma;

    friend bool operator==(const Signature&, const Signature&) = default;
};

/// s uniform in Z_q*, P_pub = sP.
std::pair<SystemParams, MasterSecret> setup(const CurveParams& curve, RandomSource& rng);

/// Q = H1(identity), S = sQ.
KeyPair keygen(const SystemParams& params, const MasterSecret& msk, ByteView identity);

/// Public key only, for parties that never see the PKG.
G1Point identity_public_key(const SystemParams& params, ByteView identity);

/// e(S, P) == e(Q, P_pub).
bool key_is_consistent(const SystemParams& params, const KeyPair& key);

/// (SHA-256(message || encode(U')) mod (q - 1)) + 1, always in [1, q - 1].
Scalar h2(const SystemParams& params, ByteView message, const G1Point& u_prime);

std::pair<SignerState, Commitment> sign_commit(const SystemParams& params, const KeyPair& signer, RandomSource& rng);
std::pair<SignerState, Commitment> sign_commit_with(const SystemParams& params, const KeyPair& signer, const Scalar& r);

/// Draws x then y from Z_q*. Throws InvalidPoint if U is not a subgroup point.
std::pair<BlindState, BlindedChallenge> blind(const SystemParams& params, ByteView message, const Commitment& commitment,
                                              const G1Point& signer_public, RandomSource& rng);
std::pair<BlindState, BlindedChallenge> blind_with(const SystemParams& params, ByteView message,
                                                   const Commitment& commitment, const G1Point& signer_public,
                                                   const Scalar& x, const Scalar& y);

/// V = (r + h1) S_S. Never resamples; flags the degenerate case instead.
Response sign_respond(const SystemParams& params, const SignerState& state, const BlindedChallenge& challenge);

/// V' = xV, sigma = e(V', Q_V). Throws InvalidPoint for off-curve V.
Signature unblind(const SystemParams& params, const BlindState& state, const Response& response,
                  const G1Point& verifier_public);

/// sigma == e(U' + h Q_S, S_V).
bool verify(const SystemParams& params, const G1Point& verifier_private, const G1Point& signer_public,
            ByteView message, const Signature& sig);

/// Same check with Q_S recomputed as H1(signer_identity).
bool verify_identity(const SystemParams& params, const G1Point& verifier_private, ByteView signer_identity,
                     ByteView message, const Signature& sig);

/// Transcript simulation by the designated verifier: needs only Q_S and S_V.
/// Draws r, x, y in that order.
Signature simulate(const SystemParams& params, const G1Point& signer_public, const G1Point& verifier_private,
                   ByteView message, RandomSource& rng);
Signature simulate_with(const SystemParams& params, const G1Point& signer_public, const G1Point& verifier_private,
                        ByteView message, const Scalar& r, const Scalar& x, const Scalar& y);

/// encode(U') || encode(sigma), fixed length.
Bytes encode_signature(const CurveParams& curve, const Signature& sig);

/// Throws DecodeError on any malformed input.
Signature decode_signature(const CurveParams& curve, ByteView data);

/// Text envelope: "format=idsdvbs-signature-v1", "u_prime=<hex>", "sigma=<hex>".
std::string encode_signature_text(const CurveParams& curve, const Signature& sig);

/// Accepts either the binary encoding or the text envelope.
Signature decode_signature_any(const CurveParams& curve, ByteView data);

}  // namespace idsdvbs
