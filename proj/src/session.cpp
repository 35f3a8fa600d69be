#include "idsdvbs/session.hpp"

#include <chrono>
#include <limits>

namespace idsdvbs {

Bytes make_frame(std::uint8_t tag, ByteView payload)
{
    if (payload.size() > std::numeric_limits<std::uint32_t>::max())
        throw Error(ErrorCode::DomainError, "frame payload too large");
    Bytes out;
    out.reserve(5 + payload.size());
    out.push_back(tag);
    append_u32_be(out, static_cast<std::uint32_t>(payload.size()));
    append(out, payload);
    return out;
}

Frame read_frame(ByteReader& reader)
{
    const std::uint8_t t = reader.u8("frame tag");
    const std::uint32_t len = reader.u32_be("frame length");
    const std::size_t offset = reader.position();
    return {t, reader.take(len, "frame payload"), offset};
}

Bytes encode_message(const CurveParams& curve, const ProtocolMessage& msg)
{
    struct Visitor {
        const CurveParams& curve;
        Bytes operator()(const CommitMsg& m) const { return make_frame(tag::commit, encode_point(curve, m.u)); }
        Bytes operator()(const ChallengeMsg& m) const
        {
            return make_frame(tag::challenge, encode_scalar(curve, m.h1));
        }
        Bytes operator()(const RespondMsg& m) const { return make_frame(tag::respond, encode_point(curve, m.v)); }
        Bytes operator()(const AbortMsg& m) const { return make_frame(tag::abort, as_bytes(m.reason)); }
    };
    return std::visit(Visitor{curve}, msg);
}

ProtocolMessage decode_message(const CurveParams& curve, ByteView data)
{
    if (data.empty())
        throw DecodeError(0, "empty frame");
    ByteReader reader(data);
    Frame frame = read_frame(reader);
    reader.expect_end("frame");
    switch (frame.tag) {
    case tag::commit:
        return CommitMsg{decode_point(curve, frame.payload, frame.payload_offset)};
    case tag::challenge:
        return ChallengeMsg{decode_scalar(curve, frame.payload, frame.payload_offset)};
    case tag::respond:
        return RespondMsg{decode_point(curve, frame.payload, frame.payload_offset)};
    case tag::abort:
        return AbortMsg{std::string(frame.payload.begin(), frame.payload.end())};
    default:
        throw DecodeError(0, "unknown tag " + std::to_string(frame.tag));
    }
}

std::int64_t wall_clock_ms()
{
    using namespace std::chrono;
    return duration_cast<milliseconds>(system_clock::now().time_since_epoch()).count();
}

SignerAwaitingChallenge::SignerAwaitingChallenge(const SystemParams& params, SignerState state, Commitment commitment)
    : params_(&params), state_(std::move(state)), commitment_(std::move(commitment))
{}

std::pair<SignerAwaitingChallenge, ProtocolMessage> SignerAwaitingChallenge::open(const SystemParams& params,
                                                                                  const KeyPair& signer,
                                                                                  RandomSource& rng)
{
    return open_with(params, signer, zq_sample_unit(rng, params.curve.fq()));
}

std::pair<SignerAwaitingChallenge, ProtocolMessage> SignerAwaitingChallenge::open_with(const SystemParams& params,
                                                                                       const KeyPair& signer,
                                                                                       const Scalar& r)
{
    auto [state, commitment] = sign_commit_with(params, signer, r);
    ProtocolMessage msg = CommitMsg{commitment.u};
    return {SignerAwaitingChallenge(params, std::move(state), std::move(commitment)), std::move(msg)};
}

ProtocolMessage SignerAwaitingChallenge::respond(const ProtocolMessage& challenge) &&
{
    const auto* c = std::get_if<ChallengeMsg>(&challenge);
    if (c == nullptr)
        return AbortMsg{"unexpected message"};
    Response response = sign_respond(*params_, state_, BlindedChallenge{c->h1});
    if (response.degenerate)
        return AbortMsg{"degenerate"};
    return RespondMsg{std::move(response.v)};
}

UserAwaitingCommit::UserAwaitingCommit(const SystemParams& params, Bytes message, G1Point signer_public,
                                       G1Point verifier_public)
    : params_(&params),
      message_(std::move(message)),
      signer_public_(std::move(signer_public)),
      verifier_public_(std::move(verifier_public))
{}

std::pair<UserAwaitingResponse, ProtocolMessage> UserAwaitingCommit::on_commit(const ProtocolMessage& commit,
                                                                               RandomSource& rng) &&
{
    const auto& fq = params_->curve.fq();
    Scalar x = zq_sample_unit(rng, fq);
    Scalar y = zq_sample_unit(rng, fq);
    return std::move(*this).on_commit_with(commit, x, y);
}

std::pair<UserAwaitingResponse, ProtocolMessage> UserAwaitingCommit::on_commit_with(const ProtocolMessage& commit,
                                                                                    const Scalar& x,
                                                                                    const Scalar& y) &&
{
    const auto* c = std::get_if<CommitMsg>(&commit);
    if (c == nullptr)
        throw DecodeError(0, "expected a Commit message");
    auto [state, challenge] = blind_with(*params_, message_, Commitment{c->u}, signer_public_, x, y);
    ProtocolMessage msg = ChallengeMsg{challenge.h1};
    return {UserAwaitingResponse(*params_, std::move(state), std::move(verifier_public_)), std::move(msg)};
}

UserAwaitingResponse::UserAwaitingResponse(const SystemParams& params, BlindState state, G1Point verifier_public)
    : params_(&params), state_(std::move(state)), verifier_public_(std::move(verifier_public))
{}

Signature UserAwaitingResponse::finish(const ProtocolMessage& response) &&
{
    if (const auto* a = std::get_if<AbortMsg>(&response))
        throw Error(ErrorCode::Degenerate, "signer aborted: " + a->reason);
    const auto* r = std::get_if<RespondMsg>(&response);
    if (r == nullptr)
        throw DecodeError(0, "expected a Respond message");
    if (r->v.is_identity())
        throw Error(ErrorCode::Degenerate, "identity response");
    return unblind(*params_, state_, Response{r->v, false}, verifier_public_);
}

SessionOutcome run_local_session(const SystemParams& params, const KeyPair& signer, ByteView message,
                                 const G1Point& verifier_public, const SessionPolicy& policy, RandomSource& rng)
{
    const auto& curve = params.curve;
    const Clock clock = policy.clock ? policy.clock : Clock(wall_clock_ms);
    SessionOutcome outcome{AbortMsg{"degenerate"}, {}, 0, std::nullopt};
    Bytes session_id = rng.bytes(16);

    for (unsigned attempt = 0; attempt <= policy.max_retries; ++attempt) {
        outcome.attempts = attempt + 1;
        Transcript& t = outcome.transcript;
        t = Transcript{session_id, signer.identity, {}, {}, {}, {clock()}};

        auto [signer_side, commit] = SignerAwaitingChallenge::open(params, signer, rng);
        Bytes commit_wire = encode_message(curve, commit);
        t.u = std::get<CommitMsg>(commit).u;

        UserAwaitingCommit user(params, Bytes(message.begin(), message.end()), signer.public_key, verifier_public);
        auto [user_side, challenge] = std::move(user).on_commit(decode_message(curve, commit_wire), rng);
        Bytes challenge_wire = encode_message(curve, challenge);
        t.h1 = std::get<ChallengeMsg>(challenge).h1;
        t.timestamps_ms.push_back(clock());

        ProtocolMessage response = std::move(signer_side).respond(decode_message(curve, challenge_wire));
        Bytes response_wire = encode_message(curve, response);
        t.timestamps_ms.push_back(clock());
        outcome.blind_state = user_side.blind_state();

        if (const auto* abort = std::get_if<AbortMsg>(&response)) {
            t.v = G1Point::identity();
            outcome.result = *abort;
            continue;
        }
        t.v = std::get<RespondMsg>(response).v;
        outcome.result = std::move(user_side).finish(decode_message(curve, response_wire));
        t.timestamps_ms.push_back(clock());
        return outcome;
    }
    return outcome;
}

}  // namespace idsdvbs
