#pragma once

// The interactive signing exchange as typed state machines, its wire framing,
// and an in-process runner.
//
// Frame: tag (1 byte) || payload length (4 bytes, big-endian) || payload.
//   1 Commit{U}     payload = encode_point(U)
//   2 Challenge{h1} payload = h1, fixed width of q
//   3 Respond{V}    payload = encode_point(V)
// 255 Abort{reason} payload = UTF-8 text

#include "idsdvbs/scheme.hpp"

#include <cstdint>
#include <filesystem>
#include <functional>
#include <mutex>
#include <optional>
#include <variant>
#include <vector>

namespace idsdvbs {

namespace tag {
inline constexpr std::uint8_t commit = 1;
inline constexpr std::uint8_t challenge = 2;
inline constexpr std::uint8_t respond = 3;
inline constexpr std::uint8_t abort = 255;
inline constexpr std::uint8_t transcript = 0x54;
}  // namespace tag

struct CommitMsg {
    G1Point u;
    friend bool operator==(const CommitMsg&, const CommitMsg&) = default;
};
struct ChallengeMsg {
    Scalar h1;
    friend bool operator==(const ChallengeMsg&, const ChallengeMsg&) = default;
};
struct RespondMsg {
    G1Point v;
    friend bool operator==(const RespondMsg&, const RespondMsg&) = default;
};
struct AbortMsg {
    std::string reason;
    friend bool operator==(const AbortMsg&, const AbortMsg&) = default;
};

using ProtocolMessage = std::variant<CommitMsg, ChallengeMsg, RespondMsg, AbortMsg>;

Bytes encode_message(const CurveParams& curve, const ProtocolMessage& msg);

/// Exactly one frame; bad tag, truncation or trailing bytes are DecodeErrors
/// carrying the offending byte offset.
ProtocolMessage decode_message(const CurveParams& curve, ByteView data);

struct Frame {
    std::uint8_t tag;
    ByteView payload;
    std::size_t payload_offset;
};

/// Reads one frame header and payload; never reads past the declared length.
Frame read_frame(ByteReader& reader);
Bytes make_frame(std::uint8_t tag, ByteView payload);

// The signer's view of one session. Holds nothing derived from the message.
struct Transcript {
    Bytes session_id;
    Bytes signer_identity;
    G1Point u;
    Scalar h1;
    G1Point v;
    std::vector<std::int64_t> timestamps_ms;

    friend bool operator==(const Transcript&, const Transcript&) = default;
};

Bytes encode_transcript(const CurveParams& curve, const Transcript& t);
Transcript decode_transcript(const CurveParams& curve, ByteView payload, std::size_t base_offset = 0);

// Append-only transcript log, optionally mirrored to a file of frames.
// Appends are serialized; lookups are by session id.
class TranscriptStore {
public:
    explicit TranscriptStore(CurveParams curve);

    /// Loads existing records from `path` (if present); later appends go to it.
    TranscriptStore(CurveParams curve, std::filesystem::path path);

    TranscriptStore(const TranscriptStore&) = delete;
    TranscriptStore& operator=(const TranscriptStore&) = delete;

    /// Throws DuplicateSession if the id is already present.
    void record(const Transcript& t);

    std::optional<Transcript> find(ByteView session_id) const;
    std::vector<Transcript> all() const;
    std::size_t size() const;

private:
    CurveParams curve_;
    std::optional<std::filesystem::path> path_;
    mutable std::mutex mutex_;
    std::vector<Transcript> records_;
};

void transcript_record(TranscriptStore& store, const Transcript& t);

using Clock = std::function<std::int64_t()>;

/// Milliseconds since the Unix epoch.
std::int64_t wall_clock_ms();

// Signer side, after sending the commitment. respond() consumes the state so
// a second answer with the same r cannot be produced.
class SignerAwaitingChallenge {
public:
    static std::pair<SignerAwaitingChallenge, ProtocolMessage> open(const SystemParams& params, const KeyPair& signer,
                                                                    RandomSource& rng);
    static std::pair<SignerAwaitingChallenge, ProtocolMessage> open_with(const SystemParams& params,
                                                                         const KeyPair& signer, const Scalar& r);

    /// Respond{V}, or Abort{"degenerate"} when r + h1 = 0 (mod q).
    /// An unexpected message kind yields Abort{"unexpected message"}.
    ProtocolMessage respond(const ProtocolMessage& challenge) &&;

    const Commitment& commitment() const noexcept { return commitment_; }

private:
    SignerAwaitingChallenge(const SystemParams& params, SignerState state, Commitment commitment);

    const SystemParams* params_;
    SignerState state_;
    Commitment commitment_;
};

class UserAwaitingResponse;

// User side, before the commitment arrives.
class UserAwaitingCommit {
public:
    UserAwaitingCommit(const SystemParams& params, Bytes message, G1Point signer_public, G1Point verifier_public);

    /// Blinds with fresh x, y. Throws DecodeError/InvalidPoint if the message
    /// is not a valid Commit.
    std::pair<UserAwaitingResponse, ProtocolMessage> on_commit(const ProtocolMessage& commit, RandomSource& rng) &&;
    std::pair<UserAwaitingResponse, ProtocolMessage> on_commit_with(const ProtocolMessage& commit, const Scalar& x,
                                                                    const Scalar& y) &&;

private:
    const SystemParams* params_;
    Bytes message_;
    G1Point signer_public_;
    G1Point verifier_public_;
};

class UserAwaitingResponse {
public:
    /// Unblinds. Throws Error(Degenerate) on Abort or an identity V.
    Signature finish(const ProtocolMessage& response) &&;

    const BlindState& blind_state() const noexcept { return state_; }

private:
    friend class UserAwaitingCommit;
    UserAwaitingResponse(const SystemParams& params, BlindState state, G1Point verifier_public);

    const SystemParams* params_;
    BlindState state_;
    G1Point verifier_public_;
};

struct SessionPolicy {
    unsigned max_retries = 4;
    Clock clock = wall_clock_ms;
};

struct SessionOutcome {
    std::variant<Signature, AbortMsg> result;
    Transcript transcript;
    unsigned attempts = 0;
    /// The user's blinding state of the final attempt (test/analysis hook).
    std::optional<BlindState> blind_state;

    bool ok() const noexcept { return std::holds_alternative<Signature>(result); }
    const Signature& signature() const { return std::get<Signature>(result); }
};

/// Runs commit -> blind -> respond -> unblind through encoded frames. A
/// degenerate response restarts the whole session with fresh randomness, up
/// to policy.max_retries times; exhaustion yields Abort{"degenerate"}.
/// Randomness order: 16-byte session id, then per attempt r, x, y.
SessionOutcome run_local_session(const SystemParams& params, const KeyPair& signer, ByteView message,
                                 const G1Point& verifier_public, const SessionPolicy& policy, RandomSource& rng);

}  // namespace idsdvbs
