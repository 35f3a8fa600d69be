#include "idsdvbs/session.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>

namespace idsdvbs {

namespace {
void append_blob(Bytes& out, ByteView data)
{
    append_u32_be(out, static_cast<std::uint32_t>(data.size()));
    append(out, data);
}

Bytes read_blob(ByteReader& r, const char* what)
{
    auto len = r.u32_be(what);
    auto data = r.take(len, what);
    return Bytes(data.begin(), data.end());
}
}  // namespace

Bytes encode_transcript(const CurveParams& curve, const Transcript& t)
{
    Bytes payload;
    append_blob(payload, t.session_id);
    append_blob(payload, t.signer_identity);
    append(payload, encode_point(curve, t.u));
    append(payload, encode_scalar(curve, t.h1));
    append(payload, encode_point(curve, t.v));
    append_u32_be(payload, static_cast<std::uint32_t>(t.timestamps_ms.size()));
    for (auto ts : t.timestamps_ms)
        append_u64_be(payload, static_cast<std::uint64_t>(ts));
    return make_frame(tag::transcript, payload);
}

Transcript decode_transcript(const CurveParams& curve, ByteView payload, std::size_t base_offset)
{
    ByteReader r(payload, base_offset);
    Transcript t;
    t.session_id = read_blob(r, "session id");
    t.signer_identity = read_blob(r, "signer identity");
    auto at = r.position();
    t.u = decode_point(curve, r.take(curve.point_size(), "U"), at);
    at = r.position();
    t.h1 = decode_scalar(curve, r.take(curve.scalar_size(), "h1"), at);
    at = r.position();
    t.v = decode_point(curve, r.take(curve.point_size(), "V"), at);
    auto count = r.u32_be("timestamp count");
    if (count > r.remaining() / 8)
        throw DecodeError(r.position(), "timestamp count exceeds payload");
    for (std::uint32_t i = 0; i < count; ++i)
        t.timestamps_ms.push_back(static_cast<std::int64_t>(r.u64_be("timestamp")));
    r.expect_end("transcript");
    return t;
}

TranscriptStore::TranscriptStore(CurveParams curve) : curve_(std::move(curve)) {}

TranscriptStore::TranscriptStore(CurveParams curve, std::filesystem::path path)
    : curve_(std::move(curve)), path_(std::move(path))
{
    std::ifstream in(*path_, std::ios::binary);
    if (!in)
        return;
    Bytes data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    ByteReader reader(data);
    while (!reader.empty()) {
        Frame frame = read_frame(reader);
        if (frame.tag != tag::transcript)
            throw DecodeError(frame.payload_offset - 5, "not a transcript record");
        records_.push_back(decode_transcript(curve_, frame.payload, frame.payload_offset));
    }
}

void TranscriptStore::record(const Transcript& t)
{
    std::lock_guard lock(mutex_);
    auto dup = std::any_of(records_.begin(), records_.end(),
                           [&](const Transcript& r) { return r.session_id == t.session_id; });
    if (dup)
        throw Error(ErrorCode::DuplicateSession, "session " + to_hex(t.session_id) + " already recorded");
    if (path_) {
        Bytes frame = encode_transcript(curve_, t);
        std::ofstream out(*path_, std::ios::binary | std::ios::app);
        out.write(reinterpret_cast<const char*>(frame.data()), static_cast<std::streamsize>(frame.size()));
        if (!out)
            throw Error(ErrorCode::Io, "cannot append to " + path_->string());
    }
    records_.push_back(t);
}

std::optional<Transcript> TranscriptStore::find(ByteView session_id) const
{
    std::lock_guard lock(mutex_);
    for (const auto& r : records_) {
        if (std::equal(r.session_id.begin(), r.session_id.end(), session_id.begin(), session_id.end()))
            return r;
    }
    return std::nullopt;
}

std::vector<Transcript> TranscriptStore::all() const
{
    std::lock_guard lock(mutex_);
    return records_;
}

std::size_t TranscriptStore::size() const
{
    std::lock_guard lock(mutex_);
    return records_.size();
}

void transcript_record(TranscriptStore& store, const Transcript& t)
{
    store.record(t);
}

}  // namespace idsdvbs
