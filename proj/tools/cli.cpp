#include "cli.hpp"

#include "idsdvbs/analysis.hpp"
#include "idsdvbs/params.hpp"
#include "idsdvbs/scheme.hpp"
#include "idsdvbs/session.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iterator>
#include <memory>

namespace idsdvbs::cli {

namespace fs = std::filesystem;

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string read_text(const fs::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw UsageError("cannot read " + path.string());
    return std::string((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
}

Bytes read_binary(const fs::path& path)
{
    auto text = read_text(path);
    return Bytes(text.begin(), text.end());
}

void write_file(const fs::path& path, ByteView data)
{
    if (path.has_parent_path())
        fs::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out.write(reinterpret_cast<const char*>(data.data()), static_cast<std::streamsize>(data.size()));
    if (!out)
        throw Error(ErrorCode::Io, "cannot write " + path.string());
}

void write_file(const fs::path& path, std::string_view text)
{
    write_file(path, as_bytes(text));
}

void write_secret(const fs::path& path, std::string_view text, std::ostream& err)
{
    write_file(path, text);
    fs::permissions(path, fs::perms::owner_read | fs::perms::owner_write, fs::perm_options::replace);
    err << "warning: " << path.string() << " holds secret key material in plaintext\n";
}

bool safe_file_name(const std::string& id)
{
    if (id.empty() || id.size() > 64 || id.front() == '.')
        return false;
    for (char c : id) {
        bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '-' ||
                  c == '_' || c == '.' || c == '@';
        if (!ok)
            return false;
    }
    return true;
}

struct Workspace {
    fs::path root;

    fs::path params_file() const { return root / "params.txt"; }
    fs::path system_file() const { return root / "system.txt"; }
    fs::path master_file() const { return root / "master.key"; }
    fs::path transcripts_file() const { return root / "transcripts.log"; }

    fs::path key_file(const std::string& id) const
    {
        return root / "keys" / ((safe_file_name(id) ? id : "hex-" + to_hex(as_bytes(id))) + ".key");
    }

    CurveParams load_curve() const
    {
        if (!fs::exists(params_file()))
            throw UsageError("no curve parameters in workspace; run 'params gen' first");
        return read_params_text(read_text(params_file()));
    }

    SystemParams load_system() const
    {
        CurveParams curve = load_curve();
        if (!fs::exists(system_file()))
            throw UsageError("no system parameters in workspace; run 'setup' first");
        auto kv = KeyValues::parse(read_text(system_file()));
        SystemParams sys{curve, decode_point(curve, from_hex(kv.get("p_pub")))};
        sys.h1_id = kv.get("h1");
        sys.h2_id = kv.get("h2");
        if (sys.p_pub.is_identity())
            throw Error(ErrorCode::InvalidPoint, "P_pub is the identity");
        return sys;
    }

    MasterSecret load_master(const SystemParams& sys) const
    {
        if (!fs::exists(master_file()))
            throw UsageError("no master secret in workspace; run 'setup' first");
        auto kv = KeyValues::parse(read_text(master_file()));
        Scalar s = sys.curve.scalar(parse_decimal(kv.get("s")));
        if (s.is_zero() || scalar_mul(sys.curve, s, sys.curve.generator()) != sys.p_pub)
            throw Error(ErrorCode::DomainError, "master secret does not match P_pub");
        return {s};
    }

    KeyPair load_key(const SystemParams& sys, const std::string& id) const
    {
        auto path = key_file(id);
        if (!fs::exists(path))
            throw UsageError("no key for identity '" + id + "'; run 'keygen --id " + id + "' first");
        auto kv = KeyValues::parse(read_text(path));
        KeyPair key{from_hex(kv.get("identity")), decode_point(sys.curve, from_hex(kv.get("public"))),
                    decode_point(sys.curve, from_hex(kv.get("private")))};
        if (key.identity != to_bytes(id))
            throw Error(ErrorCode::DomainError, path.string() + " belongs to a different identity");
        return key;
    }
};

std::unique_ptr<RandomSource> make_rng(const std::string& seed)
{
    if (seed.empty())
        return std::make_unique<SystemRandom>();
    return std::make_unique<SeededRandom>(seed);
}

// One of --message, --message-file, --asset-statement.
struct MessageArgs {
    std::string text;
    std::string file;
    std::string asset;

    void attach(CLI::App* app)
    {
        auto* m = app->add_option("--message", text, "message text");
        auto* f = app->add_option("--message-file", file, "file holding the message bytes");
        auto* a = app->add_option("--asset-statement", asset, "proof-of-asset sugar: <address-tag>:<threshold>");
        m->excludes(f)->excludes(a);
        f->excludes(a);
    }

    Bytes load() const
    {
        if (!file.empty())
            return read_binary(file);
        if (!asset.empty())
            return to_bytes(asset_statement_message(asset));
        if (!text.empty())
            return to_bytes(text);
        throw UsageError("one of --message, --message-file or --asset-statement is required");
    }
};

std::string point_hex(const CurveParams& curve, const G1Point& pt)
{
    return to_hex(encode_point(curve, pt));
}

void write_signature(const fs::path& path, const CurveParams& curve, const Signature& sig, bool text)
{
    if (text)
        write_file(path, encode_signature_text(curve, sig));
    else
        write_file(path, encode_signature(curve, sig));
}

Clock session_clock(const std::string& seed)
{
    if (seed.empty())
        return wall_clock_ms;
    auto tick = std::make_shared<std::int64_t>(0);
    return [tick] { return (*tick)++; };
}

// Step files inside a signing session directory.
struct SessionDir {
    fs::path dir;
    fs::path signer_state() const { return dir / "signer.state"; }
    fs::path commit() const { return dir / "commit.frame"; }
    fs::path user_state() const { return dir / "user.state"; }
    fs::path challenge() const { return dir / "challenge.frame"; }
    fs::path response() const { return dir / "response.frame"; }
    fs::path signature() const { return dir / "signature.bin"; }

    static void require(const fs::path& p, const char* step)
    {
        if (!fs::exists(p))
            throw UsageError(std::string("missing ") + p.filename().string() + "; run 'sign " + step + "' first");
    }
    static void forbid(const fs::path& p)
    {
        if (fs::exists(p))
            throw UsageError(p.string() + " already exists; each step runs once per session");
    }
};

ProtocolMessage read_message(const CurveParams& curve, const fs::path& path)
{
    return decode_message(curve, read_binary(path));
}

struct Options {
    std::string workspace = ".";
    std::string seed;

    // params gen
    std::size_t q_bits = 0;
    std::size_t p_bits = 0;
    std::string q_decimal;
    std::string label;
    bool paper_scale = false;
    bool force = false;

    std::string id;
    std::string signer;
    std::string verifier;
    std::string session;
    std::string out;
    std::string sig_path;
    bool text_output = false;
    unsigned max_retries = 4;
    unsigned sessions = 4;

    MessageArgs message;

    // analyze bounds
    std::string bounds_file;
    std::uint64_t q_h1 = 0, q_h2 = 0, q_e = 0, q_s = 0, q_v = 0;
    std::string eps, t = "0", q_order;
    std::string costs_file;
    std::string s_g1, s_g2, o_g1, o_g2, p_e, mtp, exp_g2;

    unsigned iterations = 5;
};

OpCosts costs_from_options(const Options& o)
{
    KeyValues kv;
    if (!o.costs_file.empty())
        kv = KeyValues::parse(read_text(o.costs_file));
    auto override = [&](const char* key, const std::string& v) {
        if (!v.empty())
            kv.set(key, v);
    };
    override("S_G1", o.s_g1);
    override("S_G2", o.s_g2);
    override("O_G1", o.o_g1);
    override("O_G2", o.o_g2);
    override("P_e", o.p_e);
    override("MTP", o.mtp);
    override("ExpG2", o.exp_g2);
    return costs_from_kv(kv);
}

int cmd_params_gen(const Options& o, std::ostream& out)
{
    Workspace ws{o.workspace};
    if (fs::exists(ws.params_file()) && !o.force)
        throw UsageError(ws.params_file().string() + " exists; pass --force to overwrite");
    ParamSearchOptions search;
    search.p_bits = o.p_bits;
    search.security_label = o.label;
    std::string seed = o.seed.empty() ? to_hex(SystemRandom().bytes(16)) : o.seed;

    CurveParams curve = [&] {
        if (o.paper_scale) {
            if (search.p_bits == 0)
                search.p_bits = 512;
            if (search.security_label.empty())
                search.security_label = "solinas-q160-p512";
            return generate_params_for_order(solinas_order(), as_bytes(seed), search);
        }
        if (!o.q_decimal.empty())
            return generate_params_for_order(parse_decimal(o.q_decimal), as_bytes(seed), search);
        if (o.q_bits == 0)
            throw UsageError("one of --q-bits, --q or --paper-scale is required");
        return generate_params(o.q_bits, as_bytes(seed), search);
    }();
    write_file(ws.params_file(), write_params_text(curve));
    out << "p=" << curve.p() << "\nq=" << curve.q() << "\ncofactor=" << curve.cofactor() << "\n";
    return ok;
}

int cmd_setup(const Options& o, std::ostream& out, std::ostream& err)
{
    Workspace ws{o.workspace};
    CurveParams curve = ws.load_curve();
    if (fs::exists(ws.master_file()) && !o.force)
        throw UsageError(ws.master_file().string() + " exists; pass --force to overwrite");
    auto rng = make_rng(o.seed);
    auto [sys, msk] = setup(curve, *rng);

    KeyValues kv;
    kv.set("p_pub", point_hex(curve, sys.p_pub));
    kv.set("h1", sys.h1_id);
    kv.set("h2", sys.h2_id);
    write_file(ws.system_file(), kv.to_text());
    write_secret(ws.master_file(), "s=" + msk.s.value().get_str() + "\n", err);
    out << "p_pub=" << point_hex(curve, sys.p_pub) << "\n";
    return ok;
}

int cmd_keygen(const Options& o, std::ostream& out, std::ostream& err)
{
    Workspace ws{o.workspace};
    SystemParams sys = ws.load_system();
    MasterSecret msk = ws.load_master(sys);
    KeyPair key = keygen(sys, msk, as_bytes(o.id));

    KeyValues kv;
    kv.set("identity", to_hex(key.identity));
    kv.set("public", point_hex(sys.curve, key.public_key));
    kv.set("private", point_hex(sys.curve, key.private_key));
    write_secret(ws.key_file(o.id), kv.to_text(), err);
    out << "identity=" << o.id << "\npublic=" << point_hex(sys.curve, key.public_key) << "\n";
    return ok;
}

int cmd_sign_commit(const Options& o, std::ostream& out)
{
    Workspace ws{o.workspace};
    SessionDir sd{o.session};
    SessionDir::forbid(sd.signer_state());
    SystemParams sys = ws.load_system();
    KeyPair signer = ws.load_key(sys, o.signer);
    auto rng = make_rng(o.seed);

    Bytes session_id = rng->bytes(16);
    auto [state, commitment] = sign_commit(sys, signer, *rng);
    KeyValues kv;
    kv.set("signer", o.signer);
    kv.set("session_id", to_hex(session_id));
    kv.set("r", state.r.value().get_str());
    kv.set("t_commit", std::to_string(session_clock(o.seed)()));
    fs::create_directories(sd.dir);
    std::ostringstream sink;
    write_secret(sd.signer_state(), kv.to_text(), sink);
    write_file(sd.commit(), encode_message(sys.curve, CommitMsg{commitment.u}));
    out << "session_id=" << to_hex(session_id) << "\ncommit=" << sd.commit().string() << "\n";
    return ok;
}

int cmd_sign_blind(const Options& o, std::ostream& out)
{
    Workspace ws{o.workspace};
    SessionDir sd{o.session};
    SessionDir::require(sd.commit(), "commit");
    SessionDir::forbid(sd.user_state());
    SystemParams sys = ws.load_system();
    Bytes message = o.message.load();
    auto rng = make_rng(o.seed);

    auto msg = read_message(sys.curve, sd.commit());
    const auto* commit = std::get_if<CommitMsg>(&msg);
    if (commit == nullptr)
        throw DecodeError(0, "commit.frame does not hold a Commit message");
    G1Point signer_public = identity_public_key(sys, as_bytes(o.signer));
    auto [state, challenge] = blind(sys, message, Commitment{commit->u}, signer_public, *rng);

    KeyValues kv;
    kv.set("signer", o.signer);
    kv.set("message", to_hex(state.message));
    kv.set("x", state.x.value().get_str());
    kv.set("y", state.y.value().get_str());
    kv.set("h", state.h.value().get_str());
    kv.set("u_prime", point_hex(sys.curve, state.u_prime));
    write_file(sd.user_state(), kv.to_text());
    write_file(sd.challenge(), encode_message(sys.curve, ChallengeMsg{challenge.h1}));
    out << "challenge=" << sd.challenge().string() << "\n";
    return ok;
}

int cmd_sign_respond(const Options& o, std::ostream& out, std::ostream& err)
{
    Workspace ws{o.workspace};
    SessionDir sd{o.session};
    SessionDir::require(sd.signer_state(), "commit");
    SessionDir::require(sd.challenge(), "blind");
    SessionDir::forbid(sd.response());
    SystemParams sys = ws.load_system();
    auto state_kv = KeyValues::parse(read_text(sd.signer_state()));
    const std::string signer_id = state_kv.get("signer");
    KeyPair signer = ws.load_key(sys, signer_id);
    Scalar r = sys.curve.scalar(parse_decimal(state_kv.get("r")));

    auto [signer_side, commit] = SignerAwaitingChallenge::open_with(sys, signer, r);
    ProtocolMessage challenge = read_message(sys.curve, sd.challenge());
    const auto* c = std::get_if<ChallengeMsg>(&challenge);
    if (c == nullptr)
        throw DecodeError(0, "challenge.frame does not hold a Challenge message");
    const Scalar h1 = c->h1;
    ProtocolMessage response = std::move(signer_side).respond(challenge);
    write_file(sd.response(), encode_message(sys.curve, response));

    Transcript t{from_hex(state_kv.get("session_id")), signer.identity, std::get<CommitMsg>(commit).u, h1,
                 G1Point::identity(), {}};
    Clock clock = session_clock(o.seed);
    t.timestamps_ms = {parse_decimal(state_kv.get("t_commit")).get_si(), clock()};
    if (const auto* v = std::get_if<RespondMsg>(&response))
        t.v = v->v;
    TranscriptStore store(sys.curve, ws.transcripts_file());
    transcript_record(store, t);

    if (const auto* a = std::get_if<AbortMsg>(&response)) {
        err << "session aborted: " << a->reason << "; start a new session\n";
        return crypto_error;
    }
    out << "response=" << sd.response().string() << "\n";
    return ok;
}

int cmd_sign_unblind(const Options& o, std::ostream& out)
{
    Workspace ws{o.workspace};
    SessionDir sd{o.session};
    SessionDir::require(sd.user_state(), "blind");
    SessionDir::require(sd.response(), "respond");
    fs::path target = o.out.empty() ? sd.signature() : fs::path(o.out);
    SessionDir::forbid(sd.signature());
    SystemParams sys = ws.load_system();
    auto kv = KeyValues::parse(read_text(sd.user_state()));
    const auto& fq = sys.curve.fq();
    BlindState state{Scalar(fq, parse_decimal(kv.get("x"))), Scalar(fq, parse_decimal(kv.get("y"))),
                     decode_point(sys.curve, from_hex(kv.get("u_prime"))), Scalar(fq, parse_decimal(kv.get("h"))),
                     from_hex(kv.get("message"))};
    G1Point verifier_public = identity_public_key(sys, as_bytes(o.verifier));

    ProtocolMessage response = read_message(sys.curve, sd.response());
    if (const auto* a = std::get_if<AbortMsg>(&response))
        throw Error(ErrorCode::Degenerate, "signer aborted: " + a->reason);
    const auto* r = std::get_if<RespondMsg>(&response);
    if (r == nullptr)
        throw DecodeError(0, "response.frame does not hold a Respond message");
    Signature sig = unblind(sys, state, Response{r->v, false}, verifier_public);
    write_signature(target, sys.curve, sig, o.text_output);
    if (target != sd.signature())
        write_file(sd.signature(), encode_signature(sys.curve, sig));
    out << "signature=" << target.string() << "\n";
    return ok;
}

int cmd_sign_run(const Options& o, std::ostream& out, std::ostream& err)
{
    Workspace ws{o.workspace};
    SystemParams sys = ws.load_system();
    KeyPair signer = ws.load_key(sys, o.signer);
    Bytes message = o.message.load();
    G1Point verifier_public = identity_public_key(sys, as_bytes(o.verifier));
    auto rng = make_rng(o.seed);

    SessionPolicy policy;
    policy.max_retries = o.max_retries;
    policy.clock = session_clock(o.seed);
    SessionOutcome outcome = run_local_session(sys, signer, message, verifier_public, policy, *rng);
    TranscriptStore store(sys.curve, ws.transcripts_file());
    transcript_record(store, outcome.transcript);
    if (!outcome.ok()) {
        err << "session aborted after " << outcome.attempts << " attempt(s): "
            << std::get<AbortMsg>(outcome.result).reason << "\n";
        return crypto_error;
    }
    fs::path target = o.out.empty() ? fs::path("sig.bin") : fs::path(o.out);
    write_signature(target, sys.curve, outcome.signature(), o.text_output);
    out << "session_id=" << to_hex(outcome.transcript.session_id) << "\nattempts=" << outcome.attempts
        << "\nsignature=" << target.string() << "\n";
    return ok;
}

int cmd_verify(const Options& o, std::ostream& out)
{
    Workspace ws{o.workspace};
    SystemParams sys = ws.load_system();
    KeyPair verifier = ws.load_key(sys, o.verifier);
    Bytes message = o.message.load();
    Signature sig = decode_signature_any(sys.curve, read_binary(o.sig_path));
    if (verify_identity(sys, verifier.private_key, as_bytes(o.signer), message, sig)) {
        out << "VALID\n";
        return ok;
    }
    out << "INVALID\n";
    return invalid_signature;
}

int cmd_simulate(const Options& o, std::ostream& out)
{
    Workspace ws{o.workspace};
    SystemParams sys = ws.load_system();
    KeyPair verifier = ws.load_key(sys, o.verifier);
    Bytes message = o.message.load();
    auto rng = make_rng(o.seed);
    G1Point signer_public = identity_public_key(sys, as_bytes(o.signer));
    Signature sig = simulate(sys, signer_public, verifier.private_key, message, *rng);
    fs::path target = o.out.empty() ? fs::path("sim.bin") : fs::path(o.out);
    write_signature(target, sys.curve, sig, o.text_output);
    out << "signature=" << target.string() << "\n";
    return ok;
}

int cmd_blindness_demo(const Options& o, std::ostream& out)
{
    Workspace ws{o.workspace};
    SystemParams sys = ws.load_system();
    BigInt guard;
    mpz_ui_pow_ui(guard.get_mpz_t(), 2, 20);
    if (sys.curve.q() > guard)
        throw UsageError("blindness-demo brute-forces discrete logs and needs q <= 2^20");
    if (o.sessions == 0)
        throw UsageError("--sessions must be positive");
    KeyPair signer = ws.load_key(sys, o.signer);
    KeyPair verifier = ws.load_key(sys, o.verifier);
    auto rng = make_rng(o.seed);

    SessionPolicy policy;
    policy.clock = session_clock(o.seed);
    std::vector<Transcript> transcripts;
    std::vector<Signature> signatures;
    std::vector<Bytes> messages;
    for (unsigned i = 0; i < o.sessions; ++i) {
        messages.push_back(to_bytes("blindness-demo message " + std::to_string(i)));
        auto outcome = run_local_session(sys, signer, messages.back(), verifier.public_key, policy, *rng);
        if (!outcome.ok())
            throw Error(ErrorCode::Degenerate, "session " + std::to_string(i) + " aborted");
        transcripts.push_back(outcome.transcript);
        signatures.push_back(outcome.signature());
    }

    unsigned found = 0;
    for (unsigned i = 0; i < o.sessions; ++i) {
        for (unsigned j = 0; j < o.sessions; ++j) {
            auto w = extract_blinding_witness(sys, transcripts[i], signatures[j], messages[j], signer.public_key,
                                              verifier.public_key, verifier.private_key);
            out << "transcript " << i << " x signature " << j << ": ";
            if (w) {
                ++found;
                out << "x=" << w->x << " y=" << w->y << "\n";
            } else {
                out << "inconsistent\n";
            }
        }
    }
    const unsigned total = o.sessions * o.sessions;
    out << "consistent " << found << "/" << total << "\n";
    return found == total ? ok : crypto_error;
}

int cmd_analyze_bounds(const Options& o, std::ostream& out)
{
    KeyValues kv;
    if (!o.bounds_file.empty())
        kv = KeyValues::parse(read_text(o.bounds_file));
    auto set_count = [&](const char* key, std::uint64_t v) {
        if (v != 0 || !kv.has(key))
            kv.set(key, std::to_string(v));
    };
    set_count("qH1", o.q_h1);
    set_count("qH2", o.q_h2);
    set_count("qE", o.q_e);
    set_count("qS", o.q_s);
    set_count("qV", o.q_v);
    if (!o.eps.empty())
        kv.set("eps", o.eps);
    if (!kv.has("eps"))
        throw UsageError("--eps is required");
    if (o.t != "0" || !kv.has("t"))
        kv.set("t", o.t);

    BigInt q;
    if (!o.q_order.empty())
        q = parse_decimal(o.q_order);
    else if (kv.has("q"))
        q = parse_decimal(kv.get("q"));
    else
        q = Workspace{o.workspace}.load_curve().q();

    QueryBudget budget = budget_from_kv(kv);
    OpCosts costs = costs_from_kv(kv, costs_from_options(o));
    out << "q=" << q << "\n" << bounds_report(budget, costs, q).to_text();
    return ok;
}

int cmd_analyze_perf(const Options& o, std::ostream& out)
{
    for (const auto& row : reference_perf_table(costs_from_options(o))) {
        out << row.scheme << "." << row.phase << ": scalar_mults=" << row.counts.g1_scalar_mul
            << " map_to_point=" << row.counts.map_to_point << " pairings=" << row.counts.pairing
            << " derived_ms=" << to_decimal(row.derived_ms, 2);
        if (row.stated_ms)
            out << " stated_ms=" << to_decimal(*row.stated_ms, 2);
        if (row.discrepancy())
            out << " DISCREPANCY";
        out << "\n";
    }
    return ok;
}

int cmd_bench(const Options& o, std::ostream& out)
{
    Workspace ws{o.workspace};
    CurveParams curve = ws.load_curve();
    auto rng = make_rng(o.seed);
    const unsigned n = std::max(1u, o.iterations);
    using clock = std::chrono::steady_clock;

    auto time_ms = [&](auto&& fn) {
        auto start = clock::now();
        for (unsigned i = 0; i < n; ++i)
            fn(i);
        std::chrono::duration<double, std::milli> d = clock::now() - start;
        return d.count() / n;
    };

    const G1Point& gen = curve.generator();
    G1Point other = scalar_mul(curve, zq_sample_unit(*rng, curve.fq()), gen);
    GTElement g = tate_pairing(curve, gen, other);
    const double mul_ms = time_ms([&](unsigned) { scalar_mul(curve, zq_sample_unit(*rng, curve.fq()), gen); });
    const double mtp_ms = time_ms([&](unsigned i) { hash_to_point(curve, as_bytes("bench-" + std::to_string(i))); });
    const double pair_ms = time_ms([&](unsigned) { tate_pairing(curve, gen, other); });
    const double exp_ms = time_ms([&](unsigned) { gt_pow(g, zq_sample_unit(*rng, curve.fq()).value()); });

    out << "params=" << curve.security_label() << " (p " << bit_length(curve.p()) << " bits, q "
        << bit_length(curve.q()) << " bits)\n";
    out.setf(std::ios::fixed);
    out.precision(3);
    out << "scalar_mul_ms=" << mul_ms << "\nmap_to_point_ms=" << mtp_ms << "\npairing_ms=" << pair_ms
        << "\ngt_exp_ms=" << exp_ms << "\n";
    out << "model_sign_ms=" << (5 * mul_ms + mtp_ms + pair_ms) << "\nmodel_verify_ms=" << (mul_ms + mtp_ms + pair_ms)
        << "\n";
    return ok;
}

}  // namespace

std::string asset_statement_message(const std::string& statement)
{
    auto colon = statement.rfind(':');
    if (colon == std::string::npos || colon == 0 || colon + 1 == statement.size())
        throw UsageError("asset statement must look like <address-tag>:<threshold>");
    std::string tag = statement.substr(0, colon);
    std::string threshold = statement.substr(colon + 1);
    for (char c : threshold) {
        if (c < '0' || c > '9')
            throw UsageError("asset threshold must be a non-negative decimal integer");
    }
    if (tag.find('|') != std::string::npos)
        throw UsageError("address tag must not contain '|'");
    return "POA|v1|" + tag + "|" + threshold;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Options o;
    CLI::App app{"Identity-based strong designated verifier blind signatures", "idsdvbs"};
    app.require_subcommand(1);
    app.add_option("-w,--workspace", o.workspace, "workspace directory")->capture_default_str();

    auto* params = app.add_subcommand("params", "curve parameters")->require_subcommand(1);
    auto* params_gen = params->add_subcommand("gen", "generate pairing parameters");
    params_gen->add_option("--q-bits", o.q_bits, "bit length of the group order");
    params_gen->add_option("--p-bits", o.p_bits, "bit length of the field prime (default: smallest)");
    params_gen->add_option("--q", o.q_decimal, "explicit prime group order (decimal)");
    params_gen->add_flag("--paper-scale", o.paper_scale, "q = 2^159 + 2^17 + 1 with a 512-bit p");
    params_gen->add_option("--label", o.label, "security label");
    params_gen->add_option("--seed", o.seed, "deterministic seed");
    params_gen->add_flag("--force", o.force, "overwrite existing parameters");

    auto* setup_cmd = app.add_subcommand("setup", "create the PKG master secret and public key");
    setup_cmd->add_option("--seed", o.seed, "deterministic seed");
    setup_cmd->add_flag("--force", o.force, "overwrite an existing master secret");

    auto* keygen_cmd = app.add_subcommand("keygen", "issue the key pair of an identity");
    keygen_cmd->add_option("--id", o.id, "identity")->required();
    keygen_cmd->add_option("--seed", o.seed, "accepted for uniformity; key issuance is deterministic");

    auto* sign = app.add_subcommand("sign", "blind signing session")->require_subcommand(1);
    auto* commit = sign->add_subcommand("commit", "signer: commit to r");
    commit->add_option("--signer", o.signer)->required();
    commit->add_option("--session", o.session, "session directory")->required();
    commit->add_option("--seed", o.seed);
    auto* blind_cmd = sign->add_subcommand("blind", "user: blind the message");
    blind_cmd->add_option("--signer", o.signer)->required();
    blind_cmd->add_option("--session", o.session)->required();
    blind_cmd->add_option("--seed", o.seed);
    o.message.attach(blind_cmd);
    auto* respond = sign->add_subcommand("respond", "signer: answer the blinded challenge");
    respond->add_option("--session", o.session)->required();
    respond->add_option("--seed", o.seed);
    auto* unblind_cmd = sign->add_subcommand("unblind", "user: unblind into the final signature");
    unblind_cmd->add_option("--verifier", o.verifier)->required();
    unblind_cmd->add_option("--session", o.session)->required();
    unblind_cmd->add_option("--out", o.out, "signature output path");
    unblind_cmd->add_flag("--text", o.text_output, "write the text envelope");
    auto* run = sign->add_subcommand("run", "run a whole session locally");
    run->add_option("--signer", o.signer)->required();
    run->add_option("--verifier", o.verifier)->required();
    run->add_option("--out", o.out, "signature output path (default sig.bin)");
    run->add_option("--max-retries", o.max_retries)->capture_default_str();
    run->add_flag("--text", o.text_output);
    run->add_option("--seed", o.seed);
    o.message.attach(run);

    auto* verify_cmd = app.add_subcommand("verify", "designated verification");
    verify_cmd->add_option("--verifier", o.verifier)->required();
    verify_cmd->add_option("--signer", o.signer)->required();
    verify_cmd->add_option("--sig", o.sig_path)->required();
    o.message.attach(verify_cmd);

    auto* simulate_cmd = app.add_subcommand("simulate", "transcript simulation by the designated verifier");
    simulate_cmd->add_option("--signer", o.signer)->required();
    simulate_cmd->add_option("--verifier", o.verifier)->required();
    simulate_cmd->add_option("--out", o.out, "signature output path (default sim.bin)");
    simulate_cmd->add_flag("--text", o.text_output);
    simulate_cmd->add_option("--seed", o.seed);
    o.message.attach(simulate_cmd);

    auto* demo = app.add_subcommand("blindness-demo", "cross-pair transcripts and signatures");
    demo->add_option("--sessions", o.sessions)->capture_default_str();
    demo->add_option("--signer", o.signer)->default_val("alice");
    demo->add_option("--verifier", o.verifier)->default_val("bob");
    demo->add_option("--seed", o.seed);

    auto* analyze = app.add_subcommand("analyze", "quantitative reports")->require_subcommand(1);
    auto* bounds = analyze->add_subcommand("bounds", "reduction bounds");
    bounds->add_option("--file", o.bounds_file, "key-value budget file");
    bounds->add_option("--qh1", o.q_h1);
    bounds->add_option("--qh2", o.q_h2);
    bounds->add_option("--qe", o.q_e);
    bounds->add_option("--qs", o.q_s);
    bounds->add_option("--qv", o.q_v);
    bounds->add_option("--eps", o.eps, "adversary advantage, e.g. 1/2 or 0.5");
    bounds->add_option("--t", o.t, "adversary running time");
    bounds->add_option("--q", o.q_order, "group order (default: workspace params)");
    auto* perf = analyze->add_subcommand("perf", "operation-count cost model");
    for (auto* sub : {bounds, perf}) {
        sub->add_option("--costs-file", o.costs_file, "key-value unit costs");
        sub->add_option("--s-g1", o.s_g1);
        sub->add_option("--s-g2", o.s_g2);
        sub->add_option("--o-g1", o.o_g1);
        sub->add_option("--o-g2", o.o_g2);
        sub->add_option("--p-e", o.p_e);
        sub->add_option("--mtp", o.mtp);
        sub->add_option("--exp-g2", o.exp_g2);
    }

    auto* bench = app.add_subcommand("bench", "wall-clock timings on the workspace parameters");
    bench->add_option("--iterations", o.iterations)->capture_default_str();
    bench->add_option("--seed", o.seed);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return usage_error;
    }

    try {
        if (params_gen->parsed()) return cmd_params_gen(o, out);
        if (setup_cmd->parsed()) return cmd_setup(o, out, err);
        if (keygen_cmd->parsed()) return cmd_keygen(o, out, err);
        if (commit->parsed()) return cmd_sign_commit(o, out);
        if (blind_cmd->parsed()) return cmd_sign_blind(o, out);
        if (respond->parsed()) return cmd_sign_respond(o, out, err);
        if (unblind_cmd->parsed()) return cmd_sign_unblind(o, out);
        if (run->parsed()) return cmd_sign_run(o, out, err);
        if (verify_cmd->parsed()) return cmd_verify(o, out);
        if (simulate_cmd->parsed()) return cmd_simulate(o, out);
        if (demo->parsed()) return cmd_blindness_demo(o, out);
        if (bounds->parsed()) return cmd_analyze_bounds(o, out);
        if (perf->parsed()) return cmd_analyze_perf(o, out);
        if (bench->parsed()) return cmd_bench(o, out);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return usage_error;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return crypto_error;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return crypto_error;
    }
    err << "usage error: no command\n";
    return usage_error;
}

}  // namespace idsdvbs::cli
