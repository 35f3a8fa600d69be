#pragma once

// Quantitative companions to the scheme: reduction-bound calculators, the
// operation-count cost model, and the toy-scale blinding-witness extractor.

#include "idsdvbs/instrumentation.hpp"
#include "idsdvbs/kv.hpp"
#include "idsdvbs/session.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace idsdvbs {

using Rational = mpq_class;

/// Accepts "n", "n/d" and plain decimals such as "6.38". Throws DecodeError.
Rational parse_rational(const std::string& text);

/// Rounded half away from zero to `places` decimals.
std::string to_decimal(const Rational& v, int places);

/// "n/d" in lowest terms ("n" when d = 1).
std::string to_fraction(const Rational& v);

struct QueryBudget {
    std::uint64_t q_h1 = 0;
    std::uint64_t q_h2 = 0;
    std::uint64_t q_e = 0;
    std::uint64_t q_s = 0;
    std::uint64_t q_v = 0;
    Rational eps = 0;
    Rational t = 0;
};

// Milliseconds per primitive operation.
struct OpCosts {
    Rational s_g1 = 0;    // scalar multiplication in G1
    Rational s_g2 = 0;    // scalar multiplication (exponentiation) in G2
    Rational o_g1 = 0;    // group operation in G1
    Rational o_g2 = 0;    // group operation in G2
    Rational p_e = 0;     // pairing
    Rational mtp = 0;     // map-to-point hash
    Rational exp_g2 = 0;  // exponentiation in G2

    /// 6.38 / 5.31 / 3.04 / 20.04 ms for scalar mult / G2 exponentiation /
    /// map-to-point / pairing on the 512-bit Tate-pairing setting; group
    /// operations are treated as free.
    static OpCosts reference();
};

struct BoundResult {
    Rational eps_prime;  // lower bound on the reduction's success probability
    Rational t_prime;    // upper bound on its running time
};

/// Success/time of the BDHP solver built from a forger. Exact rationals.
/// Throws DomainError for q_h1 < 2, q < 2 or eps outside [0, 1].
BoundResult unforgeability_bound(const QueryBudget& budget, const OpCosts& costs, const BigInt& q);

/// Same for the DBDHP solver built from an unverifiability adversary.
BoundResult unverifiability_bound(const QueryBudget& budget, const OpCosts& costs, const BigInt& q);

/// Dot product of operation counts and unit costs.
Rational perf_model(const OpCounts& counts, const OpCosts& costs);

struct PerfRow {
    std::string scheme;
    std::string phase;
    OpCounts counts;
    Rational derived_ms;
    std::optional<Rational> stated_ms;

    /// Stated total present and different from the count-derived one.
    bool discrepancy() const { return stated_ms && *stated_ms != derived_ms; }
};

/// Sign/verify rows for this scheme and for the Zhang-Wen comparison, with
/// the published totals attached as stated_ms.
std::vector<PerfRow> reference_perf_table(const OpCosts& costs = OpCosts::reference());

/// Smallest k in [0, q) with k * base == target. Refuses q > 2^20.
std::optional<BigInt> dlog_bruteforce(const CurveParams& curve, const G1Point& base, const G1Point& target);

struct BlindingWitness {
    Scalar x;
    Scalar y;
    friend bool operator==(const BlindingWitness&, const BlindingWitness&) = default;
};

/// Finds blinding factors (x, y) mapping the signer's view `transcript` onto
/// `sig`: x from U' + hQ_S = x (U + h1 Q_S) by brute-force discrete log,
/// y = h1 - x^-1 h. Returns nullopt unless U' = xU + xyQ_S,
/// sigma = e(xV, Q_V) and sigma = e(U' + hQ_S, S_V) all hold.
/// Throws Error(Degenerate) when U + h1 Q_S is the identity.
std::optional<BlindingWitness> extract_blinding_witness(const SystemParams& params, const Transcript& transcript,
                                                        const Signature& sig, ByteView message,
                                                        const G1Point& signer_public,
                                                        const G1Point& verifier_public,
                                                        const G1Point& verifier_private);

// Two users sign m0 and m1 with the same signer in a coin-flipped order. The
// signer (adversary) sees the transcripts in execution order and the two
// signatures in message order.
struct BlindnessGameResult {
    bool coin = false;  // true: the m1 session ran first
    std::array<Transcript, 2> transcripts;
    std::array<Signature, 2> signatures;
    /// consistent[b]: every signature admits a witness under the pairing
    /// "transcript k belongs to message k xor b".
    std::array<bool, 2> consistent{};
};

BlindnessGameResult play_blindness_game(const SystemParams& params, const KeyPair& signer, const KeyPair& verifier,
                                        ByteView m0, ByteView m1, RandomSource& rng);

KeyValues bounds_report(const QueryBudget& budget, const OpCosts& costs, const BigInt& q);
QueryBudget budget_from_kv(const KeyValues& kv);
OpCosts costs_from_kv(const KeyValues& kv, OpCosts defaults = OpCosts::reference());

}  // namespace idsdvbs
