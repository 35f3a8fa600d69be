#include "idsdvbs/params.hpp"

#include "idsdvbs/errors.hpp"
#include "idsdvbs/random.hpp"

#include <algorithm>

namespace idsdvbs {

void KeyValues::set(std::string key, std::string value)
{
    for (auto& [k, v] : entries_) {
        if (k == key) {
            v = std::move(value);
            return;
        }
    }
    entries_.emplace_back(std::move(key), std::move(value));
}

bool KeyValues::has(std::string_view key) const
{
    return std::any_of(entries_.begin(), entries_.end(), [&](const auto& e) { return e.first == key; });
}

const std::string& KeyValues::get(std::string_view key) const
{
    for (const auto& [k, v] : entries_) {
        if (k == key)
            return v;
    }
    throw DecodeError(0, "missing key '" + std::string(key) + "'");
}

std::string KeyValues::to_text() const
{
    std::string out;
    for (const auto& [k, v] : entries_)
        out += k + "=" + v + "\n";
    return out;
}

namespace {
std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}
}  // namespace

KeyValues KeyValues::parse(std::string_view text)
{
    KeyValues kv;
    std::size_t line_no = 0;
    while (!text.empty()) {
        ++line_no;
        auto nl = text.find('\n');
        std::string_view line = trim(text.substr(0, nl));
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        if (line.empty() || line.front() == '#')
            continue;
        auto eq = line.find('=');
        if (eq == std::string_view::npos || eq == 0)
            throw DecodeError(line_no, "expected key=value");
        std::string key(trim(line.substr(0, eq)));
        if (kv.has(key))
            throw DecodeError(line_no, "duplicate key '" + key + "'");
        kv.entries_.emplace_back(std::move(key), std::string(trim(line.substr(eq + 1))));
    }
    return kv;
}

BigInt solinas_order()
{
    BigInt q;
    mpz_ui_pow_ui(q.get_mpz_t(), 2, 159);
    BigInt low;
    mpz_ui_pow_ui(low.get_mpz_t(), 2, 17);
    return q + low + 1;
}

namespace {

Bytes domain_input(std::string_view domain, ByteView seed)
{
    Bytes out = to_bytes(domain);
    append(out, seed);
    return out;
}

BigInt ceil_div(const BigInt& a, const BigInt& b)
{
    BigInt r;
    mpz_cdiv_q(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

}  // namespace

CurveParams generate_params(std::size_t q_bits, ByteView seed, const ParamSearchOptions& options)
{
    if (q_bits < 4)
        throw Error(ErrorCode::DomainError, "q_bits must be at least 4");
    SeededRandom rng(domain_input("idsdvbs/params/q/", seed));
    BigInt low;
    mpz_ui_pow_ui(low.get_mpz_t(), 2, q_bits - 1);
    BigInt candidate = low + rng.below(low);
    BigInt q;
    mpz_nextprime(q.get_mpz_t(), BigInt(candidate - 1).get_mpz_t());
    if (bit_length(q) > q_bits)
        mpz_nextprime(q.get_mpz_t(), low.get_mpz_t());
    return generate_params_for_order(q, seed, options);
}

CurveParams generate_params_for_order(const BigInt& q, ByteView seed, const ParamSearchOptions& options)
{
    if (q <= 3 || !is_probable_prime(q))
        throw Error(ErrorCode::DomainError, "group order must be a prime greater than 3");

    const BigInt step = 12 * q;
    BigInt r = 1;
    if (options.p_bits != 0) {
        BigInt floor_p;
        mpz_ui_pow_ui(floor_p.get_mpz_t(), 2, options.p_bits - 1);
        r = std::max(BigInt(1), ceil_div(floor_p + 1, step));
    }

    for (std::uint64_t attempt = 0; attempt < options.max_r_steps; ++attempt, ++r) {
        BigInt p = step * r - 1;
        if (options.p_bits != 0 && bit_length(p) > options.p_bits)
            break;
        if (mod(p, 4) != 3)
            continue;
        BigInt cofactor = 12 * r;
        if (mod(cofactor, q) == 0)
            continue;
        if (!is_probable_prime(p))
            continue;

        auto fp = make_modulus(p);
        G1Point g = detail::map_to_subgroup(fp, cofactor, domain_input("idsdvbs/generator/", seed));
        std::string label = options.security_label;
        if (label.empty())
            label = "q" + std::to_string(bit_length(q)) + "-p" + std::to_string(bit_length(p));
        return CurveParams::create(p, q, g.x().value(), g.y().value(), std::move(label));
    }
    throw Error(ErrorCode::ParamSearchFailed, "no prime p = 12qr - 1 within the configured r range");
}

const CurveParams& toy_params()
{
    static const CurveParams params = [] {
        ParamSearchOptions opts;
        opts.security_label = "toy";
        return generate_params_for_order(13, as_bytes("toy"), opts);
    }();
    return params;
}

KeyValues params_to_kv(const CurveParams& params)
{
    KeyValues kv;
    kv.set("p", params.p().get_str());
    kv.set("q", params.q().get_str());
    kv.set("cofactor", params.cofactor().get_str());
    kv.set("Px", params.generator().x().value().get_str());
    kv.set("Py", params.generator().y().value().get_str());
    kv.set("security_label", params.security_label());
    return kv;
}

CurveParams params_from_kv(const KeyValues& kv)
{
    BigInt p = parse_decimal(kv.get("p"));
    BigInt q = parse_decimal(kv.get("q"));
    BigInt cofactor = parse_decimal(kv.get("cofactor"));
    auto params = CurveParams::create(p, q, parse_decimal(kv.get("Px")), parse_decimal(kv.get("Py")),
                                      kv.has("security_label") ? kv.get("security_label") : "");
    if (params.cofactor() != cofactor)
        throw Error(ErrorCode::DomainError, "cofactor does not equal (p + 1) / q");
    return params;
}

std::string write_params_text(const CurveParams& params)
{
    return "# y^2 = x^3 + x over F_p, G1 = <P> of prime order q\n" + params_to_kv(params).to_text();
}

CurveParams read_params_text(std::string_view text)
{
    return params_from_kv(KeyValues::parse(text));
}

}  // namespace idsdvbs
