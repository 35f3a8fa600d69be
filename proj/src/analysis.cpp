#include "idsdvbs/analysis.hpp"

namespace idsdvbs {

Rational parse_rational(const std::string& text)
{
    if (text.empty())
        throw DecodeError(0, "empty number");
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        BigInt num = parse_decimal(text.substr(0, slash));
        BigInt den = parse_decimal(text.substr(slash + 1));
        if (den == 0)
            throw DecodeError(slash + 1, "zero denominator");
        Rational r(num, den);
        r.canonicalize();
        return r;
    }
    auto dot = text.find('.');
    if (dot == std::string::npos)
        return Rational(parse_decimal(text));
    std::string int_part = text.substr(0, dot);
    std::string frac_part = text.substr(dot + 1);
    if (int_part.empty())
        int_part = "0";
    if (frac_part.empty())
        throw DecodeError(dot, "missing fractional digits");
    BigInt den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_part.size());
    Rational r(parse_decimal(int_part) * den + parse_decimal(frac_part), den);
    r.canonicalize();
    return r;
}

std::string to_decimal(const Rational& v, int places)
{
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(places));
    Rational scaled = abs(v) * scale;
    // round half up on the magnitude
    BigInt n = scaled.get_num() * 2 + scaled.get_den();
    BigInt d = scaled.get_den() * 2;
    BigInt rounded;
    mpz_fdiv_q(rounded.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    BigInt whole = rounded / scale;
    BigInt frac = rounded % scale;
    std::string out = (v < 0 && rounded != 0 ? "-" : "") + whole.get_str();
    if (places > 0) {
        std::string f = frac.get_str();
        out += "." + std::string(static_cast<std::size_t>(places) - f.size(), '0') + f;
    }
    return out;
}

std::string to_fraction(const Rational& value)
{
    Rational v = value;
    v.canonicalize();
    if (v.get_den() == 1)
        return v.get_num().get_str();
    return v.get_num().get_str() + "/" + v.get_den().get_str();
}

OpCosts OpCosts::reference()
{
    OpCosts c;
    c.s_g1 = Rational(638, 100);
    c.s_g2 = Rational(531, 100);
    c.exp_g2 = Rational(531, 100);
    c.mtp = Rational(304, 100);
    c.p_e = Rational(2004, 100);
    c.s_g1.canonicalize();
    c.s_g2.canonicalize();
    c.exp_g2.canonicalize();
    c.mtp.canonicalize();
    c.p_e.canonicalize();
    return c;
}

namespace {

Rational rpow(Rational base, std::uint64_t e)
{
    Rational result = 1;
    while (e > 0) {
        if (e & 1)
            result *= base;
        base *= base;
        e >>= 1;
    }
    return result;
}

Rational from_u64(std::uint64_t v)
{
    BigInt b;
    mpz_import(b.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
    return Rational(b);
}

void check_budget(const QueryBudget& b, const BigInt& q)
{
    if (b.q_h1 < 2)
        throw Error(ErrorCode::DomainError, "q_H1 must be at least 2");
    if (q < 2)
        throw Error(ErrorCode::DomainError, "group order must be at least 2");
    if (b.eps < 0 || b.eps > 1)
        throw Error(ErrorCode::DomainError, "eps must lie in [0, 1]");
}

// Both bounds share the same eps side.
Rational success_lower_bound(const QueryBudget& b, const BigInt& q)
{
    const Rational qh1 = from_u64(b.q_h1);
    const Rational pairs = qh1 * (qh1 - 1);
    Rational q2 = Rational(q) * Rational(q);
    Rational eps_prime = (1 - 1 / q2);
    eps_prime *= rpow(1 - 2 / qh1, b.q_e + b.q_v);
    eps_prime *= rpow(1 - 2 / pairs, b.q_s);
    eps_prime *= 2 / pairs;
    eps_prime *= b.eps;
    eps_prime.canonicalize();
    return eps_prime;
}

// (q_H1 + q_E + 3 q_S + q_V) S_G1 + (q_S + q_V) P_e + q_S O_G1
Rational common_time(const QueryBudget& b, const OpCosts& c)
{
    Rational g1_mults = from_u64(b.q_h1) + from_u64(b.q_e) + 3 * from_u64(b.q_s) + from_u64(b.q_v);
    return g1_mults * c.s_g1 + (from_u64(b.q_s) + from_u64(b.q_v)) * c.p_e + from_u64(b.q_s) * c.o_g1;
}

}  // namespace

BoundResult unforgeability_bound(const QueryBudget& budget, const OpCosts& costs, const BigInt& q)
{
    check_budget(budget, q);
    Rational t = common_time(budget, costs) + costs.o_g2 + costs.s_g2 + budget.t;
    t.canonicalize();
    return {success_lower_bound(budget, q), t};
}

BoundResult unverifiability_bound(const QueryBudget& budget, const OpCosts& costs, const BigInt& q)
{
    check_budget(budget, q);
    Rational t = common_time(budget, costs) + costs.s_g1 + costs.s_g2 + costs.p_e + budget.t;
    t.canonicalize();
    return {success_lower_bound(budget, q), t};
}

Rational perf_model(const OpCounts& n, const OpCosts& c)
{
    Rational total = from_u64(n.g1_scalar_mul) * c.s_g1 + from_u64(n.g1_add) * c.o_g1 +
                     from_u64(n.g2_exp) * c.exp_g2 + from_u64(n.g2_mul) * c.o_g2 + from_u64(n.pairing) * c.p_e +
                     from_u64(n.map_to_point) * c.mtp;
    total.canonicalize();
    return total;
}

std::vector<PerfRow> reference_perf_table(const OpCosts& costs)
{
    auto counts = [](std::uint64_t mults, std::uint64_t mtp, std::uint64_t pairings) {
        OpCounts c;
        c.g1_scalar_mul = mults;
        c.map_to_point = mtp;
        c.pairing = pairings;
        return c;
    };
    auto ms = [](long hundredths) {
        Rational r(hundredths, 100);
        r.canonicalize();
        return r;
    };
    std::vector<PerfRow> rows = {
        {"id-sdvbs", "sign", counts(5, 1, 1), 0, ms(5498)},
        {"id-sdvbs", "verify", counts(1, 1, 1), 0, ms(2946)},
        {"zhang-wen", "sign", counts(5, 1, 1), 0, ms(6774)},
        {"zhang-wen", "verify", counts(1, 1, 4), 0, ms(8958)},
    };
    for (auto& row : rows)
        row.derived_ms = perf_model(row.counts, costs);
    return rows;
}

KeyValues bounds_report(const QueryBudget& budget, const OpCosts& costs, const BigInt& q)
{
    KeyValues kv;
    auto emit = [&](const std::string& prefix, const BoundResult& r) {
        kv.set(prefix + ".eps_prime", to_fraction(r.eps_prime));
        kv.set(prefix + ".eps_prime_approx", to_decimal(r.eps_prime, 4));
        kv.set(prefix + ".t_prime", to_fraction(r.t_prime));
        kv.set(prefix + ".t_prime_approx", to_decimal(r.t_prime, 4));
    };
    emit("unforgeability", unforgeability_bound(budget, costs, q));
    emit("unverifiability", unverifiability_bound(budget, costs, q));
    return kv;
}

namespace {
std::uint64_t parse_count(const KeyValues& kv, const char* key)
{
    if (!kv.has(key))
        return 0;
    BigInt v = parse_decimal(kv.get(key));
    if (!v.fits_ulong_p())
        throw DecodeError(0, std::string(key) + " is too large");
    return v.get_ui();
}
}  // namespace

QueryBudget budget_from_kv(const KeyValues& kv)
{
    QueryBudget b;
    b.q_h1 = parse_count(kv, "qH1");
    b.q_h2 = parse_count(kv, "qH2");
    b.q_e = parse_count(kv, "qE");
    b.q_s = parse_count(kv, "qS");
    b.q_v = parse_count(kv, "qV");
    b.eps = parse_rational(kv.get("eps"));
    b.t = kv.has("t") ? parse_rational(kv.get("t")) : Rational(0);
    return b;
}

OpCosts costs_from_kv(const KeyValues& kv, OpCosts c)
{
    auto read = [&](const char* key, Rational& field) {
        if (kv.has(key))
            field = parse_rational(kv.get(key));
    };
    read("S_G1", c.s_g1);
    read("S_G2", c.s_g2);
    read("O_G1", c.o_g1);
    read("O_G2", c.o_g2);
    read("P_e", c.p_e);
    read("MTP", c.mtp);
    read("ExpG2", c.exp_g2);
    return c;
}

}  // namespace idsdvbs
