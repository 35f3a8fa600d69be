#include <doctest.h>

#include "idsdvbs/algebra.hpp"
#include "idsdvbs/hash.hpp"

#include <array>

using namespace idsdvbs;

namespace {

ModulusRef m311() { return make_modulus(311); }

FpElement fe(const ModulusRef& m, long v) { return FpElement(m, v); }

Fp2Element f2(const ModulusRef& m, long a, long b) { return {fe(m, a), fe(m, b)}; }

Fp2Element random_fp2(const ModulusRef& m, RandomSource& rng)
{
    return {FpElement(m, rng.below(m->value())), FpElement(m, rng.below(m->value()))};
}

}  // namespace

TEST_CASE("inverse mod 13")
{
    auto m = make_modulus(13);
    CHECK(fp_inv(fe(m, 2)).value() == 7);
    CHECK(fp_inv(fe(m, 1)).value() == 1);
    CHECK(fp_inv(fe(m, 12)).value() == 12);
}

TEST_CASE("inverting zero fails")
{
    auto m = make_modulus(13);
    try {
        (void)fp_inv(fe(m, 0));
        FAIL("no exception");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::InversionOfZero);
    }
}

TEST_CASE("double inverse is identity for every unit mod 311")
{
    auto m = m311();
    for (long a = 1; a < 311; ++a)
        CHECK(fp_inv(fp_inv(fe(m, a))) == fe(m, a));
}

TEST_CASE("mixing moduli is rejected")
{
    auto a = fe(make_modulus(13), 3);
    auto b = fe(make_modulus(311), 3);
    CHECK_THROWS_AS(a + b, Error);
    try {
        (void)(a * b);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ParamMismatch);
    }
    CHECK_THROWS_AS(fp2_mul(f2(make_modulus(13), 1, 1), f2(m311(), 1, 1)), Error);
}

TEST_CASE("square roots mod 311")
{
    auto m = m311();
    CHECK(fp_sqrt(fe(m, 0))->value() == 0);
    CHECK(fp_sqrt(fe(m, 4))->value() == 2);

    // 2^78 mod 311 = 245 is one root of 2; the other, 66, is the smaller.
    CHECK(fe(m, 2).pow(78).value() == 245);
    auto r = fp_sqrt(fe(m, 2));
    REQUIRE(r);
    CHECK(r->value() == 66);
    CHECK((*r * *r).value() == 2);
    CHECK(((fe(m, 245) * fe(m, 245)).value()) == 2);
}

TEST_CASE("square roots: residues and non-residues exhaustively")
{
    auto m = m311();
    const BigInt half = (311 - 1) / 2;
    int residues = 0;
    for (long a = 1; a < 311; ++a) {
        auto r = fp_sqrt(fe(m, a));
        if (r) {
            ++residues;
            CHECK((*r * *r) == fe(m, a));
            CHECK(r->value() <= 311 - r->value());
            CHECK(is_square(fe(m, a)));
        } else {
            CHECK(fe(m, a).pow(half) == fe(m, 310));
            CHECK_FALSE(is_square(fe(m, a)));
        }
    }
    CHECK(residues == 155);
}

TEST_CASE("square root needs p = 3 mod 4")
{
    auto m = make_modulus(13);
    try {
        (void)fp_sqrt(fe(m, 4));
        FAIL("no exception");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::DomainError);
    }
}

TEST_CASE("fp2 multiplication examples")
{
    auto m = m311();
    CHECK(fp2_mul(f2(m, 1, 0), f2(m, 17, 250)) == f2(m, 17, 250));
    CHECK(fp2_mul(f2(m, 0, 1), f2(m, 0, 1)) == f2(m, 310, 0));
    CHECK(fp2_mul(f2(m, 2, 3), f2(m, 4, 5)) == f2(m, 304, 22));
    CHECK(f2(m, 2, 3).square() == fp2_mul(f2(m, 2, 3), f2(m, 2, 3)));
}

TEST_CASE("fp2 ring laws over random triples")
{
    auto m = m311();
    SeededRandom rng("fp2-laws");
    for (int i = 0; i < 200; ++i) {
        auto a = random_fp2(m, rng);
        auto b = random_fp2(m, rng);
        auto c = random_fp2(m, rng);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == Fp2Element::zero(m));
        if (!a.is_zero())
            CHECK(a * a.inverse() == Fp2Element::one(m));
    }
}

TEST_CASE("fp2 Lagrange: x^(p^2-1) = 1 and conjugate is Frobenius")
{
    auto m = m311();
    SeededRandom rng("fp2-lagrange");
    for (int i = 0; i < 100; ++i) {
        auto x = random_fp2(m, rng);
        if (x.is_zero())
            continue;
        CHECK(x.pow(BigInt(311) * 311 - 1).is_one());
        CHECK(x.pow(311) == x.conjugate());
    }
    CHECK_THROWS_AS(Fp2Element::zero(m).inverse(), Error);
}

TEST_CASE("fixed-width encoding")
{
    auto m = m311();
    CHECK(m->width() == 2);
    CHECK(fe(m, 5).to_bytes() == Bytes{0x00, 0x05});
    CHECK(FpElement::from_bytes(m, Bytes{0x01, 0x36}).value() == 310);
    CHECK_THROWS_AS(FpElement::from_bytes(m, Bytes{0x01, 0x37}), DecodeError);  // 311 is not reduced
    CHECK_THROWS_AS(FpElement::from_bytes(m, Bytes{0x05}), DecodeError);
    CHECK(i2osp(BigInt(258), 3) == Bytes{0x00, 0x01, 0x02});
    CHECK_THROWS_AS(i2osp(BigInt(65536), 2), Error);
    CHECK(os2ip(Bytes{0x01, 0x00}) == 256);
}

TEST_CASE("unit sampling")
{
    SUBCASE("q = 3 gives only 1 and 2")
    {
        auto q = make_modulus(3);
        SeededRandom rng("q3");
        for (int i = 0; i < 1000; ++i) {
            auto v = zq_sample_unit(rng, q).value();
            CHECK((v == 1 || v == 2));
        }
    }
    SUBCASE("q = 13: full coverage, no zero, chi-square at 1%")
    {
        auto q = make_modulus(13);
        SeededRandom rng("q13-frequency");
        std::array<int, 13> counts{};
        const int n = 10000;
        for (int i = 0; i < n; ++i)
            ++counts[zq_sample_unit(rng, q).value().get_ui()];
        CHECK(counts[0] == 0);
        double chi2 = 0;
        const double expected = n / 12.0;
        for (int v = 1; v <= 12; ++v) {
            CHECK(counts[v] > 0);
            chi2 += (counts[v] - expected) * (counts[v] - expected) / expected;
        }
        CHECK(chi2 < 24.725);  // 11 degrees of freedom
    }
    SUBCASE("replay")
    {
        auto q = make_modulus(1000003);
        SeededRandom a("replay"), b("replay");
        for (int i = 0; i < 50; ++i)
            CHECK(zq_sample_unit(a, q) == zq_sample_unit(b, q));
    }
    CHECK_THROWS_AS(zq_sample_unit(*std::make_unique<SeededRandom>("x"), make_modulus(2)), Error);
}

TEST_CASE("seeded stream layout")
{
    // first block is SHA-256(seed || 0^8)
    SeededRandom rng("abc");
    Bytes input = to_bytes("abc");
    append_u64_be(input, 0);
    auto d = sha256(input);
    CHECK(rng.bytes(32) == Bytes(d.begin(), d.end()));
}

TEST_CASE("sha256 known answer")
{
    auto d = sha256(as_bytes("abc"));
    CHECK(to_hex(Bytes(d.begin(), d.end())) ==
          "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("hex")
{
    CHECK(to_hex(Bytes{0x00, 0xab, 0xff}) == "00abff");
    CHECK(from_hex("00ABff") == Bytes{0x00, 0xab, 0xff});
    CHECK_THROWS_AS(from_hex("abc"), DecodeError);
    CHECK_THROWS_AS(from_hex("zz"), DecodeError);
}

TEST_CASE("parse_decimal")
{
    CHECK(parse_decimal("0") == 0);
    CHECK(parse_decimal("123456789012345678901234567890").get_str() == "123456789012345678901234567890");
    CHECK_THROWS_AS(parse_decimal(""), DecodeError);
    CHECK_THROWS_AS(parse_decimal("12a"), DecodeError);
    CHECK_THROWS_AS(parse_decimal("-5"), DecodeError);
}
