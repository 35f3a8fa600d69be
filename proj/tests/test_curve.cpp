#include <doctest.h>

#include "idsdvbs/instrumentation.hpp"
#include "idsdvbs/params.hpp"
#include "support.hpp"

#include <set>

using namespace idsdvbs;
using idsdvbs::test::pt;

namespace {

const CurveParams& toy() { return toy_params(); }

// Every affine point of y^2 = x^3 + x over F_311, by exhaustion.
std::vector<G1Point> all_points()
{
    const auto& c = toy();
    std::vector<G1Point> out;
    for (long x = 0; x < 311; ++x) {
        for (long y = 0; y < 311; ++y) {
            if ((y * y) % 311 == (x * x % 311 * x + x) % 311)
                out.push_back(pt(c, x, y));
        }
    }
    return out;
}

std::vector<G1Point> subgroup()
{
    std::vector<G1Point> out;
    G1Point acc;
    for (int k = 0; k < 13; ++k) {
        out.push_back(acc);
        acc = point_add(toy(), acc, toy().generator());
    }
    return out;
}

G1Point random_subgroup_point(RandomSource& rng, const CurveParams& c)
{
    return scalar_mul(c, rng.below(c.q()), c.generator());
}

std::pair<long, long> xy(const G1Point& p)
{
    return {p.x().value().get_si(), p.y().value().get_si()};
}

}  // namespace

TEST_CASE("toy parameters")
{
    const auto& c = toy();
    CHECK(c.p() == 311);
    CHECK(c.q() == 13);
    CHECK(c.cofactor() == 24);
    CHECK(c.security_label() == "toy");
    CHECK(xy(c.generator()) == std::pair<long, long>{141, 132});
    CHECK_FALSE(is_probable_prime(12 * 13 * 1 - 1));  // r = 1 gives 155
}

TEST_CASE("curve group order and cofactor clearing")
{
    auto pts = all_points();
    CHECK(pts.size() + 1 == 312);
    for (const auto& a : pts) {
        CHECK(is_on_curve(toy(), a));
        auto cleared = scalar_mul(toy(), BigInt(24), a);
        CHECK(in_subgroup(toy(), cleared));
    }
}

TEST_CASE("seeded parameter generation")
{
    auto c4 = generate_params(4, as_bytes("test"));
    CHECK(c4.q() == 13);
    CHECK(c4.p() == 311);
    CHECK(xy(c4.generator()) == std::pair<long, long>{141, 132});

    auto c16 = generate_params(16, as_bytes("s1"));
    CHECK(c16.q() == 33713);
    CHECK(c16.p() == 1618223);
    CHECK(c16.cofactor() == 48);
    CHECK(c16.generator().x().value() == 306142);
    CHECK(c16.generator().y().value() == 1524812);
    CHECK(c16.security_label() == "q16-p21");

    auto c32 = generate_params(32, as_bytes("acceptance-mid"));
    CHECK(c32.q().get_str() == "4165465259");
    CHECK(c32.p().get_str() == "249927915539");
    CHECK(c32.generator().x().value().get_str() == "68227845048");
    CHECK(c32.generator().y().value().get_str() == "134083619106");

    CHECK(generate_params(16, as_bytes("s1")) == c16);
    CHECK_THROWS_AS(generate_params(3, as_bytes("x")), Error);
}

TEST_CASE("parameter search limits")
{
    ParamSearchOptions opts;
    opts.max_r_steps = 1;
    try {
        generate_params_for_order(13, as_bytes("toy"), opts);
        FAIL("expected failure");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ParamSearchFailed);
    }

    ParamSearchOptions sized;
    sized.p_bits = 16;
    auto c = generate_params_for_order(13, as_bytes("sized"), sized);
    CHECK(bit_length(c.p()) == 16);
    CHECK(c.cofactor() * 13 == c.p() + 1);
    CHECK(mod(c.cofactor(), 12) == 0);

    CHECK_THROWS_AS(generate_params_for_order(15, as_bytes("x")), Error);
}

TEST_CASE("CurveParams rejects broken invariants")
{
    auto code_of = [](auto&& fn) {
        try {
            fn();
        } catch (const Error& e) {
            return e.code();
        }
        return ErrorCode::Io;
    };
    CHECK(code_of([] { CurveParams::create(311, 13, 141, 132, ""); }) == ErrorCode::Io);  // valid
    CHECK(code_of([] { CurveParams::create(313, 13, 141, 132, ""); }) == ErrorCode::DomainError);  // 1 mod 4
    CHECK(code_of([] { CurveParams::create(315, 13, 141, 132, ""); }) == ErrorCode::DomainError);  // composite
    CHECK(code_of([] { CurveParams::create(311, 11, 141, 132, ""); }) == ErrorCode::DomainError);  // 11 does not divide 312
    CHECK(code_of([] { CurveParams::create(311, 13, 141, 133, ""); }) == ErrorCode::InvalidPoint);  // off curve
    CHECK(code_of([] { CurveParams::create(311, 13, 0, 0, ""); }) == ErrorCode::InvalidPoint);      // order 2
}

TEST_CASE("group law")
{
    const auto& c = toy();
    const auto& P = c.generator();
    CHECK(point_add(c, P, G1Point::identity()) == P);
    CHECK(point_add(c, G1Point::identity(), P) == P);
    auto negP = point_neg(c, P);
    CHECK(xy(negP) == std::pair<long, long>{141, 311 - 132});
    CHECK(point_add(c, P, negP).is_identity());

    auto pts = all_points();
    SeededRandom rng("assoc");
    for (int i = 0; i < 100; ++i) {
        const auto& a = pts[rng.below(pts.size()).get_ui()];
        const auto& b = pts[rng.below(pts.size()).get_ui()];
        const auto& d = pts[rng.below(pts.size()).get_ui()];
        CHECK(point_add(c, point_add(c, a, b), d) == point_add(c, a, point_add(c, b, d)));
        CHECK(point_add(c, a, b) == point_add(c, b, a));
    }
    CHECK_THROWS_AS(point_add(c, pt(c, 1, 1), P), Error);
}

TEST_CASE("scalar multiplication")
{
    const auto& c = toy();
    const auto& P = c.generator();
    CHECK(scalar_mul(c, BigInt(0), P).is_identity());
    CHECK(scalar_mul(c, BigInt(1), P) == P);
    CHECK(scalar_mul(c, c.q(), P).is_identity());
    CHECK(scalar_mul(c, BigInt(-1), P) == point_neg(c, P));

    for (const auto& a : {P, pt(c, 0, 0), all_points()[17]}) {
        G1Point acc;
        for (long k = 0; k <= 50; ++k) {
            CHECK(scalar_mul(c, BigInt(k), a) == acc);
            acc = point_add(c, acc, a);
        }
    }
}

TEST_CASE("distortion map")
{
    const auto& c = toy();
    CHECK(distortion_map(c, G1Point::identity()).infinity);
    for (const auto& a : all_points()) {
        auto img = distortion_map(c, a);
        CHECK_FALSE(img.infinity);
        CHECK(is_on_curve(img));
        CHECK(img.x == Fp2Element(-a.x(), c.fp_element(0)));
        CHECK(img.y == Fp2Element(c.fp_element(0), a.y()));
    }
}

TEST_CASE("pairing on toy parameters")
{
    const auto& c = toy();
    const auto& P = c.generator();
    auto g = tate_pairing(c, P, P);
    // independent evaluation with full Miller denominators
    CHECK(g.value() == Fp2Element(c.fp_element(24), c.fp_element(83)));
    CHECK_FALSE(g.is_one());
    CHECK(g.value().pow(13).is_one());
    CHECK(in_gt(c, g));

    CHECK(tate_pairing(c, G1Point::identity(), P).is_one());
    CHECK(tate_pairing(c, P, G1Point::identity()).is_one());
    CHECK(tate_pairing(c, scalar_mul(c, BigInt(2), P), scalar_mul(c, BigInt(3), P)) == gt_pow(g, 6));
    CHECK_THROWS_AS(tate_pairing(c, pt(c, 1, 1), P), Error);

    auto sub = subgroup();
    for (int a = 0; a < 13; ++a) {
        for (int b = 0; b < 13; ++b)
            CHECK(tate_pairing(c, sub[a], sub[b]) == gt_pow(g, (a * b) % 13));
    }
}

TEST_CASE("pairing bilinearity on random triples (16-bit q)")
{
    auto c = generate_params(16, as_bytes("s1"));
    SeededRandom rng("bilinear");
    for (int i = 0; i < 100; ++i) {
        auto a = random_subgroup_point(rng, c);
        auto b = random_subgroup_point(rng, c);
        auto d = random_subgroup_point(rng, c);
        auto e_ad = tate_pairing(c, a, d);
        CHECK(tate_pairing(c, point_add(c, a, b), d) == gt_mul(e_ad, tate_pairing(c, b, d)));
        CHECK(tate_pairing(c, a, point_add(c, b, d)) == gt_mul(tate_pairing(c, a, b), e_ad));
        CHECK(in_gt(c, e_ad));
    }
    const auto& P = c.generator();
    auto g = tate_pairing(c, P, P);
    for (int i = 0; i < 100; ++i) {
        BigInt a = rng.below(c.q()), b = rng.below(c.q());
        CHECK(tate_pairing(c, scalar_mul(c, a, P), scalar_mul(c, b, P)) == gt_pow(g, mod(a * b, c.q())));
    }
}

TEST_CASE("hash to point")
{
    const auto& c = toy();
    auto alice = hash_to_point(c, as_bytes("alice"));
    auto bob = hash_to_point(c, as_bytes("bob"));
    // Regression fixtures from the independent reference. With only twelve
    // non-identity points, "alice" and "bob" land on the same one.
    CHECK(xy(alice) == std::pair<long, long>{274, 25});
    CHECK(xy(bob) == std::pair<long, long>{274, 25});
    CHECK(xy(hash_to_point(c, as_bytes("carol"))) == std::pair<long, long>{141, 132});
    CHECK(xy(hash_to_point(c, as_bytes("erin"))) == std::pair<long, long>{18, 93});
    CHECK(xy(hash_to_point(c, as_bytes("signer"))) == std::pair<long, long>{274, 286});
    CHECK(xy(hash_to_point(c, as_bytes("verifier"))) == std::pair<long, long>{254, 130});

    CHECK(hash_to_point(c, as_bytes("alice")) == alice);
    CHECK(in_subgroup(c, alice));
    CHECK_FALSE(alice.is_identity());
}

TEST_CASE("hash to point hits every subgroup element")
{
    const auto& c = toy();
    std::set<std::pair<long, long>> seen;
    SeededRandom rng("coupon");
    for (int i = 0; i < 1000; ++i) {
        auto h = hash_to_point(c, rng.bytes(12));
        REQUIRE_FALSE(h.is_identity());
        CHECK(in_subgroup(c, h));
        seen.insert(xy(h));
    }
    CHECK(seen.size() == 12);
}

TEST_CASE("point and GT encodings")
{
    const auto& c = toy();
    const auto& P = c.generator();
    CHECK(c.point_size() == 5);
    CHECK(encode_point(c, P) == Bytes{0x04, 0x00, 141, 0x00, 132});
    CHECK(encode_point(c, G1Point::identity()) == Bytes(5, 0));
    CHECK(decode_point(c, encode_point(c, P)) == P);
    CHECK(decode_point(c, Bytes(5, 0)).is_identity());

    CHECK_THROWS_AS(decode_point(c, Bytes{0x04, 0x00, 141, 0x00, 133}), DecodeError);  // off curve
    CHECK_THROWS_AS(decode_point(c, Bytes{0x04, 0x00, 0, 0x00, 0}), DecodeError);      // order 2
    CHECK_THROWS_AS(decode_point(c, Bytes{0x02, 0x00, 141, 0x00, 132}), DecodeError);
    CHECK_THROWS_AS(decode_point(c, Bytes{0x04, 0x00, 141, 0x00}), DecodeError);
    CHECK_THROWS_AS(decode_point(c, Bytes{0x00, 0x00, 0x00, 0x00, 0x01}), DecodeError);
    try {
        decode_point(c, Bytes{0x04, 0x01, 0x37, 0x00, 132}, 10);
    } catch (const DecodeError& e) {
        CHECK(e.position() == 11);
    }

    auto g = tate_pairing(c, P, P);
    CHECK(encode_gt(c, g) == Bytes{0, 24, 0, 83});
    CHECK(decode_gt(c, encode_gt(c, g)) == g);
    CHECK_THROWS_AS(decode_gt(c, Bytes{0, 2, 0, 0}), DecodeError);  // 2 has order not dividing 13
    CHECK_THROWS_AS(decode_gt(c, Bytes{0, 0, 0, 0}), DecodeError);

    CHECK(encode_scalar(c, c.scalar(12)) == Bytes{12});
    CHECK(decode_scalar(c, Bytes{12}).value() == 12);
    CHECK_THROWS_AS(decode_scalar(c, Bytes{13}), DecodeError);
}

TEST_CASE("parameter file round trip")
{
    const auto& c = toy();
    auto text = write_params_text(c);
    CHECK(text.find("p=311\n") != std::string::npos);
    CHECK(text.find("cofactor=24\n") != std::string::npos);
    CHECK(read_params_text(text) == c);

    auto kv = params_to_kv(c);
    kv.set("cofactor", "25");
    CHECK_THROWS_AS(params_from_kv(kv), Error);
    CHECK_THROWS_AS(read_params_text("p=311\np=311\n"), DecodeError);
    CHECK_THROWS_AS(read_params_text("p=311\n"), DecodeError);
}

TEST_CASE("only public curve operations are counted")
{
    const auto& c = toy();
    OpCounter counter;
    {
        CountingRegion region(counter);
        auto a = scalar_mul(c, BigInt(5), c.generator());
        (void)point_add(c, a, a);
        (void)hash_to_point(c, as_bytes("x"));
        auto g = tate_pairing(c, a, a);
        (void)gt_pow(g, 3);
        (void)gt_mul(g, g);
        (void)detail::mul(c.fp(), 7, a);
        (void)decode_point(c, encode_point(c, a));
        OpCounter inner;
        {
            CountingRegion nested(inner);
            (void)scalar_mul(c, BigInt(2), a);
        }
        CHECK(inner.counts().g1_scalar_mul == 1);
    }
    OpCounts expected;
    expected.g1_scalar_mul = 1;
    expected.g1_add = 1;
    expected.map_to_point = 1;
    expected.pairing = 1;
    expected.g2_exp = 1;
    expected.g2_mul = 1;
    CHECK(counter.counts() == expected);
    (void)scalar_mul(c, BigInt(2), c.generator());  // outside any region
    CHECK(counter.counts() == expected);
}
