#include <doctest.h>

#include <random>
#include <sstream>

#include "civ/encoded_vector.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace civ;

namespace {

std::vector<CodecId> all_variants() {
    auto v = compressed_variants();
    v.insert(v.begin(), CodecId{Codec::plain, false});
    return v;
}

void check_equivalent(const std::vector<uint64_t>& x, CodecId id, const CodecParams& params) {
    INFO("codec " << id.name() << " n=" << x.size() << " h=" << params.h);
    auto v = EncodedVector::build(x, id, params);
    REQUIRE(v.size() == x.size());
    REQUIRE(v.decode() == x);
    for (uint64_t i = 0; i < x.size(); ++i) {
        auto e = v.access(i);
        REQUIRE(e.value == x[i]);
        REQUIRE(e.cursor.index() == i + 1);
        auto n1 = e.cursor.next();
        if (i + 1 < x.size()) {
            REQUIRE(n1 == x[i + 1]);
            auto n2 = e.cursor.next();
            if (i + 2 < x.size())
                REQUIRE(n2 == x[i + 2]);
            else
                REQUIRE(!n2);
        } else {
            REQUIRE(!n1);
        }
    }
    CHECK_THROWS_AS(v.access(x.size()), QueryError);
}

}  // namespace

TEST_CASE("codec names round trip") {
    CHECK(compressed_variants().size() == 13);
    for (auto id : all_variants()) {
        auto parsed = CodecId::parse(id.name());
        REQUIRE(parsed.has_value());
        CHECK(*parsed == id);
    }
    CHECK(!CodecId::parse("rl_zz"));
    CHECK(!CodecId::parse("plain_zz"));
    CHECK(!CodecId::parse("rice"));
    CHECK(CodecId::parse("delta_zz")->zigzag);
}

TEST_CASE("default sampling mirrors the study setup") {
    CHECK(CodecParams::defaults_for({Codec::gamma, false}).h == 128);
    CHECK(CodecParams::defaults_for({Codec::s9, true}).h == 128);
    CHECK(CodecParams::defaults_for({Codec::pfd, false}).h == 1024);
    CHECK(CodecParams::defaults_for({Codec::pfd, true}).h == 1024);
    CHECK(CodecParams::defaults_for({Codec::pfd, false}).pfd_block == 128);
}

TEST_CASE("invalid parameters are contract violations") {
    CodecParams p;
    p.h = 0;
    CHECK_THROWS_AS(p.validate({Codec::gamma, false}), ContractViolation);
    p = CodecParams{};
    p.pfd_exception_frac = 0;
    CHECK_THROWS_AS(p.validate({Codec::pfd, false}), ContractViolation);
    p = CodecParams{};
    p.dac_widths = {0};
    CHECK_THROWS_AS(p.validate({Codec::dac, false}), ContractViolation);
}

TEST_CASE("empty vectors") {
    std::vector<uint64_t> x;
    for (auto id : all_variants()) {
        auto v = EncodedVector::build(x, id);
        CHECK(v.size() == 0);
        CHECK(v.decode().empty());
        CHECK_THROWS_AS(v.access(0), QueryError);
    }
}

TEST_CASE("plain access") {
    std::vector<uint64_t> x = {4, 2};
    auto v = EncodedVector::build(x, {Codec::plain, false});
    CHECK(v.access(1).value == 2);
    CHECK(size_report(v).total_bits == 16);
}

TEST_CASE("single element cursor reaches the end") {
    std::vector<uint64_t> x = {5};
    for (auto id : all_variants()) {
        auto v = EncodedVector::build(x, id);
        auto e = v.access(0);
        CHECK(e.value == 5);
        CHECK(!e.cursor.next());
        CHECK(!e.cursor.next());
    }
}

TEST_CASE("rl over [7,7,7,2,2,9]") {
    std::vector<uint64_t> x = {7, 7, 7, 2, 2, 9};
    auto rl = RlVector::build(x);
    CHECK(rl.runs() == 3);
    CHECK(rl.heads()[0] == 7);
    CHECK(rl.heads()[1] == 2);
    CHECK(rl.heads()[2] == 9);
    CHECK(rl.starts().select1(0) == 0);
    CHECK(rl.starts().select1(1) == 3);
    CHECK(rl.starts().select1(2) == 5);
    CHECK(rl.heads()[rl.starts().rank1(5) - 1] == 2);
    CHECK(rl.access(4).value == 2);
}

TEST_CASE("gamma with h=2 over [1,2,3,4]") {
    std::vector<uint64_t> x = {1, 2, 3, 4};
    CodecParams p;
    p.h = 2;
    auto g = GammaVector::build(x, p);
    // Codewords of 2, 3, 4, 5: 3 + 3 + 5 + 5 bits; entry 2 starts at bit 6.
    CHECK(g.sample_offset(0) == 0);
    CHECK(g.sample_offset(1) == 6);
    CHECK(g.space().payload == 16);
    CHECK(g.access(3).value == 4);
    CHECK(g.access(2).value == 3);
}

TEST_CASE("delta_zz over [10,8,11]") {
    std::vector<uint64_t> x = {10, 8, 11};
    CHECK(zigzag_differences(x) == std::vector<uint64_t>{20, 3, 6});
    auto v = EncodedVector::build(x, {Codec::delta, true});
    auto e = v.access(0);
    CHECK(e.value == 10);
    CHECK(e.cursor.next() == 8);
    CHECK(e.cursor.next() == 11);
    CHECK(!e.cursor.next());
}

TEST_CASE("oracle equivalence across shapes, sizes and sampling steps") {
    std::mt19937_64 rng(99);
    const gen::Shape shapes[] = {gen::Shape::uniform_small, gen::Shape::long_runs, gen::Shape::sorted,
                                 gen::Shape::heavy_tailed};
    for (int trial = 0; trial < 40; ++trial) {
        auto shape = shapes[trial % 4];
        uint64_t n = 1 + rng() % 3000;
        auto x = gen::make(shape, n, rng);
        INFO("shape " << std::string(gen::shape_name(shape)));
        for (auto id : all_variants()) {
            auto p = CodecParams::defaults_for(id);
            if (trial % 3 == 1) p.h = id.codec == Codec::pfd ? p.pfd_block * (1 + rng() % 4) : 1 + rng() % 300;
            if (trial % 3 == 2 && id.codec == Codec::pfd) {
                p.pfd_block = 1 + rng() % 256;
                p.h = p.pfd_block * (1 + rng() % 8);
            }
            check_equivalent(x, id, p);
        }
    }
}

TEST_CASE("64-bit values where the codec accepts them") {
    std::mt19937_64 rng(1);
    std::vector<uint64_t> x(700);
    for (auto& v : x) v = rng() >> (rng() % 64);
    x[3] = ~uint64_t(0) - 1;
    for (auto id : {CodecId{Codec::plain, false}, CodecId{Codec::gamma, false}, CodecId{Codec::delta, false},
                    CodecId{Codec::dac, false}, CodecId{Codec::fv, false}, CodecId{Codec::rl, false},
                    CodecId{Codec::pfd, false}})
        check_equivalent(x, id, CodecParams::defaults_for(id));
    x[3] = ~uint64_t(0);
    for (auto id : {CodecId{Codec::plain, false}, CodecId{Codec::dac, false}, CodecId{Codec::rl, false},
                    CodecId{Codec::pfd, false}})
        check_equivalent(x, id, CodecParams::defaults_for(id));
}

TEST_CASE("build errors name the offending index") {
    std::vector<uint64_t> x = {1, 2, ~uint64_t(0), 4};
    for (auto c : {Codec::gamma, Codec::delta, Codec::fv}) {
        try {
            EncodedVector::build(x, {c, false});
            FAIL("expected BuildError");
        } catch (const BuildError& e) {
            CHECK(std::string(e.what()).find("index 2") != std::string::npos);
        }
    }
    std::vector<uint64_t> big = {1, uint64_t(1) << 28};
    try {
        EncodedVector::build(big, {Codec::s9, false});
        FAIL("expected BuildError");
    } catch (const BuildError& e) {
        CHECK(std::string(e.what()).find("index 1") != std::string::npos);
    }
    std::vector<uint64_t> huge = {0, uint64_t(1) << 62};
    for (auto c : {Codec::gamma, Codec::delta, Codec::dac, Codec::fv, Codec::s9, Codec::pfd})
        CHECK_THROWS_AS(EncodedVector::build(huge, {c, true}), BuildError);
}

TEST_CASE("building twice yields identical bits") {
    std::mt19937_64 rng(17);
    auto x = gen::make(gen::Shape::heavy_tailed, 5000, rng);
    for (auto id : all_variants()) {
        std::ostringstream a, b;
        EncodedVector::build(x, id).save(a);
        EncodedVector::build(x, id).save(b);
        CHECK(a.str() == b.str());
    }
}

TEST_CASE("size reports add up") {
    std::mt19937_64 rng(4);
    auto x = gen::uniform(10000, 200, rng);
    for (auto id : all_variants()) {
        auto v = EncodedVector::build(x, id);
        auto r = size_report(v);
        CHECK(r.total_bits == r.payload_bits + r.sample_bits + r.aux_bits);
        CHECK(r.plain_bits == 8 * x.size());
        CHECK(r.ratio_percent == doctest::Approx(100.0 * double(r.total_bits) / double(r.plain_bits)));
    }
    auto plain = size_report(EncodedVector::build(x, {Codec::plain, false}));
    CHECK(plain.total_bits == 80000);
}

TEST_CASE("gamma payload is the sum of shifted codeword lengths") {
    std::mt19937_64 rng(8);
    auto x = gen::uniform(20000, 1 << 20, rng);
    uint64_t expected = 0;
    for (uint64_t v : x) expected += 2 * oracle::ilog2(v + 1) + 1;
    CHECK(size_report(EncodedVector::build(x, {Codec::gamma, false})).payload_bits == expected);
}

TEST_CASE("sampled codecs keep ceil(n/h) samples") {
    std::mt19937_64 rng(21);
    auto x = gen::uniform(1000, 50, rng);
    CodecParams p;
    p.h = 7;
    auto g = GammaVector::build(x, p);
    uint64_t s = (1000 + 6) / 7;
    CHECK(g.space().samples == s * bit_length(g.space().payload));
    auto zz = ZigZagVector<GammaVector>::build(x, p);
    CHECK(zz.space().samples == s * bit_length(zz.base().space().payload) + 64 * s);
}
