#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace qseq;

TEST(SpecString, Parse) {
    auto s = parse_spec("tl:p=13:g=2:ijl=123");
    EXPECT_EQ(s.family, Family::tang_lindner);
    EXPECT_EQ(s.p, 13u);
    EXPECT_EQ(s.generator, 2u);
    EXPECT_EQ(s.indices, (Triple{1, 2, 3}));

    auto c = parse_spec("chung:variant=sc:src=dhm:p=5:g=2:ijl=012");
    EXPECT_EQ(c.family, Family::chung);
    EXPECT_EQ(c.variant, PairingVariant::shift_complement);
    ASSERT_TRUE(c.source);
    EXPECT_EQ(c.source->family, Family::dhm);
}

TEST(SpecString, RoundTrip) {
    for (const char* text : {"order8:p=17:g=3", "tl:p=13:g=2:ijl=123", "dhm:p=5:g=2:ijl=012",
                             "chung:variant=sc:src=dhm:p=5:g=2:ijl=012", "shen:p=5:g=2:ijl=012",
                             "chung:variant=so:src=1010001101", "tl:p=17:ijl=130:zero=c1"})
        EXPECT_EQ(to_string(parse_spec(text)), text);
    EXPECT_EQ(to_string(resolve(parse_spec("order8:p=97"))), "order8:p=97:g=5");
}

TEST(SpecString, Build) {
    EXPECT_EQ(build("order8:p=17:g=3").to_string(), "02012331001332102");
    EXPECT_EQ(build("dhm:p=5:g=2:ijl=012").to_string(), "1010001101");
    EXPECT_EQ(build("chung:variant=sc:src=dhm:p=5:g=2:ijl=012").to_string(), "2031002312");
    EXPECT_EQ(build("chung:variant=sc:src=1010001101").to_string(), "2031002312");
    EXPECT_EQ(build("shen:p=5:g=2:ijl=012").to_string(), "2031002312");
}

TEST(SpecString, Errors) {
    EXPECT_THROW(parse_spec("foo:p=5"), ParameterError);
    EXPECT_THROW(parse_spec("tl:p=13"), ParameterError);
    EXPECT_THROW(parse_spec("tl:p=13:ijl=12"), ParameterError);
    EXPECT_THROW(parse_spec("tl:p=13:ijl=129"), ParameterError);
    EXPECT_THROW(parse_spec("chung:src=1010"), ParameterError);
    EXPECT_THROW(parse_spec("order8:p"), ParameterError);
    EXPECT_THROW(parse_spec("order8:q=17"), ParameterError);
    try {
        build("order8:p=15");
        FAIL();
    } catch (const AdmissibilityError& e) {
        EXPECT_NE(std::string(e.what()).find("15 is not an odd prime"), std::string::npos);
    }
}
