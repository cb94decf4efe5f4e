#include <gtest/gtest.h>

#include "qltc/code_spec.hpp"
#include "qltc/serialization.hpp"

using namespace qltc;

TEST(ComplexJson, FieldOrderAndRoundTrip) {
    const CssCode q = q_complex(BitMatrix::from_strings({"110", "011"}));
    const Json j = complex_to_json(q.complex());
    EXPECT_EQ(j.dump(),
              R"({"spaces":[3,6,2],"diffs":["6 3\n100\n010\n001\n100\n010\n001\n","2 6\n110110\n011011\n"],"labels":["z_checks","qubits","x_checks"]})");
    EXPECT_EQ(complex_from_json(j), q.complex());
    EXPECT_EQ(parse_complex(j.dump(2)), q.complex());
}

TEST(ComplexJson, Rejections) {
    EXPECT_THROW(parse_complex("not json"), ParseError);
    EXPECT_THROW(parse_complex(R"({"diffs":[]})"), ParseError);
    EXPECT_THROW(parse_complex(R"({"spaces":[2,1],"diffs":[]})"), ParseError);
    EXPECT_THROW(parse_complex(R"({"spaces":[2,1],"diffs":["1 3\n111\n"]})"), ParseError);
    EXPECT_THROW(parse_complex(R"({"spaces":[2,1],"diffs":[7]})"), ParseError);
    EXPECT_THROW(parse_complex(R"({"spaces":[-2,1],"diffs":["1 2\n11\n"]})"), ParseError);
    EXPECT_NO_THROW(parse_complex(R"({"spaces":[2,1],"diffs":["1 2\n11\n"]})"));
}

TEST(BalancedJson, LayoutRoundTrip) {
    const BalancedCode b = distance_balance(q_complex(rep_standard(3).h()), rep_standard(2), "example");
    const Json j = balanced_to_json(b);
    ASSERT_TRUE(j.contains("block_layout"));
    EXPECT_EQ(j["block_layout"]["qubits"][1]["offset"], 12);
    const BalancedCode back = balanced_from_json(Json::parse(j.dump()));
    EXPECT_EQ(back.code.complex(), b.code.complex());
    EXPECT_EQ(back.layout, b.layout);
    EXPECT_EQ(back.parent, "example");
}

TEST(Report, ClassicalJson) {
    const CodeReport r = analyze(rep_standard(3), kDefaultCap, "rep_standard(3)");
    EXPECT_EQ(to_json(r).dump(),
              R"j({"kind":"classical","n":3,"K":1,"d":3,"locality":2,"soundness":{"num":3,"den":2},"s":2,"independent_checks":true,"provenance":"rep_standard(3)"})j");
}

TEST(Report, QuantumJson) {
    const CodeReport r = analyze(q_complex(rep_standard(3).h()));
    const Json j = to_json(r);
    EXPECT_EQ(j["kind"], "quantum");
    EXPECT_EQ(j["dX"], 2);
    EXPECT_EQ(j["dZ"], 3);
    EXPECT_EQ(j["nX"], 2);
    EXPECT_EQ(j["nZ"], 3);
    EXPECT_EQ(j["soundness"], j["rhoZ"]);
    EXPECT_FALSE(j.contains("skipped"));
}

TEST(Report, InfiniteAndUndefined) {
    const Json j = to_json(analyze(CssCode::from_checks(BitMatrix::from_strings({"11"}), BitMatrix::from_strings({"11"}))));
    EXPECT_EQ(j["dX"], "inf");
    EXPECT_EQ(j["dZ"], "inf");
    const Json c = to_json(analyze(ClassicalCode::from_matrix(BitMatrix(0, 3))));
    EXPECT_EQ(c["soundness"], "undefined");
    EXPECT_EQ(c["soundness_reason"], "no checks");
}

TEST(Report, PartialWhenCapExceeded) {
    std::mt19937_64 rng(71);
    BitMatrix h(12, 40);
    for (std::size_t r = 0; r < 12; ++r)
        for (std::size_t c = 0; c < 40; ++c)
            if (rng() & 1U) h.set(r, c);
    const CodeReport r = analyze(ClassicalCode::from_matrix(h), kMinimumCap);
    EXPECT_FALSE(r.complete());
    const Json j = to_json(r);
    EXPECT_EQ(j["n"], 40);
    EXPECT_TRUE(j["soundness"].is_null());
    EXPECT_EQ(j["skipped"].back(), "soundness");
}

TEST(Report, TextIsAligned) {
    const std::string text = to_text(analyze(rep_standard(3)));
    EXPECT_NE(text.find("soundness           3/2\n"), std::string::npos);
}

TEST(CodeSpec, JsonRoundTripAndBuild) {
    const Json j = Json::parse(R"({"family":"q_complex","params":{"hhat":{"family":"rep","params":{"l":3}}}})");
    const CodeSpec s = spec_from_json(j);
    EXPECT_EQ(describe(s), "q_complex(rep_standard(3))");
    const AnyCode c = build(s);
    ASSERT_TRUE(is_quantum(c));
    EXPECT_EQ(std::get<CssCode>(c).n(), 6u);
    EXPECT_EQ(spec_from_json(to_json(s)).hhat->l, 3u);

    const CodeSpec l = spec_from_json(Json::parse(R"({"family":"random_ldpc","params":{"t":6,"s":3,"row_weight":2,"col_weight":1,"seed":4}})"));
    EXPECT_EQ(std::get<ClassicalCode>(build(l)).h(), random_ldpc({6, 3, 2, 1}, 4).h());
    EXPECT_EQ(std::get<ClassicalCode>(build(with_seed(l, 9))).h(), random_ldpc({6, 3, 2, 1}, 9).h());
}

TEST(CodeSpec, Rejections) {
    EXPECT_THROW(spec_from_json(Json::parse(R"({"family":"bogus"})")), ParseError);
    EXPECT_THROW(spec_from_json(Json::parse(R"({"family":"rep","params":{}})")), ParseError);
    EXPECT_THROW(spec_from_json(Json::parse(R"({"family":"rep","params":{"l":-1}})")), ParseError);
    EXPECT_THROW(spec_from_json(Json::parse(R"([1,2])")), ParseError);
    EXPECT_THROW(build(spec_from_json(Json::parse(R"({"family":"rep","params":{"l":1}})"))), std::invalid_argument);
}
