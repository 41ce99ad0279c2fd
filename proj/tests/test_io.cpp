#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "projconn/io.hpp"

using namespace projconn;

namespace {

std::string read_file(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Compares against tests/golden/<name>, or rewrites it when PROJCONN_UPDATE_GOLDEN is set.
void check_golden(const std::string& name, const std::string& actual) {
    const std::filesystem::path path = std::filesystem::path(PROJCONN_GOLDEN_DIR) / name;
    if (std::getenv("PROJCONN_UPDATE_GOLDEN")) {
        std::ofstream(path, std::ios::binary) << actual;
        GTEST_SKIP() << "rewrote " << path;
    }
    ASSERT_TRUE(std::filesystem::exists(path)) << path << " missing; run with PROJCONN_UPDATE_GOLDEN=1";
    EXPECT_EQ(read_file(path), actual) << name << " differs from golden";
}

}  // namespace

TEST(Parse, Fields) {
    EXPECT_EQ(io::parse_field("q=4").q(), 4u);
    EXPECT_EQ(io::parse_field("2^3").q(), 8u);
    EXPECT_EQ(io::parse_field(" q=9:1,0,1 ").modulus(), (Poly{1, 0, 1}));
    EXPECT_EQ(io::format_field(io::parse_field("q=4")), "q=4:1,1,1");
    EXPECT_EQ(io::format_field(io::parse_field("q=7")), "q=7");
    EXPECT_THROW((void)io::parse_field("q=6"), Error);
    EXPECT_THROW((void)io::parse_field("q=abc"), Error);
    EXPECT_THROW((void)io::parse_field("2^9"), Error);
    EXPECT_THROW((void)io::parse_field("q=4:1,0,1"), Error);
}

TEST(Parse, MatricesAndElements) {
    const auto f3 = FieldCtx::make(3);
    const Matrix m = io::parse_matrix(f3, "1,0,1,1; 0,1,1,2");
    EXPECT_EQ(m, Matrix::from_rows(f3, {{1, 0, 1, 1}, {0, 1, 1, 2}}));
    EXPECT_EQ(io::format_matrix(m), "1,0,1,1;0,1,1,2");
    EXPECT_THROW((void)io::parse_matrix(f3, "1,0;1"), Error);
    EXPECT_THROW((void)io::parse_matrix(f3, ""), Error);
    EXPECT_THROW((void)io::parse_matrix(f3, "1,3"), Error);
    EXPECT_THROW((void)io::parse_matrix(f3, "1,x"), Error);

    const auto f4 = FieldCtx::make(4);
    EXPECT_EQ(io::parse_element(f4, "0:1"), 2);
    EXPECT_EQ(io::parse_element(f4, "3"), 3);
    EXPECT_EQ(io::format_element(f4, 3), "1:1");
    const Matrix g = io::parse_matrix(f4, "1,0,1:1;0,1,0:1");
    EXPECT_EQ(io::parse_matrix(f4, io::format_matrix(g)), g);
}

TEST(Json, CodeAndSpecialSetRoundTrip) {
    const auto f4 = FieldCtx::make(4);
    const auto c = LinearCode::from_generator(io::parse_matrix(f4, "1,0,1,1,1;0,1,1,2,3"));
    const auto j = io::code_json(c);
    EXPECT_EQ(io::code_from_json(j), c);
    EXPECT_EQ(io::code_from_json(nlohmann::ordered_json::parse(j.dump())), c);

    const auto s = SpecialSet::of_tuple(FunctionalTuple::of_code(c));
    EXPECT_EQ(io::special_set_from_json(io::special_set_json(s), f4), s);

    auto bad = j;
    bad["k"] = 3;
    EXPECT_THROW((void)io::code_from_json(bad), Error);
    EXPECT_THROW((void)io::code_from_json(nlohmann::ordered_json::parse(R"({"q":4})")), Error);
}

TEST(Json, CertificateRoundTripReverifies) {
    const auto f2 = FieldCtx::make(2);
    const auto codes = enumerate_codes({f2, 7, 3}, CodePredicate::Projective);
    const auto cert = connect(codes.front(), codes.back());
    const auto j = io::certificate_json(cert);
    const auto back = io::certificate_from_json(nlohmann::ordered_json::parse(j.dump(2)));
    EXPECT_EQ(back.vertices, cert.vertices);
    ASSERT_EQ(back.steps.size(), cert.steps.size());
    for (std::size_t s = 0; s < cert.steps.size(); ++s) {
        EXPECT_EQ(back.steps[s].kind, cert.steps[s].kind);
        EXPECT_EQ(back.steps[s].witness, cert.steps[s].witness);
        EXPECT_EQ(back.steps[s].image, cert.steps[s].image);
        EXPECT_EQ(back.steps[s].old_functional, cert.steps[s].old_functional);
    }
    EXPECT_TRUE(verify_certificate(back, PathPredicate::Projective, &codes.front(), &codes.back()).ok);
    EXPECT_EQ(io::certificate_json(back).dump(), j.dump());

    auto tampered = j;
    tampered["steps"][0]["kind"] = "rotate";
    EXPECT_THROW((void)io::certificate_from_json(tampered), Error);
}

TEST(Golden, PairwiseCertificates423) {
    const auto codes = enumerate_codes({FieldCtx::make(3), 4, 2}, CodePredicate::Projective);
    nlohmann::ordered_json all = nlohmann::ordered_json::array();
    for (const auto& a : codes)
        for (const auto& b : codes) all.push_back(io::certificate_json(connect(a, b)));
    check_golden("certificates_4_2_3.json", all.dump(1) + "\n");
}

TEST(Golden, SubgraphReports) {
    const auto f2 = FieldCtx::make(2);
    nlohmann::ordered_json all = nlohmann::ordered_json::array();
    for (const auto& params : {GrassmannParams{FieldCtx::make(3), 4, 2}, GrassmannParams{f2, 5, 3},
                               GrassmannParams{f2, 6, 3}, GrassmannParams{f2, 7, 3}})
        all.push_back(io::report_json(report(params, CodePredicate::Projective)));
    all.push_back(io::report_json(report({f2, 5, 3}, CodePredicate::NonDegenerate)));
    check_golden("reports.json", all.dump(2) + "\n");
}
