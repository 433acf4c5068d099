#include <gtest/gtest.h>

#include <string>

#include "scl/scl.h"

namespace {

std::string take(char* s) {
    std::string out = s ? s : "";
    scl_string_free(s);
    return out;
}

scl_term* parsed(const char* text) {
    scl_term* t = nullptr;
    EXPECT_EQ(scl_parse(text, &t), SCL_OK) << scl_last_error();
    return t;
}

TEST(CApi, ParseAndPrint) {
    scl_term* t = parsed("T <| a |> F");
    char* out = nullptr;
    ASSERT_EQ(scl_term_print(t, SCL_STYLE_UNICODE, 0, &out), SCL_OK);
    EXPECT_EQ(take(out), "T ◁ a ▷ F");
    ASSERT_EQ(scl_term_print(t, SCL_STYLE_DOT, 0, &out), SCL_ERR_USAGE);
    scl_term_free(t);
}

TEST(CApi, ParseErrorsReportPosition) {
    scl_term* t = nullptr;
    EXPECT_EQ(scl_parse("a && (b", &t), SCL_ERR_PARSE);
    EXPECT_EQ(t, nullptr);
    std::size_t line = 0, col = 0;
    scl_last_error_position(&line, &col);
    EXPECT_EQ(line, 1u);
    EXPECT_EQ(col, 8u);
    EXPECT_NE(std::string(scl_last_error()).find("expected"), std::string::npos);
    EXPECT_EQ(scl_parse("aB", &t), SCL_ERR_ATOM_CASE);
    EXPECT_EQ(scl_parse(nullptr, &t), SCL_ERR_USAGE);
}

TEST(CApi, NormalizeAndCompare) {
    scl_term* p = parsed("a && F");
    scl_term* q = parsed("F && a");
    scl_form* pf = nullptr;
    scl_form* qf = nullptr;
    ASSERT_EQ(scl_normalize(p, scl_mode{SCL_MEM, 0}, &pf), SCL_OK);
    ASSERT_EQ(scl_normalize(q, scl_mode{SCL_MEM, 0}, &qf), SCL_OK);
    EXPECT_FALSE(scl_form_equal(pf, qf));
    char* out = nullptr;
    ASSERT_EQ(scl_form_print(pf, SCL_STYLE_UNICODE, 0, &out), SCL_OK);
    EXPECT_EQ(take(out), "F ◁ a ▷ F");
    ASSERT_EQ(scl_form_print(pf, SCL_STYLE_JSON, 0, &out), SCL_OK);
    EXPECT_EQ(take(out), R"({"atom":"a","t":{"leaf":"F"},"f":{"leaf":"F"}})");
    int eq = -1;
    ASSERT_EQ(scl_equiv(p, q, scl_mode{SCL_MEM, 0}, &eq), SCL_OK);
    EXPECT_EQ(eq, 0);
    scl_form_free(pf);
    scl_form_free(qf);
    scl_term_free(p);
    scl_term_free(q);
}

TEST(CApi, OpenTerm) {
    scl_term* t = parsed("X && a");
    EXPECT_FALSE(scl_term_is_closed(t));
    scl_form* f = nullptr;
    EXPECT_EQ(scl_normalize(t, scl_mode{SCL_FREE, 0}, &f), SCL_ERR_OPEN_TERM);
    scl_term_free(t);
}

TEST(CApi, Translations) {
    scl_term* t = parsed("a || b");
    scl_term* n = nullptr;
    ASSERT_EQ(scl_encode_nand(t, &n), SCL_OK);
    char* out = nullptr;
    ASSERT_EQ(scl_term_print(n, SCL_STYLE_ASCII, 1, &out), SCL_OK);
    EXPECT_EQ(take(out), "a' ~& b'");
    scl_term* back = nullptr;
    ASSERT_EQ(scl_decode_nand(n, &back), SCL_OK);
    int eq = 0;
    ASSERT_EQ(scl_equiv(back, t, scl_mode{SCL_MEM, 0}, &eq), SCL_OK);
    EXPECT_EQ(eq, 1);
    scl_term* iff = parsed("a <-> b");
    scl_term* bad = nullptr;
    EXPECT_EQ(scl_encode_nand(iff, &bad), SCL_ERR_UNSUPPORTED);
    scl_term* dual = nullptr;
    ASSERT_EQ(scl_dual(t, &dual), SCL_OK);
    ASSERT_EQ(scl_term_print(dual, SCL_STYLE_ASCII, 0, &out), SCL_OK);
    EXPECT_EQ(take(out), "a && b");
    for (scl_term* x : {t, n, back, iff, dual}) scl_term_free(x);
}

TEST(CApi, Munbf) {
    scl_term* t = parsed("a ~& T");
    scl_form* f = nullptr;
    ASSERT_EQ(scl_munbf(t, &f), SCL_OK);
    char* out = nullptr;
    ASSERT_EQ(scl_form_print(f, SCL_STYLE_JSON, 0, &out), SCL_OK);
    EXPECT_EQ(take(out), R"({"nnode":"a","t":{"leaf":"F"},"f":{"leaf":"T"}})");
    scl_form_free(f);
    scl_term_free(t);
}

TEST(CApi, Eval) {
    scl_term* t = parsed("U || a");
    scl_truth v = SCL_TRUE;
    ASSERT_EQ(scl_eval(t, "a=1", &v), SCL_OK);
    EXPECT_EQ(v, SCL_UNDEF);
    scl_term_free(t);
    t = parsed("a && b");
    EXPECT_EQ(scl_eval(t, "a=1", &v), SCL_ERR_UNBOUND_ATOM);
    EXPECT_EQ(scl_eval(t, "a=7", &v), SCL_ERR_PARSE);
    scl_term_free(t);
}

TEST(CApi, Tables) {
    ASSERT_EQ(scl_table_count(), 12u);
    EXPECT_STREQ(scl_table_name(0), "CP");
    EXPECT_EQ(scl_table_name(99), nullptr);
    std::size_t n = 0;
    scl_mode mode{};
    int negative = -1;
    ASSERT_EQ(scl_table_info("EqMSCL", nullptr, &n, &mode, &negative), SCL_OK);
    EXPECT_EQ(n, 5u);
    EXPECT_EQ(mode.congruence, SCL_MEM);
    EXPECT_EQ(negative, 0);
    EXPECT_EQ(scl_table_info("missing", nullptr, nullptr, nullptr, nullptr), SCL_ERR_NOT_FOUND);
}

TEST(CApi, CheckTable) {
    scl_check_options o = scl_check_defaults();
    o.exhaustive = 1;
    scl_report* r = nullptr;
    ASSERT_EQ(scl_check_table("EqMSCL", &o, &r), SCL_OK);
    ASSERT_EQ(scl_report_size(r), 5u);
    for (std::size_t i = 0; i < 5; ++i) {
        scl_report_entry e{};
        ASSERT_EQ(scl_report_entry_at(r, i, &e), SCL_OK);
        EXPECT_EQ(e.verdict, SCL_PASSED_EXHAUSTIVE) << e.name;
        EXPECT_EQ(e.witness, nullptr);
    }
    scl_report_entry e{};
    EXPECT_EQ(scl_report_entry_at(r, 5, &e), SCL_ERR_USAGE);
    scl_report_free(r);

    ASSERT_EQ(scl_check_table("negative", nullptr, &r), SCL_OK);
    EXPECT_TRUE(scl_report_expect_refuted(r));
    ASSERT_EQ(scl_report_entry_at(r, 0, &e), SCL_OK);
    EXPECT_EQ(e.verdict, SCL_REFUTED_FRESH_ATOMS);
    EXPECT_STREQ(e.witness, "X = v1, Y = v2");
    scl_report_free(r);

    o.k = 5;
    EXPECT_EQ(scl_check_table("EqMSCL", &o, &r), SCL_ERR_USAGE);
}

TEST(CApi, ThreeValuedTableUnderOverride) {
    scl_check_options o = scl_check_defaults();
    o.override_mode = 1;
    o.mode = scl_mode{SCL_MEM, 0};
    scl_report* r = nullptr;
    // The U table keeps three values even when the override says two.
    ASSERT_EQ(scl_check_table("U", &o, &r), SCL_OK);
    scl_report_free(r);
    // Without three values a U schema is a signature error.
    ASSERT_EQ(scl_check_table("EqMSCL", &o, &r), SCL_OK);
    scl_report_free(r);
}

}  // namespace
