#include <gtest/gtest.h>

#include "ropa/core/error.hpp"
#include "ropa/ingest/csv.hpp"
#include "support/generators.hpp"

namespace ropa::csv {
namespace {

using Rows = std::vector<Row>;

TEST(Csv, PlainAndQuotedFields) {
    EXPECT_EQ(read("a,b\n1,2\n"), (Rows{{"a", "b"}, {"1", "2"}}));
    EXPECT_EQ(read("\"x, y\",\"say \"\"hi\"\"\"\r\nz,\"multi\nline\""),
              (Rows{{"x, y", "say \"hi\""}, {"z", "multi\nline"}}));
    EXPECT_EQ(read("a,,\n"), (Rows{{"a", "", ""}}));
    EXPECT_EQ(read("a,"), (Rows{{"a", ""}}));
    EXPECT_TRUE(read("").empty());
}

TEST(Csv, ByteOrderMarkSkipped) { EXPECT_EQ(read("\xEF\xBB\xBFh1,h2\n"), (Rows{{"h1", "h2"}})); }

TEST(Csv, BareCarriageReturnEndsRow) { EXPECT_EQ(read("a\rb\r\nc"), (Rows{{"a"}, {"b"}, {"c"}})); }

TEST(Csv, MalformedInputReportsPosition) {
    try {
        read("a,b\n\"open,c\n");
        FAIL();
    } catch (const SyntaxError& e) {
        EXPECT_EQ(e.code(), Errc::parse_error);
        EXPECT_EQ(e.line(), 2u);
        EXPECT_EQ(e.column(), 1u);
    }
    try {
        read("ab\"c\n");
        FAIL();
    } catch (const SyntaxError& e) {
        EXPECT_EQ(e.line(), 1u);
        EXPECT_EQ(e.column(), 3u);
    }
    EXPECT_THROW(read("\"closed\"x\n"), SyntaxError);
}

TEST(Csv, QuoteOnlyWhenNeeded) {
    EXPECT_EQ(quote("plain"), "plain");
    EXPECT_EQ(quote("a,b"), "\"a,b\"");
    EXPECT_EQ(quote("say \"x\""), "\"say \"\"x\"\"\"");
    EXPECT_EQ(quote(" padded"), "\" padded\"");
    EXPECT_EQ(quote(""), "");
    const std::vector<std::string> row{"a", "b,c"};
    EXPECT_EQ(write_row(row), "a,\"b,c\"\n");
}

TEST(CsvProperty, WriteThenReadIsIdentity) {
    testing::Rng rng(3);
    for (int round = 0; round < 500; ++round) {
        Rows rows(1 + testing::pick(rng, 4));
        const std::size_t width = 1 + testing::pick(rng, 5);
        std::string text;
        for (auto& row : rows) {
            for (std::size_t i = 0; i < width; ++i) row.push_back(testing::any_text(rng));
            text += write_row(row);
        }
        EXPECT_EQ(read(text), rows) << text;
    }
}

} // namespace
} // namespace ropa::csv
