#include <gtest/gtest.h>

#include <sstream>

#include "ropa/core/error.hpp"
#include "ropa/core/record.hpp"
#include "support/generators.hpp"
#include "support/shipped.hpp"

namespace ropa {
namespace {

Errc dataset_error(const std::string& text) {
    std::stringstream in(text);
    try {
        read_dataset(in);
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "accepted: " << text;
    return Errc::io_error;
}

TEST(Record, AddValueDeduplicatesAndKeepsOrder) {
    RopaRecord r;
    EXPECT_TRUE(r.add_value("purposes_of_processing", "Payroll"));
    EXPECT_TRUE(r.add_value("purposes_of_processing", "Marketing"));
    EXPECT_FALSE(r.add_value("purposes_of_processing", "Payroll"));
    const auto values = r.values_of("purposes_of_processing");
    ASSERT_EQ(values.size(), 2u);
    EXPECT_EQ(values[0], "Payroll");
    EXPECT_EQ(values[1], "Marketing");
    EXPECT_TRUE(r.values_of("risk").empty());
}

TEST(Record, WhitespaceOnlyValueIsNotPresent) {
    RopaRecord r;
    r.add_value("risk", "  \t");
    EXPECT_FALSE(r.has_value("risk"));
    r.add_value("risk", "low");
    EXPECT_TRUE(r.has_value("risk"));
    EXPECT_FALSE(r.has_value("consent"));
}

TEST(Record, JurisdictionCodes) {
    EXPECT_EQ(parse_jurisdiction("be"), Jurisdiction::BE);
    EXPECT_EQ(parse_jurisdiction("UK"), Jurisdiction::UK);
    EXPECT_FALSE(parse_jurisdiction("XX"));
    EXPECT_FALSE(parse_jurisdiction(""));
    for (auto j : kAllJurisdictions) EXPECT_EQ(parse_jurisdiction(to_string(j)), j);
}

TEST(Record, CheckRecordRejectsUnknownKeysAndUnnamedParties) {
    const auto& registry = testing::shipped().registry;
    RopaRecord r;
    r.record_id = "r1";
    r.add_value("purposes_of_processing", "Payroll");
    EXPECT_NO_THROW(check_record(r, registry));

    r.add_value("galactic_id", "7");
    try {
        check_record(r, registry);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::unresolved_value);
        EXPECT_EQ(e.subject(), "galactic_id");
    }

    RopaRecord p;
    p.parties.push_back({PartyRole::dpo, "", {}});
    try {
        check_record(p, registry);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::constraint_violation);
    }
}

TEST(Record, DatasetStructureChecks) {
    EXPECT_EQ(dataset_error("{}"), Errc::parse_error);
    EXPECT_EQ(dataset_error(R"([{"record_id": "a", "jurisdiction": "XX"}])"), Errc::parse_error);
    EXPECT_EQ(dataset_error(R"([{"record_id": "", "jurisdiction": "UK"}])"), Errc::parse_error);
    EXPECT_EQ(dataset_error(R"([{"record_id": "a", "jurisdiction": "UK"}, {"record_id": "a", "jurisdiction": "FI"}])"),
              Errc::parse_error);
    EXPECT_EQ(dataset_error(R"([{"record_id": "a", "jurisdiction": "UK", "parties": [{"role": "king", "name": "x"}]}])"),
              Errc::parse_error);
    EXPECT_EQ(dataset_error(R"([{"record_id": "a", "jurisdiction": "UK", "parties": [{"role": "dpo", "name": ""}]}])"),
              Errc::parse_error);
}

TEST(Record, EmptyDataset) {
    std::stringstream in("[]");
    EXPECT_TRUE(read_dataset(in).empty());
    EXPECT_EQ(write_dataset({}), "[]\n");
}

TEST(RecordProperty, DatasetJsonRoundTrip) {
    testing::Rng rng(11);
    for (int round = 0; round < 100; ++round) {
        const auto records = testing::arbitrary_records(rng, testing::shipped().registry, testing::pick(rng, 5));
        std::stringstream in(write_dataset(records));
        EXPECT_EQ(read_dataset(in), records);
    }
}

TEST(Record, NormalizedSortsValuesAndParties) {
    RopaRecord a;
    a.add_value("x", "b");
    a.add_value("x", "a");
    a.parties = {{PartyRole::processor, "Z", {}}, {PartyRole::controller, "A", {}}};
    RopaRecord b;
    b.add_value("x", "a");
    b.add_value("x", "b");
    b.parties = {{PartyRole::controller, "A", {}}, {PartyRole::processor, "Z", {}}};
    EXPECT_NE(a, b);
    EXPECT_EQ(normalized(a), normalized(b));
}

} // namespace
} // namespace ropa
