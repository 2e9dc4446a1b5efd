#include <gtest/gtest.h>

#include <sstream>

#include "ropa/core/error.hpp"
#include "ropa/ingest/profile.hpp"
#include "support/shipped.hpp"

namespace ropa {
namespace {

using testing::shipped;

Errc load_error(const nlohmann::json& doc, std::string* subject = nullptr) {
    std::stringstream in(doc.dump());
    try {
        load_profile(in, shipped().registry);
    } catch (const Error& e) {
        if (subject) *subject = e.subject();
        return e.code();
    }
    ADD_FAILURE() << "profile accepted: " << doc.dump();
    return Errc::io_error;
}

TEST(Profile, AllSixShipped) {
    ASSERT_EQ(shipped().profiles.size(), 6u);
    std::vector<Jurisdiction> codes;
    for (const auto& p : shipped().profiles) codes.push_back(p.code);
    EXPECT_EQ(codes, std::vector<Jurisdiction>(std::begin(kAllJurisdictions), std::end(kAllJurisdictions)));
}

TEST(Profile, TranscriptionTemplatesMapTheTwelveMandatoryFields) {
    for (auto code : {Jurisdiction::FI, Jurisdiction::DK, Jurisdiction::LU}) {
        const auto& p = shipped().profile(code);
        EXPECT_TRUE(p.art30_transcription_only) << to_string(code);
        EXPECT_EQ(p.column_map.size(), 12u) << to_string(code);
        for (const auto& m : p.column_map) EXPECT_TRUE(shipped().registry.find(m.concept_name)->mandatory_art30);
        EXPECT_TRUE(p.controlled_vocabularies.empty());
    }
}

TEST(Profile, ExtendedTemplates) {
    for (auto code : {Jurisdiction::BE, Jurisdiction::UK, Jurisdiction::CY}) {
        const auto& p = shipped().profile(code);
        EXPECT_FALSE(p.art30_transcription_only);
        EXPECT_GT(p.column_map.size(), 12u);
        // The extras are flagged as reconstructed.
        for (const auto& name : p.required_concepts) {
            if (shipped().registry.find(name)->mandatory_art30) continue;
            EXPECT_TRUE(std::find(p.reconstructed_concepts.begin(), p.reconstructed_concepts.end(), name) !=
                        p.reconstructed_concepts.end())
                << to_string(code) << " " << name;
        }
    }
    const auto& be = shipped().profile(Jurisdiction::BE);
    ASSERT_FALSE(be.controlled_vocabularies.empty());
    for (const auto& [name, values] : be.controlled_vocabularies) EXPECT_FALSE(values.empty()) << name;
}

TEST(Profile, EveryTemplateRequiresTheMandatoryFields) {
    for (const auto& p : shipped().profiles) {
        for (const auto& def : shipped().registry.concepts()) {
            if (def.mandatory_art30) {
                EXPECT_TRUE(p.references(def.name)) << to_string(p.code) << " " << def.name;
            }
        }
    }
}

TEST(Profile, HeaderLookupIsNormalized) {
    const auto& uk = shipped().profile(Jurisdiction::UK);
    const auto* name = uk.concept_for_header("  business   FUNCTION ");
    ASSERT_NE(name, nullptr);
    EXPECT_EQ(*name, "business_function");
    EXPECT_EQ(uk.concept_for_header("Internal Ticket No"), nullptr);
}

TEST(Profile, UnknownConceptNamed) {
    auto doc = to_json(shipped().profile(Jurisdiction::FI));
    doc["column_map"].push_back({{"column_header", "Galactic ID"}, {"concept_name", "galactic_id"}});
    doc["art30_transcription_only"] = false;
    std::string subject;
    EXPECT_EQ(load_error(doc, &subject), Errc::unresolved_concept);
    EXPECT_EQ(subject, "galactic_id");
}

TEST(Profile, Inconsistencies) {
    const auto fi = to_json(shipped().profile(Jurisdiction::FI));

    auto extra = fi;
    extra["column_map"].push_back({{"column_header", "Risk"}, {"concept_name", "risk"}});
    EXPECT_EQ(load_error(extra), Errc::profile_inconsistency);

    auto required_without_column = fi;
    required_without_column["required_concepts"].push_back("risk");
    EXPECT_EQ(load_error(required_without_column), Errc::profile_inconsistency);

    auto duplicate_header = fi;
    duplicate_header["art30_transcription_only"] = false;
    duplicate_header["column_map"].push_back(
        {{"column_header", fi["column_map"][0]["column_header"]}, {"concept_name", "risk"}});
    EXPECT_EQ(load_error(duplicate_header), Errc::profile_inconsistency);

    auto vocabulary_unmapped = fi;
    vocabulary_unmapped["controlled_vocabularies"] = {{"risk", {"low"}}};
    EXPECT_EQ(load_error(vocabulary_unmapped), Errc::profile_inconsistency);
}

TEST(Profile, MalformedDocument) {
    EXPECT_EQ(load_error(nlohmann::json::array()), Errc::parse_error);
    auto doc = to_json(shipped().profile(Jurisdiction::FI));
    doc["code"] = "XX";
    EXPECT_EQ(load_error(doc), Errc::parse_error);
}

TEST(Profile, JsonRoundTrip) {
    for (const auto& p : shipped().profiles) {
        std::stringstream in(to_json(p).dump());
        EXPECT_EQ(load_profile(in, shipped().registry), p);
    }
}

} // namespace
} // namespace ropa
