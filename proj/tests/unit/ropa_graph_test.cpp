#include <gtest/gtest.h>

#include "ropa/core/error.hpp"
#include "ropa/core/text.hpp"
#include "ropa/ingest/ingest.hpp"
#include "ropa/rdf/ropa_graph.hpp"
#include "ropa/rdf/serialize.hpp"
#include "support/shipped.hpp"

namespace ropa::rdf {
namespace {

using testing::shipped;

const std::string kDpv(kDpvNamespace);
const std::string kExt(kDefaultExtensionNamespace);

Graph emit(const std::vector<RopaRecord>& records) {
    return to_graph(records, shipped().registry, shipped().table);
}

std::vector<RopaRecord> read_back(const Graph& g) { return from_graph(g, shipped().registry, shipped().table); }

RopaRecord payroll() {
    RopaRecord r;
    r.record_id = "UK-0001";
    r.add_value("purposes_of_processing", "Payroll");
    return r;
}

std::vector<RopaRecord> uk_fixture() {
    return parse_ropa_csv(text::read_file(testing::fixtures_dir() / "uk_sample.csv"), shipped().profile(Jurisdiction::UK),
                          shipped().registry)
        .records;
}

template <typename F>
Error error_of(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e;
    }
    ADD_FAILURE() << "no error raised";
    return Error(Errc::io_error, "", "");
}

TEST(RopaGraph, EmptyRecordSet) {
    const auto g = emit({});
    EXPECT_EQ(g.size(), 0u);
    EXPECT_EQ(g.bindings().size(), 3u);
    EXPECT_EQ(g.bindings().at("dpv"), kDpv);
    EXPECT_EQ(g.bindings().at("ext"), kExt);
    EXPECT_EQ(g.bindings().at("vcard"), std::string(kVcardNamespace));
    EXPECT_TRUE(read_back(Graph{}).empty());
}

TEST(RopaGraph, PayrollUsesDpvPurpose) {
    const auto g = emit({payroll()});
    const Term act = Term::iri(std::string(kDefaultBaseIri) + "UK-0001");
    EXPECT_TRUE(g.contains({act, Term::iri(std::string(kRdfType)), Term::iri(kDpv + "PersonalDataHandling")}));
    EXPECT_TRUE(g.contains({act, Term::iri(kExt + "hasJurisdiction"), Term::literal("UK")}));
    EXPECT_TRUE(g.contains({act, Term::iri(kDpv + "Purpose"), Term::literal("Payroll")}));
    EXPECT_EQ(g.size(), 3u);
}

TEST(RopaGraph, DataSubjectRightsInExtensionNamespace) {
    RopaRecord r;
    r.record_id = "x";
    r.add_value("data_subject_rights", "Right of access");
    bool found = false;
    for (const auto& t : emit({r})) {
        if (t.object == Term::literal("Right of access")) {
            found = true;
            EXPECT_TRUE(t.predicate.value.starts_with(kExt)) << t.predicate.value;
            EXPECT_FALSE(t.predicate.value.starts_with(kDpv));
        }
    }
    EXPECT_TRUE(found);
}

TEST(RopaGraph, ComplexEntryBecomesChain) {
    RopaRecord r;
    r.record_id = "x";
    r.add_value("transfer_safeguards", "Standard contractual clauses");
    const auto g = emit({r});
    const Term act = Term::iri(std::string(kDefaultBaseIri) + "x");
    const Triple* head = nullptr;
    for (const auto& t : g)
        if (t.subject == act && t.predicate.value == kDpv + "hasTechnicalOrganisationalMeasure") head = &t;
    ASSERT_NE(head, nullptr);
    ASSERT_TRUE(head->object.is_blank());
    EXPECT_TRUE(g.contains({head->object, Term::iri(kDpv + "hasLegalBasis"), Term::literal("Standard contractual clauses")}));
}

TEST(RopaGraph, PartiesAreContactNodes) {
    RopaRecord r;
    r.record_id = "x";
    r.parties.push_back({PartyRole::dpo, "Jo Bloggs", {std::nullopt, "jo@example.org", "+44 1"}});
    const auto g = emit({r});
    const Triple* link = nullptr;
    for (const auto& t : g)
        if (t.predicate.value == kExt + "hasDataProtectionOfficer") link = &t;
    ASSERT_NE(link, nullptr);
    const std::string vc(kVcardNamespace);
    EXPECT_TRUE(g.contains({link->object, Term::iri(vc + "fn"), Term::literal("Jo Bloggs")}));
    EXPECT_TRUE(g.contains({link->object, Term::iri(vc + "hasEmail"), Term::literal("jo@example.org")}));
    EXPECT_TRUE(g.contains({link->object, Term::iri(vc + "hasTelephone"), Term::literal("+44 1")}));
    EXPECT_EQ(g.size(), 6u);
    EXPECT_EQ(party_predicate(PartyRole::controller, shipped().table), kDpv + "hasDataController");
    EXPECT_EQ(party_predicate(PartyRole::representative, shipped().table), kExt + "hasRepresentative");
}

TEST(RopaGraph, DatatypesOnlyWhenLexicalFormFits) {
    RopaRecord r;
    r.record_id = "x";
    r.add_value("erasure_time_limits", "P6Y");
    r.add_value("profiling", "true");
    r.add_value("children_data", "not sure");
    r.add_value("automated_decision_making", "0");
    RopaRecord s;
    s.record_id = "y";
    s.add_value("erasure_time_limits", "2030-12-31");
    s.add_value("profiling", "Yes");
    RopaRecord u;
    u.record_id = "z";
    u.add_value("erasure_time_limits", "six years after leaving");
    const auto g = emit({r, s, u});
    auto object_of = [&](const std::string& id, const std::string& pred) {
        for (const auto& t : g)
            if (t.subject.value == std::string(kDefaultBaseIri) + id && t.predicate.value == kDpv + pred) return t.object;
        ADD_FAILURE() << id << " " << pred;
        return Term{};
    };
    EXPECT_EQ(object_of("x", "StorageDuration").datatype, std::string(kXsdDuration));
    EXPECT_EQ(object_of("x", "Profiling").datatype, std::string(kXsdBoolean));
    EXPECT_EQ(object_of("x", "Child").datatype, "");
    EXPECT_EQ(object_of("x", "AutomatedDecisionMaking").datatype, std::string(kXsdBoolean));
    EXPECT_EQ(object_of("y", "StorageDuration").datatype, std::string(kXsdDate));
    EXPECT_EQ(object_of("y", "Profiling").datatype, "");
    EXPECT_EQ(object_of("z", "StorageDuration").datatype, "");
    EXPECT_EQ(read_back(g), (std::vector<RopaRecord>{normalized(r), normalized(s), normalized(u)}));
}

TEST(RopaGraph, PercentEncodedIds) {
    EXPECT_EQ(percent_encode("UK-0001"), "UK-0001");
    EXPECT_EQ(percent_encode("a b/c"), "a%20b%2Fc");
    EXPECT_EQ(percent_encode("é"), "%C3%A9");
    EXPECT_EQ(percent_decode("a%20b%2fc"), "a b/c");
    EXPECT_EQ(error_of([] { percent_decode("50%"); }).code(), Errc::constraint_violation);
    EXPECT_EQ(error_of([] { percent_decode("%zz"); }).code(), Errc::constraint_violation);

    RopaRecord r = payroll();
    r.record_id = "Pay roll/2024 #1";
    const auto g = emit({r});
    EXPECT_EQ(g.begin()->subject.value, std::string(kDefaultBaseIri) + "Pay%20roll%2F2024%20%231");
    EXPECT_EQ(read_back(g).front().record_id, r.record_id);
}

TEST(RopaGraph, NamespaceDiscipline) {
    const auto g = emit(uk_fixture());
    ASSERT_FALSE(g.empty());
    std::set<std::string> allowed = {kDpv, kExt, std::string(kVcardNamespace)};
    for (const auto& t : g) {
        if (t.predicate.value == kRdfType) continue;
        bool ok = false;
        for (const auto& ns : allowed) ok = ok || t.predicate.value.starts_with(ns);
        EXPECT_TRUE(ok) << t.predicate.value;
    }
    // Every none-category concept goes to the extension namespace.
    for (const auto& e : shipped().table.entries()) {
        const bool none = e.category == MatchCategory::none;
        for (const auto& iri : e.target_iris) EXPECT_EQ(iri.starts_with(kExt), none) << iri;
    }
}

TEST(RopaGraph, FixtureRoundTrip) {
    const auto records = uk_fixture();
    std::vector<RopaRecord> expected;
    for (const auto& r : records) expected.push_back(normalized(r));
    for (auto f : {Format::turtle, Format::ntriples}) {
        const auto text = serialize(emit(records), f);
        EXPECT_EQ(read_back(parse(text, f)), expected) << to_string(f);
    }
}

TEST(RopaGraph, UnknownPredicateNamed) {
    auto g = emit({payroll()});
    g.add(Term::iri(std::string(kDefaultBaseIri) + "UK-0001"), Term::iri("urn:unknown#prop"), Term::literal("v"));
    const auto e = error_of([&] { read_back(g); });
    EXPECT_EQ(e.code(), Errc::unrecognized_predicate);
    EXPECT_EQ(e.subject(), "urn:unknown#prop");
    EXPECT_NE(std::string(e.what()).find("urn:unknown#prop"), std::string::npos);
}

TEST(RopaGraph, ShapeErrors) {
    const Term act = Term::iri(std::string(kDefaultBaseIri) + "UK-0001");
    {
        auto g = emit({payroll()});
        g.add(act, Term::iri(kExt + "hasJurisdiction"), Term::literal("FI"));
        EXPECT_EQ(error_of([&] { read_back(g); }).code(), Errc::constraint_violation);
    }
    {
        Graph g;
        g.add(Term::iri("urn:elsewhere:1"), Term::iri(kDpv + "Purpose"), Term::literal("x"));
        EXPECT_EQ(error_of([&] { read_back(g); }).code(), Errc::constraint_violation);
    }
    {
        Graph g;
        g.add(act, Term::iri(kDpv + "Purpose"), Term::literal("x"));
        EXPECT_EQ(error_of([&] { read_back(g); }).code(), Errc::constraint_violation);
    }
}

TEST(RopaGraph, EmissionErrors) {
    RopaRecord stale = payroll();
    stale.values["no_such_concept"] = {"v"};
    EXPECT_EQ(error_of([&] { emit({stale}); }).code(), Errc::unresolved_value);

    RopaRecord unnamed;
    unnamed.record_id = "";
    EXPECT_EQ(error_of([&] { emit({unnamed}); }).code(), Errc::constraint_violation);
    EXPECT_EQ(error_of([&] { emit({payroll(), payroll()}); }).code(), Errc::constraint_violation);

    std::vector<MappingEntry> entries(shipped().table.entries().begin(), shipped().table.entries().end());
    auto missing = entries;
    missing.erase(missing.begin());
    const MappingTable gap(missing, kExt);
    EXPECT_EQ(error_of([&] { to_graph({}, shipped().registry, gap); }).code(), Errc::coverage_gap);

    auto clash = entries;
    for (auto& e : clash)
        if (e.concept_name == "consent") e.target_iris = {kDpv + "Purpose"};
    const MappingTable twice(clash, kExt);
    const auto e = error_of([&] { to_graph({}, shipped().registry, twice); });
    EXPECT_EQ(e.code(), Errc::ambiguous_mapping);
    EXPECT_EQ(e.subject(), kDpv + "Purpose");
}

TEST(RopaGraph, CustomBaseIri) {
    EmissionOptions opts;
    opts.base_iri = "urn:acts:";
    const auto g = to_graph(std::vector{payroll()}, shipped().registry, shipped().table, opts);
    EXPECT_EQ(g.begin()->subject.value, "urn:acts:UK-0001");
    EXPECT_EQ(from_graph(g, shipped().registry, shipped().table, opts).front().record_id, "UK-0001");
    EXPECT_THROW(read_back(g), Error);
}

} // namespace
} // namespace ropa::rdf
