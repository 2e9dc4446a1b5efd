#include <gtest/gtest.h>

#include <fstream>
#include <map>
#include <random>
#include <sstream>

#include <json.hpp>

#include "ropa/cli/app.hpp"
#include "ropa/core/text.hpp"
#include "support/shipped.hpp"

namespace ropa::cli {
namespace {

namespace fs = std::filesystem;

struct Outcome {
    int code = -1;
    std::string out;
    std::string err;
};

class CliTest : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() / ("ropa-cli-" + std::to_string(std::random_device{}()));
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string file(const std::string& name, const std::string& content) {
        const auto p = dir_ / name;
        std::ofstream(p, std::ios::binary) << content;
        return p.string();
    }
    std::string path(const std::string& name) const { return (dir_ / name).string(); }

    Outcome run_cli(std::vector<std::string> args) {
        std::ostringstream out, err;
        const int code = run(args, out, err, [this](std::string_view k) -> std::optional<std::string> {
            auto it = env_.find(std::string(k));
            if (it == env_.end()) return std::nullopt;
            return it->second;
        });
        return {code, out.str(), err.str()};
    }

    std::string fixture() const { return (testing::fixtures_dir() / "uk_sample.csv").string(); }

    std::string ingest_fixture() {
        const auto dataset = path("uk.json");
        const auto r = run_cli({"ingest", fixture(), "-j", "UK", "-o", dataset});
        EXPECT_EQ(r.code, exit_ok) << r.err;
        return dataset;
    }

    fs::path dir_;
    std::map<std::string, std::string> env_;
};

TEST_F(CliTest, ConfigPrecedence) {
    ConfigOverrides flags;
    auto env = [](std::string_view k) -> std::optional<std::string> {
        if (k == "ROPA_REGISTRY") return "/env/registry.json";
        if (k == "ROPA_BASE_IRI") return "urn:env:";
        if (k == "ROPA_CATALOG") return "";
        return std::nullopt;
    };
    auto c = resolve_config(flags, env);
    EXPECT_EQ(c.registry_path, "/env/registry.json");
    EXPECT_EQ(c.base_iri, "urn:env:");
    EXPECT_EQ(c.catalog_path, default_config().catalog_path);
    EXPECT_EQ(c.extension_namespace, std::string(kDefaultExtensionNamespace));

    flags.registry_path = "/flag/registry.json";
    c = resolve_config(flags, env);
    EXPECT_EQ(c.registry_path, "/flag/registry.json");
    EXPECT_EQ(resolve_config({}, [](std::string_view) { return std::nullopt; }), default_config());
}

TEST_F(CliTest, EnvironmentRegistryUsedAndFlagWins) {
    env_["ROPA_REGISTRY"] = path("missing.json");
    EXPECT_EQ(run_cli({"registry", "--census"}).code, exit_bad_input);
    const auto ok = run_cli({"--registry", (testing::data_dir() / "registry.json").string(), "registry", "--census"});
    EXPECT_EQ(ok.code, exit_ok) << ok.err;
}

TEST_F(CliTest, Census) {
    const auto r = run_cli({"registry", "--census"});
    EXPECT_EQ(r.code, exit_ok);
    EXPECT_EQ(r.out, "total=43\nmandatory=12\nwith_specified_values=7\nexact=14\npartial=15\ncomplex=3\nnone=11\n");
    const auto j = nlohmann::json::parse(run_cli({"registry", "--census", "--json"}).out);
    EXPECT_EQ(j["none"], 11);
}

TEST_F(CliTest, Extensions) {
    const auto r = run_cli({"registry", "--extensions"});
    EXPECT_EQ(r.code, exit_ok);
    EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 11);
    EXPECT_NE(r.out.find(std::string(kDefaultExtensionNamespace) + "DataSubjectRights\tData Subject Rights"),
              std::string::npos);
}

TEST_F(CliTest, CustomOneConceptRegistry) {
    const auto registry = file("one.json", R"json({"version": "t", "concepts": [
        {"name": "purposes_of_processing", "display_name": "Purposes", "synonyms": [], "article30_refs": ["30(1)(b)"],
         "mandatory_art30": true, "cardinality": "multi", "value_kind": "free_text", "specified_values": []}]})json");
    const auto profiles = path("profiles");
    fs::create_directories(profiles);
    file("profiles/FI.json", R"({"code": "FI", "display_name": "Finland",
        "column_map": [{"column_header": "Purpose", "concept_name": "purposes_of_processing"}],
        "required_concepts": ["purposes_of_processing"], "controlled_vocabularies": {},
        "art30_transcription_only": true})");
    const auto r = run_cli({"--registry", registry, "--profiles-dir", profiles, "registry", "--census"});
    ASSERT_EQ(r.code, exit_ok) << r.err;
    EXPECT_EQ(r.out, "total=1\nmandatory=1\nwith_specified_values=0\nexact=1\npartial=0\ncomplex=0\nnone=0\n");
}

TEST_F(CliTest, UnknownJurisdiction) {
    const auto csv = file("t.csv", "Purposes\nPayroll\n");
    const auto r = run_cli({"ingest", csv, "-j", "XX"});
    EXPECT_EQ(r.code, exit_unknown_jurisdiction);
    EXPECT_NE(r.err.find("XX"), std::string::npos);
    const auto dataset = ingest_fixture();
    EXPECT_EQ(run_cli({"validate", dataset, "-j", "XX"}).code, exit_unknown_jurisdiction);
    EXPECT_EQ(run_cli({"report", dataset, "-j", "ZZ"}).code, exit_unknown_jurisdiction);
}

TEST_F(CliTest, HeaderOnlyCsv) {
    const auto csv = file("h.csv", text::read_file(fixture()).substr(0, text::read_file(fixture()).find('\n') + 1));
    const auto r = run_cli({"ingest", csv, "-j", "UK"});
    EXPECT_EQ(r.code, exit_ok) << r.err;
    EXPECT_EQ(nlohmann::json::parse(r.out), nlohmann::json::array());
    EXPECT_NE(r.err.find("ingested 0 records"), std::string::npos);
}

TEST_F(CliTest, BadInput) {
    EXPECT_EQ(run_cli({}).code, exit_bad_input);
    EXPECT_EQ(run_cli({"frobnicate"}).code, exit_bad_input);
    EXPECT_EQ(run_cli({"ingest", path("absent.csv"), "-j", "UK"}).code, exit_bad_input);
    EXPECT_EQ(run_cli({"ingest", file("bad.csv", "a,\"b\n"), "-j", "UK"}).code, exit_bad_input);
    EXPECT_EQ(run_cli({"validate", file("bad.json", "{"), "-j", "FI"}).code, exit_bad_input);
    EXPECT_EQ(run_cli({"validate", file("e.json", "[]")}).code, exit_bad_input);
    EXPECT_EQ(run_cli({"convert", file("e2.json", "[]"), "-f", "rdfxml"}).code, exit_bad_input);
}

TEST_F(CliTest, EndToEnd) {
    const auto dataset = ingest_fixture();
    for (const char* j : {"UK", "FI", "DK", "LU"}) EXPECT_EQ(run_cli({"validate", dataset, "-j", j}).code, exit_ok) << j;
    for (const char* j : {"BE", "CY"}) EXPECT_EQ(run_cli({"validate", dataset, "-j", j}).code, exit_non_compliant) << j;
    const auto all = run_cli({"validate", dataset, "--all", "--json", path("all.json")});
    EXPECT_EQ(all.code, exit_non_compliant);
    EXPECT_EQ(nlohmann::json::parse(text::read_file(path("all.json"))).size(), 6u);

    const auto ttl = run_cli({"convert", dataset});
    EXPECT_EQ(ttl.code, exit_ok) << ttl.err;
    EXPECT_NE(ttl.out.find("dpv:Purpose"), std::string::npos);
    const auto nt = run_cli({"convert", dataset, "-f", "nt"});
    EXPECT_NE(nt.out.find("<http://www.w3.org/ns/dpv#Purpose>"), std::string::npos);

    const auto report = run_cli({"report", dataset, "-j", "BE", "-j", "FI"});
    EXPECT_EQ(report.code, exit_ok) << report.err;
    EXPECT_NE(report.out.find("MISSING"), std::string::npos);
}

TEST_F(CliTest, OutputIsIdempotent) {
    const auto dataset = ingest_fixture();
    EXPECT_EQ(run_cli({"ingest", fixture(), "-j", "UK"}).out, text::read_file(dataset));
    for (std::vector<std::string> args : {std::vector<std::string>{"convert", dataset},
                                          {"convert", dataset, "-f", "ntriples"},
                                          {"validate", dataset, "--all"},
                                          {"report", dataset}}) {
        const auto a = run_cli(args);
        const auto b = run_cli(args);
        EXPECT_EQ(a.out, b.out);
        EXPECT_EQ(a.code, b.code);
    }
}

TEST_F(CliTest, MappingGapExitCode) {
    auto table = nlohmann::json::parse(text::read_file(testing::data_dir() / "mapping_table.json"));
    table.erase(table.begin());
    const auto mapping = file("table.json", table.dump());
    const auto dataset = ingest_fixture();
    const auto r = run_cli({"--mapping", mapping, "convert", dataset});
    EXPECT_EQ(r.code, exit_mapping_gap);
    EXPECT_NE(r.err.find("coverage-gap"), std::string::npos);
    EXPECT_EQ(run_cli({"--mapping", mapping, "registry", "--census"}).code, exit_mapping_gap);
}

TEST_F(CliTest, EmptyDataset) {
    const auto empty = file("empty.json", "[]");
    const auto r = run_cli({"validate", empty, "-j", "FI"});
    EXPECT_EQ(r.code, exit_ok);
    EXPECT_NE(r.err.find("warning"), std::string::npos);
    EXPECT_EQ(run_cli({"validate", empty, "-j", "FI", "--require-nonempty"}).code, exit_non_compliant);
}

TEST_F(CliTest, BaseIriFromEnvironment) {
    const auto dataset = ingest_fixture();
    env_["ROPA_BASE_IRI"] = "urn:acts:";
    const auto r = run_cli({"convert", dataset, "-f", "nt"});
    EXPECT_NE(r.out.find("<urn:acts:UK-0001>"), std::string::npos);
    env_["ROPA_BASE_IRI"] = "";
    EXPECT_NE(run_cli({"convert", dataset, "-f", "nt"}).out.find("<https://ropa.example.org/activity/UK-0001>"),
              std::string::npos);
}

} // namespace
} // namespace ropa::cli
