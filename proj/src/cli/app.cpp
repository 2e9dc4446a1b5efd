#include "ropa/cli/app.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "ropa/core/error.hpp"
#include "ropa/core/text.hpp"
#include "ropa/ingest/ingest.hpp"
#include "ropa/rdf/ropa_graph.hpp"
#include "ropa/rdf/serialize.hpp"
#include "ropa/validation/validation.hpp"

namespace ropa::cli {

namespace {

int exit_for(Errc code) {
    switch (code) {
    case Errc::coverage_gap:
    case Errc::dangling_iri:
    case Errc::unmapped_concept:
    case Errc::ambiguous_mapping:
    case Errc::extension_collision:
    case Errc::counts_unavailable: return exit_mapping_gap;
    default: return exit_bad_input;
    }
}

// Writes to `path`, or to `out` when the path is empty or "-".
void emit(const std::string& path, std::string_view content, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << content;
        return;
    }
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) throw Error(Errc::io_error, path, "cannot open '" + path + "' for writing");
    file << content;
    if (!file) throw Error(Errc::io_error, path, "failed writing '" + path + "'");
}

struct UnknownJurisdiction {
    std::string code;
};

const JurisdictionProfile& profile_for(const LoadedConfig& loaded, const std::string& code) {
    auto j = parse_jurisdiction(text::trim(code));
    const JurisdictionProfile* profile = j ? find_profile(loaded.profiles, *j) : nullptr;
    if (profile == nullptr) throw UnknownJurisdiction{code};
    return *profile;
}

struct Options {
    ConfigOverrides config;

    std::string ingest_csv;
    std::string ingest_jurisdiction;
    std::string ingest_output;

    std::string convert_dataset;
    std::string convert_format = "turtle";
    std::string convert_output;

    std::string validate_dataset;
    std::string validate_jurisdiction;
    bool validate_all = false;
    std::string validate_json;
    bool require_nonempty = false;

    std::string report_dataset;
    std::vector<std::string> report_jurisdictions;
    std::string report_json;

    bool census = false;
    bool extensions = false;
    bool registry_json = false;
};

int cmd_ingest(const Options& o, const LoadedConfig& loaded, std::ostream& out, std::ostream& err) {
    const auto& profile = profile_for(loaded, o.ingest_jurisdiction);
    const auto csv_text = text::read_file(o.ingest_csv);
    auto result = parse_ropa_csv(csv_text, profile, loaded.registry);

    const auto& d = result.diagnostics;
    for (const auto& h : d.unknown_headers)
        err << "warning: column " << h.column << " header '" << h.header << "' does not match any concept; dropped\n";
    if (d.empty_rows_skipped > 0) err << "note: skipped " << d.empty_rows_skipped << " empty rows\n";
    for (const auto& n : d.coercion_notes) err << "note: " << n.record_id << " " << n.concept_name << ": " << n.note << "\n";

    emit(o.ingest_output, write_dataset(result.records), out);
    err << "ingested " << result.records.size() << " records from " << o.ingest_csv << "\n";
    return exit_ok;
}

int cmd_convert(const Options& o, const LoadedConfig& loaded, std::ostream& out) {
    const auto format = rdf::parse_format(o.convert_format);
    if (!format) throw Error(Errc::parse_error, o.convert_format, "unknown format '" + o.convert_format + "'");
    const auto records = read_dataset_file(o.convert_dataset);
    verify_mapping(loaded.table, loaded.registry, loaded.catalog);

    rdf::EmissionOptions options;
    options.base_iri = loaded.config.base_iri;
    options.dpv_namespace = loaded.catalog.namespace_iri();
    const auto graph = rdf::to_graph(records, loaded.registry, loaded.table, options);
    emit(o.convert_output, rdf::serialize(graph, *format), out);
    return exit_ok;
}

int cmd_validate(const Options& o, const LoadedConfig& loaded, std::ostream& out, std::ostream& err) {
    std::vector<const JurisdictionProfile*> targets;
    if (o.validate_all) {
        for (const auto& p : loaded.profiles) targets.push_back(&p);
    } else {
        targets.push_back(&profile_for(loaded, o.validate_jurisdiction));
    }
    const auto records = read_dataset_file(o.validate_dataset);
    if (records.empty()) err << "warning: dataset " << o.validate_dataset << " holds no records\n";

    bool all_compliant = true;
    auto reports = nlohmann::json::array();
    std::string summary;
    for (const auto* profile : targets) {
        const auto report = validate(records, *profile, loaded.registry);
        all_compliant = all_compliant && report.compliant;
        reports.push_back(to_json(report));
        if (!summary.empty()) summary += "\n";
        summary += format_text(report);
    }
    out << summary;

    if (!o.validate_json.empty()) {
        const auto& doc = o.validate_all ? reports : reports.front();
        emit(o.validate_json, doc.dump(2) + "\n", out);
    }
    if (records.empty() && o.require_nonempty) return exit_non_compliant;
    return all_compliant ? exit_ok : exit_non_compliant;
}

int cmd_report(const Options& o, const LoadedConfig& loaded, std::ostream& out) {
    std::vector<JurisdictionProfile> selected;
    if (o.report_jurisdictions.empty()) {
        selected = loaded.profiles;
    } else {
        for (const auto& code : o.report_jurisdictions) selected.push_back(profile_for(loaded, code));
    }
    const auto records = read_dataset_file(o.report_dataset);
    const auto report = gap_analysis(records, selected, loaded.registry);
    out << format_text(report);
    if (!o.report_json.empty()) emit(o.report_json, to_json(report).dump(2) + "\n", out);
    return exit_ok;
}

int cmd_registry(const Options& o, const LoadedConfig& loaded, std::ostream& out) {
    if (o.extensions) {
        const auto terms = extension_terms(loaded.table);
        if (o.registry_json) {
            auto doc = nlohmann::json::array();
            for (const auto& t : terms) doc.push_back({{"iri", t.iri}, {"label", t.label}, {"definition", t.definition}});
            out << doc.dump(2) << "\n";
        } else {
            for (const auto& t : terms) out << t.iri << "\t" << t.label << "\n";
        }
        return exit_ok;
    }

    if (o.census) {
        const auto rc = registry_census(loaded.registry);
        const auto mc = mapping_census(loaded.table, loaded.registry);
        if (o.registry_json) {
            nlohmann::json doc = {{"total", rc.total},
                                  {"mandatory", rc.mandatory},
                                  {"with_specified_values", rc.with_specified_values},
                                  {"exact", mc.exact_count},
                                  {"partial", mc.partial_count},
                                  {"complex", mc.complex_count},
                                  {"none", mc.none_count}};
            out << doc.dump(2) << "\n";
        } else {
            out << "total=" << rc.total << "\n"
                << "mandatory=" << rc.mandatory << "\n"
                << "with_specified_values=" << rc.with_specified_values << "\n"
                << "exact=" << mc.exact_count << "\n"
                << "partial=" << mc.partial_count << "\n"
                << "complex=" << mc.complex_count << "\n"
                << "none=" << mc.none_count << "\n";
        }
        return exit_ok;
    }

    if (o.registry_json) {
        auto doc = nlohmann::json::array();
        for (const auto& def : loaded.registry.concepts()) doc.push_back(to_json(def));
        out << doc.dump(2) << "\n";
        return exit_ok;
    }
    for (const auto& def : loaded.registry.concepts()) {
        const auto* entry = loaded.table.find(def.name);
        out << def.name << "\t" << (def.mandatory_art30 ? "mandatory" : "optional") << "\t" << to_string(def.cardinality)
            << "\t" << to_string(def.value_kind) << "\t" << (entry ? to_string(entry->category) : "unmapped") << "\n";
    }
    return exit_ok;
}

} // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err, const EnvLookup& env) {
    Options o;
    CLI::App app{"Records of processing activities: ingest, convert, validate and report", "ropa"};
    app.require_subcommand(1);
    app.fallthrough();

    auto flag = [&](const char* name, std::optional<std::string>& field, const char* help) {
        app.add_option_function<std::string>(name, [&field](const std::string& v) { field = v; }, help);
    };
    flag("--registry", o.config.registry_path, "Concept registry JSON (env ROPA_REGISTRY)");
    flag("--catalog", o.config.catalog_path, "DPV catalog JSON (env ROPA_CATALOG)");
    flag("--mapping", o.config.mapping_table_path, "Mapping table JSON (env ROPA_MAPPING)");
    flag("--profiles-dir", o.config.profiles_dir, "Directory of jurisdiction profiles (env ROPA_PROFILES_DIR)");
    flag("--base-iri", o.config.base_iri, "Base IRI for activity subjects (env ROPA_BASE_IRI)");
    flag("--extension-namespace", o.config.extension_namespace,
         "Namespace for minted extension terms (env ROPA_EXTENSION_NAMESPACE)");

    auto* ingest = app.add_subcommand("ingest", "Read a regulator template CSV into a dataset");
    ingest->add_option("csv", o.ingest_csv, "Template CSV file")->required();
    ingest->add_option("-j,--jurisdiction", o.ingest_jurisdiction, "Template jurisdiction code")->required();
    ingest->add_option("-o,--output", o.ingest_output, "Dataset file (default: standard output)");

    auto* convert = app.add_subcommand("convert", "Emit a dataset as RDF");
    convert->add_option("dataset", o.convert_dataset, "Dataset JSON file")->required();
    convert->add_option("-f,--format", o.convert_format, "turtle or ntriples")
        ->check(CLI::IsMember({"turtle", "ttl", "ntriples", "nt", "n-triples"}));
    convert->add_option("-o,--output", o.convert_output, "RDF file (default: standard output)");

    auto* validate_cmd = app.add_subcommand("validate", "Check a dataset against jurisdiction profiles");
    validate_cmd->add_option("dataset", o.validate_dataset, "Dataset JSON file")->required();
    auto* vj = validate_cmd->add_option("-j,--jurisdiction", o.validate_jurisdiction, "Jurisdiction code");
    auto* va = validate_cmd->add_flag("--all", o.validate_all, "Validate against every loaded profile");
    vj->excludes(va);
    validate_cmd->add_option("--json", o.validate_json, "Also write the JSON report here");
    validate_cmd->add_flag("--require-nonempty", o.require_nonempty, "Treat an empty dataset as non-compliant");

    auto* report = app.add_subcommand("report", "Cross-jurisdiction gap analysis");
    report->add_option("dataset", o.report_dataset, "Dataset JSON file")->required();
    report->add_option("-j,--jurisdiction", o.report_jurisdictions, "Restrict to these jurisdictions");
    report->add_option("--json", o.report_json, "Also write the JSON report here");

    auto* registry = app.add_subcommand("registry", "Inspect the concept registry and mapping table");
    auto* census = registry->add_flag("--census", o.census, "Print concept and mapping counts");
    auto* ext = registry->add_flag("--extensions", o.extensions, "List the minted extension terms");
    census->excludes(ext);
    registry->add_flag("--json", o.registry_json, "JSON output");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
        if (validate_cmd->parsed() && !o.validate_all && o.validate_jurisdiction.empty())
            throw CLI::RequiredError("--jurisdiction or --all");
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_bad_input;
    }

    try {
        const auto loaded = load_config(resolve_config(o.config, env));
        if (ingest->parsed()) return cmd_ingest(o, loaded, out, err);
        if (convert->parsed()) return cmd_convert(o, loaded, out);
        if (validate_cmd->parsed()) return cmd_validate(o, loaded, out, err);
        if (report->parsed()) return cmd_report(o, loaded, out);
        return cmd_registry(o, loaded, out);
    } catch (const UnknownJurisdiction& u) {
        err << "error: no profile for jurisdiction '" << u.code << "'\n";
        return exit_unknown_jurisdiction;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_for(e.code());
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_bad_input;
    }
}

} // namespace ropa::cli
