#pragma once

#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ropa/core/registry.hpp"
#include "ropa/ingest/profile.hpp"
#include "ropa/mapping/dpv_catalog.hpp"
#include "ropa/mapping/mapping.hpp"

namespace ropa::cli {

// The only statuses run() returns.
enum ExitCode : int {
    exit_ok = 0,
    exit_non_compliant = 1,
    exit_bad_input = 2,
    exit_unknown_jurisdiction = 3,
    exit_mapping_gap = 4,
};

using EnvLookup = std::function<std::optional<std::string>(std::string_view)>;

// Reads the process environment.
EnvLookup process_environment();

struct CliConfig {
    std::filesystem::path registry_path;
    std::filesystem::path catalog_path;
    std::filesystem::path mapping_table_path;
    std::filesystem::path profiles_dir;
    std::string base_iri;
    std::string extension_namespace;

    bool operator==(const CliConfig&) const = default;
};

// Values given on the command line; unset fields fall back to the environment.
struct ConfigOverrides {
    std::optional<std::string> registry_path;
    std::optional<std::string> catalog_path;
    std::optional<std::string> mapping_table_path;
    std::optional<std::string> profiles_dir;
    std::optional<std::string> base_iri;
    std::optional<std::string> extension_namespace;
};

// Shipped files under `data_dir` and the built-in IRIs.
CliConfig default_config(const std::filesystem::path& data_dir);
CliConfig default_config();

// Flags, then ROPA_REGISTRY / ROPA_CATALOG / ROPA_MAPPING / ROPA_PROFILES_DIR /
// ROPA_BASE_IRI / ROPA_EXTENSION_NAMESPACE, then default_config().
// Empty environment values count as unset.
CliConfig resolve_config(const ConfigOverrides& flags, const EnvLookup& env);

struct LoadedConfig {
    CliConfig config;
    ConceptRegistry registry;
    DpvCatalog catalog;
    MappingTable table;
    std::vector<JurisdictionProfile> profiles;
};

// Loads every configured file. Throws ropa::Error on the first failure.
LoadedConfig load_config(const CliConfig& config);

// Entry point behind the `ropa` executable. `args` excludes the program name.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err, const EnvLookup& env);

} // namespace ropa::cli
