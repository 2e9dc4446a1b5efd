#include <cstdlib>

#include "ropa/cli/app.hpp"
#include "ropa/rdf/ropa_graph.hpp"

#ifndef ROPA_DEFAULT_DATA_DIR
#define ROPA_DEFAULT_DATA_DIR "data"
#endif

namespace ropa::cli {

EnvLookup process_environment() {
    return [](std::string_view name) -> std::optional<std::string> {
        const char* value = std::getenv(std::string(name).c_str());
        if (value == nullptr) return std::nullopt;
        return std::string(value);
    };
}

CliConfig default_config(const std::filesystem::path& data_dir) {
    return CliConfig{data_dir / "registry.json",
                     data_dir / "dpv_catalog.json",
                     data_dir / "mapping_table.json",
                     data_dir / "profiles",
                     std::string(rdf::kDefaultBaseIri),
                     std::string(kDefaultExtensionNamespace)};
}

CliConfig default_config() { return default_config(ROPA_DEFAULT_DATA_DIR); }

CliConfig resolve_config(const ConfigOverrides& flags, const EnvLookup& env) {
    CliConfig config = default_config();
    auto pick = [&](const std::optional<std::string>& flag, std::string_view variable, auto& field) {
        if (flag) {
            field = *flag;
            return;
        }
        if (env) {
            if (auto value = env(variable); value && !value->empty()) field = *value;
        }
    };
    pick(flags.registry_path, "ROPA_REGISTRY", config.registry_path);
    pick(flags.catalog_path, "ROPA_CATALOG", config.catalog_path);
    pick(flags.mapping_table_path, "ROPA_MAPPING", config.mapping_table_path);
    pick(flags.profiles_dir, "ROPA_PROFILES_DIR", config.profiles_dir);
    pick(flags.base_iri, "ROPA_BASE_IRI", config.base_iri);
    pick(flags.extension_namespace, "ROPA_EXTENSION_NAMESPACE", config.extension_namespace);
    return config;
}

LoadedConfig load_config(const CliConfig& config) {
    LoadedConfig loaded{config, load_registry_file(config.registry_path), load_catalog_file(config.catalog_path), {}, {}};
    loaded.table = load_mapping_table_file(config.mapping_table_path, loaded.catalog, config.extension_namespace);
    loaded.profiles = load_profiles_dir(config.profiles_dir, loaded.registry);
    return loaded;
}

} // namespace ropa::cli
