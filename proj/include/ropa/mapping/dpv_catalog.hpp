#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <json.hpp>

namespace ropa {

inline constexpr std::string_view kDpvNamespace = "http://www.w3.org/ns/dpv#";

enum class TermKind { rdf_class, rdf_property };

struct DpvTerm {
    std::string iri;
    std::string label;
    TermKind kind = TermKind::rdf_class;

    bool operator==(const DpvTerm&) const = default;
};

// Pinned snapshot of DPV term IRIs. IRIs are unique and all live under
// namespace_iri().
class DpvCatalog {
public:
    DpvCatalog() = default;
    // Throws Error(constraint_violation) on a duplicate IRI or an IRI outside `namespace_iri`.
    DpvCatalog(std::string namespace_iri, std::string snapshot_date, std::vector<DpvTerm> terms);

    const std::string& namespace_iri() const noexcept { return namespace_; }
    const std::string& snapshot_date() const noexcept { return snapshot_date_; }
    std::span<const DpvTerm> terms() const noexcept { return terms_; }

    const DpvTerm* find(std::string_view iri) const;
    bool contains(std::string_view iri) const { return find(iri) != nullptr; }
    bool in_namespace(std::string_view iri) const { return iri.starts_with(namespace_); }

private:
    std::string namespace_;
    std::string snapshot_date_;
    std::vector<DpvTerm> terms_;
    std::unordered_map<std::string, std::size_t> index_;
};

// {snapshot_date, namespace?, terms: [{iri, label, kind}]}. A missing namespace
// defaults to the DPV namespace.
DpvCatalog catalog_from_json(const nlohmann::json& j);
DpvCatalog load_catalog(std::istream& in);
DpvCatalog load_catalog_file(const std::filesystem::path& path);

} // namespace ropa
