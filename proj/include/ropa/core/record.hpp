#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ropa/core/registry.hpp"

namespace ropa {

enum class Jurisdiction { BE, CY, DK, FI, LU, UK };

inline constexpr Jurisdiction kAllJurisdictions[] = {Jurisdiction::BE, Jurisdiction::CY, Jurisdiction::DK,
                                                     Jurisdiction::FI, Jurisdiction::LU, Jurisdiction::UK};

std::string_view to_string(Jurisdiction j) noexcept;
// Accepts the two-letter code in any case.
std::optional<Jurisdiction> parse_jurisdiction(std::string_view code) noexcept;

enum class PartyRole { controller, joint_controller, representative, dpo, processor, recipient };

std::string_view to_string(PartyRole r) noexcept;
std::optional<PartyRole> parse_party_role(std::string_view s) noexcept;

struct ContactDetails {
    std::optional<std::string> address;
    std::optional<std::string> email;
    std::optional<std::string> phone;

    bool empty() const noexcept { return !address && !email && !phone; }
    auto operator<=>(const ContactDetails&) const = default;
};

struct Party {
    PartyRole role = PartyRole::controller;
    std::string name;
    ContactDetails contact;

    auto operator<=>(const Party&) const = default;
};

// One processing activity. `values` is keyed by canonical concept name; each
// list is duplicate-free and keeps insertion order.
struct RopaRecord {
    std::string record_id;
    Jurisdiction jurisdiction = Jurisdiction::UK;
    std::map<std::string, std::vector<std::string>> values;
    std::vector<Party> parties;

    // Returns false when the value was already present.
    bool add_value(const std::string& concept_name, std::string value);

    // At least one non-blank value.
    bool has_value(std::string_view concept_name) const;

    std::span<const std::string> values_of(std::string_view concept_name) const;

    bool operator==(const RopaRecord&) const = default;
};

// Throws Error(unresolved_value) for a value key missing from the registry and
// Error(constraint_violation) for a party without a name.
// Copy with every value list and the party list sorted; two records are equal
// up to ordering iff their normalized forms compare equal.
RopaRecord normalized(RopaRecord record);

void check_record(const RopaRecord& record, const ConceptRegistry& registry);

// Dataset files hold a JSON array of records. Reading dedups values and checks
// structure (unique non-empty ids, known roles and jurisdictions, named parties)
// but does not resolve concept keys, so stale datasets can still be validated.
RopaRecord record_from_json(const nlohmann::json& j);
nlohmann::json to_json(const RopaRecord& record);
std::vector<RopaRecord> read_dataset(std::istream& in);
std::vector<RopaRecord> read_dataset_file(const std::filesystem::path& path);
std::string write_dataset(std::span<const RopaRecord> records);

} // namespace ropa
