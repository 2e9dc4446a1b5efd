#include "ropa/core/record.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <set>

#include "ropa/core/error.hpp"
#include "ropa/core/text.hpp"

namespace ropa {

std::string_view to_string(Jurisdiction j) noexcept {
    switch (j) {
    case Jurisdiction::BE: return "BE";
    case Jurisdiction::CY: return "CY";
    case Jurisdiction::DK: return "DK";
    case Jurisdiction::FI: return "FI";
    case Jurisdiction::LU: return "LU";
    case Jurisdiction::UK: return "UK";
    }
    return "UK";
}

std::optional<Jurisdiction> parse_jurisdiction(std::string_view code) noexcept {
    std::string upper(text::trim(code));
    for (char& c : upper) {
        if (c >= 'a' && c <= 'z') c = static_cast<char>(c - 'a' + 'A');
    }
    for (auto j : kAllJurisdictions) {
        if (to_string(j) == upper) return j;
    }
    return std::nullopt;
}

std::string_view to_string(PartyRole r) noexcept {
    switch (r) {
    case PartyRole::controller: return "controller";
    case PartyRole::joint_controller: return "joint_controller";
    case PartyRole::representative: return "representative";
    case PartyRole::dpo: return "dpo";
    case PartyRole::processor: return "processor";
    case PartyRole::recipient: return "recipient";
    }
    return "controller";
}

std::optional<PartyRole> parse_party_role(std::string_view s) noexcept {
    for (auto r : {PartyRole::controller, PartyRole::joint_controller, PartyRole::representative, PartyRole::dpo,
                   PartyRole::processor, PartyRole::recipient}) {
        if (to_string(r) == s) return r;
    }
    return std::nullopt;
}

bool RopaRecord::add_value(const std::string& concept_name, std::string value) {
    auto& list = values[concept_name];
    if (std::find(list.begin(), list.end(), value) != list.end()) return false;
    list.push_back(std::move(value));
    return true;
}

bool RopaRecord::has_value(std::string_view concept_name) const {
    auto it = values.find(std::string(concept_name));
    if (it == values.end()) return false;
    return std::any_of(it->second.begin(), it->second.end(), [](const std::string& v) { return !text::is_blank(v); });
}

std::span<const std::string> RopaRecord::values_of(std::string_view concept_name) const {
    auto it = values.find(std::string(concept_name));
    if (it == values.end()) return {};
    return it->second;
}

RopaRecord normalized(RopaRecord record) {
    for (auto& [name, list] : record.values) std::sort(list.begin(), list.end());
    std::sort(record.parties.begin(), record.parties.end());
    return record;
}

void check_record(const RopaRecord& record, const ConceptRegistry& registry) {
    for (const auto& [name, list] : record.values) {
        if (!registry.contains(name))
            throw Error(Errc::unresolved_value, name,
                        "record " + record.record_id + " carries a value for unknown concept '" + name + "'");
    }
    for (const auto& party : record.parties) {
        if (text::is_blank(party.name))
            throw Error(Errc::constraint_violation, record.record_id,
                        "record " + record.record_id + " has a " + std::string(to_string(party.role)) +
                            " party without a name");
    }
}

namespace {

std::optional<std::string> optional_string(const nlohmann::json& j, const char* key) {
    if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
    if (!j.at(key).is_string()) throw Error(Errc::parse_error, key, std::string("'") + key + "' must be a string");
    return j.at(key).get<std::string>();
}

nlohmann::json contact_to_json(const ContactDetails& c) {
    nlohmann::json j = nlohmann::json::object();
    if (c.address) j["address"] = *c.address;
    if (c.email) j["email"] = *c.email;
    if (c.phone) j["phone"] = *c.phone;
    return j;
}

} // namespace

RopaRecord record_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw Error(Errc::parse_error, {}, "record must be a JSON object");
    RopaRecord r;
    auto id = optional_string(j, "record_id");
    if (!id || id->empty()) throw Error(Errc::parse_error, {}, "record without a record_id");
    r.record_id = *id;

    auto code = optional_string(j, "jurisdiction");
    auto jurisdiction = code ? parse_jurisdiction(*code) : std::nullopt;
    if (!jurisdiction) throw Error(Errc::parse_error, r.record_id, "record " + r.record_id + " has no valid jurisdiction");
    r.jurisdiction = *jurisdiction;

    if (j.contains("values")) {
        const auto& values = j.at("values");
        if (!values.is_object()) throw Error(Errc::parse_error, r.record_id, "'values' must be an object");
        for (const auto& [concept_name, list] : values.items()) {
            if (!list.is_array()) throw Error(Errc::parse_error, concept_name, "values of '" + concept_name + "' must be an array");
            for (const auto& v : list) {
                if (!v.is_string()) throw Error(Errc::parse_error, concept_name, "values must be strings");
                r.add_value(concept_name, v.get<std::string>());
            }
        }
    }

    if (j.contains("parties")) {
        const auto& parties = j.at("parties");
        if (!parties.is_array()) throw Error(Errc::parse_error, r.record_id, "'parties' must be an array");
        for (const auto& p : parties) {
            if (!p.is_object()) throw Error(Errc::parse_error, r.record_id, "party must be an object");
            Party party;
            auto role = parse_party_role(p.value("role", std::string()));
            if (!role) throw Error(Errc::parse_error, r.record_id, "record " + r.record_id + " has a party with an unknown role");
            party.role = *role;
            party.name = p.value("name", std::string());
            if (text::is_blank(party.name))
                throw Error(Errc::parse_error, r.record_id, "record " + r.record_id + " has a party without a name");
            if (p.contains("contact") && !p.at("contact").is_null()) {
                const auto& c = p.at("contact");
                if (!c.is_object()) throw Error(Errc::parse_error, r.record_id, "'contact' must be an object");
                party.contact.address = optional_string(c, "address");
                party.contact.email = optional_string(c, "email");
                party.contact.phone = optional_string(c, "phone");
            }
            r.parties.push_back(std::move(party));
        }
    }
    return r;
}

nlohmann::json to_json(const RopaRecord& r) {
    nlohmann::json values = nlohmann::json::object();
    for (const auto& [name, list] : r.values) values[name] = list;
    nlohmann::json parties = nlohmann::json::array();
    for (const auto& p : r.parties) {
        nlohmann::json pj{{"role", to_string(p.role)}, {"name", p.name}};
        if (!p.contact.empty()) pj["contact"] = contact_to_json(p.contact);
        parties.push_back(std::move(pj));
    }
    return {{"record_id", r.record_id},
            {"jurisdiction", to_string(r.jurisdiction)},
            {"values", std::move(values)},
            {"parties", std::move(parties)}};
}

std::vector<RopaRecord> read_dataset(std::istream& in) {
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(Errc::parse_error, {}, std::string("dataset is not valid JSON: ") + e.what());
    }
    if (!j.is_array()) throw Error(Errc::parse_error, {}, "dataset must be a JSON array of records");
    std::vector<RopaRecord> records;
    std::set<std::string> ids;
    for (const auto& item : j) {
        auto record = record_from_json(item);
        if (!ids.insert(record.record_id).second)
            throw Error(Errc::parse_error, record.record_id, "duplicate record_id " + record.record_id);
        records.push_back(std::move(record));
    }
    return records;
}

std::vector<RopaRecord> read_dataset_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(Errc::io_error, path.string(), "cannot open dataset " + path.string());
    return read_dataset(in);
}

std::string write_dataset(std::span<const RopaRecord> records) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& r : records) j.push_back(to_json(r));
    return j.dump(2) + "\n";
}

} // namespace ropa
