#include "ropa/rdf/ropa_graph.hpp"

#include <algorithm>
#include <map>
#include <regex>
#include <set>
#include <unordered_set>

#include "ropa/core/error.hpp"

namespace ropa::rdf {

namespace {

constexpr std::string_view kPersonalDataHandling = "PersonalDataHandling";
constexpr std::string_view kJurisdictionProperty = "hasJurisdiction";

std::string vcard(std::string_view local) { return std::string(kVcardNamespace) + std::string(local); }

enum class SlotKind { type, jurisdiction, def, party };

struct Slot {
    SlotKind kind = SlotKind::def;
    const ConceptDefinition* def = nullptr;
    const MappingEntry* entry = nullptr;
    PartyRole role = PartyRole::controller;
};

// Subject-level predicates and what each one carries.
class EmissionPlan {
public:
    EmissionPlan(const ConceptRegistry& registry, const MappingTable& table, const EmissionOptions& options) {
        type_iri_ = options.dpv_namespace + std::string(kPersonalDataHandling);
        jurisdiction_iri_ = table.extension_namespace() + std::string(kJurisdictionProperty);
        insert(std::string(kRdfType), Slot{SlotKind::type});
        insert(jurisdiction_iri_, Slot{SlotKind::jurisdiction});
        for (const auto& def : registry.concepts()) {
            const auto* entry = table.find(def.name);
            if (entry == nullptr)
                throw Error(Errc::coverage_gap, def.name, "no mapping entry for concept '" + def.name + "'");
            if (entry->target_iris.empty())
                throw Error(Errc::constraint_violation, def.name, "mapping entry has no target IRI");
            insert(entry->target_iris.front(), Slot{SlotKind::def, &def, entry});
            for (std::size_t i = 1; i < entry->target_iris.size(); ++i) inner_.insert(entry->target_iris[i]);
        }
        for (auto role : {PartyRole::controller, PartyRole::joint_controller, PartyRole::representative, PartyRole::dpo,
                          PartyRole::processor, PartyRole::recipient}) {
            Slot slot{SlotKind::party};
            slot.role = role;
            insert(party_predicate(role, table, options), slot);
        }
        for (auto local : {"fn", "hasAddress", "hasEmail", "hasTelephone"}) inner_.insert(vcard(local));
    }

    const std::string& type_iri() const { return type_iri_; }
    const std::string& jurisdiction_iri() const { return jurisdiction_iri_; }

    const Slot* find(const std::string& predicate) const {
        auto it = slots_.find(predicate);
        return it == slots_.end() ? nullptr : &it->second;
    }
    bool known(const std::string& predicate) const { return slots_.count(predicate) != 0 || inner_.count(predicate) != 0; }

private:
    void insert(const std::string& predicate, Slot slot) {
        auto [it, fresh] = slots_.emplace(predicate, slot);
        if (!fresh) {
            const std::string who = slot.def ? slot.def->name : std::string(to_string(slot.role));
            throw Error(Errc::ambiguous_mapping, predicate,
                        "predicate <" + predicate + "> is used for more than one item (" + who + ")");
        }
    }

    std::string type_iri_;
    std::string jurisdiction_iri_;
    std::map<std::string, Slot> slots_;
    std::unordered_set<std::string> inner_;
};

bool is_xsd_date(const std::string& s) {
    static const std::regex re(R"(-?\d{4,}-(0[1-9]|1[0-2])-(0[1-9]|[12]\d|3[01])(Z|[+-]\d\d:\d\d)?)");
    return std::regex_match(s, re);
}

bool is_xsd_duration(const std::string& s) {
    static const std::regex re(R"(-?P(\d+Y)?(\d+M)?(\d+D)?(T(\d+H)?(\d+M)?(\d+(\.\d+)?S)?)?)");
    if (!std::regex_match(s, re)) return false;
    const auto t = s.find('T');
    if (t != std::string::npos && t + 1 == s.size()) return false;
    return s.back() != 'P';
}

Term value_literal(const ConceptDefinition& def, const std::string& value) {
    if (def.value_kind == ValueKind::date_or_duration) {
        if (is_xsd_date(value)) return Term::literal(value, std::string(kXsdDate));
        if (is_xsd_duration(value)) return Term::literal(value, std::string(kXsdDuration));
    } else if (def.value_kind == ValueKind::boolean) {
        if (value == "true" || value == "false" || value == "1" || value == "0")
            return Term::literal(value, std::string(kXsdBoolean));
    }
    return Term::literal(value);
}

bool unreserved(unsigned char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '-' || c == '.' ||
           c == '_' || c == '~';
}

class Reconstruction {
public:
    Reconstruction(const Graph& graph, const EmissionPlan& plan) : plan_(plan) {
        for (const auto& t : graph) out_[t.subject].push_back(&t);
        total_ = graph.size();
    }

    const std::vector<const Triple*>& edges(const Term& node) const {
        static const std::vector<const Triple*> none;
        auto it = out_.find(node);
        return it == out_.end() ? none : it->second;
    }

    void consume(const Triple* t) { consumed_.insert(t); }
    bool complete() const { return consumed_.size() == total_; }

    const Triple* first_unconsumed() const {
        for (const auto& [subject, list] : out_)
            for (const auto* t : list)
                if (!consumed_.count(t)) return t;
        return nullptr;
    }

    // Walks a complex chain starting at `node`, whose incoming hop was
    // target_iris[hop - 1]; every literal leaf is one value.
    void follow_chain(const Term& node, const MappingEntry& entry, std::size_t hop, std::vector<std::string>& out) {
        if (!node.is_blank())
            throw Error(Errc::constraint_violation, entry.concept_name,
                        "complex value for '" + entry.concept_name + "' must pass through a blank node");
        bool any = false;
        for (const auto* t : edges(node)) {
            if (t->predicate.value != entry.target_iris[hop])
                throw Error(Errc::constraint_violation, t->predicate.value,
                            "unexpected predicate inside complex value for '" + entry.concept_name + "'");
            consume(t);
            any = true;
            if (hop + 1 == entry.target_iris.size()) {
                out.push_back(leaf(t->object, entry.concept_name));
            } else {
                follow_chain(t->object, entry, hop + 1, out);
            }
        }
        if (!any)
            throw Error(Errc::constraint_violation, entry.concept_name,
                        "incomplete complex value for '" + entry.concept_name + "'");
    }

    Party party(const Term& node, PartyRole role) {
        if (!node.is_blank())
            throw Error(Errc::constraint_violation, node.value, "party must be a blank node");
        Party p;
        p.role = role;
        bool named = false;
        for (const auto* t : edges(node)) {
            const auto& pred = t->predicate.value;
            if (!t->object.is_literal())
                throw Error(Errc::constraint_violation, pred, "party property <" + pred + "> must be a literal");
            std::optional<std::string>* slot = nullptr;
            if (pred == vcard("fn")) {
                if (named) throw Error(Errc::constraint_violation, pred, "party has more than one name");
                p.name = t->object.value;
                named = true;
            } else if (pred == vcard("hasAddress")) {
                slot = &p.contact.address;
            } else if (pred == vcard("hasEmail")) {
                slot = &p.contact.email;
            } else if (pred == vcard("hasTelephone")) {
                slot = &p.contact.phone;
            } else if (plan_.known(pred)) {
                throw Error(Errc::constraint_violation, pred, "predicate <" + pred + "> does not belong on a party");
            } else {
                throw Error(Errc::unrecognized_predicate, pred, "unrecognized predicate <" + pred + ">");
            }
            if (slot != nullptr) {
                if (*slot) throw Error(Errc::constraint_violation, pred, "party repeats <" + pred + ">");
                *slot = t->object.value;
            }
            consume(t);
        }
        if (!named || p.name.empty()) throw Error(Errc::constraint_violation, node.value, "party without a name");
        return p;
    }

    static std::string leaf(const Term& object, const std::string& concept_name) {
        if (object.is_blank())
            throw Error(Errc::constraint_violation, concept_name, "value for '" + concept_name + "' is a blank node");
        return object.value;
    }

private:
    const EmissionPlan& plan_;
    std::map<Term, std::vector<const Triple*>> out_;
    std::set<const Triple*> consumed_;
    std::size_t total_ = 0;
};

} // namespace

std::string party_predicate(PartyRole role, const MappingTable& table, const EmissionOptions& options) {
    const auto& dpv = options.dpv_namespace;
    const auto& ext = table.extension_namespace();
    switch (role) {
    case PartyRole::controller: return dpv + "hasDataController";
    case PartyRole::joint_controller: return dpv + "hasJointDataControllers";
    case PartyRole::processor: return dpv + "hasDataProcessor";
    case PartyRole::recipient: return dpv + "hasRecipient";
    case PartyRole::dpo: return ext + "hasDataProtectionOfficer";
    case PartyRole::representative: return ext + "hasRepresentative";
    }
    return {};
}

std::string percent_encode(std::string_view s) {
    static constexpr char hex[] = "0123456789ABCDEF";
    std::string out;
    out.reserve(s.size());
    for (unsigned char c : s) {
        if (unreserved(c)) {
            out.push_back(static_cast<char>(c));
        } else {
            out.push_back('%');
            out.push_back(hex[c >> 4]);
            out.push_back(hex[c & 0xF]);
        }
    }
    return out;
}

std::string percent_decode(std::string_view s) {
    auto nibble = [&](char c) -> int {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        if (c >= 'A' && c <= 'F') return c - 'A' + 10;
        throw Error(Errc::constraint_violation, std::string(s), "malformed percent escape in '" + std::string(s) + "'");
    };
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] != '%') {
            out.push_back(s[i]);
            continue;
        }
        if (i + 2 >= s.size())
            throw Error(Errc::constraint_violation, std::string(s), "truncated percent escape in '" + std::string(s) + "'");
        out.push_back(static_cast<char>(nibble(s[i + 1]) * 16 + nibble(s[i + 2])));
        i += 2;
    }
    return out;
}

Graph to_graph(std::span<const RopaRecord> records, const ConceptRegistry& registry, const MappingTable& table,
               const EmissionOptions& options) {
    Graph g;
    g.bind("dpv", options.dpv_namespace);
    g.bind("ext", table.extension_namespace());
    g.bind("vcard", std::string(kVcardNamespace));

    const EmissionPlan plan(registry, table, options);
    std::set<std::string> seen_ids;
    for (const auto& record : records) {
        check_record(record, registry);
        if (record.record_id.empty()) throw Error(Errc::constraint_violation, "", "record with an empty id");
        if (!seen_ids.insert(record.record_id).second)
            throw Error(Errc::constraint_violation, record.record_id, "duplicate record id '" + record.record_id + "'");
    }

    for (const auto& record : records) {
        const Term activity = Term::iri(options.base_iri + percent_encode(record.record_id));
        g.add(activity, Term::iri(std::string(kRdfType)), Term::iri(plan.type_iri()));
        g.add(activity, Term::iri(plan.jurisdiction_iri()), Term::literal(std::string(to_string(record.jurisdiction))));

        for (const auto& [name, list] : record.values) {
            const auto* def = registry.find(name);
            const auto* entry = table.find(name);
            const auto& iris = entry->target_iris;
            for (const auto& value : list) {
                if (iris.size() == 1) {
                    g.add(activity, Term::iri(iris.front()), value_literal(*def, value));
                    continue;
                }
                Term node = g.new_blank();
                g.add(activity, Term::iri(iris.front()), node);
                for (std::size_t hop = 1; hop + 1 < iris.size(); ++hop) {
                    Term next = g.new_blank();
                    g.add(node, Term::iri(iris[hop]), next);
                    node = std::move(next);
                }
                g.add(node, Term::iri(iris.back()), value_literal(*def, value));
            }
        }

        for (const auto& party : record.parties) {
            Term node = g.new_blank();
            g.add(activity, Term::iri(party_predicate(party.role, table, options)), node);
            g.add(node, Term::iri(vcard("fn")), Term::literal(party.name));
            if (party.contact.address) g.add(node, Term::iri(vcard("hasAddress")), Term::literal(*party.contact.address));
            if (party.contact.email) g.add(node, Term::iri(vcard("hasEmail")), Term::literal(*party.contact.email));
            if (party.contact.phone) g.add(node, Term::iri(vcard("hasTelephone")), Term::literal(*party.contact.phone));
        }
    }
    return g;
}

std::vector<RopaRecord> from_graph(const Graph& graph, const ConceptRegistry& registry, const MappingTable& table,
                                   const EmissionOptions& options) {
    const EmissionPlan plan(registry, table, options);
    for (const auto& t : graph) {
        if (!plan.known(t.predicate.value))
            throw Error(Errc::unrecognized_predicate, t.predicate.value,
                        "unrecognized predicate <" + t.predicate.value + ">");
    }

    Reconstruction walk(graph, plan);
    std::vector<RopaRecord> records;
    for (const auto& t : graph) {
        if (t.predicate.value != kRdfType || !t.object.is_iri() || t.object.value != plan.type_iri()) continue;
        if (!t.subject.is_iri())
            throw Error(Errc::constraint_violation, t.subject.value, "processing activity must be an IRI");
        if (!t.subject.value.starts_with(options.base_iri))
            throw Error(Errc::constraint_violation, t.subject.value,
                        "activity <" + t.subject.value + "> is outside the base IRI " + options.base_iri);

        RopaRecord record;
        record.record_id = percent_decode(std::string_view(t.subject.value).substr(options.base_iri.size()));
        bool has_jurisdiction = false;
        for (const auto* edge : walk.edges(t.subject)) {
            const auto* slot = plan.find(edge->predicate.value);
            if (slot == nullptr)
                throw Error(Errc::constraint_violation, edge->predicate.value,
                            "predicate <" + edge->predicate.value + "> does not belong on an activity");
            switch (slot->kind) {
            case SlotKind::type:
                if (edge->object != t.object)
                    throw Error(Errc::constraint_violation, edge->object.value, "activity carries a second type");
                break;
            case SlotKind::jurisdiction: {
                auto j = edge->object.is_literal() ? parse_jurisdiction(edge->object.value) : std::nullopt;
                if (!j || has_jurisdiction)
                    throw Error(Errc::constraint_violation, record.record_id,
                                "activity " + record.record_id + " needs exactly one known jurisdiction");
                record.jurisdiction = *j;
                has_jurisdiction = true;
                break;
            }
            case SlotKind::def: {
                std::vector<std::string> found;
                if (slot->entry->target_iris.size() == 1) {
                    found.push_back(Reconstruction::leaf(edge->object, slot->def->name));
                } else {
                    walk.follow_chain(edge->object, *slot->entry, 1, found);
                }
                for (auto& v : found) record.add_value(slot->def->name, std::move(v));
                break;
            }
            case SlotKind::party:
                record.parties.push_back(walk.party(edge->object, slot->role));
                break;
            }
            walk.consume(edge);
        }
        if (!has_jurisdiction)
            throw Error(Errc::constraint_violation, record.record_id,
                        "activity " + record.record_id + " has no jurisdiction");
        records.push_back(normalized(std::move(record)));
    }

    if (!walk.complete()) {
        const auto* t = walk.first_unconsumed();
        throw Error(Errc::constraint_violation, t->predicate.value,
                    "triple with predicate <" + t->predicate.value + "> is not attached to any activity");
    }
    std::sort(records.begin(), records.end(),
              [](const RopaRecord& a, const RopaRecord& b) { return a.record_id < b.record_id; });
    for (std::size_t i = 1; i < records.size(); ++i) {
        if (records[i].record_id == records[i - 1].record_id)
            throw Error(Errc::constraint_violation, records[i].record_id,
                        "two activities decode to record id '" + records[i].record_id + "'");
    }
    return records;
}

} // namespace ropa::rdf
