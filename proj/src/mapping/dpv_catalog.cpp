#include "ropa/mapping/dpv_catalog.hpp"

#include <fstream>
#include <istream>

#include "ropa/core/error.hpp"

namespace ropa {

DpvCatalog::DpvCatalog(std::string namespace_iri, std::string snapshot_date, std::vector<DpvTerm> terms)
    : namespace_(std::move(namespace_iri)), snapshot_date_(std::move(snapshot_date)), terms_(std::move(terms)) {
    if (namespace_.empty()) throw Error(Errc::constraint_violation, {}, "catalog namespace is empty");
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        const auto& iri = terms_[i].iri;
        if (!iri.starts_with(namespace_) || iri.size() == namespace_.size())
            throw Error(Errc::constraint_violation, iri, "catalog term " + iri + " is outside " + namespace_);
        if (!index_.emplace(iri, i).second)
            throw Error(Errc::constraint_violation, iri, "catalog term " + iri + " listed twice");
    }
}

const DpvTerm* DpvCatalog::find(std::string_view iri) const {
    auto it = index_.find(std::string(iri));
    return it == index_.end() ? nullptr : &terms_[it->second];
}

DpvCatalog catalog_from_json(const nlohmann::json& j) {
    std::vector<DpvTerm> terms;
    try {
        for (const auto& t : j.at("terms")) {
            DpvTerm term;
            term.iri = t.at("iri").get<std::string>();
            term.label = t.value("label", std::string());
            const auto kind = t.value("kind", std::string("class"));
            if (kind == "class") {
                term.kind = TermKind::rdf_class;
            } else if (kind == "property") {
                term.kind = TermKind::rdf_property;
            } else {
                throw Error(Errc::parse_error, term.iri, "unknown term kind '" + kind + "'");
            }
            terms.push_back(std::move(term));
        }
        return DpvCatalog(j.value("namespace", std::string(kDpvNamespace)), j.at("snapshot_date").get<std::string>(),
                          std::move(terms));
    } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::parse_error, {}, std::string("malformed DPV catalog: ") + e.what());
    }
}

DpvCatalog load_catalog(std::istream& in) {
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(Errc::parse_error, {}, std::string("catalog is not valid JSON: ") + e.what());
    }
    return catalog_from_json(j);
}

DpvCatalog load_catalog_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(Errc::io_error, path.string(), "cannot open catalog " + path.string());
    return load_catalog(in);
}

} // namespace ropa
