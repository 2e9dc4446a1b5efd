#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>

#include "ropa/rdf/term.hpp"

namespace ropa::rdf {

// Set of triples plus prefix bindings.
class Graph {
public:
    using const_iterator = std::set<Triple>::const_iterator;

    // Returns false for a duplicate. Throws Error(constraint_violation) when
    // the predicate is not an IRI or the subject is a literal.
    bool add(Triple triple);
    bool add(Term subject, Term predicate, Term object) {
        return add(Triple{std::move(subject), std::move(predicate), std::move(object)});
    }

    bool contains(const Triple& triple) const { return triples_.count(triple) != 0; }
    std::size_t size() const noexcept { return triples_.size(); }
    bool empty() const noexcept { return triples_.empty(); }
    const_iterator begin() const noexcept { return triples_.begin(); }
    const_iterator end() const noexcept { return triples_.end(); }

    void bind(std::string prefix, std::string namespace_iri) { bindings_[std::move(prefix)] = std::move(namespace_iri); }
    const std::map<std::string, std::string>& bindings() const noexcept { return bindings_; }

    // Fresh blank node label not used by this graph so far.
    Term new_blank();

private:
    std::set<Triple> triples_;
    std::map<std::string, std::string> bindings_;
    std::set<std::string> blank_labels_;
    std::size_t next_blank_ = 0;
};

} // namespace ropa::rdf
