#include "ropa/rdf/graph.hpp"

#include "ropa/core/error.hpp"

namespace ropa::rdf {

bool Graph::add(Triple triple) {
    if (!triple.predicate.is_iri())
        throw Error(Errc::constraint_violation, triple.predicate.value, "predicate must be an IRI");
    if (triple.subject.is_literal())
        throw Error(Errc::constraint_violation, triple.subject.value, "a literal cannot be a subject");
    if (triple.subject.is_blank()) blank_labels_.insert(triple.subject.value);
    if (triple.object.is_blank()) blank_labels_.insert(triple.object.value);
    return triples_.insert(std::move(triple)).second;
}

Term Graph::new_blank() {
    // Labels minted here start with "g" so they never clash with parsed labels
    // that happen to be numeric.
    for (;;) {
        auto label = "g" + std::to_string(next_blank_++);
        if (!blank_labels_.count(label)) {
            blank_labels_.insert(label);
            return Term::blank(std::move(label));
        }
    }
}

} // namespace ropa::rdf
