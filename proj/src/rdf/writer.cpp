#include "ropa/rdf/serialize.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <unordered_map>

namespace ropa::rdf {

std::string_view to_string(Format f) noexcept { return f == Format::turtle ? "turtle" : "ntriples"; }

std::optional<Format> parse_format(std::string_view s) noexcept {
    if (s == "turtle" || s == "ttl") return Format::turtle;
    if (s == "ntriples" || s == "nt" || s == "n-triples") return Format::ntriples;
    return std::nullopt;
}

namespace {

// Canonical colour of every blank node by iterative refinement: each round a
// node's colour becomes the rank of (old colour, sorted outgoing edges, sorted
// incoming edges) among all such strings, with neighbours shown by colour.
// Strings never mention input labels, so colours do not depend on them.
class BlankColours {
public:
    explicit BlankColours(const Graph& graph) {
        for (const auto& t : graph) {
            for (const Term* term : {&t.subject, &t.object}) {
                if (term->is_blank() && index_.emplace(term->value, labels_.size()).second) labels_.push_back(term->value);
            }
        }
        out_.resize(labels_.size());
        in_.resize(labels_.size());
        for (const auto& t : graph) {
            if (t.subject.is_blank()) out_[index_.at(t.subject.value)].push_back(&t);
            if (t.object.is_blank()) in_[index_.at(t.object.value)].push_back(&t);
        }
        refine();
    }

    const std::vector<std::string>& labels() const { return labels_; }
    std::size_t colour(const std::string& label) const { return colour_[index_.at(label)]; }

private:
    std::string neighbour(const Term& term) const {
        return term.is_blank() ? "#" + std::to_string(colour_[index_.at(term.value)]) : to_ntriples(term);
    }

    void refine() {
        colour_.assign(labels_.size(), 0);
        std::size_t classes = labels_.empty() ? 0 : 1;
        for (;;) {
            std::vector<std::string> sigs(labels_.size());
            for (std::size_t i = 0; i < labels_.size(); ++i) {
                std::vector<std::string> parts;
                for (const auto* t : out_[i]) parts.push_back("o " + to_ntriples(t->predicate) + " " + neighbour(t->object));
                for (const auto* t : in_[i]) parts.push_back("i " + neighbour(t->subject) + " " + to_ntriples(t->predicate));
                std::sort(parts.begin(), parts.end());
                std::string sig = std::to_string(colour_[i]);
                for (const auto& part : parts) {
                    sig += '|';
                    sig += part;
                }
                sigs[i] = std::move(sig);
            }
            std::vector<std::string> distinct = sigs;
            std::sort(distinct.begin(), distinct.end());
            distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
            for (std::size_t i = 0; i < labels_.size(); ++i) {
                colour_[i] = static_cast<std::size_t>(std::lower_bound(distinct.begin(), distinct.end(), sigs[i]) -
                                                      distinct.begin());
            }
            if (distinct.size() == classes) break;
            classes = distinct.size();
        }
    }

    std::vector<std::string> labels_;
    std::unordered_map<std::string, std::size_t> index_;
    std::vector<std::vector<const Triple*>> out_;
    std::vector<std::vector<const Triple*>> in_;
    std::vector<std::size_t> colour_;
};

std::string zero_padded(std::size_t n) {
    std::string s = std::to_string(n);
    s.insert(0, 12 - std::min<std::size_t>(12, s.size()), '0');
    return s;
}

bool valid_local_name(std::string_view local) {
    if (local.empty() || local.front() == '-') return false;
    return std::all_of(local.begin(), local.end(), [](char c) {
        return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_' || c == '-';
    });
}

class TurtleNames {
public:
    explicit TurtleNames(const std::map<std::string, std::string>& bindings) : bindings_(bindings) {}

    std::string iri(const std::string& value) const {
        const std::pair<const std::string, std::string>* best = nullptr;
        for (const auto& binding : bindings_) {
            const auto& ns = binding.second;
            if (ns.empty() || !value.starts_with(ns) || !valid_local_name(std::string_view(value).substr(ns.size())))
                continue;
            if (!best || ns.size() > best->second.size()) best = &binding;
        }
        if (best) return best->first + ":" + value.substr(best->second.size());
        return to_ntriples(Term::iri(value));
    }

    std::string term(const Term& t) const {
        switch (t.type) {
        case TermType::iri: return iri(t.value);
        case TermType::blank: return "_:" + t.value;
        case TermType::literal: {
            std::string out = "\"" + escape_literal(t.value) + "\"";
            if (!t.language.empty()) {
                out += "@" + t.language;
            } else if (!t.datatype.empty()) {
                out += "^^" + iri(t.datatype);
            }
            return out;
        }
        }
        return {};
    }

private:
    const std::map<std::string, std::string>& bindings_;
};

} // namespace

std::vector<Triple> canonical_triples(const Graph& graph) {
    BlankColours colours(graph);

    // Nodes sharing a final colour are told apart by rank so each keeps its
    // triples contiguous. Refinement separates every pair of non-interchangeable
    // nodes in the tree-shaped blank structures Turtle writes, so there the tie
    // order does not show in the output.
    std::vector<std::string> blanks = colours.labels();
    std::stable_sort(blanks.begin(), blanks.end(), [&](const std::string& a, const std::string& b) {
        return colours.colour(a) < colours.colour(b);
    });
    std::unordered_map<std::string, std::string> blank_keys;
    for (std::size_t rank = 0; rank < blanks.size(); ++rank) {
        blank_keys[blanks[rank]] = "_:" + zero_padded(colours.colour(blanks[rank])) + "#" + zero_padded(rank);
    }
    auto key = [&](const Term& term) { return term.is_blank() ? blank_keys.at(term.value) : to_ntriples(term); };

    struct Keyed {
        std::string s, p, o;
        const Triple* triple;
    };
    std::vector<Keyed> keyed;
    keyed.reserve(graph.size());
    for (const auto& t : graph) {
        keyed.push_back({key(t.subject), to_ntriples(t.predicate), key(t.object), &t});
    }
    std::stable_sort(keyed.begin(), keyed.end(), [](const Keyed& a, const Keyed& b) {
        return std::tie(a.s, a.p, a.o) < std::tie(b.s, b.p, b.o);
    });

    std::unordered_map<std::string, std::string> labels;
    auto relabel = [&](const Term& term) {
        if (!term.is_blank()) return term;
        auto [it, inserted] = labels.emplace(term.value, std::string());
        if (inserted) it->second = "b" + std::to_string(labels.size() - 1);
        return Term::blank(it->second);
    };

    std::vector<Triple> out;
    out.reserve(keyed.size());
    for (const auto& k : keyed) {
        Term subject = relabel(k.triple->subject);
        Term object = relabel(k.triple->object);
        out.push_back({std::move(subject), k.triple->predicate, std::move(object)});
    }
    return out;
}

std::string serialize(const Graph& graph, Format format) {
    const auto triples = canonical_triples(graph);
    std::string out;

    if (format == Format::ntriples) {
        for (const auto& t : triples) {
            out += to_ntriples(t.subject);
            out += ' ';
            out += to_ntriples(t.predicate);
            out += ' ';
            out += to_ntriples(t.object);
            out += " .\n";
        }
        return out;
    }

    for (const auto& [prefix, ns] : graph.bindings()) {
        out += "@prefix " + prefix + ": " + to_ntriples(Term::iri(ns)) + " .\n";
    }

    TurtleNames names(graph.bindings());
    std::size_t i = 0;
    while (i < triples.size()) {
        const auto& subject = triples[i].subject;
        if (!out.empty()) out += '\n';
        out += names.term(subject);

        bool first_predicate = true;
        while (i < triples.size() && triples[i].subject == subject) {
            const auto& predicate = triples[i].predicate;
            out += first_predicate ? " " : " ;\n    ";
            first_predicate = false;
            out += predicate.value == kRdfType ? "a" : names.term(predicate);

            bool first_object = true;
            while (i < triples.size() && triples[i].subject == subject && triples[i].predicate == predicate) {
                out += first_object ? " " : ", ";
                first_object = false;
                out += names.term(triples[i].object);
                ++i;
            }
        }
        out += " .\n";
    }
    return out;
}

bool isomorphic(const Graph& a, const Graph& b) {
    return a.size() == b.size() && serialize(a, Format::ntriples) == serialize(b, Format::ntriples);
}

} // namespace ropa::rdf
