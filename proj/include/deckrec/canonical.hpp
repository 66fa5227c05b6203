#pragma once

#include <compare>
#include <string>

#include "deckrec/graph.hpp"

namespace deckrec {

// Isomorphism-class certificate: the graph6 encoding of the canonically
// relabeled graph. Two graphs are isomorphic iff their codes are equal.
// For equal vertex counts, byte order equals order on the underlying
// upper-triangle bit strings.
struct CanonicalCode {
    std::string bytes;

    auto operator<=>(const CanonicalCode&) const = default;
};

CanonicalCode canonical_form(const Graph& g);

bool is_isomorphic(const Graph& a, const Graph& b);

} // namespace deckrec
