#pragma once

#include <string>

#include "ropa/core/record.hpp"

namespace ropa::testing {

// One record with a valid value for every mandatory concept and nothing else.
// List-bound concepts take an entry that also sits on the Belgian lists.
RopaRecord complete_art30_record(std::string id, Jurisdiction jurisdiction = Jurisdiction::FI);

} // namespace ropa::testing
