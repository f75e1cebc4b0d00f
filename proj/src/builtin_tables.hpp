#pragma once

#include "gaugekit/homotopy_tables.hpp"

#include <optional>

namespace gaugekit::detail {

// Explicitly listed values shipped with the library.
const TableLayer& builtin_layer();

// Values that follow from a general rule (below-dimension vanishing, Hurewicz,
// Bott periodicity inside the stable range).
std::optional<TableEntry> rule_entry(const SpaceId& space, unsigned k);

}  // namespace gaugekit::detail
