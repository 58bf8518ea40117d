// Built-in presentations used by tests, docs, and the CLI catalog: scheme.
#pragma once

#include <optional>

#include "avar/presentation.hpp"

namespace avar {

struct CatalogEntry {
    std::string name;
    GroupPresentation presentation;
    std::string notes;
    bool knot_in_s3 = false;
    std::vector<std::string> known_slopes; // up to the documented sign convention
};

const std::vector<CatalogEntry>& catalog();
const CatalogEntry* catalog_find(const std::string& name);

// Resolve "catalog:NAME" or a file path into a presentation.
GroupPresentation load_presentation_arg(const std::string& arg);

} // namespace avar
