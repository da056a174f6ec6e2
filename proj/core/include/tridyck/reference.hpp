#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tridyck/partition.hpp"
#include "tridyck/schur.hpp"

namespace tridyck {

struct ReferenceEntry {
    Partition shape;
    SchurExpansion expansion;
    // The published expansion was itself only conjectural for this shape.
    bool uncertain = false;
};

// Embedded asset: one line per shape, "5,3,1 : 2,2,1 | 4,1,1 | 4,2 | 5,2*2".
// '#' starts a comment line.
std::string_view reference_text() noexcept;
// 64-bit FNV-1a of reference_text().
std::uint64_t reference_checksum() noexcept;
std::uint64_t fnv1a64(std::string_view bytes) noexcept;

std::vector<ReferenceEntry> parse_reference(std::string_view text);

// Parsed once, sorted by shape.
const std::vector<ReferenceEntry>& reference_table();

std::optional<ReferenceEntry> reference_expansion(const Partition& shape);

}  // namespace tridyck
