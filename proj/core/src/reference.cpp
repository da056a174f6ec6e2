#include "tridyck/reference.hpp"

#include <algorithm>
#include <sstream>

namespace tridyck {

namespace detail {
extern const char* const reference_asset;
}

std::string_view reference_text() noexcept { return detail::reference_asset; }

std::uint64_t fnv1a64(std::string_view bytes) noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::uint64_t reference_checksum() noexcept { return fnv1a64(reference_text()); }

std::vector<ReferenceEntry> parse_reference(std::string_view text) {
    static const std::vector<Partition> uncertain{Partition{6, 4, 2, 1}, Partition{7, 5, 3, 1}};
    std::vector<ReferenceEntry> out;
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        const auto colon = line.find(':');
        if (colon == std::string::npos) throw Error(Errc::parse_error, "reference line " + std::to_string(lineno));
        ReferenceEntry e;
        e.shape = Partition::parse(line.substr(0, colon));
        e.expansion = SchurExpansion::parse(line.substr(colon + 1));
        e.uncertain = std::find(uncertain.begin(), uncertain.end(), e.shape) != uncertain.end();
        if (std::any_of(out.begin(), out.end(), [&](const auto& o) { return o.shape == e.shape; }))
            throw Error(Errc::parse_error, "duplicate reference shape (" + e.shape.str() + ")");
        out.push_back(std::move(e));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.shape < b.shape; });
    return out;
}

const std::vector<ReferenceEntry>& reference_table() {
    static const std::vector<ReferenceEntry> table = parse_reference(reference_text());
    return table;
}

std::optional<ReferenceEntry> reference_expansion(const Partition& shape) {
    for (const auto& e : reference_table())
        if (e.shape == shape) return e;
    return std::nullopt;
}

}  // namespace tridyck
