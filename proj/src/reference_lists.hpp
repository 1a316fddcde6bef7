#pragma once

#include <array>
#include <map>
#include <string_view>

namespace obstruct::reference {

// Every P8-free minimal obstruction to C5-coloring, in graph6. The P6- and
// P7-free lists are the members that are additionally P6- or P7-free.
inline constexpr std::array<std::string_view, 19> p8_free = {
    "Bw",
    "GhcHKc",
    "GhdHKc",
    "GhcHKC",
    "GhCHKc",
    "LhdHGcH`ICcHcH",
    "HhDGKC`",
    "IhCGICG_g",
    "LhCHGCH`G?c@_H",
    "LhCHGcH`G?c@cH",
    "LhdHGC@`GCcHcH",
    "LhcHGCH`GCcHc@",
    "LhcHGCH`GCcHcH",
    "LhcHGcH`GCcHcH",
    "LhcHGCH`GCcH_H",
    "LhcHGcH`GCcH_H",
    "LhcHGcH`ICc@cH",
    "LhcHGcH`ICcHcH",
    "LhdHGcH`GCcH_H",
};

// Minimal obstructions free of S(2,2,1) or of S(3,1,1); the S(2,2,1)-free
// ones are entries 0, 1 and 5, the S(3,1,1)-free ones entries 0 to 4.
inline constexpr std::array<std::string_view, 6> claw_free = {
    "Bw",
    "GhdHKc",
    "GhCHKc",
    "GhcHKc",
    "GhcHKC",
    "LhdHGcH`ICcHcH",
};

inline const std::map<std::size_t, std::size_t> p6_counts = {{3, 1}, {8, 3}};
inline const std::map<std::size_t, std::size_t> p7_counts = {{3, 1}, {8, 4}, {13, 1}};
inline const std::map<std::size_t, std::size_t> p8_counts = {{3, 1}, {8, 4}, {9, 1}, {10, 1}, {13, 12}};
inline const std::map<std::size_t, std::size_t> s221_counts = {{3, 1}, {8, 1}, {13, 1}};
inline const std::map<std::size_t, std::size_t> s311_counts = {{3, 1}, {8, 4}};

} // namespace obstruct::reference
