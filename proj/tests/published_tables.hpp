#pragma once

// Published values for 1 <= n, r <= 6, indexed [n-1][r-1].

#include <array>
#include <cstdint>

namespace ccn::testing {

using Table6 = std::array<std::array<std::uint64_t, 6>, 6>;

// All networks up to isomorphism.
inline constexpr Table6 kTableH{{
    {1, 1, 1, 1, 1, 1},
    {3, 6, 10, 15, 21, 28},
    {7, 44, 180, 590, 1582, 3724},
    {19, 475, 6915, 63420, 412230, 2080827},
    {47, 6874, 444722, 14072268, 265076184, 3405665412},
    {130, 126750, 43242604, 5569677210, 355906501686, 13508534834704},
}};

// Connected networks.
inline constexpr Table6 kTableK{{
    {1, 1, 1, 1, 1, 1},
    {2, 5, 9, 14, 20, 27},
    {4, 38, 170, 575, 1561, 3696},
    {9, 416, 6690, 62725, 410438, 2076725},
    {20, 6209, 436277, 14000798, 264632734, 3403484793},
    {51, 117020, 42722972, 5554560632, 355631996061, 13505066262007},
}};

// Minimal connected networks.
inline constexpr Table6 kTableM{{
    {0, 0, 0, 0, 0, 0},
    {2, 1, 2, 2, 4, 2},
    {4, 30, 128, 371, 982, 1973},
    {9, 398, 6265, 55628, 347704, 1659615},
    {20, 6169, 430048, 13558332, 250631916, 3138415822},
    {51, 116918, 42605901, 5511720691, 350077435378, 13149391543076},
}};

}  // namespace ccn::testing
