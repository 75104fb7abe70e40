#pragma once

#include <array>
#include <cstdint>

namespace edgelaw::rmt {

// Philox4x32-10 block function (Salmon et al., SC'11).
using PhiloxCounter = std::array<std::uint32_t, 4>;
using PhiloxKey = std::array<std::uint32_t, 2>;

PhiloxCounter philox4x32(PhiloxCounter counter, PhiloxKey key);

}  // namespace edgelaw::rmt
