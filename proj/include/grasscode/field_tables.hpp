#pragma once

#include <cstdint>
#include <optional>

namespace grasscode {

// Monic polynomial over F_p encoded as sum coeff_i * p^i (leading monic term
// included).  For every entry, x is a primitive root of F_p[x]/(f), so the
// residue class of x generates the full multiplicative group.  Entries are the
// smallest such encoding per (p, degree); the degree-4 binary entry is
// x^4 + x + 1, the degree-8 one the familiar 0x11d.
struct PrimitiveModulus {
    std::uint32_t p;
    std::uint32_t degree;
    std::uint64_t encoding;
};

inline constexpr PrimitiveModulus kPrimitiveModuli[] = {
    // clang-format off
    {2, 1, 3ull}, {2, 2, 7ull}, {2, 3, 11ull}, {2, 4, 19ull},
    {2, 5, 37ull}, {2, 6, 67ull}, {2, 7, 131ull}, {2, 8, 285ull},
    {2, 9, 529ull}, {2, 10, 1033ull}, {2, 11, 2053ull}, {2, 12, 4179ull},
    {2, 13, 8219ull}, {2, 14, 16427ull}, {2, 15, 32771ull}, {2, 16, 65581ull},
    {2, 17, 131081ull}, {2, 18, 262183ull}, {2, 19, 524327ull}, {2, 20, 1048585ull},
    {2, 21, 2097157ull}, {2, 22, 4194307ull}, {2, 23, 8388641ull}, {2, 24, 16777243ull},
    {3, 1, 4ull}, {3, 2, 14ull}, {3, 3, 34ull}, {3, 4, 86ull},
    {3, 5, 250ull}, {3, 6, 734ull}, {3, 7, 2203ull}, {3, 8, 6590ull},
    {3, 9, 19747ull}, {3, 10, 59081ull}, {3, 11, 177163ull}, {3, 12, 531656ull},
    {3, 13, 1594330ull}, {3, 14, 4782974ull}, {3, 15, 14348923ull}, {5, 1, 7ull},
    {5, 2, 32ull}, {5, 3, 142ull}, {5, 4, 662ull}, {5, 5, 3147ull},
    {5, 6, 15632ull}, {5, 7, 78142ull}, {5, 8, 390663ull}, {5, 9, 1953163ull},
    {5, 10, 9765658ull}, {7, 1, 9ull}, {7, 2, 59ull}, {7, 3, 366ull},
    {7, 4, 2476ull}, {7, 5, 16818ull}, {7, 6, 117808ull}, {7, 7, 823587ull},
    {7, 8, 5764811ull}, {11, 1, 14ull}, {11, 2, 139ull}, {11, 3, 1346ull},
    {11, 4, 14654ull}, {11, 5, 161187ull}, {11, 6, 1771712ull}, {13, 1, 15ull},
    {13, 2, 184ull}, {13, 3, 2216ull}, {13, 4, 28745ull}, {13, 5, 371347ull},
    {13, 6, 4827006ull}
    // clang-format on
};

inline constexpr std::optional<std::uint64_t> lookup_modulus(std::uint32_t p, std::uint32_t degree) {
    for (const auto& e : kPrimitiveModuli) {
        if (e.p == p && e.degree == degree) return e.encoding;
    }
    return std::nullopt;
}

}  // namespace grasscode
