#pragma once

#include <array>
#include <cstdint>

// Printed prefixes of the reference sequences, used as golden data.
namespace simseq::published {

inline constexpr std::array<std::uint64_t, 19> kMoserDeBruijn = {
    1, 4, 5, 16, 17, 20, 21, 64, 65, 68, 69, 80, 81, 84, 85, 256, 257, 260, 261};

/// ((2n-1)!! + sign) / 2 for n = 1..10.
inline constexpr std::array<std::uint64_t, 10> kDoubleFactorialHalves = {
    1, 2, 7, 52, 473, 5198, 67567, 1013512, 17229713, 327364538};

/// Val2 run, seed 3.
inline constexpr std::array<std::uint64_t, 20> kVal2Seed3 = {
    3, 6, 7, 12, 13, 14, 15, 24, 25, 26, 27, 28, 29, 30, 31, 48, 49, 50, 51, 52};

/// BitParity run, seed 2.
inline constexpr std::array<std::uint64_t, 20> kParitySeed2 = {
    2, 4, 5, 7, 9, 10, 11, 13, 15, 17, 19, 20, 21, 22, 23, 25, 27, 29, 31, 33};

/// BitParity run, seed 4.
inline constexpr std::array<std::uint64_t, 20> kParitySeed4 = {
    4, 7, 9, 11, 12, 15, 16, 19, 20, 23, 25, 27, 28, 31, 33, 35, 36, 39, 41, 43};

/// Primality run, seed 4.
inline constexpr std::array<std::uint64_t, 21> kPrimeSeed4 = {
    4, 5, 7, 8, 11, 12, 13, 14, 15, 16, 17, 18, 19, 20, 21, 22, 23, 24, 29, 30, 32};

/// Omega run from index 2, seed 3.
inline constexpr std::array<std::uint64_t, 19> kOmegaFrom2Seed3 = {
    3, 5, 7, 8, 10, 11, 13, 16, 18, 19, 20, 23, 24, 26, 27, 29, 33, 37, 38};

/// psi(93..97) for k = 23, N = 112.
inline constexpr std::array<std::uint64_t, 5> kPsiK23N112 = {112, 115, 116,
                                                             119, 121};

}  // namespace simseq::published
