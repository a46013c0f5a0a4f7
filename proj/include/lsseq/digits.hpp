#pragma once

#include <cstdint>
#include <vector>

namespace lsseq {

// Little-endian digit expansion: digits[0] is the least significant digit.
// Canonical form keeps no superfluous leading zeros; zero is the single
// digit string {0}.
struct DigitString {
    std::vector<std::uint32_t> digits;
    std::uint32_t base = 2;

    friend bool operator==(const DigitString&, const DigitString&) = default;
};

// Digits of n in base b >= 2 (loops on the quotient until it vanishes, so
// no log-based digit-count preallocation is involved).
DigitString base_digits(std::uint64_t n, std::uint32_t base);

// Inverse of base_digits; used by round-trip checks. Overflow-checked.
std::uint64_t digits_value(const DigitString& d);

// Radical inverse phi_b(n) = sum a_i b^{-i-1}, evaluated most significant
// fraction digit last (Horner from the top digit) for reproducibility.
double radical_inverse(std::uint64_t n, std::uint32_t base);

}  // namespace lsseq
