#include "lsseq/digits.hpp"

#include <stdexcept>

namespace lsseq {

DigitString base_digits(std::uint64_t n, std::uint32_t base) {
    if (base < 2) {
        throw std::domain_error("base_digits: base must be >= 2");
    }
    DigitString d;
    d.base = base;
    if (n == 0) {
        d.digits.push_back(0);
        return d;
    }
    while (n > 0) {
        d.digits.push_back(static_cast<std::uint32_t>(n % base));
        n /= base;
    }
    return d;
}

std::uint64_t digits_value(const DigitString& d) {
    std::uint64_t value = 0;
    for (auto it = d.digits.rbegin(); it != d.digits.rend(); ++it) {
        std::uint64_t scaled = 0;
        if (__builtin_mul_overflow(value, static_cast<std::uint64_t>(d.base), &scaled) ||
            __builtin_add_overflow(scaled, static_cast<std::uint64_t>(*it), &value)) {
            throw std::overflow_error("digits_value: value exceeds 64-bit range");
        }
    }
    return value;
}

double radical_inverse(std::uint64_t n, std::uint32_t base) {
    const DigitString d = base_digits(n, base);
    const double b = static_cast<double>(base);
    double x = 0.0;
    for (auto it = d.digits.rbegin(); it != d.digits.rend(); ++it) {
        x = (x + static_cast<double>(*it)) / b;
    }
    return x;
}

}  // namespace lsseq
