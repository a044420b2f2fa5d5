#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace plateau {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline std::string to_decimal(const BigInt& v) { return v.str(); }

inline std::string to_decimal(const BigRational& v) {
    const BigInt num = boost::multiprecision::numerator(v);
    const BigInt den = boost::multiprecision::denominator(v);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

inline BigInt ipow(const BigInt& base, std::uint64_t e) {
    BigInt result = 1;
    BigInt b = base;
    while (e != 0) {
        if (e & 1u) result *= b;
        e >>= 1;
        if (e != 0) b *= b;
    }
    return result;
}

inline BigInt ipow(std::uint64_t base, std::uint64_t e) { return ipow(BigInt(base), e); }

}  // namespace plateau
