#pragma once

#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

namespace dickson::detail {

using BigInt = boost::multiprecision::cpp_int;

/// C(m, k) over exact integers; 0 when k < 0 or k > m.
inline BigInt binomial(uint64_t m, uint64_t k)
{
    if (k > m) return 0;
    if (k > m - k) k = m - k;
    BigInt acc = 1;
    for (uint64_t i = 1; i <= k; ++i) {
        acc *= m - k + i;
        acc /= i;  // exact at every step
    }
    return acc;
}

inline uint32_t reduce_mod(const BigInt& v, uint32_t p)
{
    return static_cast<uint32_t>(v % p);
}

}  // namespace dickson::detail
