#pragma once

#include <gmpxx.h>

#include <cstdint>

#include <json.hpp>

namespace fibsemi {

// Integers beyond 2^53 - 1 cannot be read back exactly by JSON consumers that
// parse numbers as doubles; serialize those as decimal strings instead.
inline nlohmann::json json_number(const mpz_class& v) {
    static const mpz_class kLargestExact = (mpz_class(1) << 53) - 1;
    if (abs(v) <= kLargestExact) {
        return static_cast<std::int64_t>(v.get_si());
    }
    return v.get_str();
}

}  // namespace fibsemi
