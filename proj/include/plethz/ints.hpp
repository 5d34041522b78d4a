#pragma once

#include <cstdint>
#include <string>

#include "plethz/errors.hpp"

namespace plethz {

using i64 = long long;
using u64 = unsigned long long;
using i128 = __int128;
using u128 = unsigned __int128;

inline u64 checked_add(u64 a, u64 b) {
    u64 r;
    if (__builtin_add_overflow(a, b, &r)) throw overflow("u64 addition overflow");
    return r;
}

inline u64 checked_mul(u64 a, u64 b) {
    u64 r;
    if (__builtin_mul_overflow(a, b, &r)) throw overflow("u64 multiplication overflow");
    return r;
}

inline i64 checked_add(i64 a, i64 b) {
    i64 r;
    if (__builtin_add_overflow(a, b, &r)) throw overflow("i64 addition overflow");
    return r;
}

inline i64 checked_mul(i64 a, i64 b) {
    i64 r;
    if (__builtin_mul_overflow(a, b, &r)) throw overflow("i64 multiplication overflow");
    return r;
}

inline i128 checked_add(i128 a, i128 b) {
    i128 r;
    if (__builtin_add_overflow(a, b, &r)) throw overflow("i128 addition overflow");
    return r;
}

inline i128 checked_mul(i128 a, i128 b) {
    i128 r;
    if (__builtin_mul_overflow(a, b, &r)) throw overflow("i128 multiplication overflow");
    return r;
}

inline u128 checked_add(u128 a, u128 b) {
    u128 r;
    if (__builtin_add_overflow(a, b, &r)) throw overflow("u128 addition overflow");
    return r;
}

inline u128 checked_mul(u128 a, u128 b) {
    u128 r;
    if (__builtin_mul_overflow(a, b, &r)) throw overflow("u128 multiplication overflow");
    return r;
}

inline std::string u128_to_string(u128 u) {
    if (u == 0) return "0";
    std::string s;
    while (u > 0) { s.push_back(char('0' + int(u % 10))); u /= 10; }
    return std::string(s.rbegin(), s.rend());
}

inline u128 parse_u128(const std::string& text) {
    if (text.empty()) throw parse_error("empty integer");
    u128 v = 0;
    for (char ch : text) {
        if (ch < '0' || ch > '9') throw parse_error("bad integer: " + text);
        v = checked_add(checked_mul(v, (u128)10), (u128)(ch - '0'));
    }
    return v;
}

// Exact rational on 64-bit ints; enough for the N_i statistics (denominators are 1 or 2).
struct Rat {
    i64 num = 0;
    i64 den = 1;

    Rat() = default;
    Rat(i64 n) : num(n), den(1) {}
    Rat(i64 n, i64 d);

    friend Rat operator+(Rat a, Rat b);
    friend Rat operator-(Rat a, Rat b);
    friend Rat operator*(Rat a, Rat b);
    friend bool operator==(const Rat& a, const Rat& b) { return a.num == b.num && a.den == b.den; }
    friend bool operator<(const Rat& a, const Rat& b);
    bool is_integer() const { return den == 1; }
    std::string str() const;
};

} // namespace plethz
