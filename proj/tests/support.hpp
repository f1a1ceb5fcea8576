#pragma once

#include <doctest.h>

#include <cmath>
#include <random>

#include "skewq/quaternion.hpp"

namespace skewq::test {

inline constexpr Quaternion I = Quaternion::i();
inline constexpr Quaternion J = Quaternion::j();
inline constexpr Quaternion K = Quaternion::k();

inline double uniform(Rng& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

}  // namespace skewq::test

#define CHECK_QNEAR(a, b, tol)                                                     \
    do {                                                                           \
        const ::skewq::Quaternion qa_ = (a);                                       \
        const ::skewq::Quaternion qb_ = (b);                                       \
        INFO("lhs = " << qa_ << ", rhs = " << qb_);                                \
        CHECK(::skewq::distance(qa_, qb_) <= (tol));                               \
    } while (0)

#define CHECK_THROWS_KIND(expr, k)                                                 \
    do {                                                                           \
        bool thrown_ = false;                                                      \
        try {                                                                      \
            (void)(expr);                                                          \
        } catch (const ::skewq::MathError& e_) {                                   \
            thrown_ = true;                                                        \
            CHECK(e_.kind() == (k));                                               \
        }                                                                          \
        CHECK(thrown_);                                                            \
    } while (0)
