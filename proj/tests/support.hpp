#ifndef SKEWLOG_TESTS_SUPPORT_HPP
#define SKEWLOG_TESTS_SUPPORT_HPP

#include "doctest.h"

#include <cmath>
#include <iomanip>

// |a - b| <= tol with both values shown on failure.
#define CHECK_CLOSE(a, b, tol)                                                                                     \
    do {                                                                                                           \
        const double check_close_a_ = (a);                                                                         \
        const double check_close_b_ = (b);                                                                         \
        INFO(std::setprecision(17) << #a " = " << check_close_a_ << ", " #b " = " << check_close_b_ << ", diff = "                          \
                      << std::fabs(check_close_a_ - check_close_b_));                                             \
        CHECK(std::fabs(check_close_a_ - check_close_b_) <= (tol));                                                \
    } while (0)

#endif
