#pragma once

// Closed-form bounds: the basis polymer size bound 2(m+d)(ad)^(2d+3) and the
// TBN distance bound n^(8 n^(7 n^2)).

#include "tbn/core.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace tbn {

using BigInt = boost::multiprecision::cpp_int;

struct TbnStats
{
    int d = 0; // distinct site names
    int m = 0; // monomer types present
    int a = 0; // most sites on one monomer type
    int n = 0; // max(d, m, a)

    static TbnStats of(const Tbn& tbn);
    static TbnStats make(int d, int m, int a);
};

/// 2(m+d)(ad)^(2d+3), exactly.
BigInt polymer_size_bound(const TbnStats& stats);

/// log10 of n^(8 n^(7 n^2)).
///
/// `value` is 8 n^(7n^2) log10(n) when that fits a double. Otherwise
/// `log_form` is set and `value` is log10 of that quantity instead. The
/// inner exponent n^(7n^2) is reported exactly when it has at most
/// `exponent_digit_budget` decimal digits.
struct DistanceBoundLog10
{
    double value = 0.0;
    bool log_form = false;
    std::string inner_exponent; // empty when over the digit budget
    std::size_t inner_exponent_digits = 0;

    friend bool operator<(const DistanceBoundLog10& x, const DistanceBoundLog10& y)
    {
        return x.log_form != y.log_form ? y.log_form : x.value < y.value;
    }
};

DistanceBoundLog10 upper_bound_log10(const TbnStats& stats, std::size_t exponent_digit_budget = 4096);

} // namespace tbn
