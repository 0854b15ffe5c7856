#include "tbn/bounds.hpp"

#include "tbn/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace tbn {

TbnStats TbnStats::of(const Tbn& tbn)
{
    int m = 0, a = 0;
    for (std::size_t t = 0; t < tbn.type_count(); ++t) {
        if (tbn.counts()[t] == 0)
            continue;
        ++m;
        a = std::max(a, static_cast<int>(tbn.types()[t].total_sites()));
    }
    return make(static_cast<int>(tbn.site_names().size()), m, a);
}

TbnStats TbnStats::make(int d, int m, int a)
{
    if (d < 0 || m < 0 || a < 0)
        throw InvalidArgument("TBN statistics must be non-negative");
    return TbnStats{d, m, a, std::max({d, m, a})};
}

BigInt polymer_size_bound(const TbnStats& s)
{
    if (s.d < 1 || s.m < 1 || s.a < 1)
        throw InvalidArgument("polymer size bound needs d, m, a >= 1");
    BigInt ad = BigInt{s.a} * s.d;
    return 2 * BigInt{s.m + s.d} * boost::multiprecision::pow(ad, static_cast<unsigned>(2 * s.d + 3));
}

DistanceBoundLog10 upper_bound_log10(const TbnStats& stats, std::size_t exponent_digit_budget)
{
    const int n = stats.n;
    if (n < 2)
        throw InvalidArgument("distance bound is degenerate for n < 2");
    const double e = 7.0 * n * n;
    const double log10n = std::log10(static_cast<double>(n));

    DistanceBoundLog10 out;
    // log10 of the inner exponent n^(7n^2)
    const double log10_inner = e * log10n;
    out.inner_exponent_digits = static_cast<std::size_t>(std::floor(log10_inner)) + 1;
    if (out.inner_exponent_digits <= exponent_digit_budget)
        out.inner_exponent = BigInt{boost::multiprecision::pow(BigInt{n}, static_cast<unsigned>(7 * n * n))}.str();

    const double log10_value = std::log10(8.0) + log10_inner + std::log10(log10n);
    if (log10_value < std::log10(std::numeric_limits<double>::max())) {
        out.value = 8.0 * std::pow(static_cast<double>(n), e) * log10n;
    } else {
        out.value = log10_value;
        out.log_form = true;
    }
    return out;
}

} // namespace tbn
