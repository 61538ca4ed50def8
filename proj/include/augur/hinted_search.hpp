#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>

namespace augur {

// Result of a search over a sorted array. `index` is the position of the
// lowest matching element when found, otherwise the insertion rank (index
// of the first element >= query). `probes` counts array accesses.
struct SearchOutcome {
    bool found = false;
    std::size_t index = 0;
    std::size_t probes = 0;
};

namespace detail {

// Lower-bound binary search on the open bracket (lo, hi): a[lo] < q <= a[hi]
// with virtual sentinels a[-1] = -inf, a[n] = +inf. Narrows until hi - lo = 1.
template <class T>
void bracket_bisect(std::span<const T> a, const T& q, std::ptrdiff_t& lo, std::ptrdiff_t& hi,
                    std::size_t& probes) {
    while (hi - lo > 1) {
        std::ptrdiff_t mid = lo + (hi - lo) / 2;
        ++probes;
        if (a[static_cast<std::size_t>(mid)] < q)
            lo = mid;
        else
            hi = mid;
    }
}

}  // namespace detail

// Classical binary search. Probes <= ceil(log2 n) + 1.
template <class T>
SearchOutcome binary_find(std::span<const T> a, const T& q) {
    if (a.empty()) throw std::invalid_argument("array must be nonempty");
    std::ptrdiff_t lo = -1;
    std::ptrdiff_t hi = static_cast<std::ptrdiff_t>(a.size());
    SearchOutcome out;
    detail::bracket_bisect(a, q, lo, hi, out.probes);
    out.index = static_cast<std::size_t>(hi);
    out.found = out.index < a.size() && !(q < a[out.index]);
    return out;
}

// Prediction-guided search: probe the hinted index, widen by doubling
// offsets 1, 2, 4, ... toward the query until bracketed, then bisect the
// bracket. Returns the same (found, index) as binary_find; probes are
// bounded by 2*ceil(log2(eta+1)) + C with eta = |hint - result index| and
// C = 4. Hints outside [0, n) are clamped, not rejected.
template <class T>
SearchOutcome hinted_find(std::span<const T> a, const T& q, std::ptrdiff_t hint) {
    if (a.empty()) throw std::invalid_argument("array must be nonempty");
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(a.size());
    if (hint < 0) hint = 0;
    if (hint >= n) hint = n - 1;

    SearchOutcome out;
    ++out.probes;
    std::ptrdiff_t lo, hi;
    if (a[static_cast<std::size_t>(hint)] < q) {
        // Rank is right of hint: find the first probed position >= q.
        lo = hint;
        hi = n;
        for (std::ptrdiff_t off = 1; hint + off < n; off *= 2) {
            ++out.probes;
            if (a[static_cast<std::size_t>(hint + off)] < q) {
                lo = hint + off;
            } else {
                hi = hint + off;
                break;
            }
        }
    } else {
        // Rank is at or left of hint: find the last probed position < q.
        lo = -1;
        hi = hint;
        for (std::ptrdiff_t off = 1; hint - off >= 0; off *= 2) {
            ++out.probes;
            if (a[static_cast<std::size_t>(hint - off)] < q) {
                lo = hint - off;
                break;
            } else {
                hi = hint - off;
            }
        }
    }
    detail::bracket_bisect(a, q, lo, hi, out.probes);
    out.index = static_cast<std::size_t>(hi);
    out.found = out.index < a.size() && !(q < a[out.index]);
    return out;
}

}  // namespace augur
