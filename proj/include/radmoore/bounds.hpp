#pragma once

#include <stdexcept>

#include "bigint.hpp"

namespace radmoore {

// Moore bound M(d,k) = 1 + d + d(d-1) + ... + d(d-1)^(k-1).
inline BigInt moore_bound(int d, int k) {
    if (d < 3) throw std::domain_error("moore_bound: degree must be at least 3");
    if (k < 1) throw std::domain_error("moore_bound: radius must be at least 1");
    BigInt total(1), term(d);
    for (int i = 0; i < k; ++i) {
        total += term;
        term *= BigInt(d - 1);
    }
    return total;
}

// Common vertex status in a Moore graph,
// s(d,k) = d (k(d-2)(d-1)^k - (d-1)^k + 1) / (d-2)^2.  The division is exact.
inline BigInt moore_status(int d, int k) {
    if (d < 3) throw std::domain_error("moore_status: unsupported degree (need d >= 3)");
    if (k < 1) throw std::domain_error("moore_status: radius must be at least 1");
    BigInt p = BigInt::power(BigInt(d - 1), static_cast<unsigned>(k));
    BigInt numerator = p * BigInt(static_cast<long long>(k) * (d - 2)) - p + BigInt(1);
    numerator *= BigInt(d);
    std::uint64_t den = static_cast<std::uint64_t>(d - 2) * static_cast<std::uint64_t>(d - 2);
    return numerator.div_exact_u64(den);
}

// Maximum number of edges from the non-apex neighbors of v that a single
// attachment vertex may absorb while keeping diameter 3.
inline int g_max(int d, int alpha) {
    if (d < 3) throw std::domain_error("g_max: degree must be at least 3");
    if (alpha < 1 || alpha > d - 1) throw std::domain_error("g_max: alpha out of [1, d-1]");
    if (2 * alpha < d)
        return static_cast<int>(static_cast<long long>(d) * (alpha - 1) / (d - 2));
    return d - alpha;
}

// Smallest alpha with alpha * g_max(d, alpha) >= d - 1, found by direct scan.
// The scan is the defining inequality, and it automatically produces the
// value that is one below the ceiling formula at d = 4.
inline int min_attach_count(int d) {
    if (d < 3) throw std::domain_error("min_attach_count: degree must be at least 3");
    for (int alpha = 1; alpha < d; ++alpha)
        if (static_cast<long long>(alpha) * g_max(d, alpha) >= d - 1) return alpha;
    return d - 1;  // unreachable: alpha = d-1 always satisfies the inequality
}

// ceil((1 + sqrt(4d-3)) / 2), evaluated in exact integer arithmetic.  This is
// the ceiling of the largest root of x^2 - x - (d-1).
inline long long attach_ceiling(long long d) {
    if (d < 3) throw std::domain_error("attach_ceiling: degree must be at least 3");
    std::uint64_t x = 4 * static_cast<std::uint64_t>(d) - 3;
    std::uint64_t r = isqrt_u64(x);
    if (r * r == x) return static_cast<long long>((1 + r) / 2);  // r is odd, the value is an integer
    return static_cast<long long>((1 + r) / 2 + 1);
}

// Lower bound on |Gamma_2(v)| in a radial Moore graph of diameter 3 with one
// central vertex: d in general, refined when v is adjacent to the center.
inline int gamma2_lower(int d, bool neighbor_of_central) {
    if (d < 3) throw std::domain_error("gamma2_lower: degree must be at least 3");
    if (!neighbor_of_central) return d;
    return d + min_attach_count(d) - 1;
}

// Per-vertex status upper bound 3d(d-1) for diameter 3.
inline long long vertex_status_upper(int d) {
    if (d < 3) throw std::domain_error("vertex_status_upper: degree must be at least 3");
    return 3LL * d * (d - 1);
}

// Sharper bound for neighbors of the unique central vertex.
inline long long central_neighbor_status_upper(int d) {
    if (d < 3) throw std::domain_error("central_neighbor_status_upper: degree must be at least 3");
    return 3LL * d * d - 3LL * d - min_attach_count(d) + 1;
}

enum class TotalStatusVariant {
    ceiling,     // 3d^4 - 3d^3 + 2d^2 - d*ceil((1+sqrt(4d-3))/2), the ceiling
                 // expression applied unconditionally
    consistent,  // same expression with the scanned attachment count, which
                 // differs at d = 4 where the ceiling overshoots; always
                 // compatible with the per-vertex bounds above
};

inline BigInt total_status_upper(int d, TotalStatusVariant variant) {
    if (d < 3) throw std::domain_error("total_status_upper: degree must be at least 3");
    long long attach = variant == TotalStatusVariant::ceiling
                           ? attach_ceiling(d)
                           : static_cast<long long>(min_attach_count(d));
    BigInt D(d);
    BigInt d2 = D * D;
    BigInt d3 = d2 * D;
    BigInt d4 = d3 * D;
    return BigInt(3) * d4 - BigInt(3) * d3 + BigInt(2) * d2 - D * BigInt(attach);
}

// All closed-form bounds for one (d, k) pair.  The diameter-3 fields
// (everything past moore_status) depend on d only and apply to k = 2.
struct BoundsReport {
    int d = 0;
    int k = 0;
    BigInt moore_bound;
    BigInt moore_status;
    long long vertex_status_upper = 0;
    long long central_neighbor_status_upper = 0;
    BigInt total_status_upper_ceiling;
    BigInt total_status_upper_consistent;
    int gamma2_lower = 0;
    int gamma2_lower_central_neighbor = 0;
    int min_attach = 0;
};

inline BoundsReport make_bounds_report(int d, int k) {
    BoundsReport r;
    r.d = d;
    r.k = k;
    r.moore_bound = moore_bound(d, k);
    r.moore_status = moore_status(d, k);
    r.vertex_status_upper = vertex_status_upper(d);
    r.central_neighbor_status_upper = central_neighbor_status_upper(d);
    r.total_status_upper_ceiling = total_status_upper(d, TotalStatusVariant::ceiling);
    r.total_status_upper_consistent = total_status_upper(d, TotalStatusVariant::consistent);
    r.gamma2_lower = gamma2_lower(d, false);
    r.gamma2_lower_central_neighbor = gamma2_lower(d, true);
    r.min_attach = min_attach_count(d);
    return r;
}

}  // namespace radmoore
