#pragma once

#include <stdexcept>
#include <vector>

#include "bigint.hpp"
#include "bounds.hpp"

namespace radmoore {

// Counts of the four vertex kinds at one level of the distance-preserving
// tree hanging from a central vertex: central children of central vertices
// (a), central children of non-central vertices (a'), and their non-central
// counterparts (b, b').
struct RecurrenceState {
    BigInt a, a_prime, b, b_prime;

    BigInt level_total() const { return a + a_prime + b + b_prime; }

    friend bool operator==(const RecurrenceState&, const RecurrenceState&) = default;
};

inline void require_recurrence_domain(int d) {
    if (d < 4)
        throw std::domain_error("central-vertex recurrence: degree must be greater than 3");
}

// Level 1: (d-2, 0, 2, 0).
inline RecurrenceState initial_state(int d) {
    require_recurrence_domain(d);
    return {BigInt(d - 2), BigInt(0), BigInt(2), BigInt(0)};
}

// One application of the transfer matrix
//   (d-1  d-2   0    0 )
//   ( 0    0   d-3  d-2)
//   ( 0    1    0    0 )
//   ( 0    0    2    1 )
inline RecurrenceState step(int d, const RecurrenceState& s) {
    require_recurrence_domain(d);
    RecurrenceState out;
    out.a = BigInt(d - 1) * s.a + BigInt(d - 2) * s.a_prime;
    out.a_prime = BigInt(d - 3) * s.b + BigInt(d - 2) * s.b_prime;
    out.b = s.a_prime;
    out.b_prime = BigInt(2) * s.b + s.b_prime;
    return out;
}

// Levels 1..jmax.
inline std::vector<RecurrenceState> level_states(int d, int jmax) {
    if (jmax < 1) throw std::domain_error("level_states: need at least one level");
    std::vector<RecurrenceState> out;
    out.reserve(static_cast<std::size_t>(jmax));
    out.push_back(initial_state(d));
    for (int j = 2; j <= jmax; ++j) out.push_back(step(d, out.back()));
    return out;
}

// Sum over the first k levels of a(j) + a'(j); the tree's central vertices
// excluding the root.
inline BigInt central_tree_sum(int d, int k) {
    if (k < 1) throw std::domain_error("central_tree_sum: radius must be at least 1");
    BigInt sum(0);
    RecurrenceState s = initial_state(d);
    for (int j = 1; j <= k; ++j) {
        sum += s.a + s.a_prime;
        if (j < k) s = step(d, s);
    }
    return sum;
}

// Upper bound on the number of central vertices C(d,k).  Includes the root
// central vertex, matching the tabulated values (the bare level sum counts
// the tree below the root only).
inline BigInt central_upper_bound(int d, int k) {
    if (k < 2) throw std::domain_error("central_upper_bound: radius must be at least 2");
    return BigInt(1) + central_tree_sum(d, k);
}

// At k = 2 the bound collapses to M(d,2) - 6 for every d > 3.
inline BigInt central_upper_bound_k2(int d) {
    BigInt value = central_upper_bound(d, 2);
    if (value != moore_bound(d, 2) - BigInt(6))
        throw std::logic_error("central_upper_bound_k2: identity M(d,2) - 6 failed");
    return value;
}

// Lower bound on the number of non-central vertices, the first k levels of
// b(j) + b'(j).  Complements central_upper_bound to the Moore bound.
inline BigInt noncentral_lower_bound(int d, int k) {
    if (k < 2) throw std::domain_error("noncentral_lower_bound: radius must be at least 2");
    BigInt sum(0);
    RecurrenceState s = initial_state(d);
    for (int j = 1; j <= k; ++j) {
        sum += s.b + s.b_prime;
        if (j < k) s = step(d, s);
    }
    return sum;
}

}  // namespace radmoore
