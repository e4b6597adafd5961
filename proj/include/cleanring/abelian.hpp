#pragma once

#include <string>
#include <vector>

#include "cleanring/ntheory.hpp"

namespace cleanring {

/// Finite abelian group in invariant-factor form: each factor divides the
/// next, all factors >= 2. The trivial group has no factors, order 1 and
/// exponent 1.
class AbelianGroup {
public:
    /// Canonicalize an arbitrary cyclic decomposition ⊕ C_orders[i].
    /// Entries equal to 1 are dropped; rejects entries <= 0.
    static AbelianGroup normalize(const std::vector<Int>& orders);

    /// Parse the CLI syntax "a,b,c" (⊕ C_a ⊕ C_b ⊕ C_c) and normalize.
    static AbelianGroup parse(const std::string& text);

    const std::vector<Int>& invariant_factors() const { return factors_; }
    Int order() const { return order_; }
    Int exponent() const { return exponent_; }
    bool is_trivial() const { return factors_.empty(); }
    bool is_cyclic() const { return factors_.size() <= 1; }

    /// Number of elements g with g^e = identity, i.e. prod_i gcd(e, f_i).
    Int order_dividing_count(Int e) const;

    /// Number of elements of exact order d (Moebius inversion over e | d).
    Int exact_order_count(Int d) const;

    /// mu(d): number of cyclic subgroups of order d. Exact-order count
    /// divided by phi(d); the division is checked, not rounded.
    Int cyclic_subgroup_count(Int d) const;

    /// True iff the q-part of the group is cyclic of order s and every
    /// remaining invariant-factor part is a power of the prime qq, i.e. the
    /// group is C_s ⊕ H with H a qq-group.
    bool cyclic_part_with_complement(Int q, Int s, Int qq) const;

    /// Invariant factors joined by commas ("2,12"); "1" for the trivial group.
    std::string to_string() const;

    bool operator==(const AbelianGroup&) const = default;

private:
    std::vector<Int> factors_;
    Int order_ = 1;
    Int exponent_ = 1;
};

}  // namespace cleanring
