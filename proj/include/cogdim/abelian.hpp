#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace cogdim {

using Int = boost::multiprecision::cpp_int;

/**
 * Finitely generated abelian group in invariant-factor form:
 * Z^rank + Z/d_1 + ... + Z/d_m with d_1 | d_2 | ... and every d_i >= 2.
 * The representation is canonical, so operator== decides isomorphism.
 */
class AbelianGroup {
public:
    AbelianGroup() = default;
    AbelianGroup(long rank, std::vector<Int> torsion);

    static AbelianGroup zero() { return AbelianGroup(); }
    static AbelianGroup free(long rank) { return AbelianGroup(rank, {}); }
    static AbelianGroup cyclic(const Int& d);  // Z/d, d >= 2 (d = 0 means Z)

    long rank() const { return rank_; }
    const std::vector<Int>& torsion() const { return torsion_; }
    bool trivial() const { return rank_ == 0 && torsion_.empty(); }

    AbelianGroup direct_sum(const AbelianGroup& other) const;

    bool operator==(const AbelianGroup& other) const = default;

    std::string to_string() const;  // "0", "Z", "Z^2 + Z/2 + Z/4", ...

private:
    long rank_ = 0;
    std::vector<Int> torsion_;  // divisibility chain, entries >= 2
};

/// Canonicalize an arbitrary multiset of torsion orders (each >= 2) into a
/// divisibility chain by repeated gcd/lcm exchanges.  No factoring needed.
std::vector<Int> canonical_torsion_chain(std::vector<Int> factors);

}  // namespace cogdim
