#include "cogdim/abelian.hpp"

#include <algorithm>

#include "cogdim/errors.hpp"

namespace cogdim {

std::vector<Int> canonical_torsion_chain(std::vector<Int> factors) {
    for (Int& d : factors) {
        if (d < 0) d = -d;
        if (d == 0) fail(ErrorKind::Internal, "zero torsion factor");
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < factors.size(); ++i) {
            for (std::size_t j = i + 1; j < factors.size(); ++j) {
                if (factors[j] % factors[i] == 0) continue;
                Int g = gcd(factors[i], factors[j]);
                Int l = (factors[i] / g) * factors[j];
                factors[i] = g;
                factors[j] = l;
                changed = true;
            }
        }
    }
    std::sort(factors.begin(), factors.end());
    return factors;
}

AbelianGroup::AbelianGroup(long rank, std::vector<Int> torsion) : rank_(rank) {
    if (rank < 0) fail(ErrorKind::Internal, "negative rank");
    torsion = canonical_torsion_chain(std::move(torsion));
    for (Int& d : torsion)
        if (d > 1) torsion_.push_back(std::move(d));
}

AbelianGroup AbelianGroup::cyclic(const Int& d) {
    if (d == 0) return free(1);
    Int a = d < 0 ? Int(-d) : d;
    if (a == 1) return zero();
    return AbelianGroup(0, {a});
}

AbelianGroup AbelianGroup::direct_sum(const AbelianGroup& other) const {
    std::vector<Int> t = torsion_;
    t.insert(t.end(), other.torsion_.begin(), other.torsion_.end());
    return AbelianGroup(rank_ + other.rank_, std::move(t));
}

std::string AbelianGroup::to_string() const {
    if (trivial()) return "0";
    std::string s;
    if (rank_ == 1)
        s = "Z";
    else if (rank_ > 1)
        s = "Z^" + std::to_string(rank_);
    for (const Int& d : torsion_) {
        if (!s.empty()) s += " + ";
        s += "Z/" + d.str();
    }
    return s;
}

}  // namespace cogdim
