#pragma once

#include <map>

#include "arcalg/linalg.hpp"

namespace arcalg {

/// A finite chain complex: spaces in a degree window [lo, hi], differentials
/// d[k] : C_k -> C_{k-1}.  validate() checks shapes and d^2 = 0.
struct ChainComplex {
    int lo = 0;
    std::vector<long> dims;      // dims[k - lo]
    std::map<int, IntMat> d;     // only nonzero differentials need be present

    int hi() const { return lo + static_cast<int>(dims.size()) - 1; }
    long dim(int k) const {
        return (k < lo || k > hi()) ? 0 : dims[static_cast<size_t>(k - lo)];
    }
    const IntMat* diff(int k) const {
        auto it = d.find(k);
        return it == d.end() ? nullptr : &it->second;
    }

    void validate() const;

    /// Homology ranks by degree: dim ker d_k - rank d_{k+1}.
    std::map<int, long> homology(const Field& field) const;
};

} // namespace arcalg
