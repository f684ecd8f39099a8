#include "arcalg/chain_complex.hpp"

namespace arcalg {

void ChainComplex::validate() const {
    for (const auto& [k, mat] : d) {
        if (mat.rows != dim(k - 1) || mat.cols != dim(k))
            throw invalid_complex("differential d_" + std::to_string(k) + " has the wrong shape");
        if (const IntMat* next = diff(k + 1); next != nullptr)
            if (!is_zero(multiply(mat, *next)))
                throw invalid_complex("d_" + std::to_string(k) + " o d_" + std::to_string(k + 1) +
                                      " != 0");
    }
}

std::map<int, long> ChainComplex::homology(const Field& field) const {
    std::map<int, long> rk;
    for (const auto& [k, mat] : d) rk[k] = rank(mat, field);
    auto rank_of = [&](int k) {
        auto it = rk.find(k);
        return it == rk.end() ? 0L : it->second;
    };
    std::map<int, long> out;
    for (int k = lo; k <= hi(); ++k)
        out[k] = dim(k) - rank_of(k) - rank_of(k + 1);
    return out;
}

} // namespace arcalg
