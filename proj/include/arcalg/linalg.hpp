#pragma once

#include <cstdint>
#include <string>
#include <tuple>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "arcalg/errors.hpp"

namespace arcalg {

using Rational = mpq_class;

/// Coefficient field for homology computations: the rationals, or a prime field.
struct FieldQ {};
struct FieldP {
    std::uint64_t p;
};
using Field = std::variant<FieldQ, FieldP>;

Field parse_field(const std::string& text); // "q" | "p:<prime>" | "<prime>"
std::string field_name(const Field& f);
bool is_prime(std::uint64_t p);

/// Sparse integer matrix in triplet form.  All matrices this library builds
/// have (small) integer entries; they are interpreted in an exact field only
/// when ranks are taken.
struct IntMat {
    long rows = 0, cols = 0;
    std::vector<std::tuple<int, int, long long>> entries; // (row, col, value)

    IntMat() = default;
    IntMat(long r, long c) : rows(r), cols(c) {}
    void add(int r, int c, long long v) {
        if (v != 0) entries.emplace_back(r, c, v);
    }
    long long nnz() const { return static_cast<long long>(entries.size()); }
};

/// Exact rank over the given field (sparse fraction-aware elimination).
long rank(const IntMat& mat, const Field& field);

/// Exact integer product (entries stay well within 64 bits at this scale).
IntMat multiply(const IntMat& a, const IntMat& b);
bool is_zero(const IntMat& a);

/// Dense rational vectors and a reduced-echelon subspace, used for the small
/// quotient and resolution computations.
using QVec = std::vector<Rational>;

class QSubspace {
public:
    explicit QSubspace(long ambient) : ambient_(ambient) {}

    long ambient_dim() const { return ambient_; }
    long dim() const { return static_cast<long>(rows_.size()); }

    /// Reduce v by the current echelon basis and absorb the residue if it is
    /// nonzero.  Returns true if the dimension grew.
    bool add(QVec v);

    bool contains(const QVec& v) const;
    /// Canonical residue of v modulo this subspace (zero at all pivot columns).
    QVec reduce(QVec v) const;

    const std::vector<int>& pivots() const { return pivot_cols_; }
    /// Columns that are not pivots: canonical coordinates on the quotient.
    std::vector<int> complement() const;

private:
    long ambient_;
    std::vector<QVec> rows_;      // reduced echelon rows, sorted by pivot
    std::vector<int> pivot_cols_; // parallel to rows_
};

/// Dense rational nullspace basis of an IntMat (solutions of A x = 0),
/// used by the small resolution computations and as a test oracle.
std::vector<QVec> nullspace(const IntMat& a);

/// Dense rational rank (test oracle for the sparse path).
long rank_dense(const IntMat& a);

} // namespace arcalg
