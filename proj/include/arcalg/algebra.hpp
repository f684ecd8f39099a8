#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "arcalg/tqft.hpp"

namespace arcalg {

using Rational = mpq_class;

/// gmp has no long long constructor; on this platform long is 64-bit.
inline Rational to_rational(long long v) { return Rational(static_cast<long>(v)); }

/// Formal sum of basis diagrams of one algebra; no zero coefficients stored.
struct AlgebraElement;

/// The graded arc algebras.  Kind H is the all-circle algebra H_{m,2m} on 2m
/// points (weights = compact weights of Lambda_{m,2m}); kind K is the extended
/// algebra K_{n,m} whose multiplication routes through H_{m,2m} via the
/// closure map and the two-sided ideal I_{Lambda_{n,m}}.
///
/// Instances are immutable after construction.  Basis enumeration is lazy and
/// deterministic; the product table is memoized behind an internal lock, so
/// multiplication may be called concurrently.
class ArcAlgebra {
public:
    enum class Kind { H, K };

    static ArcAlgebra H(int m);
    static ArcAlgebra K(int n, int m);

    Kind kind() const { return kind_; }
    int n() const { return n_; }
    int m() const { return m_; }
    /// Number of points of the underlying diagrams (m for kind K, 2m for kind H).
    int points() const { return kind_ == Kind::H ? 2 * m_ : m_; }
    std::string name() const;

    bool operator==(const ArcAlgebra& o) const { return kind_ == o.kind_ && n_ == o.n_ && m_ == o.m_; }

    /// The weight index set Lambda (compact weights for kind H), lexicographic.
    const std::vector<Weight>& weights() const;
    int weight_index(const Weight& w) const;

    /// Full basis: for every ordered pair (b,a) of weights, all orientations,
    /// grouped by (b,a) and sorted by (degree, lex) inside each block.
    const std::vector<OrientedCircleDiagram>& basis() const;
    long dim() const { return static_cast<long>(basis().size()); }
    int basis_index(const OrientedCircleDiagram& d) const; // -1 if absent
    int idempotent(const Weight& lambda) const;            // basis index of e_lambda

    /// Structure constants x*y as a sparse vector of (basis index, coefficient).
    /// Coefficients are nonnegative integers.  Memoized.
    std::vector<std::pair<int, long long>> multiply_basis(int x, int y) const;

    /// Same product with the surgery order permuted (for order-independence
    /// tests); not memoized.
    std::vector<std::pair<int, long long>> multiply_basis_ordered(int x, int y,
                                                                  const std::vector<int>& order) const;

    AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y) const;

    std::map<int, long> graded_dimension() const;
    std::map<int, long> graded_dimension_block(const Weight& b, const Weight& a) const;

    /// Indices of basis diagrams whose cup and cap weights are both compact;
    /// for kind K these span the compact subalgebra H_{n,m}.
    std::vector<int> compact_subalgebra() const;

private:
    ArcAlgebra(Kind k, int n, int m) : kind_(k), n_(n), m_(m) {}

    Kind kind_;
    int n_, m_;

    struct Tables;
    std::shared_ptr<Tables> tables_; // lazily filled, shared across copies
    Tables& tab() const;
};

struct AlgebraElement {
    const ArcAlgebra* algebra = nullptr;
    std::map<int, Rational> terms; // basis index -> nonzero coefficient

    AlgebraElement() = default;
    explicit AlgebraElement(const ArcAlgebra& a) : algebra(&a) {}

    bool is_zero() const { return terms.empty(); }
    AlgebraElement& add(int basis_index, const Rational& c);
    friend AlgebraElement operator+(AlgebraElement x, const AlgebraElement& y);
    friend AlgebraElement operator*(const AlgebraElement& x, const AlgebraElement& y);
    bool operator==(const AlgebraElement& o) const { return terms == o.terms; }

    std::string str() const;
};

AlgebraElement unit(const ArcAlgebra& a);
AlgebraElement basis_element(const ArcAlgebra& a, const OrientedCircleDiagram& d);

/// Reflection anti-automorphism of K(n,m) (or H): basis diagram -> its
/// reflection; phi(xy) = phi(y) phi(x).
AlgebraElement opposite_iso(const AlgebraElement& x);

/// Rotation by pi, an anti-multiplicative degree-preserving bijection
/// K(n,m) -> K(m-n,m).
AlgebraElement pd_iso(const AlgebraElement& x, const ArcAlgebra& target);

enum class IdealKind { I1, I2, ILambda };

/// Does a middle weight of H_{m,2m} satisfy the defining condition of the
/// ideal (parameters (n,m): I1 fails {1..m-n} in vee-set, I2 fails
/// {2m-n+1..2m} in wedge-set, ILambda = I1 or I2)?
bool mid_in_ideal(const Weight& mid, IdealKind which, int n, int m);

/// True iff every term of x (an element of H_{m,2m}) has its middle weight in
/// the stated ideal.
bool ideal_membership(const AlgebraElement& x, IdealKind which, int n, int m);

/// Report of a machine-checked algebra-isomorphism verification.
struct IsoReport {
    bool pass = true;
    std::string detail; // first counterexample when failing
    long checked_pairs = 0;
};

enum class QuotientIso { bc, be };

/// Check that bc : H_{n,m} -> H_{m-n,2(m-n)}/I  (requires 2n <= m; empty
/// statement otherwise) resp. be : K_{n,m} -> H_{n,m+n}/J is a degree-
/// preserving bijection onto the quotient basis and multiplicative modulo the
/// ideal, over all basis pairs.
IsoReport verify_quotient_iso(QuotientIso which, int n, int m);

} // namespace arcalg
