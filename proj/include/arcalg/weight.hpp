#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "arcalg/errors.hpp"

namespace arcalg {

/// One symbol of a weight.  Vee ('v') sorts before Wedge ('^'), which fixes the
/// lexicographic order used for all deterministic enumerations.
enum class Sym : std::uint8_t { Vee = 0, Wedge = 1 };

inline Sym flip(Sym s) { return s == Sym::Vee ? Sym::Wedge : Sym::Vee; }

/// A weight of type (n,m): a word of m symbols with exactly n Vee's.
/// Positions are 1-based, left to right.  Weights are immutable values and
/// totally ordered (lexicographic, Vee < Wedge), so they work as map keys.
class Weight {
public:
    Weight() = default;
    explicit Weight(std::vector<Sym> syms) : syms_(std::move(syms)) {}

    /// Parse from the text format over {v, ^}, e.g. "v^" for Vee Wedge.
    static Weight parse(std::string_view text);

    int m() const { return static_cast<int>(syms_.size()); }
    int n() const;

    Sym at(int pos) const { return syms_.at(static_cast<size_t>(pos - 1)); }
    bool is_vee(int pos) const { return at(pos) == Sym::Vee; }

    /// 1-based positions of the Vee symbols, increasing.
    std::vector<int> vee_positions() const;

    std::string str() const;

    auto operator<=>(const Weight&) const = default;

private:
    std::vector<Sym> syms_;
};

/// All weights of type (n,m), lexicographically sorted (Vee < Wedge).
std::vector<Weight> enumerate_weights(int n, int m);

/// Good points of a weight with their partners: pairs (c, c_wedge) where c is
/// a good Vee position and c_wedge the minimal balanced Wedge to its right.
/// Identical to matching 'v' against '^' in a left-to-right bracket scan.
std::vector<std::pair<int, int>> good_points(const Weight& w);

/// Bad points: the Vee positions that are not good.
std::vector<int> bad_points(const Weight& w);

/// True iff every Vee position is good (the weight's diagrams have no
/// rays coming from Vee's; "compact" in the sense of the compact subalgebra).
bool is_compact(const Weight& w);

/// Bruhat order: lambda <= mu iff the k-th smallest Vee position of lambda is
/// <= the k-th smallest Vee position of mu for every k.  One moves up by
/// pushing Vee's to the right; whenever a circle diagram is oriented, its
/// boundary weights are <= its middle weight.
bool bruhat_leq(const Weight& lambda, const Weight& mu);

/// The unique Bruhat-maximal weight orienting the (lambda, lambda) circle
/// diagram: Vee on the right endpoint of every cup, and on the rightmost
/// rays so that the count comes out to n.
Weight max_weight(const Weight& lambda);

/// Closure padding Lambda_{n,m} -> Lambda_{m,2m}: m-n Vee's on the left,
/// n Wedge's on the right.
Weight cl_weight(const Weight& lambda);

/// c-padding Lambda_{n,m} -> Lambda_{m-n,2(m-n)} (requires 2n <= m):
/// m-2n Vee's on the left.
Weight c_weight(const Weight& lambda);

/// e-padding Lambda_{n,m} -> Lambda_{n,m+n}: n Wedge's on the right.
Weight e_weight(const Weight& lambda);

/// Rotation by pi: position a -> m+1-a with Vee and Wedge swapped;
/// lands in Lambda_{m-n,m}.
Weight rotate_pd(const Weight& lambda);

} // namespace arcalg
