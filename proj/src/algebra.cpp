#include "arcalg/algebra.hpp"

#include <algorithm>
#include <sstream>

#include "arcalg/errors.hpp"

namespace arcalg {

namespace {

// Surgery product of two compact (all-circle) oriented diagrams on the same
// number of points.  Stacks y above x and iterates the TQFT surgery over the
// cups of the shared middle weight, in the given order (default: ascending
// left endpoint).
std::map<OrientedCircleDiagram, long long> surgery_product_compact(
    const OrientedCircleDiagram& x, const OrientedCircleDiagram& y,
    const std::vector<int>* order = nullptr) {
    std::map<OrientedCircleDiagram, long long> out;
    if (x.cap != y.cup) return out;
    const int points = x.cup.m();

    ArcDiagram xb = cup_diagram(x.cup), xt = cap_diagram(x.cap);
    ArcDiagram yb = cup_diagram(y.cup), yt = cap_diagram(y.cap);
    if (!xb.rays.empty() || !xt.rays.empty() || !yb.rays.empty() || !yt.rays.empty())
        throw invalid_parameters("surgery product requires compact (all-circle) diagrams");

    StackDiagram stack(2, points);
    for (auto [i, j] : xb.cups) stack.add_cup(0, i, j);
    for (auto [i, j] : xt.cups) stack.add_cap(0, i, j);
    for (auto [i, j] : yb.cups) stack.add_cup(1, i, j);
    for (auto [i, j] : yt.cups) stack.add_cap(1, i, j);

    std::vector<int> cup_order(yb.cups.size());
    for (size_t k = 0; k < cup_order.size(); ++k) cup_order[k] = static_cast<int>(k);
    if (order) cup_order = *order;

    std::vector<SurgeryMove> moves;
    for (int k : cup_order) {
        auto [i, j] = yb.cups[static_cast<size_t>(k)];
        moves.push_back(surgery_at(stack, 0, i, j));
    }
    SurgerySequence seq(stack, std::move(moves));

    // Initial circle valuations read off the two middle weights.
    const StackComponents& init = seq.initial_components();
    Valuation vals(static_cast<size_t>(init.count), 0);
    for (int node = 0; node < 2 * points; ++node) {
        int c = init.comp[static_cast<size_t>(node)];
        if (c < 0) continue;
        const Weight& mid = stack.row_of(node) == 0 ? x.mid : y.mid;
        Sym expected = mid.at(stack.col_of(node));
        if (init.label(node, Frob::One) != expected) vals[static_cast<size_t>(c)] = 1;
    }
    // Consistency of the valuation with both rows is implied by orientedness.

    StateSum result = seq.run({{vals, 1}});

    const StackComponents& fin = seq.final_components();
    const StackDiagram& fd = seq.final_diagram();
    for (const auto& [v, coeff] : result) {
        std::vector<Sym> mid(static_cast<size_t>(points));
        for (int p = 1; p <= points; ++p) {
            int node = fd.node(1, p);
            auto value = static_cast<Frob>(v[static_cast<size_t>(fin.comp[static_cast<size_t>(node)])]);
            mid[static_cast<size_t>(p - 1)] = fin.label(node, value);
        }
        out[make_diagram(x.cup, Weight(std::move(mid)), y.cap)] += coeff;
    }
    return out;
}

} // namespace

struct ArcAlgebra::Tables {
    std::vector<Weight> weights;
    std::map<Weight, int> weight_idx;

    std::once_flag basis_once;
    std::vector<OrientedCircleDiagram> basis;
    std::map<OrientedCircleDiagram, int> basis_idx;
    std::vector<int> idem;

    mutable std::shared_mutex mul_mutex;
    mutable std::map<std::uint64_t, std::vector<std::pair<int, long long>>> mul_cache;
};

ArcAlgebra ArcAlgebra::H(int m) {
    if (m < 0) throw invalid_parameters("ArcAlgebra::H: m must be nonnegative");
    ArcAlgebra a(Kind::H, m, m);
    a.tables_ = std::make_shared<Tables>();
    for (const Weight& w : enumerate_weights(m, 2 * m))
        if (is_compact(w)) {
            a.tables_->weight_idx[w] = static_cast<int>(a.tables_->weights.size());
            a.tables_->weights.push_back(w);
        }
    return a;
}

ArcAlgebra ArcAlgebra::K(int n, int m) {
    if (n < 0 || m < 0 || n > m) throw invalid_parameters("ArcAlgebra::K: need 0 <= n <= m");
    ArcAlgebra a(Kind::K, n, m);
    a.tables_ = std::make_shared<Tables>();
    a.tables_->weights = enumerate_weights(n, m);
    for (size_t i = 0; i < a.tables_->weights.size(); ++i)
        a.tables_->weight_idx[a.tables_->weights[i]] = static_cast<int>(i);
    return a;
}

std::string ArcAlgebra::name() const {
    std::ostringstream os;
    if (kind_ == Kind::H)
        os << "H(" << m_ << ")";
    else
        os << "K(" << n_ << "," << m_ << ")";
    return os.str();
}

ArcAlgebra::Tables& ArcAlgebra::tab() const { return *tables_; }

const std::vector<Weight>& ArcAlgebra::weights() const { return tab().weights; }

int ArcAlgebra::weight_index(const Weight& w) const {
    auto it = tab().weight_idx.find(w);
    return it == tab().weight_idx.end() ? -1 : it->second;
}

const std::vector<OrientedCircleDiagram>& ArcAlgebra::basis() const {
    Tables& t = tab();
    std::call_once(t.basis_once, [&] {
        for (const Weight& b : t.weights)
            for (const Weight& a : t.weights)
                for (const Weight& mid : orientations_of(b, a))
                    t.basis.push_back(OrientedCircleDiagram{b, mid, a});
        for (size_t i = 0; i < t.basis.size(); ++i)
            t.basis_idx[t.basis[i]] = static_cast<int>(i);
        t.idem.resize(t.weights.size());
        for (size_t w = 0; w < t.weights.size(); ++w) {
            auto it = t.basis_idx.find({t.weights[w], t.weights[w], t.weights[w]});
            if (it == t.basis_idx.end())
                throw structural_error("idempotent diagram missing from basis");
            t.idem[w] = it->second;
        }
    });
    return t.basis;
}

int ArcAlgebra::basis_index(const OrientedCircleDiagram& d) const {
    basis();
    auto it = tab().basis_idx.find(d);
    return it == tab().basis_idx.end() ? -1 : it->second;
}

int ArcAlgebra::idempotent(const Weight& lambda) const {
    basis();
    int w = weight_index(lambda);
    if (w < 0) throw invalid_parameters("idempotent: weight not in this algebra");
    return tab().idem[static_cast<size_t>(w)];
}

std::vector<std::pair<int, long long>> ArcAlgebra::multiply_basis_ordered(
    int x, int y, const std::vector<int>& order) const {
    const auto& B = basis();
    const OrientedCircleDiagram& dx = B[static_cast<size_t>(x)];
    const OrientedCircleDiagram& dy = B[static_cast<size_t>(y)];
    std::vector<std::pair<int, long long>> out;
    if (dx.cap != dy.cup) return out;

    std::map<OrientedCircleDiagram, long long> terms;
    if (kind_ == Kind::H) {
        terms = surgery_product_compact(dx, dy, order.empty() ? nullptr : &order);
    } else {
        auto lifted = surgery_product_compact(cl_diagram(dx), cl_diagram(dy),
                                              order.empty() ? nullptr : &order);
        for (const auto& [d, c] : lifted) {
            if (mid_in_ideal(d.mid, IdealKind::ILambda, n_, m_)) continue;
            std::vector<Sym> mid;
            for (int p = m_ - n_ + 1; p <= 2 * m_ - n_; ++p) mid.push_back(d.mid.at(p));
            terms[make_diagram(dx.cup, Weight(std::move(mid)), dy.cap)] += c;
        }
    }
    for (const auto& [d, c] : terms)
        if (c != 0) out.emplace_back(basis_index(d), c);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::pair<int, long long>> ArcAlgebra::multiply_basis(int x, int y) const {
    Tables& t = tab();
    std::uint64_t key = (static_cast<std::uint64_t>(static_cast<std::uint32_t>(x)) << 32) |
                        static_cast<std::uint32_t>(y);
    {
        std::shared_lock lock(t.mul_mutex);
        auto it = t.mul_cache.find(key);
        if (it != t.mul_cache.end()) return it->second;
    }
    auto result = multiply_basis_ordered(x, y, {});
    std::unique_lock lock(t.mul_mutex);
    return t.mul_cache.emplace(key, std::move(result)).first->second;
}

AlgebraElement ArcAlgebra::multiply(const AlgebraElement& x, const AlgebraElement& y) const {
    if (x.algebra == nullptr || y.algebra == nullptr || !(*x.algebra == *this) || !(*y.algebra == *this))
        throw invalid_parameters("multiply: elements of a different algebra");
    AlgebraElement out(*this);
    for (const auto& [i, ci] : x.terms)
        for (const auto& [j, cj] : y.terms)
            for (const auto& [k, c] : multiply_basis(i, j))
                out.add(k, ci * cj * to_rational(c));
    return out;
}

std::map<int, long> ArcAlgebra::graded_dimension() const {
    std::map<int, long> out;
    for (const auto& d : basis()) ++out[d.degree()];
    return out;
}

std::map<int, long> ArcAlgebra::graded_dimension_block(const Weight& b, const Weight& a) const {
    std::map<int, long> out;
    for (const auto& d : basis())
        if (d.cup == b && d.cap == a) ++out[d.degree()];
    return out;
}

std::vector<int> ArcAlgebra::compact_subalgebra() const {
    std::vector<int> out;
    const auto& B = basis();
    for (size_t i = 0; i < B.size(); ++i)
        if (is_compact(B[i].cup) && is_compact(B[i].cap)) out.push_back(static_cast<int>(i));
    return out;
}

// ---------------------------------------------------------------------------

AlgebraElement& AlgebraElement::add(int basis_index, const Rational& c) {
    if (c == 0) return *this;
    auto [it, inserted] = terms.emplace(basis_index, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
    return *this;
}

AlgebraElement operator+(AlgebraElement x, const AlgebraElement& y) {
    for (const auto& [i, c] : y.terms) x.add(i, c);
    return x;
}

AlgebraElement operator*(const AlgebraElement& x, const AlgebraElement& y) {
    if (!x.algebra) throw invalid_parameters("multiplying an unbound element");
    return x.algebra->multiply(x, y);
}

std::string AlgebraElement::str() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [i, c] : terms) {
        if (!first) os << " + ";
        first = false;
        if (c != 1) os << c.get_str() << "*";
        os << "(" << algebra->basis()[static_cast<size_t>(i)].str() << ")";
    }
    return os.str();
}

AlgebraElement unit(const ArcAlgebra& a) {
    AlgebraElement e(a);
    for (const Weight& w : a.weights()) e.add(a.idempotent(w), 1);
    return e;
}

AlgebraElement basis_element(const ArcAlgebra& a, const OrientedCircleDiagram& d) {
    int i = a.basis_index(d);
    if (i < 0) throw invalid_parameters("basis_element: diagram not in this algebra's basis");
    AlgebraElement e(a);
    e.add(i, 1);
    return e;
}

AlgebraElement opposite_iso(const AlgebraElement& x) {
    const ArcAlgebra& a = *x.algebra;
    AlgebraElement out(a);
    for (const auto& [i, c] : x.terms)
        out.add(a.basis_index(reflect(a.basis()[static_cast<size_t>(i)])), c);
    return out;
}

AlgebraElement pd_iso(const AlgebraElement& x, const ArcAlgebra& target) {
    const ArcAlgebra& a = *x.algebra;
    if (a.kind() != ArcAlgebra::Kind::K || target.kind() != ArcAlgebra::Kind::K ||
        target.m() != a.m() || target.n() != a.m() - a.n())
        throw invalid_parameters("pd_iso: target must be K(m-n,m)");
    AlgebraElement out(target);
    for (const auto& [i, c] : x.terms) {
        int j = target.basis_index(rotate_pd(a.basis()[static_cast<size_t>(i)]));
        if (j < 0) throw structural_error("pd_iso: rotated diagram is not a basis diagram");
        out.add(j, c);
    }
    return out;
}

bool mid_in_ideal(const Weight& mid, IdealKind which, int n, int m) {
    if (mid.m() != 2 * m)
        throw invalid_parameters("mid_in_ideal: weight is not a middle weight of H_{m,2m}");
    bool left_fails = false, right_fails = false;
    for (int p = 1; p <= m - n; ++p)
        if (!mid.is_vee(p)) { left_fails = true; break; }
    for (int p = 2 * m - n + 1; p <= 2 * m; ++p)
        if (mid.is_vee(p)) { right_fails = true; break; }
    switch (which) {
        case IdealKind::I1: return left_fails;
        case IdealKind::I2: return right_fails;
        case IdealKind::ILambda: return left_fails || right_fails;
    }
    return false;
}

bool ideal_membership(const AlgebraElement& x, IdealKind which, int n, int m) {
    const ArcAlgebra& a = *x.algebra;
    if (a.kind() != ArcAlgebra::Kind::H)
        throw invalid_parameters("ideal_membership: element must live in an H algebra");
    for (const auto& [i, c] : x.terms) {
        (void)c;
        if (!mid_in_ideal(a.basis()[static_cast<size_t>(i)].mid, which, n, m)) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------

IsoReport verify_quotient_iso(QuotientIso which, int n, int m) {
    IsoReport report;

    if (which == QuotientIso::bc && 2 * n > m) {
        // H_{n,m} = 0 and I is everything: nothing to check.
        report.detail = "H(" + std::to_string(n) + "," + std::to_string(m) + ") = 0; empty statement";
        return report;
    }

    ArcAlgebra source = ArcAlgebra::K(n, m);
    ArcAlgebra target =
        which == QuotientIso::bc ? ArcAlgebra::H(m - n) : ArcAlgebra::K(n, m + n);

    std::vector<int> src = which == QuotientIso::bc
                               ? source.compact_subalgebra()
                               : [&] {
                                     std::vector<int> all(static_cast<size_t>(source.dim()));
                                     for (size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
                                     return all;
                                 }();
    std::vector<int> tgt = target.compact_subalgebra();

    auto map_weight = [&](const Weight& w) {
        return which == QuotientIso::bc ? c_weight(w) : e_weight(w);
    };
    auto mid_in_quotient_ideal = [&](const Weight& mid) {
        if (which == QuotientIso::bc) {
            // eq. (ILeft): {1..m-2n} not contained in the vee set.
            for (int p = 1; p <= m - 2 * n; ++p)
                if (!mid.is_vee(p)) return true;
            return false;
        }
        // (Jright): {m+1..m+n} not contained in the wedge set.
        for (int p = m + 1; p <= m + n; ++p)
            if (mid.is_vee(p)) return true;
        return false;
    };

    auto map_diagram = [&](const OrientedCircleDiagram& d) {
        return OrientedCircleDiagram{map_weight(d.cup), map_weight(d.mid), map_weight(d.cap)};
    };

    // Bijection onto the quotient basis, degree preserved.
    std::map<int, int> image; // target basis index -> source basis index
    for (int i : src) {
        const auto& d = source.basis()[static_cast<size_t>(i)];
        OrientedCircleDiagram md = map_diagram(d);
        int j = target.basis_index(md);
        if (j < 0) {
            report.pass = false;
            report.detail = "image of " + d.str() + " is not a basis diagram";
            return report;
        }
        if (mid_in_quotient_ideal(md.mid)) {
            report.pass = false;
            report.detail = "image of " + d.str() + " lies in the ideal";
            return report;
        }
        if (md.degree() != d.degree()) {
            report.pass = false;
            report.detail = "degree not preserved at " + d.str();
            return report;
        }
        if (!image.emplace(j, i).second) {
            report.pass = false;
            report.detail = "map not injective at " + d.str();
            return report;
        }
    }
    long quotient_dim = 0;
    for (int j : tgt)
        if (!mid_in_quotient_ideal(target.basis()[static_cast<size_t>(j)].mid)) {
            ++quotient_dim;
            if (!image.count(j)) {
                report.pass = false;
                report.detail = "quotient basis diagram " +
                                target.basis()[static_cast<size_t>(j)].str() + " not hit";
                return report;
            }
        }
    if (quotient_dim != static_cast<long>(src.size())) {
        report.pass = false;
        report.detail = "dimension mismatch";
        return report;
    }

    // Multiplicative modulo the ideal, over all source basis pairs.
    for (int i1 : src)
        for (int i2 : src) {
            ++report.checked_pairs;
            std::map<int, long long> lhs;
            for (auto [k, c] : source.multiply_basis(i1, i2)) {
                int j = target.basis_index(map_diagram(source.basis()[static_cast<size_t>(k)]));
                lhs[j] += c;
            }
            std::map<int, long long> rhs;
            int j1 = target.basis_index(map_diagram(source.basis()[static_cast<size_t>(i1)]));
            int j2 = target.basis_index(map_diagram(source.basis()[static_cast<size_t>(i2)]));
            for (auto [k, c] : target.multiply_basis(j1, j2)) {
                if (mid_in_quotient_ideal(target.basis()[static_cast<size_t>(k)].mid)) continue;
                rhs[k] += c;
            }
            if (lhs != rhs) {
                report.pass = false;
                report.detail = "products differ at pair (" +
                                source.basis()[static_cast<size_t>(i1)].str() + ", " +
                                source.basis()[static_cast<size_t>(i2)].str() + ")";
                return report;
            }
        }
    return report;
}

} // namespace arcalg
