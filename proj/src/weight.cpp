#include "arcalg/weight.hpp"

#include <algorithm>

namespace arcalg {

Weight Weight::parse(std::string_view text) {
    std::vector<Sym> syms;
    syms.reserve(text.size());
    for (char c : text) {
        switch (c) {
            case 'v': syms.push_back(Sym::Vee); break;
            case '^': syms.push_back(Sym::Wedge); break;
            default: throw invalid_parameters("weight symbols must be 'v' or '^'");
        }
    }
    return Weight(std::move(syms));
}

int Weight::n() const {
    return static_cast<int>(std::count(syms_.begin(), syms_.end(), Sym::Vee));
}

std::vector<int> Weight::vee_positions() const {
    std::vector<int> out;
    for (int p = 1; p <= m(); ++p)
        if (is_vee(p)) out.push_back(p);
    return out;
}

std::string Weight::str() const {
    std::string s;
    s.reserve(syms_.size());
    for (Sym sym : syms_) s.push_back(sym == Sym::Vee ? 'v' : '^');
    return s;
}

std::vector<Weight> enumerate_weights(int n, int m) {
    if (n < 0 || m < 0 || n > m)
        throw invalid_parameters("enumerate_weights: need 0 <= n <= m");
    std::vector<Weight> out;
    std::vector<Sym> word(static_cast<size_t>(m), Sym::Wedge);
    // Recursion in symbol order (Vee first) yields lexicographic output.
    auto rec = [&](auto&& self, int pos, int left) -> void {
        if (pos > m) {
            if (left == 0) out.emplace_back(word);
            return;
        }
        if (m - pos + 1 < left) return;
        if (left > 0) {
            word[static_cast<size_t>(pos - 1)] = Sym::Vee;
            self(self, pos + 1, left - 1);
        }
        word[static_cast<size_t>(pos - 1)] = Sym::Wedge;
        self(self, pos + 1, left);
    };
    rec(rec, 1, n);
    return out;
}

std::vector<std::pair<int, int>> good_points(const Weight& w) {
    std::vector<std::pair<int, int>> matched;
    std::vector<int> open;
    for (int p = 1; p <= w.m(); ++p) {
        if (w.is_vee(p)) {
            open.push_back(p);
        } else if (!open.empty()) {
            matched.emplace_back(open.back(), p);
            open.pop_back();
        }
    }
    std::sort(matched.begin(), matched.end());
    return matched;
}

std::vector<int> bad_points(const Weight& w) {
    auto good = good_points(w);
    std::vector<int> out;
    for (int p : w.vee_positions()) {
        bool is_good = std::any_of(good.begin(), good.end(),
                                   [p](const auto& pr) { return pr.first == p; });
        if (!is_good) out.push_back(p);
    }
    return out;
}

bool is_compact(const Weight& w) {
    return static_cast<int>(good_points(w).size()) == w.n();
}

bool bruhat_leq(const Weight& lambda, const Weight& mu) {
    if (lambda.m() != mu.m() || lambda.n() != mu.n())
        throw invalid_parameters("bruhat_leq: weights must have the same type (n,m)");
    auto a = lambda.vee_positions();
    auto b = mu.vee_positions();
    for (size_t k = 0; k < a.size(); ++k)
        if (a[k] > b[k]) return false;
    return true;
}

Weight max_weight(const Weight& lambda) {
    const int m = lambda.m();
    auto good = good_points(lambda);
    std::vector<Sym> syms(static_cast<size_t>(m), Sym::Wedge);
    std::vector<bool> covered(static_cast<size_t>(m + 1), false);
    for (auto [c, cw] : good) {
        syms[static_cast<size_t>(cw - 1)] = Sym::Vee;
        covered[static_cast<size_t>(c)] = covered[static_cast<size_t>(cw)] = true;
    }
    // Rays: the rightmost n - #cups of them carry the remaining Vee's.
    std::vector<int> rays;
    for (int p = 1; p <= m; ++p)
        if (!covered[static_cast<size_t>(p)]) rays.push_back(p);
    int need = lambda.n() - static_cast<int>(good.size());
    for (int i = 0; i < need; ++i)
        syms[static_cast<size_t>(rays[rays.size() - 1 - static_cast<size_t>(i)] - 1)] = Sym::Vee;
    return Weight(std::move(syms));
}

Weight cl_weight(const Weight& lambda) {
    const int n = lambda.n(), m = lambda.m();
    std::vector<Sym> syms;
    syms.reserve(static_cast<size_t>(2 * m));
    syms.insert(syms.end(), static_cast<size_t>(m - n), Sym::Vee);
    for (int p = 1; p <= m; ++p) syms.push_back(lambda.at(p));
    syms.insert(syms.end(), static_cast<size_t>(n), Sym::Wedge);
    return Weight(std::move(syms));
}

Weight c_weight(const Weight& lambda) {
    const int n = lambda.n(), m = lambda.m();
    if (2 * n > m) throw invalid_parameters("c_weight: requires 2n <= m");
    std::vector<Sym> syms;
    syms.reserve(static_cast<size_t>(2 * (m - n)));
    syms.insert(syms.end(), static_cast<size_t>(m - 2 * n), Sym::Vee);
    for (int p = 1; p <= m; ++p) syms.push_back(lambda.at(p));
    return Weight(std::move(syms));
}

Weight e_weight(const Weight& lambda) {
    const int n = lambda.n(), m = lambda.m();
    std::vector<Sym> syms;
    syms.reserve(static_cast<size_t>(m + n));
    for (int p = 1; p <= m; ++p) syms.push_back(lambda.at(p));
    syms.insert(syms.end(), static_cast<size_t>(n), Sym::Wedge);
    return Weight(std::move(syms));
}

Weight rotate_pd(const Weight& lambda) {
    const int m = lambda.m();
    std::vector<Sym> syms(static_cast<size_t>(m));
    for (int p = 1; p <= m; ++p)
        syms[static_cast<size_t>(p - 1)] = flip(lambda.at(m + 1 - p));
    return Weight(std::move(syms));
}

} // namespace arcalg
