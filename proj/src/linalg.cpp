#include "arcalg/linalg.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace arcalg {

bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

Field parse_field(const std::string& text) {
    if (text == "q" || text == "Q" || text == "rational") return FieldQ{};
    std::string digits = text;
    if (digits.rfind("p:", 0) == 0) digits = digits.substr(2);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
        throw invalid_parameters("field must be 'q' or a prime number");
    std::uint64_t p = std::stoull(digits);
    if (!is_prime(p)) throw invalid_parameters("field characteristic must be prime");
    if (p >= (1ull << 31)) throw invalid_parameters("prime fields limited to p < 2^31");
    return FieldP{p};
}

std::string field_name(const Field& f) {
    if (std::holds_alternative<FieldQ>(f)) return "Q";
    return "F" + std::to_string(std::get<FieldP>(f).p);
}

namespace {

// --- field operation bundles for the sparse eliminator ---------------------

struct OpsQ {
    using T = Rational;
    T from(long long v) const { return Rational(static_cast<long>(v)); }
    bool is_unit_like(const T& v) const { return v == 1 || v == -1; }
    // factor = -(target / pivot)
    T elim_factor(const T& target, const T& pivot) const { return -(target / pivot); }
};

struct OpsP {
    std::uint64_t p;
    using T = std::uint64_t;
    T from(long long v) const {
        long long r = v % static_cast<long long>(p);
        if (r < 0) r += static_cast<long long>(p);
        return static_cast<T>(r);
    }
    bool is_unit_like(const T&) const { return true; }
    T pow(T b, std::uint64_t e) const {
        T r = 1;
        while (e) {
            if (e & 1) r = r * b % p;
            b = b * b % p;
            e >>= 1;
        }
        return r;
    }
    T elim_factor(const T& target, const T& pivot) const {
        return (p - target % p) * pow(pivot, p - 2) % p;
    }
};

template <class Ops>
long rank_impl(const IntMat& mat, const Ops& ops) {
    using T = typename Ops::T;
    using Row = std::vector<std::pair<int, T>>; // sorted by column

    // Assemble rows, summing duplicate entries.
    std::vector<std::map<int, T>> build(static_cast<size_t>(mat.rows));
    for (auto [r, c, v] : mat.entries) {
        auto& cell = build[static_cast<size_t>(r)][c];
        cell = cell + ops.from(v);
    }
    std::vector<Row> rows;
    rows.reserve(build.size());
    for (auto& m : build) {
        Row row;
        for (auto& [c, v] : m)
            if (!(v == ops.from(0))) row.emplace_back(c, std::move(v));
        if (!row.empty()) rows.push_back(std::move(row));
    }
    build.clear();
    build.shrink_to_fit();

    const size_t n_rows = rows.size();
    std::vector<char> active(n_rows, 1);
    std::vector<std::set<int>> col_rows(static_cast<size_t>(mat.cols));
    for (size_t r = 0; r < n_rows; ++r)
        for (auto& [c, v] : rows[r]) col_rows[static_cast<size_t>(c)].insert(static_cast<int>(r));

    // Lazy min-fill heap: (nnz, row).
    using HeapItem = std::pair<size_t, int>;
    std::priority_queue<HeapItem, std::vector<HeapItem>, std::greater<>> heap;
    for (size_t r = 0; r < n_rows; ++r) heap.emplace(rows[r].size(), static_cast<int>(r));

    long rk = 0;
    while (!heap.empty()) {
        auto [nnz, r] = heap.top();
        heap.pop();
        if (!active[static_cast<size_t>(r)] || rows[static_cast<size_t>(r)].empty()) continue;
        if (rows[static_cast<size_t>(r)].size() != nnz) {
            heap.emplace(rows[static_cast<size_t>(r)].size(), r);
            continue;
        }
        // Choose the pivot column: fewest other active rows, prefer unit entries.
        Row& prow = rows[static_cast<size_t>(r)];
        int best_col = -1;
        size_t best_score = SIZE_MAX;
        for (auto& [c, v] : prow) {
            size_t score = 2 * col_rows[static_cast<size_t>(c)].size() + (ops.is_unit_like(v) ? 0 : 1);
            if (score < best_score) {
                best_score = score;
                best_col = c;
            }
        }
        ++rk;
        active[static_cast<size_t>(r)] = 0;
        const T pivot_val = [&] {
            for (auto& [c, v] : prow)
                if (c == best_col) return v;
            throw structural_error("pivot entry vanished");
        }();

        auto victims = col_rows[static_cast<size_t>(best_col)]; // copy: we mutate the set
        for (int s : victims) {
            if (s == r || !active[static_cast<size_t>(s)]) continue;
            Row& srow = rows[static_cast<size_t>(s)];
            T target = ops.from(0);
            for (auto& [c, v] : srow)
                if (c == best_col) target = v;
            if (target == ops.from(0)) continue;
            T f = ops.elim_factor(target, pivot_val);
            // srow += f * prow (merge of sorted rows)
            Row merged;
            merged.reserve(srow.size() + prow.size());
            size_t i = 0, j = 0;
            while (i < srow.size() || j < prow.size()) {
                if (j == prow.size() || (i < srow.size() && srow[i].first < prow[j].first)) {
                    merged.push_back(std::move(srow[i++]));
                } else if (i == srow.size() || prow[j].first < srow[i].first) {
                    T nv = f * prow[j].second;
                    if constexpr (std::is_same_v<T, std::uint64_t>) nv %= ops.p;
                    if (!(nv == ops.from(0))) {
                        col_rows[static_cast<size_t>(prow[j].first)].insert(s);
                        merged.emplace_back(prow[j].first, std::move(nv));
                    }
                    ++j;
                } else {
                    T nv = srow[i].second + f * prow[j].second;
                    if constexpr (std::is_same_v<T, std::uint64_t>) nv %= ops.p;
                    if (nv == ops.from(0))
                        col_rows[static_cast<size_t>(srow[i].first)].erase(s);
                    else
                        merged.emplace_back(srow[i].first, std::move(nv));
                    ++i;
                    ++j;
                }
            }
            srow = std::move(merged);
            heap.emplace(srow.size(), s);
        }
        // Retire the pivot row from the column index.
        for (auto& [c, v] : prow) col_rows[static_cast<size_t>(c)].erase(r);
        prow.clear();
        prow.shrink_to_fit();
    }
    return rk;
}

} // namespace

long rank(const IntMat& mat, const Field& field) {
    if (std::holds_alternative<FieldQ>(field)) return rank_impl(mat, OpsQ{});
    return rank_impl(mat, OpsP{std::get<FieldP>(field).p});
}

IntMat multiply(const IntMat& a, const IntMat& b) {
    if (a.cols != b.rows) throw invalid_parameters("multiply: shape mismatch");
    std::vector<std::vector<std::pair<int, long long>>> b_rows(static_cast<size_t>(b.rows));
    for (auto [r, c, v] : b.entries) b_rows[static_cast<size_t>(r)].emplace_back(c, v);
    std::map<std::pair<int, int>, long long> acc;
    for (auto [r, c, v] : a.entries)
        for (auto [c2, v2] : b_rows[static_cast<size_t>(c)]) acc[{r, c2}] += v * v2;
    IntMat out(a.rows, b.cols);
    for (auto& [rc, v] : acc) out.add(rc.first, rc.second, v);
    return out;
}

bool is_zero(const IntMat& a) {
    std::map<std::pair<int, int>, long long> acc;
    for (auto [r, c, v] : a.entries) acc[{r, c}] += v;
    for (auto& [rc, v] : acc)
        if (v != 0) return false;
    return true;
}

// ---------------------------------------------------------------------------

bool QSubspace::add(QVec v) {
    v = reduce(std::move(v));
    int pivot = -1;
    for (long i = 0; i < ambient_; ++i)
        if (v[static_cast<size_t>(i)] != 0) {
            pivot = static_cast<int>(i);
            break;
        }
    if (pivot < 0) return false;
    Rational lead = v[static_cast<size_t>(pivot)];
    for (auto& x : v) x /= lead;
    // Back-substitute into existing rows.
    for (size_t r = 0; r < rows_.size(); ++r) {
        Rational c = rows_[r][static_cast<size_t>(pivot)];
        if (c != 0)
            for (long i = 0; i < ambient_; ++i)
                rows_[r][static_cast<size_t>(i)] -= c * v[static_cast<size_t>(i)];
    }
    auto pos = std::lower_bound(pivot_cols_.begin(), pivot_cols_.end(), pivot);
    size_t idx = static_cast<size_t>(pos - pivot_cols_.begin());
    pivot_cols_.insert(pos, pivot);
    rows_.insert(rows_.begin() + static_cast<long>(idx), std::move(v));
    return true;
}

QVec QSubspace::reduce(QVec v) const {
    if (static_cast<long>(v.size()) != ambient_)
        throw invalid_parameters("QSubspace::reduce: wrong ambient dimension");
    for (size_t r = 0; r < rows_.size(); ++r) {
        Rational c = v[static_cast<size_t>(pivot_cols_[r])];
        if (c != 0)
            for (long i = 0; i < ambient_; ++i)
                v[static_cast<size_t>(i)] -= c * rows_[r][static_cast<size_t>(i)];
    }
    return v;
}

bool QSubspace::contains(const QVec& v) const {
    QVec r = reduce(v);
    return std::all_of(r.begin(), r.end(), [](const Rational& x) { return x == 0; });
}

std::vector<int> QSubspace::complement() const {
    std::vector<int> out;
    size_t k = 0;
    for (long i = 0; i < ambient_; ++i) {
        if (k < pivot_cols_.size() && pivot_cols_[k] == static_cast<int>(i))
            ++k;
        else
            out.push_back(static_cast<int>(i));
    }
    return out;
}

std::vector<QVec> nullspace(const IntMat& a) {
    // Dense RREF on the columns: solve A x = 0.
    std::vector<QVec> dense(static_cast<size_t>(a.rows), QVec(static_cast<size_t>(a.cols), 0));
    for (auto [r, c, v] : a.entries)
        dense[static_cast<size_t>(r)][static_cast<size_t>(c)] += Rational(static_cast<long>(v));

    std::vector<int> pivot_of_col(static_cast<size_t>(a.cols), -1);
    long rank_rows = 0;
    for (long c = 0; c < a.cols && rank_rows < a.rows; ++c) {
        long pr = -1;
        for (long r = rank_rows; r < a.rows; ++r)
            if (dense[static_cast<size_t>(r)][static_cast<size_t>(c)] != 0) {
                pr = r;
                break;
            }
        if (pr < 0) continue;
        std::swap(dense[static_cast<size_t>(pr)], dense[static_cast<size_t>(rank_rows)]);
        QVec& row = dense[static_cast<size_t>(rank_rows)];
        Rational lead = row[static_cast<size_t>(c)];
        for (auto& x : row) x /= lead;
        for (long r = 0; r < a.rows; ++r) {
            if (r == rank_rows) continue;
            Rational f = dense[static_cast<size_t>(r)][static_cast<size_t>(c)];
            if (f != 0)
                for (long i = 0; i < a.cols; ++i)
                    dense[static_cast<size_t>(r)][static_cast<size_t>(i)] -=
                        f * row[static_cast<size_t>(i)];
        }
        pivot_of_col[static_cast<size_t>(c)] = static_cast<int>(rank_rows);
        ++rank_rows;
    }

    std::vector<QVec> basis;
    for (long c = 0; c < a.cols; ++c) {
        if (pivot_of_col[static_cast<size_t>(c)] >= 0) continue;
        QVec x(static_cast<size_t>(a.cols), 0);
        x[static_cast<size_t>(c)] = 1;
        for (long c2 = 0; c2 < a.cols; ++c2) {
            int pr = pivot_of_col[static_cast<size_t>(c2)];
            if (pr >= 0) x[static_cast<size_t>(c2)] = -dense[static_cast<size_t>(pr)][static_cast<size_t>(c)];
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

long rank_dense(const IntMat& a) {
    return a.cols - static_cast<long>(nullspace(a).size());
}

} // namespace arcalg
