#include "cogdim/snf.hpp"

#include <algorithm>
#include <queue>
#include <tuple>

#include "cogdim/errors.hpp"

namespace cogdim {

void SparseIntMatrix::add(long r, long c, Int v) {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        fail(ErrorKind::Internal, "matrix entry out of range");
    if (v != 0) triplets_.push_back({r, c, std::move(v)});
}

std::vector<Int> SnfResult::nontrivial_factors() const {
    std::vector<Int> out;
    for (const Int& d : factors)
        if (d > 1) out.push_back(d);
    return out;
}

namespace {

using Entry = std::pair<int32_t, Int>;  // (col, value); rows kept sorted by col

// g = gcd(a,b) = x*a + y*b with g > 0 (a, b not both zero)
void xgcd(const Int& a, const Int& b, Int& g, Int& x, Int& y) {
    Int old_r = a, r = b, old_x = 1, xx = 0, old_y = 0, yy = 1;
    while (r != 0) {
        Int q = old_r / r;
        Int t = old_r - q * r; old_r = r; r = t;
        t = old_x - q * xx; old_x = xx; xx = t;
        t = old_y - q * yy; old_y = yy; yy = t;
    }
    if (old_r < 0) { old_r = -old_r; old_x = -old_x; old_y = -old_y; }
    g = old_r; x = old_x; y = old_y;
}

class Eliminator {
public:
    Eliminator(const SparseIntMatrix& m, bool transforms)
        : nrows_(m.rows()), ncols_(m.cols()), with_t_(transforms) {
        rows_.resize(nrows_);
        row_nnz_.assign(nrows_, 0);
        col_nnz_.assign(ncols_, 0);
        col_rows_.resize(ncols_);
        row_done_.assign(nrows_, false);
        col_done_.assign(ncols_, false);

        std::vector<std::vector<Entry>> acc(nrows_);
        for (const auto& t : m.triplets()) acc[t.r].push_back({(int32_t)t.c, t.v});
        for (long r = 0; r < nrows_; ++r) {
            auto& v = acc[r];
            std::sort(v.begin(), v.end(),
                      [](const Entry& a, const Entry& b) { return a.first < b.first; });
            std::vector<Entry> merged;
            for (auto& e : v) {
                if (!merged.empty() && merged.back().first == e.first)
                    merged.back().second += e.second;
                else
                    merged.push_back(std::move(e));
            }
            std::erase_if(merged, [](const Entry& e) { return e.second == 0; });
            set_row(r, std::move(merged));
        }
        if (with_t_) {
            U_.assign(nrows_, std::vector<Int>(nrows_, 0));
            V_.assign(ncols_, std::vector<Int>(ncols_, 0));
            for (long i = 0; i < nrows_; ++i) U_[i][i] = 1;
            for (long j = 0; j < ncols_; ++j) V_[j][j] = 1;
        }
    }

    SnfResult run() {
        for (long c = 0; c < ncols_; ++c) push_col(c);
        std::vector<std::pair<long, long>> pivots;
        while (true) {
            auto pv = select_pivot();
            if (!pv) break;
            auto [r, c] = *pv;
            reduce_pivot(r, c);
            row_done_[r] = true;
            col_done_[c] = true;
            pivots.push_back({r, c});
            if (!with_t_) {
                pivot_values_.push_back(*row_entry(r, c));
                set_row(r, {});
            }
        }
        return finish(pivots);
    }

private:
    long nrows_, ncols_;
    bool with_t_;
    std::vector<std::vector<Entry>> rows_;
    std::vector<long> row_nnz_, col_nnz_;
    std::vector<std::vector<int32_t>> col_rows_;  // may hold stale row ids
    std::vector<bool> row_done_, col_done_;
    std::vector<Int> pivot_values_;
    DenseIntMatrix U_, V_;

    using HeapItem = std::pair<long, long>;  // (col_nnz at push time, col)
    std::priority_queue<HeapItem, std::vector<HeapItem>, std::greater<HeapItem>> heap_;
    std::vector<long> deferred_;  // columns with no unit entry, retried last

    void push_col(long c) {
        if (!col_done_[c] && col_nnz_[c] > 0) heap_.push({col_nnz_[c], c});
    }

    const Int* row_entry(long r, long c) const {
        const auto& row = rows_[r];
        auto it = std::lower_bound(row.begin(), row.end(), c,
                                   [](const Entry& e, long col) { return e.first < col; });
        if (it != row.end() && it->first == c) return &it->second;
        return nullptr;
    }

    void set_row(long r, std::vector<Entry> next) {
        auto& cur = rows_[r];
        std::size_t i = 0, j = 0;
        while (i < cur.size() || j < next.size()) {
            int32_t ca = i < cur.size() ? cur[i].first : INT32_MAX;
            int32_t cb = j < next.size() ? next[j].first : INT32_MAX;
            if (ca < cb) {
                --col_nnz_[ca];
                ++i;
            } else if (cb < ca) {
                ++col_nnz_[cb];
                col_rows_[cb].push_back((int32_t)r);
                push_col(cb);
                ++j;
            } else {
                ++i;
                ++j;
            }
        }
        cur = std::move(next);
        row_nnz_[r] = (long)cur.size();
    }

    // rows currently holding an entry in column c (compacts the index)
    std::vector<int32_t> live_rows(long c) {
        auto& lst = col_rows_[c];
        std::sort(lst.begin(), lst.end());
        lst.erase(std::unique(lst.begin(), lst.end()), lst.end());
        std::vector<int32_t> keep;
        keep.reserve(lst.size());
        for (int32_t r : lst)
            if (row_entry(r, c)) keep.push_back(r);
        lst = keep;
        return keep;
    }

    std::optional<std::pair<long, long>> select_pivot() {
        while (!heap_.empty()) {
            auto [score, c] = heap_.top();
            heap_.pop();
            if (col_done_[c] || col_nnz_[c] == 0) continue;
            if (score != col_nnz_[c]) {
                push_col(c);
                continue;
            }
            long best_row = -1, best_nnz = 0;
            for (int32_t r : live_rows(c)) {
                if (row_done_[r]) continue;
                const Int* v = row_entry(r, c);
                if (*v == 1 || *v == -1) {
                    if (best_row < 0 || row_nnz_[r] < best_nnz) {
                        best_row = r;
                        best_nnz = row_nnz_[r];
                    }
                }
            }
            if (best_row >= 0) return std::make_pair(best_row, c);
            deferred_.push_back(c);
        }
        // no unit entry anywhere: pick the smallest-magnitude entry
        long br = -1, bc = -1;
        Int bv = 0;
        std::vector<long> defer;
        defer.swap(deferred_);
        for (long c : defer) {
            if (col_done_[c] || col_nnz_[c] == 0) continue;
            for (int32_t r : live_rows(c)) {
                if (row_done_[r]) continue;
                Int a = abs(*row_entry(r, c));
                if (br < 0 || a < bv ||
                    (a == bv && row_nnz_[r] * col_nnz_[c] < row_nnz_[br] * col_nnz_[bc])) {
                    br = r;
                    bc = c;
                    bv = a;
                }
            }
        }
        if (br < 0) return std::nullopt;
        for (long c : defer)
            if (c != bc) push_col(c);
        return std::make_pair(br, bc);
    }

    // row[r] += q * row[src]
    void row_axpy(long r, long src, const Int& q) {
        std::vector<Entry> out;
        merge_rows(rows_[r], rows_[src], Int(1), q, out);
        set_row(r, std::move(out));
        if (with_t_)
            for (long j = 0; j < nrows_; ++j) U_[r][j] += q * U_[src][j];
    }

    // (row[a], row[b]) <- (x*row[a] + y*row[b], u*row[a] + w*row[b]), det +-1
    void row_combine(long a, long b, const Int& x, const Int& y, const Int& u, const Int& w) {
        std::vector<Entry> ra, rb;
        merge_rows(rows_[a], rows_[b], x, y, ra);
        merge_rows(rows_[a], rows_[b], u, w, rb);
        set_row(a, std::move(ra));
        set_row(b, std::move(rb));
        if (with_t_) {
            for (long j = 0; j < nrows_; ++j) {
                Int na = x * U_[a][j] + y * U_[b][j];
                Int nb = u * U_[a][j] + w * U_[b][j];
                U_[a][j] = std::move(na);
                U_[b][j] = std::move(nb);
            }
        }
    }

    // col[c] += q * col[src]
    void col_axpy(long c, long src, const Int& q) {
        for (int32_t r : live_rows(src)) {
            Int v = *row_entry(r, src) * q;
            add_to_entry(r, c, v);
        }
        if (with_t_)
            for (long i = 0; i < ncols_; ++i) V_[i][c] += q * V_[i][src];
    }

    // (col[a], col[b]) <- (x*col[a] + y*col[b], u*col[a] + w*col[b]), det +-1
    void col_combine(long a, long b, const Int& x, const Int& y, const Int& u, const Int& w) {
        std::vector<int32_t> rs = live_rows(a);
        for (int32_t r : live_rows(b)) rs.push_back(r);
        std::sort(rs.begin(), rs.end());
        rs.erase(std::unique(rs.begin(), rs.end()), rs.end());
        for (int32_t r : rs) {
            const Int* pa = row_entry(r, a);
            const Int* pb = row_entry(r, b);
            Int va = pa ? *pa : 0, vb = pb ? *pb : 0;
            set_entry(r, a, x * va + y * vb);
            set_entry(r, b, u * va + w * vb);
        }
        if (with_t_) {
            for (long i = 0; i < ncols_; ++i) {
                Int na = x * V_[i][a] + y * V_[i][b];
                Int nb = u * V_[i][a] + w * V_[i][b];
                V_[i][a] = std::move(na);
                V_[i][b] = std::move(nb);
            }
        }
    }

    void negate_row(long r) {
        for (auto& e : rows_[r]) e.second = -e.second;
        if (with_t_)
            for (long j = 0; j < nrows_; ++j) U_[r][j] = -U_[r][j];
    }

    static void merge_rows(const std::vector<Entry>& a, const std::vector<Entry>& b, const Int& x,
                           const Int& y, std::vector<Entry>& out) {
        out.clear();
        out.reserve(a.size() + b.size());
        std::size_t i = 0, j = 0;
        while (i < a.size() || j < b.size()) {
            int32_t ca = i < a.size() ? a[i].first : INT32_MAX;
            int32_t cb = j < b.size() ? b[j].first : INT32_MAX;
            if (ca < cb) {
                Int v = x * a[i].second;
                if (v != 0) out.push_back({ca, std::move(v)});
                ++i;
            } else if (cb < ca) {
                Int v = y * b[j].second;
                if (v != 0) out.push_back({cb, std::move(v)});
                ++j;
            } else {
                Int v = x * a[i].second + y * b[j].second;
                if (v != 0) out.push_back({ca, std::move(v)});
                ++i;
                ++j;
            }
        }
    }

    void set_entry(long r, long c, Int v) {
        auto row = rows_[r];
        auto it = std::lower_bound(row.begin(), row.end(), c,
                                   [](const Entry& e, long col) { return e.first < col; });
        if (it != row.end() && it->first == c) {
            if (v == 0)
                row.erase(it);
            else
                it->second = std::move(v);
        } else if (v != 0) {
            row.insert(it, {(int32_t)c, std::move(v)});
        }
        set_row(r, std::move(row));
    }

    void add_to_entry(long r, long c, const Int& v) {
        if (v == 0) return;
        const Int* cur = row_entry(r, c);
        set_entry(r, c, cur ? *cur + v : v);
    }

    // Clear column c with row ops, then kill the pivot row with column ops.
    // gcd steps can reintroduce entries into column c, hence the outer loop.
    void reduce_pivot(long r, long c) {
        while (true) {
            for (int32_t rr : live_rows(c)) {
                if (rr == r || row_done_[rr]) continue;
                const Int* pv = row_entry(r, c);
                const Int* av = row_entry(rr, c);
                if (!av) continue;
                if (*av % *pv == 0) {
                    row_axpy(rr, r, -(*av / *pv));
                } else {
                    Int g, x, y;
                    xgcd(*pv, *av, g, x, y);
                    row_combine(r, rr, x, y, -(*av / g), *pv / g);
                }
            }
            const Int pv = *row_entry(r, c);
            bool all_div = true;
            for (const auto& [cc, av] : rows_[r])
                if (cc != c && av % pv != 0) all_div = false;
            if (all_div) {
                // column transvections; with the pivot column clear they touch
                // no other row, so the plain path just drops the row later
                if (with_t_) {
                    std::vector<Entry> row_copy = rows_[r];
                    for (const auto& [cc, av] : row_copy)
                        if (cc != c) col_axpy(cc, c, -(av / pv));
                }
                return;
            }
            std::vector<Entry> row_copy = rows_[r];
            for (const auto& [cc, av] : row_copy) {
                if (cc == c) continue;
                const Int* p = row_entry(r, c);
                if (av % *p == 0) {
                    col_axpy(cc, c, -(av / *p));
                } else {
                    Int g, x, y;
                    xgcd(*p, av, g, x, y);
                    col_combine(c, cc, x, y, -(av / g), *p / g);
                }
            }
        }
    }

    SnfResult finish(std::vector<std::pair<long, long>>& pivots) {
        SnfResult res;
        if (!with_t_) {
            std::vector<Int> diag;
            diag.reserve(pivot_values_.size());
            for (Int& v : pivot_values_) diag.push_back(abs(v));
            res.factors = canonical_torsion_chain(std::move(diag));
            return res;
        }
        auto value_at = [&](std::size_t i) -> Int {
            return *row_entry(pivots[i].first, pivots[i].second);
        };
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t i = 0; i < pivots.size(); ++i) {
                for (std::size_t j = i + 1; j < pivots.size(); ++j) {
                    Int a = value_at(i), b = value_at(j);
                    if (b % a == 0) continue;
                    changed = true;
                    auto [ri, ci] = pivots[i];
                    auto [rj, cj] = pivots[j];
                    row_axpy(ri, rj, 1);  // row ri: (ci: a, cj: b)
                    Int g, x, y;
                    xgcd(a, b, g, x, y);
                    col_combine(ci, cj, x, y, -(b / g), a / g);
                    row_axpy(rj, ri, -((y * b) / g));
                }
            }
        }
        for (auto [r, c] : pivots)
            if (*row_entry(r, c) < 0) negate_row(r);

        std::vector<std::size_t> order(pivots.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            Int va = value_at(a), vb = value_at(b);
            if (va != vb) return va < vb;
            return a < b;
        });
        // permute so U * M * V carries factors on the leading diagonal slots
        DenseIntMatrix U(nrows_, std::vector<Int>(nrows_, 0));
        DenseIntMatrix V(ncols_, std::vector<Int>(ncols_, 0));
        std::vector<bool> used_row(nrows_, false), used_col(ncols_, false);
        long slot = 0;
        for (std::size_t k = 0; k < order.size(); ++k, ++slot) {
            auto [r, c] = pivots[order[k]];
            res.factors.push_back(value_at(order[k]));
            U[slot] = U_[r];
            used_row[r] = true;
            for (long i = 0; i < ncols_; ++i) V[i][slot] = V_[i][c];
            used_col[c] = true;
        }
        long rs = slot;
        for (long r = 0; r < nrows_; ++r)
            if (!used_row[r]) U[rs++] = U_[r];
        long cs = slot;
        for (long c = 0; c < ncols_; ++c)
            if (!used_col[c]) {
                for (long i = 0; i < ncols_; ++i) V[i][cs] = V_[i][c];
                ++cs;
            }
        res.U = std::move(U);
        res.V = std::move(V);
        return res;
    }
};

}  // namespace

SnfResult smith_normal_form(const SparseIntMatrix& m, bool with_transforms) {
    Eliminator e(m, with_transforms);
    return e.run();
}

long integer_rank(const SparseIntMatrix& m) { return smith_normal_form(m).rank(); }

}  // namespace cogdim
