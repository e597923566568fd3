#include "rgh/snf.hpp"

#include <cassert>
#include <map>
#include <set>

#include "rgh/errors.hpp"

namespace rgh {

namespace {

class SparseMat {
  public:
    SparseMat(int rows, int cols) : rows_(rows), col_rows_(cols) {}

    void add(int r, int c, const mpz_class& delta) {
        auto& row = rows_[r];
        const auto it = row.find(c);
        if (it == row.end()) {
            if (delta != 0) {
                row.emplace(c, delta);
                col_rows_[c].insert(r);
            }
            return;
        }
        it->second += delta;
        if (it->second == 0) {
            row.erase(it);
            col_rows_[c].erase(r);
        }
    }

    void remove(int r, int c) {
        if (rows_[r].erase(c)) col_rows_[c].erase(r);
    }

    const mpz_class& at(int r, int c) const {
        static const mpz_class zero = 0;
        const auto it = rows_[r].find(c);
        return it == rows_[r].end() ? zero : it->second;
    }

    // row dst -= q * row src
    void row_addmul(int dst, int src, const mpz_class& q) {
        if (q == 0) return;
        for (const auto& [c, v] : rows_[src]) add(dst, c, -q * v);
    }

    // col dst -= q * col src
    void col_addmul(int dst, int src, const mpz_class& q) {
        if (q == 0) return;
        for (const int r : col_rows_[src]) add(r, dst, -q * rows_[r].at(src));
    }

    const std::map<int, mpz_class>& row(int r) const { return rows_[r]; }
    const std::set<int>& col(int c) const { return col_rows_[c]; }
    int nrows() const { return static_cast<int>(rows_.size()); }
    int ncols() const { return static_cast<int>(col_rows_.size()); }

  private:
    std::vector<std::map<int, mpz_class>> rows_;
    std::vector<std::set<int>> col_rows_;
};

} // namespace

std::vector<mpz_class> smith_normal_form(
    int rows, int cols,
    const std::vector<std::tuple<int, int, std::int64_t>>& entries) {
    SparseMat a(rows, cols);
    for (const auto& [r, c, v] : entries) a.add(r, c, mpz_class(static_cast<long>(v)));

    // finished pivots leave their row and column empty, so remaining entries
    // always lie in the active region
    std::vector<char> row_done(rows, 0);
    std::vector<mpz_class> factors;

    for (;;) {
        // pivot: least |value|, then least fill estimate, then position
        int pr = -1, pc = -1;
        mpz_class pv;
        long best_fill = 0;
        for (int r = 0; r < rows; ++r) {
            if (row_done[r]) continue;
            for (const auto& [c, v] : a.row(r)) {
                const long fill = (static_cast<long>(a.row(r).size()) - 1) *
                                  (static_cast<long>(a.col(c).size()) - 1);
                mpz_class av = abs(v);
                if (pr < 0 || av < pv || (av == pv && fill < best_fill)) {
                    pr = r;
                    pc = c;
                    pv = av;
                    best_fill = fill;
                }
            }
        }
        if (pr < 0) break;

        for (;;) {
            bool moved = false;
            // clear the pivot column; a leftover remainder is a smaller pivot
            while (a.col(pc).size() > 1) {
                int r = -1;
                for (const int cr : a.col(pc))
                    if (cr != pr) {
                        r = cr;
                        break;
                    }
                const mpz_class q = a.at(r, pc) / a.at(pr, pc);
                a.row_addmul(r, pr, q);
                if (a.at(r, pc) != 0) {
                    pr = r;
                    moved = true;
                    break;
                }
            }
            if (moved) continue;
            while (a.row(pr).size() > 1) {
                int c = -1;
                for (const auto& [rc, v] : a.row(pr))
                    if (rc != pc) {
                        c = rc;
                        break;
                    }
                const mpz_class q = a.at(pr, c) / a.at(pr, pc);
                a.col_addmul(c, pc, q);
                if (a.at(pr, c) != 0) {
                    pc = c;
                    moved = true;
                    break;
                }
            }
            if (moved) continue;

            // pivot must divide everything left; if not, pull the offender in
            const mpz_class p = a.at(pr, pc);
            int bad_row = -1;
            for (int r = 0; r < rows && bad_row < 0; ++r) {
                if (row_done[r] || r == pr) continue;
                for (const auto& [c, v] : a.row(r)) {
                    if (v % p != 0) {
                        bad_row = r;
                        break;
                    }
                }
            }
            if (bad_row < 0) break;
            a.row_addmul(pr, bad_row, -1);
        }

        factors.push_back(abs(a.at(pr, pc)));
        a.remove(pr, pc);
        row_done[pr] = 1;
    }

    for (std::size_t i = 0; i + 1 < factors.size(); ++i)
        if (factors[i + 1] % factors[i] != 0)
            throw InternalError("invariant factors failed the divisibility chain");
    return factors;
}

std::vector<mpz_class> smith_normal_form(const BoundaryMatrix& m) {
    std::vector<std::tuple<int, int, std::int64_t>> entries;
    for (int c = 0; c < m.cols; ++c)
        for (const auto& [r, v] : m.col_entries[c]) entries.emplace_back(r, c, v);
    return smith_normal_form(m.rows, m.cols, entries);
}

int matrix_rank(const BoundaryMatrix& m) {
    return static_cast<int>(smith_normal_form(m).size());
}

} // namespace rgh
