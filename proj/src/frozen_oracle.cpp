#include "bns/frozen_oracle.hpp"

#include <omp.h>

#include <algorithm>
#include <map>

namespace bns {

std::vector<Row> successors(const Row& r, int cap) {
    std::vector<Row> out;
    const int len = static_cast<int>(r.size());
    Row b(len + 1);
    // b_1 in [1, r_1]; b_{j+1} in [max(r_j, b_j + 1), r_{j+1}] for interior
    // positions; b_{len+1} in [max(r_len, b_len + 1), cap].
    auto rec = [&](auto&& self, int pos) -> void {
        if (pos == len + 1) {
            out.push_back(b);
            return;
        }
        int lo, hi;
        if (pos == 0) {
            lo = 1;
            hi = r[0];
        } else {
            lo = std::max(r[pos - 1], b[pos - 1] + 1);
            hi = (pos == len) ? cap : r[pos];
        }
        for (int v = lo; v <= hi; ++v) {
            b[pos] = v;
            self(self, pos + 1);
        }
    };
    rec(rec, 0);
    return out;
}

namespace {

struct TriangleCounter {
    int n;
    int s;
    bool use_memo;
    std::map<Row, ExactInt> memo;

    // Number of completions of the partial triangle whose latest row is r.
    // The cap n-s applies while the row being generated has index <= s.
    ExactInt count(const Row& r) {
        const int len = static_cast<int>(r.size());
        if (len >= n - 1) return 1;
        if (use_memo)
            if (auto it = memo.find(r); it != memo.end()) return it->second;
        const int cap = (len < s) ? (n - s) : n;
        ExactInt sum = 0;
        for (const Row& b : successors(r, cap)) sum += count(b);
        if (use_memo) memo.emplace(r, sum);
        return sum;
    }
};

void check_params(int n, int s) {
    if (n < 1) throw DomainError("count_frozen: n must be positive");
    if (s < 0 || s > n) throw DomainError("count_frozen: s out of [0,n]");
}

}  // namespace

ExactInt count_frozen_serial(int n, int s, bool use_memo) {
    check_params(n, s);
    TriangleCounter counter{n, s, use_memo, {}};
    ExactInt total = 0;
    for (int t = 1; t <= n - s; ++t) total += counter.count({t});
    return total;
}

ExactInt count_frozen(int n, int s) {
    check_params(n, s);
    const int tops = n - s;
    std::vector<ExactInt> partial(std::max(tops, 0));
#pragma omp parallel for schedule(dynamic)
    for (int t = 1; t <= tops; ++t) {
        TriangleCounter counter{n, s, true, {}};
        partial[t - 1] = counter.count({t});
    }
    ExactInt total = 0;
    for (const ExactInt& v : partial) total += v;
    return total;
}

bool AsmMatrix::valid() const {
    if (static_cast<int>(entries.size()) != n * n) return false;
    for (int i = 0; i < n; ++i) {
        int row_sum = 0, col_sum = 0;
        for (int j = 0; j < n; ++j) {
            row_sum += at(i, j);
            col_sum += at(j, i);
            if (row_sum < 0 || row_sum > 1 || col_sum < 0 || col_sum > 1)
                return false;
        }
        if (row_sum != 1 || col_sum != 1) return false;
    }
    return true;
}

AsmMatrix monotone_to_asm(const std::vector<Row>& triangle) {
    const int n = static_cast<int>(triangle.size());
    if (n < 1) throw DomainError("monotone_to_asm: empty triangle");
    for (int i = 0; i < n; ++i) {
        const Row& row = triangle[i];
        if (static_cast<int>(row.size()) != i + 1)
            throw DomainError("monotone_to_asm: row length mismatch");
        for (size_t j = 0; j < row.size(); ++j) {
            if (row[j] < 1 || row[j] > n)
                throw DomainError("monotone_to_asm: entry out of range");
            if (j > 0 && row[j] <= row[j - 1])
                throw DomainError("monotone_to_asm: row not strictly increasing");
        }
        if (i > 0)
            for (size_t j = 0; j < triangle[i - 1].size(); ++j)
                if (!(row[j] <= triangle[i - 1][j] && triangle[i - 1][j] <= row[j + 1]))
                    throw DomainError("monotone_to_asm: rows not interlacing");
    }
    for (int j = 0; j < n; ++j)
        if (triangle[n - 1][j] != j + 1)
            throw DomainError("monotone_to_asm: bottom row must be 1..n");

    AsmMatrix m;
    m.n = n;
    m.entries.assign(n * n, 0);
    std::vector<int8_t> prev(n, 0), cur(n, 0);
    for (int i = 0; i < n; ++i) {
        std::fill(cur.begin(), cur.end(), 0);
        for (int v : triangle[i]) cur[v - 1] = 1;
        for (int j = 0; j < n; ++j) m.at(i, j) = static_cast<int8_t>(cur[j] - prev[j]);
        prev = cur;
    }
    if (!m.valid()) throw DomainError("monotone_to_asm: result is not an ASM");
    return m;
}

std::vector<Row> asm_to_monotone(const AsmMatrix& m) {
    if (!m.valid()) throw DomainError("asm_to_monotone: input is not an ASM");
    std::vector<Row> triangle;
    std::vector<int> colsum(m.n, 0);
    for (int i = 0; i < m.n; ++i) {
        Row row;
        for (int j = 0; j < m.n; ++j) {
            colsum[j] += m.at(i, j);
            if (colsum[j] == 1) row.push_back(j + 1);
        }
        triangle.push_back(std::move(row));
    }
    return triangle;
}

namespace {

// DFS over rows. colsum holds partial column sums, which must stay in {0,1}.
void scan_rows(int n, int s, int i, std::vector<int>& colsum, AsmMatrix& work,
               std::vector<AsmMatrix>* out, ExactInt& count) {
    if (i == n) {
        if (std::all_of(colsum.begin(), colsum.end(), [](int c) { return c == 1; })) {
            ++count;
            if (out) out->push_back(work);
        }
        return;
    }
    // Generate row i entry by entry; rowsum must stay in {0,1} and end at 1.
    auto cell = [&](auto&& self, int j, int rowsum) -> void {
        if (j == n) {
            if (rowsum == 1) scan_rows(n, s, i + 1, colsum, work, out, count);
            return;
        }
        const bool frozen = (i < s && j < s);
        for (int v = frozen ? 0 : -1; v <= (frozen ? 0 : 1); ++v) {
            const int rs = rowsum + v;
            if (rs < 0 || rs > 1) continue;
            const int cs = colsum[j] + v;
            if (cs < 0 || cs > 1) continue;
            colsum[j] = cs;
            work.at(i, j) = static_cast<int8_t>(v);
            self(self, j + 1, rs);
            colsum[j] = cs - v;
        }
    };
    cell(cell, 0, 0);
}

}  // namespace

ExactInt brute_force_frozen(int n, int s) {
    if (n < 1) throw DomainError("brute_force_frozen: n must be positive");
    if (n > 4) throw DomainError("brute_force_frozen: refused for n > 4 (3^(n^2) scan)");
    if (s < 0 || s > n) throw DomainError("brute_force_frozen: s out of [0,n]");
    AsmMatrix work;
    work.n = n;
    work.entries.assign(n * n, 0);
    std::vector<int> colsum(n, 0);
    ExactInt count = 0;
    scan_rows(n, s, 0, colsum, work, nullptr, count);
    return count;
}

std::vector<AsmMatrix> enumerate_asms(int n, int s) {
    if (n < 1 || n > 4) throw DomainError("enumerate_asms: n must be in [1,4]");
    AsmMatrix work;
    work.n = n;
    work.entries.assign(n * n, 0);
    std::vector<int> colsum(n, 0);
    ExactInt count = 0;
    std::vector<AsmMatrix> out;
    scan_rows(n, s, 0, colsum, work, &out, count);
    return out;
}

}  // namespace bns
