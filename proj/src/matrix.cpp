#include "boxperf/matrix.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace boxperf {

IntMatrix IntMatrix::submatrix(const std::vector<int>& rs, const std::vector<int>& cs) const {
    IntMatrix s((int)rs.size(), (int)cs.size());
    for (int i = 0; i < s.rows; ++i)
        for (int j = 0; j < s.cols; ++j) s.at(i, j) = at(rs[i], cs[j]);
    return s;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols, rows);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
    return t;
}

IntMatrix IntMatrix::drop_row(int r) const {
    std::vector<int> rs, cs;
    for (int i = 0; i < rows; ++i)
        if (i != r) rs.push_back(i);
    for (int j = 0; j < cols; ++j) cs.push_back(j);
    return submatrix(rs, cs);
}

IntMatrix IntMatrix::drop_col(int c) const {
    std::vector<int> rs, cs;
    for (int i = 0; i < rows; ++i) rs.push_back(i);
    for (int j = 0; j < cols; ++j)
        if (j != c) cs.push_back(j);
    return submatrix(rs, cs);
}

std::vector<long long> IntMatrix::row_sums() const {
    std::vector<long long> s(rows, 0);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) s[i] += at(i, j);
    return s;
}

std::vector<long long> IntMatrix::col_sums() const {
    std::vector<long long> s(cols, 0);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) s[j] += at(i, j);
    return s;
}

long long determinant(const IntMatrix& m) {
    if (m.rows != m.cols) throw error("determinant of non-square matrix");
    int n = m.rows;
    if (n == 0) return 1;
    std::vector<long long> a = m.a;
    auto at = [&](int r, int c) -> long long& { return a[(size_t)r * n + c]; };
    long long sign = 1, prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (at(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (at(i, k) != 0) { p = i; break; }
            if (p < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(at(k, j), at(p, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                __int128 v = (__int128)at(i, j) * at(k, k) - (__int128)at(i, k) * at(k, j);
                v /= prev;  // exact by Bareiss
                if (v > INT64_MAX || v < INT64_MIN) throw error("determinant overflow");
                at(i, j) = (long long)v;
            }
            at(i, k) = 0;
        }
        prev = at(k, k);
    }
    return sign * at(n - 1, n - 1);
}

void write_matrix(std::ostream& os, const IntMatrix& m) {
    os << m.rows << " " << m.cols << "\n";
    for (int i = 0; i < m.rows; ++i) {
        for (int j = 0; j < m.cols; ++j) os << (j ? " " : "") << m.at(i, j);
        os << "\n";
    }
}

IntMatrix read_matrix(std::istream& is) {
    int r, c;
    if (!(is >> r >> c) || r < 0 || c < 0) throw error("matrix: bad header");
    IntMatrix m(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j)
            if (!(is >> m.at(i, j))) throw error("matrix: truncated data");
    return m;
}

}  // namespace boxperf
