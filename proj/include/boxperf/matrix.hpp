#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "boxperf/rational.hpp"

namespace boxperf {

// Dense integer matrix. Clique matrices keep 0/1 entries; determinant work
// stays in exact integers throughout.
struct IntMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<long long> a;

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), a((size_t)r * c, 0) {}

    long long& at(int r, int c) { return a[(size_t)r * cols + c]; }
    long long at(int r, int c) const { return a[(size_t)r * cols + c]; }

    IntMatrix submatrix(const std::vector<int>& rs, const std::vector<int>& cs) const;
    IntMatrix transpose() const;
    IntMatrix drop_row(int r) const;
    IntMatrix drop_col(int c) const;
    std::vector<long long> row_sums() const;
    std::vector<long long> col_sums() const;

    bool operator==(const IntMatrix& o) const {
        return rows == o.rows && cols == o.cols && a == o.a;
    }
};

// Fraction-free Bareiss elimination; exact for any integer matrix whose
// intermediate minors fit in 64 bits (always true at the sizes we test).
long long determinant(const IntMatrix& m);

// Text format: "rows cols" header, then one space-separated row per line.
void write_matrix(std::ostream& os, const IntMatrix& m);
IntMatrix read_matrix(std::istream& is);

}  // namespace boxperf
