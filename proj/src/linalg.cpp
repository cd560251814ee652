#include "linalg.hpp"

#include "errors.hpp"

#include <algorithm>

namespace sonc::linalg {

namespace {

// Divides a by b, asserting exactness (Bareiss updates divide evenly).
Integer divexact_checked(const Integer& a, const Integer& b) {
    Integer q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (r != 0) fail(ErrorCode::Internal, "fraction-free elimination produced a non-exact division");
    return q;
}

struct Echelon {
    IntMatrix m;                 // rows x (cols + 1), last column is the rhs
    std::vector<int> pivot_col;  // per pivot step, the column index
    std::vector<int> pivot_row;  // per pivot step, the row index (after swaps rows are in order)
    int rank = 0;
};

// Fraction-free row echelon reduction of the augmented matrix [A | b].
Echelon reduce(IntMatrix a, const std::vector<Integer>* b) {
    const int rows = static_cast<int>(a.size());
    const int cols = rows == 0 ? 0 : static_cast<int>(a[0].size());
    if (b != nullptr) {
        for (int i = 0; i < rows; ++i) a[static_cast<std::size_t>(i)].push_back((*b)[static_cast<std::size_t>(i)]);
    }
    const int width = b != nullptr ? cols + 1 : cols;

    Echelon ech;
    Integer prev_pivot = 1;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pivot = -1;
        for (int i = r; i < rows; ++i) {
            if (a[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] != 0) { pivot = i; break; }
        }
        if (pivot < 0) continue; // free column
        std::swap(a[static_cast<std::size_t>(r)], a[static_cast<std::size_t>(pivot)]);
        const Integer piv = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
        for (int i = r + 1; i < rows; ++i) {
            auto& row_i = a[static_cast<std::size_t>(i)];
            const auto& row_r = a[static_cast<std::size_t>(r)];
            const Integer head = row_i[static_cast<std::size_t>(c)];
            for (int j = c + 1; j < width; ++j) {
                row_i[static_cast<std::size_t>(j)] =
                    divexact_checked(row_i[static_cast<std::size_t>(j)] * piv - head * row_r[static_cast<std::size_t>(j)],
                                     prev_pivot);
            }
            row_i[static_cast<std::size_t>(c)] = 0;
        }
        prev_pivot = piv;
        ech.pivot_col.push_back(c);
        ech.pivot_row.push_back(r);
        ++r;
    }
    ech.rank = r;
    ech.m = std::move(a);
    return ech;
}

} // namespace

SolveResult solve_fraction_free(IntMatrix a, std::vector<Integer> b) {
    const int rows = static_cast<int>(a.size());
    if (rows == 0) return {SolveStatus::Unique, {}};
    const int cols = static_cast<int>(a[0].size());
    if (static_cast<int>(b.size()) != rows) fail(ErrorCode::DimensionMismatch, "rhs length");

    Echelon ech = reduce(std::move(a), &b);

    if (ech.rank < cols) return {SolveStatus::RankDeficient, {}};
    // Rows below the rank must have a zero rhs for consistency.
    for (int i = ech.rank; i < rows; ++i) {
        if (ech.m[static_cast<std::size_t>(i)][static_cast<std::size_t>(cols)] != 0)
            return {SolveStatus::Inconsistent, {}};
    }

    std::vector<Rational> x(static_cast<std::size_t>(cols));
    for (int step = ech.rank - 1; step >= 0; --step) {
        const int r = ech.pivot_row[static_cast<std::size_t>(step)];
        const int c = ech.pivot_col[static_cast<std::size_t>(step)];
        Rational acc(ech.m[static_cast<std::size_t>(r)][static_cast<std::size_t>(cols)]);
        for (int j = c + 1; j < cols; ++j) {
            acc -= Rational(ech.m[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)]) * x[static_cast<std::size_t>(j)];
        }
        acc /= Rational(ech.m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]);
        acc.canonicalize();
        x[static_cast<std::size_t>(c)] = acc;
    }
    return {SolveStatus::Unique, std::move(x)};
}

std::optional<std::vector<Rational>> nullspace_vector(IntMatrix a) {
    const int rows = static_cast<int>(a.size());
    if (rows == 0) return std::nullopt;
    const int cols = static_cast<int>(a[0].size());

    Echelon ech = reduce(std::move(a), nullptr);
    if (ech.rank >= cols) return std::nullopt;

    std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
    for (int c : ech.pivot_col) is_pivot[static_cast<std::size_t>(c)] = true;
    int free_col = 0;
    while (is_pivot[static_cast<std::size_t>(free_col)]) ++free_col;

    std::vector<Rational> x(static_cast<std::size_t>(cols), Rational(0));
    x[static_cast<std::size_t>(free_col)] = 1;
    for (int step = ech.rank - 1; step >= 0; --step) {
        const int r = ech.pivot_row[static_cast<std::size_t>(step)];
        const int c = ech.pivot_col[static_cast<std::size_t>(step)];
        if (c >= free_col) continue; // columns right of the free column: echelon entries there are zero rows for it
        Rational acc(0);
        for (int j = c + 1; j < cols; ++j) {
            if (ech.m[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] != 0)
                acc -= Rational(ech.m[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)]) * x[static_cast<std::size_t>(j)];
        }
        acc /= Rational(ech.m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]);
        acc.canonicalize();
        x[static_cast<std::size_t>(c)] = acc;
    }
    return x;
}

std::optional<std::vector<Rational>> nonneg_solve(const std::vector<std::vector<Rational>>& cols,
                                                  const std::vector<Rational>& rhs) {
    const int m = static_cast<int>(rhs.size());
    const int n = static_cast<int>(cols.size());
    for (const auto& col : cols) {
        if (static_cast<int>(col.size()) != m) fail(ErrorCode::DimensionMismatch, "column length");
    }

    // Tableau: structural columns, artificial identity, rhs. Row signs are
    // flipped so that the rhs is nonnegative and artificials form a basis.
    const int width = n + m + 1;
    std::vector<std::vector<Rational>> t(static_cast<std::size_t>(m),
                                         std::vector<Rational>(static_cast<std::size_t>(width), Rational(0)));
    for (int i = 0; i < m; ++i) {
        const bool flip = sgn(rhs[static_cast<std::size_t>(i)]) < 0;
        for (int j = 0; j < n; ++j) {
            t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                flip ? Rational(-cols[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)])
                     : cols[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
        }
        t[static_cast<std::size_t>(i)][static_cast<std::size_t>(n + i)] = 1;
        t[static_cast<std::size_t>(i)][static_cast<std::size_t>(width - 1)] =
            flip ? Rational(-rhs[static_cast<std::size_t>(i)]) : rhs[static_cast<std::size_t>(i)];
    }

    std::vector<int> basis(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) basis[static_cast<std::size_t>(i)] = n + i;

    // Objective row for minimizing the sum of artificials: z_j - c_j.
    std::vector<Rational> obj(static_cast<std::size_t>(width), Rational(0));
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < width; ++j) obj[static_cast<std::size_t>(j)] += t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    for (int i = 0; i < m; ++i) obj[static_cast<std::size_t>(n + i)] -= 1;

    auto pivot = [&](int row, int col) {
        const Rational p = t[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
        auto& prow = t[static_cast<std::size_t>(row)];
        for (auto& v : prow) { v /= p; v.canonicalize(); }
        for (int i = 0; i < m; ++i) {
            if (i == row) continue;
            const Rational f = t[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)];
            if (sgn(f) == 0) continue;
            auto& irow = t[static_cast<std::size_t>(i)];
            for (int j = 0; j < width; ++j) { irow[static_cast<std::size_t>(j)] -= f * prow[static_cast<std::size_t>(j)]; irow[static_cast<std::size_t>(j)].canonicalize(); }
        }
        const Rational f = obj[static_cast<std::size_t>(col)];
        if (sgn(f) != 0) {
            for (int j = 0; j < width; ++j) { obj[static_cast<std::size_t>(j)] -= f * prow[static_cast<std::size_t>(j)]; obj[static_cast<std::size_t>(j)].canonicalize(); }
        }
        basis[static_cast<std::size_t>(row)] = col;
    };

    while (true) {
        // Bland's rule: smallest index with positive reduced cost (we maximize
        // -sum(artificials), i.e. drive obj entries to <= 0).
        int entering = -1;
        for (int j = 0; j < n + m; ++j) {
            if (sgn(obj[static_cast<std::size_t>(j)]) > 0) { entering = j; break; }
        }
        if (entering < 0) break;
        int leaving = -1;
        Rational best_ratio;
        for (int i = 0; i < m; ++i) {
            const Rational& a = t[static_cast<std::size_t>(i)][static_cast<std::size_t>(entering)];
            if (sgn(a) <= 0) continue;
            Rational ratio = t[static_cast<std::size_t>(i)][static_cast<std::size_t>(width - 1)] / a;
            ratio.canonicalize();
            if (leaving < 0 || ratio < best_ratio ||
                (ratio == best_ratio && basis[static_cast<std::size_t>(i)] < basis[static_cast<std::size_t>(leaving)])) {
                leaving = i;
                best_ratio = ratio;
            }
        }
        if (leaving < 0) fail(ErrorCode::Internal, "phase-1 simplex unbounded");
        pivot(leaving, entering);
    }

    // Feasible iff all artificials are zero.
    for (int i = 0; i < m; ++i) {
        if (basis[static_cast<std::size_t>(i)] >= n &&
            sgn(t[static_cast<std::size_t>(i)][static_cast<std::size_t>(width - 1)]) != 0) {
            return std::nullopt;
        }
    }

    std::vector<Rational> w(static_cast<std::size_t>(n), Rational(0));
    for (int i = 0; i < m; ++i) {
        if (basis[static_cast<std::size_t>(i)] < n) {
            w[static_cast<std::size_t>(basis[static_cast<std::size_t>(i)])] =
                t[static_cast<std::size_t>(i)][static_cast<std::size_t>(width - 1)];
        }
    }
    return w;
}

} // namespace sonc::linalg
