#pragma once

#include <limits>
#include <memory>
#include <vector>

namespace relaycap::lp {

constexpr double kInf = std::numeric_limits<double>::infinity();

// min c'x  s.t.  row_lo <= A x <= row_up,  col_lo <= x <= col_up.
// Columns are stored sparse (CSC). Rows must be added before the columns
// that reference them.
struct Problem {
    int num_rows = 0;
    std::vector<int> col_ptr{0};
    std::vector<int> row_idx;
    std::vector<double> values;
    std::vector<double> col_lo, col_up, cost;
    std::vector<double> row_lo, row_up;

    int num_cols() const { return static_cast<int>(col_lo.size()); }

    int add_row(double lo, double up) {
        row_lo.push_back(lo);
        row_up.push_back(up);
        return num_rows++;
    }

    int add_col(double lo, double up, double c,
                const std::vector<std::pair<int, double>>& entries) {
        for (const auto& [r, v] : entries) {
            row_idx.push_back(r);
            values.push_back(v);
        }
        col_ptr.push_back(static_cast<int>(row_idx.size()));
        col_lo.push_back(lo);
        col_up.push_back(up);
        cost.push_back(c);
        return num_cols() - 1;
    }
};

enum class Status { kOptimal, kInfeasible, kIterLimit };

struct SolveStats {
    Status status = Status::kIterLimit;
    double objective = 0.0;
    long iterations = 0;
};

// Nonbasic state snapshot for warm starts across branch-and-bound nodes.
struct BasisSnapshot {
    std::vector<signed char> state; // per working column
    std::vector<int> basic;         // working column index per basis slot
};

// Bounded-variable revised simplex. The basis inverse is kept as a sparse LU
// factorization (Eigen) plus product-form eta updates, refactorized
// periodically. Solves run dual simplex first (the all-logical start basis is
// dual feasible whenever costs are nonnegative), fall back to a primal
// phase-1 if the dual gets stuck, and always finish with a primal loop plus a
// fresh KKT verification.
class Simplex {
public:
    explicit Simplex(const Problem& p);
    ~Simplex();
    Simplex(const Simplex&) = delete;
    Simplex& operator=(const Simplex&) = delete;

    void set_col_bounds(int j, double lo, double up);
    void set_cost(int j, double c);

    // max_iters guards against stalls; 0 means the built-in default.
    SolveStats solve(long max_iters = 0);

    double col_value(int j) const;
    double row_dual(int i) const;
    double reduced_cost(int j) const;
    double objective() const;

    BasisSnapshot save_basis() const;
    void restore_basis(const BasisSnapshot& b);

    static constexpr double kFeasTol = 1e-9;
    static constexpr double kDualTol = 1e-9;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

} // namespace relaycap::lp
