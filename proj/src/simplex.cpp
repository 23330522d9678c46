#include "relaycap/simplex.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>
#include <vector>

#include <Eigen/SparseCore>
#include <Eigen/SparseLU>

namespace relaycap::lp {

namespace {

constexpr signed char kAtLower = 0;
constexpr signed char kAtUpper = 1;
constexpr signed char kBasic = 2;

constexpr double kPivotTol = 1e-7;
constexpr double kPivotTolRelaxed = 1e-10;
constexpr double kZeroTol = 1e-12;
constexpr int kRefactorInterval = 100;
constexpr int kDegenerateLimit = 600;

} // namespace

struct Simplex::Impl {
    // Working columns: [0, n) structural, [n, n+m) logical. Logical column
    // n+i has the single entry (i, -1), so row i's activity variable carries
    // bounds [row_lo, row_up] and the whole system reads W z = 0.
    int m = 0;
    int n = 0;
    int nw = 0;

    // structural matrix, CSC and CSR
    std::vector<int> col_ptr, row_idx;
    std::vector<double> vals;
    std::vector<int> csr_ptr, csr_col;
    std::vector<double> csr_val;

    std::vector<double> lo, up, cost; // per working column

    std::vector<signed char> state;
    std::vector<int> basic;  // size m
    std::vector<int> pos;    // per working column, -1 if nonbasic
    std::vector<double> xB;  // basic values by slot
    std::vector<double> d;   // reduced costs per working column
    std::vector<double> y;   // row duals

    struct Eta {
        int r;
        double pivot;
        std::vector<std::pair<int, double>> rest; // entries of w except row r
    };
    Eigen::SparseLU<Eigen::SparseMatrix<double>> lu;
    bool lu_valid = false;
    std::vector<Eta> etas;
    int pivots_since_refactor = 0;

    long iterations = 0;
    long iter_limit = 0;
    int degenerate_streak = 0;
    bool bland = false;

    // scratch
    Eigen::VectorXd work, work2;
    std::vector<double> alpha;
    std::vector<int> alpha_touched;

    explicit Impl(const Problem& p) {
        m = p.num_rows;
        n = p.num_cols();
        nw = n + m;
        col_ptr = p.col_ptr;
        row_idx = p.row_idx;
        vals = p.values;
        lo = p.col_lo;
        up = p.col_up;
        cost = p.cost;
        lo.insert(lo.end(), p.row_lo.begin(), p.row_lo.end());
        up.insert(up.end(), p.row_up.begin(), p.row_up.end());
        cost.resize(static_cast<std::size_t>(nw), 0.0);

        for (int j = 0; j < n; ++j)
            if (cost[static_cast<std::size_t>(j)] < 0.0)
                throw std::invalid_argument("simplex kernel requires nonnegative costs");
        for (int j = 0; j < nw; ++j) {
            if (lo[static_cast<std::size_t>(j)] > up[static_cast<std::size_t>(j)] + kZeroTol)
                throw std::invalid_argument("empty variable/row bound range");
            if (!std::isfinite(lo[static_cast<std::size_t>(j)]) &&
                !std::isfinite(up[static_cast<std::size_t>(j)]))
                throw std::invalid_argument("free columns/rows are not supported");
        }

        // CSR of the structural part for row-wise pricing.
        csr_ptr.assign(static_cast<std::size_t>(m) + 1, 0);
        for (int v : row_idx) ++csr_ptr[static_cast<std::size_t>(v) + 1];
        for (int i = 0; i < m; ++i)
            csr_ptr[static_cast<std::size_t>(i) + 1] += csr_ptr[static_cast<std::size_t>(i)];
        csr_col.resize(row_idx.size());
        csr_val.resize(row_idx.size());
        std::vector<int> fill = csr_ptr;
        for (int j = 0; j < n; ++j)
            for (int k = col_ptr[static_cast<std::size_t>(j)]; k < col_ptr[static_cast<std::size_t>(j) + 1]; ++k) {
                int r = row_idx[static_cast<std::size_t>(k)];
                int slot = fill[static_cast<std::size_t>(r)]++;
                csr_col[static_cast<std::size_t>(slot)] = j;
                csr_val[static_cast<std::size_t>(slot)] = vals[static_cast<std::size_t>(k)];
            }

        reset_basis();
        work.resize(m);
        work2.resize(m);
        alpha.assign(static_cast<std::size_t>(nw), 0.0);
        d.assign(static_cast<std::size_t>(nw), 0.0);
        y.assign(static_cast<std::size_t>(m), 0.0);
        xB.assign(static_cast<std::size_t>(m), 0.0);
    }

    void reset_basis() {
        state.assign(static_cast<std::size_t>(nw), kAtLower);
        pos.assign(static_cast<std::size_t>(nw), -1);
        basic.resize(static_cast<std::size_t>(m));
        for (int j = 0; j < n; ++j)
            state[static_cast<std::size_t>(j)] =
                std::isfinite(lo[static_cast<std::size_t>(j)]) ? kAtLower : kAtUpper;
        for (int i = 0; i < m; ++i) {
            basic[static_cast<std::size_t>(i)] = n + i;
            state[static_cast<std::size_t>(n + i)] = kBasic;
            pos[static_cast<std::size_t>(n + i)] = i;
        }
        lu_valid = false;
        etas.clear();
    }

    template <typename F>
    void for_col(int j, F&& f) const {
        if (j < n) {
            for (int k = col_ptr[static_cast<std::size_t>(j)]; k < col_ptr[static_cast<std::size_t>(j) + 1]; ++k)
                f(row_idx[static_cast<std::size_t>(k)], vals[static_cast<std::size_t>(k)]);
        } else {
            f(j - n, -1.0);
        }
    }

    double bound_value(int j) const {
        return state[static_cast<std::size_t>(j)] == kAtUpper ? up[static_cast<std::size_t>(j)]
                                                              : lo[static_cast<std::size_t>(j)];
    }

    double value_of(int j) const {
        return state[static_cast<std::size_t>(j)] == kBasic
                   ? xB[static_cast<std::size_t>(pos[static_cast<std::size_t>(j)])]
                   : bound_value(j);
    }

    void ftran(Eigen::VectorXd& v) {
        if (m == 0) return;
        v = lu.solve(v);
        for (const Eta& e : etas) {
            const double t = v[e.r] / e.pivot;
            if (t != 0.0)
                for (const auto& [i, wv] : e.rest) v[i] -= wv * t;
            v[e.r] = t;
        }
    }

    void btran(Eigen::VectorXd& v) {
        if (m == 0) return;
        for (auto it = etas.rbegin(); it != etas.rend(); ++it) {
            double dot = it->pivot * v[it->r];
            for (const auto& [i, wv] : it->rest) dot += wv * v[i];
            v[it->r] -= (dot - v[it->r]) / it->pivot;
        }
        v = lu.adjoint().solve(v);
    }

    void refactorize() {
        if (m > 0) {
            std::vector<Eigen::Triplet<double>> trips;
            trips.reserve(static_cast<std::size_t>(m) * 3);
            for (int slot = 0; slot < m; ++slot) {
                int j = basic[static_cast<std::size_t>(slot)];
                for_col(j, [&](int r, double v) { trips.emplace_back(r, slot, v); });
            }
            Eigen::SparseMatrix<double> B(m, m);
            B.setFromTriplets(trips.begin(), trips.end());
            lu.compute(B);
            if (lu.info() != Eigen::Success)
                throw std::runtime_error("simplex: basis factorization failed");
        }
        lu_valid = true;
        etas.clear();
        pivots_since_refactor = 0;
        recompute_xB();
        recompute_duals();
    }

    void recompute_xB() {
        Eigen::VectorXd rhs = Eigen::VectorXd::Zero(m);
        for (int j = 0; j < nw; ++j) {
            if (state[static_cast<std::size_t>(j)] == kBasic) continue;
            const double v = bound_value(j);
            if (v != 0.0) for_col(j, [&](int r, double a) { rhs[r] -= a * v; });
        }
        ftran(rhs);
        for (int i = 0; i < m; ++i) xB[static_cast<std::size_t>(i)] = rhs[i];
    }

    void recompute_duals() {
        Eigen::VectorXd cb = Eigen::VectorXd::Zero(m);
        for (int i = 0; i < m; ++i)
            cb[i] = cost[static_cast<std::size_t>(basic[static_cast<std::size_t>(i)])];
        btran(cb);
        for (int i = 0; i < m; ++i) y[static_cast<std::size_t>(i)] = cb[i];
        for (int j = 0; j < nw; ++j) {
            if (state[static_cast<std::size_t>(j)] == kBasic) {
                d[static_cast<std::size_t>(j)] = 0.0;
                continue;
            }
            double acc = cost[static_cast<std::size_t>(j)];
            for_col(j, [&](int r, double a) { acc -= y[static_cast<std::size_t>(r)] * a; });
            d[static_cast<std::size_t>(j)] = acc;
        }
    }

    // alpha_j = (B^-1 row r) . W_j for every nonbasic j, via the CSR rows of
    // rho's support. Returns the support of alpha in alpha_touched.
    void compute_alpha_row(const Eigen::VectorXd& rho) {
        for (int j : alpha_touched) alpha[static_cast<std::size_t>(j)] = 0.0;
        alpha_touched.clear();
        for (int i = 0; i < m; ++i) {
            const double r = rho[i];
            if (std::fabs(r) <= kZeroTol) continue;
            for (int k = csr_ptr[static_cast<std::size_t>(i)]; k < csr_ptr[static_cast<std::size_t>(i) + 1]; ++k) {
                const int j = csr_col[static_cast<std::size_t>(k)];
                if (alpha[static_cast<std::size_t>(j)] == 0.0) alpha_touched.push_back(j);
                alpha[static_cast<std::size_t>(j)] += r * csr_val[static_cast<std::size_t>(k)];
            }
            const int jl = n + i; // logical column of row i
            if (alpha[static_cast<std::size_t>(jl)] == 0.0) alpha_touched.push_back(jl);
            alpha[static_cast<std::size_t>(jl)] += -r;
        }
    }

    void push_eta(int r, const Eigen::VectorXd& w) {
        Eta e;
        e.r = r;
        e.pivot = w[r];
        for (int i = 0; i < m; ++i)
            if (i != r && std::fabs(w[i]) > kZeroTol) e.rest.emplace_back(i, w[i]);
        etas.push_back(std::move(e));
        ++pivots_since_refactor;
    }

    // Basis change bookkeeping shared by both loops. q enters at slot r with
    // value zq; the leaving column moves to leave_state.
    void pivot(int q, int r, double zq, signed char leave_state, const Eigen::VectorXd& w,
               double delta_dual, const bool have_alpha) {
        const int jr = basic[static_cast<std::size_t>(r)];
        state[static_cast<std::size_t>(jr)] = leave_state;
        pos[static_cast<std::size_t>(jr)] = -1;
        basic[static_cast<std::size_t>(r)] = q;
        state[static_cast<std::size_t>(q)] = kBasic;
        pos[static_cast<std::size_t>(q)] = r;
        xB[static_cast<std::size_t>(r)] = zq;
        push_eta(r, w);

        if (delta_dual != 0.0) {
            if (have_alpha) {
                for (int j : alpha_touched)
                    if (state[static_cast<std::size_t>(j)] != kBasic)
                        d[static_cast<std::size_t>(j)] -= delta_dual * alpha[static_cast<std::size_t>(j)];
            }
            d[static_cast<std::size_t>(jr)] = -delta_dual;
        } else {
            d[static_cast<std::size_t>(jr)] = 0.0;
        }
        d[static_cast<std::size_t>(q)] = 0.0;

        if (pivots_since_refactor >= kRefactorInterval) refactorize();
    }

    bool movable(int j) const {
        return up[static_cast<std::size_t>(j)] - lo[static_cast<std::size_t>(j)] > kZeroTol;
    }
    bool fixed(int j) const { return !movable(j); }

    // ---- dual simplex ----------------------------------------------------

    int pick_leaving() const {
        int best = -1;
        double best_viol = kFeasTol;
        for (int i = 0; i < m; ++i) {
            const int j = basic[static_cast<std::size_t>(i)];
            const double v = xB[static_cast<std::size_t>(i)];
            const double viol = std::max(lo[static_cast<std::size_t>(j)] - v,
                                         v - up[static_cast<std::size_t>(j)]);
            if (viol > best_viol) {
                if (bland) return i; // lowest slot
                best_viol = viol;
                best = i;
            }
        }
        return best;
    }

    // One dual iteration; returns false when primal feasible (done) and
    // throws on a genuine dual ray (primal infeasible).
    bool dual_iteration() {
        const int r = pick_leaving();
        if (r < 0) return false;
        const int jr = basic[static_cast<std::size_t>(r)];
        const bool need_increase = xB[static_cast<std::size_t>(r)] < lo[static_cast<std::size_t>(jr)];

        Eigen::VectorXd& rho = work2;
        rho.setZero(m);
        rho[r] = 1.0;
        btran(rho);
        compute_alpha_row(rho);

        // Entering choice: properly signed movable columns first; fixed
        // columns are sign-agnostic but only welcome when their dual step
        // is harmless or nothing else is available.
        const double sgn = need_increase ? 1.0 : -1.0;
        int q = -1, q_loose = -1, q_wrong = -1;
        double best = kInf, best_loose = kInf, best_wrong = kInf, best_piv = 0.0;
        for (int j : alpha_touched) {
            if (state[static_cast<std::size_t>(j)] == kBasic) continue;
            const double a = alpha[static_cast<std::size_t>(j)];
            if (std::fabs(a) <= kPivotTolRelaxed) continue;
            bool eligible;
            if (fixed(j)) {
                eligible = true;
            } else if (state[static_cast<std::size_t>(j)] == kAtLower) {
                eligible = sgn * a < 0.0;
            } else {
                eligible = sgn * a > 0.0;
            }
            if (!eligible) continue;
            const double ratio = std::fabs(d[static_cast<std::size_t>(j)]) / std::fabs(a);
            const double step = d[static_cast<std::size_t>(j)] / a;
            const bool canonical = !fixed(j) || step * -sgn >= -kDualTol;
            const bool strong_piv = std::fabs(a) > kPivotTol;
            if (bland && canonical && strong_piv) {
                if (q < 0 || j < q) q = j;
                continue;
            }
            auto consider = [&](int& slot, double& bestv) {
                if (ratio < bestv - 1e-12 ||
                    (ratio < bestv + 1e-12 && std::fabs(a) > best_piv)) {
                    bestv = std::min(bestv, ratio);
                    slot = j;
                    best_piv = std::fabs(a);
                }
            };
            if (canonical && strong_piv) consider(q, best);
            else if (canonical) consider(q_loose, best_loose);
            else consider(q_wrong, best_wrong);
        }
        if (q < 0) q = q_loose;
        if (q < 0) q = q_wrong;
        if (q < 0) throw std::runtime_error("simplex: dual ray (primal infeasible)");

        Eigen::VectorXd& w = work;
        w.setZero(m);
        for_col(q, [&](int ri, double v) { w[ri] = v; });
        ftran(w);
        // Consistency between the BTRAN'd row and the FTRAN'd column.
        if (std::fabs(w[r] - alpha[static_cast<std::size_t>(q)]) >
            1e-6 * std::max(1.0, std::fabs(alpha[static_cast<std::size_t>(q)]))) {
            refactorize();
            return true;
        }
        if (std::fabs(w[r]) <= kPivotTolRelaxed) {
            refactorize();
            return true;
        }

        const double target = need_increase ? lo[static_cast<std::size_t>(jr)]
                                            : up[static_cast<std::size_t>(jr)];
        const double delta = (xB[static_cast<std::size_t>(r)] - target) / w[r];
        for (int i = 0; i < m; ++i)
            if (w[i] != 0.0) xB[static_cast<std::size_t>(i)] -= delta * w[i];
        const double zq = bound_value(q) + delta;

        const double delta_dual = d[static_cast<std::size_t>(q)] / alpha[static_cast<std::size_t>(q)];
        if (delta_dual != 0.0)
            for (int i = 0; i < m; ++i)
                if (std::fabs(rho[i]) > kZeroTol) y[static_cast<std::size_t>(i)] += delta_dual * rho[i];
        degenerate_streak = std::fabs(delta) < 1e-12 ? degenerate_streak + 1 : 0;
        pivot(q, r, zq, need_increase ? kAtLower : kAtUpper, w, delta_dual, true);
        return true;
    }

    // ---- primal simplex --------------------------------------------------

    int price_entering() const {
        int q = -1;
        double best = kDualTol;
        for (int j = 0; j < nw; ++j) {
            if (state[static_cast<std::size_t>(j)] == kBasic || fixed(j)) continue;
            const double dj = d[static_cast<std::size_t>(j)];
            const double score =
                state[static_cast<std::size_t>(j)] == kAtLower ? -dj : dj;
            if (score > best) {
                if (bland) return j;
                best = score;
                q = j;
            }
        }
        return q;
    }

    bool primal_iteration() {
        const int q = price_entering();
        if (q < 0) return false;
        const double dir = state[static_cast<std::size_t>(q)] == kAtLower ? 1.0 : -1.0;

        Eigen::VectorXd& w = work;
        w.setZero(m);
        for_col(q, [&](int ri, double v) { w[ri] = v; });
        ftran(w);

        double tmax = up[static_cast<std::size_t>(q)] - lo[static_cast<std::size_t>(q)];
        int block = -1;
        double block_piv = 0.0;
        for (int i = 0; i < m; ++i) {
            const double g = dir * w[i];
            if (std::fabs(g) <= kPivotTolRelaxed) continue;
            const int jb = basic[static_cast<std::size_t>(i)];
            double limit;
            if (g > 0.0) {
                if (!std::isfinite(lo[static_cast<std::size_t>(jb)])) continue;
                limit = (xB[static_cast<std::size_t>(i)] - lo[static_cast<std::size_t>(jb)]) / g;
            } else {
                if (!std::isfinite(up[static_cast<std::size_t>(jb)])) continue;
                limit = (xB[static_cast<std::size_t>(i)] - up[static_cast<std::size_t>(jb)]) / g;
            }
            if (limit < -kFeasTol) limit = 0.0;
            if (limit < tmax - 1e-12 ||
                (block >= 0 && limit < tmax + 1e-12 && std::fabs(g) > block_piv)) {
                tmax = std::max(0.0, limit);
                block = i;
                block_piv = std::fabs(g);
            }
        }

        if (block < 0) {
            // bound flip; boxed models always give a finite step
            if (!std::isfinite(tmax))
                throw std::runtime_error("simplex: unbounded direction in boxed model");
            for (int i = 0; i < m; ++i)
                if (w[i] != 0.0) xB[static_cast<std::size_t>(i)] -= dir * tmax * w[i];
            state[static_cast<std::size_t>(q)] =
                state[static_cast<std::size_t>(q)] == kAtLower ? kAtUpper : kAtLower;
            degenerate_streak = 0;
            return true;
        }

        if (std::fabs(w[block]) <= kPivotTolRelaxed) {
            refactorize();
            return true;
        }

        const int jb = basic[static_cast<std::size_t>(block)];
        const bool leaves_low = dir * w[block] > 0.0;
        for (int i = 0; i < m; ++i)
            if (w[i] != 0.0) xB[static_cast<std::size_t>(i)] -= dir * tmax * w[i];
        const double zq = bound_value(q) + dir * tmax;

        // Dual update needs the alpha row of the leaving slot.
        Eigen::VectorXd& rho = work2;
        rho.setZero(m);
        rho[block] = 1.0;
        btran(rho);
        compute_alpha_row(rho);
        const double aq = alpha[static_cast<std::size_t>(q)];
        double delta_dual = 0.0;
        if (std::fabs(aq) > kPivotTolRelaxed) {
            delta_dual = d[static_cast<std::size_t>(q)] / aq;
            if (delta_dual != 0.0)
                for (int i = 0; i < m; ++i)
                    if (std::fabs(rho[i]) > kZeroTol)
                        y[static_cast<std::size_t>(i)] += delta_dual * rho[i];
        }
        degenerate_streak = tmax < 1e-12 ? degenerate_streak + 1 : 0;
        pivot(q, block, zq, leaves_low ? kAtLower : kAtUpper, w, delta_dual, true);
        (void)jb;
        return true;
    }

    // ---- driver ------------------------------------------------------------

    bool primal_feasible(double tol) const {
        for (int i = 0; i < m; ++i) {
            const int j = basic[static_cast<std::size_t>(i)];
            if (xB[static_cast<std::size_t>(i)] < lo[static_cast<std::size_t>(j)] - tol ||
                xB[static_cast<std::size_t>(i)] > up[static_cast<std::size_t>(j)] + tol)
                return false;
        }
        return true;
    }

    bool dual_feasible(double tol) const {
        for (int j = 0; j < nw; ++j) {
            if (state[static_cast<std::size_t>(j)] == kBasic || fixed(j)) continue;
            const double dj = d[static_cast<std::size_t>(j)];
            if (state[static_cast<std::size_t>(j)] == kAtLower ? dj < -tol : dj > tol)
                return false;
        }
        return true;
    }

    double objective() const {
        double obj = 0.0;
        for (int j = 0; j < n; ++j)
            if (cost[static_cast<std::size_t>(j)] != 0.0)
                obj += cost[static_cast<std::size_t>(j)] * value_of(j);
        return obj;
    }

    SolveStats run(long max_iters) {
        iter_limit = max_iters > 0 ? max_iters : 200000 + 200L * (m + n);
        iterations = 0;
        degenerate_streak = 0;
        bland = false;

        SolveStats stats;
        try {
            refactorize();
            for (int cycle = 0; cycle < 4; ++cycle) {
                // Dual loop restores primal feasibility (warm bases stay dual
                // feasible under bound changes; the cold all-logical basis is
                // dual feasible because costs are nonnegative).
                while (!primal_feasible(kFeasTol)) {
                    if (++iterations > iter_limit) return finish_iter_limit(stats);
                    if (degenerate_streak > kDegenerateLimit) bland = true;
                    if (!dual_iteration()) break;
                }
                while (primal_iteration()) {
                    if (++iterations > iter_limit) return finish_iter_limit(stats);
                    if (degenerate_streak > kDegenerateLimit) bland = true;
                }
                // Fresh factorization, then verify KKT before declaring victory.
                refactorize();
                if (primal_feasible(1e-7) && dual_feasible(1e-7)) {
                    stats.status = Status::kOptimal;
                    stats.objective = objective();
                    stats.iterations = iterations;
                    return stats;
                }
                bland = cycle >= 1; // stubborn cycling: go safe
            }
        } catch (const std::runtime_error& e) {
            if (std::string(e.what()).find("dual ray") != std::string::npos) {
                stats.status = Status::kInfeasible;
                stats.iterations = iterations;
                return stats;
            }
            throw;
        }
        throw std::runtime_error("simplex: failed to converge after refactorization cycles");
    }

    SolveStats finish_iter_limit(SolveStats& stats) {
        stats.status = Status::kIterLimit;
        stats.objective = objective();
        stats.iterations = iterations;
        return stats;
    }
};

Simplex::Simplex(const Problem& p) : impl_(std::make_unique<Impl>(p)) {}
Simplex::~Simplex() = default;

void Simplex::set_col_bounds(int j, double lo, double up) {
    assert(j >= 0 && j < impl_->n);
    impl_->lo[static_cast<std::size_t>(j)] = lo;
    impl_->up[static_cast<std::size_t>(j)] = up;
    if (impl_->state[static_cast<std::size_t>(j)] != kBasic) {
        // Snap the nonbasic state onto a finite bound.
        if (impl_->state[static_cast<std::size_t>(j)] == kAtUpper && !std::isfinite(up))
            impl_->state[static_cast<std::size_t>(j)] = kAtLower;
        if (impl_->state[static_cast<std::size_t>(j)] == kAtLower && !std::isfinite(lo))
            impl_->state[static_cast<std::size_t>(j)] = kAtUpper;
    }
}

void Simplex::set_cost(int j, double c) {
    assert(j >= 0 && j < impl_->n);
    if (c < 0.0) throw std::invalid_argument("simplex kernel requires nonnegative costs");
    impl_->cost[static_cast<std::size_t>(j)] = c;
}

SolveStats Simplex::solve(long max_iters) { return impl_->run(max_iters); }

double Simplex::col_value(int j) const { return impl_->value_of(j); }
double Simplex::row_dual(int i) const { return impl_->y[static_cast<std::size_t>(i)]; }
double Simplex::reduced_cost(int j) const { return impl_->d[static_cast<std::size_t>(j)]; }
double Simplex::objective() const { return impl_->objective(); }

BasisSnapshot Simplex::save_basis() const {
    return BasisSnapshot{impl_->state, impl_->basic};
}

void Simplex::restore_basis(const BasisSnapshot& b) {
    if (static_cast<int>(b.state.size()) != impl_->nw ||
        static_cast<int>(b.basic.size()) != impl_->m)
        throw std::invalid_argument("basis snapshot does not match problem");
    impl_->state = b.state;
    impl_->basic = b.basic;
    std::fill(impl_->pos.begin(), impl_->pos.end(), -1);
    for (int i = 0; i < impl_->m; ++i)
        impl_->pos[static_cast<std::size_t>(impl_->basic[static_cast<std::size_t>(i)])] = i;
    impl_->lu_valid = false;
    impl_->etas.clear();
}

} // namespace relaycap::lp
