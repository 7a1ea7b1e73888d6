#pragma once

#include <cstddef>
#include <type_traits>
#include <vector>

#include "augur/rational.hpp"

namespace augur {

template <class Scalar>
struct ScalarTraits;

template <>
struct ScalarTraits<double> {
    static double eps() { return 1e-9; }
    static double to_double(double x) { return x; }
};

template <>
struct ScalarTraits<Rational> {
    static Rational eps() { return Rational(0); }
    static double to_double(const Rational& x) { return x.get_d(); }
};

/// Dense tableau for  max 1.y  s.t.  A^T y <= c, y >= 0, c >= 0, where the
/// rows of the tableau are the entries of c and columns (y variables) are
/// added one at a time. The slack basis is feasible from the start, so new
/// columns can be priced in and the tableau re-optimized without a phase 1.
/// The duals of the rows (one per entry of c) solve the covering problem
///   min c.x  s.t.  A x >= 1, x >= 0.
/// Bland's rule keeps the pivoting finite.
template <class Scalar>
class CoveringDualTableau {
public:
    enum class Status { optimal, unbounded };

    explicit CoveringDualTableau(const std::vector<Scalar>& costs) : rows_(costs.size()) {
        tab_.assign(rows_, std::vector<Scalar>(rows_, Scalar(0)));
        rhs_ = costs;
        basis_.resize(rows_);
        for (std::size_t i = 0; i < rows_; ++i) {
            tab_[i][i] = Scalar(1);
            basis_[i] = i;
        }
        reduced_.assign(rows_, Scalar(0));
        objective_ = Scalar(0);
    }

    [[nodiscard]] std::size_t num_rows() const { return rows_; }
    [[nodiscard]] std::size_t num_columns() const { return reduced_.size() - rows_; }
    [[nodiscard]] const Scalar& objective() const { return objective_; }

    /// Adds a y column with unit objective; `support` lists the rows with a
    /// coefficient of 1, all others are 0.
    void add_column(const std::vector<std::size_t>& support) {
        // Current column is B^-1 a; B^-1 sits in the slack block.
        Scalar r = Scalar(-1);
        for (std::size_t k : support) r += reduced_[k];
        for (std::size_t i = 0; i < rows_; ++i) {
            Scalar v(0);
            for (std::size_t k : support) v += tab_[i][k];
            tab_[i].push_back(v);
        }
        reduced_.push_back(r);
    }

    Status optimize() {
        const Scalar eps = ScalarTraits<Scalar>::eps();
        for (;;) {
            std::size_t enter = reduced_.size();
            for (std::size_t j = 0; j < reduced_.size(); ++j)
                if (reduced_[j] < -eps) {
                    enter = j;
                    break;
                }
            if (enter == reduced_.size()) return Status::optimal;
            std::size_t leave = rows_;
            Scalar best_ratio(0);
            for (std::size_t i = 0; i < rows_; ++i) {
                if (!(tab_[i][enter] > eps)) continue;
                Scalar ratio = rhs_[i] / tab_[i][enter];
                if (leave == rows_ || ratio < best_ratio ||
                    (!(best_ratio < ratio) && basis_[i] < basis_[leave])) {
                    leave = i;
                    best_ratio = ratio;
                }
            }
            if (leave == rows_) return Status::unbounded;
            pivot(leave, enter);
        }
    }

    /// Covering solution x (dual of row i) = reduced cost of slack i.
    [[nodiscard]] std::vector<Scalar> covering_solution() const {
        return std::vector<Scalar>(reduced_.begin(), reduced_.begin() + static_cast<std::ptrdiff_t>(rows_));
    }

private:
    void pivot(std::size_t row, std::size_t col) {
        const Scalar eps = ScalarTraits<Scalar>::eps();
        const Scalar p = tab_[row][col];
        auto& pr = tab_[row];
        for (auto& v : pr) v /= p;
        rhs_[row] /= p;
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == row) continue;
            const Scalar factor = tab_[i][col];
            if (factor == Scalar(0)) continue;
            auto& ri = tab_[i];
            for (std::size_t j = 0; j < ri.size(); ++j)
                if (pr[j] != Scalar(0)) ri[j] -= factor * pr[j];
            rhs_[i] -= factor * rhs_[row];
            if constexpr (std::is_same_v<Scalar, double>) {
                if (rhs_[i] < 0 && rhs_[i] > -eps) rhs_[i] = 0;
            }
        }
        const Scalar factor = reduced_[col];
        if (factor != Scalar(0)) {
            for (std::size_t j = 0; j < reduced_.size(); ++j)
                if (pr[j] != Scalar(0)) reduced_[j] -= factor * pr[j];
            objective_ -= factor * rhs_[row];
        }
        basis_[row] = col;
    }

    std::size_t rows_;
    std::vector<std::vector<Scalar>> tab_;
    std::vector<Scalar> rhs_;
    std::vector<std::size_t> basis_;
    std::vector<Scalar> reduced_;
    Scalar objective_;
};

}  // namespace augur
