#include "cyclocover/smith.hpp"

#include <optional>

namespace cyclocover {

namespace {

struct Position {
    std::size_t row;
    std::size_t col;
};

// Nonzero entry of least Laurent degree in the block [t.., t..], first in row-major order on ties.
std::optional<Position> min_degree_entry(const RMatrix& m, std::size_t t) {
    std::optional<Position> best;
    std::uint64_t best_deg = 0;
    for (std::size_t i = t; i < m.rows(); ++i) {
        for (std::size_t j = t; j < m.cols(); ++j) {
            const auto& e = m(i, j);
            if (e.is_zero()) continue;
            if (!best || e.degree() < best_deg) {
                best = Position{i, j};
                best_deg = e.degree();
            }
        }
    }
    return best;
}

class Reducer {
public:
    explicit Reducer(const RMatrix& a)
        : d_(a),
          u_(RMatrix::identity(a.field(), a.rows())),
          v_(RMatrix::identity(a.field(), a.cols())),
          vinv_(RMatrix::identity(a.field(), a.cols())) {}

    SmithForm run() {
        const std::size_t steps = std::min(d_.rows(), d_.cols());
        for (std::size_t t = 0; t < steps; ++t) {
            auto pos = min_degree_entry(d_, t);
            if (!pos) break;
            bring_to_pivot(t, *pos);
            reduce_cross(t);
            normalize_pivot(t);
        }
        return SmithForm{std::move(u_), std::move(d_), std::move(v_), std::move(vinv_)};
    }

private:
    void swap_rows(std::size_t a, std::size_t b) {
        d_.swap_rows(a, b);
        u_.swap_rows(a, b);
    }

    void swap_cols(std::size_t a, std::size_t b) {
        d_.swap_cols(a, b);
        v_.swap_cols(a, b);
        vinv_.swap_rows(a, b);
    }

    void add_row(std::size_t dst, std::size_t src, const LaurentPoly& q) {
        d_.add_row_multiple(dst, src, q);
        u_.add_row_multiple(dst, src, q);
    }

    // col[dst] += q * col[src]; on V^{-1} this is row[src] -= q * row[dst].
    void add_col(std::size_t dst, std::size_t src, const LaurentPoly& q) {
        d_.add_col_multiple(dst, src, q);
        v_.add_col_multiple(dst, src, q);
        vinv_.add_row_multiple(src, dst, -q);
    }

    void bring_to_pivot(std::size_t t, Position pos) {
        swap_rows(t, pos.row);
        swap_cols(t, pos.col);
    }

    // Clears row t and column t outside the pivot, and enforces that the pivot
    // divides every entry of the trailing block.
    void reduce_cross(std::size_t t) {
        for (;;) {
            bool dirty = false;
            for (std::size_t i = t + 1; i < d_.rows(); ++i) {
                if (d_(i, t).is_zero()) continue;
                auto q = divmod(d_(i, t), d_(t, t)).first;
                add_row(i, t, -q);
                if (!d_(i, t).is_zero()) dirty = true;
            }
            for (std::size_t j = t + 1; j < d_.cols(); ++j) {
                if (d_(t, j).is_zero()) continue;
                auto q = divmod(d_(t, j), d_(t, t)).first;
                add_col(j, t, -q);
                if (!d_(t, j).is_zero()) dirty = true;
            }
            if (dirty) {
                promote_smaller_remainder(t);
                continue;
            }
            if (auto bad = non_divisible_entry(t)) {
                // Pull the offending row into the pivot row; the next pass leaves a smaller remainder.
                add_row(t, bad->row, LaurentPoly::one(d_.field()));
                continue;
            }
            return;
        }
    }

    // Moves the least-degree remainder in row/column t onto the pivot.
    void promote_smaller_remainder(std::size_t t) {
        std::optional<Position> best;
        std::uint64_t best_deg = d_(t, t).degree();
        for (std::size_t i = t + 1; i < d_.rows(); ++i) {
            if (!d_(i, t).is_zero() && d_(i, t).degree() < best_deg) {
                best = Position{i, t};
                best_deg = d_(i, t).degree();
            }
        }
        for (std::size_t j = t + 1; j < d_.cols(); ++j) {
            if (!d_(t, j).is_zero() && d_(t, j).degree() < best_deg) {
                best = Position{t, j};
                best_deg = d_(t, j).degree();
            }
        }
        if (!best) return;
        if (best->row != t) swap_rows(t, best->row);
        if (best->col != t) swap_cols(t, best->col);
    }

    std::optional<Position> non_divisible_entry(std::size_t t) const {
        for (std::size_t i = t + 1; i < d_.rows(); ++i) {
            for (std::size_t j = t + 1; j < d_.cols(); ++j) {
                if (!d_(i, j).is_zero() && !divides(d_(t, t), d_(i, j))) return Position{i, j};
            }
        }
        return std::nullopt;
    }

    void normalize_pivot(std::size_t t) {
        const LaurentPoly unit = d_(t, t).normalizing_unit();
        d_.scale_row(t, unit);
        u_.scale_row(t, unit);
    }

    RMatrix d_;
    RMatrix u_;
    RMatrix v_;
    RMatrix vinv_;
};

} // namespace

std::size_t SmithForm::rank() const {
    std::size_t r = 0;
    const std::size_t n = std::min(d.rows(), d.cols());
    while (r < n && !d(r, r).is_zero()) ++r;
    return r;
}

std::vector<LaurentPoly> SmithForm::diagonal() const {
    std::vector<LaurentPoly> out;
    const std::size_t n = std::min(d.rows(), d.cols());
    for (std::size_t i = 0; i < n; ++i) out.push_back(d(i, i));
    return out;
}

SmithForm smith_normal_form(const RMatrix& a) {
    return Reducer(a).run();
}

std::uint64_t ModuleDecomposition::torsion_dimension() const {
    std::uint64_t total = 0;
    for (const auto& p : divisors) total += p.degree();
    return total;
}

} // namespace cyclocover
