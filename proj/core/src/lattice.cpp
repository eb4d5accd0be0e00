#include "fixloc/lattice.hpp"

#include "fixloc/error.hpp"

#include <algorithm>
#include <cassert>

namespace fixloc {

namespace {

void axpy(IntVector& y, const Integer& a, const IntVector& x) {
    for (std::size_t i = 0; i < y.size(); ++i)
        y[i] -= a * x[i];
}

} // namespace

LatticeBasis::LatticeBasis(std::size_t rank, std::vector<IntVector> generators)
    : rank_(rank), generators_(std::move(generators)) {
    for (const auto& g : generators_)
        if (g.size() != rank_)
            throw RankMismatch("lattice generator of length " + std::to_string(g.size()) +
                               ", expected " + std::to_string(rank_));

    const std::size_t count = generators_.size();
    std::vector<IntVector> rows = generators_;
    std::vector<IntVector> trans(count, IntVector(count, 0));
    for (std::size_t i = 0; i < count; ++i)
        trans[i][i] = 1;

    std::size_t row = 0;
    for (std::size_t col = 0; col < rank_ && row < count; ++col) {
        // Euclid on the column below `row` until a single nonzero entry remains.
        while (true) {
            std::size_t best = count;
            for (std::size_t i = row; i < count; ++i)
                if (rows[i][col] != 0 && (best == count || abs(rows[i][col]) < abs(rows[best][col])))
                    best = i;
            if (best == count)
                break;
            std::swap(rows[row], rows[best]);
            std::swap(trans[row], trans[best]);
            bool done = true;
            for (std::size_t i = row + 1; i < count; ++i) {
                if (rows[i][col] == 0)
                    continue;
                Integer q = rows[i][col] / rows[row][col];
                axpy(rows[i], q, rows[row]);
                axpy(trans[i], q, trans[row]);
                if (rows[i][col] != 0)
                    done = false;
            }
            if (done)
                break;
        }
        if (rows[row][col] == 0)
            continue;
        if (rows[row][col] < 0) {
            rows[row] = negate(rows[row]);
            trans[row] = negate(trans[row]);
        }
        for (std::size_t i = 0; i < row; ++i) {
            Integer q = floor_div(rows[i][col], rows[row][col]);
            axpy(rows[i], q, rows[row]);
            axpy(trans[i], q, trans[row]);
        }
        pivots_.push_back(col);
        ++row;
    }
    reduced_.assign(rows.begin(), rows.begin() + static_cast<std::ptrdiff_t>(row));
    transform_.assign(trans.begin(), trans.begin() + static_cast<std::ptrdiff_t>(row));
}

std::optional<IntVector> LatticeBasis::membership(const IntVector& v) const {
    if (v.size() != rank_)
        throw RankMismatch("vector of length " + std::to_string(v.size()) + " tested against rank " +
                           std::to_string(rank_) + " lattice");
    IntVector y = v;
    IntVector coords(reduced_.size(), 0);
    std::size_t k = 0;
    for (std::size_t col = 0; col < rank_; ++col) {
        if (k < pivots_.size() && pivots_[k] == col) {
            const Integer& p = reduced_[k][col];
            if (y[col] % p != 0)
                return std::nullopt;
            coords[k] = y[col] / p;
            axpy(y, coords[k], reduced_[k]);
            ++k;
        } else if (y[col] != 0) {
            return std::nullopt;
        }
    }
    IntVector cert(generators_.size(), 0);
    for (std::size_t i = 0; i < reduced_.size(); ++i)
        for (std::size_t j = 0; j < cert.size(); ++j)
            cert[j] += coords[i] * transform_[i][j];

    IntVector check(rank_, 0);
    for (std::size_t j = 0; j < cert.size(); ++j)
        for (std::size_t c = 0; c < rank_; ++c)
            check[c] += cert[j] * generators_[j][c];
    assert(check == v);
    return cert;
}

} // namespace fixloc
