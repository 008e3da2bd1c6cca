#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "mutinv/numeric.hpp"

namespace mutinv {

using IntMatrix = std::vector<std::vector<Int>>;

// ---------------------------------------------------------------------------
// Componentwise-minimal positive integer diagonal D with D*B skew-symmetric,
// or nullopt if none exists. Minimality is per connected component of the
// nonzero pattern: entries are normalized by the component gcd.
inline std::optional<std::vector<Int>> find_skew_symmetrizer(const IntMatrix& b) {
    size_t n = b.size();
    for (const auto& row : b) {
        if (row.size() != n) throw shape_error("find_skew_symmetrizer: matrix is not square");
    }
    for (size_t i = 0; i < n; ++i) {
        if (b[i][i] != 0) return std::nullopt;  // (DB)_ii = d_i b_ii forces b_ii = 0
    }
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i + 1; j < n; ++j) {
            if ((b[i][j] == 0) != (b[j][i] == 0)) return std::nullopt;
            if (b[i][j] != 0 && (b[i][j] > 0) == (b[j][i] > 0)) return std::nullopt;
        }
    }

    // d_j / d_i = |b_ij| / |b_ji| along edges of the nonzero pattern
    std::vector<Rat> d(n, Rat(0));
    std::vector<int> comp(n, -1);
    int ncomp = 0;
    for (size_t root = 0; root < n; ++root) {
        if (comp[root] >= 0) continue;
        comp[root] = ncomp;
        d[root] = 1;
        std::vector<size_t> stack{root};
        while (!stack.empty()) {
            size_t i = stack.back();
            stack.pop_back();
            for (size_t j = 0; j < n; ++j) {
                if (b[i][j] == 0) continue;
                Rat dj = d[i] * Rat(boost::multiprecision::abs(b[i][j]),
                                    boost::multiprecision::abs(b[j][i]));
                if (comp[j] < 0) {
                    comp[j] = ncomp;
                    d[j] = dj;
                    stack.push_back(j);
                } else if (d[j] != dj) {
                    return std::nullopt;  // inconsistent cycle
                }
            }
        }
        ++ncomp;
    }

    // scale each component to the minimal positive integer vector
    std::vector<Int> scale_num(static_cast<size_t>(ncomp), 1);
    for (size_t i = 0; i < n; ++i) {
        Int den = boost::multiprecision::denominator(d[i]);
        size_t c = static_cast<size_t>(comp[i]);
        scale_num[c] = boost::multiprecision::lcm(scale_num[c], den);
    }
    std::vector<Int> out(n);
    for (size_t i = 0; i < n; ++i) {
        Rat v = d[i] * Rat(scale_num[static_cast<size_t>(comp[i])]);
        out[i] = boost::multiprecision::numerator(v);
    }
    std::vector<Int> g(static_cast<size_t>(ncomp), 0);
    for (size_t i = 0; i < n; ++i)
        g[static_cast<size_t>(comp[i])] = boost::multiprecision::gcd(g[static_cast<size_t>(comp[i])], out[i]);
    for (size_t i = 0; i < n; ++i) out[i] /= g[static_cast<size_t>(comp[i])];

    // final exactness check, covers every (i, j) pair at once
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (out[i] * b[i][j] != -out[j] * b[j][i]) return std::nullopt;
    return out;
}

// ---------------------------------------------------------------------------
// Skew-symmetrizable integer matrix with a designated set of mutable indices.
// Validated on construction; values are immutable afterwards.
class ExchangeMatrix {
  public:
    // An empty flag vector means every index is mutable.
    ExchangeMatrix(IntMatrix rows, std::vector<bool> mutable_flags)
        : n_(static_cast<int>(rows.size())),
          rows_(std::move(rows)),
          mutable_(std::move(mutable_flags)) {
        if (n_ == 0) throw shape_error("ExchangeMatrix: empty matrix");
        for (const auto& r : rows_) {
            if (static_cast<int>(r.size()) != n_)
                throw shape_error("ExchangeMatrix: matrix is not square");
        }
        if (mutable_.empty()) mutable_.assign(static_cast<size_t>(n_), true);
        if (static_cast<int>(mutable_.size()) != n_)
            throw shape_error("ExchangeMatrix: mutable flag count mismatch");
        if (std::none_of(mutable_.begin(), mutable_.end(), [](bool m) { return m; }))
            throw validation_error("ExchangeMatrix: mutable set is empty");
        for (int i = 0; i < n_; ++i) {
            if (rows_[static_cast<size_t>(i)][static_cast<size_t>(i)] != 0)
                throw validation_error("ExchangeMatrix: nonzero diagonal entry");
        }
        auto d = find_skew_symmetrizer(rows_);
        if (!d) throw validation_error("ExchangeMatrix: matrix is not skew-symmetrizable");
        symmetrizer_ = std::move(*d);
    }

    // all indices mutable
    explicit ExchangeMatrix(IntMatrix rows) : ExchangeMatrix(std::move(rows), {}) {}

    int size() const { return n_; }
    const Int& at(int i, int j) const {
        return rows_[static_cast<size_t>(i)][static_cast<size_t>(j)];
    }
    const IntMatrix& rows() const { return rows_; }
    bool is_mutable(int i) const { return mutable_[static_cast<size_t>(i)]; }
    const std::vector<bool>& mutable_flags() const { return mutable_; }
    const std::vector<Int>& skew_symmetrizer() const { return symmetrizer_; }

    std::vector<int> mutable_indices() const {
        std::vector<int> out;
        for (int i = 0; i < n_; ++i)
            if (mutable_[static_cast<size_t>(i)]) out.push_back(i);
        return out;
    }

    bool is_skew_symmetric() const {
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j)
                if (at(i, j) != -at(j, i)) return false;
        return true;
    }

    std::vector<Int> row_major() const {
        std::vector<Int> out;
        out.reserve(static_cast<size_t>(n_) * static_cast<size_t>(n_));
        for (const auto& r : rows_) out.insert(out.end(), r.begin(), r.end());
        return out;
    }

    bool operator==(const ExchangeMatrix& o) const {
        return rows_ == o.rows_ && mutable_ == o.mutable_;
    }

  private:
    int n_;
    IntMatrix rows_;
    std::vector<bool> mutable_;
    std::vector<Int> symmetrizer_;
};

inline void check_mutable_index(const ExchangeMatrix& b, int k) {
    if (k < 0 || k >= b.size()) throw index_error("mutation index out of range");
    if (!b.is_mutable(k)) throw index_error("mutation at a frozen index");
}

// Matrix mutation at mutable index k (0-based). Involutive; preserves the
// skew-symmetrizer.
inline ExchangeMatrix mutate_matrix(const ExchangeMatrix& b, int k) {
    check_mutable_index(b, k);
    int n = b.size();
    IntMatrix out(static_cast<size_t>(n), std::vector<Int>(static_cast<size_t>(n)));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == k || j == k) {
                out[static_cast<size_t>(i)][static_cast<size_t>(j)] = -b.at(i, j);
            } else {
                Int t = b.at(i, k) * boost::multiprecision::abs(b.at(k, j)) +
                        boost::multiprecision::abs(b.at(i, k)) * b.at(k, j);
                out[static_cast<size_t>(i)][static_cast<size_t>(j)] = b.at(i, j) + t / 2;
            }
        }
    }
    return ExchangeMatrix(std::move(out), b.mutable_flags());
}

// ---------------------------------------------------------------------------
// Quiver as raw data: frozen flags per vertex and a multiset of arrows.
// Opposite arrow pairs are net-cancelled by the signed adjacency formula.
struct Quiver {
    std::vector<bool> frozen;
    std::vector<std::pair<int, int>> arrows;  // (source, target), 0-based

    int size() const { return static_cast<int>(frozen.size()); }
};

inline ExchangeMatrix quiver_to_matrix(const Quiver& q) {
    int n = q.size();
    if (n == 0) throw shape_error("quiver_to_matrix: quiver has no vertices");
    IntMatrix rows(static_cast<size_t>(n), std::vector<Int>(static_cast<size_t>(n), 0));
    for (auto [s, t] : q.arrows) {
        if (s < 0 || s >= n || t < 0 || t >= n)
            throw validation_error("quiver_to_matrix: arrow endpoint out of range");
        if (s == t) throw validation_error("quiver_to_matrix: loop arrow");
        rows[static_cast<size_t>(s)][static_cast<size_t>(t)] += 1;
        rows[static_cast<size_t>(t)][static_cast<size_t>(s)] -= 1;
    }
    std::vector<bool> mut(q.frozen.size());
    for (size_t i = 0; i < mut.size(); ++i) mut[i] = !q.frozen[i];
    return ExchangeMatrix(std::move(rows), std::move(mut));
}

// Only meaningful for skew-symmetric matrices; the resulting quiver is
// 2-cycle free by construction.
inline Quiver matrix_to_quiver(const ExchangeMatrix& b) {
    if (!b.is_skew_symmetric())
        throw validation_error("matrix_to_quiver: matrix is not skew-symmetric");
    Quiver q;
    q.frozen.resize(static_cast<size_t>(b.size()));
    for (int i = 0; i < b.size(); ++i) q.frozen[static_cast<size_t>(i)] = !b.is_mutable(i);
    for (int i = 0; i < b.size(); ++i) {
        for (int j = 0; j < b.size(); ++j) {
            for (Int m = 0; m < b.at(i, j); ++m) q.arrows.emplace_back(i, j);
        }
    }
    return q;
}

// ---------------------------------------------------------------------------
// Isomorphism sigma with c_ij = b_{sigma(i), sigma(j)} respecting the
// frozen/mutable partition; returns the lexicographically least image vector.
inline std::optional<std::vector<int>> find_isomorphism(const ExchangeMatrix& b,
                                                        const ExchangeMatrix& c) {
    if (b.size() != c.size()) throw shape_error("find_isomorphism: size mismatch");
    int n = b.size();
    if (n > 8) throw param_error("find_isomorphism: brute-force search limited to n <= 8");
    std::vector<int> sigma(static_cast<size_t>(n));
    std::iota(sigma.begin(), sigma.end(), 0);
    do {
        bool ok = true;
        for (int i = 0; ok && i < n; ++i) {
            if (c.is_mutable(i) != b.is_mutable(sigma[static_cast<size_t>(i)])) ok = false;
        }
        for (int i = 0; ok && i < n; ++i) {
            for (int j = 0; ok && j < n; ++j) {
                if (c.at(i, j) != b.at(sigma[static_cast<size_t>(i)], sigma[static_cast<size_t>(j)]))
                    ok = false;
            }
        }
        if (ok) return sigma;
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return std::nullopt;
}

// Least row-major entry sequence over all permutations preserving the
// frozen/mutable pattern; two matrices are isomorphic (respecting the
// partition) iff their keys agree.
inline std::vector<Int> canonical_form(const ExchangeMatrix& b) {
    int n = b.size();
    if (n > 8) throw param_error("canonical_form: brute-force search limited to n <= 8");
    std::vector<int> sigma(static_cast<size_t>(n));
    std::iota(sigma.begin(), sigma.end(), 0);
    std::optional<std::vector<Int>> best;
    std::vector<Int> cur(static_cast<size_t>(n) * static_cast<size_t>(n));
    do {
        bool ok = true;
        for (int i = 0; ok && i < n; ++i)
            if (b.is_mutable(i) != b.is_mutable(sigma[static_cast<size_t>(i)])) ok = false;
        if (!ok) continue;
        size_t idx = 0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                cur[idx++] = b.at(sigma[static_cast<size_t>(i)], sigma[static_cast<size_t>(j)]);
        if (!best || cur < *best) best = cur;
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return *best;
}

inline IntMatrix unflatten(const std::vector<Int>& seq, int n) {
    IntMatrix rows(static_cast<size_t>(n), std::vector<Int>(static_cast<size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            rows[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                seq[static_cast<size_t>(i) * static_cast<size_t>(n) + static_cast<size_t>(j)];
    return rows;
}

struct MutationClass {
    std::vector<ExchangeMatrix> raw_class;    // exact matrices, sorted row-major
    std::vector<ExchangeMatrix> iso_classes;  // canonical representatives, sorted
    bool finite = true;
};

// BFS closure under mutation at all mutable indices. raw_class dedups exact
// matrices; iso_classes dedups by canonical form. Stops with finite = false
// once the isomorphism-class count exceeds `limit`.
inline MutationClass mutation_class(const ExchangeMatrix& b, size_t limit) {
    if (limit == 0) throw param_error("mutation_class: limit must be positive");
    std::map<std::vector<Int>, ExchangeMatrix> raw;
    std::map<std::vector<Int>, ExchangeMatrix> iso;
    std::queue<ExchangeMatrix> work;

    auto add = [&](const ExchangeMatrix& m) -> bool {
        auto key = m.row_major();
        if (raw.contains(key)) return true;
        auto canon = canonical_form(m);
        if (!iso.contains(canon)) {
            if (iso.size() == limit) return false;  // would exceed the cap
            iso.emplace(canon, ExchangeMatrix(unflatten(canon, m.size()), m.mutable_flags()));
        }
        raw.emplace(std::move(key), m);
        work.push(m);
        return true;
    };

    MutationClass out;
    if (!add(b)) out.finite = false;
    while (out.finite && !work.empty()) {
        ExchangeMatrix cur = std::move(work.front());
        work.pop();
        for (int k : cur.mutable_indices()) {
            if (!add(mutate_matrix(cur, k))) {
                out.finite = false;
                break;
            }
        }
    }
    for (auto& [key, m] : raw) out.raw_class.push_back(std::move(m));
    for (auto& [key, m] : iso) out.iso_classes.push_back(std::move(m));
    return out;
}

// ---------------------------------------------------------------------------
// Hermite normal form machinery for the grading kernel.
namespace detail {

// Row-style integer elimination of `w` with the same unimodular operations
// mirrored on `u`. Returns the number of pivot rows.
inline size_t hermite_triangularize(IntMatrix& w, IntMatrix* u) {
    size_t nrows = w.size();
    size_t ncols = nrows == 0 ? 0 : w[0].size();
    auto row_op = [&](size_t i, size_t j, const Int& q) {  // row_i -= q * row_j
        for (size_t c = 0; c < ncols; ++c) w[i][c] -= q * w[j][c];
        if (u)
            for (size_t c = 0; c < (*u)[i].size(); ++c) (*u)[i][c] -= q * (*u)[j][c];
    };
    auto swap_rows = [&](size_t i, size_t j) {
        std::swap(w[i], w[j]);
        if (u) std::swap((*u)[i], (*u)[j]);
    };
    auto negate_row = [&](size_t i) {
        for (auto& x : w[i]) x = -x;
        if (u)
            for (auto& x : (*u)[i]) x = -x;
    };

    size_t r = 0;
    for (size_t c = 0; c < ncols && r < nrows; ++c) {
        // euclidean reduction in column c among rows >= r
        while (true) {
            size_t best = nrows;
            for (size_t i = r; i < nrows; ++i) {
                if (w[i][c] == 0) continue;
                if (best == nrows || boost::multiprecision::abs(w[i][c]) <
                                         boost::multiprecision::abs(w[best][c]))
                    best = i;
            }
            if (best == nrows) break;
            swap_rows(r, best);
            bool done = true;
            for (size_t i = r + 1; i < nrows; ++i) {
                if (w[i][c] == 0) continue;
                Int q = w[i][c] / w[r][c];  // truncated division keeps |remainder| < |pivot|
                row_op(i, r, q);
                if (w[i][c] != 0) done = false;
            }
            if (done) break;
        }
        if (w[r][c] != 0) {
            if (w[r][c] < 0) negate_row(r);
            ++r;
        }
    }
    return r;
}

// Canonical HNF of the lattice spanned by the rows: triangular pivots
// positive, entries above each pivot reduced into [0, pivot).
inline IntMatrix hermite_normal_form(IntMatrix rows) {
    size_t rank = hermite_triangularize(rows, nullptr);
    rows.resize(rank);
    size_t ncols = rows.empty() ? 0 : rows[0].size();
    for (size_t r = 0; r < rank; ++r) {
        size_t c = 0;
        while (c < ncols && rows[r][c] == 0) ++c;
        if (c == ncols) continue;
        for (size_t i = 0; i < r; ++i) {
            // floor division so the reduced entry lands in [0, pivot)
            Int q = rows[i][c] / rows[r][c];
            if (rows[i][c] - q * rows[r][c] < 0) q -= 1;
            if (q == 0) continue;
            for (size_t k = 0; k < ncols; ++k) rows[i][k] -= q * rows[r][k];
        }
    }
    return rows;
}

}  // namespace detail

// Integer basis of { v : v^T B_col(k) = 0 for every mutable k }, in Hermite
// normal form. Each basis vector is primitive for the instances in scope;
// the empty basis is returned when only v = 0 works.
inline std::vector<std::vector<Int>> grading_vectors(const ExchangeMatrix& b) {
    int n = b.size();
    std::vector<int> mut = b.mutable_indices();
    // w = B restricted to mutable columns, rows indexed by v-coordinates
    IntMatrix w(static_cast<size_t>(n), std::vector<Int>(mut.size()));
    for (int i = 0; i < n; ++i)
        for (size_t r = 0; r < mut.size(); ++r)
            w[static_cast<size_t>(i)][r] = b.at(i, mut[r]);
    IntMatrix u(static_cast<size_t>(n), std::vector<Int>(static_cast<size_t>(n), 0));
    for (int i = 0; i < n; ++i) u[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;

    size_t rank = detail::hermite_triangularize(w, &u);
    IntMatrix kernel(u.begin() + static_cast<std::ptrdiff_t>(rank), u.end());
    return detail::hermite_normal_form(std::move(kernel));
}

}  // namespace mutinv
