#include "strandlab/linalg.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <utility>

#include <gmpxx.h>

namespace strandlab {

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols, std::vector<MatrixEntry> entries)
    : rows_(rows), cols_(cols)
{
    std::erase_if(entries, [](const MatrixEntry& e) { return e.value == 0; });
    std::sort(entries.begin(), entries.end(), [](const MatrixEntry& a, const MatrixEntry& b) {
        return std::pair(a.row, a.col) < std::pair(b.row, b.col);
    });
    for (std::size_t k = 0; k < entries.size(); ++k) {
        const auto& e = entries[k];
        if (e.row >= rows || e.col >= cols)
            throw std::invalid_argument("matrix entry out of range");
        if (k > 0 && entries[k - 1].row == e.row && entries[k - 1].col == e.col)
            throw std::invalid_argument("duplicate matrix entry");
    }
    entries_ = std::move(entries);
}

SparseMatrix SparseMatrix::transposed() const
{
    std::vector<MatrixEntry> t;
    t.reserve(entries_.size());
    for (const auto& e : entries_)
        t.push_back({e.col, e.row, e.value});
    return SparseMatrix(cols_, rows_, std::move(t));
}

SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b)
{
    if (a.cols() != b.rows())
        throw std::invalid_argument("multiply: dimension mismatch");
    std::vector<std::vector<std::pair<std::size_t, std::int64_t>>> b_rows(b.rows());
    for (const auto& e : b.entries())
        b_rows[e.row].emplace_back(e.col, e.value);
    std::map<std::pair<std::size_t, std::size_t>, std::int64_t> acc;
    for (const auto& e : a.entries()) {
        for (const auto& [col, value] : b_rows[e.col]) {
            std::int64_t prod = 0;
            auto& slot = acc[{e.row, col}];
            if (__builtin_mul_overflow(e.value, value, &prod) || __builtin_add_overflow(slot, prod, &slot))
                throw std::overflow_error("multiply: int64 overflow");
        }
    }
    std::vector<MatrixEntry> out;
    for (const auto& [rc, v] : acc)
        if (v != 0)
            out.push_back({rc.first, rc.second, v});
    return SparseMatrix(a.rows(), b.cols(), std::move(out));
}

namespace {

std::uint64_t reduce_mod(std::int64_t v, std::uint64_t p)
{
    auto r = v % static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(p) : r);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p)
{
    std::uint64_t result = 1 % p;
    base %= p;
    while (exp > 0) {
        if (exp & 1)
            result = result * base % p;
        base = base * base % p;
        exp >>= 1;
    }
    return result;
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p)
{
    return pow_mod(a, p - 2, p);
}

std::size_t rank_gf2_dense(const SparseMatrix& m)
{
    const std::size_t rows = m.rows();
    const std::size_t words = (m.cols() + 63) / 64;
    std::vector<std::uint64_t> bits(rows * words, 0);
    for (const auto& e : m.entries())
        if (e.value & 1)
            bits[e.row * words + e.col / 64] |= std::uint64_t{1} << (e.col % 64);

    std::size_t rank = 0;
    for (std::size_t col = 0; col < m.cols() && rank < rows; ++col) {
        const std::size_t w = col / 64;
        const std::uint64_t mask = std::uint64_t{1} << (col % 64);
        std::size_t pivot = rank;
        while (pivot < rows && !(bits[pivot * words + w] & mask))
            ++pivot;
        if (pivot == rows)
            continue;
        if (pivot != rank)
            std::swap_ranges(bits.begin() + pivot * words, bits.begin() + (pivot + 1) * words,
                             bits.begin() + rank * words);
        const std::uint64_t* prow = &bits[rank * words];
        for (std::size_t r = rank + 1; r < rows; ++r) {
            std::uint64_t* row = &bits[r * words];
            if (row[w] & mask)
                for (std::size_t k = w; k < words; ++k)
                    row[k] ^= prow[k];
        }
        ++rank;
    }
    return rank;
}

std::size_t rank_modp_dense(const SparseMatrix& m, std::uint64_t p)
{
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::vector<std::uint64_t> a(rows * cols, 0);
    for (const auto& e : m.entries())
        a[e.row * cols + e.col] = reduce_mod(e.value, p);

    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && a[pivot * cols + col] == 0)
            ++pivot;
        if (pivot == rows)
            continue;
        if (pivot != rank)
            std::swap_ranges(a.begin() + pivot * cols, a.begin() + (pivot + 1) * cols, a.begin() + rank * cols);
        const std::uint64_t inv = inverse_mod(a[rank * cols + col], p);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            const std::uint64_t lead = a[r * cols + col];
            if (lead == 0)
                continue;
            const std::uint64_t factor = lead * inv % p;
            for (std::size_t k = col; k < cols; ++k) {
                const std::uint64_t sub = factor * a[rank * cols + k] % p;
                std::uint64_t& x = a[r * cols + k];
                x = x >= sub ? x - sub : x + p - sub;
            }
        }
        ++rank;
    }
    return rank;
}

struct Overflow {};

// Checked int64 arithmetic; throws Overflow so the caller can retry with GMP.
struct Int64Ops {
    using Int = std::int64_t;
    static Int from(std::int64_t v) { return v; }
    static bool is_zero(const Int& v) { return v == 0; }
    static Int mul(Int a, Int b)
    {
        Int r;
        if (__builtin_mul_overflow(a, b, &r))
            throw Overflow{};
        return r;
    }
    static Int sub(Int a, Int b)
    {
        Int r;
        if (__builtin_sub_overflow(a, b, &r))
            throw Overflow{};
        return r;
    }
    static Int abs(Int a)
    {
        if (a == std::numeric_limits<Int>::min())
            throw Overflow{};
        return a < 0 ? -a : a;
    }
    static Int gcd(Int a, Int b) { return std::gcd(abs(a), abs(b)); }
    static Int div(Int a, Int b) { return a / b; }
    static bool less(const Int& a, const Int& b) { return a < b; }
};

struct MpzOps {
    using Int = mpz_class;
    static Int from(std::int64_t v) { return mpz_class(static_cast<long>(v)); }
    static bool is_zero(const Int& v) { return sgn(v) == 0; }
    static Int mul(const Int& a, const Int& b) { return a * b; }
    static Int sub(const Int& a, const Int& b) { return a - b; }
    static Int abs(const Int& a) { return ::abs(a); }
    static Int gcd(const Int& a, const Int& b)
    {
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        return g;
    }
    static Int div(const Int& a, const Int& b) { return a / b; }
    static bool less(const Int& a, const Int& b) { return a < b; }
};

// Fraction-free elimination over Z: row <- (p/g) row - (a/g) pivot, then
// divide the row by its content.
template <class Ops>
std::size_t rank_integer_dense(const SparseMatrix& m)
{
    using Int = typename Ops::Int;
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::vector<Int> a(rows * cols, Ops::from(0));
    for (const auto& e : m.entries())
        a[e.row * cols + e.col] = Ops::from(e.value);

    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rows;
        for (std::size_t r = rank; r < rows; ++r) {
            const Int& v = a[r * cols + col];
            if (Ops::is_zero(v))
                continue;
            if (pivot == rows || Ops::less(Ops::abs(v), Ops::abs(a[pivot * cols + col])))
                pivot = r;
        }
        if (pivot == rows)
            continue;
        if (pivot != rank)
            std::swap_ranges(a.begin() + pivot * cols, a.begin() + (pivot + 1) * cols, a.begin() + rank * cols);
        const Int p = a[rank * cols + col];
        for (std::size_t r = rank + 1; r < rows; ++r) {
            const Int lead = a[r * cols + col];
            if (Ops::is_zero(lead))
                continue;
            const Int g = Ops::gcd(p, lead);
            const Int pm = Ops::div(p, g);
            const Int lm = Ops::div(lead, g);
            Int content = Ops::from(0);
            for (std::size_t k = col; k < cols; ++k) {
                Int& x = a[r * cols + k];
                x = Ops::sub(Ops::mul(pm, x), Ops::mul(lm, a[rank * cols + k]));
                if (!Ops::is_zero(x))
                    content = Ops::gcd(content, x);
            }
            if (!Ops::is_zero(content) && !(Ops::abs(content) == Ops::from(1)))
                for (std::size_t k = col; k < cols; ++k)
                    a[r * cols + k] = Ops::div(a[r * cols + k], content);
        }
        ++rank;
    }
    return rank;
}

template <class Scalar>
using SparseRow = std::vector<std::pair<std::size_t, Scalar>>;

template <class Scalar, class Convert>
std::vector<SparseRow<Scalar>> rows_by_fill(const SparseMatrix& m, Convert convert)
{
    std::vector<SparseRow<Scalar>> rows(m.rows());
    for (const auto& e : m.entries()) {
        Scalar v = convert(e.value);
        if (v != 0)
            rows[e.row].emplace_back(e.col, std::move(v));
    }
    std::erase_if(rows, [](const auto& r) { return r.empty(); });
    std::stable_sort(rows.begin(), rows.end(), [](const auto& x, const auto& y) { return x.size() < y.size(); });
    return rows;
}

// Incremental echelon reduction keyed by leading column; sparsest rows are
// installed as pivots first.
std::size_t rank_modp_sparse(const SparseMatrix& m, std::uint64_t p)
{
    auto rows = rows_by_fill<std::uint64_t>(m, [p](std::int64_t v) { return reduce_mod(v, p); });
    std::unordered_map<std::size_t, SparseRow<std::uint64_t>> pivots;
    SparseRow<std::uint64_t> scratch;
    for (auto& row : rows) {
        while (!row.empty()) {
            auto it = pivots.find(row.front().first);
            if (it == pivots.end()) {
                const std::uint64_t inv = inverse_mod(row.front().second, p);
                for (auto& [c, v] : row)
                    v = v * inv % p;
                pivots.emplace(row.front().first, std::move(row));
                break;
            }
            const auto& piv = it->second;
            const std::uint64_t factor = row.front().second;
            scratch.clear();
            std::size_t i = 0, j = 0;
            while (i < row.size() || j < piv.size()) {
                if (j == piv.size() || (i < row.size() && row[i].first < piv[j].first)) {
                    scratch.push_back(row[i++]);
                } else {
                    const std::uint64_t sub = factor * piv[j].second % p;
                    std::uint64_t x = 0;
                    if (i < row.size() && row[i].first == piv[j].first)
                        x = row[i++].second;
                    x = x >= sub ? x - sub : x + p - sub;
                    if (x != 0)
                        scratch.emplace_back(piv[j].first, x);
                    ++j;
                }
            }
            row.swap(scratch);
        }
    }
    return pivots.size();
}

std::size_t rank_rational_sparse(const SparseMatrix& m)
{
    auto rows = rows_by_fill<mpz_class>(m, [](std::int64_t v) { return mpz_class(static_cast<long>(v)); });
    std::unordered_map<std::size_t, SparseRow<mpz_class>> pivots;
    SparseRow<mpz_class> scratch;
    for (auto& row : rows) {
        while (!row.empty()) {
            auto it = pivots.find(row.front().first);
            if (it == pivots.end()) {
                pivots.emplace(row.front().first, std::move(row));
                break;
            }
            const auto& piv = it->second;
            const mpz_class g = MpzOps::gcd(piv.front().second, row.front().second);
            const mpz_class pm = piv.front().second / g;
            const mpz_class lm = row.front().second / g;
            scratch.clear();
            mpz_class content = 0;
            std::size_t i = 0, j = 0;
            while (i < row.size() || j < piv.size()) {
                mpz_class x;
                std::size_t c;
                if (j == piv.size() || (i < row.size() && row[i].first < piv[j].first)) {
                    c = row[i].first;
                    x = pm * row[i++].second;
                } else {
                    c = piv[j].first;
                    x = -lm * piv[j].second;
                    if (i < row.size() && row[i].first == c)
                        x += pm * row[i++].second;
                    ++j;
                }
                if (sgn(x) != 0) {
                    content = MpzOps::gcd(content, x);
                    scratch.emplace_back(c, std::move(x));
                }
            }
            if (content > 1)
                for (auto& [c, v] : scratch)
                    v /= content;
            row.swap(scratch);
        }
    }
    return pivots.size();
}

} // namespace

std::size_t rank(const SparseMatrix& m, const FieldSpec& field, const RankOptions& options)
{
    if (m.entries().empty())
        return 0;
    const std::size_t cells = m.rows() * m.cols();
    if (field.is_rationals()) {
        if (cells > options.dense_bit_limit / 64)
            return rank_rational_sparse(m);
        try {
            return rank_integer_dense<Int64Ops>(m);
        } catch (const Overflow&) {
            return rank_integer_dense<MpzOps>(m);
        }
    }
    const std::uint64_t p = field.characteristic();
    if (p == 2 && cells <= options.dense_bit_limit)
        return rank_gf2_dense(m);
    if (p != 2 && cells <= options.dense_bit_limit / 64)
        return rank_modp_dense(m, p);
    return rank_modp_sparse(m, p);
}

} // namespace strandlab
