#include "hookcomm/exact_matrix.hpp"

#include <algorithm>
#include <optional>
#include <random>

#include "hookcomm/errors.hpp"

namespace hookcomm {

Rational parse_rational(const std::string& text) {
    auto bad = [&] { return InvalidInput("not a rational number: \"" + text + "\""); };
    if (text.empty())
        throw bad();
    const auto slash = text.find('/');
    auto valid_int = [](const std::string& s, bool allow_sign) {
        std::size_t i = 0;
        if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+'))
            i = 1;
        if (i >= s.size())
            return false;
        return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(i), s.end(),
                           [](char c) { return c >= '0' && c <= '9'; });
    };
    std::string num = slash == std::string::npos ? text : text.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
    if (!valid_int(num, true) || !valid_int(den, false))
        throw bad();
    if (num[0] == '+')
        num.erase(0, 1);
    mpz_class n(num, 10);
    mpz_class d(den, 10);
    if (d == 0)
        throw InvalidInput("zero denominator in \"" + text + "\"");
    Rational q(n, d);
    q.canonicalize();
    return q;
}

std::string format_rational(const Rational& value) { return value.get_str(10); }

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

ExactMatrix::ExactMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_)
            throw InvalidInput("ragged matrix literal");
        for (long v : row)
            data_.emplace_back(v);
    }
}

ExactMatrix ExactMatrix::identity(std::size_t n) {
    ExactMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

bool ExactMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Rational& q) { return q == 0; });
}

bool ExactMatrix::is_integral() const {
    return std::all_of(data_.begin(), data_.end(),
                       [](const Rational& q) { return q.get_den() == 1; });
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

ExactMatrix matmul(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.cols() != b.rows())
        throw InvalidInput("matmul shape mismatch: " + std::to_string(a.rows()) + "x" +
                           std::to_string(a.cols()) + " times " + std::to_string(b.rows()) +
                           "x" + std::to_string(b.cols()));
    ExactMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Rational& x = a(i, k);
            if (x == 0)
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                if (b(k, j) != 0)
                    c(i, j) += x * b(k, j);
        }
    return c;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) { return matmul(a, b); }

ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw InvalidInput("matrix difference shape mismatch");
    ExactMatrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            c(i, j) = a(i, j) - b(i, j);
    return c;
}

ExactMatrix matpow(const ExactMatrix& m, unsigned exponent) {
    if (!m.is_square())
        throw InvalidInput("matpow needs a square matrix");
    ExactMatrix result = ExactMatrix::identity(m.rows());
    for (unsigned i = 0; i < exponent; ++i)
        result = result * m;
    return result;
}

ExactMatrix direct_sum(const ExactMatrix& a, const ExactMatrix& b) {
    ExactMatrix m(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            m(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            m(a.rows() + i, a.cols() + j) = b(i, j);
    return m;
}

namespace {

struct IntMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<mpz_class> data;

    IntMatrix() = default;
    IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}

    mpz_class& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    const mpz_class& at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

IntMatrix int_product(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix c(a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t k = 0; k < a.cols; ++k) {
            const mpz_class& x = a.at(i, k);
            if (x == 0)
                continue;
            for (std::size_t j = 0; j < b.cols; ++j) {
                const mpz_class& y = b.at(k, j);
                if (y != 0)
                    mpz_addmul(c.at(i, j).get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
            }
        }
    return c;
}

// Fraction-free elimination with column skipping. After each pivot step the
// active entries are minors of the original matrix, so the division by the
// previous pivot is exact.
std::optional<std::size_t> bareiss_rank_i64(std::vector<std::int64_t> a, std::size_t rows,
                                            std::size_t cols) {
    auto at = [&](std::size_t r, std::size_t c) -> std::int64_t& { return a[r * cols + c]; };
    std::int64_t prev = 1;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t piv = rank;
        while (piv < rows && at(piv, col) == 0)
            ++piv;
        if (piv == rows)
            continue;
        if (piv != rank)
            for (std::size_t j = col; j < cols; ++j)
                std::swap(at(piv, j), at(rank, j));
        const std::int64_t p = at(rank, col);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            const std::int64_t f = at(i, col);
            for (std::size_t j = col + 1; j < cols; ++j) {
                std::int64_t t1 = 0;
                std::int64_t t2 = 0;
                std::int64_t d = 0;
                if (__builtin_mul_overflow(p, at(i, j), &t1) ||
                    __builtin_mul_overflow(f, at(rank, j), &t2) ||
                    __builtin_sub_overflow(t1, t2, &d))
                    return std::nullopt;
                at(i, j) = d / prev;
            }
            at(i, col) = 0;
        }
        prev = p;
        ++rank;
    }
    return rank;
}

std::size_t bareiss_rank_mpz(std::vector<mpz_class> a, std::size_t rows, std::size_t cols) {
    auto at = [&](std::size_t r, std::size_t c) -> mpz_class& { return a[r * cols + c]; };
    mpz_class prev = 1;
    mpz_class tmp;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        // Smallest nonzero pivot keeps the next step's products cheaper.
        std::size_t piv = rows;
        for (std::size_t i = rank; i < rows; ++i)
            if (at(i, col) != 0 &&
                (piv == rows || mpz_sizeinbase(at(i, col).get_mpz_t(), 2) <
                                    mpz_sizeinbase(at(piv, col).get_mpz_t(), 2)))
                piv = i;
        if (piv == rows)
            continue;
        if (piv != rank)
            for (std::size_t j = col; j < cols; ++j)
                mpz_swap(at(piv, j).get_mpz_t(), at(rank, j).get_mpz_t());
        const mpz_class& p = at(rank, col);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            const mpz_class& f = at(i, col);
            if (f == 0) {
                for (std::size_t j = col + 1; j < cols; ++j) {
                    mpz_mul(tmp.get_mpz_t(), p.get_mpz_t(), at(i, j).get_mpz_t());
                    mpz_divexact(at(i, j).get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
                }
                continue;
            }
            for (std::size_t j = col + 1; j < cols; ++j) {
                mpz_mul(tmp.get_mpz_t(), p.get_mpz_t(), at(i, j).get_mpz_t());
                mpz_submul(tmp.get_mpz_t(), f.get_mpz_t(), at(rank, j).get_mpz_t());
                mpz_divexact(at(i, j).get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
            }
            at(i, col) = 0;
        }
        prev = p;
        ++rank;
    }
    return rank;
}

// Rank of an integer matrix; zero rows and columns are dropped first.
std::size_t int_rank(const IntMatrix& m) {
    std::vector<std::size_t> live_rows;
    std::vector<std::size_t> live_cols;
    std::vector<bool> col_used(m.cols, false);
    for (std::size_t i = 0; i < m.rows; ++i) {
        bool nonzero = false;
        for (std::size_t j = 0; j < m.cols; ++j)
            if (m.at(i, j) != 0) {
                nonzero = true;
                col_used[j] = true;
            }
        if (nonzero)
            live_rows.push_back(i);
    }
    for (std::size_t j = 0; j < m.cols; ++j)
        if (col_used[j])
            live_cols.push_back(j);
    const std::size_t r = live_rows.size();
    const std::size_t c = live_cols.size();
    if (r == 0)
        return 0;

    bool fits = true;
    for (std::size_t i : live_rows)
        for (std::size_t j : live_cols)
            fits = fits && m.at(i, j).fits_slong_p();
    if (fits) {
        std::vector<std::int64_t> small;
        small.reserve(r * c);
        for (std::size_t i : live_rows)
            for (std::size_t j : live_cols)
                small.push_back(m.at(i, j).get_si());
        if (auto rk = bareiss_rank_i64(std::move(small), r, c))
            return *rk;
    }

    std::vector<mpz_class> big;
    big.reserve(r * c);
    mpz_class g;
    for (std::size_t i : live_rows) {
        g = 0;
        for (std::size_t j : live_cols)
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), m.at(i, j).get_mpz_t());
        for (std::size_t j : live_cols) {
            big.emplace_back();
            mpz_divexact(big.back().get_mpz_t(), m.at(i, j).get_mpz_t(), g.get_mpz_t());
        }
    }
    return bareiss_rank_mpz(std::move(big), r, c);
}

// Scales each row by the lcm of its denominators.
IntMatrix row_scaled_integers(const ExactMatrix& m) {
    IntMatrix out(m.rows(), m.cols());
    mpz_class l;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        l = 1;
        for (std::size_t j = 0; j < m.cols(); ++j)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
        for (std::size_t j = 0; j < m.cols(); ++j)
            out.at(i, j) = m(i, j).get_num() * (l / m(i, j).get_den());
    }
    return out;
}

// Scales the whole matrix by the lcm of all denominators; powers of the
// result differ from powers of m by a nonzero scalar.
IntMatrix globally_scaled_integers(const ExactMatrix& m) {
    mpz_class l = 1;
    for (const auto& q : m.entries())
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    IntMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out.at(i, j) = m(i, j).get_num() * (l / m(i, j).get_den());
    return out;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    base %= p;
    while (e > 0) {
        if (e & 1U)
            r = mul_mod(r, base, p);
        base = mul_mod(base, base, p);
        e >>= 1U;
    }
    return r;
}

std::uint64_t reduce_mod(const mpz_class& z, std::uint64_t p) {
    return mpz_fdiv_ui(z.get_mpz_t(), static_cast<unsigned long>(p));
}

using ModMatrix = std::vector<std::uint64_t>;

ModMatrix reduce_matrix(const ExactMatrix& m, std::uint64_t p) {
    ModMatrix out(m.rows() * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Rational& q = m(i, j);
            const std::uint64_t den = reduce_mod(q.get_den(), p);
            if (den == 0)
                throw BadModulus("prime " + std::to_string(p) + " divides a denominator");
            const std::uint64_t num = reduce_mod(q.get_num(), p);
            out[i * m.cols() + j] = mul_mod(num, pow_mod(den, p - 2, p), p);
        }
    return out;
}

std::size_t mod_rank(ModMatrix a, std::size_t rows, std::size_t cols, std::uint64_t p) {
    auto at = [&](std::size_t r, std::size_t c) -> std::uint64_t& { return a[r * cols + c]; };
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t piv = rank;
        while (piv < rows && at(piv, col) == 0)
            ++piv;
        if (piv == rows)
            continue;
        if (piv != rank)
            for (std::size_t j = col; j < cols; ++j)
                std::swap(at(piv, j), at(rank, j));
        const std::uint64_t inv = pow_mod(at(rank, col), p - 2, p);
        for (std::size_t j = col; j < cols; ++j)
            at(rank, j) = mul_mod(at(rank, j), inv, p);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            const std::uint64_t f = at(i, col);
            if (f == 0)
                continue;
            for (std::size_t j = col; j < cols; ++j)
                at(i, j) = (at(i, j) + p - mul_mod(f, at(rank, j), p)) % p;
        }
        ++rank;
    }
    return rank;
}

ModMatrix mod_product(const ModMatrix& a, const ModMatrix& b, std::size_t n, std::uint64_t p) {
    ModMatrix c(n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const std::uint64_t x = a[i * n + k];
            if (x == 0)
                continue;
            for (std::size_t j = 0; j < n; ++j)
                c[i * n + j] = (c[i * n + j] + x * b[k * n + j]) % p;
        }
    return c;
}

void require_prime_modulus(std::uint64_t p) {
    if (p < 2 || p >= (std::uint64_t{1} << 32U))
        throw InvalidInput("modulus must be a prime below 2^32");
}

}  // namespace

std::size_t rank(const ExactMatrix& m) { return int_rank(row_scaled_integers(m)); }

std::size_t rank_mod_p(const ExactMatrix& m, std::uint64_t p) {
    require_prime_modulus(p);
    return mod_rank(reduce_matrix(m, p), m.rows(), m.cols(), p);
}

JordanReport report_from_ranks(std::vector<std::size_t> ranks) {
    if (ranks.empty() || ranks.back() != 0)
        throw InternalError("rank sequence must end at 0");
    std::vector<int> diffs;
    for (std::size_t l = 1; l < ranks.size(); ++l) {
        if (ranks[l] >= ranks[l - 1])
            throw InternalError("rank sequence is not strictly decreasing");
        diffs.push_back(static_cast<int>(ranks[l - 1] - ranks[l]));
        if (diffs.size() > 1 && diffs.back() > diffs[diffs.size() - 2])
            throw InternalError("rank differences increase; not a nilpotent rank profile");
    }
    JordanReport report;
    report.nilpotency_index = ranks.size() - 1;
    report.jordan_type = Partition::from_values(diffs).conjugate();
    report.rank_sequence = std::move(ranks);
    return report;
}

JordanReport jordan_type_of(const ExactMatrix& m) {
    if (!m.is_square())
        throw InvalidInput("Jordan type needs a square matrix");
    const std::size_t n = m.rows();
    const IntMatrix base = globally_scaled_integers(m);
    std::vector<std::size_t> ranks{n};
    IntMatrix power = base;
    while (ranks.back() != 0) {
        const std::size_t r = int_rank(power);
        if (r == ranks.back())
            throw NotNilpotent("rank of powers stalls at " + std::to_string(r));
        ranks.push_back(r);
        if (r != 0)
            power = int_product(power, base);
    }
    return report_from_ranks(std::move(ranks));
}

JordanReport jordan_type_mod_p(const ExactMatrix& m, std::uint64_t p) {
    require_prime_modulus(p);
    if (!m.is_square())
        throw InvalidInput("Jordan type needs a square matrix");
    const std::size_t n = m.rows();
    const ModMatrix base = reduce_matrix(m, p);
    std::vector<std::size_t> ranks{n};
    ModMatrix power = base;
    while (ranks.back() != 0) {
        const std::size_t r = mod_rank(power, n, n, p);
        if (r == ranks.back())
            throw NotNilpotent("rank of powers mod " + std::to_string(p) + " stalls at " +
                               std::to_string(r));
        ranks.push_back(r);
        if (r != 0)
            power = mod_product(power, base, n, p);
    }
    return report_from_ranks(std::move(ranks));
}

std::uint64_t random_prime_31(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> dist(std::uint64_t{1} << 30U,
                                                      (std::uint64_t{1} << 31U) - 1);
    auto is_prime = [](std::uint64_t x) {
        if (x % 2 == 0)
            return x == 2;
        for (std::uint64_t d = 3; d * d <= x; d += 2)
            if (x % d == 0)
                return false;
        return true;
    };
    for (;;) {
        const std::uint64_t candidate = dist(rng) | 1U;
        if (is_prime(candidate))
            return candidate;
    }
}

}  // namespace hookcomm
