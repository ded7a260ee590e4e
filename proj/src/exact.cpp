#include "severi/exact.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <vector>

namespace severi {

ExactScalar::ExactScalar(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::domain_error("ExactScalar: zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

ExactScalar& ExactScalar::operator/=(const ExactScalar& rhs) {
    if (rhs.value_ == 0) throw std::domain_error("ExactScalar: division by zero");
    value_ /= rhs.value_;
    return *this;
}

namespace {

bool is_integer_literal(std::string_view s, bool allow_sign) {
    if (allow_sign && !s.empty() && s.front() == '-') s.remove_prefix(1);
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

}  // namespace

std::optional<ExactScalar> ExactScalar::parse(std::string_view text) {
    const auto slash = text.find('/');
    const auto num_text = text.substr(0, slash);
    if (!is_integer_literal(num_text, true)) return std::nullopt;
    BigInt num(std::string(num_text), 10);
    if (slash == std::string_view::npos) return ExactScalar(num);

    const auto den_text = text.substr(slash + 1);
    if (!is_integer_literal(den_text, false)) return std::nullopt;
    BigInt den(std::string(den_text), 10);
    if (den == 0) return std::nullopt;
    return ExactScalar(num, den);
}

std::string ExactScalar::to_string() const {
    if (is_integer()) return value_.get_num().get_str();
    return value_.get_str();
}

namespace {

// Pascal triangle grown row by row. Rows are append-only, so any value a
// reader has seen stays valid.
class BinomialTable {
public:
    BigInt at(long n, long k) {
        if (n < 0 || k < 0 || k > n) return 0;
        {
            std::shared_lock lock(mutex_);
            if (n < static_cast<long>(rows_.size())) return rows_[n][k];
        }
        grow(n);
        std::shared_lock lock(mutex_);
        return rows_[n][k];
    }

    void grow(long n) {
        std::unique_lock lock(mutex_);
        while (static_cast<long>(rows_.size()) <= n) {
            const auto r = static_cast<long>(rows_.size());
            std::vector<BigInt> row(r + 1, BigInt(1));
            for (long k = 1; k < r; ++k) row[k] = rows_[r - 1][k - 1] + rows_[r - 1][k];
            rows_.push_back(std::move(row));
        }
    }

private:
    std::shared_mutex mutex_;
    std::vector<std::vector<BigInt>> rows_;
};

BinomialTable& table() {
    static BinomialTable instance;
    return instance;
}

}  // namespace

BigInt binom_int(long n, long k) { return table().at(n, k); }

ExactScalar binom(long n, long k) { return ExactScalar(binom_int(n, k)); }

void reserve_binomials(long n) {
    if (n >= 0) table().grow(n);
}

ExactScalar eval_weight(LinearWeight u, long d1) { return ExactScalar(u.a * d1 + u.b); }

}  // namespace severi
