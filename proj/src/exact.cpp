#include "hypersum/exact.hpp"

#include <cctype>
#include <mutex>
#include <stdexcept>

namespace hypersum {

namespace {

// Prefix cache H_0..H_n, grown on demand.
class HarmonicCache {
 public:
  ExactRational get(std::uint64_t n) {
    std::lock_guard lock(mutex_);
    while (values_.size() <= n) {
      ExactRational next = values_.back() + ExactRational(1, values_.size());
      next.canonicalize();
      values_.push_back(std::move(next));
    }
    return values_[n];
  }

 private:
  std::mutex mutex_;
  std::vector<ExactRational> values_{ExactRational(0)};
};

// Rows [n; 0..n] of the unsigned Stirling triangle.
class StirlingTable {
 public:
  BigInt get(unsigned n, unsigned k) {
    std::lock_guard lock(mutex_);
    while (rows_.size() <= n) {
      const auto& prev = rows_.back();
      const unsigned m = static_cast<unsigned>(rows_.size()) - 1;
      std::vector<BigInt> row(prev.size() + 1, 0);
      for (unsigned j = 0; j <= m + 1; ++j) {
        if (j >= 1) row[j] += prev[j - 1];
        if (j <= m) row[j] += m * prev[j];
      }
      rows_.push_back(std::move(row));
    }
    return rows_[n][k];
  }

 private:
  std::mutex mutex_;
  std::vector<std::vector<BigInt>> rows_{{BigInt(1)}};
};

class BernoulliCache {
 public:
  ExactRational get(unsigned n) {
    std::lock_guard lock(mutex_);
    while (values_.size() <= n) {
      const unsigned m = static_cast<unsigned>(values_.size());
      if (m >= 3 && m % 2 == 1) {
        values_.emplace_back(0);
        continue;
      }
      // sum_{j=0}^{m} C(m+1, j) B_j = 0
      ExactRational acc = 0;
      for (unsigned j = 0; j < m; ++j) {
        if (sgn(values_[j]) == 0) continue;
        acc += ExactRational(binomial(m + 1, j)) * values_[j];
      }
      ExactRational next = -acc / ExactRational(m + 1);
      next.canonicalize();
      values_.push_back(std::move(next));
    }
    return values_[n];
  }

 private:
  std::mutex mutex_;
  std::vector<ExactRational> values_{ExactRational(1)};
};

HarmonicCache& harmonic_cache() {
  static HarmonicCache cache;
  return cache;
}

StirlingTable& stirling_table() {
  static StirlingTable table;
  return table;
}

BernoulliCache& bernoulli_cache() {
  static BernoulliCache cache;
  return cache;
}

}  // namespace

std::string to_string(const ExactRational& q) {
  ExactRational canonical = q;
  canonical.canonicalize();
  return canonical.get_str(10);
}

std::string to_string(const BigInt& z) { return z.get_str(10); }

ExactRational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("zero denominator");
  ExactRational q(num, den);
  q.canonicalize();
  return q;
}

ExactRational parse_rational(const std::string& text) {
  auto bad = [&] { return std::invalid_argument("not a rational number: '" + text + "'"); };
  if (text.empty()) throw bad();
  const auto slash = text.find('/');
  const auto dot = text.find('.');
  auto parse_int = [&](const std::string& s) {
    std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (s.size() == start) throw bad();
    for (std::size_t i = start; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) throw bad();
    return BigInt(s[0] == '+' ? s.substr(1) : s, 10);
  };
  if (slash != std::string::npos) {
    if (dot != std::string::npos) throw bad();
    BigInt den = parse_int(text.substr(slash + 1));
    if (den == 0) throw bad();
    return make_rational(parse_int(text.substr(0, slash)), den);
  }
  if (dot != std::string::npos) {
    const std::string frac = text.substr(dot + 1);
    const std::string whole = text.substr(0, dot);
    if (frac.empty()) throw bad();
    for (char c : frac)
      if (!std::isdigit(static_cast<unsigned char>(c))) throw bad();
    const bool negative = !whole.empty() && whole[0] == '-';
    BigInt w = (whole.empty() || whole == "-" || whole == "+") ? BigInt(0) : parse_int(whole);
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    BigInt f(frac, 10);
    BigInt num = abs(w) * scale + f;
    return make_rational(negative ? BigInt(-num) : num, scale);
  }
  return ExactRational(parse_int(text));
}

ExactRational harmonic(std::uint64_t n) { return harmonic_cache().get(n); }

ExactRational hyperharmonic_recurrence(std::uint64_t n, unsigned r) {
  if (n == 0) throw std::domain_error("hyperharmonic: n must be >= 1");
  // column[k-1] holds h_k^(order) for k = 1..n
  std::vector<ExactRational> column(n);
  for (std::uint64_t k = 1; k <= n; ++k) column[k - 1] = ExactRational(1, k);
  for (unsigned order = 1; order <= r; ++order) {
    ExactRational running = 0;
    for (auto& value : column) {
      running += value;
      value = running;
    }
  }
  ExactRational out = column.back();
  out.canonicalize();
  return out;
}

ExactRational hyperharmonic_closed(std::uint64_t n, unsigned r) {
  if (n == 0) throw std::domain_error("hyperharmonic: n must be >= 1");
  if (r == 0) throw std::domain_error("hyperharmonic_closed: r must be >= 1");
  ExactRational out = ExactRational(binomial(n + r - 1, r - 1)) * (harmonic(n + r - 1) - harmonic(r - 1));
  out.canonicalize();
  return out;
}

ExactRational hyperharmonic(std::uint64_t n, unsigned r) {
  if (n == 0) throw std::domain_error("hyperharmonic: n must be >= 1");
  if (r == 0) return ExactRational(1, n);
  return hyperharmonic_closed(n, r);
}

BigInt stirling_first(unsigned n, unsigned k) {
  if (k > n) throw std::domain_error("stirling_first: k must not exceed n");
  return stirling_table().get(n, k);
}

ExactRational bernoulli(unsigned n) { return bernoulli_cache().get(n); }

BigInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

BigInt factorial(unsigned n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

std::vector<ExactRational> log_over_power_series(unsigned r, unsigned max_degree) {
  std::vector<ExactRational> out(max_degree + 1, ExactRational(0));
  for (unsigned n = 1; n <= max_degree; ++n) {
    ExactRational acc = 0;
    for (unsigned k = 1; k <= n; ++k) {
      const unsigned j = n - k;
      BigInt weight = r == 0 ? BigInt(j == 0 ? 1 : 0) : binomial(j + r - 1, r - 1);
      acc += make_rational(weight, k);
    }
    acc.canonicalize();
    out[n] = acc;
  }
  return out;
}

}  // namespace hypersum
