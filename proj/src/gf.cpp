#include "ppclass/gf.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "ppclass/error.hpp"

namespace ppclass {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonPrime: return "NonPrime";
    case ErrorCode::NotIrreducible: return "NotIrreducible";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::NotADivisor: return "NotADivisor";
    case ErrorCode::InvalidElement: return "InvalidElement";
    case ErrorCode::BadExponent: return "BadExponent";
    case ErrorCode::NotRootOfUnity: return "NotRootOfUnity";
    case ErrorCode::ZeroShift: return "ZeroShift";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::TooLargeField: return "TooLargeField";
    case ErrorCode::NotAPermutation: return "NotAPermutation";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::DegenerateParameters: return "DegenerateParameters";
    case ErrorCode::NotConstructible: return "NotConstructible";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

namespace {

using Coeffs = std::vector<std::uint32_t>;

void trim(Coeffs& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a by a monic divisor over F_p.
Coeffs remainder_mod_p(Coeffs a, const Coeffs& divisor, std::uint32_t p) {
  trim(a);
  const std::size_t dd = divisor.size() - 1;
  while (a.size() > dd) {
    const std::uint32_t lead = a.back();
    const std::size_t shift = a.size() - 1 - dd;
    for (std::size_t i = 0; i <= dd; ++i) {
      a[shift + i] = (a[shift + i] + (p - lead) * divisor[i]) % p;
    }
    trim(a);
  }
  return a;
}

Coeffs decode(std::uint64_t index, std::uint32_t p, std::size_t len) {
  Coeffs c(len);
  for (auto& x : c) {
    x = static_cast<std::uint32_t>(index % p);
    index /= p;
  }
  return c;
}

bool irreducible_mod_p(const Coeffs& f, std::uint32_t p) {
  const std::size_t n = f.size() - 1;
  if (n <= 1) return n == 1;
  for (std::size_t deg = 1; deg <= n / 2; ++deg) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < deg; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      Coeffs g = decode(idx, p, deg);
      g.push_back(1);
      if (remainder_mod_p(f, g, p).empty()) return false;
    }
  }
  return true;
}

// Lexicographic enumeration with the constant coefficient most significant.
Coeffs smallest_irreducible(std::uint32_t p, std::uint32_t n) {
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < n; ++i) count *= p;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    Coeffs f(n + 1);
    std::uint64_t rest = idx;
    for (std::uint32_t i = n; i-- > 0;) {
      f[i] = static_cast<std::uint32_t>(rest % p);
      rest /= p;
    }
    f[n] = 1;
    if (irreducible_mod_p(f, p)) return f;
  }
  throw Error(ErrorCode::NotIrreducible, "no irreducible polynomial found");
}

}  // namespace

Field Field::build(std::uint32_t p, std::uint32_t n,
                   std::optional<std::vector<std::uint32_t>> modulus_override, std::uint32_t cap) {
  if (!is_prime(p)) throw Error(ErrorCode::NonPrime, std::to_string(p) + " is not prime");
  if (n < 1) throw Error(ErrorCode::OutOfRange, "extension degree must be >= 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    q *= p;
    if (q > cap) {
      throw Error(ErrorCode::CapExceeded,
                  "field size exceeds cap " + std::to_string(cap));
    }
  }

  Field f;
  f.p_ = p;
  f.n_ = n;
  f.q_ = static_cast<std::uint32_t>(q);

  if (modulus_override) {
    Coeffs m = *modulus_override;
    if (m.size() != n + 1 || m.back() != 1 ||
        std::any_of(m.begin(), m.end(), [p](std::uint32_t c) { return c >= p; }) ||
        !irreducible_mod_p(m, p)) {
      throw Error(ErrorCode::NotIrreducible, "modulus override is not a monic irreducible of degree " +
                                                 std::to_string(n));
    }
    f.modulus_ = std::move(m);
  } else if (n == 1) {
    f.modulus_ = {0, 1};
  } else {
    f.modulus_ = smallest_irreducible(p, n);
  }

  f.neg_.resize(q);
  for (std::uint32_t i = 0; i < q; ++i) {
    Coeffs d = decode(i, p, n);
    for (auto& c : d) c = (p - c) % p;
    f.neg_[i] = f.from_digits(d).index;
  }

  // Schoolbook multiplication mod the modulus, used only to seed the tables.
  auto slow_mul = [&](std::uint32_t a, std::uint32_t b) {
    const Coeffs x = decode(a, p, n);
    const Coeffs y = decode(b, p, n);
    Coeffs prod(2 * n - 1, 0);
    for (std::uint32_t i = 0; i < n; ++i) {
      for (std::uint32_t j = 0; j < n; ++j) {
        prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{x[i]} * y[j]) % p);
      }
    }
    Coeffs r = n == 1 ? prod : remainder_mod_p(prod, f.modulus_, p);
    r.resize(n, 0);
    return f.from_digits(r).index;
  };
  auto slow_pow = [&](std::uint32_t a, std::uint64_t e) {
    std::uint32_t result = 1;
    while (e > 0) {
      if (e & 1) result = slow_mul(result, a);
      a = slow_mul(a, a);
      e >>= 1;
    }
    return result;
  };

  const std::uint64_t order = q - 1;
  const auto factors = prime_factors(order);
  std::uint32_t gen = 0;
  for (std::uint32_t cand = 1; cand < q; ++cand) {
    if (slow_pow(cand, order) != 1) continue;
    bool ok = true;
    for (auto l : factors) {
      if (slow_pow(cand, order / l) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) {
      gen = cand;
      break;
    }
  }
  f.primitive_ = Elem{gen};

  f.exp_.resize(order);
  f.log_.assign(q, 0);
  std::uint32_t cur = 1;
  for (std::uint64_t e = 0; e < order; ++e) {
    f.exp_[e] = cur;
    f.log_[cur] = static_cast<std::uint32_t>(e);
    cur = slow_mul(cur, gen);
  }

  if (q <= 1024) {
    std::vector<std::uint32_t> table(std::size_t{q} * q);
    for (std::uint32_t a = 0; a < q; ++a) {
      for (std::uint32_t b = 0; b < q; ++b) table[std::size_t{a} * q + b] = f.add(Elem{a}, Elem{b}).index;
    }
    f.add_table_ = std::move(table);
  }
  return f;
}

Elem Field::element(std::uint64_t index) const {
  if (index >= q_) {
    throw Error(ErrorCode::InvalidElement,
                "index " + std::to_string(index) + " outside F_" + std::to_string(q_));
  }
  return Elem{static_cast<std::uint32_t>(index)};
}

Elem Field::from_int(std::int64_t value) const noexcept {
  const auto p = static_cast<std::int64_t>(p_);
  return Elem{static_cast<std::uint32_t>(((value % p) + p) % p)};
}

Elem Field::add(Elem a, Elem b) const noexcept {
  if (!add_table_.empty()) return Elem{add_table_[std::size_t{a.index} * q_ + b.index]};
  std::uint32_t x = a.index, y = b.index, out = 0, scale = 1;
  for (std::uint32_t i = 0; i < n_; ++i) {
    out += ((x % p_ + y % p_) % p_) * scale;
    x /= p_;
    y /= p_;
    scale *= p_;
  }
  return Elem{out};
}

Elem Field::inv(Elem a) const {
  if (a.index == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  const std::uint32_t l = log_[a.index];
  return Elem{exp_[l == 0 ? 0 : q_ - 1 - l]};
}

Elem Field::div(Elem a, Elem b) const { return mul(a, inv(b)); }

Elem Field::pow(Elem a, std::uint64_t e) const noexcept {
  if (e == 0) return one();
  if (a.index == 0) return zero();
  const std::uint64_t l = log_[a.index];
  return Elem{exp_[(l * (e % (q_ - 1))) % (q_ - 1)]};
}

std::uint32_t Field::log(Elem a) const {
  if (a.index == 0) throw Error(ErrorCode::DivisionByZero, "log of zero");
  return log_[a.index];
}

std::uint64_t Field::multiplicative_order(Elem a) const {
  if (a.index == 0) throw Error(ErrorCode::DivisionByZero, "order of zero");
  const std::uint64_t l = log_[a.index];
  return (q_ - 1) / std::gcd<std::uint64_t>(l, q_ - 1);
}

std::vector<std::uint32_t> Field::digits(Elem a) const { return decode(a.index, p_, n_); }

Elem Field::from_digits(std::span<const std::uint32_t> digits) const {
  std::uint32_t out = 0, scale = 1;
  for (std::uint32_t i = 0; i < n_ && i < digits.size(); ++i) {
    out += (digits[i] % p_) * scale;
    scale *= p_;
  }
  return Elem{out};
}

std::string Field::describe_modulus() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = modulus_.size(); i-- > 0;) {
    if (modulus_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (modulus_[i] != 1 || i == 0) os << modulus_[i];
    if (i >= 1) os << "t";
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

std::vector<Elem> roots_of_unity(const Field& field, std::uint64_t d) {
  const std::uint64_t order = field.q() - 1;
  if (d == 0 || order % d != 0) {
    throw Error(ErrorCode::NotADivisor,
                std::to_string(d) + " does not divide " + std::to_string(order));
  }
  std::vector<Elem> out;
  out.reserve(d);
  const std::uint64_t step = order / d;
  for (std::uint64_t k = 0; k < d; ++k) out.push_back(field.exp(k * step));
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t line_count(const Field& field) { return (field.q() - 1) / (field.p() - 1); }

std::vector<Line> line_decomposition(const Field& field) {
  std::vector<bool> seen(field.q(), false);
  std::vector<Line> lines;
  for (std::uint32_t i = 1; i < field.q(); ++i) {
    if (seen[i]) continue;
    Line line;
    line.representative = Elem{i};
    for (std::uint32_t c = 1; c < field.p(); ++c) {
      const Elem m = field.mul(field.from_int(c), Elem{i});
      seen[m.index] = true;
      line.members.push_back(m);
    }
    std::sort(line.members.begin(), line.members.end());
    line.b = field.pow(line.representative, field.p() - 1);
    lines.push_back(std::move(line));
  }
  return lines;
}

}  // namespace ppclass
