#include "ppclass/poly.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "ppclass/error.hpp"

namespace ppclass {

namespace {

void trim(std::vector<Elem>& c) {
  while (!c.empty() && c.back().index == 0) c.pop_back();
}

std::size_t fold_exponent(const Field& field, std::size_t e) {
  if (e == 0) return 0;
  return 1 + (e - 1) % (field.q() - 1);
}

}  // namespace

Poly::Poly(std::vector<Elem> coeffs) : coeffs_(std::move(coeffs)) { trim(coeffs_); }

Poly Poly::monomial(std::size_t exponent, Elem coeff) {
  std::vector<Elem> c(exponent + 1);
  c[exponent] = coeff;
  return Poly(std::move(c));
}

std::optional<std::size_t> Poly::degree() const noexcept {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

Poly reduce(const Field& field, std::span<const Elem> raw) {
  const std::size_t len = std::min<std::size_t>(raw.size(), field.q());
  std::vector<Elem> out(len);
  for (std::size_t e = 0; e < raw.size(); ++e) {
    if (raw[e].index == 0) continue;
    const std::size_t k = fold_exponent(field, e);
    out[k] = field.add(out[k], raw[e]);
  }
  return Poly(std::move(out));
}

Elem evaluate(const Field& field, const Poly& f, Elem x) {
  Elem acc{0};
  const auto& c = f.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) acc = field.add(field.mul(acc, x), c[i]);
  return acc;
}

std::vector<Elem> evaluation_table(const Field& field, const Poly& f) {
  std::vector<Elem> out(field.q());
  for (std::uint32_t i = 0; i < field.q(); ++i) out[i] = evaluate(field, f, Elem{i});
  return out;
}

Poly add(const Field& field, const Poly& a, const Poly& b) {
  std::vector<Elem> c(std::max(a.coeffs().size(), b.coeffs().size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = field.add(a.coeff(i), b.coeff(i));
  return Poly(std::move(c));
}

Poly sub(const Field& field, const Poly& a, const Poly& b) {
  std::vector<Elem> c(std::max(a.coeffs().size(), b.coeffs().size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = field.sub(a.coeff(i), b.coeff(i));
  return Poly(std::move(c));
}

Poly scale(const Field& field, const Poly& a, Elem s) {
  std::vector<Elem> c(a.coeffs().size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = field.mul(a.coeffs()[i], s);
  return Poly(std::move(c));
}

Poly mul(const Field& field, const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly{};
  const auto& x = a.coeffs();
  const auto& y = b.coeffs();
  std::vector<Elem> out(std::min<std::size_t>(x.size() + y.size() - 1, field.q()));
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].index == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (y[j].index == 0) continue;
      const std::size_t k = fold_exponent(field, i + j);
      out[k] = field.add(out[k], field.mul(x[i], y[j]));
    }
  }
  return Poly(std::move(out));
}

Poly pow(const Field& field, const Poly& a, std::uint64_t e) {
  Poly result = Poly::monomial(0);
  Poly base = a;
  while (e > 0) {
    if (e & 1) result = mul(field, result, base);
    e >>= 1;
    if (e > 0) base = mul(field, base, base);
  }
  return result;
}

Poly compose(const Field& field, const Poly& f, const Poly& g) {
  Poly acc;
  const auto& c = f.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) {
    acc = add(field, mul(field, acc, g), Poly::monomial(0, c[i]));
  }
  return acc;
}

bool in_v(const Field& field, const Poly& f) {
  if (f.is_zero()) return true;
  return f.coeff(0).index == 0 && *f.degree() <= field.q() - 2;
}

Coords to_coords(const Field& field, const Poly& f) {
  if (!in_v(field, f)) throw Error(ErrorCode::OutOfRange, "polynomial " + format_poly(f) + " is not in V[x]");
  Coords out(v_dimension(field));
  for (std::size_t e = 1; e < f.coeffs().size(); ++e) out[e - 1] = f.coeffs()[e];
  return out;
}

Poly from_coords(std::span<const Elem> coords) {
  std::vector<Elem> c(coords.size() + 1);
  std::copy(coords.begin(), coords.end(), c.begin() + 1);
  return Poly(std::move(c));
}

Poly to_poly(const Field& field, const LinearizedPoly& l) {
  std::vector<Elem> raw;
  std::size_t e = 1;
  for (std::size_t j = 0; j < l.d.size(); ++j, e *= field.p()) {
    if (raw.size() <= e) raw.resize(e + 1);
    raw[e] = field.add(raw[e], l.d[j]);
  }
  return reduce(field, raw);
}

std::optional<LinearizedPoly> as_linearized(const Field& field, const Poly& f) {
  LinearizedPoly l;
  l.d.resize(field.n());
  std::vector<bool> allowed(f.coeffs().size(), false);
  std::size_t e = 1;
  for (std::uint32_t j = 0; j < field.n(); ++j, e *= field.p()) {
    if (e < allowed.size()) allowed[e] = true;
    l.d[j] = f.coeff(e);
  }
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    if (!allowed[i] && f.coeffs()[i].index != 0) return std::nullopt;
  }
  return l;
}

PrimeMatrix linearized_to_matrix(const Field& field, const LinearizedPoly& l) {
  const std::size_t n = field.n();
  const Poly f = to_poly(field, l);
  PrimeMatrix m{n, std::vector<std::uint32_t>(n * n)};
  std::vector<std::uint32_t> unit(n, 0);
  for (std::size_t j = 0; j < n; ++j) {
    std::fill(unit.begin(), unit.end(), 0);
    unit[j] = 1;
    const auto image = field.digits(evaluate(field, f, field.from_digits(unit)));
    for (std::size_t i = 0; i < n; ++i) m.entries[i * n + j] = image[i];
  }
  return m;
}

LinearizedPoly matrix_to_linearized(const Field& field, const PrimeMatrix& m) {
  const std::size_t n = field.n();
  // Moore system: sum_j d_j (t^i)^{p^j} = image of t^i.
  std::vector<std::vector<Elem>> sys(n, std::vector<Elem>(n + 1));
  std::vector<std::uint32_t> unit(n, 0), col(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    std::fill(unit.begin(), unit.end(), 0);
    unit[i] = 1;
    Elem basis = field.from_digits(unit);
    Elem power = basis;
    for (std::size_t j = 0; j < n; ++j) {
      sys[i][j] = power;
      power = field.frobenius(power);
    }
    for (std::size_t r = 0; r < n; ++r) col[r] = m.at(r, i);
    sys[i][n] = field.from_digits(col);
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && sys[piv][c].index == 0) ++piv;
    if (piv == n) throw Error(ErrorCode::OutOfRange, "singular Moore matrix");
    std::swap(sys[c], sys[piv]);
    const Elem inv = field.inv(sys[c][c]);
    for (auto& v : sys[c]) v = field.mul(v, inv);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || sys[r][c].index == 0) continue;
      const Elem factor = sys[r][c];
      for (std::size_t k = 0; k <= n; ++k) {
        sys[r][k] = field.sub(sys[r][k], field.mul(factor, sys[c][k]));
      }
    }
  }
  LinearizedPoly l;
  for (std::size_t j = 0; j < n; ++j) l.d.push_back(sys[j][n]);
  return l;
}

std::uint32_t determinant_mod_p(const PrimeMatrix& m, std::uint32_t p) {
  const std::size_t n = m.n;
  std::vector<std::uint64_t> a(m.entries.begin(), m.entries.end());
  auto inv_mod = [p](std::uint64_t x) {
    std::uint64_t r = 1, e = p - 2;
    while (e > 0) {
      if (e & 1) r = r * x % p;
      x = x * x % p;
      e >>= 1;
    }
    return r;
  };
  std::uint64_t det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv * n + c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      for (std::size_t k = 0; k < n; ++k) std::swap(a[c * n + k], a[piv * n + k]);
      det = (p - det) % p;
    }
    det = det * a[c * n + c] % p;
    const std::uint64_t inv = inv_mod(a[c * n + c]);
    for (std::size_t r = c + 1; r < n; ++r) {
      const std::uint64_t factor = a[r * n + c] * inv % p;
      if (factor == 0) continue;
      for (std::size_t k = c; k < n; ++k) {
        a[r * n + k] = (a[r * n + k] + (p - factor) * a[c * n + k]) % p;
      }
    }
  }
  return static_cast<std::uint32_t>(det);
}

Elem h_parameter(const Field& field, unsigned m, Elem b) {
  const Elem sign = (m % 2 == 0) ? field.one() : field.neg(field.one());
  return field.mul(sign, field.pow(b, std::uint64_t{m} * field.p()));
}

Poly build_gmb_hmd(const Field& field, unsigned m, Elem b, BlockKind which) {
  if (m < 2 || m > field.p() - 1) {
    throw Error(ErrorCode::BadExponent, "m = " + std::to_string(m) + " outside [2, p-1]");
  }
  if (b.index >= field.q() || field.pow(b, line_count(field)) != field.one()) {
    throw Error(ErrorCode::NotRootOfUnity,
                "b = " + std::to_string(b.index) + " is not a root of unity of order dividing (q-1)/(p-1)");
  }
  const Elem c = which == BlockKind::G ? b : h_parameter(field, m, b);
  const Poly base = sub(field, Poly::monomial(field.p()), Poly::monomial(1, c));
  return pow(field, base, m);
}

std::string format_poly(const Poly& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  const auto& c = f.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i].index == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << c[i].index << "*x^" << i;
  }
  return os.str();
}

namespace {

std::string_view strip(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::uint64_t parse_uint(std::string_view s, std::string_view context) {
  s = strip(s);
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw Error(ErrorCode::ParseError, "bad number '" + std::string(s) + "' in '" + std::string(context) + "'");
  }
  return v;
}

}  // namespace

Poly parse_poly(const Field& field, std::string_view text) {
  std::vector<Elem> raw;
  auto put = [&](std::uint64_t e, Elem c) {
    if (e > 1'000'000) throw Error(ErrorCode::ParseError, "exponent too large");
    if (raw.size() <= e) raw.resize(e + 1);
    raw[e] = field.add(raw[e], c);
  };
  const std::string_view body = strip(text);
  if (body.empty()) throw Error(ErrorCode::ParseError, "empty polynomial");
  std::size_t start = 0;
  while (start <= body.size()) {
    const std::size_t plus = body.find('+', start);
    const std::string_view term =
        strip(body.substr(start, plus == std::string_view::npos ? std::string_view::npos : plus - start));
    if (term.empty()) throw Error(ErrorCode::ParseError, "empty term in '" + std::string(text) + "'");

    Elem coeff = field.one();
    std::string_view mono = term;
    const std::size_t star = term.find('*');
    if (star != std::string_view::npos) {
      coeff = field.element(parse_uint(term.substr(0, star), text));
      mono = strip(term.substr(star + 1));
    } else if (term.find('x') == std::string_view::npos) {
      put(0, field.element(parse_uint(term, text)));
      mono = {};
    }
    if (!mono.empty()) {
      if (mono.front() != 'x') throw Error(ErrorCode::ParseError, "bad term '" + std::string(term) + "'");
      mono.remove_prefix(1);
      mono = strip(mono);
      std::uint64_t e = 1;
      if (!mono.empty()) {
        if (mono.front() != '^') throw Error(ErrorCode::ParseError, "bad term '" + std::string(term) + "'");
        e = parse_uint(mono.substr(1), text);
      }
      put(e, coeff);
    }
    if (plus == std::string_view::npos) break;
    start = plus + 1;
  }
  return reduce(field, raw);
}

}  // namespace ppclass
