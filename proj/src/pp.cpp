#include "ppclass/pp.hpp"

#include <algorithm>
#include <limits>
#include <thread>

#include "ppclass/eigen.hpp"
#include "ppclass/error.hpp"

namespace ppclass {

PermVerdict is_permutation_table(std::span<const Elem> table) {
  PermVerdict v;
  std::vector<std::int64_t> first(table.size(), -1);
  for (std::size_t i = 0; i < table.size(); ++i) {
    auto& slot = first[table[i].index];
    if (slot >= 0) {
      v.witness = std::pair{Elem{static_cast<std::uint32_t>(slot)}, Elem{static_cast<std::uint32_t>(i)}};
      return v;
    }
    slot = static_cast<std::int64_t>(i);
  }
  v.is_pp = true;
  return v;
}

PermVerdict is_permutation(const Field& field, const Poly& f) {
  const auto table = evaluation_table(field, f);
  PermVerdict v = is_permutation_table(table);
  v.is_ppr = v.is_pp && f.is_monic() && f.coeff(0).index == 0;
  return v;
}

bool hermite_test(const Field& field, const Poly& f, std::uint32_t cap) {
  const std::uint32_t q = field.q();
  if (q > cap) throw Error(ErrorCode::TooLargeField, "Hermite test capped at q <= " + std::to_string(cap));
  if (q <= 2) throw Error(ErrorCode::OutOfRange, "Hermite test needs q > 2");
  Poly power = f;
  for (std::uint32_t t = 1; t <= q - 1; ++t) {
    const auto deg = power.degree();
    if (t == q - 1) return deg && *deg == q - 1 && power.is_monic();
    if (t % field.p() != 0 && deg && *deg > q - 2) return false;
    power = mul(field, power, f);
  }
  return false;
}

Poly interpolate(const Field& field, std::span<const Elem> values) {
  const std::uint32_t q = field.q();
  if (values.size() != q) throw Error(ErrorCode::DimensionMismatch, "need one value per field element");
  // sum_a y_a (1 - (x - a)^{q-1}) with (x - a)^{q-1} = sum_j a^{q-1-j} x^j.
  std::vector<Elem> c(q);
  c[0] = values[0];
  Elem total = values[0];
  for (std::uint32_t a = 1; a < q; ++a) total = field.add(total, values[a]);
  c[q - 1] = field.neg(total);
  for (std::uint32_t j = 1; j + 1 < q; ++j) {
    Elem acc{0};
    for (std::uint32_t k = 0; k + 1 < q; ++k) {
      const Elem y = values[field.exp(k).index];
      if (y.index == 0) continue;
      // a = g^k, a^{q-1-j} = g^{-kj}
      const std::uint64_t e = (std::uint64_t{q - 1} * j - std::uint64_t{k} * j % (q - 1)) % (q - 1);
      acc = field.add(acc, field.mul(y, field.exp(e)));
    }
    c[j] = field.neg(acc);
  }
  return Poly(std::move(c));
}

Poly compositional_inverse(const Field& field, const Poly& f) {
  const auto table = evaluation_table(field, f);
  if (!is_permutation_table(table).is_pp) {
    throw Error(ErrorCode::NotAPermutation, format_poly(f) + " does not permute F_" + std::to_string(field.q()));
  }
  std::vector<Elem> inverse(field.q());
  for (std::uint32_t i = 0; i < field.q(); ++i) inverse[table[i].index] = Elem{i};
  return interpolate(field, inverse);
}

Poly normalize_to_ppr(const Field& field, const Poly& f) {
  const Poly shifted = sub(field, f, Poly::monomial(0, f.coeff(0)));
  if (shifted.is_zero()) throw Error(ErrorCode::NotAPermutation, "constant polynomial");
  return scale(field, shifted, field.inv(shifted.leading()));
}

AffineFamily family_of(const Subspace& s) { return {Poly{}, basis_polys(s)}; }

std::uint64_t family_size(const Field& field, const AffineFamily& family) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < family.directions.size(); ++i) {
    if (total > std::numeric_limits<std::uint64_t>::max() / field.q()) return std::numeric_limits<std::uint64_t>::max();
    total *= field.q();
  }
  return total;
}

namespace {

struct WorkerResult {
  std::uint64_t searched = 0;
  std::uint64_t hits = 0;
  std::vector<Coords> list;
  bool list_overflow = false;
};

// Scans candidate indices [lo, hi). Digit 0 varies fastest; the partial table
// of the remaining digits is rebuilt only when one of them changes.
WorkerResult scan_range(const Field& field, const AffineFamily& family, const EnumOptions& options,
                        std::uint64_t lo, std::uint64_t hi) {
  WorkerResult out;
  const std::uint32_t q = field.q();
  const std::size_t dims = family.directions.size();
  const auto base_table = evaluation_table(field, family.base);
  std::vector<std::vector<Elem>> dir_tables;
  for (const auto& d : family.directions) dir_tables.push_back(evaluation_table(field, d));

  std::size_t coeff_len = family.base.coeffs().size();
  for (const auto& d : family.directions) coeff_len = std::max(coeff_len, d.coeffs().size());

  std::vector<std::uint32_t> digits(dims, 0);
  {
    std::uint64_t rest = lo;
    for (std::size_t j = 0; j < dims; ++j) {
      digits[j] = static_cast<std::uint32_t>(rest % q);
      rest /= q;
    }
  }
  std::vector<Elem> partial(q);
  auto rebuild_partial = [&] {
    partial = base_table;
    for (std::size_t j = 1; j < dims; ++j) {
      const Elem c{digits[j]};
      if (c.index == 0) continue;
      for (std::uint32_t x = 0; x < q; ++x) partial[x] = field.add(partial[x], field.mul(c, dir_tables[j][x]));
    }
  };
  rebuild_partial();

  std::vector<std::uint64_t> stamp(q, 0);
  std::uint64_t generation = 0;
  for (std::uint64_t idx = lo; idx < hi; ++idx) {
    ++out.searched;
    ++generation;
    const Elem c0{dims > 0 ? digits[0] : 0};
    bool bijective = true;
    Elem at_zero{0};
    for (std::uint32_t x = 0; x < q; ++x) {
      Elem v = partial[x];
      if (dims > 0 && c0.index != 0) v = field.add(v, field.mul(c0, dir_tables[0][x]));
      if (x == 0) at_zero = v;
      if (stamp[v.index] == generation) {
        bijective = false;
        break;
      }
      stamp[v.index] = generation;
    }
    if (bijective && (!options.require_ppr || at_zero.index == 0)) {
      std::vector<Elem> coeffs(coeff_len);
      for (std::size_t i = 0; i < coeff_len; ++i) coeffs[i] = family.base.coeff(i);
      for (std::size_t j = 0; j < dims; ++j) {
        const Elem c{digits[j]};
        if (c.index == 0) continue;
        const auto& dc = family.directions[j].coeffs();
        for (std::size_t i = 0; i < dc.size(); ++i) coeffs[i] = field.add(coeffs[i], field.mul(c, dc[i]));
      }
      const Poly f(std::move(coeffs));
      if (!options.require_ppr || f.is_monic()) {
        ++out.hits;
        if (!out.list_overflow) {
          if (out.list.size() >= options.list_threshold) {
            out.list_overflow = true;
            out.list.clear();
          } else {
            Coords c(v_dimension(field));
            for (std::size_t e = 1; e < f.coeffs().size() && e <= c.size(); ++e) c[e - 1] = f.coeffs()[e];
            out.list.push_back(std::move(c));
          }
        }
      }
    }
    // odometer
    for (std::size_t j = 0; j < dims; ++j) {
      if (++digits[j] < q) {
        if (j > 0) rebuild_partial();
        break;
      }
      digits[j] = 0;
    }
  }
  return out;
}

}  // namespace

EnumReport enumerate_pprs(const Field& field, const AffineFamily& family, const EnumOptions& options) {
  if (options.workers < 1) throw Error(ErrorCode::OutOfRange, "workers must be >= 1");
  const std::uint64_t total = family_size(field, family);
  if (total > options.budget) {
    throw Error(ErrorCode::BudgetExceeded, std::to_string(total) + " candidates exceed budget " +
                                               std::to_string(options.budget));
  }
  const unsigned workers = static_cast<unsigned>(std::min<std::uint64_t>(options.workers, total));
  std::vector<WorkerResult> results(std::max(workers, 1u));
  if (workers <= 1) {
    results[0] = scan_range(field, family, options, 0, total);
  } else {
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < workers; ++w) {
      const std::uint64_t lo = total * w / workers;
      const std::uint64_t hi = total * (w + 1) / workers;
      threads.emplace_back([&, w, lo, hi] { results[w] = scan_range(field, family, options, lo, hi); });
    }
    for (auto& t : threads) t.join();
  }

  EnumReport report;
  bool overflow = false;
  for (auto& r : results) {
    report.searched += r.searched;
    report.ppr_count += r.hits;
    overflow = overflow || r.list_overflow;
    report.ppr_list.insert(report.ppr_list.end(), std::make_move_iterator(r.list.begin()),
                           std::make_move_iterator(r.list.end()));
  }
  if (overflow || report.ppr_count > options.list_threshold) {
    report.ppr_list.clear();
    report.list_emitted = false;
  } else {
    std::sort(report.ppr_list.begin(), report.ppr_list.end());
  }
  return report;
}

EnumReport enumerate_pprs(const Field& field, const Subspace& domain, const EnumOptions& options) {
  if (domain.ambient() != v_dimension(field)) {
    throw Error(ErrorCode::DimensionMismatch, "subspace is not inside V[x]");
  }
  return enumerate_pprs(field, family_of(domain), options);
}

DegreeCensus degree_distribution(const Field& field, const EnumOptions& options, std::uint32_t p_cap) {
  if (field.n() != 1) throw Error(ErrorCode::OutOfRange, "degree distribution needs a prime field");
  if (field.p() > p_cap) {
    throw Error(ErrorCode::CapExceeded, "p = " + std::to_string(field.p()) + " above cap " + std::to_string(p_cap));
  }
  DegreeCensus census;
  const unsigned top = field.q() >= 3 ? field.q() - 2 : 0;
  std::uint64_t needed = 0;
  for (unsigned d = 1; d <= top; ++d) {
    std::uint64_t c = 1;
    for (unsigned i = 1; i < d; ++i) c *= field.q();
    needed += c;
  }
  if (needed > options.budget) {
    throw Error(ErrorCode::BudgetExceeded,
                std::to_string(needed) + " candidates exceed budget " + std::to_string(options.budget));
  }

  std::vector<Subspace> chain;
  for (unsigned k = 1; k <= top; ++k) chain.push_back(kernel_power(field, field.one(), k));

  EnumOptions per_degree = options;
  per_degree.list_threshold = std::numeric_limits<std::size_t>::max();
  for (unsigned d = 1; d <= top; ++d) {
    AffineFamily fam{Poly::monomial(d), {}};
    for (unsigned j = 1; j < d; ++j) fam.directions.push_back(Poly::monomial(j));
    const EnumReport r = enumerate_pprs(field, fam, per_degree);
    census.by_degree[d] = r.ppr_count;
    census.total += r.ppr_count;
    census.searched += r.searched;
    for (const auto& c : r.ppr_list) {
      const Poly f = from_coords(c);
      if (first_appearance_stage(field, chain, f) != d) census.stage_mismatches.push_back(f);
    }
  }
  return census;
}

}  // namespace ppclass
