#include "ppclass/fp2.hpp"

#include <algorithm>
#include <sstream>
#include <thread>

#include "ppclass/error.hpp"

namespace ppclass {

namespace {

Elem sign_power(const Field& field, unsigned m) {
  return m % 2 == 0 ? field.one() : field.neg(field.one());
}

Elem norm(const Field& field, Elem x) { return field.pow(x, field.p() + 1); }

constexpr std::size_t kMaxCounterexamples = 8;

void record(LemmaCheck& check, bool ok, const std::string& detail) {
  ++check.instances;
  if (ok) return;
  ++check.failures;
  if (check.counterexamples.size() < kMaxCounterexamples) check.counterexamples.push_back(detail);
}

std::string describe(unsigned m, Elem b, Elem alpha, Elem beta) {
  std::ostringstream os;
  os << "m=" << m << " b=" << b.index << " alpha=" << alpha.index << " beta=" << beta.index;
  return os.str();
}

}  // namespace

void require_family_domain(const Field& field, unsigned m, Elem b) {
  if (field.n() != 2) throw Error(ErrorCode::OutOfRange, "family is defined over F_{p^2} only");
  if (m < 2 || m > field.p() - 1) {
    throw Error(ErrorCode::BadExponent, "m = " + std::to_string(m) + " outside [2, p-1]");
  }
  if (b.index >= field.q() || field.pow(b, field.p() + 1) != field.one()) {
    throw Error(ErrorCode::NotRootOfUnity, "b = " + std::to_string(b.index) + " is not a (p+1)-th root of unity");
  }
}

std::vector<Elem> family_roots(const Field& field) {
  if (field.n() != 2) throw Error(ErrorCode::OutOfRange, "family is defined over F_{p^2} only");
  return roots_of_unity(field, field.p() + 1);
}

FamilyInstance derive_params(const Field& field, unsigned m, Elem b, Elem alpha, Elem beta) {
  require_family_domain(field, m, b);
  const std::uint32_t p = field.p();
  const Elem denom = field.sub(norm(field, beta), norm(field, alpha));
  if (denom.index == 0) throw Error(ErrorCode::DegenerateParameters, "alpha^{p+1} = beta^{p+1}");
  FamilyInstance inst{m, b, alpha, beta, {}, {}, {}, {}};
  inst.d = h_parameter(field, m, b);
  inst.gamma = field.div(field.neg(alpha), denom);
  inst.epsilon = field.div(field.pow(beta, p), denom);
  const Elem base = field.sub(field.pow(beta, p), field.mul(alpha, inst.d));
  if (base.index == 0) throw Error(ErrorCode::DegenerateParameters, "beta^p - alpha d = 0");
  const Elem num = field.sub(field.neg(field.mul(inst.gamma, inst.d)), inst.epsilon);
  inst.delta = field.div(num, field.pow(base, m));
  return inst;
}

Elem delta_closed_form(const Field& field, const FamilyInstance& inst) {
  const Elem s = field.add(inst.beta, field.mul(inst.b, inst.alpha));
  const Elem denom = field.sub(norm(field, inst.beta), norm(field, inst.alpha));
  return field.div(field.pow(s, inst.m - 1), field.pow(denom, inst.m));
}

ConditionVerdict check_conditions(const Field& field, unsigned m, Elem b, Elem alpha, Elem beta) {
  require_family_domain(field, m, b);
  const std::uint32_t p = field.p();
  ConditionVerdict v;
  v.cond1 = norm(field, alpha) != norm(field, beta);
  const Elem s = field.add(beta, field.mul(b, alpha));
  if (s.index != 0) {
    const Elem rhs = field.mul(sign_power(field, m), field.pow(b, std::uint64_t{m} * p - 1));
    v.cond2 = field.pow(s, p - 1) == rhs;
  }
  v.constructible = v.cond1 && v.cond2;
  return v;
}

std::optional<bool> condition2_quotient_form(const Field& field, unsigned m, Elem b, Elem alpha, Elem beta) {
  require_family_domain(field, m, b);
  const std::uint32_t p = field.p();
  const Elem s = field.add(beta, field.mul(alpha, b));
  if (s.index == 0) return std::nullopt;
  const Elem lhs = field.div(field.add(field.mul(b, field.pow(beta, p)), field.pow(alpha, p)), s);
  return lhs == h_parameter(field, m, b);
}

Poly build_family_member(const Field& field, unsigned m, Elem b, Elem alpha, Elem beta) {
  Poly f = build_gmb_hmd(field, m, b, BlockKind::G);
  f = add(field, f, Poly::monomial(field.p(), alpha));
  return add(field, f, Poly::monomial(1, beta));
}

FamilyPair build_pair(const Field& field, const FamilyInstance& inst) {
  if (!check_conditions(field, inst.m, inst.b, inst.alpha, inst.beta).constructible) {
    throw Error(ErrorCode::NotConstructible, describe(inst.m, inst.b, inst.alpha, inst.beta) +
                                                 " violates the family conditions");
  }
  FamilyPair pair;
  pair.f = build_family_member(field, inst.m, inst.b, inst.alpha, inst.beta);
  Poly h = scale(field, build_gmb_hmd(field, inst.m, inst.b, BlockKind::H), inst.delta);
  h = add(field, h, Poly::monomial(field.p(), inst.gamma));
  pair.h = add(field, h, Poly::monomial(1, inst.epsilon));
  return pair;
}

std::optional<ShapeMatch> match_family_shape(const Field& field, unsigned m, const Poly& f) {
  if (field.n() != 2 || m < 2 || m > field.p() - 1) return std::nullopt;
  for (const Elem b : family_roots(field)) {
    const Poly rest = sub(field, f, build_gmb_hmd(field, m, b, BlockKind::G));
    const auto lin = as_linearized(field, rest);
    if (lin && rest.coeff(0).index == 0) return ShapeMatch{b, lin->d[1], lin->d[0]};
  }
  return std::nullopt;
}

CensusResult census(const Field& field, unsigned m, Elem b, CensusMode mode, unsigned workers) {
  require_family_domain(field, m, b);
  const std::uint32_t q = field.q();
  const auto g_table = evaluation_table(field, build_gmb_hmd(field, m, b, BlockKind::G));
  const auto xp_table = evaluation_table(field, Poly::monomial(field.p()));

  struct Partial {
    std::uint64_t conditioned = 0, full = 0, conditioned_non_pp = 0;
    std::uint64_t by[2][2] = {{0, 0}, {0, 0}};
  };
  auto scan = [&](std::uint32_t alpha_lo, std::uint32_t alpha_hi) {
    Partial out;
    std::vector<Elem> partial(q);
    std::vector<std::uint32_t> stamp(q, 0);
    std::uint32_t generation = 0;
    for (std::uint32_t a = alpha_lo; a < alpha_hi; ++a) {
      const Elem alpha{a};
      for (std::uint32_t x = 0; x < q; ++x) partial[x] = field.add(g_table[x], field.mul(alpha, xp_table[x]));
      for (std::uint32_t bi = 0; bi < q; ++bi) {
        const Elem beta{bi};
        const auto cond = check_conditions(field, m, b, alpha, beta);
        if (cond.constructible) ++out.conditioned;
        if (mode == CensusMode::Conditioned) continue;
        ++generation;
        bool bijective = true;
        for (std::uint32_t x = 0; x < q; ++x) {
          const Elem v = field.add(partial[x], field.mul(beta, Elem{x}));
          if (stamp[v.index] == generation) {
            bijective = false;
            break;
          }
          stamp[v.index] = generation;
        }
        if (bijective) {
          ++out.full;
          ++out.by[cond.cond1][cond.cond2];
        } else if (cond.constructible) {
          ++out.conditioned_non_pp;
        }
      }
    }
    return out;
  };

  const unsigned w = std::clamp<unsigned>(workers, 1, q);
  std::vector<Partial> parts(w);
  if (w == 1) {
    parts[0] = scan(0, q);
  } else {
    std::vector<std::thread> threads;
    for (unsigned i = 0; i < w; ++i) {
      const auto lo = static_cast<std::uint32_t>(std::uint64_t{q} * i / w);
      const auto hi = static_cast<std::uint32_t>(std::uint64_t{q} * (i + 1) / w);
      threads.emplace_back([&, i, lo, hi] { parts[i] = scan(lo, hi); });
    }
    for (auto& t : threads) t.join();
  }

  CensusResult result;
  result.m = m;
  result.b = b;
  std::uint64_t full = 0;
  for (const auto& part : parts) {
    result.conditioned += part.conditioned;
    full += part.full;
    result.conditioned_non_pp += part.conditioned_non_pp;
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) result.pp_by_condition[i][j] += part.by[i][j];
    }
  }
  if (mode == CensusMode::FullShape) {
    result.full = full;
    result.excess = full - result.conditioned;
  }
  return result;
}

std::vector<LemmaCheck> lemma_suite(const Field& field) {
  if (field.n() != 2) throw Error(ErrorCode::OutOfRange, "lemma suite runs over F_{p^2} only");
  const std::uint32_t p = field.p();
  const std::uint32_t q = field.q();
  const auto roots = family_roots(field);

  LemmaCheck g_frob{"gmb.frobenius", "g_mb(x)^p = (-1)^m b^{mp} g_mb(x) mod x^q - x", 0, 0, 0, {}};
  LemmaCheck norms{"params.norm-in-prime-field", "beta^{p+1} - alpha^{p+1} lies in F_p", 0, 0, 0, {}};
  LemmaCheck rel2{"params.relations", "gamma beta^p + alpha epsilon = 0 and gamma alpha^p + beta epsilon = 1", 0, 0, 0, {}};
  LemmaCheck rel3{"params.conjugate-relations", "alpha epsilon^p + beta gamma = 0 and alpha gamma^p + beta epsilon = 1", 0, 0, 0, {}};
  LemmaCheck quotient{"cond2.quotient-form",
                      "(beta + b alpha)^{p-1} = (-1)^m b^{mp-1} iff (b beta^p + alpha^p)/(beta + alpha b) = (-1)^m b^{mp}", 0, 0, 0, {}};
  LemmaCheck delta{"delta.closed-form", "delta = (beta + b alpha)^{m-1} / (beta^{p+1} - alpha^{p+1})^m under both conditions", 0, 0, 0, {}};
  LemmaCheck delta_frob{"delta.frobenius", "(-1)^m b^{m^2} delta^p = b delta under both conditions", 0, 0, 0, {}};
  LemmaCheck h_frob{"hmd.frobenius", "h_md(x)^p = (-1)^m b^{m^2} h_md(x) mod x^q - x", 0, 0, 0, {}};
  LemmaCheck delta_neg{"delta.closed-form-negated",
                       "delta = -(beta + b alpha)^{m-1} / (beta^{p+1} - alpha^{p+1})^m under both conditions", 0, 0, 0,
                       {}, false};
  LemmaCheck delta_frob_fixed{"delta.frobenius-unsigned", "b^{m^2} delta^p = b delta under both conditions", 0, 0, 0,
                              {}, false};
  LemmaCheck h_frob_fixed{"hmd.frobenius-unsigned", "h_md(x)^p = b^{m^2} h_md(x) mod x^q - x", 0, 0, 0, {}, false};

  // Parameter identities that do not involve m or b.
  for (std::uint32_t a = 0; a < q; ++a) {
    for (std::uint32_t bb = 0; bb < q; ++bb) {
      const Elem alpha{a}, beta{bb};
      const Elem denom = field.sub(norm(field, beta), norm(field, alpha));
      if (denom.index == 0) {
        ++norms.skipped;
        ++rel2.skipped;
        ++rel3.skipped;
        continue;
      }
      const Elem gamma = field.div(field.neg(alpha), denom);
      const Elem epsilon = field.div(field.pow(beta, p), denom);
      const std::string at = "alpha=" + std::to_string(a) + " beta=" + std::to_string(bb);
      record(norms, field.in_prime_field(denom), at);
      const Elem r2a = field.add(field.mul(gamma, field.pow(beta, p)), field.mul(alpha, epsilon));
      const Elem r2b = field.add(field.mul(gamma, field.pow(alpha, p)), field.mul(beta, epsilon));
      record(rel2, r2a == field.zero() && r2b == field.one(), at);
      const Elem r3a = field.add(field.mul(alpha, field.pow(epsilon, p)), field.mul(beta, gamma));
      const Elem r3b = field.add(field.mul(alpha, field.pow(gamma, p)), field.mul(beta, epsilon));
      record(rel3, r3a == field.zero() && r3b == field.one(), at);
    }
  }

  for (unsigned m = 2; m + 1 <= p; ++m) {
    for (const Elem b : roots) {
      const std::string mb = "m=" + std::to_string(m) + " b=" + std::to_string(b.index);
      const Poly g = build_gmb_hmd(field, m, b, BlockKind::G);
      const Elem g_factor = field.mul(sign_power(field, m), field.pow(b, std::uint64_t{m} * p));
      record(g_frob, pow(field, g, p) == scale(field, g, g_factor), mb);

      const Poly h = build_gmb_hmd(field, m, b, BlockKind::H);
      const Elem h_factor = field.mul(sign_power(field, m), field.pow(b, std::uint64_t{m} * m));
      const Poly hp = pow(field, h, p);
      record(h_frob, hp == scale(field, h, h_factor), mb);
      const Elem b_m2 = field.pow(b, std::uint64_t{m} * m);
      record(h_frob_fixed, hp == scale(field, h, b_m2), mb);

      for (std::uint32_t a = 0; a < q; ++a) {
        for (std::uint32_t bb = 0; bb < q; ++bb) {
          const Elem alpha{a}, beta{bb};
          const auto quot = condition2_quotient_form(field, m, b, alpha, beta);
          const auto cond = check_conditions(field, m, b, alpha, beta);
          if (!quot) {
            ++quotient.skipped;
          } else {
            record(quotient, *quot == cond.cond2, describe(m, b, alpha, beta));
          }
          if (!cond.constructible) {
            ++delta.skipped;
            ++delta_frob.skipped;
            ++delta_neg.skipped;
            ++delta_frob_fixed.skipped;
            continue;
          }
          const FamilyInstance inst = derive_params(field, m, b, alpha, beta);
          const Elem closed = delta_closed_form(field, inst);
          const std::string at = describe(m, b, alpha, beta);
          record(delta, inst.delta == closed, at);
          record(delta_neg, inst.delta == field.neg(closed), at);
          const Elem dp = field.pow(inst.delta, p);
          const Elem bd = field.mul(b, inst.delta);
          record(delta_frob, field.mul(h_factor, dp) == bd, at);
          record(delta_frob_fixed, field.mul(b_m2, dp) == bd, at);
        }
      }
    }
  }
  return {g_frob, norms, rel2, rel3, quotient, delta, delta_frob, h_frob, delta_neg, delta_frob_fixed, h_frob_fixed};
}

}  // namespace ppclass
