#include "hopfcyc/suites.hpp"

namespace hopfcyc {

namespace {

using Labels = std::vector<std::vector<std::string>>;

std::string at(std::size_t p, std::size_t q) { return " at (" + std::to_string(p) + "," + std::to_string(q) + ")"; }

// Leg labels for H^{⊗(p+1)} ⊗ C^{⊗(q+1)}.
Labels natural_labels(const ComoduleCoalgebraInstance& m, std::size_t p, std::size_t q) {
  Labels l(p + 1, m.hopf.basis);
  l.insert(l.end(), q + 1, m.coalgebra.basis);
  return l;
}

void add(CheckReport& r, std::string axiom, const LinearMap& lhs, const LinearMap& rhs, const Labels& labels) {
  r.add(std::move(axiom), lhs, rhs.reshaped(lhs.domain(), lhs.codomain()), labels);
}

}  // namespace

CheckReport check_named_identities(const ComoduleCoalgebraInstance& m, std::size_t P, std::size_t Q) {
  const auto nat = natural_cocylindrical(m, P + 1, Q + 1).family;
  CheckReport r;
  for (std::size_t p = 0; p <= P; ++p)
    for (std::size_t q = 0; q <= Q; ++q) {
      const auto L = natural_labels(m, p, q);
      add(r, "last coface" + at(p, q), nat.cyclic(p, q + 1) * nat.coface(p, q, 0), direct_last_coface(m, p, q), L);
      add(r, "last horizontal coface" + at(p, q), nat.hcyclic(p + 1, q) * nat.hcoface(p, q, 0),
          direct_last_hcoface(m, p, q), L);
      if (q >= 1)
        add(r, "tau sigma0" + at(p, q), nat.cyclic(p, q - 1) * nat.codegeneracy(p, q, 0),
            nat.codegeneracy(p, q, q - 1) * nat.cyclic(p, q) * nat.cyclic(p, q), L);
      if (p >= 1)
        add(r, "taubar sigmabar0" + at(p, q), nat.hcyclic(p - 1, q) * nat.hcodegeneracy(p, q, 0),
            nat.hcodegeneracy(p, q, p - 1) * nat.hcyclic(p, q) * nat.hcyclic(p, q), L);
      add(r, "tau taubar commute" + at(p, q), nat.cyclic(p, q) * nat.hcyclic(p, q),
          nat.hcyclic(p, q) * nat.cyclic(p, q), L);
      add(r, "taubar^(p+1) tau^(q+1) = id" + at(p, q),
          power(nat.hcyclic(p, q), static_cast<unsigned>(p + 1)) * power(nat.cyclic(p, q), static_cast<unsigned>(q + 1)),
          LinearMap::identity(m.hopf.field, nat.space(p, q)), L);
    }
  return r;
}

CheckReport check_isomorphism(const ComoduleCoalgebraInstance& m, std::size_t N) {
  const auto diag = diagonal(natural_cocylindrical(m, N, N).family);
  const auto crossed = standard_cocyclic(crossed_coproduct(m), N).family;
  CheckReport r;
  for (std::size_t n = 0; n <= N; ++n) {
    const std::string w = " at n=" + std::to_string(n);
    const auto L = natural_labels(m, n, n);
    const Labels none;
    const auto f = phi(m, n);
    const auto g = psi(m, n);
    const auto id = LinearMap::identity(m.hopf.field, f.domain());
    add(r, "psi phi = id" + w, g * f, id, none);
    add(r, "phi psi = id" + w, f * g, LinearMap::identity(m.hopf.field, f.codomain()), L);
    add(r, "displayed psi is the inverse" + w, psi_display(m, n), g, L);
    add(r, "phi intertwines tau" + w, diag.cyclic(n) * f, f * crossed.cyclic(n), none);
    if (n < N) {
      const auto f1 = phi(m, n + 1);
      for (std::size_t i = 0; i <= n + 1; ++i)
        add(r, "phi intertwines coface " + std::to_string(i) + w, diag.coface(n, i) * f, f1 * crossed.coface(n, i),
            none);
    }
    if (n > 0) {
      const auto f0 = phi(m, n - 1);
      for (std::size_t i = 0; i < n; ++i)
        add(r, "phi intertwines codegeneracy " + std::to_string(i) + w, diag.codegeneracy(n, i) * f,
            f0 * crossed.codegeneracy(n, i), none);
    }
  }
  return r;
}

CheckReport check_conjugation(const ComoduleCoalgebraInstance& m, std::size_t P, std::size_t Q) {
  const auto nat = natural_cocylindrical(m, P + 1, Q + 1).family;
  const auto tr = transported_family(m, P + 1, Q + 1);
  CheckReport r;
  for (std::size_t p = 0; p <= P; ++p)
    for (std::size_t q = 0; q <= Q; ++q) {
      const auto L = natural_labels(m, p, q);
      const auto [beta, gamma] = beta_gamma(m, p, q);
      const auto id = LinearMap::identity(m.hopf.field, nat.space(p, q));
      add(r, "beta gamma = id" + at(p, q), beta * gamma, id, L);
      add(r, "gamma beta = id" + at(p, q), gamma * beta, id, L);
      add(r, "transported tau" + at(p, q), tr.cyclic(p, q), beta * nat.cyclic(p, q) * gamma, L);
      add(r, "transported taubar" + at(p, q), tr.hcyclic(p, q), beta * nat.hcyclic(p, q) * gamma, L);
      const auto bq = beta_gamma(m, p, q + 1).first;
      const auto bp = beta_gamma(m, p + 1, q).first;
      for (std::size_t i = 0; i <= q + 1; ++i)
        add(r, "transported coface " + std::to_string(i) + at(p, q), tr.coface(p, q, i),
            bq * nat.coface(p, q, i) * gamma, L);
      for (std::size_t i = 0; i <= p + 1; ++i)
        add(r, "transported horizontal coface " + std::to_string(i) + at(p, q), tr.hcoface(p, q, i),
            bp * nat.hcoface(p, q, i) * gamma, L);
      if (q >= 1) {
        const auto b = beta_gamma(m, p, q - 1).first;
        for (std::size_t i = 0; i < q; ++i)
          add(r, "transported codegeneracy " + std::to_string(i) + at(p, q), tr.codegeneracy(p, q, i),
              b * nat.codegeneracy(p, q, i) * gamma, L);
      }
      if (p >= 1) {
        const auto b = beta_gamma(m, p - 1, q).first;
        for (std::size_t i = 0; i < p; ++i)
          add(r, "transported horizontal codegeneracy " + std::to_string(i) + at(p, q), tr.hcodegeneracy(p, q, i),
              b * nat.hcodegeneracy(p, q, i) * gamma, L);
      }
    }
  for (std::size_t q = 0; q <= Q; ++q) {
    const auto cx = comodule_cochain(first_row_comodule(m, q), P + 1);
    for (std::size_t p = 0; p <= P; ++p)
      add(r, "beta bbar gamma = delta" + at(p, q),
          beta_gamma(m, p + 1, q).first * hochschild_b(nat.column(q), p) * beta_gamma(m, p, q).second, cx.delta[p],
          natural_labels(m, p, q));
  }
  return r;
}

CheckReport check_mixed_suite(const ComoduleCoalgebraInstance& m, std::size_t N) {
  const auto nat = natural_cocylindrical(m, N + 1, N + 1).family;
  CheckReport r;
  const auto prefixed = [&](const std::string& prefix, const CheckReport& sub) {
    for (auto res : sub.results) {
      res.axiom = prefix + res.axiom;
      r.results.push_back(std::move(res));
    }
  };
  prefixed("diagonal: ", check_mixed(mixed_complex(diagonal(nat)), true));
  prefixed("Tot: ", check_mixed(tot_mixed(nat), false));
  prefixed("normalized Tot: ", check_mixed(tot_normalized(nat).complex, true));
  return r;
}

std::optional<CheckReport> check_homotopy(const Comodule& M, std::size_t P) {
  if (P == 0) return CheckReport{};
  const auto cx = comodule_cochain(M, P + 1);
  CheckReport r;
  for (std::size_t p = 1; p <= P; ++p) {
    const auto h = cosemisimple_homotopy(M, p);
    const auto h1 = cosemisimple_homotopy(M, p + 1);
    if (!h || !h1) return std::nullopt;
    r.add("delta h + h delta = id at p=" + std::to_string(p), cx.delta[p - 1] * *h + *h1 * cx.delta[p],
          LinearMap::identity(M.hopf.field, cx.space(p)), {});
  }
  return r;
}

}  // namespace hopfcyc
