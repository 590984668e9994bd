#include "aarf/almost_arithmetic.hpp"

#include <algorithm>
#include <numeric>

namespace aarf {

AAPresentation::AAPresentation(Int m0, Int d, Int p, Int n)
    : m0_(m0), d_(d), p_(p), n_(n), sg_({1}) {
  if (m0 < 2) throw InvalidArgument("m0 must be at least 2");
  if (d < 1) throw InvalidArgument("the arithmetic part must be strictly increasing (d >= 1)");
  if (p < 1) throw InvalidArgument("p must be at least 1");
  if (n < 1) throw InvalidArgument("n must be positive");
  if (std::gcd(std::gcd(m0, d), n) != 1) throw GcdNotOne("gcd(m0, d, n) is not 1");

  for (Int i = 0; i <= p; ++i) columns_.push_back(m(i));
  columns_.push_back(n);

  std::vector<Int> sorted = columns_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw NotMinimal("n coincides with an arithmetic generator");

  sg_ = NumericalSemigroup(columns_);
  if (sg_.generators() != sorted)
    throw NotMinimal("the almost arithmetic family is not a minimal generating set");
}

GTerm AAPresentation::g_term(Int t) const {
  if (t < 1) throw InvalidArgument("g_term requires t >= 1");
  Int r = (t - 1) % p_ + 1;
  Int q = (t - r) / p_;
  return GTerm{checked_add(checked_mul(q, m(p_)), m(r)), q, r};
}

StructureConstants structure_constants(const AAPresentation& pres) {
  const NumericalSemigroup& H = pres.semigroup();
  const Int m0 = pres.m0(), n = pres.n(), p = pres.p();
  StructureConstants sc;

  // u = min{ t >= 1 : g_t - m0 in H }; g_t is unbounded so the scan ends.
  for (Int t = 1;; ++t) {
    if (H.contains(pres.g_value(t) - m0)) {
      sc.u = t;
      break;
    }
  }
  GTerm gu = pres.g_term(sc.u);
  sc.q = gu.q;
  sc.r = gu.r;

  // v = min{ b >= 1 : b*n in <m0..mp> }. b = m0 always works, so membership
  // of the arithmetic submonoid is only needed up to m0*n.
  {
    if (checked_mul(m0, n) > 200'000'000)
      throw ResourceLimit("m0 * n exceeds the membership table cap");
    std::vector<std::uint8_t> arith(static_cast<std::size_t>(checked_mul(m0, n)) + 1, 0);
    arith[0] = 1;
    for (Int x = 1; x < static_cast<Int>(arith.size()); ++x)
      for (Int i = 0; i <= p; ++i) {
        Int g = pres.m(i);
        if (g <= x && arith[static_cast<std::size_t>(x - g)]) {
          arith[static_cast<std::size_t>(x)] = 1;
          break;
        }
      }
    for (Int b = 1;; ++b) {
      if (arith[static_cast<std::size_t>(checked_mul(b, n))]) {
        sc.v = b;
        break;
      }
    }
  }

  // g_u = lambda*m0 + w*n with w in [0, v-1]; the solution is unique in that
  // range, and uniqueness is enforced rather than assumed.
  int hits = 0;
  for (Int w = 0; w < sc.v; ++w) {
    Int rest = gu.value - checked_mul(w, n);
    if (rest > 0 && rest % m0 == 0) {
      sc.w = w;
      sc.lambda = rest / m0;
      ++hits;
    }
  }
  if (hits != 1) throw ConstructionInvalid("(w, lambda) not unique in its range");

  // v*n = mu*m0 + g_z with z in [0, u-1]; unique likewise.
  hits = 0;
  for (Int z = 0; z < sc.u; ++z) {
    Int rest = checked_mul(sc.v, n) - pres.g_value(z);
    if (rest >= 0 && rest % m0 == 0) {
      sc.z = z;
      sc.mu = rest / m0;
      ++hits;
    }
  }
  if (hits != 1) throw ConstructionInvalid("(z, mu) not unique in its range");

  GTerm guz = pres.g_term(sc.u - sc.z);
  sc.q_prime = guz.q;
  sc.r_prime = guz.r;
  sc.epsilon = guz.r < sc.r ? 1 : 0;

  Int nu_num = checked_add(guz.value, checked_mul(sc.v - sc.w, n));
  if (nu_num % m0 != 0) throw ConstructionInvalid("g_{u-z} + (v-w)n is not a multiple of m0");
  sc.nu = nu_num / m0;
  if (sc.nu != sc.lambda + sc.mu + sc.epsilon)
    throw ConstructionInvalid("nu != lambda + mu + epsilon");
  if (sc.u < p + 1 || sc.q < 1 || sc.q_prime < 0 || sc.q_prime > sc.q)
    throw ConstructionInvalid("structure constants out of their guaranteed ranges");
  return sc;
}

Int gamma_value(const AAPresentation& pres, const StructureConstants& sc, Int k) {
  if (!sc.w_empty()) throw WrongRegime("gamma is defined only when W is empty");
  if (k < 1 || k > pres.p()) throw InvalidArgument("gamma index out of [1, p]");
  Int idx = (sc.q - 1) * pres.p() + sc.r + k - 1;
  return checked_sub(checked_add(pres.g_value(idx), checked_mul(sc.v - 1, pres.n())), pres.m0());
}

Int alpha_value(const AAPresentation& pres, const StructureConstants& sc, Int i) {
  if (sc.w_empty()) throw WrongRegime("alpha is defined only when W is nonempty");
  auto set = alpha_indices(sc, pres.p());
  if (std::find(set.begin(), set.end(), i) == set.end())
    throw InvalidArgument("alpha index outside the candidate set");
  Int idx = (sc.q_prime - 1) * pres.p() + i;
  return checked_sub(checked_add(pres.g_value(idx), checked_mul(sc.v - 1, pres.n())), pres.m0());
}

Int beta_value(const AAPresentation& pres, const StructureConstants& sc, Int j) {
  if (sc.w_empty()) throw WrongRegime("beta is defined only when W is nonempty");
  if (j < 1 || j > pres.p()) throw InvalidArgument("beta index out of [1, p]");
  Int idx = (sc.q - 1) * pres.p() + sc.r + j - 1;
  return checked_sub(checked_add(pres.g_value(idx), checked_mul(sc.v - sc.w - 1, pres.n())),
                     pres.m0());
}

std::vector<Int> gamma_indices(const StructureConstants& sc, Int p) {
  std::vector<Int> out;
  for (Int k = sc.r == 1 ? 1 : p - sc.r + 2; k <= p; ++k) out.push_back(k);
  return out;
}

std::vector<Int> alpha_indices(const StructureConstants& sc, Int p) {
  std::vector<Int> out;
  if (sc.r_prime == 1) {
    if (sc.q_prime == 0)
      out.push_back(p);
    else
      for (Int i = 1; i <= p; ++i) out.push_back(i);
  } else {
    for (Int i = p + 1; i <= p + sc.r_prime - 1; ++i) out.push_back(i);
  }
  return out;
}

std::vector<Int> beta_indices(const StructureConstants& sc, Int p) {
  return gamma_indices(sc, p);  // same selection rule, driven by r
}

const char* to_string(SymmetricCase c) {
  switch (c) {
    case SymmetricCase::NotSymmetric: return "not-symmetric";
    case SymmetricCase::C1_P1R1: return "W-empty,p=1";
    case SymmetricCase::C1_R2: return "W-empty,r=2";
    case SymmetricCase::C2_P1MU0: return "W-nonempty,p=1,mu=0";
    case SymmetricCase::C2_SubI: return "W-nonempty,r=1,r'=2,lambda=1,z<p";
    case SymmetricCase::C2_SubII: return "W-nonempty,r=2,r'=1,mu=0,q'=0";
    case SymmetricCase::C2_SubIII: return "W-nonempty,r=2,r'=2,mu=0";
  }
  return "?";
}

SymmetricCase classify_symmetric(const AAPresentation& pres, const StructureConstants& sc) {
  const Int p = pres.p();
  SymmetricCase tag = SymmetricCase::NotSymmetric;
  if (sc.w_empty()) {
    if (sc.r == 1 && p == 1) tag = SymmetricCase::C1_P1R1;
    if (sc.r == 2) tag = SymmetricCase::C1_R2;
  } else if (p == 1) {
    if (sc.mu == 0) tag = SymmetricCase::C2_P1MU0;
  } else {
    if (sc.r == 1 && sc.r_prime == 2 && sc.lambda == 1 && sc.z < p)
      tag = SymmetricCase::C2_SubI;
    else if (sc.r == 2 && sc.r_prime == 1 && sc.mu == 0 && sc.q_prime == 0)
      tag = SymmetricCase::C2_SubII;
    else if (sc.r == 2 && sc.r_prime == 2 && sc.mu == 0)
      tag = SymmetricCase::C2_SubIII;
  }
  bool brute = pres.semigroup().is_symmetric();
  if ((tag != SymmetricCase::NotSymmetric) != brute)
    throw ClassificationMismatch("symmetric-case predicate disagrees with the brute-force type");
  return tag;
}

std::vector<PFCandidate> pf_candidates(const AAPresentation& pres, const StructureConstants& sc) {
  const NumericalSemigroup& H = pres.semigroup();
  const auto& pf = H.pseudo_frobenius();
  auto confirmed = [&](Int v) { return std::binary_search(pf.begin(), pf.end(), v); };
  std::vector<PFCandidate> out;
  if (sc.w_empty()) {
    for (Int k : gamma_indices(sc, pres.p())) {
      Int v = gamma_value(pres, sc, k);
      out.push_back({'g', k, v, confirmed(v)});
    }
  } else {
    for (Int i : alpha_indices(sc, pres.p())) {
      Int v = alpha_value(pres, sc, i);
      out.push_back({'a', i, v, confirmed(v)});
    }
    for (Int j : beta_indices(sc, pres.p())) {
      Int v = beta_value(pres, sc, j);
      out.push_back({'b', j, v, confirmed(v)});
    }
  }
  return out;
}

}  // namespace aarf
