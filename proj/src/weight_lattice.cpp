#include "symheat/weight_lattice.hpp"

#include "symheat/errors.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace symheat {

namespace {

using int128 = __int128;

long long checked_ll(int128 v, const char* what) {
  if (v > int128(0x7fffffffffffffffLL)) throw std::overflow_error(what);
  return static_cast<long long>(v);
}

int128 gcd128(int128 a, int128 b) {
  while (b) {
    const int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

/// Binomial coefficient, exact; 0 when k < 0 or n < k.
int128 binom(int n, int k) {
  if (k < 0 || n < k) return 0;
  k = std::min(k, n - k);
  int128 r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;  // each prefix is itself a binomial
  return r;
}

/// dim of degree-k spherical harmonics in d+1 variables.
long long sphere_harmonic_dim(int d, int k) {
  return checked_ll(binom(k + d, d) - binom(k + d - 2, d), "sphere dimension overflow");
}

/// Weyl dimension formula for the SU(n) highest weight sum k_j omega_j:
/// product over 1 <= i <= j <= n-1 of (k_i + .. + k_j + j-i+1)/(j-i+1).
long long weyl_dim_su(int n, const std::vector<int>& k) {
  int128 num = 1, den = 1;
  for (int i = 0; i < n - 1; ++i) {
    long long run = 0;
    for (int j = i; j < n - 1; ++j) {
      run += k[j];
      num *= run + (j - i + 1);
      den *= (j - i + 1);
      const int128 g = gcd128(num, den);
      if (g > 1) {
        num /= g;
        den /= g;
      }
    }
  }
  if (den != 1) throw std::logic_error("weyl_dim_su: non-integral dimension");
  return checked_ll(num, "Weyl dimension overflow");
}

void check_xi_shape(const SymmetricSpaceModel& model, const std::vector<int>& xi) {
  if (static_cast<int>(xi.size()) != model.rank())
    throw std::invalid_argument("weight coordinate length does not match rank");
  for (int k : xi)
    if (k < 0) throw std::invalid_argument("weight coordinates must be nonnegative");
}

RatVec weight_vector(const SymmetricSpaceModel& model, const std::vector<int>& xi) {
  RatVec v = rat_zero(model.rank());
  for (int j = 0; j < model.rank(); ++j)
    if (xi[j] != 0) v = rat_add(v, rat_scale(Rat(xi[j]), model.fundamental_weights()[j]));
  return v;
}

void check_cartan_helgason(const SymmetricSpaceModel& model, const RatVec& vec) {
  for (const auto& root : model.positive_roots()) {
    const Rat ratio = gram_inner(model.gram(), vec, root.coords) /
                      gram_inner(model.gram(), root.coords, root.coords);
    if (ratio < Rat(0) || ratio.denominator() != 1)
      throw std::invalid_argument("weight fails Cartan-Helgason membership");
  }
}

}  // namespace

Rat casimir_value(const SymmetricSpaceModel& model, const std::vector<int>& xi) {
  check_xi_shape(model, xi);
  const RatVec v = weight_vector(model, xi);
  return gram_inner(model.gram(), rat_add(v, rat_scale(Rat(2), model.rho())), v);
}

long long dimension(const SymmetricSpaceModel& model, const std::vector<int>& xi) {
  check_xi_shape(model, xi);
  check_cartan_helgason(model, weight_vector(model, xi));
  const DimensionSpec& spec = model.dim_spec();
  switch (spec.kind) {
    case DimensionSpec::Kind::SphereHarmonic:
      return sphere_harmonic_dim(spec.param, xi[0]);
    case DimensionSpec::Kind::WeylSquare: {
      const long long w = weyl_dim_su(spec.param, xi);
      return checked_ll(int128(w) * int128(w), "squared Weyl dimension overflow");
    }
    case DimensionSpec::Kind::Polynomial: {
      Rat acc(0);
      for (const auto& term : spec.terms) {
        Rat t = term.coeff;
        for (std::size_t j = 0; j < term.exponents.size() && j < xi.size(); ++j)
          for (int e = 0; e < term.exponents[j]; ++e) t *= Rat(xi[j]);
        acc += t;
      }
      if (acc <= Rat(0) || acc.denominator() != 1)
        throw std::invalid_argument("dimension polynomial is not a positive integer at " +
                                    std::string("the given weight"));
      return acc.numerator();
    }
  }
  throw std::logic_error("unreachable");
}

SphericalWeight make_weight(const SymmetricSpaceModel& model, std::vector<int> xi) {
  check_xi_shape(model, xi);
  SphericalWeight w;
  w.vec = weight_vector(model, xi);
  check_cartan_helgason(model, w.vec);
  w.dim = dimension(model, xi);
  w.casimir = gram_inner(model.gram(), rat_add(w.vec, rat_scale(Rat(2), model.rho())), w.vec);
  w.xi = std::move(xi);
  return w;
}

namespace {

/// Depth-first walk of the xi-coordinate cone. The Casimir form is
/// strictly increasing in every coordinate (validated at model build), so
/// each coordinate scan can stop at the first value over the cutoff.
void enumerate_rec(const SymmetricSpaceModel& model, const Rat& cutoff, std::vector<int>& xi,
                   int level, std::vector<SphericalWeight>& out) {
  if (level == model.rank()) {
    out.push_back(make_weight(model, xi));
    return;
  }
  for (int k = 0;; ++k) {
    xi[level] = k;
    if (casimir_value(model, xi) > cutoff) break;
    enumerate_rec(model, cutoff, xi, level + 1, out);
  }
  xi[level] = 0;
}

}  // namespace

std::vector<SphericalWeight> enumerate_weights(const SymmetricSpaceModel& model,
                                               const Rat& cutoff) {
  if (cutoff < Rat(0)) throw std::invalid_argument("enumerate_weights: cutoff must be >= 0");
  std::vector<SphericalWeight> out;
  std::vector<int> xi(model.rank(), 0);
  enumerate_rec(model, cutoff, xi, 0, out);
  std::sort(out.begin(), out.end(), [](const SphericalWeight& a, const SphericalWeight& b) {
    if (a.casimir != b.casimir) return a.casimir < b.casimir;
    return a.xi < b.xi;
  });
  return out;
}

}  // namespace symheat
