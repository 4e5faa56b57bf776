#include "torusinv/truncpoly.hpp"

#include <algorithm>
#include <set>

namespace torusinv {

bool LambdaWeight::dominant() const {
  return std::all_of(coords.begin(), coords.end(), [](long long a) { return a >= 0; });
}

bool LambdaWeight::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](long long a) { return a == 0; });
}

LambdaWeight monomial_weight(const Monomial& mono) {
  LambdaWeight w;
  for (size_t i = 0; i + 1 < mono.exps.size(); ++i)
    w.coords.push_back(mono.exps[i] - mono.exps[i + 1]);
  return w;
}

long long weight_multiplicity_rn(const LambdaWeight& nu, int p, int n) {
  if (int(nu.coords.size()) != n - 1) throw std::invalid_argument("weight has wrong rank");
  // Suffix sums give the exponent vector up to adding a constant; the spread
  // is basis independent.
  std::vector<long long> s(size_t(n), 0);
  for (int i = n - 2; i >= 0; --i) s[size_t(i)] = s[size_t(i + 1)] + nu.coords[size_t(i)];
  long long lo = *std::min_element(s.begin(), s.end());
  long long hi = *std::max_element(s.begin(), s.end());
  long long e = hi - lo;
  return e <= p - 1 ? p - e : 0;
}

bool is_strongly_p_restricted(const LambdaWeight& nu, int p) {
  if (!nu.dominant()) return false;
  long long sum = 0;
  for (long long a : nu.coords) sum += a;
  return sum < p;
}

std::optional<std::vector<LambdaWeight>> steinberg_digits(const LambdaWeight& nu, int p,
                                                          int m) {
  long long q = 1;
  for (int i = 0; i < m; ++i) q *= p;
  std::vector<LambdaWeight> digits(static_cast<size_t>(m));
  for (auto& d : digits) d.coords.assign(nu.coords.size(), 0);
  for (size_t j = 0; j < nu.coords.size(); ++j) {
    long long a = nu.coords[j];
    if (a < 0 || a >= q) return std::nullopt;
    for (int t = 0; t < m; ++t) {
      digits[size_t(t)].coords[j] = a % p;
      a /= p;
    }
  }
  return digits;
}

bool is_strongly_q_restricted(const LambdaWeight& nu, int p, int m) {
  auto digits = steinberg_digits(nu, p, m);
  if (!digits) return false;
  for (auto& d : *digits)
    if (!is_strongly_p_restricted(d, p)) return false;
  return true;
}

std::vector<std::vector<LambdaWeight>> steinberg_expansions(const LambdaWeight& nu, int p,
                                                            int m, int n) {
  // All distinct weights realized by monomials of the rank-n ring.
  std::set<LambdaWeight> realized;
  {
    Monomial mono;
    mono.exps.assign(size_t(n), 0);
    bool done = false;
    while (!done) {
      realized.insert(monomial_weight(mono));
      int i = 0;
      for (; i < n; ++i) {
        if (++mono.exps[size_t(i)] < p) break;
        mono.exps[size_t(i)] = 0;
      }
      done = (i == n);
    }
  }
  std::vector<std::vector<LambdaWeight>> out;
  std::vector<LambdaWeight> cur;
  auto rec = [&](auto&& self, const LambdaWeight& rest, int t) -> void {
    if (t == m) {
      if (rest.is_zero()) out.push_back(cur);
      return;
    }
    for (const auto& mu : realized) {
      // rest = mu + p * next  componentwise
      LambdaWeight next;
      next.coords.resize(rest.coords.size());
      bool ok = true;
      for (size_t j = 0; j < rest.coords.size(); ++j) {
        long long diff = rest.coords[j] - mu.coords[j];
        if (diff % p != 0) { ok = false; break; }
        next.coords[j] = diff / p;
      }
      if (!ok) continue;
      cur.push_back(mu);
      self(self, next, t + 1);
      cur.pop_back();
    }
  };
  if (m > 0) rec(rec, nu, 0);
  return out;
}

int d0_for_special_weight(int n, int p, int i) {
  if (i < 1 || i > n - 1) throw std::invalid_argument("need 1 <= i <= n-1");
  return (long long)i * (p - 1) % n == 0 ? 1 : 0;
}

LambdaWeight special_weight(int n, long long q, int k) {
  LambdaWeight w;
  w.coords.assign(size_t(n - 1), 0);
  w.coords[size_t(k - 1)] = q - 1;
  return w;
}

std::optional<int> match_special_weight(const LambdaWeight& nu, int n, long long q) {
  for (int k = 1; k <= n - 1; ++k)
    if (nu == special_weight(n, q, k)) return k;
  return std::nullopt;
}

long long count_trivial_monomial_weights(const GroupSpec& spec, const WeylClassLabel& label) {
  if (spec.family != Family::GL && spec.family != Family::SL)
    throw std::invalid_argument("GL/SL only");
  int n = spec.n;
  long long q = spec.q;
  double size = 1;
  for (int i = 0; i < n; ++i) size *= double(q);
  if (size > 1e7) throw std::runtime_error("monomial enumeration guard exceeded");

  CanonicalTorus torus = build_canonical_torus(spec, label);
  // Monomials of the rank-mn ring correspond, through the tensor-slot
  // identification, to eps-exponent vectors z in {0..q-1}^n.
  Weight z(size_t(n), 0);
  long long count = 0;
  bool done = false;
  while (!done) {
    if (is_trivial_on_torus(z, torus)) ++count;
    int i = 0;
    for (; i < n; ++i) {
      if (++z[size_t(i)] < q) break;
      z[size_t(i)] = 0;
    }
    done = (i == n);
  }
  return count;
}

}  // namespace torusinv
