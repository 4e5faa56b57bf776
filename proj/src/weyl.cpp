#include "torusinv/weyl.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace torusinv {

const char* family_name(Family f) {
  switch (f) {
    case Family::GL: return "gl";
    case Family::SL: return "sl";
    case Family::Sp: return "sp";
    case Family::SOodd: return "soodd";
    case Family::SOplus: return "soplus";
    case Family::SOminus: return "sominus";
    case Family::SpinPlus: return "spinplus";
    case Family::SpinMinus: return "spinminus";
  }
  return "?";
}

Family family_from_string(const std::string& s) {
  for (Family f : {Family::GL, Family::SL, Family::Sp, Family::SOodd, Family::SOplus,
                   Family::SOminus, Family::SpinPlus, Family::SpinMinus}) {
    if (s == family_name(f)) return f;
  }
  throw std::invalid_argument("unknown family: " + s);
}

WeylType GroupSpec::weyl_type() const {
  switch (family) {
    case Family::GL:
    case Family::SL: return WeylType::A;
    case Family::Sp:
    case Family::SOodd: return WeylType::BC;
    case Family::SOplus:
    case Family::SpinPlus: return WeylType::Dplus;
    case Family::SOminus:
    case Family::SpinMinus: return WeylType::Dminus;
  }
  return WeylType::A;
}

namespace {

bool is_prime(long long v) {
  if (v < 2) return false;
  for (long long d = 2; d * d <= v; ++d)
    if (v % d == 0) return false;
  return true;
}

// q = p^m or throws.
void factor_prime_power(long long q, int& p, int& m) {
  for (long long c = 2; c * c <= q; ++c) {
    if (q % c == 0) {
      long long v = q;
      int e = 0;
      while (v % c == 0) { v /= c; ++e; }
      if (v != 1) throw std::invalid_argument("q is not a prime power");
      p = int(c);
      m = e;
      return;
    }
  }
  if (!is_prime(q)) throw std::invalid_argument("q is not a prime power");
  p = int(q);
  m = 1;
}

}  // namespace

GroupSpec make_spec(Family family, int n, long long q) {
  if (q < 2) throw std::invalid_argument("q must be at least 2");
  int p = 0, m = 0;
  factor_prime_power(q, p, m);
  bool type_a = (family == Family::GL || family == Family::SL);
  if (type_a) {
    if (n < 1) throw std::invalid_argument("n must be >= 1 for GL/SL");
  } else {
    if (n < 2) throw std::invalid_argument("n must be >= 2 for types B/C/D");
  }
  if ((family == Family::SOodd || family == Family::SOplus || family == Family::SOminus) &&
      p == 2)
    throw std::invalid_argument("SO families require odd q");
  if ((family == Family::SpinPlus || family == Family::SpinMinus) && p != 2)
    throw std::invalid_argument("Spin families require even q");
  return GroupSpec{family, n, p, m, q};
}

int WeylClassLabel::total() const {
  int s = 0;
  for (int v : positive_parts) s += v;
  for (int v : negative_parts) s += v;
  return s;
}

bool label_valid_for(const GroupSpec& spec, const WeylClassLabel& label) {
  auto dec = [](const std::vector<int>& v) {
    for (size_t i = 0; i < v.size(); ++i) {
      if (v[i] <= 0) return false;
      if (i && v[i] > v[i - 1]) return false;
    }
    return true;
  };
  if (!dec(label.positive_parts) || !dec(label.negative_parts)) return false;
  if (label.total() != spec.n) return false;
  int l = int(label.negative_parts.size());
  switch (spec.weyl_type()) {
    case WeylType::A:
      return l == 0 && !label.exceptional;
    case WeylType::BC:
      return !label.exceptional;
    case WeylType::Dplus: {
      if (l % 2 != 0) return false;
      if (label.exceptional) {
        if (l != 0) return false;
        for (int v : label.positive_parts)
          if (v % 2 != 0) return false;
      }
      return true;
    }
    case WeylType::Dminus:
      return l % 2 == 1 && !label.exceptional;
  }
  return false;
}

SignedPermutation::SignedPermutation(int n) : images(n), signs(n, 1) {
  std::iota(images.begin(), images.end(), 0);
}

SignedPermutation SignedPermutation::identity(int n) { return SignedPermutation(n); }

SignedPermutation SignedPermutation::compose(const SignedPermutation& other) const {
  SignedPermutation r(size());
  for (int j = 0; j < size(); ++j) {
    int mid = other.images[j];
    r.images[j] = images[mid];
    r.signs[j] = int8_t(other.signs[j] * signs[mid]);
  }
  return r;
}

SignedPermutation SignedPermutation::inverse() const {
  SignedPermutation r(size());
  for (int j = 0; j < size(); ++j) {
    r.images[images[j]] = j;
    r.signs[images[j]] = signs[j];
  }
  return r;
}

std::vector<long long> SignedPermutation::apply(const std::vector<long long>& z) const {
  std::vector<long long> out(z.size(), 0);
  for (size_t i = 0; i < z.size(); ++i) out[images[i]] = z[i] * signs[i];
  return out;
}

int SignedPermutation::minus_count() const {
  int c = 0;
  for (int8_t s : signs) c += (s < 0);
  return c;
}

int SignedPermutation::eigenvalue_one_multiplicity() const {
  int n = size(), count = 0;
  std::vector<bool> seen(n, false);
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    int sign = 1, j = i;
    do {
      seen[j] = true;
      sign *= signs[j];
      j = images[j];
    } while (j != i);
    if (sign > 0) ++count;
  }
  return count;
}

std::vector<std::vector<int>> partitions_of(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rem, int maxpart) -> void {
    if (rem == 0) {
      out.push_back(cur);
      return;
    }
    for (int part = std::min(rem, maxpart); part >= 1; --part) {
      cur.push_back(part);
      self(self, rem - part, part);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

long long symmetric_centralizer_order(const std::vector<int>& parts) {
  std::map<int, int> mult;
  for (int v : parts) ++mult[v];
  long long r = 1;
  for (auto [len, cnt] : mult) {
    for (int i = 0; i < cnt; ++i) r *= len;
    for (int i = 1; i <= cnt; ++i) r *= i;
  }
  return r;
}

namespace {

long long hyperoctahedral_centralizer_order(const WeylClassLabel& label) {
  auto side = [](const std::vector<int>& parts) {
    std::map<int, int> mult;
    for (int v : parts) ++mult[v];
    long long r = 1;
    for (auto [len, cnt] : mult) {
      for (int i = 0; i < cnt; ++i) r *= 2LL * len;
      for (int i = 1; i <= cnt; ++i) r *= i;
    }
    return r;
  };
  return side(label.positive_parts) * side(label.negative_parts);
}

bool splits_in_type_d(const WeylClassLabel& label) {
  if (!label.negative_parts.empty()) return false;
  for (int v : label.positive_parts)
    if (v % 2 != 0) return false;
  return true;
}

}  // namespace

std::vector<WeylClassLabel> enumerate_classes(const GroupSpec& spec) {
  std::vector<WeylClassLabel> out;
  int n = spec.n;
  switch (spec.weyl_type()) {
    case WeylType::A:
      for (auto& p : partitions_of(n)) out.push_back({p, {}, false});
      break;
    case WeylType::BC:
      for (int s = 0; s <= n; ++s) {
        auto pos = partitions_of(s);
        auto neg = partitions_of(n - s);
        for (auto& a : pos)
          for (auto& b : neg) out.push_back({a, b, false});
      }
      break;
    case WeylType::Dplus:
      for (int s = 0; s <= n; ++s) {
        for (auto& a : partitions_of(s)) {
          for (auto& b : partitions_of(n - s)) {
            if (b.size() % 2 != 0) continue;
            WeylClassLabel lab{a, b, false};
            out.push_back(lab);
            if (splits_in_type_d(lab)) {
              lab.exceptional = true;
              out.push_back(lab);
            }
          }
        }
      }
      break;
    case WeylType::Dminus:
      for (int s = 0; s <= n; ++s) {
        for (auto& a : partitions_of(s)) {
          for (auto& b : partitions_of(n - s)) {
            if (b.size() % 2 != 1) continue;
            out.push_back({a, b, false});
          }
        }
      }
      break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

SignedPermutation canonical_representative(const GroupSpec& spec, const WeylClassLabel& label) {
  if (!label_valid_for(spec, label))
    throw std::invalid_argument("label not valid for spec");
  int n = spec.n;
  SignedPermutation w(n);
  int pos = 0;
  // eps_i -> eps_{i+1} within a block, block end wraps to block start,
  // with a single -1 sign at the wrap of a negative block.
  auto add_block = [&](int len, bool negative) {
    for (int t = 0; t < len - 1; ++t) {
      w.images[pos + t] = pos + t + 1;
      w.signs[pos + t] = 1;
    }
    w.images[pos + len - 1] = pos;
    w.signs[pos + len - 1] = negative ? -1 : 1;
    pos += len;
  };
  for (int len : label.positive_parts) add_block(len, false);
  for (int len : label.negative_parts) add_block(len, true);
  if (label.exceptional) {
    // w'(eps_1) = -w(eps_1), w'(eps_{n_1}) = -w(eps_{n_1}).
    int n1 = label.positive_parts[0];
    w.signs[0] = int8_t(-w.signs[0]);
    w.signs[n1 - 1] = int8_t(-w.signs[n1 - 1]);
  }
  return w;
}

long long centralizer_order(const GroupSpec& spec, const WeylClassLabel& label) {
  if (!label_valid_for(spec, label))
    throw std::invalid_argument("label not valid for spec");
  switch (spec.weyl_type()) {
    case WeylType::A:
      return symmetric_centralizer_order(label.positive_parts);
    case WeylType::BC:
      return hyperoctahedral_centralizer_order(label);
    case WeylType::Dplus:
      // A split class keeps the full type-B centralizer (it is contained
      // in W(D)); otherwise the centralizer meets W(D) in half.
      return splits_in_type_d(label) ? hyperoctahedral_centralizer_order(label)
                                     : hyperoctahedral_centralizer_order(label) / 2;
    case WeylType::Dminus:
      // F-centralizer: C_{W(B)}(v) meets W(D) in index 2 since v itself
      // centralizes v and lies outside W(D).
      return hyperoctahedral_centralizer_order(label) / 2;
  }
  return 0;
}

std::vector<std::vector<long long>> weight_orbit(const GroupSpec& spec, int j) {
  int n = spec.n;
  if (j < 1 || j > n) throw std::invalid_argument("j out of range");
  if (spec.twisted() && j == n)
    throw std::invalid_argument("j = n is excluded for the twisted families");
  std::vector<std::vector<long long>> out;
  // Choose the j-subset of positions.
  std::vector<int> idx(j);
  auto emit_subset = [&](auto&& self, int start, int depth) -> void {
    if (depth == j) {
      switch (spec.weyl_type()) {
        case WeylType::A: {
          std::vector<long long> z(n, 0);
          for (int t : idx) z[t] = 1;
          out.push_back(z);
          break;
        }
        case WeylType::BC:
        case WeylType::Dminus: {
          for (int mask = 0; mask < (1 << j); ++mask) {
            std::vector<long long> z(n, 0);
            for (int t = 0; t < j; ++t) z[idx[t]] = (mask >> t) & 1 ? -1 : 1;
            out.push_back(z);
          }
          break;
        }
        case WeylType::Dplus: {
          for (int mask = 0; mask < (1 << j); ++mask) {
            if (j == n && __builtin_popcount(mask) % 2 != 0) continue;
            std::vector<long long> z(n, 0);
            for (int t = 0; t < j; ++t) z[idx[t]] = (mask >> t) & 1 ? -1 : 1;
            out.push_back(z);
          }
          break;
        }
      }
      return;
    }
    for (int t = start; t <= n - (j - depth); ++t) {
      idx[depth] = t;
      self(self, t + 1, depth + 1);
    }
  };
  emit_subset(emit_subset, 0, 0);
  return out;
}

long long fixed_weight_count(const SignedPermutation& w, const GroupSpec& spec, int j) {
  long long count = 0;
  for (auto& z : weight_orbit(spec, j))
    if (w.apply(z) == z) ++count;
  return count;
}

namespace {

constexpr long long kGroupEnumGuard = 10'000'000;

std::vector<SignedPermutation> signed_group(int n, bool even_signs_only) {
  long long order = 1;
  for (int i = 1; i <= n; ++i) order *= i;
  order <<= (even_signs_only ? n - 1 : n);
  if (order > kGroupEnumGuard) throw std::runtime_error("group enumeration guard exceeded");
  std::vector<SignedPermutation> out;
  out.reserve(size_t(order));
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    for (int mask = 0; mask < (1 << n); ++mask) {
      if (even_signs_only && __builtin_popcount(mask) % 2 != 0) continue;
      SignedPermutation g(n);
      for (int i = 0; i < n; ++i) {
        g.images[i] = perm[i];
        g.signs[i] = (mask >> i) & 1 ? -1 : 1;
      }
      out.push_back(std::move(g));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace

std::vector<SignedPermutation> enumerate_symmetric_group(int n) {
  long long order = 1;
  for (int i = 1; i <= n; ++i) order *= i;
  if (order > kGroupEnumGuard) throw std::runtime_error("group enumeration guard exceeded");
  std::vector<SignedPermutation> out;
  out.reserve(size_t(order));
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    SignedPermutation g(n);
    for (int i = 0; i < n; ++i) g.images[i] = perm[i];
    out.push_back(std::move(g));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::vector<SignedPermutation> enumerate_hyperoctahedral_group(int n) {
  return signed_group(n, false);
}

std::vector<SignedPermutation> enumerate_type_d_group(int n) { return signed_group(n, true); }

long long induced_trivial_by_cosets(const SignedPermutation& w, const GroupSpec& spec, int j) {
  int n = spec.n;
  if (j < 1 || j > n) throw std::invalid_argument("j out of range");
  std::vector<long long> omega(n, 0);
  for (int t = 0; t < j; ++t) omega[t] = 1;

  if (!spec.twisted()) {
    std::vector<SignedPermutation> group;
    switch (spec.weyl_type()) {
      case WeylType::A: group = enumerate_symmetric_group(n); break;
      case WeylType::BC: group = enumerate_hyperoctahedral_group(n); break;
      case WeylType::Dplus: group = enumerate_type_d_group(n); break;
      default: break;
    }
    std::set<SignedPermutation> stab;
    for (auto& g : group)
      if (g.apply(omega) == omega) stab.insert(g);
    // Coset gW_j is w-stable iff g^-1 w g lies in W_j; each stable coset
    // contributes |W_j| elements g.
    long long hits = 0;
    for (auto& g : group)
      if (stab.count(g.inverse().compose(w).compose(g))) ++hits;
    return hits / (long long)stab.size();
  }

  // Twisted case: w is the ambient type-B element v.  Work inside W(D) with
  // the F-twist given by conjugation with r = (sign flip on eps_n); the coset
  // gW_L is fixed when w_D F(g) W_L = g W_L for w_D = v r.
  if (j >= n) throw std::invalid_argument("j = n is excluded for the twisted families");
  SignedPermutation r(n);
  r.signs[n - 1] = -1;
  SignedPermutation wd = w.compose(r);
  auto group = enumerate_type_d_group(n);
  std::set<SignedPermutation> stab;
  for (auto& g : group)
    if (g.apply(omega) == omega) stab.insert(g);
  long long hits = 0;
  for (auto& g : group) {
    SignedPermutation fg = r.compose(g).compose(r);
    if (stab.count(g.inverse().compose(wd).compose(fg))) ++hits;
  }
  return hits / (long long)stab.size();
}

}  // namespace torusinv
