#include "torusinv/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_map>

namespace torusinv {

namespace {

constexpr long long kVectorGuard = 1'000'000;
constexpr long long kTorusGuard = 1'000'000;
constexpr long long kGroupGuard = 1'000'000;
constexpr long long kMonomialGuard = 10'000'000;

long long checked_pow(long long base, int exp, long long guard) {
  long long r = 1;
  for (int i = 0; i < exp; ++i) {
    if (r > guard / base) return guard + 1;
    r *= base;
  }
  return r;
}

long long torus_orbit_count_impl(const GroupSpec& spec, const WeylClassLabel& label,
                                 bool include_zero) {
  if (spec.family != Family::GL && spec.family != Family::SL)
    throw std::invalid_argument("GL/SL only");
  if (!label_valid_for(spec, label))
    throw std::invalid_argument("label not valid for spec");
  long long q = spec.q;
  if (checked_pow(q, spec.n, kVectorGuard) > kVectorGuard)
    throw std::runtime_error("vector enumeration guard exceeded");

  const std::vector<int>& lengths = label.positive_parts;
  int k = int(lengths.size());
  int L = 1;
  for (int len : lengths) L = std::lcm(L, len);
  FieldTable field = FieldTable::build(spec.p, spec.m * L);

  // Block i is the subfield F_{q^{n_i}} acted on by the order q^{n_i}-1
  // multiplier b_i; a vector is one subfield element per block.
  std::vector<int64_t> block_gen(static_cast<size_t>(k));
  std::vector<long long> block_size(static_cast<size_t>(k));
  std::vector<std::vector<int64_t>> elems(static_cast<size_t>(k));
  std::vector<std::unordered_map<int64_t, int>> index_of(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) {
    long long mi = 1;
    for (int t = 0; t < lengths[size_t(i)]; ++t) mi *= q;
    mi -= 1;
    block_gen[size_t(i)] = field.antilog((field.q() - 1) / mi);
    block_size[size_t(i)] = mi + 1;
    elems[size_t(i)].reserve(size_t(mi + 1));
    elems[size_t(i)].push_back(0);
    int64_t x = 1;
    for (long long t = 0; t < mi; ++t) {
      elems[size_t(i)].push_back(x);
      x = field.mul(x, block_gen[size_t(i)]);
    }
    index_of[size_t(i)].reserve(size_t(mi + 1) * 2);
    for (int t = 0; t < int(elems[size_t(i)].size()); ++t)
      index_of[size_t(i)][elems[size_t(i)][size_t(t)]] = t;
  }

  // Multiplier tuples generating the acting group.
  std::vector<std::vector<int64_t>> gens;
  if (spec.family == Family::GL) {
    for (int i = 0; i < k; ++i) {
      std::vector<int64_t> g(size_t(k), 1);
      g[size_t(i)] = block_gen[size_t(i)];
      gens.push_back(g);
    }
  } else {
    // Determinant-one lattice: (q-1)e_1 and e_i - e_1.
    std::vector<int64_t> g0(size_t(k), 1);
    g0[0] = field.pow(block_gen[0], q - 1);
    gens.push_back(g0);
    for (int i = 1; i < k; ++i) {
      std::vector<int64_t> g(size_t(k), 1);
      g[size_t(i)] = block_gen[size_t(i)];
      g[0] = field.inv(block_gen[0]);
      gens.push_back(g);
    }
  }

  std::vector<long long> stride(static_cast<size_t>(k));
  long long total = 1;
  for (int i = 0; i < k; ++i) {
    stride[size_t(i)] = total;
    total *= block_size[size_t(i)];
  }

  std::vector<char> visited(size_t(total), 0);
  std::vector<int> digits(static_cast<size_t>(k));
  std::vector<long long> stack;
  long long orbits = 0;
  for (long long start = include_zero ? 0 : 1; start < total; ++start) {
    if (visited[size_t(start)]) continue;
    ++orbits;
    visited[size_t(start)] = 1;
    stack.assign(1, start);
    while (!stack.empty()) {
      long long idx = stack.back();
      stack.pop_back();
      long long rem = idx;
      for (int i = 0; i < k; ++i) {
        digits[size_t(i)] = int(rem % block_size[size_t(i)]);
        rem /= block_size[size_t(i)];
      }
      for (const auto& g : gens) {
        long long nidx = 0;
        for (int i = 0; i < k; ++i) {
          int64_t e = elems[size_t(i)][size_t(digits[size_t(i)])];
          int64_t img = field.mul(e, g[size_t(i)]);
          nidx += stride[size_t(i)] * index_of[size_t(i)].at(img);
        }
        if (!visited[size_t(nidx)]) {
          visited[size_t(nidx)] = 1;
          stack.push_back(nidx);
        }
      }
    }
  }
  return orbits;
}

}  // namespace

long long torus_orbit_count(const GroupSpec& spec, const WeylClassLabel& label) {
  return torus_orbit_count_impl(spec, label, false);
}

long long torus_orbit_count_with_zero(const GroupSpec& spec, const WeylClassLabel& label) {
  return torus_orbit_count_impl(spec, label, true);
}

long long torus_element_qchar_count(const GroupSpec& spec, const WeylClassLabel& label, int j) {
  CanonicalTorus torus = build_canonical_torus(spec, label);
  if (torus.order() > kTorusGuard) throw std::runtime_error("torus order guard exceeded");
  long long q = spec.q;
  int k = int(torus.blocks.size());

  int L = 1;
  for (const auto& b : torus.blocks) L = std::lcm(L, b.split ? b.length : 2 * b.length);
  FieldTable field = FieldTable::build(spec.p, spec.m * L);

  std::vector<long long> block_order(static_cast<size_t>(k));
  std::vector<int64_t> block_gen(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) {
    long long o = 1;
    for (int t = 0; t < torus.blocks[size_t(i)].length; ++t) o *= q;
    o += torus.blocks[size_t(i)].split ? -1 : 1;
    block_order[size_t(i)] = o;
    block_gen[size_t(i)] = field.antilog((field.q() - 1) / o);
  }

  auto weights = weight_orbit(spec, j);
  std::vector<char> ok(weights.size(), 1);

  std::vector<long long> e(size_t(k), 0);
  std::vector<int64_t> coords(static_cast<size_t>(spec.n)), inv_coords(static_cast<size_t>(spec.n));
  bool done = false;
  while (!done) {
    long long esum = std::accumulate(e.begin(), e.end(), 0LL);
    if (!torus.det_one_constraint || esum % (q - 1) == 0) {
      // Torus element coordinates (y, y^q, y^{q^2}, ...) per block, with the
      // first entry inverted on the exceptional block.
      for (int i = 0; i < k; ++i) {
        const TorusBlock& b = torus.blocks[size_t(i)];
        int64_t y = field.pow(block_gen[size_t(i)], e[size_t(i)]);
        coords[size_t(b.start)] = b.inverted_first ? field.inv(y) : y;
        int64_t yq = y;
        for (int t = 1; t < b.length; ++t) {
          yq = field.pow(yq, q);
          coords[size_t(b.start + t)] = yq;
        }
      }
      for (int t = 0; t < spec.n; ++t) inv_coords[size_t(t)] = field.inv(coords[size_t(t)]);
      for (size_t wi = 0; wi < weights.size(); ++wi) {
        if (!ok[wi]) continue;
        int64_t val = 1;
        for (int t = 0; t < spec.n; ++t) {
          long long z = weights[wi][size_t(t)];
          if (z == 1)
            val = field.mul(val, coords[size_t(t)]);
          else if (z == -1)
            val = field.mul(val, inv_coords[size_t(t)]);
          else if (z != 0)
            val = field.mul(val, field.pow(coords[size_t(t)], z));
        }
        if (field.pow(val, q - 1) != 1) ok[wi] = 0;
      }
    }
    int i = 0;
    for (; i < k; ++i) {
      if (++e[size_t(i)] < block_order[size_t(i)]) break;
      e[size_t(i)] = 0;
    }
    done = (i == k);
  }
  return std::count(ok.begin(), ok.end(), 1);
}

namespace {

int det_mod2(std::vector<uint64_t> rows, int dim) {
  // rows hold bitmasks of width dim.
  int rank = 0;
  for (int col = 0; col < dim; ++col) {
    int pivot = -1;
    for (int r = rank; r < dim; ++r) {
      if ((rows[size_t(r)] >> col) & 1) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return 0;
    std::swap(rows[size_t(rank)], rows[size_t(pivot)]);
    for (int r = 0; r < dim; ++r)
      if (r != rank && ((rows[size_t(r)] >> col) & 1)) rows[size_t(r)] ^= rows[size_t(rank)];
    ++rank;
  }
  return 1;
}

}  // namespace

long long exterior_power_fixed_dim(int n, int j, const WeylClassLabel& label) {
  GroupSpec spec = make_spec(Family::GL, n, 2);
  if (!label_valid_for(spec, label))
    throw std::invalid_argument("label not valid for spec");
  if (j < 1 || j > n) throw std::invalid_argument("j out of range");

  // One n x n matrix over F_2 per block generator.
  std::vector<std::vector<std::vector<int>>> mats;
  int pos = 0;
  for (int len : label.positive_parts) {
    std::vector<std::vector<int>> mat(size_t(n), std::vector<int>(size_t(n), 0));
    for (int i = 0; i < n; ++i) mat[size_t(i)][size_t(i)] = 1;
    if (len == 1) {
      // F_2 has a trivial multiplicative group; the block acts as identity.
    } else {
      FieldTable field = FieldTable::build(2, len);
      int64_t b = field.generator();
      for (int t = 0; t < len; ++t) {
        int64_t img = field.mul(b, int64_t(1) << t);
        for (int r = 0; r < len; ++r)
          mat[size_t(pos + r)][size_t(pos + t)] = int((img >> r) & 1);
      }
    }
    mats.push_back(std::move(mat));
    pos += len;
  }

  std::vector<std::vector<int>> subsets;
  {
    std::vector<int> cur;
    auto rec = [&](auto&& self, int start, int depth) -> void {
      if (depth == j) {
        subsets.push_back(cur);
        return;
      }
      for (int t = start; t <= n - (j - depth); ++t) {
        cur.push_back(t);
        self(self, t + 1, depth + 1);
        cur.pop_back();
      }
    };
    rec(rec, 0, 0);
  }
  int N = int(subsets.size());
  if (N > 10'000) throw std::runtime_error("exterior power dimension guard exceeded");

  // Rows of Lambda^j(M) - I for every generator, stacked.
  size_t words = size_t((N + 63) / 64);
  std::vector<std::vector<uint64_t>> stacked;
  for (const auto& mat : mats) {
    for (int r = 0; r < N; ++r) {
      std::vector<uint64_t> row(words, 0);
      for (int c = 0; c < N; ++c) {
        std::vector<uint64_t> minor(size_t(j), 0);
        for (int a = 0; a < j; ++a)
          for (int b = 0; b < j; ++b)
            if (mat[size_t(subsets[size_t(r)][size_t(a)])][size_t(subsets[size_t(c)][size_t(b)])])
              minor[size_t(a)] |= uint64_t(1) << b;
        int entry = det_mod2(minor, j) ^ (r == c ? 1 : 0);
        if (entry) row[size_t(c / 64)] ^= uint64_t(1) << (c % 64);
      }
      stacked.push_back(std::move(row));
    }
  }

  // Fixed-space dimension = N - rank.
  int rank = 0;
  for (int col = 0; col < N && rank < int(stacked.size()); ++col) {
    int pivot = -1;
    for (int r = rank; r < int(stacked.size()); ++r) {
      if ((stacked[size_t(r)][size_t(col / 64)] >> (col % 64)) & 1) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(stacked[size_t(rank)], stacked[size_t(pivot)]);
    for (int r = 0; r < int(stacked.size()); ++r) {
      if (r == rank) continue;
      if ((stacked[size_t(r)][size_t(col / 64)] >> (col % 64)) & 1)
        for (size_t ww = 0; ww < words; ++ww) stacked[size_t(r)][ww] ^= stacked[size_t(rank)][ww];
    }
    ++rank;
  }
  return N - rank;
}

namespace {

SignedPermutation apply_twist(const Twist& twist, const SignedPermutation& g) {
  return twist ? twist(g) : g;
}

}  // namespace

long long coset_fixing_oracle(const GroupElements& group, const GroupElements& subgroup,
                              const SignedPermutation& a, const Twist& twist) {
  if ((long long)group.size() > kGroupGuard)
    throw std::runtime_error("group size guard exceeded");
  std::set<SignedPermutation> members(subgroup.begin(), subgroup.end());
  long long hits = 0;
  for (const auto& g : group)
    if (members.count(g.inverse().compose(a).compose(apply_twist(twist, g)))) ++hits;
  return hits / (long long)members.size();
}

long long coset_fixing_by_centralizers(const GroupElements& group,
                                       const GroupElements& subgroup,
                                       const SignedPermutation& a, const Twist& twist) {
  if ((long long)group.size() > kGroupGuard)
    throw std::runtime_error("group size guard exceeded");
  std::set<SignedPermutation> twisted_class;
  long long centralizer = 0;
  for (const auto& g : group) {
    SignedPermutation x = g.inverse().compose(a).compose(apply_twist(twist, g));
    if (x == a) ++centralizer;
    twisted_class.insert(std::move(x));
  }
  long long meet = 0;
  for (const auto& x : subgroup)
    if (twisted_class.count(x)) ++meet;
  long long total = centralizer * meet;
  if (total % (long long)subgroup.size() != 0)
    throw std::logic_error("centralizer sum not divisible by subgroup order");
  return total / (long long)subgroup.size();
}

long long zero_weight_monomial_count(int n, int p, long long degree) {
  if (checked_pow(p, n, kMonomialGuard) > kMonomialGuard)
    throw std::runtime_error("monomial enumeration guard exceeded");
  std::vector<int> c(size_t(n), 0);
  long long count = 0;
  bool done = false;
  while (!done) {
    long long sum = 0;
    bool flat = true;
    for (int i = 0; i < n; ++i) {
      sum += c[size_t(i)];
      if (c[size_t(i)] != c[0]) flat = false;
    }
    if (flat && sum == degree) ++count;
    int i = 0;
    for (; i < n; ++i) {
      if (++c[size_t(i)] < p) break;
      c[size_t(i)] = 0;
    }
    done = (i == n);
  }
  return count;
}

}  // namespace torusinv
