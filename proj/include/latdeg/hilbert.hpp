#pragma once

#include "latdeg/lattice.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <thread>
#include <unordered_set>

namespace latdeg {

// H(0..d_max) for S/I(L), with what can be read off the tail.
struct HilbertProfile {
  std::size_t ambient_dim = 0;
  std::vector<std::uint64_t> values;
  // Smallest d with H(d) == ... == H(d_max); absent unless the last two agree.
  std::optional<std::size_t> stabilization_degree;
  // Constant value of the k-th finite difference, k minimal.
  std::optional<BigInt> degree_estimate;
  std::optional<std::size_t> krull_dim_estimate;  // k + 1
};

struct HilbertOptions {
  std::uint64_t budget = 2'000'000;
  unsigned threads = 1;
};

// Residues of w = a * V modulo the invariant factors, plus the free Smith
// coordinates. Equal labels <=> a - b in L.
struct CosetLabel {
  std::vector<BigInt> torsion_residues;
  std::vector<BigInt> free_coords;
  friend bool operator==(const CosetLabel&, const CosetLabel&) = default;
};

inline CosetLabel coset_label(const HomogeneousLattice& l, std::span<const BigInt> exponents) {
  const ZVector w = l.smith_coordinates(exponents);
  const auto& d = l.invariant_factors();
  CosetLabel label;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i < d.size())
      label.torsion_residues.push_back(floor_mod(w[i], d[i]));
    else
      label.free_coords.push_back(w[i]);
  }
  return label;
}

inline std::size_t constant_tail_window(std::size_t ambient_dim) {
  return std::max<std::size_t>(3, ambient_dim);
}

inline HilbertProfile analyze_profile(std::vector<std::uint64_t> values, std::size_t ambient_dim) {
  HilbertProfile p;
  p.ambient_dim = ambient_dim;
  p.values = std::move(values);
  const auto& h = p.values;

  if (h.size() >= 2 && h[h.size() - 1] == h[h.size() - 2]) {
    std::size_t d = h.size() - 1;
    while (d > 0 && h[d - 1] == h.back()) --d;
    p.stabilization_degree = d;
  }

  const std::size_t window = constant_tail_window(ambient_dim);
  std::vector<BigInt> diff(h.begin(), h.end());
  for (std::size_t k = 0; diff.size() >= window; ++k) {
    const bool constant =
        std::all_of(diff.end() - window, diff.end(), [&](const BigInt& x) { return x == diff.back(); });
    if (constant) {
      p.degree_estimate = diff.back();
      p.krull_dim_estimate = k + 1;
      break;
    }
    std::vector<BigInt> next(diff.size() - 1);
    for (std::size_t i = 0; i + 1 < diff.size(); ++i) next[i] = diff[i + 1] - diff[i];
    diff = std::move(next);
  }
  return p;
}

// Number of exponent vectors of degree <= d_max in s variables: C(d_max+s, s).
inline BigInt monomial_count(std::size_t d_max, std::size_t s) {
  BigInt c = 1;
  for (std::size_t i = 1; i <= s; ++i) c = c * (d_max + i) / i;
  return c;
}

namespace detail {

// Calls f on every composition of `total` into parts.size() parts, colex
// order (the first coordinate moves fastest).
template <class F>
void for_each_composition(std::vector<std::uint64_t>& parts, std::uint64_t total, F&& f) {
  const std::size_t n = parts.size();
  if (n == 0) {
    if (total == 0) f(parts);
    return;
  }
  std::fill(parts.begin(), parts.end(), 0);
  parts[0] = total;
  for (;;) {
    f(parts);
    std::size_t i = 0;
    while (i < n && parts[i] == 0) ++i;
    if (i + 1 >= n) return;
    const std::uint64_t v = parts[i];
    parts[i] = 0;
    parts[0] = v - 1;
    ++parts[i + 1];
  }
}

template <class Int>
struct VectorHash {
  std::size_t operator()(const std::vector<Int>& v) const {
    std::size_t seed = v.size();
    for (const auto& x : v) seed ^= std::hash<Int>{}(x) + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
    return seed;
  }
};

// Coset labels with Smith-coordinate columns pre-reduced modulo their
// invariant factor. Int is std::int64_t when the caller has checked that no
// intermediate can overflow, BigInt otherwise.
template <class Int>
class CosetLabeler {
 public:
  explicit CosetLabeler(const HomogeneousLattice& l) : s_(l.ambient_dim()) {
    const auto& v = l.decomposition().v;
    const auto& d = l.invariant_factors();
    moduli_.assign(s_, Int(0));
    columns_.assign(s_ * s_, Int(0));
    for (std::size_t j = 0; j < s_; ++j) {
      if (j < d.size()) moduli_[j] = static_cast<Int>(d[j]);
      for (std::size_t i = 0; i < s_; ++i) {
        BigInt x = v(i, j);
        if (j < d.size()) x = floor_mod(x, d[j]);
        columns_[j * s_ + i] = static_cast<Int>(x);
      }
    }
  }

  void label(const std::vector<std::uint64_t>& a, std::vector<Int>& out) const {
    out.assign(s_, Int(0));
    for (std::size_t j = 0; j < s_; ++j) {
      Int acc = 0;
      const Int* col = &columns_[j * s_];
      for (std::size_t i = 0; i < s_; ++i)
        if (a[i] != 0) acc += static_cast<Int>(a[i]) * col[i];
      if (moduli_[j] != 0) {
        acc %= moduli_[j];
        if (acc < 0) acc += moduli_[j];
      }
      out[j] = std::move(acc);
    }
  }

 private:
  std::size_t s_;
  std::vector<Int> moduli_;
  std::vector<Int> columns_;  // column-major copy of reduced V
};

// Largest |entry| of the reduced Smith transform, used for the overflow check.
inline BigInt reduced_transform_bound(const HomogeneousLattice& l) {
  const auto& v = l.decomposition().v;
  const auto& d = l.invariant_factors();
  BigInt bound = 0;
  for (std::size_t j = 0; j < v.cols(); ++j) {
    for (std::size_t i = 0; i < v.rows(); ++i) {
      BigInt x = j < d.size() ? floor_mod(v(i, j), d[j]) : abs(v(i, j));
      bound = std::max(bound, x);
    }
    if (j < d.size()) bound = std::max(bound, d[j]);
  }
  return bound;
}

// Distinct coset labels among degree-d exponent vectors. Work is split by
// the value of the last exponent; the chunk sets are unioned, so the count
// is independent of the thread count.
template <class Int>
std::uint64_t count_cosets(const CosetLabeler<Int>& labeler, std::size_t s, std::uint64_t d,
                           unsigned threads) {
  using LabelSet = std::unordered_set<std::vector<Int>, VectorHash<Int>>;
  if (s == 0) return d == 0 ? 1 : 0;

  auto run_chunk = [&](std::uint64_t last, LabelSet& into) {
    std::vector<std::uint64_t> head(s - 1);
    std::vector<std::uint64_t> a(s);
    std::vector<Int> key;
    for_each_composition(head, d - last, [&](const std::vector<std::uint64_t>& h) {
      std::copy(h.begin(), h.end(), a.begin());
      a[s - 1] = last;
      labeler.label(a, key);
      into.insert(key);
    });
  };

  LabelSet merged;
  const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(d + 1)));
  if (workers == 1) {
    for (std::uint64_t last = 0; last <= d; ++last) run_chunk(last, merged);
    return merged.size();
  }

  std::vector<LabelSet> partial(workers);
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::uint64_t last = w; last <= d; last += workers) run_chunk(last, partial[w]);
    });
  }
  for (auto& t : pool) t.join();
  for (auto& part : partial) merged.merge(part);
  return merged.size();
}

}  // namespace detail

// H(d) for d = 0..d_max, counted as the number of classes of Z^s / L met by
// exponent vectors of degree d.
inline HilbertProfile hilbert_profile(const HomogeneousLattice& l, std::size_t d_max,
                                      const HilbertOptions& options = {}) {
  const std::size_t s = l.ambient_dim();
  const BigInt needed = monomial_count(d_max, s);
  if (needed > options.budget) throw BudgetExceeded(to_string(needed), std::to_string(options.budget));

  std::vector<std::uint64_t> values;
  values.reserve(d_max + 1);
  const BigInt worst = detail::reduced_transform_bound(l) * BigInt(d_max + 1) * BigInt(s + 1);
  const bool fits = worst < (BigInt(1) << 62);
  if (fits) {
    const detail::CosetLabeler<std::int64_t> labeler(l);
    for (std::size_t d = 0; d <= d_max; ++d) values.push_back(detail::count_cosets(labeler, s, d, options.threads));
  } else {
    const detail::CosetLabeler<BigInt> labeler(l);
    for (std::size_t d = 0; d <= d_max; ++d) values.push_back(detail::count_cosets(labeler, s, d, options.threads));
  }
  return analyze_profile(std::move(values), s);
}

inline BigInt oracle_degree(const HilbertProfile& p) {
  if (!p.degree_estimate) throw NotStabilized(p.values.empty() ? 0 : p.values.size() - 1);
  return *p.degree_estimate;
}

// True when H strictly increases and then stays constant through d_max
// (a profile that never plateaus counts as all-increasing).
inline bool is_increasing_then_constant(const std::vector<std::uint64_t>& h) {
  std::size_t i = 1;
  while (i < h.size() && h[i] > h[i - 1]) ++i;
  for (; i < h.size(); ++i)
    if (h[i] != h[i - 1]) return false;
  return true;
}

struct DegreeVerification {
  BigInt snf_degree;
  BigInt oracle_degree;
  BigInt regularity_bound;
  std::optional<std::size_t> observed_stabilization;
  bool stabilization_within_bound = false;
  bool agree = false;
  HilbertProfile profile;
};

// Runs the coset-counting oracle up to regularity_upper_bound + s and compares
// against the Smith-form degree.
inline DegreeVerification verify_degree(const HomogeneousLattice& l, const HilbertOptions& options = {}) {
  DegreeVerification r;
  r.snf_degree = degree(l);
  r.regularity_bound = regularity_upper_bound(l);
  const std::size_t s = l.ambient_dim();
  const BigInt d_max = r.regularity_bound + s;
  if (d_max > options.budget)
    throw BudgetExceeded(to_string(d_max + 1), std::to_string(options.budget));
  r.profile = hilbert_profile(l, static_cast<std::size_t>(d_max), options);
  r.oracle_degree = oracle_degree(r.profile);
  r.observed_stabilization = r.profile.stabilization_degree;
  r.stabilization_within_bound =
      r.observed_stabilization && BigInt(*r.observed_stabilization) <= r.regularity_bound;
  r.agree = r.snf_degree == r.oracle_degree;
  return r;
}

}  // namespace latdeg
