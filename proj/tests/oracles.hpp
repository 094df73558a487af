#pragma once

// Slow reference computations used to cross-check the library. Nothing here
// calls into fuchslab; elements of F2[G] are dense 0/1 vectors indexed by the
// mixed-radix encoding of exponent tuples (first coordinate most significant).

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using Tuple = std::vector<long>;
using Vec = std::vector<std::uint8_t>;

struct Group {
  std::vector<long> orders;

  std::size_t size() const {
    std::size_t n = 1;
    for (long d : orders) n *= static_cast<std::size_t>(d);
    return n;
  }
  Tuple at(std::size_t index) const {
    Tuple t(orders.size());
    for (std::size_t i = orders.size(); i-- > 0;) {
      t[i] = static_cast<long>(index % static_cast<std::size_t>(orders[i]));
      index /= static_cast<std::size_t>(orders[i]);
    }
    return t;
  }
  std::size_t index(const Tuple& t) const {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < orders.size(); ++i) idx = idx * static_cast<std::size_t>(orders[i]) + static_cast<std::size_t>(t[i]);
    return idx;
  }
  std::size_t add(std::size_t a, std::size_t b) const {
    Tuple x = at(a), y = at(b);
    for (std::size_t i = 0; i < orders.size(); ++i) x[i] = (x[i] + y[i]) % orders[i];
    return index(x);
  }
  long order_of(std::size_t a) const {
    long k = 1;
    for (std::size_t acc = a; acc != 0; acc = add(acc, a)) ++k;
    return k;
  }
};

/// Number of endomorphisms: tuples of generator images killed by the orders.
inline std::uint64_t count_endos(const Group& g) {
  std::uint64_t total = 1;
  for (long d : g.orders) {
    std::uint64_t ok = 0;
    for (std::size_t e = 0; e < g.size(); ++e) {
      std::size_t acc = 0;
      for (long k = 0; k < d; ++k) acc = g.add(acc, e);
      ok += acc == 0;
    }
    total *= ok;
  }
  return total;
}

inline std::map<long, std::uint64_t> order_profile(const Group& g) {
  std::map<long, std::uint64_t> out;
  for (std::size_t e = 0; e < g.size(); ++e) ++out[g.order_of(e)];
  return out;
}

inline Vec multiply(const Group& g, const Vec& a, const Vec& b) {
  Vec out(g.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j]) out[g.add(i, j)] ^= 1;
    }
  }
  return out;
}

inline Vec add(Vec a, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] ^= b[i];
  return a;
}

inline Vec basis(const Group& g, std::size_t i) {
  Vec v(g.size(), 0);
  v[i] = 1;
  return v;
}

/// Every element of the ideal generated by gens, as a set (small |G| only).
inline std::set<Vec> ideal_elements(const Group& g, const std::vector<Vec>& gens) {
  std::set<Vec> elems{Vec(g.size(), 0)};
  std::vector<Vec> frontier;
  for (const auto& v : gens) {
    for (std::size_t e = 0; e < g.size(); ++e) frontier.push_back(multiply(g, basis(g, e), v));
  }
  // The ideal is the additive span of the G-translates of the generators.
  for (const auto& f : frontier) {
    if (elems.count(f)) continue;
    std::vector<Vec> added;
    for (const auto& x : elems) added.push_back(add(x, f));
    elems.insert(added.begin(), added.end());
  }
  return elems;
}

inline int log2_size(std::size_t n) {
  int k = 0;
  while ((std::size_t{1} << k) < n) ++k;
  return k;
}

/// Units of F2[G]/I by exhaustive inverse search over coset representatives.
struct QuotientUnits {
  std::size_t count = 0;
  std::map<long, std::uint64_t> order_profile;
};

inline QuotientUnits quotient_units(const Group& g, const std::set<Vec>& ideal) {
  const std::size_t n = g.size();
  // Coset representatives: smallest member of each coset.
  std::vector<Vec> reps;
  std::set<Vec> covered;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    Vec v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = (m >> i) & 1U;
    if (covered.count(v)) continue;
    reps.push_back(v);
    for (const auto& x : ideal) covered.insert(add(v, x));
  }
  auto in_ideal = [&](const Vec& v) { return ideal.count(v) != 0; };
  const Vec one = basis(g, 0);
  QuotientUnits out;
  for (const auto& u : reps) {
    bool unit = false;
    for (const auto& w : reps) {
      if (in_ideal(add(multiply(g, u, w), one))) {
        unit = true;
        break;
      }
    }
    if (!unit) continue;
    ++out.count;
    long k = 1;
    Vec p = u;
    while (!in_ideal(add(p, one))) {
      p = multiply(g, p, u);
      ++k;
    }
    ++out.order_profile[k];
  }
  return out;
}

/// All invariant-factor lists d1 | d2 | ... with product n.
inline std::vector<std::vector<long>> abelian_groups_of_order(long n) {
  std::vector<std::vector<long>> out;
  std::vector<long> cur;
  auto rec = [&](auto&& self, long last, long rest) -> void {
    if (rest == 1) {
      out.push_back(cur);
      return;
    }
    for (long d = last; d <= rest; d += last) {
      if (d < 2 || rest % d != 0) continue;
      cur.push_back(d);
      self(self, d, rest / d);
      cur.pop_back();
    }
  };
  rec(rec, 1, n);
  return out;
}

/// Identifies an abelian group from its element-order profile.
inline std::vector<long> identify(const std::map<long, std::uint64_t>& profile) {
  std::uint64_t n = 0;
  for (const auto& [o, c] : profile) n += c;
  for (const auto& orders : abelian_groups_of_order(static_cast<long>(n))) {
    if (order_profile(Group{orders}) == profile) return orders;
  }
  return {};
}

}  // namespace oracle
