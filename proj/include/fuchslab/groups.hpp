#pragma once

// Finitely generated abelian groups C_{d1} x ... x C_{dr} x Cinf^n.
//
// A GroupSpec is always held in invariant-factor form d1 | d2 | ... | dr with
// every di >= 2. Elements of the torsion part are exponent vectors over the
// standard generators of that decomposition, ordered lexicographically
// (coordinate 0 most significant), so element index 0 is the identity.

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fuchslab/error.hpp"

namespace fuchslab {

using Order = std::int64_t;

/// Upper bound on |G| for anything that materializes group elements.
inline constexpr Order kMaxEnumerableOrder = Order{1} << 24;

class GroupSpec;
GroupSpec canonicalize(std::span<const Order> orders, std::int64_t infinite_rank = 0);

class GroupSpec {
 public:
  /// The trivial group C1.
  GroupSpec() = default;

  const std::vector<Order>& finite_orders() const noexcept { return orders_; }
  std::int64_t infinite_rank() const noexcept { return infinite_rank_; }
  bool is_finite() const noexcept { return infinite_rank_ == 0; }
  bool is_trivial() const noexcept { return orders_.empty() && infinite_rank_ == 0; }
  std::size_t rank() const noexcept { return orders_.size(); }

  /// Order of the torsion part.
  Order torsion_order() const noexcept {
    Order n = 1;
    for (Order d : orders_) n *= d;
    return n;
  }

  /// "C2^3 x C12", "Cinf^2 x C2", "C1".
  std::string to_string() const {
    std::string out;
    auto append = [&](const std::string& factor, std::size_t power) {
      if (!out.empty()) out += " x ";
      out += factor;
      if (power > 1) out += "^" + std::to_string(power);
    };
    for (std::size_t i = 0; i < orders_.size();) {
      std::size_t j = i;
      while (j < orders_.size() && orders_[j] == orders_[i]) ++j;
      append("C" + std::to_string(orders_[i]), j - i);
      i = j;
    }
    if (infinite_rank_ > 0) append("Cinf", static_cast<std::size_t>(infinite_rank_));
    return out.empty() ? "C1" : out;
  }

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;

 private:
  friend GroupSpec canonicalize(std::span<const Order>, std::int64_t);
  std::vector<Order> orders_;
  std::int64_t infinite_rank_ = 0;
};

struct GroupElement {
  std::vector<Order> exponents;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

/// A homomorphism given by the images of the source's standard generators.
struct GroupHom {
  GroupSpec source;
  GroupSpec target;
  std::vector<GroupElement> images;

  friend bool operator==(const GroupHom&, const GroupHom&) = default;
};

// ---------------------------------------------------------------------------
// Arithmetic helpers

namespace detail {

inline Order checked_mul(Order a, Order b) {
  Order out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw DomainError("group order overflows 64 bits");
  return out;
}

inline Order mod(Order a, Order m) {
  const Order r = a % m;
  return r < 0 ? r + m : r;
}

/// Inverse of a modulo m for gcd(a, m) = 1.
inline Order inverse_mod(Order a, Order m) {
  Order old_r = mod(a, m), r = m, old_s = 1, s = 0;
  while (r != 0) {
    const Order q = old_r / r;
    old_r = std::exchange(r, old_r - q * r);
    old_s = std::exchange(s, old_s - q * s);
  }
  return mod(old_s, m);
}

inline void require_finite(const GroupSpec& g, const char* what) {
  if (!g.is_finite()) throw InfiniteGroupError(std::string(what) + " needs a finite group, got " + g.to_string());
}

inline void require_enumerable(const GroupSpec& g, const char* what) {
  require_finite(g, what);
  if (g.torsion_order() > kMaxEnumerableOrder) {
    throw BudgetExceeded(std::string(what) + ": group " + g.to_string() + " is too large to enumerate");
  }
}

}  // namespace detail

/// Prime factorization by trial division, primes ascending.
inline std::vector<std::pair<Order, int>> factorize(Order n) {
  std::vector<std::pair<Order, int>> out;
  for (Order p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

// ---------------------------------------------------------------------------
// Canonical form

/// The invariant-factor form of a product of cyclic groups, together with the
/// image of each input cyclic generator under an explicit isomorphism
/// C_{orders[0]} x ... -> spec.
struct CanonicalForm {
  GroupSpec spec;
  std::vector<GroupElement> generator_images;
};

inline CanonicalForm canonical_form(std::span<const Order> orders) {
  struct Primary {
    Order prime;
    Order power;   // prime^exponent
    std::size_t source;  // which input factor it came from
  };
  std::vector<Primary> primaries;
  for (std::size_t i = 0; i < orders.size(); ++i) {
    if (orders[i] < 1) throw DomainError("cyclic factor order must be >= 1");
    for (auto [p, e] : factorize(orders[i])) {
      Order pe = 1;
      for (int k = 0; k < e; ++k) pe *= p;
      primaries.push_back({p, pe, i});
    }
  }
  // Per prime, sort descending; the j-th largest lands in the j-th invariant
  // factor counted from the top.
  std::stable_sort(primaries.begin(), primaries.end(), [](const Primary& a, const Primary& b) {
    return a.prime != b.prime ? a.prime < b.prime : a.power > b.power;
  });
  std::size_t r = 0;
  for (std::size_t i = 0; i < primaries.size();) {
    std::size_t j = i;
    while (j < primaries.size() && primaries[j].prime == primaries[i].prime) ++j;
    r = std::max(r, j - i);
    i = j;
  }
  std::vector<Order> factors(r, 1);
  std::vector<std::size_t> slot(primaries.size());
  for (std::size_t i = 0; i < primaries.size();) {
    std::size_t j = i;
    while (j < primaries.size() && primaries[j].prime == primaries[i].prime) {
      slot[j] = r - 1 - (j - i);
      factors[slot[j]] = detail::checked_mul(factors[slot[j]], primaries[j].power);
      ++j;
    }
    i = j;
  }

  CanonicalForm out;
  out.spec = canonicalize(orders);
  // canonicalize drops nothing here: every factor above is >= 2 by construction.
  out.generator_images.assign(orders.size(), GroupElement{std::vector<Order>(r, 0)});
  for (std::size_t k = 0; k < primaries.size(); ++k) {
    const Primary& pr = primaries[k];
    const Order d = orders[pr.source];
    // The input generator splits by CRT as sum_p c_p * (d / p^e) * gen, with
    // c_p = (d / p^e)^{-1} mod p^e; the primary piece (d / p^e) * gen generates
    // C_{p^e} and maps to (D / p^e) * g_slot.
    const Order cofactor = d / pr.power;
    const Order c = detail::inverse_mod(cofactor % pr.power, pr.power);
    Order& coord = out.generator_images[pr.source].exponents[slot[k]];
    const Order big = factors[slot[k]];
    coord = detail::mod(coord + detail::mod(c, pr.power) * (big / pr.power), big);
  }
  return out;
}

inline GroupSpec canonicalize(std::span<const Order> orders, std::int64_t infinite_rank) {
  if (infinite_rank < 0) throw DomainError("infinite rank must be >= 0");
  std::map<Order, std::vector<Order>> by_prime;
  for (Order d : orders) {
    if (d < 1) throw DomainError("cyclic factor order must be >= 1");
    for (auto [p, e] : factorize(d)) {
      Order pe = 1;
      for (int k = 0; k < e; ++k) pe *= p;
      by_prime[p].push_back(pe);
    }
  }
  std::size_t r = 0;
  for (auto& [p, powers] : by_prime) {
    std::sort(powers.begin(), powers.end(), std::greater<>());
    r = std::max(r, powers.size());
  }
  std::vector<Order> factors(r, 1);
  for (const auto& [p, powers] : by_prime) {
    for (std::size_t j = 0; j < powers.size(); ++j) {
      factors[r - 1 - j] = detail::checked_mul(factors[r - 1 - j], powers[j]);
    }
  }
  GroupSpec g;
  g.orders_ = std::move(factors);
  g.infinite_rank_ = infinite_rank;
  return g;
}

inline GroupSpec canonicalize(const GroupSpec& g) {
  return canonicalize(g.finite_orders(), g.infinite_rank());
}

/// Direct product, canonicalized.
inline GroupSpec product(const GroupSpec& a, const GroupSpec& b) {
  std::vector<Order> orders = a.finite_orders();
  orders.insert(orders.end(), b.finite_orders().begin(), b.finite_orders().end());
  return canonicalize(orders, a.infinite_rank() + b.infinite_rank());
}

inline GroupSpec cyclic(Order n) {
  const Order orders[] = {n};
  return canonicalize(orders);
}

// ---------------------------------------------------------------------------
// Parsing

/// GROUP := FACTOR ("x" FACTOR)*,  FACTOR := "C"N("^"R)? | "Cinf"("^"R)?
inline GroupSpec parse_group(std::string_view text) {
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) -> ParseError {
    return ParseError("bad group spec \"" + std::string(text) + "\" at offset " + std::to_string(pos) + ": " + why);
  };
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto number = [&]() -> Order {
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) throw fail("expected a number");
    Order n = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      if (__builtin_mul_overflow(n, 10, &n) || __builtin_add_overflow(n, text[pos] - '0', &n)) {
        throw fail("number too large");
      }
      ++pos;
    }
    return n;
  };

  std::vector<Order> orders;
  std::int64_t infinite_rank = 0;
  Order torsion = 1;
  skip_ws();
  while (true) {
    if (pos >= text.size() || text[pos] != 'C') throw fail("expected 'C'");
    ++pos;
    const bool infinite = text.substr(pos, 3) == "inf";
    Order n = 0;
    if (infinite) {
      pos += 3;
    } else {
      n = number();
      if (n == 0) throw fail("cyclic order must be >= 1");
    }
    Order power = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      power = number();
      if (power == 0) throw fail("exponent must be >= 1");
    }
    if (infinite) {
      if (__builtin_add_overflow(infinite_rank, power, &infinite_rank)) throw fail("rank too large");
    } else if (n > 1) {
      for (Order k = 0; k < power; ++k) {
        if (__builtin_mul_overflow(torsion, n, &torsion)) throw fail("group order overflows 64 bits");
        orders.push_back(n);
      }
    }
    skip_ws();
    if (pos == text.size()) break;
    if (text[pos] != 'x') throw fail("expected 'x' between factors");
    ++pos;
    skip_ws();
  }
  return canonicalize(orders, infinite_rank);
}

// ---------------------------------------------------------------------------
// Elements

inline Order group_order(const GroupSpec& g) {
  detail::require_finite(g, "group_order");
  return g.torsion_order();
}

inline GroupElement identity(const GroupSpec& g) {
  return GroupElement{std::vector<Order>(g.rank(), 0)};
}

/// Lexicographic rank of an element; coordinate 0 is most significant.
inline std::size_t index_of(const GroupSpec& g, const GroupElement& e) {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < g.rank(); ++i) {
    idx = idx * static_cast<std::size_t>(g.finite_orders()[i]) + static_cast<std::size_t>(e.exponents[i]);
  }
  return idx;
}

inline GroupElement element_at(const GroupSpec& g, std::size_t index) {
  GroupElement e{std::vector<Order>(g.rank(), 0)};
  for (std::size_t i = g.rank(); i-- > 0;) {
    const auto d = static_cast<std::size_t>(g.finite_orders()[i]);
    e.exponents[i] = static_cast<Order>(index % d);
    index /= d;
  }
  return e;
}

inline std::vector<GroupElement> elements(const GroupSpec& g) {
  detail::require_enumerable(g, "elements");
  const auto n = static_cast<std::size_t>(g.torsion_order());
  std::vector<GroupElement> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(element_at(g, i));
  return out;
}

inline GroupElement add(const GroupSpec& g, const GroupElement& a, const GroupElement& b) {
  GroupElement out{std::vector<Order>(g.rank())};
  for (std::size_t i = 0; i < g.rank(); ++i) {
    out.exponents[i] = (a.exponents[i] + b.exponents[i]) % g.finite_orders()[i];
  }
  return out;
}

inline GroupElement scale(const GroupSpec& g, const GroupElement& a, Order n) {
  GroupElement out{std::vector<Order>(g.rank())};
  for (std::size_t i = 0; i < g.rank(); ++i) {
    const Order d = g.finite_orders()[i];
    out.exponents[i] = detail::mod(static_cast<Order>((static_cast<__int128>(a.exponents[i]) * n) % d), d);
  }
  return out;
}

inline bool is_member(const GroupSpec& g, const GroupElement& e) {
  if (e.exponents.size() != g.rank()) return false;
  for (std::size_t i = 0; i < g.rank(); ++i) {
    if (e.exponents[i] < 0 || e.exponents[i] >= g.finite_orders()[i]) return false;
  }
  return true;
}

inline Order element_order(const GroupSpec& g, const GroupElement& e) {
  detail::require_finite(g, "element_order");
  Order n = 1;
  for (std::size_t i = 0; i < g.rank(); ++i) {
    const Order d = g.finite_orders()[i];
    n = std::lcm(n, d / std::gcd(d, e.exponents[i]));
  }
  return n;
}

/// Element order -> number of elements of that order.
inline std::map<Order, std::uint64_t> order_profile(const GroupSpec& g) {
  detail::require_enumerable(g, "order_profile");
  std::map<Order, std::uint64_t> profile;
  const auto n = static_cast<std::size_t>(g.torsion_order());
  for (std::size_t i = 0; i < n; ++i) ++profile[element_order(g, element_at(g, i))];
  return profile;
}

/// #{e in G : d * e = 0}.
inline std::uint64_t count_killed_by(const GroupSpec& g, Order d) {
  std::uint64_t n = 1;
  for (Order di : g.finite_orders()) n *= static_cast<std::uint64_t>(std::gcd(d, di));
  return n;
}

/// |End(G)| = prod_j #{e : order(e) | d_j}; saturates at UINT64_MAX.
inline std::uint64_t endomorphism_count(const GroupSpec& g) {
  detail::require_finite(g, "endomorphism_count");
  std::uint64_t n = 1;
  for (Order dj : g.finite_orders()) {
    if (__builtin_mul_overflow(n, count_killed_by(g, dj), &n)) return std::numeric_limits<std::uint64_t>::max();
  }
  return n;
}

// ---------------------------------------------------------------------------
// Homomorphisms

inline GroupElement apply(const GroupHom& f, const GroupElement& e) {
  GroupElement out = identity(f.target);
  for (std::size_t j = 0; j < f.source.rank(); ++j) {
    if (e.exponents[j] != 0) out = add(f.target, out, scale(f.target, f.images[j], e.exponents[j]));
  }
  return out;
}

/// f after g.
inline GroupHom compose(const GroupHom& f, const GroupHom& g) {
  if (!(g.target == f.source)) throw DomainError("compose: target/source mismatch");
  GroupHom out{g.source, f.target, {}};
  out.images.reserve(g.images.size());
  for (const auto& img : g.images) out.images.push_back(apply(f, img));
  return out;
}

inline GroupHom identity_hom(const GroupSpec& g) {
  GroupHom id{g, g, {}};
  for (std::size_t j = 0; j < g.rank(); ++j) {
    GroupElement e = identity(g);
    e.exponents[j] = 1;
    id.images.push_back(std::move(e));
  }
  return id;
}

/// images[j] lies in the target and has order dividing the j-th source factor.
inline bool is_well_defined(const GroupHom& f) {
  if (f.images.size() != f.source.rank()) return false;
  for (std::size_t j = 0; j < f.images.size(); ++j) {
    if (!is_member(f.target, f.images[j])) return false;
    if (f.source.finite_orders()[j] % element_order(f.target, f.images[j]) != 0) return false;
  }
  return true;
}

/// Image index of every source element, in element-index order.
inline std::vector<std::size_t> element_map(const GroupHom& f) {
  detail::require_enumerable(f.source, "element_map");
  const auto n = static_cast<std::size_t>(f.source.torsion_order());
  std::vector<std::size_t> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = index_of(f.target, apply(f, element_at(f.source, i)));
  return out;
}

/// "[(1,0), (0,2)]": the image of each generator.
inline std::string to_string(const GroupHom& f) {
  std::string s = "[";
  for (std::size_t j = 0; j < f.images.size(); ++j) {
    if (j) s += ", ";
    s += "(";
    for (std::size_t i = 0; i < f.images[j].exponents.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(f.images[j].exponents[i]);
    }
    s += ")";
  }
  return s + "]";
}

/// Index space of End(G). Endomorphism k is decoded as a mixed-radix number
/// over per-generator candidate lists (generator 0 most significant), which
/// fixes the enumeration order used everywhere else.
class EndoSpace {
 public:
  explicit EndoSpace(const GroupSpec& g) : group_(g) {
    detail::require_enumerable(g, "enumerate_endos");
    const auto n = static_cast<std::size_t>(g.torsion_order());
    std::vector<Order> orders(n);
    for (std::size_t i = 0; i < n; ++i) orders[i] = element_order(g, element_at(g, i));
    candidates_.resize(g.rank());
    for (std::size_t j = 0; j < g.rank(); ++j) {
      for (std::size_t i = 0; i < n; ++i) {
        if (g.finite_orders()[j] % orders[i] == 0) candidates_[j].push_back(i);
      }
    }
    size_ = endomorphism_count(g);
  }

  const GroupSpec& group() const noexcept { return group_; }
  std::uint64_t size() const noexcept { return size_; }

  /// Element index of each generator image.
  std::vector<std::size_t> decode(std::uint64_t k) const {
    std::vector<std::size_t> images(candidates_.size());
    for (std::size_t j = candidates_.size(); j-- > 0;) {
      const auto base = candidates_[j].size();
      images[j] = candidates_[j][k % base];
      k /= base;
    }
    return images;
  }

  GroupHom hom(std::uint64_t k) const {
    GroupHom f{group_, group_, {}};
    for (std::size_t idx : decode(k)) f.images.push_back(element_at(group_, idx));
    return f;
  }

  std::uint64_t encode(const GroupHom& f) const {
    std::uint64_t k = 0;
    for (std::size_t j = 0; j < candidates_.size(); ++j) {
      const auto idx = index_of(group_, f.images[j]);
      const auto& c = candidates_[j];
      const auto it = std::lower_bound(c.begin(), c.end(), idx);
      if (it == c.end() || *it != idx) throw DomainError("not an endomorphism of " + group_.to_string());
      k = k * c.size() + static_cast<std::uint64_t>(it - c.begin());
    }
    return k;
  }

 private:
  GroupSpec group_;
  std::vector<std::vector<std::size_t>> candidates_;
  std::uint64_t size_ = 0;
};

inline constexpr std::uint64_t kDefaultMaxEndos = 1'000'000;

inline std::vector<GroupHom> enumerate_endos(const GroupSpec& g, std::uint64_t max_count = kDefaultMaxEndos) {
  detail::require_enumerable(g, "enumerate_endos");
  const std::uint64_t total = endomorphism_count(g);
  if (total > max_count) {
    throw BudgetExceeded("End(" + g.to_string() + ") has " + std::to_string(total) + " elements, budget " +
                         std::to_string(max_count));
  }
  EndoSpace space(g);
  std::vector<GroupHom> out;
  out.reserve(total);
  for (std::uint64_t k = 0; k < total; ++k) out.push_back(space.hom(k));
  return out;
}

}  // namespace fuchslab
