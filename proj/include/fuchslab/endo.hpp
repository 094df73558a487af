#pragma once

// Which group endomorphisms of G lift to ring endomorphisms of F2[G]/I.
//
// A ring generated by its units is determined on G, so End(F2[G]/I) is
// identified with the set of phi in End(G) whose linear extension maps I into
// I. Everything here is a filter over the fixed enumeration order of
// EndoSpace.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "fuchslab/algebra.hpp"
#include "fuchslab/error.hpp"
#include "fuchslab/groups.hpp"

namespace fuchslab {

struct EngineOptions {
  std::uint64_t max_endos = kDefaultMaxEndos;
  unsigned threads = 0;  // 0: hardware concurrency capped by FUCHSLAB_THREADS
  /// Scans smaller than this run on the calling thread.
  std::uint64_t parallel_threshold = 4096;
};

inline unsigned worker_count(const EngineOptions& opts) {
  if (opts.threads > 0) return opts.threads;
  unsigned n = std::max(1U, std::thread::hardware_concurrency());
  if (const char* cap = std::getenv("FUCHSLAB_THREADS")) {
    const long v = std::strtol(cap, nullptr, 10);
    if (v >= 1) n = std::min(n, static_cast<unsigned>(v));
  }
  return n;
}

struct RealizabilityReport {
  GroupSpec group;
  std::size_t ring_dim = 0;
  bool unit_group_ok = false;
  std::uint64_t total_endos = 0;
  std::uint64_t realized_endos = 0;
  bool fully_realizes = false;
  std::optional<GroupHom> failing_witness;
};

/// Whether the linear extension of phi maps every basis vector of I into I.
inline bool preserves_ideal(const GroupSpec& g, const GroupHom& phi, const Ideal& i) {
  if (!(phi.source == g) || !(phi.target == g)) throw DomainError("phi must be an endomorphism of " + g.to_string());
  const auto map = element_map(phi);
  const std::size_t n = map.size();
  if (i.ambient().dim() != n) throw DomainError("ideal does not live in F2[G]");
  for (const auto& row : i.rref_basis()) {
    BitVector image(n);
    row.for_each_set([&](std::size_t e) { image.flip(map[e]); });
    if (!i.contains(image)) return false;
  }
  return true;
}

namespace detail {

/// Packed membership test: phi-bar(v) lies in I iff the projections of
/// phi(g) over g in supp(v) sum to zero in F2[G]/I.
class IdealFilter {
 public:
  explicit IdealFilter(const QuotientRing& q) : group_(q.group), space_(q.group) {
    if (q.dim() > 64) throw BudgetExceeded("quotient dimension exceeds 64");
    for (const auto& v : q.group_image) projection_.push_back(v.word());
    for (const auto& row : q.ideal.rref_basis()) {
      std::vector<std::size_t> support;
      row.for_each_set([&](std::size_t e) { support.push_back(e); });
      supports_.push_back(std::move(support));
    }
    const auto& orders = group_.finite_orders();
    strides_.assign(orders.size(), 1);
    for (std::size_t i = orders.size(); i-- > 1;) strides_[i - 1] = strides_[i] * static_cast<std::size_t>(orders[i]);
  }

  const EndoSpace& space() const noexcept { return space_; }

  bool preserves(std::uint64_t k, std::vector<std::size_t>& map) const {
    fill_map(space_.decode(k), map);
    for (const auto& support : supports_) {
      std::uint64_t acc = 0;
      for (std::size_t e : support) acc ^= projection_[map[e]];
      if (acc != 0) return false;
    }
    return true;
  }

 private:
  /// Walks G in index order; stepping the odometer changes the image by the
  /// sum of the generator images of every coordinate that moved, because a
  /// wrapped coordinate contributes -(d - 1) * img = img.
  void fill_map(const std::vector<std::size_t>& gen_images, std::vector<std::size_t>& map) const {
    const auto& orders = group_.finite_orders();
    const std::size_t r = orders.size();
    const std::size_t n = projection_.size();
    map.assign(n, 0);
    std::vector<Order> digits(r, 0);
    std::vector<Order> image(r, 0);
    std::vector<std::vector<Order>> gens(r);
    for (std::size_t j = 0; j < r; ++j) gens[j] = element_at(group_, gen_images[j]).exponents;
    auto bump = [&](std::size_t j) {
      for (std::size_t c = 0; c < r; ++c) {
        image[c] += gens[j][c];
        if (image[c] >= orders[c]) image[c] -= orders[c];
      }
    };
    for (std::size_t idx = 1; idx < n; ++idx) {
      std::size_t j = r;
      while (j-- > 0) {
        bump(j);
        if (++digits[j] < orders[j]) break;
        digits[j] = 0;
      }
      std::size_t out = 0;
      for (std::size_t c = 0; c < r; ++c) out += static_cast<std::size_t>(image[c]) * strides_[c];
      map[idx] = out;
    }
  }

  GroupSpec group_;
  EndoSpace space_;
  std::vector<std::uint64_t> projection_;
  std::vector<std::vector<std::size_t>> supports_;
  std::vector<std::size_t> strides_;
};

struct ScanResult {
  std::uint64_t realized = 0;
  std::optional<std::uint64_t> first_failure;
  std::vector<std::uint64_t> realized_indices;
};

inline ScanResult scan_endos(const QuotientRing& q, const EngineOptions& opts, bool collect) {
  IdealFilter filter(q);
  const std::uint64_t total = filter.space().size();
  if (total > opts.max_endos) {
    throw BudgetExceeded("End(" + q.group.to_string() + ") has " + std::to_string(total) + " elements, budget " +
                         std::to_string(opts.max_endos));
  }
  const unsigned workers = total < opts.parallel_threshold ? 1U : static_cast<unsigned>(std::min<std::uint64_t>(worker_count(opts), total));
  std::vector<ScanResult> parts(workers);
  auto run = [&](unsigned w) {
    const std::uint64_t begin = total * w / workers;
    const std::uint64_t end = total * (w + 1) / workers;
    std::vector<std::size_t> map;
    ScanResult& out = parts[w];
    for (std::uint64_t k = begin; k < end; ++k) {
      if (filter.preserves(k, map)) {
        ++out.realized;
        if (collect) out.realized_indices.push_back(k);
      } else if (!out.first_failure) {
        out.first_failure = k;
      }
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& t : pool) t.join();
  }
  // Chunks are contiguous and ascending, so concatenation keeps the order.
  ScanResult merged;
  for (auto& p : parts) {
    merged.realized += p.realized;
    if (!merged.first_failure && p.first_failure) merged.first_failure = p.first_failure;
    merged.realized_indices.insert(merged.realized_indices.end(), p.realized_indices.begin(), p.realized_indices.end());
  }
  return merged;
}

}  // namespace detail

/// The group endomorphisms that extend to ring endomorphisms of q, in
/// enumeration order. Requires the unit group of q to be exactly the image of G.
inline std::vector<GroupHom> ring_endos(const QuotientRing& q, const EngineOptions& opts = {}) {
  if (!q.unit_to_group) throw DomainError("unit group of the quotient is not the image of " + q.group.to_string());
  const auto scan = detail::scan_endos(q, opts, true);
  const EndoSpace space(q.group);
  std::vector<GroupHom> out;
  out.reserve(scan.realized_indices.size());
  for (auto k : scan.realized_indices) out.push_back(space.hom(k));
  return out;
}

inline RealizabilityReport fully_realizes(const QuotientRing& q, const GroupSpec& expected, const EngineOptions& opts = {}) {
  detail::require_finite(expected, "fully_realizes");
  RealizabilityReport report;
  report.group = expected;
  report.ring_dim = q.dim();
  report.total_endos = endomorphism_count(expected);
  report.unit_group_ok = q.unit_to_group.has_value() &&
                         unit_group_invariants(*q.algebra, q.units) == expected.finite_orders();
  if (!report.unit_group_ok) return report;
  const auto scan = detail::scan_endos(q, opts, false);
  report.realized_endos = scan.realized;
  report.fully_realizes = scan.realized == report.total_endos;
  if (scan.first_failure) report.failing_witness = EndoSpace(q.group).hom(*scan.first_failure);
  return report;
}

/// Brute-force count of unital ring endomorphisms over all dim x dim matrices.
inline std::uint64_t ring_endos_oracle(const Algebra& a) {
  const std::size_t n = a.dim();
  if (n > 4) throw BudgetExceeded("ring_endos_oracle is limited to dim <= 4");
  const PackedAlgebra packed(a);
  const std::uint64_t per_column = std::uint64_t{1} << n;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= per_column;
  std::vector<std::uint64_t> images(n);
  auto apply = [&](std::uint64_t v) {
    std::uint64_t out = 0;
    for (std::size_t k = 0; k < n; ++k) {
      if ((v >> k) & 1U) out ^= images[k];
    }
    return out;
  };
  std::uint64_t count = 0;
  for (std::uint64_t m = 0; m < total; ++m) {
    std::uint64_t rest = m;
    for (std::size_t i = 0; i < n; ++i) {
      images[i] = rest % per_column;
      rest /= per_column;
    }
    if (apply(packed.one()) != packed.one()) continue;
    bool multiplicative = true;
    for (std::size_t i = 0; i < n && multiplicative; ++i) {
      for (std::size_t j = i; j < n && multiplicative; ++j) {
        multiplicative = apply(packed.entry(i, j)) == packed.multiply(images[i], images[j]);
      }
    }
    if (multiplicative) ++count;
  }
  return count;
}

}  // namespace fuchslab
