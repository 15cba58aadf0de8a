#include "dla/closure.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <thread>
#include <unordered_set>

namespace dla {

namespace {

constexpr unsigned kDenseLimit = 13;

using Clock = std::chrono::steady_clock;

struct Budget {
  Clock::time_point start = Clock::now();
  const CloseOptions& opts;
  bool out_of_time() const {
    if (opts.max_seconds <= 0) return false;
    return std::chrono::duration<double>(Clock::now() - start).count() > opts.max_seconds;
  }
};

unsigned resolve_threads(unsigned t) {
  if (t == 0) t = std::max(1u, std::thread::hardware_concurrency());
  return t;
}

void validate(std::span<const PauliString> gens) {
  if (gens.empty()) throw PauliError("empty generator set");
  const unsigned n = gens.front().n();
  for (const auto& g : gens) {
    if (g.n() != n) throw PauliError("generators have mixed lengths");
    if (g.is_identity()) throw PauliError("identity string among generators");
  }
}

// Layered worklist. Each layer commutes the newly found strings against
// everything known when the layer started.
std::vector<PauliString> close_dense(std::span<const PauliString> gens, const CloseOptions& opts) {
  const unsigned n = gens.front().n();
  const uint64_t total = 1ull << (2 * n);
  const uint64_t full = total - 1;
  std::vector<std::atomic<uint64_t>> seen((total + 63) / 64);
  std::vector<uint64_t> xs, zs;
  for (const auto& g : gens) {
    uint64_t idx = g.index();
    uint64_t bit = 1ull << (idx & 63);
    if (seen[idx >> 6].load(std::memory_order_relaxed) & bit) continue;
    seen[idx >> 6].fetch_or(bit, std::memory_order_relaxed);
    xs.push_back(g.x());
    zs.push_back(g.z());
  }
  std::atomic<uint64_t> count{xs.size()};
  std::atomic<bool> stop{false};
  std::atomic<bool> timed_out{false};
  Budget budget{Clock::now(), opts};
  const unsigned threads = resolve_threads(opts.threads);
  const uint64_t cap = opts.max_elements;

  size_t lo = 0, hi = xs.size();
  while (lo < hi && count.load() < full) {
    const size_t snap = xs.size();
    const uint64_t* px = xs.data();
    const uint64_t* pz = zs.data();
    auto work = [&](size_t begin, size_t end, std::vector<uint64_t>& out) {
      for (size_t f = begin; f < end; ++f) {
        if (stop.load(std::memory_order_relaxed)) return;
        if (budget.out_of_time()) {
          timed_out = true;
          stop = true;
          return;
        }
        const uint64_t fx = px[f], fz = pz[f];
        for (size_t s = 0; s < snap; ++s) {
          if (!anticommute_bits(fx, fz, px[s], pz[s])) continue;
          const uint64_t idx = (fx ^ px[s]) | ((fz ^ pz[s]) << n);
          const uint64_t bit = 1ull << (idx & 63);
          auto& word = seen[idx >> 6];
          if (word.load(std::memory_order_relaxed) & bit) continue;
          if (word.fetch_or(bit, std::memory_order_relaxed) & bit) continue;
          out.push_back(idx);
          uint64_t c = count.fetch_add(1, std::memory_order_relaxed) + 1;
          if (c == full || (cap && c > cap)) {
            stop = true;
            return;
          }
        }
      }
    };
    const size_t len = hi - lo;
    const unsigned used = static_cast<unsigned>(std::min<size_t>(threads, std::max<size_t>(1, len / 4)));
    std::vector<std::vector<uint64_t>> found(used);
    if (used == 1) {
      work(lo, hi, found[0]);
    } else {
      std::vector<std::jthread> pool;
      // interleaved blocks keep the load balanced across uneven rows
      std::atomic<size_t> next{lo};
      constexpr size_t kBlock = 16;
      for (unsigned t = 0; t < used; ++t) {
        pool.emplace_back([&, t] {
          for (;;) {
            size_t b = next.fetch_add(kBlock);
            if (b >= hi) break;
            work(b, std::min(hi, b + kBlock), found[t]);
          }
        });
      }
    }
    for (auto& part : found) {
      for (uint64_t idx : part) {
        xs.push_back(idx & ((1ull << n) - 1));
        zs.push_back(idx >> n);
      }
    }
    if (timed_out) throw CapExceeded("closure exceeded time budget");
    if (cap && xs.size() > cap) throw CapExceeded("closure exceeded element budget");
    if (stop && count.load() >= full) break;
    lo = hi;
    hi = xs.size();
  }

  std::vector<PauliString> out;
  if (count.load() >= full) {
    out.reserve(full);
    for (uint64_t idx = 1; idx < total; ++idx) out.push_back(PauliString::from_index(n, idx));
  } else {
    out.reserve(xs.size());
    for (size_t i = 0; i < xs.size(); ++i) out.emplace_back(n, xs[i], zs[i]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PauliString> close_sparse(std::span<const PauliString> gens, const CloseOptions& opts) {
  const unsigned n = gens.front().n();
  const long double full = std::ldexp(1.0L, 2 * n) - 1;
  std::unordered_set<PauliString, PauliHash> seen;
  std::vector<PauliString> elems;
  for (const auto& g : gens)
    if (seen.insert(g).second) elems.push_back(g);
  Budget budget{Clock::now(), opts};
  size_t lo = 0, hi = elems.size();
  while (lo < hi) {
    const size_t snap = elems.size();
    for (size_t f = lo; f < hi; ++f) {
      if (budget.out_of_time()) throw CapExceeded("closure exceeded time budget");
      const PauliString a = elems[f];
      for (size_t s = 0; s < snap; ++s) {
        const PauliString& b = elems[s];
        if (!anticommute_bits(a.x(), a.z(), b.x(), b.z())) continue;
        PauliString c = string_product(a, b);
        if (seen.insert(c).second) {
          elems.push_back(c);
          if (opts.max_elements && elems.size() > opts.max_elements)
            throw CapExceeded("closure exceeded element budget");
          if (static_cast<long double>(elems.size()) >= full) goto done;
        }
      }
    }
    lo = hi;
    hi = elems.size();
  }
done:
  std::sort(elems.begin(), elems.end());
  return elems;
}

}  // namespace

bool DlaBasis::contains(const PauliString& p) const {
  if (p.n() != n_) throw PauliError("length mismatch in membership test");
  return std::binary_search(basis_.begin(), basis_.end(), p);
}

DlaBasis close(std::span<const PauliString> generators, const CloseOptions& opts) {
  validate(generators);
  const unsigned n = generators.front().n();
  auto basis = n <= kDenseLimit ? close_dense(generators, opts) : close_sparse(generators, opts);
  return DlaBasis(n, std::move(basis), generators.size());
}

bool is_member(const DlaBasis& basis, const PauliString& p) { return basis.contains(p); }

bool is_closed(std::span<const PauliString> sorted_strings) {
  for (size_t i = 0; i < sorted_strings.size(); ++i) {
    for (size_t j = i + 1; j < sorted_strings.size(); ++j) {
      auto c = commutator_string(sorted_strings[i], sorted_strings[j]);
      if (c && !std::binary_search(sorted_strings.begin(), sorted_strings.end(), *c)) return false;
    }
  }
  return true;
}

}  // namespace dla
