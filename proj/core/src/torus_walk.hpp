#pragma once

// Enumeration of torus points (F_Q^x)^n by discrete-log odometer, with
// incremental evaluation of Laurent polynomials. Private to the core library.

#include <algorithm>
#include <cstdint>
#include <span>
#include <thread>
#include <vector>

#include "hyperzeta/ffield.hpp"
#include "hyperzeta/laurent.hpp"

namespace hyperzeta::detail {

/// Coordinates step through dlog exponents 0..Q-2, leftmost variable slowest.
/// Incrementing e_i modulo Q-1 always adds w_i to a term's log, including at
/// wrap-around, since -(Q-2) == 1 (mod Q-1).
class TorusWalker {
 public:
  TorusWalker(const Field& field, std::size_t nvars, std::span<const LaurentPoly> polys)
      : field_(field), nvars_(nvars), modulus_(field.order() - 1), dlogs_(nvars, 0) {
    for (const auto& p : polys) {
      Compiled c;
      for (const auto& t : p.terms()) {
        c.coeff_log.push_back(field.dlog_unchecked(t.coeff));
        for (auto w : t.exponents) {
          const std::int64_t n = static_cast<std::int64_t>(modulus_);
          c.exps.push_back(static_cast<std::uint64_t>(((w % n) + n) % n));
        }
      }
      c.term_log.resize(c.coeff_log.size());
      polys_.push_back(std::move(c));
    }
  }

  void seek(std::uint64_t leading) {
    std::fill(dlogs_.begin(), dlogs_.end(), 0);
    if (nvars_ > 0) dlogs_[0] = leading;
    for (auto& c : polys_) {
      for (std::size_t j = 0; j < c.term_log.size(); ++j) {
        unsigned __int128 e = c.coeff_log[j];
        for (std::size_t i = 0; i < nvars_; ++i) e += static_cast<unsigned __int128>(c.exps[j * nvars_ + i]) * dlogs_[i];
        c.term_log[j] = static_cast<std::uint64_t>(e % modulus_);
      }
    }
  }

  void advance() {
    for (std::size_t i = nvars_; i-- > 0;) {
      for (auto& c : polys_) {
        for (std::size_t j = 0; j < c.term_log.size(); ++j) {
          std::uint64_t v = c.term_log[j] + c.exps[j * nvars_ + i];
          if (v >= modulus_) v -= modulus_;
          c.term_log[j] = v;
        }
      }
      if (++dlogs_[i] < modulus_) return;
      dlogs_[i] = 0;
    }
  }

  Elem value(std::size_t poly) const {
    const auto& c = polys_[poly];
    Elem acc = field_.zero();
    for (auto l : c.term_log) acc = field_.add(acc, field_.exp(l));
    return acc;
  }

  std::span<const std::uint64_t> dlogs() const noexcept { return dlogs_; }
  std::uint64_t modulus() const noexcept { return modulus_; }

 private:
  struct Compiled {
    std::vector<std::uint64_t> coeff_log;
    std::vector<std::uint64_t> exps;  // row-major, terms x nvars
    std::vector<std::uint64_t> term_log;
  };

  const Field& field_;
  std::size_t nvars_;
  std::uint64_t modulus_;
  std::vector<std::uint64_t> dlogs_;
  std::vector<Compiled> polys_;
};

inline unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Visits every torus point once. The leading coordinate range is split across
/// workers; each worker owns one State, returned in worker order.
template <class State, class Visit>
std::vector<State> walk_torus(const Field& field, std::size_t nvars, std::span<const LaurentPoly> polys,
                              unsigned threads, const State& init, Visit visit) {
  const std::uint64_t n = field.order() - 1;
  if (nvars == 0) {
    TorusWalker w(field, 0, polys);
    w.seek(0);
    State s = init;
    visit(w, s);
    return {s};
  }
  std::uint64_t inner = 1;
  for (std::size_t i = 1; i < nvars; ++i) inner *= n;
  const unsigned workers = static_cast<unsigned>(std::min<std::uint64_t>(resolve_threads(threads), n));
  std::vector<State> states(workers, init);
  auto run = [&](unsigned w) {
    const std::uint64_t begin = n * w / workers;
    const std::uint64_t end = n * (w + 1) / workers;
    if (begin == end) return;
    TorusWalker walker(field, nvars, polys);
    walker.seek(begin);
    const std::uint64_t steps = (end - begin) * inner;
    for (std::uint64_t s = 0; s < steps; ++s) {
      visit(walker, states[w]);
      walker.advance();
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
  }
  return states;
}

}  // namespace hyperzeta::detail
