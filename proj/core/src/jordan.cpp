#include "gentle/jordan.hpp"

#include <algorithm>
#include <atomic>
#include <random>
#include <thread>

namespace gentle {

std::vector<Endo> end_space(const Representation& x) {
  std::vector<Endo> basis;
  for (Morphism& phi : hom_space(x, x)) {
    Endo e;
    e.comp = std::move(phi.comp);
    basis.push_back(std::move(e));
  }
  return basis;
}

bool commutes_with_arrows(const Representation& x, const Endo& n) {
  Morphism phi;
  phi.comp = n.comp;
  return is_morphism(x, x, phi);
}

bool is_nilpotent_endo(const Representation& x, const Endo& n) {
  for (size_t v = 0; v < n.comp.size(); ++v) {
    const FqMat& m = n.comp[v];
    if (m.rows() == 0) continue;
    if (!m.power(m.rows()).is_zero()) return false;
  }
  (void)x;
  return true;
}

JordanFormData jf_of_endo(const Representation& x, const Endo& n) {
  JordanFormData jf;
  for (int v = 0; v < x.quiver->vertex_count(); ++v) jf.at.push_back(jordan_type(n.comp[size_t(v)]));
  return jf;
}

namespace {

uint64_t splitmix64(uint64_t z) {
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d4d035d44d00fcull;
  return z ^ (z >> 31);
}

Endo zero_endo(const Representation& x) {
  Endo n;
  for (int v = 0; v < x.quiver->vertex_count(); ++v)
    n.comp.push_back(FqMat(x.field, size_t(x.dims[size_t(v)]), size_t(x.dims[size_t(v)])));
  return n;
}

void add_scaled(Endo& n, const Endo& b, Fq field, Fq::Elem c) {
  if (field.is_zero(c)) return;
  for (size_t v = 0; v < n.comp.size(); ++v) n.comp[v].add_scaled_in_place(b.comp[v], c);
}

// Fast per-vertex nilpotency for an endomorphism that already commutes with
// the arrow maps.
bool quick_nilpotent(const Endo& n) {
  for (const FqMat& m : n.comp) {
    if (m.rows() == 0) continue;
    if (!m.power(m.rows()).is_zero()) return false;
  }
  return true;
}

struct MaxAccumulator {
  std::vector<OracleOutcome::MaxEntry> maxima;
  uint64_t nilpotent_found = 0;

  void offer(const JordanFormData& jf, const Endo& n, uint64_t index) {
    ++nilpotent_found;
    for (auto& entry : maxima) {
      if (jf == entry.jf) {
        if (index < entry.first_index) {
          entry.first_index = index;
          entry.witness = n;
        }
        return;
      }
    }
    for (const auto& entry : maxima)
      if (dominance_leq(jf, entry.jf)) return;  // dominated, drop
    std::vector<OracleOutcome::MaxEntry> kept;
    for (auto& entry : maxima)
      if (!dominance_leq(entry.jf, jf)) kept.push_back(std::move(entry));
    kept.push_back({jf, n, index});
    maxima = std::move(kept);
  }

  void merge(MaxAccumulator&& other) {
    nilpotent_found += other.nilpotent_found;
    for (auto& entry : other.maxima) {
      uint64_t saved = nilpotent_found;
      offer(entry.jf, entry.witness, entry.first_index);
      nilpotent_found = saved;
    }
  }

  void finish() {
    std::sort(maxima.begin(), maxima.end(),
              [](const OracleOutcome::MaxEntry& a, const OracleOutcome::MaxEntry& b) {
                return a.first_index < b.first_index;
              });
  }
};

// Coefficient vectors in base p, enumerated as indices [begin, end); the endo
// is updated incrementally as digits roll.
void enumerate_range(const Representation& x, const std::vector<Endo>& basis, uint64_t begin,
                     uint64_t end, MaxAccumulator* acc) {
  Fq f = x.field;
  size_t dim = basis.size();
  std::vector<uint32_t> digits(dim, 0);
  Endo n = zero_endo(x);
  uint64_t idx = begin;
  for (size_t i = 0; i < dim && idx > 0; ++i) {
    digits[i] = uint32_t(idx % f.p);
    if (digits[i]) add_scaled(n, basis[i], f, digits[i]);
    idx /= f.p;
  }
  for (uint64_t at = begin; at < end; ++at) {
    if (quick_nilpotent(n)) {
      JordanFormData jf;
      for (const FqMat& m : n.comp) jf.at.push_back(jordan_type(m));
      acc->offer(jf, n, at);
    }
    // increment the odometer
    for (size_t i = 0; i < dim; ++i) {
      add_scaled(n, basis[i], f, 1);
      if (++digits[i] < f.p) break;
      digits[i] = 0;  // adding one p times is a no-op mod p
    }
  }
}

void sample_range(const Representation& x, const std::vector<Endo>& basis, uint64_t seed,
                  uint64_t count, uint64_t index_offset, MaxAccumulator* acc) {
  Fq f = x.field;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<uint32_t> dist(0, f.p - 1);
  for (uint64_t s = 0; s < count; ++s) {
    Endo n = zero_endo(x);
    for (const Endo& b : basis) add_scaled(n, b, f, dist(rng));
    if (!quick_nilpotent(n)) continue;
    JordanFormData jf;
    for (const FqMat& m : n.comp) jf.at.push_back(jordan_type(m));
    acc->offer(jf, n, index_offset + s);
  }
}

}  // namespace

OracleOutcome genjf_oracle(const Representation& x, const OracleOptions& opts) {
  std::vector<Endo> basis = end_space(x);
  Fq f = x.field;
  size_t dim = basis.size();

  bool exhaustive = true;
  uint64_t total = 1;
  for (size_t i = 0; i < dim; ++i) {
    if (total > opts.budget / f.p + 1) {
      exhaustive = false;
      break;
    }
    total *= f.p;
    if (total > opts.budget) {
      exhaustive = false;
      break;
    }
  }
  if (!exhaustive && opts.force_exhaustive)
    fail(Err::BudgetExceeded, "p^" + std::to_string(dim) + " exceeds the enumeration budget");

  int threads = std::max(1, opts.threads);
  OracleOutcome outcome;
  outcome.exhaustive = exhaustive;
  MaxAccumulator acc;

  if (exhaustive) {
    outcome.tried = total;
    if (threads == 1 || total < 1024) {
      enumerate_range(x, basis, 0, total, &acc);
    } else {
      auto parts = std::vector<MaxAccumulator>(size_t(threads));
      std::vector<std::thread> pool;
      uint64_t chunk = (total + uint64_t(threads) - 1) / uint64_t(threads);
      for (int t = 0; t < threads; ++t) {
        uint64_t begin = uint64_t(t) * chunk;
        uint64_t end = std::min(total, begin + chunk);
        if (begin >= end) continue;
        pool.emplace_back([&, t, begin, end] {
          enumerate_range(x, basis, begin, end, &parts[size_t(t)]);
        });
      }
      for (auto& th : pool) th.join();
      for (auto& part : parts) acc.merge(std::move(part));
    }
  } else {
    outcome.tried = opts.samples;
    // the zero endomorphism is always included so the outcome is never empty
    Endo zero = zero_endo(x);
    acc.offer(jf_of_endo(x, zero), zero, 0);
    // a fixed set of logical streams, so the sample set does not depend on
    // the worker count
    const uint64_t chunks = 16;
    uint64_t per = (opts.samples + chunks - 1) / chunks;
    auto parts = std::vector<MaxAccumulator>(chunks);
    auto run_chunk = [&](uint64_t c) {
      uint64_t count = std::min(per, opts.samples - std::min(opts.samples, per * c));
      if (count == 0) return;
      sample_range(x, basis, splitmix64(opts.seed ^ (c + 1)), count, 1 + per * c,
                   &parts[size_t(c)]);
    };
    if (threads == 1) {
      for (uint64_t c = 0; c < chunks; ++c) run_chunk(c);
    } else {
      std::vector<std::thread> pool;
      std::atomic<uint64_t> next{0};
      for (int t = 0; t < threads; ++t)
        pool.emplace_back([&] {
          for (uint64_t c = next.fetch_add(1); c < chunks; c = next.fetch_add(1)) run_chunk(c);
        });
      for (auto& th : pool) th.join();
    }
    for (auto& part : parts) acc.merge(std::move(part));
  }
  acc.finish();
  outcome.nilpotent_found = acc.nilpotent_found;
  outcome.maxima = std::move(acc.maxima);
  if (outcome.maxima.empty()) fail(Err::Internal, "oracle found no nilpotent endomorphism");
  return outcome;
}

bool structural_applicable(const Representation& x, int m) {
  const GentleQuiver& q = *x.quiver;
  if (m < 0 || m >= q.vertex_count()) return false;
  if (!x.ledger) return false;
  if (!condition_istar(q, m) || !condition_iia(q, m)) return false;
  for (const LedgerEntry& e : *x.ledger) {
    if (e.band) return false;
    if (!passes_through(q, e.word, m)) return false;
  }
  return true;
}

JordanFormData genjf_structural(const Representation& x, int m) {
  if (!structural_applicable(x, m))
    fail(Err::PreconditionIStar,
         "structural engine needs (i*) and (ii)(a) at the vertex and a ledger of strings "
         "through it");
  JordanFormData jf;
  for (int d : x.dims) jf.at.push_back(Partition::single(d));
  return jf;
}

Endo construct_shift_endo(const Representation& x, int m) {
  JordanFormData expected = genjf_structural(x, m);  // also validates preconditions
  const GentleQuiver& q = *x.quiver;

  // Orient each summand away from m and sort by the total order; ties keep
  // ledger insertion order.
  struct Oriented {
    StringWord word;
    int index;
  };
  std::vector<Oriented> summands;
  for (size_t i = 0; i < x.ledger->size(); ++i) {
    StringWord w = (*x.ledger)[i].word;
    if (word_source(q, w) != m) {
      w = inverse(w);
      if (word_source(q, w) != m) fail(Err::Internal, "ledger string does not start at m");
    }
    summands.push_back({w, int(i)});
  }
  std::stable_sort(summands.begin(), summands.end(), [&](const Oriented& a, const Oriented& b) {
    return brenner_compare(q, m, a.word, b.word) == Cmp::Less;
  });

  // For each vertex, the supported summands must be consecutive in the order.
  Endo n = zero_endo(x);
  for (int v = 0; v < q.vertex_count(); ++v) {
    std::vector<int> basis_row_of(x.ledger->size(), -1);
    for (size_t row = 0; row < x.labels[size_t(v)].size(); ++row)
      basis_row_of[size_t(x.labels[size_t(v)][row].summand)] = int(row);
    std::vector<int> chain;  // rows in ascending order of the strings
    bool in_run = false, ended = false;
    for (const Oriented& s : summands) {
      int row = basis_row_of[size_t(s.index)];
      if (row >= 0) {
        if (ended) fail(Err::Internal, "supported summands not consecutive in the order");
        in_run = true;
        chain.push_back(row);
      } else if (in_run) {
        ended = true;
      }
    }
    for (size_t k = 1; k < chain.size(); ++k)
      n.comp[size_t(v)].at(size_t(chain[k - 1]), size_t(chain[k])) = x.field.one();
  }

  if (!commutes_with_arrows(x, n))
    fail(Err::Internal, "shift endomorphism does not commute with the arrow maps");
  if (!is_nilpotent_endo(x, n)) fail(Err::Internal, "shift endomorphism is not nilpotent");
  if (!(jf_of_endo(x, n) == expected))
    fail(Err::Internal, "shift endomorphism misses the single-block Jordan data");
  return n;
}

std::string engine_name(GenjfEngine e) {
  switch (e) {
    case GenjfEngine::Structural:
      return "structural";
    case GenjfEngine::OracleExhaustive:
      return "oracle-exhaustive";
    case GenjfEngine::OracleSampled:
      return "oracle-sampled";
  }
  return "?";
}

std::string exactness_name(Exactness e) {
  switch (e) {
    case Exactness::ProvenExact:
      return "proven-exact";
    case Exactness::ExhaustiveOverFp:
      return "exhaustive-over-F_p";
    case Exactness::SampledLowerBound:
      return "sampled-lower-bound";
  }
  return "?";
}

GenjfResult genjf(const Representation& x, std::optional<int> hint_vertex,
                  const OracleOptions& opts) {
  GenjfResult result;
  if (hint_vertex && structural_applicable(x, *hint_vertex)) {
    result.jf = genjf_structural(x, *hint_vertex);
    result.certificate = construct_shift_endo(x, *hint_vertex);
    result.engine = GenjfEngine::Structural;
    result.exactness = Exactness::ProvenExact;
    return result;
  }
  OracleOutcome outcome = genjf_oracle(x, opts);
  if (!outcome.unique_max())
    fail(Err::AmbiguityBug,
         "no unique dominance maximum among attained Jordan data over F_" +
             std::to_string(x.field.p) + "; retry with the next prime");
  result.jf = outcome.jf();
  result.certificate = outcome.maxima.front().witness;
  result.engine = outcome.exhaustive ? GenjfEngine::OracleExhaustive : GenjfEngine::OracleSampled;
  result.exactness =
      outcome.exhaustive ? Exactness::ExhaustiveOverFp : Exactness::SampledLowerBound;
  return result;
}

}  // namespace gentle
