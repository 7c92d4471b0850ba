#pragma once

#include "qm/ideal.hpp"

#include <unordered_map>
#include <vector>

namespace qm {

// Smallest-prime-factor table (linear sieve); factors every rational prime
// exactly once, all elements then share it.
struct SpfTable {
  std::vector<int32_t> spf;
  explicit SpfTable(i64 limit);
  i64 limit() const { return i64(spf.size()) - 1; }
};

// Per-field rational-prime data for resolving norm factors into prime
// ideals: splitting type plus one split generator. Prebuilt read-only, so
// parallel loops can query without locking.
struct PrimeCache {
  const Field* fld{nullptr};
  i64 max_p{0};
  struct Entry {
    int8_t type{-1};  // 0 split, 1 inert, 2 ramified
    i64 gu{0}, gv{0};  // canonical generator of one prime above p (split/ramified)
  };
  std::vector<Entry> entries;  // indexed by p

  PrimeCache() = default;
  PrimeCache(const Field& f, i64 max_p);
  const Entry& at(i64 p) const { return entries[std::size_t(p)]; }
};

// phi_K of the element (u, v) != 0 from the factorization of its norm; the
// split/conjugate ambiguity is settled by one divisibility test mod p.
i64 phi_of_element(const Field& f, i64 u, i64 v, const SpfTable& spf, const PrimeCache& cache);

// Dense phi table over the coordinate box of the disk norm <= bound; each
// canonical element is factored once and its value written to the whole
// unit orbit.
struct PhiBox {
  const Field* fld{nullptr};
  i64 bound{0};
  i64 u_min{0}, u_max{0}, v_min{0}, v_max{0};
  std::size_t stride{0};
  std::vector<i64> phi;  // 0 marks origin / outside the disk

  PhiBox() = default;
  PhiBox(const Field& f, i64 bound, const SpfTable& spf, const PrimeCache& cache);

  i64 lookup(i64 u, i64 v) const {
    if (u < u_min || u > u_max || v < v_min || v > v_max) return 0;
    return phi[std::size_t(v - v_min) * stride + std::size_t(u - u_min)];
  }
};

// All prime ideals of norm <= max_norm, sorted by (norm, u, v); the index in
// `list` is the prime id used by CanonicalList factorizations.
struct PrimeIdealTable {
  const Field* fld{nullptr};
  struct P {
    i64 u, v;
    i64 nrm;
    i64 p;
    int8_t type;  // 0 split, 1 inert, 2 ramified
  };
  std::vector<P> list;
  std::unordered_map<i64, std::pair<int32_t, int32_t>> ids_of_p;  // -1 when absent

  PrimeIdealTable() = default;
  PrimeIdealTable(const Field& f, i64 max_norm);
};

struct FactorTerm {
  int32_t id;
  int32_t exp;
};

// Canonical elements (= ideals) of norm <= bound with factorizations over a
// PrimeIdealTable, sorted by (norm, u, v).
struct CanonicalList {
  struct Entry {
    i64 u, v;
    i64 nrm;
    uint32_t begin, len;
    int8_t mu;  // 0 when not squarefree
  };
  std::vector<Entry> entries;
  std::vector<FactorTerm> pool;

  CanonicalList() = default;
  CanonicalList(const Field& f, i64 bound, const SpfTable& spf, const PrimeCache& cache,
                const PrimeIdealTable& table);
};

// Valuation vector of an ideal in table ids, sorted by id. Every prime of
// the ideal must be present in the table.
std::vector<FactorTerm> ideal_in_table(const Ideal& a, const PrimeIdealTable& table);

}  // namespace qm
