#pragma once

#include "affweyl/element.hpp"
#include "affweyl/errors.hpp"

#include <map>
#include <string>
#include <vector>

namespace affweyl {

// Integer-valued function on connected generator subsets, sparse: absent
// keys are 0. Keys are sorted index vectors.
struct IndexVector {
  std::map<std::vector<int>, long long> values;

  long long at(const std::vector<int>& key) const {
    auto it = values.find(key);
    return it == values.end() ? 0 : it->second;
  }

  void add(const std::vector<int>& key, long long delta) {
    auto it = values.find(key);
    long long v = (it == values.end() ? 0 : it->second) + delta;
    if (v == 0) {
      if (it != values.end()) values.erase(it);
    } else if (it == values.end()) {
      values.emplace(key, v);
    } else {
      it->second = v;
    }
  }

  IndexVector& operator+=(const IndexVector& o) {
    for (const auto& [k, v] : o.values) add(k, v);
    return *this;
  }
  IndexVector& operator-=(const IndexVector& o) {
    for (const auto& [k, v] : o.values) add(k, -v);
    return *this;
  }
  friend bool operator==(const IndexVector& a, const IndexVector& b) {
    return a.values == b.values;
  }
};

inline std::string subset_label(const std::vector<int>& key) {
  std::string s = "{";
  for (size_t i = 0; i < key.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(key[i]);
  }
  return s + "}";
}

// Order of the affine transformation s_i s_j; 0 means infinite (no return
// to the identity within the crystallographic bound).
inline long braid_order(DatumPtr d, int i, int j) {
  AffineWeylElement p = compose(generator(d, i), generator(d, j));
  AffineWeylElement acc = p;
  for (long m = 1; m <= 12; ++m) {
    if (acc.is_identity()) return m;
    acc = compose(acc, p);
  }
  return 0;
}

inline bool coxeter_adjacent(DatumPtr d, int i, int j) {
  long m = braid_order(d, i, j);
  return m == 0 || m >= 3;
}

// Connected components of the Coxeter subgraph induced on gens.
inline std::vector<std::vector<int>> coxeter_components(DatumPtr d,
                                                        const std::vector<int>& gens) {
  std::vector<std::vector<int>> comps;
  std::vector<bool> used(gens.size(), false);
  for (size_t s = 0; s < gens.size(); ++s) {
    if (used[s]) continue;
    std::vector<int> comp = {gens[s]};
    used[s] = true;
    for (size_t head = 0; head < comp.size(); ++head) {
      for (size_t t = 0; t < gens.size(); ++t) {
        if (used[t]) continue;
        if (coxeter_adjacent(d, comp[head], gens[t])) {
          used[t] = true;
          comp.push_back(gens[t]);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

// Indicator of the irreducible components of the parabolic on I.
inline IndexVector iota_parabolic(DatumPtr d, const std::vector<int>& gens) {
  IndexVector iv;
  for (auto& comp : coxeter_components(d, gens)) iv.add(comp, 1);
  return iv;
}

// J together with every generator adjacent to it.
inline std::vector<int> neighborhood(DatumPtr d, const std::vector<int>& j) {
  std::vector<int> all = all_generators(*d);
  std::vector<int> out;
  for (int g : all) {
    bool in = false;
    for (int x : j)
      if (x == g || coxeter_adjacent(d, g, x)) in = true;
    if (in) out.push_back(g);
  }
  return out;
}

// Signed sum over proper subsets I of S, cross-checked against the closed
// form: nonzero exactly on proper connected J with N(J) = S, with value
// (-1)^{|S|+|J|+1}.
inline IndexVector alternating_index(DatumPtr d) {
  if (!d->affine)
    throw std::invalid_argument("alternating_index wants an affine datum");
  const int ngen = d->num_generators();
  IndexVector sum;
  for (unsigned mask = 0; mask + 1 < (1u << ngen); ++mask) {
    std::vector<int> gens;
    for (int i = 0; i < ngen; ++i)
      if (mask & (1u << i)) gens.push_back(i);
    long long sign = ((ngen + (int)gens.size() + 1) % 2 == 0) ? 1 : -1;
    for (auto& comp : coxeter_components(d, gens)) sum.add(comp, sign);
  }

  IndexVector closed;
  std::vector<int> all = all_generators(*d);
  for (unsigned mask = 1; mask + 1 < (1u << ngen); ++mask) {
    std::vector<int> j;
    for (int i = 0; i < ngen; ++i)
      if (mask & (1u << i)) j.push_back(all[i]);
    auto comps = coxeter_components(d, j);
    if (comps.size() != 1) continue;  // not connected
    if ((int)neighborhood(d, j).size() != ngen) continue;
    closed.add(j, ((ngen + (int)j.size() + 1) % 2 == 0) ? 1 : -1);
  }

  if (!(sum == closed))
    throw VerificationError("alternating_index: signed sum disagrees with the "
                            "closed form on " + d->descriptor());
  return sum;
}

}  // namespace affweyl
