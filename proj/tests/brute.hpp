#pragma once

// Slow reference implementations on sorted vertex lists. They share no code
// with the library and serve as oracles for the unit tests.

#include <algorithm>
#include <set>
#include <vector>

namespace brute {

using Set = std::vector<int>;
using Sets = std::vector<Set>;

inline void combos(int lo, int n, int k, Set& cur, Sets& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (int v = lo; v <= n; ++v) {
    cur.push_back(v);
    combos(v + 1, n, k, cur, out);
    cur.pop_back();
  }
}

// k-subsets of [n] in lexicographic order.
inline Sets subsets(int n, int k) {
  Sets out;
  Set cur;
  combos(1, n, k, cur, out);
  return out;
}

inline bool disjoint(const Set& a, const Set& b) {
  for (int x : a)
    if (std::find(b.begin(), b.end(), x) != b.end()) return false;
  return true;
}

inline int nu_from(const Sets& f, std::size_t i, std::vector<const Set*>& chosen) {
  int best = static_cast<int>(chosen.size());
  for (std::size_t j = i; j < f.size(); ++j) {
    bool ok = true;
    for (const Set* c : chosen) ok = ok && disjoint(*c, f[j]);
    if (!ok) continue;
    chosen.push_back(&f[j]);
    best = std::max(best, nu_from(f, j + 1, chosen));
    chosen.pop_back();
  }
  return best;
}

inline int nu(const Sets& f) {
  std::vector<const Set*> chosen;
  return nu_from(f, 0, chosen);
}

inline int tau(const Sets& f, int n) {
  for (int t = 0; t <= n; ++t)
    for (const Set& cover : subsets(n, t)) {
      bool all = true;
      for (const Set& e : f) all = all && !disjoint(e, cover);
      if (all) return t;
    }
  return n;
}

inline bool contains(const Sets& f, const Set& e) { return std::find(f.begin(), f.end(), e) != f.end(); }

// Largest q such that some q-set has all its k-subsets in f; k-1 when f is empty.
inline int omega(const Sets& f, int n, int k) {
  int best = f.empty() ? k - 1 : k;
  for (int q = k + 1; q <= n; ++q)
    for (const Set& w : subsets(n, q)) {
      bool all = true;
      for (const Set& idx : subsets(q, k)) {
        Set e;
        for (int i : idx) e.push_back(w[static_cast<std::size_t>(i - 1)]);
        if (!contains(f, e)) {
          all = false;
          break;
        }
      }
      if (all) best = q;
    }
  return best;
}

inline Set replace(const Set& e, int from, int to) {
  Set out;
  for (int x : e) out.push_back(x == from ? to : x);
  std::sort(out.begin(), out.end());
  return out;
}

inline Sets sorted(Sets f) {
  std::sort(f.begin(), f.end());
  return f;
}

inline Sets shift(const Sets& f, int i, int j) {
  Sets out;
  for (const Set& e : f) {
    const bool has_j = std::find(e.begin(), e.end(), j) != e.end();
    const bool has_i = std::find(e.begin(), e.end(), i) != e.end();
    if (has_j && !has_i && !contains(f, replace(e, j, i)))
      out.push_back(replace(e, j, i));
    else
      out.push_back(e);
  }
  return sorted(out);
}

inline bool is_shifted(const Sets& f) {
  for (const Set& e : f)
    for (int x : e)
      if (x > 1 && std::find(e.begin(), e.end(), x - 1) == e.end() && !contains(f, replace(e, x, x - 1)))
        return false;
  return true;
}

inline Sets shadow(const Sets& f) {
  std::set<Set> out;
  for (const Set& e : f)
    for (std::size_t i = 0; i < e.size(); ++i) {
      Set g = e;
      g.erase(g.begin() + static_cast<std::ptrdiff_t>(i));
      out.insert(g);
    }
  return Sets(out.begin(), out.end());
}

inline long long binom(int a, int b) {
  if (b < 0 || a < 0 || b > a) return 0;
  long long r = 1;
  for (int i = 1; i <= b; ++i) r = r * (a - b + i) / i;
  return r;
}

}  // namespace brute
