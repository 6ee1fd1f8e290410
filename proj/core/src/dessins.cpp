#include "belyi/dessins.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>

#include "belyi/parallel.hpp"

namespace belyi {

Perm perm_identity(int n) {
  Perm p(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i;
  return p;
}

Perm perm_inverse(const Perm& p) {
  Perm q(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) q[static_cast<std::size_t>(p[i])] = static_cast<int>(i);
  return q;
}

Perm perm_then(const Perm& a, const Perm& b) {
  Perm r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = b[static_cast<std::size_t>(a[i])];
  return r;
}

bool perm_valid(const Perm& p) {
  std::vector<bool> seen(p.size(), false);
  for (int v : p) {
    if (v < 0 || static_cast<std::size_t>(v) >= p.size() || seen[static_cast<std::size_t>(v)]) return false;
    seen[static_cast<std::size_t>(v)] = true;
  }
  return true;
}

namespace {

template <class F>
void for_each_cycle(const Perm& p, F&& f) {
  std::vector<bool> seen(p.size(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    std::vector<int> cyc;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(p[j])) {
      seen[j] = true;
      cyc.push_back(static_cast<int>(j));
    }
    f(cyc);
  }
}

}  // namespace

std::vector<int> cycle_type(const Perm& p) {
  std::vector<int> t;
  for_each_cycle(p, [&](const std::vector<int>& c) { t.push_back(static_cast<int>(c.size())); });
  std::sort(t.rbegin(), t.rend());
  return t;
}

int cycle_count(const Perm& p) { return static_cast<int>(cycle_type(p).size()); }

std::string cycle_string(const Perm& p) {
  std::string out;
  for_each_cycle(p, [&](const std::vector<int>& c) {
    if (c.size() < 2) return;
    out += "(";
    for (std::size_t i = 0; i < c.size(); ++i) out += (i ? " " : "") + std::to_string(c[i] + 1);
    out += ")";
  });
  return out.empty() ? "()" : out;
}

Perm parse_cycles(const std::string& text, int n) {
  if (n < 1) throw DomainError("permutation degree must be positive");
  Perm p = perm_identity(n);
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip();
  while (i < text.size()) {
    if (text[i] != '(') throw DomainError("expected '(' in cycle notation: " + text);
    ++i;
    std::vector<int> cyc;
    for (;;) {
      skip();
      if (i < text.size() && text[i] == ')') {
        ++i;
        break;
      }
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (start == i) throw DomainError("bad cycle notation: " + text);
      int v = std::stoi(text.substr(start, i - start));
      if (v < 1 || v > n) throw DomainError("point " + std::to_string(v) + " outside 1.." + std::to_string(n));
      if (used[static_cast<std::size_t>(v - 1)]) throw DomainError("point " + std::to_string(v) + " repeated");
      used[static_cast<std::size_t>(v - 1)] = true;
      cyc.push_back(v - 1);
    }
    for (std::size_t k = 0; k < cyc.size(); ++k) p[static_cast<std::size_t>(cyc[k])] = cyc[(k + 1) % cyc.size()];
    skip();
  }
  return p;
}

bool is_transitive(const Perm& a, const Perm& b) {
  const std::size_t n = a.size();
  if (n == 0) return false;
  std::vector<bool> seen(n, false);
  std::vector<int> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int y : {a[static_cast<std::size_t>(x)], b[static_cast<std::size_t>(x)]}) {
      if (!seen[static_cast<std::size_t>(y)]) {
        seen[static_cast<std::size_t>(y)] = true;
        ++count;
        stack.push_back(y);
      }
    }
  }
  return count == n;
}

PermutationTriple triple_validate(const Perm& sigma0, const Perm& sigma1) {
  if (sigma0.size() != sigma1.size() || sigma0.empty()) throw DomainError("permutations of different or zero size");
  if (!perm_valid(sigma0) || !perm_valid(sigma1)) throw DomainError("not a permutation");
  if (!is_transitive(sigma0, sigma1)) throw DomainError("the pair generates an intransitive group");
  PermutationTriple t;
  t.n = static_cast<int>(sigma0.size());
  t.sigma0 = sigma0;
  t.sigma1 = sigma1;
  t.sigma_inf = perm_inverse(perm_then(sigma0, sigma1));
  return t;
}

int genus(const PermutationTriple& t) {
  const int c = cycle_count(t.sigma0) + cycle_count(t.sigma1) + cycle_count(t.sigma_inf);
  const int twice = 2 + t.n - c;  // 2g
  if (twice % 2 != 0 || twice < 0) throw DomainError("internal: Riemann-Hurwitz parity violated");
  return twice / 2;
}

Passport passport(const PermutationTriple& t) {
  return {cycle_type(t.sigma0), cycle_type(t.sigma1), cycle_type(t.sigma_inf), genus(t)};
}

namespace {

bool is_identity(const Perm& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != static_cast<int>(i)) return false;
  return true;
}

// Sims filter: keeps at most n(n-1)/2 generators of the same group.
std::vector<Perm> sims_filter(const std::vector<Perm>& gens, int n) {
  std::vector<std::vector<std::optional<Perm>>> table(static_cast<std::size_t>(n),
                                                      std::vector<std::optional<Perm>>(static_cast<std::size_t>(n)));
  std::vector<Perm> kept;
  for (Perm g : gens) {
    for (;;) {
      if (is_identity(g)) break;
      std::size_t i = 0;
      while (g[i] == static_cast<int>(i)) ++i;
      const auto j = static_cast<std::size_t>(g[i]);
      auto& slot = table[i][j];
      if (!slot) {
        slot = g;
        kept.push_back(g);
        break;
      }
      // h^-1 g fixes i, with composition "g then h^-1"
      g = perm_then(g, perm_inverse(*slot));
    }
  }
  return kept;
}

Integer order_rec(std::vector<Perm> gens, int n) {
  gens.erase(std::remove_if(gens.begin(), gens.end(), is_identity), gens.end());
  if (gens.empty()) return 1;
  // base point: first point moved by a generator
  int b = 0;
  for (bool found = false; !found; ++b) {
    for (const auto& g : gens)
      if (g[static_cast<std::size_t>(b)] != b) found = true;
    if (found) break;
  }
  // orbit with transversal u[x]: a perm sending b to x
  std::vector<std::optional<Perm>> u(static_cast<std::size_t>(n));
  u[static_cast<std::size_t>(b)] = perm_identity(n);
  std::vector<int> orbit{b};
  for (std::size_t k = 0; k < orbit.size(); ++k) {
    const int x = orbit[k];
    for (const auto& g : gens) {
      const int y = g[static_cast<std::size_t>(x)];
      if (!u[static_cast<std::size_t>(y)]) {
        u[static_cast<std::size_t>(y)] = perm_then(*u[static_cast<std::size_t>(x)], g);
        orbit.push_back(y);
      }
    }
  }
  // Schreier generators of the stabilizer of b
  std::vector<Perm> schreier;
  for (int x : orbit) {
    for (const auto& g : gens) {
      const int y = g[static_cast<std::size_t>(x)];
      Perm s = perm_then(perm_then(*u[static_cast<std::size_t>(x)], g), perm_inverse(*u[static_cast<std::size_t>(y)]));
      if (!is_identity(s)) schreier.push_back(std::move(s));
    }
    // filter as we go to keep the list short
    if (schreier.size() > static_cast<std::size_t>(n * n)) schreier = sims_filter(schreier, n);
  }
  return Integer(static_cast<long>(orbit.size())) * order_rec(sims_filter(schreier, n), n);
}

}  // namespace

Integer group_order(const std::vector<Perm>& gens, int n) { return order_rec(sims_filter(gens, n), n); }

Integer monodromy_order(const PermutationTriple& t, const CombinatoricsLimits& lim) {
  if (t.n > lim.max_monodromy_degree)
    throw DomainError("monodromy order limited to degree " + std::to_string(lim.max_monodromy_degree));
  return group_order({t.sigma0, t.sigma1}, t.n);
}

std::vector<Integer> beckmann_primes(const PermutationTriple& t, const CombinatoricsLimits& lim) {
  return prime_divisors(monodromy_order(t, lim));
}

Integer Census::raw_count() const {
  Integer s = 0;
  for (const auto& c : classes) s += c.class_size;
  return s;
}

Census enumerate_dessins(int n, unsigned jobs, const CombinatoricsLimits& lim) {
  if (n < 1) throw DomainError("degree must be positive");
  if (n > lim.max_enumeration_degree)
    throw DomainError("enumeration limited to degree " + std::to_string(lim.max_enumeration_degree));
  std::vector<Perm> all;
  for (Perm p = perm_identity(n);;) {
    all.push_back(p);
    if (!std::next_permutation(p.begin(), p.end())) break;
  }
  Integer factorial = static_cast<long>(all.size());
  // least permutation of each cycle type, in lexicographic order
  std::map<std::vector<int>, Perm> least;
  for (const auto& p : all) least.emplace(cycle_type(p), p);
  std::vector<Perm> reps;
  for (auto& [type, p] : least) reps.push_back(p);
  std::sort(reps.begin(), reps.end());

  auto conjugate = [n](const Perm& s, const Perm& tau) {
    // relabel every point i as tau(i)
    Perm r(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
      r[static_cast<std::size_t>(tau[static_cast<std::size_t>(i)])] = tau[static_cast<std::size_t>(s[static_cast<std::size_t>(i)])];
    return r;
  };

  Census census;
  census.n = n;
  for (const auto& s0 : reps) {
    std::vector<Perm> centralizer;
    for (const auto& tau : all)
      if (conjugate(s0, tau) == s0) centralizer.push_back(tau);
    std::vector<std::optional<DessinClass>> found(all.size());
    parallel_for(all.size(), jobs, [&](std::size_t idx) {
      const Perm& s1 = all[idx];
      if (!is_transitive(s0, s1)) return;
      long stab = 0;
      for (const auto& tau : centralizer) {
        Perm c = conjugate(s1, tau);
        if (c < s1) return;
        if (c == s1) ++stab;
      }
      found[idx] = DessinClass{triple_validate(s0, s1), factorial / stab};
    });
    for (auto& f : found)
      if (f) census.classes.push_back(std::move(*f));
  }
  return census;
}

}  // namespace belyi
