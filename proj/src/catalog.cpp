#include "hypunits/catalog.hpp"

#include <algorithm>
#include <map>

#include "hypunits/error.hpp"

namespace hypunits {

const char* to_string(Family f) {
  switch (f) {
    case Family::Group: return "group";
    case Family::Semigroup: return "semigroup";
    case Family::Loop: return "loop";
  }
  return "?";
}

namespace {

std::string power_name(const std::string& g, std::size_t k) {
  if (k == 0) return "1";
  if (k == 1) return g;
  return g + std::to_string(k);
}

CayleyTable from_function(std::size_t n, TableKind kind, std::vector<std::string> names,
                          auto&& mul) {
  std::vector<Elem> entries(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) entries[x * n + y] = static_cast<Elem>(mul(x, y));
  return CayleyTable(n, std::move(entries), kind, std::move(names));
}

// Elements a^i b^j encoded as i + mod_a * j.
CayleyTable two_generator_group(std::size_t mod_a, std::size_t mod_b, auto&& mul) {
  const auto n = mod_a * mod_b;
  std::vector<std::string> names;
  for (std::size_t j = 0; j < mod_b; ++j)
    for (std::size_t i = 0; i < mod_a; ++i) {
      std::string s;
      if (i) s += power_name("a", i);
      if (j) s += power_name("b", j);
      names.push_back(s.empty() ? "1" : s);
    }
  return from_function(n, TableKind::Semigroup, std::move(names), [&](std::size_t x, std::size_t y) {
    const auto [i, j] = mul(x % mod_a, x / mod_a, y % mod_a, y / mod_a);
    return i + mod_a * j;
  });
}

std::size_t mod(long long v, std::size_t m) {
  const auto mm = static_cast<long long>(m);
  return static_cast<std::size_t>(((v % mm) + mm) % mm);
}

}  // namespace

CayleyTable cyclic_group(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t k = 0; k < n; ++k) names.push_back(power_name("g", k));
  return from_function(n, TableKind::Semigroup, std::move(names),
                       [n](std::size_t x, std::size_t y) { return (x + y) % n; });
}

CayleyTable dihedral_group(std::size_t n) {
  // b a = a^-1 b, b^2 = 1
  return two_generator_group(n, 2, [n](std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
    const long long ak = j ? -static_cast<long long>(k) : static_cast<long long>(k);
    return std::pair{mod(static_cast<long long>(i) + ak, n), (j + l) % 2};
  });
}

CayleyTable dicyclic_group(std::size_t m) {
  const auto n = 2 * m;
  // b a = a^-1 b, b^2 = a^m
  return two_generator_group(n, 2, [n, m](std::size_t i, std::size_t j, std::size_t k,
                                          std::size_t l) {
    const long long ak = j ? -static_cast<long long>(k) : static_cast<long long>(k);
    long long e = static_cast<long long>(i) + ak;
    if (j && l) e += static_cast<long long>(m);
    return std::pair{mod(e, n), (j + l) % 2};
  });
}

CayleyTable metacyclic_c4_c4() {
  // b a = a^-1 b, a^4 = b^4 = 1
  return two_generator_group(4, 4, [](std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
    const long long ak = (j % 2) ? -static_cast<long long>(k) : static_cast<long long>(k);
    return std::pair{mod(static_cast<long long>(i) + ak, 4), (j + l) % 4};
  });
}

namespace {

// M(G, *, g0): g.h = gh, g.(hu) = (hg)u, (gu).h = (g h*)u, (gu).(hu) = g0 h* g
CayleyTable doubled_loop(const CayleyTable& g, const std::vector<Elem>& star, Elem g0) {
  const auto n = g.order();
  std::vector<std::string> names;
  for (std::size_t x = 0; x < n; ++x) names.push_back(g.label(x));
  for (std::size_t x = 0; x < n; ++x) names.push_back(g.label(x) == "1" ? "u" : g.label(x) + "u");
  return from_function(2 * n, TableKind::Loop, std::move(names), [&](std::size_t x, std::size_t y) {
    const auto gx = x % n, hy = y % n;
    const bool ux = x >= n, uy = y >= n;
    if (!ux && !uy) return std::size_t{g(gx, hy)};
    if (!ux && uy) return n + g(hy, gx);
    if (ux && !uy) return n + g(gx, star[hy]);
    return std::size_t{g(g0, g(star[hy], gx))};
  });
}

}  // namespace

CayleyTable chein_loop(const CayleyTable& g) {
  const auto n = g.order();
  const auto e = *g.identity();
  std::vector<Elem> inv(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (g(x, y) == e) inv[x] = static_cast<Elem>(y);
  return doubled_loop(g, inv, e);
}

CayleyTable ra_loop(const CayleyTable& g, bool u_squared_commutator) {
  const auto n = g.order();
  const auto e = *g.identity();
  std::vector<bool> central(n, true);
  std::optional<Elem> s;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (g(x, y) != g(y, x)) {
        central[x] = false;
        // s = x^-1 y^-1 x y, recovered as the element with (yx) s = xy
        for (std::size_t c = 0; c < n; ++c)
          if (g(g(y, x), c) == g(x, y)) s = static_cast<Elem>(c);
      }
  if (!s) throw Error(ErrorCode::NotAGroup, "RA loop construction needs a nonabelian group");
  std::vector<Elem> star(n);
  for (std::size_t x = 0; x < n; ++x) star[x] = central[x] ? static_cast<Elem>(x) : g(*s, x);
  return doubled_loop(g, star, u_squared_commutator ? *s : e);
}

CayleyTable rees_matrix_semigroup(const CayleyTable& group, std::size_t rows, std::size_t cols,
                                  const std::vector<std::vector<int>>& sandwich) {
  const auto gn = group.order();
  const auto n = rows * gn * cols + 1;
  const auto zero = n - 1;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t g = 0; g < gn; ++g)
      for (std::size_t l = 0; l < cols; ++l) {
        std::string s = "(" + std::to_string(i + 1) + ",";
        if (gn > 1) s += group.label(g) + ",";
        names.push_back(s + std::to_string(l + 1) + ")");
      }
  names.push_back("0");
  return from_function(n, TableKind::Semigroup, std::move(names), [&](std::size_t x, std::size_t y) {
    if (x == zero || y == zero) return zero;
    const auto i = x / (gn * cols), g = (x / cols) % gn, l = x % cols;
    const auto j = y / (gn * cols), h = (y / cols) % gn, m = y % cols;
    const int p = sandwich[l][j];
    if (p < 0) return zero;
    const auto prod = group(group(g, static_cast<std::size_t>(p)), h);
    return (i * gn + prod) * cols + m;
  });
}

CayleyTable chain_join(const CayleyTable& top, const CayleyTable& bottom) {
  const auto nt = top.order(), nb = bottom.order(), n = nt + nb;
  std::vector<std::string> names;
  for (std::size_t x = 0; x < nt; ++x) names.push_back("t:" + top.label(x));
  for (std::size_t x = 0; x < nb; ++x) names.push_back("b:" + bottom.label(x));
  return from_function(n, TableKind::Semigroup, std::move(names), [&](std::size_t x, std::size_t y) {
    if (x < nt && y < nt) return std::size_t{top(x, y)};
    if (x >= nt && y >= nt) return nt + bottom(x - nt, y - nt);
    return x >= nt ? x : y;
  });
}

namespace {

CayleyTable named(std::size_t n, std::vector<std::vector<int>> rows1,
                  std::vector<std::string> names) {
  std::vector<Elem> entries;
  for (const auto& r : rows1)
    for (int v : r) entries.push_back(static_cast<Elem>(v - 1));
  return CayleyTable(n, std::move(entries), TableKind::Semigroup, std::move(names));
}

std::vector<NamedCatalogEntry> build_catalog() {
  std::vector<NamedCatalogEntry> out;
  const auto add = [&](std::string name, CayleyTable t, Family f, std::string desc) {
    out.push_back({std::move(name), std::move(t), f, std::move(desc)});
  };
  for (std::size_t n = 1; n <= 16; ++n)
    add("C" + std::to_string(n), cyclic_group(n), Family::Group, "cyclic group of order " + std::to_string(n));
  add("C2xC2", direct_product(cyclic_group(2), cyclic_group(2)), Family::Group, "Klein four-group");
  add("S3", dihedral_group(3), Family::Group, "symmetric group of degree 3");
  add("D4", dihedral_group(4), Family::Group, "dihedral group of order 8");
  add("Q8", dicyclic_group(2), Family::Group, "quaternion group");
  add("Q12", dicyclic_group(3), Family::Group, "dicyclic group of order 12");
  add("C4:C4", metacyclic_c4_c4(), Family::Group, "C4 acting on C4 by inversion");
  add("Q8xC2", direct_product(dicyclic_group(2), cyclic_group(2)), Family::Group,
      "hamiltonian group of order 16");
  const auto trivial = cyclic_group(1);
  const auto m = rees_matrix_semigroup(trivial, 2, 2, {{0, -1}, {-1, 0}});
  const auto m12 = rees_matrix_semigroup(trivial, 2, 2, {{0, 0}, {-1, 0}});
  add("M", m, Family::Semigroup, "Rees matrix semigroup M({1};2,2;Id)");
  add("M12", m12, Family::Semigroup, "Rees matrix semigroup M({1};2,2;[[1,1],[0,1]])");
  add("N2", named(2, {{1, 1}, {1, 1}}, {"0", "j0"}), Family::Semigroup,
      "null semigroup {0, j0}");
  // Order e1, eN, j0, 0.
  add("T2", named(4, {{1, 4, 3, 4}, {4, 2, 4, 4}, {4, 3, 4, 4}, {4, 4, 4, 4}},
                  {"e1", "eN", "j0", "0"}),
      Family::Semigroup, "e1*eN = eN*e1 = 0, e1*j0 = j0*eN = j0");
  // Order e1, eN, e3, j0, 0.
  add("T2prime", named(5, {{1, 3, 3, 4, 5}, {3, 2, 3, 5, 5}, {3, 3, 3, 5, 5},
                           {5, 4, 5, 5, 5}, {5, 5, 5, 5, 5}},
                       {"e1", "eN", "e3", "j0", "0"}),
      Family::Semigroup, "e1*eN = eN*e1 = e3, e1*j0 = j0*eN = j0");
  add("T2hat", named(4, {{1, 3, 3, 4}, {4, 2, 4, 4}, {4, 3, 4, 4}, {4, 4, 4, 4}},
                     {"e1", "eN", "j0", "0"}),
      Family::Semigroup, "e1*eN = j0, eN*e1 = 0");
  add("LZ2", named(2, {{1, 1}, {2, 2}}, {"x", "y"}), Family::Semigroup, "left-zero band");
  const auto q8 = dicyclic_group(2);
  const auto cayley_loop = ra_loop(q8, true);
  add("M(Q8,2)", cayley_loop, Family::Loop, "Cayley loop M(Q8,*,s) of octonion units, hamiltonian Moufang 2-loop");
  add("M(Q8,*,1)", ra_loop(q8, false), Family::Loop, "RA loop M(Q8,*,1), u of order 2");
  add("M(D4,2)", ra_loop(dihedral_group(4), false), Family::Loop, "RA loop M(D4,*,1)");
  add("Chein(D4)", chein_loop(dihedral_group(4)), Family::Loop,
      "Moufang loop M(D4,2) with the inverse involution; loop algebra not alternative");
  {
    auto c3 = cyclic_group(3);
    add("M(Q8,2)xC3", direct_product(cayley_loop, c3), Family::Loop, "M(Q8,2) times C3");
  }
  const auto c2 = cyclic_group(2);
  add("C5>C8", chain_join(cyclic_group(5), cyclic_group(8)), Family::Semigroup,
      "chain semilattice C5 > C8, trivial linking");
  add("C2>S3", chain_join(c2, dihedral_group(3)), Family::Semigroup, "C2 over the ideal S3");
  add("C2>D4", chain_join(c2, dihedral_group(4)), Family::Semigroup, "C2 over the ideal D4");
  add("C2>Q12", chain_join(c2, dicyclic_group(3)), Family::Semigroup, "C2 over the ideal Q12");
  add("C2>C4:C4", chain_join(c2, metacyclic_c4_c4()), Family::Semigroup, "C2 over the ideal C4:C4");
  add("C2>M", chain_join(c2, m), Family::Semigroup, "C2 over the ideal M");
  add("C2>M12", chain_join(c2, m12), Family::Semigroup, "C2 over the ideal M12");
  for (auto& e : out) {
    const auto kind = e.family == Family::Loop ? TableKind::Loop : TableKind::Semigroup;
    e.table = validate(std::move(e.table), kind);
  }
  return out;
}

}  // namespace

const std::vector<NamedCatalogEntry>& catalog_entries() {
  static const std::vector<NamedCatalogEntry> entries = build_catalog();
  return entries;
}

const NamedCatalogEntry& catalog(const std::string& name) {
  static const std::map<std::string, std::string> aliases = {
      {"T2'", "T2prime"}, {"T2hat", "T2hat"}, {"C4xC4", "C4:C4"}, {"null", "N2"},
      {"C4⋊C4", "C4:C4"}, {"T̂2", "T2hat"}};
  std::string key = name;
  if (auto it = aliases.find(name); it != aliases.end()) key = it->second;
  const auto& entries = catalog_entries();
  const auto it = std::find_if(entries.begin(), entries.end(),
                               [&](const auto& e) { return e.name == key; });
  if (it == entries.end()) throw Error(ErrorCode::UnknownName, "no catalog entry '" + name + "'");
  return *it;
}

std::vector<std::string> catalog_names() {
  std::vector<std::string> names;
  for (const auto& e : catalog_entries()) names.push_back(e.name);
  return names;
}

}  // namespace hypunits
