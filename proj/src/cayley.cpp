#include "hypunits/cayley.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "hypunits/error.hpp"

namespace hypunits {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedInput: return "MalformedInput";
    case ErrorCode::NotAssociative: return "NotAssociative";
    case ErrorCode::NotAQuasigroup: return "NotAQuasigroup";
    case ErrorCode::NoIdentity: return "NoIdentity";
    case ErrorCode::SubsetNotClosed: return "SubsetNotClosed";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::NotAGroup: return "NotAGroup";
    case ErrorCode::NotAFactor: return "NotAFactor";
    case ErrorCode::NonAssociativeUnsupported: return "NonAssociativeUnsupported";
    case ErrorCode::FactorizationOverflow: return "FactorizationOverflow";
    case ErrorCode::NotSimple: return "NotSimple";
    case ErrorCode::OrderCapExceeded: return "OrderCapExceeded";
    case ErrorCode::CapExceeded: return "CapExceeded";
  }
  return "Unknown";
}

const char* to_string(TableKind kind) {
  return kind == TableKind::Loop ? "loop" : "semigroup";
}

CayleyTable::CayleyTable(std::size_t order, std::vector<Elem> entries, TableKind kind,
                         std::vector<std::string> names)
    : n_(order), entries_(std::move(entries)), kind_(kind), names_(std::move(names)) {
  if (n_ == 0 || n_ > kMaxOrder) {
    throw Error(ErrorCode::MalformedInput,
                "order " + std::to_string(n_) + " outside [1, " + std::to_string(kMaxOrder) + "]");
  }
  if (entries_.size() != n_ * n_) {
    throw Error(ErrorCode::MalformedInput, "table has " + std::to_string(entries_.size()) +
                                               " entries, expected " + std::to_string(n_ * n_));
  }
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    if (entries_[k] >= n_) {
      throw Error(ErrorCode::MalformedInput,
                  "entry at row " + std::to_string(k / n_ + 1) + ", column " +
                      std::to_string(k % n_ + 1) + " is out of range");
    }
  }
  if (!names_.empty()) {
    if (names_.size() != n_) {
      throw Error(ErrorCode::MalformedInput, "expected " + std::to_string(n_) + " names");
    }
    auto sorted = names_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw Error(ErrorCode::MalformedInput, "element names are not distinct");
    }
  }
  detect_special();
}

void CayleyTable::detect_special() {
  zero_.reset();
  identity_.reset();
  for (std::size_t e = 0; e < n_ && !identity_; ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < n_ && ok; ++x) ok = (*this)(e, x) == x && (*this)(x, e) == x;
    if (ok) identity_ = static_cast<Elem>(e);
  }
  for (std::size_t z = 0; z < n_ && !zero_; ++z) {
    bool ok = true;
    for (std::size_t x = 0; x < n_ && ok; ++x) ok = (*this)(z, x) == z && (*this)(x, z) == z;
    if (ok) zero_ = static_cast<Elem>(z);
  }
  // A one-element table is both; report only the identity.
  if (n_ == 1) zero_.reset();
}

std::string CayleyTable::label(std::size_t x) const {
  return names_.empty() ? std::to_string(x + 1) : names_[x];
}

bool CayleyTable::is_commutative() const {
  for (std::size_t x = 0; x < n_; ++x)
    for (std::size_t y = x + 1; y < n_; ++y)
      if ((*this)(x, y) != (*this)(y, x)) return false;
  return true;
}

std::optional<std::array<Elem, 3>> CayleyTable::associativity_witness() const {
  for (std::size_t x = 0; x < n_; ++x)
    for (std::size_t y = 0; y < n_; ++y) {
      const auto xy = (*this)(x, y);
      for (std::size_t z = 0; z < n_; ++z)
        if ((*this)(xy, z) != (*this)(x, (*this)(y, z)))
          return std::array<Elem, 3>{static_cast<Elem>(x), static_cast<Elem>(y),
                                     static_cast<Elem>(z)};
    }
  return std::nullopt;
}

namespace {

TableKind parse_kind(const std::string& word) {
  if (word == "semigroup") return TableKind::Semigroup;
  if (word == "loop") return TableKind::Loop;
  throw Error(ErrorCode::MalformedInput, "unknown kind '" + word + "'");
}

std::size_t parse_index(const std::string& token, std::size_t n, std::size_t row) {
  if (token.empty() || !std::all_of(token.begin(), token.end(),
                                    [](unsigned char c) { return std::isdigit(c); })) {
    throw Error(ErrorCode::MalformedInput,
                "row " + std::to_string(row) + ": '" + token + "' is not an index");
  }
  if (token.size() > 6) throw Error(ErrorCode::MalformedInput, "index '" + token + "' too large");
  const auto v = static_cast<std::size_t>(std::stoul(token));
  if (v < 1 || v > n) {
    throw Error(ErrorCode::MalformedInput, "row " + std::to_string(row) + ": index " + token +
                                               " outside [1, " + std::to_string(n) + "]");
  }
  return v - 1;
}

std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

CayleyTable parse_text(std::string_view raw) {
  std::vector<std::string> lines;
  {
    std::istringstream in{std::string(raw)};
    for (std::string line; std::getline(in, line);) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (split_ws(line).empty()) continue;
      lines.push_back(line);
    }
  }
  if (lines.empty()) throw Error(ErrorCode::MalformedInput, "empty input");
  const auto header = split_ws(lines[0]);
  if (header.size() != 2) throw Error(ErrorCode::MalformedInput, "header must be '<kind> N'");
  const auto kind = parse_kind(header[0]);
  if (!std::all_of(header[1].begin(), header[1].end(),
                   [](unsigned char c) { return std::isdigit(c); }) ||
      header[1].size() > 4) {
    throw Error(ErrorCode::MalformedInput, "bad order '" + header[1] + "'");
  }
  const auto n = static_cast<std::size_t>(std::stoul(header[1]));
  if (n == 0 || n > kMaxOrder) {
    throw Error(ErrorCode::MalformedInput, "order " + header[1] + " outside [1, 256]");
  }
  if (lines.size() < n + 1) {
    throw Error(ErrorCode::MalformedInput, "expected " + std::to_string(n) + " table rows, got " +
                                               std::to_string(lines.size() - 1));
  }
  std::vector<Elem> entries;
  entries.reserve(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    const auto toks = split_ws(lines[r + 1]);
    if (toks.size() != n) {
      throw Error(ErrorCode::MalformedInput, "row " + std::to_string(r + 1) + " has " +
                                                 std::to_string(toks.size()) + " entries, expected " +
                                                 std::to_string(n));
    }
    for (const auto& tok : toks) entries.push_back(static_cast<Elem>(parse_index(tok, n, r + 1)));
  }
  std::vector<std::string> names;
  std::size_t next = n + 1;
  if (next < lines.size()) {
    auto toks = split_ws(lines[next]);
    if (toks.front() != "names:") {
      throw Error(ErrorCode::MalformedInput, "trailing garbage after table: '" + lines[next] + "'");
    }
    names.assign(toks.begin() + 1, toks.end());
    ++next;
  }
  if (next < lines.size()) {
    throw Error(ErrorCode::MalformedInput, "trailing garbage: '" + lines[next] + "'");
  }
  return CayleyTable(n, std::move(entries), kind, std::move(names));
}

CayleyTable parse_json(std::string_view raw) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(raw.begin(), raw.end());
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::MalformedInput, e.what());
  }
  try {
    if (!doc.is_object()) throw Error(ErrorCode::MalformedInput, "document must be an object");
    for (const auto& [key, _] : doc.items()) {
      if (key != "kind" && key != "order" && key != "table" && key != "names") {
        throw Error(ErrorCode::MalformedInput, "unexpected field '" + key + "'");
      }
    }
    const auto kind = parse_kind(doc.at("kind").get<std::string>());
    const auto order = doc.at("order").get<std::int64_t>();
    if (order < 1 || order > static_cast<std::int64_t>(kMaxOrder)) {
      throw Error(ErrorCode::MalformedInput, "order outside [1, 256]");
    }
    const auto n = static_cast<std::size_t>(order);
    const auto& rows = doc.at("table");
    if (!rows.is_array() || rows.size() != n) {
      throw Error(ErrorCode::MalformedInput, "table must have " + std::to_string(n) + " rows");
    }
    std::vector<Elem> entries;
    for (std::size_t r = 0; r < n; ++r) {
      if (!rows[r].is_array() || rows[r].size() != n) {
        throw Error(ErrorCode::MalformedInput, "row " + std::to_string(r + 1) + " malformed");
      }
      for (const auto& v : rows[r]) {
        const auto x = v.get<std::int64_t>();
        if (x < 1 || x > order) {
          throw Error(ErrorCode::MalformedInput, "row " + std::to_string(r + 1) + ": index " +
                                                     std::to_string(x) + " out of range");
        }
        entries.push_back(static_cast<Elem>(x - 1));
      }
    }
    std::vector<std::string> names;
    if (doc.contains("names")) names = doc.at("names").get<std::vector<std::string>>();
    return CayleyTable(n, std::move(entries), kind, std::move(names));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::MalformedInput, e.what());
  }
}

std::string triple_text(const CayleyTable& t, const std::array<Elem, 3>& w) {
  return "(" + t.label(w[0]) + ", " + t.label(w[1]) + ", " + t.label(w[2]) + ")";
}

}  // namespace

CayleyTable validate(CayleyTable t, TableKind expected_kind) {
  const auto n = t.order();
  if (expected_kind == TableKind::Semigroup) {
    if (auto w = t.associativity_witness()) {
      throw Error(ErrorCode::NotAssociative, "witness " + triple_text(t, *w));
    }
  } else {
    for (std::size_t x = 0; x < n; ++x) {
      std::vector<bool> row_seen(n), col_seen(n);
      for (std::size_t y = 0; y < n; ++y) {
        if (row_seen[t(x, y)]) {
          throw Error(ErrorCode::NotAQuasigroup, "row " + t.label(x) + " repeats an entry");
        }
        if (col_seen[t(y, x)]) {
          throw Error(ErrorCode::NotAQuasigroup, "column " + t.label(x) + " repeats an entry");
        }
        row_seen[t(x, y)] = col_seen[t(y, x)] = true;
      }
    }
    if (!t.identity()) throw Error(ErrorCode::NoIdentity, "no two-sided identity");
  }
  return CayleyTable(n, t.entries(), expected_kind, t.names());
}

CayleyTable parse_and_validate(std::string_view raw, TableKind expected_kind) {
  return validate(parse_and_validate(raw), expected_kind);
}

CayleyTable parse_and_validate(std::string_view raw) {
  const auto first = std::find_if(raw.begin(), raw.end(),
                                  [](unsigned char c) { return !std::isspace(c); });
  auto t = (first != raw.end() && *first == '{') ? parse_json(raw) : parse_text(raw);
  const auto kind = t.kind();
  return validate(std::move(t), kind);
}

std::string serialize_text(const CayleyTable& t) {
  std::ostringstream out;
  out << to_string(t.kind()) << ' ' << t.order() << '\n';
  for (std::size_t x = 0; x < t.order(); ++x) {
    for (std::size_t y = 0; y < t.order(); ++y) out << (y ? " " : "") << t(x, y) + 1;
    out << '\n';
  }
  if (t.has_names()) {
    out << "names:";
    for (const auto& name : t.names()) out << ' ' << name;
    out << '\n';
  }
  return out.str();
}

std::string serialize_json(const CayleyTable& t) {
  nlohmann::ordered_json doc;
  doc["kind"] = to_string(t.kind());
  doc["order"] = t.order();
  auto rows = nlohmann::ordered_json::array();
  for (std::size_t x = 0; x < t.order(); ++x) {
    auto row = nlohmann::ordered_json::array();
    for (std::size_t y = 0; y < t.order(); ++y) row.push_back(t(x, y) + 1);
    rows.push_back(std::move(row));
  }
  doc["table"] = std::move(rows);
  if (t.has_names()) doc["names"] = t.names();
  return doc.dump();
}

CayleyTable opposite(const CayleyTable& t) {
  const auto n = t.order();
  std::vector<Elem> entries(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) entries[x * n + y] = t(y, x);
  return CayleyTable(n, std::move(entries), t.kind(), t.names());
}

namespace {

CayleyTable adjoin(const CayleyTable& t, bool identity) {
  const auto n = t.order();
  const auto m = n + 1;
  const auto fresh = static_cast<Elem>(n);
  std::vector<Elem> entries(m * m);
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y) {
      Elem v;
      if (x < n && y < n) v = t(x, y);
      else if (identity) v = x == n ? static_cast<Elem>(y) : static_cast<Elem>(x);
      else v = fresh;
      entries[x * m + y] = v;
    }
  std::vector<std::string> names;
  if (t.has_names()) {
    names = t.names();
    std::string label = identity ? "1" : "0";
    while (std::find(names.begin(), names.end(), label) != names.end()) label += "'";
    names.push_back(label);
  }
  return CayleyTable(m, std::move(entries), t.kind(), std::move(names));
}

}  // namespace

CayleyTable adjoin_identity(const CayleyTable& t) { return adjoin(t, true); }
CayleyTable adjoin_zero(const CayleyTable& t) { return adjoin(t, false); }

CayleyTable restrict_to_subset(const CayleyTable& t, std::span<const Elem> subset) {
  std::vector<Elem> elems(subset.begin(), subset.end());
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  if (elems.empty()) throw Error(ErrorCode::MalformedInput, "empty subset");
  std::vector<int> pos(t.order(), -1);
  for (std::size_t k = 0; k < elems.size(); ++k) {
    if (elems[k] >= t.order()) throw Error(ErrorCode::MalformedInput, "subset index out of range");
    pos[elems[k]] = static_cast<int>(k);
  }
  const auto m = elems.size();
  std::vector<Elem> entries(m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      const auto p = t(elems[a], elems[b]);
      if (pos[p] < 0) {
        throw Error(ErrorCode::SubsetNotClosed, t.label(elems[a]) + " * " + t.label(elems[b]) +
                                                    " = " + t.label(p) + " leaves the subset");
      }
      entries[a * m + b] = static_cast<Elem>(pos[p]);
    }
  std::vector<std::string> names;
  if (t.has_names())
    for (auto e : elems) names.push_back(t.names()[e]);
  return CayleyTable(m, std::move(entries), t.kind(), std::move(names));
}

CayleyTable relabel(const CayleyTable& t, std::span<const Elem> perm) {
  const auto n = t.order();
  if (perm.size() != n) throw Error(ErrorCode::MalformedInput, "permutation size mismatch");
  std::vector<Elem> entries(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) entries[perm[x] * n + perm[y]] = perm[t(x, y)];
  std::vector<std::string> names;
  if (t.has_names()) {
    names.resize(n);
    for (std::size_t x = 0; x < n; ++x) names[perm[x]] = t.names()[x];
  }
  return CayleyTable(n, std::move(entries), t.kind(), std::move(names));
}

CayleyTable direct_product(const CayleyTable& a, const CayleyTable& b) {
  const auto na = a.order(), nb = b.order(), n = na * nb;
  if (n > kMaxOrder) throw Error(ErrorCode::MalformedInput, "product order exceeds 256");
  std::vector<Elem> entries(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      entries[x * n + y] =
          static_cast<Elem>(a(x / nb, y / nb) * nb + b(x % nb, y % nb));
  std::vector<std::string> names;
  if (a.has_names() && b.has_names())
    for (std::size_t x = 0; x < n; ++x)
      names.push_back("(" + a.names()[x / nb] + "," + b.names()[x % nb] + ")");
  const auto kind = a.kind() == TableKind::Loop || b.kind() == TableKind::Loop
                        ? TableKind::Loop
                        : TableKind::Semigroup;
  return CayleyTable(n, std::move(entries), kind, std::move(names));
}

namespace {

// Isomorphism-invariant signature: index and period of the left-power
// sequence x, x*x, (x*x)*x, ..., plus idempotency and row/column image sizes.
std::vector<std::array<std::size_t, 5>> element_profiles(const CayleyTable& t) {
  const auto n = t.order();
  std::vector<std::array<std::size_t, 5>> prof(n);
  for (std::size_t x = 0; x < n; ++x) {
    std::vector<int> seen(n, -1);
    std::size_t cur = x, k = 0;
    while (seen[cur] < 0) {
      seen[cur] = static_cast<int>(k++);
      cur = t(cur, x);
    }
    const auto index = static_cast<std::size_t>(seen[cur]);
    const auto period = k - index;
    std::vector<bool> r(n), c(n);
    std::size_t rs = 0, cs = 0;
    for (std::size_t y = 0; y < n; ++y) {
      if (!r[t(x, y)]) r[t(x, y)] = true, ++rs;
      if (!c[t(y, x)]) c[t(y, x)] = true, ++cs;
    }
    prof[x] = {index, period, t.is_idempotent(x) ? 1u : 0u, rs, cs};
  }
  return prof;
}

struct IsoSearch {
  const CayleyTable& a;
  const CayleyTable& b;
  std::vector<std::array<std::size_t, 5>> pa, pb;
  std::vector<int> fwd, bwd;

  // Checks every assigned pair touching x, including pairs whose product is x.
  bool consistent(std::size_t x) const {
    const auto n = a.order();
    for (std::size_t u = 0; u < n; ++u) {
      if (fwd[u] < 0) continue;
      for (std::size_t v = 0; v < n; ++v) {
        if (fwd[v] < 0) continue;
        const auto p = a(u, v);
        if (u != x && v != x && p != x) continue;
        const auto img = b(fwd[u], fwd[v]);
        if (fwd[p] >= 0) {
          if (fwd[p] != static_cast<int>(img)) return false;
        } else if (bwd[img] >= 0) {
          return false;
        }
      }
    }
    return true;
  }

  bool extend(std::size_t x) {
    const auto n = a.order();
    if (x == n) return true;
    for (std::size_t c = 0; c < n; ++c) {
      if (bwd[c] >= 0 || pa[x] != pb[c]) continue;
      fwd[x] = static_cast<int>(c);
      bwd[c] = static_cast<int>(x);
      if (consistent(x) && extend(x + 1)) return true;
      fwd[x] = bwd[c] = -1;
    }
    return false;
  }
};

std::optional<Bijection> find_iso(const CayleyTable& a, const CayleyTable& b) {
  if (a.order() != b.order()) return std::nullopt;
  IsoSearch s{a, b, element_profiles(a), element_profiles(b),
              std::vector<int>(a.order(), -1), std::vector<int>(a.order(), -1)};
  auto sa = s.pa, sb = s.pb;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return std::nullopt;
  if (!s.extend(0)) return std::nullopt;
  Bijection map(a.order());
  for (std::size_t x = 0; x < a.order(); ++x) map[x] = static_cast<Elem>(s.fwd[x]);
  return map;
}

}  // namespace

std::optional<IsoResult> isomorphism_test(const CayleyTable& a, const CayleyTable& b,
                                          bool allow_anti) {
  if (auto m = find_iso(a, b)) return IsoResult{std::move(*m), false};
  if (allow_anti) {
    if (auto m = find_iso(a, opposite(b))) return IsoResult{std::move(*m), true};
  }
  return std::nullopt;
}

}  // namespace hypunits
