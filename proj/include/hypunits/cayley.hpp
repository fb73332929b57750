#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hypunits {

using Elem = std::uint16_t;

enum class TableKind { Semigroup, Loop };

const char* to_string(TableKind kind);

constexpr std::size_t kMaxOrder = 256;

// Finite magma given by its multiplication table. Elements are 0-based
// internally; the text and JSON formats use 1-based indices.
class CayleyTable {
 public:
  CayleyTable() = default;
  // Builds without validating the algebraic laws; only entry ranges are checked.
  CayleyTable(std::size_t order, std::vector<Elem> entries, TableKind kind,
              std::vector<std::string> names = {});

  std::size_t order() const noexcept { return n_; }
  TableKind kind() const noexcept { return kind_; }
  Elem operator()(std::size_t x, std::size_t y) const { return entries_[x * n_ + y]; }
  std::span<const Elem> row(std::size_t x) const {
    return {entries_.data() + x * n_, n_};
  }
  const std::vector<Elem>& entries() const noexcept { return entries_; }

  bool has_names() const noexcept { return !names_.empty(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  // Label used in reports: the stored name, or the 1-based index.
  std::string label(std::size_t x) const;

  std::optional<Elem> zero() const noexcept { return zero_; }
  std::optional<Elem> identity() const noexcept { return identity_; }

  bool is_idempotent(std::size_t x) const { return (*this)(x, x) == x; }
  bool is_commutative() const;

  // First triple (x, y, z) with (xy)z != x(yz), scanning lexicographically.
  std::optional<std::array<Elem, 3>> associativity_witness() const;

  friend bool operator==(const CayleyTable& a, const CayleyTable& b) {
    return a.n_ == b.n_ && a.entries_ == b.entries_;
  }

 private:
  void detect_special();

  std::size_t n_ = 0;
  std::vector<Elem> entries_;
  TableKind kind_ = TableKind::Semigroup;
  std::vector<std::string> names_;
  std::optional<Elem> zero_;
  std::optional<Elem> identity_;
};

// Parses the `.cay` text format or the JSON document format (auto-detected by
// the first non-space character) and validates it for the expected kind.
CayleyTable parse_and_validate(std::string_view raw, TableKind expected_kind);
CayleyTable parse_and_validate(std::string_view raw);  // kind from the header
CayleyTable validate(CayleyTable t, TableKind expected_kind);

std::string serialize_text(const CayleyTable& t);
std::string serialize_json(const CayleyTable& t);

// Transformations.
CayleyTable opposite(const CayleyTable& t);
CayleyTable adjoin_identity(const CayleyTable& t);  // new element is the last index
CayleyTable adjoin_zero(const CayleyTable& t);      // new element is the last index
CayleyTable restrict_to_subset(const CayleyTable& t, std::span<const Elem> subset);
CayleyTable relabel(const CayleyTable& t, std::span<const Elem> perm);  // x -> perm[x]
CayleyTable direct_product(const CayleyTable& a, const CayleyTable& b);

using Bijection = std::vector<Elem>;

// Lexicographically least isomorphism a -> b (anti-isomorphism is tried only
// when allow_anti and no isomorphism exists).
struct IsoResult {
  Bijection map;
  bool anti = false;
};
std::optional<IsoResult> isomorphism_test(const CayleyTable& a, const CayleyTable& b,
                                          bool allow_anti = false);

}  // namespace hypunits
