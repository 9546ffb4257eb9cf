#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace fecount {

/// Z/m_1 x ... x Z/m_s, a model of a finite Picard group. The factors need
/// not be in invariant-factor form. The trivial group is (1).
class FiniteAbelianGroup {
 public:
  /// Throws std::invalid_argument on an empty list or a zero order, and
  /// std::overflow_error if the order does not fit in 64 bits.
  explicit FiniteAbelianGroup(std::vector<std::uint64_t> cyclic_orders);

  static FiniteAbelianGroup cyclic(std::uint64_t m) { return FiniteAbelianGroup({m}); }
  static FiniteAbelianGroup trivial() { return cyclic(1); }

  const std::vector<std::uint64_t>& cyclic_orders() const noexcept { return orders_; }
  std::uint64_t order() const noexcept { return order_; }
  bool is_trivial() const noexcept { return order_ == 1; }

  /// "Z/2", "Z/2xZ/3".
  std::string to_string() const;

  friend bool operator==(const FiniteAbelianGroup&, const FiniteAbelianGroup&) = default;

 private:
  std::vector<std::uint64_t> orders_;
  std::uint64_t order_ = 1;
};

/// Element of a FiniteAbelianGroup as a residue vector, written additively.
class GroupElement {
 public:
  /// Residues are reduced modulo their cyclic orders. Throws GroupMismatch
  /// if the length does not match the group.
  GroupElement(FiniteAbelianGroup group, std::vector<std::uint64_t> residues);

  static GroupElement identity(const FiniteAbelianGroup& group);

  const FiniteAbelianGroup& group() const noexcept { return group_; }
  const std::vector<std::uint64_t>& residues() const noexcept { return residues_; }
  bool is_identity() const noexcept;

  /// "1", "1,2".
  std::string to_string() const;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;

 private:
  FiniteAbelianGroup group_;
  std::vector<std::uint64_t> residues_;
};

/// Every element of `group`, in odometer order (last residue fastest).
std::vector<GroupElement> all_elements(const FiniteAbelianGroup& group);

GroupElement group_add(const GroupElement& a, const GroupElement& b);
/// c-fold sum of `a`; the identity for c == 0.
GroupElement group_scale(std::uint64_t c, const GroupElement& a);
GroupElement group_negate(const GroupElement& a);

/// Isomorphism class of a finitely generated projective module over a
/// Dedekind domain: either Zero or (rank >= 1, determinant).
///
/// There is no (0, det) state, so a rank-0 class always has trivial
/// determinant.
class ModuleClass {
 public:
  static ModuleClass zero() { return ModuleClass(); }
  /// Throws std::invalid_argument for rank 0.
  static ModuleClass make(std::uint64_t rank, GroupElement det);
  /// R^n: Zero for n == 0, otherwise (n, identity).
  static ModuleClass free_module(std::uint64_t n, const FiniteAbelianGroup& group);

  bool is_zero() const noexcept { return !det_.has_value(); }
  std::uint64_t rank() const noexcept { return rank_; }
  /// Requires !is_zero().
  const GroupElement& det() const;
  bool is_free() const noexcept { return is_zero() || det_->is_identity(); }

  /// "0" or "(rank;residues)", e.g. "(2;1)".
  std::string to_string() const;

  friend bool operator==(const ModuleClass&, const ModuleClass&) = default;

 private:
  ModuleClass() = default;
  std::uint64_t rank_ = 0;
  std::optional<GroupElement> det_;
};

/// P ⊕ Q: ranks add, determinants multiply. Throws GroupMismatch when two
/// nonzero operands live over different Picard groups.
ModuleClass direct_sum(const ModuleClass& p, const ModuleClass& q);
std::uint64_t rank_of(const ModuleClass& p) noexcept;

/// Picard data of a Dedekind domain: a finite group, or infinite.
struct PicardSpec {
  std::optional<FiniteAbelianGroup> group;

  static PicardSpec finite(FiniteAbelianGroup g) { return PicardSpec{std::move(g)}; }
  static PicardSpec infinite() { return PicardSpec{}; }
  bool is_infinite() const noexcept { return !group.has_value(); }

  friend bool operator==(const PicardSpec&, const PicardSpec&) = default;
};

/// Abstract description of a commutative ring, by what its projective
/// modules look like.
class RingSpec {
 public:
  enum class Kind { ProjectivelyTrivial, Product, Dedekind };

  static RingSpec projectively_trivial() { return RingSpec(Kind::ProjectivelyTrivial); }
  static RingSpec dedekind(PicardSpec pic);
  /// Nested products are flattened. Throws std::invalid_argument when empty.
  static RingSpec product(std::vector<RingSpec> factors);
  /// Z/l as the product of one local (projectively trivial) factor per
  /// distinct prime of l. Requires l >= 2.
  static RingSpec modular_integers(std::uint64_t l);

  Kind kind() const noexcept { return kind_; }
  /// Product only.
  const std::vector<RingSpec>& factors() const noexcept { return factors_; }
  /// Dedekind only.
  const PicardSpec& picard() const;

  /// Canonical ring syntax, parseable by parse_ring_spec.
  std::string to_string() const;

  friend bool operator==(const RingSpec&, const RingSpec&) = default;

 private:
  explicit RingSpec(Kind k) : kind_(k) {}
  Kind kind_;
  std::vector<RingSpec> factors_;
  PicardSpec pic_;
};

// Text syntax used by the CLI.
//   group:    "2", "2x3", "Z/2xZ/3"
//   residues: "1", "1,2"
//   ring:     "trivial" | "zmod(12)" | "dedekind(2x2)" | "dedekind(inf)"
//             | "product(trivial,dedekind(3))"
// All throw std::invalid_argument on malformed input.
FiniteAbelianGroup parse_group(const std::string& text);
GroupElement parse_element(const std::string& text, const FiniteAbelianGroup& group);
RingSpec parse_ring_spec(const std::string& text);

}  // namespace fecount
