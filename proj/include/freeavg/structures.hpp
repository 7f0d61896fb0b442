#pragma once

// Concrete averaging groups: finite groups given by Cayley tables, operators
// on them, and exhaustive checks of the structures an averaging operator
// induces (disemigroup, dimonoid, rack, pointed-operator identities).

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace freeavg {

/// Raw Cayley table, as read from a file: mul[a][b] is the index of a·b.
struct GroupTable {
    std::vector<std::string> elements;
    std::vector<std::vector<std::size_t>> mul;
};

/// A failed law together with the element indices that witness it.
struct Violation {
    std::string law;
    std::vector<std::size_t> witness;
};

/// Renders "law at (a, b, c)" using element names.
std::string describe(const Violation& v, const std::vector<std::string>& names);

class MalformedTable : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Exhaustive checks refuse carriers above their cap unless it is raised.
class CarrierTooLarge : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kPairwiseCheckCap = 24;
inline constexpr std::size_t kOperatorSearchCap = 6;

/// Raised when a constructor's hypotheses fail; carries the witness.
class StructureError : public std::runtime_error {
public:
    StructureError(const std::string& what, std::optional<Violation> violation = std::nullopt)
        : std::runtime_error(what), violation_(std::move(violation)) {}
    const std::optional<Violation>& violation() const { return violation_; }

private:
    std::optional<Violation> violation_;
};

/// Exhaustively checks closure, associativity, identity and inverses.
/// Throws MalformedTable for a non-square table or mismatched names.
std::optional<Violation> validate_group(const GroupTable& table, std::size_t max_order = kPairwiseCheckCap);

/// A validated finite group. Identity and inverses are inferred.
class FiniteGroup {
public:
    /// Throws StructureError if the table is not a group.
    explicit FiniteGroup(GroupTable table, std::size_t max_order = kPairwiseCheckCap);

    std::size_t size() const { return table_.elements.size(); }
    std::size_t mul(std::size_t a, std::size_t b) const { return table_.mul[a][b]; }
    std::size_t inv(std::size_t a) const { return inverse_[a]; }
    std::size_t identity() const { return identity_; }
    const std::string& name(std::size_t a) const { return table_.elements[a]; }
    const std::vector<std::string>& names() const { return table_.elements; }
    const GroupTable& table() const { return table_; }
    /// Throws std::out_of_range for an unknown name.
    std::size_t index_of(const std::string& name) const;

    bool is_central(std::size_t z) const;
    bool is_abelian() const;

private:
    GroupTable table_;
    std::size_t identity_ = 0;
    std::vector<std::size_t> inverse_;
};

FiniteGroup cyclic_group(std::size_t n);
/// ℤ₂ × ℤ₂ with elements e, a, b, c.
FiniteGroup klein_four_group();
/// S₃ as permutations of {1,2,3}, composed right to left; elements named
/// e, (12), (13), (23), (123), (132).
FiniteGroup symmetric_group_3();

/// A map on the carrier, by element index.
using OperatorTable = std::vector<std::size_t>;

OperatorTable identity_operator(const FiniteGroup& g);
OperatorTable constant_operator(const FiniteGroup& g, std::size_t value);
/// S₃ → {e, (12)} by sign: even ↦ e, odd ↦ (12).
OperatorTable sign_retraction(const FiniteGroup& s3);

/// "(e->e, a->b, ...)" using element names.
std::string describe_operator(const FiniteGroup& g, const OperatorTable& op);

/// Checks A(g)A(h) = A(A(g)h) = A(gA(h)) on all pairs.
std::optional<Violation> validate_averaging(const FiniteGroup& g, const OperatorTable& op,
                                            std::size_t max_order = kPairwiseCheckCap);

/// A finite group with a validated averaging operator.
class FiniteAveragingGroup {
public:
    using element_type = std::size_t;

    /// Throws StructureError with the first failing pair.
    FiniteAveragingGroup(FiniteGroup group, OperatorTable op);

    const FiniteGroup& group() const { return group_; }
    const OperatorTable& op() const { return op_; }
    bool is_pointed() const { return op_[group_.identity()] == group_.identity(); }

    std::size_t identity() const { return group_.identity(); }
    std::size_t multiply(std::size_t a, std::size_t b) const { return group_.mul(a, b); }
    std::size_t inverse(std::size_t a) const { return group_.inv(a); }
    std::size_t apply(std::size_t a) const { return op_[a]; }

private:
    FiniteGroup group_;
    OperatorTable op_;
};

/// A finite group with an arbitrary (unvalidated) map: an operated group.
class FiniteOperatedGroup {
public:
    using element_type = std::size_t;

    FiniteOperatedGroup(FiniteGroup group, OperatorTable op);

    std::size_t identity() const { return group_.identity(); }
    std::size_t multiply(std::size_t a, std::size_t b) const { return group_.mul(a, b); }
    std::size_t inverse(std::size_t a) const { return group_.inv(a); }
    std::size_t apply(std::size_t a) const { return op_[a]; }
    const FiniteGroup& group() const { return group_; }

private:
    FiniteGroup group_;
    OperatorTable op_;
};

/// (ℤ, +) with the central shift a ↦ a + z; averaging by construction.
class IntegerShiftGroup {
public:
    using element_type = std::int64_t;

    explicit IntegerShiftGroup(std::int64_t shift) : shift_(shift) {}

    std::int64_t identity() const { return 0; }
    std::int64_t multiply(std::int64_t a, std::int64_t b) const { return a + b; }
    std::int64_t inverse(std::int64_t a) const { return -a; }
    std::int64_t apply(std::int64_t a) const { return a + shift_; }
    std::int64_t shift() const { return shift_; }

private:
    std::int64_t shift_;
};

/// A_z(h) = z·h for a central z. Throws StructureError if z is not central.
FiniteAveragingGroup shift_operator(const FiniteGroup& g, std::size_t z);

/// An idempotent endomorphism as averaging operator. Throws StructureError if
/// φ is not a homomorphism or φ∘φ ≠ φ.
FiniteAveragingGroup idempotent_endo_operator(const FiniteGroup& g, const OperatorTable& phi);

/// A₁∘A₂ for commuting averaging operators. Throws StructureError if either
/// operator is not averaging or they do not commute.
FiniteAveragingGroup compose_operators(const FiniteGroup& g, const OperatorTable& a1, const OperatorTable& a2);

enum class LawStatus { holds, fails, inapplicable };

struct LawResult {
    std::string law;
    LawStatus status = LawStatus::holds;
    std::optional<Violation> witness;
    std::string note;
};

/// A list of checked laws. ok() is false iff some law failed; inapplicable
/// laws do not count as failures.
struct LawReport {
    std::vector<LawResult> results;

    bool ok() const;
    const LawResult* find(const std::string& law) const;
    std::vector<std::string> lines(const std::vector<std::string>& names) const;
};

std::string to_string(LawStatus status);

/// Idempotence, inverse preservation on the image, and Ad-equivariance, for
/// pointed operators (A(e) = e); otherwise all three are inapplicable.
LawReport check_pointed_consequences(const FiniteAveragingGroup& h);

/// g ⊣ k = g·A(k) and g ⊢ k = A(g)·k.
std::size_t left_product(const FiniteAveragingGroup& h, std::size_t g, std::size_t k);
std::size_t right_product(const FiniteAveragingGroup& h, std::size_t g, std::size_t k);

/// The five disemigroup identities, and the dimonoid unit law for the group
/// identity e: g ⊣ e = g = e ⊢ g.
LawReport check_disemigroup(const FiniteAveragingGroup& h);

/// g ▷ k = A(g)·k·A(g)⁻¹.
std::size_t rack_op(const FiniteAveragingGroup& h, std::size_t g, std::size_t k);

/// Self-distributivity and bijectivity of every left translation. Inapplicable
/// unless the operator is pointed.
LawReport check_rack(const FiniteAveragingGroup& h);

/// Every averaging operator on g in lexicographic order of the operator
/// table, optionally only the pointed ones. Throws CarrierTooLarge above
/// max_order elements.
std::vector<OperatorTable> search_averaging_ops(const FiniteGroup& g, bool pointed_only = false,
                                                std::size_t max_order = kOperatorSearchCap);

}  // namespace freeavg
