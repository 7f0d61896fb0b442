#pragma once

// Exact linear layer: group algebras k[G] with the diagonal coproduct and the
// inversion antipode, averaging checks on them, and averaging Lie algebras
// given by structure constants. Everything is decided over ℚ without
// tolerances.
//
// The averaging identities are bilinear, so checking them on basis pairs is
// complete; the random non-basis pairs only guard the linear-extension code.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "freeavg/rational.hpp"
#include "freeavg/structures.hpp"

namespace freeavg {

/// Finitely supported combination of group elements; zero coefficients are
/// never stored.
class GroupAlgebraElement {
public:
    GroupAlgebraElement() = default;

    static GroupAlgebraElement basis(std::size_t g, Rational coeff = 1);

    const std::map<std::size_t, Rational>& coefficients() const { return coeffs_; }
    Rational coefficient(std::size_t g) const;
    bool is_zero() const { return coeffs_.empty(); }

    void add_term(std::size_t g, const Rational& c);
    GroupAlgebraElement& operator+=(const GroupAlgebraElement& other);
    GroupAlgebraElement scaled(const Rational& c) const;

    friend GroupAlgebraElement operator+(GroupAlgebraElement a, const GroupAlgebraElement& b) { return a += b; }
    friend bool operator==(const GroupAlgebraElement& a, const GroupAlgebraElement& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const GroupAlgebraElement& a, const GroupAlgebraElement& b) { return !(a == b); }

    std::string to_string(const std::vector<std::string>& names) const;

private:
    std::map<std::size_t, Rational> coeffs_;
};

/// Convolution product. Throws std::out_of_range for indices outside g.
GroupAlgebraElement ga_mul(const GroupAlgebraElement& a, const GroupAlgebraElement& b, const FiniteGroup& g);

/// ε(Σ α_g δ_g) = Σ α_g.
Rational counit(const GroupAlgebraElement& a);

/// Element of k[G] ⊗ k[G] in the basis δ_g ⊗ δ_h.
using GroupAlgebraTensor = std::map<std::pair<std::size_t, std::size_t>, Rational>;

/// Δ(δ_g) = δ_g ⊗ δ_g, extended linearly.
GroupAlgebraTensor coproduct(const GroupAlgebraElement& a);
GroupAlgebraTensor tensor(const GroupAlgebraElement& a, const GroupAlgebraElement& b);

/// A linear operator on k[G], stored by the images of the basis elements.
class GroupAlgebraOperator {
public:
    explicit GroupAlgebraOperator(std::vector<GroupAlgebraElement> images) : images_(std::move(images)) {}

    std::size_t dimension() const { return images_.size(); }
    const GroupAlgebraElement& image(std::size_t g) const { return images_.at(g); }
    GroupAlgebraElement operator()(const GroupAlgebraElement& a) const;

private:
    std::vector<GroupAlgebraElement> images_;
};

/// δ_g ↦ δ_{A(g)}.
GroupAlgebraOperator linear_extend(const OperatorTable& op);
/// S(δ_g) = δ_{g⁻¹}.
GroupAlgebraOperator antipode(const FiniteGroup& g);

/// A failed linear identity. `basis` holds the basis indices of a failing
/// basis pair, or is empty when a random combination failed.
struct LinearViolation {
    std::string law;
    std::vector<std::size_t> basis;
    std::string detail;
};

std::string describe(const LinearViolation& v, const std::vector<std::string>& names);

struct SpotCheck {
    std::size_t random_pairs = 100;
    std::uint64_t seed = 0x5eed;
};

/// P(a)P(b) = P(P(a)b) = P(aP(b)) on all basis pairs, then on random pairs.
std::optional<LinearViolation> check_averaging_algebra(const FiniteGroup& g, const GroupAlgebraOperator& p,
                                                       SpotCheck spot = {});

/// Δ∘P = (P⊗P)∘Δ and ε∘P = ε on the basis, then on random combinations.
std::optional<LinearViolation> check_coalgebra_map(const FiniteGroup& g, const GroupAlgebraOperator& p,
                                                   SpotCheck spot = {});

struct HopfVerdict {
    std::optional<Violation> group;
    std::optional<LinearViolation> algebra;

    bool group_ok() const { return !group; }
    bool algebra_ok() const { return !algebra; }
};

class HopfDisagreement : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// The group-level verdict for (G, A) and the algebra-level verdict for
/// (k[G], linear extension of A). Throws HopfDisagreement if they differ.
HopfVerdict check_hopf_equivalence(const FiniteGroup& g, const OperatorTable& op);

struct AntipodeVerdict {
    bool idempotent_antipode = false;  // S² = S, i.e. every element is its own inverse
    std::optional<LinearViolation> averaging;  // set only when the hypothesis holds
    std::optional<LinearViolation> coalgebra;
};

AntipodeVerdict check_antipode_averaging(const FiniteGroup& g);

class InvalidLieAlgebra : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

using Vector = std::vector<Rational>;

/// [e_i, e_j] = Σ_k c(i, j, k) e_k, zero-based indices.
class LieAlgebraSpec {
public:
    explicit LieAlgebraSpec(std::size_t dim);

    std::size_t dim() const { return dim_; }
    const Rational& c(std::size_t i, std::size_t j, std::size_t k) const { return c_[index(i, j, k)]; }
    void set(std::size_t i, std::size_t j, std::size_t k, Rational value) { c_[index(i, j, k)] = std::move(value); }

    Vector bracket(const Vector& x, const Vector& y) const;
    Vector basis(std::size_t i) const;

    /// First antisymmetry or Jacobi failure, if any.
    std::optional<std::string> validation_error() const;

private:
    std::size_t index(std::size_t i, std::size_t j, std::size_t k) const { return (i * dim_ + j) * dim_ + k; }

    std::size_t dim_;
    std::vector<Rational> c_;
};

/// The 2-dimensional non-abelian algebra [e₁, e₂] = e₂.
LieAlgebraSpec solvable_lie_algebra_2d();
LieAlgebraSpec abelian_lie_algebra(std::size_t dim);

/// Square matrix acting on column vectors: (M x)_i = Σ_j M(i, j) x_j, so
/// column j holds the image of e_j.
class LinearOperatorMatrix {
public:
    explicit LinearOperatorMatrix(std::size_t dim) : dim_(dim), m_(dim * dim) {}
    LinearOperatorMatrix(std::size_t dim, std::vector<Rational> row_major);

    std::size_t dim() const { return dim_; }
    const Rational& at(std::size_t i, std::size_t j) const { return m_[i * dim_ + j]; }
    void set(std::size_t i, std::size_t j, Rational v) { m_[i * dim_ + j] = std::move(v); }

    Vector operator()(const Vector& x) const;

private:
    std::size_t dim_;
    std::vector<Rational> m_;
};

/// [A(e_i), A(e_j)] = A([A(e_i), e_j]) = A([e_i, A(e_j)]) on all basis pairs.
/// Throws InvalidLieAlgebra if L fails validation or dimensions mismatch.
std::optional<LinearViolation> check_averaging_lie(const LieAlgebraSpec& lie, const LinearOperatorMatrix& a);

/// {x, y} = [A(x), y].
Vector leibniz_bracket(const LieAlgebraSpec& lie, const LinearOperatorMatrix& a, const Vector& x, const Vector& y);

/// Left Leibniz identity {x,{y,z}} = {{x,y},z} + {y,{x,z}} on all basis triples.
std::optional<LinearViolation> check_leibniz(const LieAlgebraSpec& lie, const LinearOperatorMatrix& a);

std::string to_string(const Vector& v);

}  // namespace freeavg
