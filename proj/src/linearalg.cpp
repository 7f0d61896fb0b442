#include "freeavg/linearalg.hpp"

#include <random>
#include <sstream>

namespace freeavg {

Rational::Rational(std::int64_t num, std::int64_t den)
{
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    value_ = mpq_class(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text)
{
    auto is_integer = [](std::string_view s) {
        if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
        if (s.empty()) return false;
        for (char c : s)
            if (c < '0' || c > '9') return false;
        return true;
    };
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!is_integer(num) || den.empty() || !is_integer(den) || den.front() == '-' || den.front() == '+')
        throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
    if (num.front() == '+') num.remove_prefix(1);

    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) throw std::invalid_argument("rational with zero denominator: '" + std::string(text) + "'");
    mpq_class q(n, d);
    q.canonicalize();
    return Rational(std::move(q));
}

GroupAlgebraElement GroupAlgebraElement::basis(std::size_t g, Rational coeff)
{
    GroupAlgebraElement out;
    out.add_term(g, coeff);
    return out;
}

Rational GroupAlgebraElement::coefficient(std::size_t g) const
{
    auto it = coeffs_.find(g);
    return it == coeffs_.end() ? Rational() : it->second;
}

void GroupAlgebraElement::add_term(std::size_t g, const Rational& c)
{
    if (c.is_zero()) return;
    auto [it, inserted] = coeffs_.emplace(g, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
}

GroupAlgebraElement& GroupAlgebraElement::operator+=(const GroupAlgebraElement& other)
{
    for (const auto& [g, c] : other.coeffs_) add_term(g, c);
    return *this;
}

GroupAlgebraElement GroupAlgebraElement::scaled(const Rational& c) const
{
    GroupAlgebraElement out;
    for (const auto& [g, a] : coeffs_) out.add_term(g, a * c);
    return out;
}

std::string GroupAlgebraElement::to_string(const std::vector<std::string>& names) const
{
    if (coeffs_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [g, c] : coeffs_) {
        if (!first) out << " + ";
        first = false;
        if (c != Rational(1)) out << c << "*";
        out << "d(" << (g < names.size() ? names[g] : std::to_string(g)) << ")";
    }
    return out.str();
}

namespace {

void check_support(const GroupAlgebraElement& a, std::size_t n)
{
    if (!a.coefficients().empty() && a.coefficients().rbegin()->first >= n)
        throw std::out_of_range("group algebra element outside the carrier");
}

}  // namespace

GroupAlgebraElement ga_mul(const GroupAlgebraElement& a, const GroupAlgebraElement& b, const FiniteGroup& g)
{
    check_support(a, g.size());
    check_support(b, g.size());
    GroupAlgebraElement out;
    for (const auto& [x, cx] : a.coefficients())
        for (const auto& [y, cy] : b.coefficients()) out.add_term(g.mul(x, y), cx * cy);
    return out;
}

Rational counit(const GroupAlgebraElement& a)
{
    Rational sum;
    for (const auto& [g, c] : a.coefficients()) sum += c;
    return sum;
}

namespace {

void add_tensor_term(GroupAlgebraTensor& t, std::size_t g, std::size_t h, const Rational& c)
{
    if (c.is_zero()) return;
    auto [it, inserted] = t.emplace(std::make_pair(g, h), c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) t.erase(it);
}

}  // namespace

GroupAlgebraTensor coproduct(const GroupAlgebraElement& a)
{
    GroupAlgebraTensor out;
    for (const auto& [g, c] : a.coefficients()) add_tensor_term(out, g, g, c);
    return out;
}

GroupAlgebraTensor tensor(const GroupAlgebraElement& a, const GroupAlgebraElement& b)
{
    GroupAlgebraTensor out;
    for (const auto& [g, cg] : a.coefficients())
        for (const auto& [h, ch] : b.coefficients()) add_tensor_term(out, g, h, cg * ch);
    return out;
}

GroupAlgebraElement GroupAlgebraOperator::operator()(const GroupAlgebraElement& a) const
{
    GroupAlgebraElement out;
    for (const auto& [g, c] : a.coefficients()) out += image(g).scaled(c);
    return out;
}

GroupAlgebraOperator linear_extend(const OperatorTable& op)
{
    std::vector<GroupAlgebraElement> images;
    images.reserve(op.size());
    for (std::size_t target : op) images.push_back(GroupAlgebraElement::basis(target));
    return GroupAlgebraOperator(std::move(images));
}

GroupAlgebraOperator antipode(const FiniteGroup& g)
{
    std::vector<GroupAlgebraElement> images;
    for (std::size_t a = 0; a < g.size(); ++a) images.push_back(GroupAlgebraElement::basis(g.inv(a)));
    return GroupAlgebraOperator(std::move(images));
}

std::string describe(const LinearViolation& v, const std::vector<std::string>& names)
{
    std::ostringstream out;
    out << v.law;
    if (!v.basis.empty()) {
        out << " at basis (";
        for (std::size_t i = 0; i < v.basis.size(); ++i) {
            if (i) out << ", ";
            std::size_t b = v.basis[i];
            out << (b < names.size() ? names[b] : "e" + std::to_string(b + 1));
        }
        out << ")";
    }
    if (!v.detail.empty()) out << ": " << v.detail;
    return out.str();
}

namespace {

constexpr const char* kAlgebraLeft = "P(a)P(b) = P(P(a)b)";
constexpr const char* kAlgebraRight = "P(a)P(b) = P(aP(b))";
constexpr const char* kCoproduct = "Delta P = (P x P) Delta";
constexpr const char* kCounit = "eps P = eps";

// Small integer coefficients on a random support; never zero.
GroupAlgebraElement random_element(std::mt19937_64& rng, std::size_t n)
{
    GroupAlgebraElement out;
    while (out.is_zero()) {
        for (std::size_t g = 0; g < n; ++g) {
            if (rng() % 2 == 0) continue;
            auto c = static_cast<std::int64_t>(rng() % 7) - 3;
            auto d = static_cast<std::int64_t>(rng() % 3) + 1;
            out.add_term(g, Rational(c, d));
        }
    }
    return out;
}

std::optional<LinearViolation> averaging_at(const FiniteGroup& g, const GroupAlgebraOperator& p,
                                            const GroupAlgebraElement& a, const GroupAlgebraElement& b,
                                            std::vector<std::size_t> basis)
{
    GroupAlgebraElement pa = p(a);
    GroupAlgebraElement pb = p(b);
    GroupAlgebraElement lhs = ga_mul(pa, pb, g);
    GroupAlgebraElement left = p(ga_mul(pa, b, g));
    if (lhs != left)
        return LinearViolation{kAlgebraLeft, std::move(basis),
                               lhs.to_string(g.names()) + " vs " + left.to_string(g.names())};
    GroupAlgebraElement right = p(ga_mul(a, pb, g));
    if (lhs != right)
        return LinearViolation{kAlgebraRight, std::move(basis),
                               lhs.to_string(g.names()) + " vs " + right.to_string(g.names())};
    return std::nullopt;
}

std::optional<LinearViolation> coalgebra_at(const FiniteGroup& g, const GroupAlgebraOperator& p,
                                            const GroupAlgebraElement& a, std::vector<std::size_t> basis)
{
    GroupAlgebraElement pa = p(a);
    GroupAlgebraTensor lhs = coproduct(pa);
    // (P⊗P)Δ(a) = Σ α_g P(δ_g) ⊗ P(δ_g).
    GroupAlgebraTensor rhs;
    for (const auto& [x, c] : a.coefficients())
        for (const auto& [key, v] : tensor(p.image(x), p.image(x))) add_tensor_term(rhs, key.first, key.second, v * c);
    if (lhs != rhs) return LinearViolation{kCoproduct, std::move(basis), "P(a) = " + pa.to_string(g.names())};
    if (counit(pa) != counit(a))
        return LinearViolation{kCounit, std::move(basis),
                               counit(pa).to_string() + " vs " + counit(a).to_string()};
    return std::nullopt;
}

void require_dimension(const FiniteGroup& g, const GroupAlgebraOperator& p)
{
    if (p.dimension() != g.size()) throw std::invalid_argument("operator dimension does not match the group order");
}

}  // namespace

std::optional<LinearViolation> check_averaging_algebra(const FiniteGroup& g, const GroupAlgebraOperator& p,
                                                       SpotCheck spot)
{
    require_dimension(g, p);
    const std::size_t n = g.size();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (auto v = averaging_at(g, p, GroupAlgebraElement::basis(a), GroupAlgebraElement::basis(b), {a, b}))
                return v;

    std::mt19937_64 rng(spot.seed);
    for (std::size_t t = 0; t < spot.random_pairs; ++t) {
        GroupAlgebraElement a = random_element(rng, n);
        GroupAlgebraElement b = random_element(rng, n);
        if (auto v = averaging_at(g, p, a, b, {})) {
            v->detail = "random pair a = " + a.to_string(g.names()) + ", b = " + b.to_string(g.names()) + "; " + v->detail;
            return v;
        }
    }
    return std::nullopt;
}

std::optional<LinearViolation> check_coalgebra_map(const FiniteGroup& g, const GroupAlgebraOperator& p,
                                                   SpotCheck spot)
{
    require_dimension(g, p);
    const std::size_t n = g.size();
    for (std::size_t a = 0; a < n; ++a)
        if (auto v = coalgebra_at(g, p, GroupAlgebraElement::basis(a), {a})) return v;

    std::mt19937_64 rng(spot.seed ^ 0x9e3779b97f4a7c15ULL);
    for (std::size_t t = 0; t < spot.random_pairs; ++t) {
        GroupAlgebraElement a = random_element(rng, n);
        if (auto v = coalgebra_at(g, p, a, {})) {
            v->detail = "random a = " + a.to_string(g.names()) + "; " + v->detail;
            return v;
        }
    }
    return std::nullopt;
}

HopfVerdict check_hopf_equivalence(const FiniteGroup& g, const OperatorTable& op)
{
    if (op.size() != g.size()) throw std::invalid_argument("operator table does not match the group order");
    HopfVerdict verdict;
    verdict.group = validate_averaging(g, op);
    GroupAlgebraOperator p = linear_extend(op);
    verdict.algebra = check_averaging_algebra(g, p);
    if (!verdict.algebra) verdict.algebra = check_coalgebra_map(g, p);
    if (verdict.group_ok() != verdict.algebra_ok()) {
        std::string what = "group-level and algebra-level verdicts disagree: group ";
        what += verdict.group ? describe(*verdict.group, g.names()) : "ok";
        what += ", algebra ";
        what += verdict.algebra ? describe(*verdict.algebra, g.names()) : "ok";
        throw HopfDisagreement(what);
    }
    return verdict;
}

AntipodeVerdict check_antipode_averaging(const FiniteGroup& g)
{
    AntipodeVerdict verdict;
    verdict.idempotent_antipode = true;
    for (std::size_t a = 0; a < g.size(); ++a)
        if (g.inv(a) != a) verdict.idempotent_antipode = false;
    if (!verdict.idempotent_antipode) return verdict;
    GroupAlgebraOperator s = antipode(g);
    verdict.averaging = check_averaging_algebra(g, s);
    verdict.coalgebra = check_coalgebra_map(g, s);
    return verdict;
}

LieAlgebraSpec::LieAlgebraSpec(std::size_t dim) : dim_(dim), c_(dim * dim * dim)
{
    if (dim == 0) throw InvalidLieAlgebra("Lie algebra dimension must be positive");
}

Vector LieAlgebraSpec::basis(std::size_t i) const
{
    Vector v(dim_);
    v.at(i) = 1;
    return v;
}

Vector LieAlgebraSpec::bracket(const Vector& x, const Vector& y) const
{
    if (x.size() != dim_ || y.size() != dim_) throw std::invalid_argument("vector dimension mismatch");
    Vector out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < dim_; ++j) {
            if (y[j].is_zero()) continue;
            Rational xy = x[i] * y[j];
            for (std::size_t k = 0; k < dim_; ++k)
                if (!c(i, j, k).is_zero()) out[k] += xy * c(i, j, k);
        }
    }
    return out;
}

namespace {

Vector add(Vector a, const Vector& b)
{
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

}  // namespace

std::string to_string(const Vector& v)
{
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += v[i].to_string();
    }
    return out + ")";
}

std::optional<std::string> LieAlgebraSpec::validation_error() const
{
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j)
            for (std::size_t k = 0; k < dim_; ++k)
                if (c(i, j, k) != -c(j, i, k))
                    return "antisymmetry fails: c(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ";" +
                           std::to_string(k + 1) + ") = " + c(i, j, k).to_string() + " but c(" +
                           std::to_string(j + 1) + "," + std::to_string(i + 1) + ";" + std::to_string(k + 1) +
                           ") = " + c(j, i, k).to_string();
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j)
            for (std::size_t k = 0; k < dim_; ++k) {
                Vector ei = basis(i), ej = basis(j), ek = basis(k);
                Vector sum = add(add(bracket(ei, bracket(ej, ek)), bracket(ej, bracket(ek, ei))),
                                 bracket(ek, bracket(ei, ej)));
                for (const Rational& r : sum)
                    if (!r.is_zero())
                        return "Jacobi identity fails at (e" + std::to_string(i + 1) + ", e" + std::to_string(j + 1) +
                               ", e" + std::to_string(k + 1) + ")";
            }
    return std::nullopt;
}

LieAlgebraSpec solvable_lie_algebra_2d()
{
    LieAlgebraSpec lie(2);
    lie.set(0, 1, 1, 1);
    lie.set(1, 0, 1, -1);
    return lie;
}

LieAlgebraSpec abelian_lie_algebra(std::size_t dim) { return LieAlgebraSpec(dim); }

LinearOperatorMatrix::LinearOperatorMatrix(std::size_t dim, std::vector<Rational> row_major)
    : dim_(dim), m_(std::move(row_major))
{
    if (m_.size() != dim * dim) throw std::invalid_argument("matrix entries do not form a square matrix");
}

Vector LinearOperatorMatrix::operator()(const Vector& x) const
{
    if (x.size() != dim_) throw std::invalid_argument("vector dimension mismatch");
    Vector out(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j)
            if (!at(i, j).is_zero() && !x[j].is_zero()) out[i] += at(i, j) * x[j];
    return out;
}

namespace {

void require_valid(const LieAlgebraSpec& lie, const LinearOperatorMatrix& a)
{
    if (auto err = lie.validation_error()) throw InvalidLieAlgebra(*err);
    if (a.dim() != lie.dim()) throw InvalidLieAlgebra("operator dimension does not match the Lie algebra");
}

}  // namespace

std::optional<LinearViolation> check_averaging_lie(const LieAlgebraSpec& lie, const LinearOperatorMatrix& a)
{
    require_valid(lie, a);
    for (std::size_t i = 0; i < lie.dim(); ++i)
        for (std::size_t j = 0; j < lie.dim(); ++j) {
            Vector ei = lie.basis(i), ej = lie.basis(j);
            Vector lhs = lie.bracket(a(ei), a(ej));
            Vector left = a(lie.bracket(a(ei), ej));
            if (lhs != left)
                return LinearViolation{"[A(a),A(b)] = A([A(a),b])", {i, j}, to_string(lhs) + " vs " + to_string(left)};
            Vector right = a(lie.bracket(ei, a(ej)));
            if (lhs != right)
                return LinearViolation{"[A(a),A(b)] = A([a,A(b)])", {i, j}, to_string(lhs) + " vs " + to_string(right)};
        }
    return std::nullopt;
}

Vector leibniz_bracket(const LieAlgebraSpec& lie, const LinearOperatorMatrix& a, const Vector& x, const Vector& y)
{
    return lie.bracket(a(x), y);
}

std::optional<LinearViolation> check_leibniz(const LieAlgebraSpec& lie, const LinearOperatorMatrix& a)
{
    require_valid(lie, a);
    const std::size_t d = lie.dim();
    auto br = [&](const Vector& x, const Vector& y) { return leibniz_bracket(lie, a, x, y); };
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) {
                Vector x = lie.basis(i), y = lie.basis(j), z = lie.basis(k);
                Vector lhs = br(x, br(y, z));
                Vector rhs = add(br(br(x, y), z), br(y, br(x, z)));
                if (lhs != rhs)
                    return LinearViolation{"{x,{y,z}} = {{x,y},z} + {y,{x,z}}", {i, j, k},
                                           to_string(lhs) + " vs " + to_string(rhs)};
            }
    return std::nullopt;
}

}  // namespace freeavg
