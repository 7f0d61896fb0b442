#include "freeavg/structures.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace freeavg {

std::string describe(const Violation& v, const std::vector<std::string>& names)
{
    std::ostringstream out;
    out << v.law << " at (";
    for (std::size_t i = 0; i < v.witness.size(); ++i) {
        if (i > 0) out << ", ";
        std::size_t w = v.witness[i];
        out << (w < names.size() ? names[w] : std::to_string(w));
    }
    out << ')';
    return out.str();
}

namespace {

void check_cap(std::size_t n, std::size_t cap, const char* what)
{
    if (n > cap)
        throw CarrierTooLarge(std::string(what) + ": carrier of order " + std::to_string(n) +
                              " exceeds the cap of " + std::to_string(cap));
}

std::optional<std::size_t> find_identity(const GroupTable& t)
{
    const std::size_t n = t.elements.size();
    for (std::size_t e = 0; e < n; ++e) {
        bool ok = true;
        for (std::size_t a = 0; a < n && ok; ++a) ok = t.mul[e][a] == a && t.mul[a][e] == a;
        if (ok) return e;
    }
    return std::nullopt;
}

void check_operator_shape(const FiniteGroup& g, const OperatorTable& op)
{
    if (op.size() != g.size())
        throw MalformedTable("operator table has " + std::to_string(op.size()) + " entries for a carrier of order " +
                             std::to_string(g.size()));
    for (std::size_t v : op)
        if (v >= g.size()) throw MalformedTable("operator value " + std::to_string(v) + " is outside the carrier");
}

}  // namespace

std::optional<Violation> validate_group(const GroupTable& t, std::size_t max_order)
{
    const std::size_t n = t.elements.size();
    if (n == 0) throw MalformedTable("group table has no elements");
    if (t.mul.size() != n) throw MalformedTable("multiplication table has " + std::to_string(t.mul.size()) +
                                                " rows for " + std::to_string(n) + " elements");
    for (const auto& row : t.mul)
        if (row.size() != n) throw MalformedTable("multiplication table row has wrong length");
    check_cap(n, max_order, "group validation");

    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (t.mul[a][b] >= n) return Violation{"closure", {a, b}};
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                if (t.mul[t.mul[a][b]][c] != t.mul[a][t.mul[b][c]]) return Violation{"associativity", {a, b, c}};
    auto e = find_identity(t);
    if (!e) return Violation{"identity", {}};
    for (std::size_t a = 0; a < n; ++a) {
        bool found = false;
        for (std::size_t b = 0; b < n && !found; ++b) found = t.mul[a][b] == *e && t.mul[b][a] == *e;
        if (!found) return Violation{"inverse", {a}};
    }
    return std::nullopt;
}

FiniteGroup::FiniteGroup(GroupTable table, std::size_t max_order) : table_(std::move(table))
{
    if (auto v = validate_group(table_, max_order))
        throw StructureError("not a group: " + describe(*v, table_.elements), v);
    identity_ = *find_identity(table_);
    inverse_.resize(size());
    for (std::size_t a = 0; a < size(); ++a)
        for (std::size_t b = 0; b < size(); ++b)
            if (mul(a, b) == identity_) inverse_[a] = b;
}

std::size_t FiniteGroup::index_of(const std::string& name) const
{
    auto it = std::find(table_.elements.begin(), table_.elements.end(), name);
    if (it == table_.elements.end()) throw std::out_of_range("unknown group element '" + name + "'");
    return static_cast<std::size_t>(it - table_.elements.begin());
}

bool FiniteGroup::is_central(std::size_t z) const
{
    for (std::size_t a = 0; a < size(); ++a)
        if (mul(z, a) != mul(a, z)) return false;
    return true;
}

bool FiniteGroup::is_abelian() const
{
    for (std::size_t a = 0; a < size(); ++a)
        if (!is_central(a)) return false;
    return true;
}

FiniteGroup cyclic_group(std::size_t n)
{
    if (n == 0) throw std::invalid_argument("cyclic group order must be positive");
    GroupTable t;
    for (std::size_t i = 0; i < n; ++i) t.elements.push_back(std::to_string(i));
    t.mul.assign(n, std::vector<std::size_t>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) t.mul[a][b] = (a + b) % n;
    return FiniteGroup(std::move(t));
}

FiniteGroup klein_four_group()
{
    GroupTable t;
    t.elements = {"e", "a", "b", "c"};
    t.mul.assign(4, std::vector<std::size_t>(4));
    for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t b = 0; b < 4; ++b) t.mul[a][b] = a ^ b;
    return FiniteGroup(std::move(t));
}

FiniteGroup symmetric_group_3()
{
    using Perm = std::array<std::size_t, 3>;
    // Images of (1, 2, 3), zero-based.
    const std::vector<std::pair<std::string, Perm>> perms = {
        {"e", {0, 1, 2}},     {"(12)", {1, 0, 2}},  {"(13)", {2, 1, 0}},
        {"(23)", {0, 2, 1}},  {"(123)", {1, 2, 0}}, {"(132)", {2, 0, 1}},
    };
    GroupTable t;
    for (const auto& [name, p] : perms) t.elements.push_back(name);
    t.mul.assign(6, std::vector<std::size_t>(6));
    for (std::size_t a = 0; a < 6; ++a)
        for (std::size_t b = 0; b < 6; ++b) {
            Perm composed{};
            for (std::size_t i = 0; i < 3; ++i) composed[i] = perms[a].second[perms[b].second[i]];
            for (std::size_t c = 0; c < 6; ++c)
                if (perms[c].second == composed) t.mul[a][b] = c;
        }
    return FiniteGroup(std::move(t));
}

OperatorTable identity_operator(const FiniteGroup& g)
{
    OperatorTable op(g.size());
    for (std::size_t a = 0; a < g.size(); ++a) op[a] = a;
    return op;
}

OperatorTable constant_operator(const FiniteGroup& g, std::size_t value)
{
    if (value >= g.size()) throw std::out_of_range("constant operator value outside the carrier");
    return OperatorTable(g.size(), value);
}

OperatorTable sign_retraction(const FiniteGroup& s3)
{
    const std::size_t e = s3.index_of("e");
    const std::size_t t = s3.index_of("(12)");
    OperatorTable op(s3.size());
    // In S₃ the odd permutations are exactly the involutions.
    for (std::size_t a = 0; a < s3.size(); ++a) {
        bool odd = a != e && s3.mul(a, a) == e;
        op[a] = odd ? t : e;
    }
    return op;
}

std::optional<Violation> validate_averaging(const FiniteGroup& g, const OperatorTable& op, std::size_t max_order)
{
    check_operator_shape(g, op);
    check_cap(g.size(), max_order, "averaging validation");
    for (std::size_t a = 0; a < g.size(); ++a)
        for (std::size_t b = 0; b < g.size(); ++b) {
            std::size_t lhs = g.mul(op[a], op[b]);
            if (lhs != op[g.mul(op[a], b)]) return Violation{"A(g)A(h) = A(A(g)h)", {a, b}};
            if (lhs != op[g.mul(a, op[b])]) return Violation{"A(g)A(h) = A(gA(h))", {a, b}};
        }
    return std::nullopt;
}

FiniteAveragingGroup::FiniteAveragingGroup(FiniteGroup group, OperatorTable op)
    : group_(std::move(group)), op_(std::move(op))
{
    if (auto v = validate_averaging(group_, op_))
        throw StructureError("not an averaging operator: " + describe(*v, group_.names()), v);
}

FiniteOperatedGroup::FiniteOperatedGroup(FiniteGroup group, OperatorTable op)
    : group_(std::move(group)), op_(std::move(op))
{
    check_operator_shape(group_, op_);
}

FiniteAveragingGroup shift_operator(const FiniteGroup& g, std::size_t z)
{
    if (z >= g.size()) throw std::out_of_range("shift element outside the carrier");
    if (!g.is_central(z)) throw StructureError("shift element " + g.name(z) + " is not central");
    OperatorTable op(g.size());
    for (std::size_t a = 0; a < g.size(); ++a) op[a] = g.mul(z, a);
    return FiniteAveragingGroup(g, std::move(op));
}

FiniteAveragingGroup idempotent_endo_operator(const FiniteGroup& g, const OperatorTable& phi)
{
    check_operator_shape(g, phi);
    for (std::size_t a = 0; a < g.size(); ++a)
        for (std::size_t b = 0; b < g.size(); ++b)
            if (phi[g.mul(a, b)] != g.mul(phi[a], phi[b])) {
                Violation v{"phi(gh) = phi(g)phi(h)", {a, b}};
                throw StructureError("not a homomorphism: " + describe(v, g.names()), v);
            }
    for (std::size_t a = 0; a < g.size(); ++a)
        if (phi[phi[a]] != phi[a]) {
            Violation v{"phi(phi(g)) = phi(g)", {a}};
            throw StructureError("not idempotent: " + describe(v, g.names()), v);
        }
    return FiniteAveragingGroup(g, phi);
}

FiniteAveragingGroup compose_operators(const FiniteGroup& g, const OperatorTable& a1, const OperatorTable& a2)
{
    for (const OperatorTable* op : {&a1, &a2})
        if (auto v = validate_averaging(g, *op))
            throw StructureError("not an averaging operator: " + describe(*v, g.names()), v);
    for (std::size_t a = 0; a < g.size(); ++a)
        if (a1[a2[a]] != a2[a1[a]]) {
            Violation v{"A1(A2(g)) = A2(A1(g))", {a}};
            throw StructureError("operators do not commute: " + describe(v, g.names()), v);
        }
    OperatorTable composed(g.size());
    for (std::size_t a = 0; a < g.size(); ++a) composed[a] = a1[a2[a]];
    return FiniteAveragingGroup(g, std::move(composed));
}

std::string to_string(LawStatus status)
{
    switch (status) {
    case LawStatus::holds: return "holds";
    case LawStatus::fails: return "fails";
    case LawStatus::inapplicable: return "inapplicable";
    }
    return "?";
}

bool LawReport::ok() const
{
    return std::none_of(results.begin(), results.end(),
                        [](const LawResult& r) { return r.status == LawStatus::fails; });
}

const LawResult* LawReport::find(const std::string& law) const
{
    for (const auto& r : results)
        if (r.law == law) return &r;
    return nullptr;
}

std::vector<std::string> LawReport::lines(const std::vector<std::string>& names) const
{
    std::vector<std::string> out;
    for (const auto& r : results) {
        std::string line = r.law + ": " + to_string(r.status);
        if (r.witness) line += " [" + describe(*r.witness, names) + "]";
        if (!r.note.empty()) line += " (" + r.note + ")";
        out.push_back(std::move(line));
    }
    return out;
}

namespace {

template <class Pred>
LawResult check_pairs(const FiniteGroup& g, std::string law, Pred holds)
{
    for (std::size_t a = 0; a < g.size(); ++a)
        for (std::size_t b = 0; b < g.size(); ++b)
            if (!holds(a, b)) return {law, LawStatus::fails, Violation{law, {a, b}}, {}};
    return {std::move(law), LawStatus::holds, std::nullopt, {}};
}

template <class Pred>
LawResult check_triples(const FiniteGroup& g, std::string law, Pred holds)
{
    for (std::size_t a = 0; a < g.size(); ++a)
        for (std::size_t b = 0; b < g.size(); ++b)
            for (std::size_t c = 0; c < g.size(); ++c)
                if (!holds(a, b, c)) return {law, LawStatus::fails, Violation{law, {a, b, c}}, {}};
    return {std::move(law), LawStatus::holds, std::nullopt, {}};
}

LawResult inapplicable(std::string law)
{
    return {std::move(law), LawStatus::inapplicable, std::nullopt, "A(e) != e"};
}

}  // namespace

LawReport check_pointed_consequences(const FiniteAveragingGroup& h)
{
    const std::string idem = "idempotent A(A(g)) = A(g)";
    const std::string invp = "inverse preservation A(g)^-1 = A(A(g)^-1)";
    const std::string ad = "Ad-equivariance A(g)A(h)A(g)^-1 = A(A(g)hA(g)^-1)";
    LawReport report;
    if (!h.is_pointed()) {
        report.results = {inapplicable(idem), inapplicable(invp), inapplicable(ad)};
        return report;
    }
    const FiniteGroup& g = h.group();
    const auto& A = h.op();
    report.results.push_back(check_pairs(g, idem, [&](std::size_t a, std::size_t) { return A[A[a]] == A[a]; }));
    report.results.push_back(
        check_pairs(g, invp, [&](std::size_t a, std::size_t) { return g.inv(A[a]) == A[g.inv(A[a])]; }));
    report.results.push_back(check_pairs(g, ad, [&](std::size_t a, std::size_t b) {
        std::size_t lhs = g.mul(g.mul(A[a], A[b]), g.inv(A[a]));
        std::size_t rhs = A[g.mul(g.mul(A[a], b), g.inv(A[a]))];
        return lhs == rhs;
    }));
    return report;
}

std::size_t left_product(const FiniteAveragingGroup& h, std::size_t g, std::size_t k)
{
    return h.multiply(g, h.apply(k));
}

std::size_t right_product(const FiniteAveragingGroup& h, std::size_t g, std::size_t k)
{
    return h.multiply(h.apply(g), k);
}

LawReport check_disemigroup(const FiniteAveragingGroup& h)
{
    const FiniteGroup& g = h.group();
    auto L = [&](std::size_t a, std::size_t b) { return left_product(h, a, b); };
    auto R = [&](std::size_t a, std::size_t b) { return right_product(h, a, b); };
    LawReport report;
    report.results.push_back(check_triples(g, "(f -| g) -| h = f -| (g -| h)",
                                           [&](auto f, auto x, auto y) { return L(L(f, x), y) == L(f, L(x, y)); }));
    report.results.push_back(check_triples(g, "(f -| g) -| h = f -| (g |- h)",
                                           [&](auto f, auto x, auto y) { return L(L(f, x), y) == L(f, R(x, y)); }));
    report.results.push_back(check_triples(g, "(f |- g) -| h = f |- (g -| h)",
                                           [&](auto f, auto x, auto y) { return L(R(f, x), y) == R(f, L(x, y)); }));
    report.results.push_back(check_triples(g, "(f -| g) |- h = f |- (g |- h)",
                                           [&](auto f, auto x, auto y) { return R(L(f, x), y) == R(f, R(x, y)); }));
    report.results.push_back(check_triples(g, "(f |- g) |- h = f |- (g |- h)",
                                           [&](auto f, auto x, auto y) { return R(R(f, x), y) == R(f, R(x, y)); }));
    const std::size_t e = g.identity();
    LawResult unit = check_pairs(g, "dimonoid unit g -| e = g = e |- g",
                                 [&](std::size_t a, std::size_t) { return L(a, e) == a && R(e, a) == a; });
    if (!h.is_pointed()) unit.note = "A(e) != e";
    report.results.push_back(std::move(unit));
    return report;
}

std::size_t rack_op(const FiniteAveragingGroup& h, std::size_t g, std::size_t k)
{
    std::size_t a = h.apply(g);
    return h.multiply(h.multiply(a, k), h.inverse(a));
}

LawReport check_rack(const FiniteAveragingGroup& h)
{
    const std::string sd = "self-distributivity f > (g > h) = (f > g) > (f > h)";
    const std::string bij = "left translations L_g bijective";
    LawReport report;
    if (!h.is_pointed()) {
        report.results = {inapplicable(sd), inapplicable(bij)};
        return report;
    }
    const FiniteGroup& g = h.group();
    auto T = [&](std::size_t a, std::size_t b) { return rack_op(h, a, b); };
    report.results.push_back(
        check_triples(g, sd, [&](auto f, auto x, auto y) { return T(f, T(x, y)) == T(T(f, x), T(f, y)); }));
    LawResult bijective{bij, LawStatus::holds, std::nullopt, {}};
    for (std::size_t a = 0; a < g.size() && bijective.status == LawStatus::holds; ++a) {
        std::vector<bool> hit(g.size(), false);
        for (std::size_t b = 0; b < g.size(); ++b) hit[T(a, b)] = true;
        if (std::find(hit.begin(), hit.end(), false) != hit.end())
            bijective = {bij, LawStatus::fails, Violation{bij, {a}}, {}};
    }
    report.results.push_back(std::move(bijective));
    return report;
}

std::vector<OperatorTable> search_averaging_ops(const FiniteGroup& g, bool pointed_only, std::size_t max_order)
{
    check_cap(g.size(), max_order, "operator search");
    const std::size_t n = g.size();
    std::vector<OperatorTable> found;
    OperatorTable op(n, 0);
    while (true) {
        if ((!pointed_only || op[g.identity()] == g.identity()) && !validate_averaging(g, op, max_order))
            found.push_back(op);
        // Odometer increment, last entry fastest.
        std::size_t i = n;
        while (i > 0) {
            --i;
            if (++op[i] < n) break;
            op[i] = 0;
            if (i == 0) return found;
        }
    }
}

std::string describe_operator(const FiniteGroup& g, const OperatorTable& op)
{
    std::string out = "(";
    for (std::size_t a = 0; a < op.size(); ++a) {
        if (a) out += ", ";
        out += g.name(a) + "->" + g.name(op[a]);
    }
    return out + ")";
}

}  // namespace freeavg
