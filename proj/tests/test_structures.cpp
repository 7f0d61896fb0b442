#include <doctest.h>

#include <algorithm>
#include <random>

#include "freeavg/structures.hpp"

using namespace freeavg;

namespace {

const std::string kUnit = "dimonoid unit g -| e = g = e |- g";

std::size_t idx(const FiniteGroup& g, const std::string& name) { return g.index_of(name); }

std::vector<FiniteGroup> small_groups()
{
    return {cyclic_group(1), cyclic_group(2), cyclic_group(3), cyclic_group(4), klein_four_group(),
            cyclic_group(5), cyclic_group(6), symmetric_group_3()};
}

}  // namespace

TEST_CASE("validate_group")
{
    CHECK_FALSE(validate_group(cyclic_group(2).table()).has_value());
    CHECK_FALSE(validate_group(symmetric_group_3().table()).has_value());

    // Broken associativity: swap two entries of the ℤ₃ table.
    GroupTable t = cyclic_group(3).table();
    std::swap(t.mul[1][1], t.mul[1][2]);
    auto v = validate_group(t);
    REQUIRE(v.has_value());
    CHECK(v->law == "associativity");
    CHECK(v->witness.size() == 3);

    GroupTable no_identity{{"a", "b"}, {{1, 1}, {1, 1}}};
    CHECK(validate_group(no_identity)->law == "identity");
    GroupTable semilattice{{"a", "b"}, {{0, 0}, {0, 1}}};
    CHECK(validate_group(semilattice)->law == "inverse");

    CHECK_THROWS_AS(validate_group(GroupTable{{"a", "b"}, {{0, 1}}}), MalformedTable);
    CHECK(validate_group(GroupTable{{"a"}, {{1}}})->law == "closure");
    GroupTable z30;
    for (std::size_t a = 0; a < 30; ++a) {
        z30.elements.push_back(std::to_string(a));
        z30.mul.emplace_back();
        for (std::size_t b = 0; b < 30; ++b) z30.mul.back().push_back((a + b) % 30);
    }
    CHECK_THROWS_AS(validate_group(z30), CarrierTooLarge);
    CHECK_FALSE(validate_group(z30, 30).has_value());

    CHECK_THROWS_AS(FiniteGroup{semilattice}, StructureError);
}

TEST_CASE("FiniteGroup infers identity and inverses")
{
    FiniteGroup s3 = symmetric_group_3();
    CHECK(s3.name(s3.identity()) == "e");
    CHECK(s3.inv(idx(s3, "(123)")) == idx(s3, "(132)"));
    CHECK(s3.mul(idx(s3, "(12)"), idx(s3, "(13)")) == idx(s3, "(132)"));
    CHECK_FALSE(s3.is_abelian());
    CHECK(s3.is_central(s3.identity()));
    CHECK_FALSE(s3.is_central(idx(s3, "(12)")));
    CHECK_THROWS_AS(s3.index_of("(1234)"), std::out_of_range);

    FiniteGroup v = klein_four_group();
    for (std::size_t a = 0; a < 4; ++a) CHECK(v.inv(a) == a);
}

TEST_CASE("validate_averaging")
{
    FiniteGroup z2 = cyclic_group(2);
    CHECK_FALSE(validate_averaging(z2, {1, 0}).has_value());
    auto v = validate_averaging(z2, constant_operator(z2, 1));
    REQUIRE(v.has_value());
    CHECK(v->witness == std::vector<std::size_t>{0, 0});
    for (const FiniteGroup& g : small_groups()) {
        CHECK_FALSE(validate_averaging(g, identity_operator(g)).has_value());
        CHECK_FALSE(validate_averaging(g, constant_operator(g, g.identity())).has_value());
    }
    CHECK_THROWS_AS(FiniteAveragingGroup(z2, constant_operator(z2, 1)), StructureError);
    CHECK_THROWS_AS(validate_averaging(z2, {0}), MalformedTable);
}

TEST_CASE("constructors")
{
    FiniteGroup z6 = cyclic_group(6);
    CHECK_FALSE(validate_averaging(z6, shift_operator(z6, 2).op()).has_value());
    CHECK_THROWS_AS(shift_operator(symmetric_group_3(), 1), StructureError);

    IntegerShiftGroup z(5);
    for (std::int64_t a = -4; a <= 4; ++a)
        for (std::int64_t b = -4; b <= 4; ++b) {
            CHECK(z.multiply(z.apply(a), z.apply(b)) == z.apply(z.multiply(z.apply(a), b)));
            CHECK(z.multiply(z.apply(a), z.apply(b)) == z.apply(z.multiply(a, z.apply(b))));
        }

    FiniteGroup s3 = symmetric_group_3();
    CHECK(idempotent_endo_operator(s3, sign_retraction(s3)).is_pointed());
    CHECK_NOTHROW(idempotent_endo_operator(s3, constant_operator(s3, s3.identity())));
    FiniteGroup z4 = cyclic_group(4);
    CHECK_THROWS_AS(idempotent_endo_operator(z4, {0, 2, 0, 2}), StructureError);
    CHECK_THROWS_AS(idempotent_endo_operator(z4, {0, 0, 0, 1}), StructureError);

    FiniteAveragingGroup s5 = compose_operators(z6, shift_operator(z6, 2).op(), shift_operator(z6, 3).op());
    CHECK(s5.op() == shift_operator(z6, 5).op());
    OperatorTable sq = compose_operators(s3, sign_retraction(s3), sign_retraction(s3)).op();
    CHECK(sq == sign_retraction(s3));

    // Two averaging operators on S₃ that do not commute, found by search.
    auto ops = search_averaging_ops(s3);
    bool found = false;
    for (const auto& a : ops)
        for (const auto& b : ops) {
            bool commute = true;
            for (std::size_t g = 0; g < 6; ++g) commute = commute && a[b[g]] == b[a[g]];
            if (commute || found) continue;
            found = true;
            CHECK_THROWS_AS(compose_operators(s3, a, b), StructureError);
        }
    CHECK(found);
}

TEST_CASE("search_averaging_ops")
{
    FiniteGroup z2 = cyclic_group(2);
    auto ops = search_averaging_ops(z2);
    CHECK(ops == std::vector<OperatorTable>{{0, 0}, {0, 1}, {1, 0}});
    CHECK(search_averaging_ops(z2, true).size() == 2);

    // Counts from an independent brute-force enumeration.
    CHECK(search_averaging_ops(cyclic_group(3)).size() == 4);
    CHECK(search_averaging_ops(cyclic_group(4)).size() == 9);
    CHECK(search_averaging_ops(klein_four_group()).size() == 17);
    CHECK(search_averaging_ops(symmetric_group_3()).size() == 14);
    CHECK(search_averaging_ops(cyclic_group(4), true).size() == 4);
    CHECK(search_averaging_ops(klein_four_group(), true).size() == 8);
    CHECK(search_averaging_ops(symmetric_group_3(), true).size() == 8);

    FiniteGroup z3 = cyclic_group(3);
    auto z3ops = search_averaging_ops(z3);
    for (std::size_t z = 0; z < 3; ++z)
        CHECK(std::find(z3ops.begin(), z3ops.end(), shift_operator(z3, z).op()) != z3ops.end());

    for (const FiniteGroup& g : small_groups()) {
        auto all = search_averaging_ops(g);
        CHECK(std::find(all.begin(), all.end(), identity_operator(g)) != all.end());
        CHECK(std::find(all.begin(), all.end(), constant_operator(g, g.identity())) != all.end());
        CHECK(std::is_sorted(all.begin(), all.end()));
        for (const auto& op : all) CHECK_FALSE(validate_averaging(g, op).has_value());
    }
    CHECK_THROWS_AS(search_averaging_ops(cyclic_group(7)), CarrierTooLarge);
}

TEST_CASE("pointed consequences")
{
    FiniteGroup s3 = symmetric_group_3();
    LawReport r = check_pointed_consequences(FiniteAveragingGroup(s3, sign_retraction(s3)));
    CHECK(r.ok());
    REQUIRE(r.results.size() == 3);
    for (const auto& l : r.results) CHECK(l.status == LawStatus::holds);

    LawReport z2 = check_pointed_consequences(FiniteAveragingGroup(cyclic_group(2), {1, 0}));
    for (const auto& l : z2.results) CHECK(l.status == LawStatus::inapplicable);
    CHECK(z2.ok());
    CHECK(check_pointed_consequences(FiniteAveragingGroup(s3, identity_operator(s3))).ok());
}

TEST_CASE("disemigroup and dimonoid")
{
    FiniteAveragingGroup z2(cyclic_group(2), {1, 0});
    LawReport r = check_disemigroup(z2);
    REQUIRE(r.results.size() == 6);
    for (std::size_t i = 0; i < 5; ++i) CHECK(r.results[i].status == LawStatus::holds);
    CHECK(r.find(kUnit)->status == LawStatus::fails);
    CHECK_FALSE(r.ok());

    FiniteGroup s3 = symmetric_group_3();
    CHECK(check_disemigroup(FiniteAveragingGroup(s3, sign_retraction(s3))).ok());
    FiniteAveragingGroup id(s3, identity_operator(s3));
    CHECK(check_disemigroup(id).ok());
    for (std::size_t a = 0; a < 6; ++a)
        for (std::size_t b = 0; b < 6; ++b) {
            CHECK(left_product(id, a, b) == s3.mul(a, b));
            CHECK(right_product(id, a, b) == s3.mul(a, b));
        }
}

TEST_CASE("rack")
{
    FiniteGroup s3 = symmetric_group_3();
    FiniteAveragingGroup h(s3, sign_retraction(s3));
    CHECK(rack_op(h, idx(s3, "(12)"), idx(s3, "(123)")) == idx(s3, "(132)"));
    CHECK(rack_op(h, idx(s3, "(123)"), idx(s3, "(12)")) == idx(s3, "(12)"));
    CHECK(check_rack(h).ok());
    CHECK(check_rack(FiniteAveragingGroup(s3, identity_operator(s3))).ok());
    LawReport z2 = check_rack(FiniteAveragingGroup(cyclic_group(2), {1, 0}));
    for (const auto& l : z2.results) CHECK(l.status == LawStatus::inapplicable);
}

TEST_CASE("property: structure theory on every validated handle of order at most six")
{
    std::size_t handles = 0, pointed = 0;
    for (const FiniteGroup& g : small_groups()) {
        for (const auto& op : search_averaging_ops(g)) {
            FiniteAveragingGroup h(g, op);
            ++handles;
            LawReport d = check_disemigroup(h);
            for (std::size_t i = 0; i < 5; ++i) CHECK(d.results[i].status == LawStatus::holds);
            CHECK((d.find(kUnit)->status == LawStatus::holds) == h.is_pointed());
            LawReport rack = check_rack(h);
            LawReport cons = check_pointed_consequences(h);
            if (h.is_pointed()) {
                ++pointed;
                CHECK(rack.ok());
                CHECK(cons.ok());
                for (const auto& l : rack.results) CHECK(l.status == LawStatus::holds);
                for (const auto& l : cons.results) CHECK(l.status == LawStatus::holds);
            } else {
                for (const auto& l : rack.results) CHECK(l.status == LawStatus::inapplicable);
            }
        }
    }
    CHECK(handles > 50);
    CHECK(pointed > 20);
}

TEST_CASE("property: search agrees with validation on random maps")
{
    std::mt19937_64 rng(3);
    FiniteGroup s3 = symmetric_group_3();
    auto ops = search_averaging_ops(s3);
    for (int i = 0; i < 500; ++i) {
        OperatorTable op(6);
        for (auto& a : op) a = rng() % 6;
        bool listed = std::find(ops.begin(), ops.end(), op) != ops.end();
        CHECK(listed == !validate_averaging(s3, op).has_value());
    }
}

TEST_CASE("report lines")
{
    FiniteAveragingGroup z2(cyclic_group(2), {1, 0});
    auto lines = check_disemigroup(z2).lines(z2.group().names());
    REQUIRE(lines.size() == 6);
    CHECK(lines[0] == "(f -| g) -| h = f -| (g -| h): holds");
    CHECK(lines[5].rfind(kUnit + ": fails [", 0) == 0);
    CHECK(describe(Violation{"associativity", {0, 1, 1}}, z2.group().names()) == "associativity at (0, 1, 1)");
}
