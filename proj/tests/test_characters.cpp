#include "d21/characters.hpp"

#include <doctest.h>

using namespace d21;

namespace {
const Parameter G = Parameter::Generic();
const BlockId B0{true, 0, {}};
}  // namespace

TEST_CASE("verma characters") {
    TruncatedCharacter ch = verma_character({1, 1, 1}, 6);
    Vec3 top = rho_unshift({1, 1, 1});
    CHECK(ch.at({0, 0, 0}) == 5);
    CHECK(ch.at(top) == 1);
    CHECK(ch.at(top - root_vector(A0)) == 1);
    CHECK(ch.at(top + root_vector(A0)) == 0);
    CHECK_THROWS_AS(verma_character({1, 1, 1}, -1), UsageError);
}

TEST_CASE("tensoring and projecting") {
    WeightMultiset adj = module_weights(ModuleSpec::parse("adjoint"));
    VermaFlag t = tensor_flag({{{-3, -1, -1}, 1}}, adj);
    CHECK(flag_length(t) == 17);
    CHECK(project_to_block(G, t, B0) == VermaFlag{{{-1, -1, -1}, 1}, {{-2, -2, -2}, 1}});
    CHECK(tensor_flag({{{2, 1, 0}, 1}}, {{{0, 0, 0}, 1}}) == VermaFlag{{{2, 1, 0}, 1}});
    VermaFlag two{{{1, 2, 3}, 2}, {{0, 0, 0}, 1}};
    CHECK(flag_length(tensor_flag(two, adj)) == 3 * 17);
}

TEST_CASE("block projection") {
    VermaFlag mixed{{{0, 0, 0}, 1}, {{0, 2, 0}, 1}};
    VermaFlag in0 = project_to_block(G, mixed, B0);
    CHECK(in0 == VermaFlag{{{0, 0, 0}, 1}});
    CHECK(project_to_block(G, in0, B0) == in0);
}

TEST_CASE("translation examples") {
    WeightMultiset adj = module_weights(ModuleSpec::parse("adjoint"));
    VermaFlag five = translation_construct(G, {{{0, -2, 0}, 1}}, adj, B0);
    CHECK(flag_length(five) == 5);
    CHECK(five.count({1, -1, 1}));
    VermaFlag six = translation_construct(G, {{{-1, -2, -1}, 1}}, module_weights(ModuleSpec::parse("L121")), B0);
    VermaFlag want{{{-2, -2, -2}, 2}, {{-1, -1, -1}, 3}, {{-1, -1, 1}, 1},
                   {{-1, 1, -1}, 1},  {{0, 0, 0}, 1},    {{1, -1, -1}, 1}};
    CHECK(six == want);
    for (long p : {2L, 3L}) {
        Parameter P = Parameter::Rational(p, 1);
        VermaFlag e = translation_construct(P, {{{0, -2, 0}, 1}}, module_weights({ModuleKind::Quasinatural, p}),
                                            BlockId{true, 1, {}});
        VermaFlag expect{{{decode_index(P, 1, 1, {1, -1, 0})}, 1},
                         {{decode_index(P, 1, 0, {0, -1, 1})}, 1},
                         {{decode_index(P, 1, 0, {0, -1, -1})}, 1},
                         {{decode_index(P, 1, 1, {-1, -1, 0})}, 1}};
        CHECK(e == expect);
    }
}

TEST_CASE("characters of flags") {
    TruncatedCharacter one = verma_character({2, -1, 0}, 5);
    CHECK(character_of_flag({{{2, -1, 0}, 1}}, 5) == one);
    TruncatedCharacter two = character_of_flag({{{2, -1, 0}, 2}}, 5);
    for (const auto& [mu, c] : one.coeffs) CHECK(two.at(mu) == 2 * c);
    VermaFlag t1{{{1, 1, 1}, 1}, {{2, 2, 2}, 1}};
    TruncatedCharacter ch = character_of_flag(t1, 6);
    CHECK(ch.anchor == rho_unshift({2, 2, 2}));
    CHECK(ch.at(ch.anchor) == 1);
    CHECK_THROWS_AS(character_of_flag({{{1, 0, 0}, 1}, {{0, 3, 0}, 1}}, 4), MathError);
}

TEST_CASE("character additivity under tensoring") {
    WeightMultiset adj = module_weights(ModuleSpec::parse("adjoint"));
    VermaFlag seed{{{-2, 0, 1}, 1}};
    VermaFlag t = tensor_flag(seed, adj);
    const long H = 4;
    Vec3 anchor = rho_unshift({-2, 0, 1}) + Vec3{2, 0, 0};
    TruncatedCharacter lhs = character_of_flag(t, anchor, H);
    TruncatedCharacter base = character_of_flag(seed, anchor, H + 4);
    TruncatedCharacter rhs{anchor, H, {}};
    for (const auto& [mu, c] : base.coeffs)
        for (const auto& [g, m] : adj) {
            Vec3 w = mu + g;
            auto off = simple_root_coords(anchor - w);
            if (off && (*off)[0] >= 0 && (*off)[1] >= 0 && (*off)[2] >= 0 && (*off)[0] + (*off)[1] + (*off)[2] <= H)
                rhs.coeffs[w] += c * m;
        }
    std::erase_if(rhs.coeffs, [](const auto& kv) { return kv.second == 0; });
    CHECK(lhs == rhs);
}

TEST_CASE("typical tilting flags") {
    CHECK(typical_tilting_flag(G, {1, 1, 0}).size() == 4);
    CHECK(typical_tilting_flag(G, {-2, -1, 0}) == VermaFlag{{{-2, -1, 0}, 1}});
    CHECK(typical_tilting_flag(G, {0, -2, 0}) == VermaFlag{{{0, -2, 0}, 1}});
    CHECK_THROWS_AS(typical_tilting_flag(G, {1, 1, 1}), MathError);
}

TEST_CASE("flag arithmetic and serialization") {
    VermaFlag a{{{1, 2, 3}, 1}, {{0, 0, 0}, 2}};
    CHECK(flag_negate(a) == VermaFlag{{{-1, -2, -3}, 1}, {{0, 0, 0}, 2}});
    CHECK(flag_swap_yz(a) == VermaFlag{{{1, 3, 2}, 1}, {{0, 0, 0}, 2}});
    CHECK(flag_add(a, a, -1).empty());
    CHECK(flag_json({}) == "{}");
    CHECK(flag_text({}) == "(empty)\n");
    CHECK(flag_json(a) == R"({"0,0,0":2,"1,2,3":1})");
    CHECK(flag_from_json(flag_json(a)) == a);
    CHECK(flag_text(a) == "M(1,2,3)\nM(0,0,0)\nM(0,0,0)\n");
    TruncatedCharacter ch = verma_character({0, 0, 0}, 0);
    CHECK(character_json(ch) == R"({"anchor":[1,-1,-1],"height":0,"terms":[{"weight":[1,-1,-1],"coefficient":1}]})");
}
