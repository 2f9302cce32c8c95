#include "d21/suites.hpp"
#include "d21/verma.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <iostream>

using namespace d21;
using ojson = nlohmann::ordered_json;

namespace {

struct Common {
    std::string zeta = "generic";
    std::string format;
    std::string weight;
};

// exit codes
constexpr int kOk = 0, kFailures = 1, kUsage = 2, kCompute = 3;

std::string default_format() {
    const char* env = std::getenv("D21_FORMAT");
    return env && *env ? env : "json";
}

void check_format(const std::string& f) {
    if (f != "json" && f != "text") throw UsageError("format must be json or text, got '" + f + "'");
}

std::string signs_of(const AtypicalIndex& a) { return a.signs_str(); }

ojson weight_json(const Weight& w) { return ojson::array({w.x, w.y, w.z}); }

int run_classify(const Common& c) {
    Parameter P = Parameter::parse(c.zeta);
    Weight f = parse_weight(c.weight);
    BlockId b = classify_block(P, f);
    Regime r = classify_regime(P, f);
    if (c.format == "text") {
        std::cout << "weight " << f.str() << "\nblock " << b.str() << "\nregime " << regime_name(r) << "\n";
        if (b.atypical) {
            AtypicalIndex a = atypical_index(P, f);
            std::cout << "index n=" << a.n << " signs " << signs_of(a) << "\n";
        }
        return kOk;
    }
    ojson j;
    j["weight"] = weight_json(f);
    j["atypical"] = b.atypical;
    if (b.atypical) {
        AtypicalIndex a = atypical_index(P, f);
        j["k"] = a.k;
        j["n"] = a.n;
        j["signs"] = signs_of(a);
    } else {
        j["orbit_rep"] = weight_json(b.rep);
    }
    j["block"] = b.str();
    j["regime"] = regime_name(r);
    std::cout << j.dump() << "\n";
    return kOk;
}

int run_flag(const Common& c, const std::string& kind) {
    Parameter P = Parameter::parse(c.zeta);
    Weight f = parse_weight(c.weight);
    VermaFlag flag;
    if (kind == "tilting") flag = tilting_flag(P, f);
    else if (kind == "projective") flag = projective_flag(P, f);
    else throw UsageError("--kind must be tilting or projective");
    if (c.format == "text") std::cout << flag_text(flag);
    else std::cout << flag_json(flag) << "\n";
    return kOk;
}

int run_comp(const Common& c, const std::string& method) {
    Parameter P = Parameter::parse(c.zeta);
    Weight f = parse_weight(c.weight);
    VermaFlag comp;
    if (method == "closed") comp = composition_factors(P, f);
    else if (method == "reciprocity") comp = composition_by_reciprocity(P, f);
    else throw UsageError("--method must be closed or reciprocity");
    if (c.format == "text") {
        if (comp.empty()) std::cout << "(empty)\n";
        for (auto it = comp.rbegin(); it != comp.rend(); ++it)
            std::cout << it->second << " L(" << it->first.str() << ")\n";
    } else {
        std::cout << flag_json(comp) << "\n";
    }
    return kOk;
}

int run_char(const Common& c, const std::string& kind, long H) {
    Parameter P = Parameter::parse(c.zeta);
    Weight f = parse_weight(c.weight);
    TruncatedCharacter ch;
    if (kind == "verma") ch = verma_character(f, H);
    else if (kind == "simple") ch = simple_character(P, f, H);
    else throw UsageError("--kind must be verma or simple");
    if (c.format == "text") std::cout << character_text(ch);
    else std::cout << character_json(ch) << "\n";
    return kOk;
}

int run_blocks(const Common& c, long k, long lo, long hi) {
    Parameter P = Parameter::parse(c.zeta);
    if (P.generic && k != 0) throw UsageError("generic zeta has atypical weights only in B_0 (use --k 0)");
    if (k < 0) throw UsageError("--k must be nonnegative");
    if (k == 0) lo = std::max(lo, 0L);
    auto ws = enumerate_block(P, k, lo, hi);
    if (c.format == "text") {
        for (const Weight& w : ws) {
            AtypicalIndex a = atypical_index(P, w);
            std::cout << w.str() << "  n=" << a.n << " " << signs_of(a) << "\n";
        }
        return kOk;
    }
    ojson arr = ojson::array();
    for (const Weight& w : ws) {
        AtypicalIndex a = atypical_index(P, w);
        arr.push_back({{"weight", weight_json(w)}, {"n", a.n}, {"signs", signs_of(a)}});
    }
    ojson j;
    j["zeta"] = P.str();
    j["k"] = k;
    j["weights"] = arr;
    std::cout << j.dump() << "\n";
    return kOk;
}

struct VerifyOpts {
    std::string suite;
    std::string regime;
    long k = -1;
    long range = 5;
    long height = 8;
    long max_n = 4;
    long samples = 10;
    uint64_t seed = 20240601;
};

int run_verify(const Common& c, const VerifyOpts& o, bool zeta_given) {
    if (o.range < 0 || o.height < 0 || o.max_n < 0 || o.samples < 0) throw UsageError("bounds must be nonnegative");
    // which (parameter, block) pairs the block-level suites run on
    std::vector<RegimeCase> cases;
    if (!o.regime.empty()) {
        cases.push_back(regime_case(o.regime));
    } else if (zeta_given || o.k >= 0) {
        Parameter P = Parameter::parse(c.zeta);
        long k = o.k >= 0 ? o.k : (P.generic ? 0 : 1);
        if (P.generic && k != 0) throw UsageError("generic zeta has a single atypical block, k = 0");
        cases.push_back({P.str(), P, k});
    } else {
        cases = sweep_cases();
    }

    SuiteReport rep;
    rep.suite = o.suite;
    auto each_case = [&](auto fn) {
        for (const auto& rc : cases) rep.absorb(fn(rc));
        if (cases.size() == 1) rep.suite = o.suite + " " + cases[0].P.str() + " k=" + std::to_string(cases[0].k);
    };
    Parameter P = Parameter::parse(c.zeta);
    if (o.suite == "jacobi") {
        rep = verify_jacobi(P);
    } else if (o.suite == "singular") {
        rep = verify_singular(P, o.max_n);
    } else if (o.suite == "expansion") {
        rep = verify_expansion(P, std::min(o.max_n, 3L));
    } else if (o.suite == "flags") {
        each_case([&](const RegimeCase& rc) { return verify_flags(rc.P, rc.k, o.range); });
    } else if (o.suite == "duality") {
        each_case([&](const RegimeCase& rc) { return verify_duality(rc.P, rc.k, o.range); });
    } else if (o.suite == "bgg") {
        each_case([&](const RegimeCase& rc) {
            return verify_bgg(rc.P, rc.k, o.range, o.height, static_cast<size_t>(o.samples), o.seed);
        });
    } else if (o.suite == "projective-tilting") {
        each_case([&](const RegimeCase& rc) { return verify_projective_tilting(rc.P, rc.k, o.range); });
    } else if (o.suite == "blocks") {
        rep = verify_blocks(P, 10, static_cast<size_t>(o.samples) * 1000, o.seed);
    } else {
        throw UsageError("unknown suite '" + o.suite + "'");
    }
    if (c.format == "text") std::cout << suite_text(rep);
    else std::cout << suite_json(rep) << "\n";
    return rep.ok() ? kOk : kFailures;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact category O computations for D(2|1;zeta)", "d21"};
    app.require_subcommand(1);
    Common common;
    common.format = default_format();
    app.add_option("--format", common.format, "json or text (default from D21_FORMAT, else json)");

    auto add_common = [&](CLI::App* sub, bool weight) {
        sub->add_option("--zeta", common.zeta, "generic or p/d with gcd(p,d) = 1");
        sub->add_option("--format", common.format, "json or text");
        if (weight) sub->add_option("--weight", common.weight, "rho-shifted weight x,y,z")->required();
    };

    auto* classify = app.add_subcommand("classify", "block, regime and atypical index of a weight");
    add_common(classify, true);

    std::string flag_kind = "tilting";
    auto* flag = app.add_subcommand("flag", "Verma flag of a tilting or projective module");
    add_common(flag, true);
    flag->add_option("--kind", flag_kind, "tilting or projective");

    std::string comp_method = "closed";
    auto* comp = app.add_subcommand("comp", "composition factors of a Verma module");
    add_common(comp, true);
    comp->add_option("--method", comp_method, "closed or reciprocity");

    std::string char_kind = "verma";
    long height = 8;
    auto* chr = app.add_subcommand("char", "truncated character");
    add_common(chr, true);
    chr->add_option("--kind", char_kind, "verma or simple");
    chr->add_option("--height", height, "height bound H");

    long bk = 0, lo = -5, hi = 5;
    auto* blocks = app.add_subcommand("blocks", "enumerate an atypical block over an index range");
    add_common(blocks, false);
    blocks->add_option("--k", bk, "block index");
    blocks->add_option("--lo", lo, "lowest index n");
    blocks->add_option("--hi", hi, "highest index n");

    VerifyOpts vo;
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    add_common(verify, false);
    verify->add_option("--suite", vo.suite,
                       "jacobi, singular, expansion, flags, duality, bgg, projective-tilting, blocks")
        ->required();
    verify->add_option("--regime", vo.regime, "generic, regular, d1, p1d1 or mirror");
    verify->add_option("--k", vo.k, "block index (with --zeta)");
    verify->add_option("--range", vo.range, "index window |n| <= N");
    verify->add_option("--height", vo.height, "height bound H");
    verify->add_option("--max-n", vo.max_n, "largest n for even reflections");
    verify->add_option("--samples", vo.samples, "sampled weights (bgg); thousands of random weights (blocks)");
    verify->add_option("--seed", vo.seed, "seed for sampling");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        check_format(common.format);
        if (*classify) return run_classify(common);
        if (*flag) return run_flag(common, flag_kind);
        if (*comp) return run_comp(common, comp_method);
        if (*chr) return run_char(common, char_kind, height);
        if (*blocks) return run_blocks(common, bk, lo, hi);
        if (*verify) return run_verify(common, vo, verify->count("--zeta") > 0);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n" << app.help();
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kCompute;
    }
    return kUsage;
}
