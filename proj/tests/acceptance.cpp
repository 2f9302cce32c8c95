// Acceptance run: one line per criterion, exit status 1 if any fails.
// Usage: acceptance [criterion-number ...]

#include "d21/suites.hpp"
#include "d21/verma.hpp"

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

using namespace d21;

namespace {

struct Outcome {
    bool ok;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

std::string first_failures(const SuiteReport& r, size_t n = 3) {
    std::ostringstream os;
    for (size_t i = 0; i < std::min(n, r.failures.size()); ++i) {
        const auto& f = r.failures[i];
        os << "; " << f.subject;
        if (!f.note.empty()) os << " (" << f.note << ")";
    }
    if (r.failures.size() > n) os << "; ...";
    return os.str();
}

std::string tally(const SuiteReport& r) {
    return std::to_string(r.passed()) + "/" + std::to_string(r.total) + " checks";
}

const std::vector<Parameter>& jacobi_params() {
    static const std::vector<Parameter> ps = {Parameter::Generic(),     Parameter::Rational(1, 1),
                                              Parameter::Rational(2, 1), Parameter::Rational(3, 2),
                                              Parameter::Rational(2, 3), Parameter::Rational(5, 1)};
    return ps;
}

Outcome structure_tables() {
    auto t0 = Clock::now();
    SuiteReport all;
    for (const auto& P : jacobi_params()) all.absorb(verify_jacobi(P));
    double s = seconds_since(t0);
    bool ok = all.ok() && s < 60;
    return {ok, tally(all) + " over generic, 1, 2, 3/2, 2/3, 5 in " + std::to_string(s) + "s" + first_failures(all)};
}

Outcome singular_vectors() {
    auto t0 = Clock::now();
    SuiteReport all;
    for (const auto& P : {Parameter::Generic(), Parameter::Rational(3, 2), Parameter::Rational(1, 1)})
        all.absorb(verify_singular(P, 4, 5));
    double s = seconds_since(t0);
    return {all.ok() && s < 600, tally(all) + " at generic, 3/2, 1/1 in " + std::to_string(s) + "s" +
                                     first_failures(all, 4)};
}

Outcome expansion() {
    SuiteReport r = verify_expansion(Parameter::Generic(), 3);
    return {r.ok(), tally(r) + " (n = 1, 2, 3; four (b, c) samples each)"};
}

Outcome zero_weight() {
    Weight L{1, 1, 1};
    long verma_dim = static_cast<long>(weight_space_basis(L, {0, 0, 0}).size());
    long simple_dim = simple_character(Parameter::Generic(), L, 8).at({0, 0, 0});
    VermaFlag comp = composition_factors(Parameter::Generic(), L);
    long mult = comp.count({-1, 1, 1}) ? comp.at({-1, 1, 1}) : 0;
    bool ok = verma_dim == 5 && simple_dim == 3 && mult == 2;
    return {ok, "dim M^0 = " + std::to_string(verma_dim) + ", dim L^0 = " + std::to_string(simple_dim) +
                    ", [M(1,1,1) : L(-1,1,1)] = " + std::to_string(mult)};
}

Outcome flag_sweep() {
    bool ok = true;
    std::ostringstream os;
    for (const auto& c : sweep_cases()) {
        auto t0 = Clock::now();
        SuiteReport r = verify_flags(c.P, c.k, 6);
        double s = seconds_since(t0);
        ok = ok && r.ok() && s < 300;
        os << c.name << " " << r.passed() << "/" << r.total << (r.ok() ? "" : first_failures(r)) << "; ";
    }
    return {ok, os.str()};
}

Outcome duality() {
    SuiteReport all;
    for (const auto& c : sweep_cases()) all.absorb(verify_duality(c.P, c.k, 6));
    return {all.ok(), tally(all) + " (closed form = reciprocity scan = tilting of -lambda)" + first_failures(all)};
}

Outcome characters() {
    SuiteReport all;
    for (const auto& c : sweep_cases()) all.absorb(verify_bgg(c.P, c.k, 6, 8, 10, 20240601));
    return {all.ok(), tally(all) + " at H = 8, 10 sampled weights per regime" + first_failures(all)};
}

Outcome shapes() {
    SuiteReport all;
    long longest = 0;
    for (const auto& c : sweep_cases()) {
        all.absorb(verify_projective_tilting(c.P, c.k, 6));
        longest = std::max(longest, max_tilting_length(c.P, c.k, 6));
    }
    bool ok = all.ok() && longest == 24;
    return {ok, tally(all) + ", longest atypical flag " + std::to_string(longest) + first_failures(all)};
}

Outcome block_separation() {
    SuiteReport all;
    for (const auto& P : {Parameter::Generic(), Parameter::Rational(3, 2), Parameter::Rational(2, 3),
                          Parameter::Rational(2, 1), Parameter::Rational(1, 1), Parameter::Rational(1, 2),
                          Parameter::Rational(5, 1)})
        all.absorb(verify_blocks(P, 10, 10000, 20240601));
    return {all.ok(), tally(all) + " (k <= 10, 10^4 random weights per parameter)" + first_failures(all)};
}

}  // namespace

int main(int argc, char** argv) {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"structure tables satisfy super-Jacobi", structure_tables},
        {"reflection singular vectors are singular and nonzero", singular_vectors},
        {"straightened 2delta vector matches the displayed expansion", expansion},
        {"zero-weight dimensions of M(1,1,1) and L(1,1,1)", zero_weight},
        {"tilting flags reproduced by translation from documented seeds", flag_sweep},
        {"composition factors closed under duality and reciprocity", duality},
        {"Verma characters recovered from simple characters", characters},
        {"shape of tilting flags and projective-tilting pairs", shapes},
        {"Casimir and HC separator split the blocks", block_separation},
    };
    std::set<int> wanted;
    for (int i = 1; i < argc; ++i) {
        int c = std::atoi(argv[i]);
        if (c < 1 || c > static_cast<int>(criteria.size())) {
            std::cerr << "no criterion " << argv[i] << "\n";
            return 2;
        }
        wanted.insert(c);
    }
    bool all_ok = true;
    for (size_t i = 0; i < criteria.size(); ++i) {
        int id = static_cast<int>(i + 1);
        if (!wanted.empty() && !wanted.count(id)) continue;
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("error: ") + e.what()};
        }
        all_ok = all_ok && o.ok;
        std::cout << "criterion " << id << ": " << (o.ok ? "PASS" : "FAIL") << "  " << criteria[i].first << "  ["
                  << o.detail << "]" << std::endl;
    }
    return all_ok ? 0 : 1;
}
