// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "lzdr/codec.hpp"
#include "lzdr/collage.hpp"
#include "lzdr/counters.hpp"
#include "lzdr/flex.hpp"
#include "lzdr/greedy.hpp"
#include "lzdr/lowerbound.hpp"
#include "oracles.hpp"

using namespace lzdr;
using Clock = std::chrono::steady_clock;

namespace {

const std::string kExample = "aabbaabbbaabbbbbababaabccccbababc";
const std::string kFlexExample = "aaababaaaaaabaaab";

struct Outcome {
    bool pass = true;
    std::string detail;
};

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::vector<std::string> rendered(const Parsing& p, const Text& t) {
    std::vector<std::string> out;
    for (const Factor& f : p.factors) out.push_back(std::string(t.substr(f.begin, f.end())) + " " + describe(p, f));
    return out;
}

Outcome worked_examples() {
    const std::vector<std::string> lzdp = {"aa (a,a)",      "bb (b,b)",     "aabb (F1,F2)", "baabb (b,F3)",
                                           "bbba (F2,F4)[1..4]", "ba (b,a)", "baab F4[1..4]", "cc (c,c)",
                                           "ccba (F8,F6)",  "bab (F6,b)",   "c (c,F0)"};
    const std::vector<std::string> lzdr = {"aa (a,a)",          "bb (b,b)", "aabb (F1,F2)",
                                           "baabb (b,F3)",      "bbba (F2,F4)[1..4]", "ba (b,a)",
                                           "baab (F4)^1[1..4]", "cccc c^4", "babab (F6)^3[1..5]",
                                           "c (c,F0)"};
    const Text t(kExample);
    Outcome o;
    double worst = 0;
    for (const auto& [scheme, expected] : {std::pair{Scheme::lzdp, lzdp}, std::pair{Scheme::lzdr, lzdr}}) {
        const auto start = Clock::now();
        const Parsing p = parse(t, scheme);
        worst = std::max(worst, seconds_since(start));
        if (rendered(p, t) != expected) {
            o.pass = false;
            o.detail += std::string(scheme_name(scheme)) + " factors differ; ";
        }
    }
    if (worst >= 1e-3) o.pass = false;
    std::ostringstream d;
    d << "LZD+ 11 factors, LZDR 10 factors, slowest parse " << worst * 1e6 << " us";
    o.detail += d.str();
    return o;
}

Outcome sk_counts() {
    const auto start = Clock::now();
    const auto rows = verify_sk_counts(256);
    const double secs = seconds_since(start);
    Outcome o;
    std::ostringstream d;
    for (const auto& r : rows) {
        d << "k=" << r.k << ":" << r.lzd << "/" << r.lzdp << "/" << r.lzdr << " ";
        if (!r.matches_table || (r.k >= 8 && !r.matches_linear)) o.pass = false;
    }
    if (rows.size() != 7 || secs >= 60) o.pass = false;
    d << "in " << secs << " s";
    o.detail = d.str();
    return o;
}

Outcome flex_example() {
    const Text t(kFlexExample);
    Outcome o;
    const std::vector<std::string> greedy = {"aaa a^3", "ba (b,a)", "baaaa (F2,F1)", "aa (a,a)", "baaa (F2,F4)",
                                             "b (b,F0)"};
    const std::vector<std::string> stdflex = {"aaa a^3", "ba (b,a)", "baaa (R2,R1)[1..4]", "aaaba (R1,R2)",
                                              "aab (R4,b)"};
    const std::vector<std::string> altflex = {"aaa a^3", "ba (b,a)", "baaa (F2,F1)[1..4]", "aaabaaa (F1,F3)",
                                              "b (b,F0)"};
    const std::vector<std::string> altmax = {"aaa a^3", "ba (b,a)", "baaa (R2,R1)[1..4]", "aaab (R1,R2)[1..4]",
                                             "aaab (R1,b)"};
    if (rendered(parse(t, Scheme::lzdr), t) != greedy) o.pass = false, o.detail += "greedy differs; ";
    if (rendered(parse(t, Scheme::stdflex), t) != stdflex) o.pass = false, o.detail += "stdflex differs; ";
    if (rendered(parse(t, Scheme::altflex), t) != altflex) o.pass = false, o.detail += "altflex differs; ";
    const Parsing am = parse(t, Scheme::altmax);
    if (rendered(am, t) != altmax) o.pass = false, o.detail += "altmax differs; ";
    std::vector<std::string> refs;
    for (const Span& r : am.references) refs.emplace_back(t.substr(r.begin, r.end));
    if (refs != std::vector<std::string>{"aaa", "ba", "baaaa", "aaaba", "aaab"}) {
        o.pass = false;
        o.detail += "altmax references differ; ";
    }
    o.detail += "greedy 6, stdflex/altflex/altmax 5 factors each";
    return o;
}

Outcome stdflex_dominance() {
    std::mt19937_64 rng(2024);
    std::size_t violations = 0;
    std::size_t gained = 0;
    const std::size_t count = 10000;
    for (std::size_t i = 0; i < count; ++i) {
        const std::string s = oracle::random_string(rng, 1 + rng() % 512, 2 + static_cast<unsigned>(rng() % 7));
        const Text t(s);
        const std::size_t flex = parse(t, Scheme::stdflex).size();
        const std::size_t greedy = parse(t, Scheme::lzdr).size();
        if (flex > greedy) ++violations;
        if (flex < greedy) ++gained;
    }
    return {violations == 0, std::to_string(count) + " strings, " + std::to_string(violations) + " violations, " +
                                 std::to_string(gained) + " strictly smaller"};
}

Outcome oracle_equivalence() {
    std::mt19937_64 rng(77);
    std::vector<std::string> corpus = oracle::fuzz_corpus(2000, 78);
    while (corpus.size() < 5000) {
        const unsigned sigmas[] = {1, 2, 3, 4, 8, 256};
        corpus.push_back(oracle::random_string(rng, rng() % 201, sigmas[rng() % std::size(sigmas)]));
    }
    std::size_t mismatches = 0;
    std::string first;
    for (std::string& s : corpus) {
        if (s.size() > 200) s.resize(200);
        const Text t(s);
        for (const Scheme scheme : {Scheme::lzd, Scheme::lzdp, Scheme::lzdr}) {
            const std::string why = oracle::compare_greedy(s, parse(t, scheme));
            if (!why.empty()) {
                if (first.empty()) first = std::string(scheme_name(scheme)) + " on \"" + s + "\": " + why;
                ++mismatches;
            }
        }
    }
    return {mismatches == 0,
            std::to_string(corpus.size()) + " strings x 3 schemes, " + std::to_string(mismatches) + " mismatches" +
                (first.empty() ? "" : " (" + first + ")")};
}

Outcome run_family() {
    Outcome o;
    for (std::size_t k = 1; k <= 16; ++k) {
        const std::string s((std::size_t{1} << (k + 1)) - 2, 'a');
        const Text t(s);
        if (parse(t, Scheme::lzd).size() != k) {
            o.pass = false;
            o.detail += "LZD fails at k=" + std::to_string(k) + "; ";
        }
    }
    const std::size_t n_max = 100000;
    const std::string run(n_max, 'a');
    std::size_t bad = 0;
    for (std::size_t n = 2; n <= n_max; ++n) {
        const Text t(std::string_view(run).substr(0, n));
        if (parse(t, Scheme::lzdr).size() != 1) ++bad;
    }
    if (bad != 0) o.pass = false;
    o.detail += "LZD k factors for k=1..16; LZDR single factor failures for n=2..1e5: " + std::to_string(bad);
    return o;
}

Outcome round_trip(const std::vector<std::string>& corpus) {
    std::vector<std::string> inputs = corpus;
    inputs.push_back(generate_sk(64));
    inputs.push_back(kExample);
    inputs.push_back(kFlexExample);
    std::size_t failures = 0;
    std::size_t checked = 0;
    for (const std::string& s : inputs) {
        const Text t(s);
        for (const Scheme scheme : kAllSchemes) {
            ++checked;
            try {
                if (decode(encode(parse(t, scheme))) != s) ++failures;
            } catch (const std::exception&) {
                ++failures;
            }
        }
    }
    return {failures == 0, std::to_string(checked) + " (input, scheme) pairs incl. S_64, " + std::to_string(failures) +
                               " failures"};
}

Outcome collage(const std::vector<std::string>& corpus) {
    Outcome o;
    std::size_t failures = 0;
    for (const std::string& s : corpus) {
        const Text t(s);
        for (const Scheme scheme : {Scheme::lzd, Scheme::lzdp, Scheme::lzdr}) {
            if (expand(to_collage(parse(t, scheme))) != s) ++failures;
        }
    }
    std::vector<double> ks;
    std::vector<double> sizes;
    std::ostringstream d;
    d << "fuzz expansion failures " << failures << "; S_k sizes";
    for (std::size_t k = 8; k <= 64; k *= 2) {
        const std::string s = generate_sk(k);
        const Text t(s);
        const CollageSystem cs = to_collage(parse(t, Scheme::lzdr));
        if (expand(cs) != s || cs.size() > 4 * (6 * k + 3)) o.pass = false;
        ks.push_back(static_cast<double>(k));
        sizes.push_back(static_cast<double>(cs.size()));
        d << " k=" << k << ":" << cs.size();
    }
    const double n = static_cast<double>(ks.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < ks.size(); ++i) {
        sx += ks[i];
        sy += sizes[i];
        sxx += ks[i] * ks[i];
        sxy += ks[i] * sizes[i];
    }
    const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    d << "; slope " << slope << " (bound 24)";
    if (failures != 0 || slope > 4 * 6.0 || slope <= 0) o.pass = false;
    o.detail = d.str();
    return o;
}

std::string periodic_with_noise(std::mt19937_64& rng, std::size_t n, std::size_t one_in) {
    const std::string unit = oracle::random_string(rng, 37, 4);
    std::string s;
    while (s.size() < n) s += unit;
    s.resize(n);
    for (auto& c : s) {
        if (rng() % one_in == 0) c = 'x';
    }
    return s;
}

std::string thue_morse(std::size_t n) {
    std::string s(n, 'a');
    for (std::size_t i = 0; i < n; ++i) s[i] = std::popcount(i) % 2 ? 'b' : 'a';
    return s;
}

// Work per byte for the prefixes of length 2^10 .. 2^20 of each input; the
// largest ratio between consecutive sizes.
double worst_ratio(const std::string& text, Scheme scheme, double& max_per_byte) {
    std::uint64_t prev = 0;
    double worst = 0;
    for (std::size_t n = std::size_t{1} << 10; n <= text.size(); n *= 2) {
        const Text t(std::string_view(text).substr(0, n));
        reset_work_counters();
        parse(t, scheme);
        const std::uint64_t work = work_counters().total();
        max_per_byte = std::max(max_per_byte, static_cast<double>(work) / static_cast<double>(n));
        if (prev != 0) worst = std::max(worst, static_cast<double>(work) / static_cast<double>(prev));
        prev = work;
    }
    return worst;
}

Outcome linear_work() {
    Outcome o;
    std::ostringstream d;
    d.precision(3);
    std::mt19937_64 rng(99);
    const std::size_t top = std::size_t{1} << 20;
    const std::pair<const char*, std::string> inputs[] = {
        {"random2", oracle::random_string(rng, top, 2)},
        {"random4", oracle::random_string(rng, top, 4)},
        {"random256", oracle::random_string(rng, top, 256)},
        {"fibonacci", oracle::fibonacci_word(top)},
        {"thue-morse", thue_morse(top)},
        {"run", std::string(top, 'a')},
        {"periodic", periodic_with_noise(rng, top, 128)},
    };
    double worst = 0;
    double max_c = 0;
    for (const auto& [name, text] : inputs) {
        for (const Scheme scheme : {Scheme::lzdp, Scheme::lzdr}) {
            const double ratio = worst_ratio(text, scheme, max_c);
            worst = std::max(worst, ratio);
            if (ratio > 2.5) {
                o.pass = false;
                d << name << "/" << scheme_name(scheme) << " ratio " << ratio << "; ";
            }
        }
    }
    d << "max counter(2n)/counter(n) " << worst << ", C = max counter/n " << max_c;
    double sparse_c = 0;
    const double sparse = worst_ratio(periodic_with_noise(rng, top, top / 64), Scheme::lzdr, sparse_c);
    d << "; not asserted: periodic with 64 noise bytes, ratio " << sparse << ", counter/n <= " << sparse_c;
    o.detail = d.str();
    return o;
}

Outcome corpus_report(const std::vector<std::string>& corpus) {
    std::mt19937_64 rng(5);
    std::vector<std::pair<std::string, std::string>> files = {
        {"fibonacci", oracle::fibonacci_word(50000)},
        {"random4", oracle::random_string(rng, 50000, 4)},
        {"sk32", generate_sk(32)},
    };
    std::string mixed;
    for (const auto& s : corpus) mixed += s;
    files.emplace_back("fuzz-concat", mixed);
    std::printf("  report: file n lzd lzd+ lzdr stdflex altflex altmax (relative to lzd, %%)\n");
    bool consistent = true;
    for (const auto& [name, data] : files) {
        const Text t(data);
        const double lzd = static_cast<double>(parse(t, Scheme::lzd).size());
        std::printf("  report: %s %zu", name.c_str(), data.size());
        std::size_t prev_z = 0;
        for (const Scheme s : {Scheme::lzd, Scheme::lzdp, Scheme::lzdr, Scheme::stdflex, Scheme::altflex,
                               Scheme::altmax}) {
            const Parsing p = parse(t, s);
            if (!check_parsing(t, p).empty()) consistent = false;
            if (s == Scheme::stdflex && p.size() > prev_z) consistent = false;
            if (s == Scheme::lzdr) prev_z = p.size();
            std::printf(" %+.2f", 100.0 * (static_cast<double>(p.size()) - lzd) / lzd);
        }
        std::printf("\n");
    }
    return {consistent, "report only; all parsings valid and stdflex <= lzdr on every file"};
}

Outcome lz78r(const std::vector<std::string>& corpus) {
    std::size_t failures = 0;
    for (const std::string& s : corpus) {
        const Text t(s);
        const Parsing p = parse(t, Scheme::lz78r);
        if (!check_parsing(t, p).empty()) ++failures;
        else if (decode(encode(p)) != s) ++failures;
        else if (oracle::lengths_of(p) != oracle::lz78r_lengths(s)) ++failures;
    }
    return {failures == 0,
            std::to_string(corpus.size()) + " strings: tiling, round trip, per-step maximality; " +
                std::to_string(failures) + " failures"};
}

}  // namespace

int main() {
    const std::vector<std::string> corpus = oracle::fuzz_corpus(1500, 4242);
    struct Criterion {
        int id;
        const char* name;
        std::function<Outcome()> run;
    };
    const Criterion criteria[] = {
        {1, "worked examples exact", worked_examples},
        {2, "lower-bound string counts", sk_counts},
        {3, "flexible example exact", flex_example},
        {4, "stdflex never worse than greedy", stdflex_dominance},
        {5, "greedy parsers equal brute force", oracle_equivalence},
        {6, "runs of one byte", run_family},
        {7, "encode/decode round trip", [&] { return round_trip(corpus); }},
        {8, "collage export", [&] { return collage(corpus); }},
        {9, "linear work counters", linear_work},
        {10, "corpus report", [&] { return corpus_report(corpus); }},
        {11, "lz78r decision rule", [&] { return lz78r(corpus); }},
    };
    int failed = 0;
    for (const Criterion& c : criteria) {
        const auto start = Clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        std::printf("%s %2d %s: %s [%.2f s]\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(),
                    seconds_since(start));
        std::fflush(stdout);
        failed += o.pass ? 0 : 1;
    }
    std::printf("%d of %zu criteria failed\n", failed, std::size(criteria));
    return failed == 0 ? 0 : 1;
}
