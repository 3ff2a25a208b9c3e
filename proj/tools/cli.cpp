#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <future>
#include <iostream>
#include <iterator>
#include <sstream>
#include <thread>

#include "lzdr/codec.hpp"
#include "lzdr/counters.hpp"
#include "lzdr/greedy.hpp"
#include "lzdr/lowerbound.hpp"

namespace lzdr::cli {

namespace {

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_all(const std::string& path, std::istream& in) {
    if (path == "-") return {std::istreambuf_iterator<char>(in), {}};
    std::ifstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot read " + path);
    std::ostringstream s;
    s << f.rdbuf();
    if (f.bad()) throw IoError("cannot read " + path);
    return s.str();
}

void write_all(const std::string& path, std::string_view data, std::ostream& out) {
    if (path == "-") {
        out.write(data.data(), static_cast<std::streamsize>(data.size()));
        out.flush();
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f || !f.write(data.data(), static_cast<std::streamsize>(data.size()))) throw IoError("cannot write " + path);
}

Scheme to_scheme(const std::string& name) {
    const auto s = scheme_from_name(name);
    if (!s) throw CLI::ValidationError("--scheme", "unknown scheme " + name);
    return *s;
}

std::string all_scheme_names() {
    std::string s;
    for (const Scheme x : kAllSchemes) {
        if (!s.empty()) s += ',';
        s += scheme_name(x);
    }
    return s;
}

struct SchemeResult {
    Scheme scheme;
    std::size_t z = 0;
};

struct FileResult {
    std::string path;
    std::size_t n = 0;
    std::size_t lzd = 0;
    std::vector<SchemeResult> results;
};

FileResult compare_one(const std::string& path, const std::string& data, const std::vector<Scheme>& schemes) {
    const Text t(data);
    FileResult r{path, data.size(), parse(t, Scheme::lzd).size(), {}};
    for (const Scheme s : schemes) r.results.push_back({s, s == Scheme::lzd ? r.lzd : parse(t, s).size()});
    return r;
}

double relative(std::size_t z, std::size_t lzd) {
    if (lzd == 0) return 0.0;
    return 100.0 * (static_cast<double>(z) - static_cast<double>(lzd)) / static_cast<double>(lzd);
}

std::string percent(double v) {
    std::ostringstream s;
    s.setf(std::ios::fixed);
    s.precision(2);
    s << v;
    return s.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"LZD-family factorization toolkit"};
    app.require_subcommand(1);

    std::string scheme_arg = "lzdr";
    std::string format = "tsv";
    std::string input;
    std::string out_path;
    bool verify = false;
    bool counters = false;

    auto* parse_cmd = app.add_subcommand("parse", "Parse a file and report the factor count");
    parse_cmd->add_option("input", input, "Input file, - for stdin")->required();
    parse_cmd->add_option("--scheme", scheme_arg, "One of " + all_scheme_names());
    parse_cmd->add_option("--out", out_path, "Write the encoded parsing (.lzdx), - for stdout");
    parse_cmd->add_option("--format", format, "tsv or json")->check(CLI::IsMember({"tsv", "json"}));
    parse_cmd->add_flag("--verify", verify, "Check the parsing and its round trip");
    parse_cmd->add_flag("--counters", counters, "Report trie traversal steps and character comparisons");

    std::vector<std::string> inputs;
    std::vector<std::string> compare_schemes;
    auto* compare_cmd = app.add_subcommand("compare", "Factor counts of several schemes relative to LZD");
    compare_cmd->add_option("inputs", inputs, "Input files")->required();
    compare_cmd->add_option("--scheme", compare_schemes, "Schemes to report (repeatable, default all)");
    compare_cmd->add_option("--format", format, "tsv or json")->check(CLI::IsMember({"tsv", "json"}));

    std::size_t k = 0;
    auto* sk_cmd = app.add_subcommand("sk", "Write the lower-bound string S_k");
    sk_cmd->add_option("k", k, "Power of two, at least 4")->required();
    sk_cmd->add_option("--out", out_path, "Output file, - for stdout");
    sk_cmd->add_flag("--verify", verify, "Compare factor counts of S_4 .. S_k with the reference counts");

    auto* decompress_cmd = app.add_subcommand("decompress", "Decode an .lzdx file");
    decompress_cmd->add_option("input", input, "Input file, - for stdin")->required();
    decompress_cmd->add_option("--out", out_path, "Output file, - for stdout");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? ok : usage;
    }

    try {
        if (parse_cmd->parsed()) {
            const Scheme scheme = to_scheme(scheme_arg);
            const std::string data = read_all(input, in);
            const Text t(data);
            reset_work_counters();
            const Parsing p = parse(t, scheme);
            const WorkCounters work = work_counters();
            std::ostream& report = out_path == "-" ? err : out;
            bool verified = true;
            if (verify) {
                verified = check_parsing(t, p).empty() && decode(encode(p)) == data;
            }
            if (!out_path.empty()) {
                const auto bytes = encode(p);
                write_all(out_path, {reinterpret_cast<const char*>(bytes.data()), bytes.size()}, out);
            }
            if (format == "json") {
                nlohmann::json j = {{"file", input},
                                    {"scheme", scheme_name(scheme)},
                                    {"n", data.size()},
                                    {"z", p.size()},
                                    {"encoded_size", encoded_size(p)}};
                if (verify) j["verified"] = verified;
                if (counters) {
                    j["traversal_steps"] = work.traversal_steps;
                    j["char_comparisons"] = work.char_comparisons;
                }
                report << j.dump() << '\n';
            } else {
                report << "file\tscheme\tn\tz\tencoded_size";
                if (verify) report << "\tverified";
                if (counters) report << "\ttraversal_steps\tchar_comparisons";
                report << '\n'
                       << input << '\t' << scheme_name(scheme) << '\t' << data.size() << '\t' << p.size() << '\t'
                       << encoded_size(p);
                if (verify) report << '\t' << (verified ? "yes" : "no");
                if (counters) report << '\t' << work.traversal_steps << '\t' << work.char_comparisons;
                report << '\n';
            }
            return verified ? ok : decode_failure;
        }

        if (compare_cmd->parsed()) {
            std::vector<Scheme> schemes;
            for (const auto& s : compare_schemes) schemes.push_back(to_scheme(s));
            if (schemes.empty()) schemes.assign(std::begin(kAllSchemes), std::end(kAllSchemes));
            std::vector<std::string> data;
            for (const auto& path : inputs) data.push_back(read_all(path, in));
            std::vector<FileResult> done;
            const std::size_t width = std::max(1u, std::thread::hardware_concurrency());
            for (std::size_t start = 0; start < inputs.size(); start += width) {
                std::vector<std::future<FileResult>> jobs;
                for (std::size_t i = start; i < std::min(inputs.size(), start + width); ++i) {
                    jobs.push_back(std::async(std::launch::async, compare_one, std::cref(inputs[i]),
                                              std::cref(data[i]), std::cref(schemes)));
                }
                for (auto& job : jobs) done.push_back(job.get());
            }
            nlohmann::json rows = nlohmann::json::array();
            if (format == "tsv") out << "file\tn\tscheme\tz\trelative_to_lzd_pct\n";
            for (const FileResult& r : done) {
                nlohmann::json results = nlohmann::json::array();
                for (const auto& s : r.results) {
                    const double rel = relative(s.z, r.lzd);
                    if (format == "tsv") {
                        out << r.path << '\t' << r.n << '\t' << scheme_name(s.scheme) << '\t' << s.z << '\t'
                            << percent(rel) << '\n';
                    }
                    results.push_back({{"scheme", scheme_name(s.scheme)}, {"z", s.z}, {"relative_to_lzd_pct", rel}});
                }
                rows.push_back({{"file", r.path}, {"n", r.n}, {"results", results}});
            }
            if (format == "json") out << rows.dump(2) << '\n';
            return ok;
        }

        if (sk_cmd->parsed()) {
            std::string s;
            try {
                s = generate_sk(k);
            } catch (const std::invalid_argument& e) {
                err << e.what() << '\n';
                return usage;
            }
            write_all(out_path.empty() ? "-" : out_path, s, out);
            if (!verify) return ok;
            std::ostream& report = out_path.empty() || out_path == "-" ? err : out;
            report << "k\tn\tlzd\tlzd+\tlzdr\t6k+3\ttable\n";
            for (const auto& row : verify_sk_counts(k)) {
                const char* status = expected_lzd_count(row.k) == 0 ? "no reference"
                                   : row.matches_table             ? "match"
                                                                   : "MISMATCH";
                report << row.k << '\t' << row.n << '\t' << row.lzd << '\t' << row.lzdp << '\t' << row.lzdr << '\t'
                       << 6 * row.k + 3 << '\t' << status << '\n';
            }
            return ok;
        }

        if (decompress_cmd->parsed()) {
            const std::string data = read_all(input, in);
            const std::string text =
                decode({reinterpret_cast<const std::uint8_t*>(data.data()), data.size()});
            write_all(out_path.empty() ? "-" : out_path, text, out);
            return ok;
        }
    } catch (const CLI::ValidationError& e) {
        err << e.what() << '\n';
        return usage;
    } catch (const IoError& e) {
        err << e.what() << '\n';
        return io;
    } catch (const DecodeError& e) {
        err << "decode error: " << e.what() << '\n';
        return decode_failure;
    }
    return usage;
}

}  // namespace lzdr::cli
