/*
   Copyright 2026 The cppforge Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/


// cppforge command-line entry point.

#include <unistd.h>

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <cppforge/cppforge.hpp>

namespace {

using namespace cppforge;

constexpr int kExitOk = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;

struct Common {
    std::string out;
    bool no_timing = false;
};

ProgressFn terminal_progress(const char* label) {
    if (!isatty(STDERR_FILENO)) return {};
    return [label](std::uint64_t done, std::uint64_t total) {
        const double pct = total ? 100.0 * static_cast<double>(done) / static_cast<double>(total) : 100.0;
        std::fprintf(stderr, "\r%s: %llu / %llu (%.1f%%)", label, static_cast<unsigned long long>(done),
                     static_cast<unsigned long long>(total), pct);
        std::fflush(stderr);
    };
}

bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

// Writes the structured report when --out is given; the extension picks the format.
void write_report(const Common& c, const Json& json, const std::string& csv) {
    if (c.out.empty()) return;
    std::ofstream os(c.out, std::ios::binary);
    if (!os) fail(ErrorCode::invalid_argument, "cannot open '" + c.out + "' for writing");
    if (ends_with(c.out, ".csv")) os << csv;
    else if (ends_with(c.out, ".json")) os << json.dump(2) << '\n';
    else fail(ErrorCode::invalid_argument, "--out must end in .json or .csv");
}

wide_t wide_arg(const std::string& name, const std::string& text) {
    const auto v = parse_wide(text);
    if (!v) fail(ErrorCode::invalid_argument, "--" + name + " expects a non-negative integer, got '" + text + "'");
    return *v;
}

std::string field_line(const Field& f) {
    return format_field_spec(f) + (f.modulus_is_default() ? " (default modulus)" : " (given modulus)");
}

int cmd_field(std::uint32_t p, unsigned n, const std::string& mod, const Common& c) {
    std::optional<std::vector<std::uint32_t>> m;
    if (!mod.empty()) m = parse_coefficient_list(mod);
    const Field f = Field::build(p, n, m);
    std::cout << "field      " << field_line(f) << '\n'
              << "size       " << to_string(f.size()) << '\n'
              << "backend    " << backend_name(f.backend()) << '\n';
    if (auto g = f.generator()) std::cout << "generator  " << to_string(*g) << '\n';
    Json j;
    j["field"] = field_json(f, f.modulus_is_default() ? "default" : "given");
    j["size"] = to_string(f.size());
    j["backend"] = backend_name(f.backend());
    if (auto g = f.generator()) j["generator"] = to_string(*g);
    j["version"] = kVersion;
    write_report(c, j, "p,n,size\n" + std::to_string(p) + ',' + std::to_string(n) + ',' + to_string(f.size()) + '\n');
    return kExitOk;
}

int cmd_count(std::uint32_t p, unsigned k, unsigned r, const std::string& method_text, bool list, unsigned jobs,
              const Common& c) {
    const auto method = parse_method(method_text);
    if (!method) fail(ErrorCode::invalid_argument, "--method must be direct, ha or both");
    RunOptions opt;
    opt.jobs = jobs;
    opt.progress = terminal_progress("count-cpp");
    CppReport rep = [&] {
        try {
            return count_cpp(p, k, r, *method, opt);
        } catch (...) {
            if (opt.progress) std::fputc('\n', stderr);
            throw;
        }
    }();
    if (opt.progress) std::fputc('\n', stderr);
    std::cout << "field      " << field_line(rep.field) << '\n'
              << "d          " << to_string(rep.d) << '\n'
              << "method     " << method_name(rep.method) << '\n'
              << "count      " << rep.count << '\n';
    for (const auto& [tag, n] : rep.conditions) std::cout << "  " << std::left << std::setw(10) << tag << n << '\n';
    if (list) {
        std::cout << "elements  ";
        for (Elem a : rep.elements) std::cout << ' ' << to_string(a);
        std::cout << '\n';
    }
    if (!c.no_timing) std::cout << "seconds    " << std::fixed << std::setprecision(3) << rep.seconds << '\n';
    write_report(c, to_json(rep, list, !c.no_timing), to_csv(rep));
    return kExitOk;
}

// Family parameters come as --p style options or as trailing key=value words.
void apply_kv(VerifyParams& vp, const std::vector<std::string>& extra) {
    for (const auto& word : extra) {
        const auto eq = word.find('=');
        if (eq == std::string::npos) fail(ErrorCode::invalid_argument, "expected key=value, got '" + word + "'");
        const std::string key = word.substr(0, eq), val = word.substr(eq + 1);
        if (key == "preset") {
            vp.preset = val;
            continue;
        }
        const auto v = parse_wide(val);
        if (!v || *v > 0xffffffffu) fail(ErrorCode::invalid_argument, "bad value in '" + word + "'");
        const auto u = static_cast<std::uint32_t>(*v);
        if (key == "p") vp.p = u;
        else if (key == "k") vp.k = u;
        else if (key == "r") vp.r = u;
        else if (key == "i") vp.i = u;
        else if (key == "t") vp.t = u;
        else fail(ErrorCode::invalid_argument, "unknown parameter '" + key + "'");
    }
}

int cmd_verify(const std::string& family, const VerifyParams& vp, const Common& c) {
    const VerifyReport rep = verify_family(family, vp);
    std::cout << "family     " << rep.family << '\n' << "params     " << rep.params.dump() << '\n';
    if (!rep.d.empty()) std::cout << "d          " << rep.d << '\n';
    std::cout << "check      " << rep.check << '\n' << "tested     " << rep.tested << '\n';
    if (!rep.notes.empty()) std::cout << "notes      " << rep.notes.dump() << '\n';
    const std::size_t shown = std::min<std::size_t>(rep.failures.size(), 20);
    for (std::size_t i = 0; i < shown; ++i) std::cout << "  FAIL " << rep.failures[i] << '\n';
    if (rep.failures.size() > shown) std::cout << "  ... " << rep.failures.size() - shown << " more\n";
    std::cout << "result     " << (rep.skipped ? "skipped" : rep.pass() ? "pass" : "counterexample") << '\n';
    write_report(c, to_json(rep, !c.no_timing), to_csv(rep));
    return rep.pass() ? kExitOk : kExitCounterexample;
}

int cmd_conjecture(int id, std::uint32_t p, std::optional<unsigned> r, unsigned kmin, unsigned kmax,
                   std::optional<std::uint64_t> budget, const Common& c) {
    const ConjectureReport rep = run_conjecture(id, p, r, kmin, kmax, budget);
    std::cout << "conjecture " << rep.id << "  p=" << rep.p << " r=" << rep.r << '\n';
    std::string csv = "k,pass\n";
    for (const auto& e : rep.per_k) {
        std::cout << "  k=" << e["k"].get<unsigned>() << "  " << (e["pass"].get<bool>() ? "pass" : "FAIL");
        if (id == 1) std::cout << "  witnesses=" << e["witnesses"].get<std::uint64_t>() << " scanned=" << e["scanned"].get<std::uint64_t>();
        else std::cout << "  tested=" << e["tested"].get<std::uint64_t>();
        std::cout << '\n';
        csv += std::to_string(e["k"].get<unsigned>()) + ',' + (e["pass"].get<bool>() ? "pass" : "fail") + '\n';
    }
    write_report(c, to_json(rep, !c.no_timing), csv);
    return rep.pass ? kExitOk : kExitCounterexample;
}

int cmd_walsh(std::uint32_t p, unsigned k, const std::string& s, const std::string& d, const std::string& a, bool all,
              const Common& c) {
    std::optional<wide_t> sv, dv, av;
    if (!s.empty()) sv = wide_arg("s", s);
    if (!d.empty()) dv = wide_arg("d", d);
    if (!a.empty()) av = wide_arg("a", a);
    const WalshReport rep = run_walsh(p, k, sv, dv, av, all);
    std::cout << "field      " << field_line(rep.field) << '\n' << "s          " << to_string(rep.s) << '\n';
    std::cout << std::left << std::setw(12) << "a" << std::setw(6) << "N" << std::setw(10) << "value" << "note\n";
    for (const auto& e : rep.entries) {
        std::cout << std::setw(12) << to_string(e.a) << std::setw(6) << e.N << std::setw(10) << e.value;
        if (e.in_v) std::cout << "in V ";
        if (e.out_of_scope) std::cout << "out-of-scope ";
        if (e.match) std::cout << (*e.match ? "direct ok" : "direct MISMATCH " + *e.direct);
        std::cout << '\n';
    }
    write_report(c, to_json(rep, !c.no_timing), to_csv(rep));
    return rep.all_match() ? kExitOk : kExitCounterexample;
}

int exit_for(const Error& e) {
    switch (e.code()) {
        case ErrorCode::cap_exceeded:
        case ErrorCode::field_too_large:
        case ErrorCode::field_too_large_for_charsum: return kExitCap;
        default: return kExitUsage;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cppforge: complete permutation polynomials over finite fields"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kVersion));
    Common common;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--out", common.out, "Write a report (.json or .csv)");
        sub->add_flag("--no-timing", common.no_timing, "Report zero seconds (byte-stable output)");
    };

    std::uint32_t p = 0;
    unsigned n = 0, k = 0, r = 0, jobs = 0;
    std::string mod, method = "ha";
    bool list = false;

    auto* field = app.add_subcommand("field", "Build a field and describe it");
    field->add_option("--p", p, "Characteristic")->required();
    field->add_option("--n", n, "Extension degree")->required();
    field->add_option("--mod", mod, "Modulus coefficients c0,c1,...,cn (ascending)");
    add_common(field);

    auto* count = app.add_subcommand("count-cpp", "Count a with a^-1 x^d a CPP, d = (p^rk-1)/(p^k-1) + 1");
    count->add_option("--p", p)->required();
    count->add_option("--k", k)->required();
    count->add_option("--r", r)->required();
    count->add_option("--method", method, "direct, ha or both")->check(CLI::IsMember({"direct", "ha", "both"}));
    count->add_flag("--list", list, "Include the coefficients");
    count->add_option("--jobs", jobs, "Worker threads (default: all cores)");
    add_common(count);

    VerifyParams vp;
    std::string family;
    std::vector<std::string> extra;
    auto* verify = app.add_subcommand("verify", "Check every coefficient a family produces");
    verify->add_option("--family", family, "Family name")->required()->check(CLI::IsMember(family_names()));
    verify->add_option("--p", vp.p);
    verify->add_option("--k", vp.k);
    verify->add_option("--r", vp.r);
    verify->add_option("--i", vp.i);
    verify->add_option("--t", vp.t);
    verify->add_option("--preset", vp.preset, "zero, monomial or dickson_quartic");
    verify->add_option("params", extra, "Extra key=value parameters");
    add_common(verify);

    int conj_id = 0;
    std::optional<unsigned> conj_r;
    unsigned kmin = 1, kmax = 1;
    std::optional<std::uint64_t> budget;
    auto* conj = app.add_subcommand("conjecture", "Run a conjecture over a range of k");
    conj->add_option("--id", conj_id)->required()->check(CLI::IsMember({1, 2}));
    conj->add_option("--p", p)->required();
    conj->add_option("--r", conj_r);
    conj->add_option("--kmin", kmin)->required();
    conj->add_option("--kmax", kmax)->required();
    conj->add_option("--budget", budget, "Sample this many coefficients instead of scanning all");
    add_common(conj);

    std::string ws, wd, wa;
    bool wall = false;
    auto* walsh = app.add_subcommand("walsh", "Walsh values of Tr(x^d) for Niho exponents");
    walsh->add_option("--p", p)->required();
    walsh->add_option("--k", k)->required();
    auto* s_opt = walsh->add_option("--s", ws);
    auto* d_opt = walsh->add_option("--d", wd);
    s_opt->excludes(d_opt);
    auto* a_opt = walsh->add_option("--a", wa);
    auto* all_opt = walsh->add_flag("--all", wall);
    a_opt->excludes(all_opt);
    add_common(walsh);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*field) return cmd_field(p, n, mod, common);
        if (*count) return cmd_count(p, k, r, method, list, jobs, common);
        if (*verify) {
            apply_kv(vp, extra);
            return cmd_verify(family, vp, common);
        }
        if (*conj) return cmd_conjecture(conj_id, p, conj_r, kmin, kmax, budget, common);
        if (*walsh) return cmd_walsh(p, k, ws, wd, wa, wall, common);
    } catch (const MismatchError& e) {
        std::cerr << "cppforge: " << e.what() << '\n';
        return kExitCounterexample;
    } catch (const Error& e) {
        std::cerr << "cppforge: " << e.what() << '\n';
        return exit_for(e);
    }
    return kExitUsage;
}
