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

/**
 * @file harness.hpp
 * @brief Report-producing drivers behind the command line: exhaustive CPP
 *        counts, family verification, conjecture runs and Walsh values.
 *
 * Every driver returns a plain struct plus a JSON rendering with a fixed key
 * order, so identical arguments give byte-identical reports (timing aside).
 */

#ifndef CPPFORGE_HARNESS_HPP
#define CPPFORGE_HARNESS_HPP

#include <algorithm>
#include <atomic>
#include <chrono>
#include <condition_variable>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "families.hpp"
#include "field.hpp"
#include "ha_dickson.hpp"
#include "niho.hpp"
#include "perm_oracle.hpp"

namespace cppforge {

inline constexpr const char* kVersion = "0.1.0";

using Json = nlohmann::ordered_json;

/// Raised when two methods disagree on a coefficient.
class MismatchError : public std::runtime_error {
public:
    MismatchError(Elem a, const std::string& what) : std::runtime_error(what), a_(a) {}
    Elem coefficient() const { return a_; }

private:
    Elem a_;
};

enum class Method { direct, ha, both };

inline const char* method_name(Method m) {
    switch (m) {
        case Method::direct: return "direct";
        case Method::ha: return "ha";
        case Method::both: return "both";
    }
    return "?";
}

inline std::optional<Method> parse_method(std::string_view s) {
    if (s == "direct") return Method::direct;
    if (s == "ha") return Method::ha;
    if (s == "both") return Method::both;
    return std::nullopt;
}

using ProgressFn = std::function<void(std::uint64_t done, std::uint64_t total)>;

struct RunOptions {
    unsigned jobs = 0;  // 0: hardware concurrency
    ProgressFn progress;
    std::chrono::milliseconds progress_interval{2000};
};

inline unsigned resolve_jobs(unsigned jobs) {
    if (jobs != 0) return jobs;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

/// Runs body(v) for v in [lo, hi) split into contiguous ranges, one per
/// worker; returns the per-range outputs in range order.
template <class T, class Body>
std::vector<T> parallel_ranges(wide_t lo, wide_t hi, const RunOptions& opt, Body&& body) {
    const unsigned jobs = std::max(1u, std::min<unsigned>(resolve_jobs(opt.jobs), static_cast<unsigned>(
                                                              std::max<wide_t>(1, std::min<wide_t>(hi - lo, 1024)))));
    std::vector<T> out(jobs);
    std::atomic<std::uint64_t> done{0};
    std::atomic<bool> finished{false};
    std::exception_ptr error;
    std::mutex mu;
    std::condition_variable cv;
    const wide_t span = hi - lo;
    auto worker = [&](unsigned w) {
        const wide_t a = lo + span * w / jobs, b = lo + span * (w + 1) / jobs;
        try {
            for (wide_t v = a; v < b; ++v) {
                body(v, out[w]);
                done.fetch_add(1, std::memory_order_relaxed);
            }
        } catch (...) {
            std::lock_guard lock(mu);
            if (!error) error = std::current_exception();
        }
    };
    std::vector<std::thread> threads;
    for (unsigned w = 1; w < jobs; ++w) threads.emplace_back(worker, w);
    std::thread reporter;
    if (opt.progress) {
        reporter = std::thread([&] {
            std::unique_lock lock(mu);
            while (!cv.wait_for(lock, opt.progress_interval, [&] { return finished.load(); }))
                opt.progress(done.load(), static_cast<std::uint64_t>(span));
        });
    }
    worker(0);
    for (auto& t : threads) t.join();
    {
        std::lock_guard lock(mu);
        finished = true;
    }
    cv.notify_all();
    if (reporter.joinable()) reporter.join();
    if (error) std::rethrow_exception(error);
    return out;
}

inline Json field_json(const Field& f, const std::string& source) {
    Json j;
    j["p"] = f.p();
    j["n"] = f.n();
    j["modulus"] = f.modulus();
    j["modulus_source"] = source;
    return j;
}

inline double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// ------------------------------------------------------------ count-cpp

struct CppReport {
    explicit CppReport(Field f) : field(std::move(f)) {}

    Field field;
    std::string modulus_source = "default";
    wide_t d = 0;
    Method method = Method::ha;
    std::uint64_t count = 0;
    std::map<std::string, std::uint64_t> conditions;
    std::vector<Elem> elements;          // ascending
    std::vector<std::string> tags;       // parallel to elements
    double seconds = 0;
};

/// Tag of a good coefficient under the applicable characterisation.
inline std::string condition_tag(const Field& f, Elem a, unsigned k, unsigned r) {
    if (r == 4 && f.p() == 5) return thm_r4_p5_condition(f, a, k).value_or("untagged");
    if (r == 4 && f.p() != 2 && gcd(5, f.subfield_size(k) - 1) == 1)
        return thm_r4_condition(f, a, k).value_or("untagged");
    return "untagged";
}

/// Counts a in F_{p^n}^* with a^{-1} x^d a CPP, d = (p^{rk}-1)/(p^k-1) + 1.
inline CppReport count_cpp(std::uint32_t p, unsigned k, unsigned r, Method method, const RunOptions& opt = {}) {
    const auto t0 = std::chrono::steady_clock::now();
    const wide_t d = dr_exponent(p, k, r);
    Field f = Field::build(p, r * k);
    if (method != Method::ha && f.size() > kTableCap)
        fail(ErrorCode::cap_exceeded, "direct scans are limited to fields of at most 2^22 elements");
    if (f.size() > kScanCap) fail(ErrorCode::cap_exceeded, "field too large for an exhaustive scan");
    const bool gcd_ok = gcd(d, f.group_order()) == 1;
    const HaChecker checker(f, r, k);
    const auto parts = parallel_ranges<std::vector<Elem>>(1, f.size(), opt, [&](wide_t v, std::vector<Elem>& out) {
        const Elem a(v);
        bool good = false;
        if (method == Method::ha) {
            good = checker.check(a);
        } else if (method == Method::direct) {
            good = exponent_pair_is_pp(f, d, a);
        } else {
            const bool h = checker.check(a), dr = exponent_pair_is_pp(f, d, a);
            if (h != dr)
                throw MismatchError(a, "methods disagree at a = " + to_string(a) + " (ha " + (h ? "yes" : "no") +
                                           ", direct " + (dr ? "yes" : "no") + ")");
            good = h;
        }
        if (good && gcd_ok) out.push_back(a);
    });
    CppReport rep{f};
    rep.d = d;
    rep.method = method;
    for (const auto& part : parts) rep.elements.insert(rep.elements.end(), part.begin(), part.end());
    rep.count = rep.elements.size();
    for (Elem a : rep.elements) {
        rep.tags.push_back(condition_tag(f, a, k, r));
        ++rep.conditions[rep.tags.back()];
    }
    rep.seconds = seconds_since(t0);
    return rep;
}

inline Json to_json(const CppReport& r, bool list_elements, bool timing = true) {
    Json j;
    j["field"] = field_json(r.field, r.modulus_source);
    j["d"] = to_string(r.d);
    j["method"] = method_name(r.method);
    j["count"] = r.count;
    Json cond = Json::object();
    for (const auto& [tag, c] : r.conditions) cond[tag] = c;
    j["conditions"] = cond;
    if (list_elements) {
        Json el = Json::array();
        for (Elem a : r.elements) el.push_back(to_string(a));
        j["elements"] = el;
    }
    j["seconds"] = timing ? r.seconds : 0.0;
    j["version"] = kVersion;
    return j;
}

inline std::string to_csv(const CppReport& r) {
    std::ostringstream os;
    os << "a,condition\n";
    for (std::size_t i = 0; i < r.elements.size(); ++i) os << to_string(r.elements[i]) << ',' << r.tags[i] << '\n';
    return os.str();
}

// ---------------------------------------------------------------- verify

struct VerifyParams {
    std::uint32_t p = 3;
    unsigned k = 1;
    unsigned r = 0;
    unsigned i = 1;
    std::uint64_t t = 1;
    std::string preset = "zero";
};

struct VerifyReport {
    std::string family;
    Json params = Json::object();
    Json field = Json::object();
    std::string d;
    std::string check;  // how each coefficient was decided
    std::uint64_t tested = 0;
    std::vector<std::pair<std::string, std::string>> rows;  // (a, outcome)
    std::vector<std::string> failures;
    Json notes = Json::object();
    bool skipped = false;
    double seconds = 0;

    bool pass() const { return failures.empty(); }
};

/// Decides "a^{-1} x^d is a CPP" by the cheapest exact route: a direct scan
/// for fields up to 2^16 elements, the subfield test on h_a above that when
/// d has the (p^{rk}-1)/(p^k-1) + 1 shape, and a direct scan otherwise.
class GoodCoefficient {
public:
    GoodCoefficient(Field f, wide_t d, std::optional<std::pair<unsigned, unsigned>> rk = {})
        : field_(std::move(f)), d_(d), gcd_ok_(gcd(d, field_.group_order()) == 1) {
        if (rk && field_.size() > (wide_t{1} << 16)) ha_.emplace(field_, rk->first, rk->second);
    }

    const char* method() const { return ha_ ? "ha" : "direct"; }

    bool operator()(Elem a) const {
        if (a.is_zero()) fail(ErrorCode::zero_coefficient, "coefficient a must be nonzero");
        if (!gcd_ok_) return false;
        if (ha_) return ha_->check(a);
        return exponent_pair_is_pp(field_, d_, a);
    }

private:
    Field field_;
    wide_t d_;
    bool gcd_ok_;
    std::optional<HaChecker> ha_;
};

namespace detail {

inline Field p3_beta_field(unsigned k) {
    if (k == 1) return Field::build(3, 4, std::vector<std::uint32_t>{2, 2, 0, 0, 1});
    return Field::build(3, 4 * k);
}

inline Field r6_field(std::uint32_t p, unsigned k) {
    if (k == 1) return Field::build(p, 6, std::vector<std::uint32_t>{2, 1, 0, 0, 0, 0, 1});
    return Field::build(p, 6 * k);
}

inline void check_list(VerifyReport& rep, const GoodCoefficient& good, const std::vector<Elem>& coeffs) {
    rep.check = good.method();
    for (Elem a : coeffs) {
        ++rep.tested;
        const bool ok = good(a);
        rep.rows.emplace_back(to_string(a), ok ? "cpp" : "not-cpp");
        if (!ok) rep.failures.push_back("a=" + to_string(a) + " is not a CPP coefficient");
    }
}

/// Predicate scan over all of F^*: tagged => good and good => tagged.
template <class Pred>
void check_characterisation(VerifyReport& rep, const Field& f, const GoodCoefficient& good, Pred&& pred) {
    rep.check = good.method();
    std::map<std::string, std::uint64_t> tags;
    std::uint64_t good_count = 0;
    for (wide_t v = 1; v < f.size(); ++v) {
        const Elem a(v);
        const auto tag = pred(a);
        const bool ok = good(a);
        good_count += ok;
        if (tag) {
            ++rep.tested;
            ++tags[*tag];
            rep.rows.emplace_back(to_string(a), *tag);
            if (!ok) rep.failures.push_back("a=" + to_string(a) + " tagged " + *tag + " but not a CPP coefficient");
        } else if (ok) {
            rep.failures.push_back("a=" + to_string(a) + " is a CPP coefficient but untagged");
        }
    }
    Json tj = Json::object();
    for (const auto& [t, c] : tags) tj[t] = c;
    rep.notes["conditions"] = tj;
    rep.notes["cpp_count"] = good_count;
}

}  // namespace detail

inline const std::vector<std::string>& family_names() {
    static const std::vector<std::string> names{"niho2",     "p3k2",       "r4_general", "r4_p3",  "r4_p3_beta",
                                                "r4_p5",     "r4_p5_vset", "r6_p3",      "r6_p5",  "rp_k1",
                                                "rt_k1",     "multinomial", "conj1",     "conj2"};
    return names;
}

inline VerifyReport verify_family(const std::string& family, const VerifyParams& vp) {
    const auto t0 = std::chrono::steady_clock::now();
    VerifyReport rep;
    rep.family = family;
    const std::uint32_t p = vp.p;
    const unsigned k = vp.k;

    if (family == "niho2" || family == "p3k2") {
        const std::uint32_t pp = family == "p3k2" ? 3 : p;
        const wide_t d = family == "p3k2" ? p3k2_exponent(k) : niho2_exponent(pp, k, vp.i);
        rep.params = {{"p", pp}, {"k", k}};
        if (family == "niho2") rep.params["i"] = vp.i;
        const NihoCtx nc(Field::build(pp, 2 * k));
        rep.field = field_json(nc.field, "default");
        rep.d = to_string(d);
        detail::check_list(rep, GoodCoefficient(nc.field, d), niho2_coefficient_set(nc));
    } else if (family == "r4_general" || family == "r4_p3" || family == "r4_p5") {
        const std::uint32_t pp = family == "r4_p3" ? 3 : family == "r4_p5" ? 5 : p;
        rep.params = {{"p", pp}, {"k", k}};
        const wide_t d = dr_exponent(pp, k, 4);
        Field f = Field::build(pp, 4 * k);
        if (f.size() > kTableCap) fail(ErrorCode::cap_exceeded, "characterisation scans limited to 2^22 elements");
        rep.field = field_json(f, "default");
        rep.d = to_string(d);
        const GoodCoefficient good(f, d, std::pair{4u, k});
        if (family == "r4_general")
            detail::check_characterisation(rep, f, good, [&](Elem a) { return thm_r4_condition(f, a, k); });
        else if (family == "r4_p3")
            detail::check_characterisation(rep, f, good, [&](Elem a) { return coro_p3n4k_condition(f, a, k); });
        else
            detail::check_characterisation(rep, f, good, [&](Elem a) { return thm_r4_p5_condition(f, a, k); });
    } else if (family == "r4_p3_beta") {
        rep.params = {{"p", 3}, {"k", k}};
        Field f = detail::p3_beta_field(k);
        const Elem beta = p3_beta(f);
        rep.field = field_json(f, k == 1 ? "basis-polynomial" : "default");
        const wide_t d = dr_exponent(3, k, 4);
        rep.d = to_string(d);
        rep.notes["beta"] = to_string(beta);
        detail::check_list(rep, GoodCoefficient(f, d, std::pair{4u, k}), coro_p3_beta_all(f, beta, k));
    } else if (family == "r4_p5_vset") {
        rep.params = {{"p", 5}, {"k", k}};
        Field f = Field::build(5, 4 * k);
        rep.field = field_json(f, "default");
        const wide_t d = dr_exponent(5, k, 4);
        rep.d = to_string(d);
        detail::check_list(rep, GoodCoefficient(f, d, std::pair{4u, k}), coro_p5_vset(f, k));
    } else if (family == "r6_p3" || family == "r6_p5") {
        const std::uint32_t pp = family == "r6_p3" ? 3 : 5;
        rep.params = {{"p", pp}, {"k", k}};
        Field f = detail::r6_field(pp, k);
        const Elem beta = r6_beta(f);
        rep.field = field_json(f, k == 1 ? "basis-polynomial" : "default");
        const wide_t d = dr_exponent(pp, k, 6);
        rep.d = to_string(d);
        const GoodCoefficient good(f, d, std::pair{6u, k});
        rep.check = good.method();
        Json unmatched = Json::array();
        std::uint64_t matched = 0;
        const auto& fams = r6_families(pp);
        for (std::size_t fi = 0; fi < fams.size(); ++fi) {
            bool all_match = true;
            for (Elem u : f.subfield_elements(k)) {
                if (u.is_zero()) continue;
                const auto m = coro_r6_generate(f, beta, fi, u, k);
                ++rep.tested;
                const bool ok = good(m.a);
                rep.rows.emplace_back(to_string(m.a), ok ? "cpp" : "not-cpp");
                if (!ok) rep.failures.push_back("family " + std::to_string(fi + 1) + " a=" + to_string(m.a));
                if (m.eta) ++matched;
                else all_match = false;
            }
            if (!all_match) unmatched.push_back(fi + 1);
        }
        rep.notes["families"] = fams.size();
        rep.notes["dickson_matches"] = matched;
        rep.notes["families_without_dickson_match"] = unmatched;
    } else if (family == "rp_k1" || family == "rt_k1") {
        const std::uint64_t t = family == "rp_k1" ? 1 : vp.t;
        rep.params = {{"p", p}, {"t", t}};
        const RtK1 fam = thm_rt_k1(p, t);
        if (fam.field.size() > kTableCap) fail(ErrorCode::cap_exceeded, "direct checks limited to 2^22 elements");
        rep.field = field_json(fam.field, "default");
        rep.d = to_string(fam.d);
        rep.check = "direct";
        for (Elem a : fam.coefficients) {
            ++rep.tested;
            const bool ok = is_cpp_exponent_pair(fam.field, fam.d, a);
            rep.rows.emplace_back(to_string(a), ok ? "cpp" : "not-cpp");
            if (!ok) rep.failures.push_back("a=" + to_string(a));
        }
    } else if (family == "multinomial") {
        const unsigned r = vp.r;
        rep.params = {{"p", p}, {"k", k}, {"r", r}, {"preset", vp.preset}};
        const auto preset = parse_preset(vp.preset);
        if (!preset) fail(ErrorCode::invalid_argument, "unknown preset '" + vp.preset + "'");
        if (r == 0) fail(ErrorCode::invalid_argument, "multinomial needs --r");
        Field f = Field::build(p, r * k);
        if (f.size() > kTableCap) fail(ErrorCode::cap_exceeded, "direct checks limited to 2^22 elements");
        rep.field = field_json(f, "default");
        rep.check = "is_cpp";
        const auto params = multinomial_preset(f, k, *preset);
        if (!params) {
            rep.skipped = true;
            rep.notes["skipped"] = "preset not applicable to F_{p^k}";
        } else {
            rep.notes["g"] = params->description;
            for (Elem a : multinomial_coefficients(f, k)) {
                const FieldMap fm = multinomial_map(f, params->g, params->v, a, k);
                ++rep.tested;
                bool ok = is_cpp(fm);
                for (wide_t x = 0; ok && x < f.size(); ++x)
                    ok = f.trace(fm(Elem(x)), k) == multinomial_trace_image(f, params->g, params->v, a, k, Elem(x));
                rep.rows.emplace_back(to_string(a), ok ? "cpp" : "not-cpp");
                if (!ok) rep.failures.push_back("a=" + to_string(a));
            }
        }
    } else if (family == "conj1") {
        rep.params = {{"p", p}, {"r", vp.r}, {"k", k}};
        const auto res = conj1_search(p, vp.r, k);
        rep.check = "dickson-match";
        rep.tested = res.scanned;
        rep.notes["witnesses"] = res.witnesses.size();
        for (const auto& [a, eta] : res.witnesses) rep.rows.emplace_back(to_string(a), "eta=" + to_string(eta));
        if (res.witnesses.empty()) rep.failures.push_back("no coefficient gives a Dickson h_a");
    } else if (family == "conj2") {
        rep.params = {{"p", p}, {"k", k}};
        const auto res = conj2_verify(p, k);
        rep.check = "ha";
        rep.d = to_string(res.d);
        rep.tested = res.tested;
        rep.notes["modulus"] = res.modulus;
        if (!res.gcd_ok) rep.failures.push_back("gcd(d, p^n - 1) != 1");
        for (Elem a : res.failures) rep.failures.push_back("a=" + to_string(a));
        for (Elem a : res.reformulation_failures) rep.failures.push_back("reformulation a=" + to_string(a));
    } else {
        fail(ErrorCode::invalid_argument, "unknown family '" + family + "'");
    }
    rep.seconds = seconds_since(t0);
    return rep;
}

inline Json to_json(const VerifyReport& r, bool timing = true) {
    Json j;
    j["family"] = r.family;
    j["params"] = r.params;
    if (!r.field.empty()) j["field"] = r.field;
    if (!r.d.empty()) j["d"] = r.d;
    j["check"] = r.check;
    j["tested"] = r.tested;
    j["pass"] = r.pass();
    j["skipped"] = r.skipped;
    j["failures"] = r.failures;
    j["notes"] = r.notes;
    j["seconds"] = timing ? r.seconds : 0.0;
    j["version"] = kVersion;
    return j;
}

inline std::string to_csv(const VerifyReport& r) {
    std::ostringstream os;
    os << "a,outcome\n";
    for (const auto& [a, o] : r.rows) os << a << ',' << o << '\n';
    return os.str();
}

// ------------------------------------------------------------ conjecture

struct ConjectureReport {
    int id = 0;
    std::uint32_t p = 0;
    unsigned r = 0;
    Json per_k = Json::array();
    bool pass = true;
    double seconds = 0;
};

inline ConjectureReport run_conjecture(int id, std::uint32_t p, std::optional<unsigned> r, unsigned kmin, unsigned kmax,
                                       std::optional<std::uint64_t> budget) {
    const auto t0 = std::chrono::steady_clock::now();
    if (id != 1 && id != 2) fail(ErrorCode::invalid_argument, "conjecture id must be 1 or 2");
    if (kmin == 0 || kmax < kmin) fail(ErrorCode::invalid_argument, "need 1 <= kmin <= kmax");
    ConjectureReport rep;
    rep.id = id;
    rep.p = p;
    if (id == 2) {
        require_odd_prime(p);
        if (r && *r != p - 1) fail(ErrorCode::hypothesis_violation, "the second conjecture fixes r = p - 1");
        rep.r = p - 1;
        for (unsigned k = kmin; k <= kmax; ++k) {
            const auto res = conj2_verify(p, k);
            Json e;
            e["k"] = k;
            e["d"] = to_string(res.d);
            e["field"] = res.modulus;
            e["tested"] = res.tested;
            e["pass"] = res.pass();
            Json fails = Json::array();
            for (Elem a : res.failures) fails.push_back(to_string(a));
            e["failures"] = fails;
            Json rf = Json::array();
            for (Elem a : res.reformulation_failures) rf.push_back(to_string(a));
            e["reformulation_failures"] = rf;
            rep.pass = rep.pass && res.pass();
            rep.per_k.push_back(e);
        }
    } else {
        if (!r) fail(ErrorCode::invalid_argument, "the first conjecture needs --r");
        rep.r = *r;
        for (unsigned k = kmin; k <= kmax; ++k) {
            const auto res = conj1_search(p, *r, k, budget);
            Json e;
            e["k"] = k;
            e["field"] = res.modulus;
            e["scanned"] = res.scanned;
            e["sampled"] = res.sampled;
            e["witnesses"] = res.witnesses.size();
            Json w = Json::array();
            for (std::size_t i = 0; i < res.witnesses.size() && i < 32; ++i)
                w.push_back({{"a", to_string(res.witnesses[i].first)}, {"eta", to_string(res.witnesses[i].second)}});
            e["first_witnesses"] = w;
            e["pass"] = !res.witnesses.empty();
            rep.pass = rep.pass && !res.witnesses.empty();
            rep.per_k.push_back(e);
        }
    }
    rep.seconds = seconds_since(t0);
    return rep;
}

inline Json to_json(const ConjectureReport& r, bool timing = true) {
    Json j;
    j["conjecture"] = r.id;
    j["p"] = r.p;
    j["r"] = r.r;
    j["results"] = r.per_k;
    j["pass"] = r.pass;
    j["seconds"] = timing ? r.seconds : 0.0;
    j["version"] = kVersion;
    return j;
}

// ----------------------------------------------------------------- walsh

struct WalshEntry {
    Elem a;
    std::uint64_t N = 0;
    std::int64_t value = 0;
    bool in_v = false;
    bool out_of_scope = false;  // a = 0 is outside the lemma's use
    std::optional<std::string> direct;
    std::optional<bool> match;
};

struct WalshReport {
    explicit WalshReport(Field f) : field(std::move(f)) {}

    Field field;
    unsigned k = 0;
    wide_t s = 0;
    std::optional<wide_t> d;
    std::vector<WalshEntry> entries;
    bool cross_checked = false;
    double seconds = 0;

    bool all_match() const {
        return std::all_of(entries.begin(), entries.end(), [](const WalshEntry& e) { return e.match.value_or(true); });
    }
};

/// Walsh values of Tr(x^d), d = s(p^k - 1) + 1 (or a given d normalised to
/// that shape), from N(a), cross-checked by exact sums when the field is
/// small enough.
inline WalshReport run_walsh(std::uint32_t p, unsigned k, std::optional<wide_t> s, std::optional<wide_t> d,
                             std::optional<wide_t> a_enc, bool all) {
    const auto t0 = std::chrono::steady_clock::now();
    if (s.has_value() == d.has_value()) fail(ErrorCode::invalid_argument, "give exactly one of --s and --d");
    if (a_enc.has_value() == all) fail(ErrorCode::invalid_argument, "give exactly one of --a and --all");
    WalshReport rep{Field::build(p, 2 * k)};
    const NihoCtx nc(rep.field);
    rep.k = k;
    rep.d = d;
    if (d) {
        auto sv = niho_s_for_exponent(nc, *d);
        if (!sv) fail(ErrorCode::hypothesis_violation, "d is not a Niho exponent s(p^k - 1) + 1 up to p-shifts");
        rep.s = *sv;
    } else {
        rep.s = *s;
    }
    const Field& f = rep.field;
    std::vector<Elem> as;
    if (all) {
        if (f.size() > (wide_t{1} << 24)) fail(ErrorCode::cap_exceeded, "too many coefficients to list");
        for (wide_t v = 0; v < f.size(); ++v) as.emplace_back(v);
    } else {
        if (!f.contains(Elem(*a_enc))) fail(ErrorCode::invalid_argument, "a is not an element of the field");
        as.emplace_back(*a_enc);
    }
    const auto vs = v_set(nc);
    rep.cross_checked = f.size() <= kCharSumCap;
    const wide_t e = d ? *d : rep.s * (nc.q - 1) + 1;
    const FieldMap g{f, [&f, e](Elem x) { return f.pow(x, e); }};
    for (Elem a : as) {
        WalshEntry en;
        en.a = a;
        en.N = count_N(nc, a, rep.s);
        en.value = walsh_niho(nc, a, rep.s);
        en.in_v = std::binary_search(vs.begin(), vs.end(), a);
        en.out_of_scope = a.is_zero();
        if (rep.cross_checked) {
            const CycInt w = direct_walsh(g, a);
            en.direct = w.to_string();
            en.match = w == CycInt::integer(f.p(), en.value);
        }
        rep.entries.push_back(std::move(en));
    }
    rep.seconds = seconds_since(t0);
    return rep;
}

inline Json to_json(const WalshReport& r, bool timing = true) {
    Json j;
    j["field"] = field_json(r.field, "default");
    j["k"] = r.k;
    j["s"] = to_string(r.s);
    if (r.d) j["d"] = to_string(*r.d);
    j["cross_checked"] = r.cross_checked;
    Json arr = Json::array();
    for (const auto& e : r.entries) {
        Json x;
        x["a"] = to_string(e.a);
        x["N"] = e.N;
        x["value"] = e.value;
        x["in_V"] = e.in_v;
        x["out_of_scope"] = e.out_of_scope;
        if (e.direct) x["direct"] = *e.direct;
        if (e.match) x["match"] = *e.match;
        arr.push_back(x);
    }
    j["entries"] = arr;
    j["seconds"] = timing ? r.seconds : 0.0;
    j["version"] = kVersion;
    return j;
}

inline std::string to_csv(const WalshReport& r) {
    std::ostringstream os;
    os << "a,N,value\n";
    for (const auto& e : r.entries) os << to_string(e.a) << ',' << e.N << ',' << e.value << '\n';
    return os.str();
}

}  // namespace cppforge

#endif  // CPPFORGE_HARNESS_HPP
