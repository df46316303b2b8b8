/*
   Copyright 2026 The ternopt Authors

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

// ternopt: command-line front end. Tables go to stdout for people, JSON
// lines (--format json) for scripts. Exit codes: 0 success or confirmed
// finding, 1 negative finding, 2 usage error, 3 capability exceeded.

#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <omp.h>

#include <CLI11.hpp>
#include <json.hpp>

#include "ternopt/checker.hpp"
#include "ternopt/codes.hpp"
#include "ternopt/errors.hpp"
#include "ternopt/factor.hpp"
#include "ternopt/families.hpp"
#include "ternopt/numthy.hpp"

using namespace ternopt;
using json = nlohmann::ordered_json;

namespace {

enum Exit { kOk = 0, kNegative = 1, kUsage = 2, kCapability = 3 };

struct RunConfig {
    std::string format = "table";
    int threads = 0;  // 0: OpenMP default
    std::uint64_t seed = 1;
    bool serial = false;
    CheckConfig check;

    bool json() const { return format == "json"; }
};

void emit(const json& j) { std::cout << j.dump() << '\n'; }

// Aligned "key  value" lines.
class Table {
public:
    Table& row(const std::string& key, const std::string& value)
    {
        rows_.emplace_back(key, value);
        width_ = std::max(width_, key.size());
        return *this;
    }
    void print() const
    {
        for (const auto& [k, v] : rows_) {
            std::cout << std::left << std::setw(static_cast<int>(width_ + 2)) << k << v << '\n';
        }
    }

private:
    std::vector<std::pair<std::string, std::string>> rows_;
    std::size_t width_ = 0;
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

BigNat parse_e(const std::string& text) { return BigNat::from_decimal(text); }

std::string verdict_word(const CheckVerdict& v)
{
    if (v.optimal) return "optimal";
    std::string s = "not optimal (";
    for (std::size_t i = 0; i < v.reasons.size(); ++i) s += (i ? ", " : "") + v.reasons[i];
    return s + ")";
}

json verdict_json(const CheckVerdict& v)
{
    json j;
    j["m"] = v.m;
    j["e"] = v.e.to_decimal();
    j["c1_even"] = v.c1_even;
    j["e_in_C1"] = !v.e_not_in_C1;
    j["coset_size"] = v.coset_size;
    j["c2_solutions"] = v.c2_solution_count ? json(*v.c2_solution_count) : json(nullptr);
    j["c3_solutions"] = v.c3_solution_count ? json(*v.c3_solution_count) : json(nullptr);
    j["strategy"] = v.strategy ? json(std::string(to_string(*v.strategy))) : json(nullptr);
    j["optimal"] = v.optimal;
    j["reasons"] = v.reasons;
    return j;
}

void verdict_rows(Table& t, const CheckVerdict& v)
{
    t.row("e even", yes_no(v.c1_even)).row("e in C_1", yes_no(!v.e_not_in_C1)).row("|C_e|", std::to_string(v.coset_size));
    if (v.c2_solution_count) t.row("C2 solutions", std::to_string(*v.c2_solution_count));
    if (v.c3_solution_count) t.row("C3 solutions", std::to_string(*v.c3_solution_count));
    if (v.strategy) t.row("strategy", std::string(to_string(*v.strategy)));
    t.row("verdict", verdict_word(v));
}

std::optional<Gf3Poly> parse_modulus(const std::string& text)
{
    if (text.empty()) return std::nullopt;
    return Gf3Poly::parse(text);
}

const FieldContext& context_for(unsigned m, const std::optional<Gf3Poly>& modulus, std::optional<FieldContext>& owned)
{
    if (modulus) {
        owned.emplace(build_context(m, modulus));
        return *owned;
    }
    return default_context(m);
}

int cmd_check(const RunConfig& rc, unsigned m, const std::string& e_text, const std::string& modulus_text)
{
    const auto modulus = parse_modulus(modulus_text);
    const CheckVerdict v = full_verdict(m, parse_e(e_text), modulus, rc.check);
    if (rc.json()) {
        json j = verdict_json(v);
        if (m <= rc.check.scan_cap) j["modulus"] = (modulus ? *modulus : default_context(m).modulus()).to_text();
        emit(j);
    } else {
        Table t;
        t.row("m", std::to_string(m)).row("e", v.e.to_decimal());
        verdict_rows(t, v);
        t.print();
    }
    return v.optimal ? kOk : kNegative;
}

int cmd_construct(const RunConfig& rc, unsigned m, const std::string& e_text, const std::string& modulus_text)
{
    const auto modulus = parse_modulus(modulus_text);
    std::optional<FieldContext> owned;
    const FieldContext& ctx = context_for(m, modulus, owned);
    const BigNat e = parse_e(e_text) % ctx.order();
    const CyclicCode code = build_C1e(ctx, e);

    std::optional<CheckVerdict> v;
    std::string undecided;
    try {
        v = full_verdict(m, e, ctx.modulus(), rc.check);
    } catch (const CapabilityExceeded& ex) {
        undecided = ex.what();
    }

    if (rc.json()) {
        json j;
        j["m"] = m;
        j["e"] = e.to_decimal();
        j["modulus"] = ctx.modulus().to_text();
        j["generator"] = code.generator.to_text();
        j["generator_algebraic"] = code.generator.to_algebraic();
        j["n"] = code.n.to_decimal();
        j["k"] = code.dimension.to_decimal();
        j["d"] = v && v->optimal ? json(4) : json(nullptr);
        j["verdict"] = v ? verdict_json(*v) : json(nullptr);
        emit(j);
    } else {
        Table t;
        t.row("m", std::to_string(m)).row("e", e.to_decimal()).row("modulus", ctx.modulus().to_algebraic());
        t.row("generator", code.generator.to_text()).row("", code.generator.to_algebraic());
        std::string params = "[" + code.n.to_decimal() + ", " + code.dimension.to_decimal();
        params += v && v->optimal ? ", 4]" : "]";
        t.row("params", params);
        if (v) {
            verdict_rows(t, *v);
        } else {
            t.row("verdict", "undecided: " + undecided);
        }
        t.print();
    }
    if (!v) return kCapability;
    return v->optimal ? kOk : kNegative;
}

int cmd_solve(const RunConfig& rc, unsigned m, unsigned h, const std::string& sign_text, long long a)
{
    Sign sign;
    if (sign_text == "+" || sign_text == "+1") {
        sign = Sign::Plus;
    } else if (sign_text == "-" || sign_text == "-1") {
        sign = Sign::Minus;
    } else {
        throw std::invalid_argument("--sign must be + or -");
    }
    const auto sols = solve_even_e(m, h, sign, a);
    if (rc.json()) {
        json j;
        j["m"] = m;
        j["h"] = h;
        j["sign"] = sign == Sign::Plus ? "+" : "-";
        j["a"] = a;
        j["solutions"] = json::array();
        for (const auto& e : sols) j["solutions"].push_back(e.to_decimal());
        emit(j);
    } else {
        for (const auto& e : sols) std::cout << e << '\n';
        if (sols.empty()) std::cout << "no even solution\n";
    }
    return sols.empty() ? kNegative : kOk;
}

json family_code_json(unsigned m, const FamilyCode& c)
{
    json j;
    j["m"] = m;
    j["e"] = c.e.to_decimal();
    j["condition"] = c.condition;
    j["verdict"] = c.verdict ? verdict_json(*c.verdict) : json(nullptr);
    return j;
}

int print_family_codes(const RunConfig& rc, const std::string& name, unsigned m, const std::vector<FamilyCode>& codes)
{
    bool any = false;
    bool all_ok = true;
    for (const auto& c : codes) {
        if (!c.condition) continue;
        any = true;
        all_ok = all_ok && c.verdict && c.verdict->optimal;
    }
    if (rc.json()) {
        for (const auto& c : codes) {
            json j = family_code_json(m, c);
            j["family"] = name;
            emit(j);
        }
    } else {
        if (codes.empty()) std::cout << "no even solution\n";
        for (const auto& c : codes) {
            std::cout << "e=" << c.e << "  condition " << (c.condition ? "holds" : "fails") << "  "
                      << (c.verdict ? verdict_word(*c.verdict) : "undecided (beyond scan cap)") << '\n';
        }
    }
    return any && all_ok ? kOk : kNegative;
}

int cmd_family(const RunConfig& rc, const std::string& name, unsigned m, unsigned h, unsigned t, int delta,
               unsigned m_max, long long a)
{
    if (name == "thm31" || name == "thm32") {
        const FamilyExponent f = name == "thm31" ? thm31_exponent(m) : thm32_exponent(m);
        std::optional<CheckVerdict> v;
        try {
            v = full_verdict(m, f.e, std::nullopt, rc.check);
        } catch (const CapabilityExceeded&) {
        }
        if (rc.json()) {
            json j;
            j["family"] = name;
            j["m"] = m;
            j["e"] = f.e.to_decimal();
            j["applicable"] = f.applicable;
            j["verdict"] = v ? verdict_json(*v) : json(nullptr);
            emit(j);
        } else {
            Table tb;
            tb.row("family", name).row("m", std::to_string(m)).row("e", f.e.to_decimal());
            tb.row("applicable", yes_no(f.applicable));
            tb.row("verdict", v ? verdict_word(*v) : "undecided (beyond scan cap)");
            tb.print();
        }
        if (!v) return kCapability;
        return f.applicable && v->optimal ? kOk : kNegative;
    }
    if (name == "thm41") return print_family_codes(rc, name, m, thm41_codes(m, h, t, delta, rc.check));
    if (name == "thm42") return print_family_codes(rc, name, m, thm42_codes(m, h, t, rc.check));
    if (name == "thm51") {
        const Thm51Result r = thm51_scan(m, h, a);
        if (rc.json()) {
            emit(json{{"family", name}, {"m", m}, {"h", h}, {"a", a}, {"minus_empty", r.minus_empty},
                      {"plus_empty", r.plus_empty}, {"confirmed", r.confirmed()}});
        } else {
            std::cout << "minus sign: " << (r.minus_empty ? "no even e" : "even e exists") << '\n'
                      << "plus sign:  " << (r.plus_empty ? "no even e" : "even e exists") << '\n';
        }
        return r.confirmed() ? kOk : kNegative;
    }
    if (name == "thm56") {
        const auto entries = thm56_scan(m, h, rc.check);
        bool all_fail = true;
        for (const auto& x : entries) {
            all_fail = all_fail && x.reason != Disqualifier::none;
            if (rc.json()) {
                emit(json{{"family", name}, {"m", m}, {"h", h}, {"e", x.e.to_decimal()},
                          {"disqualifier", std::string(to_string(x.reason))}});
            } else {
                std::cout << "e=" << x.e << "  fails " << to_string(x.reason) << '\n';
            }
        }
        if (entries.empty() && !rc.json()) std::cout << "no even solution\n";
        return all_fail ? kOk : kNegative;
    }
    if (name == "table1") {
        const auto results = table1_catalog(m_max, rc.check);
        std::size_t bad = 0;
        for (const auto& r : results) {
            bad += r.optimal ? 0 : 1;
            if (rc.json()) {
                emit(json{{"row", r.row}, {"m", r.m}, {"params", r.params}, {"e", r.e.to_decimal()},
                          {"optimal", r.optimal}, {"reasons", r.reasons}});
            } else {
                std::cout << std::left << std::setw(34) << r.row << " m=" << std::setw(3) << r.m << std::setw(10)
                          << r.params << " e=" << std::setw(8) << r.e.to_decimal() << ' '
                          << (r.optimal ? "optimal" : "MISMATCH") << '\n';
            }
        }
        if (!rc.json()) std::cout << results.size() << " exponents, " << bad << " mismatches\n";
        return bad == 0 ? kOk : kNegative;
    }
    throw std::invalid_argument("unknown family '" + name + "'");
}

json degrees_json(const std::vector<DegreeCount>& ds)
{
    json a = json::array();
    for (const auto& d : ds) a.push_back({{"degree", d.degree}, {"multiplicity", d.multiplicity}, {"count", d.count}});
    return a;
}

std::string degrees_text(const std::vector<DegreeCount>& ds)
{
    std::ostringstream os;
    for (std::size_t i = 0; i < ds.size(); ++i) {
        if (i) os << ' ';
        os << ds[i].count << 'x' << ds[i].degree;
        if (ds[i].multiplicity > 1) os << '^' << ds[i].multiplicity;
    }
    return os.str();
}

int cmd_hunt(const RunConfig& rc, const std::string& problem, unsigned m, unsigned h, const std::string& witness,
             const std::string& which)
{
    std::vector<Gf3Poly> witnesses;
    if (!witness.empty()) witnesses = read_poly_file(witness);
    const HuntReport r = hunt_counterexample(m, h, parse_problem(problem), witnesses, parse_equation(which),
                                             rc.check.expansion_cap);
    const std::string bound = r.lower_bound ? "\u2265" : "";
    const std::string conclusion = r.refutes() ? "refutes" : "consistent";
    if (rc.json()) {
        json j;
        j["problem"] = std::string(to_string(r.problem));
        j["m"] = r.m;
        j["h"] = r.h;
        j["e"] = r.e.to_decimal();
        j["equation"] = std::string(to_string(r.equation));
        j["root_count"] = r.root_count;
        j["lower_bound"] = r.lower_bound;
        j["factor_degrees"] = degrees_json(r.factor_degrees);
        j["witnesses"] = json::array();
        for (const auto& w : r.witnesses) {
            j["witnesses"].push_back({{"factor", w.factor.to_text()}, {"status", std::string(to_string(w.status))}});
        }
        j["conclusion"] = conclusion;
        emit(j);
    } else {
        Table t;
        t.row("problem", std::string(to_string(r.problem))).row("m", std::to_string(m)).row("h", std::to_string(h));
        t.row("e", r.e.to_decimal()).row("equation", std::string(to_string(r.equation)));
        for (std::size_t i = 0; i < r.witnesses.size(); ++i) {
            t.row("witness " + std::to_string(i + 1), "degree " + std::to_string(r.witnesses[i].factor.degree()) +
                                                          ", " + std::string(to_string(r.witnesses[i].status)));
        }
        t.row("factor degrees", degrees_text(r.factor_degrees));
        t.print();
        std::cout << conclusion << ": " << bound << r.root_count << " solutions\n";
    }
    return r.refutes() ? kOk : kNegative;
}

int cmd_explore(const RunConfig& rc, unsigned m, std::uint64_t t_max)
{
    const auto rows = prob62_explore(m, t_max, rc.check);
    if (!rc.json()) std::cout << "EMPIRICAL: scan results only, not a characterization\n";
    std::size_t hits = 0;
    for (const auto& r : rows) {
        hits += r.optimal ? 1 : 0;
        if (rc.json()) {
            emit(json{{"status", "EMPIRICAL"}, {"m", m}, {"t", r.t}, {"e", r.e.to_decimal()}, {"optimal", r.optimal},
                      {"oracle_agrees", r.oracle_agrees ? json(*r.oracle_agrees) : json(nullptr)}});
        } else {
            std::cout << "t=" << std::left << std::setw(6) << r.t << " e=" << std::setw(10) << r.e.to_decimal()
                      << (r.optimal ? "optimal" : "-");
            if (r.oracle_agrees) std::cout << (*r.oracle_agrees ? "  (oracle agrees)" : "  (ORACLE DISAGREES)");
            std::cout << '\n';
        }
    }
    if (!rc.json()) std::cout << hits << " of " << rows.size() << " values of t give optimal codes\n";
    return kOk;
}

int cmd_factor(const RunConfig& rc, const std::string& input, const std::string& binomial, const std::string& which,
               bool degrees_only)
{
    std::vector<Gf3Poly> polys;
    if (!input.empty()) {
        polys = read_poly_file(input);
    } else {
        polys.push_back(equation_polynomial(parse_e(binomial), parse_equation(which), rc.check.expansion_cap));
    }
    for (const auto& p : polys) {
        if (p.is_zero()) throw std::invalid_argument("cannot factor the zero polynomial");
        const auto degrees = factor_degree_multiset(p);
        std::optional<Factorization> f;
        if (!degrees_only) f = factor(p, {.seed = rc.seed});
        if (rc.json()) {
            json j;
            j["degree"] = p.degree();
            j["degrees"] = degrees_json(degrees);
            if (f) {
                j["unit"] = f->unit;
                j["factors"] = json::array();
                for (const auto& t : f->factors) {
                    j["factors"].push_back({{"factor", t.factor.to_text()}, {"multiplicity", t.multiplicity}});
                }
            }
            emit(j);
        } else {
            std::cout << "degree " << p.degree() << ": " << degrees_text(degrees) << '\n';
            if (f) {
                for (const auto& t : f->factors) {
                    std::cout << "  (" << t.factor.to_algebraic() << ")";
                    if (t.multiplicity > 1) std::cout << '^' << t.multiplicity;
                    std::cout << '\n';
                }
            }
        }
    }
    return kOk;
}

int default_threads()
{
    const char* env = std::getenv("TERNOPT_THREADS");
    if (env == nullptr) return 0;
    try {
        return std::max(0, std::stoi(env));
    } catch (const std::exception&) {
        return 0;
    }
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Construct, verify and refute optimal ternary cyclic codes C(1,e)"};
    app.set_help_flag("--help", "Print this help message and exit");
    app.require_subcommand(1);
    RunConfig rc;
    rc.threads = default_threads();
    app.add_option("--format", rc.format, "Output format")->check(CLI::IsMember({"table", "json"}));
    app.add_option("--threads", rc.threads, "OpenMP threads (default: TERNOPT_THREADS or all)")
        ->check(CLI::NonNegativeNumber);
    app.add_option("--seed", rc.seed, "Seed for randomized factorization");
    app.add_flag("--serial", rc.serial, "Use the serial reference kernels");
    app.add_option("--scan-cap", rc.check.scan_cap, "Largest m for exhaustive field scans")
        ->check(CLI::PositiveNumber);
    app.add_option("--zech-cap", rc.check.zech_cap, "Largest m for Zech tables")->check(CLI::PositiveNumber);
    app.add_option("--expansion-cap", rc.check.expansion_cap, "Largest e for explicit (x+1)^e expansion")
        ->check(CLI::PositiveNumber);

    unsigned m = 0, h = 0, t = 0, m_max = 7;
    int delta = 1;
    long long a = 0;
    std::uint64_t t_max = 0;
    std::string e_text, modulus, sign, name, problem, witness, input, binomial, which = "C3";
    bool degrees_only = false;

    auto* check = app.add_subcommand("check", "Optimality verdict for C(1,e)");
    check->add_option("--m", m, "Extension degree")->required();
    check->add_option("--e", e_text, "Exponent (decimal)")->required();
    check->add_option("--modulus", modulus, "Primitive modulus (digits or algebraic)");

    auto* construct = app.add_subcommand("construct", "Generator polynomial and parameters of C(1,e)");
    construct->add_option("--m", m, "Extension degree")->required();
    construct->add_option("--e", e_text, "Exponent (decimal)")->required();
    construct->add_option("--modulus", modulus, "Primitive modulus (digits or algebraic)");

    auto* solve = app.add_subcommand("solve-e", "Even e with e (3^h + sign) = (3^m - a)/2 mod 3^m - 1");
    solve->add_option("--m", m)->required();
    solve->add_option("--h", h)->required();
    solve->add_option("--sign", sign, "+ or -")->required();
    solve->add_option("--a", a, "Odd integer a")->required();

    auto* family = app.add_subcommand("family", "Named exponent families and scans");
    family->add_option("--name", name)
        ->required()
        ->check(CLI::IsMember({"thm31", "thm32", "thm41", "thm42", "thm51", "thm56", "table1"}));
    family->add_option("--m", m);
    family->add_option("--h", h);
    family->add_option("--t", t);
    family->add_option("--delta", delta, "+1 or -1");
    family->add_option("--a", a, "a = 5 (mod 8) for thm51");
    family->add_option("--m-max", m_max, "Largest m for table1");

    auto* hunt = app.add_subcommand("hunt", "Counterexample search for problems 7.9 and 7.10");
    hunt->add_option("--problem", problem)->required()->check(CLI::IsMember({"7.9", "7.10"}));
    hunt->add_option("--m", m)->required();
    hunt->add_option("--h", h)->required();
    hunt->add_option("--witness", witness, "File of candidate irreducible factors")->check(CLI::ExistingFile);
    hunt->add_option("--which", which, "Equation the witnesses divide")->check(CLI::IsMember({"C2", "C3"}));

    auto* explore = app.add_subcommand("explore62", "Scan e = (3^h+1)/2 + (3^h+1) t for m = 2 mod 4");
    explore->add_option("--m", m)->required();
    explore->add_option("--t-max", t_max)->required();

    auto* factor_cmd = app.add_subcommand("factor", "Factor polynomials over GF(3)");
    auto* in_opt = factor_cmd->add_option("--input", input, "Polynomial file")->check(CLI::ExistingFile);
    auto* bin_opt = factor_cmd->add_option("--binomial", binomial, "Factor (x+1)^E -+ x^E -+ 1");
    in_opt->excludes(bin_opt);
    factor_cmd->add_option("--which", which)->check(CLI::IsMember({"C2", "C3"}));
    factor_cmd->add_flag("--degrees-only", degrees_only, "Skip equal-degree splitting");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    if (rc.threads > 0) omp_set_num_threads(rc.threads);
    if (rc.serial) rc.check.exec = Exec::serial;

    try {
        if (*check) return cmd_check(rc, m, e_text, modulus);
        if (*construct) return cmd_construct(rc, m, e_text, modulus);
        if (*solve) return cmd_solve(rc, m, h, sign, a);
        if (*family) return cmd_family(rc, name, m, h, t, delta, m_max, a);
        if (*hunt) return cmd_hunt(rc, problem, m, h, witness, which);
        if (*explore) return cmd_explore(rc, m, t_max);
        if (*factor_cmd) {
            if (input.empty() && binomial.empty()) throw std::invalid_argument("factor needs --input or --binomial");
            return cmd_factor(rc, input, binomial, which, degrees_only);
        }
    } catch (const CapabilityExceeded& e) {
        std::cerr << "capability exceeded: " << e.what() << '\n';
        return kCapability;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
