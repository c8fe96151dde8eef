// commpoly: exact-arithmetic CLI for commuting polynomial chains --
// generation, condition checks, closed-form division/factorization/gcd with
// oracle cross-checks, and the mod-p structure suite.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "commpoly/chains.hpp"
#include "commpoly/chebyshev.hpp"
#include "commpoly/conditions.hpp"
#include "commpoly/division.hpp"
#include "commpoly/factor.hpp"
#include "commpoly/modp.hpp"
#include "commpoly/parse.hpp"
#include "commpoly/verify.hpp"

using json = nlohmann::json;
using namespace commpoly;

namespace {

long long max_degree_cap() {
    if (const char* env = std::getenv("COMMPOLY_MAX_DEGREE")) {
        try {
            long long v = std::stoll(env);
            if (v >= 1) return v;
        } catch (...) {
        }
    }
    return 64;
}

void check_degree(long long deg, const std::string& what) {
    long long cap = max_degree_cap();
    if (deg > cap)
        throw std::invalid_argument(what + " exceeds COMMPOLY_MAX_DEGREE=" + std::to_string(cap));
}

json poly_json(const Poly<Rational>& p) {
    json arr = json::array();
    for (const Rational& c : p.coeffs()) arr.push_back(c.to_string());
    return arr;
}

json poly_json(const Poly<Integer>& p) {
    json arr = json::array();
    for (const Integer& c : p.coeffs()) arr.push_back(c.to_string());
    return arr;
}

json poly_json(const Poly<Fp>& p) {
    json arr = json::array();
    for (const Fp& c : p.coeffs()) arr.push_back(c.v);
    return arr;
}

json spec_json(const ChainSpec& s) {
    return json{{"type", chain_type_name(s.type)}, {"a", s.a.to_string()}, {"b", s.b.to_string()}};
}

json shape_json(const FactorShape& s) {
    json arr = json::array();
    for (auto [deg, count] : s.entries) arr.push_back(json::array({deg, count}));
    return arr;
}

ChainType parse_type(const std::string& s) {
    if (s == "chebyshev" || s == "cheb") return ChainType::Chebyshev;
    if (s == "monomial" || s == "mono") return ChainType::Monomial;
    throw std::invalid_argument("unknown chain type '" + s + "' (use chebyshev|monomial)");
}

std::string shape_text(const FactorShape& s) {
    std::string out;
    for (auto [deg, count] : s.entries) {
        if (!out.empty()) out += ", ";
        out += std::to_string(count) + " x degree " + std::to_string(deg);
    }
    return out.empty() ? "(empty)" : out;
}

std::string fp_pretty(const Poly<Fp>& g) {
    std::string line;
    for (std::size_t i = g.coeffs().size(); i-- > 0;) {
        if (g.coeffs()[i].is_zero()) continue;
        if (!line.empty()) line += "+";
        bool unit_coeff = g.coeffs()[i].v == 1 && i > 0;
        if (!unit_coeff) line += std::to_string(g.coeffs()[i].v);
        if (i == 1)
            line += "x";
        else if (i > 1)
            line += "x^" + std::to_string(i);
    }
    return line.empty() ? "0" : line;
}

struct Output {
    bool as_json = false;
    int exit_code = 0;

    void emit(const json& j, const std::string& text) const {
        if (as_json) {
            json full = j;
            full["schema"] = 1;
            std::cout << full.dump() << "\n";
        } else {
            std::cout << text;
        }
    }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"commuting polynomial chains: exact construction and theorem verification"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "emit JSON instead of text");

    std::string type_str = "chebyshev", a_str = "1", b_str = "0", which = "phi", expr;
    long long n = 1, m = 1, max_n = 10, p = 2, r = 1, k = 1;
    long long verify_max_n = 20;
    unsigned seed = 12345;
    std::string primes_csv = "2,3,5,7";

    Output out;
    std::function<void()> action;

    auto* chain = app.add_subcommand("chain", "chain construction and condition checks");
    chain->require_subcommand(1);
    auto* gen = chain->add_subcommand("gen", "print the degree-n chain member");
    gen->add_option("--type", type_str)->required();
    gen->add_option("--a", a_str)->required();
    gen->add_option("--b", b_str)->required();
    gen->add_option("--n", n)->required();
    gen->callback([&] {
        action = [&] {
            check_degree(n, "n");
            ChainSpec s(parse_type(type_str), Rational::from_string(a_str), Rational::from_string(b_str));
            Poly<Rational> f = chain_member(s, n);
            out.emit(json{{"spec", spec_json(s)},
                          {"n", n},
                          {"coeffs", poly_json(f)},
                          {"pretty", print_pretty(f)}},
                     "f_" + std::to_string(n) + "(x) = " + print_pretty(f) + "\n");
        };
    });

    auto* chk = chain->add_subcommand("check", "check Conditions (i)-(iv) up to a degree bound");
    chk->add_option("--type", type_str)->required();
    chk->add_option("--a", a_str)->required();
    chk->add_option("--b", b_str)->required();
    chk->add_option("--max-n", max_n)->required();
    chk->callback([&] {
        action = [&] {
            check_degree(max_n, "max-n");
            ChainSpec s(parse_type(type_str), Rational::from_string(a_str), Rational::from_string(b_str));
            ConditionReport rep = check_condition_i_to_iv(s, max_n);
            auto fail_json = [](const std::optional<PairIndex>& f) {
                return f ? json{{"m", f->m}, {"n", f->n}} : json(nullptr);
            };
            json j{{"spec", spec_json(s)},
                   {"max_n", max_n},
                   {"conditions",
                    {{"i", rep.monic},
                     {"ii", rep.integral},
                     {"iii",
                      {{"holds", rep.divisibility}, {"fails_at", fail_json(rep.divisibility_fail)}}},
                     {"iv", {{"holds", rep.gcd}, {"fails_at", fail_json(rep.gcd_fail)}}}}},
                   {"closed_forms",
                    {{"divisibility_table_matches_oracle", rep.closed_div_agrees},
                     {"gcd_table_matches_oracle",
                      rep.closed_gcd_agrees ? json(*rep.closed_gcd_agrees) : json(nullptr)}}}};
            auto cond_text = [](bool holds, const std::optional<PairIndex>& f) {
                if (holds) return std::string("holds");
                std::string t = "fails";
                if (f) t += " at (m,n)=(" + std::to_string(f->m) + "," + std::to_string(f->n) + ")";
                return t;
            };
            std::string text =
                "Condition (i):   " + std::string(rep.monic ? "holds" : "fails") + "\n" +
                "Condition (ii):  " + std::string(rep.integral ? "holds" : "fails") + "\n" +
                "Condition (iii): " + cond_text(rep.divisibility, rep.divisibility_fail) + "\n" +
                "Condition (iv):  " + cond_text(rep.gcd, rep.gcd_fail) + "\n";
            out.emit(j, text);
        };
    });

    auto* div = app.add_subcommand("div", "closed-form Euclidean division with oracle cross-check");
    div->add_option("--type", type_str, "cheb-raw | cheb | mono")->required();
    div->add_option("--a", a_str);
    div->add_option("--b", b_str);
    div->add_option("--m", m)->required();
    div->add_option("--n", n)->required();
    div->callback([&] {
        action = [&] {
            check_degree(n, "n");
            DivRemResult res;
            Poly<Rational> num, den;
            if (type_str == "cheb-raw") {
                res = divrem_cheb_raw(m, n);
                num = cheb(ChebKind::First, static_cast<std::size_t>(n));
                den = cheb(ChebKind::First, static_cast<std::size_t>(m));
            } else {
                if (div->count("--a") == 0 || div->count("--b") == 0)
                    throw std::invalid_argument("div: --a and --b are required for chain types");
                Rational a = Rational::from_string(a_str), b = Rational::from_string(b_str);
                ChainType t = parse_type(type_str == "cheb" ? "chebyshev" : type_str);
                res = t == ChainType::Chebyshev ? divrem_cheb_chain(a, b, m, n)
                                                : divrem_mono_chain(a, b, m, n);
                ChainSpec s(t, a, b);
                num = chain_member(s, n);
                den = chain_member(s, m);
            }
            auto oracle = divrem(num, den);
            bool matches = res.quot == oracle.first && res.rem == oracle.second;
            out.emit(json{{"quot", poly_json(res.quot)},
                          {"rem", poly_json(res.rem)},
                          {"matches_oracle", matches}},
                     "quot = " + print_pretty(res.quot) + "\nrem  = " + print_pretty(res.rem) +
                         "\nmatches_oracle = " + (matches ? "true" : "false") + "\n");
            if (!matches) out.exit_code = 1;
        };
    });

    auto* factor = app.add_subcommand("factor", "closed-form factorization with certificate");
    factor->require_subcommand(1);
    auto* fcheb = factor->add_subcommand("cheb", "factor 2T_n(x/2+b)-2b, b in {0,+-1,+-1/2}");
    fcheb->add_option("--b", b_str)->required();
    fcheb->add_option("--n", n)->required();
    auto* fmono = factor->add_subcommand("mono", "factor (x+b)^n-b, b in {1,-1}");
    fmono->add_option("--b", b_str)->required();
    fmono->add_option("--n", n)->required();
    auto factor_action = [&](bool cheb_kind) {
        return [&, cheb_kind] {
            check_degree(n, "n");
            Factorization f;
            if (cheb_kind) {
                f = factor_cheb_chain(Rational::from_string(b_str), n);
            } else {
                Rational b = Rational::from_string(b_str);
                if (!b.is_integer()) throw std::invalid_argument("factor mono: b must be 1 or -1");
                f = factor_mono_chain(*b.num().to_int64(), n);
            }
            json terms = json::array();
            std::string text;
            for (const FactorTerm& t : f.factors) {
                terms.push_back(json{{"poly", poly_json(t.poly)}, {"mult", t.mult}, {"label", t.label}});
                text += t.label + " = " + print_pretty(t.poly) +
                        (t.mult > 1 ? "   (multiplicity " + std::to_string(t.mult) + ")" : "") + "\n";
            }
            // factor_* throws unless the expansion certificate holds
            out.emit(json{{"unit", f.unit.to_string()}, {"factors", terms}, {"verified", true}},
                     text + "verified: true\n");
        };
    };
    fcheb->callback([&] { action = factor_action(true); });
    fmono->callback([&] { action = factor_action(false); });

    auto* gcd_cmd = app.add_subcommand("gcd", "closed-form gcd of chain members vs Euclid oracle");
    gcd_cmd->add_option("--type", type_str)->required();
    gcd_cmd->add_option("--b", b_str)->required();
    gcd_cmd->add_option("--m", m)->required();
    gcd_cmd->add_option("--n", n)->required();
    gcd_cmd->callback([&] {
        action = [&] {
            check_degree(n, "n");
            ChainType t = parse_type(type_str);
            Rational b = Rational::from_string(b_str);
            auto closed = gcd_closed(t, b, m, n);
            ChainSpec s(t, t == ChainType::Chebyshev ? Rational(1, 2) : Rational(1), b);
            auto oracle = gcd_monic(chain_member(s, m), chain_member(s, n));
            bool matches = closed ? oracle == *closed : oracle == constant_poly(Rational(1));
            json j{{"coprime", !closed.has_value()}, {"matches_oracle", matches}};
            std::string text;
            if (closed) {
                j["gcd"] = poly_json(*closed);
                text = "gcd = " + print_pretty(*closed) + "\n";
            } else {
                text = "coprime\n";
            }
            out.emit(j, text + "matches_oracle = " + (matches ? "true" : "false") + "\n");
            if (!matches) out.exit_code = 1;
        };
    });

    auto* cyclo_cmd = app.add_subcommand("cyclo", "n-th cyclotomic polynomial");
    cyclo_cmd->add_option("--n", n)->required();
    cyclo_cmd->callback([&] {
        action = [&] {
            if (n >= 1) check_degree(euler_phi(n), "deg Phi_n");
            Poly<Integer> f = cyclotomic(n);
            out.emit(json{{"n", n}, {"coeffs", poly_json(f)}, {"pretty", print_pretty(f)}},
                     "Phi_" + std::to_string(n) + "(x) = " + print_pretty(f) + "\n");
        };
    });

    auto* psi_cmd = app.add_subcommand("psi", "minimal polynomial of 2cos(2pi/n)");
    psi_cmd->add_option("--n", n)->required();
    psi_cmd->callback([&] {
        action = [&] {
            if (n >= 3) check_degree(euler_phi(n) / 2, "deg Psi_n");
            CosMinPoly f = psi(n);
            out.emit(json{{"n", n}, {"coeffs", poly_json(f.poly)}, {"pretty", print_pretty(f.poly)}},
                     "Psi_" + std::to_string(n) + "(x) = " + print_pretty(f.poly) + "\n");
        };
    });

    auto* modp = app.add_subcommand("modp", "structure of Phi_n, Psi_n and the chains mod p");
    modp->require_subcommand(1);
    auto* predict = modp->add_subcommand("predict", "predicted irreducible factor shape mod p");
    predict->add_option("--p", p)->required();
    predict->add_option("--n", n)->required();
    predict->add_option("--which", which, "phi | psi");
    predict->callback([&] {
        action = [&] {
            if (!is_prime(p)) throw std::invalid_argument("p must be prime");
            FactorShape s = which == "psi" ? predict_psi_shape(p, n) : predict_phi_shape(p, n);
            out.emit(json{{"p", p}, {"n", n}, {"which", which}, {"shape", shape_json(s)}},
                     shape_text(s) + "\n");
        };
    });
    auto* measure = modp->add_subcommand("measure", "measured DDF shape mod p");
    measure->add_option("--p", p)->required();
    measure->add_option("--n", n)->required();
    measure->add_option("--which", which, "phi | psi");
    measure->callback([&] {
        action = [&] {
            if (!is_prime(p)) throw std::invalid_argument("p must be prime");
            check_degree(n >= 1 ? euler_phi(n) : 0, "deg");
            FactorShape s = which == "psi" ? measure_psi_shape(p, n) : measure_phi_shape(p, n);
            out.emit(json{{"p", p}, {"n", n}, {"which", which}, {"shape", shape_json(s)}},
                     shape_text(s) + "\n");
        };
    });
    auto* frob = modp->add_subcommand("frobenius", "check F_{p^r} = Ftilde_{p^r} = x^{p^r} mod p");
    frob->add_option("--p", p)->required();
    frob->add_option("--r", r)->required();
    frob->callback([&] {
        action = [&] {
            if (!is_prime(p)) throw std::invalid_argument("p must be prime");
            if (r < 1) throw std::invalid_argument("r must be positive");
            long long pr = 1;
            for (long long i = 0; i < r; ++i) {
                pr *= p;
                if (pr > 1000000) throw std::invalid_argument("p^r too large");
            }
            check_degree(pr, "p^r");
            bool holds = frobenius_identity(p, r);
            out.emit(json{{"p", p}, {"r", r}, {"holds", holds}},
                     std::string(holds ? "true" : "false") + "\n");
            if (!holds) out.exit_code = 1;
        };
    });
    auto* comm = modp->add_subcommand("commuting", "enumerate degree-k polynomials commuting with f");
    comm->add_option("--p", p)->required();
    comm->add_option("--f", expr, "polynomial expression, e.g. \"x^2\"")->required();
    comm->add_option("--k", k)->required();
    comm->callback([&] {
        action = [&] {
            if (!is_prime(p)) throw std::invalid_argument("p must be prime");
            check_degree(k, "k");
            Poly<Fp> f = reduce_mod_p(parse_poly(expr), p);
            if (f.degree() >= 1) check_degree(k * f.degree(), "deg(g o f)");
            auto found = enumerate_commuting(p, f, k);
            json arr = json::array();
            std::string text;
            for (const auto& g : found) {
                arr.push_back(poly_json(g));
                text += fp_pretty(g) + "\n";
            }
            out.emit(json{{"p", p}, {"f", expr}, {"k", k}, {"count", found.size()}, {"polys", arr}},
                     "count = " + std::to_string(found.size()) + "\n" + text);
        };
    });

    auto* verify = app.add_subcommand("verify-all", "run every theorem suite and print a pass/fail table");
    verify->add_option("--max-n", verify_max_n, "degree bound for the sweeps (default 20)");
    verify->add_option("--primes", primes_csv, "comma-separated primes (default 2,3,5,7)");
    verify->add_option("--seed", seed, "seed for the randomized instances");
    verify->callback([&] {
        action = [&] {
            check_degree(verify_max_n, "max-n");
            if (verify_max_n < 4) throw std::invalid_argument("max-n must be >= 4");
            VerifyOptions opt;
            opt.max_n = verify_max_n;
            opt.seed = seed;
            opt.primes.clear();
            std::string cur;
            for (char c : primes_csv + ",") {
                if (c == ',') {
                    if (!cur.empty()) {
                        long long q = std::stoll(cur);
                        if (!is_prime(q)) throw std::invalid_argument(cur + " is not prime");
                        opt.primes.push_back(q);
                        cur.clear();
                    }
                } else {
                    cur += c;
                }
            }
            if (opt.primes.empty()) throw std::invalid_argument("at least one prime required");
            auto checks = verify_all(opt);
            bool all = true;
            json arr = json::array();
            std::string text;
            for (const auto& c : checks) {
                all = all && c.pass;
                arr.push_back(json{{"label", c.label}, {"pass", c.pass}, {"detail", c.detail}});
                std::string label = c.label;
                label.resize(28, ' ');
                text += std::string(c.pass ? "PASS  " : "FAIL  ") + label + " " + c.detail + "\n";
            }
            text += all ? "all checks passed\n" : "SOME CHECKS FAILED\n";
            out.emit(json{{"max_n", verify_max_n}, {"checks", arr}, {"all_pass", all}}, text);
            if (!all) out.exit_code = 1;
        };
    });

    // let a trailing --json (given after any subcommand) reach the main app
    std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* a) {
        for (CLI::App* s : a->get_subcommands([](const CLI::App*) { return true; })) {
            s->fallthrough();
            enable_fallthrough(s);
        }
    };
    enable_fallthrough(&app);

    CLI11_PARSE(app, argc, argv);
    out.as_json = as_json;
    try {
        action();
    } catch (const ParseError& e) {
        if (as_json)
            std::cout << json{{"schema", 1},
                              {"error", {{"message", e.what()}, {"offset", e.offset}}}}
                             .dump()
                      << "\n";
        else
            std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        if (as_json)
            std::cout << json{{"schema", 1}, {"error", {{"message", e.what()}}}}.dump() << "\n";
        else
            std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        if (as_json)
            std::cout << json{{"schema", 1}, {"error", {{"message", e.what()}}}}.dump() << "\n";
        else
            std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return out.exit_code;
}
