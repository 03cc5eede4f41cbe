#include <cctype>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rr/closure.hpp"
#include "rr/errors.hpp"
#include "rr/ideal.hpp"
#include "rr/parse.hpp"
#include "rr/render.hpp"
#include "rr/semigroup.hpp"

using nlohmann::json;

namespace {

struct Options {
    bool json_out = false;
    bool stair = false;
    bool oracle = false;
    bool quiet = false;
    long long max_l = -1;  // -1: unset, fall back to RR_MAX_L, then 12
};

rr::Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return rr::Rational(std::stoll(text));
        long long num = std::stoll(text.substr(0, slash));
        long long den = std::stoll(text.substr(slash + 1));
        if (den == 0) throw rr::ParseError("zero denominator", slash + 1);
        return rr::Rational(num, den);
    } catch (const std::logic_error&) {
        throw rr::ParseError("expected a rational like 1/2", 0);
    }
}

std::vector<long long> parse_int_list(const std::string& text) {
    std::vector<long long> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t next = text.find(',', pos);
        if (next == std::string::npos) next = text.size();
        std::string tok = text.substr(pos, next - pos);
        try {
            std::size_t used = 0;
            long long v = std::stoll(tok, &used);
            while (used < tok.size() && std::isspace(static_cast<unsigned char>(tok[used])))
                ++used;
            if (used != tok.size()) throw std::invalid_argument(tok);
            out.push_back(v);
        } catch (const std::logic_error&) {
            throw rr::ParseError("expected a comma-separated integer list", pos);
        }
        pos = next + 1;
        if (next == text.size()) break;
    }
    if (out.empty()) throw rr::ParseError("expected a comma-separated integer list", 0);
    return out;
}

std::string rational_text(const rr::Rational& r) {
    std::string s = std::to_string(r.numerator());
    if (r.denominator() != 1) s += "/" + std::to_string(r.denominator());
    return s;
}

void uncertified_banner(const Options& opt, long long l_used) {
    if (opt.quiet) return;
    std::cerr << "UNCERTIFIED (l <= " << l_used
              << " examined): result is a lower approximation of the closure\n";
}

rr::MonomialIdeal principal(const rr::Monomial& m) {
    return rr::MonomialIdeal::from_generators({m});
}

void emit_ideal(const Options& opt, const rr::MonomialIdeal& I) {
    if (opt.json_out) {
        std::cout << rr::to_json(I).dump(2) << "\n";
        return;
    }
    std::cout << rr::to_text(I) << "\n";
    if (opt.stair) std::cout << rr::staircase(I);
}

int cmd_closure(const Options& opt, const std::string& ideal_text) {
    rr::MonomialIdeal I = rr::parse_ideal(ideal_text);
    auto [m, res] = rr::closure(I, opt.max_l);
    rr::MonomialIdeal full = rr::product(principal(m), res.closure);
    bool is_principal = res.closure.is_unit();

    if (!res.certified) uncertified_banner(opt, res.l_used);

    if (opt.json_out) {
        rr::ClosureResult shifted = res;
        shifted.closure = full;
        std::cout << rr::to_json(shifted).dump(2) << "\n";
        return 0;
    }

    if (is_principal) {
        std::cout << "principal ideal: trivially Ratliff-Rush\n";
    } else if (!opt.quiet) {
        rr::IdealClass cls = rr::classify(rr::extract_common_factor(I).second);
        std::cout << "class: " << rr::to_text(cls) << "\n";
    }
    std::cout << "closure: " << rr::to_text(full) << "\n";

    std::vector<rr::Monomial> added;
    for (const rr::Monomial& g : full.generators())
        if (!I.contains_monomial(g)) added.push_back(g);
    if (added.empty()) {
        std::cout << "added: none (ideal is Ratliff-Rush"
                  << (res.certified ? ")" : " up to the examined range)") << "\n";
    } else {
        std::cout << "added:";
        for (const rr::Monomial& g : added) std::cout << " " << rr::to_text(g);
        std::cout << "\n";
    }
    if (res.reduction_number)
        std::cout << "reduction number: " << *res.reduction_number << "\n";
    else
        std::cout << "reduction number: unknown (uncertified)\n";

    if (opt.oracle && !is_principal) {
        rr::MonomialIdeal prim = rr::extract_common_factor(I).second;
        rr::ClosureResult brute = rr::closure_brute_force(prim, opt.max_l);
        bool agree = brute.closure == res.closure;
        std::cout << "oracle (brute force, l = " << opt.max_l << "): "
                  << (agree ? "agrees" : "MISMATCH — report this input") << "\n";
    }
    if (opt.stair) std::cout << rr::staircase(I, &full);
    return 0;
}

int cmd_reduction(const Options& opt, const std::string& ideal_text) {
    rr::MonomialIdeal I = rr::parse_ideal(ideal_text);
    auto [m, res] = rr::closure(I, opt.max_l);
    long long r = rr::reduction_number(I, res);  // NotCertified when unverified
    if (opt.json_out)
        std::cout << json{{"reduction_number", r}}.dump(2) << "\n";
    else
        std::cout << r << "\n";
    return 0;
}

int cmd_power(const Options& opt, const std::string& ideal_text, long long l) {
    emit_ideal(opt, rr::power(rr::parse_ideal(ideal_text), l));
    return 0;
}

int cmd_colon(const Options& opt, const std::string& a, const std::string& b) {
    emit_ideal(opt, rr::colon(rr::parse_ideal(a), rr::parse_ideal(b)));
    return 0;
}

int cmd_intersect(const Options& opt, const std::string& a, const std::string& b) {
    emit_ideal(opt, rr::intersect(rr::parse_ideal(a), rr::parse_ideal(b)));
    return 0;
}

int cmd_hilbert(const Options& opt, const std::string& ideal_text, const std::string& arg) {
    rr::MonomialIdeal I = rr::parse_ideal(ideal_text);
    if (arg == "poly") {
        rr::HilbertPolynomial P;
        long long l_start = 1;
        for (;; ++l_start) {
            P = rr::hilbert_polynomial(I, l_start);
            if (P.verified) break;
            if (l_start >= 64)
                throw rr::Error("Hilbert polynomial did not stabilize by l_start = 64");
        }
        if (opt.json_out) {
            std::cout << json{{"c2", rational_text(P.c2)},
                              {"c1", rational_text(P.c1)},
                              {"c0", rational_text(P.c0)},
                              {"l_start", l_start},
                              {"verified", true}}
                             .dump(2)
                      << "\n";
        } else {
            std::cout << "P(l) = " << rational_text(P.c2) << "*l^2 + " << rational_text(P.c1)
                      << "*l + " << rational_text(P.c0) << "  (fit at l_start = " << l_start
                      << ")\n";
        }
        return 0;
    }
    long long l = 0;
    try {
        std::size_t used = 0;
        l = std::stoll(arg, &used);
        if (used != arg.size()) throw std::invalid_argument(arg);
    } catch (const std::logic_error&) {
        throw rr::ParseError("expected an integer l or \"poly\"", 0);
    }
    long long H = rr::hilbert_function(I, l);
    if (opt.json_out)
        std::cout << json{{"l", l}, {"value", H}}.dump(2) << "\n";
    else
        std::cout << H << "\n";
    return 0;
}

int cmd_semigroup(const Options& opt, const std::string& gens_text, const std::string& value,
                  const std::string& alpha, const std::string& beta) {
    rr::NumericalSemigroup S(parse_int_list(gens_text));
    json j{{"generators", S.generators()},
           {"h", S.gcd()},
           {"frobenius", S.frobenius()},
           {"big_lambda", S.big_lambda()}};
    if (!opt.json_out) {
        std::cout << "generators:";
        for (long long g : S.generators()) std::cout << " " << g;
        std::cout << "\nh: " << S.gcd() << "\ng: " << S.frobenius()
                  << "\nLambda: " << S.big_lambda() << "\n";
    }
    if (!value.empty()) {
        long long s = parse_int_list(value).at(0);
        bool member = S.contains(s);
        if (opt.json_out) {
            json v{{"s", s}, {"member", member}};
            if (member) {
                v["lambda"] = S.lambda_min(s);
                v["min_representation"] = S.min_representation(s);
            }
            j["value"] = v;
        } else if (member) {
            std::cout << s << ": member, lambda = " << S.lambda_min(s) << ", ";
            auto rep = S.min_representation(s);
            std::cout << s << " =";
            bool any = false;
            for (std::size_t i = 0; i < rep.size(); ++i) {
                if (rep[i] == 0) continue;
                std::cout << (any ? " + " : " ") << rep[i] << "*" << S.generators()[i];
                any = true;
            }
            if (!any) std::cout << " 0";
            std::cout << "\n";
        } else {
            std::cout << s << ": not a member\n";
        }
    }
    if (!alpha.empty()) {
        rr::Rational a = parse_rational(alpha);
        rr::Rational b = beta.empty() ? rr::Rational(0) : parse_rational(beta);
        long long L = S.bound_L(a, b);
        if (opt.json_out)
            j["bound_L"] = L;
        else
            std::cout << "bound_L(alpha = " << rational_text(a) << ", beta = "
                      << rational_text(b) << ") = " << L << "\n";
    }
    if (opt.json_out) std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_classify(const Options& opt, const std::string& ideal_text) {
    rr::MonomialIdeal I = rr::parse_ideal(ideal_text);
    rr::IdealClass cls = rr::classify(I);
    if (opt.json_out)
        std::cout << rr::to_json(cls).dump(2) << "\n";
    else
        std::cout << rr::to_text(cls) << "\n";
    if (opt.stair && !opt.json_out) std::cout << rr::staircase(I);
    return 0;
}

int cmd_check_powers(const Options& opt, const std::string& ideal_text, long long lmax) {
    rr::MonomialIdeal I = rr::parse_ideal(ideal_text);
    if (!rr::is_m_primary(I)) throw rr::NotPrimary();
    if (lmax < 1) throw rr::BadParameters("check-powers: --lmax must be >= 1");
    json rows = json::array();
    rr::MonomialIdeal P = I;
    bool any_uncertified = false;
    for (long long l = 1; l <= lmax; ++l) {
        auto [m, res] = rr::closure(P, opt.max_l);
        rr::MonomialIdeal full = rr::product(principal(m), res.closure);
        std::vector<rr::Monomial> added;
        for (const rr::Monomial& g : full.generators())
            if (!P.contains_monomial(g)) added.push_back(g);
        bool is_rr = added.empty();
        any_uncertified = any_uncertified || !res.certified;
        if (opt.json_out) {
            json entry{{"l", l}, {"is_rr", is_rr}, {"certified", res.certified}};
            json ja = json::array();
            for (const rr::Monomial& g : added) ja.push_back({g.a, g.b});
            entry["added"] = ja;
            rows.push_back(entry);
        } else {
            std::cout << "l = " << l << ": ";
            if (is_rr) {
                std::cout << "Ratliff-Rush";
            } else {
                std::cout << "NOT Ratliff-Rush (closure adds";
                for (const rr::Monomial& g : added) std::cout << " " << rr::to_text(g);
                std::cout << ")";
            }
            if (!res.certified) std::cout << "  [uncertified]";
            std::cout << "\n";
        }
        if (l < lmax) P = rr::product(P, I);
    }
    if (any_uncertified) uncertified_banner(opt, opt.max_l);
    if (opt.json_out) std::cout << rows.dump(2) << "\n";
    return 0;
}

int cmd_decompose(const Options& opt, const std::string& ideal_text, long long l) {
    rr::MonomialIdeal I = rr::parse_ideal(ideal_text);
    rr::PowerDecomposition D = rr::power_decomposition(I, l);
    rr::IdealClass cls = rr::classify(I);
    long long d = cls.d;
    if (opt.json_out) {
        std::cout << json{{"l", l},
                          {"holds", D.holds},
                          {"s_part", rr::to_json(D.s_part)},
                          {"t_part", rr::to_json(D.t_part)},
                          {"i_m", rr::to_json(D.i_m)},
                          {"m_power_exponent", d * (l - 2)},
                          {"m_is_max_power", D.m_is_max_power}}
                         .dump(2)
                  << "\n";
        return 0;
    }
    std::cout << "I^" << l << " = y^" << d * (l - 1) << "*I_S + x^" << d * (l - 1)
              << "*I_T + x^" << d << "*y^" << d << "*I_M\n";
    std::cout << "holds: " << (D.holds ? "yes" : "no") << "\n";
    std::cout << "I_M: " << rr::to_text(D.i_m) << "\n";
    std::cout << "I_M = m^" << d * (l - 2) << ": " << (D.m_is_max_power ? "yes" : "no") << "\n";
    if (opt.stair) std::cout << rr::staircase(rr::power(I, l));
    return 0;
}

int cmd_enumerate(const Options& opt, long long d) {
    rr::EnumerationSummary s = rr::enumerate_equal_degree(d);
    if (opt.json_out)
        std::cout << json{{"d", d}, {"total", s.total}, {"rr", s.rr}, {"half", s.half}}.dump(2)
                  << "\n";
    else
        std::cout << "d = " << d << ": " << s.total << " ideals, " << s.rr
                  << " Ratliff-Rush, " << s.half << " with a_1 >= d/2 or b_1 >= d/2\n";
    return 0;
}

int cmd_family(const Options& opt, const std::string& name,
               const std::vector<long long>& params) {
    emit_ideal(opt, rr::family_ideal(name, params));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Ratliff-Rush closures of monomial ideals in k[x,y]"};
    app.require_subcommand(1);

    Options opt;
    auto add_globals = [&](CLI::App* a) {
        a->add_flag("--json", opt.json_out, "structured JSON output");
        a->add_flag("--staircase", opt.stair, "append an ASCII staircase diagram");
        a->add_flag("--oracle", opt.oracle, "cross-check against the brute-force oracle");
        a->add_flag("--quiet", opt.quiet, "suppress notes and banners");
        a->add_option("--max-l", opt.max_l, "brute-force colon-chain cap (default 12)")
            ->check(CLI::PositiveNumber);
    };
    add_globals(&app);

    std::string ideal_a, ideal_b, arg_s, sg_value, sg_alpha, sg_beta, fam_name;
    long long arg_l = 0, lmax = 4, enum_d = 0;
    std::vector<long long> fam_params;

    CLI::App* c_closure = app.add_subcommand("closure", "Ratliff-Rush closure");
    c_closure->add_option("ideal", ideal_a, "ideal (generator list)")->required();

    CLI::App* c_reduction = app.add_subcommand("reduction", "reduction number r(I)");
    c_reduction->add_option("ideal", ideal_a)->required();

    CLI::App* c_power = app.add_subcommand("power", "I^l");
    c_power->add_option("ideal", ideal_a)->required();
    c_power->add_option("l", arg_l, "exponent")->required();

    CLI::App* c_colon = app.add_subcommand("colon", "I : J");
    c_colon->add_option("I", ideal_a)->required();
    c_colon->add_option("J", ideal_b)->required();

    CLI::App* c_intersect = app.add_subcommand("intersect", "I intersect J");
    c_intersect->add_option("I", ideal_a)->required();
    c_intersect->add_option("J", ideal_b)->required();

    CLI::App* c_hilbert = app.add_subcommand("hilbert", "Hilbert function or polynomial");
    c_hilbert->add_option("ideal", ideal_a)->required();
    c_hilbert->add_option("l", arg_s, "index l, or \"poly\"")->required();

    CLI::App* c_semigroup = app.add_subcommand("semigroup", "numerical semigroup data");
    c_semigroup->add_option("generators", arg_s, "comma-separated generators")->required();
    c_semigroup->add_option("--value", sg_value, "report membership/lambda for this value");
    c_semigroup->add_option("--alpha", sg_alpha, "bound_L alpha (rational, e.g. 1/2)");
    c_semigroup->add_option("--beta", sg_beta, "bound_L beta (rational)");

    CLI::App* c_classify = app.add_subcommand("classify", "ideal class");
    c_classify->add_option("ideal", ideal_a)->required();

    CLI::App* c_check = app.add_subcommand("check-powers", "Ratliff-Rush status of powers");
    c_check->add_option("ideal", ideal_a)->required();
    c_check->add_option("--lmax", lmax, "check l = 1..lmax (default 4)");

    CLI::App* c_decompose = app.add_subcommand("decompose", "power decomposition");
    c_decompose->add_option("ideal", ideal_a)->required();
    c_decompose->add_option("l", arg_l, "power (l >= 2)")->required();

    CLI::App* c_enumerate = app.add_subcommand("enumerate", "all equal-degree ideals");
    c_enumerate->add_option("d", enum_d, "degree (2..22)")->required();

    CLI::App* c_family = app.add_subcommand("family", "named family (I_d, I_dk, I_k, I_nk)");
    c_family->add_option("name", fam_name)->required();
    c_family->add_option("params", fam_params, "family parameters");

    for (CLI::App* sub : app.get_subcommands({})) add_globals(sub);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (opt.max_l < 0) {
        if (const char* env = std::getenv("RR_MAX_L")) {
            try {
                std::size_t used = 0;
                opt.max_l = std::stoll(env, &used);
                if (used != std::string(env).size() || opt.max_l < 1)
                    throw std::invalid_argument(env);
            } catch (const std::logic_error&) {
                std::cerr << "invalid RR_MAX_L value: " << env << "\n";
                return 2;
            }
        } else {
            opt.max_l = 12;
        }
    }

    try {
        if (app.got_subcommand(c_closure)) return cmd_closure(opt, ideal_a);
        if (app.got_subcommand(c_reduction)) return cmd_reduction(opt, ideal_a);
        if (app.got_subcommand(c_power)) return cmd_power(opt, ideal_a, arg_l);
        if (app.got_subcommand(c_colon)) return cmd_colon(opt, ideal_a, ideal_b);
        if (app.got_subcommand(c_intersect)) return cmd_intersect(opt, ideal_a, ideal_b);
        if (app.got_subcommand(c_hilbert)) return cmd_hilbert(opt, ideal_a, arg_s);
        if (app.got_subcommand(c_semigroup))
            return cmd_semigroup(opt, arg_s, sg_value, sg_alpha, sg_beta);
        if (app.got_subcommand(c_classify)) return cmd_classify(opt, ideal_a);
        if (app.got_subcommand(c_check)) return cmd_check_powers(opt, ideal_a, lmax);
        if (app.got_subcommand(c_decompose)) return cmd_decompose(opt, ideal_a, arg_l);
        if (app.got_subcommand(c_enumerate)) return cmd_enumerate(opt, enum_d);
        if (app.got_subcommand(c_family)) return cmd_family(opt, fam_name, fam_params);
    } catch (const rr::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const rr::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
