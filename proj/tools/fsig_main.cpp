// fsig: F-signature and multiplicity quasi-polynomials of quotient
// singularities, exactly. Subcommands: cyclic, table, group, eval, verify.

#include <CLI11.hpp>

#include <charconv>
#include <cstdlib>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "fsig/cyclic.hpp"
#include "fsig/group.hpp"
#include "fsig/quasi_polynomial.hpp"

namespace {

using fsig::BigInt;
using fsig::CyclicSingularity;
using fsig::Error;
using fsig::ErrorCode;
using fsig::QuasiPolynomial;
using fsig::Rational;
using fsig::RenderFormat;

RenderFormat parse_format(const std::string& name) {
    if (name == "text") return RenderFormat::Text;
    if (name == "latex") return RenderFormat::Latex;
    if (name == "json") return RenderFormat::Json;
    throw Error(ErrorCode::InvalidInput, "unknown format '" + name + "'");
}

BigInt parse_prime(const std::string& text) {
    BigInt p;
    if (mpz_set_str(p.get_mpz_t(), text.c_str(), 10) != 0 || p < 2) {
        throw Error(ErrorCode::InvalidInput, "p must be a positive integer, got '" + text + "'");
    }
    if (mpz_probab_prime_p(p.get_mpz_t(), 40) == 0) {
        throw Error(ErrorCode::InvalidInput, "p = " + text + " is not prime");
    }
    return p;
}

unsigned parse_alpha(const std::string& text) {
    unsigned value = 0;
    const char* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc() || ptr != end) {
        throw Error(ErrorCode::InvalidInput, "--alpha must be a nonnegative integer or 'all'");
    }
    return value;
}

unsigned long long oracle_cap(std::optional<unsigned long long> flag_value) {
    if (flag_value) return *flag_value;
    if (const char* env = std::getenv("FSIG_ORACLE_CAP")) {
        unsigned long long value = 0;
        const char* end = env + std::char_traits<char>::length(env);
        auto [ptr, ec] = std::from_chars(env, end, value);
        if (ec != std::errc() || ptr != end || value == 0) {
            throw Error(ErrorCode::InvalidInput,
                        std::string("FSIG_ORACLE_CAP must be a positive integer, got '") + env + "'");
        }
        return value;
    }
    return fsig::kDefaultOracleCap;
}

std::string label_for(unsigned alpha) {
    return alpha == 0 ? std::string("FS(e)") : "mult(M_" + std::to_string(alpha) + ", e)";
}

void print_function(std::ostream& os, const std::string& label, const QuasiPolynomial& qp,
                    RenderFormat format, const std::string& separator = " = ") {
    if (format == RenderFormat::Json) {
        os << qp.to_json() << "\n";
        return;
    }
    const std::string body = qp.render(format);
    if (body.find('\n') == std::string::npos) {
        os << label << separator << body << "\n";
    } else {
        std::string head = label + separator;
        while (!head.empty() && head.back() == ' ') head.pop_back();
        os << head << "\n";
        std::istringstream lines(body);
        std::string line;
        while (std::getline(lines, line)) os << "  " << line << "\n";
    }
}

// alpha groups with identical tables, preserving ascending alpha order.
std::vector<std::pair<std::vector<unsigned>, QuasiPolynomial>> grouped_table(
    const std::vector<QuasiPolynomial>& functions) {
    std::vector<std::pair<std::vector<unsigned>, QuasiPolynomial>> groups;
    for (const QuasiPolynomial& qp : functions) {
        bool merged = false;
        for (auto& [alphas, rep] : groups) {
            if (rep.equals(qp)) {
                alphas.push_back(qp.alpha());
                merged = true;
                break;
            }
        }
        if (!merged) groups.emplace_back(std::vector<unsigned>{qp.alpha()}, qp);
    }
    return groups;
}

void print_table(std::ostream& os, const CyclicSingularity& sing, const BigInt& p,
                 RenderFormat format) {
    std::vector<QuasiPolynomial> functions;
    functions.reserve(sing.order);
    for (unsigned alpha = 0; alpha < sing.order; ++alpha)
        functions.push_back(fsig::multiplicity_qpoly(sing, p, alpha));

    if (format == RenderFormat::Json) {
        os << "[\n";
        for (std::size_t i = 0; i < functions.size(); ++i)
            os << functions[i].to_json() << (i + 1 < functions.size() ? ",\n" : "\n");
        os << "]\n";
        return;
    }
    for (const auto& [alphas, qp] : grouped_table(functions)) {
        std::string label = "alpha = ";
        for (std::size_t i = 0; i < alphas.size(); ++i)
            label += (i ? ", " : "") + std::to_string(alphas[i]);
        print_function(os, label, qp, format, ": ");
    }
}

// phi_c(r) for every unit residue r, independent of any particular p.
void print_generic_residue_report(std::ostream& os, const CyclicSingularity& sing, unsigned alpha) {
    os << "phi_c(r) for 1/" << sing.order << ", alpha = " << alpha
       << " (rows: r coprime to n; columns: c = 0.." << sing.dimension() << ")\n";
    if (sing.order == 1) {
        os << "r = 1: trivial group, FS(e) = p^{" << sing.dimension() << "e}\n";
        return;
    }
    for (unsigned r = 1; r < sing.order; ++r) {
        if (std::gcd(r, sing.order) != 1u) continue;
        os << "r = " << r << ":";
        for (unsigned c = 0; c <= sing.dimension(); ++c)
            os << " " << fsig::phi(sing, c, alpha, r).str();
        os << "\n";
    }
}

struct VerifyStats {
    unsigned long long cases = 0;
    unsigned long long failures = 0;
};

void verify_case(std::ostream& os, const CyclicSingularity& sing, const BigInt& p, unsigned long e,
                 unsigned long long cap, bool per_alpha_lines, VerifyStats& stats) {
    const std::vector<BigInt> oracle = fsig::brute_force_all(sing, p, e, cap);
    unsigned mismatches = 0;
    for (unsigned alpha = 0; alpha < sing.order; ++alpha) {
        const QuasiPolynomial qp = fsig::multiplicity_qpoly(sing, p, alpha);
        const Rational engine = qp.evaluate(e);
        const bool ok = engine.is_integer() && engine.numerator() == oracle[alpha];
        ++stats.cases;
        if (!ok) {
            ++mismatches;
            ++stats.failures;
        }
        if (per_alpha_lines || !ok) {
            os << (ok ? "PASS" : "FAIL") << " alpha=" << alpha << ": engine " << engine.str()
               << ", oracle " << oracle[alpha].get_str() << "\n";
        }
    }
    if (!per_alpha_lines) {
        std::string weights;
        for (std::size_t i = 0; i < sing.weights.size(); ++i)
            weights += (i ? "," : "") + std::to_string(sing.weights[i]);
        os << (mismatches == 0 ? "PASS" : "FAIL") << " 1/" << sing.order << "(" << weights
           << ") p=" << p.get_str() << " e=" << e << " (" << sing.order << " alphas)\n";
    }
}

// Every valid weight vector with n <= 10, d <= 3, p in {7, 11}, e = 1.
void verify_default_sweep(std::ostream& os, unsigned long long cap, VerifyStats& stats) {
    for (unsigned n = 1; n <= 10; ++n) {
        for (unsigned d = 1; d <= 3; ++d) {
            std::vector<long long> weights(d, 0);
            while (true) {
                bool valid = true;
                CyclicSingularity sing;
                try {
                    sing = fsig::validate_singularity(n, weights);
                } catch (const Error&) {
                    valid = false;
                }
                if (valid) {
                    for (unsigned long p : {7UL, 11UL}) {
                        if (n % p == 0) continue;
                        verify_case(os, sing, BigInt(p), 1, cap, false, stats);
                    }
                }
                unsigned i = 0;
                for (; i < d; ++i) {
                    if (++weights[i] < static_cast<long long>(n)) break;
                    weights[i] = 0;
                }
                if (i == d) break;
            }
        }
    }
}

int run(int argc, char** argv) {
    CLI::App app{"exact F-signature functions of quotient singularities"};
    app.require_subcommand(1);

    std::string format_name = "text";
    std::string prime_text;
    unsigned order = 0;
    std::vector<long long> weights;
    std::string alpha_text = "0";
    std::string group_file;
    std::size_t char_index = 0;
    std::optional<unsigned long> eval_e;
    std::optional<unsigned long long> cap_flag;
    std::string sweep_name;
    bool all_residues = false;

    auto add_cyclic_input = [&](CLI::App* cmd, bool required) {
        auto* n_opt = cmd->add_option("--n", order, "group order n");
        auto* t_opt = cmd->add_option("--t", weights, "weights t_1,...,t_d")->delimiter(',');
        if (required) {
            n_opt->required();
            t_opt->required();
        }
    };

    CLI::App* cyclic =
        app.add_subcommand("cyclic", "quasi-polynomial of a 1/n(t_1,...,t_d) singularity");
    add_cyclic_input(cyclic, true);
    cyclic->add_option("--p", prime_text, "prime p")->required();
    cyclic->add_option("--alpha", alpha_text, "multiplicity index, or 'all' (default 0: FS)");
    cyclic->add_option("--format", format_name, "text | latex | json");
    cyclic->add_flag("--all-residues", all_residues,
                     "report phi_c(r) for every unit residue r (generic-p report)");

    CLI::App* table =
        app.add_subcommand("table", "all n multiplicity functions, grouped by equality");
    add_cyclic_input(table, true);
    table->add_option("--p", prime_text, "prime p")->required();
    table->add_option("--format", format_name, "text | latex | json");

    CLI::App* group = app.add_subcommand("group", "quasi-polynomial from a group-spec JSON file");
    group->add_option("--file", group_file, "group spec path")->required();
    group->add_option("--p", prime_text, "prime p")->required();
    group->add_option("--char", char_index, "character row index (default 0: trivial)");
    group->add_option("--e", eval_e, "evaluate at this e instead of printing the closed form");
    group->add_option("--format", format_name, "text | latex | json");

    CLI::App* eval = app.add_subcommand("eval", "exact value of a multiplicity function at e");
    add_cyclic_input(eval, false);
    eval->add_option("--file", group_file, "group spec path (instead of --n/--t)");
    eval->add_option("--p", prime_text, "prime p")->required();
    eval->add_option("--e", eval_e, "Frobenius exponent e")->required();
    eval->add_option("--alpha", alpha_text, "multiplicity index (cyclic input)");
    eval->add_option("--char", char_index, "character row index (group input)");

    CLI::App* verify = app.add_subcommand("verify", "engine vs brute-force oracle");
    add_cyclic_input(verify, false);
    verify->add_option("--p", prime_text, "prime p");
    verify->add_option("--e", eval_e, "Frobenius exponent e");
    verify->add_option("--sweep", sweep_name, "'default': all n <= 10, d <= 3, p in {7,11}, e = 1");
    verify->add_option("--cap", cap_flag, "oracle enumeration cap (overrides FSIG_ORACLE_CAP)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    const RenderFormat format = parse_format(format_name);

    if (cyclic->parsed()) {
        const CyclicSingularity sing = fsig::validate_singularity(order, weights);
        const BigInt p = parse_prime(prime_text);
        if (all_residues) {
            print_generic_residue_report(std::cout, sing,
                                         alpha_text == "all" ? 0 : parse_alpha(alpha_text));
            return 0;
        }
        if (alpha_text == "all") {
            print_table(std::cout, sing, p, format);
        } else {
            const QuasiPolynomial qp = fsig::multiplicity_qpoly(sing, p, parse_alpha(alpha_text));
            print_function(std::cout, label_for(qp.alpha()), qp, format);
        }
        return 0;
    }

    if (table->parsed()) {
        const CyclicSingularity sing = fsig::validate_singularity(order, weights);
        print_table(std::cout, sing, parse_prime(prime_text), format);
        return 0;
    }

    if (group->parsed()) {
        const fsig::GroupSpec spec = fsig::GroupSpec::from_file(group_file);
        const BigInt p = parse_prime(prime_text);
        if (eval_e) {
            std::cout << fsig::multiplicity_general(spec, p, *eval_e, char_index).str() << "\n";
            return 0;
        }
        const QuasiPolynomial qp = fsig::fsignature_qpoly_general(spec, p, char_index);
        print_function(std::cout,
                       char_index == 0 ? std::string("FS(e)")
                                       : "mult(M_" + std::to_string(char_index) + ", e)",
                       qp, format);
        return 0;
    }

    if (eval->parsed()) {
        const BigInt p = parse_prime(prime_text);
        if (!group_file.empty()) {
            const fsig::GroupSpec spec = fsig::GroupSpec::from_file(group_file);
            std::cout << fsig::multiplicity_general(spec, p, *eval_e, char_index).str() << "\n";
            return 0;
        }
        if (order == 0 || weights.empty()) {
            throw Error(ErrorCode::InvalidInput, "eval needs --n/--t or --file");
        }
        const CyclicSingularity sing = fsig::validate_singularity(order, weights);
        const QuasiPolynomial qp = fsig::multiplicity_qpoly(sing, p, parse_alpha(alpha_text));
        std::cout << qp.evaluate(*eval_e).str() << "\n";
        return 0;
    }

    if (verify->parsed()) {
        const unsigned long long cap = oracle_cap(cap_flag);
        VerifyStats stats;
        if (!sweep_name.empty()) {
            if (sweep_name != "default") {
                throw Error(ErrorCode::InvalidInput, "unknown sweep '" + sweep_name + "'");
            }
            verify_default_sweep(std::cout, cap, stats);
        } else {
            if (order == 0 || weights.empty() || prime_text.empty() || !eval_e) {
                throw Error(ErrorCode::InvalidInput, "verify needs --n, --t, --p, --e (or --sweep)");
            }
            const CyclicSingularity sing = fsig::validate_singularity(order, weights);
            verify_case(std::cout, sing, parse_prime(prime_text), *eval_e, cap, true, stats);
        }
        std::cout << (stats.cases - stats.failures) << "/" << stats.cases << " PASS";
        if (stats.failures) std::cout << ", " << stats.failures << " FAIL";
        std::cout << "\n";
        return stats.failures == 0 ? 0 : 1;
    }

    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        switch (e.code()) {
            case ErrorCode::CapExceeded:
                return 3;
            case ErrorCode::NotRational:
            case ErrorCode::NotInteger:
                return 4;
            default:
                return 2;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
