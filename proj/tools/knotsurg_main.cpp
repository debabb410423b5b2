// Command-line surface for the surgery-invariant library: every subcommand
// maps to one library operation (or a fixed composition) and prints exact
// values only (decimal integers and num/den strings).

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "knotsurg/algebra.hpp"
#include "knotsurg/dedekind.hpp"
#include "knotsurg/json_io.hpp"
#include "knotsurg/lescop.hpp"
#include "knotsurg/norms.hpp"
#include "knotsurg/presentations.hpp"
#include "knotsurg/reports.hpp"
#include "knotsurg/verifier.hpp"

namespace ks = knotsurg;

namespace {

std::vector<long long> parse_ll_list(const std::string& csv, const char* what) {
    std::vector<long long> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t pos = 0;
            out.push_back(std::stoll(item, &pos));
            if (pos != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw std::invalid_argument(std::string(what) + ": bad integer '" + item + "'");
        }
    }
    if (out.empty()) throw std::invalid_argument(std::string(what) + ": empty list");
    return out;
}

std::vector<ks::Int> parse_int_list(const std::string& csv, const char* what) {
    std::vector<ks::Int> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(ks::int_from_string(item));
        } catch (const std::exception&) {
            throw std::invalid_argument(std::string(what) + ": bad integer '" + item + "'");
        }
    }
    if (out.empty()) throw std::invalid_argument(std::string(what) + ": empty list");
    return out;
}

int parse_esign(const std::string& s) {
    if (s == "+1" || s == "1" || s == "+") return 1;
    if (s == "-1" || s == "-") return -1;
    throw std::invalid_argument("--esign must be +1 or -1");
}

ks::IntMatrix parse_matrix(const std::string& text) {
    std::vector<std::vector<ks::Int>> rows;
    std::stringstream ss(text);
    std::string row;
    while (std::getline(ss, row, ';')) rows.push_back(parse_int_list(row, "--matrix"));
    if (rows.empty()) throw std::invalid_argument("--matrix: empty");
    const int c = static_cast<int>(rows[0].size());
    ks::IntMatrix m(static_cast<int>(rows.size()), c);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (static_cast<int>(rows[i].size()) != c) throw std::invalid_argument("--matrix: ragged rows");
        for (int j = 0; j < c; ++j) m.at(static_cast<int>(i), j) = rows[i][static_cast<std::size_t>(j)];
    }
    return m;
}

struct OutputOptions {
    std::string out_file;
    std::string format = "json";
};

void add_output_options(CLI::App* cmd, OutputOptions& opts) {
    cmd->add_option("--out", opts.out_file, "write the report to FILE instead of stdout");
    cmd->add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));
}

void emit(const OutputOptions& opts, const std::string& payload) {
    if (opts.out_file.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream f(opts.out_file, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot open output file: " + opts.out_file);
    f << payload;
}

std::string render_json(const ks::Json& j) { return j.dump(2) + "\n"; }

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += "\"";
    return out;
}

std::string trace_csv_header() {
    return "alpha,beta,q1,q2,q3,e_sign,verdict,rule,lambda_x,e,S,exact_lhs,exact_rhs,"
           "exact_holds,coarse_lhs,coarse_rhs,coarse_holds,coefficient_equation,detail\n";
}

std::string opt_rat(const std::optional<ks::Rational>& r) { return r ? r->str() : ""; }
std::string opt_bool(const std::optional<bool>& b) { return b ? (*b ? "true" : "false") : ""; }

std::string trace_csv_row(const ks::EliminationTrace& t) {
    std::ostringstream os;
    const auto& p = t.candidate;
    os << p.alpha << ',' << p.beta << ',' << p.q1 << ',' << p.q2 << ',' << p.q3 << ','
       << p.e_sign << ',' << ks::verdict_name(t.verdict) << ',' << ks::rule_name(t.rule) << ','
       << opt_rat(t.lambda_x) << ',' << opt_rat(t.euler) << ',' << opt_rat(t.dedekind_s) << ','
       << opt_rat(t.exact_lhs) << ',' << opt_rat(t.exact_rhs) << ',' << opt_bool(t.exact_holds)
       << ',' << opt_rat(t.coarse_lhs) << ',' << opt_rat(t.coarse_rhs) << ','
       << opt_bool(t.coarse_holds) << ','
       << (t.coefficient_value ? t.coefficient_value->get_str() : std::string()) << ','
       << csv_escape(t.detail) << '\n';
    return os.str();
}

std::string trace_text_line(const ks::EliminationTrace& t) {
    std::ostringstream os;
    const auto& p = t.candidate;
    os << "(" << p.alpha << "," << p.beta << "," << p.q1 << "," << p.q2 << "," << p.q3
       << ", e" << (p.e_sign > 0 ? "+" : "-") << ") " << ks::verdict_name(t.verdict) << " by "
       << ks::rule_name(t.rule);
    if (t.lambda_x) os << "  lambda=" << t.lambda_x->str();
    os << "\n    " << t.detail << "\n";
    return os.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact knot-surgery invariants: cyclotomic torsion norms, Dedekind sums, "
                 "Casson-Walker-Lescop values, and the Seifert candidate eliminator"};
    app.require_subcommand(1);

    // --- norm ---------------------------------------------------------
    auto* norm_cmd = app.add_subcommand("norm", "cyclotomic norm of a Laurent polynomial");
    std::string norm_coeffs;
    long norm_offset = 0;
    long norm_d_arg = 5;
    OutputOptions norm_out;
    norm_cmd->add_option("--coeffs", norm_coeffs, "comma-separated integer coefficients")->required();
    norm_cmd->add_option("--offset", norm_offset, "exponent of the first coefficient (default 0)");
    norm_cmd->add_option("--d", norm_d_arg, "root-of-unity order d")->required();
    add_output_options(norm_cmd, norm_out);

    // --- dedekind ------------------------------------------------------
    auto* ded_cmd = app.add_subcommand("dedekind", "Dedekind sum s(q, p)");
    long long ded_q = 0, ded_p = 1;
    OutputOptions ded_out;
    ded_cmd->add_option("--q", ded_q, "numerator")->required();
    ded_cmd->add_option("--p", ded_p, "modulus (positive)")->required();
    add_output_options(ded_cmd, ded_out);

    // --- lescop-2bridge --------------------------------------------------
    auto* l2_cmd = app.add_subcommand("lescop-2bridge",
                                      "Lescop invariant of surgery on a 2-bridge link");
    std::string l2_dseq, l2_surgery;
    OutputOptions l2_out;
    l2_cmd->add_option("--dseq", l2_dseq, "odd-length sequence a1,b1,a2,...,an")->required();
    l2_cmd->add_option("--surgery", l2_surgery, "two coefficients p1/q1,p2/q2")->required();
    add_output_options(l2_cmd, l2_out);

    // --- lescop-seifert ---------------------------------------------------
    auto* ls_cmd = app.add_subcommand("lescop-seifert",
                                      "Lescop invariant of the double-cover Seifert candidate");
    long long ls_alpha = 1, ls_beta = 1, ls_q1 = 1, ls_q2 = 1, ls_q3 = 0;
    std::string ls_esign = "+1";
    OutputOptions ls_out;
    ls_cmd->add_option("--alpha", ls_alpha)->required();
    ls_cmd->add_option("--beta", ls_beta)->required();
    ls_cmd->add_option("--q1", ls_q1)->required();
    ls_cmd->add_option("--q2", ls_q2)->required();
    ls_cmd->add_option("--q3", ls_q3)->required();
    ls_cmd->add_option("--esign", ls_esign, "+1 or -1");
    add_output_options(ls_cmd, ls_out);

    // --- h1 ----------------------------------------------------------------
    auto* h1_cmd = app.add_subcommand("h1", "first homology from a presentation or matrix");
    long long h1_alpha = 1, h1_beta = 1, h1_q1 = 1, h1_q2 = 1, h1_q3 = 0;
    std::string h1_matrix;
    OutputOptions h1_out;
    h1_cmd->add_option("--alpha", h1_alpha);
    h1_cmd->add_option("--beta", h1_beta);
    h1_cmd->add_option("--q1", h1_q1);
    h1_cmd->add_option("--q2", h1_q2);
    h1_cmd->add_option("--q3", h1_q3);
    h1_cmd->add_option("--matrix", h1_matrix, "relation matrix rows 'a,b;c,d' (Smith normal form mode)");
    add_output_options(h1_cmd, h1_out);

    // --- lift ----------------------------------------------------------------
    auto* lift_cmd = app.add_subcommand("lift", "double-cover lift of an M presentation");
    long long lf_alpha = 1, lf_beta = 1, lf_q1 = 1, lf_q2 = 1, lf_q3 = 0;
    OutputOptions lift_out;
    lift_cmd->add_option("--alpha", lf_alpha)->required();
    lift_cmd->add_option("--beta", lf_beta)->required();
    lift_cmd->add_option("--q1", lf_q1)->required();
    lift_cmd->add_option("--q2", lf_q2)->required();
    lift_cmd->add_option("--q3", lf_q3)->required();
    add_output_options(lift_cmd, lift_out);

    // --- verify ----------------------------------------------------------------
    auto* ver_cmd = app.add_subcommand("verify", "run the Seifert case elimination for one knot input");
    long long ver_q = 0;
    std::string ver_lambda, ver_norm5;
    bool ver_sigma = true, ver_alex = true;
    OutputOptions ver_out;
    ver_cmd->add_option("--q", ver_q, "surgery denominator of 2/q")->required();
    ver_cmd->add_option("--lambda-q", ver_lambda, "lambda_q as num/den or integer")->required();
    ver_cmd->add_option("--norm5", ver_norm5, "order-5 torsion norm (nonnegative integer)")->required();
    ver_cmd->add_option("--sigma-zero", ver_sigma, "ambient Lescop invariant vanishes (default true)");
    ver_cmd->add_option("--alexander-ok", ver_alex, "Alexander polynomial matches the required class (default true)");
    add_output_options(ver_cmd, ver_out);

    // --- sweep ---------------------------------------------------------------
    auto* sweep_cmd = app.add_subcommand("sweep", "exhaustive candidate sweep over coprime alpha <= beta");
    int sweep_max_beta = 10;
    int sweep_jobs = 1;
    OutputOptions sweep_out;
    sweep_cmd->add_option("--max-beta", sweep_max_beta, "upper bound for beta (>= 4)")->required();
    sweep_cmd->add_option("--jobs", sweep_jobs, "worker threads (output is identical for any value)");
    add_output_options(sweep_cmd, sweep_out);

    // --- fig8-table ------------------------------------------------------------
    auto* f8_cmd = app.add_subcommand("fig8-table", "figure-eight surgery table over a q range");
    long long f8_min = -5, f8_max = 5;
    OutputOptions f8_out;
    f8_cmd->add_option("--q-min", f8_min)->required();
    f8_cmd->add_option("--q-max", f8_max)->required();
    add_output_options(f8_cmd, f8_out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (*norm_cmd) {
            auto coeffs = parse_int_list(norm_coeffs, "--coeffs");
            auto poly = ks::LaurentPoly1::from_coeff_list(coeffs, norm_offset);
            auto result = ks::norm_d_result(poly, norm_d_arg);
            ks::Json j{{"poly", ks::poly_json(result.input)},
                       {"d", result.d},
                       {"norm", ks::int_json(result.value)}};
            if (norm_out.format == "csv") throw std::invalid_argument("norm: csv not supported");
            if (norm_out.format == "text") {
                emit(norm_out, "|f|_" + std::to_string(result.d) + " = " + result.value.get_str() +
                                   "  (f = " + result.input.str() + ")\n");
            } else {
                emit(norm_out, render_json(j));
            }
            return 0;
        }

        if (*ded_cmd) {
            ks::Rational s = ks::dedekind_sum(ded_q, ded_p);
            ks::Json j{{"q", ded_q}, {"p", ded_p}, {"s", ks::rational_json(s)}};
            if (ded_out.format == "csv") throw std::invalid_argument("dedekind: csv not supported");
            if (ded_out.format == "text") {
                emit(ded_out, "s(" + std::to_string(ded_q) + ", " + std::to_string(ded_p) +
                                  ") = " + s.str() + "\n");
            } else {
                emit(ded_out, render_json(j));
            }
            return 0;
        }

        if (*l2_cmd) {
            ks::DSequence d(parse_ll_list(l2_dseq, "--dseq"));
            std::vector<std::string> coeffs;
            std::stringstream ss(l2_surgery);
            std::string item;
            while (std::getline(ss, item, ',')) coeffs.push_back(item);
            if (coeffs.size() != 2) throw std::invalid_argument("--surgery needs two coefficients");
            ks::Rational c1 = ks::Rational::from_string(coeffs[0]);
            ks::Rational c2 = ks::Rational::from_string(coeffs[1]);
            auto v = ks::lescop_two_bridge_detail(d, c1, c2);
            ks::Json j = ks::two_bridge_json(d, c1, c2, v);
            if (l2_out.format == "csv") throw std::invalid_argument("lescop-2bridge: csv not supported");
            if (l2_out.format == "text") {
                emit(l2_out, "lambda = " + v.lambda.str() + "\n[L] = " + v.bracket_l.str() +
                                 ", [K1] = " + v.bracket_k1.str() + ", [K2] = " + v.bracket_k2.str() +
                                 "\ntr = " + v.trace.str() + ", det = " + v.det.str() +
                                 ", sigma = " + std::to_string(v.sigma) +
                                 ", b- = " + std::to_string(v.b_minus) +
                                 ", |p| = " + v.abs_p.get_str() + "\n");
            } else {
                emit(l2_out, render_json(j));
            }
            return 0;
        }

        if (*ls_cmd) {
            ks::SeifertParams p{ls_alpha, ls_beta, ls_q1, ls_q2, ls_q3, parse_esign(ls_esign)};
            ks::Rational lambda = ks::lescop_seifert_X(p);
            ks::Rational S = ks::dedekind_S(p);
            ks::XPresentation x{p.alpha, p.beta, p.q1, p.q2, p.q3};
            ks::Json j = ks::seifert_json(p);
            j["S"] = ks::rational_json(S);
            j["e"] = ks::rational_json(ks::euler_e(x));
            j["coefficient_equation"] = ks::int_json(ks::coefficient_equation(x));
            j["lambda"] = ks::rational_json(lambda);
            if (ls_out.format == "csv") throw std::invalid_argument("lescop-seifert: csv not supported");
            if (ls_out.format == "text") {
                emit(ls_out, "lambda = " + lambda.str() + "  (S = " + S.str() + ")\n");
            } else {
                emit(ls_out, render_json(j));
            }
            return 0;
        }

        if (*h1_cmd) {
            ks::Json j;
            if (!h1_matrix.empty()) {
                ks::IntMatrix m = parse_matrix(h1_matrix);
                auto factors = ks::h1_group_from_linking(m);
                ks::Json rows = ks::Json::array();
                for (int i = 0; i < m.rows(); ++i) {
                    ks::Json row = ks::Json::array();
                    for (int jj = 0; jj < m.cols(); ++jj) row.push_back(m.at(i, jj).get_str());
                    rows.push_back(row);
                }
                ks::Json f = ks::Json::array();
                for (const auto& v : factors) f.push_back(v.get_str());
                j["matrix"] = rows;
                j["invariant_factors"] = f;
            } else {
                ks::XPresentation x{h1_alpha, h1_beta, h1_q1, h1_q2, h1_q3};
                j["alpha"] = x.alpha;
                j["beta"] = x.beta;
                j["q1"] = x.q1;
                j["q2"] = x.q2;
                j["q3"] = x.q3;
                j["e"] = ks::rational_json(ks::euler_e(x));
                const ks::Int coeff = ks::coefficient_equation(x);
                j["coefficient_equation"] = ks::int_json(coeff);
                auto order = ks::h1_order_X(x);
                j["h1_order_x"] = order ? ks::Json(order->get_str()) : ks::Json("infinite");
                j["consistent_with_Z5"] = order.has_value() && *order == 5;
                if (h1_alpha == 1 && h1_beta == 1) {
                    j["h1_order_m"] = ks::int_json(ks::h1_order_M_alpha_beta_1(h1_q1, h1_q2, h1_q3));
                }
            }
            if (h1_out.format == "csv") throw std::invalid_argument("h1: csv not supported");
            emit(h1_out, render_json(j));
            return 0;
        }

        if (*lift_cmd) {
            ks::MPresentation m{lf_alpha, lf_beta, lf_q1, lf_q2, lf_q3};
            ks::XPresentation x = ks::lift_double_cover(m);
            const ks::Int coeff = ks::coefficient_equation(x);
            auto order = ks::h1_order_X(x);
            ks::Json j;
            j["m"] = ks::m_presentation_json(m);
            j["x"] = ks::x_presentation_json(x);
            j["coefficient_equation"] = ks::int_json(coeff);
            j["h1_order_x"] = order ? ks::Json(order->get_str()) : ks::Json("infinite");
            j["consistent_with_Z5"] = order.has_value() && *order == 5;
            if (lift_out.format == "csv") throw std::invalid_argument("lift: csv not supported");
            emit(lift_out, render_json(j));
            return 0;
        }

        if (*ver_cmd) {
            ks::KnotGateInput input;
            input.q = ver_q;
            input.lambda_q = ks::Rational::from_string(ver_lambda);
            input.norm5 = ks::int_from_string(ver_norm5);
            input.lescop_sigma_zero = ver_sigma;
            input.alexander_ok = ver_alex;
            ks::VerifyReport report = ks::verify_knot(input);
            if (ver_out.format == "csv") {
                std::string payload = trace_csv_header();
                for (const auto& t : report.traces) payload += trace_csv_row(t);
                emit(ver_out, payload);
            } else if (ver_out.format == "text") {
                std::ostringstream os;
                os << "q = " << input.q << ", lambda_q = " << input.lambda_q.str()
                   << ", norm5 = " << input.norm5.get_str() << "\n"
                   << "gate (sqrt(norm5) >= 4*lambda^2 - 1): " << (report.gate_24 ? "holds" : "FAILS")
                   << "\nverdict: " << (report.no_survivor() ? "not Seifert-realizable" : "survivors found")
                   << "\n";
                for (const auto& t : report.traces) os << trace_text_line(t);
                emit(ver_out, os.str());
            } else {
                emit(ver_out, render_json(ks::verify_json(report)));
            }
            return report.no_survivor() ? 0 : 3;
        }

        if (*sweep_cmd) {
            ks::SweepReport report = ks::sweep_parameters(sweep_max_beta, sweep_jobs);
            if (sweep_out.format == "csv") {
                std::string payload = trace_csv_header();
                for (const auto& t : report.traces) payload += trace_csv_row(t);
                emit(sweep_out, payload);
            } else if (sweep_out.format == "text") {
                std::ostringstream os;
                os << "sweep up to beta = " << report.max_beta << ": " << report.candidates
                   << " candidate classes, " << report.survivors.size() << " surviving\n";
                for (int i = 0; i < ks::kRuleCount; ++i) {
                    os << "  " << ks::rule_name(static_cast<ks::Rule>(i)) << ": "
                       << report.eliminated_by_rule[static_cast<std::size_t>(i)] << "\n";
                }
                os << "coarse-kills-but-exact-spares: " << report.coarse_without_exact
                   << ", exact-kills-but-coarse-spares: " << report.exact_without_coarse << "\n";
                for (const auto& t : report.survivors) os << trace_text_line(t);
                emit(sweep_out, os.str());
            } else {
                emit(sweep_out, render_json(ks::sweep_json(report)));
            }
            return 0;
        }

        if (*f8_cmd) {
            auto rows = ks::fig8_table(f8_min, f8_max);
            if (f8_out.format == "csv") {
                std::string payload = "q,lambda_q,norm5,ineq_24_holds\n";
                for (const auto& r : rows) {
                    payload += std::to_string(r.q) + "," + r.lambda_q.str() + "," +
                               r.norm5.get_str() + "," + (r.ineq_24_holds ? "true" : "false") + "\n";
                }
                emit(f8_out, payload);
            } else if (f8_out.format == "text") {
                std::ostringstream os;
                os << "q\tlambda_q\tnorm5\tineq_24_holds\n";
                for (const auto& r : rows) {
                    os << r.q << "\t" << r.lambda_q.str() << "\t" << r.norm5.get_str() << "\t"
                       << (r.ineq_24_holds ? "true" : "false") << "\n";
                }
                emit(f8_out, os.str());
            } else {
                emit(f8_out, render_json(ks::fig8_rows_json(rows)));
            }
            return 0;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
