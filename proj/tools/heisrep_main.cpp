// Command-line surface of the library: exact Heisenberg arithmetic, twisted
// pairings, transvection actions, linearizations, Burau/Gassner matrices, the
// local-system bridge checks, kernel search, and the verification suite.

#include <CLI11.hpp>
#include <iostream>

#include "heisrep/annihilator.hpp"
#include "heisrep/io_json.hpp"
#include "heisrep/lawrence.hpp"
#include "heisrep/linearize.hpp"
#include "heisrep/paper_suite.hpp"
#include "heisrep/pairing.hpp"
#include "heisrep/rep_one.hpp"
#include "heisrep/semidirect.hpp"
#include "heisrep/words.hpp"

using namespace heisrep;

namespace {

struct QuotientFlags {
    long mod_sigma = 0;
    long finite = 0;
    QuotientSpec spec() const {
        if (mod_sigma > 0 && finite > 0)
            throw std::invalid_argument("--mod-sigma and --finite are mutually exclusive");
        if (mod_sigma > 0) return QuotientSpec::mod_sigma(mod_sigma);
        if (finite > 0) return QuotientSpec::finite(finite);
        return QuotientSpec::full();
    }
};

void add_quotient_flags(CLI::App* cmd, QuotientFlags& q) {
    cmd->add_option("--mod-sigma", q.mod_sigma, "reduce mod sigma^R = 1");
    cmd->add_option("--finite", q.finite, "reduce to the finite quotient mod R");
}

template <class T>
nlohmann::json matrix_to_json(const DenseMatrix<T>& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if constexpr (requires { m(i, j).str(); }) row.push_back(m(i, j).str());
            else row.push_back(m(i, j));
        }
        rows.push_back(row);
    }
    return rows;
}

Region region_of(const std::string& name) {
    if (name == "S") return Region::S;
    if (name == "Sg") return Region::Sg;
    if (name == "V2g") return Region::V2g;
    throw std::invalid_argument("unknown region '" + name + "' (expected S, Sg or V2g)");
}

CurveCatalog load_catalog(const std::string& path, long builtin_k, long boundary_g) {
    if (!path.empty()) return catalog_from_json(load_json_file(path));
    if (builtin_k > 0) return kernel_pair_catalog(builtin_k);
    if (boundary_g > 0) return boundary_twist_catalog(boundary_g);
    throw std::invalid_argument("no catalog: pass --catalog FILE or --builtin-k K");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations with Heisenberg-twisted homological representations"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand
    bool as_json = false;
    app.add_flag("--json", as_json, "emit JSON instead of text");

    // ---- heis ----------------------------------------------------------
    auto* heis = app.add_subcommand("heis", "Heisenberg group arithmetic");
    heis->require_subcommand(1);
    long heis_g = 1;
    QuotientFlags heis_q;
    std::vector<std::string> heis_args;

    auto* heis_mul = heis->add_subcommand("mul", "product of elements in normal form");
    heis_mul->add_option("elements", heis_args, "elements, e.g. \"a1 b1\" \"a1\"")->required();
    heis_mul->add_option("--genus", heis_g, "genus");
    add_quotient_flags(heis_mul, heis_q);

    auto* heis_inv = heis->add_subcommand("inv", "inverse of an element");
    heis_inv->add_option("element", heis_args, "element text")->required();
    heis_inv->add_option("--genus", heis_g, "genus");
    add_quotient_flags(heis_inv, heis_q);

    auto* heis_reduce = heis->add_subcommand("reduce", "image in a quotient");
    heis_reduce->add_option("element", heis_args, "element text")->required();
    heis_reduce->add_option("--genus", heis_g, "genus");
    add_quotient_flags(heis_reduce, heis_q);

    long eval_n = 1;
    auto* heis_eval = heis->add_subcommand("eval", "evaluate a surface braid word");
    heis_eval->add_option("word", heis_args, "word, e.g. \"a1 b1 A1 B1\"")->required();
    heis_eval->add_option("--genus", heis_g, "genus");
    heis_eval->add_option("--n", eval_n, "number of strands");
    add_quotient_flags(heis_eval, heis_q);

    // ---- pair ----------------------------------------------------------
    auto* pair = app.add_subcommand("pair", "twisted intersection pairing of a diagram");
    std::string pair_file;
    long pair_n = 1;
    QuotientFlags pair_q;
    pair->add_option("--file", pair_file, "diagram JSON file")->required();
    pair->add_option("--n", pair_n, "configuration size (n-point diagrams)");
    add_quotient_flags(pair, pair_q);

    // ---- rep -----------------------------------------------------------
    auto* rep = app.add_subcommand("rep", "transvection actions and kernel certificates");
    rep->require_subcommand(1);
    std::string rep_catalog, rep_word, rep_vector = "A1", rep_curve = "alpha", rep_out;
    long rep_builtin_k = 0, rep_boundary_g = 0, rep_nmax = 100;
    QuotientFlags rep_q;

    auto* rep_act = rep->add_subcommand("act", "act on a basis vector by a twist word");
    rep_act->add_option("--catalog", rep_catalog, "curve catalog JSON");
    rep_act->add_option("--builtin-k", rep_builtin_k, "use the built-in genus-2k pair catalog");
    rep_act->add_option("--word", rep_word, "twist word, e.g. \"Talpha Tbeta^-1\"")->required();
    rep_act->add_option("--vector", rep_vector, "basis symbol to act on");
    add_quotient_flags(rep_act, rep_q);

    auto* rep_cert = rep->add_subcommand("cert", "kernel certificate of a twist word");
    rep_cert->add_option("--catalog", rep_catalog, "curve catalog JSON");
    rep_cert->add_option("--builtin-k", rep_builtin_k, "use the built-in genus-2k pair catalog");
    rep_cert->add_option("--word", rep_word, "twist word")->required();
    add_quotient_flags(rep_cert, rep_q);

    auto* rep_wit = rep->add_subcommand("witness", "linear-growth witness for a twist power");
    rep_wit->add_option("--catalog", rep_catalog, "curve catalog JSON");
    rep_wit->add_option("--builtin-k", rep_builtin_k, "use the built-in genus-2k pair catalog");
    rep_wit->add_option("--curve", rep_curve, "curve name");
    rep_wit->add_option("--vector", rep_vector, "basis symbol");
    rep_wit->add_option("--n-max", rep_nmax, "largest twist power");
    add_quotient_flags(rep_wit, rep_q);

    auto* rep_dump = rep->add_subcommand("catalog", "write a built-in catalog as JSON");
    rep_dump->add_option("--builtin-k", rep_builtin_k, "genus-2k pair catalog");
    rep_dump->add_option("--boundary-g", rep_boundary_g, "boundary twist catalog for genus g");
    rep_dump->add_option("--out", rep_out, "output file (stdout when omitted)");

    // ---- linearize -----------------------------------------------------
    auto* lin = app.add_subcommand("linearize", "matrix linearizations");
    lin->require_subcommand(1);
    std::string lin_elt = "1", lin_ring;
    long lin_g = 1, lin_r = 2;
    bool lin_dense = false;

    auto* lin_taut = lin->add_subcommand("taut", "tautological matrix of an element");
    lin_taut->add_option("--elt", lin_elt, "element text")->required();
    lin_taut->add_option("--genus", lin_g, "genus");

    auto* lin_supra = lin->add_subcommand("suprataut", "supra-tautological matrix of an element");
    lin_supra->add_option("--elt", lin_elt, "element text")->required();
    lin_supra->add_option("--genus", lin_g, "genus");

    auto* lin_iota = lin->add_subcommand("iota", "sparse operator image of a ring element");
    lin_iota->add_option("--ring", lin_ring, "ring element text, e.g. \"1 - s^2\"")->required();
    lin_iota->add_option("--genus", lin_g, "genus");
    lin_iota->add_option("--r", lin_r, "quotient order r >= 2");
    lin_iota->add_flag("--dense", lin_dense, "print the dense matrix (r^{g+1} rows)");

    auto* lin_ann = lin->add_subcommand("annihilator", "annihilator certificate of the sigma image");
    lin_ann->add_option("--genus", lin_g, "genus");
    lin_ann->add_option("--r", lin_r, "quotient order r >= 2");

    // ---- burau ---------------------------------------------------------
    auto* burau = app.add_subcommand("burau", "Burau and Gassner matrices");
    long burau_k = 2;
    std::string burau_word;
    bool burau_reduced_flag = false, burau_gassner = false;
    burau->add_option("--k", burau_k, "strand count")->required();
    burau->add_option("--word", burau_word, "braid word, e.g. \"s1 s2 S1\"")->required();
    burau->add_flag("--reduced", burau_reduced_flag, "reduced Burau (size k-1)");
    burau->add_flag("--gassner", burau_gassner, "Gassner matrix (pure braids)");

    // ---- bridge --------------------------------------------------------
    auto* bridge = app.add_subcommand("bridge", "local-system bridges to Lawrence data");
    bridge->require_subcommand(1);
    std::string bridge_region = "S", bridge_perturb, bridge_word;
    long bridge_g = 2;

    auto* bridge_check = bridge->add_subcommand("check", "verify a substitution against the restriction");
    long bridge_n = 2;
    bridge_check->add_option("--region", bridge_region, "S, Sg or V2g");
    bridge_check->add_option("--genus", bridge_g, "genus");
    bridge_check->add_option("--n", bridge_n, "configuration size for the pairing comparison");
    bridge_check->add_option("--perturb", bridge_perturb,
                             "multiply this generator's image by sigma^2 (expect failure)");

    auto* bridge_mf = bridge->add_subcommand("mf", "additive subgroup action of a twist word");
    bridge_mf->add_option("--word", bridge_word, "word, e.g. \"c1 t1,2 c1^-1\"")->required();
    bridge_mf->add_option("--genus", bridge_g, "genus");

    // ---- search --------------------------------------------------------
    auto* search = app.add_subcommand("search", "enumerate diagrams with vanishing pairing");
    KernelSearchOptions sopt;
    QuotientFlags search_q;
    search->add_option("--max-k", sopt.max_points, "largest number of intersection points");
    search->add_option("--bound", sopt.exponent_bound, "sigma exponent bound");
    search->add_option("--genus", sopt.genus, "genus");
    add_quotient_flags(search, search_q);

    // ---- verify --------------------------------------------------------
    auto* verify = app.add_subcommand("verify", "replay the full verification battery");
    std::string suite_name = "paper";
    verify->add_option("--suite", suite_name, "suite name (paper)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (heis->parsed()) {
            auto q = heis_q.spec();
            if (heis_mul->parsed()) {
                if (heis_args.size() < 2) throw std::invalid_argument("mul needs two elements");
                auto x = parse_heisenberg(heis_args[0], heis_g, q);
                auto y = parse_heisenberg(heis_args[1], heis_g, q);
                auto z = x * y;
                std::cout << (as_json ? heis_to_json(z).dump() : z.str()) << "\n";
            } else if (heis_inv->parsed()) {
                auto z = parse_heisenberg(heis_args[0], heis_g, q).inverse();
                std::cout << (as_json ? heis_to_json(z).dump() : z.str()) << "\n";
            } else if (heis_reduce->parsed()) {
                auto z = parse_heisenberg(heis_args[0], heis_g, QuotientSpec::full()).reduce(q);
                std::cout << (as_json ? heis_to_json(z).dump() : z.str()) << "\n";
            } else {
                auto w = parse_surface_word(heis_args[0], heis_g, eval_n);
                auto z = eval_heisenberg(w, q);
                std::cout << (as_json ? heis_to_json(z).dump() : z.str()) << "\n";
            }
            return 0;
        }

        if (pair->parsed()) {
            auto j = load_json_file(pair_file);
            auto q = pair_q.spec();
            HeisRing value;
            if (json_is_npt(j)) {
                if (pair_n < 2) throw std::invalid_argument("n-point diagrams need --n >= 2");
                value = pair_npt(diagram_npt_from_json(j), pair_n, q);
            } else {
                value = pair_1pt(diagram1_from_json(j), q);
            }
            if (as_json)
                std::cout << nlohmann::json{{"pairing", value.str()}}.dump() << "\n";
            else
                std::cout << value.str() << "\n";
            return 0;
        }

        if (rep->parsed()) {
            if (rep_dump->parsed()) {
                auto cat = load_catalog("", rep_builtin_k, rep_boundary_g);
                auto j = catalog_to_json(cat);
                if (rep_out.empty()) std::cout << j.dump(2) << "\n";
                else save_json_file(rep_out, j);
                return 0;
            }
            auto cat = load_catalog(rep_catalog, rep_builtin_k, 0);
            auto q = rep_q.spec();
            if (rep_act->parsed()) {
                auto word = parse_twist_word(rep_word);
                ChainVector v = ChainVector::unit(rep_vector, cat.g, q);
                for (const auto& [name, e] : word.factors) {
                    long reps = e < 0 ? -e : e;
                    for (long i = 0; i < reps; ++i) {
                        if (e > 0) v = act_twist_mod2k(cat, name, v, q);
                        else {
                            // inverse twist: v - <a,v>[a] (self-pairing is zero)
                            auto bracket = pairing_bracket(cat.curve(name), v, q);
                            v = v + ChainVector::unit(name, cat.g, q).scaled(-bracket);
                        }
                    }
                }
                nlohmann::json out;
                for (const auto& [sym, val] : v.coords)
                    if (!val.is_zero()) out[sym] = val.str();
                std::cout << out.dump(2) << "\n";
                return 0;
            }
            if (rep_cert->parsed()) {
                auto cert = kernel_certificate(cat, parse_twist_word(rep_word), q);
                if (as_json) {
                    std::cout << nlohmann::json{{"is_identity_on_basis", cert.is_identity_on_basis}}
                                     .dump()
                              << "\n";
                } else {
                    std::cout << (cert.is_identity_on_basis ? "identity: kernel element"
                                                            : "not the identity")
                              << "\n"
                              << cert.matrix.str();
                }
                return cert.is_identity_on_basis ? 0 : 1;
            }
            if (rep_wit->parsed()) {
                auto w = infinite_order_witness(cat, rep_curve,
                                                ChainVector::unit(rep_vector, cat.g, q), rep_nmax, q);
                if (!w.has_witness) {
                    std::cout << "no witness from this class (pairing with " << rep_vector
                              << " is zero)\n";
                    return 0;
                }
                std::cout << "bracket: " << w.bracket.str() << "\n"
                          << "linear growth: " << (w.linear_growth ? "yes" : "no") << "\n";
                if (!w.coefficients.empty())
                    std::cout << "coefficient at n=" << rep_nmax << ": "
                              << w.coefficients.back().str() << "\n";
                return 0;
            }
        }

        if (lin->parsed()) {
            if (lin_taut->parsed()) {
                auto x = parse_heisenberg(lin_elt, lin_g);
                auto m = tautological(x).to_rational();
                if (as_json) std::cout << matrix_to_json(m).dump() << "\n";
                else std::cout << m.str();
                return 0;
            }
            if (lin_supra->parsed()) {
                auto x = parse_heisenberg(lin_elt, lin_g);
                auto m = suprataut_h(x);
                if (as_json) std::cout << matrix_to_json(m).dump() << "\n";
                else std::cout << m.str();
                return 0;
            }
            if (lin_iota->parsed()) {
                auto x = parse_ring_element(lin_ring, lin_g);
                auto op = iota_r(x, lin_g, lin_r);
                if (lin_dense) {
                    if (as_json) std::cout << matrix_to_json(op.dense()).dump() << "\n";
                    else std::cout << op.dense().str();
                } else {
                    for (std::size_t c = 0; c < op.dim(); ++c)
                        for (const auto& [row, p] : op.column(c))
                            std::cout << "(" << row << "," << c << ") = " << p.str() << "\n";
                }
                return 0;
            }
            if (lin_ann->parsed()) {
                auto ones = [](const std::string&) { return Rat(1); };
                auto m = iota_r_group(HeisenbergElement::sigma(lin_g), lin_r).specialize(ones);
                auto cert = certify_sigma_image(m);
                std::cout << (cert.ok ? "certificate" : "failure") << ": " << cert.message << "\n";
                return cert.ok ? 0 : 1;
            }
        }

        if (burau->parsed()) {
            auto b = parse_braid_word(burau_word, burau_k);
            LaurentMatrix m = burau_gassner ? gassner(b)
                              : burau_reduced_flag ? burau_reduced(b)
                                                   : burau_unreduced(b);
            if (as_json) std::cout << matrix_to_json(m).dump() << "\n";
            else std::cout << m.str();
            return 0;
        }

        if (bridge->parsed()) {
            if (bridge_check->parsed()) {
                auto region = region_of(bridge_region);
                auto sub = standard_substitution(region, bridge_g);
                if (!bridge_perturb.empty()) {
                    if (!sub.images.count(bridge_perturb))
                        throw std::invalid_argument("unknown generator " + bridge_perturb);
                    sub.images[bridge_perturb] =
                        sub.images[bridge_perturb] * sigma_power(bridge_g, 2);
                }
                std::vector<DiskDiagram> diagrams;
                if (region_holes(region, bridge_g) >= 2) {
                    DiskDiagram dd;
                    dd.eta_loops.resize(2);
                    dd.eta_loops[0].factors = {{1, Int(1)}};
                    dd.eta_loops[1].factors = {{2, Int(1)}, {0, Int(2)}};
                    dd.A = IntMatrix(2, 2);
                    dd.A(0, 1) = dd.A(1, 0) = 1;
                    diagrams.push_back(dd);
                }
                auto repo = substitution_check(region, bridge_g, sub, diagrams, bridge_n);
                if (repo.pass) {
                    std::cout << "substitution check passed\n";
                    return 0;
                }
                std::cout << "substitution check failed on " << repo.failed_generator << ": "
                          << repo.detail << "\n";
                return 1;
            }
            if (bridge_mf->parsed()) {
                // word tokens like c1, t1,2, with optional ^exp
                std::vector<std::pair<std::string, long>> word;
                std::istringstream is(bridge_word);
                std::string tok;
                while (is >> tok) {
                    long e = 1;
                    auto caret = tok.find('^');
                    if (caret != std::string::npos) {
                        e = std::stol(tok.substr(caret + 1));
                        tok = tok.substr(0, caret);
                    }
                    word.emplace_back(tok, e);
                }
                auto [m, l] = subgroup_Mf(word, bridge_g);
                std::cout << "M =\n" << m.str() << "l = (";
                for (std::size_t i = 0; i < l.size(); ++i)
                    std::cout << (i ? "," : "") << l[i].str();
                std::cout << ")\n";
                return 0;
            }
        }

        if (search->parsed()) {
            sopt.q = search_q.spec();
            auto hits = kernel_search(sopt);
            if (as_json) {
                nlohmann::json out = nlohmann::json::array();
                for (const auto& h : hits) out.push_back(diagram1_to_json(h));
                std::cout << out.dump(2) << "\n";
            } else {
                std::cout << hits.size() << " vanishing diagrams\n";
                for (const auto& h : hits) {
                    for (const auto& p : h.points)
                        std::cout << (p.sign > 0 ? "+" : "-") << "s^" << p.sigma_exp->str() << " ";
                    std::cout << "\n";
                }
            }
            return 0;
        }

        if (verify->parsed()) {
            if (suite_name != "paper")
                throw std::invalid_argument("unknown suite '" + suite_name + "'");
            auto report = run_paper_suite();
            if (as_json) {
                std::cout << suite_report_to_json(report).dump(2) << "\n";
            } else {
                for (const auto& c : report.checks)
                    std::cout << "[" << (c.pass ? "PASS" : "FAIL") << "] " << c.id << " "
                              << c.description << " (" << c.witness << ")\n";
            }
            return report.all_pass() ? 0 : 1;
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
