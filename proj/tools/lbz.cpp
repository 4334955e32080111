#include "lbz/errors.hpp"
#include "lbz/fileio.hpp"
#include "lbz/symfunc.hpp"
#include "lbz/theta.hpp"
#include "lbz/v3basis.hpp"
#include "lbz/variety.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace lbz;
using ojson = nlohmann::ordered_json;

namespace {

enum class Format { text, json, csv };

struct Options {
    std::string variety_name;
    std::string variety_file;
    Format format = Format::text;
    int max_n = kDefaultMaxN;
};

void add_format_flag(CLI::App* cmd, Options& opt) {
    cmd->add_option("--format", opt.format, "output format")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, Format>{
                {"text", Format::text}, {"json", Format::json}, {"csv", Format::csv}},
            CLI::ignore_case));
}

void add_max_n_flag(CLI::App* cmd, Options& opt) {
    cmd->add_option("--max-n", opt.max_n, "degree bound guarding factorial blowup (cap 7)");
}

void add_variety_flags(CLI::App* cmd, Options& opt) {
    auto* name = cmd->add_option("--variety", opt.variety_name, "builtin variety name");
    cmd->add_option("--variety-file", opt.variety_file, "variety description file")
        ->excludes(name);
}

void check_max_n(const Options& opt) {
    if (opt.max_n < 1 || opt.max_n > kHardMaxN)
        throw ResourceBoundError("--max-n must be between 1 and " + std::to_string(kHardMaxN));
}

void check_bound(int n, const Options& opt, const std::string& what) {
    check_max_n(opt);
    if (n > opt.max_n)
        throw ResourceBoundError(what + " " + std::to_string(n) + " exceeds --max-n " +
                                 std::to_string(opt.max_n));
    if (n < 1) throw std::invalid_argument(what + " must be positive");
}

VarietySpec resolve_variety(const Options& opt) {
    if (!opt.variety_file.empty()) return load_variety_file(opt.variety_file);
    if (opt.variety_name.empty())
        throw std::invalid_argument("one of --variety or --variety-file is required");
    return builtin_variety(opt.variety_name);
}

std::string csv_quote(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string format_json(const ojson& j) { return j.dump(2) + "\n"; }

// theta-coordinate combination in the same style as linear combinations:
// unit coefficients elided, terms joined with " + " / " - ".
std::string format_theta_comb(const ThetaCoordinates& coords) {
    if (coords.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [t, c] : coords) {
        const bool neg = c < 0;
        const Rat mag = neg ? Rat(-c) : c;
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        if (mag != 1) out += rat_to_string(mag) + " * ";
        out += format_theta(t);
    }
    return out;
}

ojson lambda_json(const Partition& lambda) {
    ojson arr = ojson::array();
    for (int p : lambda.parts) arr.push_back(p);
    return arr;
}

// ----------------------------------------------------------------- commands

int cmd_reduce(const std::string& input, const Options& opt) {
    const Term t = parse_term(input);
    check_bound(t.degree(), opt, "term degree");
    const LinComb r = leibniz_reduce(t);
    std::string out;
    switch (opt.format) {
    case Format::text:
        out = format_lincomb(r) + "\n";
        break;
    case Format::json: {
        ojson j{{"schema", 1}, {"command", "reduce"}, {"input", input}};
        j["result"] = format_lincomb(r);
        ojson terms = ojson::array();
        for (const auto& [w, c] : r)
            terms.push_back(ojson{{"coefficient", rat_to_string(c)}, {"word", format_word(w)}});
        j["terms"] = terms;
        out = format_json(j);
        break;
    }
    case Format::csv:
        out = "coefficient,word\n";
        for (const auto& [w, c] : r) out += rat_to_string(c) + "," + format_word(w) + "\n";
        break;
    }
    std::cout << out;
    return 0;
}

int cmd_dim(int n, const Options& opt) {
    check_bound(n, opt, "n");
    const VarietySpec v = resolve_variety(opt);
    const int dim = tideal_multilinear(v, n, opt.max_n).dimension();
    switch (opt.format) {
    case Format::text:
        std::cout << dim << "\n";
        break;
    case Format::json:
        std::cout << format_json(ojson{{"schema", 1},
                                       {"command", "dim"},
                                       {"variety", v.name},
                                       {"n", n},
                                       {"dimension", dim}});
        break;
    case Format::csv:
        std::cout << "n,dimension\n" << n << "," << dim << "\n";
        break;
    }
    return 0;
}

int cmd_basis(int n, const Options& opt) {
    check_bound(n, opt, "n");
    const std::vector<ThetaElement> basis = enumerate_theta(n);
    std::string out;
    switch (opt.format) {
    case Format::text:
        for (const ThetaElement& t : basis) out += format_theta(t) + "\n";
        break;
    case Format::json: {
        ojson j{{"schema", 1}, {"command", "basis"}, {"n", n},
                {"count", static_cast<int>(basis.size())}};
        ojson arr = ojson::array();
        for (const ThetaElement& t : basis) arr.push_back(format_theta(t));
        j["basis"] = arr;
        out = format_json(j);
        break;
    }
    case Format::csv:
        out = "theta\n";
        for (const ThetaElement& t : basis) out += csv_quote(format_theta(t)) + "\n";
        break;
    }
    std::cout << out;
    return 0;
}

int cmd_theta_reduce(const std::string& input, int n, const Options& opt) {
    const Term t = parse_term(input);
    if (n <= 0) n = t.degree();
    check_bound(n, opt, "n");
    TermLinComb element;
    element.add(t, Rat(1));
    const ThetaCoordinates coords = reduce_to_theta(element, n);
    std::string out;
    switch (opt.format) {
    case Format::text:
        out = format_theta_comb(coords) + "\n";
        break;
    case Format::json: {
        ojson j{{"schema", 1}, {"command", "theta-reduce"}, {"input", input}, {"n", n}};
        j["result"] = format_theta_comb(coords);
        ojson arr = ojson::array();
        for (const auto& [theta, c] : coords)
            arr.push_back(ojson{{"theta", format_theta(theta)}, {"coeff", rat_to_string(c)}});
        j["coordinates"] = arr;
        out = format_json(j);
        break;
    }
    case Format::csv:
        out = "coefficient,theta\n";
        for (const auto& [theta, c] : coords)
            out += rat_to_string(c) + "," + csv_quote(format_theta(theta)) + "\n";
        break;
    }
    std::cout << out;
    return 0;
}

int cmd_check(const std::string& file, const Options& opt) {
    check_max_n(opt);
    const VarietySpec v = resolve_variety(opt);
    const VarietySpec candidates = load_variety_file(file);
    QuotientCache cache(v, opt.max_n);
    std::vector<std::pair<std::string, bool>> results;
    bool all = true;
    for (const Identity& id : candidates.identities) {
        const bool ok = is_identity(cache, id.element);
        results.emplace_back(id.name, ok);
        all = all && ok;
    }
    std::string out;
    switch (opt.format) {
    case Format::text:
        for (const auto& [name, ok] : results)
            out += name + ": " + (ok ? "true" : "false") + "\n";
        break;
    case Format::json: {
        ojson j{{"schema", 1}, {"command", "check"}, {"variety", v.name}};
        ojson arr = ojson::array();
        for (const auto& [name, ok] : results)
            arr.push_back(ojson{{"name", name}, {"is_identity", ok}});
        j["results"] = arr;
        j["all"] = all;
        out = format_json(j);
        break;
    }
    case Format::csv:
        out = "name,is_identity\n";
        for (const auto& [name, ok] : results)
            out += csv_quote(name) + "," + (ok ? "true" : "false") + "\n";
        break;
    }
    std::cout << out;
    return 0;
}

int cmd_colength(int nmax, const Options& opt) {
    check_bound(nmax, opt, "nmax");
    const VarietySpec v = resolve_variety(opt);
    QuotientCache cache(v, opt.max_n);
    const std::vector<ColengthRow> rows = colength_profile(cache, nmax);
    std::string out;
    switch (opt.format) {
    case Format::text:
        for (const ColengthRow& r : rows)
            out += "n=" + std::to_string(r.n) + " dim=" + std::to_string(r.dimension) +
                   " colength=" + std::to_string(r.colength) + "\n";
        break;
    case Format::json: {
        ojson j{{"schema", 1}, {"command", "colength"}, {"variety", v.name}, {"nmax", nmax}};
        ojson arr = ojson::array();
        for (const ColengthRow& r : rows) {
            ojson row{{"n", r.n}, {"dimension", r.dimension}, {"colength", r.colength}};
            ojson mult = ojson::array();
            for (const auto& [lambda, m] : r.multiplicities)
                mult.push_back(ojson{{"lambda", lambda_json(lambda)}, {"multiplicity", m}});
            row["multiplicities"] = mult;
            arr.push_back(row);
        }
        j["rows"] = arr;
        out = format_json(j);
        break;
    }
    case Format::csv:
        out = "n,lambda,multiplicity,colength\n";
        for (const ColengthRow& r : rows)
            for (const auto& [lambda, m] : r.multiplicities)
                out += std::to_string(r.n) + "," + csv_quote(format_partition(lambda)) + "," +
                       std::to_string(m) + "," + std::to_string(r.colength) + "\n";
        break;
    }
    std::cout << out;
    return 0;
}

int cmd_character(int n, const Options& opt) {
    check_bound(n, opt, "n");
    const VarietySpec v = resolve_variety(opt);
    QuotientCache cache(v, opt.max_n);
    const int dim = cache.at(n).dimension();
    const ClassFunction chi = module_character(cache, n);
    const auto decomposition = decompose(chi);
    const long long l = colength(chi);
    std::string out;
    switch (opt.format) {
    case Format::text:
        for (const auto& [lambda, m] : decomposition)
            out += "m_" + format_partition(lambda) + " = " + std::to_string(m) + "\n";
        out += "colength = " + std::to_string(l) + "\n";
        break;
    case Format::json: {
        ojson j{{"schema", 1}, {"command", "character"}, {"variety", v.name}, {"n", n},
                {"dimension", dim}};
        ojson arr = ojson::array();
        for (const auto& [lambda, m] : decomposition)
            arr.push_back(ojson{{"lambda", lambda_json(lambda)}, {"multiplicity", m}});
        j["decomposition"] = arr;
        j["colength"] = l;
        out = format_json(j);
        break;
    }
    case Format::csv:
        out = "n,lambda,multiplicity,colength\n";
        for (const auto& [lambda, m] : decomposition)
            out += std::to_string(n) + "," + csv_quote(format_partition(lambda)) + "," +
                   std::to_string(m) + "," + std::to_string(l) + "\n";
        break;
    }
    std::cout << out;
    return 0;
}

int cmd_verify_theorem2(int n, int fdeg, const Options& opt) {
    check_bound(n, opt, "n");
    const Theorem2Report rep = verify_theorem2(n, fdeg, 20260822, 50, 10, opt.max_n);
    std::string out;
    switch (opt.format) {
    case Format::text: {
        std::ostringstream os;
        os << "span: " << rep.theta_count << " theta elements, quotient dimension "
           << rep.quotient_dim << "  [" << (rep.span_ok ? "OK" : "MISMATCH") << "]\n";
        os << "independence: evaluation matrix rank " << rep.eval_rank << "/" << rep.theta_count
           << "  [" << (rep.independence_ok ? "OK" : "DEFICIENT") << "]\n";
        os << "consistency: " << rep.consistency_checked << " random elements  ["
           << (rep.consistency_ok ? "OK" : "BROKEN") << "]\n";
        os << (rep.pass ? "PASS" : "FAIL") << ": span " << rep.theta_count << "/"
           << rep.quotient_dim << ", independence rank " << rep.eval_rank << "/"
           << rep.theta_count << "\n";
        out = os.str();
        break;
    }
    case Format::json:
        out = format_json(ojson{{"schema", 1},
                                {"command", "verify-theorem2"},
                                {"n", rep.n},
                                {"fdeg", rep.fdeg},
                                {"theta_count", rep.theta_count},
                                {"quotient_dim", rep.quotient_dim},
                                {"span_ok", rep.span_ok},
                                {"eval_rank", rep.eval_rank},
                                {"independence_ok", rep.independence_ok},
                                {"consistency_checked", rep.consistency_checked},
                                {"consistency_ok", rep.consistency_ok},
                                {"pass", rep.pass}});
        break;
    case Format::csv: {
        std::ostringstream os;
        os << "field,value\n"
           << "n," << rep.n << "\nfdeg," << rep.fdeg << "\ntheta_count," << rep.theta_count
           << "\nquotient_dim," << rep.quotient_dim << "\nspan_ok," << rep.span_ok
           << "\neval_rank," << rep.eval_rank << "\nindependence_ok," << rep.independence_ok
           << "\nconsistency_checked," << rep.consistency_checked << "\nconsistency_ok,"
           << rep.consistency_ok << "\npass," << rep.pass << "\n";
        out = os.str();
        break;
    }
    }
    std::cout << out;
    if (!rep.pass) throw InvariantViolation("theta basis verification failed at n = " +
                                            std::to_string(n));
    return 0;
}

std::vector<Rat> parse_alphas(const std::string& text) {
    std::vector<Rat> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t next = text.find(',', pos);
        if (next == std::string::npos) next = text.size();
        std::string piece = text.substr(pos, next - pos);
        const auto l = piece.find_first_not_of(" \t");
        const auto r = piece.find_last_not_of(" \t");
        if (l == std::string::npos) throw ParseError("empty entry in --alphas", pos);
        out.push_back(rat_from_string(piece.substr(l, r - l + 1)));
        pos = next + 1;
    }
    return out;
}

int cmd_condition3(int k, int m, const std::string& alphas_text, const Options& opt) {
    check_max_n(opt);
    if (m < 1) throw std::invalid_argument("--m must be positive");
    const VarietySpec v = resolve_variety(opt);
    QuotientCache cache(v, opt.max_n);
    ojson j{{"schema", 1}, {"command", "condition3"}, {"variety", v.name}};
    std::string text;
    std::string csv = "field,value\n";

    if (!alphas_text.empty()) {
        const std::vector<Rat> alphas = parse_alphas(alphas_text);
        if (k > 0 && k != static_cast<int>(alphas.size()))
            throw std::invalid_argument("--k disagrees with the number of --alphas entries");
        k = static_cast<int>(alphas.size());
        if (k > m) throw std::invalid_argument("need k <= m");
        const bool holds = check_condition_3(cache, k, m, alphas);
        j["k"] = k;
        j["m"] = m;
        ojson arr = ojson::array();
        for (const Rat& a : alphas) arr.push_back(rat_to_string(a));
        j["alphas"] = arr;
        j["holds"] = holds;
        text = holds ? "holds\n" : "does not hold\n";
        csv += "k," + std::to_string(k) + "\nm," + std::to_string(m) + "\nholds,";
        csv += holds ? "true\n" : "false\n";
    } else {
        if (k < 1 || k > m) throw std::invalid_argument("need 1 <= k <= m (flags --k, --m)");
        const auto solution = solve_condition_3(cache, k, m);
        j["k"] = k;
        j["m"] = m;
        j["present"] = solution.has_value();
        csv += "k," + std::to_string(k) + "\nm," + std::to_string(m) + "\npresent,";
        csv += solution ? "true\n" : "false\n";
        if (solution) {
            ojson arr = ojson::array();
            std::string list;
            for (const Rat& a : *solution) {
                arr.push_back(rat_to_string(a));
                if (!list.empty()) list += ", ";
                list += rat_to_string(a);
            }
            j["alphas"] = arr;
            text = "present: " + list + "\n";
            std::string joined;
            for (const Rat& a : *solution) {
                if (!joined.empty()) joined += ",";
                joined += rat_to_string(a);
            }
            csv += "alphas," + csv_quote(joined) + "\n";
        } else {
            text = "absent\n";
        }
    }

    switch (opt.format) {
    case Format::text:
        std::cout << text;
        break;
    case Format::json:
        std::cout << format_json(j);
        break;
    case Format::csv:
        std::cout << csv;
        break;
    }
    return 0;
}

int cmd_eval(const std::string& input, const std::string& assignment_file, const Options& opt) {
    const Term t = parse_term(input);
    const Assignment a = load_assignment_file(assignment_file);
    const HElement h = evaluate(t, a);
    switch (opt.format) {
    case Format::text:
        std::cout << format_helement(h) << "\n";
        break;
    case Format::json:
        std::cout << format_json(ojson{{"schema", 1},
                                       {"command", "eval"},
                                       {"input", input},
                                       {"result", format_helement(h)},
                                       {"a", rat_to_string(h.ca)},
                                       {"b", rat_to_string(h.cb)},
                                       {"c", rat_to_string(h.cc)},
                                       {"f", format_poly(h.f)}});
        break;
    case Format::csv:
        std::cout << "component,value\n"
                  << "a," << rat_to_string(h.ca) << "\n"
                  << "b," << rat_to_string(h.cb) << "\n"
                  << "c," << rat_to_string(h.cc) << "\n"
                  << "f," << csv_quote(format_poly(h.f)) << "\n";
        break;
    }
    return 0;
}

int run(int argc, char** argv) {
    CLI::App app{"exact computations in multilinear parts of Leibniz algebra varieties"};
    app.require_subcommand(1);
    Options opt;

    std::string term_text, file_arg, alphas_text;
    int n = 0, nmax = 0, fdeg = -1, k = 0, m = 0;

    auto* reduce = app.add_subcommand("reduce", "rewrite a term into left-normed words");
    reduce->add_option("term", term_text, "term text, e.g. \"x1(x2x3)\"")->required();
    add_format_flag(reduce, opt);
    add_max_n_flag(reduce, opt);

    auto* dim = app.add_subcommand("dim", "dimension of the degree-n multilinear part");
    dim->add_option("--n", n, "degree")->required();
    add_variety_flags(dim, opt);
    add_format_flag(dim, opt);
    add_max_n_flag(dim, opt);

    auto* basis = app.add_subcommand("basis", "theta normal forms of degree n");
    basis->add_option("--n", n, "degree")->required();
    add_format_flag(basis, opt);
    add_max_n_flag(basis, opt);

    auto* theta_reduce =
        app.add_subcommand("theta-reduce", "coordinates of a multilinear term on the theta basis");
    theta_reduce->add_option("term", term_text, "multilinear term text")->required();
    theta_reduce->add_option("--n", n, "degree (default: inferred)");
    add_format_flag(theta_reduce, opt);
    add_max_n_flag(theta_reduce, opt);

    auto* check = app.add_subcommand("check", "test whether file elements are identities");
    check->add_option("identity-file", file_arg, "identity description file")->required();
    add_variety_flags(check, opt);
    add_format_flag(check, opt);
    add_max_n_flag(check, opt);

    auto* colength_cmd = app.add_subcommand("colength", "colength profile for n = 1..nmax");
    colength_cmd->add_option("--nmax", nmax, "largest degree (default --max-n)");
    add_variety_flags(colength_cmd, opt);
    add_format_flag(colength_cmd, opt);
    add_max_n_flag(colength_cmd, opt);

    auto* character = app.add_subcommand("character", "character decomposition at degree n");
    character->add_option("--n", n, "degree")->required();
    add_variety_flags(character, opt);
    add_format_flag(character, opt);
    add_max_n_flag(character, opt);

    auto* verify = app.add_subcommand("verify-theorem2", "cross-check the theta basis at degree n");
    verify->add_option("--n", n, "degree")->required();
    verify->add_option("--fdeg", fdeg, "polynomial degree of the head substitution (default n)");
    add_format_flag(verify, opt);
    add_max_n_flag(verify, opt);

    auto* condition3 = app.add_subcommand("condition3", "solve or check the k-step power identity");
    condition3->add_option("--k", k, "number of alpha coefficients");
    condition3->add_option("--m", m, "total bracket power")->required();
    condition3->add_option("--alphas", alphas_text, "comma-separated rationals (check mode)");
    add_variety_flags(condition3, opt);
    add_format_flag(condition3, opt);
    add_max_n_flag(condition3, opt);

    auto* eval = app.add_subcommand("eval", "evaluate a term in the Heisenberg module algebra");
    eval->add_option("term", term_text, "term text")->required();
    eval->add_option("assignment-file", file_arg, "generator assignment file")->required();
    add_format_flag(eval, opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    if (reduce->parsed()) return cmd_reduce(term_text, opt);
    if (dim->parsed()) return cmd_dim(n, opt);
    if (basis->parsed()) return cmd_basis(n, opt);
    if (theta_reduce->parsed()) return cmd_theta_reduce(term_text, n, opt);
    if (check->parsed()) return cmd_check(file_arg, opt);
    if (colength_cmd->parsed()) return cmd_colength(nmax > 0 ? nmax : opt.max_n, opt);
    if (character->parsed()) return cmd_character(n, opt);
    if (verify->parsed()) return cmd_verify_theorem2(n, fdeg, opt);
    if (condition3->parsed()) return cmd_condition3(k, m, alphas_text, opt);
    if (eval->parsed()) return cmd_eval(term_text, file_arg, opt);
    return 2;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const UnknownVarietyError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const ResourceBoundError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const InvariantViolation& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 5;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
