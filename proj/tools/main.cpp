#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "diffmod/json_io.hpp"

namespace {

using namespace diffmod;
using nlohmann::json;

std::string load_payload(const std::string& v, std::istream& in) {
    if (v != "-")
        return v;
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

bool looks_like_json(const std::string& s) {
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c)))
            return c == '{';
    return false;
}

DiffOp read_operator(const std::string& payload, const Scalar& weight,
                     std::optional<int> order) {
    if (looks_like_json(payload)) {
        DiffOp A = diffop_from_json(json::parse(payload));
        if (A.weight() != weight)
            throw domain_error("operator payload weight " + print(A.weight()) +
                               " disagrees with --lambda " + print(weight));
        if (order)
            return A.padded(*order);
        return A;
    }
    return parse_operator(payload, weight, order);
}

NormalSymbol read_symbol(const std::string& payload, const Scalar& weight,
                         std::optional<int> order) {
    if (looks_like_json(payload)) {
        NormalSymbol S = symbol_from_json(json::parse(payload));
        if (S.weight != weight)
            throw domain_error("symbol payload weight " + print(S.weight) +
                               " disagrees with --lambda " + print(weight));
        if (order) {
            if (S.order() > *order)
                throw domain_error("symbol order exceeds requested " + std::to_string(*order));
            S.bars.resize(static_cast<std::size_t>(*order) + 1);
        }
        return S;
    }
    return parse_symbol(payload, weight, order);
}

void emit(std::ostream& out, bool as_json, const json& j, const std::string& text) {
    if (as_json)
        out << j.dump() << "\n";
    else
        out << text << "\n";
}

std::string verdict_text(const IntertwinerVerdict& v) {
    std::ostringstream out;
    out << "status: "
        << (v.status == IsoStatus::isomorphic ? "isomorphic" : "not-isomorphic") << "\n";
    out << "dimension: " << v.solution_dimension << "\n";
    for (std::size_t i = 0; i < v.basis.size(); ++i) {
        out << "basis[" << i << "]:";
        for (const Scalar& a : v.basis[i].alphas)
            out << " " << print(a);
        out << "\n";
    }
    out << "degenerate_slots:";
    for (int s : v.degenerate_slots)
        out << " " << s;
    return out.str();
}

int run(int argc, char** argv, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact engine for modules of linear differential operators on the line"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "emit JSON instead of canonical text");

    std::string lambda_s, mu_s, s_s, field_s, op_s, symbol_s, phi_s, psi_s, which_s;
    int k = -1, n = 0, pmax = 6, qmax = 5;
    bool have_k = false;

    auto* act = app.add_subcommand("act", "module action ad L_X(A)");
    act->add_option("--lambda", lambda_s)->required();
    act->add_option("--field", field_s)->required();
    act->add_option("--op", op_s)->required();
    act->add_option("--k", k);

    auto* symbol = app.add_subcommand("symbol", "normal symbol of an operator");
    symbol->add_option("--lambda", lambda_s)->required();
    symbol->add_option("--op", op_s)->required();
    symbol->add_option("--k", k);

    auto* unsymbol = app.add_subcommand("unsymbol", "operator with the given normal symbol");
    unsymbol->add_option("--lambda", lambda_s)->required();
    unsymbol->add_option("--symbol", symbol_s)->required();
    unsymbol->add_option("--k", k);

    auto* adj = app.add_subcommand("adjoint", "formal adjoint (conjugation)");
    adj->add_option("--lambda", lambda_s)->required();
    adj->add_option("--op", op_s)->required();
    adj->add_option("--k", k);

    auto* inter = app.add_subcommand("intertwine", "apply T : D^3_lambda -> D^3_mu");
    inter->add_option("--lambda", lambda_s)->required();
    inter->add_option("--mu", mu_s)->required();
    inter->add_option("--op", op_s)->required();

    auto* classify = app.add_subcommand("classify", "diagonal intertwiner verdict");
    classify->add_option("--k", k)->required();
    classify->add_option("--lambda", lambda_s)->required();
    classify->add_option("--mu", mu_s)->required();

    auto* critical = app.add_subcommand("critical", "critical weights for k = 2 or 3");
    critical->add_option("--k", k)->required();

    auto* transv = app.add_subcommand("transvectant", "j_n on a density pair");
    transv->add_option("--n", n)->required();
    transv->add_option("--lambda", lambda_s)->required();
    transv->add_option("--mu", mu_s)->required();
    transv->add_option("--phi", phi_s)->required();
    transv->add_option("--psi", psi_s)->required();

    auto* cocheck = app.add_subcommand("cocycle-check", "cocycle identity over a monomial basis");
    cocheck->add_option("--which", which_s)->required()
        ->check(CLI::IsMember({"c3", "c4", "tilde3", "tilde4"}));
    cocheck->add_option("--s", s_s)->required();
    cocheck->add_option("--pmax", pmax);
    cocheck->add_option("--qmax", qmax);

    auto* scheme = app.add_subcommand("scheme", "normal symbol change-of-basis table");
    scheme->add_option("--k", k)->required();
    scheme->add_option("--lambda", lambda_s)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 1;
    }
    have_k = (k >= 0);
    const std::optional<int> korder = have_k ? std::optional<int>(k) : std::nullopt;

    if (act->parsed()) {
        const Scalar lambda = parse_scalar(lambda_s);
        const VectorField X(parse_poly(load_payload(field_s, in)));
        const DiffOp A = read_operator(load_payload(op_s, in), lambda, korder);
        const DiffOp R = ad_action(X, A);
        emit(out, as_json, to_json(R), print(R));
    } else if (symbol->parsed()) {
        const Scalar lambda = parse_scalar(lambda_s);
        const DiffOp A = read_operator(load_payload(op_s, in), lambda, korder);
        const NormalSymbol S = to_symbol(A);
        emit(out, as_json, to_json(S), print(S));
    } else if (unsymbol->parsed()) {
        const Scalar lambda = parse_scalar(lambda_s);
        const NormalSymbol S = read_symbol(load_payload(symbol_s, in), lambda, korder);
        const DiffOp A = from_symbol(S);
        emit(out, as_json, to_json(A), print(A));
    } else if (adj->parsed()) {
        const Scalar lambda = parse_scalar(lambda_s);
        const DiffOp A = read_operator(load_payload(op_s, in), lambda, korder);
        const DiffOp R = adjoint(A);
        emit(out, as_json, to_json(R), print(R));
    } else if (inter->parsed()) {
        const Scalar lambda = parse_scalar(lambda_s);
        const Scalar mu = parse_scalar(mu_s);
        const DiffOp A = read_operator(load_payload(op_s, in), lambda, 3);
        const DiffOp R = apply_T(A, mu);
        emit(out, as_json, to_json(R), print(R));
    } else if (classify->parsed()) {
        const IntertwinerVerdict v =
            solve_diagonal_intertwiner(k, parse_scalar(lambda_s), parse_scalar(mu_s));
        emit(out, as_json, to_json(v), verdict_text(v));
    } else if (critical->parsed()) {
        const std::vector<Scalar> ws = critical_set(k);
        std::ostringstream text;
        json arr = json::array();
        for (std::size_t i = 0; i < ws.size(); ++i) {
            arr.push_back(print(ws[i]));
            text << (i ? "\n" : "") << print(ws[i]);
        }
        emit(out, as_json, arr, text.str());
    } else if (transv->parsed()) {
        const Density phi(parse_scalar(lambda_s), parse_poly(load_payload(phi_s, in)));
        const Density psi(parse_scalar(mu_s), parse_poly(load_payload(psi_s, in)));
        const Density r = transvectant(n, phi, psi);
        emit(out, as_json, to_json(r), print(r.value));
    } else if (cocheck->parsed()) {
        const Scalar s = parse_scalar(s_s);
        Cochain1 c = which_s == "c3"       ? make_c3(s)
                     : which_s == "c4"     ? make_c4(s)
                     : which_s == "tilde3" ? make_c3_tilde(s)
                                           : make_c4_tilde(s);
        bool ok = true;
        int wp = 0, wq = 0, wr = 0;
        Poly defect;
        for (int p = 0; p <= pmax && ok; ++p)
            for (int q = 0; q <= pmax && ok; ++q)
                for (int r = 0; r <= qmax && ok; ++r) {
                    defect = cocycle_defect(c, VectorField(Poly::monomial(p)),
                                            VectorField(Poly::monomial(q)),
                                            Density(s, Poly::monomial(r)))
                                 .value;
                    if (!defect.is_zero()) {
                        ok = false;
                        wp = p; wq = q; wr = r;
                    }
                }
        if (ok) {
            emit(out, as_json, json{{"cocycle", true}}, "cocycle: yes");
        } else {
            json j{{"cocycle", false},
                   {"witness", {{"p", wp}, {"q", wq}, {"r", wr}}},
                   {"defect", to_json(defect)}};
            std::ostringstream text;
            text << "cocycle: no\nwitness: X = x^" << wp << ", Y = x^" << wq
                 << ", a = x^" << wr << "\ndefect: " << print(defect);
            emit(out, as_json, j, text.str());
        }
    } else if (scheme->parsed()) {
        const SymbolScheme& sc = derive_scheme(k, parse_scalar(lambda_s));
        std::ostringstream text;
        bool first = true;
        for (int j = 0; j <= sc.order; ++j)
            for (int i = 0; i <= j; ++i) {
                text << (first ? "" : "\n") << "alpha[" << j << "][" << i
                     << "] = " << print(sc.alpha[static_cast<std::size_t>(j)]
                                                [static_cast<std::size_t>(i)]);
                first = false;
            }
        emit(out, as_json, to_json(sc), text.str());
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv, std::cin, std::cout, std::cerr);
    } catch (const diffmod::parse_error& e) {
        std::cerr << "parse error at position " << e.position() << ": " << e.what() << "\n";
        return 1;
    } catch (const diffmod::domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 2;
    } catch (const diffmod::internal_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "parse error at position 0: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
