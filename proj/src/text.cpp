#include "diffmod/text.hpp"

#include <cctype>
#include <map>
#include <vector>

#include "diffmod/errors.hpp"

namespace diffmod {

namespace {

enum class PayloadKind { scalar, poly, op, symbol };

// ---------------------------------------------------------------- tokens

struct Token {
    enum class Type { number, ident, plus, minus, star, slash, caret, lparen, rparen, end };
    Type type = Type::end;
    std::string text;
    std::size_t pos = 0;
};

std::vector<Token> tokenize(std::string_view src) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < src.size()) {
        const char c = src[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        Token t;
        t.pos = i;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j])))
                ++j;
            t.type = Token::Type::number;
            t.text = std::string(src.substr(i, j - i));
            i = j;
        } else if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < src.size() &&
                   (std::isalnum(static_cast<unsigned char>(src[j]))))
                ++j;
            t.type = Token::Type::ident;
            t.text = std::string(src.substr(i, j - i));
            i = j;
        } else {
            switch (c) {
            case '+': t.type = Token::Type::plus; break;
            case '-': t.type = Token::Type::minus; break;
            case '*': t.type = Token::Type::star; break;
            case '/': t.type = Token::Type::slash; break;
            case '^': t.type = Token::Type::caret; break;
            case '(': t.type = Token::Type::lparen; break;
            case ')': t.type = Token::Type::rparen; break;
            default:
                throw parse_error(std::string("unexpected character '") + c + "'", i);
            }
            ++i;
        }
        out.push_back(std::move(t));
    }
    Token end;
    end.pos = src.size();
    out.push_back(end);
    return out;
}

// ------------------------------------------------------------------- AST

struct ExprNode {
    enum class Kind { number, r21, var_x, op_d, var_xi, add, sub, mul, neg, power };
    Kind kind = Kind::number;
    std::size_t pos = 0;
    Rational value;
    int exponent = 0;
    std::vector<ExprNode> kids;
};

class Parser {
public:
    Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

    ExprNode parse() {
        ExprNode e = expr();
        if (cur().type != Token::Type::end)
            throw parse_error("trailing input", cur().pos);
        return e;
    }

private:
    const Token& cur() const { return toks_[i_]; }
    void advance() { ++i_; }

    ExprNode expr() {
        ExprNode lhs = term();
        while (cur().type == Token::Type::plus || cur().type == Token::Type::minus) {
            ExprNode node;
            node.kind = cur().type == Token::Type::plus ? ExprNode::Kind::add
                                                        : ExprNode::Kind::sub;
            node.pos = cur().pos;
            advance();
            node.kids.push_back(std::move(lhs));
            node.kids.push_back(term());
            lhs = std::move(node);
        }
        return lhs;
    }

    ExprNode term() {
        ExprNode lhs = factor();
        while (cur().type == Token::Type::star) {
            ExprNode node;
            node.kind = ExprNode::Kind::mul;
            node.pos = cur().pos;
            advance();
            node.kids.push_back(std::move(lhs));
            node.kids.push_back(factor());
            lhs = std::move(node);
        }
        return lhs;
    }

    int parse_exponent() {
        advance(); // caret
        if (cur().type != Token::Type::number)
            throw parse_error("expected integer exponent", cur().pos);
        if (cur().text.size() > 4)
            throw parse_error("exponent too large", cur().pos);
        const int e = std::stoi(cur().text);
        if (e > 512)
            throw parse_error("exponent too large", cur().pos);
        advance();
        return e;
    }

    ExprNode factor() {
        const Token& t = cur();
        switch (t.type) {
        case Token::Type::minus: {
            ExprNode node;
            node.kind = ExprNode::Kind::neg;
            node.pos = t.pos;
            advance();
            node.kids.push_back(factor());
            return node;
        }
        case Token::Type::lparen: {
            advance();
            ExprNode inner = expr();
            if (cur().type != Token::Type::rparen)
                throw parse_error("expected ')'", cur().pos);
            advance();
            return inner;
        }
        case Token::Type::number: {
            ExprNode node;
            node.kind = ExprNode::Kind::number;
            node.pos = t.pos;
            Rational num = Rational::from_integer_string(t.text);
            advance();
            if (cur().type == Token::Type::slash) {
                advance();
                if (cur().type != Token::Type::number)
                    throw parse_error("expected denominator", cur().pos);
                const Rational den = Rational::from_integer_string(cur().text);
                if (den.is_zero())
                    throw parse_error("zero denominator", cur().pos);
                num /= den;
                advance();
            }
            node.value = std::move(num);
            return node;
        }
        case Token::Type::ident: {
            ExprNode base;
            base.pos = t.pos;
            if (t.text == "r21")
                base.kind = ExprNode::Kind::r21;
            else if (t.text == "x")
                base.kind = ExprNode::Kind::var_x;
            else if (t.text == "D")
                base.kind = ExprNode::Kind::op_d;
            else if (t.text == "xi")
                base.kind = ExprNode::Kind::var_xi;
            else
                throw parse_error("unknown identifier '" + t.text + "'", t.pos);
            advance();
            if ((base.kind == ExprNode::Kind::var_x || base.kind == ExprNode::Kind::op_d ||
                 base.kind == ExprNode::Kind::var_xi) &&
                cur().type == Token::Type::caret) {
                ExprNode node;
                node.kind = ExprNode::Kind::power;
                node.pos = base.pos;
                node.exponent = parse_exponent();
                node.kids.push_back(std::move(base));
                return node;
            }
            return base;
        }
        default:
            throw parse_error("expected a value", t.pos);
        }
    }

    std::vector<Token> toks_;
    std::size_t i_ = 0;
};

// ----------------------------------------------------------- evaluation

// normal form: map from D (or xi) power to polynomial coefficient
using OpValue = std::map<int, Poly>;

void prune(OpValue& v) {
    for (auto it = v.begin(); it != v.end();)
        it = it->second.is_zero() ? v.erase(it) : std::next(it);
}

OpValue eval(const ExprNode& n, PayloadKind kind) {
    switch (n.kind) {
    case ExprNode::Kind::number:
        return {{0, Poly(Scalar(n.value))}};
    case ExprNode::Kind::r21:
        return {{0, Poly(Scalar::sqrt21())}};
    case ExprNode::Kind::var_x:
        if (kind == PayloadKind::scalar)
            throw parse_error("x not allowed in scalar context", n.pos);
        return {{0, Poly::x()}};
    case ExprNode::Kind::op_d:
        if (kind != PayloadKind::op)
            throw parse_error("D in polynomial context", n.pos);
        return {{1, Poly(1)}};
    case ExprNode::Kind::var_xi:
        if (kind != PayloadKind::symbol)
            throw parse_error("xi outside symbol context", n.pos);
        return {{1, Poly(1)}};
    case ExprNode::Kind::neg: {
        OpValue v = eval(n.kids[0], kind);
        for (auto& [p, c] : v)
            c = -c;
        return v;
    }
    case ExprNode::Kind::add:
    case ExprNode::Kind::sub: {
        OpValue v = eval(n.kids[0], kind);
        OpValue w = eval(n.kids[1], kind);
        for (auto& [p, c] : w) {
            if (n.kind == ExprNode::Kind::add)
                v[p] += c;
            else
                v[p] -= c;
        }
        prune(v);
        return v;
    }
    case ExprNode::Kind::mul: {
        OpValue v = eval(n.kids[0], kind);
        OpValue w = eval(n.kids[1], kind);
        OpValue out;
        for (const auto& [p, c] : v)
            for (const auto& [q, d] : w)
                out[p + q] += c * d;
        prune(out);
        return out;
    }
    case ExprNode::Kind::power: {
        OpValue v = eval(n.kids[0], kind);
        OpValue out = {{0, Poly(1)}};
        for (int e = 0; e < n.exponent; ++e) {
            OpValue next;
            for (const auto& [p, c] : out)
                for (const auto& [q, d] : v)
                    next[p + q] += c * d;
            out = std::move(next);
        }
        prune(out);
        return out;
    }
    }
    throw internal_error("unhandled expression node");
}

OpValue eval_text(std::string_view text, PayloadKind kind) {
    Parser parser(tokenize(text));
    return eval(parser.parse(), kind);
}

std::vector<Poly> coeff_list(const OpValue& v, std::optional<int> order,
                             const char* what) {
    int top = -1;
    for (const auto& [p, c] : v)
        top = std::max(top, p);
    if (order) {
        if (top > *order)
            throw domain_error(std::string(what) + " order exceeds requested " +
                               std::to_string(*order));
        top = *order;
    }
    std::vector<Poly> out(static_cast<std::size_t>(std::max(top, 0)) + 1);
    for (const auto& [p, c] : v)
        out[static_cast<std::size_t>(p)] = c;
    return out;
}

} // namespace

Scalar parse_scalar(std::string_view text) {
    OpValue v = eval_text(text, PayloadKind::scalar);
    if (v.empty())
        return Scalar();
    return v.begin()->second.coeff(0);
}

Poly parse_poly(std::string_view text) {
    OpValue v = eval_text(text, PayloadKind::poly);
    if (v.empty())
        return Poly();
    return v.begin()->second;
}

DiffOp parse_operator(std::string_view text, const Scalar& weight,
                      std::optional<int> order) {
    return DiffOp(weight, coeff_list(eval_text(text, PayloadKind::op), order, "operator"));
}

NormalSymbol parse_symbol(std::string_view text, const Scalar& weight,
                          std::optional<int> order) {
    return NormalSymbol(weight, coeff_list(eval_text(text, PayloadKind::symbol), order, "symbol"));
}

// -------------------------------------------------------------- printing

namespace {

struct Chunk {
    std::string body;
    bool negative = false;
};

// coeff * x^xpow * letter^lpow as one rendered product
Chunk term_chunk(const Scalar& coeff, int xpow, const char* letter, int lpow) {
    Chunk out;
    Scalar mag = coeff;
    const bool composite = !coeff.rational_part().is_zero() && !coeff.surd_part().is_zero();
    if (!composite) {
        const bool neg = coeff.rational_part().is_zero()
                             ? coeff.surd_part().sign() < 0
                             : coeff.rational_part().sign() < 0;
        if (neg) {
            out.negative = true;
            mag = -mag;
        }
    }
    std::vector<std::string> pieces;
    if (composite)
        pieces.push_back("(" + mag.str() + ")");
    else if (!mag.is_one() || (xpow == 0 && lpow == 0))
        pieces.push_back(mag.str());
    if (xpow == 1)
        pieces.push_back("x");
    else if (xpow > 1)
        pieces.push_back("x^" + std::to_string(xpow));
    if (lpow == 1)
        pieces.push_back(letter);
    else if (lpow > 1)
        pieces.push_back(std::string(letter) + "^" + std::to_string(lpow));
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        if (i > 0)
            out.body += "*";
        out.body += pieces[i];
    }
    return out;
}

void poly_chunks(const Poly& p, int lpow, const char* letter, std::vector<Chunk>& out) {
    for (int d = p.degree(); d >= 0; --d)
        if (!p.coeff(d).is_zero())
            out.push_back(term_chunk(p.coeff(d), d, letter, lpow));
}

std::string render(const std::vector<Chunk>& chunks) {
    if (chunks.empty())
        return "0";
    std::string out;
    for (std::size_t i = 0; i < chunks.size(); ++i) {
        if (i == 0)
            out += chunks[i].negative ? "-" + chunks[i].body : chunks[i].body;
        else
            out += (chunks[i].negative ? " - " : " + ") + chunks[i].body;
    }
    return out;
}

int nonzero_terms(const Poly& p) {
    int n = 0;
    for (int d = 0; d <= p.degree(); ++d)
        if (!p.coeff(d).is_zero())
            ++n;
    return n;
}

std::string print_operator_like(const std::vector<Poly>& coeffs, const char* letter) {
    std::vector<Chunk> chunks;
    for (int j = static_cast<int>(coeffs.size()) - 1; j >= 0; --j) {
        const Poly& p = coeffs[static_cast<std::size_t>(j)];
        if (p.is_zero())
            continue;
        const int terms = nonzero_terms(p);
        if (terms == 1 || j == 0) {
            poly_chunks(p, j, letter, chunks);
        } else {
            Chunk c;
            c.body = "(" + print(p) + ")*" + letter;
            if (j > 1)
                c.body += "^" + std::to_string(j);
            chunks.push_back(std::move(c));
        }
    }
    return render(chunks);
}

} // namespace

std::string print(const Scalar& s) { return s.str(); }

std::string print(const Poly& p) {
    std::vector<Chunk> chunks;
    poly_chunks(p, 0, "", chunks);
    return render(chunks);
}

std::string print(const DiffOp& A) { return print_operator_like(A.coeffs(), "D"); }

std::string print(const NormalSymbol& S) { return print_operator_like(S.bars, "xi"); }

} // namespace diffmod
