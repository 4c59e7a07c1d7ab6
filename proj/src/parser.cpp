#include "gja/parser.hpp"

#include "gja/word.hpp"

#include <algorithm>
#include <cctype>

namespace gja {

namespace {

struct Token {
    enum class Kind { Letter, Number, Symbol, End };
    Kind kind;
    std::size_t pos;
    std::size_t len;
    int letter = -1;   // Letter
    Scalar number;     // Number
    char symbol = 0;   // Symbol
};

class Lexer {
public:
    Lexer(const std::string& input, const AlgebraPtr& alg) : input_(input), alg_(alg) { lex(); }

    const std::vector<Token>& tokens() const { return tokens_; }

private:
    void lex() {
        std::size_t i = 0;
        while (i < input_.size()) {
            const unsigned char ch = static_cast<unsigned char>(input_[i]);
            if (std::isspace(ch)) {
                ++i;
                continue;
            }
            // UTF-8 ring operator as an alias for '*'.
            if (ch == 0xE2 && i + 2 < input_.size() &&
                static_cast<unsigned char>(input_[i + 1]) == 0x88 &&
                static_cast<unsigned char>(input_[i + 2]) == 0x98) {
                tokens_.push_back({Token::Kind::Symbol, i, 3, -1, {}, '*'});
                i += 3;
                continue;
            }
            if (std::string("*+-(),[]{}<>").find(static_cast<char>(ch)) != std::string::npos) {
                tokens_.push_back({Token::Kind::Symbol, i, 1, -1, {}, static_cast<char>(ch)});
                ++i;
                continue;
            }
            if (std::isalnum(ch)) {
                lex_run(i);
                continue;
            }
            throw ParseError("unexpected character '" + std::string(1, input_[i]) + "'", i);
        }
        tokens_.push_back({Token::Kind::End, input_.size(), 0, -1, {}, 0});
    }

    void lex_run(std::size_t& i) {
        std::size_t start = i;
        while (i < input_.size() && std::isalnum(static_cast<unsigned char>(input_[i]))) ++i;
        const std::string run = input_.substr(start, i - start);
        const bool all_digits =
            std::all_of(run.begin(), run.end(),
                        [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
        // A digit run followed by '/' is a rational, even when a generator
        // shares the spelling (the quaternion unit "1").
        if (all_digits && i < input_.size() && input_[i] == '/') {
            std::size_t den_start = ++i;
            while (i < input_.size() && std::isdigit(static_cast<unsigned char>(input_[i]))) ++i;
            if (i == den_start) throw ParseError("malformed rational", i);
            tokens_.push_back({Token::Kind::Number, start, i - start, -1,
                               parse_rational(input_.substr(start, i - start)), 0});
            return;
        }
        const int whole = alg_->generator_index(run);
        if (whole >= 0) {
            tokens_.push_back({Token::Kind::Letter, start, run.size(), whole, {}, 0});
            return;
        }
        if (all_digits) {
            tokens_.push_back({Token::Kind::Number, start, run.size(), -1, Scalar(run), 0});
            return;
        }
        // Split a juxtaposed word like "cbcb" into letters.
        for (std::size_t k = 0; k < run.size(); ++k) {
            const int idx = alg_->generator_index(std::string_view(&run[k], 1));
            if (idx < 0)
                throw UnknownLetterError("unknown letter '" + std::string(1, run[k]) + "'",
                                         start + k);
            tokens_.push_back({Token::Kind::Letter, start + k, 1, idx, {}, 0});
        }
    }

    const std::string& input_;
    const AlgebraPtr& alg_;
    std::vector<Token> tokens_;
};

class Parser {
public:
    Parser(const std::string& input, const AlgebraPtr& alg) : lexer_(input, alg) {}

    ExprPtr parse_expr() {
        ExprPtr e = parse_sum();
        expect_end();
        return e;
    }

private:
    const Token& peek() const { return lexer_.tokens()[pos_]; }
    const Token& advance() { return lexer_.tokens()[pos_++]; }
    bool at_symbol(char c) const {
        return peek().kind == Token::Kind::Symbol && peek().symbol == c;
    }

    void expect_end() {
        if (peek().kind != Token::Kind::End)
            throw ParseError("unexpected trailing input", peek().pos);
    }

    ExprPtr parse_sum() {
        auto sum = std::make_unique<Expr>();
        sum->kind = Expr::Kind::Sum;
        sum->begin = peek().pos;
        int sign = 1;
        if (at_symbol('+') || at_symbol('-')) sign = advance().symbol == '-' ? -1 : 1;
        sum->signs.push_back(sign);
        sum->operands.push_back(parse_product());
        while (at_symbol('+') || at_symbol('-')) {
            sum->signs.push_back(advance().symbol == '-' ? -1 : 1);
            sum->operands.push_back(parse_product());
        }
        sum->end = sum->operands.back()->end;
        if (sum->signs.size() == 1 && sum->signs[0] == 1) return std::move(sum->operands[0]);
        return sum;
    }

    ExprPtr parse_product() {
        if (peek().kind == Token::Kind::Number) {
            const Token& num = advance();
            auto scaled = std::make_unique<Expr>();
            scaled->kind = Expr::Kind::Scaled;
            scaled->begin = num.pos;
            scaled->coeff = num.number;
            scaled->operands.push_back(parse_atom());
            scaled->end = scaled->operands.back()->end;
            return scaled;
        }
        ExprPtr left = parse_atom();
        if (!at_symbol('*')) return left;
        advance();
        ExprPtr right = parse_atom();
        if (at_symbol('*'))
            throw UnparenthesizedProductChainError(
                "ambiguous non-associative product: parenthesize x*y*z explicitly", peek().pos);
        auto prod = std::make_unique<Expr>();
        prod->kind = Expr::Kind::Product;
        prod->begin = left->begin;
        prod->end = right->end;
        prod->operands.push_back(std::move(left));
        prod->operands.push_back(std::move(right));
        return prod;
    }

    ExprPtr parse_atom() {
        const Token& t = peek();
        if (t.kind == Token::Kind::Letter) return parse_letters();
        if (t.kind == Token::Kind::Symbol) {
            if (t.symbol == '(') {
                advance();
                ExprPtr inner = parse_sum();
                if (!at_symbol(')')) throw ParseError("expected ')'", peek().pos);
                advance();
                return inner;
            }
            if (t.symbol == '[' || t.symbol == '{' || t.symbol == '<') return parse_bracket();
        }
        throw ParseError("expected a letter, word, bracket or '('", t.pos);
    }

    ExprPtr parse_letters() {
        auto node = std::make_unique<Expr>();
        node->begin = peek().pos;
        std::vector<int> letters;
        while (peek().kind == Token::Kind::Letter) {
            node->end = peek().pos + peek().len;
            letters.push_back(advance().letter);
        }
        if (letters.size() == 1) {
            node->kind = Expr::Kind::Generator;
            node->index = letters[0];
        } else {
            node->kind = Expr::Kind::Word;
            node->letters = std::move(letters);
        }
        return node;
    }

    ExprPtr parse_bracket() {
        const Token& open = advance();
        const char close = open.symbol == '[' ? ']' : open.symbol == '{' ? '}' : '>';
        auto node = std::make_unique<Expr>();
        node->kind = Expr::Kind::Bracket;
        node->begin = open.pos;
        node->bracket_style = open.symbol;
        node->operands.push_back(parse_sum());
        if (!at_symbol(',')) throw ParseError("expected ',' inside bracket", peek().pos);
        advance();
        node->operands.push_back(parse_sum());
        if (!at_symbol(close))
            throw ParseError(std::string("expected '") + close + "'", peek().pos);
        node->end = advance().pos + 1;
        return node;
    }

    Lexer lexer_;
    std::size_t pos_ = 0;
};

Element eval_node(const Expr& expr, const AlgebraPtr& alg, EvalResult& out) {
    switch (expr.kind) {
        case Expr::Kind::Generator:
            return Element::basis(alg, expr.index);
        case Expr::Kind::Word:
            return contract(Word{alg, Scalar(1), expr.letters});
        case Expr::Kind::Scaled:
            return expr.coeff * eval_node(*expr.operands[0], alg, out);
        case Expr::Kind::Product:
            return binary_product(eval_node(*expr.operands[0], alg, out),
                                  eval_node(*expr.operands[1], alg, out));
        case Expr::Kind::Sum: {
            Element total(alg);
            for (std::size_t i = 0; i < expr.operands.size(); ++i) {
                Element term = eval_node(*expr.operands[i], alg, out);
                total += Scalar(expr.signs[i]) * term;
            }
            return total;
        }
        case Expr::Kind::Bracket: {
            const Element x = eval_node(*expr.operands[0], alg, out);
            const Element y = eval_node(*expr.operands[1], alg, out);
            if (expr.bracket_style == '<') return bracket(x, y);
            const BracketKind forced =
                expr.bracket_style == '[' ? BracketKind::Commutator : BracketKind::Anticommutator;
            const Parity px = x.parity(), py = y.parity();
            if (px != Parity::Inhomogeneous && py != Parity::Inhomogeneous &&
                bracket_kind_for(px, py) != forced)
                out.warnings.push_back("BracketKindMismatch: forced '" +
                                       std::string(1, expr.bracket_style) +
                                       "' overrides the parity-dispatched kind");
            return bracket_forced(x, y, forced);
        }
    }
    throw Error("unreachable expression kind");
}

}  // namespace

ExprPtr parse(const std::string& input, const AlgebraPtr& alg) {
    return Parser(input, alg).parse_expr();
}

EvalResult eval(const Expr& expr, const AlgebraPtr& alg) {
    EvalResult result{Element(alg), {}};
    result.value = eval_node(expr, alg, result);
    return result;
}

namespace {

bool atomic(const Expr& e) {
    return e.kind == Expr::Kind::Generator || e.kind == Expr::Kind::Word ||
           e.kind == Expr::Kind::Bracket;
}

std::string print_node(const Expr& e, const AlgebraPtr& alg) {
    const auto wrapped = [&](const Expr& child) {
        const std::string s = print_node(child, alg);
        return atomic(child) ? s : "(" + s + ")";
    };
    switch (e.kind) {
        case Expr::Kind::Generator:
            return alg->generator(e.index).name;
        case Expr::Kind::Word: {
            std::string s;
            for (int i : e.letters) s += alg->generator(i).name;
            return s;
        }
        case Expr::Kind::Scaled:
            return to_string(e.coeff) + " " + wrapped(*e.operands[0]);
        case Expr::Kind::Product:
            return wrapped(*e.operands[0]) + "*" + wrapped(*e.operands[1]);
        case Expr::Kind::Sum: {
            std::string s;
            for (std::size_t i = 0; i < e.operands.size(); ++i) {
                if (i == 0) {
                    if (e.signs[i] < 0) s += "-";
                } else {
                    s += e.signs[i] < 0 ? " - " : " + ";
                }
                s += wrapped(*e.operands[i]);
            }
            return s;
        }
        case Expr::Kind::Bracket: {
            const char close = e.bracket_style == '[' ? ']' : e.bracket_style == '{' ? '}' : '>';
            return std::string(1, e.bracket_style) + print_node(*e.operands[0], alg) + "," +
                   print_node(*e.operands[1], alg) + close;
        }
    }
    throw Error("unreachable expression kind");
}

}  // namespace

std::string print(const Expr& expr, const AlgebraPtr& alg) { return print_node(expr, alg); }

}  // namespace gja
