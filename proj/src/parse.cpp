#include "nc/parse.hpp"

#include <cctype>
#include <string>
#include <vector>

namespace nc {

namespace {

enum class Tok { number, var_q, var_p, var_h, var_t, imag_i, plus, minus, star, caret, lparen, rparen, end };

struct Token {
    Tok kind;
    mpq_class value; // for numbers
    int line = 1;
    int col = 1;
    std::string text;
};

[[noreturn]] void fail(const Token& at, const std::string& what) {
    throw Error(Errc::parse_error,
                "syntax error at line " + std::to_string(at.line) + ", column " +
                    std::to_string(at.col) + ": " + what,
                at.text);
}

class Lexer {
  public:
    explicit Lexer(std::string_view text) : text_(text) { tokenize(); }
    const std::vector<Token>& tokens() const { return toks_; }

  private:
    void tokenize() {
        int line = 1, col = 1;
        std::size_t i = 0;
        auto push = [&](Tok k, std::string txt, mpq_class v = 0) {
            toks_.push_back({k, std::move(v), line, col, std::move(txt)});
        };
        while (i < text_.size()) {
            char c = text_[i];
            if (c == '\n') {
                ++line;
                col = 1;
                ++i;
                continue;
            }
            if (std::isspace(static_cast<unsigned char>(c))) {
                ++col;
                ++i;
                continue;
            }
            if (std::isdigit(static_cast<unsigned char>(c))) {
                std::size_t j = i;
                while (j < text_.size() && std::isdigit(static_cast<unsigned char>(text_[j])))
                    ++j;
                std::string num(text_.substr(i, j - i));
                // rational := int ('/' nat)?
                if (j < text_.size() && text_[j] == '/') {
                    std::size_t k = j + 1;
                    std::size_t d = k;
                    while (d < text_.size() && std::isdigit(static_cast<unsigned char>(text_[d])))
                        ++d;
                    if (d == k) {
                        Token bad{Tok::end, 0, line, col + static_cast<int>(j - i) + 1, "/"};
                        fail(bad, "expected digits after '/'");
                    }
                    mpq_class v(num + "/" + std::string(text_.substr(k, d - k)));
                    v.canonicalize();
                    push(Tok::number, std::string(text_.substr(i, d - i)), v);
                    col += static_cast<int>(d - i);
                    i = d;
                } else {
                    push(Tok::number, num, mpq_class(num));
                    col += static_cast<int>(j - i);
                    i = j;
                }
                continue;
            }
            Tok k;
            switch (c) {
            case 'q': k = Tok::var_q; break;
            case 'p': k = Tok::var_p; break;
            case 'h': k = Tok::var_h; break;
            case 't': k = Tok::var_t; break;
            case 'i': k = Tok::imag_i; break;
            case '+': k = Tok::plus; break;
            case '-': k = Tok::minus; break;
            case '*': k = Tok::star; break;
            case '^': k = Tok::caret; break;
            case '(': k = Tok::lparen; break;
            case ')': k = Tok::rparen; break;
            default: {
                Token bad{Tok::end, 0, line, col, std::string(1, c)};
                fail(bad, "unexpected character '" + std::string(1, c) + "'");
            }
            }
            push(k, std::string(1, c));
            ++col;
            ++i;
        }
        toks_.push_back({Tok::end, 0, line, col, "<end>"});
    }

    std::string_view text_;
    std::vector<Token> toks_;
};

class Parser {
  public:
    Parser(std::string_view text, Context ctx) : lex_(text), ctx_(ctx) {}

    AlgebraElement run() {
        AlgebraElement e = expr();
        if (peek().kind != Tok::end)
            fail(peek(), "unexpected trailing input");
        return e;
    }

  private:
    const Token& peek() const { return lex_.tokens()[pos_]; }
    const Token& advance() { return lex_.tokens()[pos_++]; }
    bool accept(Tok k) {
        if (peek().kind == k) {
            ++pos_;
            return true;
        }
        return false;
    }

    AlgebraElement expr() {
        bool neg = false;
        if (accept(Tok::minus))
            neg = true;
        else
            accept(Tok::plus);
        AlgebraElement acc = term();
        if (neg)
            acc = -acc;
        while (true) {
            if (accept(Tok::plus))
                acc += term();
            else if (accept(Tok::minus))
                acc -= term();
            else
                return acc;
        }
    }

    AlgebraElement term() {
        AlgebraElement acc = factor();
        while (accept(Tok::star))
            acc = mul(acc, factor());
        return acc;
    }

    AlgebraElement factor() {
        const Token& at = peek();
        AlgebraElement base = atom();
        if (accept(Tok::caret)) {
            const Token& e = peek();
            if (e.kind != Tok::number || e.value.get_den() != 1 || e.value < 0)
                fail(e, "expected a natural number exponent");
            unsigned long n = e.value.get_num().get_ui();
            advance();
            if (at.kind == Tok::var_t && n > ctx_.order)
                throw Error(Errc::truncation_exceeded,
                            "t^" + std::to_string(n) + " exceeds truncation order " +
                                std::to_string(ctx_.order) + " at line " +
                                std::to_string(e.line) + ", column " + std::to_string(e.col));
            AlgebraElement acc = AlgebraElement::one(ctx_);
            for (unsigned long k = 0; k < n; ++k)
                acc = mul(acc, base);
            return acc;
        }
        return base;
    }

    AlgebraElement atom() {
        const Token& tk = peek();
        switch (tk.kind) {
        case Tok::var_q:
            advance();
            return AlgebraElement::generator(ctx_, Var::q);
        case Tok::var_p:
            advance();
            return AlgebraElement::generator(ctx_, Var::p);
        case Tok::var_h:
            advance();
            return AlgebraElement::hbar(ctx_);
        case Tok::var_t:
            advance();
            return AlgebraElement::t_param(ctx_);
        case Tok::imag_i:
            advance();
            return AlgebraElement::scalar(ctx_, GaussianRational::i());
        case Tok::number: {
            mpq_class v = tk.value;
            advance();
            return AlgebraElement::scalar(ctx_, GaussianRational(v));
        }
        case Tok::lparen: {
            advance();
            AlgebraElement e = expr();
            if (!accept(Tok::rparen))
                fail(peek(), "expected ')'");
            return e;
        }
        default:
            fail(tk, "expected an atom");
        }
    }

    Lexer lex_;
    Context ctx_;
    std::size_t pos_ = 0;
};

} // namespace

AlgebraElement parse_expression(std::string_view text, Context ctx) {
    return Parser(text, ctx).run();
}

GaussianRational parse_scalar(std::string_view text) {
    AlgebraElement e = parse_expression(text, {Backend::moyal, 0});
    GaussianRational out;
    for (const auto& [m, s] : e.terms()) {
        if (m != MonoExp{0, 0})
            throw Error(Errc::parse_error, "expected a constant, got a q/p term");
        for (const auto& [pe, c] : s.terms()) {
            if (pe != ParamExp{0, 0})
                throw Error(Errc::parse_error, "expected a constant, got an h/t term");
            out = c;
        }
    }
    return out;
}

mpq_class parse_rational(std::string_view text) {
    std::string s(text);
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        std::size_t frac = s.size() - dot - 1;
        bool neg = !digits.empty() && digits[0] == '-';
        if (neg)
            digits = digits.substr(1);
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
            throw Error(Errc::parse_error, "bad decimal literal '" + s + "'");
        mpz_class num(digits);
        mpz_class den(1);
        for (std::size_t k = 0; k < frac; ++k)
            den *= 10;
        mpq_class r(neg ? mpz_class(-num) : num, den);
        r.canonicalize();
        return r;
    }
    try {
        mpq_class r(s);
        r.canonicalize();
        return r;
    } catch (const std::exception&) {
        throw Error(Errc::parse_error, "bad rational literal '" + s + "'");
    }
}

} // namespace nc
