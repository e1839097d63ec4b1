#include "homnambu/scalar_parse.hpp"

#include <cctype>

#include "homnambu/errors.hpp"

namespace homnambu {

namespace {

class Parser {
  public:
    Parser(std::string_view text, const ParamSetPtr& params) : text_(text), params_(params) {}

    Scalar run() {
        Scalar value = expr();
        skip_ws();
        if (pos_ != text_.size()) throw ParseError(pos_, "unexpected trailing input");
        return value;
    }

  private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    Scalar expr() {
        Scalar acc = term();
        for (;;) {
            if (eat('+'))
                acc += term();
            else if (eat('-'))
                acc -= term();
            else
                return acc;
        }
    }

    Scalar term() {
        Scalar acc = unary();
        for (;;) {
            if (eat('*')) {
                acc *= unary();
            } else if (eat('/')) {
                std::size_t at = pos_;
                Scalar d = unary();
                if (d.is_zero()) {
                    (void)at;
                    throw DivisionByZeroScalar();
                }
                acc = acc / d;
            } else {
                return acc;
            }
        }
    }

    Scalar unary() {
        if (eat('-')) return -unary();
        return power();
    }

    Scalar power() {
        Scalar base = atom();
        if (eat('^')) {
            skip_ws();
            std::size_t at = pos_;
            if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                throw ParseError(at, "expected nonnegative integer exponent");
            std::uint64_t e = 0;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                e = e * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
                if (e > 0xffffffffull) throw ParseError(at, "exponent out of range");
                ++pos_;
            }
            /* x^e on a general scalar: num^e / den^e. */
            MultiPoly n = base.num().pow(static_cast<std::uint32_t>(e));
            MultiPoly d = base.den().pow(static_cast<std::uint32_t>(e));
            return Scalar(std::move(n), std::move(d));
        }
        return base;
    }

    Scalar atom() {
        skip_ws();
        if (pos_ >= text_.size()) throw ParseError(pos_, "unexpected end of input");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Scalar inner = expr();
            if (!eat(')')) throw ParseError(pos_, "expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Integer value(0);
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                value = value * 10 + (text_[pos_] - '0');
                ++pos_;
            }
            return Scalar(MultiPoly::constant(params_, rat(value, Integer(1))));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            std::string name(text_.substr(start, pos_ - start));
            auto idx = params_->index_of(name);
            if (!idx) throw UndeclaredParameter(name, start);
            return Scalar::parameter(params_, *idx);
        }
        throw ParseError(pos_, std::string("unexpected character '") + c + "'");
    }

    std::string_view text_;
    const ParamSetPtr& params_;
    std::size_t pos_ = 0;
};

}  // namespace

Scalar parse_scalar(std::string_view text, const ParamSetPtr& params) {
    return Parser(text, params).run();
}

}  // namespace homnambu
