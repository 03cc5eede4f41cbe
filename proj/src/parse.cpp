#include "rr/parse.hpp"

#include <cctype>

#include "rr/errors.hpp"

namespace rr {

namespace {

class Cursor {
public:
    explicit Cursor(const std::string& text) : text_(text) {}

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }
    bool done() {
        skip_ws();
        return pos_ >= text_.size();
    }
    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    bool eat(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }
    void expect(char c, const char* what) {
        if (!eat(c)) fail(std::string("expected ") + what);
    }
    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos_); }

    Int integer() {
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail("expected a nonnegative integer");
        Int v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + (text_[pos_] - '0');
            if (v > 1'000'000'000'000'000LL) fail("exponent too large");
            ++pos_;
        }
        return v;
    }

    std::size_t pos() const { return pos_; }

private:
    const std::string& text_;
    std::size_t pos_ = 0;
};

Monomial parse_tuple(Cursor& c) {
    c.expect('(', "'('");
    Int a = c.integer();
    c.expect(',', "','");
    Int b = c.integer();
    c.expect(')', "')'");
    return Monomial{a, b};
}

Monomial parse_monomial(Cursor& c) {
    Monomial m{0, 0};
    bool first = true;
    do {
        char v = c.peek();
        if (v == '1') {
            c.eat('1');
        } else if (v == 'x' || v == 'y') {
            c.eat(v);
            Int e = 1;
            if (c.eat('^')) e = c.integer();
            (v == 'x' ? m.a : m.b) += e;
        } else {
            c.fail(first ? "expected a term ('x', 'y', or '1')"
                         : "expected a term after '*'");
        }
        first = false;
    } while (c.eat('*'));
    return m;
}

}  // namespace

MonomialIdeal parse_ideal(const std::string& text) {
    Cursor c(text);
    if (c.done()) throw ParseError("expected a generator", c.pos());
    bool tuple_form = c.peek() == '(';
    std::vector<Monomial> gens;
    do {
        gens.push_back(tuple_form ? parse_tuple(c) : parse_monomial(c));
    } while (c.eat(','));
    if (!c.done()) c.fail("expected ',' or end of input");
    return MonomialIdeal::from_generators(std::move(gens));
}

}  // namespace rr
