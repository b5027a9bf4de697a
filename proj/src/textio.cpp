#include "fock/textio.hpp"

#include <cctype>
#include <sstream>

namespace fock {

namespace {

class Cursor {
public:
    explicit Cursor(const std::string& text) : text_(text) {}

    bool done() const { return pos_ >= text_.size(); }
    char peek() const { return done() ? '\0' : text_[pos_]; }
    void advance() { ++pos_; }
    std::size_t pos() const { return pos_; }

    [[noreturn]] void fail(const std::string& what) const {
        std::ostringstream os;
        os << "parse error at position " << pos_ << ": " << what;
        throw ParseError(os.str());
    }

    void expect(char c) {
        if (peek() != c)
            fail(std::string("expected '") + c + "'");
        advance();
    }

    void skip_ws() {
        while (!done() && std::isspace(static_cast<unsigned char>(peek())))
            advance();
    }

    Int integer() {
        std::size_t start = pos_;
        bool neg = false;
        if (peek() == '-') {
            neg = true;
            advance();
        }
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            fail("expected integer");
        Int v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + (peek() - '0');
            advance();
        }
        (void)start;
        return neg ? -v : v;
    }

private:
    const std::string& text_;
    std::size_t pos_ = 0;
};

Partition parse_component(Cursor& cur) {
    if (cur.peek() == '-') {
        // '-' means the empty partition; a lone '-' followed by a digit would
        // be a negative part, which the grammar forbids.
        cur.advance();
        if (std::isdigit(static_cast<unsigned char>(cur.peek())))
            cur.fail("parts must be positive");
        return Partition{};
    }
    std::vector<Int> parts;
    while (true) {
        std::size_t at = cur.pos();
        Int p = cur.integer();
        if (p < 1) {
            std::ostringstream os;
            os << "parse error at position " << at << ": parts must be positive";
            throw ParseError(os.str());
        }
        Int count = 1;
        if (cur.peek() == '^') {
            cur.advance();
            std::size_t kat = cur.pos();
            count = cur.integer();
            if (count < 1) {
                std::ostringstream os;
                os << "parse error at position " << kat
                   << ": multiplicity must be positive";
                throw ParseError(os.str());
            }
        }
        if (!parts.empty() && parts.back() < p) {
            std::ostringstream os;
            os << "parse error at position " << at
               << ": parts must be weakly decreasing";
            throw ParseError(os.str());
        }
        for (Int i = 0; i < count; ++i)
            parts.push_back(p);
        if (cur.peek() != '.')
            break;
        cur.advance();
    }
    return Partition(std::move(parts));
}

} // namespace

ChargedMultipartition parse_charged(const std::string& text) {
    Cursor cur(text);
    std::vector<Partition> comps;
    comps.push_back(parse_component(cur));
    while (cur.peek() == '|') {
        cur.advance();
        comps.push_back(parse_component(cur));
    }
    cur.skip_ws();
    cur.expect('@');
    cur.skip_ws();
    std::vector<Int> s;
    s.push_back(cur.integer());
    while (cur.peek() == ',') {
        cur.advance();
        s.push_back(cur.integer());
    }
    if (!cur.done())
        cur.fail("trailing characters");
    if (s.size() != comps.size())
        cur.fail("charge length differs from number of components");
    return ChargedMultipartition(std::move(comps), Multicharge(std::move(s)));
}

std::string format(const Partition& p) {
    if (p.empty())
        return "-";
    std::ostringstream os;
    const auto& parts = p.parts();
    std::size_t i = 0;
    bool first = true;
    while (i < parts.size()) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i])
            ++j;
        if (!first)
            os << '.';
        os << parts[i];
        if (j - i > 1)
            os << '^' << (j - i);
        first = false;
        i = j;
    }
    return os.str();
}

std::string format(const Multicharge& s) {
    std::ostringstream os;
    for (Int c = 1; c <= s.level(); ++c) {
        if (c > 1)
            os << ',';
        os << s.at(c);
    }
    return os.str();
}

std::string format(const ChargedMultipartition& m) {
    std::ostringstream os;
    for (Int c = 1; c <= m.level(); ++c) {
        if (c > 1)
            os << '|';
        os << format(m.component(c));
    }
    os << " @ " << format(m.charge());
    return os.str();
}

std::string format(const Node& node) {
    std::ostringstream os;
    os << '(' << node.row << ',' << node.col << ',' << node.comp << ')';
    return os.str();
}

} // namespace fock
