#include "fock/steplog.hpp"

#include <cctype>
#include <sstream>

namespace fock {

namespace {

void emit_nested(std::ostringstream& os, const std::vector<std::vector<Int>>& rows) {
    os << '[';
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i)
            os << ',';
        os << '[';
        for (std::size_t j = 0; j < rows[i].size(); ++j) {
            if (j)
                os << ',';
            os << rows[i][j];
        }
        os << ']';
    }
    os << ']';
}

struct LineCursor {
    const std::string& text;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& what) const {
        std::ostringstream os;
        os << "step log parse error at column " << pos << ": " << what;
        throw ParseError(os.str());
    }
    char peek() const { return pos < text.size() ? text[pos] : '\0'; }
    void expect(char c) {
        if (peek() != c)
            fail(std::string("expected '") + c + "'");
        ++pos;
    }
    void expect_literal(const std::string& lit) {
        if (text.compare(pos, lit.size(), lit) != 0)
            fail("expected '" + lit + "'");
        pos += lit.size();
    }
    Int integer() {
        bool neg = false;
        if (peek() == '-') {
            neg = true;
            ++pos;
        }
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            fail("expected integer");
        Int v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + (text[pos] - '0');
            ++pos;
        }
        return neg ? -v : v;
    }
    std::vector<std::vector<Int>> nested() {
        std::vector<std::vector<Int>> rows;
        expect('[');
        if (peek() == ']') {
            ++pos;
            return rows;
        }
        while (true) {
            std::vector<Int> row;
            expect('[');
            if (peek() != ']') {
                row.push_back(integer());
                while (peek() == ',') {
                    ++pos;
                    row.push_back(integer());
                }
            }
            expect(']');
            rows.push_back(std::move(row));
            if (peek() == ',') {
                ++pos;
                continue;
            }
            break;
        }
        expect(']');
        return rows;
    }
    void finish() {
        if (pos != text.size())
            fail("trailing characters");
    }
};

} // namespace

std::string to_string(const StepLog& log) {
    std::ostringstream os;
    for (const Step& step : log.steps) {
        if (const auto* rs = std::get_if<RsStep>(&step)) {
            os << "RS p=" << rs->p << " Q=";
            emit_nested(os, rs->q.rows);
            os << '\n';
        } else if (const auto* xi = std::get_if<XiStep>(&step)) {
            os << "XI k=" << xi->k << '\n';
        } else {
            os << "PSI alpha=" << std::get<PsiStep>(step).alpha << '\n';
        }
    }
    return os.str();
}

StepLog parse_steplog(const std::string& text) {
    StepLog log;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty())
            continue;
        LineCursor cur{line};
        if (line.rfind("RS ", 0) == 0) {
            cur.pos = 3;
            cur.expect_literal("p=");
            Int p = cur.integer();
            cur.expect_literal(" Q=");
            RecordingSymbol q{cur.nested()};
            cur.finish();
            log.steps.push_back(RsStep{p, std::move(q)});
        } else if (line.rfind("XI ", 0) == 0) {
            cur.pos = 3;
            cur.expect_literal("k=");
            Int k = cur.integer();
            cur.finish();
            log.steps.push_back(XiStep{k});
        } else if (line.rfind("PSI ", 0) == 0) {
            cur.pos = 4;
            cur.expect_literal("alpha=");
            Int alpha = cur.integer();
            cur.finish();
            log.steps.push_back(PsiStep{alpha});
        } else {
            cur.fail("unknown step kind");
        }
    }
    return log;
}

} // namespace fock
