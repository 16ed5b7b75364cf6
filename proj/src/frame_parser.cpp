#include "gstruct/verify.hpp"

#include "gstruct/format.hpp"

#include <cctype>
#include <sstream>

namespace gstruct {

namespace {

class LineScanner {
public:
    LineScanner(std::string_view text, int line) : s_(text), line_(line) {}

    void skip_space()
    {
        while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t' || s_[pos_] == '\r')) ++pos_;
    }
    bool at_end()
    {
        skip_space();
        return pos_ >= s_.size();
    }
    int column() const { return static_cast<int>(pos_) + 1; }
    char peek()
    {
        skip_space();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    [[noreturn]] void fail(const std::string& msg, int col = 0) const
    {
        throw ParseError(line_, col ? col : column(), msg);
    }
    void expect(char ch)
    {
        if (peek() != ch) fail(std::string("expected '") + ch + "'");
        ++pos_;
    }
    void expect_word(std::string_view w)
    {
        skip_space();
        if (s_.substr(pos_, w.size()) != w) fail("expected '" + std::string(w) + "'");
        pos_ += w.size();
    }
    // Digits only; returns the text.
    std::string digits()
    {
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected a number");
        return std::string(s_.substr(start, pos_ - start));
    }
    int integer(int max)
    {
        const int col = (skip_space(), column());
        const std::string d = digits();
        if (d.size() > 3 || std::stoi(d) > max) fail("number out of range", col);
        return std::stoi(d);
    }
    // e<k> with 1 <= k <= n; returns the 0-based position.
    int basis(int n)
    {
        const int col = (skip_space(), column());
        if (peek() != 'e') fail("expected a basis element e<k>");
        ++pos_;
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected an index after 'e'");
        const int k = integer(1000);
        if (k < 1 || k > n) fail("index e" + std::to_string(k) + " outside 1.." + std::to_string(n), col);
        return k - 1;
    }
    Rational rational()
    {
        const int col = (skip_space(), column());
        std::string t = digits();
        if (peek() == '/') {
            ++pos_;
            t += "/" + digits();
        }
        try {
            return parse_rational(t);
        } catch (const std::invalid_argument& e) {
            fail(e.what(), col);
        }
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;
    int line_;
};

std::string_view strip_comment(std::string_view line)
{
    if (auto h = line.find('#'); h != std::string_view::npos) line = line.substr(0, h);
    return line;
}

bool blank(std::string_view line)
{
    for (char c : line)
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    return true;
}

Form parse_rhs(LineScanner& sc, int n)
{
    Form out(n, 2);
    if (sc.peek() == '0') {
        const int col = sc.column();
        if (sc.rational() != 0) sc.fail("expected a term of the form [q*]e<i>^e<j>", col);
        if (!sc.at_end()) sc.fail("unexpected text after 0");
        return out;
    }
    bool first = true;
    while (true) {
        int sign = 1;
        const char c = sc.peek();
        if (c == '+' || c == '-') {
            sign = c == '-' ? -1 : 1;
            sc.expect(c);
        } else if (!first) {
            sc.fail("expected '+' or '-'");
        }
        first = false;
        Rational coef(sign);
        if (std::isdigit(static_cast<unsigned char>(sc.peek()))) {
            const int col = sc.column();
            const Rational q = sc.rational();
            if (q == 0) sc.fail("zero coefficient", col);
            coef *= q;
            sc.expect('*');
        }
        const int col = (sc.skip_space(), sc.column());
        const int i = sc.basis(n);
        sc.expect('^');
        const int j = sc.basis(n);
        if (i >= j) sc.fail("term e" + std::to_string(i + 1) + "^e" + std::to_string(j + 1) + " needs i < j", col);
        out += Form::monomial(n, {i, j}, coef);
        if (sc.at_end()) break;
    }
    return out;
}

} // namespace

Frame parse_frame(std::string_view text)
{
    std::vector<std::string> lines;
    {
        std::string buf(text);
        std::istringstream is(buf);
        for (std::string l; std::getline(is, l);) lines.push_back(l);
    }
    int n = 0;
    std::vector<Form> diffs;
    std::vector<int> defined_on;
    for (std::size_t idx = 0; idx < lines.size(); ++idx) {
        const int lineno = static_cast<int>(idx) + 1;
        const std::string_view body = strip_comment(lines[idx]);
        if (blank(body)) continue;
        LineScanner sc(body, lineno);
        if (n == 0) {
            sc.expect_word("dim");
            const int col = (sc.skip_space(), sc.column());
            n = sc.integer(kMaxDim);
            if (n < 1) sc.fail("dimension must be between 1 and " + std::to_string(kMaxDim), col);
            if (!sc.at_end()) sc.fail("unexpected text after the dimension");
            diffs.assign(n, Form(n, 2));
            defined_on.assign(n, 0);
            continue;
        }
        if (sc.peek() != 'd') sc.fail("expected 'd e<k> = ...'");
        sc.expect('d');
        const int col = (sc.skip_space(), sc.column());
        const int k = sc.basis(n);
        if (defined_on[k])
            sc.fail("d e" + std::to_string(k + 1) + " already given on line " + std::to_string(defined_on[k]), col);
        defined_on[k] = lineno;
        sc.expect('=');
        diffs[k] = parse_rhs(sc, n);
    }
    if (n == 0) throw ParseError(static_cast<int>(lines.size()) + 1, 1, "missing 'dim <n>' line");
    return Frame(std::move(diffs));
}

std::string frame_to_text(const Frame& frame)
{
    const int n = frame.dim();
    std::string out = "dim " + std::to_string(n) + "\n";
    for (int k = 0; k < n; ++k) {
        const Form& d = frame.differential(k);
        if (d.is_zero()) continue;
        out += "d e" + std::to_string(k + 1) + " =";
        bool first = true;
        for (const auto& [m, c] : d.terms()) {
            const auto p = positions(m);
            Rational a = c;
            out += first ? (a < 0 ? " -" : " ") : (a < 0 ? " - " : " + ");
            first = false;
            if (a < 0) a = -a;
            if (a != 1) out += to_string(a) + "*";
            out += "e" + std::to_string(p[0] + 1) + "^e" + std::to_string(p[1] + 1);
        }
        out += "\n";
    }
    return out;
}

} // namespace gstruct
