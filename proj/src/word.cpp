#include "quandle/word.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace quandle {

std::vector<std::string> QuandleWord::generators() const
{
    std::vector<std::string> out{head};
    for (const auto& l : tail)
        if (std::find(out.begin(), out.end(), l.generator) == out.end())
            out.push_back(l.generator);
    return out;
}

std::string to_string(const QuandleWord& w)
{
    std::string out = w.head;
    for (const auto& l : w.tail) {
        out += l.sign > 0 ? " * " : " / ";
        out += l.generator;
    }
    return out;
}

Term Term::generator(std::string name)
{
    Term t;
    t.name_ = std::move(name);
    return t;
}

Term Term::apply(Term left, int sign, Term right)
{
    Term t;
    t.left_ = std::make_shared<const Term>(std::move(left));
    t.right_ = std::make_shared<const Term>(std::move(right));
    t.sign_ = sign > 0 ? 1 : -1;
    return t;
}

std::size_t Term::depth() const
{
    if (is_generator())
        return 0;
    return 1 + std::max(left_->depth(), right_->depth());
}

std::string to_string(const Term& t)
{
    if (t.is_generator())
        return t.name();
    std::string right = to_string(t.right());
    if (!t.right().is_generator())
        right = "(" + right + ")";
    return to_string(t.left()) + (t.sign() > 0 ? " * " : " / ") + right;
}

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) :
        text_(text)
    {
    }

    Term parse()
    {
        Term t = expression();
        skip_space();
        if (pos_ != text_.size())
            throw SyntaxError("unexpected '" + std::string(1, text_[pos_]) + "'", pos_);
        return t;
    }

private:
    void skip_space()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    Term expression()
    {
        Term t = primary();
        for (;;) {
            skip_space();
            if (pos_ >= text_.size() || (text_[pos_] != '*' && text_[pos_] != '/'))
                return t;
            const int sign = text_[pos_] == '*' ? 1 : -1;
            ++pos_;
            t = Term::apply(std::move(t), sign, primary());
        }
    }

    Term primary()
    {
        skip_space();
        if (pos_ >= text_.size())
            throw SyntaxError("expected a generator or '('", pos_);
        if (text_[pos_] == '(') {
            ++pos_;
            Term t = expression();
            skip_space();
            if (pos_ >= text_.size() || text_[pos_] != ')')
                throw SyntaxError("expected ')'", pos_);
            ++pos_;
            return t;
        }
        const char c = text_[pos_];
        if (!(std::isalpha(static_cast<unsigned char>(c)) || c == '_'))
            throw SyntaxError("expected a generator or '('", pos_);
        const std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_' || text_[pos_] == '#'))
            ++pos_;
        return Term::generator(std::string(text_.substr(start, pos_ - start)));
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

void append_operand(QuandleWord& w, int sign, const Term& operand)
{
    if (operand.is_generator()) {
        w.tail.push_back({operand.name(), sign});
        return;
    }
    // w *^e (u *^f v) = ((w *^-f v) *^e u) *^f v
    const int f = operand.sign();
    append_operand(w, -f, operand.right());
    append_operand(w, sign, operand.left());
    append_operand(w, f, operand.right());
}

} // namespace

Term parse_term(std::string_view text)
{
    return Parser(text).parse();
}

QuandleWord parse_word(std::string_view text)
{
    return normalize_left_normed(parse_term(text));
}

QuandleWord normalize_left_normed(const Term& t)
{
    if (t.is_generator())
        return QuandleWord(t.name());
    QuandleWord w = normalize_left_normed(t.left());
    append_operand(w, t.sign(), t.right());
    return w;
}

Term to_term(const QuandleWord& w)
{
    Term t = Term::generator(w.head);
    for (const auto& l : w.tail)
        t = Term::apply(std::move(t), l.sign, Term::generator(l.generator));
    return t;
}

QuandleWord reduce(const QuandleWord& w)
{
    std::vector<Letter> tail;
    tail.reserve(w.tail.size());
    for (const auto& l : w.tail) {
        if (!tail.empty() && tail.back().generator == l.generator && tail.back().sign == -l.sign)
            tail.pop_back();
        else
            tail.push_back(l);
    }
    // dropping head letters cannot create new inverse pairs in a freely
    // reduced tail
    std::size_t skip = 0;
    while (skip < tail.size() && tail[skip].generator == w.head)
        ++skip;
    QuandleWord out(w.head, std::vector<Letter>(tail.begin() + static_cast<std::ptrdiff_t>(skip), tail.end()));
    out.reduced = true;
    return out;
}

bool is_reduced_form(const QuandleWord& w)
{
    if (!w.tail.empty() && w.tail.front().generator == w.head)
        return false;
    for (std::size_t i = 0; i + 1 < w.tail.size(); ++i)
        if (w.tail[i].generator == w.tail[i + 1].generator && w.tail[i].sign != w.tail[i + 1].sign)
            return false;
    return true;
}

GroupWord::GroupWord(std::vector<Letter> letters)
{
    letters_.reserve(letters.size());
    for (auto& l : letters) {
        if (!letters_.empty() && letters_.back().generator == l.generator && letters_.back().sign == -l.sign)
            letters_.pop_back();
        else
            letters_.push_back(std::move(l));
    }
}

GroupWord GroupWord::generator(std::string name, int sign)
{
    return GroupWord({Letter{std::move(name), sign > 0 ? 1 : -1}});
}

GroupWord GroupWord::inverse() const
{
    GroupWord out;
    out.letters_.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
        out.letters_.push_back({it->generator, -it->sign});
    return out;
}

int GroupWord::exponent_sum() const
{
    int sum = 0;
    for (const auto& l : letters_)
        sum += l.sign;
    return sum;
}

GroupWord operator*(const GroupWord& a, const GroupWord& b)
{
    std::vector<Letter> letters = a.letters_;
    letters.insert(letters.end(), b.letters_.begin(), b.letters_.end());
    return GroupWord(std::move(letters));
}

std::string swap_case(std::string_view s)
{
    std::string out(s);
    for (char& c : out) {
        const auto u = static_cast<unsigned char>(c);
        if (std::islower(u))
            c = static_cast<char>(std::toupper(u));
        else if (std::isupper(u))
            c = static_cast<char>(std::tolower(u));
    }
    return out;
}

std::string to_letter_code(const GroupWord& w)
{
    std::string out;
    for (const auto& l : w.letters()) {
        if (!out.empty())
            out += ' ';
        out += l.sign > 0 ? l.generator : swap_case(l.generator);
    }
    return out;
}

GroupWord from_letter_code(std::string_view text, const std::vector<std::string>& generators)
{
    std::istringstream in{std::string(text)};
    std::vector<Letter> letters;
    std::string token;
    while (in >> token) {
        if (std::find(generators.begin(), generators.end(), token) != generators.end()) {
            letters.push_back({token, 1});
            continue;
        }
        std::string swapped = swap_case(token);
        if (std::find(generators.begin(), generators.end(), swapped) == generators.end())
            throw UnknownGenerator(token);
        letters.push_back({std::move(swapped), -1});
    }
    return GroupWord(std::move(letters));
}

GroupWord eta(const QuandleWord& w)
{
    std::vector<Letter> conjugator;
    conjugator.reserve(w.tail.size());
    for (const auto& l : w.tail)
        conjugator.push_back(l);
    GroupWord c(std::move(conjugator));
    return c.inverse() * GroupWord::generator(w.head) * c;
}

namespace {

int lookup(const Assignment& assign, const std::string& name, const FiniteQuandle& q)
{
    auto it = assign.find(name);
    if (it == assign.end())
        throw UnassignedGenerator(name);
    if (it->second < 0 || it->second >= q.order())
        throw UnknownElement(std::to_string(it->second));
    return it->second;
}

} // namespace

int evaluate(const QuandleWord& w, const FiniteQuandle& q, const Assignment& assign)
{
    int x = lookup(assign, w.head, q);
    for (const auto& l : w.tail)
        x = q.act(x, lookup(assign, l.generator, q), l.sign);
    return x;
}

int evaluate(const Term& t, const FiniteQuandle& q, const Assignment& assign)
{
    if (t.is_generator())
        return lookup(assign, t.name(), q);
    return q.act(evaluate(t.left(), q, assign), evaluate(t.right(), q, assign), t.sign());
}

} // namespace quandle
